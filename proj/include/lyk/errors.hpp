#pragma once

#include <stdexcept>
#include <string>

namespace lyk {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class FieldMismatch : public Error {
 public:
  using Error::Error;
};

class NotASubspace : public Error {
 public:
  using Error::Error;
};

class InvalidInput : public Error {
 public:
  using Error::Error;
};

// B is not contained in Z, or another invariant that only a bug can break.
class InternalInconsistency : public Error {
 public:
  using Error::Error;
};

class CharacteristicTwo : public Error {
 public:
  using Error::Error;
};

class UnsupportedCharacteristic : public Error {
 public:
  using Error::Error;
};

class UnrepresentedBlock : public Error {
 public:
  using Error::Error;
};

class InvalidExtension : public Error {
 public:
  using Error::Error;
};

class SectionMismatch : public Error {
 public:
  using Error::Error;
};

class NotExtensible : public Error {
 public:
  using Error::Error;
};

class NotHPreserving : public Error {
 public:
  using Error::Error;
};

class NotAbelianExtension : public Error {
 public:
  using Error::Error;
};

class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(int line, int column, const std::string& message)
      : Error(std::to_string(line) + ":" + std::to_string(column) + ": " + message),
        line_(line),
        column_(column),
        message_(message) {}

  int line() const { return line_; }
  int column() const { return column_; }
  const std::string& message() const { return message_; }

 private:
  int line_;
  int column_;
  std::string message_;
};

}  // namespace lyk
