#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

namespace lyk {

// An element of Q or of a prime field F_p. Elements of different fields never
// mix; doing so throws FieldMismatch.
class Scalar {
 public:
  Scalar() : v_(mpq_class(0)) {}

  static Scalar residue(std::uint64_t value, std::uint32_t modulus);
  static Scalar rational(mpq_class q);

  bool is_rational() const { return v_.index() == 1; }
  std::uint32_t modulus() const;
  std::uint32_t residue_value() const;
  const mpq_class& rational_value() const;

  bool is_zero() const;
  bool is_one() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  Scalar inverse() const;

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
  friend bool operator==(const Scalar& a, const Scalar& b);

  // Total order used for canonical representatives: residues by value in
  // [0, p), rationals by value.
  int compare(const Scalar& o) const;

  std::string str() const;

 private:
  struct Residue {
    std::uint32_t value;
    std::uint32_t modulus;
  };
  void check_same(const Scalar& o) const;

  std::variant<Residue, mpq_class> v_;
};

class Field {
 public:
  Field() = default;

  static Field rationals() { return Field(0); }
  static Field prime(std::uint32_t p);

  bool is_rational() const { return p_ == 0; }
  bool is_prime() const { return p_ != 0; }
  std::uint32_t characteristic() const { return p_; }

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(long long n) const;
  Scalar from_ratio(const mpz_class& num, const mpz_class& den) const;
  // Accepts "n", "-n", "n/d". Throws std::invalid_argument.
  Scalar parse(std::string_view text) const;
  // Converts an element of another field; rationals reduce mod p.
  Scalar convert(const Scalar& s) const;

  bool contains(const Scalar& s) const;
  // k-th element in the canonical order 0, 1, ..., p-1 (prime fields only).
  Scalar element(std::uint64_t k) const;

  std::string name() const;

  friend bool operator==(const Field& a, const Field& b) { return a.p_ == b.p_; }

 private:
  explicit Field(std::uint32_t p) : p_(p) {}
  std::uint32_t p_ = 0;
};

bool is_prime_number(std::uint32_t n);

}  // namespace lyk
