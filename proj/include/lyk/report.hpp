#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace lyk {

constexpr std::size_t kDefaultWitnessLimit = 16;

struct Violation {
  std::string id;
  std::vector<int> tuple;  // basis indices, 0-based
  friend bool operator==(const Violation&, const Violation&) = default;
};

// Outcome of an identity check. All violations are counted per id; only the
// first `limit` are kept as witnesses.
class Report {
 public:
  explicit Report(std::size_t limit = kDefaultWitnessLimit) : limit_(limit) {}

  void add(std::string_view id, std::vector<int> tuple);
  void merge(const Report& other, std::string_view id_prefix = {});
  void note(std::string text) { notes_.push_back(std::move(text)); }

  bool ok() const { return total_ == 0; }
  std::size_t total() const { return total_; }
  std::size_t limit() const { return limit_; }
  const std::vector<Violation>& witnesses() const { return witnesses_; }
  // (id, count) in first-seen order.
  const std::vector<std::pair<std::string, std::size_t>>& counts() const { return counts_; }
  std::vector<std::string> failed_ids() const;
  bool failed(std::string_view id) const;
  const std::vector<std::string>& notes() const { return notes_; }

  friend bool operator==(const Report&, const Report&) = default;

 private:
  std::size_t limit_;
  std::size_t total_ = 0;
  std::vector<Violation> witnesses_;
  std::vector<std::pair<std::string, std::size_t>> counts_;
  std::vector<std::string> notes_;
};

std::string format_tuple(const std::vector<int>& tuple);

}  // namespace lyk
