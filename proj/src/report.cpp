#include "lyk/report.hpp"

namespace lyk {

void Report::add(std::string_view id, std::vector<int> tuple) {
  ++total_;
  bool found = false;
  for (auto& [k, n] : counts_)
    if (k == id) {
      ++n;
      found = true;
      break;
    }
  if (!found) counts_.emplace_back(std::string(id), 1);
  if (witnesses_.size() < limit_) witnesses_.push_back({std::string(id), std::move(tuple)});
}

void Report::merge(const Report& other, std::string_view id_prefix) {
  for (const auto& [k0, n] : other.counts_) {
    const std::string k = std::string(id_prefix) + k0;
    bool found = false;
    for (auto& [k2, n2] : counts_)
      if (k2 == k) {
        n2 += n;
        found = true;
        break;
      }
    if (!found) counts_.emplace_back(k, n);
  }
  total_ += other.total_;
  for (const auto& w : other.witnesses_) {
    if (witnesses_.size() >= limit_) break;
    witnesses_.push_back({std::string(id_prefix) + w.id, w.tuple});
  }
  notes_.insert(notes_.end(), other.notes_.begin(), other.notes_.end());
}

std::vector<std::string> Report::failed_ids() const {
  std::vector<std::string> ids;
  for (const auto& [k, n] : counts_) ids.push_back(k);
  return ids;
}

bool Report::failed(std::string_view id) const {
  for (const auto& [k, n] : counts_)
    if (k == id) return true;
  return false;
}

std::string format_tuple(const std::vector<int>& tuple) {
  std::string s = "(";
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(tuple[i] + 1);
  }
  return s + ")";
}

}  // namespace lyk
