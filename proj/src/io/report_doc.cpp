#include "lyk/io/report_doc.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <sstream>
#include <tuple>

#include <json.hpp>

namespace lyk::io {

void ReportDoc::add_report(const std::string& scope, const Report& r) {
  std::map<std::string, std::vector<std::vector<int>>> wit;
  for (const auto& v : r.witnesses()) {
    std::vector<int> t = v.tuple;
    for (int& x : t) ++x;
    wit[v.id].push_back(std::move(t));
  }
  for (const auto& [id, n] : r.counts()) violations.push_back({scope, id, n, wit[id]});
  for (const auto& n : r.notes()) notes.push_back(scope.empty() ? n : scope + ": " + n);
}

void ReportDoc::add_matrix(const std::string& name, const Matrix& m) {
  Block b{name + " " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()), {}};
  for (int r = 0; r < m.rows(); ++r) {
    std::string line;
    for (int c = 0; c < m.cols(); ++c) line += (c ? " " : "") + m.at(r, c).str();
    b.lines.push_back(line);
  }
  blocks.push_back(std::move(b));
}

namespace {

// Digit runs compare by value, so "L7" sorts before "L13".
bool natural_less(const std::string& a, const std::string& b) {
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    if (std::isdigit(static_cast<unsigned char>(a[i])) && std::isdigit(static_cast<unsigned char>(b[j]))) {
      std::size_t ie = i, je = j;
      while (ie < a.size() && std::isdigit(static_cast<unsigned char>(a[ie]))) ++ie;
      while (je < b.size() && std::isdigit(static_cast<unsigned char>(b[je]))) ++je;
      const std::string x = a.substr(i, ie - i), y = b.substr(j, je - j);
      if (x.size() != y.size()) return x.size() < y.size();
      if (x != y) return x < y;
      i = ie;
      j = je;
    } else {
      if (a[i] != b[j]) return a[i] < b[j];
      ++i;
      ++j;
    }
  }
  return a.size() - i < b.size() - j;
}

}  // namespace

void ReportDoc::finalize() {
  for (auto& v : violations) std::sort(v.witnesses.begin(), v.witnesses.end());
  std::stable_sort(violations.begin(), violations.end(), [](const Entry& a, const Entry& b) {
    if (a.scope != b.scope) return natural_less(a.scope, b.scope);
    return natural_less(a.id, b.id);
  });
}

namespace {

std::string tuple_text(const std::vector<int>& t) {
  std::string s = "(";
  for (std::size_t k = 0; k < t.size(); ++k) s += (k ? "," : "") + std::to_string(t[k]);
  return s + ")";
}

}  // namespace

std::string render_text(const ReportDoc& d) {
  std::ostringstream os;
  os << "command: " << d.command << "\n";
  os << "verdict: " << d.verdict << "\n";
  for (const auto& [k, v] : d.facts) os << k << ": " << v << "\n";
  if (!d.violations.empty()) {
    os << "violations:\n";
    for (const auto& v : d.violations) {
      os << "  " << (v.scope.empty() ? "" : "[" + v.scope + "] ") << v.id << " x" << v.count;
      if (!v.witnesses.empty()) {
        os << ":";
        for (const auto& t : v.witnesses) os << " " << tuple_text(t);
      }
      os << "\n";
    }
  }
  for (const auto& b : d.blocks) {
    os << b.name << ":\n";
    for (const auto& l : b.lines) os << "  " << l << "\n";
  }
  if (!d.notes.empty()) {
    os << "notes:\n";
    for (const auto& n : d.notes) os << "  " << n << "\n";
  }
  if (d.timing_ms) os << "timing_ms: " << *d.timing_ms << "\n";
  return os.str();
}

std::string render_json(const ReportDoc& d) {
  nlohmann::ordered_json j;
  j["command"] = d.command;
  j["verdict"] = d.verdict;
  nlohmann::ordered_json facts = nlohmann::ordered_json::object();
  for (const auto& [k, v] : d.facts) facts[k] = v;
  j["facts"] = facts;
  nlohmann::ordered_json vs = nlohmann::ordered_json::array();
  for (const auto& v : d.violations)
    vs.push_back({{"scope", v.scope}, {"id", v.id}, {"count", v.count}, {"witnesses", v.witnesses}});
  j["violations"] = vs;
  nlohmann::ordered_json bs = nlohmann::ordered_json::array();
  for (const auto& b : d.blocks) bs.push_back({{"name", b.name}, {"lines", b.lines}});
  j["blocks"] = bs;
  j["notes"] = d.notes;
  if (d.timing_ms) j["timing_ms"] = *d.timing_ms;
  return j.dump(2) + "\n";
}

}  // namespace lyk::io
