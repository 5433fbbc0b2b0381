#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lyk/linalg.hpp"
#include "lyk/report.hpp"

namespace lyk::io {

// One command's result. Text and JSON renderings carry the same content.
struct ReportDoc {
  struct Entry {
    std::string scope;  // e.g. "cocycle c"
    std::string id;
    std::size_t count = 0;
    std::vector<std::vector<int>> witnesses;  // 1-based
  };
  struct Block {
    std::string name;
    std::vector<std::string> lines;
  };

  std::string command;
  std::string verdict;
  std::vector<std::pair<std::string, std::string>> facts;
  std::vector<Entry> violations;
  std::vector<Block> blocks;
  std::vector<std::string> notes;
  std::optional<long long> timing_ms;

  void fact(std::string key, std::string value) { facts.emplace_back(std::move(key), std::move(value)); }
  // Violations of `r` under `scope`, plus its notes.
  void add_report(const std::string& scope, const Report& r);
  void add_matrix(const std::string& name, const Matrix& m);
  // Sorts violations by (scope, id) and witnesses lexicographically.
  void finalize();
};

std::string render_text(const ReportDoc& d);
std::string render_json(const ReportDoc& d);

}  // namespace lyk::io
