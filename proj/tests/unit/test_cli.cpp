#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "lyk/errors.hpp"
#include "lyk/io/cli.hpp"
#include "lyk/io/workspace.hpp"
#include "oracle/cohomology_oracle.hpp"
#include "oracle/wells_oracle.hpp"

using namespace lyk;
using namespace lyk::io;
namespace fs = std::filesystem;

namespace {

const fs::path kRoot = LYK_SOURCE_DIR;

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  for (auto& a : args)
    if (a.size() > 4 && a.ends_with(".lyw") && !fs::path(a).is_absolute()) a = (kRoot / "fixtures" / a).string();
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

struct Case {
  std::string name;
  int code;
  std::vector<std::string> args;
};

std::vector<Case> cases() {
  std::vector<Case> out;
  std::istringstream in(slurp(kRoot / "tests/golden/cli/cases.txt"));
  for (std::string line; std::getline(in, line);) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    Case c;
    ls >> c.name >> c.code;
    for (std::string a; ls >> a;) c.args.push_back(a);
    out.push_back(c);
  }
  return out;
}

std::vector<fs::path> fixture_files() {
  std::vector<fs::path> out;
  for (const auto& e : fs::directory_iterator(kRoot / "fixtures"))
    if (e.path().extension() == ".lyw") out.push_back(e.path());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("golden reports and exit codes") {
  const bool update = std::getenv("LYK_UPDATE_GOLDEN") != nullptr;
  const auto all = cases();
  REQUIRE(all.size() > 30);
  for (const auto& c : all) {
    INFO(c.name);
    const Run r = run(c.args);
    CHECK(r.code == c.code);
    CHECK(r.err.empty());
    const fs::path g = kRoot / "tests/golden/cli" / (c.name + ".out");
    if (update) std::ofstream(g, std::ios::binary) << r.out;
    CHECK(slurp(g) == r.out);
    CHECK(run(c.args).out == r.out);
  }
}

TEST_CASE("format round trip is byte-identical on every fixture") {
  const auto files = fixture_files();
  REQUIRE(files.size() >= 8);
  for (const auto& p : files) {
    INFO(p.filename().string());
    const std::string text = slurp(p);
    CHECK(print_workspace(parse_workspace(text)) == text);
  }
}

TEST_CASE("extend then extract returns the cocycle block") {
  for (const auto& [file, name] : std::vector<std::pair<std::string, std::string>>{
           {"trivial_f2.lyw", "zero"}, {"sl2_heis_q.lyw", "zero"}, {"affine_semidirect_f2.lyw", "c"}}) {
    const Workspace w = parse_workspace(slurp(kRoot / "fixtures" / file));
    const Run ext = run({"extend", file, name});
    REQUIRE(ext.code == 0);
    const fs::path tmp = fs::temp_directory_path() / ("lyk_ext_" + name + "_" + file);
    std::ofstream(tmp, std::ios::binary) << ext.out;
    const Run back = run({"extract", tmp.string(), name});
    REQUIRE(back.code == 0);
    const Workspace got = parse_workspace(back.out);
    CHECK(got.cocycles.at(name).cocycle == w.cocycles.at(name).cocycle);
    // The printed block is the same text.
    Workspace only;
    only.field = w.field;
    const auto& d = w.cocycles.at(name);
    only.add_algebra(d.g, w.algebras.at(d.g));
    if (d.h != d.g) only.add_algebra(d.h, w.algebras.at(d.h));
    only.add_cocycle(name, d);
    CHECK(print_workspace(only) == back.out);
    fs::remove(tmp);
  }
}

TEST_CASE("zero cocycle extends to the direct sum") {
  const Workspace w = parse_workspace(slurp(kRoot / "fixtures/sl2_heis_q.lyw"));
  const Workspace e = parse_workspace(run({"extend", "sl2_heis_q.lyw", "zero"}).out);
  CHECK(e.algebras.at("zero_total") == direct_sum(w.algebras.at("sl2"), w.algebras.at("heis")));
}

TEST_CASE("F2 verdicts match exhaustive oracles") {
  const Workspace t = parse_workspace(slurp(kRoot / "fixtures/trivial_f2.lyw"));
  for (const auto& [name, rep] : t.reps) {
    auto json = nlohmann::json::parse(run({"cohomology", "trivial_f2.lyw", name, "--json"}).out);
    const auto counts = ::oracle::count_z_b_f2(rep.rep);
    const std::uint64_t z = std::uint64_t(1) << std::stoi(json["facts"]["Z23"].get<std::string>());
    const std::uint64_t b = std::uint64_t(1) << std::stoi(json["facts"]["B23"].get<std::string>());
    CHECK(z == counts.z);
    CHECK(b == counts.b);
  }
  for (const std::string file : {"heis_f2.lyw", "heis_f3.lyw"}) {
    const Workspace w = parse_workspace(slurp(kRoot / "fixtures" / file));
    const ExtensionSpec e = w.extension("E");
    const auto want = lyk::oracle::extendable_pairs(e);
    for (const auto& [name, _] : w.pairs) {
      const AutoPair p = w.pair(name);
      const bool lifts = want.count(lyk::oracle::pair_key(p.alpha, p.beta)) > 0;
      CHECK(run({"extensible", file, "E", name}).code == (lifts ? 0 : 1));
      CHECK(run({"wells", file, "E", name}).code == (lifts ? 0 : 1));
    }
  }
}

TEST_CASE("json and text carry the same verdict and facts") {
  for (const auto& c : cases()) {
    if (std::find(c.args.begin(), c.args.end(), "--json") != c.args.end()) continue;
    if (c.args[0] == "extend" || c.args[0] == "extract") continue;
    auto args = c.args;
    args.push_back("--json");
    const Run j = run(args);
    const Run t = run(c.args);
    CHECK(j.code == t.code);
    auto doc = nlohmann::json::parse(j.out);
    CHECK(t.out.find("verdict: " + doc["verdict"].get<std::string>() + "\n") != std::string::npos);
    for (const auto& [k, v] : doc["facts"].items())
      CHECK(t.out.find(k + ": " + v.get<std::string>() + "\n") != std::string::npos);
  }
}

TEST_CASE("usage and parse errors exit with 2") {
  CHECK(run({}).code == kUsage);
  CHECK(run({"frobnicate", "abelian2.lyw"}).code == kUsage);
  CHECK(run({"validate", "no_such_file.lyw"}).code == kUsage);
  CHECK(run({"validate", "abelian2.lyw", "missing"}).code == kUsage);
  CHECK(run({"validate", "abelian2.lyw", "--field", "F4"}).code == kUsage);
  CHECK(run({"cohomology", "trivial_f2.lyw"}).code == kUsage);
  CHECK(run({"wells", "heis_f2.lyw", "E"}).code == kUsage);
  CHECK(run({"extensible", "heis_f3.lyw", "E", "unit", "--phi", "id_g"}).code == kUsage);
  CHECK(run({"validate", "--help"}).code == kOk);

  const fs::path tmp = fs::temp_directory_path() / "lyk_bad.lyw";
  std::ofstream(tmp) << "field F2\n\nalgebra a dim 2\n  b[1,3] = e1\nend\n";
  const Run r = run({"validate", tmp.string()});
  CHECK(r.code == kUsage);
  CHECK(r.err.find(":4:") != std::string::npos);
  fs::remove(tmp);
}

TEST_CASE("parse errors carry line and column") {
  auto fails_at = [](const std::string& text, int line, int col) {
    INFO(text);
    try {
      parse_workspace(text);
    } catch (const ParseError& e) {
      CHECK(e.line() == line);
      CHECK(e.column() == col);
      return;
    }
    FAIL("no parse error for: " << text);
  };
  fails_at("algebra a dim 1\nend\n", 1, 1);
  fails_at("field F4\n", 1, 7);
  fails_at("field Q\nalgebra a dim 2\n  b[1,2] = e3\nend\n", 3, 12);
  fails_at("field Q\nalgebra a dim 2\n  b[1,2] = e1\n  b[1,2] = e2\nend\n", 4, 5);
  fails_at("field Q\nalgebra a dim 2\n  b[1,2] = e1 e2\nend\n", 3, 15);
  fails_at("field Q\nalgebra a dim 2\n  x[1,2] = e1\nend\n", 3, 3);
  fails_at("field Q\nalgebra a dim 2\n", 2, 1);
  fails_at("field F3\nmap m 1x2\n  1 1/3\nend\n", 3, 5);
  fails_at("field Q\nmap m 1x2\n  1\nend\n", 3, 4);
  fails_at("field Q\npair p alpha m beta m\n", 2, 14);
  fails_at("field Q\ncocycle c on g h\nend\n", 2, 14);
}

TEST_CASE("parser accepts comments, signs and fractions") {
  const std::string text =
      "# header\nfield Q\nalgebra a dim 2  # two\n  b[1,2] = -1/2*e1 + 3 e2\n  b[2,1] = 1/2e1 - 3*e_2\nend\n";
  const Workspace w = parse_workspace(text);
  const LYAlgebra& a = w.algebras.at("a");
  CHECK(a.binary.at(0, std::vector<int>{0, 1}) == Field::rationals().parse("-1/2"));
  CHECK(a.binary.at(1, std::vector<int>{1, 0}) == Field::rationals().from_int(-3));
  CHECK(print_workspace(w) ==
        "field Q\n\nalgebra a dim 2\n  b[1,2] = -1/2*e1 + 3*e2\n  b[2,1] = 1/2*e1 - 3*e2\nend\n");
  const Workspace f5 = parse_workspace(text, Field::prime(5));
  CHECK(f5.field == Field::prime(5));
  CHECK(f5.algebras.at("a").binary.at(0, std::vector<int>{0, 1}) == Field::prime(5).from_int(2));
}

TEST_CASE("timing only when requested") {
  const Run a = run({"validate", "abelian2.lyw"});
  const Run b = run({"validate", "abelian2.lyw", "--timing"});
  CHECK(a.out.find("timing") == std::string::npos);
  CHECK(b.out.find("timing_ms: ") != std::string::npos);
}
