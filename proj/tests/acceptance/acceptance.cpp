// One line per acceptance criterion; exit status 1 if any fails.

#include <chrono>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include "lyk/cohomology.hpp"
#include "lyk/errors.hpp"
#include "lyk/fixtures.hpp"
#include "lyk/io/cli.hpp"
#include "lyk/io/workspace.hpp"
#include "lyk/mc.hpp"
#include "lyk/wells.hpp"
#include "oracle/cohomology_oracle.hpp"
#include "oracle/extension_oracle.hpp"
#include "oracle/wells_oracle.hpp"
#include "support/generators.hpp"

using namespace lyk;
namespace fx = lyk::fixtures;
namespace fs = std::filesystem;

namespace {

const fs::path kRoot = LYK_SOURCE_DIR;

struct Result {
  bool pass = true;
  std::string detail;
};

// Records the first failure; later checks still run.
struct Tally {
  Result r;
  void check(bool ok, const std::string& what) {
    if (!ok && r.pass) {
      r.pass = false;
      r.detail = what;
    }
  }
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

bool enumerable(const ExtensionSpec& e) {
  std::uint64_t c = 1;
  for (int k = 0; k < e.total.dim * e.total.dim; ++k) c *= e.total.field.characteristic();
  return c <= kDefaultBudget;
}

Result c1_axioms() {
  const auto t0 = std::chrono::steady_clock::now();
  Tally t;
  Field q = Field::rationals();
  t.check(verify_ly(fx::sl2(q)).ok(), "sl2 fails verify_ly");
  fx::Rng rng(101);
  int caught = 0;
  for (int k = 0; k < 20; ++k) {
    LYAlgebra a = fx::sl2(q);
    fx::mutate_entry(k % 2 ? a.ternary : a.binary, rng);
    if (!verify_ly(a).ok()) ++caught;
  }
  t.check(caught == 20, std::to_string(20 - caught) + " mutations undetected");
  const double s = seconds_since(t0);
  t.check(s < 1.0, "runtime " + std::to_string(s) + " s");
  if (t.r.pass) t.r.detail = "20/20 mutations detected";
  return t.r;
}

Result c2_semidirect() {
  const auto t0 = std::chrono::steady_clock::now();
  Tally t;
  fx::Rng rng(202);
  int valid = 0;
  for (int k = 0; k < 200; ++k) {
    Field f = k % 2 ? Field::prime(2) : Field::prime(3);
    Representation r = testgen::random_rep_candidate(f, rng);
    const bool a = verify_representation(r).ok();
    t.check(a == verify_ly(semidirect_product(r)).ok(), "disagreement at candidate " + std::to_string(k));
    valid += a;
  }
  const double s = seconds_since(t0);
  t.check(s < 30.0, "runtime " + std::to_string(s) + " s");
  if (t.r.pass) t.r.detail = "200 candidates, " + std::to_string(valid) + " valid";
  return t.r;
}

Result c3_cohomology() {
  Tally t;
  int fixtures = 0, oracle_checked = 0;
  for (Field f : {Field::rationals(), Field::prime(2), Field::prime(3), Field::prime(5)}) {
    std::vector<Representation> reps = {adjoint(fx::abelian(f, 1)),      Representation(fx::abelian(f, 1), 1),
                                        Representation(fx::abelian(f, 2), 1), adjoint(fx::affine_line(f)),
                                        Representation(fx::affine_line(f), 1), adjoint(fx::heisenberg(f)),
                                        adjoint(fx::sl2(f)),              adjoint(fx::sl2_triple_system(f))};
    for (const auto& r : reps) {
      H23Result h;
      try {
        h = z23_b23_h23(r);
      } catch (const InvalidInput&) {
        continue;  // non-alternating structure maps in characteristic 2
      }
      ++fixtures;
      std::vector<Vec> z;
      for (const auto& p : h.z_basis) z.push_back(flatten(p));
      for (const auto& b : h.b_basis) {
        const CochainPair d = delta(r, b);
        t.check(d.f.is_zero() && d.g.is_zero(), "B not in Z (delta)");
        t.check(in_span(f, static_cast<int>(flatten(b).size()), z, flatten(b)), "B not in span Z");
      }
      if (f == Field::prime(2)) {
        const int d = r.algebra.dim;
        if (d * (d - 1) / 2 * (1 + d) * r.dim_v <= 16) {
          ::oracle::Counts c = ::oracle::count_z_b_f2(r);
          t.check(::oracle::log2_exact(c.z) == h.dim_z && ::oracle::log2_exact(c.b) == h.dim_b,
                  "F2 dims differ from enumeration");
          ++oracle_checked;
        }
      }
    }
    t.check(z23_b23_h23(Representation(fx::abelian(f, 1), 1)).dim_h == 0, "trivial dim-1 H23 != 0");
  }
  if (t.r.pass)
    t.r.detail = std::to_string(fixtures) + " fixtures, " + std::to_string(oracle_checked) + " F2 oracle matches";
  return t.r;
}

Result c4_septuples() {
  Tally t;
  fx::Rng rng(404);
  int valid = 0;
  for (int k = 0; k < 200; ++k) {
    Field f = k % 2 ? Field::prime(2) : Field::prime(3);
    NonAbCocycle c = testgen::random_candidate(f, rng);
    const bool a = validate_cocycle(c).ok();
    t.check(a == verify_ly(build_extension(c).total).ok(), "disagreement at septuple " + std::to_string(k));
    valid += a;
  }
  if (t.r.pass) t.r.detail = "200 septuples, " + std::to_string(valid) + " valid";
  return t.r;
}

Result c5_round_trip() {
  Tally t;
  fx::Rng rng(505);
  int cocycles = 0, sections = 0;
  for (Field f : {Field::rationals(), Field::prime(2), Field::prime(3)})
    for (const auto& e : testgen::small_extensions(f)) {
      const NonAbCocycle c = extract_cocycle(testgen::scramble(e, rng));
      t.check(extract_cocycle(build_extension(c)) == c, "extract(build(c)) != c");
      ++cocycles;
    }
  Field f2 = Field::prime(2);
  for (const auto& e0 : testgen::small_extensions(f2)) {
    const ExtensionSpec e = testgen::scramble(e0, rng);
    const NonAbCocycle c2 = extract_cocycle(e);
    const std::uint64_t n = candidate_count(f2, e.g.dim * e.h.dim, kDefaultBudget);
    for (std::uint64_t k = 0; k < n; ++k) {
      const Matrix m = hom_candidate(f2, e.h.dim, e.g.dim, k);
      const NonAbCocycle c1 = extract_cocycle(with_section(e, e.s + e.i * m));
      const EquivalenceSearch s = search_equivalence(c1, c2);
      t.check(s.status == EquivalenceSearch::Status::witness && check_cocycle_equivalence(c1, c2, *s.phi).ok(),
              "no witness for a section change");
      ++sections;
    }
  }
  if (t.r.pass)
    t.r.detail = std::to_string(cocycles) + " round trips, " + std::to_string(sections) + " F2 sections with witnesses";
  return t.r;
}

Result c6_class_count() {
  Tally t;
  std::ostringstream got;
  for (Field f : {Field::prime(2), Field::prime(3)}) {
    std::uint64_t ext = 0, coc = 0;
    for (const auto& g : lyk::oracle::one_dimensional_algebras(f))
      for (const auto& h : lyk::oracle::one_dimensional_algebras(f)) {
        ext += lyk::oracle::count_extension_classes(g, h).classes;
        coc += cocycle_classes(enumerate_cocycles(g, h)).size();
      }
    t.check(ext == coc, "F" + std::to_string(f.characteristic()) + ": " + std::to_string(ext) +
                            " extension classes vs " + std::to_string(coc));
    got << "F" << f.characteristic() << " dim_g=1 dim_h=1 extension_classes=" << ext << " cocycle_classes=" << coc << "\n";
  }
  const std::string golden = slurp(kRoot / "tests/golden/extension_classes.txt");
  t.check(golden == got.str(), "differs from tests/golden/extension_classes.txt, computed: " + got.str());
  if (t.r.pass) {
    std::string line = got.str();
    line.pop_back();
    for (std::size_t k; (k = line.find('\n')) != std::string::npos;) line.replace(k, 1, "; ");
    t.r.detail = line;
  }
  return t.r;
}

Result c7_mc() {
  Tally t;
  fx::Rng rng(707);
  for (int k = 0; k < 100; ++k) {
    Field f = k % 2 ? Field::prime(5) : Field::rationals();
    const GradedElement pi = testgen::random_degree_one(f, rng);
    t.check(is_mc(pi) == verify_ly(algebra_of(pi)).ok(), "is_mc != verify_ly");
  }
  for (int k = 0; k < 100; ++k) {
    Field f = k % 2 ? Field::prime(5) : Field::prime(3);
    const NonAbCocycle c = testgen::random_candidate(f, rng);
    const bool ok = validate_cocycle(c).ok();
    const McExtensionCheck m = check_mc_extension(c);
    t.check(m.mc1 == ok && m.mc2 == ok, "Maurer-Cartan paths disagree with validate_cocycle");
  }
  Field q = Field::rationals();
  const auto pool = testgen::small_extensions(q);
  for (int k = 0; k < 20; ++k) {
    const ExtensionSpec e = testgen::scramble(pool[k % pool.size()], rng);
    const NonAbCocycle c2 = extract_cocycle(e);
    const Matrix phi = fx::random_matrix(q, c2.dh(), c2.dg(), rng);
    const NonAbCocycle c1 = shift_cocycle(c2, phi);
    const GradedElement g = gauge_transform(c2.g, c2.h, cocycle_element(c2), phi);
    t.check((g == cocycle_element(c1)) == check_cocycle_equivalence(c1, c2, phi).ok(), "gauge vs (E1)-(E6)");
    t.check(g == cocycle_element(c1), "gauge image is not the shifted cocycle");
    Matrix psi = phi;
    psi.at(0, 0) += q.one();
    const bool by_gauge = gauge_transform(c2.g, c2.h, cocycle_element(c2), psi) == cocycle_element(c1);
    t.check(by_gauge == check_cocycle_equivalence(c1, c2, psi).ok(), "gauge vs (E1)-(E6) on a second map");
  }
  if (t.r.pass) t.r.detail = "100 degree-1 elements, 100 septuples, 20 Q gauge fixtures";
  return t.r;
}

std::vector<ExtensionSpec> f2_small() {
  std::vector<ExtensionSpec> out;
  for (const auto& e : testgen::small_extensions(Field::prime(2)))
    if (e.g.dim <= 2 && e.h.dim <= 2) out.push_back(e);
  return out;
}

Result c8_extensibility() {
  Tally t;
  std::size_t pairs = 0;
  const auto exts = f2_small();
  for (const auto& e : exts) {
    const auto want = lyk::oracle::extendable_pairs(e);
    const NonAbCocycle c = extract_cocycle(e);
    for (const auto& a : enumerate_automorphisms(e.g))
      for (const auto& b : enumerate_automorphisms(e.h)) {
        const auto s = find_extending_phi(c, {a, b});
        t.check(s.method == "enumeration", "phi search was not exhaustive");
        t.check((s.status == ExtensibilitySearch::Status::extensible) == (want.count(lyk::oracle::pair_key(a, b)) > 0),
                "gamma enumeration and phi search disagree");
        ++pairs;
      }
    t.check(extensibility_agreement(e).ok(), "extensibility_agreement failed");
  }
  if (t.r.pass) t.r.detail = std::to_string(exts.size()) + " extensions, " + std::to_string(pairs) + " pairs";
  return t.r;
}

Result c9_wells() {
  const auto t0 = std::chrono::steady_clock::now();
  Tally t;
  int n = 0;
  for (const auto& e : testgen::small_extensions(Field::prime(2))) {
    if (!enumerable(e)) continue;
    const SequenceCheck sc = wells_sequence_check(e);
    t.check(sc.report.ok(), "sequence not exact");
    t.check(sc.z1 == sc.ker_k, "|Z1_nab| != |Ker K|");
    ++n;
  }
  Field f3 = Field::prime(3);
  const auto m = fx::quotient_extension(fx::heisenberg(f3), {2});
  t.check(wells_sequence_check(m).report.ok(), "F3 mutation base case not exact");
  const SequenceCheck bad = wells_sequence_check(m, kDefaultBudget, Exec::parallel, testgen::sign_flipped_induced);
  t.check(bad.report.failed("KerW=ImK"), "sign flip did not break exactness");
  const double s = seconds_since(t0);
  t.check(s < 300.0, "runtime " + std::to_string(s) + " s");
  if (t.r.pass)
    t.r.detail = std::to_string(n) + " F2 extensions exact; F3 sign flip gives Ker W != Im K (|Ker W| = " +
                 std::to_string(bad.ker_w) + ", |Im K| = " + std::to_string(bad.im_k) + ")";
  return t.r;
}

Result c10_abelian() {
  Tally t;
  int exts = 0, pairs = 0;
  for (Field f : {Field::prime(2), Field::prime(3)})
    for (const auto& e : testgen::small_extensions(f)) {
      if (!enumerable(e)) continue;
      AbelianMode m;
      try {
        m = abelian_mode(e);
      } catch (const NotAbelianExtension&) {
        continue;
      }
      ++exts;
      t.check(m.cocycle.rho.is_zero() && m.cocycle.tee.is_zero(), "rho or T nonzero");
      const std::uint64_t nphi = candidate_count(f, e.g.dim * e.h.dim, kDefaultBudget);
      for (const auto& a : enumerate_automorphisms(e.g))
        for (const auto& b : enumerate_automorphisms(e.h)) {
          const AutoPair pr{a, b};
          for (std::uint64_t k = 0; k < nphi; ++k) {
            const Matrix phi = hom_candidate(f, e.h.dim, e.g.dim, k);
            t.check(check_extensible(m.cocycle, pr, phi).ok() == check_extensible_abelian(m, pr, phi).ok(),
                    "(AEE1)-(AEE3) differ from (Iam1)-(Iam7)");
          }
          const bool general = find_extending_phi(m.cocycle, pr).status == ExtensibilitySearch::Status::extensible;
          t.check(general == solve_extending_phi_abelian(m, pr).has_value(), "linear solve disagrees");
          const AbelianWells aw = abelian_wells(m, pr);
          const bool trivial = wells_map(e, pr).status == WellsObstruction::Status::trivial;
          t.check((aw.compatible && aw.trivial) == trivial, "linear Wells disagrees");
          t.check(aw.compatible || !general, "C_(mu,theta) gating violated");
          ++pairs;
        }
    }
  if (t.r.pass) t.r.detail = std::to_string(exts) + " abelian extensions, " + std::to_string(pairs) + " pairs";
  return t.r;
}

Result c11_cli() {
  Tally t;
  int files = 0, cases = 0;
  for (const auto& p : fs::directory_iterator(kRoot / "fixtures")) {
    if (p.path().extension() != ".lyw") continue;
    const std::string text = slurp(p.path());
    t.check(io::print_workspace(io::parse_workspace(text)) == text, "round trip differs: " + p.path().filename().string());
    ++files;
  }
  std::istringstream in(slurp(kRoot / "tests/golden/cli/cases.txt"));
  std::set<int> codes;
  for (std::string line; std::getline(in, line);) {
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string name;
    int code = 0;
    ls >> name >> code;
    std::vector<std::string> args;
    for (std::string a; ls >> a;) args.push_back(a.ends_with(".lyw") ? (kRoot / "fixtures" / a).string() : a);
    std::ostringstream o1, e1, o2, e2;
    const int r1 = io::run_cli(args, o1, e1);
    const int r2 = io::run_cli(args, o2, e2);
    t.check(r1 == code && r2 == code, name + ": exit " + std::to_string(r1) + ", expected " + std::to_string(code));
    t.check(o1.str() == o2.str(), name + ": output not stable");
    t.check(o1.str() == slurp(kRoot / "tests/golden/cli" / (name + ".out")), name + ": differs from golden");
    codes.insert(r1);
    ++cases;
  }
  std::ostringstream o, e;
  const int usage = io::run_cli({"validate", (kRoot / "fixtures/no_such.lyw").string()}, o, e);
  t.check(usage == io::kUsage, "missing file does not exit 2");
  codes.insert(usage);
  t.check(codes == std::set<int>{0, 1, 2, 3}, "exit-code table not covered");
  if (t.r.pass)
    t.r.detail = std::to_string(files) + " fixtures round-trip, " + std::to_string(cases) + " golden reports, exit codes 0-3";
  return t.r;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Result()>>> criteria = {
      {"axiom checker soundness (sl2 over Q, 20 mutations, < 1 s)", c1_axioms},
      {"representation axioms iff semidirect product is LY, 200 F2/F3 candidates (< 30 s)", c2_semidirect},
      {"cohomology: B in Z, trivial dim-1 H23 = 0, F2 dims = oracle", c3_cohomology},
      {"validate_cocycle iff verify_ly(build), 200 F2/F3 septuples", c4_septuples},
      {"round trip extract(build(c)) = c; section independence on all F2 sections", c5_round_trip},
      {"extension classes = cocycle classes, dim g = dim h = 1 over F2 (golden)", c6_class_count},
      {"MC machinery: is_mc, two Maurer-Cartan paths, gauge vs (E1)-(E6)", c7_mc},
      {"extensibility: gamma enumeration = phi search on F2 fixtures", c8_extensibility},
      {"Wells sequence exactness; sign flip in (Inc1) breaks it (< 5 min)", c9_wells},
      {"abelian reduction agrees with the general machinery", c10_abelian},
      {"CLI contract: round trip, exit codes, golden reports", c11_cli},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const auto t0 = std::chrono::steady_clock::now();
    Result r;
    try {
      r = criteria[k].second();
    } catch (const std::exception& e) {
      r = {false, std::string("exception: ") + e.what()};
    }
    char time[32];
    std::snprintf(time, sizeof time, "%.2f s", seconds_since(t0));
    std::cout << (r.pass ? "PASS" : "FAIL") << "  " << k + 1 << ". " << criteria[k].first << " -- " << r.detail
              << " [" << time << "]" << std::endl;
    failed += !r.pass;
  }
  std::cout << (failed ? "FAILED " : "ALL PASSED ") << criteria.size() - failed << "/" << criteria.size() << std::endl;
  return failed ? 1 : 0;
}
