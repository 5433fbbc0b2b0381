#include <doctest.h>

#include "lyk/cohomology.hpp"
#include "lyk/errors.hpp"
#include "lyk/extension.hpp"
#include "lyk/fixtures.hpp"
#include "oracle/extension_oracle.hpp"
#include "support/generators.hpp"

using namespace lyk;
namespace fx = lyk::fixtures;

namespace {

bool has_prefix(const Report& r, const std::string& prefix) {
  for (const auto& id : r.failed_ids())
    if (id.rfind(prefix, 0) == 0) return true;
  return false;
}

}  // namespace

TEST_CASE("zero cocycle on abelian algebras") {
  Field q = Field::rationals();
  NonAbCocycle c(fx::abelian(q, 2), fx::abelian(q, 1));
  CHECK(validate_cocycle(c).ok());
  auto e = build_extension(c);
  CHECK(e.total == fx::abelian(q, 3));
  CHECK(verify_ly(e.total).ok());
}

TEST_CASE("cocycle shape errors") {
  Field q = Field::rationals();
  NonAbCocycle c(fx::abelian(q, 2), fx::abelian(q, 1));
  c.theta = MultiMap(q, {2, 1, 1}, 1);
  CHECK_THROWS_AS(validate_cocycle(c), DimensionMismatch);
  CHECK_THROWS_AS(build_extension(c), DimensionMismatch);
  CHECK_THROWS_AS(NonAbCocycle(fx::abelian(q, 1), fx::abelian(Field::prime(3), 1)), FieldMismatch);
}

TEST_CASE("semidirect case matches the semidirect product") {
  for (Field f : {Field::rationals(), Field::prime(3)}) {
    for (const LYAlgebra& g : {fx::sl2(f), fx::affine_line(f), fx::heisenberg(f)}) {
      Representation ad = adjoint(g);
      NonAbCocycle c = fx::semidirect_cocycle(ad);
      CHECK(validate_cocycle(c).ok());
      CHECK(build_extension(c).total == semidirect_product(ad));
    }
  }
}

TEST_CASE("a non-derivation D breaks L25 and the 2.5 family") {
  for (Field f : {Field::rationals(), Field::prime(3)}) {
    NonAbCocycle c = fx::broken_derivation_cocycle(f);
    Report r = validate_cocycle(c);
    CHECK(r.failed("L25"));
    Report t = verify_ly(build_extension(c).total);
    CHECK(t.failed("2.5"));
  }
}

TEST_CASE("perturbed chi hits the first-order family") {
  Field q = Field::rationals();
  fx::Rng rng(5);
  NonAbCocycle c = extract_cocycle(fx::quotient_extension(fx::heisenberg(q), {2}));
  REQUIRE(validate_cocycle(c).ok());
  c.chi.at(0, {0, 1}) += q.one();
  Report r = validate_cocycle(c);
  CHECK((r.failed("L00") || r.failed("L12") || r.failed("L13") || r.failed("L14")));
}

TEST_CASE("validator names g and h failures") {
  Field q = Field::rationals();
  LYAlgebra bad = fx::sl2(q);
  bad.binary.at(0, {2, 0}) += q.one();
  NonAbCocycle c(bad, fx::abelian(q, 1));
  Report r = validate_cocycle(c);
  CHECK(has_prefix(r, "g:"));
  CHECK_FALSE(has_prefix(r, "h:"));
}

TEST_CASE("abelian extensions extract with rho = T = 0") {
  Field q = Field::rationals();
  for (const auto& e : {fx::quotient_extension(fx::heisenberg(q), {2}),
                        fx::quotient_extension(semidirect_product(adjoint(fx::sl2(q))), {3, 4, 5})}) {
    NonAbCocycle c = extract_cocycle(e);
    CHECK(c.rho.is_zero());
    CHECK(c.tee.is_zero());
    CHECK(validate_cocycle(c).ok());
  }
}

TEST_CASE("round trip extract(build(c)) = c") {
  fx::Rng rng(11);
  for (Field f : {Field::prime(2), Field::prime(3), Field::rationals()}) {
    for (const auto& e : testgen::small_extensions(f)) {
      NonAbCocycle c = extract_cocycle(testgen::scramble(e, rng));
      CHECK(validate_cocycle(c).ok());
      CHECK(extract_cocycle(build_extension(c)) == c);
    }
    // Validity is not needed for the round trip.
    NonAbCocycle r = fx::random_cocycle(fx::affine_line(f), fx::abelian(f, 2), rng);
    CHECK(extract_cocycle(build_extension(r)) == r);
  }
}

TEST_CASE("validate_cocycle agrees with verify_ly of the extension") {
  fx::Rng rng(23);
  int valid = 0, invalid = 0;
  for (int trial = 0; trial < 120; ++trial) {
    Field f = trial % 2 ? Field::prime(2) : Field::prime(3);
    NonAbCocycle c = testgen::random_candidate(f, rng);
    bool a = validate_cocycle(c).ok();
    bool b = verify_ly(build_extension(c).total).ok();
    CHECK(a == b);
    (a ? valid : invalid)++;
  }
  CHECK(valid > 10);
  CHECK(invalid > 10);
}

TEST_CASE("extension checks reject bad data") {
  Field q = Field::rationals();
  auto e = fx::quotient_extension(fx::heisenberg(q), {2});
  auto bad = e;
  bad.s.at(0, 0) = q.from_int(2);
  CHECK_THROWS_AS(extract_cocycle(bad), SectionMismatch);
  bad = e;
  bad.i.at(0, 0) = q.one();
  CHECK_THROWS_AS(verify_extension(bad), InvalidExtension);
  // span(e1) is not an ideal of the Heisenberg algebra.
  bad = e;
  bad.total = change_basis(fx::heisenberg(q), Matrix::identity(q, 3));
  bad.i = Matrix(q, 3, 1);
  bad.i.at(0, 0) = q.one();
  bad.p = Matrix(q, 2, 3);
  bad.p.at(0, 1) = q.one();
  bad.p.at(1, 2) = q.one();
  CHECK_THROWS_AS(verify_extension(bad), InvalidExtension);
  CHECK_THROWS_AS(verify_extension(with_section(e, Matrix(q, 2, 2))), DimensionMismatch);
}

TEST_CASE("section shifts give equivalent cocycles over every F2 section") {
  Field f = Field::prime(2);
  fx::Rng rng(3);
  for (const auto& e0 : testgen::small_extensions(f)) {
    const ExtensionSpec e = testgen::scramble(e0, rng);
    const int G = e.g.dim, H = e.h.dim;
    const NonAbCocycle c2 = extract_cocycle(e);
    const std::uint64_t n = candidate_count(f, G * H, kDefaultBudget);
    for (std::uint64_t k = 0; k < n; ++k) {
      Matrix phi = hom_candidate(f, H, G, k);
      // c1 is induced by s - iφ.
      NonAbCocycle c1 = extract_cocycle(with_section(e, e.s - e.i * phi));
      CHECK(check_cocycle_equivalence(c1, c2, phi).ok());
      CHECK(shift_cocycle(c2, phi) == c1);
      auto found = search_equivalence(c1, c2);
      REQUIRE(found.status == EquivalenceSearch::Status::witness);
      CHECK(check_cocycle_equivalence(c1, c2, *found.phi).ok());
      Matrix m = equivalence_map(c1, phi);
      CHECK(check_extension_equivalence(build_extension(c1), build_extension(c2), m).ok());
    }
  }
}

TEST_CASE("equivalence checks") {
  Field q = Field::rationals();
  NonAbCocycle c = extract_cocycle(fx::quotient_extension(direct_sum(fx::affine_line(q), fx::affine_line(q)), {2, 3}));
  Matrix zero(q, 2, 2);
  CHECK(check_cocycle_equivalence(c, c, zero).ok());
  Matrix phi(q, 2, 2);
  phi.at(0, 1) = q.one();
  NonAbCocycle d = shift_cocycle(c, phi);
  CHECK_FALSE(d == c);
  CHECK(check_cocycle_equivalence(d, c, phi).ok());
  Report r = check_cocycle_equivalence(d, c, zero);
  CHECK_FALSE(r.ok());
  auto e = build_extension(c);
  CHECK(check_extension_equivalence(e, e, Matrix::identity(q, 4)).ok());
  Matrix kill = Matrix::identity(q, 4);
  kill.at(0, 0) = q.zero();
  CHECK(check_extension_equivalence(e, e, kill).failed("p"));
}

TEST_CASE("search_equivalence outcomes") {
  SUBCASE("identical cocycles") {
    Field f = Field::prime(3);
    NonAbCocycle c = extract_cocycle(fx::quotient_extension(direct_sum(fx::affine_line(f), fx::affine_line(f)), {2, 3}));
    auto s = search_equivalence(c, c);
    REQUIRE(s.status == EquivalenceSearch::Status::witness);
    CHECK(s.method == "enumeration");
    CHECK(s.phi->is_zero());
  }
  SUBCASE("abelian case is linear and matches the coboundary") {
    Field q = Field::rationals();
    fx::Rng rng(9);
    Representation ad = adjoint(fx::affine_line(q));
    NonAbCocycle c2 = fx::semidirect_cocycle(ad);
    Matrix phi = fx::random_matrix(q, 2, 2, rng);
    NonAbCocycle c1 = shift_cocycle(c2, phi);
    CochainPair d = delta1(ad, phi.to_multimap());
    CHECK(c1.chi - c2.chi == MultiMap(q, {2, 2}, 2) - d.f);
    CHECK(c1.omega - c2.omega == MultiMap(q, {2, 2, 2}, 2) - d.g);
    auto s = search_equivalence(c1, c2);
    REQUIRE(s.status == EquivalenceSearch::Status::witness);
    CHECK(s.method == "linear");
    CHECK(check_cocycle_equivalence(c1, c2, *s.phi).ok());
    c1.chi.at(0, {0, 1}) += q.one();
    c1.chi.at(0, {1, 0}) -= q.one();
    CHECK(search_equivalence(c1, c2).status == EquivalenceSearch::Status::not_equivalent);
  }
  SUBCASE("distinct F2 classes") {
    Field f = Field::prime(2);
    NonAbCocycle a(fx::abelian(f, 1), fx::abelian(f, 1));
    NonAbCocycle b = a;
    b.mu.at(0, {0, 0}) = f.one();
    auto s = search_equivalence(a, b);
    CHECK(s.status == EquivalenceSearch::Status::not_equivalent);
  }
  SUBCASE("rationals without a linear shortcut") {
    Field q = Field::rationals();
    NonAbCocycle c = extract_cocycle(fx::quotient_extension(direct_sum(fx::abelian(q, 1), fx::affine_line(q)), {1, 2}));
    auto s = search_equivalence(c, c);
    CHECK(s.status == EquivalenceSearch::Status::exhausted);
  }
  SUBCASE("budget") {
    Field f = Field::prime(3);
    NonAbCocycle c(fx::abelian(f, 2), fx::affine_line(f));
    CHECK_THROWS_AS(search_equivalence(c, c, 10), BudgetExceeded);
  }
}

TEST_CASE("serial and parallel agree") {
  fx::Rng rng(41);
  Field f = Field::prime(3);
  for (int k = 0; k < 5; ++k) {
    NonAbCocycle c = testgen::random_candidate(f, rng);
    CHECK(validate_cocycle(c, {Exec::serial}) == validate_cocycle(c, {Exec::parallel}));
  }
  Field f2 = Field::prime(2);
  auto g = fx::abelian(f2, 1);
  CHECK(enumerate_cocycles(g, g, kDefaultBudget, Exec::serial) ==
        enumerate_cocycles(g, g, kDefaultBudget, Exec::parallel));
}

TEST_CASE("extension classes match cocycle classes over F2 in dimension one") {
  Field f = Field::prime(2);
  auto algebras = oracle::one_dimensional_algebras(f);
  REQUIRE(algebras.size() >= 1);
  for (const auto& g : algebras)
    for (const auto& h : algebras) {
      auto ext = oracle::count_extension_classes(g, h);
      auto classes = cocycle_classes(enumerate_cocycles(g, h));
      CHECK(ext.classes == classes.size());
      CHECK(ext.valid == enumerate_cocycles(g, h).size());
    }
}
