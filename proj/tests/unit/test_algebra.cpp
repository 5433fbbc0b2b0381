#include <doctest.h>

#include "lyk/algebra.hpp"
#include "lyk/errors.hpp"
#include "lyk/fixtures.hpp"

using namespace lyk;
namespace fx = lyk::fixtures;

TEST_CASE("standard fixtures are Lie-Yamaguti algebras") {
  for (Field f : {Field::rationals(), Field::prime(2), Field::prime(3), Field::prime(5)}) {
    CHECK(verify_ly(fx::sl2(f)).ok());
    CHECK(verify_ly(fx::affine_line(f)).ok());
    CHECK(verify_ly(fx::heisenberg(f)).ok());
    CHECK(verify_ly(fx::abelian(f, 3)).ok());
    CHECK(verify_ly(fx::sl2_triple_system(f)).ok());
  }
}

TEST_CASE("scaled Lie structures stay Lie-Yamaguti") {
  Field q = Field::rationals();
  for (int lam : {0, 1, 2, -3})
    for (int m : {0, 1, 5}) {
      LYAlgebra a = scaled(fx::sl2(q), q.from_int(lam), q.from_int(m));
      // (λ[,], μ[[,],]) is LY iff 2.3 holds: (λ² + μ) Jacobi sum = 0, always true.
      CHECK(verify_ly(a).ok());
    }
}

TEST_CASE("dimension mismatch is rejected") {
  Field q = Field::rationals();
  LYAlgebra a(q, 2);
  a.binary = MultiMap(q, {2, 3}, 2);
  CHECK_THROWS_AS(verify_ly(a), DimensionMismatch);
}

TEST_CASE("single-entry mutations of sl2 are detected") {
  Field q = Field::rationals();
  fx::Rng rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    LYAlgebra a = fx::sl2(q);
    if (trial % 2 == 0)
      fx::mutate_entry(a.binary, rng);
    else
      fx::mutate_entry(a.ternary, rng);
    Report r = verify_ly(a);
    CHECK_FALSE(r.ok());
    CHECK(r.witnesses().size() <= kDefaultWitnessLimit);
  }
}

TEST_CASE("serial and parallel verification agree") {
  Field f = Field::prime(3);
  fx::Rng rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    LYAlgebra a = fx::sl2(f);
    fx::mutate_entry(a.ternary, rng);
    CheckOptions s{Exec::serial, 1000}, p{Exec::parallel, 1000};
    CHECK(verify_ly(a, s) == verify_ly(a, p));
  }
}

TEST_CASE("antisymmetry is checked as printed") {
  // In characteristic 2, [x,x] = x passes 2.1 since 2[x,x] = 0.
  Field f = Field::prime(2);
  LYAlgebra a(f, 1);
  a.binary.at(0, {0, 0}) = f.one();
  Report r = verify_ly(a);
  CHECK_FALSE(r.failed("2.1"));
}

TEST_CASE("ideals of the Heisenberg algebra") {
  Field q = Field::rationals();
  LYAlgebra h = fx::heisenberg(q);
  CHECK(is_ideal(h, {unit(q, 3, 2)}));
  CHECK(is_abelian_ideal(h, {unit(q, 3, 2)}));
  CHECK_FALSE(is_ideal(h, {unit(q, 3, 0)}));
  LYAlgebra s = fx::sl2(q);
  CHECK_FALSE(is_ideal(s, {unit(q, 3, 2)}));
  CHECK(is_ideal(s, {unit(q, 3, 0), unit(q, 3, 1), unit(q, 3, 2)}));
  CHECK_THROWS_AS(is_ideal(s, {unit(q, 2, 0)}), NotASubspace);
}

TEST_CASE("automorphisms of sl2") {
  Field q = Field::rationals();
  LYAlgebra s = fx::sl2(q);
  CHECK(verify_automorphism(s, Matrix::identity(q, 3)).ok());
  Report neg = verify_automorphism(s, -Matrix::identity(q, 3));
  CHECK(neg.failed("hom.binary"));
  CHECK_FALSE(neg.failed("hom.ternary"));
  // e -> 2e, f -> f/2, h -> h.
  Matrix t(q, 3, 3);
  t.at(0, 0) = q.from_int(2);
  t.at(1, 1) = q.parse("1/2");
  t.at(2, 2) = q.one();
  CHECK(verify_automorphism(s, t).ok());
  CHECK(verify_automorphism(s, t * t).ok());
  CHECK(verify_automorphism(s, Matrix(q, 3, 3)).failed("bijective"));
}

TEST_CASE("change of basis preserves the axioms") {
  for (Field f : {Field::rationals(), Field::prime(3)}) {
    fx::Rng rng(3);
    Matrix p = fx::random_invertible(f, 3, rng);
    LYAlgebra a = change_basis(fx::sl2(f), p);
    CHECK(verify_ly(a).ok());
    // p maps the new coordinates to the old ones.
    CHECK(verify_morphism(a, fx::sl2(f), p).ok());
  }
}

TEST_CASE("direct sums") {
  Field q = Field::rationals();
  LYAlgebra d = direct_sum(fx::sl2(q), fx::affine_line(q));
  CHECK(d.dim == 5);
  CHECK(verify_ly(d).ok());
  CHECK(is_ideal(d, {unit(q, 5, 3), unit(q, 5, 4)}));
}
