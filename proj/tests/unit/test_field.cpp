#include <doctest.h>

#include "lyk/errors.hpp"
#include "lyk/field.hpp"
#include "lyk/linalg.hpp"

using namespace lyk;

TEST_CASE("prime field arithmetic") {
  Field f = Field::prime(7);
  Scalar a = f.from_int(3), b = f.from_int(5);
  CHECK((a + b).residue_value() == 1);
  CHECK((a - b).residue_value() == 5);
  CHECK((a * b).residue_value() == 1);
  CHECK((a / b * b) == a);
  CHECK(f.from_int(-1).residue_value() == 6);
  CHECK(f.parse("1/2").residue_value() == 4);
  CHECK_THROWS_AS(f.parse("1/7"), std::invalid_argument);
  CHECK_THROWS_AS(Field::prime(9), std::invalid_argument);
}

TEST_CASE("rational arithmetic stays exact") {
  Field q = Field::rationals();
  Scalar third = q.parse("1/3");
  CHECK((third + third + third).is_one());
  CHECK(q.parse("-6/4").str() == "-3/2");
  CHECK(q.parse("+2").str() == "2");
  CHECK_THROWS(q.parse("1.5"));
  CHECK_THROWS_AS(q.one() + Field::prime(3).one(), FieldMismatch);
}

TEST_CASE("conversion reduces rationals mod p") {
  Field f = Field::prime(5);
  CHECK(f.convert(Field::rationals().parse("3/2")).residue_value() == 4);
}

TEST_CASE("kernel, image and quotient dimension") {
  Field q = Field::rationals();
  Matrix m = Matrix::from_rows(q, 3, {{q.from_int(1), q.from_int(2), q.from_int(3)},
                                      {q.from_int(2), q.from_int(4), q.from_int(6)}});
  auto ker = kernel_basis(m);
  CHECK(ker.size() == 2);
  for (const auto& v : ker) CHECK(is_zero(m * v));
  CHECK(image_basis(m).size() == 1);
  std::vector<Vec> space{unit(q, 3, 0), unit(q, 3, 1), unit(q, 3, 2)};
  CHECK(quotient_dim(q, 3, space, {unit(q, 3, 1)}) == 2);
  CHECK_THROWS_AS(quotient_dim(q, 3, {unit(q, 3, 0)}, {unit(q, 3, 1)}), NotASubspace);
}

TEST_CASE("fraction-free elimination matches the prime-field path on integer matrices") {
  Field q = Field::rationals();
  Field p = Field::prime(101);
  Matrix mq(q, 4, 5), mp(p, 4, 5);
  int vals[4][5] = {{2, -3, 0, 5, 1}, {4, -6, 1, 9, 0}, {0, 0, 7, -7, 3}, {6, -9, 1, 14, 1}};
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 5; ++j) {
      mq.at(i, j) = q.from_int(vals[i][j]);
      mp.at(i, j) = p.from_int(vals[i][j]);
    }
  Echelon eq = echelon(mq), ep = echelon(mp);
  CHECK(eq.pivots == ep.pivots);
  for (int i = 0; i < eq.rank(); ++i)
    for (int j = 0; j < 5; ++j) CHECK(p.convert(eq.rref.at(i, j)) == ep.rref.at(i, j));
}

TEST_CASE("solve and inverse") {
  Field q = Field::rationals();
  Matrix a = Matrix::from_rows(q, 2, {{q.from_int(2), q.from_int(1)}, {q.from_int(1), q.from_int(1)}});
  auto inv = inverse(a);
  REQUIRE(inv);
  CHECK((a * *inv).is_identity());
  auto x = solve(a, Vec{q.from_int(3), q.from_int(2)});
  REQUIRE(x);
  CHECK((a * *x) == Vec{q.from_int(3), q.from_int(2)});
  Matrix s = Matrix::from_rows(q, 2, {{q.from_int(1), q.from_int(1)}, {q.from_int(1), q.from_int(1)}});
  CHECK_FALSE(solve(s, Vec{q.from_int(1), q.from_int(2)}));
  CHECK_FALSE(inverse(s));
}

TEST_CASE("multilinear evaluation") {
  Field q = Field::rationals();
  MultiMap m(q, {2, 2}, 1);
  m.at(0, {0, 1}) = q.from_int(3);
  m.at(0, {1, 0}) = q.from_int(-3);
  Vec x{q.from_int(1), q.from_int(2)}, y{q.from_int(5), q.from_int(7)};
  CHECK(m(x, y)[0] == q.from_int(3 * (1 * 7 - 2 * 5)));
  CHECK(m.value({0, 1})[0] == q.from_int(3));
  CHECK_THROWS_AS(m(x), DimensionMismatch);
}
