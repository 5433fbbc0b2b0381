#pragma once

#include <vector>

#include "lyk/linalg.hpp"
#include "lyk/parallel.hpp"
#include "lyk/report.hpp"
#include "lyk/tensor.hpp"

namespace lyk {

// Structure constants of a candidate Lie-Yamaguti algebra: a bilinear
// bracket [,] (g⊗g -> g) and a trilinear bracket {,,} (g⊗g⊗g -> g).
struct LYAlgebra {
  Field field;
  int dim = 0;
  MultiMap binary;
  MultiMap ternary;

  LYAlgebra() = default;
  LYAlgebra(Field f, int n);  // abelian (both brackets zero)
  LYAlgebra(Field f, int n, MultiMap b, MultiMap t);

  Vec bracket(const Vec& x, const Vec& y) const { return binary(x, y); }
  Vec triple(const Vec& x, const Vec& y, const Vec& z) const { return ternary(x, y, z); }
  Vec basis(int i) const { return unit(field, dim, i); }
  void check_shape() const;

  friend bool operator==(const LYAlgebra&, const LYAlgebra&) = default;
};

// Axiom families "2.1" (antisymmetry of both brackets, checked as printed),
// "2.3", "2.4", "2.5", "2.6". Tuples are basis indices.
Report verify_ly(const LYAlgebra& a, const CheckOptions& opts = {});

bool is_subspace_closed(const LYAlgebra& a, const std::vector<Vec>& basis);
bool is_ideal(const LYAlgebra& a, const std::vector<Vec>& basis);
bool is_abelian_ideal(const LYAlgebra& a, const std::vector<Vec>& basis);

// Ids "hom.binary", "hom.ternary"; automorphisms add "bijective".
Report verify_morphism(const LYAlgebra& source, const LYAlgebra& target, const Matrix& f,
                       const CheckOptions& opts = {});
// Early-exit form of verify_morphism.
bool is_morphism(const LYAlgebra& source, const LYAlgebra& target, const Matrix& f);
Report verify_automorphism(const LYAlgebra& a, const Matrix& f, const CheckOptions& opts = {});

// Structure transported along an invertible matrix P whose columns are the
// new basis: [x,y]' = P^{-1}[Px,Py], and likewise for {,,}.
LYAlgebra change_basis(const LYAlgebra& a, const Matrix& p);
LYAlgebra direct_sum(const LYAlgebra& a, const LYAlgebra& b);
// Lie algebra with {x,y,z} = [[x,y],z].
LYAlgebra from_lie(const Field& f, int n, const MultiMap& lie_bracket);
// (λ[,], μ{,,}).
LYAlgebra scaled(const LYAlgebra& a, const Scalar& lambda, const Scalar& mu);

}  // namespace lyk
