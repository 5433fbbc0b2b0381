#include "lyk/algebra.hpp"

#include <string>

#include "lyk/errors.hpp"

namespace lyk {

LYAlgebra::LYAlgebra(Field f, int n)
    : field(f), dim(n), binary(f, {n, n}, n), ternary(f, {n, n, n}, n) {}

LYAlgebra::LYAlgebra(Field f, int n, MultiMap b, MultiMap t)
    : field(f), dim(n), binary(std::move(b)), ternary(std::move(t)) {
  check_shape();
}

void LYAlgebra::check_shape() const {
  if (binary.dims_in() != std::vector<int>{dim, dim} || binary.dim_out() != dim)
    throw DimensionMismatch("binary bracket must be " + std::to_string(dim) + "x" +
                            std::to_string(dim) + "->" + std::to_string(dim));
  if (ternary.dims_in() != std::vector<int>{dim, dim, dim} || ternary.dim_out() != dim)
    throw DimensionMismatch("ternary bracket has the wrong shape");
  if (!(binary.field() == field) || !(ternary.field() == field))
    throw FieldMismatch("bracket tensors are over a different field");
}

namespace {

std::vector<Vec> basis_of(const Field& f, int n) {
  std::vector<Vec> e;
  for (int i = 0; i < n; ++i) e.push_back(unit(f, n, i));
  return e;
}

}  // namespace

Report verify_ly(const LYAlgebra& a, const CheckOptions& opts) {
  a.check_shape();
  const int n = a.dim;
  const auto e = basis_of(a.field, n);
  auto B = [&](const Vec& x, const Vec& y) { return a.binary(x, y); };
  auto T = [&](const Vec& x, const Vec& y, const Vec& z) { return a.ternary(x, y, z); };

  std::vector<IdentityFamily> fam;
  fam.push_back({"2.1", {n, n}, [&](std::span<const int> t) {
                   return is_zero(B(e[t[0]], e[t[1]]) + B(e[t[1]], e[t[0]]));
                 }});
  fam.push_back({"2.1", {n, n, n}, [&](std::span<const int> t) {
                   const Vec &x = e[t[0]], &y = e[t[1]], &z = e[t[2]];
                   return is_zero(T(x, y, z) + T(y, x, z));
                 }});
  fam.push_back({"2.3", {n, n, n}, [&](std::span<const int> t) {
                   const Vec &x = e[t[0]], &y = e[t[1]], &z = e[t[2]];
                   Vec s = B(B(x, y), z) + B(B(y, z), x) + B(B(z, x), y);
                   s += T(x, y, z) + T(y, z, x) + T(z, x, y);
                   return is_zero(s);
                 }});
  fam.push_back({"2.4", {n, n, n, n}, [&](std::span<const int> t) {
                   const Vec &x = e[t[0]], &y = e[t[1]], &z = e[t[2]], &w = e[t[3]];
                   return is_zero(T(B(x, y), z, w) + T(B(y, z), x, w) + T(B(z, x), y, w));
                 }});
  fam.push_back({"2.5", {n, n, n, n}, [&](std::span<const int> t) {
                   const Vec &x = e[t[0]], &y = e[t[1]], &z = e[t[2]], &w = e[t[3]];
                   return T(x, y, B(z, w)) == B(T(x, y, z), w) + B(z, T(x, y, w));
                 }});
  fam.push_back({"2.6", {n, n, n, n, n}, [&](std::span<const int> t) {
                   const Vec &x = e[t[0]], &y = e[t[1]], &z = e[t[2]], &w = e[t[3]],
                             &u = e[t[4]];
                   Vec rhs = T(T(x, y, z), w, u) + T(z, T(x, y, w), u) + T(z, w, T(x, y, u));
                   return T(x, y, T(z, w, u)) == rhs;
                 }});
  return run_families(fam, opts);
}

namespace {

void check_basis(const LYAlgebra& a, const std::vector<Vec>& basis) {
  for (const auto& v : basis)
    if (static_cast<int>(v.size()) != a.dim) throw NotASubspace("basis vector has wrong length");
}

}  // namespace

bool is_subspace_closed(const LYAlgebra& a, const std::vector<Vec>& basis) {
  check_basis(a, basis);
  for (const auto& u : basis)
    for (const auto& v : basis) {
      if (!in_span(a.field, a.dim, basis, a.bracket(u, v))) return false;
      for (const auto& w : basis)
        if (!in_span(a.field, a.dim, basis, a.triple(u, v, w))) return false;
    }
  return true;
}

bool is_ideal(const LYAlgebra& a, const std::vector<Vec>& basis) {
  check_basis(a, basis);
  const auto e = basis_of(a.field, a.dim);
  auto inside = [&](const Vec& v) { return in_span(a.field, a.dim, basis, v); };
  for (const auto& l : basis)
    for (const auto& x : e) {
      if (!inside(a.bracket(l, x))) return false;
      for (const auto& y : e)
        if (!inside(a.triple(l, x, y)) || !inside(a.triple(x, l, y)) ||
            !inside(a.triple(x, y, l)))
          return false;
    }
  return true;
}

bool is_abelian_ideal(const LYAlgebra& a, const std::vector<Vec>& basis) {
  if (!is_ideal(a, basis)) return false;
  const auto e = basis_of(a.field, a.dim);
  for (const auto& u : basis)
    for (const auto& v : basis) {
      if (!is_zero(a.bracket(u, v))) return false;
      for (const auto& x : e)
        if (!is_zero(a.triple(u, v, x)) || !is_zero(a.triple(x, u, v)) ||
            !is_zero(a.triple(u, x, v)))
          return false;
    }
  return true;
}

Report verify_morphism(const LYAlgebra& s, const LYAlgebra& t, const Matrix& f,
                       const CheckOptions& opts) {
  s.check_shape();
  t.check_shape();
  if (f.rows() != t.dim || f.cols() != s.dim)
    throw DimensionMismatch("morphism matrix must be " + std::to_string(t.dim) + "x" +
                            std::to_string(s.dim));
  const int n = s.dim;
  const auto e = basis_of(s.field, n);
  std::vector<Vec> fe;
  for (const auto& v : e) fe.push_back(f * v);
  std::vector<IdentityFamily> fam;
  fam.push_back({"hom.binary", {n, n}, [&](std::span<const int> k) {
                   return f * s.bracket(e[k[0]], e[k[1]]) == t.bracket(fe[k[0]], fe[k[1]]);
                 }});
  fam.push_back({"hom.ternary", {n, n, n}, [&](std::span<const int> k) {
                   return f * s.triple(e[k[0]], e[k[1]], e[k[2]]) ==
                          t.triple(fe[k[0]], fe[k[1]], fe[k[2]]);
                 }});
  return run_families(fam, opts);
}

bool is_morphism(const LYAlgebra& s, const LYAlgebra& t, const Matrix& f) {
  if (f.rows() != t.dim || f.cols() != s.dim) throw DimensionMismatch("morphism matrix has the wrong size");
  const int n = s.dim;
  const auto e = basis_of(s.field, n);
  std::vector<Vec> fe;
  for (const auto& v : e) fe.push_back(f * v);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (!(f * s.bracket(e[i], e[j]) == t.bracket(fe[i], fe[j]))) return false;
      for (int k = 0; k < n; ++k)
        if (!(f * s.triple(e[i], e[j], e[k]) == t.triple(fe[i], fe[j], fe[k]))) return false;
    }
  return true;
}

Report verify_automorphism(const LYAlgebra& a, const Matrix& f, const CheckOptions& opts) {
  Report r = verify_morphism(a, a, f, opts);
  if (rank(f) != a.dim) r.add("bijective", {});
  return r;
}

LYAlgebra change_basis(const LYAlgebra& a, const Matrix& p) {
  auto pinv = inverse(p);
  if (!pinv || p.rows() != a.dim) throw InvalidInput("change of basis must be invertible");
  LYAlgebra out(a.field, a.dim);
  const int n = a.dim;
  std::vector<Vec> pe;
  for (int i = 0; i < n; ++i) pe.push_back(p.column(i));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      out.binary.set_value({i, j}, *pinv * a.bracket(pe[i], pe[j]));
      for (int k = 0; k < n; ++k)
        out.ternary.set_value({i, j, k}, *pinv * a.triple(pe[i], pe[j], pe[k]));
    }
  return out;
}

LYAlgebra direct_sum(const LYAlgebra& a, const LYAlgebra& b) {
  if (!(a.field == b.field)) throw FieldMismatch("direct sum of algebras over different fields");
  const int n = a.dim + b.dim;
  LYAlgebra out(a.field, n);
  for (int i = 0; i < a.dim; ++i)
    for (int j = 0; j < a.dim; ++j) {
      for (int o = 0; o < a.dim; ++o) out.binary.at(o, {i, j}) = a.binary.at(o, {i, j});
      for (int k = 0; k < a.dim; ++k)
        for (int o = 0; o < a.dim; ++o)
          out.ternary.at(o, {i, j, k}) = a.ternary.at(o, {i, j, k});
    }
  const int s = a.dim;
  for (int i = 0; i < b.dim; ++i)
    for (int j = 0; j < b.dim; ++j) {
      for (int o = 0; o < b.dim; ++o) out.binary.at(s + o, {s + i, s + j}) = b.binary.at(o, {i, j});
      for (int k = 0; k < b.dim; ++k)
        for (int o = 0; o < b.dim; ++o)
          out.ternary.at(s + o, {s + i, s + j, s + k}) = b.ternary.at(o, {i, j, k});
    }
  return out;
}

LYAlgebra from_lie(const Field& f, int n, const MultiMap& lie) {
  LYAlgebra out(f, n);
  out.binary = lie;
  out.check_shape();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k)
        out.ternary.set_value({i, j, k}, lie(lie.value({i, j}), unit(f, n, k)));
  return out;
}

LYAlgebra scaled(const LYAlgebra& a, const Scalar& lambda, const Scalar& mu) {
  LYAlgebra out = a;
  out.binary = lambda * a.binary;
  out.ternary = mu * a.ternary;
  return out;
}

}  // namespace lyk
