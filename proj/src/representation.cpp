#include "lyk/representation.hpp"

#include "lyk/errors.hpp"

namespace lyk {

Representation::Representation(LYAlgebra g, int v)
    : algebra(std::move(g)),
      dim_v(v),
      mu(algebra.field, {algebra.dim, v}, v),
      theta(algebra.field, {algebra.dim, algebra.dim, v}, v),
      dee(algebra.field, {algebra.dim, algebra.dim, v}, v) {}

void Representation::check_shape() const {
  algebra.check_shape();
  const int n = algebra.dim;
  if (mu.dims_in() != std::vector<int>{n, dim_v} || mu.dim_out() != dim_v)
    throw DimensionMismatch("mu has the wrong shape");
  if (theta.dims_in() != std::vector<int>{n, n, dim_v} || theta.dim_out() != dim_v)
    throw DimensionMismatch("theta has the wrong shape");
  if (dee.dims_in() != std::vector<int>{n, n, dim_v} || dee.dim_out() != dim_v)
    throw DimensionMismatch("D has the wrong shape");
}

namespace {

struct Ctx {
  const Representation& r;
  std::vector<Vec> e;  // algebra basis
  std::vector<Vec> v;  // module basis
  explicit Ctx(const Representation& rep) : r(rep) {
    for (int i = 0; i < rep.algebra.dim; ++i) e.push_back(rep.algebra.basis(i));
    for (int i = 0; i < rep.dim_v; ++i) v.push_back(unit(rep.field(), rep.dim_v, i));
  }
  Vec B(const Vec& x, const Vec& y) const { return r.algebra.bracket(x, y); }
  Vec T(const Vec& x, const Vec& y, const Vec& z) const { return r.algebra.triple(x, y, z); }
  Vec mu(const Vec& x, const Vec& a) const { return r.mu(x, a); }
  Vec th(const Vec& x, const Vec& y, const Vec& a) const { return r.theta(x, y, a); }
  Vec D(const Vec& x, const Vec& y, const Vec& a) const { return r.dee(x, y, a); }
};

}  // namespace

Report verify_representation(const Representation& rep, const CheckOptions& opts) {
  rep.check_shape();
  Ctx c(rep);
  const int n = rep.algebra.dim, m = rep.dim_v;
  const auto& e = c.e;
  const auto& v = c.v;
  std::vector<IdentityFamily> fam;
  fam.push_back({"2.9", {n, n, n, m}, [&](std::span<const int> t) {
                   const Vec &x1 = e[t[0]], &x2 = e[t[1]], &x3 = e[t[2]], &a = v[t[3]];
                   return c.th(c.B(x1, x2), x3, a) ==
                          c.th(x1, x3, c.mu(x2, a)) - c.th(x2, x3, c.mu(x1, a));
                 }});
  fam.push_back({"2.10", {n, n, n, m}, [&](std::span<const int> t) {
                   const Vec &x1 = e[t[0]], &x2 = e[t[1]], &y1 = e[t[2]], &a = v[t[3]];
                   return c.D(x1, x2, c.mu(y1, a)) - c.mu(y1, c.D(x1, x2, a)) ==
                          c.mu(c.T(x1, x2, y1), a);
                 }});
  fam.push_back({"2.11", {n, n, n, m}, [&](std::span<const int> t) {
                   const Vec &x1 = e[t[0]], &y1 = e[t[1]], &y2 = e[t[2]], &a = v[t[3]];
                   return c.th(x1, c.B(y1, y2), a) ==
                          c.mu(y1, c.th(x1, y2, a)) - c.mu(y2, c.th(x1, y1, a));
                 }});
  fam.push_back({"2.12", {n, n, n, n, m}, [&](std::span<const int> t) {
                   const Vec &x1 = e[t[0]], &x2 = e[t[1]], &y1 = e[t[2]], &y2 = e[t[3]],
                             &a = v[t[4]];
                   return c.D(x1, x2, c.th(y1, y2, a)) - c.th(y1, y2, c.D(x1, x2, a)) ==
                          c.th(c.T(x1, x2, y1), y2, a) + c.th(y1, c.T(x1, x2, y2), a);
                 }});
  fam.push_back({"2.13", {n, n, n, n, m}, [&](std::span<const int> t) {
                   const Vec &x1 = e[t[0]], &y1 = e[t[1]], &y2 = e[t[2]], &y3 = e[t[3]],
                             &a = v[t[4]];
                   Vec rhs = c.th(y2, y3, c.th(x1, y1, a)) - c.th(y1, y3, c.th(x1, y2, a)) +
                             c.D(y1, y2, c.th(x1, y3, a));
                   return c.th(x1, c.T(y1, y2, y3), a) == rhs;
                 }});
  fam.push_back({"2.7", {n, n, m}, [&](std::span<const int> t) {
                   const Vec &x1 = e[t[0]], &x2 = e[t[1]], &a = v[t[2]];
                   Vec s = c.D(x1, x2, a) - c.th(x2, x1, a) + c.th(x1, x2, a) +
                           c.mu(c.B(x1, x2), a);
                   s -= c.mu(x1, c.mu(x2, a)) - c.mu(x2, c.mu(x1, a));
                   return is_zero(s);
                 }});
  Report r = run_families(fam, opts);
  bool asym = true;
  for (int i = 0; i < n && asym; ++i)
    for (int j = 0; j < n && asym; ++j)
      for (int k = 0; k < m && asym; ++k)
        if (!is_zero(c.th(e[i], e[j], v[k]) + c.th(e[j], e[i], v[k]))) asym = false;
  if (!asym) r.note("theta is not antisymmetric");
  return r;
}

Report check_derived_identities(const Representation& rep, const CheckOptions& opts) {
  rep.check_shape();
  Ctx c(rep);
  const int n = rep.algebra.dim, m = rep.dim_v;
  const auto& e = c.e;
  const auto& v = c.v;
  std::vector<IdentityFamily> fam;
  fam.push_back({"2.8", {n, n, n, m}, [&](std::span<const int> t) {
                   const Vec &x1 = e[t[0]], &x2 = e[t[1]], &x3 = e[t[2]], &a = v[t[3]];
                   return is_zero(c.D(c.B(x1, x2), x3, a) + c.D(c.B(x2, x3), x1, a) +
                                  c.D(c.B(x3, x1), x2, a));
                 }});
  fam.push_back({"2.70", {n, n, n, n, m}, [&](std::span<const int> t) {
                   const Vec &x1 = e[t[0]], &x2 = e[t[1]], &x3 = e[t[2]], &x4 = e[t[3]],
                             &a = v[t[4]];
                   Vec lhs = c.D(c.T(x1, x2, x3), x4, a) + c.D(x3, c.T(x1, x2, x4), a);
                   Vec rhs = c.D(x1, x2, c.D(x3, x4, a)) - c.D(x3, x4, c.D(x1, x2, a));
                   return lhs == rhs;
                 }});
  fam.push_back({"2.71", {n, n, n, n, m}, [&](std::span<const int> t) {
                   const Vec &y1 = e[t[0]], &y2 = e[t[1]], &y3 = e[t[2]], &x1 = e[t[3]],
                             &a = v[t[4]];
                   Vec rhs = c.th(y1, x1, c.th(y3, y2, a)) - c.th(y2, x1, c.th(y3, y1, a)) -
                             c.th(y3, x1, c.D(y1, y2, a));
                   return c.th(c.T(y1, y2, y3), x1, a) == rhs;
                 }});
  return run_families(fam, opts);
}

Representation adjoint(const LYAlgebra& g) {
  g.check_shape();
  Representation r(g, g.dim);
  const int n = g.dim;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      r.mu.set_value({i, j}, g.binary.value({i, j}));
      for (int k = 0; k < n; ++k) {
        r.theta.set_value({i, j, k}, g.ternary.value({k, i, j}));
        r.dee.set_value({i, j, k}, g.ternary.value({i, j, k}));
      }
    }
  return r;
}

LYAlgebra semidirect_product(const Representation& rep) {
  rep.check_shape();
  const int n = rep.algebra.dim, m = rep.dim_v, N = n + m;
  const Field& f = rep.field();
  LYAlgebra out(f, N);
  auto split = [&](int i, Vec& x, Vec& u) {
    x = zeros(f, n);
    u = zeros(f, m);
    if (i < n)
      x[i] = f.one();
    else
      u[i - n] = f.one();
  };
  for (int i = 0; i < N; ++i)
    for (int j = 0; j < N; ++j) {
      Vec x, u, y, v;
      split(i, x, u);
      split(j, y, v);
      Vec gpart = rep.algebra.bracket(x, y);
      Vec vpart = rep.mu(x, v) - rep.mu(y, u);
      out.binary.set_value({i, j}, concat(gpart, vpart));
      for (int k = 0; k < N; ++k) {
        Vec z, w;
        split(k, z, w);
        Vec tg = rep.algebra.triple(x, y, z);
        Vec tv = rep.theta(y, z, u) - rep.theta(x, z, v) + rep.dee(x, y, w);
        out.ternary.set_value({i, j, k}, concat(tg, tv));
      }
    }
  return out;
}

}  // namespace lyk
