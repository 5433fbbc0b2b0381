#pragma once

#include <vector>

#include "lyk/extension.hpp"

namespace lyk::detail {

// Named evaluation of the brackets and the seven maps of a cocycle.
struct CocycleOps {
  const NonAbCocycle& c;
  std::vector<Vec> e;  // basis of g
  std::vector<Vec> f;  // basis of h

  explicit CocycleOps(const NonAbCocycle& cc) : c(cc) {
    for (int i = 0; i < c.dg(); ++i) e.push_back(c.g.basis(i));
    for (int i = 0; i < c.dh(); ++i) f.push_back(c.h.basis(i));
  }
  Vec gb(const Vec& x, const Vec& y) const { return c.g.binary(x, y); }
  Vec gt(const Vec& x, const Vec& y, const Vec& z) const { return c.g.ternary(x, y, z); }
  Vec hb(const Vec& a, const Vec& b) const { return c.h.binary(a, b); }
  Vec ht(const Vec& a, const Vec& b, const Vec& d) const { return c.h.ternary(a, b, d); }
  Vec chi(const Vec& x, const Vec& y) const { return c.chi(x, y); }
  Vec om(const Vec& x, const Vec& y, const Vec& z) const { return c.omega(x, y, z); }
  Vec mu(const Vec& x, const Vec& a) const { return c.mu(x, a); }
  Vec th(const Vec& x, const Vec& y, const Vec& a) const { return c.theta(x, y, a); }
  Vec D(const Vec& x, const Vec& y, const Vec& a) const { return c.dee(x, y, a); }
  Vec rho(const Vec& x, const Vec& a, const Vec& b) const { return c.rho(x, a, b); }
  Vec T(const Vec& x, const Vec& a, const Vec& b) const { return c.tee(x, a, b); }
  Vec zh() const { return zeros(c.field(), c.dh()); }
};

}  // namespace lyk::detail
