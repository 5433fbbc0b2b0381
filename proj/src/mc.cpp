#include "lyk/mc.hpp"

#include <algorithm>

#include "lyk/cohomology.hpp"
#include "lyk/errors.hpp"

namespace lyk {

namespace {

MultiMap component(const Field& f, int dim, int arity) {
  return MultiMap(f, std::vector<int>(arity, dim), dim);
}

void same_space(const GradedElement& a, const GradedElement& b) {
  if (!(a.field == b.field)) throw FieldMismatch("graded elements over different fields");
  if (a.dim != b.dim) throw DimensionMismatch("graded elements on spaces of different dimension");
}

void no_aux(const GradedElement& a) {
  if (a.has_aux)
    throw UnrepresentedBlock("brackets with the auxiliary (3,4) block are not represented");
}

// Fill a map from its values on basis tuples.
MultiMap tabulate(const Field& f, int dim, int arity, Exec exec,
                  const std::function<Vec(std::span<const int>)>& value) {
  MultiMap m = component(f, dim, arity);
  const std::size_t dom = m.domain_size();
  auto vals = map_indices<Vec>(dom, exec, [&](std::uint64_t k) {
    std::vector<int> t = m.unravel(k);
    return value(t);
  });
  for (std::size_t k = 0; k < dom; ++k)
    for (int o = 0; o < dim; ++o) m.at_flat(o, k) = vals[k][o];
  return m;
}

Vec eval_vecs(const MultiMap& m, const std::vector<const Vec*>& args) {
  return m.eval(std::span<const Vec* const>(args.data(), args.size()));
}

struct Shuffle {
  std::vector<int> perm;  // perm[i] = σ(i), 0-based
  int sign;
};

// sh(a, b): σ increasing on [0, a) and on [a, a + b).
std::vector<Shuffle> shuffles(int a, int b) {
  std::vector<Shuffle> out;
  const int n = a + b;
  std::vector<int> mask(n, 0);
  std::fill(mask.begin() + b, mask.end(), 1);  // 1 marks the first block
  do {
    Shuffle s;
    for (int i = 0; i < n; ++i)
      if (mask[i]) s.perm.push_back(i);
    for (int i = 0; i < n; ++i)
      if (!mask[i]) s.perm.push_back(i);
    int inv = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (s.perm[i] > s.perm[j]) ++inv;
    s.sign = inv % 2 ? -1 : 1;
    out.push_back(std::move(s));
  } while (std::next_permutation(mask.begin(), mask.end()));
  return out;
}

const std::vector<Shuffle>& s3() {
  static const std::vector<Shuffle> all = [] {
    std::vector<Shuffle> out;
    std::vector<int> p = {0, 1, 2};
    do {
      int inv = 0;
      for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j)
          if (p[i] > p[j]) ++inv;
      out.push_back({p, inv % 2 ? -1 : 1});
    } while (std::next_permutation(p.begin(), p.end()));
    return out;
  }();
  return all;
}

Scalar sgn(const Field& f, int s) { return s > 0 ? f.one() : -f.one(); }

struct CircTerms {
  const GradedElement& P;
  const GradedElement& Q;
  const std::vector<Vec>& e;
  int p, q;

  // X_j as its two vectors.
  void push_pair(std::vector<const Vec*>& args, std::span<const int> t, int j) const {
    args.push_back(&e[t[2 * j]]);
    args.push_back(&e[t[2 * j + 1]]);
  }

  Vec value(std::span<const int> t, bool second) const {
    const Field& f = P.field;
    const int m = p + q;
    Vec out = zeros(f, P.dim);
    const Scalar pq_sign = sgn(f, (p * q) % 2 ? -1 : 1);
    for (const auto& s : shuffles(p, q)) {
      if (!second && s.perm[m - 1] != m - 1) continue;
      std::vector<const Vec*> qargs;
      for (int j = p; j < m; ++j) push_pair(qargs, t, s.perm[j]);
      if (second) qargs.push_back(&e[t[2 * m]]);
      Vec inner = eval_vecs(second ? Q.second : Q.first, qargs);
      std::vector<const Vec*> pargs;
      for (int j = 0; j < p; ++j) push_pair(pargs, t, s.perm[j]);
      pargs.push_back(&inner);
      axpy(out, pq_sign * sgn(f, s.sign), eval_vecs(P.second, pargs));
    }
    const MultiMap& outer = second ? P.second : P.first;
    for (int k = 1; k <= p; ++k) {
      const Scalar ks = sgn(f, (q * (k - 1)) % 2 ? -1 : 1);
      const int split = k + q - 1;  // 0-based index of the pair X_{k+q}
      const Vec& xs = e[t[2 * split]];
      const Vec& ys = e[t[2 * split + 1]];
      for (const auto& s : shuffles(k - 1, q)) {
        for (int variant = 0; variant < 2; ++variant) {
          std::vector<const Vec*> qargs;
          for (int j = k - 1; j < k - 1 + q; ++j) push_pair(qargs, t, s.perm[j]);
          qargs.push_back(variant == 0 ? &ys : &xs);
          Vec inner = eval_vecs(Q.second, qargs);
          std::vector<const Vec*> pargs;
          for (int j = 0; j < k - 1; ++j) push_pair(pargs, t, s.perm[j]);
          if (variant == 0) {
            pargs.push_back(&xs);
            pargs.push_back(&inner);
          } else {
            pargs.push_back(&inner);
            pargs.push_back(&ys);
          }
          for (int j = split + 1; j < m; ++j) push_pair(pargs, t, j);
          if (second) pargs.push_back(&e[t[2 * m]]);
          axpy(out, ks * sgn(f, s.sign), eval_vecs(outer, pargs));
        }
      }
    }
    return out;
  }
};

std::vector<Vec> basis(const Field& f, int n) {
  std::vector<Vec> e;
  for (int i = 0; i < n; ++i) e.push_back(unit(f, n, i));
  return e;
}

MultiMap insert_everywhere(const MultiMap& m, const Matrix& f, Exec exec) {
  const Field& fld = m.field();
  const int n = m.dim_out();
  const auto e = basis(fld, n);
  std::vector<Vec> fe;
  for (int i = 0; i < n; ++i) fe.push_back(f * e[i]);
  return tabulate(fld, n, m.arity(), exec, [&](std::span<const int> t) {
    Vec out = zeros(fld, n);
    for (int slot = 0; slot < m.arity(); ++slot) {
      std::vector<const Vec*> args;
      for (int j = 0; j < m.arity(); ++j) args.push_back(j == slot ? &fe[t[j]] : &e[t[j]]);
      out += eval_vecs(m, args);
    }
    return out;
  });
}

MultiMap compose_left(const Matrix& f, const MultiMap& m) {
  MultiMap out = m;
  const std::size_t dom = m.domain_size();
  for (std::size_t k = 0; k < dom; ++k) {
    Vec v(m.dim_out());
    for (int o = 0; o < m.dim_out(); ++o) v[o] = m.at_flat(o, k);
    Vec w = f * v;
    for (int o = 0; o < m.dim_out(); ++o) out.at_flat(o, k) = w[o];
  }
  return out;
}

GradedElement bullet_impl(const GradedElement& P, const GradedElement& Q, bool linear, Exec exec) {
  same_space(P, Q);
  const Field& f = P.field;
  if (f.characteristic() == 2) throw CharacteristicTwo("the • product divides by 2");
  GradedElement out = GradedElement::aux_zero(f, P.dim);
  if (P.degree != 1 || Q.degree != 1) return out;
  no_aux(P);
  no_aux(Q);
  const int n = P.dim;
  const auto e = basis(f, n);
  const Scalar half = f.one() / f.from_int(2);
  out.aux_first = tabulate(f, n, 3, exec, [&](std::span<const int> t) {
    Vec acc = zeros(f, n);
    for (const auto& s : s3()) {
      const Vec& a = e[t[s.perm[0]]];
      const Vec& b = e[t[s.perm[1]]];
      const Vec& c = e[t[s.perm[2]]];
      Vec term = P.first(Q.first(a, b), c);
      if (linear) term += Q.second(a, b, c);
      axpy(acc, sgn(f, s.sign), term);
    }
    return half * acc;
  });
  out.aux_second = tabulate(f, n, 4, exec, [&](std::span<const int> t) {
    Vec acc = zeros(f, n);
    for (const auto& s : s3()) {
      Vec inner = Q.first(e[t[s.perm[0]]], e[t[s.perm[1]]]);
      std::vector<const Vec*> args = {&inner, &e[t[s.perm[2]]], &e[t[3]]};
      axpy(acc, sgn(f, s.sign), eval_vecs(P.second, args));
    }
    return half * acc;
  });
  return out;
}

GradedElement bracket_impl(const GradedElement& P, const GradedElement& Q, bool linear, Exec exec) {
  same_space(P, Q);
  no_aux(P);
  no_aux(Q);
  if (P.degree == 0 && Q.degree == 0) return GradedElement::of_map(P.map * Q.map - Q.map * P.map);
  if (Q.degree == 0) return circ0(P, Q.map, exec) - circ0r(Q.map, P);
  if (P.degree == 0) return circ0r(P.map, Q) - circ0(Q, P.map, exec);
  if (P.degree == 1 && Q.degree == 1) {
    GradedElement out = circ(P, Q, exec) + circ(Q, P, exec);
    out += bullet_impl(P, Q, linear, exec);
    out += bullet_impl(Q, P, linear, exec);
    return out;
  }
  GradedElement qp = circ(Q, P, exec);
  if ((P.degree * Q.degree) % 2 == 0) return circ(P, Q, exec) - qp;
  return circ(P, Q, exec) + qp;
}

}  // namespace

// ------------------------------------------------------------ GradedElement

GradedElement GradedElement::zero(const Field& f, int dim, int degree) {
  GradedElement e;
  e.field = f;
  e.dim = dim;
  e.degree = degree;
  if (degree == 0) {
    e.map = Matrix(f, dim, dim);
  } else {
    e.first = component(f, dim, 2 * degree);
    e.second = component(f, dim, 2 * degree + 1);
  }
  return e;
}

GradedElement GradedElement::aux_zero(const Field& f, int dim) {
  GradedElement e = zero(f, dim, 2);
  e.has_aux = true;
  e.aux_first = component(f, dim, 3);
  e.aux_second = component(f, dim, 4);
  return e;
}

GradedElement GradedElement::of_map(const Matrix& m) {
  if (m.rows() != m.cols()) throw DimensionMismatch("degree-0 elements are square");
  GradedElement e = zero(m.field(), m.rows(), 0);
  e.map = m;
  return e;
}

GradedElement GradedElement::of_pair(MultiMap first, MultiMap second) {
  const int n = first.dim_out();
  if (first.arity() % 2 != 0 || second.arity() != first.arity() + 1 || first.arity() == 0)
    throw DimensionMismatch("graded components must have arities 2n and 2n+1");
  for (int d : first.dims_in())
    if (d != n) throw DimensionMismatch("graded components act on one space");
  for (int d : second.dims_in())
    if (d != n) throw DimensionMismatch("graded components act on one space");
  if (second.dim_out() != n) throw DimensionMismatch("graded components act on one space");
  GradedElement e = zero(first.field(), n, first.arity() / 2);
  e.first = std::move(first);
  e.second = std::move(second);
  return e;
}

GradedElement GradedElement::of_algebra(const LYAlgebra& a) {
  a.check_shape();
  return of_pair(a.binary, a.ternary);
}

bool GradedElement::is_zero() const {
  if (degree == 0) {
    if (!map.is_zero()) return false;
  } else if (!first.is_zero() || !second.is_zero()) {
    return false;
  }
  return !has_aux || (aux_first.is_zero() && aux_second.is_zero());
}

bool GradedElement::satisfies_vanishing() const {
  auto ok = [&](const MultiMap& m) {
    return CochainSpace(field, dim, dim, m.arity()).satisfies_vanishing(m);
  };
  if (degree > 0 && (!ok(first) || !ok(second))) return false;
  return !has_aux || (ok(aux_first) && ok(aux_second));
}

GradedElement& GradedElement::operator+=(const GradedElement& o) {
  same_space(*this, o);
  if (degree != o.degree) throw DimensionMismatch("adding elements of different degrees");
  if (degree == 0) {
    map = map + o.map;
  } else {
    first += o.first;
    second += o.second;
  }
  if (o.has_aux) {
    if (!has_aux) {
      has_aux = true;
      aux_first = component(field, dim, 3);
      aux_second = component(field, dim, 4);
    }
    aux_first += o.aux_first;
    aux_second += o.aux_second;
  }
  return *this;
}

GradedElement& GradedElement::operator-=(const GradedElement& o) {
  return *this += (-field.one()) * o;
}

GradedElement operator*(const Scalar& c, GradedElement a) {
  if (a.degree == 0) {
    a.map = c * a.map;
  } else {
    a.first = c * a.first;
    a.second = c * a.second;
  }
  if (a.has_aux) {
    a.aux_first = c * a.aux_first;
    a.aux_second = c * a.aux_second;
  }
  return a;
}

// ------------------------------------------------------------------ products

GradedElement circ(const GradedElement& P, const GradedElement& Q, Exec exec) {
  same_space(P, Q);
  no_aux(P);
  no_aux(Q);
  if (P.degree < 1 || Q.degree < 1) throw InvalidInput("circ needs degrees >= 1");
  const Field& f = P.field;
  const int n = P.dim, m = P.degree + Q.degree;
  const auto e = basis(f, n);
  CircTerms terms{P, Q, e, P.degree, Q.degree};
  GradedElement out = GradedElement::zero(f, n, m);
  out.first = tabulate(f, n, 2 * m, exec, [&](std::span<const int> t) { return terms.value(t, false); });
  out.second = tabulate(f, n, 2 * m + 1, exec, [&](std::span<const int> t) { return terms.value(t, true); });
  return out;
}

GradedElement circ0(const GradedElement& P, const Matrix& f, Exec exec) {
  no_aux(P);
  if (P.degree < 1) throw InvalidInput("circ0 needs degree >= 1");
  if (f.rows() != P.dim || f.cols() != P.dim) throw DimensionMismatch("degree-0 map has the wrong size");
  GradedElement out = P;
  out.first = insert_everywhere(P.first, f, exec);
  out.second = insert_everywhere(P.second, f, exec);
  return out;
}

GradedElement circ0r(const Matrix& f, const GradedElement& P) {
  no_aux(P);
  if (P.degree < 1) throw InvalidInput("circ0r needs degree >= 1");
  if (f.rows() != P.dim || f.cols() != P.dim) throw DimensionMismatch("degree-0 map has the wrong size");
  GradedElement out = P;
  out.first = compose_left(f, P.first);
  out.second = compose_left(f, P.second);
  return out;
}

GradedElement bullet(const GradedElement& P, const GradedElement& Q, Exec exec) {
  return bullet_impl(P, Q, true, exec);
}

GradedElement bracket_ly(const GradedElement& P, const GradedElement& Q, Exec exec) {
  return bracket_impl(P, Q, true, exec);
}

GradedElement bracket_bilinear(const GradedElement& P, const GradedElement& Q, Exec exec) {
  return bracket_impl(P, Q, false, exec);
}

// ------------------------------------------------------------ MC elements

bool is_mc(const GradedElement& pi, Exec exec) {
  if (pi.degree != 1 || pi.has_aux) throw InvalidInput("a Maurer-Cartan candidate has degree 1");
  if (!pi.satisfies_vanishing()) throw InvalidInput("element violates the vanishing condition");
  return bracket_ly(pi, pi, exec).is_zero();
}

LYAlgebra algebra_of(const GradedElement& pi) {
  if (pi.degree != 1 || pi.has_aux) throw InvalidInput("an LY structure has degree 1");
  return LYAlgebra(pi.field, pi.dim, pi.first, pi.second);
}

bool is_ly_structure(const GradedElement& pi) { return verify_ly(algebra_of(pi)).ok(); }

GradedElement d_pi(const GradedElement& pi, const GradedElement& nu, Exec exec) {
  if (pi.degree != 1) throw InvalidInput("d_Π needs Π of degree 1");
  return bracket_bilinear(pi, nu, exec);
}

GradedElement direct_sum_element(const LYAlgebra& g, const LYAlgebra& h) {
  return GradedElement::of_algebra(direct_sum(g, h));
}

GradedElement cocycle_element(const NonAbCocycle& c) {
  return GradedElement::of_algebra(build_extension(c).total) - direct_sum_element(c.g, c.h);
}

bool in_subcomplex(const GradedElement& e, int G) {
  const int n = e.dim;
  auto check = [&](const MultiMap& m) {
    const std::size_t dom = m.domain_size();
    for (std::size_t k = 0; k < dom; ++k) {
      for (int o = 0; o < G; ++o)
        if (!m.at_flat(o, k).is_zero()) return false;
      std::vector<int> t = m.unravel(k);
      if (std::all_of(t.begin(), t.end(), [&](int i) { return i >= G; }))
        for (int o = 0; o < n; ++o)
          if (!m.at_flat(o, k).is_zero()) return false;
    }
    return true;
  };
  if (e.degree == 0) {
    for (int r = 0; r < n; ++r)
      for (int c = 0; c < n; ++c)
        if ((r < G || c >= G) && !e.map.at(r, c).is_zero()) return false;
  } else if (!check(e.first) || !check(e.second)) {
    return false;
  }
  return !e.has_aux || (check(e.aux_first) && check(e.aux_second));
}

NonAbCocycle cocycle_from_element(const LYAlgebra& g, const LYAlgebra& h, const GradedElement& pi) {
  const int G = g.dim, H = h.dim;
  if (pi.degree != 1 || pi.has_aux || pi.dim != G + H)
    throw DimensionMismatch("expected a degree-1 element on g ⊕ h");
  if (!in_subcomplex(pi, G)) throw InvalidInput("element is not in the subcomplex L_>");
  NonAbCocycle c(g, h);
  auto hp = [&](Vec v) { return slice(v, G, H); };
  for (int x = 0; x < G; ++x) {
    for (int b = 0; b < H; ++b) {
      c.mu.set_value({x, b}, hp(pi.first.value({x, G + b})));
      for (int d = 0; d < H; ++d) {
        c.rho.set_value({x, b, d}, hp(pi.second.value({x, G + b, G + d})));
        c.tee.set_value({x, b, d}, hp(pi.second.value({G + b, G + d, x})));
      }
    }
    for (int y = 0; y < G; ++y) {
      c.chi.set_value({x, y}, hp(pi.first.value({x, y})));
      for (int z = 0; z < G; ++z) c.omega.set_value({x, y, z}, hp(pi.second.value({x, y, z})));
      for (int a = 0; a < H; ++a) {
        c.theta.set_value({x, y, a}, hp(pi.second.value({G + a, x, y})));
        c.dee.set_value({x, y, a}, hp(pi.second.value({x, y, G + a})));
      }
    }
  }
  return c;
}

McExtensionCheck check_mc_extension(const NonAbCocycle& c, Exec exec) {
  c.check_shape();
  const Field& f = c.field();
  if (f.characteristic() == 2) throw CharacteristicTwo("the Maurer-Cartan equation divides by 2");
  const GradedElement base = direct_sum_element(c.g, c.h);
  const GradedElement pi = cocycle_element(c);
  McExtensionCheck out;
  if (!base.satisfies_vanishing() || !pi.satisfies_vanishing()) return out;
  const GradedElement d = bracket_bilinear(base, pi, exec);
  const GradedElement sq = bracket_ly(pi, pi, exec);
  const Scalar half = f.one() / f.from_int(2);
  out.mc1 = (d + half * sq).is_zero();
  out.mc2 = is_mc(base + pi, exec);
  out.closed = in_subcomplex(pi, c.dg()) && in_subcomplex(d, c.dg()) && in_subcomplex(sq, c.dg());
  return out;
}

Matrix lift_to_sum(const Matrix& phi, int G, int H) {
  if (phi.rows() != H || phi.cols() != G) throw DimensionMismatch("phi must map g to h");
  Matrix m(phi.field(), G + H, G + H);
  for (int r = 0; r < H; ++r)
    for (int c = 0; c < G; ++c) m.at(G + r, c) = phi.at(r, c);
  return m;
}

GradedElement gauge_transform(const LYAlgebra& g, const LYAlgebra& h, const GradedElement& pi,
                              const Matrix& phi, Exec exec) {
  const Field& f = g.field;
  if (f.characteristic() == 2 || f.characteristic() == 3)
    throw UnsupportedCharacteristic("the gauge action divides by 2 and 6");
  const int G = g.dim, H = h.dim;
  if (pi.degree != 1 || pi.has_aux || pi.dim != G + H)
    throw DimensionMismatch("expected a degree-1 element on g ⊕ h");
  if (!in_subcomplex(pi, G)) throw InvalidInput("element is not in the subcomplex L_>");
  const GradedElement base = direct_sum_element(g, h);
  const GradedElement ph = GradedElement::of_map(lift_to_sum(phi, G, H));
  auto ad = [&](const GradedElement& x) { return bracket_ly(ph, x, exec); };
  const GradedElement dphi = bracket_ly(base, ph, exec);
  const GradedElement a1 = ad(pi), a2 = ad(a1);
  const GradedElement b1 = ad(dphi), b2 = ad(b1);
  if (!ad(a2).is_zero() || !ad(b2).is_zero())
    throw InternalInconsistency("ad_phi^3 does not vanish");
  const Scalar half = f.one() / f.from_int(2);
  const Scalar sixth = f.one() / f.from_int(6);
  GradedElement out = pi + a1 + half * a2;
  out -= dphi + half * b1 + sixth * b2;
  return out;
}

}  // namespace lyk
