#include "lyk/cohomology.hpp"

#include <string>

#include "lyk/errors.hpp"

namespace lyk {

CochainSpace::CochainSpace(Field f, int dim_g, int dim_v, int arity)
    : field_(f), dim_g_(dim_g), dim_v_(dim_v), arity_(arity) {
  for_each_tuple(dim_g, arity, [&](std::span<const int> t) {
    for (int i = 0; i + 1 < arity; i += 2)
      if (t[i] >= t[i + 1]) return;
    tuples_.emplace_back(t.begin(), t.end());
  });
}

MultiMap CochainSpace::zero() const {
  return MultiMap(field_, std::vector<int>(arity_, dim_g_), dim_v_);
}

MultiMap CochainSpace::embed(const Vec& coords) const {
  if (static_cast<int>(coords.size()) != dimension())
    throw DimensionMismatch("cochain coordinate vector has length " +
                            std::to_string(coords.size()) + ", expected " +
                            std::to_string(dimension()));
  MultiMap m = zero();
  const int pairs = arity_ / 2;
  for (std::size_t k = 0; k < tuples_.size(); ++k) {
    for (int mask = 0; mask < (1 << pairs); ++mask) {
      std::vector<int> t = tuples_[k];
      bool neg = false;
      for (int p = 0; p < pairs; ++p)
        if (mask & (1 << p)) {
          std::swap(t[2 * p], t[2 * p + 1]);
          neg = !neg;
        }
      for (int o = 0; o < dim_v_; ++o) {
        const Scalar& c = coords[k * dim_v_ + o];
        m.at(o, t) = neg ? -c : c;
      }
    }
  }
  return m;
}

Vec CochainSpace::coordinates(const MultiMap& m) const {
  Vec c;
  c.reserve(dimension());
  for (const auto& t : tuples_)
    for (int o = 0; o < dim_v_; ++o) c.push_back(m.at(o, t));
  return c;
}

bool CochainSpace::satisfies_vanishing(const MultiMap& m) const {
  return embed(coordinates(m)) == m;
}

namespace {

struct Ctx {
  const Representation& r;
  std::vector<Vec> e;
  explicit Ctx(const Representation& rep) : r(rep) {
    for (int i = 0; i < rep.algebra.dim; ++i) e.push_back(rep.algebra.basis(i));
  }
  Vec B(const Vec& x, const Vec& y) const { return r.algebra.bracket(x, y); }
  Vec T(const Vec& x, const Vec& y, const Vec& z) const { return r.algebra.triple(x, y, z); }
};

Vec ev(const MultiMap& m, const std::vector<const Vec*>& args) { return m.eval(args); }

Scalar sign(const Field& f, int exponent) {
  return (exponent % 2 == 0) ? f.one() : -f.one();
}

// Arguments x with slots a and b removed (a < b).
std::vector<const Vec*> without(const std::vector<const Vec*>& x, int a, int b) {
  std::vector<const Vec*> out;
  for (int i = 0; i < static_cast<int>(x.size()); ++i)
    if (i != a && i != b) out.push_back(x[i]);
  return out;
}

void check_rep_and(const Representation& r, const MultiMap& m, int arity, const char* what) {
  if (m.arity() != arity || m.dim_out() != r.dim_v)
    throw DimensionMismatch(std::string(what) + " has the wrong shape");
  for (int d : m.dims_in())
    if (d != r.algebra.dim) throw DimensionMismatch(std::string(what) + " has the wrong shape");
}

}  // namespace

CochainPair delta1(const Representation& r, const MultiMap& f) {
  r.check_shape();
  check_rep_and(r, f, 1, "cochain");
  const int n = r.algebra.dim;
  Ctx c(r);
  const Field& F = r.field();
  CochainPair out{MultiMap(F, {n, n}, r.dim_v), MultiMap(F, {n, n, n}, r.dim_v)};
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const Vec &x1 = c.e[i], &x2 = c.e[j];
      out.f.set_value({i, j}, r.mu(x1, f(x2)) - r.mu(x2, f(x1)) - f(c.B(x1, x2)));
      for (int k = 0; k < n; ++k) {
        const Vec& x3 = c.e[k];
        out.g.set_value({i, j, k}, r.theta(x2, x3, f(x1)) - r.theta(x1, x3, f(x2)) +
                                       r.dee(x1, x2, f(x3)) - f(c.T(x1, x2, x3)));
      }
    }
  return out;
}

CochainPair delta(const Representation& r, const CochainPair& fg) {
  r.check_shape();
  const int two_n = fg.f.arity();
  if (two_n < 2 || two_n % 2 != 0) throw DimensionMismatch("delta needs a (2n,2n+1)-cochain, n >= 1");
  const int n = two_n / 2;
  check_rep_and(r, fg.f, 2 * n, "first component");
  check_rep_and(r, fg.g, 2 * n + 1, "second component");
  const int dg = r.algebra.dim;
  const Field& F = r.field();
  Ctx c(r);
  const MultiMap& f = fg.f;
  const MultiMap& g = fg.g;
  CochainPair out{MultiMap(F, std::vector<int>(2 * n + 2, dg), r.dim_v),
                  MultiMap(F, std::vector<int>(2 * n + 3, dg), r.dim_v)};

  for_each_tuple(dg, 2 * n + 2, [&](std::span<const int> t) {
    std::vector<const Vec*> x;
    for (int i : t) x.push_back(&c.e[i]);
    const int L = 2 * n + 2;
    std::vector<const Vec*> head(x.begin(), x.begin() + 2 * n);
    auto args_a = head;
    args_a.push_back(x[L - 1]);
    auto args_b = head;
    args_b.push_back(x[L - 2]);
    Vec br = c.B(*x[L - 2], *x[L - 1]);
    auto args_c = head;
    args_c.push_back(&br);
    Vec v = r.mu(*x[L - 2], ev(g, args_a)) - r.mu(*x[L - 1], ev(g, args_b)) - ev(g, args_c);
    for (int k = 1; k <= n; ++k) {
      const int a = 2 * k - 2, b = 2 * k - 1;
      Vec d = r.dee(*x[a], *x[b], ev(f, without(x, a, b)));
      axpy(v, sign(F, n + k + 1), d);
      for (int j0 = 2 * k; j0 < L; ++j0) {
        Vec tr = c.T(*x[a], *x[b], *x[j0]);
        auto args = x;
        args[j0] = &tr;
        axpy(v, sign(F, n + k), ev(f, without(args, a, b)));
      }
    }
    out.f.set_value(t, v);
  });

  for_each_tuple(dg, 2 * n + 3, [&](std::span<const int> t) {
    std::vector<const Vec*> x;
    for (int i : t) x.push_back(&c.e[i]);
    const int L = 2 * n + 3;
    std::vector<const Vec*> first(x.begin(), x.begin() + 2 * n + 1);
    std::vector<const Vec*> second(x.begin(), x.begin() + 2 * n);
    second.push_back(x[2 * n + 1]);
    Vec v = r.theta(*x[L - 2], *x[L - 1], ev(g, first)) -
            r.theta(*x[L - 3], *x[L - 1], ev(g, second));
    for (int k = 1; k <= n + 1; ++k) {
      const int a = 2 * k - 2, b = 2 * k - 1;
      Vec d = r.dee(*x[a], *x[b], ev(g, without(x, a, b)));
      axpy(v, sign(F, n + k + 1), d);
      for (int j0 = 2 * k; j0 < L; ++j0) {
        Vec tr = c.T(*x[a], *x[b], *x[j0]);
        auto args = x;
        args[j0] = &tr;
        axpy(v, sign(F, n + k), ev(g, without(args, a, b)));
      }
    }
    out.g.set_value(t, v);
  });
  return out;
}

CochainPair delta_star(const Representation& r, const CochainPair& fg) {
  r.check_shape();
  check_rep_and(r, fg.f, 2, "first component");
  check_rep_and(r, fg.g, 3, "second component");
  const int n = r.algebra.dim;
  const Field& F = r.field();
  Ctx c(r);
  const MultiMap& f = fg.f;
  const MultiMap& g = fg.g;
  CochainPair out{MultiMap(F, {n, n, n}, r.dim_v), MultiMap(F, {n, n, n, n}, r.dim_v)};
  for_each_tuple(n, 3, [&](std::span<const int> t) {
    const Vec &x = c.e[t[0]], &y = c.e[t[1]], &z = c.e[t[2]];
    Vec v = -(r.mu(x, f(y, z)) + r.mu(y, f(z, x)) + r.mu(z, f(x, y)));
    v += f(c.B(x, y), z) + f(c.B(y, z), x) + f(c.B(z, x), y);
    v += g(x, y, z) + g(y, z, x) + g(z, x, y);
    out.f.set_value(t, v);
  });
  for_each_tuple(n, 4, [&](std::span<const int> t) {
    const Vec &x = c.e[t[0]], &y = c.e[t[1]], &z = c.e[t[2]], &w = c.e[t[3]];
    Vec v = r.theta(x, w, f(y, z)) + r.theta(y, w, f(z, x)) + r.theta(z, w, f(x, y));
    v += g(c.B(x, y), z, w) + g(c.B(y, z), x, w) + g(c.B(z, x), y, w);
    out.g.set_value(t, v);
  });
  return out;
}

Vec flatten(const CochainPair& p) {
  Vec v = p.f.coeffs();
  v.insert(v.end(), p.g.coeffs().begin(), p.g.coeffs().end());
  return v;
}

CochainPair cochain_from_coords(const Representation& r, int n, const Vec& coords) {
  CochainSpace s1(r.field(), r.algebra.dim, r.dim_v, 2 * n);
  CochainSpace s2(r.field(), r.algebra.dim, r.dim_v, 2 * n + 1);
  if (static_cast<int>(coords.size()) != s1.dimension() + s2.dimension())
    throw DimensionMismatch("cochain coordinates have the wrong length");
  return {s1.embed(slice(coords, 0, s1.dimension())),
          s2.embed(slice(coords, s1.dimension(), s2.dimension()))};
}

Vec cochain_coords(const Representation& r, const CochainPair& p) {
  const int n = p.f.arity() / 2;
  CochainSpace s1(r.field(), r.algebra.dim, r.dim_v, 2 * n);
  CochainSpace s2(r.field(), r.algebra.dim, r.dim_v, 2 * n + 1);
  if (!s1.satisfies_vanishing(p.f) || !s2.satisfies_vanishing(p.g))
    throw InvalidInput("cochain does not satisfy the vanishing condition");
  return concat(s1.coordinates(p.f), s2.coordinates(p.g));
}

namespace {

Matrix columns_to_matrix(const Field& F, const std::vector<Vec>& cols, int rows) {
  return Matrix::from_columns(F, rows, cols);
}

int full_size(const Representation& r, int arity) {
  int s = r.dim_v;
  for (int i = 0; i < arity; ++i) s *= r.algebra.dim;
  return s;
}

}  // namespace

Matrix delta_matrix(const Representation& r, int n, Exec exec) {
  r.check_shape();
  const Field& F = r.field();
  if (n == 0) {
    const int dom = r.algebra.dim * r.dim_v;
    auto cols = map_indices<Vec>(dom, exec, [&](std::uint64_t k) {
      MultiMap f(F, {r.algebra.dim}, r.dim_v);
      f.coeffs()[k] = F.one();
      return flatten(delta1(r, f));
    });
    return columns_to_matrix(F, cols, full_size(r, 2) + full_size(r, 3));
  }
  CochainSpace s1(F, r.algebra.dim, r.dim_v, 2 * n);
  CochainSpace s2(F, r.algebra.dim, r.dim_v, 2 * n + 1);
  const int dom = s1.dimension() + s2.dimension();
  auto cols = map_indices<Vec>(dom, exec, [&](std::uint64_t k) {
    Vec coords = zeros(F, dom);
    coords[k] = F.one();
    return flatten(delta(r, cochain_from_coords(r, n, coords)));
  });
  return columns_to_matrix(F, cols, full_size(r, 2 * n + 2) + full_size(r, 2 * n + 3));
}

Matrix delta_star_matrix(const Representation& r, Exec exec) {
  r.check_shape();
  const Field& F = r.field();
  CochainSpace s1(F, r.algebra.dim, r.dim_v, 2);
  CochainSpace s2(F, r.algebra.dim, r.dim_v, 3);
  const int dom = s1.dimension() + s2.dimension();
  auto cols = map_indices<Vec>(dom, exec, [&](std::uint64_t k) {
    Vec coords = zeros(F, dom);
    coords[k] = F.one();
    return flatten(delta_star(r, cochain_from_coords(r, 1, coords)));
  });
  return columns_to_matrix(F, cols, full_size(r, 3) + full_size(r, 4));
}

H1Result h1(const Representation& r, Exec exec) {
  Matrix m = delta_matrix(r, 0, exec);
  H1Result out;
  for (const auto& v : kernel_basis(m)) {
    MultiMap f(r.field(), {r.algebra.dim}, r.dim_v);
    f.coeffs() = v;
    out.basis.push_back(std::move(f));
  }
  out.dim = static_cast<int>(out.basis.size());
  return out;
}

namespace {

void require_alternating(const Representation& r) {
  const int n = r.algebra.dim;
  for (int i = 0; i < n; ++i) {
    if (!is_zero(r.algebra.binary.value({i, i})))
      throw InvalidInput("cohomology needs an alternating binary bracket");
    for (int k = 0; k < n; ++k) {
      if (!is_zero(r.algebra.ternary.value({i, i, k})))
        throw InvalidInput("cohomology needs an alternating ternary bracket");
      for (int a = 0; a < r.dim_v; ++a)
        if (!is_zero(r.dee.value({i, i, a})))
          throw InvalidInput("cohomology needs D(x,x) = 0");
    }
  }
}

}  // namespace

H23Result z23_b23_h23(const Representation& r, Exec exec) {
  r.check_shape();
  require_alternating(r);
  const Field& F = r.field();
  Matrix md = delta_matrix(r, 1, exec);
  Matrix ms = delta_star_matrix(r, exec);
  // Stack δ over δ*.
  Matrix stacked(F, md.rows() + ms.rows(), md.cols());
  for (int i = 0; i < md.rows(); ++i)
    for (int j = 0; j < md.cols(); ++j) stacked.at(i, j) = md.at(i, j);
  for (int i = 0; i < ms.rows(); ++i)
    for (int j = 0; j < ms.cols(); ++j) stacked.at(md.rows() + i, j) = ms.at(i, j);
  std::vector<Vec> z = kernel_basis(stacked);
  const int dom = md.cols();

  Matrix m0 = delta_matrix(r, 0, exec);
  std::vector<Vec> b_coords;
  const int s2 = full_size(r, 2);
  for (const auto& v : image_basis(m0)) {
    MultiMap f(F, {r.algebra.dim, r.algebra.dim}, r.dim_v);
    MultiMap g(F, {r.algebra.dim, r.algebra.dim, r.algebra.dim}, r.dim_v);
    f.coeffs() = slice(v, 0, s2);
    g.coeffs() = slice(v, s2, static_cast<int>(v.size()) - s2);
    b_coords.push_back(cochain_coords(r, {f, g}));
  }

  H23Result out;
  out.dim_z = static_cast<int>(z.size());
  out.dim_b = static_cast<int>(b_coords.size());
  for (const auto& b : b_coords)
    if (!in_span(F, dom, z, b))
      throw InternalInconsistency("a coboundary is not a cocycle");
  out.dim_h = out.dim_z - out.dim_b;
  for (const auto& v : z) out.z_basis.push_back(cochain_from_coords(r, 1, v));
  for (const auto& v : b_coords) out.b_basis.push_back(cochain_from_coords(r, 1, v));
  std::vector<Vec> acc = b_coords;
  for (const auto& v : z) {
    if (in_span(F, dom, acc, v)) continue;
    acc.push_back(v);
    out.h_representatives.push_back(cochain_from_coords(r, 1, v));
  }
  if (static_cast<int>(out.h_representatives.size()) != out.dim_h)
    throw InternalInconsistency("complement of B in Z has the wrong size");
  return out;
}

bool is_coboundary(const Representation& r, const CochainPair& fg, MultiMap* witness) {
  Matrix m0 = delta_matrix(r, 0, Exec::serial);
  auto x = solve(m0, flatten(fg));
  if (!x) return false;
  if (witness) {
    MultiMap f(r.field(), {r.algebra.dim}, r.dim_v);
    f.coeffs() = *x;
    *witness = f;
  }
  return true;
}

CoboundaryRanks coboundary_ranks(const Representation& r, int n, Exec exec) {
  CoboundaryRanks out;
  out.n = n;
  Matrix m = delta_matrix(r, n, exec);
  out.domain_dim = m.cols();
  out.rank = rank(m);
  // δ∘δ: push each column through the next δ when its image is a cochain.
  const Field& F = r.field();
  const int dg = r.algebra.dim;
  const int a1 = n == 0 ? 2 : 2 * n + 2;
  const int s1 = full_size(r, a1);
  std::vector<Vec> comp;
  for (int k = 0; k < m.cols(); ++k) {
    Vec col = m.column(k);
    MultiMap f(F, std::vector<int>(a1, dg), r.dim_v);
    MultiMap g(F, std::vector<int>(a1 + 1, dg), r.dim_v);
    f.coeffs() = slice(col, 0, s1);
    g.coeffs() = slice(col, s1, static_cast<int>(col.size()) - s1);
    comp.push_back(flatten(delta(r, {f, g})));
  }
  out.composite_rank = comp.empty() ? 0 : rank_of(F, static_cast<int>(comp[0].size()), comp);
  return out;
}

}  // namespace lyk
