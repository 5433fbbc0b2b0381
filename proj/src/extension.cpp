#include "lyk/extension.hpp"

#include <algorithm>

#include "cocycle_ops.hpp"
#include "lyk/errors.hpp"

namespace lyk {

NonAbCocycle::NonAbCocycle(LYAlgebra gg, LYAlgebra hh) : g(std::move(gg)), h(std::move(hh)) {
  if (!(g.field == h.field)) throw FieldMismatch("g and h are over different fields");
  const Field& f = g.field;
  const int G = g.dim, H = h.dim;
  chi = MultiMap(f, {G, G}, H);
  omega = MultiMap(f, {G, G, G}, H);
  mu = MultiMap(f, {G, H}, H);
  theta = MultiMap(f, {G, G, H}, H);
  dee = MultiMap(f, {G, G, H}, H);
  rho = MultiMap(f, {G, H, H}, H);
  tee = MultiMap(f, {G, H, H}, H);
}

void NonAbCocycle::check_shape() const {
  g.check_shape();
  h.check_shape();
  if (!(g.field == h.field)) throw FieldMismatch("g and h are over different fields");
  const int G = dg(), H = dh();
  auto expect = [&](const MultiMap& m, std::vector<int> in, const char* name) {
    if (m.dims_in() != in || m.dim_out() != H)
      throw DimensionMismatch(std::string("cocycle map ") + name + " has the wrong shape");
    if (!(m.field() == g.field)) throw FieldMismatch(std::string("cocycle map ") + name);
  };
  expect(chi, {G, G}, "chi");
  expect(omega, {G, G, G}, "omega");
  expect(mu, {G, H}, "mu");
  expect(theta, {G, G, H}, "theta");
  expect(dee, {G, G, H}, "D");
  expect(rho, {G, H, H}, "rho");
  expect(tee, {G, H, H}, "T");
}

std::vector<const MultiMap*> NonAbCocycle::maps() const {
  return {&chi, &omega, &mu, &theta, &dee, &rho, &tee};
}

std::vector<MultiMap*> NonAbCocycle::maps() { return {&chi, &omega, &mu, &theta, &dee, &rho, &tee}; }

Vec NonAbCocycle::flat() const {
  Vec out;
  for (const MultiMap* m : maps()) out.insert(out.end(), m->coeffs().begin(), m->coeffs().end());
  return out;
}

bool cocycle_less(const NonAbCocycle& a, const NonAbCocycle& b) {
  const Vec fa = a.flat(), fb = b.flat();
  return std::lexicographical_compare(fa.begin(), fa.end(), fb.begin(), fb.end(),
                                      [](const Scalar& x, const Scalar& y) {
                                        return x.compare(y) < 0;
                                      });
}

// ---------------------------------------------------------------- extensions

namespace {

struct Split {
  Vec x, a;
};

Split split(const NonAbCocycle& c, const Vec& u) {
  return {slice(u, 0, c.dg()), slice(u, c.dg(), c.dh())};
}

Vec twisted_binary(const detail::CocycleOps& o, const Vec& u, const Vec& v) {
  auto [x, a] = split(o.c, u);
  auto [y, b] = split(o.c, v);
  Vec hpart = o.chi(x, y) + o.mu(x, b) - o.mu(y, a) + o.hb(a, b);
  return concat(o.gb(x, y), hpart);
}

Vec twisted_ternary(const detail::CocycleOps& o, const Vec& u, const Vec& v, const Vec& w) {
  auto [x, a] = split(o.c, u);
  auto [y, b] = split(o.c, v);
  auto [z, c] = split(o.c, w);
  Vec hpart = o.om(x, y, z) + o.D(x, y, c) + o.th(y, z, a) - o.th(x, z, b) + o.T(z, a, b) +
              o.rho(x, b, c) - o.rho(y, a, c) + o.ht(a, b, c);
  return concat(o.gt(x, y, z), hpart);
}

void same_base(const NonAbCocycle& c1, const NonAbCocycle& c2) {
  c1.check_shape();
  c2.check_shape();
  if (!(c1.g == c2.g) || !(c1.h == c2.h))
    throw DimensionMismatch("cocycles are defined on different g or h");
}

void check_phi(const NonAbCocycle& c, const Matrix& phi) {
  if (phi.rows() != c.dh() || phi.cols() != c.dg())
    throw DimensionMismatch("phi must be " + std::to_string(c.dh()) + "x" +
                            std::to_string(c.dg()));
  if (!(phi.field() == c.field())) throw FieldMismatch("phi is over a different field");
}

}  // namespace

ExtensionSpec build_extension(const NonAbCocycle& c) {
  c.check_shape();
  const Field& f = c.field();
  const int G = c.dg(), H = c.dh(), n = G + H;
  detail::CocycleOps o(c);
  LYAlgebra total(f, n);
  std::vector<Vec> e;
  for (int i = 0; i < n; ++i) e.push_back(unit(f, n, i));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      total.binary.set_value({i, j}, twisted_binary(o, e[i], e[j]));
      for (int k = 0; k < n; ++k) total.ternary.set_value({i, j, k}, twisted_ternary(o, e[i], e[j], e[k]));
    }
  ExtensionSpec out{c.g, c.h, std::move(total), Matrix(f, n, H), Matrix(f, G, n), Matrix(f, n, G)};
  for (int j = 0; j < H; ++j) out.i.at(G + j, j) = f.one();
  for (int j = 0; j < G; ++j) {
    out.p.at(j, j) = f.one();
    out.s.at(j, j) = f.one();
  }
  return out;
}

void verify_extension(const ExtensionSpec& e) {
  e.g.check_shape();
  e.h.check_shape();
  e.total.check_shape();
  const int G = e.g.dim, H = e.h.dim, n = e.total.dim;
  if (!(e.g.field == e.h.field) || !(e.g.field == e.total.field))
    throw FieldMismatch("extension algebras are over different fields");
  if (e.i.rows() != n || e.i.cols() != H) throw DimensionMismatch("i must map h into the total");
  if (e.p.rows() != G || e.p.cols() != n) throw DimensionMismatch("p must map the total onto g");
  if (e.s.rows() != n || e.s.cols() != G) throw DimensionMismatch("s must map g into the total");
  if (n != G + H) throw InvalidExtension("dim total != dim g + dim h");
  if (!(e.p * e.i).is_zero()) throw InvalidExtension("p∘i is not zero");
  if (rank(e.i) != H) throw InvalidExtension("i is not injective");
  if (rank(e.p) != G) throw InvalidExtension("p is not surjective");
  if (!verify_morphism(e.h, e.total, e.i).ok()) throw InvalidExtension("i is not a morphism");
  if (!verify_morphism(e.total, e.g, e.p).ok()) throw InvalidExtension("p is not a morphism");
  std::vector<Vec> ih;
  for (int j = 0; j < H; ++j) ih.push_back(e.i.column(j));
  if (!is_ideal(e.total, ih)) throw InvalidExtension("i(h) is not an ideal");
  if (!(e.p * e.s).is_identity()) throw SectionMismatch("p∘s is not the identity on g");
}

Matrix retraction(const ExtensionSpec& e) {
  const Field& f = e.total.field;
  const int n = e.total.dim;
  auto t = solve(e.i, Matrix::identity(f, n) - e.s * e.p);
  if (!t) throw SectionMismatch("id - s∘p does not factor through i");
  return *t;
}

ExtensionSpec with_section(const ExtensionSpec& e, const Matrix& s) {
  ExtensionSpec out = e;
  out.s = s;
  return out;
}

NonAbCocycle extract_cocycle(const ExtensionSpec& e) {
  verify_extension(e);
  const Matrix t = retraction(e);
  const LYAlgebra& L = e.total;
  NonAbCocycle c(e.g, e.h);
  const int G = c.dg(), H = c.dh();
  std::vector<Vec> sx, ia;
  for (int j = 0; j < G; ++j) sx.push_back(e.s.column(j));
  for (int j = 0; j < H; ++j) ia.push_back(e.i.column(j));
  for (int x = 0; x < G; ++x) {
    for (int a = 0; a < H; ++a) c.mu.set_value({x, a}, t * L.bracket(sx[x], ia[a]));
    for (int a = 0; a < H; ++a)
      for (int b = 0; b < H; ++b) {
        c.rho.set_value({x, a, b}, t * L.triple(sx[x], ia[a], ia[b]));
        c.tee.set_value({x, a, b}, t * L.triple(ia[a], ia[b], sx[x]));
      }
    for (int y = 0; y < G; ++y) {
      const Vec gx = e.g.basis(x), gy = e.g.basis(y);
      c.chi.set_value({x, y}, t * (L.bracket(sx[x], sx[y]) - e.s * e.g.bracket(gx, gy)));
      for (int z = 0; z < G; ++z)
        c.omega.set_value({x, y, z}, t * (L.triple(sx[x], sx[y], sx[z]) -
                                          e.s * e.g.triple(gx, gy, e.g.basis(z))));
      for (int a = 0; a < H; ++a) {
        c.theta.set_value({x, y, a}, t * L.triple(ia[a], sx[x], sx[y]));
        c.dee.set_value({x, y, a}, t * L.triple(sx[x], sx[y], ia[a]));
      }
    }
  }
  return c;
}

// --------------------------------------------------------------- equivalence

NonAbCocycle shift_cocycle(const NonAbCocycle& c2, const Matrix& phi) {
  c2.check_shape();
  check_phi(c2, phi);
  detail::CocycleOps o(c2);
  const int G = c2.dg(), H = c2.dh();
  std::vector<Vec> p;  // φ(e_x)
  for (int x = 0; x < G; ++x) p.push_back(phi.column(x));
  NonAbCocycle c1 = c2;
  auto add = [](MultiMap& m, std::initializer_list<int> in, const Vec& d) {
    m.set_value(in, m.value(in) + d);
  };
  const auto& e = o.e;
  const auto& f = o.f;
  for (int x = 0; x < G; ++x) {
    for (int a = 0; a < H; ++a) {
      add(c1.mu, {x, a}, o.hb(f[a], p[x]));
      for (int b = 0; b < H; ++b) {
        add(c1.rho, {x, a, b}, o.ht(f[a], p[x], f[b]));
        add(c1.tee, {x, a, b}, o.ht(f[b], f[a], p[x]));
      }
    }
    for (int y = 0; y < G; ++y) {
      add(c1.chi, {x, y},
          o.hb(p[x], p[y]) + phi * o.gb(e[x], e[y]) - o.mu(e[x], p[y]) + o.mu(e[y], p[x]));
      for (int z = 0; z < G; ++z) {
        Vec d = o.th(e[x], e[z], p[y]) - o.D(e[x], e[y], p[z]) + o.rho(e[x], p[y], p[z]) -
                o.th(e[y], e[z], p[x]) + o.T(e[z], p[x], p[y]) - o.rho(e[y], p[x], p[z]) -
                o.ht(p[x], p[y], p[z]) + phi * o.gt(e[x], e[y], e[z]);
        add(c1.omega, {x, y, z}, d);
      }
      for (int a = 0; a < H; ++a) {
        add(c1.theta, {x, y, a},
            o.rho(e[x], f[a], p[y]) - o.T(e[y], f[a], p[x]) + o.ht(f[a], p[x], p[y]));
        add(c1.dee, {x, y, a},
            o.rho(e[y], p[x], f[a]) - o.rho(e[x], p[y], f[a]) + o.ht(p[x], p[y], f[a]));
      }
    }
  }
  return c1;
}

Report check_cocycle_equivalence(const NonAbCocycle& c1, const NonAbCocycle& c2,
                                 const Matrix& phi, const CheckOptions& opts) {
  same_base(c1, c2);
  check_phi(c2, phi);
  const NonAbCocycle want = shift_cocycle(c2, phi);
  const int G = c1.dg(), H = c1.dh();
  auto agree = [](const MultiMap& a, const MultiMap& b) {
    return [&a, &b](std::span<const int> t) { return a.value(t) == b.value(t); };
  };
  std::vector<IdentityFamily> fam;
  fam.push_back({"E1", {G, G}, agree(c1.chi, want.chi)});
  fam.push_back({"E2", {G, G, G}, agree(c1.omega, want.omega)});
  fam.push_back({"E3", {G, H}, agree(c1.mu, want.mu)});
  fam.push_back({"E4", {G, G, H}, agree(c1.theta, want.theta)});
  fam.push_back({"E5", {G, G, H}, agree(c1.dee, want.dee)});
  fam.push_back({"E6", {G, H, H}, agree(c1.rho, want.rho)});
  fam.push_back({"E6", {G, H, H}, agree(c1.tee, want.tee)});
  return run_families(fam, opts);
}

std::string to_string(EquivalenceSearch::Status s) {
  switch (s) {
    case EquivalenceSearch::Status::witness:
      return "witness";
    case EquivalenceSearch::Status::exhausted:
      return "exhausted";
    case EquivalenceSearch::Status::not_equivalent:
      return "not_equivalent";
  }
  return "?";
}

bool equivalence_is_linear(const NonAbCocycle& c2) {
  return c2.h.binary.is_zero() && c2.h.ternary.is_zero() && c2.rho.is_zero() && c2.tee.is_zero();
}

Matrix hom_candidate(const Field& f, int rows, int cols, std::uint64_t k) {
  Matrix m(f, rows, cols);
  const std::uint64_t p = f.characteristic();
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) {
      m.at(r, c) = f.element(k % p);
      k /= p;
    }
  return m;
}

std::uint64_t candidate_count(const Field& f, int entries, std::uint64_t budget) {
  if (!f.is_prime()) throw InvalidInput("enumeration needs a prime field");
  std::uint64_t n = 1;
  for (int i = 0; i < entries; ++i) {
    if (n > budget / f.characteristic()) return budget + 1;
    n *= f.characteristic();
  }
  return n;
}

EquivalenceSearch search_equivalence(const NonAbCocycle& c1, const NonAbCocycle& c2,
                                     std::uint64_t budget, Exec exec) {
  same_base(c1, c2);
  const Field& f = c1.field();
  const int G = c1.dg(), H = c1.dh();
  EquivalenceSearch out;
  const CheckOptions serial{Exec::serial, 1};

  if (equivalence_is_linear(c2)) {
    // c1 - c2 = L φ with L read off the unit maps.
    out.method = "linear";
    const Vec base = c2.flat();
    const Vec rhs = c1.flat() - base;
    std::vector<Vec> cols;
    for (int r = 0; r < H; ++r)
      for (int c = 0; c < G; ++c) {
        Matrix u(f, H, G);
        u.at(r, c) = f.one();
        cols.push_back(shift_cocycle(c2, u).flat() - base);
      }
    out.examined = 1;
    auto sol = solve(Matrix::from_columns(f, static_cast<int>(rhs.size()), cols), rhs);
    if (!sol) {
      out.status = EquivalenceSearch::Status::not_equivalent;
      return out;
    }
    Matrix phi(f, H, G);
    for (int r = 0; r < H; ++r)
      for (int c = 0; c < G; ++c) phi.at(r, c) = (*sol)[r * G + c];
    if (!check_cocycle_equivalence(c1, c2, phi, serial).ok())
      throw InternalInconsistency("linear equivalence solve returned a non-witness");
    out.status = EquivalenceSearch::Status::witness;
    out.phi = std::move(phi);
    return out;
  }

  out.method = "enumeration";
  if (f.is_rational()) {
    out.status = EquivalenceSearch::Status::exhausted;
    return out;
  }
  const std::uint64_t n = candidate_count(f, G * H, budget);
  if (n > budget)
    throw BudgetExceeded("equivalence search needs more than " + std::to_string(budget) +
                         " candidate maps");
  auto hit = find_first(n, exec, [&](std::uint64_t k) {
    return shift_cocycle(c2, hom_candidate(f, H, G, k)) == c1;
  });
  out.examined = hit ? *hit + 1 : n;
  if (!hit) {
    out.status = EquivalenceSearch::Status::not_equivalent;
    return out;
  }
  out.status = EquivalenceSearch::Status::witness;
  out.phi = hom_candidate(f, H, G, *hit);
  return out;
}

Report check_extension_equivalence(const ExtensionSpec& e1, const ExtensionSpec& e2,
                                   const Matrix& f, const CheckOptions& opts) {
  if (!(e1.g == e2.g) || !(e1.h == e2.h))
    throw DimensionMismatch("extensions of different g or h");
  Report r = verify_morphism(e1.total, e2.total, f, opts);
  if (!(f * e1.i == e2.i)) r.add("i", {});
  if (!(e2.p * f == e1.p)) r.add("p", {});
  return r;
}

Matrix equivalence_map(const NonAbCocycle& c1, const Matrix& phi) {
  check_phi(c1, phi);
  const Field& f = c1.field();
  const int G = c1.dg(), H = c1.dh();
  Matrix m = Matrix::identity(f, G + H);
  for (int r = 0; r < H; ++r)
    for (int c = 0; c < G; ++c) m.at(G + r, c) = -phi.at(r, c);
  return m;
}

// --------------------------------------------------------------- enumeration

namespace {

// Coefficient slots of one map with the pair antisymmetry of (L00)/(L01)
// built in: slot (i, j) with i > j copies -(j, i); diagonal slots are free
// only in characteristic 2.
struct Slot {
  std::size_t flat;
  int source;  // index into the free list, or -1 for a forced zero
  bool negate;
};

std::vector<Slot> slots_for(const MultiMap& m, int p, int q, std::vector<std::size_t>& free,
                            bool char2) {
  std::vector<Slot> out;
  const std::size_t total = m.size();
  const std::size_t dom = m.domain_size();
  std::vector<int> index_of(total, -1);
  for (std::size_t k = 0; k < total; ++k) {
    const int o = static_cast<int>(k / dom);
    std::vector<int> in = m.unravel(k % dom);
    if (p < 0 || in[p] < in[q] || (in[p] == in[q] && char2)) {
      index_of[k] = static_cast<int>(free.size());
      free.push_back(k);
      out.push_back({k, index_of[k], false});
    } else if (in[p] == in[q]) {
      out.push_back({k, -1, false});
    } else {
      std::swap(in[p], in[q]);
      const std::size_t partner = o * dom + m.offset(in);
      out.push_back({k, -2 - static_cast<int>(partner), true});
    }
  }
  // Resolve partner references now that every free slot has an index.
  for (auto& s : out)
    if (s.source <= -2) s.source = index_of[static_cast<std::size_t>(-2 - s.source)];
  return out;
}

}  // namespace

std::vector<NonAbCocycle> enumerate_cocycles(const LYAlgebra& g, const LYAlgebra& h,
                                             std::uint64_t budget, Exec exec) {
  const NonAbCocycle zero(g, h);
  zero.check_shape();
  const Field& f = zero.field();
  const bool char2 = f.characteristic() == 2;
  // (map, antisymmetric pair) in the order of maps(): χ(0,1), ω(0,1), D(0,1), T(1,2).
  const int pairs[7][2] = {{0, 1}, {0, 1}, {-1, -1}, {-1, -1}, {0, 1}, {-1, -1}, {1, 2}};
  std::vector<std::vector<std::size_t>> free(7);
  std::vector<std::vector<Slot>> slots(7);
  int nfree = 0;
  const auto maps = zero.maps();
  for (int m = 0; m < 7; ++m) {
    slots[m] = slots_for(*maps[m], pairs[m][0], pairs[m][1], free[m], char2);
    nfree += static_cast<int>(free[m].size());
  }
  const std::uint64_t n = candidate_count(f, nfree, budget);
  if (n > budget)
    throw BudgetExceeded("cocycle enumeration needs more than " + std::to_string(budget) +
                         " candidates");
  auto build = [&](std::uint64_t k) {
    NonAbCocycle c = zero;
    auto out = c.maps();
    const std::uint64_t p = f.characteristic();
    for (int m = 0; m < 7; ++m) {
      std::vector<Scalar> vals;
      for (std::size_t j = 0; j < free[m].size(); ++j) {
        vals.push_back(f.element(k % p));
        k /= p;
      }
      for (const auto& s : slots[m]) {
        if (s.source < 0) continue;
        out[m]->coeffs()[s.flat] = s.negate ? -vals[s.source] : vals[s.source];
      }
    }
    return c;
  };
  const CheckOptions serial{Exec::serial, 1};
  auto valid = map_indices<char>(n, exec, [&](std::uint64_t k) {
    return static_cast<char>(validate_cocycle(build(k), serial).ok());
  });
  std::vector<NonAbCocycle> out;
  for (std::uint64_t k = 0; k < n; ++k)
    if (valid[k]) out.push_back(build(k));
  return out;
}

std::vector<NonAbCocycle> cocycle_classes(const std::vector<NonAbCocycle>& cocycles,
                                          std::uint64_t budget, Exec exec) {
  std::vector<NonAbCocycle> sorted = cocycles;
  std::sort(sorted.begin(), sorted.end(), cocycle_less);
  std::vector<NonAbCocycle> reps;
  for (const auto& c : sorted) {
    bool found = false;
    for (const auto& r : reps)
      if (search_equivalence(c, r, budget, exec).status == EquivalenceSearch::Status::witness) {
        found = true;
        break;
      }
    if (!found) reps.push_back(c);
  }
  return reps;
}

}  // namespace lyk
