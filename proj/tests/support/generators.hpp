#pragma once

#include <vector>

#include "lyk/extension.hpp"
#include "lyk/mc.hpp"
#include "lyk/wells.hpp"
#include "lyk/fixtures.hpp"

namespace lyk::testgen {

namespace fx = lyk::fixtures;

// Extensions with dim g, dim h <= 2 built from known algebras with an ideal.
inline std::vector<ExtensionSpec> small_extensions(const Field& f) {
  std::vector<ExtensionSpec> out;
  const std::vector<LYAlgebra> parts = {fx::abelian(f, 1), fx::abelian(f, 2), fx::affine_line(f)};
  for (const auto& a : parts)
    for (const auto& b : parts) {
      std::vector<int> ideal;
      for (int k = 0; k < b.dim; ++k) ideal.push_back(a.dim + k);
      out.push_back(fx::quotient_extension(direct_sum(a, b), ideal));
    }
  out.push_back(fx::quotient_extension(fx::heisenberg(f), {2}));
  out.push_back(fx::quotient_extension(fx::heisenberg(f), {1, 2}));
  out.push_back(fx::quotient_extension(fx::affine_line(f), {0}));
  out.push_back(fx::quotient_extension(semidirect_product(adjoint(fx::affine_line(f))), {2, 3}));
  out.push_back(fx::quotient_extension(semidirect_product(adjoint(fx::affine_line(f))), {0, 2, 3}));
  return out;
}

// The same extension in random coordinates with a random section.
inline ExtensionSpec scramble(const ExtensionSpec& e, fx::Rng& rng) {
  const Field& f = e.total.field;
  const Matrix P = fx::random_invertible(f, e.total.dim, rng);
  const Matrix Pinv = *inverse(P);
  ExtensionSpec out = e;
  out.total = change_basis(e.total, P);
  out.i = Pinv * e.i;
  out.p = e.p * P;
  out.s = Pinv * e.s + out.i * fx::random_matrix(f, e.h.dim, e.g.dim, rng);
  return out;
}

inline NonAbCocycle random_valid_cocycle(const Field& f, fx::Rng& rng) {
  const auto pool = small_extensions(f);
  const auto& e = pool[rng() % pool.size()];
  return extract_cocycle(scramble(e, rng));
}

// Half valid, half valid with one entry of one map changed.
inline NonAbCocycle random_candidate(const Field& f, fx::Rng& rng) {
  NonAbCocycle c = random_valid_cocycle(f, rng);
  if (rng() % 2) {
    auto maps = c.maps();
    MultiMap* m = maps[rng() % maps.size()];
    if (m->size() > 0) fx::mutate_entry(*m, rng);
  }
  return c;
}

// Changes one off-diagonal coefficient of an alternating map together with its
// partner, so the result still satisfies the vanishing condition.
inline void mutate_alternating(MultiMap& m, fx::Rng& rng) {
  const Field& f = m.field();
  const int n = m.dims_in()[0];
  std::vector<int> t(m.arity());
  do {
    for (int& v : t) v = static_cast<int>(rng() % n);
  } while (t[0] == t[1]);
  const int o = static_cast<int>(rng() % m.dim_out());
  const Scalar d = f.characteristic() == 0 ? f.one() : f.from_int(1 + static_cast<long>(rng() % (f.characteristic() - 1)));
  m.at(o, t) += d;
  std::swap(t[0], t[1]);
  m.at(o, t) -= d;
}

// Degree-1 elements satisfying the vanishing condition: an LY algebra in
// random coordinates, mutated at one coefficient pair half of the time.
inline GradedElement random_degree_one(const Field& f, fx::Rng& rng) {
  const std::vector<LYAlgebra> pool = {fx::abelian(f, 2), fx::affine_line(f), fx::heisenberg(f),
                                       fx::sl2(f), fx::sl2_triple_system(f),
                                       direct_sum(fx::affine_line(f), fx::abelian(f, 1))};
  const LYAlgebra& a = pool[rng() % pool.size()];
  GradedElement pi = GradedElement::of_algebra(change_basis(a, fx::random_invertible(f, a.dim, rng)));
  if (rng() % 2) mutate_alternating(rng() % 2 ? pi.first : pi.second, rng);
  return pi;
}

// (g, r) with dim g, dim V <= 2: a valid representation read off an abelian
// extension, in random V coordinates, with one entry changed half the time.
inline Representation random_rep_candidate(const Field& f, fx::Rng& rng) {
  std::vector<Representation> pool;
  for (const auto& e : small_extensions(f)) {
    if (e.g.dim > 2 || e.h.dim > 2) continue;
    const NonAbCocycle c = extract_cocycle(e);
    if (!c.h.binary.is_zero() || !c.h.ternary.is_zero() || !c.rho.is_zero() || !c.tee.is_zero()) continue;
    Representation r(c.g, c.dh());
    r.mu = c.mu;
    r.theta = c.theta;
    r.dee = c.dee;
    pool.push_back(r);
  }
  pool.push_back(Representation(fx::affine_line(f), 2));
  Representation r = pool[rng() % pool.size()];
  const int n = r.dim_v, G = r.algebra.dim;
  const Matrix P = fx::random_invertible(f, n, rng);
  const Matrix Pi = *inverse(P);
  Representation out(r.algebra, n);
  for (int x = 0; x < G; ++x)
    for (int v = 0; v < n; ++v) {
      out.mu.set_value({x, v}, Pi * r.mu(r.algebra.basis(x), P.column(v)));
      for (int y = 0; y < G; ++y) {
        out.theta.set_value({x, y, v}, Pi * r.theta(r.algebra.basis(x), r.algebra.basis(y), P.column(v)));
        out.dee.set_value({x, y, v}, Pi * r.dee(r.algebra.basis(x), r.algebra.basis(y), P.column(v)));
      }
    }
  if (rng() % 2) {
    const int k = static_cast<int>(rng() % 3);
    fx::mutate_entry(k == 0 ? out.mu : (k == 1 ? out.theta : out.dee), rng);
  }
  return out;
}

// The induced cocycle with the sign of its χ component flipped. In
// characteristic 2 this changes nothing.
inline NonAbCocycle sign_flipped_induced(const NonAbCocycle& c, const AutoPair& pair) {
  NonAbCocycle out = induced_cocycle(c, pair);
  out.chi = c.field().from_int(-1) * out.chi;
  return out;
}

}  // namespace lyk::testgen
