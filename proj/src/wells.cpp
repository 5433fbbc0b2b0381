#include "lyk/wells.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "cocycle_ops.hpp"
#include "lyk/errors.hpp"
#include "lyk/representation.hpp"

namespace lyk {

namespace {

using Key = std::vector<std::uint32_t>;

void check_pair(const NonAbCocycle& c, const AutoPair& pr) {
  const int G = c.dg(), H = c.dh();
  if (pr.alpha.rows() != G || pr.alpha.cols() != G || pr.beta.rows() != H || pr.beta.cols() != H)
    throw DimensionMismatch("automorphism pair has the wrong size");
  if (!(pr.alpha.field() == c.field()) || !(pr.beta.field() == c.field()))
    throw FieldMismatch("automorphism pair is over a different field");
}

void check_phi(const NonAbCocycle& c, const Matrix& phi) {
  if (phi.rows() != c.dh() || phi.cols() != c.dg())
    throw DimensionMismatch("phi must be " + std::to_string(c.dh()) + "x" + std::to_string(c.dg()));
  if (!(phi.field() == c.field())) throw FieldMismatch("phi is over a different field");
}

std::vector<Vec> images(const Matrix& m, const std::vector<Vec>& basis) {
  std::vector<Vec> out;
  for (const auto& v : basis) out.push_back(m * v);
  return out;
}

Matrix inverse_or_throw(const Matrix& m, const char* what) {
  auto inv = inverse(m);
  if (!inv) throw InvalidInput(std::string(what) + " is not invertible");
  return *inv;
}

std::uint64_t checked_count(const Field& f, int entries, std::uint64_t budget, const char* what) {
  const std::uint64_t n = candidate_count(f, entries, budget);
  if (n > budget)
    throw BudgetExceeded(std::string(what) + " needs more than " + std::to_string(budget) + " candidates");
  return n;
}

Key pair_key(const AutoPair& p) {
  Key k = p.alpha.key();
  Key b = p.beta.key();
  k.insert(k.end(), b.begin(), b.end());
  return k;
}

// Basis matrix [s | i] of the total space.
Matrix adapted_basis(const ExtensionSpec& e) {
  const int G = e.g.dim, H = e.h.dim;
  Matrix b(e.total.field, G + H, G + H);
  for (int c = 0; c < G; ++c) b.set_column(c, e.s.column(c));
  for (int c = 0; c < H; ++c) b.set_column(G + c, e.i.column(c));
  return b;
}

template <class T>
std::vector<T> collect(const std::vector<std::optional<T>>& v) {
  std::vector<T> out;
  for (const auto& x : v)
    if (x) out.push_back(*x);
  return out;
}

}  // namespace

Report verify_pair(const LYAlgebra& g, const LYAlgebra& h, const AutoPair& pair) {
  Report r;
  r.merge(verify_automorphism(g, pair.alpha), "alpha:");
  r.merge(verify_automorphism(h, pair.beta), "beta:");
  return r;
}

// ------------------------------------------------------------ extensibility

Report check_extensible(const NonAbCocycle& c, const AutoPair& pr, const Matrix& phi,
                        const CheckOptions& opts) {
  c.check_shape();
  check_pair(c, pr);
  check_phi(c, phi);
  detail::CocycleOps o(c);
  const int G = c.dg(), H = c.dh();
  const Matrix& A = pr.alpha;
  const Matrix& B = pr.beta;
  const auto& e = o.e;
  const auto& f = o.f;
  const auto ax = images(A, e), px = images(phi, e), bf = images(B, f);
  std::vector<IdentityFamily> fam;
  fam.push_back({"Iam1", {G, G, G}, [&](std::span<const int> t) {
                   const int x = t[0], y = t[1], z = t[2];
                   Vec lhs = B * o.om(e[x], e[y], e[z]) - o.om(ax[x], ax[y], ax[z]);
                   Vec rhs = o.T(ax[z], px[x], px[y]) - o.rho(ax[y], px[x], px[z]) -
                             o.th(ax[y], ax[z], px[x]) + o.rho(ax[x], px[y], px[z]) +
                             o.th(ax[x], ax[z], px[y]) - o.D(ax[x], ax[y], px[z]) +
                             phi * o.gt(e[x], e[y], e[z]) - o.ht(px[x], px[y], px[z]);
                   return lhs == rhs;
                 }});
  fam.push_back({"Iam2", {G, G}, [&](std::span<const int> t) {
                   const int x = t[0], y = t[1];
                   Vec lhs = B * o.chi(e[x], e[y]) - o.chi(ax[x], ax[y]);
                   Vec rhs = o.hb(px[x], px[y]) + phi * o.gb(e[x], e[y]) - o.mu(ax[x], px[y]) +
                             o.mu(ax[y], px[x]);
                   return lhs == rhs;
                 }});
  fam.push_back({"Iam3", {G, G, H}, [&](std::span<const int> t) {
                   const int x = t[0], y = t[1], a = t[2];
                   Vec lhs = B * o.th(e[x], e[y], f[a]) - o.th(ax[x], ax[y], bf[a]);
                   Vec rhs = o.ht(bf[a], px[x], px[y]) - o.T(ax[y], bf[a], px[x]) +
                             o.rho(ax[x], bf[a], px[y]);
                   return lhs == rhs;
                 }});
  fam.push_back({"Iam4", {G, G, H}, [&](std::span<const int> t) {
                   const int x = t[0], y = t[1], a = t[2];
                   Vec lhs = B * o.D(e[x], e[y], f[a]) - o.D(ax[x], ax[y], bf[a]);
                   Vec rhs = o.ht(px[x], px[y], bf[a]) - o.rho(ax[x], px[y], bf[a]) +
                             o.rho(ax[y], px[x], bf[a]);
                   return lhs == rhs;
                 }});
  fam.push_back({"Iam5", {G, H, H}, [&](std::span<const int> t) {
                   const int x = t[0], a = t[1], b = t[2];
                   Vec lhs = B * o.rho(e[x], f[a], f[b]) - o.rho(ax[x], bf[a], bf[b]);
                   return lhs == o.ht(bf[a], px[x], bf[b]);
                 }});
  fam.push_back({"Iam6", {G, H, H}, [&](std::span<const int> t) {
                   const int x = t[0], a = t[1], b = t[2];
                   Vec lhs = B * o.T(e[x], f[a], f[b]) - o.T(ax[x], bf[a], bf[b]);
                   return lhs == o.ht(bf[b], bf[a], px[x]);
                 }});
  fam.push_back({"Iam7", {G, H}, [&](std::span<const int> t) {
                   const int x = t[0], a = t[1];
                   Vec lhs = B * o.mu(e[x], f[a]) - o.mu(ax[x], bf[a]);
                   return lhs == o.hb(bf[a], px[x]);
                 }});
  return run_families(fam, opts);
}

Report check_extensible(const ExtensionSpec& e, const AutoPair& pair, const Matrix& phi,
                        const CheckOptions& opts) {
  return check_extensible(extract_cocycle(e), pair, phi, opts);
}

Matrix lift_automorphism(const ExtensionSpec& e, const AutoPair& pair, const Matrix& phi) {
  const NonAbCocycle c = extract_cocycle(e);
  if (!check_extensible(c, pair, phi).ok())
    throw NotExtensible("(Iam1)-(Iam7) fail for the given phi");
  const Matrix t = retraction(e);
  Matrix gamma = e.i * pair.beta * t - e.i * phi * e.p + e.s * pair.alpha * e.p;
  if (!verify_automorphism(e.total, gamma).ok())
    throw InternalInconsistency("lifted map is not an automorphism");
  return gamma;
}

NonAbCocycle induced_cocycle(const NonAbCocycle& c, const AutoPair& pr) {
  c.check_shape();
  check_pair(c, pr);
  const int G = c.dg(), H = c.dh();
  const Matrix ai = inverse_or_throw(pr.alpha, "alpha");
  const Matrix bi = inverse_or_throw(pr.beta, "beta");
  const Matrix& B = pr.beta;
  detail::CocycleOps o(c);
  const auto ax = images(ai, o.e), bf = images(bi, o.f);
  NonAbCocycle out = c;
  for (int x = 0; x < G; ++x) {
    for (int a = 0; a < H; ++a) {
      out.mu.set_value({x, a}, B * o.mu(ax[x], bf[a]));
      for (int b = 0; b < H; ++b) {
        out.rho.set_value({x, a, b}, B * o.rho(ax[x], bf[a], bf[b]));
        out.tee.set_value({x, a, b}, B * o.T(ax[x], bf[a], bf[b]));
      }
    }
    for (int y = 0; y < G; ++y) {
      out.chi.set_value({x, y}, B * o.chi(ax[x], ax[y]));
      for (int z = 0; z < G; ++z) out.omega.set_value({x, y, z}, B * o.om(ax[x], ax[y], ax[z]));
      for (int a = 0; a < H; ++a) {
        out.theta.set_value({x, y, a}, B * o.th(ax[x], ax[y], bf[a]));
        out.dee.set_value({x, y, a}, B * o.D(ax[x], ax[y], bf[a]));
      }
    }
  }
  return out;
}

std::string to_string(ExtensibilitySearch::Status s) {
  switch (s) {
    case ExtensibilitySearch::Status::extensible:
      return "extensible";
    case ExtensibilitySearch::Status::not_extensible:
      return "not_extensible";
    case ExtensibilitySearch::Status::undecided:
      return "undecided";
  }
  return "?";
}

std::string to_string(WellsObstruction::Status s) {
  switch (s) {
    case WellsObstruction::Status::trivial:
      return "trivial";
    case WellsObstruction::Status::nontrivial:
      return "nontrivial";
    case WellsObstruction::Status::undecided:
      return "undecided";
  }
  return "?";
}

namespace {

WellsObstruction wells_of_cocycle(const NonAbCocycle& c, const AutoPair& pair, std::uint64_t budget,
                                  Exec exec, const InducedFn& induced) {
  WellsObstruction w;
  w.induced = induced ? induced(c, pair) : induced_cocycle(c, pair);
  w.difference = w.induced;
  auto dst = w.difference.maps();
  auto src = c.maps();
  for (std::size_t k = 0; k < dst.size(); ++k) *dst[k] -= *src[k];
  EquivalenceSearch s;
  try {
    s = search_equivalence(w.induced, c, budget, exec);
  } catch (const BudgetExceeded&) {
    w.status = WellsObstruction::Status::undecided;
    w.method = "budget";
    return w;
  }
  w.method = s.method;
  switch (s.status) {
    case EquivalenceSearch::Status::witness:
      w.status = WellsObstruction::Status::trivial;
      w.psi = s.phi;
      w.phi = *s.phi * pair.alpha;
      break;
    case EquivalenceSearch::Status::not_equivalent:
      w.status = WellsObstruction::Status::nontrivial;
      break;
    case EquivalenceSearch::Status::exhausted:
      w.status = WellsObstruction::Status::undecided;
      break;
  }
  return w;
}

}  // namespace

ExtensibilitySearch find_extending_phi(const NonAbCocycle& c, const AutoPair& pair,
                                       std::uint64_t budget, Exec exec) {
  c.check_shape();
  check_pair(c, pair);
  const Field& f = c.field();
  const int G = c.dg(), H = c.dh();
  ExtensibilitySearch out;
  if (f.is_prime() && candidate_count(f, G * H, budget) <= budget) {
    const std::uint64_t n = candidate_count(f, G * H, budget);
    out.method = "enumeration";
    auto hit = find_first(n, exec, [&](std::uint64_t k) {
      return check_extensible(c, pair, hom_candidate(f, H, G, k), {Exec::serial, 0}).ok();
    });
    if (hit) {
      out.status = ExtensibilitySearch::Status::extensible;
      out.phi = hom_candidate(f, H, G, *hit);
    } else {
      out.status = ExtensibilitySearch::Status::not_extensible;
    }
    return out;
  }
  out.method = "wells";
  WellsObstruction w = wells_of_cocycle(c, pair, budget, exec, {});
  if (w.status == WellsObstruction::Status::trivial) {
    if (!check_extensible(c, pair, *w.phi).ok())
      throw InternalInconsistency("phi recovered from the Wells map fails (Iam1)-(Iam7)");
    out.status = ExtensibilitySearch::Status::extensible;
    out.phi = w.phi;
  } else if (w.status == WellsObstruction::Status::nontrivial) {
    out.status = ExtensibilitySearch::Status::not_extensible;
  }
  return out;
}

WellsObstruction wells_map(const ExtensionSpec& e, const AutoPair& pair, std::uint64_t budget,
                           Exec exec, const InducedFn& induced) {
  return wells_of_cocycle(extract_cocycle(e), pair, budget, exec, induced);
}

// ---------------------------------------------------------------- K and S

bool preserves_h(const ExtensionSpec& e, const Matrix& gamma) {
  const Field& f = e.total.field;
  std::vector<Vec> ib;
  for (int c = 0; c < e.h.dim; ++c) ib.push_back(e.i.column(c));
  for (const auto& v : ib)
    if (!in_span(f, e.total.dim, ib, gamma * v)) return false;
  return true;
}

AutoPair restriction_map_K(const ExtensionSpec& e, const Matrix& gamma) {
  if (gamma.rows() != e.total.dim || gamma.cols() != e.total.dim)
    throw DimensionMismatch("gamma must act on the total space");
  if (!preserves_h(e, gamma)) throw NotHPreserving("gamma does not map h into h");
  const Matrix t = retraction(e);
  return {e.p * gamma * e.s, t * gamma * e.i};
}

Report check_z1_nab(const NonAbCocycle& c, const Matrix& phi, const CheckOptions& opts) {
  c.check_shape();
  check_phi(c, phi);
  detail::CocycleOps o(c);
  const int G = c.dg(), H = c.dh();
  const auto& e = o.e;
  const auto& f = o.f;
  const auto px = images(phi, e);
  std::vector<IdentityFamily> fam;
  fam.push_back({"W5.1", {G, H, H}, [&](std::span<const int> t) {
                   const Vec& p = px[t[0]];
                   const Vec &a = f[t[1]], &b = f[t[2]];
                   return is_zero(o.hb(a, p)) && is_zero(o.ht(a, b, p)) && is_zero(o.ht(p, a, b));
                 }});
  fam.push_back({"W5.2", {G, G, H}, [&](std::span<const int> t) {
                   const int x = t[0], y = t[1];
                   const Vec& a = f[t[2]];
                   return is_zero(o.ht(px[x], px[y], a) - o.rho(e[x], px[y], a) + o.rho(e[y], px[x], a));
                 }});
  fam.push_back({"W5.3", {G, G, H}, [&](std::span<const int> t) {
                   const int x = t[0], y = t[1];
                   const Vec& a = f[t[2]];
                   return is_zero(o.ht(a, px[x], px[y]) - o.T(e[y], a, px[x]) + o.rho(e[x], a, px[y]));
                 }});
  fam.push_back({"W5.4", {G, G}, [&](std::span<const int> t) {
                   const int x = t[0], y = t[1];
                   return o.mu(e[x], px[y]) - o.mu(e[y], px[x]) ==
                          phi * o.gb(e[x], e[y]) + o.hb(px[x], px[y]);
                 }});
  fam.push_back({"W5.5", {G, G, G}, [&](std::span<const int> t) {
                   const int x = t[0], y = t[1], z = t[2];
                   Vec lhs = o.T(e[z], px[x], px[y]) - o.rho(e[y], px[x], px[z]) -
                             o.th(e[y], e[z], px[x]) + o.rho(e[x], px[y], px[z]) +
                             o.th(e[x], e[z], px[y]) - o.D(e[x], e[y], px[z]);
                   return lhs == o.ht(px[x], px[y], px[z]) - phi * o.gt(e[x], e[y], e[z]);
                 }});
  return run_families(fam, opts);
}

std::vector<Matrix> z1_nab(const NonAbCocycle& c, std::uint64_t budget, Exec exec) {
  c.check_shape();
  const Field& f = c.field();
  const int G = c.dg(), H = c.dh();
  const std::uint64_t n = checked_count(f, G * H, budget, "Z1_nab enumeration");
  auto hits = map_indices<std::optional<Matrix>>(n, exec, [&](std::uint64_t k) -> std::optional<Matrix> {
    Matrix phi = hom_candidate(f, H, G, k);
    if (check_z1_nab(c, phi, {Exec::serial, 0}).ok()) return phi;
    return std::nullopt;
  });
  return collect(hits);
}

Matrix s_map(const ExtensionSpec& e, const Matrix& gamma) {
  return retraction(e) * (e.s - gamma * e.s);
}

Matrix z1_automorphism(const ExtensionSpec& e, const Matrix& phi) {
  return Matrix::identity(e.total.field, e.total.dim) - e.i * phi * e.p;
}

// ------------------------------------------------------------ enumeration

std::vector<Matrix> enumerate_automorphisms(const LYAlgebra& a, std::uint64_t budget, Exec exec) {
  a.check_shape();
  const int n = a.dim;
  const std::uint64_t count = checked_count(a.field, n * n, budget, "automorphism enumeration");
  auto hits = map_indices<std::optional<Matrix>>(count, exec, [&](std::uint64_t k) -> std::optional<Matrix> {
    Matrix m = hom_candidate(a.field, n, n, k);
    if (rank(m) == n && is_morphism(a, a, m)) return m;
    return std::nullopt;
  });
  return collect(hits);
}

std::vector<Matrix> enumerate_aut_h(const ExtensionSpec& e, std::uint64_t budget, Exec exec) {
  verify_extension(e);
  const Field& f = e.total.field;
  const int G = e.g.dim, H = e.h.dim, n = G + H;
  const std::uint64_t count = checked_count(f, G * G + H * H + G * H, budget, "Aut_h enumeration");
  const Matrix basis = adapted_basis(e);
  const Matrix basis_inv = inverse_or_throw(basis, "adapted basis");
  auto hits = map_indices<std::optional<Matrix>>(count, exec, [&](std::uint64_t k) -> std::optional<Matrix> {
    const std::uint64_t p = f.characteristic();
    Matrix m(f, n, n);
    auto next = [&] {
      Scalar s = f.element(k % p);
      k /= p;
      return s;
    };
    for (int r = 0; r < G; ++r)
      for (int c = 0; c < G; ++c) m.at(r, c) = next();
    for (int r = 0; r < H; ++r)
      for (int c = 0; c < G; ++c) m.at(G + r, c) = next();
    for (int r = 0; r < H; ++r)
      for (int c = 0; c < H; ++c) m.at(G + r, G + c) = next();
    if (rank(m) != n) return std::nullopt;
    Matrix gamma = basis * m * basis_inv;
    if (!is_morphism(e.total, e.total, gamma)) return std::nullopt;
    return gamma;
  });
  return collect(hits);
}

// ------------------------------------------------------------ exactness

SequenceCheck wells_sequence_check(const ExtensionSpec& e, std::uint64_t budget, Exec exec,
                                   const InducedFn& induced) {
  verify_extension(e);
  const Field& f = e.total.field;
  if (!f.is_prime()) throw InvalidInput("the Wells sequence is enumerated over prime fields only");
  const NonAbCocycle c = extract_cocycle(e);
  SequenceCheck out;
  Report& r = out.report;
  r.note("Z1_nab -> Aut_h checked as injectivity of phi |-> gamma_phi (Z1_nab is a pointed set)");

  const auto aut_g = enumerate_automorphisms(e.g, budget, exec);
  const auto aut_hh = enumerate_automorphisms(e.h, budget, exec);
  const auto aut_h = enumerate_aut_h(e, budget, exec);
  const auto aut_total = enumerate_automorphisms(e.total, budget, exec);
  out.aut_h = aut_h.size();
  out.aut_total = aut_total.size();
  out.pairs = aut_g.size() * aut_hh.size();

  const Matrix Ig = Matrix::identity(f, e.g.dim), Ih = Matrix::identity(f, e.h.dim);
  const AutoPair unit{Ig, Ih};

  // Ker K inside Aut_h, Im H from the full automorphism group.
  std::vector<AutoPair> k_of(aut_h.size());
  std::set<Key> ker_k, im_h, im_k;
  std::vector<int> ker_list;
  for (std::size_t j = 0; j < aut_h.size(); ++j) {
    k_of[j] = restriction_map_K(e, aut_h[j]);
    im_k.insert(pair_key(k_of[j]));
    if (k_of[j] == unit) {
      ker_k.insert(aut_h[j].key());
      ker_list.push_back(static_cast<int>(j));
    }
  }
  std::set<Key> h_seen;
  for (std::size_t j = 0; j < aut_total.size(); ++j) {
    const Matrix& gm = aut_total[j];
    if (!preserves_h(e, gm) || !(restriction_map_K(e, gm) == unit)) continue;
    if (!h_seen.insert(gm.key()).second) r.add("H.injective", {static_cast<int>(j)});
    im_h.insert(gm.key());
  }
  out.ker_k = ker_k.size();
  out.im_h = im_h.size();
  if (ker_k != im_h) r.add("KerK=ImH", {});

  // K is a homomorphism (on all products when small, else on a prefix).
  const std::size_t lim = std::min<std::size_t>(aut_h.size(), 48);
  for (std::size_t a = 0; a < lim; ++a)
    for (std::size_t b = 0; b < lim; ++b) {
      AutoPair ab = restriction_map_K(e, aut_h[a] * aut_h[b]);
      AutoPair want{k_of[a].alpha * k_of[b].alpha, k_of[a].beta * k_of[b].beta};
      if (!(ab == want)) r.add("K.hom", {static_cast<int>(a), static_cast<int>(b)});
    }

  // Ker W against Im K.
  std::set<Key> ker_w;
  for (std::size_t a = 0; a < aut_g.size(); ++a)
    for (std::size_t b = 0; b < aut_hh.size(); ++b) {
      const AutoPair pr{aut_g[a], aut_hh[b]};
      WellsObstruction w = wells_of_cocycle(c, pr, budget, exec, induced);
      if (w.status == WellsObstruction::Status::undecided)
        throw BudgetExceeded("Wells map undecided within budget");
      if (w.status == WellsObstruction::Status::trivial) ker_w.insert(pair_key(pr));
    }
  out.im_k = im_k.size();
  out.ker_w = ker_w.size();
  if (ker_w != im_k) r.add("KerW=ImK", {});

  // Z1_nab and the map S on Ker K.
  const auto z1 = z1_nab(c, budget, exec);
  out.z1 = z1.size();
  std::set<Key> z1_keys, s_image, gamma_image;
  for (const auto& phi : z1) z1_keys.insert(phi.key());
  std::map<Key, int> s_of;
  for (int j : ker_list) {
    Matrix phi = s_map(e, aut_h[j]);
    if (!z1_keys.count(phi.key())) r.add("S.into", {j});
    if (!s_image.insert(phi.key()).second) r.add("S.bijective", {j});
    s_of[aut_h[j].key()] = j;
  }
  if (s_image.size() != z1_keys.size()) r.add("S.bijective", {});
  for (std::size_t k = 0; k < z1.size(); ++k) {
    Matrix gm = z1_automorphism(e, z1[k]);
    if (!gamma_image.insert(gm.key()).second) r.add("Z1.injective", {static_cast<int>(k)});
    if (!ker_k.count(gm.key()) || !(s_map(e, gm) == z1[k])) r.add("S.bijective", {static_cast<int>(k)});
  }
  for (std::size_t a = 0; a < ker_list.size(); ++a)
    for (std::size_t b = 0; b < ker_list.size(); ++b) {
      const Matrix& g1 = aut_h[ker_list[a]];
      const Matrix& g2 = aut_h[ker_list[b]];
      if (!(s_map(e, g1 * g2) == s_map(e, g1) + s_map(e, g2)))
        r.add("S.hom", {ker_list[a], ker_list[b]});
    }
  return out;
}

Report extensibility_agreement(const ExtensionSpec& e, std::uint64_t budget, Exec exec) {
  verify_extension(e);
  const NonAbCocycle c = extract_cocycle(e);
  const auto aut_g = enumerate_automorphisms(e.g, budget, exec);
  const auto aut_hh = enumerate_automorphisms(e.h, budget, exec);
  std::set<Key> im_k;
  for (const auto& gm : enumerate_aut_h(e, budget, exec)) im_k.insert(pair_key(restriction_map_K(e, gm)));
  Report r;
  for (std::size_t a = 0; a < aut_g.size(); ++a)
    for (std::size_t b = 0; b < aut_hh.size(); ++b) {
      const AutoPair pr{aut_g[a], aut_hh[b]};
      const bool by_gamma = im_k.count(pair_key(pr)) > 0;
      ExtensibilitySearch s = find_extending_phi(c, pr, budget, exec);
      if (s.status == ExtensibilitySearch::Status::undecided)
        throw BudgetExceeded("extensibility search undecided within budget");
      const bool by_phi = s.status == ExtensibilitySearch::Status::extensible;
      const std::vector<int> t = {static_cast<int>(a), static_cast<int>(b)};
      if (by_gamma != by_phi) r.add("5.2", t);
      if (by_phi && !verify_automorphism(e.total, lift_automorphism(e, pr, *s.phi)).ok()) r.add("5.2", t);
      WellsObstruction w = wells_of_cocycle(c, pr, budget, exec, {});
      if (w.status == WellsObstruction::Status::undecided)
        throw BudgetExceeded("Wells map undecided within budget");
      if ((w.status == WellsObstruction::Status::trivial) != by_phi) r.add("5.4", t);
    }
  return r;
}

// ----------------------------------------------------------- abelian mode

AbelianMode abelian_mode(const ExtensionSpec& e) {
  const NonAbCocycle c = extract_cocycle(e);
  if (!c.h.binary.is_zero() || !c.h.ternary.is_zero())
    throw NotAbelianExtension("h is not abelian");
  if (!c.rho.is_zero() || !c.tee.is_zero())
    throw NotAbelianExtension("rho or T does not vanish: h is not an abelian ideal");
  AbelianMode m{c, Representation(c.g, c.dh())};
  m.rep.mu = c.mu;
  m.rep.theta = c.theta;
  m.rep.dee = c.dee;
  return m;
}

namespace {

struct AbelianView {
  const NonAbCocycle& c;
  detail::CocycleOps o;
  std::vector<Vec> ax, bf;
  AbelianView(const AbelianMode& m, const AutoPair& pr) : c(m.cocycle), o(m.cocycle) {
    check_pair(c, pr);
    ax = images(pr.alpha, o.e);
    bf = images(pr.beta, o.f);
  }
};

}  // namespace

Report compatible_pair(const AbelianMode& m, const AutoPair& pr, const CheckOptions& opts) {
  AbelianView v(m, pr);
  const auto& o = v.o;
  const int G = v.c.dg(), H = v.c.dh();
  std::vector<IdentityFamily> fam;
  fam.push_back({"C.theta", {G, G, H}, [&](std::span<const int> t) {
                   return pr.beta * o.th(o.e[t[0]], o.e[t[1]], o.f[t[2]]) ==
                          o.th(v.ax[t[0]], v.ax[t[1]], v.bf[t[2]]);
                 }});
  fam.push_back({"C.mu", {G, H}, [&](std::span<const int> t) {
                   return pr.beta * o.mu(o.e[t[0]], o.f[t[1]]) == o.mu(v.ax[t[0]], v.bf[t[1]]);
                 }});
  return run_families(fam, opts);
}

Report dee_compatibility(const AbelianMode& m, const AutoPair& pr, const CheckOptions& opts) {
  AbelianView v(m, pr);
  const auto& o = v.o;
  const int G = v.c.dg(), H = v.c.dh();
  std::vector<IdentityFamily> fam;
  fam.push_back({"C.D", {G, G, H}, [&](std::span<const int> t) {
                   return pr.beta * o.D(o.e[t[0]], o.e[t[1]], o.f[t[2]]) ==
                          o.D(v.ax[t[0]], v.ax[t[1]], v.bf[t[2]]);
                 }});
  return run_families(fam, opts);
}

Report check_extensible_abelian(const AbelianMode& m, const AutoPair& pr, const Matrix& phi,
                                const CheckOptions& opts) {
  AbelianView v(m, pr);
  check_phi(v.c, phi);
  const auto& o = v.o;
  const auto& e = o.e;
  const auto& ax = v.ax;
  const int G = v.c.dg();
  const auto px = images(phi, e);
  std::vector<IdentityFamily> fam;
  fam.push_back({"AEE1", {G, G, G}, [&](std::span<const int> t) {
                   const int x = t[0], y = t[1], z = t[2];
                   Vec lhs = pr.beta * o.om(e[x], e[y], e[z]) - o.om(ax[x], ax[y], ax[z]);
                   Vec rhs = o.th(ax[x], ax[z], px[y]) - o.th(ax[y], ax[z], px[x]) -
                             o.D(ax[x], ax[y], px[z]) + phi * o.gt(e[x], e[y], e[z]);
                   return lhs == rhs;
                 }});
  fam.push_back({"AEE2", {G, G}, [&](std::span<const int> t) {
                   const int x = t[0], y = t[1];
                   Vec lhs = pr.beta * o.chi(e[x], e[y]) - o.chi(ax[x], ax[y]);
                   Vec rhs = o.mu(ax[y], px[x]) - o.mu(ax[x], px[y]) + phi * o.gb(e[x], e[y]);
                   return lhs == rhs;
                 }});
  Report r = run_families(fam, opts);
  Report c = compatible_pair(m, pr, opts);
  for (const auto& [id, n] : c.counts())
    for (std::size_t k = 0; k < n; ++k) r.add("AEE3", {});
  return r;
}

std::optional<Matrix> solve_extending_phi_abelian(const AbelianMode& m, const AutoPair& pr) {
  if (!compatible_pair(m, pr).ok()) return std::nullopt;
  AbelianView v(m, pr);
  const auto& o = v.o;
  const auto& e = o.e;
  const auto& ax = v.ax;
  const Field& f = v.c.field();
  const int G = v.c.dg(), H = v.c.dh();
  // Stack (AEE2) on G² tuples and (AEE1) on G³ tuples; columns for unit φ.
  auto rhs_of = [&](const Matrix& phi) {
    const auto px = images(phi, e);
    Vec out;
    for (int x = 0; x < G; ++x)
      for (int y = 0; y < G; ++y) {
        Vec v2 = o.mu(ax[y], px[x]) - o.mu(ax[x], px[y]) + phi * o.gb(e[x], e[y]);
        out.insert(out.end(), v2.begin(), v2.end());
      }
    for (int x = 0; x < G; ++x)
      for (int y = 0; y < G; ++y)
        for (int z = 0; z < G; ++z) {
          Vec v3 = o.th(ax[x], ax[z], px[y]) - o.th(ax[y], ax[z], px[x]) - o.D(ax[x], ax[y], px[z]) +
                   phi * o.gt(e[x], e[y], e[z]);
          out.insert(out.end(), v3.begin(), v3.end());
        }
    return out;
  };
  Vec target;
  for (int x = 0; x < G; ++x)
    for (int y = 0; y < G; ++y) {
      Vec v2 = pr.beta * o.chi(e[x], e[y]) - o.chi(ax[x], ax[y]);
      target.insert(target.end(), v2.begin(), v2.end());
    }
  for (int x = 0; x < G; ++x)
    for (int y = 0; y < G; ++y)
      for (int z = 0; z < G; ++z) {
        Vec v3 = pr.beta * o.om(e[x], e[y], e[z]) - o.om(ax[x], ax[y], ax[z]);
        target.insert(target.end(), v3.begin(), v3.end());
      }
  std::vector<Vec> cols;
  for (int r = 0; r < H; ++r)
    for (int c = 0; c < G; ++c) {
      Matrix u(f, H, G);
      u.at(r, c) = f.one();
      cols.push_back(rhs_of(u));
    }
  const int rows = static_cast<int>(target.size());
  Matrix a = Matrix::from_columns(f, rows, cols);
  auto x = solve(a, target);
  if (!x) return std::nullopt;
  Matrix phi(f, H, G);
  for (int r = 0; r < H; ++r)
    for (int c = 0; c < G; ++c) phi.at(r, c) = (*x)[r * G + c];
  if (!check_extensible_abelian(m, pr, phi).ok())
    throw InternalInconsistency("linear solution fails (AEE1)-(AEE3)");
  return phi;
}

AbelianWells abelian_wells(const AbelianMode& m, const AutoPair& pr) {
  AbelianWells out;
  out.compatible = compatible_pair(m, pr).ok();
  if (!out.compatible) return out;
  const NonAbCocycle ind = induced_cocycle(m.cocycle, pr);
  CochainPair diff{ind.chi - m.cocycle.chi, ind.omega - m.cocycle.omega};
  MultiMap w;
  if (!is_coboundary(m.rep, diff, &w)) return out;
  // diff = δ₁(w) and induced = shift(original, ψ) with diff = -δ₁(ψ).
  Matrix psi = -Matrix::from_multimap(w);
  if (!check_cocycle_equivalence(ind, m.cocycle, psi).ok())
    throw InternalInconsistency("coboundary witness is not an equivalence");
  out.trivial = true;
  out.psi = psi;
  return out;
}

}  // namespace lyk
