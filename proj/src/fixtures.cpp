#include "lyk/fixtures.hpp"

#include <algorithm>
#include <array>

#include "lyk/errors.hpp"

namespace lyk::fixtures {

LYAlgebra abelian(const Field& f, int n) { return LYAlgebra(f, n); }

LYAlgebra sl2(const Field& f) {
  MultiMap b(f, {3, 3}, 3);
  const int E = 0, F = 1, H = 2;
  auto set = [&](int i, int j, int out, long long c) {
    b.at(out, {i, j}) = f.from_int(c);
    b.at(out, {j, i}) = f.from_int(-c);
  };
  set(H, E, E, 2);
  set(H, F, F, -2);
  set(E, F, H, 1);
  return from_lie(f, 3, b);
}

LYAlgebra affine_line(const Field& f) {
  MultiMap b(f, {2, 2}, 2);
  b.at(0, {0, 1}) = f.one();
  b.at(0, {1, 0}) = -f.one();
  return from_lie(f, 2, b);
}

LYAlgebra heisenberg(const Field& f) {
  MultiMap b(f, {3, 3}, 3);
  b.at(2, {0, 1}) = f.one();
  b.at(2, {1, 0}) = -f.one();
  return from_lie(f, 3, b);
}

LYAlgebra sl2_triple_system(const Field& f) {
  LYAlgebra a = sl2(f);
  return scaled(a, f.zero(), f.one());
}

LYAlgebra sl3_reductive(const Field& f) {
  using M3 = std::array<std::array<long long, 3>, 3>;
  const std::array<std::pair<int, int>, 6> units = {
      {{0, 1}, {1, 2}, {0, 2}, {1, 0}, {2, 1}, {2, 0}}};
  auto unit_matrix = [&](int k) {
    M3 m{};
    m[units[k].first][units[k].second] = 1;
    return m;
  };
  auto mul = [](const M3& a, const M3& b) {
    M3 c{};
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        for (int k = 0; k < 3; ++k) c[i][j] += a[i][k] * b[k][j];
    return c;
  };
  auto comm = [&](const M3& a, const M3& b) {
    M3 x = mul(a, b), y = mul(b, a);
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) x[i][j] -= y[i][j];
    return x;
  };
  auto off_diag = [&](const M3& m) {
    Vec v = zeros(f, 6);
    for (int k = 0; k < 6; ++k) v[k] = f.from_int(m[units[k].first][units[k].second]);
    return v;
  };
  auto diag = [](M3 m) {
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        if (i != j) m[i][j] = 0;
    return m;
  };
  LYAlgebra a(f, 6);
  for (int i = 0; i < 6; ++i)
    for (int j = 0; j < 6; ++j) {
      const M3 c = comm(unit_matrix(i), unit_matrix(j));
      a.binary.set_value({i, j}, off_diag(c));
      for (int k = 0; k < 6; ++k) a.ternary.set_value({i, j, k}, off_diag(comm(diag(c), unit_matrix(k))));
    }
  return a;
}

MultiMap lie_semidirect(const Field& f, const MultiMap& l, const Matrix& d) {
  const int n = l.dim_out(), N = n + 1;
  MultiMap b(f, {N, N}, N);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int o = 0; o < n; ++o) b.at(o, {i, j}) = l.at(o, {i, j});
  for (int i = 0; i < n; ++i)
    for (int o = 0; o < n; ++o) {
      b.at(o, {n, i}) = d.at(o, i);
      b.at(o, {i, n}) = -d.at(o, i);
    }
  return b;
}

NonAbCocycle semidirect_cocycle(const Representation& r) {
  r.check_shape();
  NonAbCocycle c(r.algebra, LYAlgebra(r.field(), r.dim_v));
  c.mu = r.mu;
  c.theta = r.theta;
  c.dee = r.dee;
  return c;
}

ExtensionSpec quotient_extension(const LYAlgebra& total, const std::vector<int>& ideal) {
  const Field& f = total.field;
  const int n = total.dim, H = static_cast<int>(ideal.size()), G = n - H;
  std::vector<int> order;
  for (int k = 0; k < n; ++k)
    if (std::find(ideal.begin(), ideal.end(), k) == ideal.end()) order.push_back(k);
  order.insert(order.end(), ideal.begin(), ideal.end());
  if (static_cast<int>(order.size()) != n) throw InvalidInput("ideal indices repeat");
  Matrix perm(f, n, n);
  for (int k = 0; k < n; ++k) perm.at(order[k], k) = f.one();
  LYAlgebra t = change_basis(total, perm);
  LYAlgebra g(f, G), h(f, H);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      for (int k = 0; k < n; ++k) {
        Vec v = t.ternary.value({i, j, k});
        if (i < G && j < G && k < G) g.ternary.set_value({i, j, k}, slice(v, 0, G));
        if (i >= G && j >= G && k >= G) h.ternary.set_value({i - G, j - G, k - G}, slice(v, G, H));
      }
      Vec v = t.binary.value({i, j});
      if (i < G && j < G) g.binary.set_value({i, j}, slice(v, 0, G));
      if (i >= G && j >= G) h.binary.set_value({i - G, j - G}, slice(v, G, H));
    }
  ExtensionSpec e{g, h, t, Matrix(f, n, H), Matrix(f, G, n), Matrix(f, n, G)};
  for (int j = 0; j < H; ++j) e.i.at(G + j, j) = f.one();
  for (int j = 0; j < G; ++j) {
    e.p.at(j, j) = f.one();
    e.s.at(j, j) = f.one();
  }
  verify_extension(e);
  return e;
}

NonAbCocycle broken_derivation_cocycle(const Field& f) {
  NonAbCocycle c(abelian(f, 2), affine_line(f));
  c.dee.at(1, {0, 1, 1}) = f.one();
  c.dee.at(1, {1, 0, 1}) = -f.one();
  return c;
}

NonAbCocycle random_cocycle(const LYAlgebra& g, const LYAlgebra& h, Rng& rng) {
  NonAbCocycle c(g, h);
  for (MultiMap* m : c.maps()) *m = random_multimap(c.field(), m->dims_in(), m->dim_out(), rng);
  return c;
}

Scalar random_scalar(const Field& f, Rng& rng) {
  if (f.is_prime()) {
    std::uniform_int_distribution<std::uint32_t> d(0, f.characteristic() - 1);
    return f.element(d(rng));
  }
  std::uniform_int_distribution<int> d(-3, 3);
  Scalar s = f.from_int(d(rng));
  if (std::uniform_int_distribution<int>(0, 7)(rng) == 0) s /= f.from_int(2);
  return s;
}

Matrix random_matrix(const Field& f, int rows, int cols, Rng& rng) {
  Matrix m(f, rows, cols);
  for (int r = 0; r < rows; ++r)
    for (int c = 0; c < cols; ++c) m.at(r, c) = random_scalar(f, rng);
  return m;
}

Matrix random_invertible(const Field& f, int n, Rng& rng) {
  while (true) {
    Matrix m = random_matrix(f, n, n, rng);
    if (rank(m) == n) return m;
  }
}

MultiMap random_multimap(const Field& f, std::vector<int> dims_in, int dim_out, Rng& rng) {
  MultiMap m(f, std::move(dims_in), dim_out);
  for (auto& s : m.coeffs()) s = random_scalar(f, rng);
  return m;
}

std::pair<int, std::size_t> mutate_entry(MultiMap& m, Rng& rng) {
  std::uniform_int_distribution<std::size_t> pick(0, m.size() - 1);
  std::size_t k = pick(rng);
  Scalar old = m.coeffs()[k];
  Scalar s = old;
  while (s == old) s = random_scalar(m.field(), rng);
  if (s == old) s = old + m.field().one();
  m.coeffs()[k] = s;
  return {static_cast<int>(k / m.domain_size()), k % m.domain_size()};
}

}  // namespace lyk::fixtures
