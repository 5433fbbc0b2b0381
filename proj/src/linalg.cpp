#include "lyk/linalg.hpp"

#include <string>

#include "lyk/errors.hpp"

namespace lyk {

Matrix::Matrix(Field field, int rows, int cols) : field_(field), rows_(rows), cols_(cols) {
  if (rows < 0 || cols < 0) throw DimensionMismatch("negative matrix size");
  data_.assign(static_cast<std::size_t>(rows) * cols, field_.zero());
}

Matrix Matrix::identity(const Field& f, int n) {
  Matrix m(f, n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = f.one();
  return m;
}

Matrix Matrix::from_columns(const Field& f, int rows, const std::vector<Vec>& cols) {
  Matrix m(f, rows, static_cast<int>(cols.size()));
  for (int c = 0; c < m.cols_; ++c) m.set_column(c, cols[c]);
  return m;
}

Matrix Matrix::from_rows(const Field& f, int cols, const std::vector<Vec>& rows) {
  Matrix m(f, static_cast<int>(rows.size()), cols);
  for (int r = 0; r < m.rows_; ++r) {
    if (static_cast<int>(rows[r].size()) != cols) throw DimensionMismatch("row length");
    for (int c = 0; c < cols; ++c) m.at(r, c) = rows[r][c];
  }
  return m;
}

Matrix Matrix::from_multimap(const MultiMap& mm) {
  if (mm.arity() != 1) throw DimensionMismatch("linear map must have arity 1");
  Matrix m(mm.field(), mm.dim_out(), mm.dims_in()[0]);
  m.data_ = mm.coeffs();
  return m;
}

MultiMap Matrix::to_multimap() const {
  MultiMap mm(field_, {cols_}, rows_);
  mm.coeffs() = data_;
  return mm;
}

Vec Matrix::row(int r) const {
  return Vec(data_.begin() + static_cast<std::size_t>(r) * cols_,
             data_.begin() + static_cast<std::size_t>(r + 1) * cols_);
}

Vec Matrix::column(int c) const {
  Vec v;
  v.reserve(rows_);
  for (int r = 0; r < rows_; ++r) v.push_back(at(r, c));
  return v;
}

void Matrix::set_column(int c, const Vec& v) {
  if (static_cast<int>(v.size()) != rows_) throw DimensionMismatch("column length");
  for (int r = 0; r < rows_; ++r) at(r, c) = v[r];
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c) t.at(c, r) = at(r, c);
  return t;
}

bool Matrix::is_zero() const {
  for (const auto& s : data_)
    if (!s.is_zero()) return false;
  return true;
}

bool Matrix::is_identity() const {
  if (rows_ != cols_) return false;
  for (int r = 0; r < rows_; ++r)
    for (int c = 0; c < cols_; ++c)
      if (r == c ? !at(r, c).is_one() : !at(r, c).is_zero()) return false;
  return true;
}

Vec Matrix::operator*(const Vec& v) const {
  if (static_cast<int>(v.size()) != cols_) throw DimensionMismatch("matrix-vector size");
  Vec out = zeros(field_, rows_);
  for (int c = 0; c < cols_; ++c) {
    if (v[c].is_zero()) continue;
    for (int r = 0; r < rows_; ++r)
      if (!at(r, c).is_zero()) out[r] += at(r, c) * v[c];
  }
  return out;
}

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product size");
  Matrix m(a.field_, a.rows_, b.cols_);
  for (int r = 0; r < a.rows_; ++r)
    for (int k = 0; k < a.cols_; ++k) {
      const Scalar& x = a.at(r, k);
      if (x.is_zero()) continue;
      for (int c = 0; c < b.cols_; ++c)
        if (!b.at(k, c).is_zero()) m.at(r, c) += x * b.at(k, c);
    }
  return m;
}

Matrix operator+(Matrix a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionMismatch("matrix sum size");
  for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] += b.data_[i];
  return a;
}

Matrix operator-(Matrix a, const Matrix& b) {
  if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw DimensionMismatch("matrix sum size");
  for (std::size_t i = 0; i < a.data_.size(); ++i) a.data_[i] -= b.data_[i];
  return a;
}

Matrix operator-(Matrix a) {
  for (auto& s : a.data_) s = -s;
  return a;
}

Matrix operator*(const Scalar& c, Matrix a) {
  for (auto& s : a.data_) s *= c;
  return a;
}

bool operator==(const Matrix& a, const Matrix& b) {
  return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::vector<std::uint32_t> Matrix::key() const {
  std::vector<std::uint32_t> k;
  k.reserve(data_.size());
  for (const auto& s : data_) k.push_back(s.residue_value());
  return k;
}

namespace {

Echelon echelon_prime(const Matrix& m) {
  Matrix a = m;
  const int R = a.rows(), C = a.cols();
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < C && r < R; ++c) {
    int p = -1;
    for (int i = r; i < R; ++i)
      if (!a.at(i, c).is_zero()) {
        p = i;
        break;
      }
    if (p < 0) continue;
    if (p != r)
      for (int j = 0; j < C; ++j) std::swap(a.at(p, j), a.at(r, j));
    Scalar inv = a.at(r, c).inverse();
    for (int j = c; j < C; ++j) a.at(r, j) *= inv;
    for (int i = 0; i < R; ++i) {
      if (i == r || a.at(i, c).is_zero()) continue;
      Scalar f = a.at(i, c);
      for (int j = c; j < C; ++j)
        if (!a.at(r, j).is_zero()) a.at(i, j) -= f * a.at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return {a, pivots};
}

void make_primitive(std::vector<mpz_class>& row) {
  mpz_class g = 0;
  for (const auto& x : row) {
    if (x != 0) g = gcd(g, x);
    if (g == 1) return;
  }
  if (g > 1)
    for (auto& x : row) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

Echelon echelon_rational(const Matrix& m) {
  const int R = m.rows(), C = m.cols();
  // Clear denominators row by row.
  std::vector<std::vector<mpz_class>> a(R, std::vector<mpz_class>(C));
  for (int i = 0; i < R; ++i) {
    mpz_class l = 1;
    for (int j = 0; j < C; ++j) l = lcm(l, m.at(i, j).rational_value().get_den());
    for (int j = 0; j < C; ++j) {
      const mpq_class& q = m.at(i, j).rational_value();
      a[i][j] = q.get_num() * (l / q.get_den());
    }
    make_primitive(a[i]);
  }
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < C && r < R; ++c) {
    int p = -1;
    for (int i = r; i < R; ++i)
      if (a[i][c] != 0) {
        p = i;
        break;
      }
    if (p < 0) continue;
    std::swap(a[p], a[r]);
    if (a[r][c] < 0)
      for (auto& x : a[r]) x = -x;
    const mpz_class piv = a[r][c];
    for (int i = 0; i < R; ++i) {
      if (i == r || a[i][c] == 0) continue;
      const mpz_class f = a[i][c];
      for (int j = 0; j < C; ++j) a[i][j] = piv * a[i][j] - f * a[r][j];
      make_primitive(a[i]);
    }
    pivots.push_back(c);
    ++r;
  }
  Matrix out(m.field(), R, C);
  for (int i = 0; i < r; ++i) {
    const mpz_class& piv = a[i][pivots[i]];
    for (int j = 0; j < C; ++j)
      if (a[i][j] != 0) out.at(i, j) = Scalar::rational(mpq_class(a[i][j], piv));
  }
  return {out, pivots};
}

}  // namespace

Echelon echelon(const Matrix& m) {
  return m.field().is_rational() ? echelon_rational(m) : echelon_prime(m);
}

int rank(const Matrix& m) { return echelon(m).rank(); }

std::vector<Vec> kernel_basis(const Matrix& m) {
  Echelon e = echelon(m);
  const int C = m.cols();
  std::vector<int> pivot_row(C, -1);
  for (int i = 0; i < e.rank(); ++i) pivot_row[e.pivots[i]] = i;
  std::vector<Vec> basis;
  for (int f = 0; f < C; ++f) {
    if (pivot_row[f] >= 0) continue;
    Vec v = zeros(m.field(), C);
    v[f] = m.field().one();
    for (int i = 0; i < e.rank(); ++i) v[e.pivots[i]] = -e.rref.at(i, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::vector<Vec> image_basis(const Matrix& m) {
  Echelon e = echelon(m.transpose());
  std::vector<Vec> basis;
  for (int i = 0; i < e.rank(); ++i) basis.push_back(e.rref.row(i));
  return basis;
}

int rank_of(const Field& f, int dim, const std::vector<Vec>& vectors) {
  if (vectors.empty()) return 0;
  return rank(Matrix::from_rows(f, dim, vectors));
}

bool in_span(const Field& f, int dim, const std::vector<Vec>& basis, const Vec& v) {
  std::vector<Vec> ext = basis;
  ext.push_back(v);
  return rank_of(f, dim, ext) == rank_of(f, dim, basis);
}

int quotient_dim(const Field& f, int dim, const std::vector<Vec>& space,
                 const std::vector<Vec>& subspace) {
  for (const auto& v : space)
    if (static_cast<int>(v.size()) != dim) throw DimensionMismatch("space vector length");
  for (const auto& v : subspace)
    if (static_cast<int>(v.size()) != dim) throw DimensionMismatch("subspace vector length");
  int rs = rank_of(f, dim, space);
  std::vector<Vec> both = space;
  both.insert(both.end(), subspace.begin(), subspace.end());
  if (rank_of(f, dim, both) != rs) throw NotASubspace("subspace is not contained in space");
  return rs - rank_of(f, dim, subspace);
}

std::optional<Vec> solve(const Matrix& a, const Vec& b) {
  Matrix rhs(a.field(), a.rows(), 1);
  rhs.set_column(0, b);
  auto x = solve(a, rhs);
  if (!x) return std::nullopt;
  return x->column(0);
}

std::optional<Matrix> solve(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw DimensionMismatch("solve: row counts differ");
  const int R = a.rows(), C = a.cols(), K = b.cols();
  Matrix aug(a.field(), R, C + K);
  for (int i = 0; i < R; ++i) {
    for (int j = 0; j < C; ++j) aug.at(i, j) = a.at(i, j);
    for (int j = 0; j < K; ++j) aug.at(i, C + j) = b.at(i, j);
  }
  Echelon e = echelon(aug);
  Matrix x(a.field(), C, K);
  for (int i = 0; i < e.rank(); ++i) {
    if (e.pivots[i] >= C) return std::nullopt;
    for (int j = 0; j < K; ++j) x.at(e.pivots[i], j) = e.rref.at(i, C + j);
  }
  return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows() != m.cols()) return std::nullopt;
  if (rank(m) != m.rows()) return std::nullopt;
  return solve(m, Matrix::identity(m.field(), m.rows()));
}

}  // namespace lyk
