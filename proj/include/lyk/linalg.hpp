#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "lyk/tensor.hpp"

namespace lyk {

// Dense matrix over a Field; also serves as the linear-map type
// (column j is the image of the j-th basis vector).
class Matrix {
 public:
  Matrix() = default;
  Matrix(Field field, int rows, int cols);

  static Matrix identity(const Field& f, int n);
  static Matrix from_columns(const Field& f, int rows, const std::vector<Vec>& cols);
  static Matrix from_rows(const Field& f, int cols, const std::vector<Vec>& rows);
  static Matrix from_multimap(const MultiMap& m);

  const Field& field() const { return field_; }
  int rows() const { return rows_; }
  int cols() const { return cols_; }

  Scalar& at(int r, int c) { return data_[static_cast<std::size_t>(r) * cols_ + c]; }
  const Scalar& at(int r, int c) const { return data_[static_cast<std::size_t>(r) * cols_ + c]; }

  Vec row(int r) const;
  Vec column(int c) const;
  void set_column(int c, const Vec& v);

  Matrix transpose() const;
  MultiMap to_multimap() const;
  bool is_zero() const;
  bool is_identity() const;

  Vec operator*(const Vec& v) const;
  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(Matrix a, const Matrix& b);
  friend Matrix operator-(Matrix a, const Matrix& b);
  friend Matrix operator-(Matrix a);
  friend Matrix operator*(const Scalar& c, Matrix a);
  friend bool operator==(const Matrix& a, const Matrix& b);

  // Residues in row-major order; prime fields only. Used as a set key.
  std::vector<std::uint32_t> key() const;
  const std::vector<Scalar>& data() const { return data_; }

 private:
  Field field_;
  int rows_ = 0;
  int cols_ = 0;
  std::vector<Scalar> data_;
};

// Reduced row echelon form with deterministic pivoting: the pivot in each
// column is the first remaining row with a nonzero entry. Over Q the
// elimination runs on integer rows (fraction-free, rows kept primitive) and
// pivots are normalized to 1 at the end.
struct Echelon {
  Matrix rref;
  std::vector<int> pivots;  // pivot column of each nonzero row
  int rank() const { return static_cast<int>(pivots.size()); }
};

Echelon echelon(const Matrix& m);
int rank(const Matrix& m);
std::vector<Vec> kernel_basis(const Matrix& m);
// Echelonized basis of the column space.
std::vector<Vec> image_basis(const Matrix& m);
int rank_of(const Field& f, int dim, const std::vector<Vec>& vectors);
bool in_span(const Field& f, int dim, const std::vector<Vec>& basis, const Vec& v);
// dim(span(space) / span(subspace)); throws NotASubspace.
int quotient_dim(const Field& f, int dim, const std::vector<Vec>& space,
                 const std::vector<Vec>& subspace);
// A particular solution of a x = b with free variables set to zero.
std::optional<Vec> solve(const Matrix& a, const Vec& b);
// A particular solution of a X = b (matrix right-hand side).
std::optional<Matrix> solve(const Matrix& a, const Matrix& b);
std::optional<Matrix> inverse(const Matrix& m);

}  // namespace lyk
