#pragma once

#include <initializer_list>
#include <span>
#include <vector>

#include "lyk/field.hpp"

namespace lyk {

using Vec = std::vector<Scalar>;

Vec zeros(const Field& f, int n);
Vec unit(const Field& f, int n, int i);
bool is_zero(const Vec& v);
Vec operator+(Vec a, const Vec& b);
Vec operator-(Vec a, const Vec& b);
Vec operator-(Vec a);
Vec operator*(const Scalar& c, Vec a);
Vec& operator+=(Vec& a, const Vec& b);
Vec& operator-=(Vec& a, const Vec& b);
// y += c * x
void axpy(Vec& y, const Scalar& c, const Vec& x);
// Concatenation, used for direct sums g ⊕ h.
Vec concat(const Vec& a, const Vec& b);
Vec slice(const Vec& v, int begin, int count);

// Dense multilinear map V_1 ⊗ ... ⊗ V_k -> W. Coefficients are stored with
// index order (out, in_1, ..., in_k), row-major.
class MultiMap {
 public:
  MultiMap() = default;
  MultiMap(Field field, std::vector<int> dims_in, int dim_out);

  const Field& field() const { return field_; }
  int arity() const { return static_cast<int>(dims_.size()); }
  const std::vector<int>& dims_in() const { return dims_; }
  int dim_out() const { return dim_out_; }
  std::size_t domain_size() const { return dom_; }
  std::size_t size() const { return coeffs_.size(); }

  Scalar& at(int out, std::span<const int> in) { return coeffs_[out * dom_ + offset(in)]; }
  const Scalar& at(int out, std::span<const int> in) const {
    return coeffs_[out * dom_ + offset(in)];
  }
  Scalar& at(int out, std::initializer_list<int> in) {
    return at(out, std::span<const int>(in.begin(), in.size()));
  }
  const Scalar& at(int out, std::initializer_list<int> in) const {
    return at(out, std::span<const int>(in.begin(), in.size()));
  }
  // Coefficient by flat domain index (ravelled input tuple).
  Scalar& at_flat(int out, std::size_t in_flat) { return coeffs_[out * dom_ + in_flat]; }
  const Scalar& at_flat(int out, std::size_t in_flat) const {
    return coeffs_[out * dom_ + in_flat];
  }

  // Value on a tuple of basis vectors.
  Vec value(std::span<const int> in) const;
  Vec value(std::initializer_list<int> in) const {
    return value(std::span<const int>(in.begin(), in.size()));
  }
  void set_value(std::span<const int> in, const Vec& v);
  void set_value(std::initializer_list<int> in, const Vec& v) {
    set_value(std::span<const int>(in.begin(), in.size()), v);
  }

  // Multilinear evaluation; zero coordinates of the arguments are skipped.
  Vec eval(std::span<const Vec* const> args) const;
  Vec operator()() const;
  Vec operator()(const Vec& a) const;
  Vec operator()(const Vec& a, const Vec& b) const;
  Vec operator()(const Vec& a, const Vec& b, const Vec& c) const;

  bool is_zero() const;
  std::vector<Scalar>& coeffs() { return coeffs_; }
  const std::vector<Scalar>& coeffs() const { return coeffs_; }

  MultiMap& operator+=(const MultiMap& o);
  MultiMap& operator-=(const MultiMap& o);
  friend MultiMap operator+(MultiMap a, const MultiMap& b) { return a += b; }
  friend MultiMap operator-(MultiMap a, const MultiMap& b) { return a -= b; }
  friend MultiMap operator*(const Scalar& c, MultiMap a);
  friend bool operator==(const MultiMap& a, const MultiMap& b);

  // Ravel/unravel of input tuples.
  std::size_t offset(std::span<const int> in) const;
  std::vector<int> unravel(std::size_t flat) const;

  bool same_shape(const MultiMap& o) const {
    return dims_ == o.dims_ && dim_out_ == o.dim_out_ && field_ == o.field_;
  }

 private:
  Field field_;
  std::vector<int> dims_;
  int dim_out_ = 0;
  std::size_t dom_ = 1;
  std::vector<Scalar> coeffs_;
};

// All tuples in [0,n)^k in lexicographic order, visited by a callback.
template <class F>
void for_each_tuple(int n, int k, F&& f) {
  std::vector<int> t(k, 0);
  if (n == 0 && k > 0) return;
  while (true) {
    f(std::span<const int>(t));
    int pos = k - 1;
    while (pos >= 0 && ++t[pos] == n) t[pos--] = 0;
    if (pos < 0) return;
  }
}

}  // namespace lyk
