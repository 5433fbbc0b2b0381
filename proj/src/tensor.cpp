#include "lyk/tensor.hpp"

#include <string>

#include "lyk/errors.hpp"

namespace lyk {

namespace {

void check_len(const Vec& a, const Vec& b) {
  if (a.size() != b.size())
    throw DimensionMismatch("vector lengths " + std::to_string(a.size()) + " and " +
                            std::to_string(b.size()));
}

}  // namespace

Vec zeros(const Field& f, int n) { return Vec(static_cast<std::size_t>(n), f.zero()); }

Vec unit(const Field& f, int n, int i) {
  Vec v = zeros(f, n);
  v.at(i) = f.one();
  return v;
}

bool is_zero(const Vec& v) {
  for (const auto& s : v)
    if (!s.is_zero()) return false;
  return true;
}

Vec& operator+=(Vec& a, const Vec& b) {
  check_len(a, b);
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

Vec& operator-=(Vec& a, const Vec& b) {
  check_len(a, b);
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

Vec operator+(Vec a, const Vec& b) { return a += b; }
Vec operator-(Vec a, const Vec& b) { return a -= b; }

Vec operator-(Vec a) {
  for (auto& s : a) s = -s;
  return a;
}

Vec operator*(const Scalar& c, Vec a) {
  for (auto& s : a) s *= c;
  return a;
}

void axpy(Vec& y, const Scalar& c, const Vec& x) {
  check_len(y, x);
  if (c.is_zero()) return;
  for (std::size_t i = 0; i < y.size(); ++i)
    if (!x[i].is_zero()) y[i] += c * x[i];
}

Vec concat(const Vec& a, const Vec& b) {
  Vec r = a;
  r.insert(r.end(), b.begin(), b.end());
  return r;
}

Vec slice(const Vec& v, int begin, int count) {
  if (begin < 0 || count < 0 || static_cast<std::size_t>(begin + count) > v.size())
    throw DimensionMismatch("slice out of range");
  return Vec(v.begin() + begin, v.begin() + begin + count);
}

MultiMap::MultiMap(Field field, std::vector<int> dims_in, int dim_out)
    : field_(field), dims_(std::move(dims_in)), dim_out_(dim_out) {
  if (dim_out_ < 0) throw DimensionMismatch("negative output dimension");
  dom_ = 1;
  for (int d : dims_) {
    if (d < 0) throw DimensionMismatch("negative input dimension");
    dom_ *= static_cast<std::size_t>(d);
  }
  coeffs_.assign(dom_ * static_cast<std::size_t>(dim_out_), field_.zero());
}

std::size_t MultiMap::offset(std::span<const int> in) const {
  if (in.size() != dims_.size())
    throw DimensionMismatch("expected " + std::to_string(dims_.size()) + " indices, got " +
                            std::to_string(in.size()));
  std::size_t off = 0;
  for (std::size_t k = 0; k < dims_.size(); ++k) {
    if (in[k] < 0 || in[k] >= dims_[k]) throw DimensionMismatch("index out of range");
    off = off * dims_[k] + in[k];
  }
  return off;
}

std::vector<int> MultiMap::unravel(std::size_t flat) const {
  std::vector<int> t(dims_.size());
  for (std::size_t k = dims_.size(); k-- > 0;) {
    t[k] = static_cast<int>(flat % dims_[k]);
    flat /= dims_[k];
  }
  return t;
}

Vec MultiMap::value(std::span<const int> in) const {
  std::size_t off = offset(in);
  Vec v;
  v.reserve(dim_out_);
  for (int o = 0; o < dim_out_; ++o) v.push_back(coeffs_[o * dom_ + off]);
  return v;
}

void MultiMap::set_value(std::span<const int> in, const Vec& v) {
  if (static_cast<int>(v.size()) != dim_out_) throw DimensionMismatch("value length");
  std::size_t off = offset(in);
  for (int o = 0; o < dim_out_; ++o) coeffs_[o * dom_ + off] = v[o];
}

Vec MultiMap::eval(std::span<const Vec* const> args) const {
  if (args.size() != dims_.size())
    throw DimensionMismatch("expected " + std::to_string(dims_.size()) + " arguments, got " +
                            std::to_string(args.size()));
  const std::size_t k = dims_.size();
  std::vector<std::vector<int>> nz(k);
  for (std::size_t a = 0; a < k; ++a) {
    const Vec& x = *args[a];
    if (static_cast<int>(x.size()) != dims_[a])
      throw DimensionMismatch("argument " + std::to_string(a) + " has length " +
                              std::to_string(x.size()) + ", expected " +
                              std::to_string(dims_[a]));
    for (int i = 0; i < dims_[a]; ++i)
      if (!x[i].is_zero()) nz[a].push_back(i);
    if (nz[a].empty()) return zeros(field_, dim_out_);
  }
  Vec out = zeros(field_, dim_out_);
  std::vector<std::size_t> pos(k, 0);
  while (true) {
    Scalar c = field_.one();
    std::size_t off = 0;
    for (std::size_t a = 0; a < k; ++a) {
      int i = nz[a][pos[a]];
      c *= (*args[a])[i];
      off = off * dims_[a] + i;
    }
    for (int o = 0; o < dim_out_; ++o) {
      const Scalar& m = coeffs_[o * dom_ + off];
      if (!m.is_zero()) out[o] += c * m;
    }
    std::size_t a = k;
    while (a > 0) {
      --a;
      if (++pos[a] < nz[a].size()) break;
      pos[a] = 0;
      if (a == 0) return out;
    }
    if (k == 0) return out;
  }
}

Vec MultiMap::operator()() const { return eval({}); }

Vec MultiMap::operator()(const Vec& a) const {
  const Vec* p[] = {&a};
  return eval(p);
}

Vec MultiMap::operator()(const Vec& a, const Vec& b) const {
  const Vec* p[] = {&a, &b};
  return eval(p);
}

Vec MultiMap::operator()(const Vec& a, const Vec& b, const Vec& c) const {
  const Vec* p[] = {&a, &b, &c};
  return eval(p);
}

bool MultiMap::is_zero() const {
  for (const auto& s : coeffs_)
    if (!s.is_zero()) return false;
  return true;
}

MultiMap& MultiMap::operator+=(const MultiMap& o) {
  if (!same_shape(o)) throw DimensionMismatch("multimap shapes differ");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  return *this;
}

MultiMap& MultiMap::operator-=(const MultiMap& o) {
  if (!same_shape(o)) throw DimensionMismatch("multimap shapes differ");
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  return *this;
}

MultiMap operator*(const Scalar& c, MultiMap a) {
  for (auto& s : a.coeffs_) s *= c;
  return a;
}

bool operator==(const MultiMap& a, const MultiMap& b) {
  return a.same_shape(b) && a.coeffs_ == b.coeffs_;
}

}  // namespace lyk
