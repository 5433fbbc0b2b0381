#include "lyk/field.hpp"

#include <stdexcept>

#include "lyk/errors.hpp"

namespace lyk {

namespace {

std::uint32_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint32_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = result * base % m;
    base = base * base % m;
    exp >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

std::uint32_t reduce(const mpz_class& z, std::uint32_t p) {
  mpz_class r = z % p;
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r.get_ui());
}

}  // namespace

bool is_prime_number(std::uint32_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Scalar Scalar::residue(std::uint64_t value, std::uint32_t modulus) {
  Scalar s;
  s.v_ = Residue{static_cast<std::uint32_t>(value % modulus), modulus};
  return s;
}

Scalar Scalar::rational(mpq_class q) {
  Scalar s;
  q.canonicalize();
  s.v_ = std::move(q);
  return s;
}

std::uint32_t Scalar::modulus() const {
  if (auto* r = std::get_if<Residue>(&v_)) return r->modulus;
  return 0;
}

std::uint32_t Scalar::residue_value() const {
  if (auto* r = std::get_if<Residue>(&v_)) return r->value;
  throw FieldMismatch("residue_value called on a rational");
}

const mpq_class& Scalar::rational_value() const {
  if (auto* q = std::get_if<mpq_class>(&v_)) return *q;
  throw FieldMismatch("rational_value called on a residue");
}

bool Scalar::is_zero() const {
  if (auto* r = std::get_if<Residue>(&v_)) return r->value == 0;
  return sgn(std::get<mpq_class>(v_)) == 0;
}

bool Scalar::is_one() const {
  if (auto* r = std::get_if<Residue>(&v_)) return r->value == 1 % r->modulus;
  return std::get<mpq_class>(v_) == 1;
}

void Scalar::check_same(const Scalar& o) const {
  if (modulus() != o.modulus())
    throw FieldMismatch("arithmetic between elements of different fields");
}

Scalar Scalar::operator-() const {
  Scalar s = *this;
  if (auto* r = std::get_if<Residue>(&s.v_)) {
    if (r->value != 0) r->value = r->modulus - r->value;
  } else {
    auto& q = std::get<mpq_class>(s.v_);
    q = -q;
  }
  return s;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  check_same(o);
  if (auto* r = std::get_if<Residue>(&v_)) {
    std::uint64_t v = std::uint64_t(r->value) + std::get<Residue>(o.v_).value;
    if (v >= r->modulus) v -= r->modulus;
    r->value = static_cast<std::uint32_t>(v);
  } else {
    std::get<mpq_class>(v_) += std::get<mpq_class>(o.v_);
  }
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) {
  check_same(o);
  if (auto* r = std::get_if<Residue>(&v_)) {
    std::uint32_t b = std::get<Residue>(o.v_).value;
    r->value = r->value >= b ? r->value - b : r->value + (r->modulus - b);
  } else {
    std::get<mpq_class>(v_) -= std::get<mpq_class>(o.v_);
  }
  return *this;
}

Scalar& Scalar::operator*=(const Scalar& o) {
  check_same(o);
  if (auto* r = std::get_if<Residue>(&v_)) {
    r->value = static_cast<std::uint32_t>(std::uint64_t(r->value) *
                                          std::get<Residue>(o.v_).value % r->modulus);
  } else {
    std::get<mpq_class>(v_) *= std::get<mpq_class>(o.v_);
  }
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) {
  return *this *= o.inverse();
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  if (auto* r = std::get_if<Residue>(&v_))
    return residue(pow_mod(r->value, r->modulus - 2, r->modulus), r->modulus);
  return rational(1 / std::get<mpq_class>(v_));
}

bool operator==(const Scalar& a, const Scalar& b) {
  if (a.modulus() != b.modulus()) return false;
  if (auto* r = std::get_if<Scalar::Residue>(&a.v_))
    return r->value == std::get<Scalar::Residue>(b.v_).value;
  return std::get<mpq_class>(a.v_) == std::get<mpq_class>(b.v_);
}

int Scalar::compare(const Scalar& o) const {
  check_same(o);
  if (auto* r = std::get_if<Residue>(&v_)) {
    std::uint32_t b = std::get<Residue>(o.v_).value;
    return r->value < b ? -1 : (r->value > b ? 1 : 0);
  }
  int c = cmp(std::get<mpq_class>(v_), std::get<mpq_class>(o.v_));
  return c < 0 ? -1 : (c > 0 ? 1 : 0);
}

std::string Scalar::str() const {
  if (auto* r = std::get_if<Residue>(&v_)) return std::to_string(r->value);
  return std::get<mpq_class>(v_).get_str();
}

Field Field::prime(std::uint32_t p) {
  if (!is_prime_number(p)) throw std::invalid_argument("not a prime: " + std::to_string(p));
  return Field(p);
}

Scalar Field::zero() const { return from_int(0); }
Scalar Field::one() const { return from_int(1); }

Scalar Field::from_int(long long n) const {
  if (p_ == 0) return Scalar::rational(mpq_class(static_cast<long>(n)));
  long long r = n % static_cast<long long>(p_);
  if (r < 0) r += p_;
  return Scalar::residue(static_cast<std::uint64_t>(r), p_);
}

Scalar Field::from_ratio(const mpz_class& num, const mpz_class& den) const {
  if (den == 0) throw std::invalid_argument("zero denominator");
  if (p_ == 0) return Scalar::rational(mpq_class(num, den));
  std::uint32_t d = reduce(den, p_);
  if (d == 0) throw std::invalid_argument("denominator vanishes mod " + std::to_string(p_));
  return Scalar::residue(reduce(num, p_), p_) / Scalar::residue(d, p_);
}

Scalar Field::parse(std::string_view text) const {
  auto slash = text.find('/');
  std::string num(text.substr(0, slash));
  std::string den = slash == std::string_view::npos ? "1" : std::string(text.substr(slash + 1));
  auto valid = [](const std::string& s, bool allow_sign) {
    std::size_t i = 0;
    if (allow_sign && !s.empty() && (s[0] == '-' || s[0] == '+')) i = 1;
    if (i >= s.size()) return false;
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  if (!valid(num, true) || !valid(den, false))
    throw std::invalid_argument("malformed scalar '" + std::string(text) + "'");
  if (num[0] == '+') num.erase(0, 1);
  return from_ratio(mpz_class(num), mpz_class(den));
}

Scalar Field::convert(const Scalar& s) const {
  if (s.is_rational()) {
    const mpq_class& q = s.rational_value();
    return from_ratio(q.get_num(), q.get_den());
  }
  if (p_ == 0 || s.modulus() != p_)
    throw FieldMismatch("cannot convert " + s.str() + " into " + name());
  return s;
}

bool Field::contains(const Scalar& s) const { return s.modulus() == p_; }

Scalar Field::element(std::uint64_t k) const {
  if (p_ == 0) throw std::logic_error("element() needs a prime field");
  return Scalar::residue(k, p_);
}

std::string Field::name() const { return p_ == 0 ? "Q" : "F" + std::to_string(p_); }

}  // namespace lyk
