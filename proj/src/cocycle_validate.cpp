#include "cocycle_ops.hpp"
#include "lyk/errors.hpp"

namespace lyk {

namespace {

// Each family is written as "residual == 0"; the left side of each printed
// identity is moved to the right.
std::vector<IdentityFamily> cocycle_families(const detail::CocycleOps& o) {
  const int G = o.c.dg(), H = o.c.dh();
  const auto& e = o.e;
  const auto& f = o.f;
  std::vector<IdentityFamily> fam;
  auto add = [&](const char* id, std::vector<int> dims, auto fn) {
    fam.push_back({id, std::move(dims), fn});
  };

  // Antisymmetry.
  add("L00", {G, G}, [&](std::span<const int> t) {
    return is_zero(o.chi(e[t[0]], e[t[1]]) + o.chi(e[t[1]], e[t[0]]));
  });
  add("L00", {G, G, G}, [&](std::span<const int> t) {
    const Vec &x = e[t[0]], &y = e[t[1]], &z = e[t[2]];
    return is_zero(o.om(x, y, z) + o.om(y, x, z));
  });
  add("L01", {G, G, H}, [&](std::span<const int> t) {
    const Vec &x = e[t[0]], &y = e[t[1]], &a = f[t[2]];
    return is_zero(o.D(x, y, a) + o.D(y, x, a));
  });
  add("L01", {G, H, H}, [&](std::span<const int> t) {
    const Vec &x = e[t[0]], &a = f[t[1]], &b = f[t[2]];
    return is_zero(o.T(x, a, b) + o.T(x, b, a));
  });

  // Resembling 2.3.
  add("L12", {G, G, G}, [&](std::span<const int> t) {
    const Vec &x = e[t[0]], &y = e[t[1]], &z = e[t[2]];
    Vec s = o.chi(o.gb(x, y), z) - o.mu(z, o.chi(x, y)) + o.om(x, y, z);
    s += o.chi(o.gb(y, z), x) - o.mu(x, o.chi(y, z)) + o.om(y, z, x);
    s += o.chi(o.gb(z, x), y) - o.mu(y, o.chi(z, x)) + o.om(z, x, y);
    return is_zero(s);
  });
  add("L13", {G, G, H}, [&](std::span<const int> t) {
    const Vec &x = e[t[0]], &y = e[t[1]], &a = f[t[2]];
    Vec s = o.mu(o.gb(x, y), a) + o.hb(o.chi(x, y), a) + o.D(x, y, a) - o.mu(x, o.mu(y, a)) -
            o.th(y, x, a) + o.mu(y, o.mu(x, a)) + o.th(x, y, a);
    return is_zero(s);
  });
  add("L14", {G, H, H}, [&](std::span<const int> t) {
    const Vec &x = e[t[0]], &a = f[t[1]], &b = f[t[2]];
    Vec s = o.hb(o.mu(x, a), b) + o.rho(x, a, b) - o.mu(x, o.hb(a, b)) + o.T(x, a, b) -
            o.hb(o.mu(x, b), a) - o.rho(x, b, a);
    return is_zero(s);
  });

  // Resembling 2.4.
  add("L15", {G, G, G, G}, [&](std::span<const int> t) {
    const Vec &x = e[t[0]], &y = e[t[1]], &z = e[t[2]], &w = e[t[3]];
    Vec s = o.om(o.gb(x, y), z, w) + o.om(o.gb(y, z), x, w) + o.om(o.gb(z, x), y, w);
    s += o.th(z, w, o.chi(x, y)) + o.th(x, w, o.chi(y, z)) + o.th(y, w, o.chi(z, x));
    return is_zero(s);
  });
  add("L16", {G, G, G, H}, [&](std::span<const int> t) {
    const Vec &x = e[t[0]], &y = e[t[1]], &z = e[t[2]], &a = f[t[3]];
    Vec s = o.D(o.gb(x, y), z, a) - o.rho(z, o.chi(x, y), a);
    s += o.D(o.gb(y, z), x, a) - o.rho(x, o.chi(y, z), a);
    s += o.D(o.gb(z, x), y, a) - o.rho(y, o.chi(z, x), a);
    return is_zero(s);
  });
  add("L17", {G, G, G, H}, [&](std::span<const int> t) {
    const Vec &x = e[t[0]], &y = e[t[1]], &z = e[t[2]], &a = f[t[3]];
    Vec s = o.th(o.gb(x, y), z, a) - o.T(z, o.chi(x, y), a) - o.th(x, z, o.mu(y, a)) +
            o.th(y, z, o.mu(x, a));
    return is_zero(s);
  });
  add("L18", {G, G, H, H}, [&](std::span<const int> t) {
    const Vec &x = e[t[0]], &y = e[t[1]], &a = f[t[2]], &b = f[t[3]];
    Vec s = o.rho(o.gb(x, y), a, b) + o.ht(o.chi(x, y), a, b) - o.rho(x, o.mu(y, a), b) +
            o.rho(y, o.mu(x, a), b);
    return is_zero(s);
  });
  add("L19", {G, G, H, H}, [&](std::span<const int> t) {
    const Vec &x = e[t[0]], &y = e[t[1]], &a = f[t[2]], &b = f[t[3]];
    Vec s = o.T(y, o.mu(x, a), b) + o.th(x, y, o.hb(a, b)) - o.T(y, o.mu(x, b), a);
    return is_zero(s);
  });
  add("L20", {G, H, H, H}, [&](std::span<const int> t) {
    const Vec &x = e[t[0]], &a = f[t[1]], &b = f[t[2]], &c = f[t[3]];
    Vec s = o.ht(o.mu(x, a), b, c) - o.rho(x, o.hb(a, b), c) - o.ht(o.mu(x, b), a, c);
    return is_zero(s);
  });
  add("L21", {G, H, H, H}, [&](std::span<const int> t) {
    const Vec &x = e[t[0]], &a = f[t[1]], &b = f[t[2]], &c = f[t[3]];
    Vec s = o.T(x, o.hb(a, b), c) + o.T(x, o.hb(b, c), a) + o.T(x, o.hb(c, a), b);
    return is_zero(s);
  });

  // Resembling 2.5.
  add("L22", {G, G, G, G}, [&](std::span<const int> t) {
    const Vec &x = e[t[0]], &y = e[t[1]], &z = e[t[2]], &w = e[t[3]];
    Vec lhs = o.D(x, y, o.chi(z, w)) + o.om(x, y, o.gb(z, w));
    Vec rhs = o.chi(o.gt(x, y, z), w) - o.mu(w, o.om(x, y, z)) + o.mu(z, o.om(x, y, w)) +
              o.chi(z, o.gt(x, y, w));
    return lhs == rhs;
  });
  add("L23", {G, G, G, H}, [&](std::span<const int> t) {
    const Vec &x = e[t[0]], &y = e[t[1]], &z = e[t[2]], &a = f[t[3]];
    Vec rhs = o.mu(o.gt(x, y, z), a) + o.hb(o.om(x, y, z), a) + o.mu(z, o.D(x, y, a));
    return o.D(x, y, o.mu(z, a)) == rhs;
  });
  add("L24", {G, G, G, H}, [&](std::span<const int> t) {
    const Vec &x = e[t[0]], &y = e[t[1]], &z = e[t[2]], &a = f[t[3]];
    Vec lhs = o.th(x, o.gb(y, z), a) - o.rho(x, a, o.chi(y, z));
    return lhs == o.mu(y, o.th(x, z, a)) - o.mu(z, o.th(x, y, a));
  });
  add("L25", {G, G, H, H}, [&](std::span<const int> t) {
    const Vec &x = e[t[0]], &y = e[t[1]], &a = f[t[2]], &b = f[t[3]];
    return o.D(x, y, o.hb(a, b)) == o.hb(o.D(x, y, a), b) + o.hb(a, o.D(x, y, b));
  });
  add("L26", {G, G, H, H}, [&](std::span<const int> t) {
    const Vec &x = e[t[0]], &y = e[t[1]], &a = f[t[2]], &b = f[t[3]];
    return is_zero(o.rho(x, a, o.mu(y, b)) + o.hb(o.th(x, y, a), b) -
                   o.mu(y, o.rho(x, a, b)));
  });
  add("L27", {G, G, H, H}, [&](std::span<const int> t) {
    const Vec &x = e[t[0]], &y = e[t[1]], &a = f[t[2]], &b = f[t[3]];
    return is_zero(o.T(o.gb(x, y), a, b) + o.ht(a, b, o.chi(x, y)) - o.mu(x, o.T(y, a, b)) +
                   o.mu(y, o.T(x, a, b)));
  });
  add("L28", {G, H, H, H}, [&](std::span<const int> t) {
    const Vec &x = e[t[0]], &a = f[t[1]], &b = f[t[2]], &c = f[t[3]];
    return o.ht(a, b, o.mu(x, c)) == o.mu(x, o.ht(a, b, c)) - o.hb(c, o.T(x, a, b));
  });
  add("L29", {G, H, H, H}, [&](std::span<const int> t) {
    const Vec &x = e[t[0]], &a = f[t[1]], &b = f[t[2]], &c = f[t[3]];
    return o.rho(x, a, o.hb(b, c)) == o.hb(o.rho(x, a, b), c) + o.hb(b, o.rho(x, a, c));
  });

  // Resembling 2.6.
  add("L1", {G, G, G, G, G}, [&](std::span<const int> t) {
    const Vec &x1 = e[t[0]], &x2 = e[t[1]], &y1 = e[t[2]], &y2 = e[t[3]], &y3 = e[t[4]];
    Vec lhs = o.D(x1, x2, o.om(y1, y2, y3)) + o.om(x1, x2, o.gt(y1, y2, y3));
    Vec rhs = o.om(o.gt(x1, x2, y1), y2, y3) + o.th(y2, y3, o.om(x1, x2, y1)) +
              o.om(y1, o.gt(x1, x2, y2), y3) - o.th(y1, y3, o.om(x1, x2, y2)) +
              o.om(y1, y2, o.gt(x1, x2, y3)) + o.D(y1, y2, o.om(x1, x2, y3));
    return lhs == rhs;
  });
  add("L30", {G, G, G, G, H}, [&](std::span<const int> t) {
    const Vec &x = e[t[0]], &y = e[t[1]], &z = e[t[2]], &w = e[t[3]], &a = f[t[4]];
    Vec lhs = o.D(x, y, o.D(z, w, a)) - o.D(z, w, o.D(x, y, a));
    Vec rhs = o.D(o.gt(x, y, z), w, a) + o.D(z, o.gt(x, y, w), a) -
              o.rho(w, o.om(x, y, z), a) + o.rho(z, o.om(x, y, w), a);
    return lhs == rhs;
  });
  add("L2", {G, G, G, G, H}, [&](std::span<const int> t) {
    const Vec &x = e[t[0]], &y = e[t[1]], &z = e[t[2]], &w = e[t[3]], &a = f[t[4]];
    Vec lhs = o.D(x, y, o.th(z, w, a)) - o.th(z, w, o.D(x, y, a));
    Vec rhs = o.th(o.gt(x, y, z), w, a) + o.th(z, o.gt(x, y, w), a) -
              o.T(w, o.om(x, y, z), a) - o.rho(z, a, o.om(x, y, w));
    return lhs == rhs;
  });
  add("L3", {G, G, G, G, H}, [&](std::span<const int> t) {
    const Vec &x = e[t[0]], &y = e[t[1]], &z = e[t[2]], &w = e[t[3]], &a = f[t[4]];
    Vec lhs = o.th(x, o.gt(y, z, w), a) - o.rho(x, a, o.om(y, z, w));
    Vec rhs = o.th(z, w, o.th(x, y, a)) - o.th(y, w, o.th(x, z, a)) + o.D(y, z, o.th(x, w, a));
    return lhs == rhs;
  });
  add("L4", {G, G, G, H, H}, [&](std::span<const int> t) {
    const Vec &x = e[t[0]], &y = e[t[1]], &z = e[t[2]], &a = f[t[3]], &b = f[t[4]];
    Vec lhs = o.D(x, y, o.rho(z, a, b)) - o.rho(o.gt(x, y, z), a, b);
    Vec rhs = o.rho(z, o.D(x, y, a), b) + o.rho(z, a, o.D(x, y, b)) + o.ht(o.om(x, y, z), a, b);
    return lhs == rhs;
  });
  add("L5", {G, G, G, H, H}, [&](std::span<const int> t) {
    const Vec &x = e[t[0]], &y = e[t[1]], &z = e[t[2]], &a = f[t[3]], &b = f[t[4]];
    Vec rhs = o.rho(x, a, o.D(y, z, b)) - o.rho(z, o.th(x, y, a), b) + o.rho(y, o.th(x, z, a), b);
    return o.D(y, z, o.rho(x, a, b)) == rhs;
  });
  add("L6", {G, G, G, H, H}, [&](std::span<const int> t) {
    const Vec &x = e[t[0]], &y = e[t[1]], &z = e[t[2]], &a = f[t[3]], &b = f[t[4]];
    Vec rhs = o.rho(x, a, o.th(y, z, b)) - o.T(z, o.th(x, y, a), b) - o.rho(y, b, o.th(x, z, a));
    return o.th(y, z, o.rho(x, a, b)) == rhs;
  });
  add("L31", {G, G, G, H, H}, [&](std::span<const int> t) {
    const Vec &x = e[t[0]], &y = e[t[1]], &z = e[t[2]], &a = f[t[3]], &b = f[t[4]];
    Vec lhs = o.D(x, y, o.T(z, a, b)) - o.T(o.gt(x, y, z), a, b);
    Vec rhs = o.T(z, o.D(x, y, a), b) + o.T(z, a, o.D(x, y, b)) + o.ht(a, b, o.om(x, y, z));
    return lhs == rhs;
  });
  add("L32", {G, G, G, H, H}, [&](std::span<const int> t) {
    const Vec &x = e[t[0]], &y = e[t[1]], &z = e[t[2]], &a = f[t[3]], &b = f[t[4]];
    Vec lhs = o.T(o.gt(x, y, z), a, b) - o.D(x, y, o.T(z, a, b)) + o.ht(a, b, o.om(x, y, z));
    Vec rhs = o.th(y, z, o.T(x, a, b)) - o.th(x, z, o.T(y, a, b));
    return lhs == rhs;
  });
  add("L7", {G, G, H, H, H}, [&](std::span<const int> t) {
    const Vec &x = e[t[0]], &y = e[t[1]], &a = f[t[2]], &b = f[t[3]], &c = f[t[4]];
    Vec rhs = o.ht(o.D(x, y, a), b, c) + o.ht(a, o.D(x, y, b), c) + o.ht(a, b, o.D(x, y, c));
    return o.D(x, y, o.ht(a, b, c)) == rhs;
  });
  add("L8", {G, G, H, H, H}, [&](std::span<const int> t) {
    const Vec &x = e[t[0]], &y = e[t[1]], &a = f[t[2]], &b = f[t[3]], &c = f[t[4]];
    Vec rhs = o.rho(y, o.rho(x, a, b), c) + o.rho(y, b, o.rho(x, a, c)) -
              o.ht(o.th(x, y, a), b, c);
    return o.rho(x, a, o.rho(y, b, c)) == rhs;
  });
  add("L9", {G, G, H, H, H}, [&](std::span<const int> t) {
    const Vec &x = e[t[0]], &y = e[t[1]], &a = f[t[2]], &b = f[t[3]], &c = f[t[4]];
    Vec rhs = o.th(x, y, o.ht(a, b, c)) - o.T(y, o.T(x, a, b), c) - o.rho(x, c, o.T(y, a, b));
    return o.ht(a, b, o.th(x, y, c)) == rhs;
  });
  add("L33", {G, G, H, H, H}, [&](std::span<const int> t) {
    const Vec &x = e[t[0]], &y = e[t[1]], &a = f[t[2]], &b = f[t[3]], &c = f[t[4]];
    Vec rhs = o.T(y, o.rho(x, a, b), c) + o.T(y, b, o.rho(x, a, c)) - o.ht(b, c, o.th(x, y, a));
    return o.rho(x, a, o.T(y, b, c)) == rhs;
  });
  add("L34", {G, G, H, H, H}, [&](std::span<const int> t) {
    const Vec &x = e[t[0]], &y = e[t[1]], &a = f[t[2]], &b = f[t[3]], &c = f[t[4]];
    Vec rhs = o.D(x, y, o.ht(a, b, c)) - o.rho(y, o.T(x, a, b), c) + o.rho(x, o.T(y, a, b), c);
    return o.ht(a, b, o.D(x, y, c)) == rhs;
  });
  add("L10", {G, H, H, H, H}, [&](std::span<const int> t) {
    const Vec &x = e[t[0]], &a = f[t[1]], &b = f[t[2]], &c = f[t[3]], &d = f[t[4]];
    Vec rhs = o.rho(x, o.ht(a, b, c), d) - o.ht(c, o.T(x, a, b), d) + o.rho(x, c, o.ht(a, b, d));
    return o.ht(a, b, o.rho(x, c, d)) == rhs;
  });
  add("L11", {G, H, H, H, H}, [&](std::span<const int> t) {
    const Vec &x = e[t[0]], &a = f[t[1]], &b = f[t[2]], &c = f[t[3]], &d = f[t[4]];
    Vec rhs = o.ht(o.rho(x, a, b), c, d) + o.ht(b, o.rho(x, a, c), d) + o.ht(b, c, o.rho(x, a, d));
    return o.rho(x, a, o.ht(b, c, d)) == rhs;
  });
  add("L35", {G, H, H, H, H}, [&](std::span<const int> t) {
    const Vec &x = e[t[0]], &a = f[t[1]], &b = f[t[2]], &c = f[t[3]], &d = f[t[4]];
    Vec rhs = o.T(x, o.ht(a, b, c), d) + o.T(x, c, o.ht(a, b, d)) + o.ht(c, d, o.T(x, a, b));
    return o.ht(a, b, o.T(x, c, d)) == rhs;
  });
  return fam;
}

}  // namespace

Report validate_cocycle(const NonAbCocycle& c, const CheckOptions& opts) {
  c.check_shape();
  detail::CocycleOps o(c);
  Report r = run_families(cocycle_families(o), opts);
  Report out(opts.witness_limit);
  out.merge(verify_ly(c.g, opts), "g:");
  out.merge(verify_ly(c.h, opts), "h:");
  out.merge(r);
  return out;
}

}  // namespace lyk
