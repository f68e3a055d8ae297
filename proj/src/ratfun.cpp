#include <eqknot/parse.hpp>
#include <eqknot/ratfun.hpp>

#include <cassert>
#include <utility>

namespace eqknot {

namespace {

Rat leading(const QPoly& a) {
  assert(!a.is_zero());
  return a.coeff(a.max_exp());
}

// Remainder of a by monic b; both ordinary polynomials (min_exp >= 0).
QPoly q_rem(QPoly a, const QPoly& b) {
  assert(!b.is_zero() && leading(b) == 1);
  while (!a.is_zero() && a.max_exp() >= b.max_exp()) {
    Rat c = a.coeff(a.max_exp());
    long k = a.max_exp() - b.max_exp();
    a = sub(a, scaled(shifted(b, k), c));
  }
  return a;
}

// Exact quotient of a by monic b.
QPoly q_quot(QPoly a, const QPoly& b) {
  assert(!b.is_zero() && leading(b) == 1);
  QPoly q;
  while (!a.is_zero() && a.max_exp() >= b.max_exp()) {
    Rat c = a.coeff(a.max_exp());
    long k = a.max_exp() - b.max_exp();
    q.set_coeff(k, c);
    a = sub(a, scaled(shifted(b, k), c));
  }
  assert(a.is_zero());
  return q;
}

// Monic gcd; g(0, 0) = 0.
QPoly q_gcd(QPoly a, QPoly b) {
  while (!b.is_zero()) {
    Rat inv = Rat(1) / leading(b);
    b = scaled(b, inv);
    QPoly r = q_rem(std::move(a), b);
    a = std::move(b);
    b = std::move(r);
  }
  if (!a.is_zero()) {
    Rat inv = Rat(1) / leading(a);
    a = scaled(a, inv);
  }
  return a;
}

}  // namespace

RatFun rf_make(const QPoly& num, const QPoly& den) {
  if (den.is_zero()) throw precondition_error("RatFun: zero denominator");
  RatFun r;
  if (num.is_zero()) return r;
  long sd = den.min_exp();
  QPoly d = shifted(den, -sd);
  long sn = num.min_exp() - sd;
  QPoly n = shifted(num, -num.min_exp());
  QPoly g = q_gcd(n, d);
  if (g.max_exp() > 0) {
    n = q_quot(std::move(n), g);
    d = q_quot(std::move(d), g);
  }
  // the quotients can pick up a t-power when the gcd cancels the constant term
  long sq = d.min_exp();
  d = shifted(d, -sq);
  sn += n.min_exp() - sq;
  n = shifted(n, -n.min_exp());
  Rat inv = Rat(1) / leading(d);
  r.num = scaled(shifted(n, sn), inv);
  r.den = scaled(d, inv);
  return r;
}

RatFun rf_from_poly(const QPoly& p) {
  QPoly one;
  one.set_coeff(0, Rat(1));
  return rf_make(p, one);
}

RatFun rf_from_int(long v) {
  QPoly p;
  if (v != 0) p.set_coeff(0, Rat(v));
  return rf_from_poly(p);
}

RatFun rf_add(const RatFun& a, const RatFun& b) {
  return rf_make(add(mul(a.num, b.den), mul(b.num, a.den)), mul(a.den, b.den));
}

RatFun rf_sub(const RatFun& a, const RatFun& b) {
  return rf_make(sub(mul(a.num, b.den), mul(b.num, a.den)), mul(a.den, b.den));
}

RatFun rf_neg(const RatFun& a) {
  RatFun r = a;
  r.num = neg(r.num);
  return r;
}

RatFun rf_mul(const RatFun& a, const RatFun& b) {
  return rf_make(mul(a.num, b.num), mul(a.den, b.den));
}

RatFun rf_div(const RatFun& a, const RatFun& b) {
  if (b.is_zero()) throw precondition_error("RatFun: division by zero");
  return rf_make(mul(a.num, b.den), mul(a.den, b.num));
}

RatFun rf_involute(const RatFun& a) { return rf_make(invert_t(a.num), invert_t(a.den)); }

bool is_localized(const RatFun& a) {
  if (a.is_zero()) return true;
  auto [nz, rn] = clear_denominators(a.num);
  auto [dz, rd] = clear_denominators(a.den);
  Rat s = rn / rd;
  if (s.get_den() != 1) return false;
  ZPoly d0 = shifted(dz, -dz.min_exp());
  Int v = eval_at(d0, Int(1));
  return v == 1 || v == -1;
}

std::string format_ratfun(const RatFun& a) {
  if (a.is_zero()) return format_poly(ZPoly());
  auto [nz, rn] = clear_denominators(a.num);
  auto [dz, rd] = clear_denominators(a.den);
  Rat s = rn / rd;
  ZPoly n = scaled(nz, Int(s.get_num()));
  ZPoly d = scaled(dz, Int(s.get_den()));
  if (d == ZPoly::constant(Int(1))) return format_poly(n);
  return format_poly(n) + " / " + format_poly(d);
}

RatFun parse_ratfun(std::string_view s) {
  auto [n, d] = parse_ratio(s);
  if (d.is_zero()) throw ParseError(s.size(), "zero denominator");
  return rf_make(to_rational(n), to_rational(d));
}

}  // namespace eqknot
