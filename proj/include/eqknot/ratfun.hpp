// Exact rational functions over Q(t), stored as reduced fractions of
// rational Laurent polynomials with a canonical denominator.
#pragma once

#include <eqknot/laurent.hpp>

#include <string>
#include <string_view>

namespace eqknot {

// Invariants: den has min_exp 0 and leading coefficient 1; gcd of den and
// the polynomial part of num is 1; zero is 0/1.  Equality of values is
// equality of representations.
struct RatFun {
  QPoly num;
  QPoly den;

  RatFun() { den.set_coeff(0, Rat(1)); }

  bool is_zero() const { return num.is_zero(); }
  bool operator==(const RatFun& o) const { return num == o.num && den == o.den; }
  bool operator!=(const RatFun& o) const { return !(*this == o); }
};

// num/den reduced to canonical form.  den must be nonzero.
RatFun rf_make(const QPoly& num, const QPoly& den);
RatFun rf_from_poly(const QPoly& p);
RatFun rf_from_int(long v);

RatFun rf_add(const RatFun& a, const RatFun& b);
RatFun rf_sub(const RatFun& a, const RatFun& b);
RatFun rf_neg(const RatFun& a);
RatFun rf_mul(const RatFun& a, const RatFun& b);

// b must be nonzero.
RatFun rf_div(const RatFun& a, const RatFun& b);

// t -> 1/t.
RatFun rf_involute(const RatFun& a);

// Membership in the localization {f/h : h an integer Laurent polynomial
// with |h(1)| = 1}: after clearing to an integer fraction, the rational
// scalar is an integer and the denominator evaluates to +-1 at t = 1.
bool is_localized(const RatFun& a);

// "P" or "P/Q" with P, Q integer Laurent polynomials; parses back equal.
std::string format_ratfun(const RatFun& a);
RatFun parse_ratfun(std::string_view s);

}  // namespace eqknot
