// Text format for polynomials:
//   expr   := [ '+' | '-' ] term { ( '+' | '-' ) term }
//   term   := factor { [ '*' ] factor }          (juxtaposition multiplies)
//   factor := base [ '^' [ '-' ] INTEGER ]       (negative exponent: bare t/g only)
//   base   := INTEGER | 't' | 'g' | '(' expr ')'
// Printing emits terms by descending t-exponent (g ascending within a
// t-level), "*" between coefficient and variables; parse(format(x)) == x.
#pragma once

#include <eqknot/groupring.hpp>

#include <stdexcept>
#include <string>
#include <string_view>

namespace eqknot {

struct ParseError : std::runtime_error {
  size_t pos;
  ParseError(size_t p, const std::string& msg)
      : std::runtime_error(msg + " (at position " + std::to_string(p) + ")"), pos(p) {}
};

// Integer Laurent polynomial in t; the variable g is rejected.
ZPoly parse_poly(std::string_view s);

// Group-ring polynomial; g-exponents are reduced mod q.  q >= 1.
GroupRingPoly parse_poly2(std::string_view s, long q);

// "num" or "num/den" with the slash at parenthesis depth 0; each side is an
// integer Laurent polynomial.  Returns {num, den}.
std::pair<ZPoly, ZPoly> parse_ratio(std::string_view s);

std::string format_poly(const ZPoly& p);
std::string format_poly2(const GroupRingPoly& p);

}  // namespace eqknot
