#include <doctest.h>

#include <eqknot/parse.hpp>

#include "generators.hpp"

using namespace eqknot;
using testgen::Rng;

TEST_CASE("polynomial grammar") {
  CHECK(parse_poly("0").is_zero());
  CHECK(parse_poly("-2*t+5-2*t^-1") == add(parse_poly("5"), parse_poly("-2*t-2*t^-1")));
  CHECK(parse_poly("2t") == parse_poly("2*t"));              // juxtaposition
  CHECK(parse_poly("(1-t)(1+t)") == parse_poly("1-t^2"));    // parenthesized products
  CHECK(parse_poly("(t^4-3*t^3+3*t^2-3*t+1)^2") ==
        mul(parse_poly("t^4-3*t^3+3*t^2-3*t+1"), parse_poly("t^4-3*t^3+3*t^2-3*t+1")));
  CHECK(parse_poly("t^-3") == ZPoly::monomial(Int(1), -3));
  CHECK(parse_poly("+t") == ZPoly::t());
  CHECK(parse_poly("3^2") == ZPoly::constant(Int(9)));
}

TEST_CASE("group ring grammar") {
  GroupRingPoly st = parse_poly2("(g-1)*t+3-2*g+(g^-1-1)*t^-1", 2);
  GroupRingPoly byHand(2);
  byHand.set_coeff(1, 1, Int(1));
  byHand.set_coeff(0, 1, Int(-1));
  byHand.set_coeff(0, 0, Int(3));
  byHand.set_coeff(1, 0, Int(-2));
  byHand.set_coeff(1, -1, Int(1));
  byHand.set_coeff(0, -1, Int(-1));
  CHECK(st == byHand);
  CHECK(parse_poly2("g^5", 3) == GroupRingPoly::monomial(3, Int(1), 2, 0));  // exponent reduced
  CHECK(parse_poly2("g*g", 2) == GroupRingPoly::constant(2, Int(1)));
  CHECK(parse_poly2("(1+g)*(1-g)", 2).is_zero());
  CHECK(parse_poly2("t-2", 1) == GroupRingPoly::from_laurent(1, parse_poly("t-2")));
}

TEST_CASE("parse errors carry a position") {
  CHECK_THROWS_AS((void)parse_poly(""), ParseError);
  CHECK_THROWS_AS((void)parse_poly("t+"), ParseError);
  CHECK_THROWS_AS((void)parse_poly("(t+1"), ParseError);
  CHECK_THROWS_AS((void)parse_poly("t^"), ParseError);
  CHECK_THROWS_AS((void)parse_poly("t^x"), ParseError);
  CHECK_THROWS_AS((void)parse_poly("g"), ParseError);      // g outside the group ring
  CHECK_THROWS_AS((void)parse_poly("(t+1)^-1"), ParseError);  // negative power of a sum
  CHECK_THROWS_AS((void)parse_poly("t@1"), ParseError);
  CHECK_THROWS_AS((void)parse_poly2("t &", 2), ParseError);
  try {
    (void)parse_poly("t + %");
    CHECK(false);
  } catch (const ParseError& e) {
    CHECK(e.pos == 4);
  }
}

TEST_CASE("ratio splitting") {
  auto [n1, d1] = parse_ratio("t-2");
  CHECK(n1 == parse_poly("t-2"));
  CHECK(d1 == ZPoly::one());
  auto [n2, d2] = parse_ratio("(t-2)/(t+1)");
  CHECK(n2 == parse_poly("t-2"));
  CHECK(d2 == parse_poly("t+1"));
  auto [n3, d3] = parse_ratio("1/0");
  CHECK(n3 == ZPoly::one());
  CHECK(d3.is_zero());
  CHECK_THROWS_AS((void)parse_ratio("1/((t)"), ParseError);
}

TEST_CASE("formatting round trips the examples") {
  const char* samples[] = {
      "0", "1", "-1", "t", "-t", "2*t^2-5*t+2", "-2*t+5-2*t^-1",
      "t^4-3*t^3+3*t^2-3*t+1",
  };
  for (const char* s : samples) CHECK(format_poly(parse_poly(s)) == s);
  GroupRingPoly st = parse_poly2("(g-1)*t+3-2*g+(g^-1-1)*t^-1", 2);
  CHECK(format_poly2(st) == "-t+g*t+3-2*g-t^-1+g*t^-1");
  CHECK(parse_poly2(format_poly2(st), 2) == st);
  CHECK(format_poly2(GroupRingPoly::zero(5)) == "0");
}

TEST_CASE("parse after format is the identity") {
  Rng rng(0x9a01);
  for (int k = 0; k < 1000; ++k) {
    ZPoly p = testgen::rand_zpoly(rng, 6, 9);
    CHECK(parse_poly(format_poly(p)) == p);
  }
  const long qs[] = {1, 2, 3, 5, 7};
  for (int k = 0; k < 1000; ++k) {
    long q = qs[k % 5];
    GroupRingPoly a = testgen::rand_gpoly(rng, q, 3, 9);
    CHECK(parse_poly2(format_poly2(a), q) == a);
  }
}
