#include <doctest.h>

#include <eqknot/gf2.hpp>
#include <eqknot/laurent.hpp>
#include <eqknot/parse.hpp>

#include "generators.hpp"

using namespace eqknot;
using testgen::Rng;

namespace {

const ZPoly kStevedore = parse_poly("-2*t+5-2*t^-1");
const ZPoly kQuartic = parse_poly("t^4-3*t^3+3*t^2-3*t+1");

}  // namespace

TEST_CASE("addition cancels exactly") {
  CHECK(add(parse_poly("1-2*t"), parse_poly("2*t")) == ZPoly::one());
  CHECK(add(kStevedore, parse_poly("2*t+2*t^-1")) == ZPoly::constant(Int(5)));
  CHECK(add(ZPoly::zero(), ZPoly::zero()).is_zero());
  CHECK(sub(kQuartic, kQuartic).is_zero());
}

TEST_CASE("multiplication matches hand expansions") {
  CHECK(unit_equal(mul(parse_poly("-2*t+1"), parse_poly("-2*t^-1+1")), kStevedore));
  CHECK(mul(parse_poly("2-t"), parse_poly("2-t^-1")) == parse_poly("5-2*t-2*t^-1"));
  CHECK(mul(kQuartic, ZPoly::zero()).is_zero());
  CHECK(mul(ZPoly::t(), invert_t(ZPoly::t())) == ZPoly::one());
}

TEST_CASE("canon and unit_equal") {
  CHECK(canon(ZPoly::zero()).is_zero());
  CHECK(canon(parse_poly("-2*t+5-2*t^-1")) == parse_poly("2*t^2-5*t+2"));
  CHECK(unit_equal(parse_poly("1-2*t"), parse_poly("2*t-1")));
  CHECK(unit_equal(parse_poly("1-2*t"), parse_poly("t^-1-2")));
  CHECK_FALSE(unit_equal(parse_poly("1-2*t"), parse_poly("2-t")));
  ZPoly c = canon(parse_poly("1-2*t"));
  CHECK(c.min_exp() == 0);
  CHECK(sgn_of(c.terms().rbegin()->second) > 0);
}

TEST_CASE("reciprocal and self-reciprocity") {
  CHECK(reciprocal(kQuartic) == canon(kQuartic));
  CHECK(is_self_reciprocal(kQuartic));
  CHECK(is_self_reciprocal(kStevedore));
  CHECK(reciprocal(parse_poly("1-2*t")) == canon(parse_poly("t-2")));
  CHECK_FALSE(is_self_reciprocal(parse_poly("1-2*t")));
}

TEST_CASE("abstract Alexander predicate") {
  CHECK(is_abstract_alexander(kStevedore));
  CHECK(is_abstract_alexander(kQuartic));  // value at 1 is -1
  CHECK(is_abstract_alexander(ZPoly::one()));
  CHECK_FALSE(is_abstract_alexander(parse_poly("t+1")));       // augmentation 2
  CHECK_FALSE(is_abstract_alexander(parse_poly("1-2*t")));     // not symmetric
  CHECK_FALSE(is_abstract_alexander(ZPoly::zero()));
}

TEST_CASE("division is exact over the Laurent ring") {
  auto q = divides(kQuartic, mul(kQuartic, kQuartic));
  REQUIRE(q.has_value());
  CHECK(*q == kQuartic);
  CHECK_FALSE(divides(parse_poly("1+t"), parse_poly("1+t+t^2")).has_value());
  CHECK(divides(parse_poly("t^3"), ZPoly::zero())->is_zero());
  CHECK_THROWS_AS((void)divides(ZPoly::zero(), kQuartic), precondition_error);
  // divisor with negative exponents
  auto s = divides(parse_poly("1-2*t^-1"), kStevedore);
  REQUIRE(s.has_value());
  CHECK(mul(parse_poly("1-2*t^-1"), *s) == kStevedore);
}

TEST_CASE("mod 2 reduction") {
  CHECK(mod2(kStevedore) == GF2Poly::one());
  CHECK(mod2(kQuartic) == GF2Poly::from_exponents({0, 1, 2, 3, 4}));
  CHECK(mod2(parse_poly("2*t")).is_zero());
  CHECK(mod2(parse_poly("4*t^-3+2")).is_zero());
  // class representative has minimum exponent 0
  CHECK(mod2(parse_poly("t^5+t^3")) == GF2Poly::from_exponents({0, 2}));
}

TEST_CASE("GF(2) square roots") {
  GF2Poly sq = GF2Poly::from_exponents({0, 2, 4, 6, 8});
  auto r = gf2_sqrt(sq);
  REQUIRE(r.has_value());
  CHECK(*r == GF2Poly::from_exponents({0, 1, 2, 3, 4}));
  CHECK(gf2_sqrt(GF2Poly::one()) == GF2Poly::one());
  CHECK_FALSE(gf2_sqrt(GF2Poly::from_exponents({0, 3})).has_value());
}

TEST_CASE("GF(2) arithmetic basics") {
  GF2Poly a = GF2Poly::from_exponents({0, 1, 3});
  CHECK(gf2_add(a, a).is_zero());
  CHECK(gf2_mul(a, GF2Poly::one()) == a);
  CHECK(gf2_reverse(a) == GF2Poly::from_exponents({0, 2, 3}));
  CHECK(gf2_canon(gf2_shift(a, 4)) == a);
  auto [qq, rr] = gf2_divmod(gf2_mul(a, a), a);
  CHECK(qq == a);
  CHECK(rr.is_zero());
  CHECK(gf2_gcd(gf2_mul(a, GF2Poly::from_exponents({0, 1})), a) == a);
  CHECK(gf2_eval1(a) == 1);
  CHECK(gf2_eval1(GF2Poly::from_exponents({0, 2})) == 0);
}

TEST_CASE("evaluation, content, primitive part") {
  CHECK(eval_at(kQuartic, Int(2)) == Int(16 - 24 + 12 - 6 + 1));
  CHECK(eval_at(ZPoly::zero(), Int(7)) == Int(0));
  CHECK_THROWS_AS(eval_at(parse_poly("t^-1"), Int(2)), precondition_error);
  CHECK(content(parse_poly("6*t^2-4*t+2")) == Int(2));
  CHECK(primitive_part(parse_poly("6*t^2-4*t+2")) == parse_poly("3*t^2-2*t+1"));
  CHECK(content(ZPoly::zero()) == Int(0));
}

TEST_CASE("rational conversions") {
  QPoly h = to_rational(kQuartic);
  auto [z, s] = clear_denominators(h);
  CHECK(z == canon(kQuartic));
  CHECK(s == Rat(1));
  QPoly half;
  half.set_coeff(1, Rat(1, 2));
  half.set_coeff(0, Rat(-1, 3));
  auto [z2, s2] = clear_denominators(half);
  CHECK(z2 == parse_poly("3*t-2"));
  CHECK(s2 == Rat(1, 6));
  CHECK_THROWS_AS(clear_denominators(QPoly::zero()), precondition_error);
}

TEST_CASE("ring laws on random samples") {
  Rng rng(0x1a01);
  for (int k = 0; k < 1000; ++k) {
    ZPoly a = testgen::rand_zpoly(rng, 5, 6);
    ZPoly b = testgen::rand_zpoly(rng, 5, 6);
    ZPoly c = testgen::rand_zpoly(rng, 5, 6);
    CHECK(add(a, b) == add(b, a));
    CHECK(mul(a, b) == mul(b, a));
    CHECK(mul(a, add(b, c)) == add(mul(a, b), mul(a, c)));
    CHECK(mul(mul(a, b), c) == mul(a, mul(b, c)));
    CHECK(add(a, neg(a)).is_zero());
    CHECK(augment(mul(a, b)) == augment(a) * augment(b));
  }
}

TEST_CASE("unit class laws on random samples") {
  Rng rng(0x1a02);
  for (int k = 0; k < 1000; ++k) {
    ZPoly a = testgen::rand_nonzero_zpoly(rng, 5, 6);
    ZPoly b = testgen::rand_nonzero_zpoly(rng, 5, 6);
    CHECK(canon(canon(a)) == canon(a));
    CHECK(unit_equal(a, shifted(a, testgen::rand_long(rng, -3, 3))));
    CHECK(unit_equal(a, neg(a)));
    CHECK(reciprocal(reciprocal(a)) == canon(a));
    CHECK(unit_equal(reciprocal(mul(a, b)), mul(reciprocal(a), reciprocal(b))));
    CHECK(is_self_reciprocal(mul(a, invert_t(a))));
    CHECK(compare_canonical(a, a) == 0);
    CHECK(compare_canonical(a, b) == -compare_canonical(b, a));
    // exact division recovers the cofactor
    auto q = divides(a, mul(a, b));
    REQUIRE(q.has_value());
    CHECK(*q == b);
    // mod-2 reduction is multiplicative on classes
    CHECK(mod2(mul(a, b)) == gf2_canon(gf2_mul(mod2(a), mod2(b))));
  }
}

TEST_CASE("GF(2) square root of a square exists and is canonical") {
  Rng rng(0x1a03);
  for (int k = 0; k < 200; ++k) {
    GF2Poly f = testgen::rand_gf2_odd(rng, 8);
    auto r = gf2_sqrt(gf2_mul(f, f));
    REQUIRE(r.has_value());
    CHECK(*r == gf2_canon(f));
  }
}

TEST_CASE("dense round trip") {
  Rng rng(0x1a04);
  for (int k = 0; k < 200; ++k) {
    ZPoly a = testgen::rand_nonzero_zpoly(rng, 6, 9);
    CHECK(from_dense(dense_coeffs(a), a.min_exp()) == a);
  }
}
