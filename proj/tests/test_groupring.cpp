#include <doctest.h>

#include <eqknot/cyclotomic.hpp>
#include <eqknot/groupring.hpp>
#include <eqknot/parse.hpp>

#include "generators.hpp"

#include <numeric>

using namespace eqknot;
using testgen::Rng;

namespace {

const GroupRingPoly kStevedoreZ2 = parse_poly2("(g-1)*t+3-2*g+(g^-1-1)*t^-1", 2);

ZqVec zq_mul(const ZqVec& a, const ZqVec& b) {
  size_t q = a.size();
  ZqVec r(q, Int(0));
  for (size_t i = 0; i < q; ++i)
    for (size_t j = 0; j < q; ++j) r[(i + j) % q] += a[i] * b[j];
  return r;
}

}  // namespace

TEST_CASE("group ring products") {
  CHECK(gmul(parse_poly2("1+(g-1)*t", 2), parse_poly2("1+(g-1)*t^-1", 2)) == kStevedoreZ2);
  CHECK(gmul(parse_poly2("g", 2), parse_poly2("g", 2)) == GroupRingPoly::constant(2, Int(1)));
  CHECK(gmul(parse_poly2("1+g", 2), parse_poly2("1-g", 2)).is_zero());
  CHECK_THROWS_AS(gmul(parse_poly2("g", 2), parse_poly2("g", 3)), precondition_error);
}

TEST_CASE("involution") {
  CHECK(involute(kStevedoreZ2) == kStevedoreZ2);
  CHECK(involute(parse_poly2("1-g+g*t", 2)) == parse_poly2("1-g+g*t^-1", 2));
  CHECK(involute(parse_poly2("g", 3)) == parse_poly2("g^2", 3));
  Rng rng(0x6701);
  const long qs[] = {2, 3, 5, 6};
  for (int k = 0; k < 1000; ++k) {
    long q = qs[k % 4];
    GroupRingPoly a = testgen::rand_gpoly(rng, q, 3, 6);
    GroupRingPoly b = testgen::rand_gpoly(rng, q, 3, 6);
    CHECK(involute(involute(a)) == a);
    CHECK(involute(gmul(a, b)) == gmul(involute(a), involute(b)));
    CHECK(involute(gadd(a, b)) == gadd(involute(a), involute(b)));
    CHECK(augment_g(involute(a)) == invert_t(augment_g(a)));
  }
}

TEST_CASE("augmentations") {
  CHECK(augment_t(kStevedoreZ2) == ZqVec{Int(1), Int(0)});
  CHECK(augment_t(parse_poly2("1-g+g*t", 2)) == ZqVec{Int(1), Int(0)});
  CHECK(augment_t(parse_poly2("1-t-g*t", 2)) == ZqVec{Int(0), Int(-1)});
  CHECK(augment_g(kStevedoreZ2) == ZPoly::one());
  CHECK(augment_g(parse_poly2("1-g+g*t", 2)) == ZPoly::t());
  Rng rng(0x6702);
  for (int k = 0; k < 1000; ++k) {
    long q = 2 + (k % 4);
    GroupRingPoly a = testgen::rand_gpoly(rng, q, 3, 6);
    GroupRingPoly b = testgen::rand_gpoly(rng, q, 3, 6);
    CHECK(augment_g(gmul(a, b)) == mul(augment_g(a), augment_g(b)));
    CHECK(augment_t(gmul(a, b)) == zq_mul(augment_t(a), augment_t(b)));
  }
}

TEST_CASE("trivial units") {
  CHECK(is_trivial_unit(ZqVec{Int(0), Int(-1)}));
  CHECK(is_trivial_unit(ZqVec{Int(1), Int(0)}));
  CHECK_FALSE(is_trivial_unit(ZqVec{Int(3), Int(-2)}));
  CHECK_FALSE(is_trivial_unit(ZqVec{Int(0), Int(0)}));
  CHECK_FALSE(is_trivial_unit(ZqVec{Int(0), Int(2)}));
  auto info = trivial_unit_info(ZqVec{Int(0), Int(-1)});
  REQUIRE(info.has_value());
  CHECK(info->first == -1);
  CHECK(info->second == 1);
  CHECK_FALSE(trivial_unit_info(ZqVec{Int(3), Int(-2)}).has_value());
}

TEST_CASE("canonical unit classes") {
  Rng rng(0x6703);
  for (int k = 0; k < 1000; ++k) {
    long q = 1 + (k % 5);
    GroupRingPoly a = testgen::rand_nonzero_gpoly(rng, q, 3, 6);
    int sign = testgen::rand_long(rng, 0, 1) ? 1 : -1;
    GroupRingPoly u = gshift_unit(a, sign, testgen::rand_long(rng, 0, q - 1),
                                  testgen::rand_long(rng, -2, 2));
    CHECK(gunit_equal(a, u));
    CHECK(gcanon(a) == gcanon(u));
    CHECK(gcanon(gcanon(a)) == gcanon(a));
    CHECK(gcanon(a).min_t_exp() == 0);
  }
  CHECK(gcanon(GroupRingPoly::zero(3)).is_zero());
  CHECK_FALSE(gunit_equal(parse_poly2("1+g", 2), parse_poly2("1-g", 2)));
}

TEST_CASE("plus/minus decomposition at q = 2") {
  CHECK(from_plus_minus(ZPoly::one(), ZPoly::one()) == GroupRingPoly::constant(2, Int(1)));
  CHECK(from_plus_minus(parse_poly("1-2*t"), ZPoly::one()) == parse_poly2("1-t-g*t", 2));
  PlusMinusPair pm = plus_minus_components(parse_poly2("1-t-g*t", 2));
  CHECK(pm.hPlus == parse_poly("1-2*t"));
  CHECK(pm.hMinus == ZPoly::one());
  PlusMinusPair st = plus_minus_components(kStevedoreZ2);
  CHECK(st.hPlus == ZPoly::one());
  CHECK(st.hMinus == parse_poly("-2*t+5-2*t^-1"));
  CHECK(from_plus_minus(st.hPlus, st.hMinus) == kStevedoreZ2);
  CHECK_THROWS_AS(from_plus_minus(ZPoly::one(), ZPoly::t()), precondition_error);

  Rng rng(0x6704);
  for (int k = 0; k < 500; ++k) {
    GroupRingPoly a = testgen::rand_gpoly(rng, 2, 4, 6);
    PlusMinusPair p = plus_minus_components(a);
    CHECK(from_plus_minus(p.hPlus, p.hMinus) == a);
    ZPoly u = testgen::rand_zpoly(rng, 4, 6);
    ZPoly v = add(u, scaled(testgen::rand_zpoly(rng, 4, 6), Int(2)));
    GroupRingPoly b = from_plus_minus(u, v);
    PlusMinusPair pb = plus_minus_components(b);
    CHECK(pb.hPlus == u);
    CHECK(pb.hMinus == v);
  }
}

TEST_CASE("character components") {
  CharacterComponents st = to_components(kStevedoreZ2);
  REQUIRE(st.parts.size() == 2);
  CHECK(st.parts[0].first == 1);
  CHECK(st.parts[1].first == 2);
  CHECK(st.parts[0].second.c[0] == ZPoly::one());
  CHECK(st.parts[1].second.c[0] == parse_poly("-2*t+5-2*t^-1"));

  CharacterComponents one = to_components(GroupRingPoly::constant(6, Int(1)));
  REQUIRE(one.parts.size() == 4);  // divisors 1, 2, 3, 6
  for (const auto& [d, comp] : one.parts) {
    CHECK(comp.c[0] == ZPoly::one());
    CHECK(comp.is_x_free());
  }

  CharacterComponents w = to_components(parse_poly2("1-t-g*t", 2));
  CHECK(w.parts[0].second.c[0] == parse_poly("1-2*t"));
  CHECK(w.parts[1].second.c[0] == ZPoly::one());
}

TEST_CASE("component arithmetic is a ring map") {
  Rng rng(0x6705);
  const long qs[] = {2, 3, 4, 6};
  for (int k = 0; k < 200; ++k) {
    long q = qs[k % 4];
    GroupRingPoly a = testgen::rand_gpoly(rng, q, 3, 5);
    GroupRingPoly b = testgen::rand_gpoly(rng, q, 3, 5);
    for (long d : divisors_of(q)) {
      CycloElem pa = component_of(a, d);
      CycloElem pb = component_of(b, d);
      CycloElem prod = ce_mul(pa, pb);
      CycloElem direct = component_of(gmul(a, b), d);
      REQUIRE(prod.c.size() == direct.c.size());
      for (size_t i = 0; i < prod.c.size(); ++i) CHECK(prod.c[i] == direct.c[i]);
    }
  }
}

TEST_CASE("galois action preserves the component norm") {
  Rng rng(0x6706);
  for (int k = 0; k < 100; ++k) {
    long d = (k % 2) ? 5 : 6;
    GroupRingPoly a = testgen::rand_nonzero_gpoly(rng, d, 2, 4);
    CycloElem c = component_of(a, d);
    for (long s = 1; s < d; ++s) {
      if (std::gcd(s, d) != 1) continue;
      CHECK(component_norm(ce_sigma(c, s)) == component_norm(c));
    }
  }
}

TEST_CASE("cyclotomic polynomials") {
  CHECK(euler_phi(1) == 1);
  CHECK(euler_phi(2) == 1);
  CHECK(euler_phi(6) == 2);
  CHECK(euler_phi(12) == 4);
  CHECK(divisors_of(12) == std::vector<long>{1, 2, 3, 4, 6, 12});
  CHECK(cyclotomic_poly(1) == parse_poly("t-1"));
  CHECK(cyclotomic_poly(2) == parse_poly("t+1"));
  CHECK(cyclotomic_poly(6) == parse_poly("t^2-t+1"));
  CHECK(cyclotomic_poly(12) == parse_poly("t^4-t^2+1"));
  for (long q = 1; q <= 12; ++q) {
    ZPoly prod = ZPoly::one();
    for (long d : divisors_of(q)) prod = mul(prod, cyclotomic_poly(d));
    CHECK(prod == sub(ZPoly::monomial(Int(1), q), ZPoly::one()));
  }
}

TEST_CASE("norm over roots of unity") {
  CHECK(unit_equal(norm_product(kStevedoreZ2), parse_poly("-2*t+5-2*t^-1")));
  CHECK(unit_equal(norm_product(GroupRingPoly::constant(5, Int(1))), ZPoly::one()));
  CHECK(unit_equal(norm_product(parse_poly2("1-t-g*t", 2)), parse_poly("1-2*t")));
  CHECK(norm_product(GroupRingPoly::zero(3)).is_zero());

  Rng rng(0x6707);
  const long qs[] = {2, 3, 4, 6};
  for (int k = 0; k < 1000; ++k) {
    long q = qs[k % 4];
    GroupRingPoly a = testgen::rand_gpoly(rng, q, 2, 4);
    GroupRingPoly b = testgen::rand_gpoly(rng, q, 2, 4);
    ZPoly na = norm_product(a);
    ZPoly nb = norm_product(b);
    CHECK(unit_equal(norm_product(gmul(a, b)), mul(na, nb)));
    CHECK(unit_equal(norm_product(involute(a)), reciprocal(na)));
    ZPoly quot = augment_g(a);
    if (!quot.is_zero())
      CHECK(divides(quot, na).has_value());
    else
      CHECK(na.is_zero());
  }
}

TEST_CASE("murasugi direction of the realization") {
  Rng rng(0x6708);
  const long qs[] = {2, 3, 5};
  for (int k = 0; k < 300; ++k) {
    long q = qs[k % 3];
    GroupRingPoly a = testgen::rand_witness_gpoly(rng, q, 2, 3);
    GroupRingPoly m = gmul(a, involute(a));
    CHECK(gunit_equal(involute(m), m));
    CHECK(is_trivial_unit(augment_t(m)));
    ZPoly knot = norm_product(m);
    ZPoly quot = augment_g(m);
    auto d = divides(quot, knot);
    REQUIRE(d.has_value());
  }
}
