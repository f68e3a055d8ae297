#include <doctest.h>

#include <eqknot/factor.hpp>
#include <eqknot/parse.hpp>

#include <algorithm>

#include "generators.hpp"

using namespace eqknot;
using testgen::Rng;

namespace {

const ZPoly kQuartic = parse_poly("t^4-3*t^3+3*t^2-3*t+1");

bool contains_class(const std::vector<SliceWitness>& ws, const ZPoly& p) {
  return std::any_of(ws.begin(), ws.end(),
                     [&](const SliceWitness& w) { return unit_equal(w.p, p); });
}

}  // namespace

TEST_CASE("factor_Z certifies the quartic irreducible") {
  IrreducibleFactorization f = factor_Z(kQuartic);
  REQUIRE(f.factors.size() == 1);
  CHECK(f.factors[0].multiplicity == 1);
  CHECK(f.factors[0].pairing == Pairing::SelfReciprocal);
  CHECK(unit_equal(f.factors[0].poly, kQuartic));
  CHECK(unit_equal(f.product(), kQuartic));
}

TEST_CASE("factor_Z pairs reciprocal factors") {
  ZPoly a = mul(parse_poly("-2*t+1"), parse_poly("t-2"));
  IrreducibleFactorization f = factor_Z(a);
  REQUIRE(f.factors.size() == 2);
  bool firstIsPair = f.factors[0].pairing == Pairing::PairedWithNext &&
                     f.factors[1].pairing == Pairing::PairedWithPrev;
  CHECK(firstIsPair);
  CHECK(reciprocal(f.factors[0].poly) == canon(f.factors[1].poly));
  bool classes = (unit_equal(f.factors[0].poly, parse_poly("2*t-1")) &&
                  unit_equal(f.factors[1].poly, parse_poly("t-2"))) ||
                 (unit_equal(f.factors[0].poly, parse_poly("t-2")) &&
                  unit_equal(f.factors[1].poly, parse_poly("2*t-1")));
  CHECK(classes);
  CHECK(unit_equal(f.product(), a));
}

TEST_CASE("factor_Z on units") {
  CHECK(factor_Z(ZPoly::one()).factors.empty());
  CHECK(factor_Z(ZPoly::one()).sign == 1);
  CHECK(factor_Z(parse_poly("-1")).sign == -1);
  CHECK(factor_Z(parse_poly("t^3")).factors.empty());
  CHECK(unit_equal(factor_Z(parse_poly("-t^2")).product(), ZPoly::one()));
}

TEST_CASE("factor_Z reconstructs random products deterministically") {
  Rng rng(0x3f01);
  for (int k = 0; k < 200; ++k) {
    ZPoly a = testgen::rand_nonzero_zpoly(rng, 4, 5);
    ZPoly b = testgen::rand_nonzero_zpoly(rng, 4, 5);
    ZPoly m = mul(a, b);
    IrreducibleFactorization f = factor_Z(m);
    CHECK(unit_equal(f.product(), m));
    IrreducibleFactorization again = factor_Z(m);
    REQUIRE(f.factors.size() == again.factors.size());
    for (size_t i = 0; i < f.factors.size(); ++i) {
      CHECK(f.factors[i].poly == again.factors[i].poly);
      CHECK(f.factors[i].multiplicity == again.factors[i].multiplicity);
    }
    for (size_t i = 0; i < f.factors.size(); ++i) {
      const FactorEntry& e = f.factors[i];
      if (e.pairing == Pairing::SelfReciprocal) CHECK(is_self_reciprocal(e.poly));
      if (e.pairing == Pairing::PairedWithNext) {
        REQUIRE(i + 1 < f.factors.size());
        CHECK(reciprocal(e.poly) == canon(f.factors[i + 1].poly));
        CHECK(f.factors[i + 1].pairing == Pairing::PairedWithPrev);
      }
    }
  }
}

TEST_CASE("factors are irreducible") {
  Rng rng(0x3f02);
  for (int k = 0; k < 25; ++k) {
    ZPoly m = mul(testgen::rand_nonzero_zpoly(rng, 4, 4), testgen::rand_nonzero_zpoly(rng, 4, 4));
    for (const FactorEntry& e : factor_Z(m).factors) {
      IrreducibleFactorization g = factor_Z(e.poly);
      REQUIRE(g.factors.size() == 1);
      CHECK(g.factors[0].multiplicity == 1);
    }
  }
}

TEST_CASE("kronecker divisor search") {
  CHECK(kronecker_has_divisor(kQuartic, 2) == std::optional<bool>(false));
  CHECK(kronecker_has_divisor(parse_poly("(1+t)*(1+t+t^2)"), 2) == std::optional<bool>(true));
  CHECK(kronecker_has_divisor(parse_poly("t^2+t+1"), 1) == std::optional<bool>(false));
}

TEST_CASE("rational gcd with integer output") {
  CHECK(gcd_qz(mul(kQuartic, parse_poly("t+1")), mul(kQuartic, parse_poly("t-3"))) ==
        canon(kQuartic));
  CHECK(gcd_qz(parse_poly("t-2"), parse_poly("t-3")) == ZPoly::one());
  CHECK(gcd_qz(parse_poly("2*t-2"), parse_poly("4*t-4")) == parse_poly("t-1"));
}

TEST_CASE("squarefree decomposition") {
  ZPoly f = mul(mul(parse_poly("t-2"), parse_poly("t-2")), parse_poly("t+3"));
  auto parts = squarefree_decompose(f);
  REQUIRE(parts.size() == 2);
  CHECK(parts[0].first == parse_poly("t+3"));
  CHECK(parts[0].second == 1);
  CHECK(parts[1].first == parse_poly("t-2"));
  CHECK(parts[1].second == 2);
  Rng rng(0x3f03);
  for (int k = 0; k < 100; ++k) {
    ZPoly a = testgen::rand_nonzero_zpoly(rng, 3, 4);
    ZPoly b = testgen::rand_nonzero_zpoly(rng, 3, 4);
    ZPoly m = mul(mul(a, a), b);
    if (m.span() == 0) continue;
    m = shifted(m, -m.min_exp());
    ZPoly rebuilt = ZPoly::one();
    unsigned long last = 0;
    for (const auto& [part, mult] : squarefree_decompose(m)) {
      CHECK(mult > last);
      last = mult;
      rebuilt = mul(rebuilt, pow_poly(part, mult));
    }
    CHECK(unit_equal(rebuilt, primitive_part(m)));
  }
}

TEST_CASE("fox_witnesses on the printed examples") {
  std::vector<SliceWitness> st = fox_witnesses(parse_poly("-2*t+5-2*t^-1"));
  REQUIRE(st.size() == 2);
  CHECK(contains_class(st, parse_poly("2*t-1")));
  CHECK(contains_class(st, parse_poly("2-t")));
  for (const SliceWitness& w : st) {
    CHECK(augment(w.p) == Int(1));
    CHECK(w.p.min_exp() == 0);
  }
  CHECK(fox_witnesses(kQuartic).empty());
  std::vector<SliceWitness> sq = fox_witnesses(mul(kQuartic, kQuartic));
  REQUIRE(sq.size() == 1);
  CHECK(contains_class(sq, kQuartic));
  std::vector<SliceWitness> one = fox_witnesses(ZPoly::one());
  REQUIRE(one.size() == 1);
  CHECK(one[0].p == ZPoly::one());
}

TEST_CASE("fox_witnesses rejects bad input") {
  CHECK_THROWS_AS((void)fox_witnesses(parse_poly("t+1")), precondition_error);
  CHECK_THROWS_AS((void)fox_witnesses(parse_poly("1-2*t")), precondition_error);
}

TEST_CASE("fox_witnesses recovers every constructed factorization") {
  Rng rng(0x3f04);
  for (int k = 0; k < 200; ++k) {
    ZPoly p = testgen::rand_aug_one_zpoly(rng, 5, 4);
    ZPoly delta = mul(p, invert_t(p));
    std::vector<SliceWitness> ws = fox_witnesses(delta);
    CHECK(contains_class(ws, p));
    for (const SliceWitness& w : ws) CHECK(unit_equal(mul(w.p, invert_t(w.p)), delta));
  }
}

TEST_CASE("symmetric divisors") {
  std::vector<ZPoly> sq = symmetric_divisors(mul(kQuartic, kQuartic));
  REQUIRE(sq.size() == 3);
  bool hasOne = false, hasQuartic = false, hasSquare = false;
  for (const ZPoly& d : sq) {
    CHECK(is_self_reciprocal(d));
    CHECK(augment(d) == Int(1));
    CHECK(divides(d, mul(kQuartic, kQuartic)).has_value());
    if (unit_equal(d, ZPoly::one())) hasOne = true;
    if (unit_equal(d, kQuartic)) hasQuartic = true;
    if (unit_equal(d, mul(kQuartic, kQuartic))) hasSquare = true;
  }
  CHECK(hasOne);
  CHECK(hasQuartic);
  CHECK(hasSquare);

  std::vector<ZPoly> st = symmetric_divisors(parse_poly("-2*t+5-2*t^-1"));
  REQUIRE(st.size() == 2);
  bool stOne = unit_equal(st[0], ZPoly::one()) || unit_equal(st[1], ZPoly::one());
  bool stFull = unit_equal(st[0], parse_poly("-2*t+5-2*t^-1")) ||
                unit_equal(st[1], parse_poly("-2*t+5-2*t^-1"));
  CHECK(stOne);
  CHECK(stFull);
  std::vector<ZPoly> st2 = symmetric_divisors(parse_poly("-2*t+5-2*t^-1"));
  CHECK(st.size() == st2.size());
  for (size_t i = 0; i < st.size(); ++i) CHECK(st[i] == st2[i]);
}

TEST_CASE("factor extraction lemma") {
  Rng rng(0x3f05);
  for (int k = 0; k < 500; ++k) {
    ZPoly p = testgen::rand_nonzero_zpoly(rng, 3, 4);
    ZPoly b = testgen::rand_nonzero_zpoly(rng, 3, 4);
    ZPoly f = mul(p, invert_t(p));
    ZPoly a = mul(p, b);
    ZPoly c = lemma_factor_extract(f, a, b);
    CHECK(unit_equal(mul(c, invert_t(c)), f));
  }
}
