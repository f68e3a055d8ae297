#include <doctest.h>

#include <eqknot/conditions.hpp>
#include <eqknot/construct.hpp>
#include <eqknot/parse.hpp>

#include "generators.hpp"

using namespace eqknot;
using testgen::Rng;

namespace {

const GroupRingPoly kStevedoreZ2 = parse_poly2("(g-1)*t+3-2*g+(g^-1-1)*t^-1", 2);

CrossingList make_crossings(long q, std::vector<CrossingRecord> rs) {
  CrossingList c;
  c.q = q;
  c.records = std::move(rs);
  return c;
}

}  // namespace

TEST_CASE("equivariant linking sums") {
  CHECK(equivariant_linking(make_crossings(3, {})).is_zero());
  GroupRingPoly l =
      equivariant_linking(make_crossings(2, {{1, 0, 0}, {-1, 1, 0}, {1, 1, 1}}));
  CHECK(gunit_equal(l, parse_poly2("1-g+g*t", 2)));
  GroupRingPoly single = equivariant_linking(make_crossings(4, {{-1, 6, -2}}));
  CHECK(gunit_equal(single, GroupRingPoly::constant(4, Int(1))));
  CHECK(equivariant_linking(make_crossings(2, {{1, 0, 0}, {-1, 2, 0}})).is_zero());
  CHECK_THROWS_AS((void)equivariant_linking(make_crossings(0, {})), precondition_error);
  CHECK_THROWS_AS((void)equivariant_linking(make_crossings(2, {{2, 0, 0}})),
                  precondition_error);
}

TEST_CASE("boxes from a witness") {
  BoxDiagram b = boxes_from_witness(parse_poly2("1-g+g*t", 2));
  CHECK(b.q == 2);
  REQUIRE(b.boxes.size() == 2);
  CHECK(b.boxes[0].empty());
  REQUIRE(b.boxes[1].size() == 2);
  CHECK(b.boxes[1][0].j == 0);
  CHECK(b.boxes[1][0].a == Int(-1));
  CHECK(b.boxes[1][1].j == 1);
  CHECK(b.boxes[1][1].a == Int(1));
  CHECK(b.normSign == 1);
  CHECK(b.normGExp == 0);

  BoxDiagram triv = boxes_from_witness(GroupRingPoly::constant(4, Int(1)));
  REQUIRE(triv.boxes.size() == 4);
  for (const auto& box : triv.boxes) CHECK(box.empty());

  BoxDiagram big = boxes_from_witness(parse_poly2("1+g^2*(3*t^4-t^2-2*t^-1)", 3));
  REQUIRE(big.boxes.size() == 3);
  CHECK(big.boxes[0].empty());
  CHECK(big.boxes[1].empty());
  REQUIRE(big.boxes[2].size() == 3);
  CHECK(big.boxes[2][0].j == -1);
  CHECK(big.boxes[2][0].a == Int(-2));
  CHECK(big.boxes[2][1].j == 2);
  CHECK(big.boxes[2][1].a == Int(-1));
  CHECK(big.boxes[2][2].j == 4);
  CHECK(big.boxes[2][2].a == Int(3));

  CHECK_THROWS_AS((void)boxes_from_witness(parse_poly2("3-2*g", 2)), precondition_error);
}

TEST_CASE("boxes record the normalizing unit") {
  GroupRingPoly w = parse_poly2("1-g+g*t", 2);
  BoxDiagram b = boxes_from_witness(gshift_unit(w, -1, 1, 2));
  CHECK(b.normSign == -1);
  CHECK(b.normGExp == 1);
  REQUIRE(b.boxes[1].size() == 2);
  CHECK(b.boxes[1][0].j == 2);
  CHECK(b.boxes[1][1].j == 3);
  GroupRingPoly l = equivariant_linking(crossings_from_boxes(b));
  CHECK(gunit_equal(l, w));
}

TEST_CASE("crossings from boxes") {
  BoxDiagram empty;
  empty.q = 2;
  empty.boxes.assign(2, {});
  CrossingList c0 = crossings_from_boxes(empty);
  REQUIRE(c0.records.size() == 1);
  CHECK(c0.records[0].sign == 1);
  CHECK(c0.records[0].gExp == 0);
  CHECK(c0.records[0].tExp == 0);

  BoxDiagram ex = boxes_from_witness(parse_poly2("1-g+g*t", 2));
  CrossingList c = crossings_from_boxes(ex);
  REQUIRE(c.records.size() == 3);
  CHECK(c.records[0].sign == 1);
  CHECK(c.records[1].sign == -1);
  CHECK(c.records[1].gExp == 1);
  CHECK(c.records[1].tExp == 0);
  CHECK(c.records[2].sign == 1);
  CHECK(c.records[2].gExp == 1);
  CHECK(c.records[2].tExp == 1);

  BoxDiagram big = boxes_from_witness(parse_poly2("1+g^2*(3*t^4-t^2-2*t^-1)", 3));
  CrossingList cb = crossings_from_boxes(big);
  CHECK(cb.records.size() == 7);  // constant + 2 + 1 + 3
  long negs = 0, pos = 0;
  for (const CrossingRecord& r : cb.records) (r.sign < 0 ? negs : pos) += 1;
  CHECK(pos == 4);
  CHECK(negs == 3);

  BoxDiagram bad;
  bad.q = 2;
  bad.boxes.assign(2, {});
  bad.boxes[1].push_back({0, Int(1)});  // box does not sum to zero
  CHECK_THROWS_AS((void)crossings_from_boxes(bad), precondition_error);
}

TEST_CASE("presentation matrix and its determinant") {
  GroupRingPoly a = parse_poly2("1+(g-1)*t", 2);
  GroupRingPoly star = parse_poly2("g*t^2-5", 2);
  PresentationMatrix m = presentation_matrix(a, star);
  CHECK(m.e00.is_zero());
  CHECK(m.e01 == a);
  CHECK(m.e10 == involute(a));
  CHECK(m.e11 == star);
  CHECK_THROWS_AS((void)presentation_matrix(a, parse_poly2("1", 3)), precondition_error);
}

TEST_CASE("murasugi polynomial from linking data") {
  GroupRingPoly a = parse_poly2("1-g+g*t", 2);
  GroupRingPoly m0 = murasugi_from_linking(a);
  GroupRingPoly m1 = murasugi_from_linking(a, GroupRingPoly::constant(2, Int(7)));
  GroupRingPoly m2 = murasugi_from_linking(a, parse_poly2("g*t^2-5", 2));
  CHECK(m0 == m1);  // star independence, exact canonical form
  CHECK(m0 == m2);
  CHECK(gunit_equal(m0, kStevedoreZ2));
  CHECK(gunit_equal(m0, gmul(a, involute(a))));

  Rng rng(0x5701);
  const long qs[] = {2, 3, 5};
  for (int k = 0; k < 200; ++k) {
    long q = qs[k % 3];
    GroupRingPoly x = testgen::rand_gpoly(rng, q, 3, 5);
    GroupRingPoly s1 = testgen::rand_gpoly(rng, q, 2, 5);
    GroupRingPoly s2 = testgen::rand_gpoly(rng, q, 2, 5);
    CHECK(murasugi_from_linking(x, s1) == murasugi_from_linking(x, s2));
    CHECK(gunit_equal(murasugi_from_linking(x, s1), gmul(x, involute(x))));
  }
}

TEST_CASE("realize on the ribbon witness") {
  Realization r = realize(parse_poly2("(g-1)*t+1", 2));
  CHECK(r.murasugi == kStevedoreZ2);  // exact, not just up to unit
  CHECK(unit_equal(r.knotPoly, parse_poly("-2*t+5-2*t^-1")));
  CHECK(r.quotientPoly == ZPoly::one());
  // augment_t(a) = g, so normalization multiplies by g: four box entries plus the base crossing
  REQUIRE(r.crossings.records.size() == 5);
  CHECK(gunit_equal(equivariant_linking(r.crossings), parse_poly2("(g-1)*t+1", 2)));

  Realization triv = realize(GroupRingPoly::constant(3, Int(1)));
  CHECK(gunit_equal(triv.murasugi, GroupRingPoly::constant(3, Int(1))));
  CHECK(unit_equal(triv.knotPoly, ZPoly::one()));
  CHECK(triv.crossings.records.size() == 1);
}

TEST_CASE("realize matches the mod q witness polynomials") {
  EqRibbonWitness w = modq_witness(parse_poly("1-2*t"), 2);
  Realization r = realize(w.a);
  CHECK(unit_equal(r.knotPoly, parse_poly("5-2*t-2*t^-1")));
  CHECK(unit_equal(r.quotientPoly, parse_poly("5-2*t-2*t^-1")));
  CHECK(unit_equal(r.knotPoly, r.quotientPoly));
}

TEST_CASE("realize round trip") {
  Rng rng(0x5702);
  const long qs[] = {2, 3, 5};
  for (int k = 0; k < 500; ++k) {
    long q = qs[k % 3];
    GroupRingPoly a = testgen::rand_witness_gpoly(rng, q, 2, 3);
    Realization r = realize(a);
    CHECK(r.murasugi == gmul(a, involute(a)));
    CHECK(gunit_equal(equivariant_linking(r.crossings), a));
    size_t weight = 1;
    for (const auto& box : r.boxes.boxes) {
      Int sum(0);
      for (const BoxEntry& e : box) {
        sum += e.a;
        weight += static_cast<size_t>(abs_int(e.a).get_si());
      }
      CHECK(sum == Int(0));
    }
    CHECK(r.crossings.records.size() == weight);
    MurasugiRecord m = check_murasugi(r.murasugi);
    CHECK(m.symmetric);
    CHECK(m.augments);
    CHECK(m.quotientDivides);
    CHECK(unit_equal(m.knotPoly, r.knotPoly));
    CHECK(m.quotientPoly == r.quotientPoly);
    CHECK(is_abstract_alexander(r.knotPoly));
  }
}

TEST_CASE("realize rejects non-witness input") {
  CHECK_THROWS_AS((void)realize(parse_poly2("1+g", 2)), precondition_error);
  CHECK_THROWS_AS((void)realize(GroupRingPoly::zero(2)), precondition_error);
}
