#include <eqknot/construct.hpp>

#include <cassert>
#include <cstdlib>

namespace eqknot {

GroupRingPoly equivariant_linking(const CrossingList& c) {
  if (c.q < 1) throw precondition_error("equivariant_linking: q must be >= 1");
  GroupRingPoly sum(c.q);
  for (const CrossingRecord& r : c.records) {
    if (r.sign != 1 && r.sign != -1)
      throw precondition_error("equivariant_linking: crossing sign must be +-1");
    long i = ((r.gExp % c.q) + c.q) % c.q;
    sum.add_to_coeff(i, r.tExp, Int(r.sign));
  }
  if (sum.is_zero()) return sum;
  return gcanon(sum);
}

BoxDiagram boxes_from_witness(const GroupRingPoly& a) {
  auto unit = trivial_unit_info(augment_t(a));
  if (!unit) throw precondition_error("boxes_from_witness: augmentation is not a trivial unit");
  auto [s, k] = *unit;
  // a' = s g^(q-k) a has augmentation exactly 1
  long shift = (a.q() - k) % a.q();
  GroupRingPoly norm = gshift_unit(a, s, shift, 0);
  norm.add_to_coeff(0, 0, Int(-1));

  BoxDiagram b;
  b.q = a.q();
  b.boxes.assign(static_cast<size_t>(b.q), {});
  b.normSign = s;
  b.normGExp = shift;
  for (const auto& [key, c] : norm.terms())
    b.boxes[static_cast<size_t>(key.first)].push_back(BoxEntry{key.second, c});
  for (const auto& box : b.boxes) {
    Int total = 0;
    for (const BoxEntry& e : box) total += e.a;
    if (!is_zero(total)) throw invariant_error("boxes_from_witness: box does not sum to zero");
  }
  return b;
}

CrossingList crossings_from_boxes(const BoxDiagram& b) {
  if (b.q < 1) throw precondition_error("crossings_from_boxes: q must be >= 1");
  if (b.boxes.size() != static_cast<size_t>(b.q))
    throw precondition_error("crossings_from_boxes: expected one box per group element");
  CrossingList c;
  c.q = b.q;
  c.records.push_back(CrossingRecord{1, 0, 0});
  for (size_t i = 0; i < b.boxes.size(); ++i) {
    Int total = 0;
    for (const BoxEntry& e : b.boxes[i]) {
      if (is_zero(e.a)) throw precondition_error("crossings_from_boxes: zero box entry");
      total += e.a;
      if (!e.a.fits_slong_p())
        throw precondition_error("crossings_from_boxes: box entry too large to expand");
      long n = e.a.get_si();
      int sign = n > 0 ? 1 : -1;
      for (long k = std::labs(n); k > 0; --k)
        c.records.push_back(CrossingRecord{sign, static_cast<long>(i), e.j});
    }
    if (!is_zero(total)) throw precondition_error("crossings_from_boxes: box does not sum to zero");
  }
  return c;
}

PresentationMatrix presentation_matrix(const GroupRingPoly& a, const GroupRingPoly& star) {
  if (star.q() != a.q()) throw precondition_error("presentation_matrix: mismatched q");
  return PresentationMatrix{a.q(), GroupRingPoly(a.q()), a, involute(a), star};
}

GroupRingPoly murasugi_from_linking(const GroupRingPoly& a, const GroupRingPoly& star) {
  PresentationMatrix m = presentation_matrix(a, star);
  GroupRingPoly det = gsub(gmul(m.e00, m.e11), gmul(m.e01, m.e10));
  if (det.is_zero()) return det;
  return gcanon(det);
}

GroupRingPoly murasugi_from_linking(const GroupRingPoly& a) {
  return murasugi_from_linking(a, GroupRingPoly(a.q()));
}

Realization realize(const GroupRingPoly& a, long max_q) {
  BoxDiagram boxes = boxes_from_witness(a);
  CrossingList crossings = crossings_from_boxes(boxes);
  GroupRingPoly murasugi = gmul(a, involute(a));
  GroupRingPoly recomputed = murasugi_from_linking(equivariant_linking(crossings));
  if (!gunit_equal(murasugi, recomputed))
    throw invariant_error("realize: linking recomputation disagrees with a * involute(a)");
  Realization r{std::move(boxes), std::move(crossings), murasugi, norm_product(murasugi, max_q),
                augment_g(murasugi)};
  return r;
}

}  // namespace eqknot
