// Box diagrams, crossing lists, the equivariant linking sum, and the
// Murasugi polynomial as the determinant of the 2x2 presentation matrix.
#pragma once

#include <eqknot/cyclotomic.hpp>
#include <eqknot/groupring.hpp>

#include <vector>

namespace eqknot {

// One overcrossing: contributes sign * g^gExp * t^tExp to the linking sum.
struct CrossingRecord {
  int sign;    // +1 or -1
  long gExp;   // linking with the branch-curve lift, reduced mod q
  long tExp;   // linking with the knot lift
};

struct CrossingList {
  long q = 1;
  std::vector<CrossingRecord> records;
};

struct BoxEntry {
  long j;  // t-exponent
  Int a;   // nonzero multiplicity, signed
};

// Box i holds the coefficient list of h_i where the (normalized) witness is
// 1 + sum_i h_i(t) g^i.  Every box sums to zero.  The unit normalization
// applied to the witness is recorded: the boxes encode normSign * g^normGExp * a.
struct BoxDiagram {
  long q = 1;
  std::vector<std::vector<BoxEntry>> boxes;  // size q, entries ascending in j
  int normSign = 1;
  long normGExp = 0;
};

// [[0, a], [involute(a), star]]; determinant -a * involute(a).
struct PresentationMatrix {
  long q;
  GroupRingPoly e00, e01, e10, e11;
};

struct Realization {
  BoxDiagram boxes;
  CrossingList crossings;
  GroupRingPoly murasugi;  // a * involute(a), exact
  ZPoly knotPoly;          // norm over all q-th roots of unity
  ZPoly quotientPoly;      // value at g = 1
};

// Signed monomial sum over the records, canonicalized; the class, not the
// representative, is the invariant.  Requires c.q >= 1.
GroupRingPoly equivariant_linking(const CrossingList& c);

// Requires augment_t(a) to be a trivial unit; normalizes so the augmentation
// is exactly 1, then reads the boxes off a - 1.
BoxDiagram boxes_from_witness(const GroupRingPoly& a);

// One record per unit of |a_ij| with sign sgn(a_ij), preceded by the single
// constant record (+1, 0, 0).  Requires every box to sum to zero.
CrossingList crossings_from_boxes(const BoxDiagram& b);

PresentationMatrix presentation_matrix(const GroupRingPoly& a, const GroupRingPoly& star);

// det [[0, a], [involute(a), star]] = -a * involute(a), canonicalized;
// independent of star up to unit.
GroupRingPoly murasugi_from_linking(const GroupRingPoly& a, const GroupRingPoly& star);
GroupRingPoly murasugi_from_linking(const GroupRingPoly& a);

// Full pipeline: boxes, crossings, murasugi = a * involute(a) cross-checked
// against the linking recomputation, knot and quotient polynomials.
Realization realize(const GroupRingPoly& a, long max_q = kDefaultMaxQ);

}  // namespace eqknot
