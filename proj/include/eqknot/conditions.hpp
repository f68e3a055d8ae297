// Decision procedures for the slice/ribbon conditions on Alexander-type
// polynomials: Fox factorization, the Murasugi condition checklist, the
// q-equivariant slice/ribbon verifiers, and the witness constructions
// (mod-q ribbon witness, 2-equivariant slice/ribbon witnesses).
#pragma once

#include <eqknot/cyclotomic.hpp>
#include <eqknot/factor.hpp>
#include <eqknot/groupring.hpp>

#include <optional>
#include <string>

namespace eqknot {

// Witness for the q-equivariant slice condition:
//   deltaZq * b * involute(b) = a * involute(a) up to unit,
//   a(g,1) and b(g,1) trivial units.
struct EqSliceWitness {
  long q;
  GroupRingPoly deltaZq;
  GroupRingPoly a;
  GroupRingPoly b;
};

// Witness for the q-equivariant ribbon condition:
//   deltaZq = a * involute(a) up to unit, a(g,1) a trivial unit.
struct EqRibbonWitness {
  long q;
  GroupRingPoly a;
};

// Decision result: YES carries a witness that re-verifies; NO carries the
// size of the exhausted candidate space and a one-line certificate.
template <class W>
struct Verdict {
  bool yes = false;
  std::optional<W> witness;
  unsigned long candidates = 0;
  std::string certificate;
};

// Witness pair for the 2-equivariant checks: p covers the knot polynomial,
// q the quotient polynomial.
struct FoxPair {
  ZPoly p;
  ZPoly q;
};

struct MurasugiRecord {
  bool symmetric;        // invariant under the involution, up to unit
  bool augments;         // value at t = 1 is a trivial unit
  ZPoly knotPoly;        // norm over all q-th roots of unity
  ZPoly quotientPoly;    // value at g = 1
  bool quotientDivides;  // quotientPoly | knotPoly in the Laurent ring
};

// YES with the first Fox witness in canonical order, or NO with the
// factorization-based certificate.  Requires is_abstract_alexander(delta).
Verdict<SliceWitness> check_fox_slice(const ZPoly& delta);

MurasugiRecord check_murasugi(const GroupRingPoly& m, long max_q = kDefaultMaxQ);

bool verify_eqslice(const EqSliceWitness& w);
bool verify_eqribbon(const EqRibbonWitness& w, const GroupRingPoly& deltaZq);

// a(g,t) = (1 + g + ... + g^(q-1)) h(t) + 1 where p = q h + 1 after the
// unique unit alignment of p.  Requires p(1) = 1 and p = 1 mod q (exactly
// one coefficient of p not divisible by q).  Postconditions re-verified:
// a(1,t) = p, norm_product(a * involute(a)) = p * reciprocal(p) up to unit.
EqRibbonWitness modq_witness(const ZPoly& p, long q, long max_q = kDefaultMaxQ);

// Whether modq_witness applies: exactly one coefficient of p is not
// divisible by q, and that coefficient is +-1 mod q.  Always true for q = 1.
bool modq_congruent(const ZPoly& p, long q);

// 2-equivariant slice test: YES iff mod2(delta) = mod2(deltaQuot)^2 as
// classes and some Fox pair (p of delta, q of deltaQuot) has q | p.
// Requires both abstract Alexander and deltaQuot | delta.
Verdict<FoxPair> check_2eq_slice(const ZPoly& delta, const ZPoly& deltaQuot);

// 2-equivariant ribbon test: YES iff some Fox pair has q | p and
// mod2(p) = mod2(q)^2 as classes.  Same preconditions.
Verdict<FoxPair> check_2eq_ribbon(const ZPoly& delta, const ZPoly& deltaQuot);

// Constructs the full q = 2 slice witness from a Fox pair satisfying the
// 2-equivariant slice conditions, by matching GF(2) factors of r = p/q into
// c, d with r = c d and q = c reciprocal(d) mod 2, lifting, and assembling
//   deltaZ2 = [q qbar | r rbar],  b = c d,  a = [q cbar d | r cbar dbar]
// componentwise (g = 1 slot first).  verify_eqslice holds on the output.
// Throws invariant_error naming the offending factor if matching fails.
EqSliceWitness build_2eq_slice_witness(const ZPoly& p, const ZPoly& q);

// a = [q | r] componentwise for r = p/q; requires mod2(r) = mod2(q).
// verify_eqribbon holds against [q qbar | r rbar].
EqRibbonWitness build_2eq_ribbon_witness(const ZPoly& p, const ZPoly& q);

// The deltaZ2 the ribbon witness verifies against: [q qbar | r rbar].
GroupRingPoly ribbon_witness_delta(const ZPoly& p, const ZPoly& q);

}  // namespace eqknot
