// Character components of group-ring polynomials over cyclotomic integers,
// and the exact product over all q-th roots of unity (computed two
// independent ways that must agree).
#pragma once

#include <eqknot/groupring.hpp>

namespace eqknot {

inline constexpr long kDefaultMaxQ = 12;

long euler_phi(long d);
std::vector<long> divisors_of(long q);

// d-th cyclotomic polynomial, dense in x (returned in t's slot), exact.
ZPoly cyclotomic_poly(long d);

// Element of (Z[x]/Phi_d)[t, t^-1]: coefficient of x^i is c[i].
struct CycloElem {
  long d = 1;
  std::vector<ZPoly> c;  // size euler_phi(d)

  bool is_x_free() const {
    for (size_t i = 1; i < c.size(); ++i)
      if (!c[i].is_zero()) return false;
    return true;
  }
};

struct CharacterComponents {
  long q = 1;
  std::vector<std::pair<long, CycloElem>> parts;  // keyed by divisor d of q, ascending
};

CycloElem component_of(const GroupRingPoly& a, long d);
CycloElem ce_mul(const CycloElem& a, const CycloElem& b);
CycloElem ce_sigma(const CycloElem& a, long k);  // Galois action x -> x^k, gcd(k,d) = 1

// All divisor components; injective on GroupRingPoly.
CharacterComponents to_components(const GroupRingPoly& a, long max_q = kDefaultMaxQ);

// Product of all Galois conjugates of the d-component; x-free by symmetry.
ZPoly component_norm(const CycloElem& a);

// Resultant Res_g(g^q - 1, a(g,t)): the exact product of evaluations of a at
// all q-th roots of unity, canonicalized.  Asserts the Sylvester-determinant
// route and the cyclotomic-norm route agree exactly.
ZPoly norm_product(const GroupRingPoly& a, long max_q = kDefaultMaxQ);

// Determinant of a square matrix with integer Laurent polynomial entries
// (fraction-free Bareiss elimination; exact division at every step).
ZPoly zpoly_mat_det(std::vector<std::vector<ZPoly>> m);

}  // namespace eqknot
