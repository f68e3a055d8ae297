// Complete irreducible factorization over Z[t] (Laurent classes), the
// reciprocal-pair bookkeeping on factor lists, Fox-factorization witnesses
// p * reciprocal(p) = Delta, symmetric divisor enumeration, and the
// extraction argument of the factorization lemma.
#pragma once

#include <eqknot/gf2.hpp>
#include <eqknot/laurent.hpp>

#include <vector>

namespace eqknot {

enum class Pairing { SelfReciprocal, PairedWithNext, PairedWithPrev, Unpaired };

struct FactorEntry {
  ZPoly poly;               // canonical form, irreducible over Z[t]
  unsigned long multiplicity;
  Pairing pairing;
};

struct IrreducibleFactorization {
  int sign = 1;
  std::vector<FactorEntry> factors;

  ZPoly product() const;  // sign * prod(poly^mult)
};

// Fox witness: representative with minimum exponent 0 and p(1) = 1.
struct SliceWitness {
  ZPoly p;
};

// Complete factorization over Z[t] after unit normalization; deterministic
// ordering (reciprocal partners adjacent, pairs ordered internally by the
// canonical comparator).  Input nonzero.
IrreducibleFactorization factor_Z(const ZPoly& a);

// Whether candidate has a proper divisor of degree <= maxdeg (Kronecker
// interpolation over small sample points); nullopt if certification was
// skipped because the search lattice exceeded the budget.
std::optional<bool> kronecker_has_divisor(const ZPoly& a, long maxdeg);

// gcd over Q[t] returned as a primitive integer polynomial, positive leading
// coefficient; inputs nonzero honest polynomials (min exponent >= 0).
ZPoly gcd_qz(const ZPoly& a, const ZPoly& b);

// Squarefree decomposition (Yun): list of (squarefree primitive part,
// multiplicity), multiplicities strictly increasing.
std::vector<std::pair<ZPoly, unsigned long>> squarefree_decompose(const ZPoly& f);

// All p with p * reciprocal(p) = Delta up to unit and p(1) = 1, one
// representative per unit class, deterministically ordered.
// Requires Delta(1) = +-1 and Delta self-reciprocal.
std::vector<SliceWitness> fox_witnesses(const ZPoly& delta);

// All divisors D of Delta up to unit with D self-reciprocal and D(1) = 1,
// from the factorization lattice; deterministic order.  Delta nonzero.
std::vector<ZPoly> symmetric_divisors(const ZPoly& delta);

// Given f*b*reciprocal(b) = a*reciprocal(a) up to unit (b nonzero), returns c
// with c*reciprocal(c) = f up to unit by redistributing the primes of b.
ZPoly lemma_factor_extract(const ZPoly& f, const ZPoly& a, const ZPoly& b);

}  // namespace eqknot
