// Reidemeister torsion of finite based acyclic chain complexes over Q(t):
// chain contraction by exact linear algebra, det(boundary + contraction),
// short-exact-sequence multiplicativity, and the dual complex.
#pragma once

#include <eqknot/ratfun.hpp>

#include <vector>

namespace eqknot {

// Row convention: row = source basis vector, so the composite "f then g"
// has matrix M_f * M_g.
using RMatrix = std::vector<std::vector<RatFun>>;

RMatrix rm_zero(long rows, long cols);
RMatrix rm_identity(long n);
RMatrix rm_sub(const RMatrix& a, const RMatrix& b);
// bcols is explicit so rank-zero levels keep their shapes.
RMatrix rm_mul(const RMatrix& a, const RMatrix& b, long bcols);
RMatrix rm_transpose(const RMatrix& a, long acols);
bool rm_is_zero(const RMatrix& a);
RatFun rm_det(RMatrix a);

// ranks[i] = rank of C_i; boundaries[k] = matrix of d_(k+1): C_(k+1) -> C_k
// with shape ranks[k+1] x ranks[k].
struct BasedChainComplex {
  std::vector<long> ranks;
  std::vector<RMatrix> boundaries;
};

// Shape and d∘d = 0 check; throws precondition_error on violation.
void validate_complex(const BasedChainComplex& c);

// det(d + Gamma : C_odd -> C_even) for a chain contraction Gamma computed
// by exact column reduction.  Throws precondition_error when the complex is
// not acyclic.  For a two-term complex this is det(d_1).
RatFun torsion(const BasedChainComplex& c);

// Which rows of the middle complex's basis carry the subcomplex, per degree;
// the remaining rows map onto the quotient basis in order.
struct SesData {
  std::vector<std::vector<long>> primeIndices;
};

// True iff torsion(c) = +- torsion(cPrime) * torsion(cDoublePrime).
// Throws precondition_error when the ranks are incompatible with a short
// exact sequence in the given bases.
bool ses_torsion_check(const BasedChainComplex& cPrime, const BasedChainComplex& c,
                       const BasedChainComplex& cDoublePrime, const SesData& s);

// Transposed boundaries, reindexed i -> n-i for n the top degree, with the
// involution t -> 1/t applied entrywise when the flag is set.
BasedChainComplex dual_complex(const BasedChainComplex& c, bool involutionFlag = true);

}  // namespace eqknot
