// Polynomials over GF(2), bit-packed.  Used for mod-2 residue classes of
// Laurent polynomials; the canonical class representative has minimum
// exponent 0 (t is a unit at the Laurent level).
#pragma once

#include <eqknot/laurent.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace eqknot {

class GF2Poly {
 public:
  GF2Poly() = default;

  static GF2Poly zero() { return GF2Poly(); }
  static GF2Poly one() { return monomial(0); }
  static GF2Poly monomial(long e);
  static GF2Poly from_exponents(const std::vector<long>& es);

  bool is_zero() const { return words_.empty(); }
  bool is_one() const { return words_.size() == 1 && words_[0] == 1; }
  long degree() const;   // -1 for zero
  long min_exp() const;  // lowest set exponent; requires nonzero

  bool get(long e) const;
  void flip(long e);

  std::vector<long> exponents() const;

  bool operator==(const GF2Poly& o) const { return words_ == o.words_; }
  bool operator!=(const GF2Poly& o) const { return !(*this == o); }
  bool operator<(const GF2Poly& o) const;  // degree, then bit value

  friend GF2Poly gf2_add(const GF2Poly& a, const GF2Poly& b);
  friend GF2Poly gf2_mul(const GF2Poly& a, const GF2Poly& b);
  friend GF2Poly gf2_shift(const GF2Poly& a, long k);  // k may be negative if bits allow

 private:
  std::vector<std::uint64_t> words_;  // bit e of words_[e/64]; no high zero words
  void trim();
};

GF2Poly gf2_add(const GF2Poly& a, const GF2Poly& b);
GF2Poly gf2_mul(const GF2Poly& a, const GF2Poly& b);
GF2Poly gf2_shift(const GF2Poly& a, long k);

// quotient/remainder of honest polynomial division; b nonzero.
std::pair<GF2Poly, GF2Poly> gf2_divmod(const GF2Poly& a, const GF2Poly& b);
GF2Poly gf2_gcd(GF2Poly a, GF2Poly b);

// t^deg * a(1/t): coefficient list reversed.  Maps the class of a to the
// class of its reciprocal.
GF2Poly gf2_reverse(const GF2Poly& a);

// Class representative: strip the largest power of t.  canon(0) = 0.
GF2Poly gf2_canon(const GF2Poly& a);

// Evaluation at t = 1 (parity of the number of terms).
int gf2_eval1(const GF2Poly& a);

// Square root when every exponent is even (Frobenius), else nullopt.
std::optional<GF2Poly> gf2_sqrt(const GF2Poly& a);

// Mod-2 residue class of an integer Laurent polynomial, canonical rep.
GF2Poly mod2(const ZPoly& p);

bool gf2_is_irreducible(const GF2Poly& a);

struct GF2Factor {
  GF2Poly factor;
  unsigned long multiplicity;
};

// Complete factorization of the canonical class rep into irreducibles with
// constant term 1, ascending (degree, bit value).  Input nonzero.
std::vector<GF2Factor> factor_GF2(const GF2Poly& a);

std::string to_string(const GF2Poly& a);

}  // namespace eqknot
