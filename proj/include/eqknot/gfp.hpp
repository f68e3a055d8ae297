// Dense polynomial arithmetic over GF(p) for odd machine-word primes.
// Internal engine for the integer factorizer (distinct-degree plus
// Cantor-Zassenhaus equal-degree splitting, deterministic seeding).
#pragma once

#include <eqknot/laurent.hpp>

#include <cstdint>
#include <vector>

namespace eqknot::gfp {

// Coefficients ascending, in [0, p); no trailing zeros (zero poly = empty).
using Poly = std::vector<long>;

long inv_mod(long a, long p);

Poly trim(Poly a);
long degree(const Poly& a);  // -1 for zero
Poly add(const Poly& a, const Poly& b, long p);
Poly sub(const Poly& a, const Poly& b, long p);
Poly scale(const Poly& a, long s, long p);
Poly mul(const Poly& a, const Poly& b, long p);
Poly monic(const Poly& a, long p);

// a = q*b + r with deg r < deg b; b nonzero.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b, long p);
Poly gcd(Poly a, Poly b, long p);  // monic

// base^e mod f, exponent arbitrary precision.
Poly powmod(const Poly& base, const Int& e, const Poly& f, long p);

// Extended Euclid: returns (g, s, t) with s*a + t*b = g, g monic.
struct Bezout {
  Poly g, s, t;
};
Bezout ext_gcd(const Poly& a, const Poly& b, long p);

bool is_squarefree(const Poly& f, long p);

// Reduce an integer polynomial (minimum exponent >= 0) mod p.
Poly from_zpoly(const ZPoly& f, long p);

// Monic irreducible factors of a monic squarefree f, ascending
// (degree, coefficient vector).  Deterministic for a given seed.
std::vector<Poly> factor_squarefree_monic(const Poly& f, long p, std::uint64_t seed);

}  // namespace eqknot::gfp
