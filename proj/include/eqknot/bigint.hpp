// Exact integer/rational scalars and the few helpers the polynomial layers need.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace eqknot {

using Int = mpz_class;
using Rat = mpq_class;

// Thrown when an input violates a documented precondition.
struct precondition_error : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// Thrown when an internal consistency check fails; indicates a bug, not bad input.
struct invariant_error : std::logic_error {
  using std::logic_error::logic_error;
};

inline int sgn_of(const Int& a) { return mpz_sgn(a.get_mpz_t()); }
inline int sgn_of(const Rat& a) { return mpq_sgn(a.get_mpq_t()); }

inline bool is_zero(const Int& a) { return sgn_of(a) == 0; }
inline bool is_zero(const Rat& a) { return sgn_of(a) == 0; }

// Exact division; returns false when b does not divide a.
inline bool div_exact(const Int& a, const Int& b, Int& out) {
  if (is_zero(b)) return false;
  if (!mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t())) return false;
  mpz_divexact(out.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return true;
}
inline bool div_exact(const Rat& a, const Rat& b, Rat& out) {
  if (is_zero(b)) return false;
  out = a / b;
  return true;
}

inline Int gcd_int(const Int& a, const Int& b) {
  Int g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline Int abs_int(const Int& a) {
  Int r;
  mpz_abs(r.get_mpz_t(), a.get_mpz_t());
  return r;
}

inline Int pow_int(const Int& base, unsigned long e) {
  Int r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

// Ceiling of sqrt(a); a >= 0.
inline Int sqrt_ceil(const Int& a) {
  Int r;
  mpz_sqrt(r.get_mpz_t(), a.get_mpz_t());
  if (r * r < a) r += 1;
  return r;
}

inline std::uint64_t mix_hash(std::uint64_t h, std::uint64_t v) {
  h ^= v + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
  return h;
}

inline std::uint64_t hash_of(const Int& a) {
  // Fold the limbs; only used to seed deterministic internal randomness.
  std::uint64_t h = mpz_sgn(a.get_mpz_t()) < 0 ? 0x5851f42d4c957f2dull : 0;
  for (std::size_t i = 0; i < mpz_size(a.get_mpz_t()); ++i)
    h = mix_hash(h, static_cast<std::uint64_t>(mpz_getlimbn(a.get_mpz_t(), i)));
  return h;
}

}  // namespace eqknot
