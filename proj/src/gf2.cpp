#include <eqknot/gf2.hpp>

#include <algorithm>

namespace eqknot {

namespace {
constexpr long kWordBits = 64;
}

void GF2Poly::trim() {
  while (!words_.empty() && words_.back() == 0) words_.pop_back();
}

GF2Poly GF2Poly::monomial(long e) {
  GF2Poly p;
  p.flip(e);
  return p;
}

GF2Poly GF2Poly::from_exponents(const std::vector<long>& es) {
  GF2Poly p;
  for (long e : es) p.flip(e);
  return p;
}

long GF2Poly::degree() const {
  if (words_.empty()) return -1;
  std::uint64_t top = words_.back();
  long bit = 63;
  while (!(top >> bit & 1)) --bit;
  return static_cast<long>(words_.size() - 1) * kWordBits + bit;
}

long GF2Poly::min_exp() const {
  assert(!words_.empty());
  for (size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] == 0) continue;
    std::uint64_t w = words_[i];
    long bit = 0;
    while (!(w >> bit & 1)) ++bit;
    return static_cast<long>(i) * kWordBits + bit;
  }
  return -1;
}

bool GF2Poly::get(long e) const {
  if (e < 0) return false;
  size_t w = static_cast<size_t>(e / kWordBits);
  if (w >= words_.size()) return false;
  return words_[w] >> (e % kWordBits) & 1;
}

void GF2Poly::flip(long e) {
  assert(e >= 0);
  size_t w = static_cast<size_t>(e / kWordBits);
  if (w >= words_.size()) words_.resize(w + 1, 0);
  words_[w] ^= std::uint64_t(1) << (e % kWordBits);
  trim();
}

std::vector<long> GF2Poly::exponents() const {
  std::vector<long> es;
  for (size_t i = 0; i < words_.size(); ++i)
    for (long b = 0; b < kWordBits; ++b)
      if (words_[i] >> b & 1) es.push_back(static_cast<long>(i) * kWordBits + b);
  return es;
}

bool GF2Poly::operator<(const GF2Poly& o) const {
  long da = degree(), db = o.degree();
  if (da != db) return da < db;
  for (size_t i = std::max(words_.size(), o.words_.size()); i-- > 0;) {
    std::uint64_t wa = i < words_.size() ? words_[i] : 0;
    std::uint64_t wb = i < o.words_.size() ? o.words_[i] : 0;
    if (wa != wb) return wa < wb;
  }
  return false;
}

GF2Poly gf2_add(const GF2Poly& a, const GF2Poly& b) {
  GF2Poly r;
  r.words_.resize(std::max(a.words_.size(), b.words_.size()), 0);
  for (size_t i = 0; i < r.words_.size(); ++i) {
    std::uint64_t w = 0;
    if (i < a.words_.size()) w ^= a.words_[i];
    if (i < b.words_.size()) w ^= b.words_[i];
    r.words_[i] = w;
  }
  r.trim();
  return r;
}

GF2Poly gf2_shift(const GF2Poly& a, long k) {
  if (a.is_zero() || k == 0) return a;
  GF2Poly r;
  for (long e : a.exponents()) {
    assert(e + k >= 0);
    r.flip(e + k);
  }
  return r;
}

GF2Poly gf2_mul(const GF2Poly& a, const GF2Poly& b) {
  GF2Poly r;
  if (a.is_zero() || b.is_zero()) return r;
  for (long e : a.exponents()) r = gf2_add(r, gf2_shift(b, e));
  return r;
}

std::pair<GF2Poly, GF2Poly> gf2_divmod(const GF2Poly& a, const GF2Poly& b) {
  if (b.is_zero()) throw precondition_error("gf2_divmod: division by zero");
  GF2Poly q, r = a;
  long db = b.degree();
  while (!r.is_zero() && r.degree() >= db) {
    long shift = r.degree() - db;
    q.flip(shift);
    r = gf2_add(r, gf2_shift(b, shift));
  }
  return {q, r};
}

GF2Poly gf2_gcd(GF2Poly a, GF2Poly b) {
  while (!b.is_zero()) {
    GF2Poly r = gf2_divmod(a, b).second;
    a = b;
    b = r;
  }
  return a;
}

GF2Poly gf2_reverse(const GF2Poly& a) {
  if (a.is_zero()) return a;
  long d = a.degree();
  GF2Poly r;
  for (long e : a.exponents()) r.flip(d - e);
  return r;
}

GF2Poly gf2_canon(const GF2Poly& a) {
  if (a.is_zero()) return a;
  return gf2_shift(a, -a.min_exp());
}

int gf2_eval1(const GF2Poly& a) {
  return static_cast<int>(a.exponents().size() & 1);
}

std::optional<GF2Poly> gf2_sqrt(const GF2Poly& a) {
  if (a.is_zero()) return GF2Poly::zero();
  GF2Poly s;
  for (long e : a.exponents()) {
    if (e & 1) return std::nullopt;
    s.flip(e / 2);
  }
  return s;
}

GF2Poly mod2(const ZPoly& p) {
  std::vector<long> odd;
  for (const auto& [e, c] : p.terms())
    if (mpz_odd_p(c.get_mpz_t())) odd.push_back(e);
  if (odd.empty()) return GF2Poly::zero();
  long lo = *std::min_element(odd.begin(), odd.end());
  GF2Poly r;
  for (long e : odd) r.flip(e - lo);
  return r;
}

namespace {

// Enumerate candidate divisors with constant term 1 in ascending
// (degree, value) order: bit pattern 2k+1 for degree d means poly
// t^d + (bits of k at exponents 1..d-1) + 1.
GF2Poly candidate(long deg, std::uint64_t inner) {
  GF2Poly p = GF2Poly::monomial(deg);
  p.flip(0);
  for (long b = 1; b < deg; ++b)
    if (inner >> (b - 1) & 1) p.flip(b);
  return p;
}

}  // namespace

bool gf2_is_irreducible(const GF2Poly& a0) {
  GF2Poly a = gf2_canon(a0);
  long d = a.degree();
  if (d <= 0) return false;
  for (long dd = 1; dd <= d / 2; ++dd)
    for (std::uint64_t inner = 0; inner < (std::uint64_t(1) << (dd - 1 > 0 ? dd - 1 : 0)); ++inner)
      if (gf2_divmod(a, candidate(dd, inner)).second.is_zero()) return false;
  return true;
}

std::vector<GF2Factor> factor_GF2(const GF2Poly& a0) {
  if (a0.is_zero()) throw precondition_error("factor_GF2: zero polynomial");
  GF2Poly rem = gf2_canon(a0);
  std::vector<GF2Factor> out;
  long dd = 1;
  std::uint64_t inner = 0;
  while (rem.degree() > 0) {
    if (dd > rem.degree() / 2) {
      // Remainder is irreducible.
      out.push_back({rem, 1});
      break;
    }
    std::uint64_t limit = std::uint64_t(1) << (dd - 1 > 0 ? dd - 1 : 0);
    if (inner >= limit) {
      ++dd;
      inner = 0;
      continue;
    }
    GF2Poly cand = candidate(dd, inner);
    unsigned long mult = 0;
    for (;;) {
      auto [q, r] = gf2_divmod(rem, cand);
      if (!r.is_zero()) break;
      rem = q;
      ++mult;
    }
    if (mult > 0) out.push_back({cand, mult});
    ++inner;
  }
  return out;
}

std::string to_string(const GF2Poly& a) {
  if (a.is_zero()) return "0";
  std::vector<long> es = a.exponents();
  std::string s;
  for (auto it = es.rbegin(); it != es.rend(); ++it) {
    if (!s.empty()) s += "+";
    if (*it == 0)
      s += "1";
    else if (*it == 1)
      s += "t";
    else
      s += "t^" + std::to_string(*it);
  }
  return s;
}

}  // namespace eqknot
