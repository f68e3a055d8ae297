#include <eqknot/gfp.hpp>

#include <algorithm>
#include <random>

namespace eqknot::gfp {

namespace {
long mulm(long a, long b, long p) {
  return static_cast<long>(static_cast<unsigned long long>(a) * static_cast<unsigned long long>(b) %
                           static_cast<unsigned long long>(p));
}
long addm(long a, long b, long p) {
  long s = a + b;
  return s >= p ? s - p : s;
}
long subm(long a, long b, long p) {
  long s = a - b;
  return s < 0 ? s + p : s;
}
}  // namespace

long inv_mod(long a, long p) {
  long t = 0, newt = 1, r = p, newr = a % p;
  while (newr != 0) {
    long q = r / newr;
    t -= q * newt;
    std::swap(t, newt);
    r -= q * newr;
    std::swap(r, newr);
  }
  if (r != 1) throw invariant_error("inv_mod: not invertible");
  return ((t % p) + p) % p;
}

Poly trim(Poly a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

long degree(const Poly& a) { return static_cast<long>(a.size()) - 1; }

Poly add(const Poly& a, const Poly& b, long p) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < r.size(); ++i) {
    long v = 0;
    if (i < a.size()) v = a[i];
    if (i < b.size()) v = addm(v, b[i], p);
    r[i] = v;
  }
  return trim(std::move(r));
}

Poly sub(const Poly& a, const Poly& b, long p) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < r.size(); ++i) {
    long v = i < a.size() ? a[i] : 0;
    r[i] = subm(v, i < b.size() ? b[i] : 0, p);
  }
  return trim(std::move(r));
}

Poly scale(const Poly& a, long s, long p) {
  Poly r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = mulm(a[i], s % p, p);
  return trim(std::move(r));
}

Poly mul(const Poly& a, const Poly& b, long p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] = addm(r[i + j], mulm(a[i], b[j], p), p);
  }
  return trim(std::move(r));
}

Poly monic(const Poly& a, long p) {
  if (a.empty()) return a;
  return scale(a, inv_mod(a.back(), p), p);
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b, long p) {
  if (b.empty()) throw precondition_error("gfp::divmod: division by zero");
  Poly r = a;
  long db = degree(b);
  if (degree(a) < db) return {{}, r};
  Poly q(a.size() - b.size() + 1, 0);
  long binv = inv_mod(b.back(), p);
  for (long i = degree(r); i >= db; --i) {
    size_t ii = static_cast<size_t>(i);
    if (ii >= r.size() || r[ii] == 0) continue;
    long c = mulm(r[ii], binv, p);
    q[static_cast<size_t>(i - db)] = c;
    for (long j = 0; j <= db; ++j) {
      size_t k = static_cast<size_t>(i - db + j);
      r[k] = subm(r[k], mulm(c, b[static_cast<size_t>(j)], p), p);
    }
  }
  return {trim(std::move(q)), trim(std::move(r))};
}

Poly gcd(Poly a, Poly b, long p) {
  while (!b.empty()) {
    Poly r = divmod(a, b, p).second;
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a, p);
}

Poly powmod(const Poly& base, const Int& e, const Poly& f, long p) {
  Poly result{1};
  Poly b = divmod(base, f, p).second;
  long bits = static_cast<long>(mpz_sizeinbase(e.get_mpz_t(), 2));
  for (long i = bits - 1; i >= 0; --i) {
    result = divmod(mul(result, result, p), f, p).second;
    if (mpz_tstbit(e.get_mpz_t(), static_cast<mp_bitcnt_t>(i)))
      result = divmod(mul(result, b, p), f, p).second;
  }
  return result;
}

Bezout ext_gcd(const Poly& a, const Poly& b, long p) {
  Poly r0 = a, r1 = b;
  Poly s0{1}, s1{}, t0{}, t1{1};
  while (!r1.empty()) {
    auto [q, r] = divmod(r0, r1, p);
    r0 = std::move(r1);
    r1 = std::move(r);
    Poly s2 = sub(s0, mul(q, s1, p), p);
    s0 = std::move(s1);
    s1 = std::move(s2);
    Poly t2 = sub(t0, mul(q, t1, p), p);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.empty()) throw precondition_error("ext_gcd: both inputs zero");
  long lead_inv = inv_mod(r0.back(), p);
  return {scale(r0, lead_inv, p), scale(s0, lead_inv, p), scale(t0, lead_inv, p)};
}

namespace {
Poly derivative(const Poly& a, long p) {
  Poly r;
  for (size_t i = 1; i < a.size(); ++i)
    r.push_back(mulm(a[i], static_cast<long>(i % static_cast<size_t>(p)), p));
  return trim(std::move(r));
}
}  // namespace

bool is_squarefree(const Poly& f, long p) {
  Poly d = derivative(f, p);
  if (d.empty()) return false;
  return degree(gcd(f, d, p)) == 0;
}

Poly from_zpoly(const ZPoly& f, long p) {
  if (f.is_zero()) return {};
  if (f.min_exp() < 0) throw precondition_error("gfp::from_zpoly: negative exponent");
  Poly r(static_cast<size_t>(f.max_exp()) + 1, 0);
  for (const auto& [e, c] : f.terms()) {
    Int m = c % p;
    long v = static_cast<long>(m.get_si());
    if (v < 0) v += p;
    r[static_cast<size_t>(e)] = v;
  }
  return trim(std::move(r));
}

namespace {

// Equal-degree splitting (Cantor-Zassenhaus, p odd): f monic squarefree, all
// irreducible factors of degree d.
void edf(const Poly& f, long d, long p, std::mt19937_64& rng, std::vector<Poly>& out) {
  if (degree(f) == d) {
    out.push_back(f);
    return;
  }
  Int exp = (pow_int(Int(p), static_cast<unsigned long>(d)) - 1) / 2;
  for (;;) {
    Poly r(static_cast<size_t>(degree(f)), 0);
    for (auto& c : r) c = static_cast<long>(rng() % static_cast<std::uint64_t>(p));
    r = trim(std::move(r));
    if (degree(r) < 1) continue;
    Poly s = powmod(r, exp, f, p);
    s = sub(s, Poly{1}, p);
    Poly w = gcd(s, f, p);
    if (degree(w) > 0 && degree(w) < degree(f)) {
      edf(w, d, p, rng, out);
      edf(divmod(f, w, p).first, d, p, rng, out);
      return;
    }
  }
}

}  // namespace

std::vector<Poly> factor_squarefree_monic(const Poly& f0, long p, std::uint64_t seed) {
  std::vector<Poly> out;
  Poly f = f0;
  if (degree(f) < 1) return out;
  std::mt19937_64 rng(seed);
  Poly x{0, 1};
  Poly h = x;
  long d = 0;
  while (degree(f) >= 2 * (d + 1)) {
    ++d;
    h = powmod(h, Int(p), f, p);
    Poly g = gcd(sub(h, x, p), f, p);
    if (degree(g) > 0) {
      edf(g, d, p, rng, out);
      f = divmod(f, g, p).first;
      h = divmod(h, f, p).second;
    }
  }
  if (degree(f) > 0) out.push_back(f);
  std::sort(out.begin(), out.end(), [](const Poly& a, const Poly& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    for (size_t i = a.size(); i-- > 0;)
      if (a[i] != b[i]) return a[i] < b[i];
    return false;
  });
  return out;
}

}  // namespace eqknot::gfp
