#include <eqknot/factor.hpp>
#include <eqknot/gfp.hpp>

#include <algorithm>
#include <map>
#include <numeric>

namespace eqknot {

ZPoly IrreducibleFactorization::product() const {
  ZPoly r = ZPoly::constant(Int(sign));
  for (const auto& fe : factors) r = mul(r, pow_poly(fe.poly, fe.multiplicity));
  return r;
}

namespace {

QPoly q_monic(const QPoly& a) {
  if (a.is_zero()) return a;
  return scaled(a, Rat(Rat(1) / a.terms().rbegin()->second));
}

QPoly q_rem(const QPoly& a, const QPoly& b) {
  // b nonzero; honest polynomials
  QPoly r = a;
  long db = b.max_exp();
  Rat lead = b.terms().rbegin()->second;
  while (!r.is_zero() && r.max_exp() >= db) {
    Rat c = r.terms().rbegin()->second / lead;
    r = sub(r, shifted(scaled(b, c), r.max_exp() - db));
  }
  return r;
}

// Exact quotient; throws if not divisible (used where divisibility is known).
ZPoly exact_div(const ZPoly& den, const ZPoly& num) {
  auto q = divides(den, num);
  if (!q) throw invariant_error("exact division failed");
  return *q;
}

}  // namespace

ZPoly gcd_qz(const ZPoly& a, const ZPoly& b) {
  if (a.is_zero() || b.is_zero()) throw precondition_error("gcd_qz: zero input");
  QPoly x = to_rational(a), y = to_rational(b);
  while (!y.is_zero()) {
    QPoly r = q_rem(x, y);
    x = y;
    y = q_monic(r);
  }
  auto [z, s] = clear_denominators(x);
  return z;  // primitive, positive leading coefficient
}

std::vector<std::pair<ZPoly, unsigned long>> squarefree_decompose(const ZPoly& f0) {
  // f0: primitive honest polynomial with deg >= 1 (Yun's algorithm)
  if (f0.is_zero() || f0.span() == 0)
    throw precondition_error("squarefree_decompose: constant input");
  std::vector<std::pair<ZPoly, unsigned long>> out;
  ZPoly fp = derivative(f0);
  ZPoly g = gcd_qz(f0, fp);
  if (g.span() == 0) {
    out.push_back({primitive_part(f0), 1});
    return out;
  }
  ZPoly b = exact_div(g, f0);
  ZPoly c = exact_div(g, fp);
  ZPoly d = sub(c, derivative(b));
  unsigned long i = 1;
  while (b.span() > 0) {
    ZPoly a = d.is_zero() ? primitive_part(b) : gcd_qz(b, d);
    if (d.is_zero()) {
      if (sgn_of(a.terms().rbegin()->second) < 0) a = neg(a);
    }
    if (a.span() > 0) out.push_back({a, i});
    b = exact_div(a, b);
    c = exact_div(a, d);
    d = sub(c, derivative(b));
    ++i;
  }
  return out;
}

namespace {

const long kPrimeLimit = 100000;

const std::vector<long>& small_primes() {
  static const std::vector<long> primes = [] {
    std::vector<bool> sieve(static_cast<size_t>(kPrimeLimit), true);
    std::vector<long> ps;
    for (long i = 2; i < kPrimeLimit; ++i) {
      if (!sieve[static_cast<size_t>(i)]) continue;
      ps.push_back(i);
      for (long j = 2 * i; j < kPrimeLimit; j += i) sieve[static_cast<size_t>(j)] = false;
    }
    return ps;
  }();
  return primes;
}

// ---- Hensel lifting ------------------------------------------------------

// Coefficients reduced to the symmetric range mod m.
ZPoly zmod(const ZPoly& a, const Int& m) {
  ZPoly r;
  Int half = m / 2;
  for (const auto& [e, c] : a.terms()) {
    Int v = c % m;
    if (v > half) v -= m;
    if (v < -half) v += m;
    r.set_coeff(e, v);
  }
  return r;
}

// Division with remainder by a monic polynomial, coefficients mod m.
std::pair<ZPoly, ZPoly> divmod_monic_mod(const ZPoly& a, const ZPoly& b, const Int& m) {
  ZPoly q, r = a;
  long db = b.max_exp();
  while (!r.is_zero() && r.max_exp() >= db) {
    Int c = r.terms().rbegin()->second;
    long sh = r.max_exp() - db;
    q.add_to_coeff(sh, c);
    r = zmod(sub(r, shifted(scaled(b, c), sh)), m);
  }
  return {zmod(q, m), r};
}

struct HenselPair {
  ZPoly g, h, s, t;  // f = g*h (mod m), s*g + t*h = 1 (mod m), h monic
};

// Quadratic step: all congruences upgraded from mod m to mod m^2.
HenselPair hensel_step(const ZPoly& f, const HenselPair& in, const Int& m) {
  Int m2 = m * m;
  ZPoly e = zmod(sub(f, mul(in.g, in.h)), m2);
  auto [q, r] = divmod_monic_mod(zmod(mul(in.s, e), m2), in.h, m2);
  ZPoly g1 = zmod(add(in.g, add(mul(in.t, e), mul(q, in.g))), m2);
  ZPoly h1 = zmod(add(in.h, r), m2);
  ZPoly b = zmod(sub(add(mul(in.s, g1), mul(in.t, h1)), ZPoly::one()), m2);
  auto [c, d] = divmod_monic_mod(zmod(mul(in.s, b), m2), h1, m2);
  ZPoly s1 = zmod(sub(in.s, d), m2);
  ZPoly t1 = zmod(sub(sub(in.t, mul(in.t, b)), mul(c, g1)), m2);
  return {g1, h1, s1, t1};
}

ZPoly zpoly_from_gfp(const gfp::Poly& a, long p) {
  ZPoly r;
  long half = p / 2;
  for (size_t i = 0; i < a.size(); ++i) {
    long v = a[i];
    if (v > half) v -= p;
    r.set_coeff(static_cast<long>(i), Int(v));
  }
  return r;
}

// Binary-tree multifactor lifting: F = lc(F)*prod(fs[lo..hi)) mod p, fs monic;
// fills `out` with lifts of the fs mod `modulus` (left spine carries lc).
void lift_tree(const ZPoly& F, const std::vector<gfp::Poly>& fs, size_t lo, size_t hi, long p,
               const Int& modulus, std::vector<ZPoly>& out) {
  if (hi - lo == 1) {
    out.push_back(F);
    return;
  }
  size_t mid = lo + (hi - lo) / 2;
  gfp::Poly fmodp = gfp::from_zpoly(F, p);
  if (gfp::degree(fmodp) != F.max_exp())
    throw invariant_error("hensel: leading coefficient vanished mod p");
  long lcF = fmodp.back();
  gfp::Poly gp{lcF}, hp{1};
  for (size_t i = lo; i < mid; ++i) gp = gfp::mul(gp, fs[i], p);
  for (size_t i = mid; i < hi; ++i) hp = gfp::mul(hp, fs[i], p);
  auto bez = gfp::ext_gcd(gp, hp, p);
  if (gfp::degree(bez.g) != 0) throw invariant_error("hensel: halves not coprime mod p");
  HenselPair cur{zpoly_from_gfp(gp, p), zpoly_from_gfp(hp, p), zpoly_from_gfp(bez.s, p),
                 zpoly_from_gfp(bez.t, p)};
  Int m(p);
  while (m < modulus) {
    cur = hensel_step(F, cur, m);
    m = m * m;
  }
  lift_tree(zmod(cur.g, modulus), fs, lo, mid, p, modulus, out);
  lift_tree(zmod(cur.h, modulus), fs, mid, hi, p, modulus, out);
}

// Mignotte-style bound on |coeff| of lc*g for any factor g of f.
Int factor_bound(const ZPoly& f) {
  long n = f.max_exp();
  Int height(0);
  for (const auto& [e, c] : f.terms()) height = std::max(height, abs_int(c));
  Int lc = abs_int(f.terms().rbegin()->second);
  return pow_int(Int(2), static_cast<unsigned long>(n)) * sqrt_ceil(Int(n + 1)) * height * lc;
}

// Zassenhaus: irreducible factors of a primitive squarefree honest
// polynomial of degree >= 1, canonical forms, unordered.
std::vector<ZPoly> factor_squarefree_Z(const ZPoly& f) {
  if (f.max_exp() == 1) return {canon(f)};
  Int lc = f.terms().rbegin()->second;
  long p = 0;
  for (long cand : small_primes()) {
    if (cand == 2) continue;
    if (mpz_divisible_ui_p(lc.get_mpz_t(), static_cast<unsigned long>(cand))) continue;
    gfp::Poly fp = gfp::from_zpoly(f, cand);
    if (gfp::degree(fp) != f.max_exp()) continue;
    if (gfp::is_squarefree(fp, cand)) {
      p = cand;
      break;
    }
  }
  if (p == 0) throw invariant_error("factor_squarefree_Z: no usable prime found");

  gfp::Poly fp = gfp::monic(gfp::from_zpoly(f, p), p);
  std::uint64_t seed = mix_hash(hash_of(f), static_cast<std::uint64_t>(p));
  std::vector<gfp::Poly> modular = gfp::factor_squarefree_monic(fp, p, seed);
  if (modular.size() == 1) return {canon(f)};

  Int bound = 2 * factor_bound(f) + 1;
  Int modulus(p);
  while (modulus < bound) modulus = modulus * modulus;
  std::vector<ZPoly> lifted;
  lift_tree(zmod(f, modulus), modular, 0, modular.size(), p, modulus, lifted);
  for (auto& g : lifted) {
    Int glc = g.terms().rbegin()->second;
    Int inv;
    if (mpz_invert(inv.get_mpz_t(), glc.get_mpz_t(), modulus.get_mpz_t()) == 0)
      throw invariant_error("hensel: leading coefficient not invertible");
    g = zmod(scaled(g, inv), modulus);
  }
  {
    ZPoly check = ZPoly::constant(lc);
    for (const auto& g : lifted) check = zmod(mul(check, g), modulus);
    if (zmod(sub(check, f), modulus) != ZPoly::zero())
      throw invariant_error("hensel: lifted factorization check failed");
  }

  // Subset recombination against the shrinking remainder.
  std::vector<ZPoly> result;
  std::vector<size_t> live(lifted.size());
  std::iota(live.begin(), live.end(), 0);
  ZPoly rem = f;
  size_t take = 1;
  while (2 * take <= live.size()) {
    bool found = false;
    std::vector<size_t> idx(take);
    std::iota(idx.begin(), idx.end(), 0);
    for (;;) {
      ZPoly candm = ZPoly::constant(rem.terms().rbegin()->second);
      for (size_t i : idx) candm = zmod(mul(candm, lifted[live[i]]), modulus);
      ZPoly cand = primitive_part(candm);
      auto quot = divides(cand, rem);
      if (quot) {
        result.push_back(canon(cand));
        rem = *quot;
        std::vector<size_t> nlive;
        for (size_t j = 0; j < live.size(); ++j)
          if (std::find(idx.begin(), idx.end(), j) == idx.end()) nlive.push_back(live[j]);
        live = std::move(nlive);
        found = true;
        break;
      }
      long pos = static_cast<long>(take) - 1;
      while (pos >= 0 &&
             idx[static_cast<size_t>(pos)] == live.size() - take + static_cast<size_t>(pos))
        --pos;
      if (pos < 0) break;
      ++idx[static_cast<size_t>(pos)];
      for (size_t j = static_cast<size_t>(pos) + 1; j < take; ++j) idx[j] = idx[j - 1] + 1;
    }
    if (!found) ++take;
  }
  if (!rem.is_zero() && rem.span() > 0) result.push_back(canon(primitive_part(rem)));
  return result;
}

std::vector<std::pair<Int, unsigned long>> factor_integer(Int n) {
  // n >= 1
  std::vector<std::pair<Int, unsigned long>> out;
  Int d(2);
  while (d * d <= n) {
    unsigned long m = 0;
    while (mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t())) {
      n /= d;
      ++m;
    }
    if (m) out.push_back({d, m});
    d += (d == 2) ? 1 : 2;
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

const double kKroneckerBudget = 100000.0;

// Divisors of |v| ascending (v nonzero); optionally with both signs.
std::vector<Int> divisor_list(const Int& v, bool both_signs) {
  Int n = abs_int(v);
  std::vector<Int> small, large;
  Int d(1);
  while (d * d <= n) {
    if (mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t())) {
      small.push_back(d);
      if (d * d != n) large.push_back(n / d);
    }
    d += 1;
  }
  for (auto it = large.rbegin(); it != large.rend(); ++it) small.push_back(*it);
  if (!both_signs) return small;
  std::vector<Int> out;
  for (const auto& x : small) {
    out.push_back(x);
    out.push_back(-x);
  }
  return out;
}

}  // namespace

std::optional<bool> kronecker_has_divisor(const ZPoly& a0, long maxdeg) {
  ZPoly a = canon(a0);
  if (a.is_zero()) throw precondition_error("kronecker_has_divisor: zero input");
  long n = a.max_exp();
  for (long d = 1; d <= maxdeg && d < n; ++d) {
    std::vector<Int> xs;  // 0, 1, -1, 2, -2, ...
    for (long k = 0; static_cast<long>(xs.size()) < d + 1; ++k) {
      if (k == 0) {
        xs.push_back(Int(0));
      } else {
        xs.push_back(Int(k));
        if (static_cast<long>(xs.size()) < d + 1) xs.push_back(Int(-k));
      }
    }
    std::vector<Int> vals;
    bool root = false;
    for (const auto& x : xs) {
      Int v = eval_at(a, x);
      if (is_zero(v)) {
        root = true;  // t - x divides a, and d < n makes it proper
        break;
      }
      vals.push_back(v);
    }
    if (root) return true;
    std::vector<std::vector<Int>> choices;
    double lattice = 1;
    for (size_t i = 0; i < xs.size(); ++i) {
      choices.push_back(divisor_list(vals[i], i > 0));  // global sign fixed at x = 0
      lattice *= static_cast<double>(choices.back().size());
      if (lattice > kKroneckerBudget) return std::nullopt;
    }
    // DFS over value tuples with incremental Newton divided differences;
    // non-integer divided differences prune the branch.
    std::vector<std::vector<Int>> dd(xs.size());
    bool found = false;
    auto search = [&](auto&& self, size_t level) -> void {
      if (found) return;
      if (level == xs.size()) {
        ZPoly g = ZPoly::zero();
        ZPoly basis = ZPoly::one();
        for (size_t k = 0; k < xs.size(); ++k) {
          g = add(g, scaled(basis, dd[k][k]));
          ZPoly lin = ZPoly::t();
          lin.add_to_coeff(0, Int(-xs[k]));
          basis = mul(basis, lin);
        }
        if (g.is_zero() || g.max_exp() < 1 || g.max_exp() >= n) return;
        if (divides(g, a)) found = true;
        return;
      }
      for (const Int& y : choices[level]) {
        std::vector<Int> row(level + 1);
        row[0] = y;
        bool ok = true;
        for (size_t j = 1; j <= level; ++j) {
          Int num = row[j - 1] - dd[level - 1][j - 1];
          Int den = xs[level] - xs[level - j];
          Int q;
          if (!div_exact(num, den, q)) {
            ok = false;
            break;
          }
          row[j] = q;
        }
        if (!ok) continue;
        dd[level] = row;
        self(self, level + 1);
        if (found) return;
      }
    };
    search(search, 0);
    if (found) return true;
  }
  return false;
}

namespace {

void certify_irreducible(const ZPoly& f) {
  long deg = canon(f).max_exp();
  if (deg == 0 || deg > 12) return;
  auto res = kronecker_has_divisor(f, std::min(6L, deg / 2));
  if (res.has_value() && *res)
    throw invariant_error(
        "factor_Z: Kronecker certificate found a proper divisor of a reported factor");
}

}  // namespace

IrreducibleFactorization factor_Z(const ZPoly& a0) {
  if (a0.is_zero()) throw precondition_error("factor_Z: zero input");
  ZPoly a = canon(a0);
  IrreducibleFactorization out;
  out.sign = sgn_of(a0.terms().rbegin()->second);

  std::vector<std::pair<ZPoly, unsigned long>> raw;
  for (const auto& [prime, mult] : factor_integer(content(a)))
    raw.push_back({ZPoly::constant(prime), mult});
  ZPoly prim = primitive_part(a);
  if (prim.span() > 0) {
    for (const auto& [sqf, mult] : squarefree_decompose(prim))
      for (const ZPoly& f : factor_squarefree_Z(sqf)) raw.push_back({f, mult});
  }
  std::sort(raw.begin(), raw.end(),
            [](const auto& x, const auto& y) { return compare_canonical(x.first, y.first) < 0; });
  std::vector<std::pair<ZPoly, unsigned long>> merged;
  for (auto& [f, m] : raw) {
    if (!merged.empty() && compare_canonical(merged.back().first, f) == 0)
      merged.back().second += m;
    else
      merged.push_back({f, m});
  }
  for (const auto& [f, m] : merged) certify_irreducible(f);

  std::vector<bool> used(merged.size(), false);
  for (size_t i = 0; i < merged.size(); ++i) {
    if (used[i]) continue;
    used[i] = true;
    const ZPoly& f = merged[i].first;
    if (is_self_reciprocal(f)) {
      out.factors.push_back({f, merged[i].second, Pairing::SelfReciprocal});
      continue;
    }
    ZPoly fbar = reciprocal(f);
    bool paired = false;
    for (size_t j = i + 1; j < merged.size(); ++j) {
      if (used[j]) continue;
      if (compare_canonical(merged[j].first, fbar) == 0) {
        out.factors.push_back({f, merged[i].second, Pairing::PairedWithNext});
        out.factors.push_back({merged[j].first, merged[j].second, Pairing::PairedWithPrev});
        used[j] = true;
        paired = true;
        break;
      }
    }
    if (!paired) out.factors.push_back({f, merged[i].second, Pairing::Unpaired});
  }

  if (!unit_equal(out.product(), a)) throw invariant_error("factor_Z: product check failed");
  return out;
}

std::vector<SliceWitness> fox_witnesses(const ZPoly& delta) {
  if (delta.is_zero()) throw precondition_error("fox_witnesses: zero input");
  Int aug = augment(delta);
  if (!(aug == 1 || aug == -1)) throw precondition_error("fox_witnesses: augmentation is not +-1");
  if (!is_self_reciprocal(delta))
    throw precondition_error("fox_witnesses: input not self-reciprocal up to unit");

  IrreducibleFactorization F = factor_Z(delta);
  struct PairChoice {
    ZPoly f, fbar;       // reciprocal pair
    unsigned long mult;  // shared multiplicity; p takes f^k * fbar^(mult-k)
  };
  ZPoly fixed = ZPoly::one();
  std::vector<PairChoice> pairs;
  for (size_t i = 0; i < F.factors.size(); ++i) {
    const FactorEntry& fe = F.factors[i];
    if (fe.pairing == Pairing::PairedWithPrev) continue;
    if (fe.pairing == Pairing::Unpaired) return {};
    if (fe.pairing == Pairing::SelfReciprocal) {
      if (fe.multiplicity % 2 != 0) return {};  // odd self-reciprocal power: no Fox factorization
      fixed = mul(fixed, pow_poly(fe.poly, fe.multiplicity / 2));
      continue;
    }
    const FactorEntry& partner = F.factors[i + 1];
    if (fe.multiplicity != partner.multiplicity) return {};
    pairs.push_back({fe.poly, partner.poly, fe.multiplicity});
  }

  std::vector<ZPoly> candidates{fixed};
  for (const PairChoice& pc : pairs) {
    std::vector<ZPoly> next;
    for (unsigned long k = 0; k <= pc.mult; ++k) {
      ZPoly part = mul(pow_poly(pc.f, k), pow_poly(pc.fbar, pc.mult - k));
      for (const ZPoly& c : candidates) next.push_back(mul(c, part));
    }
    candidates = std::move(next);
  }

  std::vector<SliceWitness> out;
  for (const ZPoly& c : candidates) {
    ZPoly p = augment_normalized(c);
    if (!unit_equal(mul(p, invert_t(p)), delta))
      throw invariant_error("fox_witnesses: candidate failed soundness check");
    if (augment(p) != 1) throw invariant_error("fox_witnesses: augmentation normalization failed");
    out.push_back({p});
  }
  std::sort(out.begin(), out.end(), [](const SliceWitness& x, const SliceWitness& y) {
    auto dx = dense_coeffs(x.p), dy = dense_coeffs(y.p);
    if (dx.size() != dy.size()) return dx.size() < dy.size();
    for (size_t i = 0; i < dx.size(); ++i)
      if (dx[i] != dy[i]) return dx[i] < dy[i];
    return false;
  });
  out.erase(std::unique(out.begin(), out.end(),
                        [](const SliceWitness& x, const SliceWitness& y) { return x.p == y.p; }),
            out.end());
  return out;
}

std::vector<ZPoly> symmetric_divisors(const ZPoly& delta) {
  if (delta.is_zero()) throw precondition_error("symmetric_divisors: zero input");
  IrreducibleFactorization F = factor_Z(delta);
  std::vector<ZPoly> divisors{ZPoly::one()};
  for (const auto& fe : F.factors) {
    std::vector<ZPoly> next;
    for (unsigned long k = 0; k <= fe.multiplicity; ++k) {
      ZPoly part = pow_poly(fe.poly, k);
      for (const ZPoly& d : divisors) next.push_back(mul(d, part));
    }
    divisors = std::move(next);
  }
  std::vector<ZPoly> out;
  for (const ZPoly& d : divisors) {
    if (!is_self_reciprocal(d)) continue;
    Int aug = augment(d);
    if (!(aug == 1 || aug == -1)) continue;
    out.push_back(augment_normalized(d));
  }
  std::sort(out.begin(), out.end(),
            [](const ZPoly& x, const ZPoly& y) { return compare_canonical(x, y) < 0; });
  out.erase(
      std::unique(out.begin(), out.end(),
                  [](const ZPoly& x, const ZPoly& y) { return compare_canonical(x, y) == 0; }),
      out.end());
  return out;
}

ZPoly lemma_factor_extract(const ZPoly& f, const ZPoly& a, const ZPoly& b) {
  if (b.is_zero()) throw precondition_error("lemma_factor_extract: b is zero");
  ZPoly lhs = mul(f, mul(b, invert_t(b)));
  ZPoly rhs = mul(a, invert_t(a));
  if (!unit_equal(lhs, rhs))
    throw precondition_error("lemma_factor_extract: identity f*b*rec(b) = a*rec(a) fails");

  IrreducibleFactorization Fb = factor_Z(b);
  IrreducibleFactorization Fa = factor_Z(a);
  auto mult_in_a = [&](const ZPoly& prime) -> unsigned long {
    for (const auto& fe : Fa.factors)
      if (compare_canonical(fe.poly, prime) == 0) return fe.multiplicity;
    return 0;
  };
  ZPoly divisor = ZPoly::one();
  for (const auto& fe : Fb.factors) {
    unsigned long e = fe.multiplicity;
    unsigned long fi = std::min<unsigned long>(e, mult_in_a(fe.poly));
    divisor = mul(divisor, pow_poly(fe.poly, fi));
    divisor = mul(divisor, pow_poly(reciprocal(fe.poly), e - fi));
  }
  ZPoly c = exact_div(divisor, a);
  if (!unit_equal(mul(c, invert_t(c)), f))
    throw invariant_error("lemma_factor_extract: output does not satisfy c*rec(c) = f");
  return c;
}

}  // namespace eqknot
