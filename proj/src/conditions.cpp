#include <eqknot/conditions.hpp>
#include <eqknot/gf2.hpp>

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

namespace eqknot {

namespace {

// x * x(1/t): symmetric around exponent 0, exactly self-reciprocal.
ZPoly sym_product(const ZPoly& x) { return mul(x, invert_t(x)); }

long min_odd_exp(const ZPoly& a) {
  for (const auto& [e, c] : a.terms())
    if (mpz_odd_p(c.get_mpz_t())) return e;
  throw invariant_error("min_odd_exp: all coefficients even");
}

// [u | v]: the q = 2 element with g = 1 component u and g = -1 component v,
// after shifting v so the odd-coefficient supports line up.
GroupRingPoly plus_minus_aligned(const ZPoly& u, const ZPoly& v) {
  if (mod2(u) != mod2(v))
    throw precondition_error("plus/minus components not congruent mod 2");
  if (mod2(u).is_zero()) return from_plus_minus(u, v);
  return from_plus_minus(u, shifted(v, min_odd_exp(u) - min_odd_exp(v)));
}

bool components_equal(const CharacterComponents& x, const CharacterComponents& y) {
  if (x.q != y.q || x.parts.size() != y.parts.size()) return false;
  for (size_t i = 0; i < x.parts.size(); ++i) {
    if (x.parts[i].first != y.parts[i].first) return false;
    if (x.parts[i].second.c != y.parts[i].second.c) return false;
  }
  return true;
}

// Unit equality established through the character components of the
// canonical forms (the component map is injective).
bool unit_equal_by_components(const GroupRingPoly& x, const GroupRingPoly& y) {
  if (x.q() != y.q()) return false;
  if (x.is_zero() || y.is_zero()) return x.is_zero() && y.is_zero();
  return components_equal(to_components(gcanon(x), x.q()), to_components(gcanon(y), y.q()));
}

}  // namespace

Verdict<SliceWitness> check_fox_slice(const ZPoly& delta) {
  if (!is_abstract_alexander(delta))
    throw precondition_error("check_fox_slice: input is not an abstract Alexander polynomial");
  std::vector<SliceWitness> ws = fox_witnesses(delta);
  Verdict<SliceWitness> v;
  v.candidates = ws.size();
  if (ws.empty()) {
    v.certificate = "no p with p * reciprocal(p) = delta exists over Z";
    return v;
  }
  v.yes = true;
  v.witness = ws.front();
  return v;
}

MurasugiRecord check_murasugi(const GroupRingPoly& m, long max_q) {
  MurasugiRecord r;
  r.symmetric = gunit_equal(m, involute(m));
  r.augments = is_trivial_unit(augment_t(m));
  r.knotPoly = norm_product(m, max_q);
  r.quotientPoly = augment_g(m);
  if (r.quotientPoly.is_zero())
    r.quotientDivides = r.knotPoly.is_zero();
  else
    r.quotientDivides = divides(r.quotientPoly, r.knotPoly).has_value();
  return r;
}

bool verify_eqslice(const EqSliceWitness& w) {
  if (w.deltaZq.q() != w.q || w.a.q() != w.q || w.b.q() != w.q) return false;
  GroupRingPoly lhs = gmul(w.deltaZq, gmul(w.b, involute(w.b)));
  GroupRingPoly rhs = gmul(w.a, involute(w.a));
  if (!unit_equal_by_components(lhs, rhs)) return false;
  return is_trivial_unit(augment_t(w.a)) && is_trivial_unit(augment_t(w.b));
}

bool verify_eqribbon(const EqRibbonWitness& w, const GroupRingPoly& deltaZq) {
  if (w.a.q() != w.q || deltaZq.q() != w.q) return false;
  if (!unit_equal_by_components(deltaZq, gmul(w.a, involute(w.a)))) return false;
  return is_trivial_unit(augment_t(w.a));
}

bool modq_congruent(const ZPoly& p, long q) {
  if (q < 1 || p.is_zero()) return false;
  if (q == 1) return true;
  long pivots = 0;
  Int pivot_coeff;
  for (const auto& [e, c] : p.terms()) {
    if (!mpz_divisible_ui_p(c.get_mpz_t(), static_cast<unsigned long>(q))) {
      ++pivots;
      pivot_coeff = c;
    }
  }
  if (pivots != 1) return false;
  return mpz_divisible_ui_p(Int(pivot_coeff - 1).get_mpz_t(), static_cast<unsigned long>(q)) ||
         mpz_divisible_ui_p(Int(pivot_coeff + 1).get_mpz_t(), static_cast<unsigned long>(q));
}

EqRibbonWitness modq_witness(const ZPoly& p, long q, long max_q) {
  if (q < 1) throw precondition_error("modq_witness: q must be >= 1");
  if (p.is_zero()) throw precondition_error("modq_witness: p is zero");
  Int aug = augment(p);
  if (!(aug == 1 || aug == -1)) throw precondition_error("modq_witness: p(1) must be a unit");

  // Align the distinguished coefficient (the one not divisible by q) to the
  // constant term; p = q h + 1 must then hold coefficientwise.
  long pivot = 0;
  if (q >= 2) {
    long pivots = 0;
    for (const auto& [e, c] : p.terms()) {
      if (!mpz_divisible_ui_p(c.get_mpz_t(), static_cast<unsigned long>(q))) {
        ++pivots;
        pivot = e;
      }
    }
    if (pivots != 1)
      throw precondition_error("modq_witness: p is not congruent to 1 mod q up to unit");
  }
  ZPoly aligned = shifted(p, -pivot);
  // unit adjustment by -1 when the distinguished coefficient is -1 mod q
  if (q >= 2 && !mpz_divisible_ui_p(Int(aligned.coeff(0) - 1).get_mpz_t(),
                                    static_cast<unsigned long>(q)))
    aligned = neg(aligned);
  ZPoly h;
  for (const auto& [e, c] : aligned.terms()) {
    Int num = (e == 0) ? Int(c - 1) : c;
    Int hc;
    if (!div_exact(num, Int(q), hc))
      throw precondition_error("modq_witness: p is not congruent to 1 mod q up to unit");
    if (!is_zero(hc)) h.set_coeff(e, hc);
  }

  GroupRingPoly a(q);
  a.set_coeff(0, 0, Int(1));
  for (long i = 0; i < q; ++i)
    for (const auto& [e, c] : h.terms()) a.add_to_coeff(i, e, c);

  if (!is_trivial_unit(augment_t(a)))
    throw precondition_error("modq_witness: p(1) incompatible with trivial-unit augmentation");

  // The q = 1 character part is p itself; the norm over all q-th roots of
  // unity of a * involute(a) is p * reciprocal(p).
  if (!unit_equal(augment_g(a), p))
    throw invariant_error("modq_witness: g = 1 part does not reproduce p");
  GroupRingPoly n = gmul(a, involute(a));
  if (!unit_equal(norm_product(n, max_q), sym_product(p)))
    throw invariant_error("modq_witness: norm check failed");
  EqRibbonWitness w{q, a};
  if (!verify_eqribbon(w, n)) throw invariant_error("modq_witness: witness failed verification");
  return w;
}

namespace {

void check_2eq_preconditions(const ZPoly& delta, const ZPoly& deltaQuot, const char* who) {
  if (!is_abstract_alexander(delta) || !is_abstract_alexander(deltaQuot))
    throw precondition_error(std::string(who) +
                             ": inputs must be abstract Alexander polynomials");
  if (!divides(deltaQuot, delta))
    throw precondition_error(std::string(who) + ": quotient polynomial does not divide");
}

}  // namespace

Verdict<FoxPair> check_2eq_slice(const ZPoly& delta, const ZPoly& deltaQuot) {
  check_2eq_preconditions(delta, deltaQuot, "check_2eq_slice");
  std::vector<SliceWitness> wp = fox_witnesses(delta);
  std::vector<SliceWitness> wq = fox_witnesses(deltaQuot);
  Verdict<FoxPair> v;
  v.candidates = static_cast<unsigned long>(wp.size() * wq.size());
  if (mod2(delta) != gf2_canon(gf2_mul(mod2(deltaQuot), mod2(deltaQuot)))) {
    v.certificate = "mod-2 congruence delta = deltaQuot^2 fails";
    return v;
  }
  for (const SliceWitness& p : wp)
    for (const SliceWitness& q : wq)
      if (divides(q.p, p.p)) {
        v.yes = true;
        v.witness = FoxPair{p.p, q.p};
        return v;
      }
  v.certificate = "exhausted Fox witness pairs";
  return v;
}

Verdict<FoxPair> check_2eq_ribbon(const ZPoly& delta, const ZPoly& deltaQuot) {
  check_2eq_preconditions(delta, deltaQuot, "check_2eq_ribbon");
  std::vector<SliceWitness> wp = fox_witnesses(delta);
  std::vector<SliceWitness> wq = fox_witnesses(deltaQuot);
  Verdict<FoxPair> v;
  v.candidates = static_cast<unsigned long>(wp.size() * wq.size());
  for (const SliceWitness& p : wp)
    for (const SliceWitness& q : wq) {
      if (!divides(q.p, p.p)) continue;
      if (mod2(p.p) != gf2_canon(gf2_mul(mod2(q.p), mod2(q.p)))) continue;
      v.yes = true;
      v.witness = FoxPair{p.p, q.p};
      return v;
    }
  v.certificate = "exhausted Fox witness pairs";
  return v;
}

namespace {

// 0/1 lift of a mod-2 class, augmentation corrected to exactly 1 by an even
// constant shift (the lift has an odd number of terms).
ZPoly lift_augmented(const GF2Poly& a) {
  ZPoly r;
  for (long e : a.exponents()) r.set_coeff(e, Int(1));
  Int m = Int(1) - augment(r);
  assert(mpz_even_p(m.get_mpz_t()));
  r.add_to_coeff(0, m);
  return r;
}

struct Matching {
  GF2Poly c, d;
};

// Split the factor multiset of r2 into c * d with q2 = c * reverse(d):
// exhaustive search over per-factor splits, deterministic order.
Matching match_factors(const GF2Poly& r2, const GF2Poly& q2) {
  std::vector<GF2Factor> rf = factor_GF2(r2);
  std::map<GF2Poly, unsigned long> avail;
  for (const GF2Factor& f : factor_GF2(q2)) avail[f.factor] = f.multiplicity;

  std::vector<unsigned long> toC(rf.size(), 0);
  size_t deepest_fail = 0;
  auto take = [&](const GF2Poly& g, unsigned long n) -> bool {
    if (n == 0) return true;
    auto it = avail.find(g);
    if (it == avail.end() || it->second < n) return false;
    it->second -= n;
    return true;
  };
  auto give = [&](const GF2Poly& g, unsigned long n) { avail[g] += n; };

  auto search = [&](auto&& self, size_t idx) -> bool {
    if (idx == rf.size()) {
      for (const auto& [g, n] : avail)
        if (n > 0) return false;
      return true;
    }
    const GF2Poly& pi = rf[idx].factor;
    unsigned long m = rf[idx].multiplicity;
    GF2Poly rev = gf2_reverse(pi);
    if (pi == rev) {
      // self-reciprocal: consumption is m copies of pi however they split
      if (take(pi, m)) {
        toC[idx] = m;
        if (self(self, idx + 1)) return true;
        give(pi, m);
      }
    } else {
      for (unsigned long k = m + 1; k-- > 0;) {
        if (!take(pi, k)) continue;
        if (!take(rev, m - k)) {
          give(pi, k);
          continue;
        }
        toC[idx] = k;
        if (self(self, idx + 1)) return true;
        give(pi, k);
        give(rev, m - k);
      }
    }
    deepest_fail = std::max(deepest_fail, idx);
    return false;
  };
  if (!search(search, 0))
    throw invariant_error("2-equivariant slice factor matching failed at factor " +
                          to_string(rf[deepest_fail].factor));

  Matching out{GF2Poly::one(), GF2Poly::one()};
  for (size_t i = 0; i < rf.size(); ++i) {
    for (unsigned long k = 0; k < toC[i]; ++k) out.c = gf2_mul(out.c, rf[i].factor);
    for (unsigned long k = toC[i]; k < rf[i].multiplicity; ++k)
      out.d = gf2_mul(out.d, rf[i].factor);
  }
  return out;
}

ZPoly quotient_or_throw(const ZPoly& q, const ZPoly& p, const char* who) {
  if (q.is_zero()) throw precondition_error(std::string(who) + ": q is zero");
  auto r = divides(q, p);
  if (!r) throw precondition_error(std::string(who) + ": q does not divide p");
  Int aq = augment(q), ar = augment(*r);
  if (!(aq == 1 || aq == -1) || !(ar == 1 || ar == -1))
    throw precondition_error(std::string(who) + ": q(1) and (p/q)(1) must be units");
  return *r;
}

}  // namespace

EqSliceWitness build_2eq_slice_witness(const ZPoly& p, const ZPoly& q) {
  ZPoly r = quotient_or_throw(q, p, "build_2eq_slice_witness");
  GF2Poly r2 = mod2(r), q2 = mod2(q);
  if (gf2_canon(gf2_mul(r2, gf2_reverse(r2))) != gf2_canon(gf2_mul(q2, gf2_reverse(q2))))
    throw precondition_error("build_2eq_slice_witness: mod-2 congruence delta = deltaQuot^2 fails");

  Matching m = match_factors(r2, q2);
  ZPoly c = lift_augmented(m.c);
  ZPoly d = lift_augmented(m.d);

  GroupRingPoly delta2 = from_plus_minus(sym_product(q), sym_product(r));
  GroupRingPoly b = GroupRingPoly::from_laurent(2, mul(c, d));
  ZPoly aplus = mul(q, mul(invert_t(c), d));
  ZPoly aminus = mul(r, mul(invert_t(c), invert_t(d)));
  GroupRingPoly a = plus_minus_aligned(aplus, aminus);

  EqSliceWitness w{2, delta2, a, b};
  if (!verify_eqslice(w))
    throw invariant_error("build_2eq_slice_witness: constructed witness failed verification");
  return w;
}

GroupRingPoly ribbon_witness_delta(const ZPoly& p, const ZPoly& q) {
  ZPoly r = quotient_or_throw(q, p, "ribbon_witness_delta");
  return from_plus_minus(sym_product(q), sym_product(r));
}

EqRibbonWitness build_2eq_ribbon_witness(const ZPoly& p, const ZPoly& q) {
  ZPoly r = quotient_or_throw(q, p, "build_2eq_ribbon_witness");
  if (mod2(r) != mod2(q))
    throw precondition_error("build_2eq_ribbon_witness: mod-2 congruence r = q fails");
  EqRibbonWitness w{2, plus_minus_aligned(q, r)};
  if (!verify_eqribbon(w, from_plus_minus(sym_product(q), sym_product(r))))
    throw invariant_error("build_2eq_ribbon_witness: constructed witness failed verification");
  return w;
}

}  // namespace eqknot
