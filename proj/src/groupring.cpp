#include <eqknot/groupring.hpp>

namespace eqknot {

namespace {
void check_q(const GroupRingPoly& a, const GroupRingPoly& b) {
  if (a.q() != b.q()) throw precondition_error("group ring: mismatched q");
}
}  // namespace

GroupRingPoly gadd(const GroupRingPoly& a, const GroupRingPoly& b) {
  check_q(a, b);
  GroupRingPoly r = a;
  for (const auto& [k, c] : b.terms()) r.add_to_coeff(k.first, k.second, c);
  return r;
}

GroupRingPoly gneg(const GroupRingPoly& a) {
  GroupRingPoly r(a.q());
  for (const auto& [k, c] : a.terms()) r.set_coeff(k.first, k.second, Int(-c));
  return r;
}

GroupRingPoly gsub(const GroupRingPoly& a, const GroupRingPoly& b) {
  check_q(a, b);
  GroupRingPoly r = a;
  for (const auto& [k, c] : b.terms()) r.add_to_coeff(k.first, k.second, Int(-c));
  return r;
}

GroupRingPoly gmul(const GroupRingPoly& a, const GroupRingPoly& b) {
  check_q(a, b);
  GroupRingPoly r(a.q());
  for (const auto& [ka, ca] : a.terms())
    for (const auto& [kb, cb] : b.terms())
      r.add_to_coeff(ka.first + kb.first, ka.second + kb.second, Int(ca * cb));
  return r;
}

GroupRingPoly gscale(const GroupRingPoly& a, const Int& s) {
  GroupRingPoly r(a.q());
  if (is_zero(s)) return r;
  for (const auto& [k, c] : a.terms()) r.set_coeff(k.first, k.second, Int(c * s));
  return r;
}

GroupRingPoly gshift_unit(const GroupRingPoly& a, int sign, long i, long j) {
  GroupRingPoly r(a.q());
  for (const auto& [k, c] : a.terms())
    r.set_coeff(k.first + i, k.second + j, sign < 0 ? Int(-c) : c);
  return r;
}

GroupRingPoly involute(const GroupRingPoly& a) {
  GroupRingPoly r(a.q());
  for (const auto& [k, c] : a.terms()) r.set_coeff(-k.first, -k.second, c);
  return r;
}

ZqVec augment_t(const GroupRingPoly& a) {
  ZqVec v(static_cast<size_t>(a.q()), Int(0));
  for (const auto& [k, c] : a.terms()) v[static_cast<size_t>(k.first)] += c;
  return v;
}

ZPoly augment_g(const GroupRingPoly& a) {
  ZPoly p;
  for (const auto& [k, c] : a.terms()) p.add_to_coeff(k.second, c);
  return p;
}

bool is_trivial_unit(const ZqVec& u) { return trivial_unit_info(u).has_value(); }

std::optional<std::pair<int, long>> trivial_unit_info(const ZqVec& u) {
  std::optional<std::pair<int, long>> found;
  for (size_t i = 0; i < u.size(); ++i) {
    if (is_zero(u[i])) continue;
    if (found) return std::nullopt;
    if (u[i] == 1)
      found = {1, static_cast<long>(i)};
    else if (u[i] == -1)
      found = {-1, static_cast<long>(i)};
    else
      return std::nullopt;
  }
  return found;
}

namespace {

// Lexicographic comparison of coefficient tables: entries in (g,t) key order,
// compared as (g, t, coeff) triples.
bool table_less(const GroupRingPoly& a, const GroupRingPoly& b) {
  auto ia = a.terms().begin(), ib = b.terms().begin();
  for (; ia != a.terms().end() && ib != b.terms().end(); ++ia, ++ib) {
    if (ia->first != ib->first) return ia->first < ib->first;
    if (ia->second != ib->second) return ia->second < ib->second;
  }
  return ia == a.terms().end() && ib != b.terms().end();
}

}  // namespace

GroupRingPoly gcanon(const GroupRingPoly& a) {
  if (a.is_zero()) return a;
  long shift = -a.min_t_exp();
  std::optional<GroupRingPoly> best;
  for (int sign : {1, -1}) {
    for (long i = 0; i < a.q(); ++i) {
      GroupRingPoly cand = gshift_unit(a, sign, i, shift);
      // Unit g-multiples preserve the t-span, so min t-exp stays 0.
      if (!best || table_less(cand, *best)) best = std::move(cand);
    }
  }
  return *best;
}

bool gunit_equal(const GroupRingPoly& a, const GroupRingPoly& b) {
  check_q(a, b);
  return gcanon(a) == gcanon(b);
}

GroupRingPoly from_plus_minus(const ZPoly& hPlus, const ZPoly& hMinus) {
  ZPoly sum = add(hPlus, hMinus);      // 2 * g^0 part
  ZPoly diff = sub(hPlus, hMinus);     // 2 * g^1 part
  GroupRingPoly r(2);
  for (const auto& [e, c] : sum.terms()) {
    if (mpz_odd_p(c.get_mpz_t()))
      throw precondition_error("from_plus_minus: inputs not congruent mod 2 at aligned exponents");
    r.set_coeff(0, e, Int(c / 2));
  }
  for (const auto& [e, c] : diff.terms()) {
    if (mpz_odd_p(c.get_mpz_t()))
      throw precondition_error("from_plus_minus: inputs not congruent mod 2 at aligned exponents");
    r.set_coeff(1, e, Int(c / 2));
  }
  return r;
}

PlusMinusPair plus_minus_components(const GroupRingPoly& a) {
  if (a.q() != 2) throw precondition_error("plus_minus_components: q must be 2");
  ZPoly plus, minus;
  for (const auto& [k, c] : a.terms()) {
    plus.add_to_coeff(k.second, c);
    minus.add_to_coeff(k.second, k.first == 0 ? c : Int(-c));
  }
  return {plus, minus};
}

}  // namespace eqknot
