// Sparse Laurent polynomials in one variable t over an exact scalar ring
// (Int or Rat).  Values are exact representatives; canon() computes the
// normal form of the unit class, where the units are +-t^i.
#pragma once

#include <eqknot/bigint.hpp>

#include <cassert>
#include <map>
#include <optional>
#include <vector>

namespace eqknot {

template <class C>
class LaurentPoly {
 public:
  LaurentPoly() = default;

  static LaurentPoly zero() { return LaurentPoly(); }

  static LaurentPoly constant(C c) {
    LaurentPoly p;
    p.set_coeff(0, std::move(c));
    return p;
  }

  static LaurentPoly monomial(C c, long e) {
    LaurentPoly p;
    p.set_coeff(e, std::move(c));
    return p;
  }

  static LaurentPoly one() { return constant(C(1)); }
  static LaurentPoly t() { return monomial(C(1), 1); }

  bool is_zero() const { return terms_.empty(); }

  // Exponent range; both require a nonzero polynomial.
  long min_exp() const {
    assert(!terms_.empty());
    return terms_.begin()->first;
  }
  long max_exp() const {
    assert(!terms_.empty());
    return terms_.rbegin()->first;
  }
  long span() const { return max_exp() - min_exp(); }

  C coeff(long e) const {
    auto it = terms_.find(e);
    return it == terms_.end() ? C(0) : it->second;
  }

  void set_coeff(long e, C v) {
    if (is_zero(v))
      terms_.erase(e);
    else
      terms_[e] = std::move(v);
  }

  void add_to_coeff(long e, const C& v) {
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      if (!eqknot::is_zero(v)) terms_.emplace(e, v);
      return;
    }
    it->second += v;
    if (eqknot::is_zero(it->second)) terms_.erase(it);
  }

  const std::map<long, C>& terms() const { return terms_; }

  size_t term_count() const { return terms_.size(); }

  bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }
  bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

 private:
  std::map<long, C> terms_;  // exponent -> nonzero coefficient

  // set_coeff keeps the no-zero-coefficients invariant; add_to_coeff restores it.
  static bool is_zero(const C& v) { return eqknot::is_zero(v); }
};

using ZPoly = LaurentPoly<Int>;
using QPoly = LaurentPoly<Rat>;

template <class C>
LaurentPoly<C> add(const LaurentPoly<C>& a, const LaurentPoly<C>& b) {
  LaurentPoly<C> r = a;
  for (const auto& [e, c] : b.terms()) r.add_to_coeff(e, c);
  return r;
}

template <class C>
LaurentPoly<C> neg(const LaurentPoly<C>& a) {
  LaurentPoly<C> r;
  for (const auto& [e, c] : a.terms()) r.set_coeff(e, C(-c));
  return r;
}

template <class C>
LaurentPoly<C> sub(const LaurentPoly<C>& a, const LaurentPoly<C>& b) {
  LaurentPoly<C> r = a;
  for (const auto& [e, c] : b.terms()) r.add_to_coeff(e, C(-c));
  return r;
}

template <class C>
LaurentPoly<C> mul(const LaurentPoly<C>& a, const LaurentPoly<C>& b) {
  LaurentPoly<C> r;
  for (const auto& [ea, ca] : a.terms())
    for (const auto& [eb, cb] : b.terms()) r.add_to_coeff(ea + eb, C(ca * cb));
  return r;
}

template <class C>
LaurentPoly<C> shifted(const LaurentPoly<C>& a, long k) {
  LaurentPoly<C> r;
  for (const auto& [e, c] : a.terms()) r.set_coeff(e + k, c);
  return r;
}

template <class C>
LaurentPoly<C> scaled(const LaurentPoly<C>& a, const C& s) {
  LaurentPoly<C> r;
  for (const auto& [e, c] : a.terms()) r.set_coeff(e, C(c * s));
  return r;
}

template <class C>
LaurentPoly<C> pow_poly(const LaurentPoly<C>& a, unsigned long n) {
  LaurentPoly<C> r = LaurentPoly<C>::one();
  LaurentPoly<C> base = a;
  while (n) {
    if (n & 1) r = mul(r, base);
    n >>= 1;
    if (n) base = mul(base, base);
  }
  return r;
}

// Substitution t -> t^-1, no normalization.
template <class C>
LaurentPoly<C> invert_t(const LaurentPoly<C>& a) {
  LaurentPoly<C> r;
  for (const auto& [e, c] : a.terms()) r.set_coeff(-e, c);
  return r;
}

// Evaluation at t = 1.
template <class C>
C augment(const LaurentPoly<C>& a) {
  C s(0);
  for (const auto& [e, c] : a.terms()) s += c;
  return s;
}

// Normal form of the +-t^i unit class: minimum exponent 0, leading
// (highest-degree) coefficient positive.  canon(0) = 0.
template <class C>
LaurentPoly<C> canon(const LaurentPoly<C>& a) {
  if (a.is_zero()) return a;
  LaurentPoly<C> r = shifted(a, -a.min_exp());
  if (sgn_of(r.terms().rbegin()->second) < 0) r = neg(r);
  return r;
}

template <class C>
bool unit_equal(const LaurentPoly<C>& a, const LaurentPoly<C>& b) {
  return canon(a) == canon(b);
}

// Substitution t -> t^-1 followed by canonicalization.
template <class C>
LaurentPoly<C> reciprocal(const LaurentPoly<C>& a) {
  return canon(invert_t(a));
}

template <class C>
bool is_self_reciprocal(const LaurentPoly<C>& a) {
  return unit_equal(a, invert_t(a));
}

// Representative with minimum exponent 0 and positive augmentation; falls back
// to canon when the augmentation vanishes.
template <class C>
LaurentPoly<C> augment_normalized(const LaurentPoly<C>& a) {
  if (a.is_zero()) return a;
  int s = sgn_of(augment(a));
  if (s == 0) return canon(a);
  LaurentPoly<C> r = shifted(a, -a.min_exp());
  return s < 0 ? neg(r) : r;
}

// Dense coefficient vector c[0..] with c[i] = coeff(min_exp + i).
template <class C>
std::vector<C> dense_coeffs(const LaurentPoly<C>& a) {
  std::vector<C> v;
  if (a.is_zero()) return v;
  v.assign(static_cast<size_t>(a.span()) + 1, C(0));
  for (const auto& [e, c] : a.terms()) v[static_cast<size_t>(e - a.min_exp())] = c;
  return v;
}

template <class C>
LaurentPoly<C> from_dense(const std::vector<C>& v, long shift = 0) {
  LaurentPoly<C> r;
  for (size_t i = 0; i < v.size(); ++i) r.set_coeff(shift + static_cast<long>(i), v[i]);
  return r;
}

// Total order on unit classes: degree span first, then the canonical
// coefficient vector from exponent 0 upward.  Used for deterministic listings.
template <class C>
int compare_canonical(const LaurentPoly<C>& a, const LaurentPoly<C>& b) {
  LaurentPoly<C> ca = canon(a), cb = canon(b);
  if (ca.is_zero() || cb.is_zero()) {
    if (ca.is_zero() && cb.is_zero()) return 0;
    return ca.is_zero() ? -1 : 1;
  }
  if (ca.span() != cb.span()) return ca.span() < cb.span() ? -1 : 1;
  for (long e = 0; e <= ca.span(); ++e) {
    C x = ca.coeff(e), y = cb.coeff(e);
    if (x < y) return -1;
    if (y < x) return 1;
  }
  return 0;
}

// Exact division in the Laurent ring: returns q with a*q = b, or nullopt.
// Over Int this is ring-exact division (no rational quotients).
template <class C>
std::optional<LaurentPoly<C>> divides(const LaurentPoly<C>& a, const LaurentPoly<C>& b) {
  if (a.is_zero()) throw precondition_error("divides: division by zero polynomial");
  if (b.is_zero()) return LaurentPoly<C>::zero();
  long sa = a.min_exp(), sb = b.min_exp();
  // Shift both to honest polynomials with nonzero constant term: the quotient,
  // if it exists, picks up exactly the shift difference.
  std::vector<C> da = dense_coeffs(a), db = dense_coeffs(b);
  if (db.size() < da.size()) return std::nullopt;
  std::vector<C> q(db.size() - da.size() + 1, C(0));
  std::vector<C> r = db;
  const C& lead = da.back();
  for (size_t i = q.size(); i-- > 0;) {
    C top = r[i + da.size() - 1];
    if (eqknot::is_zero(top)) continue;
    C qi;
    if (!div_exact(top, lead, qi)) return std::nullopt;
    q[i] = qi;
    for (size_t j = 0; j < da.size(); ++j) r[i + j] -= qi * da[j];
  }
  for (const C& c : r)
    if (!eqknot::is_zero(c)) return std::nullopt;
  return from_dense(q, sb - sa);
}

// Evaluation at an integer point; requires min exponent >= 0.
inline Int eval_at(const ZPoly& p, const Int& x) {
  if (p.is_zero()) return Int(0);
  if (p.min_exp() < 0) throw precondition_error("eval_at: negative exponent");
  Int acc(0);
  long prev = p.max_exp();
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    for (long k = prev; k > it->first; --k) acc *= x;
    acc += it->second;
    prev = it->first;
  }
  for (long k = prev; k > 0; --k) acc *= x;
  return acc;
}

// gcd of all coefficients, nonnegative; content(0) = 0.
inline Int content(const ZPoly& p) {
  Int g(0);
  for (const auto& [e, c] : p.terms()) g = gcd_int(g, c);
  return g;
}

inline ZPoly primitive_part(const ZPoly& p) {
  Int c = content(p);
  if (is_zero(c)) return p;
  ZPoly r;
  for (const auto& [e, co] : p.terms()) {
    Int q;
    div_exact(co, c, q);
    r.set_coeff(e, q);
  }
  return r;
}

// d/dt of an honest polynomial part; requires min exponent >= 0.
template <class C>
LaurentPoly<C> derivative(const LaurentPoly<C>& p) {
  if (!p.is_zero() && p.min_exp() < 0)
    throw precondition_error("derivative: negative exponent");
  LaurentPoly<C> r;
  for (const auto& [e, c] : p.terms())
    if (e != 0) r.set_coeff(e - 1, C(c * C(e)));
  return r;
}

inline QPoly to_rational(const ZPoly& p) {
  QPoly r;
  for (const auto& [e, c] : p.terms()) r.set_coeff(e, Rat(c));
  return r;
}

// Clears denominators: returns primitive integer polynomial p0 and the
// rational scalar s with p = s * p0.  p nonzero.
inline std::pair<ZPoly, Rat> clear_denominators(const QPoly& p) {
  if (p.is_zero()) throw precondition_error("clear_denominators: zero polynomial");
  Int lcm(1);
  for (const auto& [e, c] : p.terms()) {
    Int d = c.get_den();
    lcm = lcm / gcd_int(lcm, d) * d;
  }
  ZPoly z;
  for (const auto& [e, c] : p.terms()) z.set_coeff(e, Int(c.get_num() * (lcm / c.get_den())));
  Int cont = content(z);
  int lead_sign = sgn_of(z.terms().rbegin()->second);
  if (lead_sign < 0) cont = -cont;
  ZPoly z0;
  for (const auto& [e, c] : z.terms()) {
    Int q;
    div_exact(c, cont, q);
    z0.set_coeff(e, q);
  }
  return {z0, Rat(cont) / Rat(lcm)};
}

inline std::uint64_t hash_of(const ZPoly& p) {
  std::uint64_t h = 0x243f6a8885a308d3ull;
  for (const auto& [e, c] : p.terms()) {
    h = mix_hash(h, static_cast<std::uint64_t>(e));
    h = mix_hash(h, hash_of(c));
  }
  return h;
}

// Abstract Alexander conditions: augmentation +-1 and palindromic up to unit.
inline bool is_abstract_alexander(const ZPoly& p) {
  if (p.is_zero()) return false;
  Int a = augment(p);
  if (!(a == 1 || a == -1)) return false;
  return is_self_reciprocal(p);
}

}  // namespace eqknot
