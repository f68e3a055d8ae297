// Arithmetic in Z[Z/q x Z] = Z[g, t, t^-1]/(g^q - 1).  The ring has zero
// divisors for q > 1; no division is ever performed here.  Units are
// +-g^i t^j; gcanon picks the lexicographically least coefficient table
// among the 2q sign/g-multiples after shifting the minimum t-exponent to 0.
#pragma once

#include <eqknot/laurent.hpp>

#include <map>
#include <utility>
#include <vector>

namespace eqknot {

// Element of Z[Z/q]: coefficient vector indexed by g-exponent.
using ZqVec = std::vector<Int>;

class GroupRingPoly {
 public:
  explicit GroupRingPoly(long q) : q_(q) {
    if (q < 1) throw precondition_error("GroupRingPoly: q must be >= 1");
  }

  static GroupRingPoly zero(long q) { return GroupRingPoly(q); }
  static GroupRingPoly constant(long q, Int c) {
    GroupRingPoly p(q);
    p.set_coeff(0, 0, std::move(c));
    return p;
  }
  static GroupRingPoly monomial(long q, Int c, long i, long j) {
    GroupRingPoly p(q);
    p.set_coeff(i, j, std::move(c));
    return p;
  }
  static GroupRingPoly from_laurent(long q, const ZPoly& h) {
    GroupRingPoly p(q);
    for (const auto& [e, c] : h.terms()) p.set_coeff(0, e, c);
    return p;
  }

  long q() const { return q_; }
  bool is_zero() const { return terms_.empty(); }

  // keys are (g-exponent in [0,q), t-exponent)
  const std::map<std::pair<long, long>, Int>& terms() const { return terms_; }

  Int coeff(long i, long j) const {
    auto it = terms_.find({reduce(i), j});
    return it == terms_.end() ? Int(0) : it->second;
  }

  void set_coeff(long i, long j, Int v) {
    if (is_zero_int(v))
      terms_.erase({reduce(i), j});
    else
      terms_[{reduce(i), j}] = std::move(v);
  }

  void add_to_coeff(long i, long j, const Int& v) {
    auto key = std::make_pair(reduce(i), j);
    auto it = terms_.find(key);
    if (it == terms_.end()) {
      if (!is_zero_int(v)) terms_.emplace(key, v);
      return;
    }
    it->second += v;
    if (is_zero_int(it->second)) terms_.erase(it);
  }

  long min_t_exp() const {
    assert(!terms_.empty());
    long m = terms_.begin()->first.second;
    for (const auto& [k, c] : terms_) m = std::min(m, k.second);
    return m;
  }
  long max_t_exp() const {
    assert(!terms_.empty());
    long m = terms_.begin()->first.second;
    for (const auto& [k, c] : terms_) m = std::max(m, k.second);
    return m;
  }

  bool operator==(const GroupRingPoly& o) const { return q_ == o.q_ && terms_ == o.terms_; }
  bool operator!=(const GroupRingPoly& o) const { return !(*this == o); }

 private:
  long q_;
  std::map<std::pair<long, long>, Int> terms_;

  long reduce(long i) const { return ((i % q_) + q_) % q_; }
  static bool is_zero_int(const Int& v) { return eqknot::is_zero(v); }
};

GroupRingPoly gadd(const GroupRingPoly& a, const GroupRingPoly& b);
GroupRingPoly gsub(const GroupRingPoly& a, const GroupRingPoly& b);
GroupRingPoly gneg(const GroupRingPoly& a);
GroupRingPoly gmul(const GroupRingPoly& a, const GroupRingPoly& b);
GroupRingPoly gscale(const GroupRingPoly& a, const Int& s);

// Multiplication by the unit sign * g^i t^j.
GroupRingPoly gshift_unit(const GroupRingPoly& a, int sign, long i, long j);

// g -> g^(q-1), t -> t^-1; no normalization.
GroupRingPoly involute(const GroupRingPoly& a);

// Evaluation at t = 1, as a coefficient vector over Z[Z/q].
ZqVec augment_t(const GroupRingPoly& a);

// Evaluation at g = 1 (exact, no canonicalization).
ZPoly augment_g(const GroupRingPoly& a);

// u = +-g^i for some i.
bool is_trivial_unit(const ZqVec& u);

// (sign, i) such that u = sign * g^i, when u is a trivial unit.
std::optional<std::pair<int, long>> trivial_unit_info(const ZqVec& u);

// Canonical unit-class representative.
GroupRingPoly gcanon(const GroupRingPoly& a);

bool gunit_equal(const GroupRingPoly& a, const GroupRingPoly& b);

// q = 2 decomposition h = (1+g)/2 hPlus + (1-g)/2 hMinus.
struct PlusMinusPair {
  ZPoly hPlus;
  ZPoly hMinus;
};

// Requires hPlus == hMinus mod 2 with aligned exponents; the unique q = 2
// element with h(1,t) = hPlus, h(-1,t) = hMinus.
GroupRingPoly from_plus_minus(const ZPoly& hPlus, const ZPoly& hMinus);

// (h(1,t), h(-1,t)) for q = 2, exact.
PlusMinusPair plus_minus_components(const GroupRingPoly& a);

}  // namespace eqknot
