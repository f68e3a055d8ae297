#include <eqknot/cyclotomic.hpp>

#include <map>
#include <numeric>

namespace eqknot {

long euler_phi(long d) {
  long result = d, n = d;
  for (long p = 2; p * p <= n; ++p) {
    if (n % p) continue;
    while (n % p == 0) n /= p;
    result -= result / p;
  }
  if (n > 1) result -= result / n;
  return result;
}

std::vector<long> divisors_of(long q) {
  std::vector<long> ds;
  for (long d = 1; d <= q; ++d)
    if (q % d == 0) ds.push_back(d);
  return ds;
}

ZPoly cyclotomic_poly(long d) {
  static std::map<long, ZPoly> cache;
  auto it = cache.find(d);
  if (it != cache.end()) return it->second;
  // x^d - 1 divided by the product of all lower cyclotomics for divisors of d.
  ZPoly num = ZPoly::monomial(Int(1), d);
  num.add_to_coeff(0, Int(-1));
  ZPoly den = ZPoly::one();
  for (long e : divisors_of(d))
    if (e < d) den = mul(den, cyclotomic_poly(e));
  auto quot = divides(den, num);
  if (!quot) throw invariant_error("cyclotomic_poly: exact division failed");
  cache[d] = *quot;
  return *quot;
}

namespace {

// x^k reduced mod Phi_d, as a dense integer vector of length phi(d).
std::vector<std::vector<Int>> xpower_table(long d, long upto) {
  long phi = euler_phi(d);
  ZPoly cyc = cyclotomic_poly(d);
  std::vector<std::vector<Int>> table;
  std::vector<Int> cur(static_cast<size_t>(phi), Int(0));
  cur[0] = 1;
  table.push_back(cur);
  for (long k = 1; k <= upto; ++k) {
    std::vector<Int> nxt(static_cast<size_t>(phi), Int(0));
    // multiply by x
    Int top = cur[static_cast<size_t>(phi - 1)];
    for (long i = phi - 1; i > 0; --i) nxt[static_cast<size_t>(i)] = cur[static_cast<size_t>(i - 1)];
    nxt[0] = 0;
    if (!is_zero(top)) {
      // x^phi = -(lower coefficients of Phi_d)  (Phi_d monic)
      for (long i = 0; i < phi; ++i) nxt[static_cast<size_t>(i)] -= top * cyc.coeff(i);
    }
    cur = nxt;
    table.push_back(cur);
  }
  return table;
}

}  // namespace

CycloElem component_of(const GroupRingPoly& a, long d) {
  long phi = euler_phi(d);
  CycloElem r;
  r.d = d;
  r.c.assign(static_cast<size_t>(phi), ZPoly::zero());
  auto table = xpower_table(d, a.q() - 1);
  for (const auto& [k, co] : a.terms()) {
    const auto& xv = table[static_cast<size_t>(k.first)];
    for (long i = 0; i < phi; ++i)
      if (!is_zero(xv[static_cast<size_t>(i)]))
        r.c[static_cast<size_t>(i)].add_to_coeff(k.second, co * xv[static_cast<size_t>(i)]);
  }
  return r;
}

CycloElem ce_mul(const CycloElem& a, const CycloElem& b) {
  if (a.d != b.d) throw precondition_error("ce_mul: mismatched cyclotomic index");
  long phi = euler_phi(a.d);
  std::vector<ZPoly> conv(static_cast<size_t>(2 * phi - 1), ZPoly::zero());
  for (long i = 0; i < phi; ++i)
    for (long j = 0; j < phi; ++j)
      conv[static_cast<size_t>(i + j)] =
          add(conv[static_cast<size_t>(i + j)],
              mul(a.c[static_cast<size_t>(i)], b.c[static_cast<size_t>(j)]));
  auto table = xpower_table(a.d, 2 * phi - 2);
  CycloElem r;
  r.d = a.d;
  r.c.assign(static_cast<size_t>(phi), ZPoly::zero());
  for (long k = 0; k < 2 * phi - 1; ++k) {
    if (conv[static_cast<size_t>(k)].is_zero()) continue;
    const auto& xv = table[static_cast<size_t>(k)];
    for (long i = 0; i < phi; ++i)
      if (!is_zero(xv[static_cast<size_t>(i)]))
        r.c[static_cast<size_t>(i)] =
            add(r.c[static_cast<size_t>(i)],
                scaled(conv[static_cast<size_t>(k)], xv[static_cast<size_t>(i)]));
  }
  return r;
}

CycloElem ce_sigma(const CycloElem& a, long k) {
  long d = a.d;
  if (std::gcd(k, d) != 1) throw precondition_error("ce_sigma: k not coprime to d");
  long phi = euler_phi(d);
  auto table = xpower_table(d, (phi - 1) * k);
  CycloElem r;
  r.d = d;
  r.c.assign(static_cast<size_t>(phi), ZPoly::zero());
  for (long i = 0; i < phi; ++i) {
    if (a.c[static_cast<size_t>(i)].is_zero()) continue;
    const auto& xv = table[static_cast<size_t>(i * k)];
    for (long j = 0; j < phi; ++j)
      if (!is_zero(xv[static_cast<size_t>(j)]))
        r.c[static_cast<size_t>(j)] =
            add(r.c[static_cast<size_t>(j)],
                scaled(a.c[static_cast<size_t>(i)], xv[static_cast<size_t>(j)]));
  }
  return r;
}

CharacterComponents to_components(const GroupRingPoly& a, long max_q) {
  if (a.q() > max_q) throw precondition_error("to_components: q exceeds configured maximum");
  CharacterComponents cc;
  cc.q = a.q();
  for (long d : divisors_of(a.q())) cc.parts.emplace_back(d, component_of(a, d));
  return cc;
}

ZPoly component_norm(const CycloElem& a) {
  CycloElem acc;
  acc.d = a.d;
  acc.c.assign(static_cast<size_t>(euler_phi(a.d)), ZPoly::zero());
  acc.c[0] = ZPoly::one();
  for (long k = 1; k <= a.d; ++k) {
    if (std::gcd(k, a.d) != 1) continue;
    acc = ce_mul(acc, ce_sigma(a, k));
  }
  if (!acc.is_x_free())
    throw invariant_error("component_norm: Galois-conjugate product not x-free");
  return acc.c[0];
}

ZPoly zpoly_mat_det(std::vector<std::vector<ZPoly>> m) {
  size_t n = m.size();
  for (const auto& row : m)
    if (row.size() != n) throw precondition_error("zpoly_mat_det: matrix not square");
  if (n == 0) return ZPoly::one();
  int sign = 1;
  ZPoly prev_pivot = ZPoly::one();
  for (size_t k = 0; k + 1 < n; ++k) {
    size_t piv = k;
    while (piv < n && m[piv][k].is_zero()) ++piv;
    if (piv == n) return ZPoly::zero();
    if (piv != k) {
      std::swap(m[piv], m[k]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i) {
      for (size_t j = k + 1; j < n; ++j) {
        ZPoly num = sub(mul(m[i][j], m[k][k]), mul(m[i][k], m[k][j]));
        auto quot = divides(prev_pivot, num);
        if (!quot) throw invariant_error("zpoly_mat_det: Bareiss division not exact");
        m[i][j] = *quot;
      }
      m[i][k] = ZPoly::zero();
    }
    prev_pivot = m[k][k];
  }
  ZPoly det = m[n - 1][n - 1];
  return sign < 0 ? neg(det) : det;
}

namespace {

// Route A: Sylvester resultant Res_g(g^q - 1, a) with t-denominators cleared
// first; the resulting unit factor t^(shift*q) is divided back out.
ZPoly norm_by_resultant(const GroupRingPoly& a) {
  long q = a.q();
  long tshift = a.min_t_exp() < 0 ? -a.min_t_exp() : 0;
  // coefficient of g^i, as honest polynomials in t
  long m = 0;
  for (const auto& [k, c] : a.terms()) m = std::max(m, k.first);
  std::vector<ZPoly> ga(static_cast<size_t>(m + 1), ZPoly::zero());
  for (const auto& [k, c] : a.terms())
    ga[static_cast<size_t>(k.first)].add_to_coeff(k.second + tshift, c);
  size_t n = static_cast<size_t>(q + m);
  std::vector<std::vector<ZPoly>> syl(n, std::vector<ZPoly>(n, ZPoly::zero()));
  // m rows of g^q - 1, descending coefficients (1, 0, ..., 0, -1)
  for (long r = 0; r < m; ++r) {
    syl[static_cast<size_t>(r)][static_cast<size_t>(r)] = ZPoly::one();
    syl[static_cast<size_t>(r)][static_cast<size_t>(r + q)] = ZPoly::constant(Int(-1));
  }
  // q rows of a's g-coefficients, descending
  for (long r = 0; r < q; ++r)
    for (long i = 0; i <= m; ++i)
      syl[static_cast<size_t>(m + r)][static_cast<size_t>(r + m - i)] = ga[static_cast<size_t>(i)];
  ZPoly det = zpoly_mat_det(std::move(syl));
  return shifted(det, -tshift * q);
}

}  // namespace

ZPoly norm_product(const GroupRingPoly& a, long max_q) {
  if (a.q() > max_q) throw precondition_error("norm_product: q exceeds configured maximum");
  if (a.is_zero()) return ZPoly::zero();
  ZPoly routeA = norm_by_resultant(a);
  ZPoly routeB = ZPoly::one();
  for (long d : divisors_of(a.q())) routeB = mul(routeB, component_norm(component_of(a, d)));
  if (routeA != routeB)
    throw invariant_error("norm_product: resultant and cyclotomic-norm routes disagree");
  return canon(routeA);
}

}  // namespace eqknot
