#include <eqknot/torsion.hpp>

#include <cassert>
#include <optional>
#include <utility>

namespace eqknot {

RMatrix rm_zero(long rows, long cols) {
  return RMatrix(static_cast<size_t>(rows),
                 std::vector<RatFun>(static_cast<size_t>(cols), RatFun()));
}

RMatrix rm_identity(long n) {
  RMatrix m = rm_zero(n, n);
  for (long i = 0; i < n; ++i) m[i][i] = rf_from_int(1);
  return m;
}

RMatrix rm_sub(const RMatrix& a, const RMatrix& b) {
  assert(a.size() == b.size());
  RMatrix r = a;
  for (size_t i = 0; i < a.size(); ++i) {
    assert(a[i].size() == b[i].size());
    for (size_t j = 0; j < a[i].size(); ++j) r[i][j] = rf_sub(a[i][j], b[i][j]);
  }
  return r;
}

RMatrix rm_mul(const RMatrix& a, const RMatrix& b, long bcols) {
  RMatrix r = rm_zero(static_cast<long>(a.size()), bcols);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t k = 0; k < a[i].size(); ++k) {
      if (a[i][k].is_zero()) continue;
      assert(k < b.size() && b[k].size() == static_cast<size_t>(bcols));
      for (size_t j = 0; j < static_cast<size_t>(bcols); ++j)
        r[i][j] = rf_add(r[i][j], rf_mul(a[i][k], b[k][j]));
    }
  return r;
}

RMatrix rm_transpose(const RMatrix& a, long acols) {
  RMatrix r = rm_zero(acols, static_cast<long>(a.size()));
  for (size_t i = 0; i < a.size(); ++i) {
    assert(a[i].size() == static_cast<size_t>(acols));
    for (size_t j = 0; j < a[i].size(); ++j) r[j][i] = a[i][j];
  }
  return r;
}

bool rm_is_zero(const RMatrix& a) {
  for (const auto& row : a)
    for (const auto& x : row)
      if (!x.is_zero()) return false;
  return true;
}

RatFun rm_det(RMatrix a) {
  size_t n = a.size();
  assert(n == 0 || a[0].size() == n);
  RatFun det = rf_from_int(1);
  for (size_t c = 0; c < n; ++c) {
    size_t p = c;
    while (p < n && a[p][c].is_zero()) ++p;
    if (p == n) return RatFun();
    if (p != c) {
      std::swap(a[p], a[c]);
      det = rf_neg(det);
    }
    det = rf_mul(det, a[c][c]);
    for (size_t i = c + 1; i < n; ++i) {
      if (a[i][c].is_zero()) continue;
      RatFun f = rf_div(a[i][c], a[c][c]);
      for (size_t j = c; j < n; ++j) a[i][j] = rf_sub(a[i][j], rf_mul(f, a[c][j]));
    }
  }
  return det;
}

namespace {

// Solves U * V = W columnwise by row reduction of [U | W]; U is urows x
// ucols, W is urows x wcols.  Free variables are set to zero.
std::optional<RMatrix> solve_uv_eq_w(const RMatrix& u, long ucols, const RMatrix& w, long wcols) {
  long urows = static_cast<long>(u.size());
  RMatrix m = rm_zero(urows, ucols + wcols);
  for (long i = 0; i < urows; ++i) {
    for (long j = 0; j < ucols; ++j) m[i][j] = u[i][j];
    for (long j = 0; j < wcols; ++j) m[i][ucols + j] = w[i][j];
  }
  std::vector<std::pair<long, long>> pivots;  // (row, col)
  long r = 0;
  for (long c = 0; c < ucols && r < urows; ++c) {
    long p = r;
    while (p < urows && m[p][c].is_zero()) ++p;
    if (p == urows) continue;
    std::swap(m[p], m[r]);
    RatFun inv = rf_div(rf_from_int(1), m[r][c]);
    for (long j = c; j < ucols + wcols; ++j) m[r][j] = rf_mul(m[r][j], inv);
    for (long i = 0; i < urows; ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      RatFun f = m[i][c];
      for (long j = c; j < ucols + wcols; ++j)
        m[i][j] = rf_sub(m[i][j], rf_mul(f, m[r][j]));
    }
    pivots.emplace_back(r, c);
    ++r;
  }
  for (long i = r; i < urows; ++i)
    for (long j = 0; j < wcols; ++j)
      if (!m[i][ucols + j].is_zero()) return std::nullopt;
  RMatrix v = rm_zero(ucols, wcols);
  for (const auto& [pr, pc] : pivots)
    for (long j = 0; j < wcols; ++j) v[pc][j] = m[pr][ucols + j];
  return v;
}

// Solves X * A = B (A: arows x acols, B: brows x acols, X: brows x arows)
// through the transposed system.
std::optional<RMatrix> solve_xa_eq_b(const RMatrix& a, long acols, const RMatrix& b, long brows) {
  long arows = static_cast<long>(a.size());
  auto y = solve_uv_eq_w(rm_transpose(a, acols), arows, rm_transpose(b, acols), brows);
  if (!y) return std::nullopt;
  return rm_transpose(*y, brows);
}

}  // namespace

void validate_complex(const BasedChainComplex& c) {
  size_t n = c.ranks.size();
  for (long r : c.ranks)
    if (r < 0) throw precondition_error("chain complex: negative rank");
  size_t expected = n == 0 ? 0 : n - 1;
  if (c.boundaries.size() != expected)
    throw precondition_error("chain complex: expected one boundary matrix per adjacent pair");
  for (size_t k = 0; k < c.boundaries.size(); ++k) {
    const RMatrix& m = c.boundaries[k];
    if (m.size() != static_cast<size_t>(c.ranks[k + 1]))
      throw precondition_error("chain complex: boundary row count mismatch");
    for (const auto& row : m)
      if (row.size() != static_cast<size_t>(c.ranks[k]))
        throw precondition_error("chain complex: boundary column count mismatch");
  }
  for (size_t k = 1; k < c.boundaries.size(); ++k)
    if (!rm_is_zero(rm_mul(c.boundaries[k], c.boundaries[k - 1], c.ranks[k - 1])))
      throw precondition_error("chain complex: d∘d is nonzero");
}

RatFun torsion(const BasedChainComplex& c) {
  validate_complex(c);
  long n = static_cast<long>(c.ranks.size());
  long chi = 0;
  for (long i = 0; i < n; ++i) chi += (i % 2 == 0) ? c.ranks[i] : -c.ranks[i];
  if (chi != 0)
    throw precondition_error("complex is not acyclic: Euler characteristic is nonzero");
  if (n <= 1) return rf_from_int(1);

  // Gamma[i]: C_i -> C_(i+1) with d Gamma + Gamma d = id at every level
  std::vector<RMatrix> gamma(static_cast<size_t>(n - 1));
  auto g0 = solve_xa_eq_b(c.boundaries[0], c.ranks[0], rm_identity(c.ranks[0]), c.ranks[0]);
  if (!g0) throw precondition_error("complex is not acyclic: bottom boundary not surjective");
  gamma[0] = std::move(*g0);
  for (long i = 1; i <= n - 2; ++i) {
    RMatrix p = rm_sub(rm_identity(c.ranks[i]),
                       rm_mul(c.boundaries[i - 1], gamma[i - 1], c.ranks[i]));
    auto gi = solve_xa_eq_b(c.boundaries[i], c.ranks[i], p, c.ranks[i]);
    if (!gi) throw precondition_error("complex is not acyclic: contraction failed");
    gamma[i] = std::move(*gi);
  }
  RMatrix top = rm_sub(rm_identity(c.ranks[n - 1]),
                       rm_mul(c.boundaries[n - 2], gamma[n - 2], c.ranks[n - 1]));
  if (!rm_is_zero(top))
    throw precondition_error("complex is not acyclic: top homology is nonzero");

  // block matrix of (d + Gamma): C_odd -> C_even
  std::vector<long> row_off(static_cast<size_t>(n), 0), col_off(static_cast<size_t>(n), 0);
  long rows = 0, cols = 0;
  for (long i = 1; i < n; i += 2) {
    row_off[i] = rows;
    rows += c.ranks[i];
  }
  for (long i = 0; i < n; i += 2) {
    col_off[i] = cols;
    cols += c.ranks[i];
  }
  assert(rows == cols);
  RMatrix block = rm_zero(rows, cols);
  auto place = [&](const RMatrix& m, long r0, long c0) {
    for (size_t i = 0; i < m.size(); ++i)
      for (size_t j = 0; j < m[i].size(); ++j) block[r0 + i][c0 + j] = m[i][j];
  };
  for (long i = 1; i < n; i += 2) {
    place(c.boundaries[i - 1], row_off[i], col_off[i - 1]);
    if (i + 1 <= n - 1) place(gamma[i], row_off[i], col_off[i + 1]);
  }
  RatFun det = rm_det(block);
  if (det.is_zero()) throw invariant_error("torsion: contraction produced a singular block");
  return det;
}

bool ses_torsion_check(const BasedChainComplex& cPrime, const BasedChainComplex& c,
                       const BasedChainComplex& cDoublePrime, const SesData& s) {
  size_t n = c.ranks.size();
  if (cPrime.ranks.size() != n || cDoublePrime.ranks.size() != n)
    throw precondition_error("ses_torsion_check: incompatible ranks (lengths differ)");
  if (s.primeIndices.size() != n)
    throw precondition_error("ses_torsion_check: one index set per degree required");
  for (size_t i = 0; i < n; ++i) {
    if (cPrime.ranks[i] + cDoublePrime.ranks[i] != c.ranks[i])
      throw precondition_error("ses_torsion_check: incompatible ranks");
    const auto& idx = s.primeIndices[i];
    if (idx.size() != static_cast<size_t>(cPrime.ranks[i]))
      throw precondition_error("ses_torsion_check: index set size mismatch");
    long prev = -1;
    for (long v : idx) {
      if (v <= prev || v >= c.ranks[i])
        throw precondition_error("ses_torsion_check: index set not an increasing subset");
      prev = v;
    }
  }
  RatFun t = torsion(c);
  RatFun prod = rf_mul(torsion(cPrime), torsion(cDoublePrime));
  return t == prod || t == rf_neg(prod);
}

BasedChainComplex dual_complex(const BasedChainComplex& c, bool involutionFlag) {
  validate_complex(c);
  long n = static_cast<long>(c.ranks.size());
  BasedChainComplex d;
  d.ranks.assign(c.ranks.rbegin(), c.ranks.rend());
  for (long i = 1; i < n; ++i) {
    // dual d_i is the transpose of d_(n-i) for n the top degree
    RMatrix m = rm_transpose(c.boundaries[n - 1 - i], c.ranks[n - 1 - i]);
    if (involutionFlag)
      for (auto& row : m)
        for (auto& x : row) x = rf_involute(x);
    d.boundaries.push_back(std::move(m));
  }
  return d;
}

}  // namespace eqknot
