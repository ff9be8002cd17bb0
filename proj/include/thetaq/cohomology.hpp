#pragma once

// Bigraded Poincare polynomial of H*(g,K;A_q).
//
// H^{a,b}(g,K;A_q) = H^{a-R+, b-R-}(l, L∩K; C), and the latter is the
// cohomology of the compact dual of L/(L∩K), a product of Grassmannians
// Gr(x_k, x_k+y_k). All classes there have type (m,m), so the polynomial is
// carried by its diagonal c_m = dim H^{R+ + m, R- + m}; the diagonal is the
// product of Gaussian binomials [x_k+y_k choose x_k].

#include <algorithm>
#include <cstddef>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "thetaq/error.hpp"
#include "thetaq/parabolic.hpp"

namespace thetaq {

using BigInt = boost::multiprecision::cpp_int;

/// Coefficients of the q-binomial [n choose k], lowest degree first.
inline std::vector<BigInt> gaussian_binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n)
    throw Error("gaussian_binomial needs 0 <= k <= n (n=" + std::to_string(n) + ", k=" + std::to_string(k) + ")");
  // Row-by-row Pascal rule: [m,j] = [m-1,j-1] + q^j [m-1,j].
  std::vector<std::vector<BigInt>> row(static_cast<std::size_t>(k + 1));
  row[0] = {1};
  for (int m = 1; m <= n; ++m) {
    for (int j = std::min(m, k); j >= 1; --j) {
      auto& cur = row[static_cast<std::size_t>(j)];
      const auto& left = row[static_cast<std::size_t>(j - 1)];
      std::vector<BigInt> next(static_cast<std::size_t>(j * (m - j) + 1));
      for (std::size_t d = 0; d < left.size(); ++d) next[d] += left[d];
      for (std::size_t d = 0; d < cur.size(); ++d) next[d + static_cast<std::size_t>(j)] += cur[d];
      cur = std::move(next);
    }
  }
  return row[static_cast<std::size_t>(k)];
}

inline std::vector<BigInt> convolve(const std::vector<BigInt>& a, const std::vector<BigInt>& b) {
  std::vector<BigInt> out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

struct PoincarePolynomial {
  int shift_plus = 0;   // R+
  int shift_minus = 0;  // R-
  std::vector<BigInt> diag;

  int r_total() const noexcept { return shift_plus + shift_minus; }
  int max_m() const noexcept { return static_cast<int>(diag.size()) - 1; }

  /// Highest total degree k with H^k != 0; total degree of c_m is R + 2m.
  int top_total_degree() const noexcept { return r_total() + 2 * max_m(); }

  BigInt total() const {
    BigInt s = 0;
    for (const auto& c : diag) s += c;
    return s;
  }

  bool is_palindromic() const { return std::equal(diag.begin(), diag.end(), diag.rbegin()); }

  /// dim H^{a,b}(g,K;A_q).
  BigInt dimension(int a, int b) const {
    const int m = a - shift_plus;
    if (m < 0 || m > max_m() || b - shift_minus != m) return 0;
    return diag[static_cast<std::size_t>(m)];
  }
};

inline PoincarePolynomial hodge_polynomial(const LevelPattern& pat) {
  const auto inv = invariants(pat);
  PoincarePolynomial poly;
  poly.shift_plus = inv.r_plus;
  poly.shift_minus = inv.r_minus;
  poly.diag = {1};
  for (const auto& lv : pat.levels()) poly.diag = convolve(poly.diag, gaussian_binomial(lv.x + lv.y, lv.x));
  return poly;
}

/// A class can meet a (m,m)-type geometric class of degree <= t only if
/// R+ = R- <= t.
inline bool hodge_type_admissible(const LevelPattern& pat, int t) {
  const auto inv = invariants(pat);
  return inv.r_plus == inv.r_minus && inv.r_plus <= t;
}

}  // namespace thetaq
