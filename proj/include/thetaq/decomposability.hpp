#pragma once

// Discrete decomposability of A_{q_lambda} restricted to the two Hermitian
// symmetric pairs of su(p,q):
//
//   row1: (su(p,q), su(k) + su(p-k,q) + u(1)),   k < p
//   row2: (su(p,q), su(p,q-k) + su(k) + u(1)),   k < q
//
// Membership in D is "row condition holds, or q is holomorphic or
// anti-holomorphic". The row conditions only compare coordinates, so they
// are evaluated on the integer representative of the pattern.

#include <optional>
#include <string>

#include "thetaq/error.hpp"
#include "thetaq/parabolic.hpp"
#include "thetaq/root_system.hpp"

namespace thetaq {

struct SymmetricPair {
  Family family = Family::row1;
  int k = 1;

  friend bool operator==(const SymmetricPair&, const SymmetricPair&) = default;
};

inline std::optional<std::string> pair_violation(const SymmetricPair& pair, const Signature& sig) {
  if (pair.k < 1) return "pair parameter k must be positive";
  if (pair.family == Family::row1 && pair.k >= sig.p)
    return "row1 pair needs k < p (k=" + std::to_string(pair.k) + ", p=" + std::to_string(sig.p) + ")";
  if (pair.family == Family::row2 && pair.k >= sig.q)
    return "row2 pair needs k < q (k=" + std::to_string(pair.k) + ", q=" + std::to_string(sig.q) + ")";
  return std::nullopt;
}

inline void require_valid(const SymmetricPair& pair, const Signature& sig) {
  if (auto v = pair_violation(pair, sig)) throw PairError(*v);
}

namespace detail {

inline void require_matching(const LevelPattern& pat, const SymmetricPair& pair, const Signature& sig) {
  require_valid(pair, sig);
  if (pat.p() != sig.p || pat.q() != sig.q)
    throw PairError("pattern " + pat.to_string() + " does not belong to su(" + std::to_string(sig.p) + "," +
                    std::to_string(sig.q) + ")");
}

// row1: a_p >= a_{p+1}, or a_l >= a_1 and a_p >= a_{l+1} for some
// p+1 <= l <= p+q-1, or a_{p+q} >= a_1.
inline bool row1_condition(const Lambda& a, int p, int q) {
  if (a[p] >= a[p + 1]) return true;
  for (int l = p + 1; l <= p + q - 1; ++l)
    if (a[l] >= a[1] && a[p] >= a[l + 1]) return true;
  return a[p + q] >= a[1];
}

// row2: a_{p+q} >= a_1, or a_l >= a_{p+1} and a_{p+q} >= a_{l+1} for some
// 1 <= l <= p-1, or a_p >= a_{p+1}.
inline bool row2_condition(const Lambda& a, int p, int q) {
  if (a[p + q] >= a[1]) return true;
  for (int l = 1; l <= p - 1; ++l)
    if (a[l] >= a[p + 1] && a[p + q] >= a[l + 1]) return true;
  return a[p] >= a[p + 1];
}

}  // namespace detail

inline bool is_discretely_decomposable(const LevelPattern& pat, const SymmetricPair& pair, const Signature& sig) {
  detail::require_matching(pat, pair, sig);
  const auto inv = invariants(pat);
  if (inv.holomorphic || inv.antiholomorphic) return true;
  const auto a = representative(pat);
  return pair.family == Family::row1 ? detail::row1_condition(a, sig.p, sig.q)
                                     : detail::row2_condition(a, sig.p, sig.q);
}

/// Smallest index s with a_1 > a_s > a_p, p+1 <= s <= p+q (row1), or
/// a_{p+1} > a_s > a_{p+q}, 1 <= s <= p (row2). Present exactly when the
/// pattern is not discretely decomposable.
inline std::optional<int> non_decomposability_witness(const LevelPattern& pat, const SymmetricPair& pair,
                                                      const Signature& sig) {
  detail::require_matching(pat, pair, sig);
  const auto a = representative(pat);
  if (pair.family == Family::row1) {
    for (int s = sig.p + 1; s <= sig.rank(); ++s)
      if (a[1] > a[s] && a[s] > a[sig.p]) return s;
  } else {
    for (int s = 1; s <= sig.p; ++s)
      if (a[sig.p + 1] > a[s] && a[s] > a[sig.rank()]) return s;
  }
  return std::nullopt;
}

}  // namespace thetaq
