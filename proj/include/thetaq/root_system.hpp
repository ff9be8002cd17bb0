#pragma once

// Root data of su(p,q) realized inside E = R^{p+q} with orthonormal basis
// e_1..e_{p+q}. Indices are 1-based throughout, matching the usual
// a_1..a_{p+q} coordinate notation.

#include <cstdint>
#include <string>
#include <vector>

#include "thetaq/error.hpp"

namespace thetaq {

struct Signature {
  int p = 1;
  int q = 1;

  Signature() = default;
  Signature(int p_, int q_) : p(p_), q(q_) {
    if (p < 1 || q < 1)
      throw Error("signature requires p >= 1 and q >= 1 (got p=" +
                  std::to_string(p) + ", q=" + std::to_string(q) + ")");
  }

  int rank() const noexcept { return p + q; }
  /// Complex dimension of G/K, i.e. dim p^+.
  int complex_dimension() const noexcept { return p * q; }
  bool in_first_block(int index) const noexcept { return index >= 1 && index <= p; }

  friend bool operator==(const Signature&, const Signature&) = default;
};

/// sign * (e_i - e_j) with i < j.
struct Root {
  int i = 1;
  int j = 2;
  int sign = 1;

  Root negated() const noexcept { return {i, j, -sign}; }

  friend bool operator==(const Root&, const Root&) = default;
};

inline bool is_compact(const Root& r, const Signature& sig) noexcept {
  return sig.in_first_block(r.i) == sig.in_first_block(r.j);
}

/// Positive compact roots e_i - e_j, i < j inside one block.
inline std::vector<Root> compact_positive_roots(const Signature& sig) {
  std::vector<Root> out;
  out.reserve(static_cast<std::size_t>(sig.p * (sig.p - 1) / 2 + sig.q * (sig.q - 1) / 2));
  for (int i = 1; i <= sig.p; ++i)
    for (int j = i + 1; j <= sig.p; ++j) out.push_back({i, j, 1});
  for (int i = sig.p + 1; i <= sig.rank(); ++i)
    for (int j = i + 1; j <= sig.rank(); ++j) out.push_back({i, j, 1});
  return out;
}

enum class Half { plus, minus };

/// Weights of p^+ (e_i - e_j, i <= p < j) or of p^- (their negatives).
inline std::vector<Root> noncompact_weights(const Signature& sig, Half half) {
  const int sign = half == Half::plus ? 1 : -1;
  std::vector<Root> out;
  out.reserve(static_cast<std::size_t>(sig.p * sig.q));
  for (int i = 1; i <= sig.p; ++i)
    for (int j = sig.p + 1; j <= sig.rank(); ++j) out.push_back({i, j, sign});
  return out;
}

/// <lambda, alpha> for integer coordinates a_1..a_n.
inline std::int64_t pairing(const std::vector<std::int64_t>& coords, const Root& alpha) {
  const auto n = static_cast<int>(coords.size());
  if (alpha.i < 1 || alpha.j > n || alpha.i >= alpha.j)
    throw IndexError("root e_" + std::to_string(alpha.i) + " - e_" + std::to_string(alpha.j) +
                     " out of range for " + std::to_string(n) + " coordinates");
  const auto diff = coords[static_cast<std::size_t>(alpha.i - 1)] -
                    coords[static_cast<std::size_t>(alpha.j - 1)];
  return alpha.sign * diff;
}

}  // namespace thetaq
