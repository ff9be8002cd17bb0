#pragma once

// Assembles Q, D ∩ Q and Q \ D for one (signature, symmetric pair) and checks
// the non-vanishing claims for the distinguished classes e_1 - e_p (row1) and
// e_{p+1} - e_{p+q} (row2).

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "thetaq/cohomology.hpp"
#include "thetaq/decomposability.hpp"
#include "thetaq/enumeration.hpp"
#include "thetaq/parabolic.hpp"
#include "thetaq/root_system.hpp"

namespace thetaq {

enum class Block { first, second };

/// Coordinates strictly above / equal to / strictly below a chosen level,
/// counted separately in the first block (x,y,z) and second block (l,m,n).
struct BlockProfile {
  int x = 0, y = 0, z = 0;
  int l = 0, m = 0, n = 0;
  int witness_s = 0;  // 1-based coordinate index sitting at the chosen level

  friend bool operator==(const BlockProfile&, const BlockProfile&) = default;
};

inline BlockProfile block_profile(const LevelPattern& pat, std::size_t s_level, Block block) {
  if (s_level >= pat.size())
    throw IndexError("level " + std::to_string(s_level) + " out of range for " + pat.to_string());
  const auto& chosen = pat[s_level];
  if ((block == Block::first ? chosen.x : chosen.y) == 0)
    throw IndexError("level " + std::to_string(s_level) + " of " + pat.to_string() + " has no " +
                     (block == Block::first ? "first" : "second") + "-block coordinate");
  BlockProfile prof;
  for (std::size_t k = 0; k < s_level; ++k) {
    prof.x += pat[k].x;
    prof.l += pat[k].y;
  }
  prof.y = chosen.x;
  prof.m = chosen.y;
  prof.z = pat.p() - prof.x - prof.y;
  prof.n = pat.q() - prof.l - prof.m;
  prof.witness_s = block == Block::first ? prof.x + 1 : pat.p() + prof.l + 1;
  return prof;
}

/// R+ >= x(m+n) + yn,  R- >= z(l+m) + yl,  R >= x(m+n) + y(n+l) + z(l+m).
inline bool check_proof_inequalities(const LevelPattern& pat, const BlockProfile& f) {
  const auto inv = invariants(pat);
  const bool plus = inv.r_plus >= f.x * (f.m + f.n) + f.y * f.n;
  const bool minus = inv.r_minus >= f.z * (f.l + f.m) + f.y * f.l;
  const bool total = inv.r_total >= f.x * (f.m + f.n) + f.y * (f.n + f.l) + f.z * (f.l + f.m);
  return plus && minus && total;
}

/// Complex dimensions of the totally geodesic cycle attached to the pair and
/// of its complementary cycle.
inline std::pair<int, int> cycle_dimensions(const Signature& sig, const SymmetricPair& pair) {
  require_valid(pair, sig);
  const Signature sub = pair.family == Family::row1 ? Signature(sig.p - pair.k, sig.q)
                                                    : Signature(sig.p, sig.q - pair.k);
  const int d = static_cast<int>(noncompact_weights(sub, Half::plus).size());
  return {d, sig.complex_dimension() - d};
}

inline int compute_t(const Signature& sig, const SymmetricPair& pair) {
  const auto [d, complement] = cycle_dimensions(sig, pair);
  return std::min(d, complement);
}

/// Whether (p,q,pair) satisfies the hypotheses under which Q \ D is claimed to
/// be the distinguished singleton: row1, k=1, 5 <= p <= q <= 2p-2; row2, k=1,
/// 5 <= p <= q, p != q-1; and su(2,2) for both rows.
inline bool within_hypothesis(const Signature& sig, const SymmetricPair& pair) {
  if (pair.k != 1) return false;
  if (sig.p == 2 && sig.q == 2) return true;
  if (sig.p < 5 || sig.p > sig.q) return false;
  if (pair.family == Family::row1) return sig.q <= 2 * sig.p - 2;
  return sig.p != sig.q - 1;
}

/// How members of Q \ D are identified when deciding "singleton".
/// `pattern`: each level pattern is its own class.
/// `aq_class`: patterns with the same u ∩ p (hence isomorphic A_q) are merged.
enum class Granularity { pattern, aq_class };

inline std::string to_string(Granularity g) { return g == Granularity::pattern ? "pattern" : "aq_class"; }

struct QEntry {
  LevelPattern pattern;
  ParabolicInvariants inv;
  bool decomposable = false;
  std::optional<int> witness_s;
};

struct VerificationReport {
  Signature signature;
  SymmetricPair pair;
  int t = 0;
  Granularity granularity = Granularity::aq_class;
  std::vector<QEntry> q_set;
  std::vector<QEntry> d_cap_q;
  std::vector<QEntry> q_minus_d;
  /// Q \ D grouped into classes; each group is ordered with its reported
  /// representative (fewest levels, then lexicographic) first.
  std::vector<std::vector<LevelPattern>> q_minus_d_classes;
  bool singleton = false;
  std::optional<LevelPattern> expected;
  bool matches_expected = false;
  bool within_hypothesis = false;
  std::uint64_t nodes_visited = 0;

  std::size_t class_count() const noexcept { return q_minus_d_classes.size(); }
};

inline std::vector<std::vector<LevelPattern>> group_classes(const std::vector<QEntry>& entries, Granularity g) {
  std::vector<std::vector<LevelPattern>> groups;
  if (g == Granularity::pattern) {
    for (const auto& e : entries) groups.push_back({e.pattern});
    return groups;
  }
  std::map<NilradicalKey, std::size_t> index;
  for (const auto& e : entries) {
    auto [it, fresh] = index.try_emplace(nilradical_key(e.pattern), groups.size());
    if (fresh) groups.emplace_back();
    groups[it->second].push_back(e.pattern);
  }
  for (auto& grp : groups) {
    std::stable_sort(grp.begin(), grp.end(), [](const LevelPattern& a, const LevelPattern& b) {
      if (a.size() != b.size()) return a.size() < b.size();
      return a < b;
    });
  }
  std::sort(groups.begin(), groups.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return groups;
}

struct VerifyOptions {
  SearchOptions search;
  Granularity granularity = Granularity::aq_class;
};

inline VerificationReport verify_theorem(const Signature& sig, const SymmetricPair& pair,
                                         const VerifyOptions& opts = {}) {
  require_valid(pair, sig);
  VerificationReport rep;
  rep.signature = sig;
  rep.pair = pair;
  rep.granularity = opts.granularity;
  rep.t = compute_t(sig, pair);
  rep.within_hypothesis = within_hypothesis(sig, pair);

  SearchStats stats;
  auto members = enumerate_Q(sig, rep.t, opts.search, &stats);
  rep.nodes_visited = stats.nodes;

  for (auto& mem : members) {
    QEntry e{std::move(mem.pattern), std::move(mem.inv), false, std::nullopt};
    e.decomposable = is_discretely_decomposable(e.pattern, pair, sig);
    e.witness_s = non_decomposability_witness(e.pattern, pair, sig);
    (e.decomposable ? rep.d_cap_q : rep.q_minus_d).push_back(e);
    rep.q_set.push_back(std::move(e));
  }

  rep.q_minus_d_classes = group_classes(rep.q_minus_d, opts.granularity);
  rep.singleton = rep.q_minus_d_classes.size() == 1;
  if (pair.family == Family::row1 ? sig.p >= 2 : sig.q >= 2) rep.expected = distinguished_class(sig, pair.family);
  if (rep.singleton && rep.expected) {
    const auto& only = rep.q_minus_d_classes.front();
    rep.matches_expected = std::find(only.begin(), only.end(), *rep.expected) != only.end();
  }
  return rep;
}

}  // namespace thetaq
