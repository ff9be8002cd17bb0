#pragma once

// theta-stable parabolic subalgebras q_lambda of su(p,q), represented by the
// merged order pattern of a dominant lambda.
//
// A level pattern ((x_1,y_1),...,(x_r,y_r)) lists the distinct values of
// lambda from highest to lowest; level k holds x_k first-block coordinates
// and y_k second-block coordinates. The Levi factor of q_lambda is
// s(u(x_1,y_1) + ... + u(x_r,y_r)).

#include <algorithm>
#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "thetaq/error.hpp"
#include "thetaq/root_system.hpp"

namespace thetaq {

struct Lambda {
  Signature sig;
  std::vector<std::int64_t> coords;

  Lambda(Signature s, std::vector<std::int64_t> c) : sig(s), coords(std::move(c)) {
    if (static_cast<int>(coords.size()) != sig.rank())
      throw Error("lambda needs " + std::to_string(sig.rank()) + " coordinates, got " +
                  std::to_string(coords.size()));
  }

  std::int64_t operator[](int index) const { return coords.at(static_cast<std::size_t>(index - 1)); }
};

inline std::int64_t pairing(const Lambda& lambda, const Root& alpha) {
  return pairing(lambda.coords, alpha);
}

/// Describes the first violated dominance inequality, if any.
inline std::optional<std::string> dominance_violation(const Lambda& lambda) {
  const auto check = [&](int from, int to) -> std::optional<std::string> {
    for (int i = from; i < to; ++i) {
      if (lambda[i] < lambda[i + 1])
        return "dominance violated: a_" + std::to_string(i) + " >= a_" + std::to_string(i + 1) +
               " fails (" + std::to_string(lambda[i]) + " < " + std::to_string(lambda[i + 1]) + ")";
    }
    return std::nullopt;
  };
  if (auto v = check(1, lambda.sig.p)) return v;
  return check(lambda.sig.p + 1, lambda.sig.rank());
}

struct Level {
  int x = 0;
  int y = 0;

  friend auto operator<=>(const Level&, const Level&) = default;
};

class LevelPattern {
 public:
  LevelPattern() = default;

  /// Validates x_k + y_k >= 1 and nonnegativity; p and q are the column sums.
  explicit LevelPattern(std::vector<Level> levels) : levels_(std::move(levels)) {
    for (const auto& lv : levels_) {
      if (lv.x < 0 || lv.y < 0) throw PatternError("level counts must be nonnegative");
      if (lv.x + lv.y < 1) throw PatternError("empty level in pattern");
      p_ += lv.x;
      q_ += lv.y;
    }
  }

  LevelPattern(std::vector<Level> levels, const Signature& sig) : LevelPattern(std::move(levels)) {
    if (p_ != sig.p || q_ != sig.q)
      throw PatternError("pattern sums (" + std::to_string(p_) + "," + std::to_string(q_) +
                         ") do not match signature (" + std::to_string(sig.p) + "," +
                         std::to_string(sig.q) + ")");
  }

  /// Parses "x|y>x|y>..."; whitespace around tokens is ignored.
  static LevelPattern parse(std::string_view text);

  const std::vector<Level>& levels() const noexcept { return levels_; }
  std::size_t size() const noexcept { return levels_.size(); }
  const Level& operator[](std::size_t k) const { return levels_[k]; }
  int p() const noexcept { return p_; }
  int q() const noexcept { return q_; }
  Signature signature() const { return {p_, q_}; }

  /// Canonical interchange form, e.g. "1|0>3|5>1|0".
  std::string to_string() const {
    std::string out;
    for (std::size_t k = 0; k < levels_.size(); ++k) {
      if (k) out += '>';
      out += std::to_string(levels_[k].x) + '|' + std::to_string(levels_[k].y);
    }
    return out;
  }

  /// Human form with spaces, e.g. "1|0 > 3|5 > 1|0".
  std::string pretty() const {
    std::string out;
    for (std::size_t k = 0; k < levels_.size(); ++k) {
      if (k) out += " > ";
      out += std::to_string(levels_[k].x) + '|' + std::to_string(levels_[k].y);
    }
    return out;
  }

  // Lexicographic on the flattened sequence x_1,y_1,x_2,y_2,...
  friend auto operator<=>(const LevelPattern& a, const LevelPattern& b) { return a.levels_ <=> b.levels_; }
  friend bool operator==(const LevelPattern& a, const LevelPattern& b) { return a.levels_ == b.levels_; }

 private:
  std::vector<Level> levels_;
  int p_ = 0;
  int q_ = 0;
};

namespace detail {

inline std::string_view trim(std::string_view s) {
  const auto ws = [](char c) { return c == ' ' || c == '\t'; };
  while (!s.empty() && ws(s.front())) s.remove_prefix(1);
  while (!s.empty() && ws(s.back())) s.remove_suffix(1);
  return s;
}

inline int parse_count(std::string_view s, std::string_view whole) {
  s = trim(s);
  if (s.empty() || s.size() > 6 || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; }))
    throw PatternError("malformed level count '" + std::string(s) + "' in pattern '" + std::string(whole) + "'");
  return std::stoi(std::string(s));
}

}  // namespace detail

inline LevelPattern LevelPattern::parse(std::string_view text) {
  std::vector<Level> levels;
  std::string_view rest = text;
  while (true) {
    const auto gt = rest.find('>');
    const auto token = rest.substr(0, gt);
    const auto bar = token.find('|');
    if (bar == std::string_view::npos)
      throw PatternError("level '" + std::string(detail::trim(token)) + "' is not of the form x|y");
    levels.push_back({detail::parse_count(token.substr(0, bar), text),
                      detail::parse_count(token.substr(bar + 1), text)});
    if (gt == std::string_view::npos) break;
    rest = rest.substr(gt + 1);
  }
  if (levels.empty()) throw PatternError("empty pattern");
  return LevelPattern(std::move(levels));
}

/// Level pattern of a dominant lambda. Invariant under lambda + c(1,...,1)
/// and any strictly increasing relabelling of the values.
inline LevelPattern canonicalize(const Lambda& lambda) {
  if (auto v = dominance_violation(lambda)) throw DominanceError(*v);
  std::vector<std::int64_t> values = lambda.coords;
  std::sort(values.begin(), values.end(), std::greater<>());
  values.erase(std::unique(values.begin(), values.end()), values.end());

  std::vector<Level> levels(values.size());
  const auto level_of = [&](std::int64_t v) {
    return static_cast<std::size_t>(
        std::lower_bound(values.begin(), values.end(), v, std::greater<>()) - values.begin());
  };
  for (int i = 1; i <= lambda.sig.rank(); ++i) {
    auto& lv = levels[level_of(lambda[i])];
    (lambda.sig.in_first_block(i) ? lv.x : lv.y) += 1;
  }
  return LevelPattern(std::move(levels), lambda.sig);
}

/// Integer representative: level k of r gets value r - k (k = 0-based).
inline Lambda representative(const LevelPattern& pat) {
  const auto sig = pat.signature();
  std::vector<std::int64_t> coords;
  coords.reserve(static_cast<std::size_t>(sig.rank()));
  const auto r = static_cast<std::int64_t>(pat.size());
  for (std::size_t k = 0; k < pat.size(); ++k)
    coords.insert(coords.end(), static_cast<std::size_t>(pat[k].x), r - static_cast<std::int64_t>(k));
  for (std::size_t k = 0; k < pat.size(); ++k)
    coords.insert(coords.end(), static_cast<std::size_t>(pat[k].y), r - static_cast<std::int64_t>(k));
  return Lambda(sig, std::move(coords));
}

struct ParabolicInvariants {
  int r_plus = 0;   // dim(u ∩ p+)
  int r_minus = 0;  // dim(u ∩ p-)
  int r_total = 0;  // dim(u ∩ p)
  bool holomorphic = false;
  bool antiholomorphic = false;
  LevelPattern levi;

  friend bool operator==(const ParabolicInvariants&, const ParabolicInvariants&) = default;
};

/// R+ = sum_{k<k'} x_k y_k',  R- = sum_{k<k'} y_k x_k'.
inline ParabolicInvariants invariants(const LevelPattern& pat) {
  ParabolicInvariants inv;
  int x_above = 0;
  int y_above = 0;
  for (const auto& lv : pat.levels()) {
    inv.r_plus += x_above * lv.y;
    inv.r_minus += y_above * lv.x;
    x_above += lv.x;
    y_above += lv.y;
  }
  inv.r_total = inv.r_plus + inv.r_minus;
  inv.holomorphic = inv.r_minus == 0;
  inv.antiholomorphic = inv.r_plus == 0;
  inv.levi = pat;
  return inv;
}

/// dim(l ∩ p) = sum_k x_k y_k.
inline int levi_noncompact_dimension(const LevelPattern& pat) {
  int d = 0;
  for (const auto& lv : pat.levels()) d += lv.x * lv.y;
  return d;
}

enum class Family { row1, row2 };

inline std::string to_string(Family f) { return f == Family::row1 ? "row1" : "row2"; }

inline Family parse_family(std::string_view s) {
  if (s == "row1") return Family::row1;
  if (s == "row2") return Family::row2;
  throw PairError("unknown pair family '" + std::string(s) + "' (expected row1 or row2)");
}

/// row1: lambda = e_1 - e_p, pattern ((1,0),(p-2,q),(1,0)).
/// row2: lambda = e_{p+1} - e_{p+q}, pattern ((0,1),(p,q-2),(0,1)).
inline LevelPattern distinguished_class(const Signature& sig, Family which) {
  if (which == Family::row1) {
    if (sig.p < 2) throw PairError("row1 distinguished class needs p >= 2");
    return LevelPattern({{1, 0}, {sig.p - 2, sig.q}, {1, 0}}, sig);
  }
  if (sig.q < 2) throw PairError("row2 distinguished class needs q >= 2");
  return LevelPattern({{0, 1}, {sig.p, sig.q - 2}, {0, 1}}, sig);
}

/// Identifies u ∩ p: for each first-block coordinate (in order), the number of
/// second-block coordinates strictly below it and strictly above it. Two
/// patterns with the same key give the same u ∩ p+ and u ∩ p-, hence
/// isomorphic A_q modules.
using NilradicalKey = std::vector<std::pair<int, int>>;

inline NilradicalKey nilradical_key(const LevelPattern& pat) {
  NilradicalKey key;
  key.reserve(static_cast<std::size_t>(pat.p()));
  int y_above = 0;
  for (const auto& lv : pat.levels()) {
    const int below = pat.q() - y_above - lv.y;
    key.insert(key.end(), static_cast<std::size_t>(lv.x), {below, y_above});
    y_above += lv.y;
  }
  return key;
}

}  // namespace thetaq
