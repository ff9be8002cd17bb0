#pragma once

// Enumeration of level patterns for a signature, either exhaustively (lazy
// cursor) or restricted to Q = {R+ = R- <= t} by branch-and-bound.

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <functional>
#include <future>
#include <iterator>
#include <optional>
#include <thread>
#include <vector>

#include "thetaq/error.hpp"
#include "thetaq/parabolic.hpp"
#include "thetaq/root_system.hpp"

namespace thetaq {

/// Number of level patterns with column sums (p,q); C(0,0) = 1.
/// Throws OverflowError instead of wrapping.
inline std::uint64_t count_patterns(int p, int q) {
  if (p < 0 || q < 0) throw Error("count_patterns needs p, q >= 0");
  const auto w = static_cast<std::size_t>(q + 1);
  std::vector<std::uint64_t> c(static_cast<std::size_t>(p + 1) * w, 0);
  const auto at = [&](int a, int b) -> std::uint64_t& { return c[static_cast<std::size_t>(a) * w + static_cast<std::size_t>(b)]; };
  at(0, 0) = 1;
  for (int a = 0; a <= p; ++a) {
    for (int b = 0; b <= q; ++b) {
      if (a == 0 && b == 0) continue;
      std::uint64_t sum = 0;
      for (int x = 0; x <= a; ++x)
        for (int y = 0; y <= b; ++y) {
          if (x == 0 && y == 0) continue;
          if (__builtin_add_overflow(sum, at(a - x, b - y), &sum))
            throw OverflowError("pattern count for (" + std::to_string(p) + "," + std::to_string(q) +
                                ") exceeds 64 bits");
        }
      at(a, b) = sum;
    }
  }
  return at(p, q);
}

inline std::uint64_t count_patterns(const Signature& sig) { return count_patterns(sig.p, sig.q); }

/// Lazily walks every level pattern of (p,q) once, in lexicographic order of
/// the flattened sequence x_1,y_1,x_2,y_2,...
class PatternCursor {
 public:
  explicit PatternCursor(const Signature& sig) : sig_(sig) {}

  std::optional<LevelPattern> next() {
    if (done_) return std::nullopt;
    if (!started_) {
      started_ = true;
      fill_minimal(0, 0);
    } else if (!advance()) {
      done_ = true;
      return std::nullopt;
    }
    return LevelPattern(levels_);
  }

 private:
  // Appends the lexicographically smallest completion given used totals.
  void fill_minimal(int used_x, int used_y) {
    for (int y = used_y; y < sig_.q; ++y) levels_.push_back({0, 1});
    for (int x = used_x; x < sig_.p; ++x) levels_.push_back({1, 0});
  }

  bool advance() {
    int used_x = sig_.p;
    int used_y = sig_.q;
    while (!levels_.empty()) {
      const Level last = levels_.back();
      levels_.pop_back();
      used_x -= last.x;
      used_y -= last.y;
      const int room_x = sig_.p - used_x;
      const int room_y = sig_.q - used_y;
      Level bumped = last;
      if (last.y < room_y) {
        bumped.y += 1;
      } else if (last.x < room_x) {
        bumped = {last.x + 1, 0};
      } else {
        continue;
      }
      levels_.push_back(bumped);
      fill_minimal(used_x + bumped.x, used_y + bumped.y);
      return true;
    }
    return false;
  }

  Signature sig_;
  std::vector<Level> levels_;
  bool started_ = false;
  bool done_ = false;
};

/// Input range over PatternCursor for range-for loops.
class PatternRange {
 public:
  explicit PatternRange(const Signature& sig) : sig_(sig) {}

  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = LevelPattern;
    using difference_type = std::ptrdiff_t;
    using pointer = const LevelPattern*;
    using reference = const LevelPattern&;

    iterator() = default;
    explicit iterator(const Signature& sig) : cursor_(sig) { current_ = cursor_->next(); }

    reference operator*() const { return *current_; }
    pointer operator->() const { return &*current_; }
    iterator& operator++() {
      current_ = cursor_->next();
      return *this;
    }
    void operator++(int) { ++*this; }
    friend bool operator==(const iterator& it, std::default_sentinel_t) { return !it.current_; }

   private:
    std::optional<PatternCursor> cursor_;
    std::optional<LevelPattern> current_;
  };

  iterator begin() const { return iterator(sig_); }
  std::default_sentinel_t end() const { return {}; }

 private:
  Signature sig_;
};

inline PatternRange enumerate_all(const Signature& sig) { return PatternRange(sig); }

struct SearchOptions {
  std::uint64_t budget = 100'000'000;
  /// 0 selects std::thread::hardware_concurrency().
  unsigned threads = 0;
  /// Called with the running node total roughly every progress_interval
  /// nodes, possibly from worker threads concurrently.
  std::function<void(std::uint64_t)> progress;
  std::uint64_t progress_interval = 1u << 20;
};

struct SearchStats {
  std::uint64_t nodes = 0;
};

struct QMember {
  LevelPattern pattern;
  ParabolicInvariants inv;
};

namespace detail {

class QSearch {
 public:
  QSearch(const Signature& sig, int t, const SearchOptions& opts, std::atomic<std::uint64_t>& nodes,
          std::atomic<bool>& aborted)
      : sig_(sig), t_(t), opts_(opts), nodes_(nodes), aborted_(aborted) {}

  // Prefix totals: (used_x, used_y) placed, partial R+/R-.
  void run(std::vector<Level>& prefix, int used_x, int used_y, int rp, int rm) {
    if (!visit()) return;
    const int rem_x = sig_.p - used_x;
    const int rem_y = sig_.q - used_y;
    // Every placed first-block coordinate lies above every remaining
    // second-block one, and vice versa, so these are lower bounds.
    const int min_rp = rp + used_x * rem_y;
    const int min_rm = rm + used_y * rem_x;
    if (min_rp > t_ || min_rm > t_) return;
    const int slack = rem_x * rem_y;
    if (min_rp > min_rm + slack || min_rm > min_rp + slack) return;
    if (rem_x == 0 && rem_y == 0) {
      if (rp == rm) {
        LevelPattern pat(prefix);
        auto inv = invariants(pat);
        found_.push_back({std::move(pat), std::move(inv)});
      }
      return;
    }
    for (int x = 0; x <= rem_x; ++x) {
      for (int y = 0; y <= rem_y; ++y) {
        if (x == 0 && y == 0) continue;
        prefix.push_back({x, y});
        run(prefix, used_x + x, used_y + y, rp + used_x * y, rm + used_y * x);
        prefix.pop_back();
        if (aborted_.load(std::memory_order_relaxed)) return;
      }
    }
  }

  void flush() {
    if (pending_) nodes_.fetch_add(pending_, std::memory_order_relaxed);
    pending_ = 0;
  }

  std::vector<QMember>& found() { return found_; }

 private:
  bool visit() {
    if (++pending_ < kBatch) return !aborted_.load(std::memory_order_relaxed);
    const auto before = nodes_.fetch_add(pending_, std::memory_order_relaxed);
    const auto after = before + pending_;
    pending_ = 0;
    if (after > opts_.budget) aborted_.store(true);
    if (opts_.progress && after / opts_.progress_interval != before / opts_.progress_interval)
      opts_.progress(after);
    return !aborted_.load(std::memory_order_relaxed);
  }

  static constexpr std::uint64_t kBatch = 4096;

  Signature sig_;
  int t_;
  const SearchOptions& opts_;
  std::atomic<std::uint64_t>& nodes_;
  std::atomic<bool>& aborted_;
  std::uint64_t pending_ = 0;
  std::vector<QMember> found_;
};

}  // namespace detail

/// All classes with R+ = R- <= t, in lexicographic pattern order.
///
/// The tree is sharded by first-level choice; shards run on a worker pool and
/// are concatenated in shard order, so the result does not depend on the
/// thread count. Throws BudgetExceeded once more than opts.budget nodes have
/// been visited.
inline std::vector<QMember> enumerate_Q(const Signature& sig, int t, const SearchOptions& opts = {},
                                        SearchStats* stats = nullptr) {
  if (t < 0) throw Error("enumerate_Q needs t >= 0");
  std::vector<Level> shards;
  for (int x = 0; x <= sig.p; ++x)
    for (int y = 0; y <= sig.q; ++y)
      if (x + y > 0) shards.push_back({x, y});

  std::atomic<std::uint64_t> nodes{1};  // the root
  std::atomic<bool> aborted{false};
  std::atomic<std::size_t> next_shard{0};
  std::vector<std::vector<QMember>> results(shards.size());

  const auto worker = [&] {
    for (std::size_t i = next_shard++; i < shards.size() && !aborted.load(); i = next_shard++) {
      detail::QSearch search(sig, t, opts, nodes, aborted);
      std::vector<Level> prefix{shards[i]};
      search.run(prefix, shards[i].x, shards[i].y, 0, 0);
      search.flush();
      results[i] = std::move(search.found());
    }
  };

  unsigned threads = opts.threads ? opts.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(shards.size()));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::future<void>> pool;
    for (unsigned w = 0; w < threads; ++w) pool.push_back(std::async(std::launch::async, worker));
    for (auto& f : pool) f.get();
  }
  if (aborted.load() || nodes.load() > opts.budget) throw BudgetExceeded(opts.budget);
  if (stats) stats->nodes = nodes.load();

  std::vector<QMember> out;
  for (auto& r : results) std::move(r.begin(), r.end(), std::back_inserter(out));
  return out;
}

}  // namespace thetaq
