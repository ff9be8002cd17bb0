// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. All checks are exact integer comparisons.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "thetaq/cli.hpp"

namespace {

using namespace thetaq;

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

// Every JSON report produced by the verify runs, for criterion 10.
std::vector<Json> g_reports;

struct VerifyRun {
  int exit_code;
  Json report;
};

VerifyRun cli_verify(int p, int q, const char* family, std::vector<std::string> extra = {}) {
  std::vector<std::string> args{"thetaq", "verify", "--p", std::to_string(p), "--q", std::to_string(q),
                                "--pair", family, "--k", "1", "--format", "json"};
  args.insert(args.end(), extra.begin(), extra.end());
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  Json rep = code == cli::kUsage || code == cli::kBudget ? Json() : Json::parse(out.str());
  if (!rep.is_null()) g_reports.push_back(rep);
  return {code, rep};
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string cell(int p, int q) { return "(" + std::to_string(p) + "," + std::to_string(q) + ")"; }

// Criteria 1 and 2: singleton Q\D equal to the distinguished class.
Outcome singleton_reproduction(Family fam, const std::vector<std::pair<int, int>>& cells, double limit_s) {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  for (const auto& [p, q] : cells) {
    const auto run = cli_verify(p, q, to_string(fam).c_str());
    const auto expected = distinguished_class(Signature(p, q), fam).to_string();
    const int expected_r = fam == Family::row1 ? q : p;
    if (run.exit_code != 0) {
      std::string got;
      if (!run.report.is_null())
        for (const auto& grp : run.report["q_minus_d_classes"]) got += " " + grp[0].get<std::string>();
      o.fail(cell(p, q) + ": verify exit " + std::to_string(run.exit_code) + ", Q\\D classes:" + got);
      continue;
    }
    const auto& qmd = run.report["q_minus_d"];
    if (qmd.size() != 1 || qmd[0]["pattern"] != expected)
      o.fail(cell(p, q) + ": Q\\D patterns " + qmd.dump());
    else if (qmd[0]["r_plus"] != expected_r || qmd[0]["r_minus"] != expected_r)
      o.fail(cell(p, q) + ": R+/R- of surviving class differ from " + std::to_string(expected_r));
  }
  const double secs = seconds_since(t0);
  if (secs > limit_s) o.fail("took " + std::to_string(secs) + " s");
  if (o.pass) o.detail = std::to_string(cells.size()) + " cells, " + std::to_string(secs) + " s";
  return o;
}

Outcome criterion3() {
  Outcome o;
  for (const auto& [p, q] : std::vector<std::pair<int, int>>{{5, 6}, {6, 7}}) {
    const auto run = cli_verify(p, q, "row2", {"--expect-count", "3"});
    const auto expected = distinguished_class(Signature(p, q), Family::row2).to_string();
    if (run.exit_code != 0) {
      o.fail(cell(p, q) + ": |Q\\D| != 3");
      continue;
    }
    bool found = false;
    for (const auto& grp : run.report["q_minus_d_classes"])
      for (const auto& member : grp) found |= member == expected;
    if (!found) o.fail(cell(p, q) + ": distinguished class missing from Q\\D");
  }
  if (o.pass) o.detail = "|Q\\D| = 3 at (5,6) and (6,7), distinguished class present";
  return o;
}

Outcome criterion4() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  for (auto fam : {Family::row1, Family::row2}) {
    const auto run = cli_verify(2, 2, to_string(fam).c_str());
    const auto expected = distinguished_class(Signature(2, 2), fam).to_string();
    if (run.exit_code != 0 || run.report["singleton"] != true || run.report["expected"] != expected)
      o.fail(to_string(fam) + ": not the distinguished singleton");
  }
  const double secs = seconds_since(t0);
  if (secs > 1.0) o.fail("took " + std::to_string(secs) + " s");
  if (o.pass) o.detail = "su(2,2) both rows singleton, " + std::to_string(secs) + " s";
  return o;
}

template <class Fn>
void for_each_small_pattern(int max_rank, Fn&& fn) {
  for (int p = 1; p < max_rank; ++p)
    for (int q = 1; p + q <= max_rank; ++q)
      for (const auto& pt : enumerate_all(Signature(p, q))) fn(pt);
}

Outcome criterion5() {
  Outcome o;
  std::size_t n = 0, bad = 0;
  for_each_small_pattern(8, [&](const LevelPattern& pt) {
    const auto inv = invariants(pt);
    const auto [plus, minus] = oracle::count_noncompact_pairs(representative(pt).coords, pt.p());
    if (inv.r_plus != plus || inv.r_minus != minus) ++bad;
    ++n;
  });
  if (bad) o.fail(std::to_string(bad) + " mismatches");
  o.detail = std::to_string(n) + " patterns, " + std::to_string(bad) + " mismatches";
  return o;
}

Outcome criterion6() {
  Outcome o;
  std::size_t n = 0, bad = 0;
  for_each_small_pattern(8, [&](const LevelPattern& pt) {
    const auto sig = pt.signature();
    for (auto fam : {Family::row1, Family::row2}) {
      const SymmetricPair pair{fam, 1};
      if (pair_violation(pair, sig)) continue;
      const bool dec = is_discretely_decomposable(pt, pair, sig);
      if (dec == non_decomposability_witness(pt, pair, sig).has_value()) ++bad;
      ++n;
    }
  });
  if (bad) o.fail(std::to_string(bad) + " mismatches");
  o.detail = std::to_string(n) + " (pattern, family) cases, " + std::to_string(bad) + " mismatches";
  return o;
}

std::size_t inequality_violations(const LevelPattern& pt, std::size_t& cases) {
  std::size_t bad = 0;
  for (std::size_t s = 0; s < pt.size(); ++s)
    for (auto block : {Block::first, Block::second}) {
      if ((block == Block::first ? pt[s].x : pt[s].y) == 0) continue;
      ++cases;
      if (!check_proof_inequalities(pt, block_profile(pt, s, block))) ++bad;
    }
  return bad;
}

Outcome criterion7() {
  Outcome o;
  std::size_t cases = 0, bad = 0;
  for_each_small_pattern(8, [&](const LevelPattern& pt) { bad += inequality_violations(pt, cases); });
  const std::size_t exhaustive = cases;
  std::mt19937_64 rng(20240601);
  std::size_t random_cases = 0;
  for (int trial = 0; trial < 100000; ++trial) {
    const int p = 1 + static_cast<int>(rng() % 13);
    const int q = 1 + static_cast<int>(rng() % static_cast<unsigned>(14 - p));
    std::size_t c = 0;
    const auto pt = oracle::random_pattern(p, q, rng);
    const Block block = rng() % 2 ? Block::first : Block::second;
    std::vector<std::size_t> levels;
    for (std::size_t s = 0; s < pt.size(); ++s)
      if ((block == Block::first ? pt[s].x : pt[s].y) > 0) levels.push_back(s);
    const auto s = levels[rng() % levels.size()];
    ++c;
    if (!check_proof_inequalities(pt, block_profile(pt, s, block))) ++bad;
    random_cases += c;
  }
  if (bad) o.fail(std::to_string(bad) + " violations");
  o.detail = std::to_string(exhaustive) + " exhaustive + " + std::to_string(random_cases) + " random cases, " +
             std::to_string(bad) + " violations";
  return o;
}

Outcome criterion8() {
  Outcome o;
  for (int p = 1; p < 9; ++p)
    for (int q = 1; p + q <= 9; ++q) {
      const auto poly = hodge_polynomial(LevelPattern({{p, q}}));
      if (poly.total() != oracle::binomial(p + q, p)) o.fail("total at " + cell(p, q));
      if (!poly.is_palindromic()) o.fail("palindrome at " + cell(p, q));
      if (poly.top_total_degree() != 2 * p * q) o.fail("top degree at " + cell(p, q));
    }
  for (int n = 0; n <= 10; ++n)
    for (int k = 0; k <= n; ++k) {
      const auto c = gaussian_binomial(n, k);
      for (int m = 0; m <= k * (n - k); ++m)
        if (c[static_cast<std::size_t>(m)] != oracle::partitions_in_box(k, n - k, m))
          o.fail("gaussian [" + std::to_string(n) + "," + std::to_string(k) + "] degree " + std::to_string(m));
    }
  if (o.pass) o.detail = "lambda=0 for p+q<=9; q-binomials n<=10";
  return o;
}

Outcome criterion9() {
  Outcome o;
  if (count_patterns(1, 1) != 3) o.fail("count(1,1)");
  if (count_patterns(2, 1) != 8) o.fail("count(2,1)");
  for (int p = 1; p < 9; ++p)
    for (int q = 1; p + q <= 9; ++q) {
      std::uint64_t n = 0;
      PatternCursor cur(Signature(p, q));
      while (cur.next()) ++n;
      if (n != count_patterns(p, q)) o.fail("materialized count at " + cell(p, q));
    }
  for (int p = 0; p <= 12; ++p)
    for (int q = 0; p + q <= 12; ++q)
      if (count_patterns(p, q) != count_patterns(q, p)) o.fail("asymmetry at " + cell(p, q));
  if (o.pass) o.detail = "count(1,1)=3, count(2,1)=8, materialized p+q<=9, symmetric p+q<=12";
  return o;
}

Outcome criterion10() {
  Outcome o;
  std::size_t members = 0;
  for (const auto& rep : g_reports) {
    const int p = rep["signature"]["p"], q = rep["signature"]["q"];
    const auto trivial = LevelPattern({{p, q}}).to_string();
    for (const auto& e : rep["Q"]) {
      ++members;
      if (e["r_plus"] != e["r_minus"]) o.fail("R+ != R- in Q at " + cell(p, q));
    }
    for (const auto& e : rep["q_minus_d"]) {
      if (e["holomorphic"] == true || e["antiholomorphic"] == true) o.fail("(anti-)holomorphic in Q\\D at " + cell(p, q));
      if (e["pattern"] == trivial) o.fail("trivial class in Q\\D at " + cell(p, q));
    }
  }
  if (g_reports.empty()) o.fail("no verify reports collected");
  if (o.pass) o.detail = std::to_string(g_reports.size()) + " reports, " + std::to_string(members) + " Q members";
  return o;
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    std::function<Outcome()> run;
  };
  const std::vector<Criterion> criteria{
      {1, "row1 k=1 singleton reproduction",
       [] { return singleton_reproduction(Family::row1, {{5, 5}, {5, 6}, {5, 7}, {5, 8}, {6, 6}, {6, 7}}, 60.0); }},
      {2, "row2 k=1 singleton reproduction",
       [] { return singleton_reproduction(Family::row2, {{5, 5}, {5, 7}, {6, 6}, {6, 8}}, 120.0); }},
      {3, "row2 q=p+1 exception |Q\\D|=3", criterion3},
      {4, "su(2,2) both rows", criterion4},
      {5, "R+/R- formula vs pair counting", criterion5},
      {6, "table condition vs witness equivalence", criterion6},
      {7, "block-profile inequalities", criterion7},
      {8, "cohomology totals and q-binomial oracle", criterion8},
      {9, "pattern counts", criterion9},
      {10, "Q / Q\\D filter consistency", criterion10},
  };

  int failed = 0;
  for (const auto& c : criteria) {
    const auto o = c.run();
    std::cout << (o.pass ? "[PASS] " : "[FAIL] ") << "criterion " << c.id << " (" << c.name << "): " << o.detail
              << std::endl;
    failed += o.pass ? 0 : 1;
  }
  std::cout << (failed ? std::to_string(failed) + " criterion(s) failed" : std::string("all criteria passed"))
            << std::endl;
  return failed ? 1 : 0;
}
