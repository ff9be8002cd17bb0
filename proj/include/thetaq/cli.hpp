#pragma once

// Command-line front end: analyze, verify, scan, count.
//
// Exit codes: 0 pass, 1 theorem mismatch, 2 usage / invalid input,
// 3 node budget exhausted.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "thetaq/report.hpp"

namespace thetaq::cli {

enum ExitCode : int { kPass = 0, kMismatch = 1, kUsage = 2, kBudget = 3 };

inline constexpr std::uint64_t kDefaultBudget = 100'000'000;
inline constexpr const char* kBudgetEnv = "THETA_CYCLE_BUDGET";

namespace detail {

struct UsageError : Error {
  using Error::Error;
};

inline std::vector<std::int64_t> parse_lambda(const std::string& text) {
  std::vector<std::int64_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    try {
      out.push_back(std::stoll(item, &used));
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || item.find_first_not_of(" \t", used) != std::string::npos)
      throw UsageError("malformed lambda coordinate '" + item + "'");
  }
  return out;
}

inline std::pair<int, int> parse_range(const std::string& text) {
  const auto dots = text.find("..");
  try {
    if (dots == std::string::npos) {
      const int v = std::stoi(text);
      return {v, v};
    }
    return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
  } catch (const std::exception&) {
    throw UsageError("malformed range '" + text + "' (expected A..B)");
  }
}

inline std::uint64_t resolve_budget(std::optional<std::uint64_t> flag) {
  if (flag) return *flag;
  if (const char* env = std::getenv(kBudgetEnv); env && *env) {
    std::size_t used = 0;
    std::uint64_t v = 0;
    try {
      v = std::stoull(env, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || env[used] != '\0') throw UsageError(std::string(kBudgetEnv) + " is not a node count: " + env);
    return v;
  }
  return kDefaultBudget;
}

inline Granularity parse_granularity(const std::string& s) {
  if (s == "pattern") return Granularity::pattern;
  if (s == "aq" || s == "aq_class") return Granularity::aq_class;
  throw UsageError("unknown granularity '" + s + "' (expected pattern or aq)");
}

class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) : os_(&fallback) {
    if (!path.empty() && path != "-") {
      file_.open(path);
      if (!file_) throw UsageError("cannot open " + path + " for writing");
      os_ = &file_;
    }
  }
  std::ostream& get() { return *os_; }

 private:
  std::ofstream file_;
  std::ostream* os_;
};

inline std::string yes_no(bool b) { return b ? "yes" : "no"; }

inline void print_analysis(std::ostream& os, const Analysis& a) {
  const auto sig = a.pattern.signature();
  os << "signature   su(" << sig.p << "," << sig.q << ")\n";
  os << "pattern     " << a.pattern.pretty() << "\n";
  if (a.lambda) {
    os << "lambda      ";
    for (std::size_t i = 0; i < a.lambda->coords.size(); ++i) os << (i ? "," : "") << a.lambda->coords[i];
    os << "\n";
  }
  os << "R+ = " << a.inv.r_plus << "   R- = " << a.inv.r_minus << "   R = " << a.inv.r_total << "\n";
  os << "holomorphic: " << yes_no(a.inv.holomorphic) << "   anti-holomorphic: " << yes_no(a.inv.antiholomorphic)
     << "\n";
  os << "levi        ";
  for (std::size_t k = 0; k < a.pattern.size(); ++k)
    os << (k ? " + " : "") << "u(" << a.pattern[k].x << "," << a.pattern[k].y << ")";
  os << "\n";
  os << "hodge       shift (" << a.hodge.shift_plus << "," << a.hodge.shift_minus << ")  diag (";
  for (std::size_t m = 0; m < a.hodge.diag.size(); ++m) os << (m ? "," : "") << a.hodge.diag[m];
  os << ")  total " << a.hodge.total() << "  top degree " << a.hodge.top_total_degree() << "\n";
  for (const auto& v : a.verdicts) {
    os << to_string(v.pair.family) << "-k" << v.pair.k << "     "
       << (v.decomposable ? "decomposable" : "not decomposable");
    if (v.witness_s) os << " (witness s=" << *v.witness_s << ")";
    os << "\n";
  }
}

inline void print_report(std::ostream& os, const VerificationReport& rep) {
  os << "su(" << rep.signature.p << "," << rep.signature.q << ")  pair " << to_string(rep.pair.family)
     << " k=" << rep.pair.k << "  t=" << rep.t << "  granularity=" << to_string(rep.granularity) << "\n";
  os << "|Q| = " << rep.q_set.size() << "   |D∩Q| = " << rep.d_cap_q.size() << "   |Q\\D| = " << rep.class_count()
     << " class(es), " << rep.q_minus_d.size() << " pattern(s)   nodes " << rep.nodes_visited << "\n";
  os << "Q:\n";
  for (const auto& e : rep.q_set) {
    os << "  " << std::left << std::setw(28) << e.pattern.pretty() << std::right << " R+=" << std::setw(3)
       << e.inv.r_plus << " R-=" << std::setw(3) << e.inv.r_minus << "  " << (e.decomposable ? "D" : "-");
    if (e.witness_s) os << "  s=" << *e.witness_s;
    os << "\n";
  }
  os << "Q\\D:\n";
  for (const auto& grp : rep.q_minus_d_classes) {
    os << "  " << grp.front().pretty();
    for (std::size_t i = 1; i < grp.size(); ++i) os << "  ~  " << grp[i].pretty();
    os << "\n";
  }
  os << "expected: " << (rep.expected ? rep.expected->pretty() : std::string("(none)"))
     << "   singleton: " << yes_no(rep.singleton) << "   matches: " << yes_no(rep.matches_expected) << "\n";
  if (!rep.within_hypothesis)
    os << "note: this configuration is outside the theorem's hypothesis; the verdict is informational\n";
}

}  // namespace detail

inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  CLI::App app{"Enumerate theta-stable parabolic subalgebras of su(p,q) and check Q\\D claims", "thetaq"};
  app.require_subcommand(1);

  int p = 0, q = 0, k = 1;
  std::string lambda_text, pattern_text, format = "text", out_path, json_path, family_text = "row1";
  std::string granularity_text = "aq", p_range, q_range;
  std::optional<std::uint64_t> budget;
  std::optional<std::size_t> expect_count;
  unsigned threads = 0;
  bool q_ge_p = false, progress = false;

  auto* analyze_cmd = app.add_subcommand("analyze", "Invariants, Hodge polynomial and decomposability of one class");
  analyze_cmd->add_option("--p", p, "first block size")->required();
  analyze_cmd->add_option("--q", q, "second block size")->required();
  auto* lam_opt = analyze_cmd->add_option("--lambda", lambda_text, "dominant coordinates a_1,...,a_{p+q}");
  auto* pat_opt = analyze_cmd->add_option("--pattern", pattern_text, "level pattern x|y>x|y>...");
  lam_opt->excludes(pat_opt);
  analyze_cmd->add_option("--k", k, "pair parameter for the verdicts");
  analyze_cmd->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
  analyze_cmd->add_option("--out", out_path, "write to file instead of stdout");

  auto* verify_cmd = app.add_subcommand("verify", "Compute Q, D∩Q and Q\\D for one signature and pair");
  verify_cmd->add_option("--p", p)->required();
  verify_cmd->add_option("--q", q)->required();
  verify_cmd->add_option("--pair", family_text, "row1 or row2")->required();
  verify_cmd->add_option("--k", k, "pair parameter");
  verify_cmd->add_option("--json", json_path, "also write the JSON report to this path ('-' = stdout only)");
  verify_cmd->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));
  verify_cmd->add_option("--out", out_path, "write to file instead of stdout");
  verify_cmd->add_option("--budget", budget, "node budget (overrides THETA_CYCLE_BUDGET)");
  verify_cmd->add_option("--expect-count", expect_count, "pass iff |Q\\D| equals this");
  verify_cmd->add_option("--granularity", granularity_text, "pattern or aq (merge isomorphic A_q)");
  verify_cmd->add_option("--threads", threads, "worker threads (0 = hardware)");
  verify_cmd->add_flag("--progress", progress, "report visited nodes on stderr");

  auto* scan_cmd = app.add_subcommand("scan", "Verify every (p,q) cell of a range");
  scan_cmd->add_option("--p-range", p_range, "A..B")->required();
  scan_cmd->add_option("--q-range", q_range, "C..D")->required();
  scan_cmd->add_option("--pair", family_text, "row1 or row2")->required();
  scan_cmd->add_option("--k", k, "pair parameter");
  scan_cmd->add_flag("--q-ge-p", q_ge_p, "skip cells with q < p");
  scan_cmd->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
  scan_cmd->add_option("--out", out_path, "write to file instead of stdout");
  scan_cmd->add_option("--budget", budget, "node budget per cell");
  scan_cmd->add_option("--granularity", granularity_text, "pattern or aq");
  scan_cmd->add_option("--threads", threads, "worker threads (0 = hardware)");

  auto* count_cmd = app.add_subcommand("count", "Number of level patterns of su(p,q)");
  count_cmd->add_option("--p", p)->required();
  count_cmd->add_option("--q", q)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kPass : kUsage;
  }

  try {
    if (analyze_cmd->parsed()) {
      const Signature sig(p, q);
      std::optional<Lambda> lambda;
      LevelPattern pat;
      if (!lambda_text.empty()) {
        lambda.emplace(sig, detail::parse_lambda(lambda_text));
        pat = canonicalize(*lambda);
      } else if (!pattern_text.empty()) {
        pat = LevelPattern(LevelPattern::parse(pattern_text).levels(), sig);
      } else {
        throw detail::UsageError("analyze needs --lambda or --pattern");
      }
      const auto a = analyze(pat, lambda, k);
      detail::Sink sink(out_path, out);
      if (format == "json")
        sink.get() << to_json(a).dump(2) << "\n";
      else
        detail::print_analysis(sink.get(), a);
      return kPass;
    }

    if (verify_cmd->parsed()) {
      const Signature sig(p, q);
      const SymmetricPair pair{parse_family(family_text), k};
      VerifyOptions opts;
      opts.granularity = detail::parse_granularity(granularity_text);
      opts.search.budget = detail::resolve_budget(budget);
      opts.search.threads = threads;
      if (progress) opts.search.progress = [&err](std::uint64_t n) { err << "visited " << n << " nodes\n"; };
      const auto rep = verify_theorem(sig, pair, opts);
      const auto json = to_json(rep).dump(2);
      detail::Sink sink(out_path, out);
      if (format == "json" || json_path == "-") {
        sink.get() << json << "\n";
      } else {
        detail::print_report(sink.get(), rep);
      }
      if (!json_path.empty() && json_path != "-") {
        detail::Sink file(json_path, out);
        file.get() << json << "\n";
      }
      const bool pass = expect_count ? rep.class_count() == *expect_count : rep.matches_expected;
      return pass ? kPass : kMismatch;
    }

    if (scan_cmd->parsed()) {
      const auto [p_lo, p_hi] = detail::parse_range(p_range);
      const auto [q_lo, q_hi] = detail::parse_range(q_range);
      const SymmetricPair pair{parse_family(family_text), k};
      VerifyOptions opts;
      opts.granularity = detail::parse_granularity(granularity_text);
      opts.search.budget = detail::resolve_budget(budget);
      opts.search.threads = threads;
      if (format == "text") format = "csv";
      std::vector<ScanRow> rows;
      for (int pp = p_lo; pp <= p_hi; ++pp)
        for (int qq = q_lo; qq <= q_hi; ++qq)
          if (!q_ge_p || qq >= pp) rows.push_back(scan_cell(pp, qq, pair, opts));
      detail::Sink sink(out_path, out);
      if (format == "json") {
        Json arr = Json::array();
        for (const auto& r : rows) arr.push_back(to_json(r));
        sink.get() << arr.dump(2) << "\n";
      } else {
        sink.get() << scan_csv_header() << "\n";
        for (const auto& r : rows) sink.get() << to_csv(r) << "\n";
      }
      return kPass;
    }

    if (count_cmd->parsed()) {
      const Signature sig(p, q);
      out << count_patterns(sig) << "\n";
      return kPass;
    }
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kBudget;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}

}  // namespace thetaq::cli
