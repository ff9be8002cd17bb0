#pragma once

// Machine-readable renderings (JSON, CSV) of analyses, verification reports
// and scans. JSON objects use nlohmann's default sorted-key layout and contain
// integers, booleans, strings and null only, so parse + dump is byte-stable.

#include <chrono>
#include <cstdint>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "thetaq/cohomology.hpp"
#include "thetaq/decomposability.hpp"
#include "thetaq/parabolic.hpp"
#include "thetaq/verifier.hpp"

namespace thetaq {

using Json = nlohmann::json;

inline Json big_to_json(const BigInt& v) {
  if (v <= std::numeric_limits<std::uint64_t>::max()) return v.convert_to<std::uint64_t>();
  return v.str();
}

inline Json to_json(const Signature& sig) { return {{"p", sig.p}, {"q", sig.q}}; }

inline Json to_json(const SymmetricPair& pair) { return {{"family", to_string(pair.family)}, {"k", pair.k}}; }

inline Json to_json(const QEntry& e) {
  return {{"pattern", e.pattern.to_string()},
          {"r_plus", e.inv.r_plus},
          {"r_minus", e.inv.r_minus},
          {"holomorphic", e.inv.holomorphic},
          {"antiholomorphic", e.inv.antiholomorphic},
          {"decomposable", e.decomposable},
          {"witness_s", e.witness_s ? Json(*e.witness_s) : Json(nullptr)}};
}

inline Json to_json(const PoincarePolynomial& poly) {
  Json diag = Json::array();
  for (const auto& c : poly.diag) diag.push_back(big_to_json(c));
  return {{"shift", {poly.shift_plus, poly.shift_minus}},
          {"diag", diag},
          {"total", big_to_json(poly.total())},
          {"top_total_degree", poly.top_total_degree()}};
}

inline Json to_json(const VerificationReport& rep) {
  Json q = Json::array();
  for (const auto& e : rep.q_set) q.push_back(to_json(e));
  Json qmd = Json::array();
  for (const auto& e : rep.q_minus_d) qmd.push_back(to_json(e));
  Json classes = Json::array();
  for (const auto& grp : rep.q_minus_d_classes) {
    Json members = Json::array();
    for (const auto& pat : grp) members.push_back(pat.to_string());
    classes.push_back(members);
  }
  return {{"signature", to_json(rep.signature)},
          {"pair", to_json(rep.pair)},
          {"t", rep.t},
          {"granularity", to_string(rep.granularity)},
          {"within_hypothesis", rep.within_hypothesis},
          {"Q", q},
          {"d_cap_q_count", rep.d_cap_q.size()},
          {"q_minus_d", qmd},
          {"q_minus_d_classes", classes},
          {"singleton", rep.singleton},
          {"expected", rep.expected ? Json(rep.expected->to_string()) : Json(nullptr)},
          {"matches_expected", rep.matches_expected},
          {"nodes_visited", rep.nodes_visited}};
}

/// Everything reported for one class by `analyze`.
struct Analysis {
  LevelPattern pattern;
  std::optional<Lambda> lambda;
  ParabolicInvariants inv;
  PoincarePolynomial hodge;
  struct PairVerdict {
    SymmetricPair pair;
    bool decomposable = false;
    std::optional<int> witness_s;
  };
  std::vector<PairVerdict> verdicts;
};

/// Verdicts are produced for each family whose pair with parameter k is
/// valid for the signature.
inline Analysis analyze(const LevelPattern& pat, std::optional<Lambda> lambda = std::nullopt, int k = 1) {
  Analysis a{pat, std::move(lambda), invariants(pat), hodge_polynomial(pat), {}};
  const auto sig = pat.signature();
  for (auto fam : {Family::row1, Family::row2}) {
    const SymmetricPair pair{fam, k};
    if (pair_violation(pair, sig)) continue;
    a.verdicts.push_back({pair, is_discretely_decomposable(pat, pair, sig), non_decomposability_witness(pat, pair, sig)});
  }
  return a;
}

inline Json to_json(const Analysis& a) {
  Json levi = Json::array();
  for (const auto& lv : a.pattern.levels()) levi.push_back({{"x", lv.x}, {"y", lv.y}});
  Json verdicts = Json::array();
  for (const auto& v : a.verdicts)
    verdicts.push_back({{"pair", to_json(v.pair)},
                        {"decomposable", v.decomposable},
                        {"witness_s", v.witness_s ? Json(*v.witness_s) : Json(nullptr)}});
  return {{"signature", to_json(a.pattern.signature())},
          {"pattern", a.pattern.to_string()},
          {"lambda", a.lambda ? Json(a.lambda->coords) : Json(nullptr)},
          {"r_plus", a.inv.r_plus},
          {"r_minus", a.inv.r_minus},
          {"r_total", a.inv.r_total},
          {"holomorphic", a.inv.holomorphic},
          {"antiholomorphic", a.inv.antiholomorphic},
          {"levi", levi},
          {"hodge", to_json(a.hodge)},
          {"pairs", verdicts}};
}

/// One (p,q) cell of a scan. On failure `status` carries the message and the
/// verification columns are absent.
struct ScanRow {
  int p = 0;
  int q = 0;
  std::optional<std::uint64_t> patterns;
  std::optional<int> t;
  std::optional<std::size_t> q_count;
  std::optional<std::size_t> d_cap_q_count;
  std::optional<std::size_t> q_minus_d_classes;
  std::optional<std::size_t> q_minus_d_patterns;
  std::vector<std::string> surviving;
  std::int64_t wall_ms = 0;
  std::string status = "ok";
};

inline ScanRow scan_cell(int p, int q, const SymmetricPair& pair, const VerifyOptions& opts) {
  ScanRow row;
  row.p = p;
  row.q = q;
  const auto start = std::chrono::steady_clock::now();
  try {
    const Signature sig(p, q);
    row.patterns = count_patterns(sig);
    const auto rep = verify_theorem(sig, pair, opts);
    row.t = rep.t;
    row.q_count = rep.q_set.size();
    row.d_cap_q_count = rep.d_cap_q.size();
    row.q_minus_d_classes = rep.class_count();
    row.q_minus_d_patterns = rep.q_minus_d.size();
    for (const auto& grp : rep.q_minus_d_classes) row.surviving.push_back(grp.front().to_string());
  } catch (const Error& e) {
    row.status = std::string("error: ") + e.what();
  }
  row.wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  return row;
}

namespace detail {

template <class T>
Json opt_json(const std::optional<T>& v) {
  return v ? Json(*v) : Json(nullptr);
}

template <class T>
std::string opt_csv(const std::optional<T>& v) {
  return v ? std::to_string(*v) : std::string();
}

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

}  // namespace detail

inline Json to_json(const ScanRow& r) {
  return {{"p", r.p},
          {"q", r.q},
          {"patterns", detail::opt_json(r.patterns)},
          {"t", detail::opt_json(r.t)},
          {"Q", detail::opt_json(r.q_count)},
          {"DcapQ", detail::opt_json(r.d_cap_q_count)},
          {"QminusD", detail::opt_json(r.q_minus_d_classes)},
          {"QminusD_patterns", detail::opt_json(r.q_minus_d_patterns)},
          {"surviving", r.surviving},
          {"wall_ms", r.wall_ms},
          {"status", r.status}};
}

inline const char* scan_csv_header() {
  return "p,q,t,Q,DcapQ,QminusD,QminusD_patterns,patterns,surviving,wall_ms,status";
}

inline std::string to_csv(const ScanRow& r) {
  std::string surviving;
  for (std::size_t i = 0; i < r.surviving.size(); ++i) surviving += (i ? ";" : "") + r.surviving[i];
  std::ostringstream os;
  os << r.p << ',' << r.q << ',' << detail::opt_csv(r.t) << ',' << detail::opt_csv(r.q_count) << ','
     << detail::opt_csv(r.d_cap_q_count) << ',' << detail::opt_csv(r.q_minus_d_classes) << ','
     << detail::opt_csv(r.q_minus_d_patterns) << ',' << detail::opt_csv(r.patterns) << ','
     << detail::csv_field(surviving) << ',' << r.wall_ms << ',' << detail::csv_field(r.status);
  return os.str();
}

}  // namespace thetaq
