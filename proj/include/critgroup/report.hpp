#pragma once

#include "critgroup/bigint.hpp"
#include "critgroup/exactlin.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

namespace critgroup::harness {

enum class Verdict { Verified, Refuted, Partial };

inline std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Verified: return "VERIFIED";
    case Verdict::Refuted: return "REFUTED";
    case Verdict::Partial: return "PARTIAL";
  }
  return "?";
}

inline Verdict parse_verdict(std::string_view s) {
  if (s == "VERIFIED") return Verdict::Verified;
  if (s == "REFUTED") return Verdict::Refuted;
  if (s == "PARTIAL") return Verdict::Partial;
  throw std::invalid_argument("unknown verdict '" + std::string(s) + "'");
}

using ParamValue = std::variant<std::int64_t, std::string>;
using Params = std::vector<std::pair<std::string, ParamValue>>;

inline std::string params_string(const Params& p) {
  std::string s;
  for (const auto& [name, value] : p) {
    if (!s.empty()) s += ',';
    s += name + '=';
    if (const auto* i = std::get_if<std::int64_t>(&value)) s += std::to_string(*i);
    else s += std::get<std::string>(value);
  }
  return s;
}

enum class PointStatus { Match, Mismatch, FormulaViolation };

inline std::string_view status_name(PointStatus s) {
  switch (s) {
    case PointStatus::Match: return "MATCH";
    case PointStatus::Mismatch: return "MISMATCH";
    case PointStatus::FormulaViolation: return "FORMULA_VIOLATION";
  }
  return "?";
}

/// One evaluated sweep point. For group claims the value lists are factor
/// chains; for identities they hold the two sides.
struct PointRecord {
  Params params;
  PointStatus status = PointStatus::Match;
  bool boundary = false;
  std::vector<std::string> claimed;
  std::vector<std::string> oracle;
};

struct Counterexample {
  Params params;
  std::string kind;  // mismatch | finite_vs_infinite | formula_violation | identity_failure
  std::vector<std::string> expected;
  std::vector<std::string> oracle;
  std::string expected_order;
  std::string oracle_order;
  bool confirmed = false;
  std::vector<std::string> confirmations;
  std::string detail;
};

struct SweepRange {
  std::string name;
  std::int64_t lo;
  std::int64_t hi;
};

struct VerificationReport {
  std::string claim;
  std::string statement;
  std::vector<SweepRange> sweep;
  Verdict verdict = Verdict::Verified;
  std::size_t points_checked = 0;
  std::size_t failures = 0;
  std::size_t boundary_failures = 0;
  std::vector<Counterexample> counterexamples;
  bool counterexamples_truncated = false;
  std::vector<PointRecord> points;
  bool ledger = false;  // per-point records belong in the JSON document
  std::vector<std::string> notes;
  std::optional<double> seconds;
};

inline constexpr std::size_t kMaxCounterexamples = 200;

/// Collects points for one claim and derives the verdict: VERIFIED with no
/// failures, PARTIAL when every failure sits on a boundary point, REFUTED
/// otherwise.
class Recorder {
 public:
  explicit Recorder(VerificationReport& report) : report_(report) {}

  void pass(Params params, bool boundary, std::vector<std::string> claimed, std::vector<std::string> oracle) {
    ++report_.points_checked;
    report_.points.push_back({std::move(params), PointStatus::Match, boundary, std::move(claimed), std::move(oracle)});
  }

  void fail(PointStatus status, bool boundary, Counterexample cx) {
    ++report_.points_checked;
    ++report_.failures;
    if (boundary) ++report_.boundary_failures;
    report_.points.push_back({cx.params, status, boundary, cx.expected, cx.oracle});
    if (report_.counterexamples.size() < kMaxCounterexamples) report_.counterexamples.push_back(std::move(cx));
    else report_.counterexamples_truncated = true;
  }

  void note(std::string text) { report_.notes.push_back(std::move(text)); }

  void finish() {
    if (report_.failures == 0) report_.verdict = Verdict::Verified;
    else if (report_.failures == report_.boundary_failures) report_.verdict = Verdict::Partial;
    else report_.verdict = Verdict::Refuted;
  }

 private:
  VerificationReport& report_;
};

}  // namespace critgroup::harness
