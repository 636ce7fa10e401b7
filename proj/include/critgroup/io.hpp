#pragma once

// File formats and report serialization. Matrices and graphs travel as JSON
// with integers written as decimal strings so nothing is lost to doubles.

#include "critgroup/bigint.hpp"
#include "critgroup/graphs.hpp"
#include "critgroup/matrix.hpp"
#include "critgroup/report.hpp"

#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace critgroup::io {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

/// Malformed input; the message starts with the offending field.
class FormatError : public std::runtime_error {
 public:
  FormatError(const std::string& field, const std::string& what) : std::runtime_error(field + ": " + what) {}
};

namespace detail {

inline const Json& member(const Json& doc, const char* field) {
  if (!doc.is_object()) throw FormatError("document", "expected a JSON object");
  auto it = doc.find(field);
  if (it == doc.end()) throw FormatError(field, "missing");
  return *it;
}

inline std::int64_t count_field(const Json& doc, const char* field, std::int64_t min) {
  const Json& v = member(doc, field);
  if (!v.is_number_integer()) throw FormatError(field, "expected an integer");
  const auto n = v.get<std::int64_t>();
  if (n < min) throw FormatError(field, "must be at least " + std::to_string(min));
  return n;
}

/// Decimal string, or a JSON integer. Floats are rejected.
inline BigInt integer_value(const Json& v, const std::string& field) {
  if (v.is_string()) {
    try {
      return parse_bigint(v.get<std::string>());
    } catch (const std::invalid_argument&) {
      throw FormatError(field, "not a decimal integer: \"" + v.get<std::string>() + "\"");
    }
  }
  if (v.is_number_integer()) return BigInt(v.dump(), 10);
  throw FormatError(field, "expected a decimal string or integer");
}

inline Json parse_text(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw FormatError("document", std::string("invalid JSON: ") + e.what());
  }
}

}  // namespace detail

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << text;
}

// --- matrices --------------------------------------------------------------

inline IntMatrix matrix_from_json(const Json& doc) {
  const auto rows = detail::count_field(doc, "rows", 1);
  const auto cols = detail::count_field(doc, "cols", 1);
  const Json& entries = detail::member(doc, "entries");
  if (!entries.is_array()) throw FormatError("entries", "expected an array");
  if (entries.size() != static_cast<std::size_t>(rows * cols))
    throw FormatError("entries", "expected " + std::to_string(rows * cols) + " values, got " +
                                     std::to_string(entries.size()));
  IntMatrix m(static_cast<std::size_t>(rows), static_cast<std::size_t>(cols));
  for (std::size_t k = 0; k < entries.size(); ++k)
    m(k / m.cols(), k % m.cols()) = detail::integer_value(entries[k], "entries[" + std::to_string(k) + "]");
  return m;
}

inline IntMatrix parse_matrix(const std::string& text) { return matrix_from_json(detail::parse_text(text)); }

inline Json matrix_to_json(const IntMatrix& m) {
  Json entries = Json::array();
  for (const auto& x : m.entries()) entries.push_back(to_string(x));
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

// --- graphs ----------------------------------------------------------------

inline Multigraph graph_from_json(const Json& doc) {
  const auto n = static_cast<std::size_t>(detail::count_field(doc, "vertex_count", 1));
  const Json& mult = detail::member(doc, "multiplicity");
  if (!mult.is_array()) throw FormatError("multiplicity", "expected an array");
  if (mult.size() != n * n)
    throw FormatError("multiplicity",
                      "expected " + std::to_string(n * n) + " values, got " + std::to_string(mult.size()));
  std::vector<std::int64_t> values;
  for (std::size_t k = 0; k < mult.size(); ++k) {
    const std::string field = "multiplicity[" + std::to_string(k) + "]";
    const BigInt v = detail::integer_value(mult[k], field);
    if (!v.fits_slong_p()) throw FormatError(field, "out of range");
    values.push_back(v.get_si());
  }
  std::optional<std::size_t> sink;
  if (auto it = doc.find("sink"); it != doc.end() && !it->is_null()) {
    if (!it->is_number_integer() || it->get<std::int64_t>() < 0) throw FormatError("sink", "expected a vertex index");
    sink = it->get<std::size_t>();
    if (*sink >= n) throw FormatError("sink", "vertex index out of range");
  }
  try {
    return Multigraph(n, std::move(values), sink);
  } catch (const std::invalid_argument& e) {
    throw FormatError("multiplicity", e.what());
  }
}

inline Multigraph parse_graph(const std::string& text) { return graph_from_json(detail::parse_text(text)); }

inline Json graph_to_json(const Multigraph& g) {
  Json mult = Json::array();
  for (auto v : g.multiplicities()) mult.push_back(std::to_string(v));
  Json doc{{"vertex_count", g.vertex_count()}, {"multiplicity", std::move(mult)}};
  doc["sink"] = g.sink() ? Json(*g.sink()) : Json(nullptr);
  return doc;
}

// --- reports ---------------------------------------------------------------

inline Json params_to_json(const harness::Params& params) {
  Json out = Json::object();
  for (const auto& [name, value] : params) {
    if (const auto* i = std::get_if<std::int64_t>(&value)) out[name] = *i;
    else out[name] = std::get<std::string>(value);
  }
  return out;
}

inline Json report_to_json(const harness::VerificationReport& r) {
  Json sweep = Json::array();
  for (const auto& s : r.sweep) sweep.push_back({{"name", s.name}, {"lo", s.lo}, {"hi", s.hi}});
  Json cxs = Json::array();
  for (const auto& cx : r.counterexamples) {
    cxs.push_back({{"params", params_to_json(cx.params)},
                   {"kind", cx.kind},
                   {"expected", cx.expected},
                   {"oracle", cx.oracle},
                   {"expected_order", cx.expected_order},
                   {"oracle_order", cx.oracle_order},
                   {"confirmed", cx.confirmed},
                   {"confirmations", cx.confirmations},
                   {"detail", cx.detail}});
  }
  Json doc{{"claim", r.claim},
           {"statement", r.statement},
           {"sweep", std::move(sweep)},
           {"verdict", std::string(harness::verdict_name(r.verdict))},
           {"points_checked", r.points_checked},
           {"failures", r.failures},
           {"boundary_failures", r.boundary_failures},
           {"counterexamples", std::move(cxs)},
           {"counterexamples_truncated", r.counterexamples_truncated},
           {"notes", r.notes}};
  if (r.ledger) {
    Json points = Json::array();
    for (const auto& p : r.points)
      points.push_back({{"params", params_to_json(p.params)},
                        {"status", std::string(harness::status_name(p.status))},
                        {"boundary", p.boundary},
                        {"claimed", p.claimed},
                        {"oracle", p.oracle}});
    doc["points"] = std::move(points);
  }
  if (r.seconds) doc["timing_seconds"] = *r.seconds;
  return doc;
}

inline Json reports_to_json(const std::vector<harness::VerificationReport>& reports) {
  std::size_t verified = 0, refuted = 0, partial = 0;
  Json list = Json::array();
  for (const auto& r : reports) {
    switch (r.verdict) {
      case harness::Verdict::Verified: ++verified; break;
      case harness::Verdict::Refuted: ++refuted; break;
      case harness::Verdict::Partial: ++partial; break;
    }
    list.push_back(report_to_json(r));
  }
  return Json{{"schema_version", kSchemaVersion},
              {"summary", {{"claims", reports.size()}, {"verified", verified}, {"refuted", refuted}, {"partial", partial}}},
              {"reports", std::move(list)}};
}

namespace detail {

inline std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

inline std::string join(const std::vector<std::string>& parts, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) out += (i ? sep : "") + parts[i];
  return out;
}

}  // namespace detail

/// One row per sweep point, every claim.
inline std::string reports_to_csv(const std::vector<harness::VerificationReport>& reports) {
  std::string out = "claim,params,status,boundary,claimed,oracle\n";
  for (const auto& r : reports)
    for (const auto& p : r.points) {
      out += r.claim + ',' + detail::csv_field(harness::params_string(p.params)) + ',' +
             std::string(harness::status_name(p.status)) + ',' + (p.boundary ? "true" : "false") + ',' +
             detail::csv_field(detail::join(p.claimed, " ")) + ',' + detail::csv_field(detail::join(p.oracle, " ")) +
             '\n';
    }
  return out;
}

// --- expectations ----------------------------------------------------------

using Expectations = std::map<std::string, harness::Verdict>;

inline Expectations parse_expectations(const std::string& text) {
  const Json doc = detail::parse_text(text);
  const Json& verdicts = detail::member(doc, "verdicts");
  if (!verdicts.is_object()) throw FormatError("verdicts", "expected an object");
  Expectations out;
  for (const auto& [claim, verdict] : verdicts.items()) {
    if (!verdict.is_string()) throw FormatError("verdicts." + claim, "expected a verdict string");
    try {
      out[claim] = harness::parse_verdict(verdict.get<std::string>());
    } catch (const std::invalid_argument& e) {
      throw FormatError("verdicts." + claim, e.what());
    }
  }
  return out;
}

/// Human-readable lines for every claim whose verdict differs from the
/// expectation (or has none).
inline std::vector<std::string> unexpected_verdicts(const std::vector<harness::VerificationReport>& reports,
                                                    const Expectations& expected) {
  std::vector<std::string> out;
  for (const auto& r : reports) {
    auto it = expected.find(r.claim);
    if (it == expected.end())
      out.push_back(r.claim + ": no expectation recorded, got " + std::string(harness::verdict_name(r.verdict)));
    else if (it->second != r.verdict)
      out.push_back(r.claim + ": expected " + std::string(harness::verdict_name(it->second)) + ", got " +
                    std::string(harness::verdict_name(r.verdict)));
  }
  return out;
}

}  // namespace critgroup::io
