// critgroup command-line front end.
//
// Exit codes: 0 success (for verify-all: every verdict as expected),
// 1 usage or input error, 2 a verdict differs from the expectations file.

#include "critgroup/closedform.hpp"
#include "critgroup/exactlin.hpp"
#include "critgroup/graphs.hpp"
#include "critgroup/harness.hpp"
#include "critgroup/io.hpp"
#include "critgroup/matforms.hpp"
#include "critgroup/polyseq.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#ifndef CRITGROUP_DATA_DIR
#define CRITGROUP_DATA_DIR "data"
#endif

namespace {

using namespace critgroup;

struct Failure {
  int code;
};

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) std::cout << text;
  else io::write_file(out_path, text);
}

std::string join(const std::vector<BigInt>& values) {
  std::string s;
  for (std::size_t i = 0; i < values.size(); ++i) s += (i ? " " : "") + to_string(values[i]);
  return s;
}

std::string format_reports(const std::vector<harness::VerificationReport>& reports, const std::string& format) {
  if (format == "csv") return io::reports_to_csv(reports);
  return io::reports_to_json(reports).dump(2) + "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Critical groups, Smith normal forms and a claim verification harness"};
  app.require_subcommand(1);

  // snf
  std::string snf_file;
  bool snf_group = false;
  auto* snf_cmd = app.add_subcommand("snf", "Smith normal form diagonal of a matrix file (or a graph file with sink)");
  snf_cmd->add_option("file", snf_file, "matrix or graph JSON file")->required();
  snf_cmd->add_flag("--group", snf_group, "print the cokernel group instead of the diagonal");

  // group
  std::string family_text, method = "both";
  std::int64_t g_size = 0, g_l = 1, g_cone = 0;
  auto* group_cmd = app.add_subcommand("group", "critical group of c_cone(family(m)(l))");
  group_cmd->add_option("--family", family_text, "path, cycle, complete, Kmm, Lmm, Mmm, KMM, LMM, MMM, KmM, LmM, MmM")
      ->required();
  group_cmd->add_option("--m", g_size, "size parameter")->required();
  group_cmd->add_option("--l", g_l, "edge multiplicity")->check(CLI::Range(std::int64_t{1}, INT64_MAX));
  group_cmd->add_option("--cone", g_cone, "cone multiplicity")->check(CLI::Range(std::int64_t{0}, INT64_MAX));
  group_cmd->add_option("--method", method, "closed, snf or both")->check(CLI::IsMember({"closed", "snf", "both"}));

  // matrix
  auto* matrix_cmd = app.add_subcommand("matrix", "build parametric matrices");
  matrix_cmd->require_subcommand(1);
  std::string kind_text, a_text = "0", b_text = "0";
  std::size_t mb_n = 0;
  auto* mbuild = matrix_cmd->add_subcommand("build", "T_n, P_n, C_n or K_n with parameters a, b");
  mbuild->add_option("--kind", kind_text, "T, P, C or K")->required();
  mbuild->add_option("--n", mb_n, "order")->required();
  mbuild->add_option("--a", a_text, "parameter a")->required();
  mbuild->add_option("--b", b_text, "parameter b")->required();
  std::size_t phi_m = 0;
  std::string phi_a, phi_b;
  bool phi_reduced = false;
  auto* mphi = matrix_cmd->add_subcommand("phi", "block matrix Phi_m(A,B)");
  mphi->add_option("--m", phi_m, "block count")->required();
  mphi->add_option("--A", phi_a, "matrix file for A")->required();
  mphi->add_option("--B", phi_b, "matrix file for B")->required();
  mphi->add_flag("--reduced", phi_reduced, "emit the reduced direct sum instead");

  // graph
  auto* graph_cmd = app.add_subcommand("graph", "build multigraphs");
  graph_cmd->require_subcommand(1);
  std::string gb_family;
  std::int64_t gb_size = 0, gb_l = 1, gb_cone = 0;
  auto* gbuild = graph_cmd->add_subcommand("build", "c_cone(family(m)(l)) as a graph file");
  gbuild->add_option("--family", gb_family, "family name")->required();
  gbuild->add_option("--m", gb_size, "size parameter")->required();
  gbuild->add_option("--l", gb_l, "edge multiplicity")->check(CLI::Range(std::int64_t{1}, INT64_MAX));
  gbuild->add_option("--cone", gb_cone, "cone multiplicity")->check(CLI::Range(std::int64_t{0}, INT64_MAX));

  // poly
  auto* poly_cmd = app.add_subcommand("poly", "evaluate f_n(x,y) and p_m^n(x,y)");
  poly_cmd->require_subcommand(1);
  std::int64_t pf_n = 0, pp_m = 0, pp_n = 1;
  std::string px = "0", py = "0";
  bool p_closed = false;
  auto* pf = poly_cmd->add_subcommand("f", "f_n(x,y)");
  pf->add_option("--n", pf_n, "index")->required();
  pf->add_option("--x", px, "x")->required();
  pf->add_option("--y", py, "y")->required();
  pf->add_flag("--closed", p_closed, "use the binomial sum");
  auto* pp = poly_cmd->add_subcommand("p", "p_m^n(x,y)");
  pp->add_option("--m", pp_m, "index")->required();
  pp->add_option("--n", pp_n, "ring size")->required();
  pp->add_option("--x", px, "x")->required();
  pp->add_option("--y", py, "y")->required();
  pp->add_flag("--closed", p_closed, "use the binomial sum");

  // verify
  std::string claim_text, sweep_text, format = "json", out_path;
  bool timing = false;
  auto* verify_cmd = app.add_subcommand("verify", "check one claim over a sweep");
  verify_cmd->add_option("--claim", claim_text, "claim id")->required();
  verify_cmd->add_option("--sweep", sweep_text, "overrides such as m=3..5,l=1,n=0..4");
  verify_cmd->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  verify_cmd->add_option("--out", out_path, "write the report here instead of stdout");
  verify_cmd->add_flag("--timing", timing, "record wall-clock seconds (breaks byte-identical reruns)");

  // verify-all
  std::string expectations_path = std::string(CRITGROUP_DATA_DIR) + "/expected_verdicts.json";
  auto* all_cmd = app.add_subcommand("verify-all", "check every claim at its default sweep");
  all_cmd->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  all_cmd->add_option("--out", out_path, "write the report here instead of stdout");
  all_cmd->add_option("--expectations", expectations_path, "expected verdicts file");
  all_cmd->add_flag("--timing", timing, "record wall-clock seconds (breaks byte-identical reruns)");

  auto* claims_cmd = app.add_subcommand("claims", "list claim ids and their default sweeps");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*snf_cmd) {
      const io::Json doc = io::Json::parse(io::read_file(snf_file), nullptr, false);
      if (doc.is_discarded()) throw io::FormatError("document", "invalid JSON");
      const IntMatrix m = doc.is_object() && doc.contains("vertex_count")
                              ? graphs::reduced_laplacian(io::graph_from_json(doc))
                              : io::matrix_from_json(doc);
      const SmithForm s = snf(m);
      std::cout << (snf_group ? critical_group(s).to_string() : join(s.diagonal)) << "\n";
    } else if (*group_cmd) {
      const auto family = graphs::parse_family(family_text);
      std::optional<AbelianGroup> closed, oracle;
      if (method != "snf") closed = closedform::closed_form(family, g_size, g_l, g_cone).group;
      if (method != "closed") {
        if (g_size < static_cast<std::int64_t>(graphs::family_min_size(family)))
          throw std::invalid_argument("size too small for family " + family_text);
        oracle = graphs::critical_group(
            graphs::family_instance(family, static_cast<std::size_t>(g_size), g_l, g_cone));
      }
      if (closed && oracle)
        std::cout << closed->to_string() << " | " << oracle->to_string() << " | "
                  << (*closed == *oracle ? "MATCH" : "MISMATCH") << "\n";
      else
        std::cout << (closed ? *closed : *oracle).to_string() << "\n";
    } else if (*mbuild) {
      const matforms::ParamMatrixSpec spec{matforms::parse_kind(kind_text), mb_n, parse_bigint(a_text),
                                           parse_bigint(b_text)};
      std::cout << io::matrix_to_json(matforms::build(spec)).dump() << "\n";
    } else if (*mphi) {
      const IntMatrix a = io::parse_matrix(io::read_file(phi_a));
      const IntMatrix b = io::parse_matrix(io::read_file(phi_b));
      const IntMatrix out = phi_reduced ? matforms::phi_reduced(phi_m, a, b) : matforms::phi(phi_m, a, b);
      std::cout << io::matrix_to_json(out).dump() << "\n";
    } else if (*gbuild) {
      const auto family = graphs::parse_family(gb_family);
      if (gb_size < static_cast<std::int64_t>(graphs::family_min_size(family)))
        throw std::invalid_argument("size too small for family " + gb_family);
      std::cout << io::graph_to_json(graphs::family_instance(family, static_cast<std::size_t>(gb_size), gb_l, gb_cone))
                       .dump()
                << "\n";
    } else if (*pf) {
      const BigInt x = parse_bigint(px), y = parse_bigint(py);
      std::cout << to_string(p_closed ? polyseq::f_closed(pf_n, x, y) : polyseq::f(pf_n, x, y)) << "\n";
    } else if (*pp) {
      const BigInt x = parse_bigint(px), y = parse_bigint(py);
      std::cout << to_string(p_closed ? polyseq::p_closed(pp_m, pp_n, x, y) : polyseq::p(pp_m, pp_n, x, y)) << "\n";
    } else if (*verify_cmd) {
      const auto id = harness::parse_claim(claim_text);
      const auto report = harness::verify(id, harness::parse_sweep(sweep_text), {timing});
      emit(format_reports({report}, format), out_path);
      std::cerr << report.claim << ": " << harness::verdict_name(report.verdict) << " (" << report.failures << " of "
                << report.points_checked << " points failed)\n";
    } else if (*all_cmd) {
      const auto expected = io::parse_expectations(io::read_file(expectations_path));
      const auto reports = harness::verify_all({timing});
      emit(format_reports(reports, format), out_path);
      for (const auto& r : reports)
        std::cerr << r.claim << ": " << harness::verdict_name(r.verdict) << "\n";
      const auto changed = io::unexpected_verdicts(reports, expected);
      for (const auto& line : changed) std::cerr << "unexpected verdict: " << line << "\n";
      if (!changed.empty()) return 2;
    } else if (*claims_cmd) {
      for (const auto& c : harness::claim_table()) {
        std::cout << c.name;
        for (const auto& p : c.params) std::cout << ' ' << p.name << '=' << p.lo << ".." << p.hi;
        std::cout << "\n";
      }
    }
  } catch (const closedform::FormulaViolation& e) {
    std::cerr << "formula violation: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
