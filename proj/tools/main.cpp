// Command-line front end: every subcommand builds a ReportDoc through the
// command layer and renders it as a table (default), JSON, or CSV. Exit
// codes: 0 success, 1 failed verification checks or computation errors,
// 2 usage errors.
#include <cstdio>
#include <exception>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "volterra/commands.hpp"
#include "volterra/errors.hpp"
#include "volterra/report.hpp"
#include "volterra/tolerances.hpp"
#include "volterra/verify.hpp"

namespace {

int emit(const volterra::ReportDoc& doc, bool as_json, bool as_csv) {
  const std::string text = as_json   ? volterra::render_json(doc)
                           : as_csv ? volterra::render_csv(doc)
                                    : volterra::render_table(doc);
  std::fputs(text.c_str(), stdout);
  return doc.overall() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spectra, norms, numerical ranges, and accretivity of powers "
               "of the integration operator on L2[0,1]"};
  app.require_subcommand(1);

  bool as_json = false;
  bool as_csv = false;
  auto* json_opt = app.add_flag("--json", as_json, "emit JSON");
  auto* csv_opt = app.add_flag("--csv", as_csv, "emit CSV");
  json_opt->excludes(csv_opt);
  csv_opt->excludes(json_opt);

  std::string part_token = "re";
  int n = 1;
  std::string method_token = "auto";
  int count = 8;
  int m = -1;  // sentinel: resolve through default_grid at dispatch
  int points = volterra::tol::kCurveSamplesDefault;
  std::string out_csv;
  double coeff_a = 0.0;
  double coeff_b = 0.0;
  std::string level_token = "fast";

  CLI::App* eigs = app.add_subcommand("eigs", "eigenvalues of a part of V^n");
  eigs->fallthrough();
  eigs->add_option("--part", part_token, "re | im | v")->required();
  eigs->add_option("--n", n, "power of V")->check(CLI::Range(1, 50));
  eigs->add_option("--method", method_token,
                   "auto | pencil | analytic | discretize");
  eigs->add_option("--count", count, "values to report")
      ->check(CLI::Range(1, 100000));
  eigs->add_option("--m", m, "grid size for the discretize route")
      ->check(CLI::Range(2, volterra::tol::kGridCap));

  CLI::App* norms = app.add_subcommand(
      "norms", "Hilbert-Schmidt and operator norms of V^n and its parts");
  norms->fallthrough();
  norms->add_option("--n", n, "power of V")
      ->required()
      ->check(CLI::Range(1, 50));
  norms->add_option("--m", m, "grid size for discretized estimates")
      ->check(CLI::Range(2, volterra::tol::kGridCap));

  CLI::App* nrange = app.add_subcommand(
      "nrange", "numerical-range intervals of Re V^n and Im V^n");
  nrange->fallthrough();
  nrange->add_option("--n", n, "power of V")
      ->required()
      ->check(CLI::Range(1, 50));
  nrange->add_option("--points", points, "boundary-curve sample count")
      ->check(CLI::Range(2, 1000000));
  nrange->add_option("--out", out_csv,
                     "write the n=1 boundary curve to this CSV file");

  CLI::App* accretive = app.add_subcommand(
      "accretive", "accretivity verdict and certificate for a V + b V^2");
  accretive->fallthrough();
  accretive->add_option("--a", coeff_a, "coefficient of V")->required();
  accretive->add_option("--b", coeff_b, "coefficient of V^2")->required();
  accretive->add_option("--m", m, "certification grid size")
      ->check(CLI::Range(100, volterra::tol::kGridCap));

  CLI::App* verify =
      app.add_subcommand("verify", "run the complete verification suite");
  verify->fallthrough();
  verify->add_option("--level", level_token, "fast | full")
      ->check(CLI::IsMember({"fast", "full"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e);
    return 0;
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    using namespace volterra;
    if (*eigs) {
      const int grid = m > 0 ? m : default_grid(tol::kGridDefault);
      return emit(cmd_eigs(parse_part(part_token), n,
                           parse_method(method_token), count, grid),
                  as_json, as_csv);
    }
    if (*norms) {
      const int grid = m > 0 ? m : default_grid(tol::kGridDefault);
      return emit(cmd_norms(n, grid), as_json, as_csv);
    }
    if (*nrange) {
      const int grid = default_grid(tol::kGridDefault);
      const std::optional<std::string> out =
          out_csv.empty() ? std::nullopt
                          : std::optional<std::string>(out_csv);
      return emit(cmd_nrange(n, points, out, grid), as_json, as_csv);
    }
    if (*accretive) {
      const int grid = m > 0 ? m : default_grid(tol::kAccretiveGrid);
      return emit(cmd_accretive(coeff_a, coeff_b, grid), as_json, as_csv);
    }
    if (*verify)
      return emit(cmd_verify(parse_verify_level(level_token)), as_json,
                  as_csv);
    std::cerr << "error: no subcommand selected\n";
    return 2;
  } catch (const volterra::UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const volterra::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
