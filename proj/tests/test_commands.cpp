#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <optional>
#include <sstream>

#include "doctest.h"
#include "volterra/commands.hpp"
#include "volterra/errors.hpp"
#include "volterra/tolerances.hpp"

using namespace volterra;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kRho = 1.1996786402577335;

std::optional<double> find_result(const ReportDoc& doc, const std::string& label) {
  for (const auto& r : doc.results)
    if (r.label == label) return r.value;
  return std::nullopt;
}

std::optional<std::string> find_input(const ReportDoc& doc, const std::string& key) {
  for (const auto& [k, v] : doc.inputs)
    if (k == key) return v;
  return std::nullopt;
}

}  // namespace

TEST_CASE("token parsing for the front end") {
  CHECK(parse_part("re") == PartSelector::RealPart);
  CHECK(parse_part("im") == PartSelector::ImagPart);
  CHECK(parse_part("v") == PartSelector::FullV);
  CHECK_THROWS_AS(parse_part("RE"), UsageError);
  CHECK_THROWS_AS(parse_part(""), UsageError);

  CHECK(parse_method("auto") == EigsMethod::Auto);
  CHECK(parse_method("pencil") == EigsMethod::Pencil);
  CHECK(parse_method("analytic") == EigsMethod::Analytic);
  CHECK(parse_method("discretize") == EigsMethod::Discretize);
  CHECK_THROWS_AS(parse_method("exact"), UsageError);
}

TEST_CASE("grid default honors the environment override") {
  unsetenv("VOLTERRA_DEFAULT_M");
  CHECK(default_grid(1000) == 1000);

  setenv("VOLTERRA_DEFAULT_M", "250", 1);
  CHECK(default_grid(1000) == 250);

  setenv("VOLTERRA_DEFAULT_M", "garbage", 1);
  CHECK_THROWS_AS(default_grid(1000), UsageError);
  setenv("VOLTERRA_DEFAULT_M", "1", 1);  // below the minimum grid size
  CHECK_THROWS_AS(default_grid(1000), UsageError);
  setenv("VOLTERRA_DEFAULT_M", "999999", 1);
  CHECK_THROWS_AS(default_grid(1000), UsageError);

  unsetenv("VOLTERRA_DEFAULT_M");
}

TEST_CASE("eigs routes by part and power") {
  // im n=2: pencil route, the +/- sqrt(3)/12 pair
  const ReportDoc im2 = cmd_eigs(PartSelector::ImagPart, 2, EigsMethod::Auto, 8, 200);
  CHECK(*find_input(im2, "source") == "pencil");
  REQUIRE(im2.results.size() == 2);
  CHECK(*find_result(im2, "lambda[0]") ==
        doctest::Approx(std::sqrt(3.0) / 12.0).epsilon(1e-12));
  CHECK(*find_result(im2, "lambda[1]") ==
        doctest::Approx(-std::sqrt(3.0) / 12.0).epsilon(1e-12));
  CHECK_FALSE(find_input(im2, "m").has_value());  // no grid touched

  // re n=2: analytic merged families
  const ReportDoc re2 = cmd_eigs(PartSelector::RealPart, 2, EigsMethod::Analytic, 5, 200);
  CHECK(*find_input(re2, "source") == "analytic");
  REQUIRE(re2.results.size() == 5);
  CHECK(*find_result(re2, "lambda[0]") ==
        doctest::Approx(1.0 / (4.0 * kRho * kRho)).epsilon(1e-12));
  CHECK(*find_result(re2, "lambda[1]") ==
        doctest::Approx(-1.0 / (kPi * kPi)).epsilon(1e-12));

  // im n=1: analytic family, truncated to count
  const ReportDoc im1 = cmd_eigs(PartSelector::ImagPart, 1, EigsMethod::Auto, 4, 200);
  CHECK(*find_input(im1, "source") == "analytic");
  REQUIRE(im1.results.size() == 4);
  CHECK(*find_result(im1, "lambda[0]") == doctest::Approx(1.0 / kPi).epsilon(1e-14));
  CHECK(*find_result(im1, "lambda[2]") == doctest::Approx(1.0 / (3 * kPi)).epsilon(1e-14));

  // re n=4 has no pencil or analytic route: auto discretizes
  const ReportDoc re4 = cmd_eigs(PartSelector::RealPart, 4, EigsMethod::Auto, 3, 200);
  CHECK(*find_input(re4, "source") == "discretized");
  CHECK(*find_input(re4, "m") == "200");
  CHECK(re4.results.size() == 3);
  CHECK(*find_result(re4, "lambda[0]") > 0.0);  // nonnegative kernel top value

  // above the pencil conditioning cap auto falls back to the grid
  const ReportDoc im14 = cmd_eigs(PartSelector::ImagPart, 14, EigsMethod::Auto, 2, 150);
  CHECK(*find_input(im14, "source") == "discretized");
}

TEST_CASE("eigs rejects incompatible explicit routes") {
  CHECK_THROWS_AS(cmd_eigs(PartSelector::RealPart, 2, EigsMethod::Pencil, 8, 200),
                  UsageError);
  CHECK_THROWS_AS(cmd_eigs(PartSelector::ImagPart, 3, EigsMethod::Pencil, 8, 200),
                  UsageError);
  CHECK_THROWS_AS(cmd_eigs(PartSelector::RealPart, 3, EigsMethod::Analytic, 8, 200),
                  UsageError);
  CHECK_THROWS_AS(cmd_eigs(PartSelector::FullV, 1, EigsMethod::Pencil, 8, 200),
                  UsageError);
  // compatible parity above the conditioning cap is a capacity error, not usage
  CHECK_THROWS_AS(cmd_eigs(PartSelector::ImagPart, 14, EigsMethod::Pencil, 8, 200),
                  CapacityExceeded);
}

TEST_CASE("eigs reports the empty spectrum of the full operator") {
  const ReportDoc doc = cmd_eigs(PartSelector::FullV, 3, EigsMethod::Auto, 8, 200);
  CHECK(doc.results.empty());
  CHECK(*find_input(doc, "note") == "quasinilpotent: no nonzero eigenvalues");
  CHECK(doc.overall());
}

TEST_CASE("norms command emits rows and sandwich checks") {
  const ReportDoc doc = cmd_norms(1, 300);
  CHECK(*find_result(doc, "v.op_exact") == doctest::Approx(2.0 / kPi).epsilon(1e-14));
  CHECK(*find_result(doc, "re.op_exact") == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(*find_result(doc, "im.op_exact") == doctest::Approx(1.0 / kPi).epsilon(1e-14));
  CHECK(*find_result(doc, "re.hs_exact") == doctest::Approx(0.5).epsilon(1e-15));

  // discretized top singular value sits inside the stated bracket
  const double disc = *find_result(doc, "v.op_discretized");
  CHECK(disc > 1.0 / std::sqrt(3.0));
  CHECK(disc < 1.0 / std::sqrt(2.0));

  REQUIRE(doc.checks.size() == 6);
  CHECK(doc.overall());

  // outside the exact table the op_exact rows disappear
  const ReportDoc n6 = cmd_norms(6, 150);
  CHECK_FALSE(find_result(n6, "v.op_exact").has_value());
  CHECK_FALSE(find_result(n6, "re.op_exact").has_value());
  CHECK_FALSE(find_result(n6, "im.op_exact").has_value());
  CHECK(n6.overall());
}

TEST_CASE("nrange command reports intervals and writes the curve") {
  const std::string path = "/tmp/volterra_curve_test.csv";
  std::remove(path.c_str());

  const ReportDoc doc = cmd_nrange(1, 600, path, 200);
  CHECK(*find_result(doc, "re.lo") == 0.0);
  CHECK(*find_result(doc, "re.hi") == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(*find_result(doc, "im.lo") == doctest::Approx(-1.0 / kPi).epsilon(1e-12));
  CHECK(*find_result(doc, "im.hi") == doctest::Approx(1.0 / kPi).epsilon(1e-12));

  std::ifstream in(path);
  REQUIRE(in.good());
  std::string line;
  REQUIRE(std::getline(in, line));
  CHECK(line == "t,x,y_upper,y_lower");
  int rows = 0;
  std::string prev, last;
  while (std::getline(in, line)) {
    ++rows;
    prev = last;
    last = line;
  }
  CHECK(rows == 601);  // samples plus the appended limit point
  CHECK(last == "0,0.5,0,0");
  // the second to last row is t = 2pi, where the curve meets the axis
  std::istringstream ss(prev);
  std::string tok;
  std::getline(ss, tok, ',');
  CHECK(std::stod(tok) == doctest::Approx(2 * kPi).epsilon(1e-12));
  std::getline(ss, tok, ',');
  CHECK(std::abs(std::stod(tok)) < 1e-12);
  std::remove(path.c_str());

  // n = 2 intervals come from the analytic and pencil routes
  const ReportDoc n2 = cmd_nrange(2, 600, std::nullopt, 200);
  CHECK(*find_result(n2, "re.lo") == doctest::Approx(-1.0 / (kPi * kPi)).epsilon(1e-10));
  CHECK(*find_result(n2, "re.hi") ==
        doctest::Approx(1.0 / (4.0 * kRho * kRho)).epsilon(1e-10));
  CHECK(*find_result(n2, "im.hi") ==
        doctest::Approx(std::sqrt(3.0) / 12.0).epsilon(1e-12));

  CHECK_THROWS_AS(cmd_nrange(2, 600, path, 200), UsageError);
  CHECK_THROWS_AS(cmd_nrange(1, 1, std::nullopt, 200), std::invalid_argument);
}

TEST_CASE("accretive command reports verdict data") {
  const ReportDoc good = cmd_accretive(1.0, 0.0, 150);
  CHECK(*find_input(good, "accretive") == "yes");
  CHECK(*find_result(good, "predicate") == 1.0);
  CHECK(*find_result(good, "min_eig") >= -1e-9);
  CHECK(*find_result(good, "resolvent_norm") <= 1.0 + tol::kResolventSlack);
  CHECK_FALSE(find_result(good, "witness_rayleigh").has_value());
  CHECK(good.checks.empty());  // verdict is data, not a gate

  const ReportDoc bad = cmd_accretive(0.0, 1.0, 150);
  CHECK(*find_input(bad, "accretive") == "no");
  CHECK(*find_input(bad, "witness") == "x-minus-half");
  CHECK(*find_result(bad, "predicate") == 0.0);
  CHECK(*find_result(bad, "witness_rayleigh") < 0.0);
  CHECK_FALSE(find_result(bad, "resolvent_norm").has_value());

  const ReportDoc spike = cmd_accretive(0.0, -1.0, 150);
  CHECK(*find_input(spike, "witness") == "spike(2)");
  CHECK(*find_result(spike, "witness_rayleigh") < 0.0);
}
