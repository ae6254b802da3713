#include <cmath>
#include <numbers>

#include "doctest.h"
#include "volterra/analytic_spectra.hpp"

using namespace volterra;

namespace {
constexpr double kPi = std::numbers::pi;
// root of coth t = t, frozen from an independent bisection
constexpr double kRho = 1.1996786402577335;
// first five roots of cot t = -t, frozen the same way
constexpr double kCotRoots[5] = {2.798386045783887, 6.1212504668980685,
                                 9.317866461791064, 12.486454395223781,
                                 15.644128370333028};
}  // namespace

TEST_CASE("Im V eigenvalue family") {
  auto f1 = imv_eigenvalues(1);
  CHECK(f1.kind == EigenFamilyKind::ImV_odd_pi);
  REQUIRE(f1.values.size() == 2);
  CHECK(f1.values[0] == doctest::Approx(1.0 / kPi).epsilon(1e-15));
  CHECK(f1.values[1] == -f1.values[0]);
  CHECK(f1.index_range.lo == -1);
  CHECK(f1.index_range.hi == 0);

  auto f2 = imv_eigenvalues(2);
  REQUIRE(f2.values.size() == 4);
  CHECK(f2.values[2] == doctest::Approx(1.0 / (3 * kPi)).epsilon(1e-15));
  CHECK(f2.values[3] == doctest::Approx(-1.0 / (3 * kPi)).epsilon(1e-15));

  // multiset symmetry under negation, and descending magnitudes
  auto f6 = imv_eigenvalues(6);
  REQUIRE(f6.values.size() == 12);
  for (std::size_t k = 0; k + 1 < f6.values.size(); k += 2) {
    CHECK(f6.values[k] > 0);
    CHECK(f6.values[k + 1] == -f6.values[k]);
    if (k + 2 < f6.values.size()) {
      CHECK(std::abs(f6.values[k + 2]) < std::abs(f6.values[k]));
    }
  }

  CHECK_THROWS_AS(imv_eigenvalues(0), std::invalid_argument);
}

TEST_CASE("coth root and the positive Re V^2 eigenvalue") {
  const double rho = solve_coth_eq();
  CHECK(rho == doctest::Approx(kRho).epsilon(0).scale(1).epsilon(1e-12));
  CHECK(std::abs(1.0 / std::tanh(rho) - rho) < 1e-12);
  CHECK(1.0 / (4 * rho * rho) == doctest::Approx(0.173703).epsilon(1e-5));

  // cross-check against the discretized top eigenvalue of Re V^2
  auto M = assemble({PartSelector::RealPart, 2}, make_grid(500));
  const double top = eigenvalues_symmetric(M).values.front();
  CHECK(1.0 / (4 * rho * rho) == doctest::Approx(top).epsilon(1e-2));

  // a starved iteration budget cannot reach the residual guard
  RootSolverConfig starved;
  starved.max_iter = 1;
  CHECK_THROWS_AS(solve_coth_eq(starved), InternalError);

  RootSolverConfig bad;
  bad.abs_tol = -1.0;
  CHECK_THROWS_AS(solve_coth_eq(bad), std::invalid_argument);
}

TEST_CASE("cot root family") {
  auto roots = solve_cot_family(5);
  REQUIRE(roots.size() == 5);
  for (int k = 0; k < 5; ++k) {
    CHECK(roots[static_cast<std::size_t>(k)] ==
          doctest::Approx(kCotRoots[k]).epsilon(0).scale(1).epsilon(1e-12));
    // each root sits in its own branch of cot
    CHECK(roots[static_cast<std::size_t>(k)] > k * kPi + kPi / 2);
    CHECK(roots[static_cast<std::size_t>(k)] < (k + 1) * kPi);
    const double t = roots[static_cast<std::size_t>(k)];
    CHECK(std::abs(std::cos(t) / std::sin(t) + t) < 1e-12);
  }
  CHECK(roots[0] > kPi / 2);
  CHECK(roots[0] < kPi);
  CHECK_THROWS_AS(solve_cot_family(0), std::invalid_argument);
}

TEST_CASE("merged Re V^2 spectrum") {
  auto spec = rev2_eigenvalues(8);
  CHECK(spec.source == SpectrumSource::Analytic);
  REQUIRE(spec.values.size() == 8);

  // expected composition: coth, pi_0, cot_1, pi_1, cot_2, pi_2, cot_3, pi_3
  const std::vector<double> expected = {
      1.0 / (4 * kRho * kRho),
      -1.0 / (kPi * kPi),
      -1.0 / (4 * kCotRoots[0] * kCotRoots[0]),
      -1.0 / (9 * kPi * kPi),
      -1.0 / (4 * kCotRoots[1] * kCotRoots[1]),
      -1.0 / (25 * kPi * kPi),
      -1.0 / (4 * kCotRoots[2] * kCotRoots[2]),
      -1.0 / (49 * kPi * kPi)};
  for (std::size_t k = 0; k < 8; ++k) {
    CHECK(spec.values[k] == doctest::Approx(expected[k]).epsilon(0).scale(1).epsilon(1e-12));
    CHECK(spec.error_hint[k] < 1e-12);
  }

  // exactly one positive eigenvalue, and it dominates
  int positives = 0;
  for (double v : spec.values) positives += v > 0 ? 1 : 0;
  CHECK(positives == 1);
  CHECK(spec.values[0] > 0);

  // truncation really truncates
  CHECK(rev2_eigenvalues(3).values.size() == 3);
}

TEST_CASE("merged Re V^2 spectrum matches the discretizer entrywise") {
  auto spec = rev2_eigenvalues(8);
  auto M = assemble({PartSelector::RealPart, 2}, make_grid(1000));
  auto disc = eigenvalues_symmetric(M);
  // discretized values sorted by |.| descending to align with the merge
  auto sorted = disc.values;
  std::sort(sorted.begin(), sorted.end(), [](double a, double b) {
    if (std::abs(a) != std::abs(b)) return std::abs(a) > std::abs(b);
    return a > b;
  });
  REQUIRE(sorted.size() >= 8);
  for (std::size_t k = 0; k < 8; ++k) {
    CHECK(sorted[k] == doctest::Approx(spec.values[k]).epsilon(1e-2));
  }
}

TEST_CASE("family constructors by kind") {
  auto coth = make_family(EigenFamilyKind::ReV2_coth, 5);
  REQUIRE(coth.values.size() == 1);
  CHECK(coth.values[0] == doctest::Approx(1.0 / (4 * kRho * kRho)).epsilon(1e-12));

  auto pi_family = make_family(EigenFamilyKind::ReV2_odd_pi, 3);
  REQUIRE(pi_family.values.size() == 3);
  CHECK(pi_family.values[0] == doctest::Approx(-1.0 / (kPi * kPi)).epsilon(1e-15));
  CHECK(pi_family.values[2] ==
        doctest::Approx(-1.0 / (25 * kPi * kPi)).epsilon(1e-15));

  auto cot_family = make_family(EigenFamilyKind::ReV2_cot, 2);
  REQUIRE(cot_family.values.size() == 2);
  CHECK(cot_family.values[0] ==
        doctest::Approx(-1.0 / (4 * kCotRoots[0] * kCotRoots[0])).epsilon(1e-12));

  auto as_spec = to_spectrum(pi_family);
  CHECK(as_spec.source == SpectrumSource::Analytic);
  CHECK(as_spec.values == pi_family.values);
}
