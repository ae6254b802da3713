#include "volterra/norm_bounds.hpp"

#include <cmath>
#include <numbers>

#include "volterra/analytic_spectra.hpp"
#include "volterra/errors.hpp"
#include "volterra/tolerances.hpp"

namespace volterra {

namespace {

void check_norm_power(PowerIndex n) {
  require(n >= 1, "norms: power must be >= 1");
  if (n > tol::kNormPowerCap) {
    throw CapacityExceeded("norms: power " + std::to_string(n) +
                           " exceeds cap " + std::to_string(tol::kNormPowerCap));
  }
}

}  // namespace

double hs_vn(PowerIndex n) {
  check_norm_power(n);
  return 1.0 / (factorial(n - 1) * std::sqrt(2.0 * n * (2.0 * n - 1)));
}

double hs_re_im(PowerIndex n) {
  check_norm_power(n);
  return 1.0 / (factorial(n - 1) * std::sqrt(4.0 * n * (2.0 * n - 1)));
}

BoundPair opnorm_bounds_vn(PowerIndex n) {
  check_norm_power(n);
  const double lower =
      1.0 / (factorial(n - 1) * std::sqrt((2.0 * n + 1) * (2.0 * n - 1)));
  return {lower, hs_vn(n)};
}

BoundPair opnorm_bounds_re(PowerIndex n) {
  check_norm_power(n);
  const double lower = 1.0 / (2.0 * std::sqrt(2.0) * factorial(n - 1) *
                              std::sqrt(2.0 * n * (2.0 * n + 1)));
  return {lower, hs_re_im(n)};
}

BoundPair opnorm_bounds_im(PowerIndex n) {
  check_norm_power(n);
  const double shrink = 1.0 - 1.0 / binomial(2 * n - 2, n - 1);
  return {opnorm_bounds_re(n).lower * shrink, hs_re_im(n)};
}

double hs_sq_re_lower(PowerIndex n) {
  check_norm_power(n);
  const double fac = factorial(n - 1);
  return 1.0 /
         (4.0 * fac * fac * (2.0 * n - 1) * std::sqrt(2.0 * n * (2.0 * n + 1)));
}

double hs_sq_diff(PowerIndex n) {
  check_norm_power(n);
  require(2 * n <= tol::kFactorialCap, "hs_sq_diff: factorial overflow");
  return 1.0 /
         (2.0 * factorial(2 * n - 1) * std::sqrt(2.0 * n * (4.0 * n - 1)));
}

std::vector<ExactOpNorm> known_exact_opnorms() {
  const double rho = solve_coth_eq();
  const double s3 = std::sqrt(3.0);
  const double s5 = std::sqrt(5.0);
  const double s345 = std::sqrt(345.0);
  return {
      {PartSelector::RealPart, 1, 0.5},
      {PartSelector::ImagPart, 1, 1.0 / std::numbers::pi},
      {PartSelector::RealPart, 2, 1.0 / (4.0 * rho * rho)},
      {PartSelector::ImagPart, 2, s3 / 12.0},
      {PartSelector::RealPart, 3, 1.0 / 48.0 + s5 / 80.0},
      {PartSelector::ImagPart, 4, std::sqrt(1575.0 + 84.0 * s345) / 5040.0},
  };
}

double double_integral_check(PowerIndex n) {
  check_norm_power(n);
  return 1.0 / (n * (2.0 * n - 1));
}

double double_integral_quadrature(PowerIndex n, int m) {
  check_norm_power(n);
  require(m >= 1, "double_integral_quadrature: m must be >= 1");
  const double h = 1.0 / m;
  const int p = 2 * n - 2;
  // sum over node differences d = i - j; (m - |d|) pairs share each one
  double sum = p == 0 ? static_cast<double>(m) : 0.0;  // d = 0 term
  for (int d = 1; d < m; ++d) {
    sum += 2.0 * (m - d) * std::pow(d * h, p);
  }
  return sum * h * h;
}

NormReport make_norm_report(PartSelector part, PowerIndex n,
                            std::optional<int> m) {
  check_norm_power(n);
  NormReport rep;
  rep.n = n;
  rep.part = part;
  const bool full = part == PartSelector::FullV || part == PartSelector::FullVAdjoint;
  if (full) {
    rep.hs_exact = hs_vn(n);
    const BoundPair b = opnorm_bounds_vn(n);
    rep.op_lower = b.lower;
    rep.op_upper = b.upper;
    if (n == 1) rep.op_exact = 2.0 / std::numbers::pi;
  } else {
    rep.hs_exact = hs_re_im(n);
    const BoundPair b = part == PartSelector::RealPart ? opnorm_bounds_re(n)
                                                       : opnorm_bounds_im(n);
    rep.op_lower = b.lower;
    rep.op_upper = b.upper;
    for (const ExactOpNorm& e : known_exact_opnorms()) {
      if (e.part == part && e.n == n) rep.op_exact = e.value;
    }
  }
  if (rep.op_lower > rep.op_upper) {
    throw InternalError("norms: bound pair inverted");
  }
  if (rep.op_exact &&
      (*rep.op_exact < rep.op_lower - tol::kExactInBoundsTol ||
       *rep.op_exact > rep.op_upper + tol::kExactInBoundsTol)) {
    throw InternalError("norms: exact value escapes its bounds");
  }
  if (m) {
    rep.op_discretized = op_norm(assemble({part, n}, make_grid(*m)));
  }
  return rep;
}

}  // namespace volterra
