#pragma once

#include <optional>
#include <vector>

#include "volterra/discretizer.hpp"
#include "volterra/kernels.hpp"

namespace volterra {

struct BoundPair {
  double lower;
  double upper;
};

// Norm summary for one (part, n): the exact Hilbert-Schmidt norm, the
// closed-form operator-norm bracket, the exact operator norm when a
// closed form exists, and optionally the discretized estimate.
struct NormReport {
  PowerIndex n;
  PartSelector part;
  double hs_exact;
  double op_lower;
  double op_upper;
  std::optional<double> op_exact;
  std::optional<double> op_discretized;
};

struct ExactOpNorm {
  PartSelector part;
  PowerIndex n;
  double value;
};

// ||V^n||_HS = 1/((n-1)! sqrt(2n(2n-1))). Valid for 1 <= n <= 50.
double hs_vn(PowerIndex n);

// ||Re V^n||_HS = ||Im V^n||_HS = hs_vn(n)/sqrt(2), evaluated as
// 1/((n-1)! sqrt(4n(2n-1))) so that n=1 gives exactly 0.5.
double hs_re_im(PowerIndex n);

// Operator-norm bracket for V^n:
//   1/((n-1)! sqrt((2n+1)(2n-1)))  <=  ||V^n||  <=  hs_vn(n)
BoundPair opnorm_bounds_vn(PowerIndex n);

// Operator-norm bracket for Re V^n:
//   1/(2 sqrt2 (n-1)! sqrt(2n(2n+1)))  <=  ||Re V^n||  <=  hs_re_im(n)
BoundPair opnorm_bounds_re(PowerIndex n);

// Operator-norm bracket for Im V^n: the Re lower bound shrunk by the
// factor (1 - 1/C(2n-2, n-1)) (zero at n=1), same upper bound.
BoundPair opnorm_bounds_im(PowerIndex n);

// Lower bound for ||(Re V^n)^2||_HS:
//   1/(4 ((n-1)!)^2 (2n-1) sqrt(2n(2n+1)))
double hs_sq_re_lower(PowerIndex n);

// ||(Re V^n)^2 - (Im V^n)^2||_HS = 1/(2 (2n-1)! sqrt(2n(4n-1))), which
// equals hs_re_im(2n): the difference of squares collapses to Re V^{2n}.
double hs_sq_diff(PowerIndex n);

// The six known exact operator norms:
//   ||Re V||   = 1/2          ||Im V||   = 1/pi
//   ||Re V^2|| = 1/(4 rho^2)  ||Im V^2|| = sqrt(3)/12
//   ||Re V^3|| = 1/48 + sqrt(5)/80
//   ||Im V^4|| = sqrt(1575 + 84 sqrt(345))/5040
// with rho the root of coth(t) = t.
std::vector<ExactOpNorm> known_exact_opnorms();

// Closed form 1/(n(2n-1)) for the double integral of (x-t)^{2n-2} over
// the unit square.
double double_integral_check(PowerIndex n);

// Midpoint 2D quadrature of the same integral on an m x m grid. The
// integrand depends on x-t only, so the double sum collapses to a single
// sum over diagonals.
double double_integral_quadrature(PowerIndex n, int m);

// Assemble the full report for one part. FullVAdjoint shares every value
// with FullV. op_exact is filled from known_exact_opnorms (plus 2/pi for
// ||V||); op_discretized is computed at grid size m when given.
NormReport make_norm_report(PartSelector part, PowerIndex n,
                            std::optional<int> m = std::nullopt);

}  // namespace volterra
