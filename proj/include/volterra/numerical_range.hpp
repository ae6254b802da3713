#pragma once

#include <cstdint>
#include <vector>

#include "volterra/discretizer.hpp"
#include "volterra/kernels.hpp"
#include "volterra/tolerances.hpp"

namespace volterra {

struct Interval {
  double lo;
  double hi;  // always >= lo
};

struct Point {
  double x;
  double y;
};

// One boundary sample of the numerical range of V: the curve point at
// parameter t together with its mirror image below the real axis.
//   x(t) = (1 - cos t)/t^2        y(t) = (t - sin t)/t^2
struct CurveSample {
  double t;
  Point upper;  // (x, +y)
  Point lower;  // (x, -y)
};

// Uniform t-grid over (0, 2pi], samples+1 entries: the t -> 0 limit
// (1/2, 0) is appended analytically at the end with t = 0. Both
// coordinates are nonnegative on the whole parameter range.
std::vector<CurveSample> brown_curve(int samples);

// Closed numerical-range interval of Re V^n or Im V^n, as the convex
// hull of the best-available spectrum together with 0:
//   Re, n odd  (n <= 12): pencil route, m unused
//   Re, n = 2          : analytic route (merged families), m unused
//   Im, n even (n <= 12): pencil route, m unused
//   Im, n = 1          : analytic route, m unused
//   everything else    : discretized at grid size m
// Im intervals are exactly symmetric: [-s, s] with s the norm estimate.
Interval range_interval(PartSelector part, PowerIndex n, int m);

// Exact normalized Rayleigh quotient <Re V^n f, f>/||f||^2 for the probe
// function f(x) = 1 - 2x, evaluated by exact polynomial arithmetic. The
// closed form is -3(n-1)/((n+3)(n+1)!).
double rayleigh_probe_re(PowerIndex n);

// The weaker endpoint -(n-1)/(3(n+3)(n+1)!), one ninth of the sharp
// probe value; kept separate because both normalizations circulate.
double rayleigh_probe_re_conservative(PowerIndex n);

// True iff the point lies in the closed region bounded by the curve and
// the vertical segment on the imaginary axis, inflated by tol. The test
// polygon is built from `samples` curve points (at least kHullMinSamples)
// in counterclockwise order; membership means no edge sees the point on
// its outer side beyond tol.
bool hull_contains(Point p, double tol,
                   int samples = tol::kCurveSamplesDefault);

// Exact members of the numerical range of V: complex Rayleigh quotients
// of the step-function Gram matrix of V (strictly-lower h plus h/2 on
// the diagonal) for `count` pseudorandom complex vectors. Every returned
// point belongs to W(V) up to rounding, with no discretization error.
std::vector<Point> rayleigh_samples_v(int count, int m, std::uint64_t seed);

}  // namespace volterra
