#include "volterra/numerical_range.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include "volterra/analytic_spectra.hpp"
#include "volterra/errors.hpp"
#include "volterra/pencil_spectra.hpp"

namespace volterra {

namespace {

constexpr double kPi = std::numbers::pi;

// (1 - cos t)/t^2 without cancellation: equals sinc(t/2)^2 / 2.
double curve_x(double t) {
  const double s = std::sin(0.5 * t) / (0.5 * t);
  return 0.5 * s * s;
}

// (t - sin t)/t^2, with a series fallback where the subtraction cancels.
double curve_y(double t) {
  if (std::abs(t) < 1e-2) {
    const double t2 = t * t;
    return t / 6.0 * (1.0 - t2 / 20.0 * (1.0 - t2 / 42.0));
  }
  return (t - std::sin(t)) / (t * t);
}

Interval hull_with_zero(const std::vector<double>& values) {
  double lo = 0.0;
  double hi = 0.0;
  for (double v : values) {
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }
  return {lo, hi};
}

}  // namespace

std::vector<CurveSample> brown_curve(int samples) {
  require(samples >= 2, "brown_curve: need at least 2 samples");
  std::vector<CurveSample> out;
  out.reserve(static_cast<std::size_t>(samples) + 1);
  for (int k = 1; k <= samples; ++k) {
    const double t = 2.0 * kPi * k / samples;
    const double x = curve_x(t);
    const double y = curve_y(t);
    out.push_back({t, {x, y}, {x, -y}});
  }
  out.push_back({0.0, {0.5, 0.0}, {0.5, 0.0}});
  return out;
}

Interval range_interval(PartSelector part, PowerIndex n, int m) {
  require(part == PartSelector::RealPart || part == PartSelector::ImagPart,
          "range_interval: part must be RealPart or ImagPart");
  require(n >= 1, "range_interval: power must be >= 1");

  const bool odd = n % 2 == 1;
  if (part == PartSelector::RealPart) {
    if (odd && n <= tol::kPencilPowerCap) {
      return hull_with_zero(pencil_eigenvalues(build_pencil(n)).values);
    }
    if (n == 2) {
      return hull_with_zero(rev2_eigenvalues(tol::kRangeAnalyticCount).values);
    }
    auto spec = eigenvalues_symmetric(assemble({part, n}, make_grid(m)));
    return hull_with_zero(spec.values);
  }

  // imaginary part: exactly symmetric about 0
  double top = 0.0;
  if (!odd && n <= tol::kPencilPowerCap) {
    for (double v : pencil_eigenvalues(build_pencil(n)).values) {
      top = std::max(top, std::abs(v));
    }
  } else if (n == 1) {
    top = 1.0 / kPi;
  } else {
    top = op_norm(assemble({part, n}, make_grid(m)));
  }
  return {-top, top};
}

double rayleigh_probe_re(PowerIndex n) {
  require(n >= 1, "rayleigh_probe_re: power must be >= 1");
  const PolyCoeffs f{{1.0, -2.0}};
  const PolyCoeffs vf = apply_power_to_poly(PartSelector::FullV, n, f);
  const PolyCoeffs af = apply_power_to_poly(PartSelector::FullVAdjoint, n, f);
  const PolyCoeffs re_f = poly_scale(poly_add(vf, af), 0.5);
  return poly_inner(re_f, f) / poly_inner(f, f);
}

double rayleigh_probe_re_conservative(PowerIndex n) {
  require(n >= 1, "rayleigh_probe_re: power must be >= 1");
  return -(n - 1.0) / (3.0 * (n + 3.0) * factorial(n + 1));
}

bool hull_contains(Point p, double tol, int samples) {
  require(samples >= tol::kHullMinSamples,
          "hull_contains: polygon resolution too low");
  require(tol >= 0, "hull_contains: tol must be nonnegative");
  const auto curve = brown_curve(samples);

  // counterclockwise polygon: right endpoint (1/2, 0), upper branch out
  // to (0, 1/(2pi)), straight down the segment to (0, -1/(2pi)) (an edge
  // between consecutive vertices), then the lower branch back
  std::vector<Point> poly;
  poly.reserve(2 * curve.size());
  poly.push_back(curve.back().upper);  // (1/2, 0)
  for (int k = 0; k + 1 < static_cast<int>(curve.size()); ++k) {
    poly.push_back(curve[static_cast<std::size_t>(k)].upper);
  }
  for (int k = static_cast<int>(curve.size()) - 2; k >= 0; --k) {
    poly.push_back(curve[static_cast<std::size_t>(k)].lower);
  }

  for (std::size_t i = 0; i < poly.size(); ++i) {
    const Point& a = poly[i];
    const Point& b = poly[(i + 1) % poly.size()];
    const double ex = b.x - a.x;
    const double ey = b.y - a.y;
    const double cross = ex * (p.y - a.y) - ey * (p.x - a.x);
    if (cross < -tol * std::hypot(ex, ey)) return false;
  }
  return true;
}

std::vector<Point> rayleigh_samples_v(int count, int m, std::uint64_t seed) {
  require(count >= 1, "rayleigh_samples_v: count must be >= 1");
  const GridSpec grid = make_grid(m);
  const double h = grid.h();
  Eigen::MatrixXd G = assemble({PartSelector::FullV, 1}, grid).entries;
  G.diagonal().array() += 0.5 * h;

  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<Point> out;
  out.reserve(static_cast<std::size_t>(count));
  Eigen::VectorXcd v(m);
  for (int s = 0; s < count; ++s) {
    for (int i = 0; i < m; ++i) {
      v(i) = std::complex<double>(gauss(rng), gauss(rng));
    }
    const std::complex<double> num = v.dot(G * v);  // conjugate-linear in v
    const double den = v.squaredNorm();
    out.push_back({num.real() / den, num.imag() / den});
  }
  return out;
}

}  // namespace volterra
