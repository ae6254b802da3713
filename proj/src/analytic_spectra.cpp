#include "volterra/analytic_spectra.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>

#include "volterra/errors.hpp"

namespace volterra {

namespace {

constexpr double kPi = std::numbers::pi;

// Bracketed bisection down to kRootBisectWidth, then Newton. The final
// residual must land within a few ulp of the best double can do, which
// near a root t means |g| <~ |g'(t)| * ulp(t).
double bisect_newton(const std::function<double(double)>& g,
                     const std::function<double(double)>& dg, double lo,
                     double hi, const RootSolverConfig& cfg, const char* what) {
  require(cfg.abs_tol > 0, "root solver: abs_tol must be positive");
  double glo = g(lo);
  double ghi = g(hi);
  if (glo == 0.0) return lo;
  if (ghi == 0.0) return hi;
  if ((glo > 0) == (ghi > 0)) {
    throw InternalError(std::string("root solver: bracket failure for ") + what);
  }
  int iters = 0;
  while (hi - lo > tol::kRootBisectWidth && iters < cfg.max_iter) {
    const double mid = 0.5 * (lo + hi);
    const double gm = g(mid);
    if (gm == 0.0) return mid;
    if ((gm > 0) == (glo > 0)) {
      lo = mid;
      glo = gm;
    } else {
      hi = mid;
    }
    ++iters;
  }
  double t = 0.5 * (lo + hi);
  for (int it = 0; it < cfg.max_iter; ++it) {
    const double gt = g(t);
    const double dgt = dg(t);
    if (dgt == 0.0) break;
    const double step = gt / dgt;
    double next = t - step;
    if (next < lo || next > hi) next = 0.5 * (lo + hi);
    const bool done = std::abs(step) <= cfg.abs_tol * std::max(1.0, std::abs(t));
    t = next;
    if (done) break;
  }
  const double eps = std::numeric_limits<double>::epsilon();
  const double guard =
      std::max(cfg.abs_tol, tol::kRootGuardFactor * eps *
                                (1.0 + std::abs(dg(t)) * std::max(1.0, std::abs(t))));
  if (std::abs(g(t)) > guard) {
    throw InternalError(std::string("root solver: did not converge for ") + what);
  }
  return t;
}

void sort_desc_abs(std::vector<double>& v) {
  std::sort(v.begin(), v.end(), [](double a, double b) {
    if (std::abs(a) != std::abs(b)) return std::abs(a) > std::abs(b);
    return a > b;
  });
}

}  // namespace

double solve_coth_eq(const RootSolverConfig& cfg) {
  auto g = [](double t) { return 1.0 / std::tanh(t) - t; };
  auto dg = [](double t) {
    const double csch = 1.0 / std::sinh(t);
    return -csch * csch - 1.0;
  };
  return bisect_newton(g, dg, 0.5, 3.0, cfg, "coth t = t");
}

std::vector<double> solve_cot_family(int count, const RootSolverConfig& cfg) {
  require(count >= 1, "solve_cot_family: count must be >= 1");
  auto g = [](double t) { return std::cos(t) / std::sin(t) + t; };
  auto dg = [](double t) {
    const double csc = 1.0 / std::sin(t);
    return 1.0 - csc * csc;
  };
  std::vector<double> roots;
  roots.reserve(static_cast<std::size_t>(count));
  const double delta = 1e-9;
  for (int k = 0; k < count; ++k) {
    const double lo = k * kPi + kPi / 2 + delta;
    const double hi = (k + 1) * kPi - delta;
    roots.push_back(bisect_newton(g, dg, lo, hi, cfg, "cot t = -t"));
  }
  return roots;
}

EigenFamily make_family(EigenFamilyKind kind, int count,
                        const RootSolverConfig& cfg) {
  require(count >= 1, "make_family: count must be >= 1");
  EigenFamily out;
  out.kind = kind;
  switch (kind) {
    case EigenFamilyKind::ImV_odd_pi: {
      out.index_range = {-count, count - 1};
      for (int k = -count; k < count; ++k) {
        out.values.push_back(1.0 / ((2 * k + 1) * kPi));
      }
      break;
    }
    case EigenFamilyKind::ReV2_coth: {
      out.index_range = {0, 0};
      const double rho = solve_coth_eq(cfg);
      out.values.push_back(1.0 / (4.0 * rho * rho));
      break;
    }
    case EigenFamilyKind::ReV2_cot: {
      out.index_range = {0, count - 1};
      for (double t : solve_cot_family(count, cfg)) {
        out.values.push_back(-1.0 / (4.0 * t * t));
      }
      break;
    }
    case EigenFamilyKind::ReV2_odd_pi: {
      out.index_range = {0, count - 1};
      for (int k = 0; k < count; ++k) {
        const double q = (2 * k + 1) * kPi;
        out.values.push_back(-1.0 / (q * q));
      }
      break;
    }
  }
  sort_desc_abs(out.values);
  return out;
}

EigenFamily imv_eigenvalues(int count) {
  return make_family(EigenFamilyKind::ImV_odd_pi, count);
}

Spectrum rev2_eigenvalues(int count, const RootSolverConfig& cfg) {
  require(count >= 1, "rev2_eigenvalues: count must be >= 1");
  struct Entry {
    double value;
    double residual;
  };
  std::vector<Entry> entries;

  const double rho = solve_coth_eq(cfg);
  entries.push_back({1.0 / (4.0 * rho * rho), std::abs(1.0 / std::tanh(rho) - rho)});

  // count+2 from each unbounded family guarantees the merged prefix of
  // length count is complete (the families interleave strictly)
  for (double t : solve_cot_family(count + 2, cfg)) {
    entries.push_back({-1.0 / (4.0 * t * t), std::abs(std::cos(t) / std::sin(t) + t)});
  }
  for (int k = 0; k < count + 2; ++k) {
    const double q = (2 * k + 1) * kPi;
    entries.push_back({-1.0 / (q * q), 0.0});
  }

  std::sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
    if (std::abs(a.value) != std::abs(b.value))
      return std::abs(a.value) > std::abs(b.value);
    return a.value > b.value;
  });
  entries.resize(static_cast<std::size_t>(count));

  Spectrum out;
  out.source = SpectrumSource::Analytic;
  for (const Entry& e : entries) {
    out.values.push_back(e.value);
    out.error_hint.push_back(e.residual);
  }
  return out;
}

Spectrum to_spectrum(const EigenFamily& family) {
  Spectrum out;
  out.source = SpectrumSource::Analytic;
  out.values = family.values;
  out.error_hint.assign(family.values.size(), 0.0);
  return out;
}

}  // namespace volterra
