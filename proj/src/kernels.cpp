#include "volterra/kernels.hpp"

#include <array>
#include <cmath>
#include <cstddef>

namespace volterra {

namespace {

std::array<double, tol::kFactorialCap + 1> build_factorials() {
  std::array<double, tol::kFactorialCap + 1> f{};
  f[0] = 1.0;
  for (int k = 1; k <= tol::kFactorialCap; ++k) f[k] = f[k - 1] * k;
  return f;
}

void check_power(PowerIndex n, int cap, const char* what) {
  require(n >= 1, std::string(what) + ": power must be >= 1");
  if (n > cap) {
    throw CapacityExceeded(std::string(what) + ": power " + std::to_string(n) +
                           " exceeds cap " + std::to_string(cap));
  }
}

}  // namespace

double factorial(int k) {
  static const auto table = build_factorials();
  require(k >= 0, "factorial: negative argument");
  if (k > tol::kFactorialCap) {
    throw CapacityExceeded("factorial: " + std::to_string(k) + " exceeds table");
  }
  return table[static_cast<std::size_t>(k)];
}

double binomial(int n, int k) {
  require(n >= 0 && k >= 0 && k <= n, "binomial: need 0 <= k <= n");
  return factorial(n) / (factorial(k) * factorial(n - k));
}

int PolyCoeffs::degree() const {
  for (int j = static_cast<int>(c.size()) - 1; j >= 0; --j) {
    if (c[static_cast<std::size_t>(j)] != 0.0) return j;
  }
  return -1;
}

double PolyCoeffs::eval(double x) const {
  double acc = 0.0;
  for (int j = static_cast<int>(c.size()) - 1; j >= 0; --j) {
    acc = acc * x + c[static_cast<std::size_t>(j)];
  }
  return acc;
}

PolyCoeffs trim(const PolyCoeffs& p) {
  PolyCoeffs out = p;
  out.c.resize(static_cast<std::size_t>(p.degree() + 1));
  return out;
}

PolyCoeffs poly_add(const PolyCoeffs& p, const PolyCoeffs& q) {
  PolyCoeffs out;
  out.c.resize(std::max(p.c.size(), q.c.size()), 0.0);
  for (std::size_t j = 0; j < p.c.size(); ++j) out.c[j] += p.c[j];
  for (std::size_t j = 0; j < q.c.size(); ++j) out.c[j] += q.c[j];
  return out;
}

PolyCoeffs poly_scale(const PolyCoeffs& p, double s) {
  PolyCoeffs out = p;
  for (double& cj : out.c) cj *= s;
  return out;
}

double poly_inner(const PolyCoeffs& p, const PolyCoeffs& q) {
  double acc = 0.0;
  for (std::size_t j = 0; j < p.c.size(); ++j) {
    if (p.c[j] == 0.0) continue;
    for (std::size_t k = 0; k < q.c.size(); ++k) {
      acc += p.c[j] * q.c[k] / static_cast<double>(j + k + 1);
    }
  }
  return acc;
}

double poly_l2_norm(const PolyCoeffs& p) {
  return std::sqrt(std::max(0.0, poly_inner(p, p)));
}

double eval_kernel(const KernelSpec& spec, double x, double t) {
  check_power(spec.power, tol::kKernelPowerCap, "eval_kernel");
  require(x >= 0.0 && x <= 1.0 && t >= 0.0 && t <= 1.0,
          "eval_kernel: arguments must lie in [0,1]");
  const int n = spec.power;
  const double fac = factorial(n - 1);
  switch (spec.part) {
    case PartSelector::FullV:
      return t < x ? std::pow(x - t, n - 1) / fac : 0.0;
    case PartSelector::FullVAdjoint:
      return t > x ? std::pow(t - x, n - 1) / fac : 0.0;
    case PartSelector::RealPart:
      return std::pow(std::abs(x - t), n - 1) / (2.0 * fac);
    case PartSelector::ImagPart: {
      if (x == t) return 0.0;
      const double s = x > t ? 1.0 : -1.0;
      return s * std::pow(std::abs(x - t), n - 1) / (2.0 * fac);
    }
  }
  throw InternalError("eval_kernel: unreachable part selector");
}

PolyCoeffs apply_power_to_poly(PartSelector part, PowerIndex n, const PolyCoeffs& p) {
  check_power(n, tol::kKernelPowerCap, "apply_power_to_poly");
  require(part == PartSelector::FullV || part == PartSelector::FullVAdjoint,
          "apply_power_to_poly: part must be FullV or FullVAdjoint");
  require(!p.c.empty(), "apply_power_to_poly: empty polynomial");
  const int d = static_cast<int>(p.c.size()) - 1;
  if (d + n > tol::kFactorialCap) {
    throw CapacityExceeded("apply_power_to_poly: degree " + std::to_string(d) +
                           " plus power " + std::to_string(n) +
                           " exceeds factorial table");
  }

  PolyCoeffs out;
  out.c.assign(static_cast<std::size_t>(d + n + 1), 0.0);

  if (part == PartSelector::FullV) {
    // x^j -> (j! / (j+n)!) x^{j+n}
    for (int j = 0; j <= d; ++j) {
      const double cj = p.c[static_cast<std::size_t>(j)];
      if (cj == 0.0) continue;
      out.c[static_cast<std::size_t>(j + n)] += cj * factorial(j) / factorial(j + n);
    }
    return out;
  }

  // Adjoint: substituting u = t - x in \int_x^1 (t-x)^{n-1} t^j dt / (n-1)!
  // gives sum_i C(j,i) x^{j-i} (1-x)^{n+i} / ((n-1)!(n+i)); expand the
  // (1-x)^{n+i} factor binomially.
  const double fac = factorial(n - 1);
  for (int j = 0; j <= d; ++j) {
    const double cj = p.c[static_cast<std::size_t>(j)];
    if (cj == 0.0) continue;
    for (int i = 0; i <= j; ++i) {
      const double w = cj * binomial(j, i) / (fac * (n + i));
      for (int r = 0; r <= n + i; ++r) {
        const double sgn = (r % 2 == 0) ? 1.0 : -1.0;
        out.c[static_cast<std::size_t>(j - i + r)] += w * sgn * binomial(n + i, r);
      }
    }
  }
  return out;
}

}  // namespace volterra
