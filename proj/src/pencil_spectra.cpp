#include "volterra/pencil_spectra.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

namespace volterra {

namespace {

void check_pencil_power(PowerIndex n) {
  require(n >= 1, "pencil: power must be >= 1");
  if (n > tol::kPencilPowerCap) {
    throw CapacityExceeded("pencil: power " + std::to_string(n) + " exceeds cap " +
                           std::to_string(tol::kPencilPowerCap));
  }
}

struct RawEigs {
  Eigen::VectorXcd values;
  Eigen::MatrixXcd vectors;
  double scale;  // max |mu|
};

RawEigs solve_raw(const PencilPair& p, bool with_vectors) {
  const Eigen::MatrixXd C =
      p.B.triangularView<Eigen::Lower>().solve(p.Aprime);
  Eigen::EigenSolver<Eigen::MatrixXd> solver(C, with_vectors);
  if (solver.info() != Eigen::Success) {
    throw NumericalBreakdown("pencil: eigensolver did not converge");
  }
  RawEigs out;
  out.values = solver.eigenvalues();
  if (with_vectors) out.vectors = solver.eigenvectors();
  out.scale = out.values.cwiseAbs().maxCoeff();
  return out;
}

// Off-axis leakage of a root that should be purely real (odd case) or
// purely imaginary (even case).
double contamination_of(const PencilPair& p, std::complex<double> mu) {
  return p.phase_case == PhaseCase::OddReal ? std::abs(mu.imag())
                                            : std::abs(mu.real());
}

// Real polynomial from a complex eigenvector: rotate the phase so the
// largest coordinate is real and positive, take real parts, and map
// component k to the coefficient of x^{n-1-k}/(n-1-k)!.  The reversal
// comes from the Toeplitz structure of the pencil: the eigenvector lists
// the eigenfunction's Taylor data highest derivative first.  Normalized
// to unit L^2 norm at the end.
PolyCoeffs real_eigen_poly(const Eigen::VectorXcd& v) {
  const int n = static_cast<int>(v.size());
  int imax = 0;
  double best = -1.0;
  for (int j = 0; j < n; ++j) {
    if (std::abs(v(j)) > best) {
      best = std::abs(v(j));
      imax = j;
    }
  }
  const std::complex<double> phase = std::conj(v(imax)) / std::abs(v(imax));
  PolyCoeffs f;
  f.c.resize(static_cast<std::size_t>(n));
  for (int m = 0; m < n; ++m) {
    f.c[static_cast<std::size_t>(m)] = (phase * v(n - 1 - m)).real() / factorial(m);
  }
  const double norm = poly_l2_norm(f);
  if (norm == 0.0) throw NumericalBreakdown("pencil: zero eigenfunction");
  return poly_scale(f, 1.0 / norm);
}

}  // namespace

PencilPair build_pencil(PowerIndex n) {
  check_pencil_power(n);
  PencilPair p;
  p.n = n;
  p.Aprime.resize(n, n);
  p.B.resize(n, n);
  for (int j = 0; j < n; ++j) {
    for (int k = 0; k < n; ++k) {
      p.Aprime(j, k) = 1.0 / factorial(j + n - k);
      p.B(j, k) = j >= k ? 2.0 / factorial(j - k) : 0.0;
    }
  }
  if (n % 2 == 1) {
    p.phase_case = PhaseCase::OddReal;
    p.epsilon = ((n - 1) / 2) % 2 == 0 ? 1 : -1;
  } else {
    p.phase_case = PhaseCase::EvenImag;
    p.epsilon = n % 4 == 2 ? 1 : -1;
  }
  return p;
}

Spectrum pencil_eigenvalues(const PencilPair& p) {
  check_pencil_power(p.n);
  const RawEigs raw = solve_raw(p, false);
  Spectrum out;
  out.source = SpectrumSource::Pencil;
  const double zero_cut = tol::kPencilZeroRel * raw.scale;

  std::vector<std::pair<double, double>> entries;  // (value, contamination)
  int rejected = 0;
  for (int r = 0; r < raw.values.size(); ++r) {
    const std::complex<double> mu = raw.values(r);
    if (std::abs(mu) <= zero_cut) continue;  // infinite-dimensional kernel
    const double bad = contamination_of(p, mu);
    if (bad > tol::kPencilContaminationRel * raw.scale) {
      // conditioning has swamped this root; conjugate partners share the
      // same leakage, so symmetry of the kept set survives
      ++rejected;
      continue;
    }
    if (p.phase_case == PhaseCase::OddReal) {
      entries.emplace_back(mu.real(), bad);
    } else {
      // conjugate pairs of the real solver mirror exactly, so taking the
      // imaginary part of every root yields an exactly symmetric multiset
      entries.emplace_back(mu.imag(), bad);
    }
  }
  if (entries.empty() && rejected > 0) {
    throw NumericalBreakdown("pencil: all " + std::to_string(rejected) +
                             " nonzero roots contaminated for n=" +
                             std::to_string(p.n));
  }
  std::sort(entries.begin(), entries.end(), [](auto a, auto b) {
    if (std::abs(a.first) != std::abs(b.first))
      return std::abs(a.first) > std::abs(b.first);
    return a.first > b.first;
  });
  for (const auto& [value, hint] : entries) {
    out.values.push_back(value);
    out.error_hint.push_back(hint);
  }
  return out;
}

std::vector<ExactEigenpair> pencil_eigenpairs(const PencilPair& p) {
  check_pencil_power(p.n);
  const RawEigs raw = solve_raw(p, true);
  const double zero_cut = tol::kPencilZeroRel * raw.scale;
  const PartSelector part = p.phase_case == PhaseCase::OddReal
                                ? PartSelector::RealPart
                                : PartSelector::ImagPart;

  std::vector<ExactEigenpair> out;
  int rejected = 0;
  for (int r = 0; r < raw.values.size(); ++r) {
    const std::complex<double> mu = raw.values(r);
    if (std::abs(mu) <= zero_cut) continue;
    if (contamination_of(p, mu) > tol::kPencilContaminationRel * raw.scale) {
      ++rejected;
      continue;
    }
    ExactEigenpair pair;
    pair.lambda = p.phase_case == PhaseCase::OddReal ? mu.real() : mu.imag();
    pair.poly = real_eigen_poly(raw.vectors.col(r));
    pair.residual = residual_check(p.n, part, pair.lambda, pair.poly);
    pair.multiplicity = 1;
    out.push_back(std::move(pair));
  }
  if (out.empty() && rejected > 0) {
    throw NumericalBreakdown("pencil: all " + std::to_string(rejected) +
                             " nonzero roots contaminated for n=" +
                             std::to_string(p.n));
  }

  // repeated pencil roots are reported, not deduplicated: flag the cluster
  for (auto& a : out) {
    for (const auto& b : out) {
      if (&a != &b && std::abs(a.lambda - b.lambda) <= 1e-10 * raw.scale) {
        ++a.multiplicity;
      }
    }
  }

  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    if (std::abs(a.lambda) != std::abs(b.lambda))
      return std::abs(a.lambda) > std::abs(b.lambda);
    return a.lambda > b.lambda;
  });
  return out;
}

double residual_check(PowerIndex n, PartSelector part, double lambda,
                      const PolyCoeffs& f) {
  require(part == PartSelector::RealPart || part == PartSelector::ImagPart,
          "residual_check: part must be RealPart or ImagPart");
  require(f.degree() >= 0, "residual_check: zero polynomial");
  const PolyCoeffs vf = apply_power_to_poly(PartSelector::FullV, n, f);
  const PolyCoeffs af = apply_power_to_poly(PartSelector::FullVAdjoint, n, f);

  if (part == PartSelector::RealPart) {
    const PolyCoeffs r =
        poly_add(poly_scale(poly_add(vf, af), 0.5), poly_scale(f, -lambda));
    return poly_l2_norm(r);
  }

  const PolyCoeffs df = poly_scale(poly_add(vf, poly_scale(af, -1.0)), 0.5);
  if (lambda == 0.0) return poly_l2_norm(df);
  const PolyCoeffs g = poly_scale(df, 1.0 / lambda);
  const PolyCoeffs vg = apply_power_to_poly(PartSelector::FullV, n, g);
  const PolyCoeffs ag = apply_power_to_poly(PartSelector::FullVAdjoint, n, g);
  const PolyCoeffs dg = poly_scale(poly_add(vg, poly_scale(ag, -1.0)), 0.5);
  return poly_l2_norm(poly_add(dg, poly_scale(f, lambda)));
}

}  // namespace volterra
