#include "volterra/verify.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <map>
#include <numbers>
#include <string>
#include <vector>

#include "volterra/accretivity.hpp"
#include "volterra/analytic_spectra.hpp"
#include "volterra/discretizer.hpp"
#include "volterra/errors.hpp"
#include "volterra/kernels.hpp"
#include "volterra/norm_bounds.hpp"
#include "volterra/numerical_range.hpp"
#include "volterra/pencil_spectra.hpp"
#include "volterra/report.hpp"
#include "volterra/tolerances.hpp"

namespace volterra {

namespace {

// Grid sizes and the discretization-tolerance multiplier for one level.
struct Presets {
  int m_cross;      // spectral cross-validation and HS comparisons
  int m_norms;      // norm sandwiches, squared parts, symmetry checks
  int m_rayleigh;   // Rayleigh sample grid for the range criterion
  int m_sweep;      // accretivity sweep and resolvent grid
  int m_quad;       // 2D quadrature resolution
  double disc;      // multiplier applied to discretization tolerances only
};

Presets presets_for(VerifyLevel level) {
  switch (level) {
    case VerifyLevel::Fast:
      return {500, 500, 500, 500, tol::kDoubleIntGrid, 1.0};
    case VerifyLevel::Acceptance:
      return {1000, 500, tol::kRayleighGrid, tol::kAccretiveGrid,
              tol::kDoubleIntGrid, 1.0};
    case VerifyLevel::Full:
      return {2000, 2000, 1000, 1000, 2 * tol::kDoubleIntGrid, 0.5};
  }
  throw InternalError("verify: unknown level");
}

std::string cname(int criterion, const std::string& rest) {
  const std::string num = criterion < 10 ? "0" + std::to_string(criterion)
                                         : std::to_string(criterion);
  return "c" + num + "-" + rest;
}

std::string nsuf(int n) { return "-n" + std::to_string(n); }

// 1. The four smallest pencils reproduce the closed-form spectra.
void criterion_pencil_values(ReportDoc& doc) {
  const double s3 = std::sqrt(3.0);
  const double s5 = std::sqrt(5.0);
  const double hi4 = std::sqrt(1575.0 + 84.0 * std::sqrt(345.0)) / 5040.0;
  const double lo4 = std::sqrt(1575.0 - 84.0 * std::sqrt(345.0)) / 5040.0;
  const std::vector<std::vector<double>> expected = {
      {0.5},
      {s3 / 12.0, -s3 / 12.0},
      {1.0 / 48.0 + s5 / 80.0, -1.0 / 24.0, 1.0 / 48.0 - s5 / 80.0},
      {hi4, -hi4, lo4, -lo4}};
  for (int n = 1; n <= 4; ++n) {
    const Spectrum sp = pencil_eigenvalues(build_pencil(n));
    const auto& want = expected[n - 1];
    add_abs_check(doc, cname(1, "pencil" + nsuf(n) + "-count"),
                  static_cast<double>(want.size()),
                  static_cast<double>(sp.values.size()), 0.0);
    for (std::size_t i = 0; i < want.size() && i < sp.values.size(); ++i)
      add_abs_check(doc,
                    cname(1, "pencil" + nsuf(n) + "-value" + std::to_string(i)),
                    want[i], sp.values[i], tol::kPencilClosedFormAbs);
  }
}

// 2. At most n nonzero eigenvalues, and exact-polynomial residuals.
void criterion_pencil_count(ReportDoc& doc) {
  for (int n = 1; n <= 10; ++n) {
    const Spectrum sp = pencil_eigenvalues(build_pencil(n));
    add_upper_check(doc, cname(2, "count" + nsuf(n)), static_cast<double>(n),
                    static_cast<double>(sp.values.size()), 0.0);
  }
  for (int n = 1; n <= 6; ++n) {
    double worst = 0.0;
    for (const ExactEigenpair& p : pencil_eigenpairs(build_pencil(n)))
      worst = std::max(worst, p.residual);
    add_upper_check(doc, cname(2, "residual" + nsuf(n)), tol::kPencilResidual,
                    worst, 0.0);
  }
}

// 3. The coth fixed point and its defining-equation residual.
void criterion_root_solver(ReportDoc& doc) {
  const double rho = solve_coth_eq();
  add_abs_check(doc, cname(3, "coth-root"), 1.199678640, rho,
                tol::kCothRootAbs);
  add_upper_check(doc, cname(3, "coth-residual"), tol::kRootResidual,
                  std::abs(1.0 / std::tanh(rho) - rho), 0.0);
}

// 4. Analytic eigenvalue families against the discretized spectra.
void criterion_cross_validation(ReportDoc& doc, const Presets& p) {
  const GridSpec grid = make_grid(p.m_cross);
  {
    const EigenFamily fam = imv_eigenvalues(5);  // ten values, both signs
    const Spectrum disc =
        eigenvalues_antisymmetric(assemble({PartSelector::ImagPart, 1}, grid));
    for (int i = 0; i < 10; ++i)
      add_rel_check(doc, cname(4, "imv-top" + std::to_string(i)),
                    fam.values[i], disc.values[i],
                    tol::kCrossImVRel * p.disc);
  }
  {
    const Spectrum merged = rev2_eigenvalues(8);
    const Spectrum disc =
        eigenvalues_symmetric(assemble({PartSelector::RealPart, 2}, grid));
    for (int i = 0; i < 8; ++i)
      add_rel_check(doc, cname(4, "rev2-top" + std::to_string(i)),
                    merged.values[i], disc.values[i],
                    tol::kCrossReV2Rel * p.disc);
  }
}

// 5. Hilbert-Schmidt closed forms: the 1/sqrt(2) ratio, the exact n=1
// value, and agreement with the discretized Frobenius norms.
void criterion_hs_identities(ReportDoc& doc, const Presets& p) {
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  for (int n = 1; n <= 20; ++n)
    add_abs_check(doc, cname(5, "hs-ratio" + nsuf(n)), inv_sqrt2,
                  hs_re_im(n) / hs_vn(n), tol::kHsRatioTol);
  add_abs_check(doc, cname(5, "hs-half-exact"), 0.5, hs_re_im(1), 0.0);

  const GridSpec grid = make_grid(p.m_cross);
  for (int n = 1; n <= 6; ++n) {
    add_rel_check(doc, cname(5, "hs-disc-v" + nsuf(n)), hs_vn(n),
                  hs_norm(assemble({PartSelector::FullV, n}, grid)),
                  tol::kHsDiscRel * p.disc);
    add_rel_check(doc, cname(5, "hs-disc-re" + nsuf(n)), hs_re_im(n),
                  hs_norm(assemble({PartSelector::RealPart, n}, grid)),
                  tol::kHsDiscRel * p.disc);
    add_rel_check(doc, cname(5, "hs-disc-im" + nsuf(n)), hs_re_im(n),
                  hs_norm(assemble({PartSelector::ImagPart, n}, grid)),
                  tol::kHsDiscRel * p.disc);
  }
}

const char* part_tag(PartSelector part) {
  switch (part) {
    case PartSelector::FullV:
    case PartSelector::FullVAdjoint:
      return "v";
    case PartSelector::RealPart:
      return "re";
    case PartSelector::ImagPart:
      return "im";
  }
  return "?";
}

// 6. Discretized operator norms inside the closed-form brackets, and the
// known exact values inside the brackets and near the discretization.
void criterion_sandwiches(ReportDoc& doc, const Presets& p) {
  std::map<std::pair<int, int>, NormReport> computed;
  for (int n = 1; n <= 8; ++n)
    for (PartSelector part : {PartSelector::FullV, PartSelector::RealPart,
                              PartSelector::ImagPart}) {
      const NormReport rep = make_norm_report(part, n, p.m_norms);
      const double disc = *rep.op_discretized;
      const double slack =
          tol::kSandwichSlack * p.disc * std::max(1.0, rep.op_upper);
      const std::string base =
          std::string("sandwich-") + part_tag(part) + nsuf(n);
      add_lower_check(doc, cname(6, base + "-lower"), rep.op_lower, disc,
                      slack);
      add_upper_check(doc, cname(6, base + "-upper"), rep.op_upper, disc,
                      slack);
      computed.emplace(std::make_pair(static_cast<int>(part), n), rep);
    }
  for (const ExactOpNorm& e : known_exact_opnorms()) {
    const NormReport& rep =
        computed.at(std::make_pair(static_cast<int>(e.part), e.n));
    const std::string base = std::string("exact-") + part_tag(e.part) + nsuf(e.n);
    add_lower_check(doc, cname(6, base + "-above-lower"), rep.op_lower,
                    e.value, tol::kExactInBoundsTol);
    add_upper_check(doc, cname(6, base + "-below-upper"), rep.op_upper,
                    e.value, tol::kExactInBoundsTol);
    add_rel_check(doc, cname(6, base + "-vs-disc"), e.value,
                  *rep.op_discretized, tol::kExactVsDiscRel * p.disc);
  }
}

// 7. Difference-of-squares collapse and the squared-part Frobenius bound.
void criterion_squared_parts(ReportDoc& doc, const Presets& p) {
  for (int n = 1; n <= 6; ++n)
    add_abs_check(doc, cname(7, "sq-diff-collapse" + nsuf(n)), hs_re_im(2 * n),
                  hs_sq_diff(n), tol::kSqIdentityTol);
  const GridSpec grid = make_grid(p.m_norms);
  for (int n = 1; n <= 6; ++n) {
    const Eigen::MatrixXd A =
        assemble({PartSelector::RealPart, n}, grid).entries;
    const double frob = (A * A).norm();
    const double bound = hs_sq_re_lower(n);
    add_lower_check(doc, cname(7, "sq-frobenius" + nsuf(n)), bound, frob,
                    tol::kSqLowerSlack * p.disc * bound);
  }
}

// 8. Skew spectra are exactly sign-symmetric; the top-magnitude eigenvalue
// of every symmetric part is positive (nonnegative kernel).
void criterion_symmetry(ReportDoc& doc, const Presets& p) {
  const GridSpec grid = make_grid(p.m_norms);
  for (int n = 1; n <= 8; ++n) {
    const Spectrum im =
        eigenvalues_antisymmetric(assemble({PartSelector::ImagPart, n}, grid));
    std::vector<double> sorted = im.values;
    std::sort(sorted.begin(), sorted.end());
    double asym = 0.0;
    for (std::size_t i = 0; i < sorted.size(); ++i)
      asym = std::max(asym,
                      std::abs(sorted[i] + sorted[sorted.size() - 1 - i]));
    add_abs_check(doc, cname(8, "im-pairing" + nsuf(n)), 0.0, asym, 0.0);

    const Spectrum re =
        eigenvalues_symmetric(assemble({PartSelector::RealPart, n}, grid));
    add_lower_check(doc, cname(8, "re-top-positive" + nsuf(n)), 0.0,
                    re.values[0], 0.0);
  }
}

// 9. Range intervals against their closed forms, the Rayleigh cloud inside
// the inflated boundary region, and the linear-probe value.
void criterion_range(ReportDoc& doc, const Presets& p) {
  const double pi = std::numbers::pi;
  const double rho = solve_coth_eq();
  const double s3 = std::sqrt(3.0);
  const double s5 = std::sqrt(5.0);
  const double im4 = std::sqrt(1575.0 + 84.0 * std::sqrt(345.0)) / 5040.0;
  struct Cell {
    PartSelector part;
    int n;
    double lo;
    double hi;
  };
  const Cell cells[] = {
      {PartSelector::RealPart, 1, 0.0, 0.5},
      {PartSelector::ImagPart, 1, -1.0 / pi, 1.0 / pi},
      {PartSelector::RealPart, 2, -1.0 / (pi * pi),
       1.0 / (4.0 * rho * rho)},
      {PartSelector::ImagPart, 2, -s3 / 12.0, s3 / 12.0},
      {PartSelector::RealPart, 3, -1.0 / 24.0, 1.0 / 48.0 + s5 / 80.0},
      {PartSelector::ImagPart, 4, -im4, im4},
  };
  for (const Cell& c : cells) {
    const Interval iv = range_interval(c.part, c.n, p.m_rayleigh);
    const std::string base =
        std::string("interval-") + part_tag(c.part) + nsuf(c.n);
    add_abs_check(doc, cname(9, base + "-lo"), c.lo, iv.lo,
                  tol::kIntervalClosedFormAbs);
    add_abs_check(doc, cname(9, base + "-hi"), c.hi, iv.hi,
                  tol::kIntervalClosedFormAbs);
  }

  const std::vector<Point> pts = rayleigh_samples_v(
      tol::kRayleighSampleCount, p.m_rayleigh, tol::kRngSeed);
  int inside = 0;
  for (const Point& pt : pts)
    if (hull_contains(pt, tol::kRayleighHullTol)) ++inside;
  add_abs_check(doc, cname(9, "boundary-membership"),
                static_cast<double>(pts.size()), static_cast<double>(inside),
                0.0);

  for (int n = 1; n <= 8; ++n) {
    const double probe = rayleigh_probe_re(n);
    const double closed = -3.0 * (n - 1) / ((n + 3.0) * factorial(n + 1));
    add_abs_check(doc, cname(9, "probe" + nsuf(n)), closed, probe,
                  tol::kProbeAbs);
    add_upper_check(doc, cname(9, "probe-endpoint" + nsuf(n)),
                    rayleigh_probe_re_conservative(n), probe, 0.0);
  }
}

// 10. Predicate/certificate agreement on the coefficient sweep, the two
// counterexample witnesses, and the resolvent contraction on the wedge.
void criterion_accretivity(ReportDoc& doc, const Presets& p) {
  const QuadraticModel model = make_quadratic_model(p.m_sweep);

  int tested = 0;
  int agreeing = 0;
  for (int ia = 0; ia <= 8; ++ia)
    for (int ib = 0; ib <= 8; ++ib) {
      const double a = -2.0 + 0.5 * ia;
      const double b = -2.0 + 0.5 * ib;
      if (std::abs(b) < tol::kAccretiveBoundaryBand ||
          std::abs(2.0 * a + b) / std::sqrt(5.0) < tol::kAccretiveBoundaryBand)
        continue;
      ++tested;
      const AccretivityVerdict v = certify_numeric(model, {a, b});
      const double eig = *v.min_eig_certificate;
      const bool agree = v.predicate ? eig >= -tol::kAccretiveSlack
                                     : eig < -tol::kAccretiveSlack;
      if (agree) ++agreeing;
    }
  add_abs_check(doc, cname(10, "sweep-agreement"),
                static_cast<double>(tested), static_cast<double>(agreeing),
                0.0);

  const AccretivityVerdict vb = certify_numeric(model, {0.0, 1.0});
  const AccretivityVerdict vs = certify_numeric(model, {0.0, -1.0});
  const double kinds =
      (vb.witness && vb.witness->kind == WitnessKind::XMinusHalf ? 1.0 : 0.0) +
      (vs.witness && vs.witness->kind == WitnessKind::Spike ? 1.0 : 0.0);
  add_abs_check(doc, cname(10, "witness-kinds"), 2.0, kinds, 0.0);
  if (vb.witness)
    add_upper_check(doc, cname(10, "witness-mean-free"),
                    -tol::kAccretiveSlack,
                    witness_rayleigh({0.0, 1.0}, *vb.witness, p.m_sweep), 0.0);
  if (vs.witness)
    add_upper_check(doc, cname(10, "witness-spike"), -tol::kAccretiveSlack,
                    witness_rayleigh({0.0, -1.0}, *vs.witness, p.m_sweep),
                    0.0);

  double worst = 0.0;
  for (double b : {0.0, -0.5, -1.0, -1.5, -2.0})
    for (double t : {0.0, 0.5, 1.5, 3.0})
      worst = std::max(worst,
                       resolvent_norm_check(model, {-b / 2.0 + t, b}));
  add_upper_check(doc, cname(10, "resolvent-wedge-max"), 1.0, worst,
                  tol::kResolventSlack);
}

// 11. Midpoint quadrature of the even-power kernel double integral.
void criterion_double_integral(ReportDoc& doc, const Presets& p) {
  for (int n = 1; n <= 6; ++n)
    add_rel_check(doc, cname(11, "double-integral" + nsuf(n)),
                  double_integral_check(n),
                  double_integral_quadrature(n, p.m_quad),
                  tol::kDoubleIntRel * p.disc);
}

const char* kCriterionTitles[kCriteriaCount] = {
    "pencil closed-form eigenvalues",
    "pencil count and eigenpair residuals",
    "transcendental root solver",
    "analytic vs discretized spectra",
    "hilbert-schmidt identities",
    "operator-norm bound sandwiches",
    "squared-part norm chain",
    "spectrum symmetry and positivity",
    "numerical-range intervals and samples",
    "quadratic accretivity certification",
    "kernel double-integral quadrature",
};

}  // namespace

const char* verify_level_name(VerifyLevel level) {
  switch (level) {
    case VerifyLevel::Fast:
      return "fast";
    case VerifyLevel::Acceptance:
      return "acceptance";
    case VerifyLevel::Full:
      return "full";
  }
  return "?";
}

VerifyLevel parse_verify_level(const std::string& token) {
  if (token == "fast") return VerifyLevel::Fast;
  if (token == "full") return VerifyLevel::Full;
  throw UsageError("verify: level must be fast or full");
}

ReportDoc run_verification(VerifyLevel level) {
  const Presets p = presets_for(level);
  ReportDoc doc;
  doc.command = "verify";
  add_input(doc, "level", verify_level_name(level));
  add_input(doc, "m_cross", std::to_string(p.m_cross));
  add_input(doc, "m_norms", std::to_string(p.m_norms));
  add_input(doc, "m_rayleigh", std::to_string(p.m_rayleigh));
  add_input(doc, "m_sweep", std::to_string(p.m_sweep));
  add_input(doc, "m_quad", std::to_string(p.m_quad));

  criterion_pencil_values(doc);
  criterion_pencil_count(doc);
  criterion_root_solver(doc);
  criterion_cross_validation(doc, p);
  criterion_hs_identities(doc, p);
  criterion_sandwiches(doc, p);
  criterion_squared_parts(doc, p);
  criterion_symmetry(doc, p);
  criterion_range(doc, p);
  criterion_accretivity(doc, p);
  criterion_double_integral(doc, p);
  return doc;
}

std::vector<CriterionSummary> summarize_criteria(const ReportDoc& doc) {
  std::vector<CriterionSummary> out(kCriteriaCount + 1);
  out[0] = {0, "", 0, 0};
  for (int i = 1; i <= kCriteriaCount; ++i)
    out[i] = {i, kCriterionTitles[i - 1], 0, 0};
  for (const CheckRecord& c : doc.checks) {
    int idx = 0;
    if (c.name.size() > 4 && c.name[0] == 'c' && c.name[3] == '-' &&
        std::isdigit(static_cast<unsigned char>(c.name[1])) &&
        std::isdigit(static_cast<unsigned char>(c.name[2]))) {
      const int parsed = (c.name[1] - '0') * 10 + (c.name[2] - '0');
      if (parsed >= 1 && parsed <= kCriteriaCount) idx = parsed;
    }
    ++out[idx].checks;
    if (!c.pass) ++out[idx].failures;
  }
  if (out[0].checks == 0) out.erase(out.begin());
  return out;
}

}  // namespace volterra
