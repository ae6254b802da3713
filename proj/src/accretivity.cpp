#include "volterra/accretivity.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "volterra/errors.hpp"
#include "volterra/tolerances.hpp"

namespace volterra {

namespace {

void check_coeffs(const QuadCoeffs& q) {
  require(std::isfinite(q.a) && std::isfinite(q.b),
          "quad coefficients must be finite");
}

// Spike index large enough that the skew term (about 2/(3k) in grid-weighted
// scaling) stays below half the deficit |2a + b|, capped by grid resolution.
int pick_spike_index(const QuadCoeffs& q, int m) {
  const double deficit = -(2.0 * q.a + q.b);
  const int cap = m / 2;
  if (!(deficit > 0.0)) return 2;  // defensive; only reached with a deficit
  const double needed = 4.0 * std::max(0.0, -q.b) / (3.0 * deficit);
  if (needed >= cap) return cap;
  return std::max(2, static_cast<int>(std::ceil(needed)));
}

}  // namespace

bool is_accretive_quadratic(const QuadCoeffs& q) {
  check_coeffs(q);
  return q.b <= 0.0 && 2.0 * q.a + q.b >= 0.0;
}

Eigen::MatrixXd discretized_v_matrix(int m) {
  const GridSpec grid = make_grid(m);
  Eigen::MatrixXd vh = assemble({PartSelector::FullV, 1}, grid).entries;
  vh.diagonal().array() += 0.5 * grid.h();
  return vh;
}

QuadraticModel make_quadratic_model(int m) {
  require(m >= 100, "quadratic model: need m >= 100 for a meaningful certificate");
  QuadraticModel model{make_grid(m), discretized_v_matrix(m), {}};
  model.v2 = model.v * model.v;
  return model;
}

Eigen::MatrixXd sym_quadratic_matrix(const QuadraticModel& model, const QuadCoeffs& q) {
  check_coeffs(q);
  const Eigen::MatrixXd mat = q.a * model.v + q.b * model.v2;
  return 0.5 * (mat + mat.transpose());
}

Eigen::MatrixXd sym_quadratic_matrix(const QuadCoeffs& q, int m) {
  return sym_quadratic_matrix(make_quadratic_model(m), q);
}

AccretivityVerdict certify_numeric(const QuadraticModel& model, const QuadCoeffs& q) {
  const Eigen::MatrixXd sym = sym_quadratic_matrix(model, q);
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(sym, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw NumericalBreakdown("certify_numeric: eigensolver did not converge");

  AccretivityVerdict verdict{q, is_accretive_quadratic(q),
                             solver.eigenvalues().minCoeff(), std::nullopt};
  if (!verdict.predicate) {
    if (q.b > 0.0)
      verdict.witness = AccretivityWitness{WitnessKind::XMinusHalf, 0};
    else
      verdict.witness =
          AccretivityWitness{WitnessKind::Spike, pick_spike_index(q, model.grid.m)};
  }
  return verdict;
}

AccretivityVerdict certify_numeric(const QuadCoeffs& q, int m) {
  return certify_numeric(make_quadratic_model(m), q);
}

double resolvent_norm_check(const QuadraticModel& model, const QuadCoeffs& q) {
  check_coeffs(q);
  const int m = model.grid.m;
  Eigen::MatrixXd fwd = Eigen::MatrixXd::Identity(m, m);
  fwd += q.a * model.v + q.b * model.v2;
  const Eigen::MatrixXd gram = fwd.transpose() * fwd;
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(gram, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success)
    throw NumericalBreakdown("resolvent_norm_check: eigensolver did not converge");
  const double lam_min = solver.eigenvalues().minCoeff();
  const double lam_max = solver.eigenvalues().maxCoeff();
  if (!(lam_min > lam_max * tol::kSingularGramRel))
    throw NumericalBreakdown("resolvent_norm_check: forward matrix is numerically singular");
  return 1.0 / std::sqrt(lam_min);
}

double resolvent_norm_check(const QuadCoeffs& q, int m) {
  return resolvent_norm_check(make_quadratic_model(m), q);
}

std::pair<double, double> rayleigh_decomposition(const QuadCoeffs& q,
                                                 const Eigen::VectorXd& f) {
  check_coeffs(q);
  const GridSpec grid = make_grid(static_cast<int>(f.size()));
  require(f.squaredNorm() > 0.0, "rayleigh_decomposition: f must be nonzero");
  const double h = grid.h();
  const int m = grid.m;

  // |R f|^2 for the rank-one symmetric part R = (h/2) * ones.
  const double s = f.sum();
  const double r_sq = 0.25 * h * h * m * s * s;

  // (S f)_i = (h/2) (sum_{j<i} f_j - sum_{j>i} f_j); two running sums keep
  // each side free of cancellation against the grand total.
  std::vector<double> pre(m);
  double below = 0.0;
  for (int i = 0; i < m; ++i) {
    pre[i] = below;
    below += f(i);
  }
  double above = 0.0;
  double s_sq = 0.0;
  for (int i = m - 1; i >= 0; --i) {
    const double si = 0.5 * h * (pre[i] - above);
    s_sq += si * si;
    above += f(i);
  }
  return {(2.0 * q.a + q.b) * r_sq, -q.b * s_sq};
}

Eigen::VectorXd make_spike(int k, int m) {
  require(k >= 2, "make_spike: need k >= 2 so the spikes do not overlap");
  const GridSpec grid = make_grid(m);
  require(m >= 2 * k, "make_spike: need m >= 2k so each spike covers a node");
  Eigen::VectorXd f = Eigen::VectorXd::Zero(m);
  const double cut = 1.0 / k;
  for (int i = 0; i < m; ++i) {
    const double x = grid.node(i);
    if (x < cut || x > 1.0 - cut) f(i) = k;
  }
  return f;
}

Eigen::VectorXd make_mean_free_linear(int m) {
  const GridSpec grid = make_grid(m);
  Eigen::VectorXd f(m);
  for (int i = 0; i < m; ++i) f(i) = grid.node(i) - 0.5;
  return f;
}

double witness_rayleigh(const QuadCoeffs& q, const AccretivityWitness& w, int m) {
  const Eigen::VectorXd f = w.kind == WitnessKind::XMinusHalf
                                ? make_mean_free_linear(m)
                                : make_spike(w.spike_index, m);
  const auto [re_term, im_term] = rayleigh_decomposition(q, f);
  return (re_term + im_term) / f.squaredNorm();
}

}  // namespace volterra
