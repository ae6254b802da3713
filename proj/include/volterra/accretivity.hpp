#pragma once

#include <Eigen/Dense>
#include <optional>
#include <utility>

#include "volterra/discretizer.hpp"

namespace volterra {

// Coefficients of the operator polynomial a V + b V^2.
struct QuadCoeffs {
  double a;
  double b;
};

// Trial-function families that exhibit a negative Rayleigh quotient when
// the quadratic accretivity criterion fails.
//
//   XMinusHalf  f(x) = x - 1/2. Mean zero, so the rank-one averaging term
//               drops out and the quadratic form reduces to the skew term
//               alone; it is negative exactly when b > 0.
//   Spike       f_k = k (1_[0,1/k] + 1_[1-1/k,1]), two spikes of unit mass
//               at the interval ends. The averaging term stays at 1 while
//               the skew term decays like 2/(3k), so for large enough k the
//               form follows the sign of 2a + b.
enum class WitnessKind { XMinusHalf, Spike };

struct AccretivityWitness {
  WitnessKind kind;
  int spike_index;  // the k of the Spike family; 0 for XMinusHalf
};

// Outcome of the accretivity test for a V + b V^2. predicate is the exact
// criterion; min_eig_certificate is filled by the numeric route with the
// smallest eigenvalue of the discretized symmetric part; a witness is
// present whenever predicate is false.
struct AccretivityVerdict {
  QuadCoeffs coeffs;
  bool predicate;
  std::optional<double> min_eig_certificate;
  std::optional<AccretivityWitness> witness;
};

// Exact criterion: a V + b V^2 is accretive iff b <= 0 and 2a + b >= 0.
// Non-finite coefficients throw std::invalid_argument.
bool is_accretive_quadratic(const QuadCoeffs& q);

// Midpoint matrix for V with the diagonal cell halved to h/2. The halving
// makes the symmetric part exactly the rank-one matrix (h/2) * ones, the
// discrete image of the averaging operator f -> (1/2) \int f; the strict
// triangle would instead leak an O(h) negative eigenvalue into every
// certificate. With R = (h/2) ones and S the skew part, R^2 = R/2 holds
// exactly, which is what keeps the decomposition identity below exact.
Eigen::MatrixXd discretized_v_matrix(int m);

// V_h and V_h^2 for one grid, precomputed once and shared across many
// (a, b) samples (the matrix product is the only expensive ingredient).
struct QuadraticModel {
  GridSpec grid;
  Eigen::MatrixXd v;
  Eigen::MatrixXd v2;
};

// Requires 100 <= m <= kGridCap; the lower limit keeps certificates
// meaningful, the upper one is the discretizer cap.
QuadraticModel make_quadratic_model(int m);

// Symmetric part (M + M^T)/2 of M = a V_h + b V_h^2.
Eigen::MatrixXd sym_quadratic_matrix(const QuadraticModel& model, const QuadCoeffs& q);
Eigen::MatrixXd sym_quadratic_matrix(const QuadCoeffs& q, int m);

// Smallest eigenvalue of the symmetric part, plus the exact predicate and,
// on failure, a witness tag: XMinusHalf for b > 0, otherwise Spike with k
// sized so the decaying skew term cannot mask the deficit 2a + b (capped at
// m/2 by grid resolution). The tag names the certifying family; the actual
// quotient is available through witness_rayleigh.
AccretivityVerdict certify_numeric(const QuadraticModel& model, const QuadCoeffs& q);
AccretivityVerdict certify_numeric(const QuadCoeffs& q, int m);

// Largest singular value of (I + a V_h + b V_h^2)^{-1}, computed as the
// reciprocal of the smallest singular value of the forward matrix (via the
// Gram eigenproblem; all tested points sit far from the squaring's danger
// zone). A numerically singular forward matrix throws NumericalBreakdown.
double resolvent_norm_check(const QuadraticModel& model, const QuadCoeffs& q);
double resolvent_norm_check(const QuadCoeffs& q, int m);

// Splits the quadratic form f^T sym(a V_h + b V_h^2) f into the pair
//
//   ( (2a + b) |R f|^2 ,  -b |S f|^2 )
//
// with R and S the symmetric and skew parts of V_h and plain Euclidean
// norms, so the pair sums to the form itself (exactly in real arithmetic;
// the grid weight cancels between the two conventions). Computed in O(m)
// from running sums, independent of the dense matrix route. f must be
// nonzero; its size must be a valid grid size.
std::pair<double, double> rayleigh_decomposition(const QuadCoeffs& q,
                                                 const Eigen::VectorXd& f);

// Grid samples of the spike pair f_k. Requires k >= 2 and m >= 2k so each
// spike covers at least one node.
Eigen::VectorXd make_spike(int k, int m);

// Grid samples of x - 1/2 (mean-free on the midpoint grid up to roundoff).
Eigen::VectorXd make_mean_free_linear(int m);

// Rayleigh quotient f^T sym(a V_h + b V_h^2) f / f^T f of the witness's
// trial function on an m-point grid.
double witness_rayleigh(const QuadCoeffs& q, const AccretivityWitness& w, int m);

}  // namespace volterra
