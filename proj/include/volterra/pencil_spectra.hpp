#pragma once

#include <Eigen/Dense>
#include <vector>

#include "volterra/discretizer.hpp"
#include "volterra/kernels.hpp"

namespace volterra {

// Scalar phase i^{n-1} attached to the pencil, kept as a case tag so both
// matrices stay real: for odd n, i^{n-1} = epsilon; for even n,
// i^{n-1} = epsilon * i (epsilon = +/-1 either way).
enum class PhaseCase { OddReal, EvenImag };

// Real n x n pencil whose generalized eigenvalues carry the finite point
// spectrum of Re V^n (n odd) / Im V^n (n even):
//   Aprime[j][k] = 1/(j+n-k)!       B[j][k] = 2/(j-k)!  (j >= k, else 0)
// B is lower-triangular with diagonal 2, hence always invertible.
struct PencilPair {
  PowerIndex n;
  Eigen::MatrixXd Aprime;
  Eigen::MatrixXd B;
  PhaseCase phase_case;
  int epsilon;
};

// Eigenvalue plus polynomial eigenfunction recovered from the pencil
// eigenvector v: the pencil matrices are Toeplitz, so v lists the Taylor
// data of f highest derivative first, and f(x) = sum_m c_m x^m with
// c_m = v_{n-1-m} / m!, normalized to unit L^2[0,1] norm. residual is the
// exact polynomial-arithmetic residual from residual_check; multiplicity
// counts the cluster size when pencil roots coincide (simple roots
// report 1).
struct ExactEigenpair {
  double lambda;
  PolyCoeffs poly;
  double residual;
  int multiplicity;
};

// Valid for 1 <= n <= kPencilPowerCap (the factorial entries make the
// pencil too ill-conditioned for doubles beyond that).
PencilPair build_pencil(PowerIndex n);

// The <= n nonzero eigenvalues of the self-adjoint operator, solved as
// eig(B^{-1} Aprime) with a triangular solve.
//
// For odd n the generalized eigenvalues are real and are the operator
// eigenvalues as they stand; for even n they form conjugate purely
// imaginary pairs +/- i y and the operator spectrum is the exactly
// symmetric set {+y, -y}. (Both facts are pinned independently by the
// residual oracle and by cross-validation against the discretized
// spectra.) Roots with spurious imaginary (odd) or real (even)
// contamination above kPencilContaminationRel * scale are conditioning
// casualties and are dropped from the result; if nothing survives the
// call throws NumericalBreakdown. Roots of magnitude below
// kPencilZeroRel * scale belong to the operator's infinite-dimensional
// kernel and are never reported as spectrum entries. error_hint carries
// the per-entry contamination.
Spectrum pencil_eigenvalues(const PencilPair& p);

// Eigenpairs for every nonzero pencil root. For even n the complex
// eigenvector is phase-rotated so its largest coordinate is real, and the
// real part is taken: that polynomial spans, together with g = D f /
// lambda (D = (V^n - V*^n)/2), the real invariant plane of the +/-|y|
// eigenvalue pair, which is exactly what residual_check verifies.
std::vector<ExactEigenpair> pencil_eigenpairs(const PencilPair& p);

// L^2 residual of an eigen-claim, by exact polynomial arithmetic through
// apply_power_to_poly and exact monomial integration; independent of any
// eigensolver.
//   RealPart:  ||(V^n f + V*^n f)/2 - lambda f||
//   ImagPart:  with D = (V^n - V*^n)/2 and g = D f / lambda, the invariant
//              pair residual ||D g + lambda f||; for lambda = 0, ||D f||.
double residual_check(PowerIndex n, PartSelector part, double lambda,
                      const PolyCoeffs& f);

}  // namespace volterra
