#pragma once

#include <Eigen/Dense>
#include <vector>

#include "volterra/kernels.hpp"

namespace volterra {

// Uniform midpoint grid on [0,1]: m cells, nodes x_i = (i+1/2)/m, weight
// h = 1/m. Midpoints keep every node off the kernel diagonal's worst
// behavior (the Im kernels jump there) while preserving exact symmetry.
struct GridSpec {
  int m;
  double h() const { return 1.0 / m; }
  double node(int i) const { return (i + 0.5) / m; }
};

// Validates 2 <= m <= kGridCap (the upper limit throws CapacityExceeded,
// a nonsensical lower one std::invalid_argument).
GridSpec make_grid(int m);

enum class MatrixStructure { Symmetric, Antisymmetric, General };
enum class SpectrumSource { Pencil, Analytic, Discretized };

// Nystrom matrix: entries[i][j] = h * k(x_i, x_j). Immutable after
// assembly; the structure tag is exact by construction (mirrored halves),
// not a numerical observation.
struct OperatorMatrix {
  GridSpec grid;
  Eigen::MatrixXd entries;
  MatrixStructure structure;
  KernelSpec spec;
};

// Eigenvalue list sorted by descending |value|, positive first on exact
// ties. error_hint, when nonempty, carries one asymmetry/contamination
// estimate per entry.
struct Spectrum {
  std::vector<double> values;
  SpectrumSource source;
  std::vector<double> error_hint;
};

// Sorts in place by (|value| descending, positive-before-negative on ties).
void sort_spectrum_values(std::vector<double>& values);

OperatorMatrix assemble(const KernelSpec& spec, const GridSpec& grid);

// All m eigenvalues of a Symmetric matrix. Throws StructureMismatch for
// any other structure tag.
Spectrum eigenvalues_symmetric(const OperatorMatrix& M);

// Eigenvalues of the Hermitian operator -iM for Antisymmetric M: the pairs
// +/-sigma_k over the doubled singular values of M, emitted from a single
// representative per pair so the multiset is exactly symmetric. An odd
// dimension contributes one structural zero.
Spectrum eigenvalues_antisymmetric(const OperatorMatrix& M);

// Largest-|eigenvalue| for self-adjoint structures, largest singular value
// for General.
double op_norm(const OperatorMatrix& M);

// Frobenius norm of the entries, i.e. the quadrature approximation
// h * sqrt(sum k(x_i,x_j)^2) of the kernel's L^2 norm.
double hs_norm(const OperatorMatrix& M);

// Descending singular values (shared by op_norm and the antisymmetric
// eigenvalue route).
Eigen::VectorXd singular_values(const Eigen::MatrixXd& M);

}  // namespace volterra
