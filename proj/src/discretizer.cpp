#include "volterra/discretizer.hpp"

#include <algorithm>
#include <cmath>

namespace volterra {

GridSpec make_grid(int m) {
  require(m >= tol::kGridMin, "make_grid: m must be >= 2");
  if (m > tol::kGridCap) {
    throw CapacityExceeded("make_grid: m " + std::to_string(m) + " exceeds cap " +
                           std::to_string(tol::kGridCap));
  }
  return GridSpec{m};
}

void sort_spectrum_values(std::vector<double>& values) {
  std::sort(values.begin(), values.end(), [](double a, double b) {
    const double aa = std::abs(a), ab = std::abs(b);
    if (aa != ab) return aa > ab;
    return a > b;
  });
}

OperatorMatrix assemble(const KernelSpec& spec, const GridSpec& grid) {
  require(grid.m >= tol::kGridMin && grid.m <= tol::kGridCap,
          "assemble: invalid grid");
  const int m = grid.m;
  const double h = grid.h();
  Eigen::MatrixXd entries(m, m);

  MatrixStructure structure = MatrixStructure::General;
  switch (spec.part) {
    case PartSelector::RealPart: {
      structure = MatrixStructure::Symmetric;
      // fill the upper triangle and mirror so symmetry is exact
      for (int i = 0; i < m; ++i) {
        for (int j = i; j < m; ++j) {
          const double v = h * eval_kernel(spec, grid.node(i), grid.node(j));
          entries(i, j) = v;
          entries(j, i) = v;
        }
      }
      break;
    }
    case PartSelector::ImagPart: {
      structure = MatrixStructure::Antisymmetric;
      for (int i = 0; i < m; ++i) {
        entries(i, i) = 0.0;
        for (int j = i + 1; j < m; ++j) {
          const double v = h * eval_kernel(spec, grid.node(i), grid.node(j));
          entries(i, j) = v;
          entries(j, i) = -v;
        }
      }
      break;
    }
    default: {
      for (int i = 0; i < m; ++i) {
        for (int j = 0; j < m; ++j) {
          entries(i, j) = h * eval_kernel(spec, grid.node(i), grid.node(j));
        }
      }
      break;
    }
  }
  return OperatorMatrix{grid, std::move(entries), structure, spec};
}

Spectrum eigenvalues_symmetric(const OperatorMatrix& M) {
  if (M.structure != MatrixStructure::Symmetric) {
    throw StructureMismatch("eigenvalues_symmetric: matrix is not Symmetric");
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(M.entries,
                                                        Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) {
    throw NumericalBreakdown("eigenvalues_symmetric: eigensolver failed");
  }
  Spectrum out;
  out.source = SpectrumSource::Discretized;
  out.values.assign(solver.eigenvalues().data(),
                    solver.eigenvalues().data() + M.entries.rows());
  sort_spectrum_values(out.values);
  return out;
}

Spectrum eigenvalues_antisymmetric(const OperatorMatrix& M) {
  if (M.structure != MatrixStructure::Antisymmetric) {
    throw StructureMismatch("eigenvalues_antisymmetric: matrix is not Antisymmetric");
  }
  const Eigen::VectorXd s = singular_values(M.entries);
  const int m = static_cast<int>(s.size());
  Spectrum out;
  out.source = SpectrumSource::Discretized;
  out.values.reserve(static_cast<std::size_t>(m));
  out.error_hint.reserve(static_cast<std::size_t>(m));
  // Singular values of a real antisymmetric matrix come in equal pairs
  // (plus one structural zero in odd dimension). Each pair is one
  // eigenvalue pair +/-sigma of -iM; using s[r] for both signs makes the
  // returned multiset exactly symmetric, and the within-pair spread
  // |s[r]-s[r+1]| is reported as the error hint.
  for (int r = 0; r + 1 < m; r += 2) {
    const double sigma = s(r);
    const double spread = s(r) - s(r + 1);
    out.values.push_back(sigma);
    out.values.push_back(-sigma);
    out.error_hint.push_back(spread);
    out.error_hint.push_back(spread);
  }
  if (m % 2 == 1) {
    out.values.push_back(0.0);
    out.error_hint.push_back(s(m - 1));
  }
  sort_spectrum_values(out.values);
  std::sort(out.error_hint.begin(), out.error_hint.end(), std::greater<double>());
  return out;
}

double op_norm(const OperatorMatrix& M) {
  switch (M.structure) {
    case MatrixStructure::Symmetric: {
      Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(M.entries,
                                                            Eigen::EigenvaluesOnly);
      if (solver.info() != Eigen::Success) {
        throw NumericalBreakdown("op_norm: eigensolver failed");
      }
      return solver.eigenvalues().cwiseAbs().maxCoeff();
    }
    case MatrixStructure::Antisymmetric:
    case MatrixStructure::General:
      return singular_values(M.entries)(0);
  }
  throw InternalError("op_norm: unreachable structure");
}

double hs_norm(const OperatorMatrix& M) { return M.entries.norm(); }

Eigen::VectorXd singular_values(const Eigen::MatrixXd& M) {
  Eigen::BDCSVD<Eigen::MatrixXd> svd(M);
  return svd.singularValues();
}

}  // namespace volterra
