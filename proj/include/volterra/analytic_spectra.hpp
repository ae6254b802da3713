#pragma once

#include <vector>

#include "volterra/discretizer.hpp"
#include "volterra/kernels.hpp"
#include "volterra/tolerances.hpp"

namespace volterra {

// The four closed-form / transcendental eigenvalue families:
//   ImV_odd_pi : Im V eigenvalues 1/((2k+1) pi), k ranging over both signs
//   ReV2_coth  : the single positive Re V^2 eigenvalue 1/(4 rho^2),
//                coth(rho) = rho
//   ReV2_cot   : Re V^2 eigenvalues -1/(4 t_k^2), cot(t_k) = -t_k
//   ReV2_odd_pi: Re V^2 eigenvalues -1/((2k+1)^2 pi^2), k >= 0
// The last family is enumerated once per value; the discretized spectrum
// shows these as simple, so no doubling is applied.
enum class EigenFamilyKind { ImV_odd_pi, ReV2_coth, ReV2_cot, ReV2_odd_pi };

struct IndexRange {
  int lo;
  int hi;  // inclusive
};

struct EigenFamily {
  EigenFamilyKind kind;
  IndexRange index_range;
  std::vector<double> values;  // descending |value|, positive first on ties
};

struct RootSolverConfig {
  double abs_tol = tol::kRootAbsTol;
  int max_iter = tol::kRootMaxIter;
};

// The unique positive root rho of coth(t) = t, by bisection on [0.5, 3]
// refined with Newton. The residual |coth(rho) - rho| lands at a few ulp.
double solve_coth_eq(const RootSolverConfig& cfg = {});

// The first `count` positive roots of cot(t) = -t, one from each bracket
// (k pi + pi/2, (k+1) pi), k = 0..count-1.
std::vector<double> solve_cot_family(int count, const RootSolverConfig& cfg = {});

// One family by kind. `count` is the number of indices enumerated:
// ImV_odd_pi yields 2*count values (both index signs), ReV2_coth yields a
// single value regardless, the other two yield count values.
EigenFamily make_family(EigenFamilyKind kind, int count,
                        const RootSolverConfig& cfg = {});

// Eigenvalues of Im V: the 2*count values 1/((2k+1) pi) for
// k = 0..count-1 and k = -1..-count, sorted by descending magnitude.
EigenFamily imv_eigenvalues(int count);

// Eigenvalues of Re V^2: the three families above merged by descending
// magnitude and truncated to `count` values. The top entry 1/(4 rho^2) is
// the only positive one. error_hint carries the defining-equation
// residual of each value's root (zero for the closed-form family).
Spectrum rev2_eigenvalues(int count, const RootSolverConfig& cfg = {});

// View a family as a Spectrum (source = Analytic, zero error hints).
Spectrum to_spectrum(const EigenFamily& family);

}  // namespace volterra
