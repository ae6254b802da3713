#pragma once

// Central tolerance and size constants. The verification suite, the unit
// tests and the CLI all read from here so that a bound is never duplicated
// with drifting values.

namespace volterra::tol {

// --- caps and default sizes -------------------------------------------------
inline constexpr int kKernelPowerCap = 50;    // eval_kernel power limit
inline constexpr int kFactorialCap = 170;     // largest k with finite double k!
inline constexpr int kPencilPowerCap = 12;    // pencil conditioning limit
inline constexpr int kGridMin = 2;
inline constexpr int kGridCap = 8000;
inline constexpr int kGridDefault = 1000;     // verification grid
inline constexpr int kGridFast = 500;         // verify --level fast
inline constexpr int kGridFull = 2000;        // verify --level full
inline constexpr int kCurveSamplesDefault = 2048;

// --- root solving -----------------------------------------------------------
inline constexpr double kRootAbsTol = 1e-13;  // RootSolverConfig default
inline constexpr int kRootMaxIter = 200;
inline constexpr double kRootResidual = 1e-12;    // residual of each root
inline constexpr double kRootBisectWidth = 1e-6;  // hand-off width to Newton
inline constexpr double kRootGuardFactor = 16.0;  // ulp-scale residual guard
inline constexpr int kNormPowerCap = 50;          // closed-form norm formulas
inline constexpr int kRangeAnalyticCount = 16;    // family depth for intervals
inline constexpr int kHullMinSamples = 512;       // membership polygon floor
inline constexpr double kCothRootAbs = 1e-8;      // vs frozen reference value

// --- pencil -----------------------------------------------------------------
inline constexpr double kPencilClosedFormAbs = 1e-10;  // n=1..4 closed forms
inline constexpr double kPencilContaminationRel = 1e-8;
inline constexpr double kPencilResidual = 1e-8;        // eigenpair residual, n<=6
inline constexpr double kPencilZeroRel = 1e-14;        // |mu| below this is kernel

// --- cross validation against the discretizer -------------------------------
inline constexpr double kCrossImVRel = 2e-2;   // Im V analytic vs grid, top 10
inline constexpr double kCrossReV2Rel = 1e-2;  // Re V^2 merged vs grid, top 8
inline constexpr double kPencilDiscRel = 1e-2; // pencil vs grid, n<=6

// --- Hilbert-Schmidt checks -------------------------------------------------
inline constexpr double kHsRatioTol = 1e-15;   // hs_re_im/hs_vn - 1/sqrt2
inline constexpr double kHsDiscRel = 1e-2;     // discrete HS vs closed form
inline constexpr double kHsConstAbs = 1e-12;   // n=1 RealPart HS == 0.5

// --- operator norm sandwiches -----------------------------------------------
inline constexpr double kSandwichSlack = 1e-3;     // times max(1, upper)
inline constexpr double kExactInBoundsTol = 1e-12; // closed forms vs bound pair
inline constexpr double kExactVsDiscRel = 1e-2;    // closed forms vs grid

// --- squared-norm chain -----------------------------------------------------
inline constexpr double kSqIdentityTol = 1e-15;  // hs_sq_diff vs hs_re_im(2n)
inline constexpr double kSqLowerSlack = 1e-3;    // times max(1, value)

// --- numerical range --------------------------------------------------------
inline constexpr double kIntervalClosedFormAbs = 1e-10;
inline constexpr double kRayleighHullTol = 2e-2;
inline constexpr int kRayleighSampleCount = 200;
inline constexpr int kRayleighGrid = 500;
inline constexpr double kProbeAbs = 1e-12;

// --- accretivity ------------------------------------------------------------
inline constexpr double kAccretiveSlack = 1e-6;       // certificate agreement
inline constexpr double kAccretiveBoundaryBand = 0.05;  // sweep exclusion zone
inline constexpr double kDecompositionTol = 1e-8;     // times scale
inline constexpr double kResolventSlack = 1e-6;
inline constexpr double kSingularGramRel = 1e-12;  // Gram eigenvalue ratio = singular
inline constexpr int kAccretiveGrid = 500;

// --- double integral --------------------------------------------------------
inline constexpr double kDoubleIntRel = 1e-6;
inline constexpr int kDoubleIntGrid = 5000;

// --- misc -------------------------------------------------------------------
inline constexpr double kEigAccuracyRel = 1e-10;  // symmetric eigensolver
inline constexpr unsigned long long kRngSeed = 0x5eed5eedULL;

}  // namespace volterra::tol
