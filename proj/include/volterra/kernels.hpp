#pragma once

#include <vector>

#include "volterra/errors.hpp"
#include "volterra/tolerances.hpp"

namespace volterra {

// Power of the Volterra operator V f(x) = \int_0^x f(t) dt on L^2[0,1].
// Must be >= 1; kernel evaluation is capped at kKernelPowerCap.
using PowerIndex = int;

// k! as a double, from a precomputed table. k must lie in [0, kFactorialCap].
double factorial(int k);

// Binomial coefficient as a double (ratio of table factorials).
double binomial(int n, int k);

// Which operator built from V^n a kernel describes.
//
// RealPart is (V^n + V*^n)/2 with kernel |x-t|^{n-1} / (2 (n-1)!).
// ImagPart is (V^n - V*^n)/(2i); it is represented throughout by its real
// antisymmetric factor s(x,t) = |x-t|^{n-1} sign(x-t) / (2 (n-1)!), the
// operator being -i*s. Keeping the factor real means every matrix in the
// discretizer stays real.
enum class PartSelector { FullV, FullVAdjoint, RealPart, ImagPart };

struct KernelSpec {
  PartSelector part;
  PowerIndex power;
};

// Polynomial on [0,1] in the monomial basis: p(x) = sum_j c[j] x^j.
// A canonical-form polynomial has a nonzero trailing coefficient unless it
// is the zero polynomial (empty coefficient list).
struct PolyCoeffs {
  std::vector<double> c;

  // Index of the highest nonzero coefficient; -1 for the zero polynomial.
  int degree() const;
  double eval(double x) const;
};

// Drops trailing zero coefficients.
PolyCoeffs trim(const PolyCoeffs& p);
PolyCoeffs poly_add(const PolyCoeffs& p, const PolyCoeffs& q);
PolyCoeffs poly_scale(const PolyCoeffs& p, double s);

// \int_0^1 p q, by exact monomial integration: sum p_j q_k / (j+k+1).
double poly_inner(const PolyCoeffs& p, const PolyCoeffs& q);
double poly_l2_norm(const PolyCoeffs& p);

// Kernel value k(x, t) for x, t in [0,1].
//
//   FullV         1_{t<x} (x-t)^{n-1} / (n-1)!
//   FullVAdjoint  1_{t>x} (t-x)^{n-1} / (n-1)!
//   RealPart      |x-t|^{n-1} / (2 (n-1)!)
//   ImagPart      |x-t|^{n-1} sign(x-t) / (2 (n-1)!)   (the real factor s)
//
// sign(0) = 0, so the ImagPart factor vanishes on the diagonal. The sign
// carries exponent one: expanding V^n - V*^n termwise forces a single sign
// factor, even though symmetric-looking forms with sign^{n-1} circulate;
// the discrepancy is deliberate and documented in the README.
double eval_kernel(const KernelSpec& spec, double x, double t);

// Exact polynomial image of V^n or V*^n.
//
//   FullV:         x^j  ->  (j! / (j+n)!) x^{j+n}
//   FullVAdjoint:  x^j  ->  sum_{i=0}^{j} C(j,i) x^{j-i} (1-x)^{n+i}
//                           / ((n-1)! (n+i)),  expanded into monomials
//
// Only FullV / FullVAdjoint are valid parts (the self-adjoint parts do not
// map polynomials to polynomials in a finite way for even/odd mismatches;
// callers combine the two images instead). Degrees with j + n beyond the
// factorial table throw CapacityExceeded.
PolyCoeffs apply_power_to_poly(PartSelector part, PowerIndex n, const PolyCoeffs& p);

}  // namespace volterra
