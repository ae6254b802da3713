"""Spectra, norms, numerical ranges, and accretivity of powers of the
integration operator V f(x) = int_0^x f(t) dt on L2[0,1].

Everything is computed by the C++ extension; this package only re-exports
its surface.
"""

from ._volterra import (
    __version__,
    brown_curve,
    certify_accretive,
    discretized_spectrum,
    double_integral,
    hs_re_im,
    hs_vn,
    imv_spectrum,
    is_accretive,
    known_exact_opnorms,
    op_norm_discretized,
    opnorm_bounds,
    pencil_spectrum,
    range_interval,
    rayleigh_probe_re,
    resolvent_norm,
    rev2_spectrum,
    solve_cot_family,
    solve_coth_eq,
    verify,
)

__all__ = [
    "__version__",
    "brown_curve",
    "certify_accretive",
    "discretized_spectrum",
    "double_integral",
    "hs_re_im",
    "hs_vn",
    "imv_spectrum",
    "is_accretive",
    "known_exact_opnorms",
    "op_norm_discretized",
    "opnorm_bounds",
    "pencil_spectrum",
    "range_interval",
    "rayleigh_probe_re",
    "resolvent_norm",
    "rev2_spectrum",
    "solve_cot_family",
    "solve_coth_eq",
    "verify",
]
