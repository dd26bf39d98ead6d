"""Numerical laboratory for the Dickman function.

Thin wrapper over the C++ core: rho(u) by method of steps and by the
alternating series of iterated integrals, the Dickman constants C_k by the
zeta and contour routes, asymptotic-expansion error reports, and exact
smooth-number counts.
"""

from ._core import (
    DickmanError,
    IkEvaluator,
    RhoSpline,
    __version__,
    almost_prime_count,
    constants,
    error_decay_scan,
    expand_ik,
    g_diag,
    genfun,
    ik,
    perron,
    polylog,
    ramanujan_nested,
    ramanujan_phi_check,
    ramanujan_sum,
    rho_series,
    rho_steps,
    smooth_count,
    verify,
)

__all__ = [
    "DickmanError",
    "IkEvaluator",
    "RhoSpline",
    "__version__",
    "almost_prime_count",
    "constants",
    "error_decay_scan",
    "expand_ik",
    "g_diag",
    "genfun",
    "ik",
    "perron",
    "polylog",
    "ramanujan_nested",
    "ramanujan_phi_check",
    "ramanujan_sum",
    "rho_series",
    "rho_steps",
    "smooth_count",
    "verify",
]
