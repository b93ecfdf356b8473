"""Sharp CLR and Lieb-Thirring constants.

Every gamma argument accepts a float > 2; ``math.inf`` selects the limiting
problem where that makes sense.
"""

from ._core import (
    BoundsReport,
    DomainError,
    IntegralResult,
    LowGammaDiagnostic,
    NonFiniteError,
    OptimizerNorms,
    PhaseNotReal,
    PhaseValue,
    PoleHit,
    PrimalNorms,
    QuadSpec,
    VerificationReport,
    beta_constant,
    blaschke,
    bounds_report,
    c_d_sigma,
    clr_asymptotic,
    clr_factor,
    clr_factor_at,
    duality_gap,
    el_residual,
    f_gamma,
    g_gamma,
    h,
    im_theta,
    low_gamma_diagnostic,
    lorentzian_upper,
    lt_factor,
    lt_factor_at,
    m_gamma,
    optimizer_norms,
    primal_norms,
    re_theta,
    run_verification,
    scaling_constant,
    theta,
    trial_lower,
)

__version__ = "0.1.0"


def table(gammas=range(3, 10), spec=None):
    """Rows of (gamma, M_gamma, clr_factor, lt_factor) as dicts."""
    spec = spec or QuadSpec()
    rows = []
    for g in gammas:
        r = bounds_report(float(g), spec)
        rows.append(
            {"gamma": r.gamma, "M_gamma": r.m_gamma, "clr_factor": r.clr_factor, "lt_factor": r.lt_factor}
        )
    return rows
