"""Nelson-Siegel loadings and cross-sectional factor extraction.

The curve at maturity tau (months) is level + slope-loading * beta2 +
curvature-loading * beta3 with a fixed exponential decay, so extracting
the three factors from an observed cross section is plain linear least
squares.
"""

from __future__ import annotations

import numpy as np

DEFAULT_DECAY = 0.0609


def ns_loadings(tau_months: float, decay: float = DEFAULT_DECAY) -> tuple[float, float, float]:
    """(level, slope, curvature) loadings at one maturity.

    slope = (1 - exp(-x))/x and curvature = slope - exp(-x) with
    x = decay * tau; expm1 keeps the x -> 0 limit (1, 1, 0) exact.
    """
    if tau_months <= 0.0:
        raise ValueError("maturity must be positive")
    if decay <= 0.0:
        raise ValueError("decay must be positive")
    x = decay * tau_months
    slope = -np.expm1(-x) / x
    curvature = slope - np.exp(-x)
    return 1.0, float(slope), float(curvature)


def loading_matrix(maturities, decay: float = DEFAULT_DECAY) -> np.ndarray:
    """N x 3 design matrix of loadings for a maturity grid."""
    mats = np.asarray(maturities, dtype=float)
    out = np.empty((mats.size, 3))
    for j, tau in enumerate(mats):
        out[j] = ns_loadings(float(tau), decay)
    return out


def fit_cross_section(yields, maturities, decay: float = DEFAULT_DECAY) -> np.ndarray:
    """Least-squares (level, slope, curvature) for one observation date."""
    y = np.asarray(yields, dtype=float)
    mats = np.asarray(maturities, dtype=float)
    if y.shape != mats.shape or y.ndim != 1:
        raise ValueError("yields and maturities must be equal-length vectors")
    if mats.size < 3:
        raise ValueError("need at least 3 maturities to identify 3 factors")
    if np.unique(mats).size != mats.size:
        raise ValueError("duplicate maturities make the design rank-deficient")
    design = loading_matrix(mats, decay)
    beta, _, rank, _ = np.linalg.lstsq(design, y, rcond=None)
    if rank < 3:
        raise ValueError("rank-deficient loading design")
    return beta


def fit_factor_path(values: np.ndarray, maturities, decay: float = DEFAULT_DECAY) -> np.ndarray:
    """T x 3 factor path for a block of yield rows.

    Uses one precomputed pseudoinverse of the loading design; identical
    optimum to per-row least squares since the design is shared.
    """
    design = loading_matrix(maturities, decay)
    pinv = np.linalg.pinv(design)
    return np.asarray(values, dtype=float) @ pinv.T


def curve_from_factors(beta, maturities, decay: float = DEFAULT_DECAY) -> np.ndarray:
    """Map factors back to yields on a maturity grid."""
    return loading_matrix(maturities, decay) @ np.asarray(beta, dtype=float)
