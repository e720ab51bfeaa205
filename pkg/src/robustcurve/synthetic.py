"""Synthetic yield/indicator worlds with a known factor path.

The generator draws a latent three-factor VAR(1) path, maps it through
the Nelson-Siegel loadings, adds Gaussian measurement noise, and emits
indicators as factor-loaded noise.  Everything is a pure function of the
seed, so worlds double as oracles: with zero measurement noise the
cross-sectional fit must recover the true factor path.
"""

from __future__ import annotations

import datetime as dt
from dataclasses import dataclass

import numpy as np

from .nelson_siegel import DEFAULT_DECAY, loading_matrix
from .panels import IndicatorPanel, YieldPanel, month_range
from .var1 import Var1Model

PAPER_MATURITIES = (3.0, 6.0, 12.0, 24.0, 36.0, 48.0, 60.0, 72.0, 84.0,
                    96.0, 108.0, 120.0, 180.0, 240.0, 360.0)


@dataclass(frozen=True)
class FactorDgp:
    """VAR(1) data-generating process for the latent factors."""

    model: Var1Model
    eta_std: np.ndarray        # per-factor innovation std, percent units
    beta0: np.ndarray | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "eta_std", np.asarray(self.eta_std, dtype=float))
        if self.eta_std.shape != (self.model.dim,):
            raise ValueError("eta_std must match the factor dimension")
        if self.beta0 is not None:
            beta0 = np.asarray(self.beta0, dtype=float)
            if beta0.shape != (self.model.dim,):
                raise ValueError("beta0 must match the factor dimension")
            object.__setattr__(self, "beta0", beta0)


def default_factor_dgp() -> FactorDgp:
    """Persistent, stable three-factor dynamics in plausible yield units."""
    phi = np.array([
        [0.95, 0.02, 0.00],
        [0.00, 0.92, 0.03],
        [0.00, 0.00, 0.88],
    ])
    fixed_point = np.array([4.5, -1.0, 0.5])
    c = (np.eye(3) - phi) @ fixed_point
    return FactorDgp(model=Var1Model(c=c, phi=phi), eta_std=np.array([0.04, 0.04, 0.04]))


@dataclass(frozen=True)
class SyntheticWorld:
    yields: YieldPanel
    indicators: IndicatorPanel
    beta_path: np.ndarray      # T x 3 true factors


def generate_synthetic_world(
    seed: int,
    T: int,
    maturities=PAPER_MATURITIES,
    noise_bps: float = 5.0,
    var_params: FactorDgp | None = None,
    n_indicators: int = 8,
    decay: float = DEFAULT_DECAY,
    start: dt.date = dt.date(2000, 1, 31),
) -> SyntheticWorld:
    dgp = var_params if var_params is not None else default_factor_dgp()
    if dgp.model.spectral_radius() >= 1.0:
        raise ValueError("unstable factor VAR: spectral radius must be < 1")
    if T < 2:
        raise ValueError("need at least two months")
    rng = np.random.default_rng(seed)
    d = dgp.model.dim

    if dgp.beta0 is not None:
        beta = dgp.beta0.copy()
    else:
        beta = np.linalg.solve(np.eye(d) - dgp.model.phi, dgp.model.c)
    betas = np.empty((T, d))
    betas[0] = beta
    for t in range(1, T):
        eta = dgp.eta_std * rng.standard_normal(d)
        beta = dgp.model.c + dgp.model.phi @ beta + eta
        betas[t] = beta

    design = loading_matrix(maturities, decay)
    clean = betas @ design.T
    noise = (noise_bps / 100.0) * rng.standard_normal(clean.shape)
    yields = clean + noise

    loadings = rng.standard_normal((n_indicators, d))
    ind_noise = rng.standard_normal((T, n_indicators))
    indicators = betas @ loadings.T + ind_noise

    dates = month_range(start, T)
    names = tuple(f"ind{j:02d}" for j in range(n_indicators))
    return SyntheticWorld(
        yields=YieldPanel(dates, tuple(float(m) for m in maturities), yields),
        indicators=IndicatorPanel(dates, names, indicators),
        beta_path=betas,
    )
