"""First-order VAR estimation and recursive multi-step prediction."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


@dataclass(frozen=True)
class Var1Model:
    c: np.ndarray     # intercept, length d
    phi: np.ndarray   # d x d transition matrix

    def __post_init__(self) -> None:
        c = np.asarray(self.c, dtype=float)
        phi = np.asarray(self.phi, dtype=float)
        if c.ndim != 1 or phi.shape != (c.size, c.size):
            raise ValueError("phi must be d x d with d matching the intercept")
        object.__setattr__(self, "c", c)
        object.__setattr__(self, "phi", phi)

    @property
    def dim(self) -> int:
        return self.c.size

    def spectral_radius(self) -> float:
        return float(np.max(np.abs(np.linalg.eigvals(self.phi))))


def fit_var1(states: np.ndarray) -> Var1Model:
    """Equation-by-equation OLS of x_{t+1} on (1, x_t)."""
    x = np.asarray(states, dtype=float)
    if x.ndim != 2:
        raise ValueError("states must be a T x d matrix")
    t_obs, d = x.shape
    if t_obs < d + 2:
        raise ValueError(f"need at least d+2={d + 2} observations, got {t_obs}")
    regressors = np.column_stack([np.ones(t_obs - 1), x[:-1]])
    if np.linalg.matrix_rank(regressors) < d + 1:
        raise ValueError("singular regressor second-moment matrix")
    coef, _, _, _ = np.linalg.lstsq(regressors, x[1:], rcond=None)
    return Var1Model(c=coef[0].copy(), phi=coef[1:].T.copy())


def var1_forecast(model: Var1Model, x_t: np.ndarray, h: int) -> np.ndarray:
    """h-step forecast c + Phi c + ... + Phi^{h-1} c + Phi^h x_t.

    Evaluated by iterating the one-step map h times, which keeps the
    semigroup identity forecast(a+b) == forecast(b, from forecast(a))
    exact in floating point.
    """
    if h < 1:
        raise ValueError("horizon must be >= 1")
    x = np.asarray(x_t, dtype=float)
    if x.shape != (model.dim,):
        raise ValueError(f"state must have length {model.dim}")
    out = x
    for _ in range(h):
        out = model.c + model.phi @ out
    return out
