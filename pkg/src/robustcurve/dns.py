"""Rolling dynamic Nelson-Siegel forecasting.

Per origin: refit the factor path over the trailing window, fit a
VAR(1) on the factors, iterate it forward, and map the predicted
factors back through the loadings.  Origins whose window produces a
degenerate fit are skipped with a logged diagnostic instead of aborting
the backtest.
"""

from __future__ import annotations

import logging

from .config import ExperimentConfig
from .nelson_siegel import curve_from_factors, fit_factor_path
from .panels import ForecastSet, YieldPanel
from .var1 import fit_var1, var1_forecast

logger = logging.getLogger("robustcurve.dns")

DNS_MODEL_ID = "dns"


def dns_origin_forecast(window_values, maturities, horizons, decay):
    """Forecast curves for every horizon from one training window.

    Returns {h: yield vector}; raises ValueError on degenerate windows.
    """
    betas = fit_factor_path(window_values, maturities, decay)
    model = fit_var1(betas)
    out = {}
    for h in horizons:
        beta_h = var1_forecast(model, betas[-1], h)
        out[h] = curve_from_factors(beta_h, maturities, decay)
    return out


def dns_rolling_forecast(panel: YieldPanel, cfg: ExperimentConfig,
                         model_id: str = DNS_MODEL_ID) -> ForecastSet:
    w = cfg.window_w
    h_max = max(cfg.horizons)
    if panel.n_dates < w + h_max:
        raise ValueError(f"panel too short: need at least {w + h_max} months")
    fs = ForecastSet()
    for t in range(w - 1, panel.n_dates - h_max):
        window = panel.values[t - w + 1: t + 1]
        try:
            curves = dns_origin_forecast(window, panel.maturities, cfg.horizons,
                                         cfg.lambda_decay)
        except (ValueError, FloatingPointError) as exc:
            logger.warning("skipping origin %s: %s", panel.dates[t], exc)
            continue
        origin = panel.dates[t]
        for h, curve in curves.items():
            for j, tau in enumerate(panel.maturities):
                fs.add(model_id, origin, h, tau, curve[j])
    return fs
