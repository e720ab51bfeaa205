"""Experiment configuration.

All tunables of the forecasting pipeline live in one flat dataclass so a
run is fully described by (inputs, config, seeds).  A config file is a
plain ``key = value`` text file whose keys mirror the field names;
list-valued fields use comma-separated entries and ``max-depth``-style
optional ints accept ``none``.
"""

from __future__ import annotations

from dataclasses import dataclass, fields, replace


class ConfigError(ValueError):
    """Invalid configuration value or config-file syntax."""


@dataclass(frozen=True)
class ExperimentConfig:
    window_w: int = 60              # training window length, months
    combo_window_W: int = 24        # combination error window, months
    after_lookback_L: int = 20      # exponential-reweighting lookback, months
    min_obs: int = 5                # errors required before weights move off uniform
    horizons: tuple[int, ...] = (1, 3, 6, 9, 12)
    lambda_decay: float = 0.0609    # Nelson-Siegel exponential decay
    es_alpha: float = 0.10          # expected-shortfall tail level
    eta: float = 5.0                # robustness temperature for softmax weights
    lambda_mix: float = 0.5         # MSE vs tail-risk blend in the hybrid loss
    tau_ridge: float = 0.05         # ridge added to the covariance in robust MV
    phi_lad: float = 0.02           # LAD weight penalty
    mv_ridge: float = 1e-6          # minimum-variance inversion stabilizer
    ols_fraction: float = 0.3       # screened fraction for OLS averaging
    pca_k_max: int = 10
    seeds: tuple[int, ...] = (0,)
    pelt_penalty: float = 10.0
    after_ewma_decay: float = 0.94  # EWMA variance decay for the AFTER variant
    rf_n_lags: int = 60             # lag depth of the random-forest feature block
    rf_n_candidates: int = 10       # randomized hyperparameter draws per window
    rf_n_folds: int = 3             # contiguous CV folds

    def __post_init__(self) -> None:
        if self.window_w < 2 or self.combo_window_W < 2 or self.after_lookback_L < 2:
            raise ConfigError("all window lengths must be >= 2")
        if not 0.0 < self.es_alpha < 1.0:
            raise ConfigError("es_alpha must lie in (0, 1)")
        if self.eta <= 0.0:
            raise ConfigError("eta must be positive")
        if not 0.0 <= self.lambda_mix <= 1.0:
            raise ConfigError("lambda_mix must lie in [0, 1]")
        if self.tau_ridge <= 0.0:
            raise ConfigError("tau_ridge must be positive")
        if self.phi_lad < 0.0:
            raise ConfigError("phi_lad must be nonnegative")
        if self.mv_ridge <= 0.0:
            raise ConfigError("mv_ridge must be positive")
        if not 0.0 < self.ols_fraction <= 1.0:
            raise ConfigError("ols_fraction must lie in (0, 1]")
        if self.min_obs < 1:
            raise ConfigError("min_obs must be >= 1")
        if self.pca_k_max < 1:
            raise ConfigError("pca_k_max must be >= 1")
        if not self.horizons or any(h < 1 for h in self.horizons):
            raise ConfigError("horizons must be a nonempty list of positive ints")
        if len(set(self.horizons)) != len(self.horizons):
            raise ConfigError("horizons must be distinct")
        if not self.seeds:
            raise ConfigError("seeds must be nonempty")
        if not 0.0 < self.after_ewma_decay < 1.0:
            raise ConfigError("after_ewma_decay must lie in (0, 1)")
        if self.rf_n_lags < 1:
            raise ConfigError("rf_n_lags must be >= 1")
        if self.rf_n_candidates < 1 or self.rf_n_folds < 2:
            raise ConfigError("rf_n_candidates >= 1 and rf_n_folds >= 2 required")
        if self.pelt_penalty <= 0.0:
            raise ConfigError("pelt_penalty must be positive")


_INT_LIST_FIELDS = {"horizons", "seeds"}


def _parse_value(name: str, raw: str, target_type: type):
    raw = raw.strip()
    if name in _INT_LIST_FIELDS:
        try:
            return tuple(int(tok) for tok in raw.split(",") if tok.strip())
        except ValueError as exc:
            raise ConfigError(f"{name}: expected comma-separated ints, got {raw!r}") from exc
    if target_type is int:
        try:
            return int(raw)
        except ValueError as exc:
            raise ConfigError(f"{name}: expected int, got {raw!r}") from exc
    if target_type is float:
        try:
            return float(raw)
        except ValueError as exc:
            raise ConfigError(f"{name}: expected float, got {raw!r}") from exc
    raise ConfigError(f"{name}: unsupported config field type")


def parse_config_text(text: str, base: ExperimentConfig | None = None) -> ExperimentConfig:
    """Parse ``key = value`` lines into a config, starting from `base`."""
    cfg = base if base is not None else ExperimentConfig()
    known = {f.name: f for f in fields(ExperimentConfig)}
    overrides = {}
    for lineno, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        if "=" not in stripped:
            raise ConfigError(f"line {lineno}: expected 'key = value', got {stripped!r}")
        key, _, raw = stripped.partition("=")
        key = key.strip()
        if key not in known:
            raise ConfigError(f"line {lineno}: unknown config key {key!r}")
        field = known[key]
        target = int if field.type in ("int", int) else float
        overrides[key] = _parse_value(key, raw, target)
    return replace(cfg, **overrides)


def load_config(path: str, base: ExperimentConfig | None = None) -> ExperimentConfig:
    with open(path, "r", encoding="utf-8") as fh:
        return parse_config_text(fh.read(), base=base)
