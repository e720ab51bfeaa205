"""Dated panels of yields and economic indicators, plus CSV ingestion.

Conventions: yields are in percent (1 bp = 0.01), maturities in months,
dates are month-end tags compared by (year, month).  The yields CSV has
header ``date,M3,M6,...`` with the maturity in months after the ``M``;
the indicators CSV has ``date,<name>,...``.  Cells use ``.`` decimals,
UTF-8, comma separation.  Indicator panels may carry missing *leading*
values (series that start late) as empty cells; yield panels must be
complete.
"""

from __future__ import annotations

import calendar
import csv
import datetime as dt
from dataclasses import dataclass, field

import numpy as np


class PanelFormatError(ValueError):
    """Raised on malformed panel CSVs; message names the offending cell."""


def month_end(year: int, month: int) -> dt.date:
    return dt.date(year, month, calendar.monthrange(year, month)[1])


def month_key(d: dt.date) -> int:
    return d.year * 12 + (d.month - 1)


def add_months(d: dt.date, n: int) -> dt.date:
    k = month_key(d) + n
    return month_end(k // 12, k % 12 + 1)


def month_range(start: dt.date, n: int) -> tuple[dt.date, ...]:
    return tuple(add_months(start, i) for i in range(n))


def _check_monthly_dates(dates) -> None:
    keys = [month_key(d) for d in dates]
    for i in range(1, len(keys)):
        if keys[i] <= keys[i - 1]:
            raise PanelFormatError(f"dates not ascending (row {i + 1})")
        if keys[i] != keys[i - 1] + 1:
            raise PanelFormatError(f"dates not at monthly spacing (row {i + 1})")


@dataclass(frozen=True)
class YieldPanel:
    """T x N matrix of zero-coupon yields (percent) on a monthly date grid."""

    dates: tuple[dt.date, ...]
    maturities: tuple[float, ...]
    values: np.ndarray

    def __post_init__(self) -> None:
        values = np.asarray(self.values, dtype=float)
        object.__setattr__(self, "values", values)
        if values.ndim != 2 or values.shape != (len(self.dates), len(self.maturities)):
            raise PanelFormatError("values shape does not match dates x maturities")
        if len(self.maturities) == 0 or len(self.dates) == 0:
            raise PanelFormatError("empty panel")
        mats = np.asarray(self.maturities, dtype=float)
        if np.any(mats <= 0):
            raise PanelFormatError("maturities must be positive")
        if np.any(np.diff(mats) <= 0):
            raise PanelFormatError("maturities must be strictly increasing")
        _check_monthly_dates(self.dates)
        if not np.all(np.isfinite(values)):
            bad = np.argwhere(~np.isfinite(values))[0]
            raise PanelFormatError(
                f"non-finite yield at row {bad[0] + 1}, maturity M{self.maturities[bad[1]]:g}"
            )
        values.setflags(write=False)

    @property
    def n_dates(self) -> int:
        return len(self.dates)

    @property
    def n_maturities(self) -> int:
        return len(self.maturities)

    def date_index(self, d: dt.date) -> int:
        idx = month_key(d) - month_key(self.dates[0])
        if idx < 0 or idx >= len(self.dates):
            raise KeyError(f"date {d} outside panel range")
        return idx

    def maturity_index(self, tau: float) -> int:
        for j, m in enumerate(self.maturities):
            if m == tau:
                return j
        raise KeyError(f"maturity {tau} not in panel")

    def series(self, tau: float) -> np.ndarray:
        return self.values[:, self.maturity_index(tau)]


@dataclass(frozen=True)
class IndicatorPanel:
    """T x p matrix of economic indicators; leading NaNs mark late starts."""

    dates: tuple[dt.date, ...]
    names: tuple[str, ...]
    values: np.ndarray
    has_missing: tuple[bool, ...] = field(default=())

    def __post_init__(self) -> None:
        values = np.asarray(self.values, dtype=float)
        object.__setattr__(self, "values", values)
        if len(self.names) == 0:
            raise PanelFormatError("indicator panel needs at least one series")
        if len(set(self.names)) != len(self.names):
            raise PanelFormatError("indicator names must be unique")
        if values.ndim != 2 or values.shape != (len(self.dates), len(self.names)):
            raise PanelFormatError("values shape does not match dates x names")
        _check_monthly_dates(self.dates)
        for j, name in enumerate(self.names):
            col = values[:, j]
            nan = np.isnan(col)
            if nan.any():
                first_obs = int(np.argmax(~nan)) if (~nan).any() else len(col)
                if nan[first_obs:].any():
                    row = first_obs + int(np.argmax(nan[first_obs:])) + 1
                    raise PanelFormatError(
                        f"interior missing value in indicator {name!r} at row {row}"
                    )
        object.__setattr__(
            self, "has_missing", tuple(bool(np.isnan(values[:, j]).any()) for j in range(len(self.names)))
        )
        values.setflags(write=False)

    def date_index(self, d: dt.date) -> int:
        idx = month_key(d) - month_key(self.dates[0])
        if idx < 0 or idx >= len(self.dates):
            raise KeyError(f"date {d} outside panel range")
        return idx


def _parse_date(raw: str, row: int) -> dt.date:
    try:
        return dt.date.fromisoformat(raw.strip())
    except ValueError as exc:
        raise PanelFormatError(f"row {row}: bad date {raw!r} (expected YYYY-MM-DD)") from exc


def _parse_cell(raw: str, row: int, col: str, allow_blank: bool) -> float:
    raw = raw.strip()
    if raw == "":
        if allow_blank:
            return np.nan
        raise PanelFormatError(f"row {row}, column {col!r}: blank cell")
    try:
        return float(raw)
    except ValueError as exc:
        raise PanelFormatError(f"row {row}, column {col!r}: non-numeric cell {raw!r}") from exc


def load_yield_panel(path: str) -> YieldPanel:
    with open(path, "r", encoding="utf-8", newline="") as fh:
        rows = list(csv.reader(fh))
    if not rows:
        raise PanelFormatError("empty yields file")
    header = [h.strip() for h in rows[0]]
    if not header or header[0] != "date":
        raise PanelFormatError("yields header must start with 'date'")
    maturities = []
    for col in header[1:]:
        if not col.startswith("M"):
            raise PanelFormatError(f"yield column {col!r} must look like M<months>")
        try:
            maturities.append(float(col[1:]))
        except ValueError as exc:
            raise PanelFormatError(f"yield column {col!r} must look like M<months>") from exc
    if len(set(maturities)) != len(maturities):
        raise PanelFormatError("duplicate maturities in header")
    dates, data = [], []
    for i, row in enumerate(rows[1:], start=2):
        if len(row) != len(header):
            raise PanelFormatError(f"row {i}: expected {len(header)} cells, got {len(row)}")
        dates.append(_parse_date(row[0], i))
        data.append([_parse_cell(cell, i, header[j + 1], allow_blank=False)
                     for j, cell in enumerate(row[1:])])
    return YieldPanel(tuple(dates), tuple(maturities), np.asarray(data, dtype=float))


def load_indicator_panel(path: str) -> IndicatorPanel:
    with open(path, "r", encoding="utf-8", newline="") as fh:
        rows = list(csv.reader(fh))
    if not rows:
        raise PanelFormatError("empty indicators file")
    header = [h.strip() for h in rows[0]]
    if not header or header[0] != "date":
        raise PanelFormatError("indicators header must start with 'date'")
    names = header[1:]
    dates, data = [], []
    for i, row in enumerate(rows[1:], start=2):
        if len(row) != len(header):
            raise PanelFormatError(f"row {i}: expected {len(header)} cells, got {len(row)}")
        dates.append(_parse_date(row[0], i))
        data.append([_parse_cell(cell, i, names[j], allow_blank=True)
                     for j, cell in enumerate(row[1:])])
    return IndicatorPanel(tuple(dates), tuple(names), np.asarray(data, dtype=float))


def _fmt(x: float) -> str:
    if np.isnan(x):
        return ""
    return repr(float(x))


def write_yield_panel(panel: YieldPanel, path: str) -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["date"] + [f"M{m:g}" for m in panel.maturities])
        for i, d in enumerate(panel.dates):
            writer.writerow([d.isoformat()] + [_fmt(v) for v in panel.values[i]])


def write_indicator_panel(panel: IndicatorPanel, path: str) -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["date"] + list(panel.names))
        for i, d in enumerate(panel.dates):
            writer.writerow([d.isoformat()] + [_fmt(v) for v in panel.values[i]])


class ForecastSet:
    """Forecasts keyed by (model_id, origin_date, horizon_months, maturity).

    A key may be inserted at most once; values are predicted yields in
    percent.  Iteration is always in sorted key order so downstream
    artifacts are deterministic.
    """

    def __init__(self) -> None:
        self._entries: dict[tuple[str, dt.date, int, float], float] = {}

    def add(self, model_id: str, origin: dt.date, horizon: int, maturity: float,
            value: float) -> None:
        key = (model_id, origin, int(horizon), float(maturity))
        if key in self._entries:
            raise ValueError(f"duplicate forecast key {key}")
        self._entries[key] = float(value)

    def get(self, model_id: str, origin: dt.date, horizon: int, maturity: float) -> float:
        return self._entries[(model_id, origin, int(horizon), float(maturity))]

    def __contains__(self, key) -> bool:
        return key in self._entries

    def __len__(self) -> int:
        return len(self._entries)

    def items(self):
        return sorted(self._entries.items())

    def model_ids(self) -> tuple[str, ...]:
        return tuple(sorted({k[0] for k in self._entries}))

    def origins(self, model_id: str, horizon: int, maturity: float) -> tuple[dt.date, ...]:
        return tuple(sorted(k[1] for k in self._entries
                            if k[0] == model_id and k[2] == horizon and k[3] == maturity))

    def merge(self, other: "ForecastSet") -> None:
        for key, value in other.items():
            if key in self._entries:
                raise ValueError(f"duplicate forecast key {key}")
            self._entries[key] = value

    def error(self, panel: YieldPanel, model_id: str, origin: dt.date, horizon: int,
              maturity: float) -> float:
        """Realized minus forecast, in percent; KeyError if not realized."""
        target = add_months(origin, horizon)
        realized = panel.values[panel.date_index(target), panel.maturity_index(maturity)]
        return float(realized) - self.get(model_id, origin, horizon, maturity)


def write_forecasts(fs: ForecastSet, path: str) -> None:
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(["model_id", "origin_date", "horizon", "maturity", "forecast"])
        for (model_id, origin, horizon, maturity), value in fs.items():
            writer.writerow([model_id, origin.isoformat(), horizon, f"{maturity:g}", _fmt(value)])
