"""Run configuration: defaults, validation, JSON ingestion.

The default bath list 50..200 in steps of 10 is a calibration choice:
small baths sit visibly above the fitted line (the N_e = 1 point lands
at 2.3x the predicted slope), and by N_e ~ 50 the points have settled
onto it, so this window reproduces the published slope to a fraction
of a percent while staying cheap.  Unknown keys are rejected rather
than ignored; silently dropping a typo like "ne_lsit" would run a
different simulation than the one asked for.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass, field, fields
from pathlib import Path

from .errors import ConfigError

__all__ = ["CurveGrid", "SimulationConfig", "DEFAULT_NE_LIST", "load_config"]

DEFAULT_NE_LIST = tuple(range(50, 201, 10))

_CONVENTIONS = ("pairs", "quanta")


@dataclass(frozen=True)
class CurveGrid:
    """Reduced-temperature grid for the emitted observable curves.

    t_max = None defers to 10 * max(ne_list), wide enough to show every
    configured bath past its peak.
    """

    t_min: float = 1e-2
    t_max: float | None = None
    points: int = 400

    def __post_init__(self) -> None:
        if not isinstance(self.points, int) or isinstance(self.points, bool):
            raise ConfigError(f"t_scan.points must be an integer, got {self.points!r}")
        if self.points < 100:
            raise ConfigError(f"t_scan.points must be >= 100, got {self.points}")
        if not (isinstance(self.t_min, (int, float)) and math.isfinite(self.t_min)) or (
            self.t_min <= 0.0
        ):
            raise ConfigError(f"t_scan.t_min must be positive, got {self.t_min!r}")
        if self.t_max is not None:
            if not (isinstance(self.t_max, (int, float)) and math.isfinite(self.t_max)) or (
                self.t_max <= self.t_min
            ):
                raise ConfigError(
                    f"t_scan.t_max must exceed t_min = {self.t_min}, got {self.t_max!r}"
                )


@dataclass(frozen=True)
class SimulationConfig:
    """Full description of one pipeline run."""

    a_ch: float = 1.07e14  # characteristic acceleration, m/s^2
    omega_mod: float = 2.0 * math.pi * 2100.0  # modulation frequency, rad/s
    ne_list: tuple[int, ...] = DEFAULT_NE_LIST
    number_convention: str = "pairs"
    t_scan: CurveGrid = field(default_factory=CurveGrid)
    output_dir: str = "out"
    parallel: bool = False

    def __post_init__(self) -> None:
        for name in ("a_ch", "omega_mod"):
            value = getattr(self, name)
            if not (isinstance(value, (int, float)) and math.isfinite(value) and value > 0.0):
                raise ConfigError(f"{name} must be positive and finite, got {value!r}")
        if not isinstance(self.ne_list, (list, tuple)):
            raise ConfigError(f"ne_list must be a sequence, got {self.ne_list!r}")
        if not self.ne_list:
            raise ConfigError("ne_list must not be empty")
        cleaned = []
        for n in self.ne_list:
            if not isinstance(n, int) or isinstance(n, bool) or n < 1:
                raise ConfigError(f"ne_list entries must be integers >= 1, got {n!r}")
            cleaned.append(n)
        if any(b <= a for a, b in zip(cleaned, cleaned[1:])):
            raise ConfigError(f"ne_list must be strictly increasing, got {cleaned}")
        object.__setattr__(self, "ne_list", tuple(cleaned))
        if self.number_convention not in _CONVENTIONS:
            raise ConfigError(
                f"number_convention must be one of {_CONVENTIONS}, "
                f"got {self.number_convention!r}"
            )
        if not isinstance(self.t_scan, CurveGrid):
            raise ConfigError(f"t_scan must be a CurveGrid, got {self.t_scan!r}")
        if not isinstance(self.output_dir, str) or not self.output_dir:
            raise ConfigError(f"output_dir must be a non-empty string, got {self.output_dir!r}")
        if not isinstance(self.parallel, bool):
            raise ConfigError(f"parallel must be a boolean, got {self.parallel!r}")

    def resolved_t_max(self) -> float:
        """Curve-grid upper edge: configured value or 10 * largest bath."""
        if self.t_scan.t_max is not None:
            return self.t_scan.t_max
        return 10.0 * max(self.ne_list)


def _build_curve_grid(raw) -> CurveGrid:
    if not isinstance(raw, dict):
        raise ConfigError(f"t_scan must be an object, got {raw!r}")
    known = {f.name for f in fields(CurveGrid)}
    unknown = set(raw) - known
    if unknown:
        raise ConfigError(f"unknown t_scan keys: {sorted(unknown)}; known: {sorted(known)}")
    return CurveGrid(**raw)


def load_config(path: str | Path) -> SimulationConfig:
    """Read a JSON run configuration; absent keys fall back to defaults."""
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise ConfigError(f"cannot read config {path}: {exc}") from exc
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigError(
            f"config {path} is not valid JSON: {exc.msg} (line {exc.lineno}, column {exc.colno})"
        ) from exc
    if not isinstance(raw, dict):
        raise ConfigError(f"config {path} must hold a JSON object, got {type(raw).__name__}")

    known = {f.name for f in fields(SimulationConfig)}
    unknown = set(raw) - known
    if unknown:
        raise ConfigError(f"unknown config keys: {sorted(unknown)}; known: {sorted(known)}")

    kwargs = dict(raw)
    if "ne_list" in kwargs:
        if not isinstance(kwargs["ne_list"], list):
            raise ConfigError(f"ne_list must be a JSON array, got {kwargs['ne_list']!r}")
        kwargs["ne_list"] = tuple(kwargs["ne_list"])
    if "t_scan" in kwargs:
        kwargs["t_scan"] = _build_curve_grid(kwargs["t_scan"])
    return SimulationConfig(**kwargs)
