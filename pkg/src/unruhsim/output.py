"""Bit-stable CSV and JSON emission.

Every file is written the same way on every run: floats as scientific
notation with 17 significant digits (lossless double round-trip), '.'
decimal separator, LF line endings, JSON with sorted keys.  Golden-file
comparisons in the test suite diff these outputs byte for byte.
"""

from __future__ import annotations

import json
from pathlib import Path

from .unruh import (
    EXPERIMENT_KAPPA_PKS,
    EXPERIMENT_KAPPA_UNCERTAINTY_PKS,
    BathCurve,
    BathResult,
    KappaFit,
)

__all__ = [
    "format_float",
    "write_csv",
    "write_json",
    "write_bath_curves",
    "write_tc_table",
    "write_kappa_fit",
    "write_spectrum",
    "write_invariance_table",
]


def format_float(x: float) -> str:
    """Scientific notation with 17 significant digits; round-trips exactly."""
    return f"{x:.16e}"


def _cell(value) -> str:
    if isinstance(value, bool):
        raise TypeError("booleans have no CSV representation here")
    if isinstance(value, int):
        return str(value)
    return format_float(float(value))


def write_csv(path: Path, header: list[str], rows) -> Path:
    """Write one CSV file: header row, LF endings, stable float format."""
    lines = [",".join(header)]
    lines.extend(",".join(_cell(v) for v in row) for row in rows)
    path.write_text("\n".join(lines) + "\n", newline="\n")
    return path


def write_json(path: Path, payload: dict) -> Path:
    """Write one JSON file with sorted keys and a trailing newline."""
    path.write_text(json.dumps(payload, indent=2, sort_keys=True) + "\n", newline="\n")
    return path


def write_bath_curves(out_dir: Path, curves: tuple[BathCurve, ...]) -> list[Path]:
    """One heat_capacity_Ne<k>.csv per bath over the configured grid."""
    paths = []
    for curve in curves:
        rows = zip(curve.temp_kelvin, curve.t, curve.heat_capacity, curve.energy, curve.n_bar)
        paths.append(
            write_csv(
                out_dir / f"heat_capacity_Ne{curve.n_e}.csv",
                ["T_kelvin", "t_reduced", "C_over_kB", "E_over_eta", "n_bar"],
                rows,
            )
        )
    return paths


def write_tc_table(out_dir: Path, results: tuple[BathResult, ...]) -> Path:
    """Critical-point table, one row per bath."""
    rows = [(r.n_e, r.t_c_kelvin, r.n_bar_at_tc, r.a_sim, r.eta) for r in results]
    return write_csv(
        out_dir / "tc_table.csv",
        ["Ne", "Tc_kelvin", "n_bar_at_Tc", "A_sim_m_per_s2", "eta_J"],
        rows,
    )


def write_kappa_fit(out_dir: Path, fit: KappaFit) -> Path:
    """Fitted slope with the predicted and measured comparison values."""
    payload = {
        "kappa_pKs": fit.kappa_pKs,
        "kappa_theory_pKs": fit.kappa_theory_pKs,
        "ratio": fit.ratio,
        "n_points": fit.n_points,
        "max_rel_residual": fit.max_rel_residual,
        "experiment": {
            "kappa_pKs": EXPERIMENT_KAPPA_PKS,
            "uncertainty_pKs": EXPERIMENT_KAPPA_UNCERTAINTY_PKS,
        },
    }
    return write_json(out_dir / "kappa_fit.json", payload)


def write_spectrum(out_dir: Path, n_e: int, values_reduced, eta: float) -> Path:
    """Eigenvalues of one bath in units of eta and in joules."""
    rows = [(i, v, v * eta) for i, v in enumerate(values_reduced)]
    return write_csv(
        out_dir / f"spectrum_Ne{n_e}.csv", ["level", "eps_over_eta", "eps_J"], rows
    )


def write_invariance_table(out_dir: Path, rows) -> Path:
    """Residual table of the Rindler-invariance checks, one row per rapidity."""
    return write_csv(
        out_dir / "invariance.csv",
        ["gtau", "coefficient_residual", "symplectic_residual", "fock_safe_block_residual"],
        rows,
    )
