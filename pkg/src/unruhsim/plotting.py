"""Figure rendering for the sweep and fit reports.

Uses the Agg backend and strips the Software metadata tag so the PNG
bytes depend only on the data, keeping figures inside the determinism
contract of the CLI outputs.
"""

from __future__ import annotations

from pathlib import Path

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt
import numpy as np

from .constants import CODATA, PhysicalConstants, kappa_theory
from .unruh import EXPERIMENT_KAPPA_PKS, BathCurve, BathResult, KappaFit

__all__ = ["plot_heat_capacity", "plot_unruh_line"]

_SAVE_KWARGS = {"dpi": 150, "metadata": {"Software": None}}


def plot_heat_capacity(curves: tuple[BathCurve, ...], path: Path) -> Path:
    """Heat-capacity family C(T)/k_B, one curve per bath."""
    fig, ax = plt.subplots(figsize=(7.0, 4.5))
    cmap = plt.get_cmap("viridis")
    denom = max(len(curves) - 1, 1)
    for i, curve in enumerate(curves):
        ax.plot(
            curve.temp_kelvin,
            curve.heat_capacity,
            color=cmap(i / denom),
            lw=1.2,
            label=f"$N_e$ = {curve.n_e}",
        )
    ax.set_xscale("log")
    ax.set_xlabel("T (K)")
    ax.set_ylabel(r"C / $k_B$")
    ax.set_title("Bath heat capacity; maxima mark the critical temperatures")
    ncol = 2 if len(curves) > 8 else 1
    ax.legend(fontsize=7, ncol=ncol, frameon=False)
    fig.tight_layout()
    fig.savefig(path, **_SAVE_KWARGS)
    plt.close(fig)
    return path


def plot_unruh_line(
    results: tuple[BathResult, ...],
    fit: KappaFit,
    omega_mod: float,
    path: Path,
    constants: PhysicalConstants = CODATA,
) -> Path:
    """Critical temperature against mean excitation number with both slopes.

    The simulated points are overlaid with the fitted through-origin
    line and the predicted one, both expressed as T(n_bar) through the
    same population-to-acceleration map used for the fit.
    """
    n_bar = np.array([r.n_bar_at_tc for r in results])
    t_c = np.array([r.t_c_kelvin for r in results])
    grid = np.linspace(n_bar.min() * 0.9, n_bar.max() * 1.05, 200)
    x_grid = np.pi * constants.c * omega_mod / np.log1p(1.0 / grid) / constants.c

    fig, ax = plt.subplots(figsize=(6.5, 4.5))
    ax.plot(
        grid,
        kappa_theory(constants) * 1e-12 * x_grid,
        "k-",
        lw=1.0,
        label=rf"predicted $\kappa$ = {kappa_theory(constants):.4f} pK s",
    )
    ax.plot(
        grid,
        fit.kappa_pKs * 1e-12 * x_grid,
        "b--",
        lw=1.0,
        label=rf"fit $\kappa$ = {fit.kappa_pKs:.4f} pK s",
    )
    ax.plot(n_bar, t_c, "rx", ms=7, label="simulated baths")
    ax.set_xlabel(r"$\bar{n}$ at $T_c$")
    ax.set_ylabel(r"$T_c$ (K)")
    ax.set_title(rf"measured reference: $\kappa$ = {EXPERIMENT_KAPPA_PKS:.2f}(7) pK s")
    ax.legend(frameon=False)
    fig.tight_layout()
    fig.savefig(path, **_SAVE_KWARGS)
    plt.close(fig)
    return path
