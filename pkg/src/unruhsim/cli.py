"""Command-line driver: sweep, fit, spectrum, invariance.

Exit codes: 0 success, 1 usage, 2 I/O or configuration, 3 numerical
failure, 4 invariance-threshold breach.  The output directory is taken
from --out if given, else from the UNRUHSIM_OUT environment variable,
else from the configuration.
"""

from __future__ import annotations

import argparse
import os
import sys
from pathlib import Path

from .config import SimulationConfig, load_config
from .constants import CODATA
from .coupling import coupling_frequency
from .eigensolve import eigendecompose
from .errors import ConfigError, DomainError, NumericalError
from .hamiltonian import BathSpec, build_hamiltonian
from .output import (
    write_bath_curves,
    write_invariance_table,
    write_kappa_fit,
    write_spectrum,
    write_tc_table,
)
from .rindler import (
    fock_truncated_check,
    invariance_residual,
    rindler_transform,
    symplectic_residual,
)
from .unruh import run_pipeline

__all__ = ["main"]

OUTPUT_DIR_ENV = "UNRUHSIM_OUT"

# Residual ceilings for the invariance report; beyond these the checks
# no longer confirm the identity at double precision.
COEFFICIENT_THRESHOLD = 1e-10
SYMPLECTIC_THRESHOLD = 1e-10
FOCK_THRESHOLD = 1e-8
FOCK_DIM = 16


def _gtau_list(text: str):
    try:
        values = [float(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated float list: {text!r}") from None
    if not values:
        raise argparse.ArgumentTypeError("need at least one g*tau value")
    return values


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="unruhsim",
        description=(
            "Critical temperatures of finite thermal baths and the simulated "
            "temperature-acceleration slope kappa = hbar/(2 pi k_B)."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", help="JSON run configuration (defaults if omitted)")
    common.add_argument("--out", help="output directory (overrides config and environment)")

    p_sweep = sub.add_parser(
        "sweep", parents=[common], help="solve every bath; write curves and tc_table.csv"
    )
    p_sweep.add_argument(
        "--plot",
        action=argparse.BooleanOptionalAction,
        default=True,
        help="render heat_capacity.png alongside the CSVs",
    )
    p_sweep.set_defaults(func=cmd_sweep)

    p_fit = sub.add_parser(
        "fit", parents=[common], help="solve every bath; fit kappa and write kappa_fit.json"
    )
    p_fit.add_argument(
        "--plot",
        action=argparse.BooleanOptionalAction,
        default=True,
        help="render unruh_line.png alongside the JSON",
    )
    p_fit.set_defaults(func=cmd_fit)

    p_spec = sub.add_parser(
        "spectrum", parents=[common], help="write the eigenvalue table of one bath"
    )
    p_spec.add_argument("--ne", type=int, required=True, help="bath size N_e (>= 1)")
    p_spec.set_defaults(func=cmd_spectrum)

    p_inv = sub.add_parser(
        "invariance", parents=[common], help="verify the Rindler-invariance identities"
    )
    p_inv.add_argument(
        "--gtau",
        type=_gtau_list,
        required=True,
        help="comma-separated rapidities, e.g. 0.5,1,2,5",
    )
    p_inv.set_defaults(func=cmd_invariance)
    return parser


def _load(args) -> SimulationConfig:
    if args.config is None:
        return SimulationConfig()
    return load_config(args.config)


def _resolve_out(args, config: SimulationConfig | None) -> Path:
    if args.out:
        target = args.out
    elif os.environ.get(OUTPUT_DIR_ENV):
        target = os.environ[OUTPUT_DIR_ENV]
    elif config is not None:
        target = config.output_dir
    else:
        target = "out"
    path = Path(target)
    path.mkdir(parents=True, exist_ok=True)
    return path


def cmd_sweep(args) -> int:
    config = _load(args)
    out = _resolve_out(args, config)
    result = run_pipeline(config)
    paths = write_bath_curves(out, result.curves)
    paths.append(write_tc_table(out, result.results))
    if args.plot:
        from . import plotting

        paths.append(plotting.plot_heat_capacity(result.curves, out / "heat_capacity.png"))
    print(f"sweep: {len(result.results)} baths, {len(paths)} files in {out}")
    return 0


def cmd_fit(args) -> int:
    config = _load(args)
    out = _resolve_out(args, config)
    result = run_pipeline(config)
    if result.fit is None:
        raise ConfigError("the slope fit needs at least two baths in ne_list")
    write_kappa_fit(out, result.fit)
    if args.plot:
        from . import plotting

        plotting.plot_unruh_line(result.results, result.fit, config.omega_mod, out / "unruh_line.png")
    fit = result.fit
    print(
        f"fit: kappa = {fit.kappa_pKs:.4f} pK s over {fit.n_points} baths "
        f"(predicted {fit.kappa_theory_pKs:.4f}, ratio {fit.ratio:.4f})"
    )
    return 0


def cmd_spectrum(args) -> int:
    config = _load(args)
    out = _resolve_out(args, config)
    eta = CODATA.hbar * coupling_frequency(config.a_ch)
    decomp = eigendecompose(build_hamiltonian(BathSpec(n_e=args.ne, eta=1.0)))
    path = write_spectrum(out, args.ne, decomp.values, eta)
    print(f"spectrum: {decomp.values.size} levels in {path}")
    return 0


def cmd_invariance(args) -> int:
    out = _resolve_out(args, None)
    rows = []
    breach = False
    for gtau in args.gtau:
        m = rindler_transform(gtau)
        coeff = invariance_residual(gtau)
        sympl = symplectic_residual(m)
        fock = fock_truncated_check(FOCK_DIM, gtau)
        rows.append((gtau, coeff, sympl, fock))
        if coeff > COEFFICIENT_THRESHOLD or sympl > SYMPLECTIC_THRESHOLD or fock > FOCK_THRESHOLD:
            breach = True
    path = write_invariance_table(out, rows)
    status = "BREACH" if breach else "ok"
    print(f"invariance: {len(rows)} rapidities, {status}, table in {path}")
    return 4 if breach else 0


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 0 for --help, 2 for usage problems; remap the
        # latter onto this tool's usage code.
        return 0 if exc.code == 0 else 1
    try:
        return args.func(args)
    except (ConfigError, DomainError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except NumericalError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())
