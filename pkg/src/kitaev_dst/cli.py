"""Command-line front end writing deterministic CSV files.

Subcommands: ``pbc-gap``, ``spectrum``, ``phase-diagram``, ``zero-modes``,
``zero-mode-mus``.  Real numbers are written in scientific notation with
17 significant digits so that every double round-trips exactly.
"""

from __future__ import annotations

import argparse
import sys
from typing import Iterable, Sequence

import numpy as np

from . import hamiltonian, perturbation, spectral, zeromode
from .model import ChainParams, EtaPoint, from_eta
from .spectral import DEFAULT_THRESHOLD, WORKERS_ENV


class CliError(Exception):
    pass


def fmt(x: float) -> str:
    return f"{x:.16e}"


def write_csv(path: str, header: Sequence[str], rows: Iterable[Sequence]) -> None:
    lines = [",".join(header)]
    for row in rows:
        lines.append(",".join(str(v) if isinstance(v, (int, np.integer)) else fmt(v) for v in row))
    text = "\n".join(lines) + "\n"
    try:
        with open(path, "w", newline="\n") as fh:
            fh.write(text)
    except OSError as exc:
        raise CliError(f"cannot write {path}: {exc.strerror or exc}") from exc


def _grid(lo: float, hi: float, steps: int, name: str) -> np.ndarray:
    if steps < 1:
        raise CliError(f"{name} steps must be >= 1")
    if steps == 1:
        return np.array([float(lo)])
    if not hi > lo:
        raise CliError(f"{name} range must satisfy min < max")
    return np.linspace(lo, hi, steps)


def _params(args) -> ChainParams:
    try:
        return ChainParams(args.L, args.t, args.delta, args.mu)
    except ValueError as exc:
        raise CliError(str(exc)) from exc


def _workers(args) -> int:
    if args.workers is not None:
        if args.workers < 1:
            raise CliError("--workers must be >= 1")
        return args.workers
    try:
        return spectral.default_workers()
    except ValueError as exc:
        raise CliError(str(exc)) from exc


def cmd_pbc_gap(args) -> None:
    if args.mu_steps < 2:
        raise CliError("--mu-steps must be >= 2")
    c = _params(argparse.Namespace(L=args.L, t=args.t, delta=args.delta, mu=0.0))
    mu = _grid(args.mu_min, args.mu_max, args.mu_steps, "mu")
    profile = hamiltonian.pbc_gap_profile(c, mu)
    write_csv(args.out, ["mu", "gap"], profile.tolist())


def cmd_spectrum(args) -> None:
    c = _params(args)
    build = hamiltonian.momentum_coupling if args.representation == "momentum" else hamiltonian.position_coupling
    if args.kind == "singular":
        values = spectral.singular_spectrum(build(c)).values
        write_csv(args.out, ["zeta", "value"], [(i + 1, v) for i, v in enumerate(values)])
    elif args.kind == "eigen":
        ev = spectral.complex_spectrum(build(c)).values
        ev = sorted(ev, key=lambda z: (z.real, z.imag))
        write_csv(args.out, ["zeta", "re", "im"], [(i + 1, z.real, z.imag) for i, z in enumerate(ev)])
    else:
        if not c.t > 0:
            raise CliError(f"kind={args.kind} requires t > 0")
        fn = perturbation.third_order_spectrum if args.kind == "perturbative" else perturbation.effective_spectrum
        energies = fn(c).energies
        write_csv(args.out, ["zeta", "value"], [(i + 1, v) for i, v in enumerate(energies)])


def cmd_phase_diagram(args) -> None:
    if not args.threshold > 0:
        raise CliError("--threshold must be positive")
    if not args.E0 > 0:
        raise CliError("--E0 must be positive")
    eta = _grid(args.eta_min, args.eta_max, args.eta_steps, "eta")
    if eta.min() < 0 or eta.max() > 1:
        raise CliError("eta range must lie within [0, 1]")
    mu = _grid(args.mu_min, args.mu_max, args.mu_steps, "mu")
    pd = spectral.scan_phase_diagram(args.L, args.E0, eta, mu, args.threshold, workers=_workers(args))
    write_csv(
        args.out,
        ["eta", "mu_tilde", "d0", "topological"],
        ((e, m, d, int(topo)) for e, m, d, topo in pd.rows()),
    )


def cmd_zero_modes(args) -> None:
    try:
        c = from_eta(EtaPoint(args.eta, args.mu_tilde, args.E0), args.L)
    except ValueError as exc:
        raise CliError(str(exc)) from exc
    m = hamiltonian.momentum_coupling(c)
    d0 = spectral.minimal_singular_value(m)
    if d0 >= args.threshold * args.E0:
        raise CliError(f"no zero mode: d0={d0:.3e} is above the threshold (trivial phase)")
    try:
        if args.method == "svd":
            pair = zeromode.null_pair_svd(m)
        else:
            pair = zeromode.null_pair_projection(m, seed=args.seed)
    except zeromode.DegenerateNullSpaceError as exc:
        raise CliError(str(exc)) from exc
    except zeromode.NoZeroModeError as exc:
        raise CliError(str(exc)) from exc

    envelope = args.fit == "envelope"
    fits = {}
    for name, psi in (("A", pair.psi_A), ("B", pair.psi_B)):
        try:
            fits[name] = zeromode.fit_decay(psi, zeromode.dominant_edge(psi), envelope=envelope)
        except ValueError as exc:
            raise CliError(f"decay fit for species {name} failed: {exc}") from exc

    rows = [
        (i + 1, pair.phi_A[i], pair.phi_B[i], pair.psi_A[i], pair.psi_B[i]) for i in range(c.L)
    ]
    write_csv(args.out, ["index", "phiA", "phiB", "psiA", "psiB"], rows)
    summary = [
        ("d0", pair.d0),
        ("residual_left", pair.residual_left),
        ("residual_right", pair.residual_right),
        ("xi_A", fits["A"].xi),
        ("r2_A", fits["A"].r_squared),
        ("xi_B", fits["B"].xi),
        ("r2_B", fits["B"].r_squared),
    ]
    for key, value in summary:
        print(f"{key}={fmt(value)}", file=sys.stderr)


def cmd_zero_mode_mus(args) -> None:
    if not args.t > 0:
        raise CliError("--t must be > 0")
    c = _params(argparse.Namespace(L=args.L, t=args.t, delta=args.delta, mu=0.0))
    t_eff = perturbation.effective_hopping(c.t, c.delta)
    if t_eff == 0:
        raise CliError("effective hopping vanishes; no band crossings")
    mus = perturbation.zero_mode_mu_predictions(c.L, t_eff / c.E0)
    write_csv(args.out, ["zeta", "mu_tilde"], [(i + 1, v) for i, v in enumerate(mus)])


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="kitaev-dst",
        description="Finite Kitaev chain analysis in the hard-wall sine basis.",
        epilog=f"Environment: {WORKERS_ENV} sets the default worker count of the "
        "phase scan; --workers takes precedence.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_raw(p, mu=True):
        p.add_argument("--L", type=int, required=True, help="number of sites")
        p.add_argument("--t", type=float, default=1.0, help="hopping")
        p.add_argument("--delta", type=float, required=True, help="pairing amplitude")
        if mu:
            p.add_argument("--mu", type=float, default=0.0, help="chemical potential")

    p = sub.add_parser("pbc-gap", help="periodic-chain gap versus mu")
    add_raw(p, mu=False)
    p.add_argument("--mu-min", type=float, default=-3.0)
    p.add_argument("--mu-max", type=float, default=3.0)
    p.add_argument("--mu-steps", type=int, default=601)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_pbc_gap)

    p = sub.add_parser("spectrum", help="singular values, eigenvalues or perturbative band")
    add_raw(p)
    p.add_argument("--representation", choices=["momentum", "position"], default="momentum")
    p.add_argument("--kind", choices=["singular", "eigen", "perturbative", "effective"], default="singular")
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("phase-diagram", help="minimal singular value on an (eta, mu_tilde) grid")
    p.add_argument("--L", type=int, required=True)
    p.add_argument("--E0", type=float, default=1.0)
    p.add_argument("--eta-min", type=float, default=0.0)
    p.add_argument("--eta-max", type=float, default=1.0)
    p.add_argument("--eta-steps", type=int, default=101)
    p.add_argument("--mu-min", type=float, default=-2.5)
    p.add_argument("--mu-max", type=float, default=2.5)
    p.add_argument("--mu-steps", type=int, default=101)
    p.add_argument("--threshold", type=float, default=DEFAULT_THRESHOLD)
    p.add_argument("--workers", type=int, default=None, help=f"default: ${WORKERS_ENV} or CPU count")
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_phase_diagram)

    p = sub.add_parser("zero-modes", help="Majorana zero-mode pair and decay fits")
    p.add_argument("--L", type=int, required=True)
    p.add_argument("--eta", type=float, required=True)
    p.add_argument("--mu-tilde", type=float, required=True)
    p.add_argument("--E0", type=float, default=1.0)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--method", choices=["svd", "projection"], default="projection")
    p.add_argument("--fit", choices=["envelope", "plain"], default="envelope")
    p.add_argument("--threshold", type=float, default=DEFAULT_THRESHOLD)
    p.add_argument("--workers", type=int, default=None, help="accepted for symmetry; the command is serial")
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_zero_modes)

    p = sub.add_parser("zero-mode-mus", help="weak-pairing chemical potentials hosting zero modes")
    add_raw(p, mu=False)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_zero_mode_mus)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        args.func(args)
    except (CliError, ValueError) as exc:
        print(f"kitaev-dst {args.command}: error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
