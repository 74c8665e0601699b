"""Command-line frontend.

Subcommands: ``solve`` (one run), ``table`` (convergence sweep),
``mesh`` (mesh dump), ``sigma-check`` (fitting-factor property report),
``trunc`` (layer truncation profile), ``precond`` (condition-number
comparison).  Identical argument vectors produce byte-identical output.
"""

from __future__ import annotations

import argparse
import sys
from fractions import Fraction
from math import log10, log2

import numpy as np

from . import __version__
from .diagnostics import layer_truncation_profile, mesh_parameter_floor, model_curves
from .errors import ConfigurationError, LayerFDError
from .harness import SolveConfig, SolveMethod, convergence_table, emit, solution_error, solve
from .meshes import MeshFamily, MeshSpec, build_mesh
from .reduced import ReducedMode
from .schemes import FittingKind, assemble, precondition, sigma
from .tridiag import inf_condition_estimate, thomas_solve

_MESH_CHOICES = {f.value: f for f in MeshFamily}
_SCHEME_CHOICES = {k.value: k for k in FittingKind}
_METHOD_CHOICES = {m.value: m for m in SolveMethod}
_REDUCED_CHOICES = {m.value: m for m in ReducedMode}


def _eps_value(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}")
    if not 0.0 < value <= 1.0:
        raise argparse.ArgumentTypeError(f"eps must lie in (0, 1], got {text}")
    return value


def _eps_list(text: str) -> list[float]:
    """Comma list of values, or a decade range like 1e-1:1e-9."""
    if ":" in text:
        lo_text, hi_text = text.split(":", 1)
        start, end = _eps_value(lo_text), _eps_value(hi_text)
        if end > start:
            start, end = end, start
        decades = log10(start / end)
        k = round(decades)
        if abs(decades - k) > 1e-9:
            raise argparse.ArgumentTypeError(f"eps range endpoints must be whole decades apart: {text!r}")
        return [start * 10.0 ** (-i) for i in range(k + 1)]
    return [_eps_value(part) for part in text.split(",")]


def _n_value(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}")
    if value < 4:
        raise argparse.ArgumentTypeError(f"N must be at least 4, got {text}")
    return value


def _n_list(text: str) -> list[int]:
    """Comma list of sizes, or a doubling range like 32:1024."""
    if ":" in text:
        lo_text, hi_text = text.split(":", 1)
        start, end = _n_value(lo_text), _n_value(hi_text)
        if end < start:
            start, end = end, start
        doublings = log2(end / start)
        k = round(doublings)
        if abs(doublings - k) > 1e-9:
            raise argparse.ArgumentTypeError(f"N range endpoints must be powers of 2 apart: {text!r}")
        return [start * 2 ** i for i in range(k + 1)]
    return [_n_value(part) for part in text.split(",")]


def _ratio(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise argparse.ArgumentTypeError(f"not a rational number: {text!r}")


def _add_mesh_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--mesh", choices=sorted(_MESH_CHOICES), default="shishkin-n",
                   help="mesh family (default: shishkin-n)")
    p.add_argument("--a", type=float, default=3.0, help="mesh grading parameter (default: 3)")
    p.add_argument("--q", type=_ratio, default=Fraction(1, 2),
                   help="fraction of points in the layer, a rational like 1/2 (default: 1/2)")
    p.add_argument("--beta", type=float, default=0.8, help="convection floor used by the mesh (default: 0.8)")


def _add_run_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--problem", choices=("ex1", "ex2"), default="ex1")
    p.add_argument("--method", choices=sorted(_METHOD_CHOICES), default="decomposed")
    p.add_argument("--reduced", choices=sorted(_REDUCED_CHOICES), default=None,
                   help="reduced-solution source (default: exact when available, else rk4)")
    p.add_argument("--scheme", choices=sorted(_SCHEME_CHOICES), default="asi")
    p.add_argument("--precondition", action="store_true", help="row-scale the fine region before solving")
    _add_mesh_args(p)


def _mesh_spec(args: argparse.Namespace, n: int) -> MeshSpec:
    return MeshSpec(family=_MESH_CHOICES[args.mesh], n=n, q=args.q, a=args.a, beta=args.beta)


def _config(args: argparse.Namespace, n: int) -> SolveConfig:
    return SolveConfig(
        problem=args.problem,
        method=_METHOD_CHOICES[args.method],
        scheme=_SCHEME_CHOICES[args.scheme],
        mesh=_mesh_spec(args, n),
        reduced_mode=None if args.reduced is None else _REDUCED_CHOICES[args.reduced],
        preconditioned=args.precondition,
    )


def _write(args: argparse.Namespace, text: str) -> None:
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="\n") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def _cmd_solve(args: argparse.Namespace) -> int:
    cfg = _config(args, args.n)
    result = solve(cfg, args.eps)
    lines = [
        f"problem={args.problem} method={args.method} scheme={args.scheme} "
        f"mesh={args.mesh} eps={args.eps:.6g} N={args.n}"
    ]
    try:
        lines.append(f"a_star = {mesh_parameter_floor(result.bvp, args.beta):.6g}")
    except ConfigurationError:
        pass
    lines.append(f"E = {solution_error(result):.6e}")
    if args.nodal:
        lines.append("i,x_i,u_i")
        for i, (x, u) in enumerate(zip(result.mesh.points, result.u)):
            lines.append(f"{i},{x:.16e},{u:.16e}")
    _write(args, "\n".join(lines) + "\n")
    return 0


def _cmd_table(args: argparse.Namespace) -> int:
    cfg = _config(args, args.n[-1])
    table = convergence_table(cfg, args.eps, args.n)
    _write(args, emit(table, args.format))
    return 0


def _cmd_mesh(args: argparse.Namespace) -> int:
    mesh = build_mesh(_mesh_spec(args, args.n), args.eps)
    lines = ["i,x_i,step"]
    steps = mesh.steps()
    for i, x in enumerate(mesh.points):
        step = "" if i == 0 else f"{steps[i - 1]:.16e}"
        lines.append(f"{i},{x:.16e},{step}")
    _write(args, "\n".join(lines) + "\n")
    return 0


def _cmd_sigma_check(args: argparse.Namespace) -> int:
    grid = np.logspace(-8, 3, args.points)
    slack = 1e-15
    kinds = (FittingKind.UPWIND, FittingKind.SAMARSKII, FittingKind.RUNCHAL_SPALDING, FittingKind.ASI)
    lines = []
    ok = True

    bound_excess = 0.0
    for kind in kinds:
        values = sigma(kind, grid)
        bound_excess = max(bound_excess, float(np.max(values - 1.0)), float(np.max(-values)))
    passed = bound_excess <= slack
    ok &= passed
    lines.append(f"bounds 0 <= sigma <= 1 over {args.points} rho values: "
                 f"{'OK' if passed else 'FAIL'} (max excess {bound_excess:.2e})")

    cons_excess = 0.0
    for kind in kinds[1:]:
        values = sigma(kind, grid)
        cons_excess = max(cons_excess, float(np.max(np.abs(values + grid - 1.0) - np.minimum(grid, grid ** 2))))
    passed = cons_excess <= slack
    ok &= passed
    lines.append(f"consistency |sigma+rho-1| <= min(rho, rho^2): "
                 f"{'OK' if passed else 'FAIL'} (max excess {cons_excess:.2e})")

    asi = sigma(FittingKind.ASI, grid)
    one_sided = float(np.min(asi + grid - 1.0))
    passed = one_sided >= -slack
    ok &= passed
    lines.append(f"one-sided bound sigma_asi + rho - 1 >= 0: "
                 f"{'OK' if passed else 'FAIL'} (min value {one_sided:.2e})")

    ordering = float(np.max(asi - sigma(FittingKind.SAMARSKII, grid)))
    passed = ordering <= slack
    ok &= passed
    lines.append(f"ordering sigma_asi <= sigma_samarskii: "
                 f"{'OK' if passed else 'FAIL'} (max excess {ordering:.2e})")

    upwind_gap = abs(sigma(FittingKind.UPWIND, 0.5) + 0.5 - 1.0)
    passed = upwind_gap > min(0.5, 0.25)
    ok &= passed
    lines.append(f"upwind violates consistency at rho=0.5: "
                 f"{'OK' if passed else 'FAIL'} ({upwind_gap:.2g} > 0.25)")

    _write(args, "\n".join(lines) + "\n")
    return 0 if ok else 1


def _cmd_trunc(args: argparse.Namespace) -> int:
    from .problems import builtin_problem

    bvp = builtin_problem(args.problem, args.eps)
    mesh = build_mesh(_mesh_spec(args, args.n), args.eps)
    tau = layer_truncation_profile(bvp, mesh, _SCHEME_CHOICES[args.scheme])
    lines = ["i,x_i,tau"]
    for i in range(1, mesh.n):
        lines.append(f"{i},{mesh.points[i]:.16e},{tau[i - 1]:.16e}")
    _write(args, "\n".join(lines) + "\n")
    return 0


def _cmd_precond(args: argparse.Namespace) -> int:
    from .problems import builtin_problem

    lines = ["eps,kappa_unscaled,kappa_scaled"]
    for eps in args.eps:
        bvp = builtin_problem(args.problem, eps)
        mesh = build_mesh(_mesh_spec(args, args.n), eps)
        system = assemble(bvp.coeffs.f, bvp, mesh, _SCHEME_CHOICES[args.scheme], (bvp.g0, bvp.g1))
        kappa = inf_condition_estimate(system)
        kappa_scaled = inf_condition_estimate(precondition(system))
        lines.append(f"{eps:.6g},{kappa:.6e},{kappa_scaled:.6e}")
    _write(args, "\n".join(lines) + "\n")
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="layerfd",
        description="Fitted finite-difference schemes on layer-adapted meshes for "
                    "1-D singularly perturbed convection-diffusion problems.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("solve", help="run one solve and report the nodal maximum error")
    _add_run_args(p)
    p.add_argument("--eps", type=_eps_value, default=1e-6)
    p.add_argument("--n", type=_n_value, default=64)
    p.add_argument("--nodal", action="store_true", help="also dump the nodal solution as CSV")
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_solve)

    p = sub.add_parser("table", help="convergence sweep over an (eps, N) grid")
    _add_run_args(p)
    p.add_argument("--eps", type=_eps_list, default=_eps_list("1e-1:1e-9"),
                   help="comma list or decade range like 1e-1:1e-9 (default)")
    p.add_argument("--n", type=_n_list, default=_n_list("32:1024"),
                   help="comma list or doubling range like 32:1024 (default)")
    p.add_argument("--format", choices=("csv", "md"), default="md")
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_table)

    p = sub.add_parser("mesh", help="dump mesh points as CSV")
    _add_mesh_args(p)
    p.add_argument("--eps", type=_eps_value, required=True)
    p.add_argument("--n", type=_n_value, required=True)
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_mesh)

    p = sub.add_parser("sigma-check", help="verify the fitting-factor inequalities on a log grid")
    p.add_argument("--points", type=int, default=10000)
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_sigma_check)

    p = sub.add_parser("trunc", help="layer-component truncation profile as CSV")
    p.add_argument("--problem", choices=("ex1", "ex2"), default="ex1")
    p.add_argument("--scheme", choices=sorted(_SCHEME_CHOICES), default="asi")
    _add_mesh_args(p)
    p.add_argument("--eps", type=_eps_value, required=True)
    p.add_argument("--n", type=_n_value, required=True)
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_trunc)

    p = sub.add_parser("precond", help="condition numbers with and without row scaling")
    p.add_argument("--problem", choices=("ex1", "ex2"), default="ex1")
    p.add_argument("--scheme", choices=sorted(_SCHEME_CHOICES), default="asi")
    _add_mesh_args(p)
    p.add_argument("--eps", type=_eps_list, default=_eps_list("1e-2:1e-9"))
    p.add_argument("--n", type=_n_value, default=64)
    p.add_argument("--out", default=None)
    p.set_defaults(func=_cmd_precond)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (LayerFDError, ArithmeticError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
