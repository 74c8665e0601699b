"""End-to-end solves, discrete maximum-norm errors, and convergence tables.

A run either discretizes the problem directly or first splits off the
reduced solution and solves for the layer corrector w = u - u0 (the
right-hand side then becomes eps*u0'' and the boundary data shift by the
nodal u0).  Errors are measured at mesh nodes only.  For decomposed runs
the comparison is made on w itself against exact(x) - u0(x), so a
numerically obtained u0 perturbs the discrete side but not the reference.
"""

from __future__ import annotations

import dataclasses
import io
from dataclasses import dataclass, field
from enum import Enum
from math import log
from typing import Callable, Optional, Union

import numpy as np

from .diagnostics import model_curves
from .errors import ConfigurationError
from .meshes import Mesh, MeshSpec, build_mesh
from .problems import TwoPointBVP, builtin_problem, make_w_problem
from .reduced import ReducedMode, reduced_nodal_data
from .schemes import FittingKind, assemble, precondition
from .tridiag import thomas_solve

__all__ = [
    "SolveMethod",
    "SolveConfig",
    "SolveResult",
    "TableRow",
    "ConvergenceTable",
    "solve",
    "max_error",
    "solution_error",
    "convergence_table",
    "emit",
]


class SolveMethod(Enum):
    DIRECT = "direct"
    DECOMPOSED = "decomposed"


@dataclass(frozen=True)
class SolveConfig:
    """Everything identifying one family of runs except eps and N."""

    problem: Union[str, Callable[[float], TwoPointBVP]] = "ex1"
    method: SolveMethod = SolveMethod.DECOMPOSED
    scheme: FittingKind = FittingKind.ASI
    mesh: MeshSpec = field(default_factory=MeshSpec)
    reduced_mode: Optional[ReducedMode] = None
    preconditioned: bool = False

    def resolve_problem(self, eps: float) -> TwoPointBVP:
        if callable(self.problem):
            return self.problem(eps)
        return builtin_problem(self.problem, eps)

    def resolve_reduced_mode(self, bvp: TwoPointBVP) -> ReducedMode:
        if self.reduced_mode is not None:
            return self.reduced_mode
        return ReducedMode.EXACT if bvp.reduced_exact is not None else ReducedMode.RK4


@dataclass(frozen=True)
class SolveResult:
    eps: float
    config: SolveConfig
    bvp: TwoPointBVP
    mesh: Mesh
    u: np.ndarray
    w: Optional[np.ndarray] = None
    u0: Optional[np.ndarray] = None


def solve(cfg: SolveConfig, eps: float, n: Optional[int] = None) -> SolveResult:
    """Run one solve at the given eps (and mesh size n, defaulting to the spec's)."""
    spec = cfg.mesh if n is None else dataclasses.replace(cfg.mesh, n=n)
    bvp = cfg.resolve_problem(eps)
    mesh = build_mesh(spec, eps)

    if cfg.method is SolveMethod.DIRECT:
        system = assemble(bvp.coeffs.f, bvp, mesh, cfg.scheme, (bvp.g0, bvp.g1))
        if cfg.preconditioned:
            system = precondition(system)
        u = thomas_solve(system)
        return SolveResult(eps=eps, config=cfg, bvp=bvp, mesh=mesh, u=u)

    mode = cfg.resolve_reduced_mode(bvp)
    u0, u0pp = reduced_nodal_data(bvp, mesh, mode)
    wp = make_w_problem(bvp, u0, u0pp)
    system = assemble(wp.rhs, bvp, mesh, cfg.scheme, (wp.w0, wp.w1))
    if cfg.preconditioned:
        system = precondition(system)
    w = thomas_solve(system)
    return SolveResult(eps=eps, config=cfg, bvp=bvp, mesh=mesh, u=u0 + w, w=w, u0=u0)


def max_error(u: np.ndarray, exact, mesh: Mesh) -> float:
    """Discrete maximum-norm deviation of nodal values from a reference function."""
    if exact is None:
        raise ConfigurationError("no exact solution available to measure the error against")
    return float(np.max(np.abs(np.asarray(u, dtype=float) - np.asarray(exact(mesh.points), dtype=float))))


def solution_error(result: SolveResult) -> float:
    """Maximum-norm error of a run against the problem's closed forms.

    Direct runs compare u; decomposed runs compare the corrector w against
    exact - u0 (both closed forms), which is the quantity the method
    actually approximates.
    """
    bvp = result.bvp
    if result.config.method is SolveMethod.DIRECT:
        return max_error(result.u, bvp.exact, result.mesh)
    if bvp.exact is None or bvp.reduced_exact is None:
        raise ConfigurationError("decomposed error needs both the exact and the reduced closed form")
    return max_error(result.w, lambda x: bvp.exact(x) - bvp.reduced_exact(x), result.mesh)


@dataclass(frozen=True)
class TableRow:
    eps: float
    n: int
    error: float
    rate: Optional[float]
    nu1: float
    nu2: float
    f_model: float


@dataclass(frozen=True)
class ConvergenceTable:
    rows: tuple[TableRow, ...]
    n_values: tuple[int, ...]


def convergence_table(cfg: SolveConfig, eps_list, n_list) -> ConvergenceTable:
    """Sweep the (eps, N) grid and attach rates and model curves.

    The rate against the half-resolution run, (ln E_{N/2} - ln E_N)/ln 2,
    is present exactly when the same sweep contains the (eps, N/2) cell.
    Cells are keyed and emitted in (eps_list, n_list) order, so the table
    is reproducible no matter how the underlying solves are scheduled.
    """
    eps_list = [float(e) for e in eps_list]
    n_list = [int(n) for n in n_list]
    errors: dict[tuple[float, int], float] = {}
    for eps in eps_list:
        for n in n_list:
            result = solve(cfg, eps, n=n)
            errors[(eps, n)] = solution_error(result)
    rows = []
    for eps in eps_list:
        for n in n_list:
            err = errors[(eps, n)]
            rate = None
            half = errors.get((eps, n // 2))
            if n % 2 == 0 and half is not None and half > 0.0 and err > 0.0:
                rate = (log(half) - log(err)) / log(2.0)
            curves = model_curves(eps, n, cfg.mesh.a)
            rows.append(TableRow(eps=eps, n=n, error=err, rate=rate,
                                 nu1=curves.nu1, nu2=curves.nu2, f_model=curves.f_model))
    return ConvergenceTable(rows=tuple(rows), n_values=tuple(n_list))


def _fmt_rate(rate: Optional[float]) -> str:
    return "" if rate is None else f"{rate:.2f}"


def emit(table: ConvergenceTable, fmt: str = "csv") -> str:
    """Render a convergence table as CSV or as a paper-style Markdown grid."""
    if fmt == "csv":
        out = io.StringIO()
        out.write("eps,N,error,rate,nu1,nu2,F\n")
        for r in table.rows:
            out.write(f"{r.eps:.6g},{r.n},{r.error:.6e},{_fmt_rate(r.rate)},"
                      f"{r.nu1:.6e},{r.nu2:.6e},{r.f_model:.6e}\n")
        return out.getvalue()
    if fmt in ("md", "markdown"):
        ns = table.n_values
        by_eps: dict[float, dict[int, TableRow]] = {}
        for r in table.rows:
            by_eps.setdefault(r.eps, {})[r.n] = r
        out = io.StringIO()
        out.write("| eps | " + " | ".join(f"N={n}" for n in ns) + " |\n")
        out.write("| --- |" + " --- |" * len(ns) + "\n")
        for eps, cells in by_eps.items():
            errs = " | ".join(f"{cells[n].error:.2E}" if n in cells else "" for n in ns)
            rates = " | ".join(_fmt_rate(cells[n].rate) if n in cells else "" for n in ns)
            out.write(f"| {eps:.6g} | {errs} |\n")
            out.write(f"|  | {rates} |\n")
        return out.getvalue()
    raise ConfigurationError(f"unknown table format {fmt!r}; use 'csv' or 'md'")
