"""Fitted upwind difference schemes and their tridiagonal assembly.

On a mesh with cells h_i = x_i - x_{i-1} and averaged steps
hbar_i = (h_i + h_{i+1})/2, the scheme family discretizes
L u = -eps*u'' - b*u' + c*u as

    L_N U_i = -eps*sigma(rho_i)*D2 U_i - b(x_i)*Dp U_i + c(x_i)*U_i,

where Dp is the forward quotient, D2 the three-point second quotient, and
rho_i = b(x_i)*h_{i+1}/(2*eps).  The fitting factor sigma selects the
member: sigma = 1 is plain upwinding, 1/(1+rho) the Samarskii scheme,
max(1-rho, 0) the Runchal-Spalding scheme, and rho*(coth(rho) - 1) the
exponentially fitted Il'in-Allen-Southwell (ASI) scheme.  A separate
nonuniform exact-fit variant chooses sigma_i so that the convection-
diffusion part annihilates exp(-b(x_i)*x/eps) cell-exactly; on a uniform
mesh it coincides with the ASI factor.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Optional

import numpy as np

from .errors import ConfigurationError
from .meshes import Mesh
from .problems import TwoPointBVP

__all__ = [
    "FittingKind",
    "TridiagonalSystem",
    "rho",
    "sigma",
    "sigma_exact_fit",
    "fitting_factors",
    "assemble",
    "precondition",
]


class FittingKind(Enum):
    UPWIND = "upwind"
    SAMARSKII = "samarskii"
    RUNCHAL_SPALDING = "runchal"
    ASI = "asi"
    EXACT_FIT = "exactfit"


@dataclass(frozen=True)
class TridiagonalSystem:
    """Rows sub[i]*x[i-1] + diag[i]*x[i] + sup[i]*x[i+1] = rhs[i].

    All four arrays have length N+1; sub[0] and sup[N] are stored as zero.
    Rows 0 and N are identity rows carrying the Dirichlet data, so the
    matrix always has the full maximum-principle sign structure available
    for inspection.
    """

    sub: np.ndarray
    diag: np.ndarray
    sup: np.ndarray
    rhs: np.ndarray
    scaled: bool = False
    mesh: Optional[Mesh] = field(default=None, repr=False)

    def __post_init__(self):
        arrays = {}
        for name in ("sub", "diag", "sup", "rhs"):
            arr = np.array(getattr(self, name), dtype=float, copy=True)
            if arr.ndim != 1:
                raise ValueError(f"{name} must be one-dimensional")
            arrays[name] = arr
        sizes = {a.size for a in arrays.values()}
        if len(sizes) != 1 or arrays["diag"].size < 2:
            raise ValueError("sub, diag, sup, rhs must share one length >= 2")
        for name, arr in arrays.items():
            arr.setflags(write=False)
            object.__setattr__(self, name, arr)

    @property
    def size(self) -> int:
        return self.diag.size


def rho(b_i, h_next, eps: float):
    """Local mesh Peclet number rho = b(x_i)*h_{i+1}/(2*eps)."""
    if not eps > 0.0:
        raise ConfigurationError(f"eps must be positive, got {eps}")
    if np.any(np.asarray(h_next, dtype=float) <= 0.0):
        raise ValueError("step h_next must be positive")
    return np.asarray(b_i, dtype=float) * h_next / (2.0 * eps)


def sigma(kind: FittingKind, rho):
    """Evaluate the fitting factor sigma(rho) for a mesh-independent kind.

    The ASI branch is guarded: a short series below rho = 1e-4 (naive
    2*rho/(exp(2*rho)-1) loses digits there), the underflow-safe tail
    2*rho*exp(-2*rho) above 350 (exp(2*rho) would overflow near 355), and
    expm1 in between.
    """
    r = np.asarray(rho, dtype=float)
    if np.any(r < 0.0):
        raise ValueError("rho must be nonnegative")
    scalar = r.ndim == 0
    r = np.atleast_1d(r)

    if kind is FittingKind.UPWIND:
        out = np.ones_like(r)
    elif kind is FittingKind.SAMARSKII:
        out = 1.0 / (1.0 + r)
    elif kind is FittingKind.RUNCHAL_SPALDING:
        out = np.maximum(1.0 - r, 0.0)
    elif kind is FittingKind.ASI:
        out = np.empty_like(r)
        small = r < 1e-4
        large = r > 350.0
        mid = ~small & ~large
        rs = r[small]
        out[small] = 1.0 - rs + rs * rs / 3.0
        rl = r[large]
        out[large] = 2.0 * rl * np.exp(-2.0 * rl)
        rm = r[mid]
        out[mid] = 2.0 * rm / np.expm1(2.0 * rm)
    elif kind is FittingKind.EXACT_FIT:
        raise ValueError("exact-fit factors depend on both cell widths; use sigma_exact_fit")
    else:  # pragma: no cover
        raise ValueError(f"unknown fitting kind {kind!r}")
    return float(out[0]) if scalar else out


def _phi2(z: np.ndarray) -> np.ndarray:
    """(exp(z) - 1 - z) / z**2, evaluated stably near zero."""
    out = np.empty_like(z)
    small = np.abs(z) < 0.03
    zs = z[small]
    out[small] = 0.5 + zs * (
        1.0 / 6.0 + zs * (1.0 / 24.0 + zs * (1.0 / 120.0 + zs * (1.0 / 720.0 + zs * (1.0 / 5040.0 + zs / 40320.0))))
    )
    zl = z[~small]
    out[~small] = (np.expm1(zl) - zl) / (zl * zl)
    return out


def sigma_exact_fit(b_i, h_i, h_next, eps: float):
    """Fitting factor that annihilates exp(-b(x_i)*x/eps) on a nonuniform cell pair.

    With rm = b*h_i/eps and rp = b*h_{i+1}/eps, the defining condition
    -eps*sigma*D2 v - b*Dp v = 0 for v = exp(-b*x/eps) resolves to

        sigma = hbar * (1 - exp(-rp))/rp / (h_{i+1}*phi2(-rp) + h_i*phi2(rm)),

    which is the textbook quotient rewritten without its small-rho
    cancellation.  For rm beyond 350 the whole expression is rescaled by
    exp(-rm) so nothing overflows and sigma decays to zero gracefully.
    On equal cells with constant b it reduces to the ASI factor.
    """
    if not eps > 0.0:
        raise ConfigurationError(f"eps must be positive, got {eps}")
    b, hl, hr = np.broadcast_arrays(
        np.asarray(b_i, dtype=float), np.asarray(h_i, dtype=float), np.asarray(h_next, dtype=float)
    )
    if np.any(hl <= 0.0) or np.any(hr <= 0.0):
        raise ValueError("cell widths must be positive")
    if np.any(b < 0.0):
        raise ValueError("b must be nonnegative")
    scalar = b.ndim == 0
    b, hl, hr = np.atleast_1d(b), np.atleast_1d(hl), np.atleast_1d(hr)

    rm = b * hl / eps
    rp = b * hr / eps
    hbar = 0.5 * (hl + hr)
    p = np.ones_like(rp)
    pos = rp > 0.0
    p[pos] = -np.expm1(-rp[pos]) / rp[pos]

    out = np.empty_like(rm)
    big = rm > 350.0
    reg = ~big
    den = hr[reg] * _phi2(-rp[reg]) + hl[reg] * _phi2(rm[reg])
    out[reg] = hbar[reg] * p[reg] / den
    if np.any(big):
        rb = rm[big]
        scale = np.exp(-rb)
        phi2_scaled = (1.0 - (1.0 + rb) * scale) / (rb * rb)
        den = hr[big] * _phi2(-rp[big]) * scale + hl[big] * phi2_scaled
        out[big] = hbar[big] * p[big] * scale / den
    return float(out[0]) if scalar else out


def fitting_factors(bvp: TwoPointBVP, mesh: Mesh, kind: FittingKind) -> np.ndarray:
    """Per-node fitting values sigma_i at the interior nodes i = 1..N-1."""
    x = mesh.points
    hl = x[1:-1] - x[:-2]
    hr = x[2:] - x[1:-1]
    b = np.asarray(bvp.coeffs.b(x[1:-1]), dtype=float)
    if kind is FittingKind.EXACT_FIT:
        return sigma_exact_fit(b, hl, hr, bvp.eps)
    return sigma(kind, rho(b, hr, bvp.eps))


def assemble(rhs, bvp: TwoPointBVP, mesh: Mesh, kind: FittingKind,
             boundary: tuple[float, float]) -> TridiagonalSystem:
    """Assemble the discrete operator rows for the given right-hand side.

    ``rhs`` may be a callable on [0, 1], a nodal array of length N+1
    (endpoint entries are ignored), or an interior array of length N-1.
    ``boundary`` supplies the Dirichlet pair written into rows 0 and N.
    """
    x = mesh.points
    n = mesh.n
    if callable(rhs):
        rhs = np.asarray(rhs(x), dtype=float)
    else:
        rhs = np.asarray(rhs, dtype=float)
    if rhs.shape == (n + 1,):
        interior_rhs = rhs[1:-1]
    elif rhs.shape == (n - 1,):
        interior_rhs = rhs
    else:
        raise ValueError(f"rhs must have length {n + 1} (nodal) or {n - 1} (interior), got {rhs.shape}")

    xm = x[1:-1]
    hl = xm - x[:-2]
    hr = x[2:] - xm
    hbar = 0.5 * (hl + hr)
    b = np.asarray(bvp.coeffs.b(xm), dtype=float)
    c = np.asarray(bvp.coeffs.c(xm), dtype=float)
    if np.any(c < 0.0):
        raise ConfigurationError("c(x) is negative at an interior node; the scheme assumes c >= 0")
    sig = fitting_factors(bvp, mesh, kind)
    eps = bvp.eps

    sub = np.zeros(n + 1)
    diag = np.ones(n + 1)
    sup = np.zeros(n + 1)
    out_rhs = np.zeros(n + 1)
    sub[1:-1] = -eps * sig / (hbar * hl)
    sup[1:-1] = -eps * sig / (hbar * hr) - b / hr
    diag[1:-1] = eps * sig * (1.0 / hl + 1.0 / hr) / hbar + b / hr + c
    out_rhs[1:-1] = interior_rhs
    out_rhs[0], out_rhs[-1] = boundary
    return TridiagonalSystem(sub=sub, diag=diag, sup=sup, rhs=out_rhs, scaled=False, mesh=mesh)


def precondition(system: TridiagonalSystem, mesh: Optional[Mesh] = None) -> TridiagonalSystem:
    """Scale the fine-region rows 1..J-1 by h/H.

    This row scaling leaves the solution unchanged in exact arithmetic but
    bounds the infinity-norm condition number as eps -> 0.  Rows J..N-1 and
    the boundary rows keep their weight 1.
    """
    if system.scaled:
        raise RuntimeError("system is already preconditioned")
    mesh = mesh if mesh is not None else system.mesh
    if mesh is None:
        raise ValueError("a mesh is required to locate the fine-region rows")
    m = np.ones(system.size)
    m[1:mesh.j] = mesh.h / mesh.H
    return TridiagonalSystem(
        sub=system.sub * m, diag=system.diag * m, sup=system.sup * m,
        rhs=system.rhs * m, scaled=True, mesh=system.mesh,
    )
