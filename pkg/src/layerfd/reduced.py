"""Nodal data for the reduced solution: closed form or RK4 integration.

The reduced problem -b*u0' + c*u0 = f, u0(1) = g1 is a terminal-value ODE.
When no closed form is available it is integrated backwards from x = 1
with the classical 4th-order Runge-Kutta method, one step per mesh cell,
so the values land exactly on the mesh nodes.  The nodal second
derivative needed by the corrector right-hand side is reconstructed
analytically from the coefficients (see ``reduced_second_derivative``),
never by difference quotients.
"""

from __future__ import annotations

from enum import Enum

import numpy as np

from .errors import ConfigurationError, SingularCoefficientError
from .meshes import Mesh
from .problems import B_SINGULAR_TOL, TwoPointBVP, reduced_second_derivative

__all__ = ["ReducedMode", "rk4_terminal_solve", "reduced_nodal_data"]


class ReducedMode(Enum):
    EXACT = "exact"
    RK4 = "rk4"


def _slope(p: TwoPointBVP, x: float, u: float) -> float:
    """Right-hand side u0' = (c*u - f)/b of the reduced ODE at a stage point.

    Where b vanishes the quotient is kept only if it is removable (the
    numerator vanishes too); the limit then follows from one more
    differentiation, u0' = (c'*u - f')/(b' - c).  A non-removable zero of
    b is a genuine singularity and raises.
    """
    c = p.coeffs
    b = float(c.b(x))
    num = float(c.c(x)) * u - float(c.f(x))
    if abs(b) >= B_SINGULAR_TOL:
        return num / b
    if abs(num) > 1e-8 * (1.0 + abs(float(c.c(x)) * u) + abs(float(c.f(x)))):
        raise SingularCoefficientError(f"b({x}) = 0 with nonvanishing right-hand side")
    den = float(c.db(x)) - float(c.c(x))
    if abs(den) < B_SINGULAR_TOL:
        raise SingularCoefficientError(f"reduced slope limit undefined at x = {x}")
    return (float(c.dc(x)) * u - float(c.df(x))) / den


def rk4_terminal_solve(p: TwoPointBVP, mesh: Mesh) -> np.ndarray:
    """Integrate the reduced problem from x = 1 down to x = 0 on the mesh.

    One RK4 step per mesh cell (step -h_i), starting from u0(1) = g1.
    Returns the nodal values at all N+1 mesh points.
    """
    x = mesh.points
    u = np.empty_like(x)
    u[-1] = p.g1
    for i in range(mesh.n, 0, -1):
        x1, x0 = x[i], x[i - 1]
        step = x0 - x1
        ui = u[i]
        k1 = _slope(p, x1, ui)
        k2 = _slope(p, x1 + 0.5 * step, ui + 0.5 * step * k1)
        k3 = _slope(p, x1 + 0.5 * step, ui + 0.5 * step * k2)
        k4 = _slope(p, x0, ui + step * k3)
        u[i - 1] = ui + (step / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
    return u


def _endpoint_u0pp(p: TwoPointBVP, x: float, u0: float) -> float:
    # The reconstruction divides by b; where b vanishes at an endpoint the
    # value is not defined by the formula, and since the corrector system
    # only reads interior entries a zero placeholder is inert.
    if abs(float(p.coeffs.b(x))) < B_SINGULAR_TOL:
        return 0.0
    return float(reduced_second_derivative(p, x, u0))


def reduced_nodal_data(p: TwoPointBVP, mesh: Mesh, mode: ReducedMode) -> tuple[np.ndarray, np.ndarray]:
    """Nodal reduced solution and its reconstructed second derivative.

    ``EXACT`` evaluates the problem's closed-form reduced solution;
    ``RK4`` integrates it numerically.  Either way u0'' comes from the
    coefficient-based reconstruction applied to the nodal u0 values.
    """
    if mode is ReducedMode.EXACT:
        if p.reduced_exact is None:
            raise ConfigurationError("no closed-form reduced solution; use the RK4 mode")
        u0 = np.asarray(p.reduced_exact(mesh.points), dtype=float)
    elif mode is ReducedMode.RK4:
        u0 = rk4_terminal_solve(p, mesh)
    else:
        raise ConfigurationError(f"unknown reduced mode {mode!r}")
    u0pp = np.empty_like(u0)
    u0pp[1:-1] = reduced_second_derivative(p, mesh.points[1:-1], u0[1:-1])
    u0pp[0] = _endpoint_u0pp(p, float(mesh.points[0]), float(u0[0]))
    u0pp[-1] = _endpoint_u0pp(p, float(mesh.points[-1]), float(u0[-1]))
    return u0, u0pp
