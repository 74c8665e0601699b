"""Continuous two-point boundary value problems and their reduced forms.

The equations treated here are singularly perturbed convection-diffusion
problems on [0, 1],

    -eps*u'' - b(x)*u' + c(x)*u = f(x),    u(0) = g0,  u(1) = g1,

with b > 0 on [0, 1) and c >= 0, so the solution develops an exponential
boundary layer of width O(eps) at x = 0.  Dropping the second-order term
gives the reduced problem, a terminal-value ODE that keeps only the
condition at x = 1:

    -b(x)*u0' + c(x)*u0 = f(x),    u0(1) = g1.

Two classic test problems are built in (``ex1`` with constant convection
and a known two-exponential solution, ``ex2`` with degenerating convection
and a linear reduced solution).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Optional

import numpy as np

from .errors import ConfigurationError, SingularCoefficientError

__all__ = [
    "CoefficientSet",
    "TwoPointBVP",
    "WProblem",
    "builtin_problem",
    "reduced_derivative",
    "reduced_second_derivative",
    "make_w_problem",
    "layer_component",
    "B_SINGULAR_TOL",
]

#: below this magnitude the convection coefficient counts as singular
B_SINGULAR_TOL = 1e-14

_DERIV_CHECK_STEP = 1e-6
_DERIV_CHECK_RTOL = 1e-6


def _constant(value: float) -> Callable:
    def fn(x):
        return np.full_like(np.asarray(x, dtype=float), value)

    return fn


def _readonly(arr: np.ndarray) -> np.ndarray:
    out = np.array(arr, dtype=float, copy=True)
    out.setflags(write=False)
    return out


@dataclass(frozen=True)
class CoefficientSet:
    """Coefficient functions b, c, f of the equation plus their derivatives.

    ``beta`` is the positive convection floor used by the layer-adapted
    meshes.  Validation samples a dense grid at construction: b must be
    positive on [0, 1) (the right endpoint is deliberately left out so
    that problems with b(1) = 0 remain admissible), c must be nonnegative
    on [0, 1], and the derivative handles must agree with centered
    differences.
    """

    b: Callable
    c: Callable
    f: Callable
    db: Callable
    dc: Callable
    df: Callable
    beta: float = 0.8

    def __post_init__(self):
        if not self.beta > 0.0:
            raise ConfigurationError(f"beta must be positive, got {self.beta}")
        xs = np.linspace(0.0, 1.0, 1001)
        bv = np.asarray(self.b(xs[:-1]), dtype=float)
        if not np.all(bv > 0.0):
            raise ConfigurationError("b(x) must be positive on [0, 1)")
        cv = np.asarray(self.c(xs), dtype=float)
        if np.any(cv < 0.0):
            raise ConfigurationError("c(x) must be nonnegative on [0, 1]")
        d = _DERIV_CHECK_STEP
        xd = np.linspace(d, 1.0 - d, 101)
        for g, dg, name in ((self.b, self.db, "b"), (self.c, self.dc, "c"), (self.f, self.df, "f")):
            fd = (np.asarray(g(xd + d), float) - np.asarray(g(xd - d), float)) / (2.0 * d)
            given = np.asarray(dg(xd), dtype=float)
            tol = _DERIV_CHECK_RTOL * (1.0 + np.abs(given))
            if np.any(np.abs(fd - given) > tol):
                raise ConfigurationError(f"derivative handle for {name} disagrees with finite differences")


@dataclass(frozen=True)
class TwoPointBVP:
    """A convection-diffusion problem instance.

    Optional closed-form data: ``exact`` (the solution u), ``exact_du0``
    (the value u'(0), needed for the layer component), and
    ``reduced_exact`` (the reduced solution u0).
    """

    coeffs: CoefficientSet
    eps: float
    g0: float = 0.0
    g1: float = 0.0
    exact: Optional[Callable] = None
    exact_du0: Optional[float] = None
    reduced_exact: Optional[Callable] = None
    name: str = "custom"

    def __post_init__(self):
        if not 0.0 < self.eps <= 1.0:
            raise ConfigurationError(f"eps must lie in (0, 1], got {self.eps}")
        if self.exact is not None:
            if abs(float(self.exact(0.0)) - self.g0) > 1e-12 or abs(float(self.exact(1.0)) - self.g1) > 1e-12:
                raise ConfigurationError("exact solution does not match the Dirichlet data")


@dataclass(frozen=True)
class WProblem:
    """Layer-corrector problem data on a fixed mesh.

    With u = u0 + w, the corrector solves Lw = eps*u0'' with boundary
    values w(0) = g0 - u0(0) and w(1) = g1 - u0(1).  ``u0`` and ``u0pp``
    hold nodal values of the reduced solution and of its reconstructed
    second derivative.
    """

    base: TwoPointBVP
    u0: np.ndarray
    u0pp: np.ndarray
    w0: float
    w1: float

    def __post_init__(self):
        object.__setattr__(self, "u0", _readonly(self.u0))
        object.__setattr__(self, "u0pp", _readonly(self.u0pp))

    @property
    def rhs(self) -> np.ndarray:
        """Nodal right-hand side eps*u0''; only interior entries are used."""
        return self.base.eps * self.u0pp


def _phi1(z):
    """expm1(z)/z with the z = 0 limit filled in."""
    z = np.asarray(z, dtype=float)
    out = np.ones_like(z)
    nz = z != 0.0
    out[nz] = np.expm1(z[nz]) / z[nz]
    return out


def _make_ex1(eps: float) -> TwoPointBVP:
    # -eps*u'' - u' + 2u = exp(x-1), u(0) = u(1) = 0.
    # Homogeneous roots solve eps*m^2 + m - 2 = 0.  The closed form is
    # evaluated in a grouped way that stays accurate for all eps in (0, 1]:
    # the smooth root is written as m_plus = 1 + kappa with
    # kappa = 8*(1-eps)/((3+s)(1+s)), which removes the small-eps
    # cancellation of the quadratic formula, and the particular solution
    # exp(x-1)/(1-eps) is folded together with the smooth homogeneous part
    # so that the pole at the resonance eps = 1 cancels analytically
    # (at eps = 1 the formula reduces to the resonant solution).
    s = math.sqrt(1.0 + 8.0 * eps)
    delta = 1.0 - eps
    m_layer = -(1.0 + s) / (2.0 * eps)
    kappa = 8.0 * delta / ((3.0 + s) * (1.0 + s))
    m_smooth = 1.0 + kappa
    rk = 8.0 / ((3.0 + s) * (1.0 + s))  # kappa / delta, finite at delta = 0
    d = math.exp(m_smooth) - math.exp(m_layer)
    r = math.e * (math.exp(m_layer - 1.0) - 1.0) / d
    smooth_amp = math.e * float(_phi1(kappa)) * rk / d
    c2 = -rk * float(_phi1(kappa)) / d

    def exact(x):
        x = np.asarray(x, dtype=float)
        return (np.exp(x - 1.0) * (smooth_amp + r * rk * x * _phi1(kappa * x))
                + c2 * np.exp(m_layer * x))

    du0 = rk * (math.exp(m_layer - 1.0) - 1.0 + float(_phi1(kappa))) / d + m_layer * c2

    def reduced(x):
        x = np.asarray(x, dtype=float)
        return np.exp(x - 1.0) - np.exp(2.0 * (x - 1.0))

    def f(x):
        return np.exp(np.asarray(x, dtype=float) - 1.0)

    coeffs = CoefficientSet(
        b=_constant(1.0), c=_constant(2.0), f=f,
        db=_constant(0.0), dc=_constant(0.0), df=f,
    )
    return TwoPointBVP(coeffs=coeffs, eps=eps, g0=0.0, g1=0.0, exact=exact,
                       exact_du0=du0, reduced_exact=reduced, name="ex1")


def _make_ex2(eps: float) -> TwoPointBVP:
    # -eps*u'' - (1-x)*u' + 2u = 3(1-x), u(0) = 2, u(1) = 0.
    # u = (1-x)*(1 + exp(-x(2-x)/(2 eps))); the reduced solution is 1-x.
    def exact(x):
        x = np.asarray(x, dtype=float)
        return (1.0 - x) * (1.0 + np.exp(-x * (2.0 - x) / (2.0 * eps)))

    def reduced(x):
        return 1.0 - np.asarray(x, dtype=float)

    coeffs = CoefficientSet(
        b=lambda x: 1.0 - np.asarray(x, dtype=float),
        c=_constant(2.0),
        f=lambda x: 3.0 * (1.0 - np.asarray(x, dtype=float)),
        db=_constant(-1.0), dc=_constant(0.0), df=_constant(-3.0),
    )
    du0 = -2.0 - 1.0 / eps
    return TwoPointBVP(coeffs=coeffs, eps=eps, g0=2.0, g1=0.0, exact=exact,
                       exact_du0=du0, reduced_exact=reduced, name="ex2")


_BUILTINS = {"ex1": _make_ex1, "ex2": _make_ex2}


def builtin_problem(name: str, eps: float) -> TwoPointBVP:
    """Return one of the built-in test problems at perturbation parameter eps."""
    try:
        factory = _BUILTINS[name]
    except KeyError:
        raise ConfigurationError(
            f"unknown built-in problem {name!r}; available: {sorted(_BUILTINS)}"
        ) from None
    return factory(eps)


def _checked_b(p: TwoPointBVP, x):
    b = np.asarray(p.coeffs.b(x), dtype=float)
    if np.any(np.abs(b) < B_SINGULAR_TOL):
        raise SingularCoefficientError("b(x) vanishes; reduced derivatives are undefined there")
    return b


def reduced_derivative(p: TwoPointBVP, x, u0):
    """First derivative of the reduced solution, u0' = (c*u0 - f)/b."""
    b = _checked_b(p, x)
    return (np.asarray(p.coeffs.c(x), float) * u0 - np.asarray(p.coeffs.f(x), float)) / b


def reduced_second_derivative(p: TwoPointBVP, x, u0):
    """Second derivative of the reduced solution, reconstructed from coefficients.

    Differentiating b*u0' = c*u0 - f and eliminating u0' with the reduced
    equation expresses u0'' through u0 and the coefficient data alone:

        u0'' = ((c'*u0 + c*u0' - f')*b - (c*u0 - f)*b') / b**2.

    No difference quotients are involved, so a perturbation of u0 is not
    amplified by the mesh width.
    """
    b = _checked_b(p, x)
    c = np.asarray(p.coeffs.c(x), float)
    f = np.asarray(p.coeffs.f(x), float)
    db = np.asarray(p.coeffs.db(x), float)
    dc = np.asarray(p.coeffs.dc(x), float)
    df = np.asarray(p.coeffs.df(x), float)
    num = c * u0 - f
    u0p = num / b
    return ((dc * u0 + c * u0p - df) * b - num * db) / (b * b)


def make_w_problem(p: TwoPointBVP, u0_nodal, u0pp_nodal) -> WProblem:
    """Bundle nodal reduced data into the transformed problem for w = u - u0."""
    u0_nodal = np.asarray(u0_nodal, dtype=float)
    u0pp_nodal = np.asarray(u0pp_nodal, dtype=float)
    if u0_nodal.ndim != 1 or u0_nodal.shape != u0pp_nodal.shape or u0_nodal.size < 2:
        raise ValueError("u0 and u0'' must be 1-D nodal arrays of equal length >= 2")
    w0 = p.g0 - float(u0_nodal[0])
    w1 = p.g1 - float(u0_nodal[-1])
    return WProblem(base=p, u0=u0_nodal, u0pp=u0pp_nodal, w0=w0, w1=w1)


def layer_component(p: TwoPointBVP, x):
    """The boundary-layer part v(x) = -(eps*u'(0)/b(0)) * exp(-b(0)*x/eps)."""
    if p.exact_du0 is None:
        raise ConfigurationError("layer component requires u'(0); this problem does not provide it")
    b0 = float(p.coeffs.b(0.0))
    return -(p.eps * p.exact_du0 / b0) * np.exp(-b0 * np.asarray(x, dtype=float) / p.eps)
