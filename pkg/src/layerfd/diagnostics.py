"""Truncation-error probes and theoretical error-model curves."""

from __future__ import annotations

from dataclasses import dataclass
from math import log

import numpy as np

from .errors import ConfigurationError
from .meshes import Mesh
from .problems import TwoPointBVP
from .schemes import FittingKind, fitting_factors

__all__ = ["ModelCurves", "model_curves", "truncation_error", "layer_truncation_profile", "mesh_parameter_floor"]


@dataclass(frozen=True)
class ModelCurves:
    """Error-model values for one (eps, N, a) cell.

    ``nu1`` is the Shishkin-mesh bound max{eps*N^-2*(ln N)^2,
    eps*N^-1 + N^-(a+1)/2}; ``nu2`` the asymptotic-mesh bound
    max{eps*|ln eps|^3*N^-2, eps*N^-1}; ``f_model`` the empirical curve
    max{eps*N^-2*(ln N)^2, min(eps, N^-1)*N^-1 + N^-a} that tracks the
    observed errors more closely than nu1.
    """

    nu1: float
    nu2: float
    f_model: float


def model_curves(eps: float, n: int, a: float) -> ModelCurves:
    """Evaluate the three model curves (natural logarithms throughout)."""
    if not 0.0 < eps < 1.0:
        raise ConfigurationError(f"eps must lie in (0, 1), got {eps}")
    if n < 2:
        raise ConfigurationError(f"n must be at least 2, got {n}")
    if not a > 0.0:
        raise ConfigurationError(f"a must be positive, got {a}")
    log_n = log(n)
    quad_term = eps * log_n * log_n / (n * n)
    nu1 = max(quad_term, eps / n + float(n) ** (-(a + 1.0) / 2.0))
    nu2 = max(eps * abs(log(eps)) ** 3 / (n * n), eps / n)
    f_model = max(quad_term, min(eps, 1.0 / n) / n + float(n) ** (-a))
    return ModelCurves(nu1=nu1, nu2=nu2, f_model=f_model)


def truncation_error(bvp: TwoPointBVP, mesh: Mesh, kind: FittingKind, g, g1, g2) -> np.ndarray:
    """Truncation error of the scheme on a smooth function g at interior nodes.

    tau_i[g] = -eps*sigma_i*D2 g(x_i) - b(x_i)*Dp g(x_i)
               + eps*g''(x_i) + b(x_i)*g'(x_i),  i = 1..N-1.

    The reaction terms cancel exactly between the discrete and continuous
    operators and are left out.  ``g1`` and ``g2`` are the first and second
    derivative callables of g.
    """
    x = mesh.points
    gv = np.asarray(g(x), dtype=float)
    xm = x[1:-1]
    hl = xm - x[:-2]
    hr = x[2:] - xm
    hbar = 0.5 * (hl + hr)
    d_plus = (gv[2:] - gv[1:-1]) / hr
    d_minus = (gv[1:-1] - gv[:-2]) / hl
    d_second = (d_plus - d_minus) / hbar
    b = np.asarray(bvp.coeffs.b(xm), dtype=float)
    sig = fitting_factors(bvp, mesh, kind)
    eps = bvp.eps
    return (-eps * sig * d_second - b * d_plus
            + eps * np.asarray(g2(xm), dtype=float) + b * np.asarray(g1(xm), dtype=float))


def layer_truncation_profile(bvp: TwoPointBVP, mesh: Mesh, kind: FittingKind) -> np.ndarray:
    """Truncation error applied to the boundary-layer component.

    Uses v(x) = -(eps*u'(0)/b(0))*exp(-b(0)*x/eps) with its analytic
    derivatives; the fine-region envelope of |tau_i[v]| is the quantity the
    layer-accuracy heuristics are judged by.
    """
    if bvp.exact_du0 is None:
        raise ConfigurationError("layer profile requires u'(0); this problem does not provide it")
    b0 = float(bvp.coeffs.b(0.0))
    amp = -(bvp.eps * bvp.exact_du0 / b0)
    decay = b0 / bvp.eps

    def v(x):
        return amp * np.exp(-decay * np.asarray(x, dtype=float))

    def dv(x):
        return -decay * v(x)

    def d2v(x):
        return decay * decay * v(x)

    return truncation_error(bvp, mesh, kind, v, dv, d2v)


def mesh_parameter_floor(bvp: TwoPointBVP, beta: float) -> float:
    """Guidance value beta/(b(0) - beta) for the mesh grading parameter a.

    Grading at least this strongly keeps the layer-component truncation
    error on the standard mesh within its coarse-region envelope.
    """
    b0 = float(bvp.coeffs.b(0.0))
    if not b0 > beta:
        raise ConfigurationError(f"requires b(0) > beta, got b(0) = {b0}, beta = {beta}")
    return beta / (b0 - beta)
