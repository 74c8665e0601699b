"""Piecewise-uniform layer-adapted meshes.

Both mesh families share one construction.  With lambda = N (standard
Shishkin mesh) or lambda = 1/eps (asymptotic mesh), the transition point is

    xi = min{ Q, (a*eps/beta) * ln(lambda) },

and [0, xi] is split into J = Q*N equal fine cells of width h while
[xi, 1] gets N - J equal coarse cells of width H.  When the logarithmic
candidate reaches the cap Q the mesh degenerates to a uniform one; it is
emitted with step 1/N and flagged ``clamped`` rather than rejected.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from math import log

import numpy as np

from .errors import ConfigurationError

__all__ = ["MeshFamily", "MeshSpec", "Mesh", "build_mesh", "half_step"]


class MeshFamily(Enum):
    #: transition point O(eps * ln N)
    SHISHKIN_N = "shishkin-n"
    #: transition point O(eps * |ln eps|)
    ASYMPTOTIC_EPS = "asymptotic"


@dataclass(frozen=True)
class MeshSpec:
    """Parameters of the mesh family.

    ``q`` is the fraction of mesh points placed in the layer region and must
    make J = q*N an exact integer; anything else is a hard error rather than
    a silent rounding.
    """

    family: MeshFamily = MeshFamily.SHISHKIN_N
    n: int = 64
    q: Fraction = Fraction(1, 2)
    a: float = 3.0
    beta: float = 0.8

    def __post_init__(self):
        try:
            q = Fraction(self.q)
        except (TypeError, ValueError) as exc:
            raise ConfigurationError(f"q must be a rational number, got {self.q!r}") from exc
        object.__setattr__(self, "q", q)
        if not isinstance(self.n, (int, np.integer)) or self.n < 4:
            raise ConfigurationError(f"n must be an integer >= 4, got {self.n!r}")
        object.__setattr__(self, "n", int(self.n))
        if not 0 < q < 1:
            raise ConfigurationError(f"q must lie in (0, 1), got {q}")
        if (q * self.n).denominator != 1:
            raise ConfigurationError(f"J = q*n = {q * self.n} is not an integer (q={q}, n={self.n})")
        if not self.a > 0:
            raise ConfigurationError(f"a must be positive, got {self.a}")
        if not self.beta > 0:
            raise ConfigurationError(f"beta must be positive, got {self.beta}")

    @property
    def j(self) -> int:
        """Transition index J = q*n."""
        return int(self.q * self.n)


@dataclass(frozen=True)
class Mesh:
    """A realized piecewise-uniform mesh x_0 = 0 < ... < x_N = 1."""

    points: np.ndarray
    j: int
    xi: float
    h: float
    H: float
    clamped: bool
    spec: MeshSpec = field(repr=False)
    eps: float = field(repr=False, default=float("nan"))

    def __post_init__(self):
        pts = np.array(self.points, dtype=float, copy=True)
        pts.setflags(write=False)
        object.__setattr__(self, "points", pts)

    @property
    def n(self) -> int:
        return len(self.points) - 1

    def steps(self) -> np.ndarray:
        """Cell widths h_i = x_i - x_{i-1} for i = 1..N (length N)."""
        return np.diff(self.points)


def build_mesh(spec: MeshSpec, eps: float) -> Mesh:
    """Construct the mesh of ``spec.family`` for perturbation parameter eps.

    Points come from the index formula (x_i = xi*i/J on the fine part,
    xi + (1-xi)*(i-J)/(N-J) on the coarse part), not from cumulative sums,
    so no drift accumulates; the endpoints are pinned to 0 and 1 exactly.
    """
    if not 0.0 < eps <= 1.0:
        raise ConfigurationError(f"eps must lie in (0, 1], got {eps}")
    n, j = spec.n, spec.j
    lam = float(n) if spec.family is MeshFamily.SHISHKIN_N else 1.0 / eps
    if lam <= 1.0:
        raise ConfigurationError(
            f"mesh parameter lambda = {lam} must exceed 1 (asymptotic family needs eps < 1)"
        )
    q = float(spec.q)
    candidate = (spec.a * eps / spec.beta) * log(lam)
    clamped = candidate >= q
    xi = q if clamped else candidate

    fine = xi * np.arange(j + 1) / j
    coarse = xi + (1.0 - xi) * np.arange(1, n - j + 1) / (n - j)
    points = np.concatenate([fine, coarse])
    points[-1] = 1.0

    return Mesh(points=points, j=j, xi=xi, h=xi / j, H=(1.0 - xi) / (n - j),
                clamped=clamped, spec=spec, eps=eps)


def half_step(mesh: Mesh, i: int) -> float:
    """The averaged step (h_i + h_{i+1})/2 at interior node i."""
    if not 1 <= i <= mesh.n - 1:
        raise IndexError(f"interior node index required, got {i} for N = {mesh.n}")
    return 0.5 * (mesh.points[i + 1] - mesh.points[i - 1])
