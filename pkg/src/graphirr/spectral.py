"""Two-walk linearity detection and the associated variance identity.

A connected irregular graph is 2-walk (a, b)-linear when the neighbour
degree sum satisfies S(u) = a*d(u) + b at every vertex for a single integer
pair (a, b).  Such graphs have exactly two main eigenvalues
lambda, mu = (a +- sqrt(a^2+4b))/2, and the degree variance factors as
(lambda - 2m/n)(2m/n - mu) -- which expands to the all-rational form
a*(2m/n) + b - (2m/n)^2 used here so the check stays exact.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

import numpy as np

from .errors import ConvergenceError, InputError
from .graph import Graph, degree_stats, is_connected
from .measures import measure_set

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class TwoWalkParams:
    a: int
    b: int

    def __post_init__(self) -> None:
        if self.a < 0:
            raise InputError("two-walk parameter a must be non-negative")
        if self.a * self.a + 4 * self.b < 0:
            raise InputError("two-walk parameters must have a^2 + 4b >= 0")


def two_walk_params(g: Graph) -> Optional[TwoWalkParams]:
    """Fit S(u) = a*d(u) + b over all vertices; None when no single fit exists."""
    st = degree_stats(g)
    if not is_connected(g):
        raise InputError("two-walk detection needs a connected graph")
    if st.max_degree == st.min_degree:
        raise InputError("two-walk parameters are not unique for regular graphs")
    degs = st.degrees
    sums = [sum(degs[u] for u in g.neighbors(v)) for v in range(g.n)]
    u = degs.index(st.max_degree)
    v = degs.index(st.min_degree)
    a = Fraction(sums[u] - sums[v], degs[u] - degs[v])
    b = Fraction(sums[u]) - a * degs[u]
    if any(sums[w] != a * degs[w] + b for w in range(g.n)):
        return None
    if a.denominator != 1 or b.denominator != 1:
        logger.debug("affine neighbour-sum fit is not integral: a=%s b=%s", a, b)
        return None
    ai, bi = int(a), int(b)
    if ai < 0 or ai * ai + 4 * bi < 0:
        logger.debug("affine fit rejected: a=%s b=%s", ai, bi)
        return None
    return TwoWalkParams(a=ai, b=bi)


def main_eigenvalues(p: TwoWalkParams) -> tuple[float, float]:
    """The two main eigenvalues (larger first)."""
    disc = p.a * p.a + 4 * p.b
    if disc < 0:
        raise InputError("negative discriminant")
    root = math.sqrt(disc)
    return (p.a + root) / 2, (p.a - root) / 2


@dataclass(frozen=True)
class VarianceIdentity:
    var_via_params: Fraction
    matches: bool


def variance_spectral_identity(g: Graph) -> VarianceIdentity:
    """Check Var == (lambda - 2m/n)(2m/n - mu) exactly.

    With lambda+mu = a and lambda*mu = -b the product equals
    a*(2m/n) + b - (2m/n)^2, so no irrational arithmetic is needed.
    """
    p = two_walk_params(g)
    if p is None:
        raise InputError("graph is not 2-walk linear")
    st = degree_stats(g)
    c = st.average_degree
    value = c * p.a + p.b - c * c
    return VarianceIdentity(
        var_via_params=value, matches=value == measure_set(g, st).var
    )


def spectral_radius_estimate(
    g: Graph, tol: float = 1e-9, max_iter: int = 100_000
) -> float:
    """Dominant adjacency eigenvalue by power iteration.

    Iterates on A + I so bipartite graphs converge too; the shift is removed
    from the returned value.  Raises when the residual does not drop below
    ``tol`` within ``max_iter`` rounds.
    """
    if not is_connected(g):
        raise InputError("spectral radius estimation needs a connected graph")
    n = g.n
    a = np.zeros((n, n))
    for u, v in g.edges():
        a[u, v] = a[v, u] = 1.0
    shifted = a + np.eye(n)
    x = np.ones(n) / math.sqrt(n)
    z = shifted @ x
    for _ in range(max_iter):
        theta = float(x @ z)
        residual = float(np.linalg.norm(z - theta * x))
        if residual <= tol * max(1.0, abs(theta)):
            return theta - 1.0
        x = z / float(np.linalg.norm(z))
        z = shifted @ x
    raise ConvergenceError(
        f"power iteration did not converge within {max_iter} iterations"
    )
