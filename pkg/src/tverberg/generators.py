"""Constructors for the named complexes and the sphere gallery used in tests."""

from __future__ import annotations

from itertools import combinations, product

from .complex_core import Cell, RegularCwComplex, SimplicialComplex
from .graphs import Multigraph

__all__ = [
    "simplex",
    "boundary_simplex",
    "cross_polytope_boundary",
    "suspension",
    "minimal_cw_sphere",
    "cycle_graph",
    "path_graph",
    "y_graph",
]


def simplex(n: int) -> SimplicialComplex:
    if n < 0:
        raise ValueError("n must be non-negative")
    return SimplicialComplex([range(n + 1)])


def boundary_simplex(n: int) -> SimplicialComplex:
    if n < 1:
        raise ValueError("n must be at least 1")
    return SimplicialComplex(combinations(range(n + 1), n))


def cross_polytope_boundary(d: int) -> SimplicialComplex:
    """Boundary of the (d+1)-dimensional cross-polytope, a d-sphere.

    Vertices 2i and 2i+1 are the antipodal pair on axis i.
    """
    if d < 1:
        raise ValueError("d must be at least 1")
    return SimplicialComplex(product(*[(2 * i, 2 * i + 1) for i in range(d + 1)]))


def suspension(K: SimplicialComplex) -> SimplicialComplex:
    """Join with two new vertices, labelled after the largest existing one."""
    a = max(K.vertices, default=-1) + 1
    b = a + 1
    if K.is_empty():
        return SimplicialComplex([[a], [b]])
    return SimplicialComplex([list(f) + [a] for f in K.facets] + [list(f) + [b] for f in K.facets])


def minimal_cw_sphere(d: int) -> RegularCwComplex:
    """Two cells ``e{k}-`` and ``e{k}+`` in each dimension k <= d."""
    if d < 0:
        raise ValueError("d must be non-negative")
    cells = []
    for k in range(d + 1):
        below = frozenset({f"e{k - 1}-", f"e{k - 1}+"}) if k else frozenset()
        cells += [Cell(f"e{k}-", k, below), Cell(f"e{k}+", k, below)]
    return RegularCwComplex(cells)


def cycle_graph(n: int) -> Multigraph:
    """C_n; C_2 is a pair of parallel edges."""
    if n < 2:
        raise ValueError("n must be at least 2")
    return Multigraph(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> Multigraph:
    """P_n on n vertices."""
    if n < 1:
        raise ValueError("n must be at least 1")
    return Multigraph(n, [(i, i + 1) for i in range(n - 1)])


def y_graph() -> Multigraph:
    return Multigraph(4, [(0, 1), (0, 2), (0, 3)])
