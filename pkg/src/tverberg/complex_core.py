"""Finite simplicial and regular CW complexes, face posets and order complexes.

Everything here is combinatorial: a regular CW complex is stored as its
graded covering relation, and two closed cells are disjoint exactly when
they have no common face. In a regular complex every closed cell contains a
0-cell, so that test reduces to comparing vertex sets, which is how it is
implemented (as integer bitmasks).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations
from typing import Iterable, Mapping

from .errors import (
    BadGrading,
    DanglingBoundary,
    DuplicateCell,
    EmptyFacet,
    InvalidComplex,
    NotRegular,
    UnknownCell,
)

__all__ = [
    "Cell",
    "SimplicialComplex",
    "RegularCwComplex",
    "FacePoset",
    "build_simplicial",
    "build_cw",
    "as_cw",
    "face_poset",
    "order_complex",
    "are_disjoint",
    "face_id",
]


def face_id(simplex: Iterable[int]) -> str:
    """Canonical cell id of a simplex: sorted vertices joined by '-'."""
    return "-".join(str(v) for v in sorted(simplex))


class SimplicialComplex:
    """Abstract simplicial complex on non-negative integer vertices.

    Stored through its facets (inclusion-maximal simplices), kept as sorted
    tuples in a canonical order. The full face set is derived on demand.
    """

    def __init__(self, facets: Iterable[Iterable[int]] = ()):
        cleaned = set()
        for f in facets:
            s = frozenset(f)
            if not s:
                raise EmptyFacet("facet must be non-empty")
            for v in s:
                if not isinstance(v, int) or isinstance(v, bool) or v < 0:
                    raise InvalidComplex(f"vertex labels must be non-negative integers, got {v!r}")
            cleaned.add(s)
        # keep only inclusion-maximal sets; larger sets first so one pass suffices
        kept: list[frozenset] = []
        for s in sorted(cleaned, key=lambda s: (-len(s), sorted(s))):
            if not any(s < t for t in kept):
                kept.append(s)
        self._set_facets(kept)

    @classmethod
    def _from_maximal(cls, facets: Iterable[Iterable[int]]) -> "SimplicialComplex":
        # caller guarantees the sets are non-empty and pairwise incomparable
        obj = cls.__new__(cls)
        obj._set_facets(frozenset(f) for f in facets)
        return obj

    def _set_facets(self, facets):
        self.facets: tuple[tuple[int, ...], ...] = tuple(
            sorted((tuple(sorted(f)) for f in facets), key=lambda t: (len(t), t))
        )
        self.vertices: frozenset[int] = frozenset(v for f in self.facets for v in f)

    @cached_property
    def faces(self) -> tuple[tuple[int, ...], ...]:
        """All non-empty faces, sorted by (dimension, vertices)."""
        out = set()
        for f in self.facets:
            for k in range(1, len(f) + 1):
                out.update(combinations(f, k))
        return tuple(sorted(out, key=lambda t: (len(t), t)))

    def faces_of_dim(self, k: int) -> list[tuple[int, ...]]:
        return [f for f in self.faces if len(f) == k + 1]

    @property
    def dim(self) -> int:
        """Dimension; -1 for the empty complex."""
        return max((len(f) for f in self.facets), default=0) - 1

    def is_empty(self) -> bool:
        return not self.facets

    def relabel(self, mapping: Mapping[int, int]) -> "SimplicialComplex":
        return SimplicialComplex([[mapping[v] for v in f] for f in self.facets])

    def __eq__(self, other):
        if not isinstance(other, SimplicialComplex):
            return NotImplemented
        return self.facets == other.facets

    def __hash__(self):
        return hash(self.facets)

    def __len__(self):
        return len(self.faces)

    def __repr__(self):
        return f"SimplicialComplex({[list(f) for f in self.facets]})"


def build_simplicial(facets: Iterable[Iterable[int]]) -> SimplicialComplex:
    return SimplicialComplex(facets)


@dataclass(frozen=True)
class Cell:
    id: str
    dim: int
    covers: frozenset[str] = frozenset()

    def __post_init__(self):
        object.__setattr__(self, "covers", frozenset(self.covers))


class RegularCwComplex:
    """A finite regular CW complex given by graded covering data.

    ``cells`` maps each id to its :class:`Cell`. Validation is purely
    combinatorial: covers must exist and sit one dimension lower, and every
    cell of positive dimension needs a non-empty boundary. With
    ``strict=True`` each cell boundary must additionally have the reduced
    homology of a sphere of one dimension less.
    """

    def __init__(self, cells: Iterable[Cell], *, strict: bool = False):
        table: dict[str, Cell] = {}
        for c in cells:
            if c.id in table:
                raise DuplicateCell(f"duplicate cell id {c.id!r}")
            if c.dim < 0:
                raise BadGrading(f"cell {c.id!r} has negative dimension {c.dim}")
            table[c.id] = c
        for c in table.values():
            for b in c.covers:
                if b not in table:
                    raise DanglingBoundary(f"cell {c.id!r} covers unknown cell {b!r}")
                if table[b].dim != c.dim - 1:
                    raise BadGrading(
                        f"cell {c.id!r} (dim {c.dim}) covers {b!r} of dim {table[b].dim}"
                    )
            if c.dim >= 1 and not c.covers:
                raise NotRegular(f"cell {c.id!r} of dim {c.dim} has empty boundary")
        self.cells: dict[str, Cell] = {i: table[i] for i in sorted(table)}
        if strict:
            self._check_boundary_spheres()

    @cached_property
    def ids(self) -> tuple[str, ...]:
        """Cell ids in canonical (lexicographic) order."""
        return tuple(self.cells)

    @cached_property
    def graded_ids(self) -> tuple[str, ...]:
        """Cell ids sorted by (dim, id); a linear extension of the face order."""
        return tuple(sorted(self.cells, key=lambda i: (self.cells[i].dim, i)))

    @property
    def dim(self) -> int:
        return max((c.dim for c in self.cells.values()), default=-1)

    def is_empty(self) -> bool:
        return not self.cells

    def __len__(self):
        return len(self.cells)

    def __contains__(self, cell_id):
        return cell_id in self.cells

    def __eq__(self, other):
        if not isinstance(other, RegularCwComplex):
            return NotImplemented
        return self.cells == other.cells

    def __hash__(self):
        return hash(frozenset(self.cells.values()))

    def __repr__(self):
        return f"RegularCwComplex(<{len(self.cells)} cells, dim {self.dim}>)"

    def cell(self, cell_id: str) -> Cell:
        try:
            return self.cells[cell_id]
        except KeyError:
            raise UnknownCell(f"unknown cell {cell_id!r}") from None

    def count_by_dim(self) -> list[int]:
        counts = [0] * (self.dim + 1)
        for c in self.cells.values():
            counts[c.dim] += 1
        return counts

    @cached_property
    def down_sets(self) -> dict[str, frozenset[str]]:
        """Closed cell of each id: the set of all its faces, itself included."""
        down: dict[str, frozenset[str]] = {}
        for i in self.graded_ids:
            acc = {i}
            for b in self.cells[i].covers:
                acc |= down[b]
            down[i] = frozenset(acc)
        return down

    @cached_property
    def vertex_masks(self) -> dict[str, int]:
        """Bitmask of the 0-cells contained in each closed cell."""
        bit = {}
        masks: dict[str, int] = {}
        for i in self.graded_ids:
            c = self.cells[i]
            if c.dim == 0:
                bit[i] = 1 << len(bit)
                masks[i] = bit[i]
            else:
                m = 0
                for b in c.covers:
                    m |= masks[b]
                masks[i] = m
        return masks

    def disjoint(self, a: str, b: str) -> bool:
        masks = self.vertex_masks
        if a not in masks:
            raise UnknownCell(f"unknown cell {a!r}")
        if b not in masks:
            raise UnknownCell(f"unknown cell {b!r}")
        return not masks[a] & masks[b]

    def subcomplex(self, ids: Iterable[str]) -> "RegularCwComplex":
        """Subcomplex on ``ids``; the set must be closed under taking faces."""
        return RegularCwComplex(self.cells[i] for i in ids)

    def skeleton(self, k: int) -> "RegularCwComplex":
        """Subcomplex of all cells of dimension at most ``k``."""
        if k >= self.dim:
            return self
        return self.subcomplex(i for i, c in self.cells.items() if c.dim <= k)

    def boundary_complex(self, cell_id: str) -> "RegularCwComplex":
        return self.subcomplex(self.down_sets[cell_id] - {cell_id})

    def _check_boundary_spheres(self):
        from .homology import reduced_homology  # homology imports this module

        for i in self.graded_ids:
            d = self.cells[i].dim
            prof = reduced_homology(self.boundary_complex(i))
            if not prof.is_sphere(d - 1):
                raise NotRegular(
                    f"boundary of cell {i!r} is not a homology {d - 1}-sphere: {prof}"
                )


def build_cw(cells: Iterable[tuple[str, int, Iterable[str]]], *, strict: bool = False) -> RegularCwComplex:
    return RegularCwComplex((Cell(str(i), int(d), frozenset(cov)) for i, d, cov in cells), strict=strict)


def as_cw(K: SimplicialComplex) -> RegularCwComplex:
    cells = []
    for f in K.faces:
        covers = frozenset(face_id(g) for g in combinations(f, len(f) - 1)) if len(f) > 1 else frozenset()
        cells.append(Cell(face_id(f), len(f) - 1, covers))
    return RegularCwComplex(cells)


@dataclass(frozen=True)
class FacePoset:
    """Finite poset given by its principal down-sets ``P_{<=x}``.

    ``rank`` is a strictly order-preserving integer function (cell dimension
    for face posets) used to list elements in a linear extension.
    """

    elements: tuple[str, ...]
    down_sets: Mapping[str, frozenset[str]]
    rank: Mapping[str, int]

    def leq(self, x: str, y: str) -> bool:
        return x in self.down_sets[y]

    def lt(self, x: str, y: str) -> bool:
        return x != y and x in self.down_sets[y]

    def linear_extension(self) -> list[str]:
        return sorted(self.elements, key=lambda e: (self.rank[e], e))

    def __len__(self):
        return len(self.elements)


def face_poset(X: RegularCwComplex | SimplicialComplex) -> FacePoset:
    if isinstance(X, SimplicialComplex):
        X = as_cw(X)
    return FacePoset(
        elements=X.ids,
        down_sets=X.down_sets,
        rank={i: c.dim for i, c in X.cells.items()},
    )


def order_complex(P: FacePoset) -> SimplicialComplex:
    """Simplicial complex of strict chains of ``P``.

    Element ``x`` becomes vertex ``linear_extension().index(x)``, so every
    chain lists its vertices in ascending order.
    """
    order = P.linear_extension()
    label = {e: n for n, e in enumerate(order)}
    strict_down = {e: P.down_sets[e] - {e} for e in order}
    # immediate predecessors; maximal chains only step along these
    lower_covers = {}
    for e in order:
        below = strict_down[e]
        lower_covers[e] = sorted(
            (y for y in below if not any(y in strict_down[z] for z in below)), key=label.get
        )
    above = set()
    for e in order:
        above |= strict_down[e]
    maximal = [e for e in order if e not in above]

    facets = []

    def descend(top, tail):
        chain = (label[top],) + tail
        if not lower_covers[top]:
            facets.append(chain)
            return
        for y in lower_covers[top]:
            descend(y, chain)

    for m in maximal:
        descend(m, ())
    return SimplicialComplex._from_maximal(facets)


def are_disjoint(X: RegularCwComplex, a: str, b: str) -> bool:
    """True iff the closed cells ``a`` and ``b`` share no face."""
    return X.disjoint(a, b)

