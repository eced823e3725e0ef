"""Reduced integral homology via boundary matrices and Smith normal form.

Simplicial complexes use their own chain complex. A regular CW complex is
replaced by the order complex of its face poset (its barycentric
subdivision), which is homeomorphic to it, so no incidence numbers of
general cells are ever needed.

All callers can cap the computation at a degree: acyclicity up to degree n
only needs chains of dimension at most n + 1.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field
from itertools import combinations
from math import gcd
from typing import Iterable, Sequence, Union

from .complex_core import RegularCwComplex, SimplicialComplex
from .errors import EmptyComplex

__all__ = [
    "IntegerMatrix",
    "ChainComplex",
    "HomologyProfile",
    "smith_normal_form",
    "chain_complex",
    "cw_chain_complex",
    "reduced_homology",
    "is_n_acyclic",
    "acyclicity_witness",
    "euler_characteristic",
]


class IntegerMatrix:
    """Sparse integer matrix; only non-zero entries are stored."""

    __slots__ = ("rows", "cols", "entries")

    def __init__(self, rows: int, cols: int, entries: dict[tuple[int, int], int] | None = None):
        self.rows = rows
        self.cols = cols
        self.entries = {k: v for k, v in (entries or {}).items() if v}

    @classmethod
    def from_dense(cls, data: Sequence[Sequence[int]]) -> "IntegerMatrix":
        rows = len(data)
        cols = len(data[0]) if rows else 0
        return cls(rows, cols, {(i, j): int(x) for i, r in enumerate(data) for j, x in enumerate(r) if x})

    def to_dense(self) -> list[list[int]]:
        out = [[0] * self.cols for _ in range(self.rows)]
        for (i, j), v in self.entries.items():
            out[i][j] = v
        return out

    def __matmul__(self, other: "IntegerMatrix") -> "IntegerMatrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        by_row: dict[int, list[tuple[int, int]]] = {}
        for (k, j), v in other.entries.items():
            by_row.setdefault(k, []).append((j, v))
        acc: dict[tuple[int, int], int] = {}
        for (i, k), a in self.entries.items():
            for j, b in by_row.get(k, ()):
                acc[i, j] = acc.get((i, j), 0) + a * b
        return IntegerMatrix(self.rows, other.cols, acc)

    def is_zero(self) -> bool:
        return not self.entries

    def __eq__(self, other):
        if not isinstance(other, IntegerMatrix):
            return NotImplemented
        return (self.rows, self.cols, self.entries) == (other.rows, other.cols, other.entries)

    def __repr__(self):
        return f"IntegerMatrix({self.rows}x{self.cols}, nnz={len(self.entries)})"


def _invariant_factors(diagonal: Iterable[int]) -> list[int]:
    """Turn any diagonal form into the divisibility chain d1 | d2 | ..."""
    ds = sorted(abs(d) for d in diagonal)
    ones = [d for d in ds if d == 1]
    rest = [d for d in ds if d != 1]
    for i in range(len(rest)):
        for j in range(i + 1, len(rest)):
            g = gcd(rest[i], rest[j])
            rest[i], rest[j] = g, rest[i] * rest[j] // g
    return ones + sorted(rest)


def smith_normal_form(M: IntegerMatrix | Sequence[Sequence[int]]) -> tuple[list[int], int]:
    """Invariant factors and rank of an integer matrix.

    Sparse elimination with exact integers. The pivot is always an entry of
    minimal absolute value; among those the one with the smallest Markowitz
    count (row length - 1) * (column length - 1), then the lowest (row, col).
    A pivot whose row or column still holds non-multiples is not
    eliminated; the Euclidean remainders it leaves behind become the next,
    smaller pivots.
    """
    if not isinstance(M, IntegerMatrix):
        M = IntegerMatrix.from_dense(M)
    rows: dict[int, dict[int, int]] = {}
    cols: dict[int, dict[int, int]] = {}
    for (i, j), v in M.entries.items():
        rows.setdefault(i, {})[j] = v
        cols.setdefault(j, {})[i] = v

    def cost(i, j):
        return (len(rows[i]) - 1) * (len(cols[j]) - 1)

    heap = [(abs(v), cost(i, j), i, j) for (i, j), v in M.entries.items()]
    heapq.heapify(heap)

    def put(i, j, v):
        if v:
            rows[i][j] = v
            cols.setdefault(j, {})[i] = v
            heapq.heappush(heap, (abs(v), cost(i, j), i, j))
        else:
            rows[i].pop(j, None)
            cols[j].pop(i, None)

    diagonal = []
    while heap:
        a, m, r, c = heapq.heappop(heap)
        p = rows.get(r, {}).get(c)
        if p is None or abs(p) != a:
            continue  # stale heap entry
        now = cost(r, c)
        if now > m:
            heapq.heappush(heap, (a, now, r, c))  # fill-in since it was queued
            continue
        clean = True
        prow = rows[r]
        # row operations: clear column c except at the pivot
        for i, x in list(cols[c].items()):
            if i == r:
                continue
            q = x // p
            if q:
                for j, y in list(prow.items()):
                    put(i, j, rows[i].get(j, 0) - q * y)
            if x - q * p:
                clean = False
        if clean:
            # column c now holds only the pivot, so column operations touch row r only
            for j, y in list(prow.items()):
                if j == c:
                    continue
                q = y // p
                rem = y - q * p
                put(r, j, rem)
                if rem:
                    clean = False
        if not clean:
            heapq.heappush(heap, (a, cost(r, c), r, c))
            continue
        del rows[r]
        del cols[c]
        diagonal.append(p)
    return _invariant_factors(diagonal), len(diagonal)


@dataclass
class ChainComplex:
    """Chain groups with ordered bases and boundary maps.

    ``boundaries[k]`` maps degree k to degree k-1; ``boundaries[0]`` is the
    augmentation row of ones when ``reduced`` is set, else a 0-row matrix.
    """

    bases: list[list] = field(default_factory=list)
    boundaries: list[IntegerMatrix] = field(default_factory=list)
    reduced: bool = True

    @property
    def top(self) -> int:
        return len(self.bases) - 1

    def rank(self, k: int) -> int:
        return len(self.bases[k]) if 0 <= k < len(self.bases) else 0


def _faces_up_to(K: SimplicialComplex, top: int) -> list[list[tuple[int, ...]]]:
    if top >= K.dim:
        by_dim = [[] for _ in range(K.dim + 1)]
        for f in K.faces:
            by_dim[len(f) - 1].append(f)
        return by_dim
    found = [set() for _ in range(top + 1)]
    for f in K.facets:
        for k in range(min(top, len(f) - 1) + 1):
            found[k].update(combinations(f, k + 1))
    return [sorted(s) for s in found]


def _simplicial_boundaries(bases, reduced):
    mats = []
    for k, basis in enumerate(bases):
        if k == 0:
            if reduced:
                mats.append(IntegerMatrix(1, len(basis), {(0, j): 1 for j in range(len(basis))}))
            else:
                mats.append(IntegerMatrix(0, len(basis)))
            continue
        index = {f: n for n, f in enumerate(bases[k - 1])}
        entries = {}
        for j, f in enumerate(basis):
            for i in range(len(f)):
                entries[index[f[:i] + f[i + 1:]], j] = -1 if i % 2 else 1
        mats.append(IntegerMatrix(len(bases[k - 1]), len(basis), entries))
    return mats


def chain_complex(K: SimplicialComplex, reduced: bool = True, top: int | None = None) -> ChainComplex:
    """Simplicial chain complex; vertices of each simplex in ascending order.

    ``top`` truncates to chain groups of dimension at most ``top``.
    """
    t = K.dim if top is None else min(top, K.dim)
    bases = _faces_up_to(K, t)
    return ChainComplex(bases, _simplicial_boundaries(bases, reduced), reduced)


def cw_chain_complex(X: RegularCwComplex, reduced: bool = True, top: int | None = None) -> ChainComplex:
    """Chain complex of the order complex of the face poset of ``X``.

    Chains are tuples of positions in ``X.graded_ids`` listed bottom-up, so
    they are already sorted simplices of the subdivision.
    """
    t = X.dim if top is None else min(top, X.dim)
    order = X.graded_ids
    pos = {c: n for n, c in enumerate(order)}
    down = X.down_sets
    strict_down = [sorted(pos[y] for y in down[c] if y != c) for c in order]
    bases: list[list[tuple[int, ...]]] = []
    if t >= 0:
        bases.append([(n,) for n in range(len(order))])
    for _ in range(t):
        bases.append([(x,) + ch for ch in bases[-1] for x in strict_down[ch[0]]])
    return ChainComplex(bases, _simplicial_boundaries(bases, reduced), reduced)


@dataclass(frozen=True, eq=False)
class HomologyProfile:
    """Reduced integral homology, degree by degree.

    ``betti[k]`` is the free rank of H~_k and ``torsion[k]`` its torsion
    invariant factors. Degrees past ``len(betti)`` are zero (either above
    the complex dimension or beyond the requested cut-off).
    """

    betti: tuple[int, ...] = ()
    torsion: tuple[tuple[int, ...], ...] = ()
    is_empty_complex: bool = False

    def at(self, k: int) -> tuple[int, tuple[int, ...]]:
        if 0 <= k < len(self.betti):
            return self.betti[k], self.torsion[k]
        return 0, ()

    def vanishes(self, k: int) -> bool:
        b, t = self.at(k)
        return b == 0 and not t

    def first_nonzero(self) -> int | None:
        """Lowest degree with non-zero homology; -1 for the empty complex."""
        if self.is_empty_complex:
            return -1
        for k in range(len(self.betti)):
            if not self.vanishes(k):
                return k
        return None

    def is_sphere(self, d: int) -> bool:
        """Homology of S^d (S^-1 being the empty space)."""
        if d < 0:
            return self.is_empty_complex
        if self.is_empty_complex:
            return False
        return all(self.at(k) == ((1, ()) if k == d else (0, ())) for k in range(max(d + 1, len(self.betti))))

    def _key(self):
        b, t = list(self.betti), list(self.torsion)
        while b and b[-1] == 0 and not t[-1]:
            b.pop()
            t.pop()
        return self.is_empty_complex, tuple(b), tuple(t)

    def __eq__(self, other):
        if not isinstance(other, HomologyProfile):
            return NotImplemented
        return self._key() == other._key()

    def __hash__(self):
        return hash(self._key())

    @staticmethod
    def group_name(betti: int, torsion: Sequence[int]) -> str:
        parts = []
        if betti == 1:
            parts.append("Z")
        elif betti > 1:
            parts.append(f"Z^{betti}")
        parts += [f"Z/{t}" for t in torsion]
        return " + ".join(parts) or "0"

    def as_dict(self) -> dict:
        return {
            "empty": self.is_empty_complex,
            "degrees": [
                {"degree": k, "betti": b, "torsion": list(t)} for k, (b, t) in enumerate(zip(self.betti, self.torsion))
            ],
        }

    def __str__(self):
        if self.is_empty_complex:
            return "empty complex"
        if not self.betti:
            return "(no degrees computed)"
        return ", ".join(f"H~{k}={self.group_name(b, t)}" for k, (b, t) in enumerate(zip(self.betti, self.torsion)))


def _homology_of(cc: ChainComplex) -> HomologyProfile:
    ranks = []
    factors = []
    for m in cc.boundaries:
        f, r = smith_normal_form(m)
        ranks.append(r)
        factors.append(f)
    betti, torsion = [], []
    # the top group has no incoming boundary inside the truncated complex,
    # so only degrees below it are reported when truncated
    for k in range(cc.top + 1):
        incoming = ranks[k + 1] if k + 1 < len(ranks) else 0
        betti.append(cc.rank(k) - ranks[k] - incoming)
        torsion.append(tuple(d for d in factors[k + 1] if d > 1) if k + 1 < len(factors) else ())
    return HomologyProfile(tuple(betti), tuple(torsion))


def _underlying(X):
    # accepts anything wrapping a complex, e.g. a configuration space
    return getattr(X, "underlying", X)


Complex = Union[SimplicialComplex, RegularCwComplex]


def reduced_homology(X: Complex, max_degree: int | None = None) -> HomologyProfile:
    """Reduced integral homology of a simplicial or regular CW complex.

    With ``max_degree`` only degrees up to that bound are computed.
    """
    X = _underlying(X)
    if X.is_empty():
        return HomologyProfile(is_empty_complex=True)
    top = X.dim if max_degree is None else min(max_degree, X.dim)
    if top < 0:
        return HomologyProfile()
    # one extra chain degree provides the incoming boundary at the cut-off
    need = top + 1
    if isinstance(X, SimplicialComplex):
        cc = chain_complex(X, reduced=True, top=need)
    else:
        # homology through degree top only sees the (top + 1)-skeleton
        cc = cw_chain_complex(X.skeleton(need), reduced=True, top=need)
    prof = _homology_of(cc)
    return HomologyProfile(prof.betti[: top + 1], prof.torsion[: top + 1])


def acyclicity_witness(X: Complex, n: int) -> int | None:
    """None when ``X`` is n-acyclic, else the lowest offending degree.

    Degree -1 stands for "the complex is empty".
    """
    if n <= -2:
        return None
    X = _underlying(X)
    if X.is_empty():
        return -1
    if n == -1:
        return None
    return reduced_homology(X, max_degree=n).first_nonzero()


def is_n_acyclic(X: Complex, n: int) -> bool:
    return acyclicity_witness(X, n) is None


def euler_characteristic(X: Complex) -> int:
    X = _underlying(X)
    if X.is_empty():
        raise EmptyComplex("Euler characteristic of the empty complex is not defined here")
    if isinstance(X, SimplicialComplex):
        return sum((-1) ** (len(f) - 1) for f in X.faces)
    return sum((-1) ** c.dim for c in X.cells.values())
