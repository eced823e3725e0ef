"""Complements of faces and the k-complementary n-acyclic check.

``X(s1, ..., si)`` is the subcomplex of cells meeting none of the ``s``.
The checker walks every unordered tuple of at most k pairwise disjoint
faces with total dimension at most n + 1 and asks that the complement be
(n - total dimension)-acyclic. The empty tuple comes first, so X itself
must be n-acyclic.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterator, Sequence

from .complex_core import RegularCwComplex, SimplicialComplex, as_cw
from .errors import UnknownCell
from .homology import HomologyProfile, reduced_homology

__all__ = [
    "DisjointTuple",
    "Failure",
    "ComplementaryReport",
    "complement",
    "enumerate_disjoint_tuples",
    "check_complementary_acyclic",
]


def _cw(X) -> RegularCwComplex:
    return as_cw(X) if isinstance(X, SimplicialComplex) else X


@dataclass(frozen=True)
class DisjointTuple:
    cells: tuple[str, ...]
    total_dim: int

    def __len__(self):
        return len(self.cells)

    def __str__(self):
        return "(" + ", ".join(self.cells) + ")"


def _union_mask(X: RegularCwComplex, faces: Sequence[str]) -> int:
    masks = X.vertex_masks
    u = 0
    for f in faces:
        if f not in masks:
            raise UnknownCell(f"unknown cell {f!r}")
        u |= masks[f]
    return u


def _complement_by_mask(X: RegularCwComplex, mask: int) -> RegularCwComplex:
    masks = X.vertex_masks
    return X.subcomplex(i for i in X.ids if not masks[i] & mask)


def complement(X, faces: Sequence[str]) -> RegularCwComplex:
    """Subcomplex of cells disjoint from every cell in ``faces``."""
    X = _cw(X)
    return _complement_by_mask(X, _union_mask(X, faces))


def enumerate_disjoint_tuples(X, max_count: int, dim_budget: int) -> Iterator[DisjointTuple]:
    """Unordered tuples of pairwise disjoint cells, smallest first.

    Yields the empty tuple, then tuples of size 1, 2, ... up to
    ``max_count``, each size in lexicographic order of the sorted id lists.
    Only tuples with total dimension at most ``dim_budget`` are produced;
    the empty tuple is always produced.
    """
    X = _cw(X)
    yield DisjointTuple((), 0)
    if max_count <= 0 or dim_budget < 0:
        return
    ids = X.ids
    masks = X.vertex_masks
    dims = [X.cells[i].dim for i in ids]
    mask_of = [masks[i] for i in ids]
    # (last index, union mask, total dim, members)
    level = [(-1, 0, 0, ())]
    for _size in range(1, max_count + 1):
        nxt = []
        for last, mask, total, members in level:
            for j in range(last + 1, len(ids)):
                t = total + dims[j]
                if t > dim_budget or mask_of[j] & mask:
                    continue
                nxt.append((j, mask | mask_of[j], t, members + (ids[j],)))
        if not nxt:
            return
        for _, _, t, members in nxt:
            yield DisjointTuple(members, t)
        level = nxt


@dataclass(frozen=True)
class Failure:
    tuple: DisjointTuple
    required: int
    homology: HomologyProfile

    def as_dict(self) -> dict:
        return {
            "faces": list(self.tuple.cells),
            "total_dim": self.tuple.total_dim,
            "required_acyclicity": self.required,
            "complement_homology": self.homology.as_dict(),
            "complement_homology_text": str(self.homology),
        }

    def describe(self) -> str:
        what = "X" if not self.tuple.cells else f"X{self.tuple}"
        return f"{what} is not {self.required}-acyclic ({self.homology})"


@dataclass
class ComplementaryReport:
    complex_id: str
    k: int
    n: int
    checked_count: int
    failures: list[Failure] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    @property
    def verdict(self) -> str:
        return "pass" if self.passed else "fail"

    @property
    def counterexample(self) -> Failure | None:
        return self.failures[0] if self.failures else None

    def as_dict(self) -> dict:
        out = {
            "complex": self.complex_id,
            "k": self.k,
            "n": self.n,
            "verdict": self.verdict,
            "checked_count": self.checked_count,
            "counterexample": self.counterexample.as_dict() if self.failures else None,
        }
        if len(self.failures) > 1:
            out["failures"] = [f.as_dict() for f in self.failures]
        return out


def check_complementary_acyclic(
    X, k: int, n: int, *, exhaustive: bool = False, complex_id: str = "X"
) -> ComplementaryReport:
    """Decide whether ``X`` is k-complementary n-acyclic.

    Stops at the first failing tuple unless ``exhaustive`` is set.
    """
    if k < 0:
        raise ValueError("k must be non-negative")
    if n < -1:
        raise ValueError("n must be at least -1")
    X = _cw(X)
    # the complement only depends on the union of vertex sets, and the
    # strongest level ever asked of it is n, so one profile per union suffices
    profiles: dict[int, HomologyProfile] = {}
    report = ComplementaryReport(complex_id, k, n, 0)
    for tup in enumerate_disjoint_tuples(X, k, n + 1):
        report.checked_count += 1
        required = n - tup.total_dim
        mask = _union_mask(X, tup.cells)
        prof = profiles.get(mask)
        if prof is None:
            sub = _complement_by_mask(X, mask)
            prof = reduced_homology(sub, max_degree=n)
            profiles[mask] = prof
        if not _meets(prof, required):
            report.failures.append(Failure(tup, required, _clip(prof, required)))
            if not exhaustive:
                break
    return report


def _meets(prof: HomologyProfile, level: int) -> bool:
    if level <= -2:
        return True
    if prof.is_empty_complex:
        return False
    return all(prof.vanishes(d) for d in range(level + 1))


def _clip(prof: HomologyProfile, level: int) -> HomologyProfile:
    # report homology only through the degrees that were required
    if prof.is_empty_complex:
        return prof
    top = max(level, 0) + 1
    return HomologyProfile(prof.betti[:top], prof.torsion[:top])
