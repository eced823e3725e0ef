"""The deleted product Conf_r(X) as a regular CW complex."""

from __future__ import annotations

import os
from dataclasses import dataclass

from .complex_core import Cell, RegularCwComplex, SimplicialComplex, as_cw
from .errors import SizeLimitExceeded
from .homology import HomologyProfile, reduced_homology

__all__ = ["ConfComplex", "deleted_product", "conf_homology", "conf_cell_id", "default_max_cells"]

DEFAULT_MAX_CELLS = 200_000
MAX_CELLS_ENV = "TVERBERG_MAX_CELLS"


def default_max_cells() -> int:
    raw = os.environ.get(MAX_CELLS_ENV)
    return int(raw) if raw else DEFAULT_MAX_CELLS


def conf_cell_id(coords) -> str:
    return "(" + "|".join(coords) + ")"


@dataclass(frozen=True, eq=False)
class ConfComplex:
    """Ordered r-tuples of pairwise disjoint cells of ``base``.

    The product cell of a tuple has dimension equal to the sum of its
    coordinate dimensions and covers every tuple obtained by replacing one
    coordinate with one of its covers.
    """

    base: RegularCwComplex
    r: int
    underlying: RegularCwComplex
    coordinates: dict[str, tuple[str, ...]]

    def census(self) -> list[int]:
        return self.underlying.count_by_dim()

    def is_empty(self) -> bool:
        return self.underlying.is_empty()

    def __len__(self):
        return len(self.underlying)


def deleted_product(X, r: int, max_cells: int | None = None) -> ConfComplex:
    if r < 1:
        raise ValueError("r must be at least 1")
    if isinstance(X, SimplicialComplex):
        X = as_cw(X)
    limit = default_max_cells() if max_cells is None else max_cells
    ids = X.ids
    masks = X.vertex_masks

    tuples: list[tuple[str, ...]] = []

    def extend(prefix: tuple[str, ...], used: int):
        if len(prefix) == r:
            tuples.append(prefix)
            if len(tuples) > limit:
                raise SizeLimitExceeded(
                    f"Conf_{r} has more than {limit} cells; raise the limit with "
                    f"--max-cells or {MAX_CELLS_ENV}"
                )
            return
        for i in ids:
            if not masks[i] & used:
                extend(prefix + (i,), used | masks[i])

    extend((), 0)

    coords = {conf_cell_id(t): t for t in tuples}
    cells = []
    for cid, t in coords.items():
        dim = sum(X.cells[x].dim for x in t)
        covers = frozenset(
            conf_cell_id(t[:pos] + (b,) + t[pos + 1:]) for pos, x in enumerate(t) for b in X.cells[x].covers
        )
        cells.append(Cell(cid, dim, covers))
    return ConfComplex(X, r, RegularCwComplex(cells), coords)


def conf_homology(X, r: int, max_degree: int | None = None, max_cells: int | None = None) -> HomologyProfile:
    return reduced_homology(deleted_product(X, r, max_cells).underlying, max_degree=max_degree)
