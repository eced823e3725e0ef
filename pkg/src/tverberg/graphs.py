"""Loopless multigraphs as 1-dimensional complexes and the (1,2) classifier.

A 1-dimensional finite complex is (1,2)-Tverberg exactly when it contains
a cycle of length at least 3 or a Y (a vertex with three distinct
neighbours); otherwise it is a disjoint union of paths, possibly with
multiple edges. C3 and Y are the atoms of this class.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator

from .complex_core import Cell, RegularCwComplex
from .errors import GuardExceeded, LoopEdge
from .homology import is_n_acyclic

__all__ = [
    "Multigraph",
    "graph_to_cw",
    "classify_12_tverberg",
    "canonical_form",
    "enumerate_connected_multigraphs",
    "CrosscheckRow",
    "corpus_crosscheck",
    "conf2_connected",
]

MAX_ENUMERATION_EDGES = 7
MAX_CROSSCHECK_EDGES = 6


@dataclass(frozen=True)
class Multigraph:
    vertex_count: int
    edges: tuple[tuple[int, int], ...]

    def __init__(self, vertex_count: int, edges: Iterable[Iterable[int]] = ()):
        norm = []
        for e in edges:
            u, v = e
            if u == v:
                raise LoopEdge(f"loop at vertex {u}")
            if not (0 <= u < vertex_count and 0 <= v < vertex_count):
                raise ValueError(f"edge ({u}, {v}) outside vertices 0..{vertex_count - 1}")
            norm.append((min(u, v), max(u, v)))
        object.__setattr__(self, "vertex_count", vertex_count)
        object.__setattr__(self, "edges", tuple(norm))

    def neighbours(self) -> list[set[int]]:
        nb = [set() for _ in range(self.vertex_count)]
        for u, v in self.edges:
            nb[u].add(v)
            nb[v].add(u)
        return nb

    def degrees(self) -> list[int]:
        deg = [0] * self.vertex_count
        for u, v in self.edges:
            deg[u] += 1
            deg[v] += 1
        return deg


def graph_to_cw(G: Multigraph) -> RegularCwComplex:
    """Vertex i becomes 0-cell ``v{i}``, edge j becomes 1-cell ``e{j}``."""
    cells = [Cell(f"v{i}", 0) for i in range(G.vertex_count)]
    cells += [Cell(f"e{j}", 1, frozenset({f"v{u}", f"v{v}"})) for j, (u, v) in enumerate(G.edges)]
    return RegularCwComplex(cells)


def _has_long_cycle(G: Multigraph) -> bool:
    # parallel edges collapse; a cycle in the simple graph has length >= 3
    parent = list(range(G.vertex_count))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for u, v in sorted(set(G.edges)):
        a, b = find(u), find(v)
        if a == b:
            return True
        parent[a] = b
    return False


def classify_12_tverberg(G: Multigraph) -> bool:
    if any(len(nb) >= 3 for nb in G.neighbours()):
        return True
    return _has_long_cycle(G)


def canonical_form(G: Multigraph) -> tuple[int, tuple[tuple[int, int], ...]]:
    """Lexicographically least sorted edge list over all vertex relabelings.

    Labels are handed out in increasing order. While some labelled vertex
    still has unlabelled neighbours, the next label must go to one of those
    joined to the earliest such vertex by the most parallel edges; any other
    choice loses at the next position of the edge list. Twins (vertices with
    the same edge multiplicities to everything else) are swapped by an
    automorphism, so only one of them is tried.
    """
    n = G.vertex_count
    mult = [[0] * n for _ in range(n)]
    for u, v in G.edges:
        mult[u][v] += 1
        mult[v][u] += 1
    best: tuple | None = None

    def distinct_up_to_twins(cands: list[int]) -> list[int]:
        kept: list[int] = []
        for c in cands:
            if not any(all(mult[c][w] == mult[k][w] for w in range(n) if w != c and w != k) for k in kept):
                kept.append(c)
        return kept

    def search(order: list[int], label: dict[int, int]) -> None:
        nonlocal best
        i = len(order)
        if i == n:
            form = tuple(sorted((min(label[u], label[v]), max(label[u], label[v])) for u, v in G.edges))
            if best is None or form < best:
                best = form
            return
        prefix: list[tuple[int, int]] = []
        frontier = None
        for a, v in enumerate(order):
            known = sorted(label[w] for w in range(n) if w in label and label[w] > a for _ in range(mult[v][w]))
            prefix += [(a, b) for b in known]
            if any(mult[v][w] and w not in label for w in range(n)):
                frontier = v
                break
        if best is not None and tuple(prefix) > best[: len(prefix)]:
            return
        if frontier is None:
            cands = [w for w in range(n) if w not in label]
        else:
            m = max(mult[frontier][w] for w in range(n) if w not in label)
            cands = [w for w in range(n) if w not in label and mult[frontier][w] == m]
        for c in distinct_up_to_twins(cands):
            label[c] = i
            order.append(c)
            search(order, label)
            order.pop()
            del label[c]

    search([], {})
    return n, best or ()


def enumerate_connected_multigraphs(max_edges: int) -> Iterator[Multigraph]:
    """Connected loopless multigraphs with 1..max_edges edges, up to isomorphism.

    Ordered by edge count, then by canonical form.
    """
    if max_edges > MAX_ENUMERATION_EDGES:
        raise GuardExceeded(f"max_edges is capped at {MAX_ENUMERATION_EDGES}")
    if max_edges < 1:
        return
    layer = {canonical_form(Multigraph(2, [(0, 1)]))}
    for e in range(1, max_edges + 1):
        for n, edges in sorted(layer):
            yield Multigraph(n, edges)
        if e == max_edges:
            break
        nxt = set()
        for n, edges in layer:
            for u in range(n):
                for v in range(u + 1, n):
                    nxt.add(canonical_form(Multigraph(n, edges + ((u, v),))))
                nxt.add(canonical_form(Multigraph(n + 1, edges + ((u, n),))))
        layer = nxt


def conf2_connected(G: Multigraph) -> bool:
    from .deleted_product import deleted_product

    return is_n_acyclic(deleted_product(graph_to_cw(G), 2).underlying, 0)


@dataclass(frozen=True)
class CrosscheckRow:
    graph: Multigraph
    classifier: bool
    conf2_connected: bool

    @property
    def violation(self) -> bool:
        # connected Conf_2 certifies the property, so the classifier must agree
        return self.conf2_connected and not self.classifier

    @property
    def unconfirmed(self) -> bool:
        return self.classifier and not self.conf2_connected

    def as_dict(self) -> dict:
        return {
            "vertices": self.graph.vertex_count,
            "edges": [list(e) for e in self.graph.edges],
            "classifier": self.classifier,
            "conf2_connected": self.conf2_connected,
        }


def corpus_crosscheck(max_edges: int) -> list[CrosscheckRow]:
    if max_edges > MAX_CROSSCHECK_EDGES:
        raise GuardExceeded(f"max_edges is capped at {MAX_CROSSCHECK_EDGES}")
    return [CrosscheckRow(G, classify_12_tverberg(G), conf2_connected(G)) for G in enumerate_connected_multigraphs(max_edges)]
