"""Chordality recognition and maximal cliques."""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

from .graph import Edge, Graph


@dataclass(frozen=True)
class CliqueSet:
    """Maximal cliques (sorted vertex tuples) with an edge -> clique index."""

    cliques: tuple[tuple[int, ...], ...]
    by_edge: dict[Edge, tuple[int, ...]] = field(default_factory=dict, compare=False)

    @classmethod
    def build(cls, cliques) -> CliqueSet:
        cliques = tuple(tuple(sorted(k)) for k in cliques)
        by_edge: dict[Edge, list[int]] = {}
        for i, k in enumerate(cliques):
            for e in combinations(k, 2):
                by_edge.setdefault(e, []).append(i)
        return cls(cliques, {e: tuple(ix) for e, ix in by_edge.items()})

    def __len__(self):
        return len(self.cliques)

    def __iter__(self):
        return iter(self.cliques)

    def __getitem__(self, i):
        return self.cliques[i]

    def containing(self, u: int, v: int) -> tuple[int, ...]:
        return self.by_edge.get((u, v) if u < v else (v, u), ())

    def as_family(self) -> set[frozenset[int]]:
        return {frozenset(k) for k in self.cliques}


def lex_bfs(g: Graph) -> list[int]:
    """Lexicographic breadth-first order by partition refinement."""
    order: list[int] = []
    # Sequence of cells; the next vertex is taken from the first cell.
    cells: list[list[int]] = [list(g.vertices)] if g.n else []
    while cells:
        v = cells[0].pop(0)
        if not cells[0]:
            cells.pop(0)
        order.append(v)
        nbrs = g.neighbors(v)
        refined = []
        for cell in cells:
            inside = [u for u in cell if u in nbrs]
            outside = [u for u in cell if u not in nbrs]
            if inside:
                refined.append(inside)
            if outside:
                refined.append(outside)
        cells = refined
    return order


def is_peo(g: Graph, order: list[int]) -> bool:
    """True iff the later neighbours of each vertex form a clique."""
    if sorted(order) != list(g.vertices):
        return False
    pos = {v: i for i, v in enumerate(order)}
    for v in order:
        later = [u for u in g.neighbors(v) if pos[u] > pos[v]]
        if not later:
            continue
        # The earliest later neighbour must see all the others.
        parent = min(later, key=pos.__getitem__)
        if any(u != parent and not g.has_edge(parent, u) for u in later):
            return False
    return True


def peo(g: Graph) -> list[int] | None:
    """A perfect elimination ordering, or ``None`` when ``g`` is not chordal."""
    order = lex_bfs(g)[::-1]
    return order if is_peo(g, order) else None


def is_chordal(g: Graph) -> bool:
    return peo(g) is not None


def maximal_cliques_chordal(g: Graph, order: list[int] | None = None) -> CliqueSet:
    """Maximal cliques of a chordal graph from a perfect elimination ordering.

    Each candidate is a vertex together with its later neighbours; candidates
    contained in another are dropped.  Cliques come out ordered by the
    position of their earliest vertex in ``order``.
    """
    if order is None:
        order = peo(g)
        if order is None:
            raise ValueError("graph is not chordal")
    elif not is_peo(g, order):
        raise ValueError("not a perfect elimination ordering")
    pos = {v: i for i, v in enumerate(order)}
    candidates = [
        frozenset([v, *(u for u in g.neighbors(v) if pos[u] > pos[v])]) for v in order]
    kept = []
    for i, c in enumerate(candidates):
        # c can only be contained in a candidate from an earlier vertex.
        if not any(c < candidates[j] for j in range(i)):
            kept.append(c)
    return CliqueSet.build(kept)


def maximal_cliques_general(g: Graph) -> CliqueSet:
    """All maximal cliques by Bron-Kerbosch with Tomita pivoting, sorted."""
    found: list[tuple[int, ...]] = []

    def expand(r: list[int], p: set[int], x: set[int]):
        if not p and not x:
            found.append(tuple(sorted(r)))
            return
        pivot = max(p | x, key=lambda u: len(p & g.neighbors(u)))
        for v in sorted(p - g.neighbors(pivot)):
            nv = g.neighbors(v)
            expand(r + [v], p & nv, x & nv)
            p.discard(v)
            x.add(v)

    if g.n:
        expand([], set(g.vertices), set())
    return CliqueSet.build(sorted(found))
