"""Triangles, induced paths, stable sets and co-3-plexes.

All enumerations here are exponential in the worst case and guarded by an
output cap; they are meant for small graphs and for oracles.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .graph import CapExceeded, Graph, connected_components, default_cap

VertexSet = tuple[int, ...]


@dataclass(frozen=True)
class Co3Plex:
    s: VertexSet
    components: tuple[VertexSet, ...]

    @classmethod
    def from_set(cls, g: Graph, s) -> Co3Plex:
        s = tuple(sorted(set(s)))
        return cls(s, tuple(tuple(c) for c in connected_components(g, s)))

    def weight(self, g: Graph) -> Fraction:
        return g.total_weight(self.s)


@dataclass(frozen=True)
class ComponentCatalog:
    triangles: tuple[VertexSet, ...]
    paths: tuple[VertexSet, ...]  # each path in traversal order, smaller endpoint first

    @classmethod
    def of(cls, g: Graph, cap: int | None = None) -> ComponentCatalog:
        return cls(tuple(enumerate_triangles(g)), tuple(enumerate_induced_paths(g, cap)))

    def path_keys(self) -> list[VertexSet]:
        return [tuple(sorted(p)) for p in self.paths]

    def non_singletons(self) -> list[VertexSet]:
        return list(self.triangles) + self.path_keys()


def degree_in(g: Graph, v: int, s) -> int:
    return sum(1 for u in g.neighbors(v) if u in s)


def is_co3plex(g: Graph, s) -> bool:
    s = set(s)
    return all(degree_in(g, v, s) <= 2 for v in s)


def induces_path(g: Graph, s) -> bool:
    """``s`` induces a path with at least one edge (connected, acyclic, degree <= 2)."""
    s = set(s)
    if len(s) < 2:
        return False
    edges = sum(degree_in(g, v, s) for v in s) // 2
    return (edges == len(s) - 1 and all(degree_in(g, v, s) <= 2 for v in s)
            and len(connected_components(g, s)) == 1)


def induces_triangle(g: Graph, s) -> bool:
    return len(s) == 3 and all(g.has_edge(u, v) for u, v in combinations(s, 2))


def enumerate_triangles(g: Graph) -> list[VertexSet]:
    out = []
    for u, v in g.sorted_edges():
        for w in sorted(g.neighbors(u) & g.neighbors(v)):
            if w > v:
                out.append((u, v, w))
    return out


def enumerate_induced_paths(g: Graph, cap: int | None = None) -> list[VertexSet]:
    """Every induced path with at least one edge, once per vertex set.

    Paths are grown at one end: a vertex may be appended when, among the
    current path vertices, it is adjacent to the last one only.  Both
    traversal directions are generated; only the one whose first vertex is
    the smaller endpoint is kept.  Output is sorted by vertex-set key.
    """
    cap = default_cap() if cap is None else cap
    out: list[VertexSet] = []

    def grow(path: list[int], blocked: set[int]):
        # blocked = path vertices and every neighbour of a non-final path vertex
        last = path[-1]
        for u in sorted(g.neighbors(last)):
            if u in blocked:
                continue
            path.append(u)
            if path[0] < u:
                out.append(tuple(path))
                if len(out) > cap:
                    raise CapExceeded("induced paths", cap)
            grow(path, blocked | g.neighbors(last) | {u})
            path.pop()

    for v in g.vertices:
        grow([v], {v})
    out.sort(key=lambda p: (tuple(sorted(p)), p))
    return out


def enumerate_stable_sets(g: Graph, cap: int | None = None) -> list[VertexSet]:
    """All independent sets, the empty set included."""
    cap = default_cap() if cap is None else cap
    out: list[VertexSet] = []

    def rec(chosen: list[int], candidates: list[int]):
        out.append(tuple(chosen))
        if len(out) > cap:
            raise CapExceeded("stable sets", cap)
        for i, v in enumerate(candidates):
            nv = g.neighbors(v)
            chosen.append(v)
            rec(chosen, [u for u in candidates[i + 1:] if u not in nv])
            chosen.pop()

    rec([], list(g.vertices))
    return sorted(out)


def enumerate_co3plexes(g: Graph, cap: int | None = None) -> list[VertexSet]:
    """All vertex sets inducing maximum degree at most 2, the empty set included."""
    cap = default_cap() if cap is None else cap
    out: list[VertexSet] = []
    deg = [0] * (g.n + 1)
    chosen: list[int] = []

    def rec(i: int):
        if i > g.n:
            out.append(tuple(chosen))
            if len(out) > cap:
                raise CapExceeded("co-3-plexes", cap)
            return
        rec(i + 1)
        inside = [u for u in g.neighbors(i) if u in chosen_set]
        if len(inside) <= 2 and all(deg[u] < 2 for u in inside):
            for u in inside:
                deg[u] += 1
            deg[i] = len(inside)
            chosen.append(i)
            chosen_set.add(i)
            rec(i + 1)
            chosen_set.discard(i)
            chosen.pop()
            deg[i] = 0
            for u in inside:
                deg[u] -= 1

    chosen_set: set[int] = set()
    rec(1)
    return sorted(out)


def brute_force_max_co3plex(g: Graph, max_n: int = 24) -> tuple[Co3Plex, Fraction]:
    """Maximum-weight co-3-plex by exhaustive search.

    Ties go to the lexicographically smallest sorted vertex tuple.
    """
    if g.n > max_n:
        raise CapExceeded(f"brute force on {g.n} vertices", max_n)
    best, best_value = (), Fraction(0)
    for s in enumerate_co3plexes(g, cap=1 << g.n):
        value = g.total_weight(s)
        if value > best_value or (value == best_value and s < best):
            best, best_value = s, value
    return Co3Plex.from_set(g, best), best_value
