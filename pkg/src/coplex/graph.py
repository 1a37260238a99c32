"""Vertex-weighted simple graphs, DIMACS I/O and elementary operations.

Vertices are the integers ``1..n``.  Every vertex also carries a *label*, a
frozenset of original vertex names.  Labels survive induced subgraphs, twin
insertion and contraction so that graphs built in different ways can be
compared label by label.
"""

from __future__ import annotations

import os
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable

DEFAULT_CAP = 10**6


def default_cap() -> int:
    """Enumeration cap, overridable through ``COPLEX_CAP``."""
    value = os.environ.get("COPLEX_CAP")
    if value is None:
        return DEFAULT_CAP
    cap = int(value)
    if cap <= 0:
        raise ValueError(f"COPLEX_CAP must be positive, got {value!r}")
    return cap


class ParseError(ValueError):
    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


class CapExceeded(RuntimeError):
    def __init__(self, what: str, cap: int):
        super().__init__(f"{what}: enumeration cap of {cap} exceeded")
        self.cap = cap


Edge = tuple[int, int]


def _edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    n: int
    edges: frozenset[Edge]
    weights: tuple[Fraction, ...] = ()
    labels: tuple[frozenset[int], ...] = ()
    _adj: tuple[frozenset[int], ...] = field(
        default=(), init=False, repr=False, compare=False)

    def __post_init__(self):
        if self.n < 0:
            raise ValueError("negative vertex count")
        edges = frozenset(_edge(u, v) for u, v in self.edges)
        adj: list[set[int]] = [set() for _ in range(self.n + 1)]
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (1 <= u <= self.n and 1 <= v <= self.n):
                raise ValueError(f"edge {u}-{v} has an endpoint outside 1..{self.n}")
            adj[u].add(v)
            adj[v].add(u)
        weights = tuple(Fraction(w) for w in self.weights) or (Fraction(1),) * self.n
        labels = tuple(frozenset(lab) for lab in self.labels) or tuple(
            frozenset((v,)) for v in range(1, self.n + 1))
        if len(weights) != self.n or len(labels) != self.n:
            raise ValueError("weights and labels need one entry per vertex")
        object.__setattr__(self, "edges", edges)
        object.__setattr__(self, "weights", weights)
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "_adj", tuple(frozenset(a) for a in adj))

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[Edge], weights=None) -> Graph:
        return cls(n, frozenset(edges), tuple(weights) if weights is not None else ())

    @property
    def vertices(self) -> range:
        return range(1, self.n + 1)

    @property
    def m(self) -> int:
        return len(self.edges)

    def neighbors(self, v: int) -> frozenset[int]:
        return self._adj[v]

    def closed_neighbors(self, v: int) -> frozenset[int]:
        return self._adj[v] | {v}

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj[u]

    def weight(self, v: int) -> Fraction:
        return self.weights[v - 1]

    def label(self, v: int) -> frozenset[int]:
        return self.labels[v - 1]

    def total_weight(self, vs: Iterable[int]) -> Fraction:
        return sum((self.weights[v - 1] for v in vs), Fraction(0))

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def with_weights(self, weights: Iterable) -> Graph:
        return Graph(self.n, self.edges, tuple(weights), self.labels)

    def relabeled(self, perm: dict[int, int]) -> Graph:
        """Rename vertex ``v`` to ``perm[v]`` (weights move along)."""
        weights = [Fraction(0)] * self.n
        for v in self.vertices:
            weights[perm[v] - 1] = self.weight(v)
        return Graph(self.n, frozenset(_edge(perm[u], perm[v]) for u, v in self.edges),
                     tuple(weights))

    def label_edges(self) -> set[frozenset[frozenset[int]]]:
        """Edge set expressed over vertex labels."""
        return {frozenset((self.label(u), self.label(v))) for u, v in self.edges}


def _check_vertex(g: Graph, v: int) -> None:
    if not isinstance(v, int) or not 1 <= v <= g.n:
        raise ValueError(f"vertex {v!r} is not in the graph")


# -- DIMACS ------------------------------------------------------------------

def parse_graph(text: str | Iterable[str]) -> Graph:
    """Parse the weighted DIMACS edge dialect.

    Recognised lines: ``c ...`` comments, one ``p edge <n> <m>`` header,
    ``n <v> <weight>`` with an integer or ``num/den`` weight, ``e <u> <v>``.
    """
    lines = text.splitlines() if isinstance(text, str) else list(text)
    n = None
    declared_m = 0
    header_line = 0
    weights: dict[int, Fraction] = {}
    edges: set[Edge] = set()

    def vertex(tok: str, lineno: int) -> int:
        try:
            v = int(tok)
        except ValueError:
            raise ParseError(lineno, f"bad vertex index {tok!r}") from None
        if not 1 <= v <= n:
            raise ParseError(lineno, f"vertex {v} out of range 1..{n}")
        return v

    for lineno, raw in enumerate(lines, start=1):
        parts = raw.split()
        if not parts or parts[0] == "c":
            continue
        kind = parts[0]
        if kind == "p":
            if n is not None:
                raise ParseError(lineno, "second problem line")
            if len(parts) != 4 or parts[1] not in ("edge", "col"):
                raise ParseError(lineno, "expected 'p edge <n> <m>'")
            try:
                n, declared_m = int(parts[2]), int(parts[3])
            except ValueError:
                raise ParseError(lineno, "non-integer counts in problem line") from None
            if n < 0 or declared_m < 0:
                raise ParseError(lineno, "negative counts in problem line")
            header_line = lineno
            continue
        if n is None:
            raise ParseError(lineno, f"{kind!r} line before problem line")
        if kind == "e":
            if len(parts) != 3:
                raise ParseError(lineno, "expected 'e <u> <v>'")
            u, v = vertex(parts[1], lineno), vertex(parts[2], lineno)
            if u == v:
                raise ParseError(lineno, f"loop at vertex {u}")
            e = _edge(u, v)
            if e in edges:
                raise ParseError(lineno, f"duplicate edge {u}-{v}")
            edges.add(e)
        elif kind == "n":
            if len(parts) != 3:
                raise ParseError(lineno, "expected 'n <v> <weight>'")
            v = vertex(parts[1], lineno)
            if v in weights:
                raise ParseError(lineno, f"duplicate weight for vertex {v}")
            try:
                weights[v] = Fraction(parts[2])
            except (ValueError, ZeroDivisionError):
                raise ParseError(lineno, f"bad weight {parts[2]!r}") from None
        else:
            raise ParseError(lineno, f"unknown line type {kind!r}")

    if n is None:
        raise ParseError(len(lines) + 1, "missing problem line")
    if len(edges) != declared_m:
        raise ParseError(header_line, f"header declares {declared_m} edges, found {len(edges)}")
    return Graph(n, frozenset(edges), tuple(weights.get(v, Fraction(1)) for v in range(1, n + 1)))


def write_graph(g: Graph, comments: Iterable[str] = ()) -> str:
    """Canonical DIMACS text: header, non-unit weights, sorted edges."""
    out = [f"c {c}" for c in comments]
    out.append(f"p edge {g.n} {g.m}")
    for v in g.vertices:
        w = g.weight(v)
        if w != 1:
            out.append(f"n {v} {w.numerator}/{w.denominator}")
    out.extend(f"e {u} {v}" for u, v in g.sorted_edges())
    return "\n".join(out) + "\n"


def read_graph(path: str | os.PathLike) -> Graph:
    with open(path, encoding="utf-8") as fh:
        return parse_graph(fh.read())


# -- elementary operations ---------------------------------------------------

def induced_subgraph(g: Graph, s: Iterable[int]) -> Graph:
    """``G[S]`` with vertices renumbered ``1..|S|`` in increasing order.

    The original vertices remain reachable through the labels.
    """
    keep = sorted(set(s))
    for v in keep:
        _check_vertex(g, v)
    index = {v: i for i, v in enumerate(keep, start=1)}
    edges = frozenset((index[u], index[v]) for u, v in g.edges if u in index and v in index)
    return Graph(len(keep), edges, tuple(g.weight(v) for v in keep),
                 tuple(g.label(v) for v in keep))


def add_true_twin(g: Graph, v: int) -> Graph:
    """Append vertex ``n+1`` with closed neighbourhood equal to ``N[v]``.

    The twin copies the weight and the label of ``v``.
    """
    _check_vertex(g, v)
    t = g.n + 1
    edges = set(g.edges)
    edges.update(_edge(t, u) for u in g.closed_neighbors(v))
    return Graph(t, frozenset(edges), g.weights + (g.weight(v),), g.labels + (g.label(v),))


def connected_components(g: Graph, within: Iterable[int] | None = None) -> list[list[int]]:
    """Components of ``g`` (or of ``g[within]``) as sorted vertex lists."""
    pool = set(g.vertices if within is None else within)
    comps = []
    for start in sorted(pool):
        if start not in pool:
            continue
        pool.discard(start)
        comp, stack = [start], [start]
        while stack:
            u = stack.pop()
            for w in g.neighbors(u):
                if w in pool:
                    pool.discard(w)
                    comp.append(w)
                    stack.append(w)
        comps.append(sorted(comp))
    return comps


def is_connected(g: Graph, within: Iterable[int] | None = None) -> bool:
    return len(connected_components(g, within)) <= 1


def contract_edges(g: Graph, f: Iterable[Edge]) -> Graph:
    """``G/F``: each component of ``(V(F), F)`` collapses into one vertex.

    Untouched vertices keep their relative order; merged vertices are
    appended in order of their smallest member.  A merged vertex is labeled
    by the union of the merged labels and weighs the sum of their weights.
    """
    f = {_edge(u, v) for u, v in f}
    for u, v in f:
        if not g.has_edge(u, v):
            raise ValueError(f"{u}-{v} is not an edge")
    parent = {v: v for e in f for v in e}

    def find(v):
        while parent[v] != v:
            parent[v] = parent[parent[v]]
            v = parent[v]
        return v

    for u, v in f:
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[max(ru, rv)] = min(ru, rv)
    groups: dict[int, list[int]] = {}
    for v in sorted(parent):
        groups.setdefault(find(v), []).append(v)

    rep = {}
    order = [v for v in g.vertices if v not in parent]
    for i, v in enumerate(order, start=1):
        rep[v] = i
    merged = sorted(groups.values())
    for i, members in enumerate(merged, start=len(order) + 1):
        for v in members:
            rep[v] = i
    edges = frozenset(_edge(rep[u], rep[v]) for u, v in g.edges if rep[u] != rep[v])
    weights = [g.weight(v) for v in order] + [g.total_weight(ms) for ms in merged]
    labels = [g.label(v) for v in order] + [
        frozenset().union(*(g.label(v) for v in ms)) for ms in merged]
    return Graph(len(order) + len(merged), edges, tuple(weights), tuple(labels))


# -- generation ----------------------------------------------------------------

def generate_random_chordal(n: int, density: float | Fraction = 0.5, seed: int = 0) -> Graph:
    """Connected chordal graph grown by simplicial insertions.

    Each new vertex is attached to a nonempty random subset of a random
    maximal clique of the current graph; every member of the clique is kept
    with probability ``density``.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    density = float(density)
    if not 0 <= density <= 1:
        raise ValueError("density must lie in [0, 1]")
    rng = random.Random(seed)
    cliques: list[list[int]] = [[1]]
    edges: set[Edge] = set()
    for v in range(2, n + 1):
        k = rng.randrange(len(cliques))
        clique = cliques[k]
        nbrs = [u for u in clique if rng.random() < density]
        if not nbrs:
            nbrs = [rng.choice(clique)]
        edges.update((u, v) for u in nbrs)
        if len(nbrs) == len(clique):
            cliques[k] = clique + [v]
        else:
            cliques.append(nbrs + [v])
    return Graph(n, frozenset(edges))

