"""Maximum vertex- and edge-weighted induced path, the pricing oracle.

The search is exact branch and bound, exponential in the worst case.
"""

from __future__ import annotations

import heapq
import itertools
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .chordal import CliqueSet
from .graph import CapExceeded, Edge, Graph
from .lp import DualValues
from .structures import VertexSet, induces_path

ZERO = Fraction(0)

DUAL, PAPER = "dual", "paper"


@dataclass(frozen=True)
class PricingWeights:
    vertex: tuple[Fraction, ...]  # index v - 1
    edge: dict[Edge, Fraction]

    def value(self, order: Iterable[int]) -> Fraction:
        order = list(order)
        total = sum((self.vertex[v - 1] for v in order), ZERO)
        for u, v in zip(order, order[1:]):
            total += self.edge[(u, v) if u < v else (v, u)]
        return total


def edge_weights_from_duals(g: Graph, cliques: CliqueSet, duals: DualValues,
                            convention: str = DUAL) -> PricingWeights:
    """Weights under which a path's value is the reduced cost of its column.

    Edge ``uv`` weighs the total clique dual over maximal cliques holding both
    ends.  Vertex ``v`` weighs ``-mu_v``; under ``convention="paper"`` the
    vertex weight ``w_v`` is added as well.
    """
    if convention not in (DUAL, PAPER):
        raise ValueError(f"unknown pricing convention {convention!r}")
    edge = {e: sum((duals.lam[i] for i in cliques.containing(*e)), ZERO)
            for e in g.sorted_edges()}
    vertex = tuple(-duals.mu[v - 1] + (g.weight(v) if convention == PAPER else 0)
                   for v in g.vertices)
    return PricingWeights(vertex, edge)


def _oriented(path) -> VertexSet:
    path = tuple(path)
    return path if path[0] < path[-1] else path[::-1]


def max_weight_induced_path(g: Graph, pw: PricingWeights,
                            exclude: Iterable[VertexSet] = ()) -> tuple[VertexSet, Fraction] | None:
    """Best induced path with at least one edge, ``None`` if there is none.

    Best-first search over paths grown at one end.  A state's bound adds to
    its value every positive vertex and edge weight in the part of the graph
    the path can still reach.  Ties go to the lexicographically smallest
    vertex set.  Paths whose sorted vertex tuple is in ``exclude`` are
    skipped as answers but still extended.
    """
    exclude = {tuple(sorted(p)) for p in exclude}
    pos_edge = {e: w for e, w in pw.edge.items() if w > 0}

    def bound(path, blocked, value):
        last = path[-1]
        seen, stack = {last}, [last]
        while stack:
            u = stack.pop()
            for w in g.neighbors(u):
                if w not in seen and w not in blocked:
                    seen.add(w)
                    stack.append(w)
        extra = sum((pw.vertex[u - 1] for u in seen if u != last and pw.vertex[u - 1] > 0), ZERO)
        extra += sum((w for (a, b), w in pos_edge.items() if a in seen and b in seen), ZERO)
        return value + extra

    best: tuple[Fraction, VertexSet, VertexSet] | None = None  # value, key, order
    tick = itertools.count()
    heap = []
    for v in g.vertices:
        path, blocked, value = (v,), frozenset((v,)), pw.vertex[v - 1]
        heapq.heappush(heap, (-bound(path, blocked, value), next(tick), path, blocked, value))
    while heap:
        neg_b, _, path, blocked, value = heapq.heappop(heap)
        if best is not None and -neg_b < best[0]:
            break
        last = path[-1]
        # Once extended, ``last`` is interior: its other neighbours become unusable.
        next_blocked = blocked | g.neighbors(last)
        for u in sorted(g.neighbors(last) - blocked):
            e = (last, u) if last < u else (u, last)
            new_path = path + (u,)
            new_value = value + pw.vertex[u - 1] + pw.edge[e]
            key = tuple(sorted(new_path))
            if key not in exclude:
                if (best is None or new_value > best[0]
                        or (new_value == best[0] and key < best[1])):
                    best = (new_value, key, _oriented(new_path))
            new_blocked = next_blocked | {u}
            b = bound(new_path, new_blocked, new_value)
            if best is None or b >= best[0]:
                heapq.heappush(heap, (-b, next(tick), new_path, new_blocked, new_value))
    if best is None:
        return None
    return best[2], best[0]


def order_path(g: Graph, s) -> VertexSet:
    """Traversal order of a vertex set inducing a path, smaller endpoint first."""
    s = set(s)
    ends = sorted(v for v in s if sum(1 for u in g.neighbors(v) if u in s) <= 1)
    order, prev = [ends[0]], None
    while len(order) < len(s):
        cur = order[-1]
        nxt = next(u for u in g.neighbors(cur) if u in s and u != prev)
        prev = cur
        order.append(nxt)
    return tuple(order)


def brute_force_pricing(g: Graph, pw: PricingWeights, max_n: int = 20,
                        exclude: Iterable[VertexSet] = ()) -> tuple[VertexSet, Fraction] | None:
    """Same contract as :func:`max_weight_induced_path`, by scanning all subsets."""
    if g.n > max_n:
        raise CapExceeded(f"subset scan on {g.n} vertices", max_n)
    exclude = {tuple(sorted(p)) for p in exclude}
    best = None
    verts = list(g.vertices)
    for size in range(2, g.n + 1):
        for s in itertools.combinations(verts, size):
            if s in exclude or not induces_path(g, s):
                continue
            value = sum((pw.vertex[v - 1] for v in s), ZERO)
            value += sum((w for (a, b), w in pw.edge.items() if a in s and b in s), ZERO)
            if best is None or value > best[0] or (value == best[0] and s < best[1]):
                best = (value, s)
    if best is None:
        return None
    return order_path(g, best[1]), best[0]
