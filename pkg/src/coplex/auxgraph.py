"""The auxiliary graph whose stable sets are the co-3-plexes of a chordal graph.

Nodes are the vertices, the triangles and the induced paths (with at least
one edge) of the host; two nodes are adjacent when their union induces a
connected subgraph.  The graph is exponential and only built for checks,
never by the solver.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .chordal import CliqueSet, is_chordal
from .graph import CapExceeded, Graph, add_true_twin, contract_edges, default_cap, is_connected
from .structures import ComponentCatalog, Co3Plex, VertexSet, is_co3plex

VERTEX, TRIANGLE, PATH = "vertex", "triangle", "path"


@dataclass(frozen=True)
class AuxGraph:
    host: Graph
    nodes: tuple[frozenset[int], ...]
    kinds: tuple[str, ...]
    adjacency: tuple[frozenset[int], ...]  # over node indices

    def index(self) -> dict[frozenset[int], int]:
        return {node: i for i, node in enumerate(self.nodes)}

    def labeled_edges(self) -> set[frozenset[frozenset[int]]]:
        return {frozenset((self.nodes[i], self.nodes[j]))
                for i, nbrs in enumerate(self.adjacency) for j in nbrs if i < j}

    def to_graph(self) -> Graph:
        """Plain graph on ``1..len(nodes)``; node ``i`` becomes vertex ``i+1``."""
        edges = frozenset((i + 1, j + 1) for i, nbrs in enumerate(self.adjacency)
                          for j in nbrs if i < j)
        return Graph(len(self.nodes), edges, labels=self.nodes)


def _node_order(g: Graph, cat: ComponentCatalog) -> tuple[list[frozenset[int]], list[str]]:
    nodes = [frozenset((v,)) for v in g.vertices]
    kinds = [VERTEX] * g.n
    nodes += [frozenset(t) for t in cat.triangles]
    kinds += [TRIANGLE] * len(cat.triangles)
    nodes += [frozenset(p) for p in cat.path_keys()]
    kinds += [PATH] * len(cat.paths)
    return nodes, kinds


def _check_size(nodes, cap):
    cap = default_cap() if cap is None else cap
    if len(nodes) > cap:
        raise CapExceeded("auxiliary graph nodes", cap)


def build_aux_direct(g: Graph, cat: ComponentCatalog | None = None,
                     cap: int | None = None) -> AuxGraph:
    """Adjacency from the definition: test connectivity of every union."""
    cat = cat or ComponentCatalog.of(g, cap)
    nodes, kinds = _node_order(g, cat)
    _check_size(nodes, cap)
    adj: list[set[int]] = [set() for _ in nodes]
    for i, j in combinations(range(len(nodes)), 2):
        if is_connected(g, nodes[i] | nodes[j]):
            adj[i].add(j)
            adj[j].add(i)
    return AuxGraph(g, tuple(nodes), tuple(kinds), tuple(frozenset(a) for a in adj))


def twin_and_contract(h: Graph, members: frozenset[int]) -> Graph:
    """Add a true twin to each vertex labeled ``{v}``, ``v`` in ``members``,
    then contract the twins into one vertex labeled ``members``."""
    by_label = {h.label(v): v for v in h.vertices}
    start = h.n
    for v in sorted(members):
        h = add_true_twin(h, by_label[frozenset((v,))])
    twins = range(start + 1, h.n + 1)
    f = [(a, b) for a, b in combinations(twins, 2) if h.has_edge(a, b)]
    if len(twins) > 1 and not f:
        raise ValueError(f"{sorted(members)} does not induce a connected subgraph")
    return contract_edges(h, f)


def build_aux_by_twins(g: Graph, cat: ComponentCatalog | None = None,
                       cap: int | None = None) -> AuxGraph:
    """Same graph, built by repeated true-twin insertion and contraction."""
    cat = cat or ComponentCatalog.of(g, cap)
    nodes, kinds = _node_order(g, cat)
    _check_size(nodes, cap)
    h = Graph(g.n, g.edges)
    for members in nodes[g.n:]:
        h = twin_and_contract(h, members)
    where = {h.label(v): v for v in h.vertices}
    if len(where) != len(nodes):
        raise AssertionError("twin construction produced duplicate labels")
    index = {node: i for i, node in enumerate(nodes)}
    adj: list[set[int]] = [set() for _ in nodes]
    for u, v in h.edges:
        i, j = index[h.label(u)], index[h.label(v)]
        adj[i].add(j)
        adj[j].add(i)
    return AuxGraph(g, tuple(nodes), tuple(kinds), tuple(frozenset(a) for a in adj))


def stable_to_co3plex(a: AuxGraph, ss) -> Co3Plex:
    ss = sorted(set(ss))
    for i, j in combinations(ss, 2):
        if j in a.adjacency[i]:
            raise ValueError(f"nodes {i} and {j} are adjacent; not a stable set")
    s = frozenset().union(*(a.nodes[i] for i in ss))
    return Co3Plex.from_set(a.host, s)


def co3plex_to_stable(a: AuxGraph, c: Co3Plex | VertexSet) -> frozenset[int]:
    if not isinstance(c, Co3Plex):
        c = Co3Plex.from_set(a.host, c)
    if not is_co3plex(a.host, c.s):
        raise ValueError(f"{list(c.s)} is not a co-3-plex")
    index = a.index()
    try:
        return frozenset(index[frozenset(comp)] for comp in c.components)
    except KeyError as exc:
        raise ValueError(f"component {sorted(exc.args[0])} is neither a path nor a triangle "
                         "(host not chordal?)") from None


def aux_cliques_by_formula(g: Graph, cliques: CliqueSet, a: AuxGraph) -> CliqueSet:
    """One clique of the auxiliary graph per maximal clique ``K`` of the host:
    the singletons of ``K`` plus every larger node meeting ``K``.

    Returned over node indices.
    """
    if not is_chordal(g):
        raise ValueError("host graph is not chordal")
    index = a.index()
    out = []
    for k in cliques:
        ks = set(k)
        members = [index[frozenset((v,))] for v in k]
        members += [i for i, node in enumerate(a.nodes) if len(node) > 1 and node & ks]
        out.append(members)
    return CliqueSet.build(out)

