"""The verification battery run by ``coplex verify`` and the acceptance tests.

Each check returns a :class:`CheckResult`; sizes default to the full
battery and can be scaled down for quick runs.
"""

from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass
from fractions import Fraction

from .auxgraph import (aux_cliques_by_formula, build_aux_by_twins, build_aux_direct,
                       co3plex_to_stable, stable_to_co3plex)
from .chordal import is_chordal, maximal_cliques_chordal, maximal_cliques_general, peo
from .colgen import certify_optimality, solve_co3plex
from .graph import Graph, generate_random_chordal
from .pricing import PricingWeights, brute_force_pricing, max_weight_induced_path
from .structures import ComponentCatalog, brute_force_max_co3plex, enumerate_co3plexes, \
    enumerate_stable_sets
from .verify import check_c4_fractional_point, integrality_stress


@dataclass
class CheckResult:
    name: str
    passed: bool
    detail: str
    seconds: float = 0.0

    def line(self) -> str:
        return f"{'PASS' if self.passed else 'FAIL'}  {self.name}: {self.detail}"


def random_chordal_instance(seed: int, max_n: int, min_n: int = 1,
                            weights: tuple[int, int] | None = (1, 10)) -> Graph:
    rng = random.Random(seed)
    n = rng.randint(min_n, max_n)
    g = generate_random_chordal(n, rng.choice((0.2, 0.5, 0.8, 1.0)), seed)
    if weights:
        g = g.with_weights([rng.randint(*weights) for _ in range(n)])
    return g


def _timed(fn):
    def wrapper(*args, **kwargs):
        start = time.perf_counter()
        res = fn(*args, **kwargs)
        res.seconds = time.perf_counter() - start
        return res
    wrapper.__name__ = fn.__name__
    wrapper.__doc__ = fn.__doc__
    return wrapper


@_timed
def check_solver_exactness(count: int = 200, max_n: int = 12, seed: int = 0) -> CheckResult:
    """Column generation matches brute force; the final master is 0/1 (checked inside)."""
    mismatches = []
    for i in range(count):
        g = random_chordal_instance(seed + i, max_n)
        report = solve_co3plex(g)
        _, best = brute_force_max_co3plex(g)
        if report.objective != best or report.solution.weight(g) != best:
            mismatches.append(seed + i)
    return CheckResult("solver exactness", not mismatches,
                       f"{count - len(mismatches)}/{count} instances equal brute force"
                       + (f"; mismatching seeds {mismatches[:5]}" if mismatches else ""))


@_timed
def check_integrality(graphs: int = 20, trials: int = 100, max_n: int = 8,
                      seed: int = 1000) -> CheckResult:
    """Full model under random objectives (vertex and component columns)."""
    failing = []
    for i in range(graphs):
        g = random_chordal_instance(seed + i, max_n, min_n=3, weights=None)
        if not integrality_stress(g, trials, seed + i, components=bool(i % 2)):
            failing.append(seed + i)
    return CheckResult("integrality", not failing,
                       f"{graphs * trials} random objectives on {graphs} chordal graphs"
                       + (f"; fractional optimum for seeds {failing}" if failing else ", all 0/1"))


@_timed
def check_c4_point() -> CheckResult:
    r = check_c4_fractional_point()
    ok = r.feasible and r.rank == 12 and r.fractional
    return CheckResult("C4 fractional extreme point", ok,
                       f"feasible={r.feasible} rank={r.rank}/{r.n_vars} fractional={r.fractional}")


@_timed
def check_bijection(count: int = 50, max_n: int = 9, seed: int = 2000) -> CheckResult:
    """Stable sets of the auxiliary graph versus co-3-plexes of the host."""
    bad = []
    for i in range(count):
        g = random_chordal_instance(seed + i, max_n, weights=None)
        a = build_aux_direct(g)
        stables = enumerate_stable_sets(a.to_graph())
        plexes = enumerate_co3plexes(g)
        ok = len(stables) == len(plexes)
        for st in stables:
            ss = frozenset(v - 1 for v in st)
            if co3plex_to_stable(a, stable_to_co3plex(a, ss)) != ss:
                ok = False
                break
        for s in plexes:
            if stable_to_co3plex(a, co3plex_to_stable(a, s)).s != s:
                ok = False
                break
        if not ok:
            bad.append(seed + i)
    return CheckResult("stable-set bijection", not bad,
                       f"{count - len(bad)}/{count} graphs with matching counts and inverse maps")


def aux_clique_families(g: Graph):
    """(formula family, enumerated family) of auxiliary cliques as node-label sets."""
    a = build_aux_direct(g)
    formula = aux_cliques_by_formula(g, maximal_cliques_chordal(g), a)
    enumerated = maximal_cliques_general(a.to_graph())
    fam_formula = {frozenset(a.nodes[i] for i in k) for k in formula}
    fam_enum = {frozenset(a.nodes[i - 1] for i in k) for k in enumerated}
    return fam_formula, fam_enum


@_timed
def check_clique_correspondence(count: int = 50, max_n: int = 9, seed: int = 3000) -> CheckResult:
    bad = []
    for i in range(count):
        g = random_chordal_instance(seed + i, max_n, weights=None)
        formula, enumerated = aux_clique_families(g)
        if formula != enumerated:
            bad.append(seed + i)
    return CheckResult("auxiliary clique correspondence", not bad,
                       f"{count - len(bad)}/{count} graphs agree with enumeration")


def _tree_code(adj: dict[int, set[int]], root: int, parent: int | None) -> str:
    return "(" + "".join(sorted(_tree_code(adj, c, root) for c in adj[root] if c != parent)) + ")"


def _tree_canonical(n: int, edges) -> str:
    adj = {v: set() for v in range(1, n + 1)}
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    # canonical form rooted at each centre
    leaves = [v for v in adj if len(adj[v]) <= 1]
    remaining, deg = n, {v: len(adj[v]) for v in adj}
    while remaining > 2:
        remaining -= len(leaves)
        nxt = []
        for leaf in leaves:
            for u in adj[leaf]:
                deg[u] -= 1
                if deg[u] == 1:
                    nxt.append(u)
            deg[leaf] = 0
        leaves = nxt
    return min(_tree_code(adj, c, None) for c in leaves)


def _pruefer_edges(seq: tuple[int, ...], n: int) -> list[tuple[int, int]]:
    degree = [1] * (n + 1)
    for x in seq:
        degree[x] += 1
    edges = []
    for x in seq:
        leaf = min(v for v in range(1, n + 1) if degree[v] == 1)
        edges.append((leaf, x))
        degree[leaf] -= 1
        degree[x] -= 1
    u, v = (w for w in range(1, n + 1) if degree[w] == 1)
    edges.append((u, v))
    return edges


def unlabeled_trees(n: int) -> list[Graph]:
    """One representative of every isomorphism class of trees on ``n`` vertices."""
    if n == 1:
        return [Graph(1, frozenset())]
    if n == 2:
        return [Graph.from_edges(2, [(1, 2)])]
    seen = {}
    for seq in itertools.product(range(1, n + 1), repeat=n - 2):
        edges = _pruefer_edges(seq, n)
        code = _tree_canonical(n, edges)
        seen.setdefault(code, edges)
    return [Graph.from_edges(n, seen[c]) for c in sorted(seen)]


def cycle(n: int) -> Graph:
    return Graph.from_edges(n, [(i, i % n + 1) for i in range(1, n + 1)])


def complete(n: int) -> Graph:
    return Graph.from_edges(n, itertools.combinations(range(1, n + 1), 2))


def chordality_corpus(max_tree: int = 7) -> list[tuple[str, Graph]]:
    corpus = []
    for n in range(1, max_tree + 1):
        corpus += [(f"tree{n}.{i}", t) for i, t in enumerate(unlabeled_trees(n))]
    corpus += [(f"K{n}", complete(n)) for n in range(1, 6)]
    corpus += [(f"C{n}", cycle(n)) for n in (4, 5, 6)]
    return corpus


@_timed
def check_chordality_preservation(max_tree: int = 7) -> CheckResult:
    corpus = chordality_corpus(max_tree)
    bad = [name for name, g in corpus if is_chordal(build_aux_direct(g).to_graph()) != is_chordal(g)]
    holes = [name for name, g in corpus if not is_chordal(g)]
    return CheckResult("chordality preservation", not bad,
                       f"{len(corpus)} graphs ({len(holes)} non-chordal)"
                       + (f"; disagreement on {bad}" if bad else ""))


def random_pricing_instance(seed: int, max_n: int = 10) -> tuple[Graph, PricingWeights]:
    rng = random.Random(seed)
    n = rng.randint(1, max_n)
    if seed % 2:
        g = generate_random_chordal(n, rng.choice((0.3, 0.6, 0.9)), seed)
    else:
        p = rng.choice((0.2, 0.4, 0.6))
        g = Graph.from_edges(n, [e for e in itertools.combinations(range(1, n + 1), 2)
                                 if rng.random() < p])

    def w():
        return Fraction(rng.randint(-6, 6), rng.randint(1, 3))

    vertex = tuple(w() for _ in range(n))
    if seed % 3 == 0:
        # dual-shaped: nonpositive vertices, nonnegative edges
        vertex = tuple(-abs(x) for x in vertex)
        edge = {e: abs(w()) for e in g.sorted_edges()}
    else:
        edge = {e: w() for e in g.sorted_edges()}
    return g, PricingWeights(vertex, edge)


@_timed
def check_pricing(count: int = 1000, max_n: int = 10, seed: int = 4000) -> CheckResult:
    bad = []
    for i in range(count):
        g, pw = random_pricing_instance(seed + i, max_n)
        fast = max_weight_induced_path(g, pw)
        slow = brute_force_pricing(g, pw)
        if (fast is None) != (slow is None) or (fast and fast[1] != slow[1]):
            bad.append(seed + i)
    return CheckResult("pricing exactness", not bad,
                       f"{count - len(bad)}/{count} instances equal exhaustive search")


@_timed
def check_certificates(count: int = 200, max_n: int = 10, seed: int = 0) -> CheckResult:
    bad = []
    for i in range(count):
        g = random_chordal_instance(seed + i, max_n)
        report = solve_co3plex(g)
        if not certify_optimality(g, report.model, report.duals):
            bad.append(seed + i)
    return CheckResult("optimality certificate", not bad,
                       f"{count - len(bad)}/{count} converged masters have no improving path")


@_timed
def check_constructions(count: int = 20, max_n: int = 7, seed: int = 5000) -> CheckResult:
    named = [("P3", Graph.from_edges(3, [(1, 2), (2, 3)])), ("K3", complete(3)),
             ("paw", Graph.from_edges(4, [(1, 2), (1, 3), (2, 3), (3, 4)]))]
    named += [(f"seed{seed + i}", random_chordal_instance(seed + i, max_n, weights=None))
              for i in range(count)]
    bad = []
    for name, g in named:
        cat = ComponentCatalog.of(g)
        if build_aux_direct(g, cat).labeled_edges() != build_aux_by_twins(g, cat).labeled_edges():
            bad.append(name)
    p3 = build_aux_direct(named[0][1])
    nodes = set(p3.nodes)
    expected = {frozenset(e) for e in itertools.combinations(nodes, 2)}
    expected.discard(frozenset((frozenset({1}), frozenset({3}))))
    p3_ok = len(nodes) == 6 and p3.labeled_edges() == expected
    return CheckResult("twin/contraction construction", not bad and p3_ok,
                       f"{len(named) - len(bad)}/{len(named)} graphs agree; "
                       f"P3 gives K6 minus {{1,3}}: {p3_ok}")


@_timed
def check_clique_bound(count: int = 200, max_n: int = 12, seed: int = 0) -> CheckResult:
    bad = []
    for i in range(count):
        g = random_chordal_instance(seed + i, max_n)
        if len(maximal_cliques_chordal(g, peo(g))) > g.n:
            bad.append(seed + i)
    for n in range(1, 6):
        if len(maximal_cliques_chordal(complete(n))) > n:
            bad.append(f"K{n}")
    return CheckResult("clique count bound", not bad,
                       f"|cliques| <= n on {count + 5} chordal graphs")


def run_battery(trials: int = 100, seed: int = 0, quick: bool = False) -> list[CheckResult]:
    scale = 10 if quick else 1
    return [
        check_solver_exactness(200 // scale, seed=seed),
        check_integrality(20 // (2 if quick else 1), trials, seed=seed + 1000),
        check_c4_point(),
        check_bijection(50 // scale, seed=seed + 2000),
        check_clique_correspondence(50 // scale, seed=seed + 3000),
        check_chordality_preservation(6 if quick else 7),
        check_pricing(1000 // scale, seed=seed + 4000),
        check_certificates(200 // scale, seed=seed),
        check_constructions(20 // scale if quick else 20, seed=seed + 5000),
        check_clique_bound(200 // scale, seed=seed),
    ]
