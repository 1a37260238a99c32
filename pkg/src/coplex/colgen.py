"""Column generation for the maximum-weight co-3-plex of a chordal graph."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction

from .chordal import CliqueSet, maximal_cliques_chordal, peo
from .graph import Graph
from .lp import P, DualValues, LpSolution, MasterModel, build_master, reduced_cost, solve_lp
from .pricing import DUAL, PAPER, edge_weights_from_duals, max_weight_induced_path
from .structures import Co3Plex, enumerate_induced_paths, enumerate_triangles, is_co3plex

log = logging.getLogger(__name__)

DUALITY_CERTIFIED = "duality-certified"
ENUMERATION_CERTIFIED = "enumeration-certified"


class NotChordalError(ValueError):
    pass


class IntegralityError(AssertionError):
    pass


@dataclass
class ColgenConfig:
    pricing: str = DUAL  # or PAPER: price with w_v - mu_v vertex weights
    columns_per_iteration: int = 1
    certify: bool = False  # also run the enumeration certificate
    cap: int | None = None
    max_iterations: int | None = None


@dataclass
class IterationRecord:
    objective: Fraction
    best_reduced_cost: Fraction | None
    added: tuple[tuple[int, ...], ...] = ()


@dataclass
class ColgenReport:
    iterations: int
    columns_added: int
    objective: Fraction
    solution: Co3Plex
    certificate: str
    log: list[IterationRecord]
    model: MasterModel = field(repr=False)
    lp: LpSolution = field(repr=False)

    @property
    def duals(self) -> DualValues:
        return self.lp.dual_values(self.model)


def _price(g, cliques, model, duals, config) -> list[tuple[tuple[int, ...], Fraction]]:
    """Up to ``columns_per_iteration`` new path columns with positive reduced cost."""
    found = []
    exclude = [c.vertices for c in model.columns if c.kind == P]
    conventions = [config.pricing] if config.pricing == DUAL else [PAPER, DUAL]
    for convention in conventions:
        pw = edge_weights_from_duals(g, cliques, duals, convention)
        while len(found) < config.columns_per_iteration:
            hit = max_weight_induced_path(g, pw, exclude)
            if hit is None:
                break
            order, _ = hit
            rc = reduced_cost(model, duals, model.make_column(P, order))
            if rc <= 0:
                break
            found.append((order, rc))
            exclude.append(tuple(sorted(order)))
        if found:
            break
        if convention == PAPER:
            log.debug("paper-convention pricing found no improving path; using dual weights")
    return found


def solve_co3plex(g: Graph, config: ColgenConfig | None = None) -> ColgenReport:
    """Maximum-weight co-3-plex of a chordal graph by column generation.

    The restricted master starts with every vertex, triangle and edge
    column; longer induced paths are priced in while one has positive
    reduced cost.  The final basic solution must be 0/1.
    """
    config = config or ColgenConfig()
    order = peo(g)
    if order is None:
        raise NotChordalError("graph is not chordal")
    cliques = maximal_cliques_chordal(g, order)
    model = build_master(g, cliques, enumerate_triangles(g), g.sorted_edges())

    history: list[IterationRecord] = []
    added = 0
    sol = solve_lp(model)
    while True:
        if sol.status != "optimal":
            raise RuntimeError("restricted master is unbounded")
        if history and sol.objective < history[-1].objective:
            raise AssertionError("restricted master objective decreased")
        duals = sol.dual_values(model)
        new = _price(g, cliques, model, duals, config)
        history.append(IterationRecord(sol.objective, new[0][1] if new else None,
                                       tuple(o for o, _ in new)))
        log.debug("iteration %d: objective %s, %d new columns",
                  len(history), sol.objective, len(new))
        if not new:
            break
        if config.max_iterations is not None and len(history) >= config.max_iterations:
            raise RuntimeError(f"no convergence within {config.max_iterations} iterations")
        for path, _ in new:
            model.add_column(model.make_column(P, path))
            added += 1
        sol = solve_lp(model, basis=sol.basis)

    bad = [(c.name(), v) for c, v in zip(model.columns, sol.values) if v not in (0, 1)]
    if bad:
        raise IntegralityError(f"fractional master optimum: {bad[:5]}")
    chosen = [c.vertices[0] for c, v in zip(model.columns, sol.values) if c.kind == "x" and v == 1]
    solution = Co3Plex.from_set(g, chosen)
    if not is_co3plex(g, solution.s):
        raise IntegralityError(f"extracted set {list(solution.s)} is not a co-3-plex")
    if g.total_weight(solution.s) != sol.objective:
        raise IntegralityError("extracted set weight differs from the LP objective")

    certificate = DUALITY_CERTIFIED
    if config.certify:
        if not certify_optimality(g, model, sol.dual_values(model), config.cap):
            raise AssertionError("enumeration found an improving column after convergence")
        certificate = ENUMERATION_CERTIFIED
    return ColgenReport(len(history), added, sol.objective, solution, certificate,
                        history, model, sol)


def certify_optimality(g: Graph, model: MasterModel, duals: DualValues,
                       cap: int | None = None) -> bool:
    """Every induced path missing from ``model`` has nonpositive reduced cost."""
    for path in enumerate_induced_paths(g, cap):
        if model.has(P, path):
            continue
        if reduced_cost(model, duals, model.make_column(P, path)) > 0:
            return False
    return True


def full_model(g: Graph, cliques: CliqueSet | None = None, cap: int | None = None) -> MasterModel:
    """Master with every triangle and induced path column."""
    if cliques is None:
        order = peo(g)
        if order is None:
            raise NotChordalError("pass cliques explicitly for a non-chordal graph")
        cliques = maximal_cliques_chordal(g, order)
    return build_master(g, cliques, enumerate_triangles(g), enumerate_induced_paths(g, cap))
