"""Executable checks of the polyhedral results behind the solver."""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from .chordal import CliqueSet, is_chordal, maximal_cliques_general
from .colgen import full_model
from .graph import Graph
from .lp import ONE, ZERO, LpSolution, MasterModel, solve_lp

HALF = Fraction(1, 2)


def rank(rows: list[list[Fraction]]) -> int:
    """Exact rank by Gaussian elimination."""
    rows = [list(r) for r in rows if any(r)]
    r = 0
    ncols = len(rows[0]) if rows else 0
    for c in range(ncols):
        piv = next((i for i in range(r, len(rows)) if rows[i][c] != 0), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        p = rows[r][c]
        for i in range(r + 1, len(rows)):
            f = rows[i][c] / p
            if f:
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        r += 1
        if r == len(rows):
            break
    return r


@dataclass
class TightRow:
    name: str
    coeffs: list[Fraction]


@dataclass
class FractionalPointReport:
    point: dict[str, Fraction]  # column name -> value
    feasible: bool
    tight: list[str]
    rank: int
    n_vars: int
    fractional: bool
    failures: list[str]

    @property
    def extreme(self) -> bool:
        return self.feasible and self.rank == self.n_vars

    @property
    def ok(self) -> bool:
        return not self.failures


def tight_rows(model: MasterModel, values: list[Fraction]) -> tuple[bool, list[TightRow]]:
    """Feasibility of ``values`` and every inequality of the model tight at it.

    Nonnegativity of each column counts as an inequality ``-col <= 0``.
    """
    act = model.row_activity(values)
    dense = model.dense_rows()
    feasible = all(a <= b for a, b in zip(act, model.rhs)) and all(v >= 0 for v in values)
    tight = [TightRow(model.row_name(r), dense[r])
             for r, (a, b) in enumerate(zip(act, model.rhs)) if a == b]
    for j, (col, v) in enumerate(zip(model.columns, values)):
        if v == 0:
            tight.append(TightRow(f"{col.name()} >= 0",
                                  [-ONE if k == j else ZERO for k in range(len(values))]))
    return feasible, tight


def c4_model() -> tuple[Graph, MasterModel]:
    """Full model on the 4-hole a-b-c-d-a (vertices 1..4), cliques = its edges."""
    g = Graph.from_edges(4, [(1, 2), (2, 3), (3, 4), (1, 4)])
    return g, full_model(g, maximal_cliques_general(g))


def c4_point(model: MasterModel) -> list[Fraction]:
    """All four ``x`` and ``p`` on the edge c-d at 1/2, everything else 0."""
    values = []
    for col in model.columns:
        half = col.kind == "x" or (col.kind == "p" and col.vertices == (3, 4))
        values.append(HALF if half else ZERO)
    return values


def check_c4_fractional_point() -> FractionalPointReport:
    _, model = c4_model()
    values = c4_point(model)
    feasible, tight = tight_rows(model, values)
    r = rank([t.coeffs for t in tight])
    n_vars = len(model.columns)
    fractional = any(v.denominator != 1 for v in values)
    failures = []
    if not feasible:
        failures.append("point violates the system")
    if n_vars != 12:
        failures.append(f"expected 12 variables, model has {n_vars}")
    if r != n_vars:
        failures.append(f"tight system has rank {r} < {n_vars}")
    if not fractional:
        failures.append("point is integral")
    return FractionalPointReport({c.name(): v for c, v in zip(model.columns, values)},
                                 feasible, [t.name for t in tight], r, n_vars, fractional,
                                 failures)


def supporting_objective(model: MasterModel, values: list[Fraction]) -> list[Fraction]:
    """Sum of the normals of the inequalities tight at ``values``.

    When the tight system has full rank the point is the unique maximiser.
    """
    _, tight = tight_rows(model, values)
    obj = [ZERO] * len(model.columns)
    for t in tight:
        obj = [a + b for a, b in zip(obj, t.coeffs)]
    return obj


def solve_supporting(model: MasterModel, values: list[Fraction]) -> LpSolution:
    return solve_lp(model.with_objective(supporting_objective(model, values)))


def is_integral(values) -> bool:
    return all(v in (0, 1) for v in values)


def random_objective(model: MasterModel, rng: random.Random, components: bool = False):
    obj = []
    for col in model.columns:
        if col.kind == "x" or components:
            obj.append(Fraction(rng.randint(-4, 10), rng.randint(1, 4)))
        else:
            obj.append(ZERO)
    return obj


def integrality_stress(g: Graph, trials: int = 100, seed: int = 0,
                       cliques: CliqueSet | None = None, components: bool = False,
                       cap: int | None = None) -> bool:
    """Solve the full model under ``trials`` random objectives.

    Returns True when every optimal basic solution is 0/1.  Objectives cover
    the vertex columns, and the triangle and path columns too when
    ``components`` is set.  Non-chordal graphs need ``cliques`` (any exact
    maximal clique family).
    """
    if cliques is None and not is_chordal(g):
        cliques = maximal_cliques_general(g)
    model = full_model(g, cliques, cap)
    rng = random.Random(seed)
    for _ in range(trials):
        sol = solve_lp(model.with_objective(random_objective(model, rng, components)))
        if sol.status != "optimal" or not is_integral(sol.values):
            return False
    return True
