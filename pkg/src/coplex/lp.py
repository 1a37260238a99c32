"""Exact rational simplex and the co-3-plex master model.

The master maximises ``w.x`` over columns of three kinds (``x`` per vertex,
``t`` per triangle, ``p`` per induced path) subject to

* one clique row per maximal clique ``K``: ``x(K) - sum (|L & K| - 1) col_L <= 1``
  over triangle and path columns meeting ``K`` at least twice;
* one star row per vertex ``v``: ``-x_v + sum_{L containing v} col_L <= 0``;
* all columns nonnegative.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .chordal import CliqueSet
from .graph import Graph
from .structures import VertexSet

ZERO, ONE = Fraction(0), Fraction(1)

X, T, P = "x", "t", "p"


class ModelError(ValueError):
    pass


@dataclass(frozen=True)
class Column:
    kind: str
    vertices: VertexSet  # sorted; paths keep their traversal order in ``order``
    objective: Fraction
    coeffs: dict[int, Fraction] = field(compare=False)
    order: VertexSet = ()

    @property
    def key(self) -> tuple[str, VertexSet]:
        return self.kind, self.vertices

    def name(self) -> str:
        return f"{self.kind}_" + "_".join(map(str, self.vertices))


@dataclass
class DualValues:
    lam: list[Fraction]  # per maximal clique
    mu: list[Fraction]  # per vertex, index v - 1

    @classmethod
    def zero(cls, n_cliques: int, n: int) -> DualValues:
        return cls([ZERO] * n_cliques, [ZERO] * n)

    def as_row_vector(self) -> list[Fraction]:
        return list(self.lam) + list(self.mu)


@dataclass
class MasterModel:
    """Rows ``0..len(cliques)-1`` are clique rows, the next ``n`` are star rows."""

    n: int
    cliques: CliqueSet
    columns: list[Column] = field(default_factory=list)
    _keys: dict = field(default_factory=dict, repr=False)
    _vertex_cliques: list = field(default_factory=list, repr=False)

    def __post_init__(self):
        vc: list[list[int]] = [[] for _ in range(self.n + 1)]
        for i, k in enumerate(self.cliques):
            for v in k:
                vc[v].append(i)
        self._vertex_cliques = vc

    @property
    def n_rows(self) -> int:
        return len(self.cliques) + self.n

    @property
    def rhs(self) -> list[Fraction]:
        return [ONE] * len(self.cliques) + [ZERO] * self.n

    def star_row(self, v: int) -> int:
        return len(self.cliques) + v - 1

    def row_name(self, r: int) -> str:
        if r < len(self.cliques):
            return "clique_" + "_".join(map(str, self.cliques[r]))
        return f"star_{r - len(self.cliques) + 1}"

    def make_column(self, kind: str, vertices, objective=ZERO) -> Column:
        order = tuple(vertices)
        vs = tuple(sorted(order))
        coeffs: dict[int, Fraction] = {}
        if kind == X:
            (v,) = vs
            for r in self._vertex_cliques[v]:
                coeffs[r] = ONE
            coeffs[self.star_row(v)] = -ONE
        elif kind in (T, P):
            hits: dict[int, int] = {}
            for v in vs:
                for r in self._vertex_cliques[v]:
                    hits[r] = hits.get(r, 0) + 1
            for r, i in sorted(hits.items()):
                if kind == P and i > 2:
                    raise ModelError(
                        f"path {list(order)} meets clique {list(self.cliques[r])} {i} times")
                if i >= 2:
                    coeffs[r] = Fraction(1 - i)
            for v in vs:
                coeffs[self.star_row(v)] = ONE
        else:
            raise ModelError(f"unknown column kind {kind!r}")
        return Column(kind, vs, Fraction(objective), coeffs, order if kind == P else vs)

    def add_column(self, col: Column) -> int:
        if col.key in self._keys:
            raise ModelError(f"column {col.name()} already present")
        self._keys[col.key] = len(self.columns)
        self.columns.append(col)
        return len(self.columns) - 1

    def has(self, kind: str, vertices) -> bool:
        return (kind, tuple(sorted(vertices))) in self._keys

    def column_index(self, kind: str, vertices) -> int:
        return self._keys[(kind, tuple(sorted(vertices)))]

    def with_objective(self, objective: list) -> MasterModel:
        """Copy with replaced objective coefficients (one per column)."""
        m = MasterModel(self.n, self.cliques)
        for col, c in zip(self.columns, objective, strict=True):
            m.add_column(Column(col.kind, col.vertices, Fraction(c), col.coeffs, col.order))
        return m

    def row_activity(self, values: list[Fraction]) -> list[Fraction]:
        act = [ZERO] * self.n_rows
        for col, val in zip(self.columns, values):
            if val:
                for r, a in col.coeffs.items():
                    act[r] += a * val
        return act

    def dense_rows(self) -> list[list[Fraction]]:
        rows = [[ZERO] * len(self.columns) for _ in range(self.n_rows)]
        for j, col in enumerate(self.columns):
            for r, a in col.coeffs.items():
                rows[r][j] = a
        return rows


def build_master(g: Graph, cliques: CliqueSet, triangles=(), paths=()) -> MasterModel:
    """Master model with every ``x`` column plus the given triangle and path columns."""
    m = MasterModel(g.n, cliques)
    for v in g.vertices:
        m.add_column(m.make_column(X, (v,), g.weight(v)))
    for t in triangles:
        m.add_column(m.make_column(T, t))
    for p in paths:
        if len(p) < 2:
            raise ModelError(f"path {list(p)} has no edge")
        m.add_column(m.make_column(P, p))
    return m


# -- simplex -------------------------------------------------------------------

OPTIMAL, UNBOUNDED = "optimal", "unbounded"


@dataclass
class LpSolution:
    status: str
    values: list[Fraction]  # per structural column
    duals: list[Fraction]  # per row
    basis: tuple[int, ...]  # basic variables; slack of row r is r, column j is n_rows + j
    objective: Fraction
    pivots: int = 0

    def dual_values(self, model: MasterModel) -> DualValues:
        k = len(model.cliques)
        return DualValues(self.duals[:k], self.duals[k:])


class _Basis:
    """Explicit basis inverse over the rationals."""

    def __init__(self, model: MasterModel, basis: list[int]):
        self.model = model
        self.m = model.n_rows
        self.basis = list(basis)
        self.inv = self._invert()
        b = model.rhs
        self.xb = [sum((self.inv[r][k] * b[k] for k in range(self.m) if b[k]), ZERO)
                   for r in range(self.m)]

    def column(self, var: int) -> dict[int, Fraction]:
        if var < self.m:
            return {var: ONE}
        return self.model.columns[var - self.m].coeffs

    def cost(self, var: int) -> Fraction:
        return ZERO if var < self.m else self.model.columns[var - self.m].objective

    def _invert(self) -> list[list[Fraction]]:
        m = self.m
        a = [[ZERO] * m + [ONE if i == j else ZERO for j in range(m)] for i in range(m)]
        for c, var in enumerate(self.basis):
            for r, val in self.column(var).items():
                a[r][c] = val
        for c in range(m):
            piv = next((r for r in range(c, m) if a[r][c] != 0), None)
            if piv is None:
                raise ZeroDivisionError("singular basis")
            a[c], a[piv] = a[piv], a[c]
            inv_p = 1 / a[c][c]
            a[c] = [x * inv_p for x in a[c]]
            for r in range(m):
                f = a[r][c]
                if r != c and f:
                    row_c = a[c]
                    a[r] = [x - f * y for x, y in zip(a[r], row_c)]
        return [row[m:] for row in a]

    def ftran(self, col: dict[int, Fraction]) -> list[Fraction]:
        return [sum((row[k] * v for k, v in col.items()), ZERO) for row in self.inv]

    def duals(self) -> list[Fraction]:
        cb = [self.cost(v) for v in self.basis]
        return [sum((cb[r] * self.inv[r][k] for r in range(self.m) if cb[r]), ZERO)
                for k in range(self.m)]

    def pivot(self, row: int, var: int, u: list[Fraction]) -> None:
        p = u[row]
        self.inv[row] = [x / p for x in self.inv[row]]
        self.xb[row] /= p
        prow, pxb = self.inv[row], self.xb[row]
        for r in range(self.m):
            f = u[r]
            if r != row and f:
                self.inv[r] = [x - f * y for x, y in zip(self.inv[r], prow)]
                self.xb[r] -= f * pxb
        self.basis[row] = var


def solve_lp(model: MasterModel, basis=None, max_pivots: int | None = None) -> LpSolution:
    """Maximise the model objective with the primal simplex and Bland's rule.

    The right-hand side must be nonnegative so that the all-slack basis is
    feasible.  ``basis`` (a previous ``LpSolution.basis``) is used as a warm
    start when it is still a feasible basis of this model.
    """
    m = model.n_rows
    if any(b < 0 for b in model.rhs):
        raise ModelError("negative right-hand side")
    state = None
    if basis is not None and len(basis) == m:
        try:
            state = _Basis(model, sorted(basis))
            if any(x < 0 for x in state.xb):
                state = None
        except ZeroDivisionError:
            state = None
    if state is None:
        state = _Basis(model, list(range(m)))

    n_vars = m + len(model.columns)
    limit = max_pivots if max_pivots is not None else 50 * n_vars + 1000
    pivots = 0
    while True:
        y = state.duals()
        in_basis = set(state.basis)
        entering = None
        for var in range(n_vars):
            if var in in_basis:
                continue
            col = state.column(var)
            d = state.cost(var) - sum((y[r] * a for r, a in col.items()), ZERO)
            if d > 0:
                entering = var
                break
        if entering is None:
            break
        u = state.ftran(state.column(entering))
        leave, best = None, None
        for r in range(m):
            if u[r] > 0:
                ratio = state.xb[r] / u[r]
                if (best is None or ratio < best
                        or (ratio == best and state.basis[r] < state.basis[leave])):
                    leave, best = r, ratio
        if leave is None:
            return LpSolution(UNBOUNDED, [], [], tuple(sorted(state.basis)), ZERO, pivots)
        state.pivot(leave, entering, u)
        pivots += 1
        if pivots > limit:
            raise RuntimeError(f"simplex exceeded {limit} pivots")

    values = [ZERO] * len(model.columns)
    for r, var in enumerate(state.basis):
        if var >= m:
            values[var - m] = state.xb[r]
    objective = sum((c.objective * v for c, v in zip(model.columns, values) if v), ZERO)
    return LpSolution(OPTIMAL, values, y, tuple(sorted(state.basis)), objective, pivots)


def reduced_cost(model: MasterModel, duals: DualValues, col: Column) -> Fraction:
    """Objective coefficient minus the dual-weighted column."""
    y = duals.as_row_vector()
    return col.objective - sum((y[r] * a for r, a in col.coeffs.items()), ZERO)


def _fmt(q: Fraction) -> str:
    return str(q.numerator) if q.denominator == 1 else repr(float(q))


def write_lp_format(model: MasterModel) -> str:
    """CPLEX-LP text of the model; non-integral data is annotated exactly."""
    def term(coef: Fraction, name: str) -> str:
        sign = "-" if coef < 0 else "+"
        return f"{sign} {_fmt(abs(coef))} {name}"

    lines = []
    notes = [f"\\ {c.name()} objective = {c.objective}" for c in model.columns
             if c.objective.denominator != 1]
    lines.extend(notes)
    lines.append("Maximize")
    obj = " ".join(term(c.objective, c.name()) for c in model.columns if c.objective)
    if not obj and model.columns:
        obj = f"0 {model.columns[0].name()}"
    lines.append(f" obj: {obj}")
    lines.append("Subject To")
    rows: list[list[str]] = [[] for _ in range(model.n_rows)]
    for c in model.columns:
        for r, a in sorted(c.coeffs.items()):
            rows[r].append(term(a, c.name()))
    for r, (terms, b) in enumerate(zip(rows, model.rhs)):
        if terms:
            lines.append(f" {model.row_name(r)}: {' '.join(terms)} <= {_fmt(b)}")
    lines.append("Bounds")
    lines.extend(f" {c.name()} >= 0" for c in model.columns)
    lines.append("End")
    return "\n".join(lines) + "\n"
