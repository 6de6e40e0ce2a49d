"""Exact rational linear programming: dense two-phase tableau simplex with Bland's rule.

Every number is a :class:`fractions.Fraction`, so outcomes are exact. Problems
are small (tens of rows, a few hundred columns); no attempt is made at sparse
or revised-simplex performance.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Literal, Sequence

Relation = Literal["<=", "==", ">="]


@dataclass(frozen=True)
class Constraint:
    row: tuple[Fraction, ...]
    relation: Relation
    rhs: Fraction

    def __init__(self, row: Sequence, relation: Relation, rhs):
        if relation not in ("<=", "==", ">="):
            raise ValueError(f"unknown relation {relation!r}")
        object.__setattr__(self, "row", tuple(Fraction(a) for a in row))
        object.__setattr__(self, "relation", relation)
        object.__setattr__(self, "rhs", Fraction(rhs))

    def satisfied_by(self, x: Sequence[Fraction]) -> bool:
        lhs = sum((a * v for a, v in zip(self.row, x)), Fraction(0))
        if self.relation == "<=":
            return lhs <= self.rhs
        if self.relation == ">=":
            return lhs >= self.rhs
        return lhs == self.rhs


@dataclass
class LinearProgram:
    """Maximize ``objective . x`` subject to ``constraints``.

    ``nonneg_vars`` lists the variables constrained to be ``>= 0``; ``None``
    means all of them. The remaining variables are free.
    """

    objective: Sequence
    constraints: list[Constraint] = field(default_factory=list)
    nonneg_vars: Iterable[int] | None = None

    @property
    def nvars(self) -> int:
        return len(self.objective)

    def validate(self) -> None:
        n = self.nvars
        for c in self.constraints:
            if len(c.row) != n:
                raise ValueError(f"constraint row of length {len(c.row)} in a program with {n} variables")
        if self.nonneg_vars is not None:
            bad = [i for i in self.nonneg_vars if not 0 <= i < n]
            if bad:
                raise ValueError(f"nonneg variable indices out of range: {bad}")


@dataclass
class LpOutcome:
    status: Literal["optimal", "infeasible", "unbounded"]
    value: Fraction | None = None
    point: list[Fraction] | None = None
    # on infeasible: y with y.rhs < 0, y.A >= 0 on nonneg columns, y.A == 0 on
    # free columns, y_i >= 0 on "<=" rows and y_i <= 0 on ">=" rows
    farkas: list[Fraction] | None = None

    @property
    def optimal(self) -> bool:
        return self.status == "optimal"


class _Tableau:
    """Rows ``A x = b`` with ``b >= 0`` and an explicit basis."""

    def __init__(self, rows: list[list[Fraction]], rhs: list[Fraction], basis: list[int]):
        self.rows = rows
        self.rhs = rhs
        self.basis = basis

    def pivot(self, r: int, c: int) -> None:
        row = self.rows[r]
        piv = row[c]
        if piv != 1:
            inv = 1 / piv
            row[:] = [a * inv for a in row]
            self.rhs[r] *= inv
        for i, other in enumerate(self.rows):
            if i == r:
                continue
            f = other[c]
            if f:
                other[:] = [a - f * b if b else a for a, b in zip(other, row)]
                self.rhs[i] -= f * self.rhs[r]
        self.basis[r] = c

    def reduced_costs(self, cost: list[Fraction], allowed: int) -> list[Fraction]:
        # z_j - c_j style: d_j = c_j - c_B B^{-1} A_j; we maximize, so enter on d_j > 0
        d = list(cost[:allowed])
        for i, b in enumerate(self.basis):
            cb = cost[b]
            if cb:
                row = self.rows[i]
                for j in range(allowed):
                    if row[j]:
                        d[j] -= cb * row[j]
        return d

    def run(self, cost: list[Fraction], allowed: int) -> bool:
        """Maximize ``cost . x`` over columns ``< allowed``. False if unbounded."""
        while True:
            d = self.reduced_costs(cost, allowed)
            basic = set(self.basis)
            enter = next((j for j in range(allowed) if d[j] > 0 and j not in basic), None)
            if enter is None:
                return True
            best = None
            leave = None
            for i, row in enumerate(self.rows):
                a = row[enter]
                if a > 0:
                    ratio = self.rhs[i] / a
                    if best is None or ratio < best or (ratio == best and self.basis[i] < self.basis[leave]):
                        best = ratio
                        leave = i
            if leave is None:
                return False
            self.pivot(leave, enter)

    def value(self, cost: list[Fraction]) -> Fraction:
        return sum((cost[b] * self.rhs[i] for i, b in enumerate(self.basis)), Fraction(0))


def _standard_form(lp: LinearProgram):
    """Split free variables and build the phase-1 tableau.

    Returns the tableau, the number of structural+slack columns, the
    artificial column indices, and a map back to original variables.
    """
    n = lp.nvars
    nonneg = set(range(n)) if lp.nonneg_vars is None else set(lp.nonneg_vars)
    # column layout: x_j (or x_j^+), then x_j^- for free j, then slacks, then artificials
    minus_col = {}
    ncols = n
    for j in range(n):
        if j not in nonneg:
            minus_col[j] = ncols
            ncols += 1
    m = len(lp.constraints)
    rows: list[list[Fraction]] = []
    rhs: list[Fraction] = []
    kinds: list[str] = []
    for con in lp.constraints:
        row = [Fraction(0)] * ncols
        for j, a in enumerate(con.row):
            if a:
                row[j] = a
                if j in minus_col:
                    row[minus_col[j]] = -a
        b = con.rhs
        rel = con.relation
        if b < 0:
            row = [-a for a in row]
            b = -b
            rel = {"<=": ">=", ">=": "<=", "==": "=="}[rel]
        rows.append(row)
        rhs.append(b)
        kinds.append(rel)
    nslack = sum(1 for k in kinds if k != "==")
    total = ncols + nslack
    basis = [-1] * m
    slack = ncols
    for i, k in enumerate(kinds):
        rows[i].extend([Fraction(0)] * nslack)
        if k == "<=":
            rows[i][slack] = Fraction(1)
            basis[i] = slack
            slack += 1
        elif k == ">=":
            rows[i][slack] = Fraction(-1)
            slack += 1
    artificial = []
    for i in range(m):
        if basis[i] == -1:
            col = total + len(artificial)
            artificial.append(col)
            basis[i] = col
    width = total + len(artificial)
    for i in range(m):
        rows[i].extend([Fraction(0)] * len(artificial))
    for col in artificial:
        i = basis.index(col)
        rows[i][col] = Fraction(1)
    flips = [1 if con.rhs >= 0 else -1 for con in lp.constraints]
    tab = _Tableau(rows, rhs, basis)
    tab.initial_basis = list(basis)
    tab.flips = flips
    return tab, total, width, artificial, minus_col


def _farkas_vector(tab: _Tableau, cost: list[Fraction]) -> list[Fraction]:
    # final columns of the initial (identity) basis hold B^-1
    m = len(tab.rows)
    y = []
    for i in range(m):
        col = tab.initial_basis[i]
        yi = sum((cost[b] * tab.rows[r][col] for r, b in enumerate(tab.basis)), Fraction(0))
        y.append(yi * tab.flips[i])
    return y


def solve(lp: LinearProgram) -> LpOutcome:
    """Solve ``lp`` exactly. Bland's rule (lowest index enters and leaves) prevents cycling."""
    lp.validate()
    tab, total, width, artificial, minus_col = _standard_form(lp)

    if artificial:
        phase1 = [Fraction(0)] * width
        for col in artificial:
            phase1[col] = Fraction(-1)
        tab.run(phase1, width)
        if tab.value(phase1) != 0:
            return LpOutcome("infeasible", farkas=_farkas_vector(tab, phase1))
        # drive remaining (zero-valued) artificials out of the basis
        art = set(artificial)
        keep = []
        for i, b in enumerate(tab.basis):
            if b in art:
                col = next((j for j in range(total) if tab.rows[i][j] != 0), None)
                if col is None:
                    continue  # redundant equation
                tab.pivot(i, col)
            keep.append(i)
        tab.rows = [tab.rows[i][:total] for i in keep]
        tab.rhs = [tab.rhs[i] for i in keep]
        tab.basis = [tab.basis[i] for i in keep]

    cost = [Fraction(0)] * total
    for j, c in enumerate(lp.objective):
        c = Fraction(c)
        cost[j] = c
        if j in minus_col:
            cost[minus_col[j]] = -c
    if not tab.run(cost, total):
        return LpOutcome("unbounded")

    full = [Fraction(0)] * total
    for i, b in enumerate(tab.basis):
        full[b] = tab.rhs[i]
    point = [full[j] - (full[minus_col[j]] if j in minus_col else 0) for j in range(lp.nvars)]
    value = sum((Fraction(c) * x for c, x in zip(lp.objective, point)), Fraction(0))
    return LpOutcome("optimal", value, point)


def feasible_point(
    constraints: list[Constraint], nvars: int | None = None, nonneg_vars: Iterable[int] | None = None
) -> list[Fraction] | None:
    """A point satisfying ``constraints``, or ``None`` if there is none."""
    if nvars is None:
        if not constraints:
            raise ValueError("nvars is required when there are no constraints")
        nvars = len(constraints[0].row)
    out = solve(LinearProgram([0] * nvars, list(constraints), nonneg_vars))
    return out.point if out.optimal else None
