"""Exact linear programming over the rationals.

A dense two-phase simplex on Fraction arithmetic.  Pivoting follows
Bland's smallest-index rule for both the entering column and the leaving
row, which rules out cycling, so the solver terminates on every instance
and, because the rule is deterministic, always returns the same optimal
basic solution for the same instance.  Instances here are tiny
(tens of rows), so the dense tableau is the simple and fast-enough choice.

Free variables are split into positive and negative parts internally;
callers see only the original variable order.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

Relation = str  # "<=", ">=", "=="

_RELATIONS = ("<=", ">=", "==")


@dataclass
class LinearProgram:
    """minimize objective . x  subject to the rows; x_j >= 0 unless free[j]."""

    num_vars: int
    objective: list[Fraction]
    free: list[bool]
    lhs: list[list[Fraction]] = field(default_factory=list)
    rel: list[Relation] = field(default_factory=list)
    rhs: list[Fraction] = field(default_factory=list)

    def __post_init__(self) -> None:
        self.objective = [Fraction(c) for c in self.objective]
        if len(self.objective) != self.num_vars or len(self.free) != self.num_vars:
            raise ValueError("objective/free length must equal num_vars")

    def add_row(self, coeffs: Sequence[Fraction | int], rel: Relation, rhs: Fraction | int) -> None:
        if len(coeffs) != self.num_vars:
            raise ValueError(f"row has {len(coeffs)} coefficients, expected {self.num_vars}")
        if rel not in _RELATIONS:
            raise ValueError(f"unknown relation {rel!r}")
        self.lhs.append([Fraction(c) for c in coeffs])
        self.rel.append(rel)
        self.rhs.append(Fraction(rhs))


@dataclass(frozen=True)
class LPSolution:
    status: str  # "optimal" | "infeasible" | "unbounded"
    value: Optional[Fraction]
    x: Optional[list[Fraction]]


def _pivot(tableau: list[list[Fraction]], costrow: list[Fraction], basis: list[int], row: int, col: int) -> None:
    pivot = tableau[row][col]
    tableau[row] = [v / pivot for v in tableau[row]]
    pivot_row = tableau[row]
    for r, other in enumerate(tableau):
        if r == row:
            continue
        factor = other[col]
        if factor != 0:
            tableau[r] = [a - factor * b for a, b in zip(other, pivot_row)]
    factor = costrow[col]
    if factor != 0:
        costrow[:] = [a - factor * b for a, b in zip(costrow, pivot_row)]
    basis[row] = col


def _run_simplex(
    tableau: list[list[Fraction]],
    costrow: list[Fraction],
    basis: list[int],
    allowed: Sequence[int],
) -> str:
    while True:
        entering = None
        for j in allowed:  # Bland: smallest eligible index enters
            if costrow[j] < 0:
                entering = j
                break
        if entering is None:
            return "optimal"
        leaving = None
        best: Optional[Fraction] = None
        for r, row in enumerate(tableau):
            a = row[entering]
            if a > 0:
                ratio = row[-1] / a
                if (
                    best is None
                    or ratio < best
                    or (ratio == best and basis[r] < basis[leaving])
                ):
                    best = ratio
                    leaving = r
        if leaving is None:
            return "unbounded"
        _pivot(tableau, costrow, basis, leaving, entering)


def _price_out(tableau: list[list[Fraction]], basis: list[int], costs: list[Fraction]) -> list[Fraction]:
    """Reduced-cost row for the given per-column costs and current basis."""
    costrow = list(costs) + [Fraction(0)]
    for r, bv in enumerate(basis):
        factor = costrow[bv]
        if factor != 0:
            costrow = [a - factor * b for a, b in zip(costrow, tableau[r])]
    return costrow


def solve(lp: LinearProgram) -> LPSolution:
    """Two-phase simplex; exact, deterministic, cycle-free."""
    # split free variables into u - v
    col_of: list[tuple[int, Optional[int]]] = []
    expanded_cost: list[Fraction] = []
    for j in range(lp.num_vars):
        plus = len(expanded_cost)
        expanded_cost.append(lp.objective[j])
        if lp.free[j]:
            expanded_cost.append(-lp.objective[j])
            col_of.append((plus, plus + 1))
        else:
            col_of.append((plus, None))
    num_structural = len(expanded_cost)

    # orient every row to have a non-negative right-hand side
    rows: list[tuple[list[Fraction], Relation, Fraction]] = []
    for coeffs, rel, rhs in zip(lp.lhs, lp.rel, lp.rhs):
        expanded = []
        for j in range(lp.num_vars):
            expanded.append(coeffs[j])
            if lp.free[j]:
                expanded.append(-coeffs[j])
        if rhs < 0:
            expanded = [-c for c in expanded]
            rhs = -rhs
            rel = {"<=": ">=", ">=": "<=", "==": "=="}[rel]
        rows.append((expanded, rel, rhs))

    num_slack = sum(1 for _, rel, _ in rows if rel != "==")
    slack_base = num_structural
    art_base = num_structural + num_slack

    tableau: list[list[Fraction]] = []
    basis: list[int] = []
    artificial_cols: list[int] = []
    slack_idx = 0
    for expanded, rel, rhs in rows:
        row = list(expanded) + [Fraction(0)] * num_slack
        if rel != "==":
            row[slack_base + slack_idx] = Fraction(1) if rel == "<=" else Fraction(-1)
            slack_idx += 1
        if rel == "<=":
            basis.append(slack_base + slack_idx - 1)
        else:
            basis.append(-1)  # placeholder: needs an artificial
        tableau.append(row + [rhs])

    for r in range(len(tableau)):
        if basis[r] == -1:
            col = art_base + len(artificial_cols)
            artificial_cols.append(col)
            basis[r] = col
    total_cols = art_base + len(artificial_cols)
    for r, row in enumerate(tableau):
        rhs = row.pop()
        row.extend([Fraction(0)] * (total_cols - len(row)))
        if basis[r] >= art_base:
            row[basis[r]] = Fraction(1)
        row.append(rhs)

    if artificial_cols:
        phase1_costs = [Fraction(0)] * total_cols
        for col in artificial_cols:
            phase1_costs[col] = Fraction(1)
        costrow = _price_out(tableau, basis, phase1_costs)
        status = _run_simplex(tableau, costrow, basis, range(total_cols))
        assert status == "optimal"  # phase 1 is bounded below by 0
        if -costrow[-1] != 0:
            return LPSolution("infeasible", None, None)
        # remove lingering artificials from the basis (they sit at value 0)
        r = 0
        while r < len(tableau):
            if basis[r] >= art_base:
                target = next(
                    (j for j in range(art_base) if tableau[r][j] != 0), None
                )
                if target is None:
                    del tableau[r]  # the row is redundant
                    del basis[r]
                    continue
                _pivot(tableau, costrow, basis, r, target)
            r += 1

    phase2_costs = expanded_cost + [Fraction(0)] * (total_cols - num_structural)
    costrow = _price_out(tableau, basis, phase2_costs)
    status = _run_simplex(tableau, costrow, basis, range(art_base))
    if status == "unbounded":
        return LPSolution("unbounded", None, None)

    expanded_x = [Fraction(0)] * total_cols
    for r, bv in enumerate(basis):
        expanded_x[bv] = tableau[r][-1]
    x = []
    for plus, minus in col_of:
        value = expanded_x[plus]
        if minus is not None:
            value -= expanded_x[minus]
        x.append(value)
    value = sum((c * v for c, v in zip(lp.objective, x)), Fraction(0))
    return LPSolution("optimal", value, x)
