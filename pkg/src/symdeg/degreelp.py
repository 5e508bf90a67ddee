"""Minimum-error linear programs and the approximate-degree search.

For a property over functions [n] -> [m] and a degree bound d, the best
achievable approximation error by a symmetric polynomial of degree <= d is
the optimum of a small exact LP: one free variable per partition of weight
<= d (the coordinates in the monomial symmetric basis) plus the error
variable eps, and two bound rows per frequency class.  One-classes demand
a value in [1 - eps, 1], Zero-classes a value in [0, eps], Undefined
classes a value in [0, 1].

The approximate degree d* is the smallest d whose optimum drops to the
requested eps.  eps_min is non-increasing in d (the feasible sets nest),
the search is capped by an exact-interpolation bound, and every quantity
is an exact rational, so certificates are reproducible bit for bit.

`eps_min_indicator_basis` solves the same question without the symmetry
restriction, over all normalized indicator monomials and all individual
functions; agreement of the two optima is the checkable form of the
"symmetric polynomials suffice" collapse.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, product
from typing import Optional

from .lp import LinearProgram, solve
from .properties import Label, PropertySpec, enumerate_classes
from .sympoly import (
    FrequencyVector,
    Partition,
    SymPolynomial,
    eval_msym,
    partitions,
)
from .ypoly import FunctionTable, Monomial, YPolynomial


@dataclass(frozen=True)
class LPInstance:
    """One minimum-error LP: variables eps + one coefficient per partition,
    two bound rows per class, objective min eps."""

    property_name: str
    n: int
    m: int
    degree: int
    lambdas: tuple[Partition, ...]
    classes: tuple[tuple[Partition, Label], ...]
    program: LinearProgram


def coefficient_basis(n: int, m: int, degree: int) -> tuple[Partition, ...]:
    """Partitions of weight <= degree with at most min(n, m) parts, ordered by
    weight then reverse-lex.  Longer partitions evaluate to zero on every
    weight-n frequency vector, so they would be useless LP columns."""
    cap = min(n, m)
    return tuple(
        lam for w in range(degree + 1) for lam in partitions(w, max_parts=cap)
    )


def build_lp(prop: PropertySpec, n: int, m: int, degree: int) -> LPInstance:
    """Assemble the minimum-error LP for the property at the given degree.
    Row and column order are fixed, so instances are deterministic."""
    if degree < 0:
        raise ValueError("degree must be >= 0")
    lambdas = coefficient_basis(n, m, degree)
    classes = tuple(enumerate_classes(prop, n, m))
    num_vars = 1 + len(lambdas)  # eps first, then the coefficients
    program = LinearProgram(
        num_vars=num_vars,
        objective=[Fraction(1)] + [Fraction(0)] * len(lambdas),
        free=[False] + [True] * len(lambdas),
    )
    for lam_class, label in classes:
        z = FrequencyVector(m, lam_class)
        row = [eval_msym(lam, z) for lam in lambdas]
        if label is Label.ONE:
            program.add_row([Fraction(1)] + row, ">=", 1)   # value + eps >= 1
            program.add_row([Fraction(0)] + row, "<=", 1)
        elif label is Label.ZERO:
            program.add_row([Fraction(0)] + row, ">=", 0)
            program.add_row([Fraction(-1)] + row, "<=", 0)  # value - eps <= 0
        else:
            program.add_row([Fraction(0)] + row, ">=", 0)
            program.add_row([Fraction(0)] + row, "<=", 1)
    return LPInstance(prop.name, n, m, degree, lambdas, classes, program)


def solve_lp(inst: LPInstance) -> tuple[Fraction, dict[Partition, Fraction]]:
    """Optimal (eps_min, coefficient map).  The LP is always feasible (the
    constant 1/2 with eps = 1/2 satisfies every row) and bounded (eps >= 0),
    and the pivot rule is deterministic, so the answer is a function of the
    instance alone."""
    solution = solve(inst.program)
    if solution.status != "optimal":
        raise RuntimeError(
            f"minimum-error LP came back {solution.status}; it must be optimal"
        )
    eps_min = solution.x[0]
    coeffs = {
        lam: value
        for lam, value in zip(inst.lambdas, solution.x[1:])
        if value != 0
    }
    return eps_min, coeffs


@dataclass(frozen=True)
class DegreeStep:
    """Optimum of the LP at one degree."""

    degree: int
    eps_min: Fraction
    coefficients: dict[Partition, Fraction]


@dataclass(frozen=True)
class DegreeCertificate:
    """The full result of a degree search: per-degree optima up to and
    including the approximate degree d*, which is the last step."""

    property_name: str
    n: int
    m: int
    eps: Fraction
    steps: tuple[DegreeStep, ...]

    @property
    def degree(self) -> int:
        """d*: the smallest degree whose best error is <= eps."""
        return self.steps[-1].degree

    @property
    def query_lower_bound(self) -> int:
        """ceil(d*/2): quantum algorithms with T queries produce acceptance
        polynomials of degree at most 2T."""
        return (self.degree + 1) // 2

    def optimal_polynomial(self) -> SymPolynomial:
        return SymPolynomial(self.m, self.steps[-1].coefficients)

    def eps_min_at(self, degree: int) -> Fraction:
        for step in self.steps:
            if step.degree == degree:
                return step.eps_min
        raise KeyError(f"no step at degree {degree}")

    def to_dict(self) -> dict:
        return {
            "property": self.property_name,
            "n": self.n,
            "m": self.m,
            "eps": str(self.eps),
            "degree": self.degree,
            "query_lower_bound": self.query_lower_bound,
            "eps_min_by_degree": [
                {"degree": step.degree, "eps_min": str(step.eps_min)}
                for step in self.steps
            ],
            "optimal_coefficients": [
                {"partition": list(lam), "coeff": str(c)}
                for lam, c in self.optimal_polynomial().sorted_coeffs()
            ],
        }


def approx_degree(
    prop: PropertySpec, n: int, m: int, eps: Fraction | int | str = Fraction(1, 3)
) -> DegreeCertificate:
    """Smallest degree at which the property is eps-approximable, with the
    whole eps_min-by-degree table and an optimal witness polynomial.

    Searches d = 0, 1, 2, ... and stops at the first optimum <= eps.  The
    cap max(n, class count) is an exact-interpolation bound (summing the
    weight-n indicator polynomials of a class and averaging interpolates
    any labeling at degree n), so running past it signals a solver bug, as
    does any increase of eps_min with d.
    """
    eps = Fraction(eps)
    if not 0 <= eps < Fraction(1, 2):
        raise ValueError(f"eps must lie in [0, 1/2), got {eps}")
    if n < 1 or m < 1:
        raise ValueError("degree search needs n >= 1 and m >= 1")
    classes = enumerate_classes(prop, n, m)
    cap = max(n, len(classes))
    steps: list[DegreeStep] = []
    previous: Optional[Fraction] = None
    for d in range(cap + 1):
        eps_min, coeffs = solve_lp(build_lp(prop, n, m, d))
        if previous is not None and eps_min > previous:
            raise RuntimeError(
                f"eps_min increased from {previous} to {eps_min} at degree {d}; "
                "the solver must be broken"
            )
        steps.append(DegreeStep(d, eps_min, coeffs))
        if eps_min <= eps:
            return DegreeCertificate(prop.name, n, m, eps, tuple(steps))
        previous = eps_min
    raise RuntimeError(
        f"no degree up to the interpolation cap {cap} reached eps = {eps}; "
        "the solver must be broken"
    )


def indicator_monomials(n: int, m: int, degree: int) -> tuple[Monomial, ...]:
    """All normalized indicator monomials with at most `degree` factors:
    a set of rows plus one column choice per row."""
    monos: list[Monomial] = []
    for k in range(min(degree, n) + 1):
        for rows in combinations(range(1, n + 1), k):
            for cols in product(range(1, m + 1), repeat=k):
                monos.append(tuple(zip(rows, cols)))
    return tuple(monos)


def eps_min_indicator_basis(prop: PropertySpec, n: int, m: int, degree: int) -> Fraction:
    """Best error over *all* polynomials of the given degree in the
    indicators, one bound row pair per individual function.  No symmetry is
    imposed; matching `solve_lp` optima shows none was needed.  Exhaustive
    over m**n functions, so keep n and m small."""
    monos = indicator_monomials(n, m, degree)
    program = LinearProgram(
        num_vars=1 + len(monos),
        objective=[Fraction(1)] + [Fraction(0)] * len(monos),
        free=[False] + [True] * len(monos),
    )
    for f in FunctionTable.all(n, m):
        label = prop.classify(FrequencyVector.of_function(f))
        row = [
            Fraction(1) if all(f.values[i - 1] == j for i, j in mono) else Fraction(0)
            for mono in monos
        ]
        if label is Label.ONE:
            program.add_row([Fraction(1)] + row, ">=", 1)
            program.add_row([Fraction(0)] + row, "<=", 1)
        elif label is Label.ZERO:
            program.add_row([Fraction(0)] + row, ">=", 0)
            program.add_row([Fraction(-1)] + row, "<=", 0)
        else:
            program.add_row([Fraction(0)] + row, ">=", 0)
            program.add_row([Fraction(0)] + row, "<=", 1)
    solution = solve(program)
    if solution.status != "optimal":
        raise RuntimeError(f"indicator-basis LP came back {solution.status}")
    return solution.x[0]
