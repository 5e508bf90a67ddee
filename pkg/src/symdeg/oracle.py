"""Brute-force ground truth for approximation claims at small scale.

`verify_approximation` checks the defining inequalities directly: for a
symmetric polynomial it walks every frequency class, for an indicator
polynomial every individual function table.  Indicator assignments that
correspond to no function are never visited; the bounds simply do not
apply there.  Everything is exact rational arithmetic; a report either
passes or carries the concrete violating classes/functions.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterator, Union

from .budget import check_budget
from .degreelp import DegreeCertificate, approx_degree
from .properties import Label, PropertySpec
from .sympoly import FrequencyVector, SymPolynomial
from .ypoly import FunctionTable, YPolynomial


def enumerate_functions(n: int, m: int, budget: int | None = None) -> Iterator[FunctionTable]:
    """All m**n function tables in lexicographic order, after checking the
    exact count against the enumeration budget."""
    if n < 1 or m < 1:
        raise ValueError("function enumeration needs n >= 1 and m >= 1")
    check_budget(m**n, budget)
    yield from FunctionTable.all(n, m)


def bounds_for(label: Label, eps: Fraction) -> tuple[Fraction, Fraction]:
    """The closed interval an approximating polynomial must hit for a label."""
    if label is Label.ONE:
        return Fraction(1) - eps, Fraction(1)
    if label is Label.ZERO:
        return Fraction(0), eps
    return Fraction(0), Fraction(1)


@dataclass(frozen=True)
class Violation:
    kind: str  # "class" | "function"
    where: tuple[int, ...]
    label: Label
    value: Fraction
    lower: Fraction
    upper: Fraction

    def to_dict(self) -> dict:
        return {
            "kind": self.kind,
            "where": list(self.where),
            "label": self.label.value,
            "value": str(self.value),
            "lower": str(self.lower),
            "upper": str(self.upper),
        }


@dataclass(frozen=True)
class Report:
    passed: bool
    violations: tuple[Violation, ...]
    table: tuple[dict, ...] = field(default=())

    def to_dict(self) -> dict:
        return {
            "pass": self.passed,
            "violations": [v.to_dict() for v in self.violations],
            "table": list(self.table),
        }


def verify_approximation(
    poly: Union[SymPolynomial, YPolynomial],
    prop: PropertySpec,
    n: int,
    m: int,
    eps: Fraction | int | str,
    budget: int | None = None,
) -> Report:
    """Check that `poly` eps-approximates the property over [n] -> [m].

    Symmetric polynomials are checked class by class (cheap); indicator
    polynomials function by function (budgeted at m**n).
    """
    eps = Fraction(eps)
    if not 0 <= eps < 1:
        raise ValueError(f"eps must lie in [0, 1), got {eps}")
    violations: list[Violation] = []
    table: list[dict] = []
    if isinstance(poly, SymPolynomial):
        if poly.m != m:
            raise ValueError(f"polynomial over {poly.m} variables, expected {m}")
        from .sympoly import partitions

        for lam in partitions(n, max_parts=m):
            z = FrequencyVector(m, lam)
            label = prop.classify(z)
            value = poly.evaluate(z)
            lower, upper = bounds_for(label, eps)
            ok = lower <= value <= upper
            table.append(
                {
                    "kind": "class",
                    "where": list(lam),
                    "label": label.value,
                    "value": str(value),
                    "ok": ok,
                }
            )
            if not ok:
                violations.append(Violation("class", lam, label, value, lower, upper))
    elif isinstance(poly, YPolynomial):
        if (poly.n, poly.m) != (n, m):
            raise ValueError(
                f"polynomial over the {poly.n}x{poly.m} grid, expected {n}x{m}"
            )
        for f in enumerate_functions(n, m, budget):
            label = prop.classify(FrequencyVector.of_function(f))
            value = poly.evaluate(f)
            lower, upper = bounds_for(label, eps)
            ok = lower <= value <= upper
            table.append(
                {
                    "kind": "function",
                    "where": list(f.values),
                    "label": label.value,
                    "value": str(value),
                    "ok": ok,
                }
            )
            if not ok:
                violations.append(
                    Violation("function", f.values, label, value, lower, upper)
                )
    else:
        raise TypeError(f"cannot verify a {type(poly).__name__}")
    return Report(not violations, tuple(violations), tuple(table))


def verify_range_invariance(
    prop: PropertySpec,
    n: int,
    m_max: int,
    eps: Fraction | int | str = Fraction(1, 3),
) -> Report:
    """Certify d* for every range size m = n..m_max and report whether the
    degree stays flat, as it must for every symmetric property."""
    if m_max < n:
        raise ValueError(f"m_max = {m_max} must be at least n = {n}")
    certificates: list[DegreeCertificate] = [
        approx_degree(prop, n, m, eps) for m in range(n, m_max + 1)
    ]
    reference = certificates[0].degree
    violations: list[Violation] = []
    table: list[dict] = []
    for cert in certificates:
        ok = cert.degree == reference
        table.append(
            {
                "kind": "range",
                "m": cert.m,
                "degree": cert.degree,
                "query_lower_bound": cert.query_lower_bound,
                "eps_min_by_degree": [
                    {"degree": s.degree, "eps_min": str(s.eps_min)} for s in cert.steps
                ],
                "ok": ok,
            }
        )
        if not ok:
            violations.append(
                Violation(
                    "range",
                    (cert.m,),
                    Label.UNDEFINED,
                    Fraction(cert.degree),
                    Fraction(reference),
                    Fraction(reference),
                )
            )
    return Report(not violations, tuple(violations), tuple(table))
