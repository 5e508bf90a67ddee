"""Multilinear polynomials over function-indicator variables.

A function f:[N] -> [M] is encoded by the N*M Boolean indicators
y[i,j] = 1 iff f(i) = j.  A monomial is a product of such indicators,
stored as a tuple of (row, column) factors, and a polynomial is a sparse
map from monomials to exact rational coefficients.

On assignments that come from actual functions two rewrite rules hold:
a repeated factor is idempotent (y[i,j]^2 = y[i,j]), and two factors that
share a row but name different columns annihilate the whole monomial,
because a row selects exactly one column.  `normalize_monomial` applies
both rules, so every stored monomial has pairwise distinct rows and at
most N factors.  All coefficients are `fractions.Fraction`; no floats
appear anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Iterable, Iterator, Mapping, Optional, Union

Factor = tuple[int, int]
Monomial = tuple[Factor, ...]
CoeffLike = Union[Fraction, int, str]


@dataclass(frozen=True)
class FunctionTable:
    """A concrete function f:[n] -> [m], stored as the tuple (f(1), ..., f(n))."""

    n: int
    m: int
    values: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "values", tuple(self.values))
        if self.n < 1 or self.m < 1:
            raise ValueError("a function table needs n >= 1 and m >= 1")
        if len(self.values) != self.n:
            raise ValueError(f"expected {self.n} values, got {len(self.values)}")
        for v in self.values:
            if not 1 <= v <= self.m:
                raise ValueError(f"value {v} outside the range 1..{self.m}")

    @classmethod
    def all(cls, n: int, m: int) -> Iterator["FunctionTable"]:
        """All m**n function tables, in lexicographic order of value tuples."""
        for values in product(range(1, m + 1), repeat=n):
            yield cls(n, m, values)

    def __call__(self, i: int) -> int:
        return self.values[i - 1]

    def indicator(self, i: int, j: int) -> int:
        """The variable y[i,j] evaluated at this function: 1 iff f(i) = j."""
        return 1 if self.values[i - 1] == j else 0

    def frequency_counts(self) -> tuple[int, ...]:
        """Preimage sizes (|f^-1(1)|, ..., |f^-1(m)|) in column order."""
        counts = [0] * self.m
        for v in self.values:
            counts[v - 1] += 1
        return tuple(counts)

    def is_one_to_one(self) -> bool:
        return len(set(self.values)) == self.n


def normalize_monomial(factors: Iterable[Factor]) -> Optional[Monomial]:
    """Canonical form of a product of indicator factors, or None if the
    product vanishes on every function assignment.

    Duplicate factors collapse; two factors with the same row and different
    columns force the product to zero.  Surviving factors come back sorted
    by row (rows are distinct after reduction, so row order is total).
    """
    by_row: dict[int, int] = {}
    for i, j in factors:
        seen = by_row.get(i)
        if seen is None:
            by_row[i] = j
        elif seen != j:
            return None
    return tuple(sorted(by_row.items()))


def evaluate_factors(factors: Iterable[Factor], f: FunctionTable) -> int:
    """Product of raw indicator factors at f, without normalizing first."""
    result = 1
    for i, j in factors:
        result *= f.indicator(i, j)
        if result == 0:
            return 0
    return result


class YPolynomial:
    """Sparse polynomial in the indicators y[i,j], kept in normal form.

    Construction normalizes every monomial, merges duplicates and drops
    zero coefficients, so the invariants (distinct rows per monomial,
    no zero terms) hold structurally.
    """

    __slots__ = ("n", "m", "terms")

    def __init__(
        self,
        n: int,
        m: int,
        terms: Mapping[Iterable[Factor], CoeffLike] | Iterable[tuple[Iterable[Factor], CoeffLike]] = (),
    ):
        if n < 1 or m < 1:
            raise ValueError("polynomial dimensions need n >= 1 and m >= 1")
        self.n = n
        self.m = m
        acc: dict[Monomial, Fraction] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for factors, coeff in items:
            factors = tuple(factors)
            for i, j in factors:
                if not (1 <= i <= n and 1 <= j <= m):
                    raise ValueError(f"factor ({i},{j}) outside the {n}x{m} grid")
            mono = normalize_monomial(factors)
            if mono is None:
                continue
            acc[mono] = acc.get(mono, Fraction(0)) + Fraction(coeff)
        self.terms = {mono: c for mono, c in acc.items() if c != 0}

    @classmethod
    def zero(cls, n: int, m: int) -> "YPolynomial":
        return cls(n, m)

    @classmethod
    def constant(cls, n: int, m: int, value: CoeffLike) -> "YPolynomial":
        return cls(n, m, [((), value)])

    @classmethod
    def variable(cls, n: int, m: int, i: int, j: int) -> "YPolynomial":
        """The single indicator y[i,j]."""
        return cls(n, m, [(((i, j),), 1)])

    def _check_same_grid(self, other: "YPolynomial") -> None:
        if (self.n, self.m) != (other.n, other.m):
            raise ValueError(
                f"dimension mismatch: {self.n}x{self.m} vs {other.n}x{other.m}"
            )

    def __add__(self, other: "YPolynomial") -> "YPolynomial":
        self._check_same_grid(other)
        merged = dict(self.terms)
        for mono, c in other.terms.items():
            merged[mono] = merged.get(mono, Fraction(0)) + c
        return YPolynomial(self.n, self.m, merged)

    def __neg__(self) -> "YPolynomial":
        return self.scale(-1)

    def __sub__(self, other: "YPolynomial") -> "YPolynomial":
        return self + (-other)

    def __mul__(self, other: "YPolynomial") -> "YPolynomial":
        self._check_same_grid(other)
        raw: list[tuple[Monomial, Fraction]] = []
        for ma, ca in self.terms.items():
            for mb, cb in other.terms.items():
                raw.append((ma + mb, ca * cb))
        return YPolynomial(self.n, self.m, raw)

    def scale(self, factor: CoeffLike) -> "YPolynomial":
        factor = Fraction(factor)
        return YPolynomial(
            self.n, self.m, {mono: c * factor for mono, c in self.terms.items()}
        )

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, YPolynomial):
            return NotImplemented
        return (self.n, self.m, self.terms) == (other.n, other.m, other.terms)

    def degree(self) -> Optional[int]:
        """Largest number of factors in a surviving term; None for the zero
        polynomial (kept non-numeric so it cannot leak into arithmetic)."""
        if not self.terms:
            return None
        return max(len(mono) for mono in self.terms)

    def evaluate(self, f: FunctionTable) -> Fraction:
        """Value at the indicator assignment of f."""
        if (f.n, f.m) != (self.n, self.m):
            raise ValueError(
                f"function is {f.n}->{f.m} but polynomial is over the {self.n}x{self.m} grid"
            )
        total = Fraction(0)
        for mono, c in self.terms.items():
            if all(f.values[i - 1] == j for i, j in mono):
                total += c
        return total

    def sorted_terms(self) -> list[tuple[Monomial, Fraction]]:
        """Terms in canonical order: by factor count, then row-major factors."""
        return sorted(self.terms.items(), key=lambda kv: (len(kv[0]), kv[0]))

    def to_dict(self) -> dict:
        """JSON-ready form; round-trips bit-exactly through from_dict."""
        return {
            "vars": "y",
            "n": self.n,
            "m": self.m,
            "terms": [
                {"factors": [[i, j] for i, j in mono], "coeff": str(c)}
                for mono, c in self.sorted_terms()
            ],
        }

    @classmethod
    def from_dict(cls, data: dict) -> "YPolynomial":
        if data.get("vars", "y") != "y":
            raise ValueError(f"expected a y-polynomial, got vars={data.get('vars')!r}")
        try:
            n, m = int(data["n"]), int(data["m"])
            terms = [
                (tuple((int(i), int(j)) for i, j in entry["factors"]), Fraction(entry["coeff"]))
                for entry in data["terms"]
            ]
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed y-polynomial object: {exc}") from exc
        return cls(n, m, terms)

    def __repr__(self) -> str:
        if not self.terms:
            return f"YPolynomial({self.n}, {self.m}, 0)"
        parts = []
        for mono, c in self.sorted_terms():
            factors = "*".join(f"y[{i},{j}]" for i, j in mono) or "1"
            parts.append(f"{c}*{factors}")
        return f"YPolynomial({self.n}, {self.m}, {' + '.join(parts)})"
