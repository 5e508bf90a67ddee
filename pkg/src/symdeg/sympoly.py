"""Symmetric polynomials in frequency variables, indexed by partitions.

The frequency representation of f:[N] -> [M] counts preimages:
z_j = |f^-1(j)|.  A polynomial that is invariant under permuting the M
frequency variables is stored by its coordinates in the monomial symmetric
basis {m_lambda}: for a partition lambda = (l1 >= l2 >= ... >= lk > 0),
m_lambda is the sum of all distinct monomials z_{i1}^{l1} * ... * z_{ik}^{lk}
over distinct variable indices, each distinct monomial counted once.
A partition longer than the variable count denotes the zero basis element
and is never stored.

`ZPolynomial` is the non-symmetric companion: a polynomial in the named
variables z_1..z_M with arbitrary integer exponents.  It appears as the
intermediate of the symmetrization pipeline and as the input of
`symmetrize_variables`, which averages it over all M! variable
permutations and lands back in the m_lambda basis.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, groupby, permutations
from math import factorial
from typing import Iterable, Iterator, Mapping, Optional, Sequence, Union

from .ypoly import FunctionTable

Partition = tuple[int, ...]
CoeffLike = Union[Fraction, int, str]


def check_partition(parts: Iterable[int]) -> Partition:
    """Validate and return a partition: positive parts, non-increasing."""
    parts = tuple(int(p) for p in parts)
    for a, b in zip(parts, parts[1:]):
        if a < b:
            raise ValueError(f"partition parts must be non-increasing, got {parts}")
    if parts and parts[-1] <= 0:
        raise ValueError(f"partition parts must be positive, got {parts}")
    return parts


def partitions(total: int, max_parts: int | None = None, max_part: int | None = None) -> Iterator[Partition]:
    """Partitions of `total` in reverse-lexicographic order: (n), ..., (1,..,1).

    `max_parts` bounds the number of parts, `max_part` the largest part.
    total = 0 yields exactly the empty partition.
    """
    if total < 0:
        raise ValueError("cannot partition a negative total")
    slots = total if max_parts is None else min(max_parts, total)
    first_cap = total if max_part is None else min(max_part, total)

    def rec(remaining: int, largest: int, room: int) -> Iterator[Partition]:
        if remaining == 0:
            yield ()
            return
        if room == 0:
            return
        for head in range(min(largest, remaining), 0, -1):
            for tail in rec(remaining - head, head, room - 1):
                yield (head,) + tail

    yield from rec(total, first_cap, slots)


def partition_automorphisms(lam: Partition) -> int:
    """Product of factorials of the multiplicities of equal parts."""
    result = 1
    for _, group in groupby(lam):
        result *= factorial(sum(1 for _ in group))
    return result


@dataclass(frozen=True)
class FrequencyVector:
    """A frequency class: the multiset of preimage counts of some f:[n] -> [m],
    stored canonically as its nonzero counts in non-increasing order.

    Two functions share a FrequencyVector exactly when one is obtained from
    the other by permuting inputs and renaming outputs, so a value of `m`
    plus the partition `parts` names a whole orbit of functions.
    """

    m: int
    parts: Partition

    def __post_init__(self) -> None:
        object.__setattr__(self, "parts", check_partition(self.parts))
        if self.m < 1:
            raise ValueError("a frequency vector needs m >= 1")
        if len(self.parts) > self.m:
            raise ValueError(
                f"{len(self.parts)} nonzero counts cannot fit in {self.m} outputs"
            )

    @classmethod
    def from_counts(cls, counts: Sequence[int], m: int | None = None) -> "FrequencyVector":
        """Canonicalize an ordered tuple of per-output counts (zeros allowed)."""
        counts = tuple(int(c) for c in counts)
        if any(c < 0 for c in counts):
            raise ValueError(f"counts must be non-negative, got {counts}")
        size = len(counts) if m is None else m
        if m is not None and len(counts) > m:
            raise ValueError(f"{len(counts)} counts for {m} outputs")
        return cls(size, tuple(sorted((c for c in counts if c > 0), reverse=True)))

    @classmethod
    def of_function(cls, f: FunctionTable) -> "FrequencyVector":
        return cls.from_counts(f.frequency_counts())

    @property
    def weight(self) -> int:
        return sum(self.parts)

    def counts(self) -> tuple[int, ...]:
        """The canonical ordered representative: parts padded with zeros."""
        return self.parts + (0,) * (self.m - len(self.parts))


def eval_msym(lam: Partition, z: FrequencyVector) -> Fraction:
    """Value of the monomial symmetric basis element m_lambda at z.

    Sums over all assignments of lambda's parts to distinct coordinates,
    counting each distinct monomial once (ordered assignments divided by
    the automorphisms of equal parts).  A lambda longer than the number of
    variables evaluates to 0 by convention.  Coordinates equal to zero
    never contribute because every part is positive.
    """
    lam = check_partition(lam)
    if not lam:
        return Fraction(1)
    if len(lam) > z.m or len(lam) > len(z.parts):
        return Fraction(0)
    total = 0
    for chosen in permutations(z.parts, len(lam)):
        term = 1
        for value, exponent in zip(chosen, lam):
            term *= value**exponent
        total += term
    return Fraction(total, partition_automorphisms(lam))


ZMonomial = tuple[tuple[int, int], ...]  # sorted ((variable, exponent), ...), exponents >= 1


class ZPolynomial:
    """Polynomial in the named variables z_1..z_m with integer exponents."""

    __slots__ = ("m", "terms")

    def __init__(
        self,
        m: int,
        terms: Mapping[ZMonomial, CoeffLike] | Iterable[tuple[ZMonomial, CoeffLike]] = (),
    ):
        if m < 1:
            raise ValueError("a z-polynomial needs m >= 1 variables")
        self.m = m
        acc: dict[ZMonomial, Fraction] = {}
        items = terms.items() if isinstance(terms, Mapping) else terms
        for mono, coeff in items:
            merged: dict[int, int] = {}
            for var, exp in mono:
                if not 1 <= var <= m:
                    raise ValueError(f"variable z_{var} outside 1..{m}")
                if exp < 1:
                    raise ValueError(f"exponent {exp} must be >= 1")
                merged[var] = merged.get(var, 0) + exp
            key = tuple(sorted(merged.items()))
            acc[key] = acc.get(key, Fraction(0)) + Fraction(coeff)
        self.terms = {mono: c for mono, c in acc.items() if c != 0}

    @classmethod
    def constant(cls, m: int, value: CoeffLike) -> "ZPolynomial":
        return cls(m, [((), value)])

    @classmethod
    def variable(cls, m: int, var: int) -> "ZPolynomial":
        return cls(m, [(((var, 1),), 1)])

    def _check_same_vars(self, other: "ZPolynomial") -> None:
        if self.m != other.m:
            raise ValueError(f"variable count mismatch: {self.m} vs {other.m}")

    def __add__(self, other: "ZPolynomial") -> "ZPolynomial":
        self._check_same_vars(other)
        merged = dict(self.terms)
        for mono, c in other.terms.items():
            merged[mono] = merged.get(mono, Fraction(0)) + c
        return ZPolynomial(self.m, merged)

    def __sub__(self, other: "ZPolynomial") -> "ZPolynomial":
        return self + other.scale(-1)

    def __mul__(self, other: "ZPolynomial") -> "ZPolynomial":
        self._check_same_vars(other)
        raw: list[tuple[ZMonomial, Fraction]] = []
        for ma, ca in self.terms.items():
            for mb, cb in other.terms.items():
                raw.append((ma + mb, ca * cb))
        return ZPolynomial(self.m, raw)

    def scale(self, factor: CoeffLike) -> "ZPolynomial":
        factor = Fraction(factor)
        return ZPolynomial(self.m, {mono: c * factor for mono, c in self.terms.items()})

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ZPolynomial):
            return NotImplemented
        return (self.m, self.terms) == (other.m, other.terms)

    def degree(self) -> Optional[int]:
        if not self.terms:
            return None
        return max(sum(e for _, e in mono) for mono in self.terms)

    def evaluate(self, values: Sequence[CoeffLike]) -> Fraction:
        """Value at the ordered point (z_1, ..., z_m)."""
        if len(values) != self.m:
            raise ValueError(f"expected {self.m} values, got {len(values)}")
        point = [Fraction(v) for v in values]
        total = Fraction(0)
        for mono, c in self.terms.items():
            term = c
            for var, exp in mono:
                term *= point[var - 1] ** exp
            total += term
        return total

    def __repr__(self) -> str:
        if not self.terms:
            return f"ZPolynomial({self.m}, 0)"
        parts = []
        for mono, c in sorted(self.terms.items()):
            factors = "*".join(f"z{var}^{exp}" for var, exp in mono) or "1"
            parts.append(f"{c}*{factors}")
        return f"ZPolynomial({self.m}, {' + '.join(parts)})"


def msym_to_zpoly(lam: Partition, m: int) -> ZPolynomial:
    """Expand m_lambda over m named variables: every distinct monomial with
    exponent multiset lambda on distinct variables, each exactly once."""
    lam = check_partition(lam)
    if len(lam) > m:
        return ZPolynomial(m)
    monos: set[ZMonomial] = set()
    for positions in combinations(range(1, m + 1), len(lam)):
        for exps in set(permutations(lam)):
            monos.add(tuple(sorted(zip(positions, exps))))
    return ZPolynomial(m, [(mono, 1) for mono in sorted(monos)])


class SymPolynomial:
    """Symmetric polynomial over m frequency variables in the m_lambda basis."""

    __slots__ = ("m", "coeffs")

    def __init__(
        self,
        m: int,
        coeffs: Mapping[Iterable[int], CoeffLike] | Iterable[tuple[Iterable[int], CoeffLike]] = (),
    ):
        if m < 1:
            raise ValueError("a symmetric polynomial needs m >= 1 variables")
        self.m = m
        acc: dict[Partition, Fraction] = {}
        items = coeffs.items() if isinstance(coeffs, Mapping) else coeffs
        for lam, coeff in items:
            lam = check_partition(lam)
            if len(lam) > m:
                # the zero basis element over m variables
                continue
            acc[lam] = acc.get(lam, Fraction(0)) + Fraction(coeff)
        self.coeffs = {lam: c for lam, c in acc.items() if c != 0}

    @classmethod
    def zero(cls, m: int) -> "SymPolynomial":
        return cls(m)

    @classmethod
    def constant(cls, m: int, value: CoeffLike) -> "SymPolynomial":
        return cls(m, [((), value)])

    @classmethod
    def basis(cls, m: int, lam: Iterable[int]) -> "SymPolynomial":
        return cls(m, [(tuple(lam), 1)])

    def _check_same_vars(self, other: "SymPolynomial") -> None:
        if self.m != other.m:
            raise ValueError(f"variable count mismatch: {self.m} vs {other.m}")

    def __add__(self, other: "SymPolynomial") -> "SymPolynomial":
        self._check_same_vars(other)
        merged = dict(self.coeffs)
        for lam, c in other.coeffs.items():
            merged[lam] = merged.get(lam, Fraction(0)) + c
        return SymPolynomial(self.m, merged)

    def __sub__(self, other: "SymPolynomial") -> "SymPolynomial":
        return self + other.scale(-1)

    def scale(self, factor: CoeffLike) -> "SymPolynomial":
        factor = Fraction(factor)
        return SymPolynomial(self.m, {lam: c * factor for lam, c in self.coeffs.items()})

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, SymPolynomial):
            return NotImplemented
        return (self.m, self.coeffs) == (other.m, other.coeffs)

    def degree(self) -> Optional[int]:
        """Largest partition weight with a nonzero coefficient; None if zero."""
        if not self.coeffs:
            return None
        return max(sum(lam) for lam in self.coeffs)

    def evaluate(self, z: FrequencyVector) -> Fraction:
        """Value at a frequency class (well defined: the polynomial is
        symmetric, so any ordering of the class's counts gives the same value)."""
        if z.m != self.m:
            raise ValueError(f"point has {z.m} variables but polynomial has {self.m}")
        total = Fraction(0)
        for lam, c in self.coeffs.items():
            total += c * eval_msym(lam, z)
        return total

    def to_zpoly(self) -> ZPolynomial:
        """Expansion into named variables (used by tests and desymmetrization)."""
        result = ZPolynomial(self.m)
        for lam, c in sorted(self.coeffs.items()):
            result = result + msym_to_zpoly(lam, self.m).scale(c)
        return result

    def sorted_coeffs(self) -> list[tuple[Partition, Fraction]]:
        """Coefficients in canonical order: by weight, then reverse-lex parts."""
        return sorted(self.coeffs.items(), key=lambda kv: (sum(kv[0]), tuple(-p for p in kv[0])))

    def to_dict(self) -> dict:
        return {
            "vars": "z",
            "m": self.m,
            "terms": [
                {"partition": list(lam), "coeff": str(c)}
                for lam, c in self.sorted_coeffs()
            ],
        }

    @classmethod
    def from_dict(cls, data: dict) -> "SymPolynomial":
        if data.get("vars", "z") != "z":
            raise ValueError(f"expected a z-polynomial, got vars={data.get('vars')!r}")
        try:
            m = int(data["m"])
            coeffs = [
                (tuple(int(p) for p in entry["partition"]), Fraction(entry["coeff"]))
                for entry in data["terms"]
            ]
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed z-polynomial object: {exc}") from exc
        return cls(m, coeffs)

    def __repr__(self) -> str:
        if not self.coeffs:
            return f"SymPolynomial({self.m}, 0)"
        parts = [f"{c}*m{list(lam)}" if lam else str(c) for lam, c in self.sorted_coeffs()]
        return f"SymPolynomial({self.m}, {' + '.join(parts)})"


def symmetrize_variables(p: ZPolynomial) -> SymPolynomial:
    """Average p over all m! permutations of its variables, in closed form.

    A named monomial with exponent multiset lambda (length l over m
    variables) averages to m_lambda * aut(lambda) * (m-l)! / m!: its orbit
    under the symmetric group is uniform over the m!/(aut*(m-l)!) distinct
    monomials of m_lambda.
    """
    m = p.m
    coeffs: dict[Partition, Fraction] = {}
    for mono, c in p.terms.items():
        lam = tuple(sorted((exp for _, exp in mono), reverse=True))
        weight = Fraction(
            partition_automorphisms(lam) * factorial(m - len(lam)), factorial(m)
        )
        coeffs[lam] = coeffs.get(lam, Fraction(0)) + c * weight
    return SymPolynomial(m, coeffs)
