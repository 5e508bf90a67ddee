"""Symmetric properties of functions, as labelings of frequency classes.

A property assigns each frequency class one of three labels: One (the
property holds), Zero (it does not), or Undefined (the class is outside
the promise; an approximating polynomial only has to stay within [0, 1]
there).  Because the label depends only on the multiset of preimage
counts, a property is symmetric by construction: permuting inputs or
renaming outputs never changes the label.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable

from .sympoly import FrequencyVector, Partition, check_partition, partitions


class Label(enum.Enum):
    ONE = "One"
    ZERO = "Zero"
    UNDEFINED = "Undefined"


@dataclass(frozen=True)
class PropertySpec:
    """A named property: a classification rule over frequency classes.

    `requires_m_ge_n` marks properties whose One side is "f is one-to-one";
    they make no sense when the range is smaller than the domain, and the
    CLI rejects such instances up front.
    """

    name: str
    rule: Callable[[FrequencyVector], Label] = field(compare=False)
    requires_m_ge_n: bool = False

    def classify(self, z: FrequencyVector) -> Label:
        return self.rule(z)


def _collision_rule(z: FrequencyVector) -> Label:
    if all(p == 1 for p in z.parts):
        return Label.ONE
    if all(p == 2 for p in z.parts):
        return Label.ZERO
    return Label.UNDEFINED


def _element_distinctness_rule(z: FrequencyVector) -> Label:
    if all(p == 1 for p in z.parts):
        return Label.ONE
    return Label.ZERO


def _modified_element_distinctness_rule(z: FrequencyVector) -> Label:
    if all(p == 1 for p in z.parts):
        return Label.ONE
    if any(p >= 3 for p in z.parts):
        return Label.ZERO
    return Label.UNDEFINED


COLLISION = PropertySpec("collision", _collision_rule, requires_m_ge_n=True)
ELEMENT_DISTINCTNESS = PropertySpec(
    "element-distinctness", _element_distinctness_rule, requires_m_ge_n=True
)
MODIFIED_ELEMENT_DISTINCTNESS = PropertySpec(
    "modified-element-distinctness",
    _modified_element_distinctness_rule,
    requires_m_ge_n=True,
)
ALWAYS_ONE = PropertySpec("always-one", lambda z: Label.ONE)

BUILTIN_PROPERTIES: dict[str, PropertySpec] = {
    "collision": COLLISION,
    "ed": ELEMENT_DISTINCTNESS,
    "element-distinctness": ELEMENT_DISTINCTNESS,
    "med": MODIFIED_ELEMENT_DISTINCTNESS,
    "modified-ed": MODIFIED_ELEMENT_DISTINCTNESS,
    "modified-element-distinctness": MODIFIED_ELEMENT_DISTINCTNESS,
    "always-one": ALWAYS_ONE,
}


def get_property(name: str) -> PropertySpec:
    try:
        return BUILTIN_PROPERTIES[name]
    except KeyError:
        known = ", ".join(sorted(set(BUILTIN_PROPERTIES)))
        raise ValueError(f"unknown property {name!r}; known: {known}") from None


def enumerate_classes(prop: PropertySpec, n: int, m: int) -> list[tuple[Partition, Label]]:
    """All frequency classes of functions [n] -> [m] with their labels:
    one entry per partition of n with at most m parts, in reverse-lex order."""
    if n < 1 or m < 1:
        raise ValueError("class enumeration needs n >= 1 and m >= 1")
    return [
        (lam, prop.classify(FrequencyVector(m, lam)))
        for lam in partitions(n, max_parts=m)
    ]


def property_from_classes(
    name: str, n: int, labeled: dict[Partition, Label]
) -> PropertySpec:
    """A property given by an explicit class table; unlisted classes are
    Undefined.  The rule rejects frequency vectors whose weight is not n."""
    table = dict(labeled)

    def rule(z: FrequencyVector) -> Label:
        if z.weight != n:
            raise ValueError(f"property {name!r} is over n={n}, got weight {z.weight}")
        return table.get(z.parts, Label.UNDEFINED)

    return PropertySpec(name, rule)


def property_from_dict(data: dict, name: str = "custom") -> PropertySpec:
    """Parse {"n": N, "classes": [{"partition": [...], "label": "One"}, ...]}."""
    try:
        n = int(data["n"])
        entries = list(data["classes"])
    except (KeyError, TypeError) as exc:
        raise ValueError(f"malformed property object: {exc}") from exc
    if n < 1:
        raise ValueError(f"property needs n >= 1, got {n}")
    labeled: dict[Partition, Label] = {}
    for entry in entries:
        try:
            lam = check_partition(entry["partition"])
            label = Label(entry["label"])
        except (KeyError, TypeError) as exc:
            raise ValueError(f"malformed class entry {entry!r}: {exc}") from exc
        except ValueError as exc:
            raise ValueError(f"bad class entry {entry!r}: {exc}") from exc
        if sum(lam) != n:
            raise ValueError(f"class {lam} has weight {sum(lam)}, expected {n}")
        if lam in labeled:
            raise ValueError(f"class {lam} listed twice")
        labeled[lam] = label
    return property_from_classes(name, n, labeled)


def property_from_file(path: str | Path) -> PropertySpec:
    path = Path(path)
    with open(path, encoding="utf-8") as handle:
        data = json.load(handle)
    return property_from_dict(data, name=path.stem)
