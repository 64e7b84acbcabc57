"""Knot descriptors and Seifert surgeries (the vertices of the network).

Torus knots are stored in the canonical form ``T(p, q)`` with ``q >= 1`` and
``|p| > q`` for nontrivial knots.  The trivial knot ``O`` is stored as
``T(1, 1)``.  Knots produced by twisting that have no known name are kept
symbolically as a base surgery plus a twist script.
"""
from __future__ import annotations

import re
from dataclasses import dataclass, field
from math import gcd
from typing import Union

from .errors import NonCoprime

__all__ = [
    "TorusKnotId",
    "NamedKnot",
    "DerivedKnot",
    "KnotDescriptor",
    "TwistStep",
    "SeifertSurgery",
    "UNKNOT",
    "canonical_torus_knot",
    "mirror",
    "spreader_conjecture_predicate",
    "parse_surgery",
    "parse_knot",
]


@dataclass(frozen=True, order=True)
class TorusKnotId:
    p: int
    q: int

    def __post_init__(self):
        if self.q < 1 or gcd(abs(self.p), self.q) != 1:
            raise ValueError(f"T({self.p},{self.q}) is not in canonical form")
        if not self.is_unknot and abs(self.p) <= self.q:
            raise ValueError(f"T({self.p},{self.q}) is not in canonical form")
        if self.is_unknot and (self.p, self.q) != (1, 1):
            raise ValueError("the unknot is stored as T(1,1)")

    @property
    def is_unknot(self):
        return self.q == 1

    @property
    def label(self):
        return "O" if self.is_unknot else f"T({self.p},{self.q})"

    def __str__(self):
        return self.label


UNKNOT = TorusKnotId(1, 1)


@dataclass(frozen=True, order=True)
class NamedKnot:
    label: str

    def __str__(self):
        return self.label


@dataclass(frozen=True)
class TwistStep:
    """``turns`` full twists along the seiferter ``seiferter_id``.

    ``linking`` is |lk(c, K)| at the host the step is applied to; it is
    derived data and does not take part in equality.
    """

    seiferter_id: str
    turns: int
    linking: int = field(default=-1, compare=False)

    def to_json(self):
        return {"seiferter": self.seiferter_id, "turns": self.turns, "linking": self.linking}


@dataclass(frozen=True)
class DerivedKnot:
    base: "SeifertSurgery"
    script: tuple[TwistStep, ...]

    def __post_init__(self):
        if not self.script:
            raise ValueError("a derived knot needs a nonempty twist script")
        if not isinstance(self.base.knot, TorusKnotId):
            raise ValueError("derived knots are based at torus-knot surgeries")

    @property
    def label(self):
        word = ",".join(f"{s.seiferter_id}:{s.turns}" for s in self.script)
        return f"D[{self.base.knot.label};{self.base.slope}|{word}]"

    def __str__(self):
        return self.label


KnotDescriptor = Union[TorusKnotId, NamedKnot, DerivedKnot]


@dataclass(frozen=True)
class SeifertSurgery:
    knot: KnotDescriptor
    slope: int

    def __post_init__(self):
        if isinstance(self.slope, bool) or not isinstance(self.slope, int):
            raise TypeError("surgery slopes are integers")

    @property
    def key(self):
        """Stable text key, also the command-line literal for this vertex."""
        return f"{self.knot.label},{self.slope}"

    @property
    def label(self):
        return f"{self.knot.label}({self.slope})"

    @property
    def in_torus_subcomplex(self):
        return isinstance(self.knot, TorusKnotId)

    def __str__(self):
        return f"({self.knot.label}, {self.slope})"


def canonical_torus_knot(p, q):
    """Canonical id of T(p,q).

    T(p,q) = T(q,p) = T(-p,-q); any pair with min(|p|,|q|) <= 1 is the unknot.
    """
    if p == 0 and q == 0:
        raise NonCoprime("T(0,0) is not a knot")
    if gcd(abs(p), abs(q)) != 1:
        raise NonCoprime(f"gcd(|{p}|,|{q}|) = {gcd(abs(p), abs(q))} > 1")
    a, b = abs(p), abs(q)
    if min(a, b) <= 1:
        return UNKNOT
    sign = 1 if (p > 0) == (q > 0) else -1
    return TorusKnotId(sign * max(a, b), min(a, b))


def mirror(k):
    if k.is_unknot:
        return k
    return TorusKnotId(-k.p, k.q)


def spreader_conjecture_predicate(p, q, m):
    """The pattern every known spreader (T(p,q), m) follows."""
    return q in (1, 2) or m in (p * q - 1, p * q, p * q + 1)


_TORUS_RE = re.compile(r"^T\(\s*(-?\d+)\s*,\s*(-?\d+)\s*\)$")
_DERIVED_RE = re.compile(r"^D\[(?P<knot>[^;]+);(?P<slope>-?\d+)\|(?P<word>[^\]]+)\]$")


def parse_knot(text):
    """Parse ``T(p,q)``, ``O``, ``D[T(p,q);m|id:turns,...]`` or a knot name.

    Derived words carry no linking numbers; callers that need them resolve
    the steps against the catalog.
    """
    text = text.strip()
    if text == "O":
        return UNKNOT
    match = _TORUS_RE.match(text)
    if match:
        return canonical_torus_knot(int(match.group(1)), int(match.group(2)))
    match = _DERIVED_RE.match(text)
    if match:
        base = SeifertSurgery(parse_knot(match.group("knot")), int(match.group("slope")))
        steps = []
        for item in match.group("word").split(","):
            sid, _, turns = item.rpartition(":")
            steps.append(TwistStep(sid, int(turns)))
        return DerivedKnot(base, tuple(steps))
    if not text:
        raise ValueError("empty knot literal")
    return NamedKnot(text)


def parse_surgery(text):
    """Parse the literal ``K,m`` (e.g. ``T(-3,2),-7`` or ``P(-2,3,7),18``)."""
    knot, sep, slope = text.strip().rpartition(",")
    if not sep:
        raise ValueError(f"surgery literal {text!r} must look like 'K,m'")
    try:
        m = int(slope)
    except ValueError:
        raise ValueError(f"slope {slope!r} is not an integer") from None
    return SeifertSurgery(parse_knot(knot), m)
