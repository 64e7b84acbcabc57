"""Exact arithmetic on Seifert invariants over the 2-sphere.

A Seifert fibered space is written ``(b; beta_1/alpha_1, ..., beta_n/alpha_n)``.
The i-th exceptional fiber is filled along the curve ``alpha_i*s_i + beta_i*h``
(``s_i`` a boundary curve of a section, ``h`` the regular fiber) and ``b`` is
the filling ``s_0 + b*h`` of one extra regular neighbourhood.  With this
convention

    |H_1| = |alpha_1 ... alpha_n * (b + sum beta_i/alpha_i)|

and the Euler number is ``e = -(b + sum beta_i/alpha_i)``.  Normalized form
has ``0 < beta_i < alpha_i`` for every fiber.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, prod

from .errors import DegenerateInput, TooManyFibers, UnsupportedFamily

__all__ = [
    "SeifertInvariants",
    "LensSpace",
    "ConnectedSumLens",
    "Lens",
    "Prism",
    "SmallSFS",
    "normalize",
    "reverse_orientation",
    "euler_number",
    "first_homology_order",
    "lens_equivalent",
    "to_lens_parameters",
    "sfs_homeo_equivalent",
]


@dataclass(frozen=True)
class SeifertInvariants:
    b: int
    fibers: tuple[tuple[int, int], ...] = ()
    degenerate: bool = False

    def __post_init__(self):
        fibers = tuple((int(a), int(beta)) for a, beta in self.fibers)
        for alpha, _ in fibers:
            if alpha < 1:
                raise ValueError(f"fiber index {alpha} must be positive")
        object.__setattr__(self, "fibers", fibers)

    @property
    def indices(self):
        return tuple(alpha for alpha, _ in self.fibers)

    def is_normalized(self):
        return all(0 < beta < alpha and gcd(alpha, beta) == 1 for alpha, beta in self.fibers) and (
            list(self.fibers) == sorted(self.fibers)
        )

    def __str__(self):
        parts = [str(self.b)] + [f"{beta}/{alpha}" for alpha, beta in self.fibers]
        return "(" + "; ".join([parts[0], ", ".join(parts[1:])]).rstrip("; ") + ")"

    def to_json(self):
        return {"b": self.b, "fibers": [list(f) for f in self.fibers], "degenerate": self.degenerate}


def _require_nondegenerate(s):
    if s.degenerate:
        raise DegenerateInput("degenerate fibration (index-0 fiber) has no Seifert invariant")


def normalize(s):
    """Unique representative with 0 < beta < alpha, fibers sorted.

    Fibers with beta = 0 mod alpha are absorbed into ``b``.
    """
    _require_nondegenerate(s)
    b = s.b
    fibers = []
    for alpha, beta in s.fibers:
        carry, rest = divmod(beta, alpha)
        b += carry
        if rest:
            g = gcd(alpha, rest)
            if alpha // g >= 2:
                fibers.append((alpha // g, rest // g))
    return SeifertInvariants(b, tuple(sorted(fibers)))


def reverse_orientation(s):
    """Invariant of the orientation-reversed manifold (not normalized)."""
    _require_nondegenerate(s)
    return SeifertInvariants(-s.b, tuple((alpha, -beta) for alpha, beta in s.fibers))


def _rational_sum(s):
    return s.b + sum((Fraction(beta, alpha) for alpha, beta in s.fibers), Fraction(0))


def euler_number(s):
    _require_nondegenerate(s)
    return -_rational_sum(s)


def first_homology_order(s):
    """|H_1| of the manifold; 0 stands for infinite H_1 (Euler number zero)."""
    _require_nondegenerate(s)
    total = prod(s.indices) * _rational_sum(s)
    assert total.denominator == 1
    return abs(total.numerator)


@dataclass(frozen=True, order=True)
class LensSpace:
    """L(p, q); p = 0 is S^2 x S^1 and p = 1 is S^3."""

    p: int
    q: int

    def __post_init__(self):
        if self.p < 0:
            raise ValueError("lens space order must be nonnegative")
        if self.p == 0 and self.q != 1:
            raise ValueError("S^2 x S^1 is stored as L(0,1)")
        if self.p == 1 and self.q != 0:
            raise ValueError("S^3 is stored as L(1,0)")
        if self.p >= 2 and not (0 < self.q < self.p and gcd(self.p, self.q) == 1):
            raise ValueError(f"L({self.p},{self.q}) needs 0 < q < p coprime")

    @classmethod
    def of(cls, p, q):
        """L(|p|, q) with q reduced into range; sign of p is absorbed into q."""
        if p < 0:
            p, q = -p, -q
        if p == 0:
            return cls(0, 1)
        if p == 1:
            return cls(1, 0)
        return cls(p, q % p)

    @property
    def reversed(self):
        return LensSpace.of(self.p, -self.q)

    def __str__(self):
        if self.p == 0:
            return "S²×S¹"
        if self.p == 1:
            return "S³"
        return f"L({self.p},{self.q})"


def lens_equivalent(a, b, oriented=False):
    """Homeomorphism of lens spaces (orientation-preserving if ``oriented``).

    L(p,q) = L(p,q') iff q' = +-q^(+-1) mod p; the oriented classification
    drops the outer sign.
    """
    if a.p != b.p:
        return False
    p = a.p
    if p <= 2:
        return True
    signs = (1,) if oriented else (1, -1)
    inv = pow(a.q, -1, p)
    return any((b.q - e * a.q) % p == 0 or (b.q - e * inv) % p == 0 for e in signs)


def to_lens_parameters(s):
    """Lens space of a fibration with at most two exceptional fibers.

    The two fibered solid tori meet along a torus with basis (s, h); their
    meridians are alpha_1*s + beta_1'*h and -alpha_2*s + beta_2*h.  Writing
    the second meridian in a basis (meridian, longitude) of the first torus
    gives L(p, q).  The convention makes O(m) = L(m, 1) for m > 0.
    """
    n = normalize(s)
    if len(n.fibers) > 2:
        raise TooManyFibers(f"{len(n.fibers)} exceptional fibers; a lens space has at most 2")
    fibers = list(n.fibers) + [(1, 0)] * (2 - len(n.fibers))
    (a1, b1), (a2, b2) = fibers
    b1 += n.b * a1
    det = a1 * b2 + a2 * b1
    if det == 0:
        return LensSpace(0, 1)
    # longitude (x, y) of the first torus: a1*y - b1*x = 1
    if a1 == 1:
        x, y = 0, 1
    else:
        x = (-pow(b1, -1, a1)) % a1
        y = (1 + b1 * x) // a1
    a = -a2 * y - b2 * x
    sign = 1 if det > 0 else -1
    return LensSpace.of(abs(det), sign * a)


def sfs_homeo_equivalent(s, t):
    """Orientation-preserving, fiber-structure-aware equivalence test.

    Two invariants agree if their normalized forms coincide (fibers are kept
    sorted, which accounts for permutations) or if both reduce to oriented
    equivalent lens spaces.
    """
    ns, nt = normalize(s), normalize(t)
    if len(ns.fibers) > 3 or len(nt.fibers) > 3:
        raise UnsupportedFamily("only fibrations with at most 3 exceptional fibers are supported")
    if ns == nt:
        return True
    if len(ns.fibers) <= 2 and len(nt.fibers) <= 2:
        return lens_equivalent(to_lens_parameters(ns), to_lens_parameters(nt), oriented=True)
    return False


# Classification results -------------------------------------------------


@dataclass(frozen=True)
class ConnectedSumLens:
    first: LensSpace
    second: LensSpace
    degenerate: bool = True
    kind: str = field(default="connected_sum_lens", init=False)

    def homology_order(self):
        return self.first.p * self.second.p

    def summary(self):
        return f"connected sum {self.first} # {self.second}"

    def to_json(self):
        return {"kind": self.kind, "summands": [[self.first.p, self.first.q], [self.second.p, self.second.q]],
                "degenerate": self.degenerate}


@dataclass(frozen=True)
class Lens:
    lens: LensSpace
    invariants: SeifertInvariants | None = None
    kind: str = field(default="lens", init=False)

    def homology_order(self):
        return self.lens.p

    def summary(self):
        if self.lens.p in (0, 1):
            return str(self.lens)
        return f"lens space {self.lens}"

    def to_json(self):
        out = {"kind": self.kind, "lens": [self.lens.p, self.lens.q]}
        if self.invariants is not None:
            out["invariants"] = self.invariants.to_json()
        return out


@dataclass(frozen=True)
class Prism:
    invariants: SeifertInvariants
    kind: str = field(default="prism", init=False)

    def __post_init__(self):
        idx = self.invariants.indices
        if len(idx) != 3 or idx[0] != 2 or idx[1] != 2 or idx[2] < 3 or idx[2] % 2 == 0:
            raise ValueError(f"prism manifolds fiber over S²(2,2,x), x odd >= 3; got {idx}")

    @property
    def x(self):
        return self.invariants.indices[2]

    def homology_order(self):
        return first_homology_order(self.invariants)

    def summary(self):
        return f"prism manifold, S²(2,2,{self.x})"

    def to_json(self):
        return {"kind": self.kind, "base": [2, 2, self.x], "invariants": self.invariants.to_json()}


@dataclass(frozen=True)
class SmallSFS:
    invariants: SeifertInvariants
    base: tuple[int, int, int]
    kind: str = field(default="small_sfs", init=False)

    def homology_order(self):
        return first_homology_order(self.invariants)

    def summary(self):
        a1, a2, a3 = self.base
        return f"Seifert fibered space over S²({a1},{a2},{a3})"

    def to_json(self):
        return {"kind": self.kind, "base": list(self.base), "invariants": self.invariants.to_json()}
