"""Classification of integral surgeries on torus knots.

The exterior of T(p,q) fibers over the disk with exceptional fibers of
indices |p| and q; its regular fiber on the boundary torus has slope pq.
Extending the fibration over the filling solid torus of slope m adds a third
fiber of index |pq - m|.
"""
from math import gcd

from .errors import DegenerateSlope, NotTorusKnot, UnknotHost
from .knots import TorusKnotId
from .sfs import (
    ConnectedSumLens,
    Lens,
    LensSpace,
    Prism,
    SeifertInvariants,
    SmallSFS,
    normalize,
    to_lens_parameters,
)

__all__ = [
    "classify_surgery",
    "classify_unknot_surgery",
    "classify_torus_surgery",
    "surgered_invariants",
    "degenerate_description",
]


def _check_nontrivial(p, q):
    if q == 1 and abs(p) > 1:
        raise UnknotHost(f"T({p},1) is the unknot; use classify_unknot_surgery")
    if not (abs(p) > q >= 2) or gcd(abs(p), q) != 1:
        raise NotTorusKnot(f"T({p},{q}) is not a canonical nontrivial torus knot (need |p| > q >= 2, coprime)")


def surgered_invariants(p, q, m):
    """Seifert invariant of T(p,q)(m), m != pq (not normalized).

    The exterior fibration fills S^3 along the meridian, which meets the
    regular fiber once; with a section whose boundary is the meridian the
    two exceptional fibers carry beta_p/p and beta_q/q with
    q*beta_p + p*beta_q = 1.  The slope m curve is (m - pq)*meridian + fiber,
    which gives the third fiber 1/(m - pq).
    """
    _check_nontrivial(p, q)
    if m == p * q:
        raise DegenerateSlope(f"m = pq = {m} gives a degenerate fibration")
    ap = abs(p)
    beta_p = pow(q, -1, ap)
    beta_q, rest = divmod(1 - q * beta_p, p)
    assert rest == 0
    if p < 0:
        beta_p = -beta_p
    fibers = [(ap, beta_p), (q, beta_q)]
    d = m - p * q
    b = 0
    if abs(d) == 1:
        b = d
    else:
        fibers.append((abs(d), 1 if d > 0 else -1))
    return SeifertInvariants(b, tuple(fibers))


def degenerate_description(p, q):
    """T(p,q)(pq) = L(|p|, q) # L(q, p); for p < 0 both summands are mirrored."""
    _check_nontrivial(p, q)
    sign = 1 if p > 0 else -1
    return ConnectedSumLens(LensSpace.of(abs(p), sign * q), LensSpace.of(q, p), degenerate=True)


def classify_surgery(p, q, m):
    """ManifoldDescription of T(p,q)(m) for a canonical nontrivial torus knot."""
    _check_nontrivial(p, q)
    if m == p * q:
        return degenerate_description(p, q)
    inv = surgered_invariants(p, q, m)
    if abs(p * q - m) == 1:
        return Lens(to_lens_parameters(inv), normalize(inv))
    if q == 2 and abs(2 * p - m) == 2:
        return Prism(normalize(inv))
    base = tuple(sorted((q, abs(p), abs(p * q - m))))
    return SmallSFS(normalize(inv), base)


def classify_unknot_surgery(m):
    """O(m) = L(m, 1); S^2 x S^1 for m = 0 and S^3 for m = +-1."""
    return Lens(LensSpace.of(m, 1))


def classify_torus_surgery(knot: TorusKnotId, m):
    if knot.is_unknot:
        return classify_unknot_surgery(m)
    return classify_surgery(knot.p, knot.q, m)


def homology_order(description):
    """|H_1| of a classification result (0 = infinite)."""
    return description.homology_order()

