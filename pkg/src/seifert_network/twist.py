"""Twisting Seifert surgeries along seiferters.

A p-twist along a seiferter c with w = |lk(c, K)| sends (K, m) to
(K_p, m + p*w^2) and c stays a seiferter of the result.  Basic seiferters of
torus knots act on the torus-knot parameters directly; other seiferters
produce a knot that is tracked symbolically unless the catalog or the alias
table names it.
"""
from __future__ import annotations

import json
from enum import Enum

from .catalog import Seiferter, SeiferterKind, default_catalog
from .errors import SeiferterNotValid
from .knots import (
    DerivedKnot,
    NamedKnot,
    SeifertSurgery,
    TorusKnotId,
    TwistStep,
    canonical_torus_knot,
)

__all__ = [
    "BasicKind",
    "ALIASES",
    "twist_along_seiferter",
    "basic_twist",
    "twist_sequence",
    "linking_obstruction",
    "m_equivalence_basic_candidates",
    "resolve_seiferter",
    "load_script",
    "dump_script",
]


class BasicKind(str, Enum):
    SP = "s_p"
    SQ = "s_q"
    MERIDIAN = "c_mu"


_BASIC_BY_KIND = {
    SeiferterKind.BASIC_SP: BasicKind.SP,
    SeiferterKind.BASIC_SQ: BasicKind.SQ,
    SeiferterKind.MERIDIAN: BasicKind.MERIDIAN,
}


def _word(base_knot, base_slope, *steps):
    return (SeifertSurgery(base_knot, base_slope), tuple(TwistStep(sid, t) for sid, t in steps))


# Twist words whose result the literature identifies.
ALIASES = {
    _word(TorusKnotId(-3, 2), -7, ("c_prime", 1)): NamedKnot("P(-2,3,7)"),
    _word(TorusKnotId(-3, 2), -2, ("c_fig8", -2)): NamedKnot("figure-eight"),
}
_UNALIAS = {name: word for word, name in ALIASES.items()}


def _as_word(surgery):
    """(base surgery, script) for a derived or named vertex, else None."""
    knot = surgery.knot
    if isinstance(knot, DerivedKnot):
        return knot.base, knot.script
    if isinstance(knot, NamedKnot):
        return _UNALIAS.get(knot)
    return None


def _from_word(base, script):
    alias = ALIASES.get((base, script))
    if alias is not None:
        return alias
    return DerivedKnot(base, script)


def basic_twist(s, which, n):
    """n full twists of a torus-knot surgery along a basic seiferter.

    Meridian: (T(p,q), m) -> (T(p,q), m+n).
    s_p (lk q): T(p+nq, q), slope m + n q^2.
    s_q (lk p): T(p, q+np), slope m + n p^2.
    """
    knot = s.knot
    if not isinstance(knot, TorusKnotId):
        raise SeiferterNotValid(f"basic seiferters are only defined on torus knots, not {knot.label}")
    which = BasicKind(which)
    p, q, m = knot.p, knot.q, s.slope
    if which is BasicKind.MERIDIAN:
        return SeifertSurgery(knot, m + n)
    if which is BasicKind.SP:
        return SeifertSurgery(canonical_torus_knot(p + n * q, q), m + n * q * q)
    return SeifertSurgery(canonical_torus_knot(p, q + n * p), m + n * p * p)


def resolve_seiferter(seiferter_id, s, catalog=None):
    """The seiferter ``seiferter_id`` at ``s`` or raise SeiferterNotValid.

    At a derived or named vertex only the seiferter twisted last is known to
    survive; it keeps its linking number.
    """
    catalog = catalog or default_catalog()
    if isinstance(s.knot, TorusKnotId):
        c = catalog.get(seiferter_id, s)
        if c is None:
            raise SeiferterNotValid(f"{seiferter_id!r} is not a cataloged seiferter for {s}")
        return c
    word = _as_word(s)
    if word is None:
        raise SeiferterNotValid(f"no twist history known for {s}")
    base, script = word
    last = script[-1]
    if last.seiferter_id != seiferter_id:
        raise SeiferterNotValid(
            f"{seiferter_id!r} is not known to be a seiferter for {s}; only {last.seiferter_id!r} is"
        )
    c = catalog.get(seiferter_id, _step_host(base, script[:-1], catalog))
    if c is None:
        raise SeiferterNotValid(f"{seiferter_id!r} not valid along the twist history of {s}")
    return c


def _step_host(base, prefix, catalog):
    s = base
    for step in prefix:
        s = twist_along_seiferter(s, resolve_seiferter(step.seiferter_id, s, catalog), step.turns, catalog)
    return s


def twist_along_seiferter(s, c, p, catalog=None):
    """p full twists of the surgery ``s`` along the seiferter ``c``."""
    if p == 0:
        return s
    if c.kind.is_basic:
        if not isinstance(s.knot, TorusKnotId) or c.host != s:
            raise SeiferterNotValid(f"{c.id} is a basic seiferter of {c.host}, not of {s}")
        return basic_twist(s, _BASIC_BY_KIND[c.kind], p)
    catalog = catalog or default_catalog()
    known = resolve_seiferter(c.id, s, catalog)
    w = known.linking
    slope = s.slope + p * w * w
    if isinstance(s.knot, TorusKnotId):
        image = known.image_after(p)
        if image is not None:
            return SeifertSurgery(image, slope)
        return SeifertSurgery(_from_word(s, (TwistStep(c.id, p, w),)), slope)
    base, script = _as_word(s)
    last = script[-1]
    total = last.turns + p
    if total == 0:
        script = script[:-1]
    else:
        script = script[:-1] + (TwistStep(c.id, total, w),)
    if not script:
        return base
    if len(script) == 1:
        image = known.image_after(total)
        if image is not None:
            return SeifertSurgery(image, slope)
    return SeifertSurgery(_from_word(base, script), slope)


def twist_sequence(s, script, catalog=None):
    """Left fold of single twists; ``script`` holds TwistStep or (id, turns)."""
    catalog = catalog or default_catalog()
    for index, step in enumerate(script):
        sid, turns = (step.seiferter_id, step.turns) if isinstance(step, TwistStep) else step
        try:
            c = resolve_seiferter(sid, s, catalog)
            s = twist_along_seiferter(s, c, turns, catalog)
        except SeiferterNotValid as exc:
            raise SeiferterNotValid(str(exc), step=index) from None
    return s


def linking_obstruction(lk_target, lk_base, m):
    """Whether lk_target = +-lk_base + x*m for some integer x.

    False certifies that a curve with linking lk_target is not m-equivalent
    to one with linking lk_base.
    """
    if m == 0:
        return lk_target in (lk_base, -lk_base)
    return (lk_target - lk_base) % m == 0 or (lk_target + lk_base) % m == 0


def m_equivalence_basic_candidates(p, q, m, lk):
    """Which of s_p, s_q, c_mu, a regular fiber survive the linking test."""
    bases = {"Sp": q, "Sq": p, "Meridian": 1, "RegularFiber": p * q}
    return {name for name, base in bases.items() if linking_obstruction(lk, base, m)}


def load_script(text):
    """Parse a JSON twist script ``[{"seiferter": id, "turns": k}, ...]``."""
    data = json.loads(text)
    if not isinstance(data, list):
        raise ValueError("a twist script is a JSON array")
    steps = []
    for i, item in enumerate(data):
        try:
            steps.append(TwistStep(str(item["seiferter"]), int(item["turns"])))
        except (KeyError, TypeError, ValueError):
            raise ValueError(f"script entry {i} must be an object with 'seiferter' and 'turns'") from None
    return steps


def dump_script(steps):
    return json.dumps([{"seiferter": s.seiferter_id, "turns": s.turns} for s in steps])


def seiferters_at(s, catalog=None) -> list[Seiferter]:
    """Seiferters known at a vertex of any kind."""
    catalog = catalog or default_catalog()
    if isinstance(s.knot, TorusKnotId):
        return catalog.lookup(s.knot.p, s.knot.q, s.slope)
    word = _as_word(s)
    if word is None:
        return []
    return [resolve_seiferter(word[1][-1].seiferter_id, s, catalog)]
