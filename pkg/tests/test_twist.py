import json

import pytest
from hypothesis import given, strategies as st

from seifert_network.catalog import default_catalog
from seifert_network.classifier import classify_torus_surgery
from seifert_network.errors import SeiferterNotValid
from seifert_network.knots import UNKNOT, DerivedKnot, NamedKnot, SeifertSurgery, TorusKnotId, TwistStep
from seifert_network.twist import (
    BasicKind,
    basic_twist,
    dump_script,
    linking_obstruction,
    load_script,
    m_equivalence_basic_candidates,
    resolve_seiferter,
    seiferters_at,
    twist_along_seiferter,
    twist_sequence,
)

T32m = TorusKnotId(-3, 2)


def at(knot, m):
    return SeifertSurgery(knot, m)


def test_motivating_twists():
    cat = default_catalog()
    s = at(T32m, -7)
    assert twist_along_seiferter(s, cat.get("c_prime", s), 1) == at(NamedKnot("P(-2,3,7)"), 18)
    s = at(T32m, -2)
    assert twist_along_seiferter(s, cat.get("c_fig8", s), -2) == at(NamedKnot("figure-eight"), -2)
    for sid in ("c_prime", "c_mu", "s_p"):
        s = at(T32m, -7)
        assert twist_along_seiferter(s, cat.get(sid, s), 0) == s


def test_type_iii_image():
    cat = default_catalog()
    s = at(TorusKnotId(-7, 4), -27)
    c = cat.get("c_III_source", s)
    assert c.linking == 6
    assert twist_along_seiferter(s, c, 1) == at(TorusKnotId(5, 2), 9)
    back = at(TorusKnotId(5, 2), 9)
    assert twist_along_seiferter(back, cat.get("c_III", back), -1) == s


def test_unknown_products_stay_symbolic():
    s = at(T32m, -7)
    out = twist_sequence(s, [("c_prime", 2)])
    assert isinstance(out.knot, DerivedKnot) and out.slope == -7 + 2 * 25
    assert twist_sequence(out, [("c_prime", -2)]) == s
    assert twist_sequence(s, [("c_prime", 1), ("c_prime", 1)]) == out


def test_basic_twists():
    assert basic_twist(at(T32m, -7), BasicKind.MERIDIAN, 1) == at(T32m, -6)
    assert basic_twist(at(TorusKnotId(3, 2), 0), BasicKind.SP, 1) == at(TorusKnotId(5, 2), 4)
    assert basic_twist(at(TorusKnotId(3, 2), 0), BasicKind.SQ, -1) == at(UNKNOT, -9)


@given(st.sampled_from([(p, q) for p in range(-25, 26) for q in range(2, abs(p)) if __import__("math").gcd(abs(p), q) == 1]),
       st.integers(-60, 60), st.integers(-6, 6), st.sampled_from(list(BasicKind)))
def test_basic_twist_closure_and_homology(pq, dm, n, which):
    p, q = pq
    s = at(TorusKnotId(p, q), p * q + dm)
    t = basic_twist(s, which, n)
    assert isinstance(t.knot, TorusKnotId)
    w = {BasicKind.MERIDIAN: 1, BasicKind.SP: q, BasicKind.SQ: abs(p)}[which]
    assert t.slope - s.slope == n * w * w
    # the image is a genuine surgery: |H_1| = |slope|
    assert classify_torus_surgery(t.knot, t.slope).homology_order() == abs(t.slope)
    if which is not BasicKind.MERIDIAN and not t.knot.is_unknot:
        assert t.slope - t.knot.p * t.knot.q == s.slope - p * q


def test_basic_twist_matches_braid_full_twist():
    # one full twist on q strands adds q to p for the (p, q) torus braid
    for q in range(2, 7):
        for p in range(q + 1, 20):
            if __import__("math").gcd(p, q) == 1:
                assert basic_twist(at(TorusKnotId(p, q), 0), BasicKind.SP, 1).knot == TorusKnotId(p + q, q)


def test_sequence_examples_and_errors():
    s = at(T32m, -7)
    assert twist_sequence(s, []) == s
    assert twist_sequence(s, [TwistStep("c_prime", 1), TwistStep("c_prime", -1)]) == s
    assert twist_sequence(s, [("c_mu", 5)]) == at(T32m, -2)
    with pytest.raises(SeiferterNotValid, match="step 1"):
        twist_sequence(s, [("c_prime", 1), ("c_mu", 1)])
    with pytest.raises(SeiferterNotValid, match="step 0"):
        twist_sequence(s, [("c_fig8", 1)])
    with pytest.raises(SeiferterNotValid):
        resolve_seiferter("c_mu", at(NamedKnot("trefoil-ish"), 1))


@given(st.integers(-20, 20), st.integers(-20, 20))
def test_group_action_on_slopes(a, b):
    s = at(T32m, -7)
    cat = default_catalog()
    c = cat.get("c_prime", s)
    one = twist_along_seiferter(twist_along_seiferter(s, c, a, cat), c, b, cat)
    assert one == twist_along_seiferter(s, c, a + b, cat)
    assert one.slope == -7 + (a + b) * 25


def test_slope_formula_all_entries():
    cat = default_catalog()
    hosts = [(-3, 2, -7), (-3, 2, -2), (5, 3, 15), (7, 2, 11), (5, 2, 9), (-7, 4, -27), (7, 3, 20), (3, 2, 0)]
    for p, q, m in hosts:
        s = at(TorusKnotId(p, q), m)
        for c in cat.lookup(p, q, m):
            for turns in range(-50, 51, 7):
                assert twist_along_seiferter(s, c, turns, cat).slope - m == turns * c.linking ** 2


def test_linking_obstruction_examples():
    assert not linking_obstruction(8, 1, 15)
    assert not linking_obstruction(6, 1, 9)
    for w, m in [(0, 0), (4, 0), (5, 17), (-3, 2)]:
        assert linking_obstruction(w, w, m)
    assert linking_obstruction(-4, 4, 0) and not linking_obstruction(3, 4, 0)
    for n in range(2, 1001):
        m = 2 * n * n + n - 1
        assert not linking_obstruction(2 * n + 2, 1, m)
        assert not linking_obstruction(2 * n + 2, n * (2 * n + 1), m)


def test_m_equivalence_candidates():
    assert m_equivalence_basic_candidates(5, 2, 9, 6) == set()
    assert "Sp" in m_equivalence_basic_candidates(7, 3, 5, 3)
    # the type IV host at n = 2 is (T(3,2), 5): 5 -+ 2, 5 -+ 3, 5 -+ 1, 5 -+ 6 all avoid 5Z
    assert m_equivalence_basic_candidates(3, 2, 5, 5) == set()
    for n in range(2, 1001):
        assert m_equivalence_basic_candidates(2 * n - 1, n, n * (2 * n - 1) - 1, 2 * n + 1) == set()
    assert m_equivalence_basic_candidates(5, 3, 14, 9) == {"Sq"}


def test_script_json_round_trip():
    steps = [TwistStep("c_prime", 1), TwistStep("c_mu", -3)]
    assert load_script(dump_script(steps)) == steps
    with pytest.raises(ValueError):
        load_script(json.dumps({"seiferter": "c"}))
    with pytest.raises(ValueError):
        load_script(json.dumps([{"turns": 1}]))


def test_seiferters_at_derived_vertex():
    s = twist_sequence(at(T32m, -2), [("c_fig8", -1)])
    assert [c.id for c in seiferters_at(s)] == ["c_fig8"]
    assert seiferters_at(at(NamedKnot("mystery"), 0)) == []
