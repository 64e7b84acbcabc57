from fractions import Fraction
from math import gcd

import pytest
from hypothesis import given, strategies as st

from seifert_network.errors import DegenerateInput, TooManyFibers, UnsupportedFamily
from seifert_network.sfs import (
    LensSpace,
    Prism,
    SeifertInvariants,
    euler_number,
    first_homology_order,
    lens_equivalent,
    normalize,
    reverse_orientation,
    sfs_homeo_equivalent,
    to_lens_parameters,
)
from oracles import (
    h1_order_by_presentation,
    lens_by_slam_dunk,
    lens_classes_brute,
    oriented_lens_classes_brute,
)


def S(b, *fibers):
    return SeifertInvariants(b, tuple(fibers))


@st.composite
def invariants(draw, max_fibers=3, max_alpha=50):
    b = draw(st.integers(-10, 10))
    fibers = []
    for _ in range(draw(st.integers(0, max_fibers))):
        alpha = draw(st.integers(2, max_alpha))
        beta = draw(st.integers(-3 * alpha, 3 * alpha).filter(lambda v, a=alpha: gcd(a, v) == 1))
        fibers.append((alpha, beta))
    return SeifertInvariants(b, tuple(fibers))


def test_normalize_examples():
    assert normalize(S(0, (2, 3))) == S(1, (2, 1))
    assert normalize(S(2, (5, 5))) == S(3)
    b0, x, y = 4, 7, 3
    assert normalize(S(-b0, (2, -1), (2, -1), (x, -y))) == S(-b0 - 3, (2, 1), (2, 1), (x, x - y))
    assert normalize(S(0, (3, 2), (2, 1))).fibers == ((2, 1), (3, 2))


def test_reverse_examples():
    assert normalize(reverse_orientation(S(0))) == S(0)
    s = S(1, (2, 1), (3, 2))
    assert normalize(reverse_orientation(reverse_orientation(s))) == normalize(s)
    assert normalize(reverse_orientation(S(-1, (2, 1), (2, 1), (5, 2)))) == S(-2, (2, 1), (2, 1), (5, 3))


def test_euler_examples():
    assert euler_number(S(0, (2, 1), (2, 1), (3, 1))) == Fraction(-4, 3)
    assert euler_number(S(0, (2, 3))) == euler_number(S(1, (2, 1))) == Fraction(-3, 2)
    s = S(-1, (2, 1), (3, 1), (5, 1))
    assert euler_number(reverse_orientation(s)) == -euler_number(s)


def test_homology_examples():
    assert first_homology_order(S(0, (2, 1), (2, 1), (3, 1))) == 16
    assert first_homology_order(S(-1, (2, 1), (2, 1))) == 0
    assert first_homology_order(S(-2, (2, 1), (3, 2), (5, 4))) == 1


def test_degenerate_rejected():
    d = SeifertInvariants(0, ((2, 1),), degenerate=True)
    for f in (normalize, reverse_orientation, euler_number, first_homology_order):
        with pytest.raises(DegenerateInput):
            f(d)


@given(invariants())
def test_normalize_properties(s):
    n = normalize(s)
    assert n.is_normalized()
    assert normalize(n) == n
    assert euler_number(n) == euler_number(s)
    assert first_homology_order(n) == first_homology_order(s)
    assert euler_number(reverse_orientation(s)) == -euler_number(s)


@given(invariants(max_alpha=20))
def test_homology_matches_presentation_matrix(s):
    assert first_homology_order(s) == h1_order_by_presentation(s.b, s.fibers)


def test_prism_order_formula_and_reversal_exhaustive_small():
    for x in range(3, 31, 2):
        for b in range(-6, 7):
            for y in range(1, x):
                s = S(b, (2, 1), (2, 1), (x, y))
                assert first_homology_order(s) == 4 * abs((b + 1) * x + y)
                expected = S(-b - 3, (2, 1), (2, 1), (x, x - y))
                assert normalize(reverse_orientation(s)) == normalize(expected)
                if gcd(x, y) == 1:
                    assert normalize(reverse_orientation(s)) == expected


def test_lens_space_storage():
    assert LensSpace.of(0, 5) == LensSpace(0, 1)
    assert LensSpace.of(-1, 3) == LensSpace(1, 0)
    assert LensSpace.of(-7, 2) == LensSpace(7, 5)
    assert str(LensSpace(0, 1)) == "S²×S¹" and str(LensSpace(1, 0)) == "S³"
    with pytest.raises(ValueError):
        LensSpace(6, 2)


def test_lens_equivalent_examples():
    assert lens_equivalent(LensSpace(7, 2), LensSpace(7, 4))
    # 2 * 3 = -1 mod 7: homeomorphic, but only by an orientation-reversing map
    assert lens_equivalent(LensSpace(7, 2), LensSpace(7, 3))
    assert not lens_equivalent(LensSpace(7, 2), LensSpace(7, 3), oriented=True)
    assert not lens_equivalent(LensSpace(7, 2), LensSpace(7, 6))
    assert lens_equivalent(LensSpace(5, 1), LensSpace(5, 1))
    assert lens_equivalent(LensSpace(5, 1), LensSpace(5, 4))
    assert not lens_equivalent(LensSpace(5, 1), LensSpace(5, 4), oriented=True)
    assert not lens_equivalent(LensSpace(5, 1), LensSpace(7, 1))


def test_lens_equivalent_matches_brute_force():
    for p in range(2, 60):
        for q in range(1, p):
            if gcd(p, q) != 1:
                continue
            plain = {r for r in range(1, p) if gcd(p, r) == 1 and lens_equivalent(LensSpace(p, q), LensSpace(p, r))}
            oriented = {
                r for r in range(1, p)
                if gcd(p, r) == 1 and lens_equivalent(LensSpace(p, q), LensSpace(p, r), oriented=True)
            }
            if p > 2:
                assert plain == lens_classes_brute(p, q)
                assert oriented == oriented_lens_classes_brute(p, q)


def test_to_lens_parameters_examples():
    assert to_lens_parameters(S(0)) == LensSpace(0, 1)
    assert to_lens_parameters(S(-1, (2, 1))) == LensSpace(1, 0)
    # slam dunk: x = -1/3, then 2 - 1/x = 5, so L(5, 1)
    assert to_lens_parameters(S(0, (2, 1), (3, 1))) == LensSpace(5, 1)
    assert lens_by_slam_dunk(0, ((2, 1), (3, 1))) == (5, 1)
    with pytest.raises(TooManyFibers):
        to_lens_parameters(S(0, (2, 1), (3, 1), (5, 1)))


def test_unknot_presentations():
    # O(m) is L(m, 1) for m > 0 and its mirror for m < 0
    for m in range(-12, 13):
        assert to_lens_parameters(S(-m)) == LensSpace.of(m, 1)


def test_l5_brute_force_presentations():
    # every presentation (b; beta1/alpha1, beta2/alpha2) with small entries of
    # order 5 must reduce to one of L(5,1), L(5,2) and agree with the oracle
    seen = set()
    for b in range(-4, 5):
        for a1 in range(2, 7):
            for b1 in range(1, a1):
                for a2 in range(1, 7):
                    for b2 in range(0 if a2 == 1 else 1, max(a2, 1)):
                        if gcd(a1, b1) != 1 or gcd(a2, b2) != 1:
                            continue
                        s = S(b, (a1, b1), (a2, b2))
                        if first_homology_order(s) != 5:
                            continue
                        lens = to_lens_parameters(s)
                        ref = lens_by_slam_dunk(b, s.fibers)
                        assert lens.p == 5
                        if ref is not None:
                            assert lens_equivalent(lens, LensSpace.of(*ref), oriented=True)
                        seen.add(lens.q)
    assert seen == {1, 2, 3, 4}


@given(invariants(max_fibers=2, max_alpha=30))
def test_lens_reduction_matches_slam_dunk(s):
    ref = lens_by_slam_dunk(s.b, s.fibers)
    lens = to_lens_parameters(s)
    assert lens.p == first_homology_order(s)
    if ref is not None:
        assert lens_equivalent(lens, LensSpace.of(*ref), oriented=True)


def test_sfs_homeo_equivalent():
    s = S(0, (2, 1), (2, 1), (5, 2))
    assert sfs_homeo_equivalent(s, S(0, (2, 3), (2, 1), (5, -3)))
    assert not sfs_homeo_equivalent(s, S(-3, (2, 1), (2, 1), (5, 3)))
    a, b = S(0, (2, 1), (3, 1)), S(-1, (2, 1), (3, 2))
    assert sfs_homeo_equivalent(a, b) == lens_equivalent(to_lens_parameters(a), to_lens_parameters(b), oriented=True)
    with pytest.raises(UnsupportedFamily):
        sfs_homeo_equivalent(S(0, (2, 1), (3, 1), (5, 1), (7, 1)), s)


def test_prism_shape_validated():
    assert Prism(S(-1, (2, 1), (2, 1), (7, 4))).summary() == "prism manifold, S²(2,2,7)"
    with pytest.raises(ValueError):
        Prism(S(0, (2, 1), (3, 1), (7, 4)))
