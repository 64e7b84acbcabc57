import random
from math import gcd

import pytest

from seifert_network.classifier import (
    classify_surgery,
    classify_torus_surgery,
    classify_unknot_surgery,
    degenerate_description,
    homology_order,
    surgered_invariants,
)
from seifert_network.errors import DegenerateSlope, NotTorusKnot, UnknotHost
from seifert_network.knots import UNKNOT, TorusKnotId
from seifert_network.sfs import (
    ConnectedSumLens,
    Lens,
    LensSpace,
    Prism,
    SeifertInvariants,
    SmallSFS,
    first_homology_order,
    lens_equivalent,
    normalize,
    reverse_orientation,
    sfs_homeo_equivalent,
    to_lens_parameters,
)
from oracles import lens_by_slam_dunk


def test_examples():
    d = classify_surgery(5, 2, 9)
    assert isinstance(d, Lens) and homology_order(d) == 9
    assert d.lens == LensSpace(9, 7)
    d = classify_surgery(3, 2, 6)
    assert d == ConnectedSumLens(LensSpace(3, 2), LensSpace(2, 1))
    assert d.summary() == "connected sum L(3,2) # L(2,1)"
    d = classify_surgery(7, 2, 16)
    assert isinstance(d, Prism) and d.summary() == "prism manifold, S²(2,2,7)"
    d = classify_surgery(-3, 2, -2)
    assert isinstance(d, SmallSFS) and d.base == (2, 3, 4)


def test_surgered_invariants_examples():
    s = surgered_invariants(3, 2, 1)
    assert sorted(s.indices) == [2, 3, 5] and first_homology_order(s) == 1
    assert normalize(s) == SeifertInvariants(-2, ((2, 1), (3, 2), (5, 4)))
    assert first_homology_order(surgered_invariants(7, 3, 0)) == 0
    assert to_lens_parameters(surgered_invariants(5, 3, 14)).p == 14
    with pytest.raises(DegenerateSlope):
        surgered_invariants(5, 3, 15)


def test_degenerate_description():
    assert degenerate_description(3, 2) == ConnectedSumLens(LensSpace(3, 2), LensSpace(2, 1))
    assert degenerate_description(5, 2) == ConnectedSumLens(LensSpace(5, 2), LensSpace(2, 1))
    d = degenerate_description(-5, 3)
    assert d.homology_order() == 15
    # the mirror of L(5,3) # L(3,2) summand by summand
    assert lens_equivalent(d.first, LensSpace(5, 3).reversed, oriented=True)
    assert lens_equivalent(d.second, LensSpace(3, 2).reversed, oriented=True)


def test_errors():
    with pytest.raises(UnknotHost):
        classify_surgery(5, 1, 3)
    with pytest.raises(NotTorusKnot):
        classify_surgery(2, 3, 1)
    with pytest.raises(NotTorusKnot):
        classify_surgery(6, 4, 1)


def test_unknot_branch():
    assert classify_unknot_surgery(0).lens == LensSpace(0, 1)
    assert classify_unknot_surgery(1).lens == LensSpace(1, 0)
    assert classify_unknot_surgery(7).lens == LensSpace(7, 1)
    assert classify_torus_surgery(UNKNOT, -7).lens == LensSpace(7, 6)
    assert classify_torus_surgery(TorusKnotId(-3, 2), -7).lens.p == 7


def _pairs(limit):
    for p in range(-limit, limit + 1):
        for q in range(2, abs(p)):
            if gcd(abs(p), q) == 1:
                yield p, q


def test_random_homology_consistency():
    rng = random.Random(20240611)
    pairs = list(_pairs(50))
    for _ in range(10_000):
        p, q = rng.choice(pairs)
        m = rng.randint(-200, 200)
        if m == p * q:
            continue
        assert first_homology_order(surgered_invariants(p, q, m)) == abs(m)


def test_lens_surgeries_match_classical_parameter_and_oracle():
    # T(p,q)(pq +- 1) = L(|m|, q^2) up to orientation
    for p, q in _pairs(25):
        for m in (p * q - 1, p * q + 1):
            d = classify_surgery(p, q, m)
            assert isinstance(d, Lens)
            assert lens_equivalent(d.lens, LensSpace.of(m, q * q))
            inv = surgered_invariants(p, q, m)
            ref = lens_by_slam_dunk(inv.b, inv.fibers)
            if ref is not None:
                assert lens_equivalent(d.lens, LensSpace.of(*ref), oriented=True)


def test_prism_shape():
    for p in [p for p in range(-41, 42) if p % 2 and abs(p) >= 3]:
        for m in (2 * p - 2, 2 * p + 2):
            d = classify_surgery(p, 2, m)
            assert isinstance(d, Prism)
            (a1, b1), (a2, b2), (x, y) = d.invariants.fibers
            assert (a1, b1, a2, b2, x) == (2, 1, 2, 1, abs(p)) and 0 < y < x


def test_mirror_covariance():
    for p, q in _pairs(15):
        for m in range(p * q - 8, p * q + 9):
            if m == p * q:
                continue
            left = surgered_invariants(-p, q, -m)
            right = reverse_orientation(surgered_invariants(p, q, m))
            assert sfs_homeo_equivalent(left, right)


def test_zero_slope_is_small_sfs():
    d = classify_surgery(7, 3, 0)
    assert isinstance(d, SmallSFS) and d.homology_order() == 0
