"""Partial elimination filtration: worked values, chain structure, and the
degree-slice counting identity."""

import pytest

from innerproj.groebner import (
    Ideal,
    eliminate,
    ideal_contains_ideal,
    ideal_equal,
)
from innerproj.fixtures import rnc
from innerproj.parser import parse_polynomial
from innerproj.pei import dimension_identity, partial_elim, stabilization
from innerproj.poly import PolyRing


def make_ideal(varnames, gens):
    ring = PolyRing(tuple(varnames))
    return Ideal(ring, [parse_polynomial(ring, s) for s in gens])


@pytest.fixture(scope="module")
def cubic_filtration():
    ideal = make_ideal(
        ("x0", "x1", "x2", "x3"),
        ["x0*x2 - x1^2", "x0*x1 - x1*x3 - x2^2", "x0^2 - x0*x3 - x1*x2"],
    )
    return stabilization(ideal)


# -- worked example ----------------------------------------------------------

def test_cubic_layers(cubic_filtration):
    filt = cubic_filtration
    sub = filt.ideal.ring.drop_front(1)
    k0_expected = Ideal(sub, [parse_polynomial(sub, "x1^3 - x1*x2*x3 - x2^3")])
    k1_expected = Ideal(
        sub, [parse_polynomial(sub, "x1"), parse_polynomial(sub, "x2")]
    )
    k2_expected = Ideal(sub, [parse_polynomial(sub, "1")])
    assert ideal_equal(filt.step(0), k0_expected)
    assert ideal_equal(filt.step(1), k1_expected)
    assert ideal_equal(filt.step(2), k2_expected)


def test_cubic_stabilization_data(cubic_filtration):
    filt = cubic_filtration
    assert filt.stabilization_index == 2
    assert filt.max_front_degree == 2
    assert len(filt.steps) == 3
    assert ideal_equal(filt.stable_ideal, filt.steps[2])


def test_conic_layers():
    filt = stabilization(rnc(2).to_ideal())
    assert filt.step(0).is_zero()
    sub = filt.ideal.ring.drop_front(1)
    assert ideal_equal(filt.step(1), Ideal(sub, [parse_polynomial(sub, "x2")]))
    assert filt.stabilization_index == 1
    assert filt.max_front_degree == 1


def test_pure_front_power():
    filt = stabilization(make_ideal(("x0", "x1"), ["x0^2"]))
    assert filt.step(0).is_zero()
    assert filt.step(1).is_zero()
    assert not filt.step(2).is_zero()
    assert (filt.stabilization_index, filt.max_front_degree) == (2, 2)


# -- chain structure ---------------------------------------------------------

def test_layers_ascend(cubic_filtration, rnc4_ideal, two_planes_ideal):
    for filt in (
        cubic_filtration,
        stabilization(rnc4_ideal),
        stabilization(two_planes_ideal),
    ):
        for lower, upper in zip(filt.steps, filt.steps[1:]):
            assert ideal_contains_ideal(upper, lower)


def test_layer_zero_is_the_elimination_ideal(
    rnc3_ideal, rnc4_ideal, two_planes_ideal
):
    for ideal in (rnc3_ideal, rnc4_ideal, two_planes_ideal):
        assert ideal_equal(stabilization(ideal).step(0), eliminate(ideal))


def test_step_clamps_to_the_stable_layer(cubic_filtration):
    filt = cubic_filtration
    assert filt.step(1000) is filt.stable_ideal


def test_partial_elim_agrees_with_filtration_steps(rnc4_ideal):
    filt = stabilization(rnc4_ideal)
    for i, step in enumerate(filt.steps):
        assert ideal_equal(partial_elim(rnc4_ideal, i), step)
    beyond = partial_elim(rnc4_ideal, filt.max_front_degree + 3)
    assert ideal_equal(beyond, filt.stable_ideal)


# -- degree-slice identity ---------------------------------------------------

def test_dimension_identity_on_curves(rnc3_ideal, rnc4_ideal):
    for ideal in (rnc3_ideal, rnc4_ideal):
        filt = stabilization(ideal)
        for m in range(7):
            report = dimension_identity(filt, m)
            assert report.ok
            assert report.total == report.ideal_dim


def test_dimension_identity_on_surfaces(two_planes_ideal, g24_ideal):
    for ideal, upto in ((two_planes_ideal, 6), (g24_ideal, 5)):
        filt = stabilization(ideal)
        for m in range(upto + 1):
            assert dimension_identity(filt, m).ok


def test_dimension_identity_report_shape(rnc3_ideal):
    report = dimension_identity(stabilization(rnc3_ideal), 3)
    assert report.m == 3
    assert len(report.slice_dims) == 4
    assert report.total == sum(report.slice_dims)


# -- validation --------------------------------------------------------------

def test_negative_index_rejected(rnc3_ideal):
    with pytest.raises(ValueError):
        partial_elim(rnc3_ideal, -1)


def test_univariate_ring_rejected():
    with pytest.raises(ValueError):
        partial_elim(make_ideal(("x",), ["x^2"]), 0)


def test_negative_degree_rejected(cubic_filtration):
    with pytest.raises(ValueError):
        dimension_identity(cubic_filtration, -1)
