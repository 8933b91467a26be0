"""Groebner bases: worked examples, cross-checks against an independent
implementation, reduction properties, and elimination soundness."""

import random

import pytest
import sympy

from innerproj.groebner import (
    Ideal,
    eliminate,
    ideal_contains_ideal,
    ideal_equal,
    normal_form,
    s_polynomial,
)
from innerproj.monomial import Block, GrevLex
from innerproj.parser import parse_polynomial
from innerproj.poly import PolyRing, poly_str

P = 32003


def make_ideal(varnames, gens, char=P):
    ring = PolyRing(tuple(varnames), char=char)
    return Ideal(ring, [parse_polynomial(ring, s) for s in gens])


def leading_monomials(ideal, order):
    return {g.leading_term(order)[0] for g in ideal.groebner(order)}


# -- worked examples --------------------------------------------------------

def test_twisted_cubic_grevlex_basis():
    ideal = make_ideal(
        ("x0", "x1", "x2", "x3"),
        ["x0*x2 - x1^2", "x0*x3 - x1*x2", "x1*x3 - x2^2"],
    )
    gb = ideal.groebner(GrevLex())
    assert len(gb) == 3
    assert leading_monomials(ideal, GrevLex()) == {
        (0, 2, 0, 0),
        (0, 1, 1, 0),
        (0, 0, 2, 0),
    }


def test_block_order_reveals_elimination_ideal():
    ideal = make_ideal(
        ("x0", "x1", "x2", "x3"),
        ["x0*x2 - x1^2", "x0*x1 - x1*x3 - x2^2", "x0^2 - x0*x3 - x1*x2"],
    )
    image = eliminate(ideal)
    expected = make_ideal(
        ("x1", "x2", "x3"), ["x1^3 - x1*x2*x3 - x2^3"]
    )
    assert ideal_equal(image, expected)


def test_principal_ideal_basis_is_the_generator_made_monic():
    ideal = make_ideal(("x", "y"), ["3*x^2*y - 6*y^3"])
    gb = list(ideal.groebner(GrevLex()))
    assert len(gb) == 1
    assert poly_str(gb[0]) == "x^2*y - 2*y^3"


def test_unit_ideal_reduces_to_one():
    ideal = make_ideal(("x", "y"), ["x^2 + 1", "x^2"])
    gb = list(ideal.groebner(GrevLex()))
    assert len(gb) == 1
    assert poly_str(gb[0]) == "1"


def test_zero_ideal():
    ring = PolyRing(("x", "y"))
    ideal = Ideal(ring, [ring.zero()])
    assert ideal.is_zero()
    assert len(ideal.groebner(GrevLex())) == 0


# -- cross-oracle against sympy ---------------------------------------------

def _random_gens(rng, nvars, ngens, max_deg=2):
    names = tuple("t%d" % i for i in range(nvars))
    ring = PolyRing(names)
    gens = []
    for _ in range(ngens):
        terms = {}
        for _ in range(rng.randint(1, 4)):
            ev = [0] * nvars
            for _ in range(rng.randint(0, max_deg)):
                ev[rng.randrange(nvars)] += 1
            terms[tuple(ev)] = rng.randint(1, P - 1)
        f = ring.from_terms(terms)
        if not f.is_zero():
            gens.append(f)
    return ring, gens


def _sympy_reduced_basis(ring, gens):
    symbols = sympy.symbols(" ".join(ring.varnames))
    if ring.nvars == 1:
        symbols = (symbols,)
    sy_gens = []
    for g in gens:
        expr = 0
        for ev, c in g.terms.items():
            term = sympy.Integer(c)
            for s, e in zip(symbols, ev):
                term *= s**e
            expr += term
        sy_gens.append(expr)
    basis = sympy.groebner(sy_gens, *symbols, order="grevlex", modulus=P)
    out = set()
    for expr in basis.exprs:
        poly = sympy.Poly(expr, *symbols, modulus=P)
        terms = {
            tuple(mono): int(coeff) % P for mono, coeff in poly.terms()
        }
        out.add(tuple(sorted(terms.items())))
    return out


def _our_reduced_basis(ring, gens):
    gb = Ideal(ring, gens).groebner(GrevLex())
    return {tuple(sorted(g.terms.items())) for g in gb}


@pytest.mark.parametrize("seed", range(6))
def test_reduced_basis_matches_sympy(seed):
    rng = random.Random(seed)
    ring, gens = _random_gens(rng, nvars=3, ngens=rng.randint(1, 3))
    if not gens:
        return
    assert _our_reduced_basis(ring, gens) == _sympy_reduced_basis(ring, gens)


# -- reduction properties ---------------------------------------------------

@pytest.fixture(scope="module")
def cubic_gb():
    ideal = make_ideal(
        ("x0", "x1", "x2", "x3"),
        ["x0*x2 - x1^2", "x0*x3 - x1*x2", "x1*x3 - x2^2"],
    )
    return ideal, ideal.groebner(GrevLex())


def test_every_s_pair_reduces_to_zero(cubic_gb):
    _, gb = cubic_gb
    basis = list(gb)
    for a in range(len(basis)):
        for b in range(a + 1, len(basis)):
            spoly = s_polynomial(basis[a], basis[b], gb.order)
            assert gb.normal_form(spoly).is_zero()


def test_normal_form_is_idempotent_and_ideal_stable(cubic_gb):
    ideal, gb = cubic_gb
    rng = random.Random(11)
    ring = ideal.ring
    for _ in range(10):
        terms = {}
        for _ in range(rng.randint(1, 5)):
            ev = [0] * ring.nvars
            for _ in range(rng.randint(0, 3)):
                ev[rng.randrange(ring.nvars)] += 1
            terms[tuple(ev)] = rng.randint(1, P - 1)
        f = ring.from_terms(terms)
        nf = gb.normal_form(f)
        assert (gb.normal_form(nf) - nf).is_zero()
        # adding an ideal element never changes the normal form
        shifted = f + list(gb)[0] * ring.var(1)
        assert (gb.normal_form(shifted) - nf).is_zero()
        # the difference from the normal form lies in the ideal
        assert ideal.contains(f - nf)


def test_membership(cubic_gb):
    ideal, _ = cubic_gb
    ring = ideal.ring
    x0, x1, x2, x3 = ring.gens()
    assert ideal.contains((x0 * x2 - x1 * x1) * x3)
    assert not ideal.contains(x0 * x2)
    assert ideal.contains(ring.zero())


def test_generator_order_does_not_change_the_ideal():
    gens = ["x0*x2 - x1^2", "x0*x3 - x1*x2", "x1*x3 - x2^2"]
    a = make_ideal(("x0", "x1", "x2", "x3"), gens)
    b = make_ideal(("x0", "x1", "x2", "x3"), list(reversed(gens)))
    assert ideal_equal(a, b)
    assert leading_monomials(a, GrevLex()) == leading_monomials(b, GrevLex())


def test_containment_order():
    big = make_ideal(("x", "y"), ["x", "y"])
    small = make_ideal(("x", "y"), ["x^2 - x*y"])
    assert ideal_contains_ideal(big, small)
    assert not ideal_contains_ideal(small, big)


# -- elimination ------------------------------------------------------------

def test_eliminated_generators_are_front_free_members(cubic_gb):
    ideal, _ = cubic_gb
    image = eliminate(ideal)
    assert image.ring.nvars == ideal.ring.nvars - 1
    for g in image.gens:
        lifted = g.lift_front(ideal.ring)
        assert ideal.contains(lifted)


def test_elimination_captures_every_front_free_member():
    # x0 - x1 brings x1^2 - x2 into the x0-free subring
    ideal = make_ideal(("x0", "x1", "x2"), ["x0 - x1", "x0*x1 - x2"])
    image = eliminate(ideal)
    expected = make_ideal(("x1", "x2"), ["x1^2 - x2"])
    assert ideal_equal(image, expected)


def test_eliminate_needs_two_variables():
    ideal = make_ideal(("x",), ["x^2"])
    with pytest.raises(ValueError):
        eliminate(ideal)


def test_block_order_front_width_validation():
    with pytest.raises(ValueError):
        Block(front=0)
