"""Graded Betti numbers through Koszul homology: frozen tables, closed-form
resolutions, Euler-characteristic bookkeeping, derived numerics, and the
mapping-cone identity on small fixtures."""

import random
from math import comb

import pytest

from innerproj.fixtures import rnc
from innerproj.groebner import Ideal
from innerproj.hilbert import hilbert
from innerproj.linalg import rank_of_columns, sparse_rows_rank
from innerproj.modspec import (
    ideal_spec,
    quotient_spec,
    residue_field_spec,
    subquotient_spec,
)
from innerproj.parser import parse_polynomial
from innerproj.poly import PolyRing
from innerproj.tor import (
    betti_window,
    check_n2p,
    get_complex,
    mapping_cone_identity,
    pd_depth,
    quotient_to_ideal_entry,
)


def make_ideal(varnames, gens):
    ring = PolyRing(tuple(varnames))
    return Ideal(ring, [parse_polynomial(ring, s) for s in gens])


# -- closed-form resolutions -------------------------------------------------

@pytest.mark.parametrize("n", [2, 3, 4])
def test_residue_field_table_is_binomial(n):
    ring = PolyRing(tuple("y%d" % i for i in range(n)))
    bt = betti_window(residue_field_spec(ring), i_max=n, j_max=2)
    for i in range(n + 1):
        assert bt.entry(i, 0) == comb(n, i)
    assert all(v == 0 for (i, j), v in bt.entries.items() if j > 0)
    assert not bt.truncation_flag


def test_maximal_ideal_of_the_plane():
    bt = betti_window(
        ideal_spec(make_ideal(("x", "y"), ["x", "y"])), i_max=2, j_max=2
    )
    assert bt.nonzero() == {(0, 1): 2, (1, 1): 1}


@pytest.mark.parametrize("d", [3, 4, 5])
def test_rational_normal_curve_resolution(d):
    # determinantal 2-regular resolution: beta_{i,2} = (i+1) * C(d, i+2)
    bt = betti_window(ideal_spec(rnc(d).to_ideal()), i_max=d, j_max=4)
    expected = {
        (i, 2): (i + 1) * comb(d, i + 2)
        for i in range(d - 1)
    }
    assert bt.nonzero() == expected
    assert not bt.truncation_flag


def test_two_planes_quotient_table(two_planes_ideal):
    # union of two planes through a point: squarefree monomial ideal whose
    # Taylor complex is minimal, so the table reads off the lcm lattice
    bt = betti_window(quotient_spec(two_planes_ideal), i_max=5, j_max=4)
    assert bt.nonzero() == {(0, 0): 1, (1, 1): 4, (2, 1): 4, (3, 1): 1}


def test_quotient_and_ideal_tables_differ_by_the_index_shift(
    rnc3_ideal, rnc4_ideal, two_planes_ideal
):
    for ideal in (rnc3_ideal, rnc4_ideal, two_planes_ideal):
        btq = betti_window(quotient_spec(ideal), i_max=5, j_max=4)
        bti = betti_window(ideal_spec(ideal), i_max=4, j_max=5)
        assert btq.entry(0, 0) == 1
        for i in range(5):
            for j in range(5):
                assert bti.entry(i, j) == quotient_to_ideal_entry(btq, i, j)


# -- chain-level consistency -------------------------------------------------

def euler_mismatch(spec, upto):
    cx = get_complex(spec)
    bad = []
    n = len(spec.acting)
    for t in range(upto + 1):
        chains = sum(
            (-1) ** i * cx.chain_dim(i, t - i) for i in range(n + 1) if t - i >= 0
        )
        slots = sum(
            (-1) ** i * cx.slot_dim(i, t - i) for i in range(n + 1) if t - i >= 0
        )
        if chains != slots:
            bad.append((t, chains, slots))
    return bad


def test_euler_characteristic_by_degree(rnc3_ideal, rnc4_ideal, two_planes_ideal):
    specs = (
        ideal_spec(rnc3_ideal, over="full"),
        quotient_spec(two_planes_ideal, over="full"),
        subquotient_spec(rnc4_ideal),
    )
    for spec in specs:
        assert euler_mismatch(spec, 6) == []


def test_slot_dim_outside_the_range_is_zero(rnc3_ideal):
    cx = get_complex(ideal_spec(rnc3_ideal))
    n = len(cx.acting)
    assert cx.slot_dim(-1, 2) == 0
    assert cx.slot_dim(0, -1) == 0
    assert cx.slot_dim(n + 1, 2) == 0
    assert cx.hom_dim(1, 2) == cx.slot_dim(1, 2)


def test_multiweight_blocking_matches_the_unblocked_complex(rnc4_ideal):
    spec = ideal_spec(rnc4_ideal)
    blocked = get_complex(spec, weights_on=True)
    plain = get_complex(spec, weights_on=False)
    for i in range(5):
        for j in range(5):
            assert blocked.slot_dim(i, j) == plain.slot_dim(i, j)


# -- derived numerics --------------------------------------------------------

def test_truncated_window_is_loud(rnc4_ideal):
    bt = betti_window(quotient_spec(rnc4_ideal), i_max=1, j_max=1)
    assert bt.truncation_flag
    with pytest.raises(ValueError):
        pd_depth(bt, hilbert(rnc4_ideal))


def test_pd_depth_acm_curves(rnc3_ideal, rnc4_ideal):
    for ideal, pd in ((rnc3_ideal, 2), (rnc4_ideal, 3)):
        bt = betti_window(quotient_spec(ideal))
        report = pd_depth(bt, hilbert(ideal))
        assert (report.pd, report.depth) == (pd, 2)
        assert report.dim_affine == 2
        assert report.is_acm


def test_pd_depth_non_acm_surface(two_planes_ideal):
    report = pd_depth(
        betti_window(quotient_spec(two_planes_ideal)),
        hilbert(two_planes_ideal),
    )
    assert (report.pd, report.depth, report.dim_affine) == (3, 2, 3)
    assert not report.is_acm


def test_linear_strand_width(rnc4_ideal, two_planes_ideal):
    bt4 = betti_window(ideal_spec(rnc4_ideal))
    assert check_n2p(bt4, cap=3) == 3
    bt2 = betti_window(ideal_spec(two_planes_ideal))
    assert check_n2p(bt2, cap=2) == 2


def test_linear_strand_rejects_non_quadratic_generation():
    cubic = make_ideal(("x", "y", "z"), ["x^3 + y^3 + z^3"])
    assert check_n2p(betti_window(ideal_spec(cubic))) == 0
    mixed = make_ideal(("x", "y", "z"), ["x*y", "z^3"])
    assert check_n2p(betti_window(ideal_spec(mixed))) == 0


# -- mapping cone ------------------------------------------------------------

@pytest.mark.parametrize("family", [ideal_spec, quotient_spec])
def test_mapping_cone_identity_small_fixtures(family, rnc3_ideal):
    for ideal in (rnc(2).to_ideal(), rnc3_ideal):
        spec_r = family(ideal, over="full")
        spec_s = family(ideal, over="tail")
        for i in range(5):
            for j in range(5):
                verdict = mapping_cone_identity(spec_r, spec_s, i, j)
                assert verdict.ok, (family.__name__, i, j, verdict)
                assert verdict.lhs == verdict.coker + verdict.ker


# -- sparse rank kernels -----------------------------------------------------

def dense_rank(rows, ncols, p):
    """Independent textbook Gaussian elimination over GF(p)."""
    mat = [[row.get(c, 0) % p for c in range(ncols)] for row in rows]
    rank = 0
    for col in range(ncols):
        pivot = next((r for r in range(rank, len(mat)) if mat[r][col]), None)
        if pivot is None:
            continue
        mat[rank], mat[pivot] = mat[pivot], mat[rank]
        inv = pow(mat[rank][col], p - 2, p)
        mat[rank] = [(v * inv) % p for v in mat[rank]]
        for r in range(len(mat)):
            if r != rank and mat[r][col]:
                f = mat[r][col]
                mat[r] = [(a - f * b) % p for a, b in zip(mat[r], mat[rank])]
        rank += 1
    return rank


@pytest.mark.parametrize("p", [2, 5, 32003])
def test_rank_kernels_agree_with_dense_elimination(p):
    rng = random.Random(p)
    for _ in range(25):
        nrows = rng.randint(1, 8)
        ncols = rng.randint(1, 8)
        rows = []
        for _ in range(nrows):
            row = {
                c: rng.randrange(1, p)
                for c in range(ncols)
                if rng.random() < 0.4
            }
            rows.append(row)
        want = dense_rank(rows, ncols, p)
        # sparse_rows_rank consumes its row dicts, so hand it copies
        assert sparse_rows_rank((dict(r) for r in rows), p) == want
        cols = [{} for _ in range(ncols)]
        for r, row in enumerate(rows):
            for c, v in row.items():
                cols[c][r] = v
        assert rank_of_columns(cols, p) == want
