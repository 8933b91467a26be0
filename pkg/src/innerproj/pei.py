"""Partial elimination: the filtration of an ideal by front-variable degree.

For a homogeneous ideal I and the block order eliminating the first
variable, write d0(f) for the exponent of that variable in the leading
term.  The i-th partial elimination ideal K_i lives in the subring S on
the remaining variables and is generated by the leading front-coefficients
of the Groebner basis elements g with d0(g) <= i: if g = x0^a * gbar +
(terms of lower front degree) with a = d0(g) <= i, then gbar contributes.

K_0 is the classical elimination ideal, the K_i ascend, and the chain
stabilizes no later than the largest d0 over the basis, which certifies
termination of the search for the stabilization index.
"""

from dataclasses import dataclass
from math import comb

from .groebner import Ideal, ideal_equal
from .hilbert import hilbert
from .monomial import Block


def _front_profile(ideal):
    """Block-order basis elements paired with their front degrees."""
    gb = ideal.groebner(Block(front=1))
    return [(g, g.leading_term(gb.order)[0][0]) for g in gb]


def partial_elim(ideal, i):
    """K_i(ideal) as an ideal of the ring without the front variable."""
    if i < 0:
        raise ValueError("partial elimination index must be >= 0")
    if ideal.ring.nvars < 2:
        raise ValueError("need at least two variables to eliminate one")
    sub = ideal.ring.drop_front(1)
    gens = [g.coeff_of_front_power(a) for g, a in _front_profile(ideal) if a <= i]
    return Ideal(sub, gens)


@dataclass(frozen=True)
class PEIFiltration:
    """The chain K_0 <= K_1 <= ... with its stabilization data.

    steps[i] is K_i for 0 <= i <= max_front_degree; every later K_i equals
    the last entry, so the tuple is the whole filtration.
    """

    ideal: object
    steps: tuple
    stabilization_index: int
    max_front_degree: int

    @property
    def stable_ideal(self):
        return self.steps[-1]

    def step(self, i):
        return self.steps[min(i, len(self.steps) - 1)]


def stabilization(ideal):
    """Compute the full filtration and the least s with K_s = K_{s+1} = ...

    Every basis element has d0 <= max_front_degree =: m, so K_i = K_m for
    all i >= m; the index is the least s with K_s already equal to K_m
    (the chain is ascending, which sandwiches everything between).
    """
    profile = _front_profile(ideal)
    m = max((a for _, a in profile), default=0)
    steps = [partial_elim(ideal, i) for i in range(m + 1)]
    s = m
    while s > 0 and ideal_equal(steps[s - 1], steps[m]):
        s -= 1
    return PEIFiltration(ideal, tuple(steps), s, m)


def _graded_dim(ideal, d):
    """Dimension of the degree-d piece of an ideal, via its Hilbert data."""
    if d < 0:
        return 0
    n = ideal.ring.nvars
    return comb(n - 1 + d, n - 1) - hilbert(ideal).hilbert_function(d)


@dataclass(frozen=True)
class SliceDimReport:
    """Degree-m slice count of an ideal against its filtration layers.

    slice_dims[a] = dim (K_a)_{m-a}; summing over the front exponent a
    recounts every leading monomial x0^a * u of the block-order staircase
    exactly once, so the total must equal dim I_m.
    """

    m: int
    ideal_dim: int
    slice_dims: tuple

    @property
    def total(self):
        return sum(self.slice_dims)

    @property
    def ok(self):
        return self.ideal_dim == self.total


def dimension_identity(filtration, m):
    """Check dim I_m == sum_a dim (K_a)_{m-a} for one total degree m.

    Layers beyond the largest front degree are the stable ideal, and their
    slices keep contributing (the staircase keeps absorbing x0 powers), so
    the sum runs over all 0 <= a <= m."""
    if m < 0:
        raise ValueError("degree must be >= 0")
    lhs = _graded_dim(filtration.ideal, m)
    dims = tuple(_graded_dim(filtration.step(a), m - a) for a in range(m + 1))
    return SliceDimReport(m=m, ideal_dim=lhs, slice_dims=dims)
