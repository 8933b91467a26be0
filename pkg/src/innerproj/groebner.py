"""Buchberger's algorithm, normal forms and elimination.

Pairs are processed in normal selection order (smallest lcm in the active
order).  Both classical pair criteria are applied: coprime leading terms
reduce to zero trivially, and a pair may be dropped when a third basis
element divides its lcm and both side pairs were already completed.  The
returned basis is fully interreduced and monic, hence canonical for the
order, which is what makes ideal equality a tuple comparison.
"""

import heapq

from .field import inv_mod
from .monomial import (
    Block,
    GrevLex,
    mono_div,
    mono_divides,
    mono_gcd,
    mono_lcm,
    mono_mul,
)
from .poly import Polynomial


class Ideal:
    """Immutable ideal given by generators; Groebner bases are cached per
    order on the instance."""

    def __init__(self, ring, gens):
        gens = [g for g in gens if isinstance(g, Polynomial) and not g.is_zero()]
        for g in gens:
            if g.ring != ring:
                raise ValueError("generator outside the ring: %r" % g)
        seen = []
        for g in gens:
            if g not in seen:
                seen.append(g)
        self.ring = ring
        self.gens = tuple(seen)
        self._gb_cache = {}

    def __repr__(self):
        return "Ideal(%d gens over %s)" % (len(self.gens), " ".join(self.ring.varnames))

    def is_zero(self):
        return not self.gens

    def is_homogeneous(self):
        return all(g.is_homogeneous() for g in self.gens)

    def is_multihomogeneous(self):
        """True when the ring carries weights and every generator has a
        single multiweight; enables weight-block splitting downstream."""
        if self.ring.weights is None:
            return False
        return all(g.multiweight() is not None for g in self.gens)

    def max_gen_degree(self):
        return max((g.degree() for g in self.gens), default=0)

    def groebner(self, order=None):
        order = order or GrevLex()
        if order not in self._gb_cache:
            self._gb_cache[order] = buchberger(self, order)
        return self._gb_cache[order]

    def contains(self, f):
        if f.is_zero():
            return True
        gb = self.groebner()
        return normal_form(f, gb.basis, gb.order).is_zero()


class GroebnerBasis:
    """Reduced monic Groebner basis, elements sorted descending by leading
    term."""

    def __init__(self, ideal, order, basis):
        self.ideal = ideal
        self.order = order
        self.basis = tuple(basis)
        self._lead = tuple(g.leading_term(order)[0] for g in self.basis)

    def leading_exponents(self):
        return self._lead

    def normal_form(self, f):
        return normal_form(f, self.basis, self.order)

    def __iter__(self):
        return iter(self.basis)

    def __len__(self):
        return len(self.basis)


def normal_form(f, basis, order):
    """Full remainder of f under division by basis: no term of the result
    is divisible by any leading term.  Unique when basis is a Groebner
    basis, deterministic regardless (divisors tried in basis order)."""
    elems = [g for g in basis if not g.is_zero()]
    if not elems or f.is_zero():
        return f
    p = f.ring.char
    lead = [g.leading_term(order) for g in elems]
    work = dict(f.terms)
    out = {}
    while work:
        ev = max(work, key=order.key)
        c = work[ev]
        for g, (lt_ev, lt_c) in zip(elems, lead):
            if mono_divides(lt_ev, ev):
                shift = mono_div(ev, lt_ev)
                mult = c * inv_mod(lt_c, p) % p
                for gev, gc in g.terms.items():
                    tgt = mono_mul(gev, shift)
                    v = (work.get(tgt, 0) - mult * gc) % p
                    if v:
                        work[tgt] = v
                    else:
                        work.pop(tgt, None)
                break
        else:
            out[ev] = c
            del work[ev]
    return Polynomial(f.ring, out)


def s_polynomial(f, g, order):
    (fe, fc), (ge, gc) = f.leading_term(order), g.leading_term(order)
    lcm = mono_lcm(fe, ge)
    p = f.ring.char
    mf = f.ring.monomial(mono_div(lcm, fe), inv_mod(fc, p))
    mg = g.ring.monomial(mono_div(lcm, ge), inv_mod(gc, p))
    return mf * f - mg * g


def _autoreduce(basis, order):
    basis = [g.monic(order) for g in basis if not g.is_zero()]
    changed = True
    while changed:
        changed = False
        for i in range(len(basis)):
            rest = basis[:i] + basis[i + 1:]
            h = normal_form(basis[i], rest, order)
            if h != basis[i]:
                changed = True
                if h.is_zero():
                    basis = rest
                    break
                basis[i] = h.monic(order)
    uniq = []
    for g in basis:
        if g not in uniq:
            uniq.append(g)
    uniq.sort(key=lambda g: order.key(g.leading_term(order)[0]), reverse=True)
    return uniq


def buchberger(ideal, order):
    """Reduced Groebner basis of ideal under order."""
    basis = [g.monic(order) for g in ideal.gens]
    basis = _autoreduce(basis, order)
    if not basis:
        return GroebnerBasis(ideal, order, ())
    lead = [g.leading_term(order)[0] for g in basis]
    pending = []
    in_pending = set()
    completed = set()

    def push(i, j):
        lcm = mono_lcm(lead[i], lead[j])
        heapq.heappush(pending, (order.key(lcm), i, j))
        in_pending.add((i, j))

    for j in range(len(basis)):
        for i in range(j):
            push(i, j)

    while pending:
        _, i, j = heapq.heappop(pending)
        if (i, j) not in in_pending:
            continue
        in_pending.discard((i, j))
        completed.add((i, j))
        li, lj = lead[i], lead[j]
        if all(x == 0 for x in mono_gcd(li, lj)):
            continue  # coprime leading terms: S-polynomial reduces to zero
        lcm = mono_lcm(li, lj)
        skip = False
        for k in range(len(basis)):
            if k in (i, j):
                continue
            if mono_divides(lead[k], lcm):
                a = (min(i, k), max(i, k))
                b = (min(j, k), max(j, k))
                if a in completed and b in completed:
                    skip = True
                    break
        if skip:
            continue
        rem = normal_form(s_polynomial(basis[i], basis[j], order), basis, order)
        if rem.is_zero():
            continue
        rem = rem.monic(order)
        basis.append(rem)
        lead.append(rem.leading_term(order)[0])
        t = len(basis) - 1
        for i2 in range(t):
            push(i2, t)

    return GroebnerBasis(ideal, order, _autoreduce(basis, order))


def eliminate(ideal, front=1):
    """Intersection of ideal with the subring on all variables after the
    first `front`, computed from a block-order Groebner basis.

    The front-free basis elements form a Groebner basis of the intersection
    for the inner order; they are re-rostered into the smaller ring.
    """
    if front < 1 or front >= ideal.ring.nvars:
        raise ValueError("front block must leave at least one variable")
    gb = ideal.groebner(Block(front=front))
    sub = ideal.ring.drop_front(front)
    kept = []
    for g in gb:
        if all(ev[k] == 0 for ev in g.terms for k in range(front)):
            kept.append(Polynomial(sub, {ev[front:]: c for ev, c in g.terms.items()}))
    return Ideal(sub, kept)


def ideal_equal(a, b):
    """Ideal equality via canonical reduced grevlex bases."""
    if a.ring != b.ring:
        return False
    return a.groebner(GrevLex()).basis == b.groebner(GrevLex()).basis


def ideal_contains_ideal(big, small):
    return all(big.contains(g) for g in small.gens)
