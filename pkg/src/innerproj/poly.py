"""Sparse multivariate polynomials over GF(p).

A Polynomial stores {exponent tuple: coefficient} with coefficients in
[1, p); the zero polynomial has an empty term dict.  Rings are lightweight
value objects carrying the variable roster, the characteristic and an
optional multiweight per variable (a tuple of ints of fixed length).
Weights are bookkeeping only: when every generator of an ideal is
multihomogeneous for them, downstream homology computations can split
matrices into weight blocks, and they are dropped whenever a coordinate
change destroys multihomogeneity.
"""

from .field import DEFAULT_CHAR, balanced, inv_mod, is_prime
from .linalg import dense_inverse
from .monomial import GrevLex, total_degree


class PolyRing:
    """Polynomial ring GF(p)[varnames]."""

    __slots__ = ("varnames", "char", "nvars", "weights")

    def __init__(self, varnames, char=DEFAULT_CHAR, weights=None):
        varnames = tuple(varnames)
        if len(set(varnames)) != len(varnames):
            raise ValueError("duplicate variable names: %r" % (varnames,))
        if not is_prime(char):
            raise ValueError("characteristic %d is not prime" % char)
        if weights is not None:
            weights = tuple(tuple(w) for w in weights)
            if len(weights) != len(varnames):
                raise ValueError("need one weight per variable")
            if len({len(w) for w in weights}) > 1:
                raise ValueError("weights must share one length")
        object.__setattr__(self, "varnames", varnames)
        object.__setattr__(self, "char", char)
        object.__setattr__(self, "nvars", len(varnames))
        object.__setattr__(self, "weights", weights)

    def __setattr__(self, name, value):
        raise AttributeError("PolyRing is immutable")

    def __eq__(self, other):
        return (
            isinstance(other, PolyRing)
            and self.varnames == other.varnames
            and self.char == other.char
            and self.weights == other.weights
        )

    def __hash__(self):
        return hash((self.varnames, self.char, self.weights))

    def __repr__(self):
        return "PolyRing(%s, char=%d)" % (" ".join(self.varnames), self.char)

    def zero(self):
        return Polynomial(self, {})

    def one(self):
        return Polynomial(self, {(0,) * self.nvars: 1})

    def var(self, i):
        ev = [0] * self.nvars
        ev[i] = 1
        return Polynomial(self, {tuple(ev): 1})

    def gens(self):
        return [self.var(i) for i in range(self.nvars)]

    def monomial(self, ev, c=1):
        c %= self.char
        return Polynomial(self, {tuple(ev): c} if c else {})

    def from_terms(self, terms):
        clean = {}
        for ev, c in terms.items():
            c %= self.char
            if c:
                clean[tuple(ev)] = c
        return Polynomial(self, clean)

    def drop_front(self, k=1):
        """Ring on the variables after the first k (used by elimination)."""
        w = self.weights[k:] if self.weights is not None else None
        return PolyRing(self.varnames[k:], self.char, weights=w)

    def without_weights(self):
        if self.weights is None:
            return self
        return PolyRing(self.varnames, self.char, weights=None)

    def mono_weight(self, ev):
        """Multiweight of a monomial; None when the ring carries no weights."""
        if self.weights is None:
            return None
        k = len(self.weights[0]) if self.weights else 0
        acc = [0] * k
        for e, w in zip(ev, self.weights):
            if e:
                for i in range(k):
                    acc[i] += e * w[i]
        return tuple(acc)


class Polynomial:
    __slots__ = ("ring", "terms", "_hash")

    def __init__(self, ring, terms):
        object.__setattr__(self, "ring", ring)
        object.__setattr__(self, "terms", terms)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("Polynomial is immutable")

    # -- predicates ---------------------------------------------------------
    def is_zero(self):
        return not self.terms

    def degree(self):
        """Total degree; -1 for the zero polynomial."""
        return max((total_degree(ev) for ev in self.terms), default=-1)

    def is_homogeneous(self):
        degs = {total_degree(ev) for ev in self.terms}
        return len(degs) <= 1

    def multiweight(self):
        """Common multiweight of all terms, or None if mixed / unweighted."""
        if self.ring.weights is None or not self.terms:
            return None
        seen = {self.ring.mono_weight(ev) for ev in self.terms}
        return seen.pop() if len(seen) == 1 else None

    # -- arithmetic ---------------------------------------------------------
    def __add__(self, other):
        other = self._coerce(other)
        p = self.ring.char
        out = dict(self.terms)
        for ev, c in other.terms.items():
            v = (out.get(ev, 0) + c) % p
            if v:
                out[ev] = v
            else:
                out.pop(ev, None)
        return Polynomial(self.ring, out)

    def __neg__(self):
        p = self.ring.char
        return Polynomial(self.ring, {ev: p - c for ev, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __mul__(self, other):
        if isinstance(other, int):
            return self.scale(other)
        other = self._coerce(other)
        p = self.ring.char
        out = {}
        for ev1, c1 in self.terms.items():
            for ev2, c2 in other.terms.items():
                ev = tuple(a + b for a, b in zip(ev1, ev2))
                v = (out.get(ev, 0) + c1 * c2) % p
                if v:
                    out[ev] = v
                else:
                    out.pop(ev, None)
        return Polynomial(self.ring, out)

    __rmul__ = __mul__

    def __pow__(self, n):
        if n < 0:
            raise ValueError("negative power of a polynomial")
        out = self.ring.one()
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base if n > 1 else base
            n >>= 1
        return out

    def scale(self, c):
        c %= self.ring.char
        if not c:
            return self.ring.zero()
        p = self.ring.char
        return Polynomial(self.ring, {ev: (a * c) % p for ev, a in self.terms.items()})

    def monic(self, order):
        if self.is_zero():
            return self
        _, c = self.leading_term(order)
        return self.scale(inv_mod(c, self.ring.char))

    # -- structure ----------------------------------------------------------
    def leading_term(self, order):
        """(exponent, coefficient) of the largest term under order."""
        if not self.terms:
            raise ValueError("zero polynomial has no leading term")
        ev = max(self.terms, key=order.key)
        return ev, self.terms[ev]

    def sorted_terms(self, order=None):
        order = order or GrevLex()
        return sorted(self.terms.items(), key=lambda t: order.key(t[0]), reverse=True)

    def coeff_of_front_power(self, a):
        """Polynomial q in the remaining variables with x0^a * q = the part
        of self whose first exponent is exactly a (front variable divided out).
        """
        sub = {ev[1:]: c for ev, c in self.terms.items() if ev[0] == a}
        return Polynomial(self.ring.drop_front(), sub)

    def front_degree(self):
        """Largest exponent of the first variable over all terms; -1 if zero."""
        return max((ev[0] for ev in self.terms), default=-1)

    def derivative(self, i):
        p = self.ring.char
        out = {}
        for ev, c in self.terms.items():
            e = ev[i]
            if not e:
                continue
            v = (c * e) % p
            if v:
                dev = list(ev)
                dev[i] -= 1
                out[tuple(dev)] = v
        return Polynomial(self.ring, out)

    def evaluate(self, point):
        """Value at a point (sequence of ints), computed mod p."""
        p = self.ring.char
        total = 0
        for ev, c in self.terms.items():
            v = c
            for x, e in zip(point, ev):
                if e:
                    v = v * pow(x % p, e, p) % p
            total = (total + v) % p
        return total

    def lift_front(self, new_ring):
        """View a polynomial of a dropped-front ring inside new_ring by
        prepending zero exponents."""
        pad = new_ring.nvars - self.ring.nvars
        return Polynomial(new_ring, {(0,) * pad + ev: c for ev, c in self.terms.items()})

    def _coerce(self, other):
        if isinstance(other, Polynomial):
            if other.ring != self.ring:
                raise ValueError("mixed rings: %r vs %r" % (self.ring, other.ring))
            return other
        if isinstance(other, int):
            return self.ring.from_terms({(0,) * self.ring.nvars: other})
        raise TypeError("cannot combine Polynomial with %r" % type(other))

    # -- hashing / comparison ----------------------------------------------
    def __eq__(self, other):
        return (
            isinstance(other, Polynomial)
            and self.ring == other.ring
            and self.terms == other.terms
        )

    def __hash__(self):
        if self._hash is None:
            object.__setattr__(
                self, "_hash", hash((self.ring, tuple(sorted(self.terms.items()))))
            )
        return self._hash

    def __repr__(self):
        return "Polynomial(%s)" % poly_str(self)

    def __str__(self):
        return poly_str(self)


def poly_str(f, order=None):
    """Canonical rendering: terms descending in the order (grevlex default),
    coefficients balanced around zero, explicit * and ^ operators."""
    if f.is_zero():
        return "0"
    p = f.ring.char
    parts = []
    for ev, c in f.sorted_terms(order):
        c = balanced(c, p)
        sign = "-" if c < 0 else "+"
        mag = abs(c)
        factors = []
        for name, e in zip(f.ring.varnames, ev):
            if e == 1:
                factors.append(name)
            elif e > 1:
                factors.append("%s^%d" % (name, e))
        if not factors:
            body = str(mag)
        else:
            body = "*".join(factors)
            if mag != 1:
                body = "%d*%s" % (mag, body)
        parts.append((sign, body))
    first_sign, first_body = parts[0]
    out = ("-" if first_sign == "-" else "") + first_body
    for sign, body in parts[1:]:
        out += " %s %s" % (sign, body)
    return out


class LinearChange:
    """Invertible linear substitution x_i -> sum_j M[i][j] x_j.

    Rows are images of the old variables in terms of the new ones.  The
    matrix is validated invertible over GF(p) at construction.
    """

    def __init__(self, ring, matrix):
        n = ring.nvars
        matrix = tuple(tuple(x % ring.char for x in row) for row in matrix)
        if len(matrix) != n or any(len(r) != n for r in matrix):
            raise ValueError("matrix must be %d x %d" % (n, n))
        inv = dense_inverse([list(r) for r in matrix], ring.char)
        if inv is None:
            raise ValueError("linear change is singular over GF(%d)" % ring.char)
        self.ring = ring
        self.matrix = matrix
        self._inv = tuple(tuple(x % ring.char for x in row) for row in inv)

    def inverse(self):
        return LinearChange(self.ring, self._inv)

    def is_monomial_change(self):
        """True for scaled permutation matrices, which permute multiweights
        instead of destroying them."""
        return all(sum(1 for x in row if x) == 1 for row in self.matrix) and all(
            sum(1 for row in self.matrix if row[j]) == 1 for j in range(self.ring.nvars)
        )

    def image_ring(self):
        """Ring for substituted polynomials: weights survive only a scaled
        permutation (permuted to match), otherwise they are dropped."""
        ring = self.ring
        if ring.weights is None:
            return ring
        if self.is_monomial_change():
            new_w = [None] * ring.nvars
            for i, row in enumerate(self.matrix):
                j = next(k for k, x in enumerate(row) if x)
                new_w[j] = ring.weights[i]
            return PolyRing(ring.varnames, ring.char, weights=tuple(new_w))
        return ring.without_weights()

    def apply(self, f):
        return substitute_linear(f, self)


def substitute_linear(f, change):
    """Apply the substitution x_i -> row_i(change) to f.

    The result lives in change.image_ring(); it equals f composed with the
    linear map, so substitution is a ring homomorphism.
    """
    if f.ring.varnames != change.ring.varnames or f.ring.char != change.ring.char:
        raise ValueError("polynomial and change live in different rings")
    ring = change.image_ring()
    images = [
        Polynomial(ring, {tuple(0 if k != j else 1 for k in range(ring.nvars)): c
                          for j, c in enumerate(row) if c})
        for row in change.matrix
    ]
    # cache powers of each image to keep repeated exponents cheap
    powers = [{0: ring.one()} for _ in images]

    def image_power(i, e):
        cache = powers[i]
        if e not in cache:
            cache[e] = image_power(i, e - 1) * images[i]
        return cache[e]

    out = ring.zero()
    for ev, c in f.terms.items():
        term = ring.from_terms({(0,) * ring.nvars: c})
        for i, e in enumerate(ev):
            if e:
                term = term * image_power(i, e)
        out = out + term
    return out
