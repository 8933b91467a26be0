"""Exponent vectors and monomial orders.

A monomial is a dense tuple of non-negative ints, one entry per ring
variable.  Orders expose a sort key (larger key = larger monomial) so that
comparisons, sorting and leading-term extraction all share one code path.
Keys are componentwise additive in the exponent vector, which is exactly
the multiplicativity law m1 > m2  =>  m*m1 > m*m2.
"""

from itertools import combinations

GT, EQ, LT = "GT", "EQ", "LT"


def total_degree(ev):
    return sum(ev)


def mono_mul(a, b):
    return tuple(x + y for x, y in zip(a, b))


def mono_divides(a, b):
    """True when a | b componentwise."""
    return all(x <= y for x, y in zip(a, b))


def mono_div(a, b):
    """Quotient a / b; caller guarantees divisibility."""
    return tuple(x - y for x, y in zip(a, b))


def mono_lcm(a, b):
    return tuple(max(x, y) for x, y in zip(a, b))


def mono_gcd(a, b):
    return tuple(min(x, y) for x, y in zip(a, b))


def monomials_of_degree(nvars, d):
    """All exponent tuples of total degree d, in a fixed deterministic order.

    Yields ascending-lex tuples: for nvars=2, d=2 gives (0,2), (1,1), (2,0).
    """
    if nvars == 0:
        if d == 0:
            yield ()
        return
    # stars and bars via combinations of bar positions, emitted in an order
    # that is ascending lexicographic on the exponent tuple
    for bars in combinations(range(d + nvars - 1), nvars - 1):
        ev = []
        prev = -1
        for b in bars:
            ev.append(b - prev - 1)
            prev = b
        ev.append(d + nvars - 2 - prev)
        yield tuple(ev)


class GrevLex:
    """Graded reverse lexicographic order.

    Higher total degree wins; on equal degree the monomial with the smaller
    exponent on the last variable that differs (scanning from the right)
    wins.
    """

    name = "grevlex"

    def key(self, ev):
        return (sum(ev), tuple(-e for e in reversed(ev)))

    def compare(self, a, b):
        ka, kb = self.key(a), self.key(b)
        if ka > kb:
            return 1
        if ka < kb:
            return -1
        return 0

    def __repr__(self):
        return "GrevLex()"

    def __eq__(self, other):
        return type(other) is GrevLex

    def __hash__(self):
        return hash("grevlex")


class Lex:
    """Pure lexicographic order with the first variable largest."""

    name = "lex"

    def key(self, ev):
        return tuple(ev)

    def compare(self, a, b):
        if a > b:
            return 1
        if a < b:
            return -1
        return 0

    def __repr__(self):
        return "Lex()"

    def __eq__(self, other):
        return type(other) is Lex

    def __hash__(self):
        return hash("lex")


class Block:
    """Elimination order: compare the first `front` variables by grevlex,
    break ties with `inner` on the remaining variables.

    Any monomial involving a front variable beats any monomial free of
    them, which is what makes the x0-free part of a Groebner basis generate
    the elimination ideal.
    """

    name = "block"

    def __init__(self, front=1, inner=None):
        if front < 1:
            raise ValueError("block order needs at least one front variable")
        self.front = front
        self.inner = inner if inner is not None else GrevLex()

    def key(self, ev):
        head, tail = ev[: self.front], ev[self.front:]
        return (sum(head), tuple(-e for e in reversed(head)), self.inner.key(tail))

    def compare(self, a, b):
        ka, kb = self.key(a), self.key(b)
        if ka > kb:
            return 1
        if ka < kb:
            return -1
        return 0

    def __repr__(self):
        return "Block(front=%d, inner=%r)" % (self.front, self.inner)

    def __eq__(self, other):
        return (
            type(other) is Block
            and other.front == self.front
            and other.inner == self.inner
        )

    def __hash__(self):
        return hash(("block", self.front, self.inner))


def compare_monomials(order, a, b):
    """Three-way comparison returning one of the tokens GT, EQ, LT."""
    if len(a) != len(b):
        raise ValueError("exponent vectors of unequal length: %r vs %r" % (a, b))
    c = order.compare(a, b)
    return GT if c > 0 else (LT if c < 0 else EQ)
