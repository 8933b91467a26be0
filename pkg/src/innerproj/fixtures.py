"""Generators for the classical varieties the verification suite runs on.

Every fixture is produced directly from its standard determinantal or
monomial description, carries torus multiweights (so the homology engine
can split into weight blocks), and labels at least one smooth rational
point — e0 whenever the variety passes through a coordinate point, which
keeps the weights alive down whole projection chains.
"""

from itertools import combinations

from .docs import document
from .field import DEFAULT_CHAR
from .monomial import monomials_of_degree


def _minor(a, b, c, d):
    """Expression string for the 2x2 minor a*d - b*c."""
    return "%s*%s - %s*%s" % (a, d, b, c)


def rnc(d, char=DEFAULT_CHAR):
    """Rational normal curve of degree d in P^d: 2x2 minors of the
    catalecticant [x0..x_{d-1}; x1..x_d]; parameterized by (1:t:...:t^d)."""
    if d < 2:
        raise ValueError("rnc needs d >= 2")
    names = tuple("x%d" % i for i in range(d + 1))
    gens = [
        _minor(names[i], names[i + 1], names[j], names[j + 1])
        for i in range(d)
        for j in range(i + 1, d)
    ]
    weights = [(d - i, i) for i in range(d + 1)]
    points = [("p0", tuple(1 if i == 0 else 0 for i in range(d + 1))),
              ("p1", tuple(1 for _ in range(d + 1)))]
    return document(
        names, gens, char=char, weights=weights, points=points,
        meta=[("kind", "rnc"), ("d", d), ("smooth_points", "p0 p1")],
    )


def scroll(*degrees, char=DEFAULT_CHAR):
    """Rational normal scroll S(a_1,...,a_k): 2x2 minors of the
    concatenated catalecticant blocks [z_i_0..z_i_{a_i-1}; z_i_1..z_i_{a_i}]."""
    if not degrees or any(a < 1 for a in degrees):
        raise ValueError("scroll needs block degrees a_i >= 1")
    k = len(degrees)
    names = []
    weights = []
    top = []  # (name of row-0 entry, name of row-1 entry) per matrix column
    for i, a in enumerate(degrees, start=1):
        block = ["z%d_%d" % (i, j) for j in range(a + 1)]
        names.extend(block)
        for j in range(a + 1):
            weights.append(tuple(1 if t == i - 1 else 0 for t in range(k)) + (j,))
        top.extend((block[j], block[j + 1]) for j in range(a))
    gens = [
        _minor(top[s][0], top[s][1], top[t][0], top[t][1])
        for s in range(len(top))
        for t in range(s + 1, len(top))
    ]
    points = [("p0", tuple(1 if n == names[0] else 0 for n in names)),
              ("p1", tuple(1 for _ in names))]
    return document(
        names, gens, char=char, weights=weights, points=points,
        meta=[("kind", "scroll"), ("degrees", " ".join(str(a) for a in degrees)),
              ("smooth_points", "p0 p1")],
    )


_VERONESE_BUDGET = 35  # ambient coordinates


class BudgetExceeded(ValueError):
    """A requested fixture is past the configured size limits."""


def veronese(n, d, char=DEFAULT_CHAR):
    """Degree-d Veronese embedding of P^n: one coordinate y<exponents> per
    degree-d monomial; generators are the degree-2 binomial kernel of the
    monomial map (one canonical binomial per extra factorization), which
    generates the whole ideal for d >= 2."""
    if n < 1 or d < 2:
        raise ValueError("veronese needs n >= 1 and d >= 2")
    monos = list(monomials_of_degree(n + 1, d))
    if len(monos) > _VERONESE_BUDGET:
        raise BudgetExceeded(
            "veronese(%d,%d) needs %d coordinates, over the budget of %d"
            % (n, d, len(monos), _VERONESE_BUDGET)
        )
    names = tuple("y" + "".join(str(e) for e in m) for m in monos)
    name_of = dict(zip(monos, names))
    by_product = {}
    for a_idx in range(len(monos)):
        for b_idx in range(a_idx, len(monos)):
            a, b = monos[a_idx], monos[b_idx]
            total = tuple(x + y for x, y in zip(a, b))
            by_product.setdefault(total, []).append((a, b))
    gens = []
    for total in sorted(by_product, reverse=True):
        first, *rest = by_product[total]
        for a, b in rest:
            gens.append(
                "%s*%s - %s*%s"
                % (name_of[a], name_of[b], name_of[first[0]], name_of[first[1]])
            )
    weights = [m for m in monos]
    e0 = tuple(1 if i == 0 else 0 for i in range(len(monos)))
    ones = tuple(1 for _ in monos)
    return document(
        names, gens, char=char, weights=weights,
        points=[("p0", e0), ("p1", ones)],
        meta=[("kind", "veronese"), ("n", n), ("d", d), ("smooth_points", "p0 p1")],
    )


def segre(m, n, char=DEFAULT_CHAR):
    """Segre embedding of P^m x P^n: 2x2 minors of the generic
    (m+1) x (n+1) matrix (z_ij)."""
    if not (1 <= m <= 9 and 1 <= n <= 9):
        raise ValueError("segre expects 1 <= m, n <= 9")
    names = tuple("z%d%d" % (i, j) for i in range(m + 1) for j in range(n + 1))
    gens = [
        _minor("z%d%d" % (i, j), "z%d%d" % (i, l), "z%d%d" % (k, j), "z%d%d" % (k, l))
        for i in range(m + 1) for k in range(i + 1, m + 1)
        for j in range(n + 1) for l in range(j + 1, n + 1)
    ]
    weights = [
        tuple(1 if t == i else 0 for t in range(m + 1))
        + tuple(1 if t == j else 0 for t in range(n + 1))
        for i in range(m + 1) for j in range(n + 1)
    ]
    e0 = tuple(1 if k == 0 else 0 for k in range(len(names)))
    ones = tuple(1 for _ in names)
    return document(
        names, gens, char=char, weights=weights,
        points=[("p0", e0), ("p1", ones)],
        meta=[("kind", "segre"), ("m", m), ("n", n), ("smooth_points", "p0 p1")],
    )


def plucker24(char=DEFAULT_CHAR):
    """The Grassmannian of lines in P^4 under its Pluecker embedding in
    P^9: one coordinate p_ab per pair a<b from {0..4}, one three-term
    relation per 4-subset.  p01 comes first, so e0 is the distinguished
    (torus-fixed, smooth) point of the fixture."""
    pairs = list(combinations(range(5), 2))
    names = tuple("p%d%d" % ab for ab in pairs)
    name_of = {ab: "p%d%d" % ab for ab in pairs}
    gens = []
    for sub in combinations(range(5), 4):
        a, b, c, d = sub
        gens.append(
            "%s*%s - %s*%s + %s*%s"
            % (
                name_of[(a, b)], name_of[(c, d)],
                name_of[(a, c)], name_of[(b, d)],
                name_of[(a, d)], name_of[(b, c)],
            )
        )
    weights = [
        tuple(1 if t in ab else 0 for t in range(5)) for ab in pairs
    ]
    e0 = tuple(1 if k == 0 else 0 for k in range(10))
    return document(
        names, gens, char=char, weights=weights,
        points=[("p0", e0)],
        meta=[("kind", "plucker24"), ("smooth_points", "p0")],
    )


def two_planes_p4(char=DEFAULT_CHAR):
    """Two 2-planes in P^4 meeting in one point: V(x0,x1) united with
    V(x2,x3); the marked point e0 sits on one plane away from the
    intersection, so the union is smooth there."""
    names = ("x0", "x1", "x2", "x3", "x4")
    gens = ("x0*x2", "x0*x3", "x1*x2", "x1*x3")
    weights = [tuple(1 if t == i else 0 for t in range(5)) for i in range(5)]
    return document(
        names, gens, char=char, weights=weights,
        points=[("p0", (1, 0, 0, 0, 0)), ("psing", (0, 0, 0, 0, 1))],
        meta=[("kind", "two_planes_p4"), ("smooth_points", "p0")],
    )


_KINDS = {
    "rnc": (rnc, "rnc <d>"),
    "scroll": (scroll, "scroll <a1> [a2 ...]"),
    "veronese": (veronese, "veronese <n> <d>"),
    "segre": (segre, "segre <m> <n>"),
    "plucker24": (plucker24, "plucker24"),
    "two_planes_p4": (two_planes_p4, "two_planes_p4"),
}


def kinds():
    return {k: usage for k, (_, usage) in sorted(_KINDS.items())}


def gen_variety(kind, params=(), char=DEFAULT_CHAR):
    """Build a fixture document by kind name and integer parameters."""
    if kind not in _KINDS:
        raise ValueError(
            "unknown fixture kind %r (have: %s)" % (kind, ", ".join(sorted(_KINDS)))
        )
    fn, usage = _KINDS[kind]
    try:
        return fn(*params, char=char)
    except TypeError as exc:
        raise ValueError("bad parameters for %s (usage: %s)" % (kind, usage)) from exc
