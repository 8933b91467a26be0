"""Arithmetic helpers for prime fields GF(p).

Scalars are plain Python ints kept in the range [0, p).  The ambient
characteristic travels with the polynomial ring, not with each scalar, so
these helpers take p explicitly.
"""

DEFAULT_CHAR = 32003


def is_prime(n):
    """Deterministic Miller-Rabin, exact for any n that fits in 64 bits."""
    if n < 2:
        return False
    for q in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        if n % q == 0:
            return n == q
    d = n - 1
    r = 0
    while d % 2 == 0:
        d //= 2
        r += 1
    for a in (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37):
        x = pow(a, d, n)
        if x in (1, n - 1):
            continue
        for _ in range(r - 1):
            x = x * x % n
            if x == n - 1:
                break
        else:
            return False
    return True


def inv_mod(a, p):
    """Multiplicative inverse of a modulo the prime p."""
    a %= p
    if a == 0:
        raise ZeroDivisionError("inverse of 0 in GF(%d)" % p)
    return pow(a, p - 2, p)


def balanced(c, p):
    """Representative of c in (-p/2, p/2], used when printing coefficients."""
    c %= p
    return c - p if c > p // 2 else c
