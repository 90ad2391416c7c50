"""Dense polynomial kernels over the integers.

Polynomials are plain lists of Python ints, lowest degree first; the zero
polynomial is ``[]``.  Everything here is exact and allocation-light so the
determinant and Sturm machinery can run over Z[x] instead of Q[x].
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd

ZPoly = list  # list[int]


def trim(a: ZPoly) -> ZPoly:
    while a and a[-1] == 0:
        a.pop()
    return a


def add(a: ZPoly, b: ZPoly) -> ZPoly:
    if len(a) < len(b):
        a, b = b, a
    out = list(a)
    for i, c in enumerate(b):
        out[i] += c
    return trim(out)


def sub(a: ZPoly, b: ZPoly) -> ZPoly:
    n = max(len(a), len(b))
    out = [0] * n
    for i, c in enumerate(a):
        out[i] = c
    for i, c in enumerate(b):
        out[i] -= c
    return trim(out)


def scale(a: ZPoly, c: int) -> ZPoly:
    if c == 0:
        return []
    return [c * x for x in a]


def mul(a: ZPoly, b: ZPoly) -> ZPoly:
    if not a or not b:
        return []
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def deriv(a: ZPoly, order: int = 1) -> ZPoly:
    for _ in range(order):
        if len(a) <= 1:
            return []
        a = [i * a[i] for i in range(1, len(a))]
    return list(a)


def content(a: ZPoly) -> int:
    """Positive gcd of the coefficients (0 for the zero polynomial)."""
    g = 0
    for c in a:
        g = gcd(g, c)
        if g == 1:
            break
    return g


def primitive(a: ZPoly) -> ZPoly:
    """Divide out the content and make the leading coefficient positive."""
    if not a:
        return []
    g = content(a)
    if a[-1] < 0:
        g = -g
    if g == 1:
        return list(a)
    return [c // g for c in a]


def prem(a: ZPoly, b: ZPoly) -> tuple[ZPoly, int]:
    """Pseudo-remainder of a by b.

    Returns ``(r, m)`` with ``m * a = q * b + r`` and ``m = lc(b)**(deg a - deg b + 1)``.
    """
    db = len(b) - 1
    lb = b[-1]
    e = len(a) - len(b) + 1
    if e <= 0:
        return list(a), 1
    m = lb**e
    r = list(a)
    while r and len(r) - 1 >= db:
        shift = len(r) - 1 - db
        lr = r[-1]
        r = [lb * c for c in r]
        for i, c in enumerate(b):
            r[shift + i] -= lr * c
        r.pop()
        trim(r)
        e -= 1
    if e:
        f = lb**e
        r = [f * c for c in r]
    return r, m


def divexact(a: ZPoly, b: ZPoly) -> ZPoly:
    """Quotient a / b in Z[x]; the division must be exact."""
    if not b:
        raise ZeroDivisionError("division by the zero polynomial")
    if not a:
        return []
    db = len(b) - 1
    lb = b[-1]
    r = list(a)
    q = [0] * max(len(a) - db, 0)
    while r and len(r) - 1 >= db:
        shift = len(r) - 1 - db
        c, rem = divmod(r[-1], lb)
        if rem:
            raise ArithmeticError("inexact polynomial division")
        q[shift] = c
        for i, x in enumerate(b):
            r[shift + i] -= c * x
        r.pop()
        trim(r)
    if r:
        raise ArithmeticError("inexact polynomial division")
    return trim(q)


def pgcd(a: ZPoly, b: ZPoly) -> ZPoly:
    """Primitive gcd via the primitive polynomial remainder sequence."""
    a = primitive(a)
    b = primitive(b)
    if len(a) < len(b):
        a, b = b, a
    while b:
        r, _ = prem(a, b)
        a, b = b, primitive(r)
    return a


def eval_scaled(a: ZPoly, x: Fraction) -> int:
    """Return den**deg(a) * a(num/den); same sign as a(x) because den > 0."""
    if not a:
        return 0
    num, den = x.numerator, x.denominator
    acc = a[-1]
    dp = den
    for c in reversed(a[:-1]):
        acc = acc * num + c * dp
        dp *= den
    return acc


def sign_at(a: ZPoly, x: Fraction) -> int:
    v = eval_scaled(a, x)
    return (v > 0) - (v < 0)


def sign_at_infinity(a: ZPoly, positive: bool) -> int:
    if not a:
        return 0
    s = 1 if a[-1] > 0 else -1
    if not positive and (len(a) - 1) % 2:
        s = -s
    return s


def linear_factor(x: Fraction) -> ZPoly:
    """Primitive integer polynomial vanishing exactly at x."""
    return [-x.numerator, x.denominator]


def cauchy_bound(a: ZPoly) -> int:
    """Integer strictly larger than the modulus of every root of a."""
    lc = abs(a[-1])
    m = max((abs(c) for c in a[:-1]), default=0)
    return 2 + m // lc
