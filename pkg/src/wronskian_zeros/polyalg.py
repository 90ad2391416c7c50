"""Exact univariate polynomial arithmetic over the rationals.

``RatPoly`` is an immutable dense polynomial with :class:`fractions.Fraction`
coefficients.  Heavy lifting (gcds, Sturm chains, resultants) is delegated to
integer kernels in :mod:`wronskian_zeros._zpoly` after clearing denominators,
which keeps coefficient growth in check without ever leaving exact arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import lcm
from typing import Iterable, NamedTuple, Optional, Union

from . import _zpoly as Z
from .errors import BothZero, ParityViolation, ZeroPolynomial

Rational = Fraction
Number = Union[int, Fraction]


def as_rational(value) -> Fraction:
    """Coerce ints, Fractions and ``"p/q"`` strings to a reduced Fraction.

    Floats are rejected: they would smuggle rounding error into exact code.
    """
    if isinstance(value, bool):
        raise TypeError("booleans are not rationals")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    raise TypeError(f"cannot use {type(value).__name__} as an exact rational")


def format_rational(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


class RatPoly:
    """Dense polynomial with exact rational coefficients, lowest degree first."""

    __slots__ = ("coeffs", "_hash")

    def __init__(self, coeffs: Iterable[Number] = ()):
        cs = [as_rational(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)
        self._hash = None

    @classmethod
    def x(cls) -> "RatPoly":
        return cls((0, 1))

    @classmethod
    def constant(cls, c: Number) -> "RatPoly":
        return cls((c,))

    @classmethod
    def from_zpoly(cls, a: Z.ZPoly, scale: Fraction = Fraction(1)) -> "RatPoly":
        return cls(scale * c for c in a)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lc(self) -> Fraction:
        if not self.coeffs:
            raise ZeroPolynomial("the zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    def split(self) -> tuple[Fraction, Z.ZPoly]:
        """Return ``(c, a)`` with ``self == c * a``, a primitive in Z[x] with lc > 0."""
        if not self.coeffs:
            return Fraction(0), []
        den = lcm(*(c.denominator for c in self.coeffs))
        ints = [int(c * den) for c in self.coeffs]
        prim = Z.primitive(ints)
        return self.coeffs[-1] / prim[-1], prim

    def zpoly(self) -> Z.ZPoly:
        return self.split()[1]

    def monic(self) -> "RatPoly":
        if not self.coeffs:
            raise ZeroPolynomial("cannot normalize the zero polynomial")
        lc = self.coeffs[-1]
        return RatPoly(c / lc for c in self.coeffs)

    def __call__(self, x: Number) -> Fraction:
        x = as_rational(x)
        acc = Fraction(0)
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def __eq__(self, other) -> bool:
        if isinstance(other, RatPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == RatPoly((other,)).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(self.coeffs)
        return self._hash

    def _coerce(self, other) -> "RatPoly":
        if isinstance(other, RatPoly):
            return other
        return RatPoly((other,))

    def __add__(self, other) -> "RatPoly":
        other = self._coerce(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return RatPoly(out)

    __radd__ = __add__

    def __neg__(self) -> "RatPoly":
        return RatPoly(-c for c in self.coeffs)

    def __sub__(self, other) -> "RatPoly":
        return self + (-self._coerce(other))

    def __rsub__(self, other) -> "RatPoly":
        return self._coerce(other) - self

    def __mul__(self, other) -> "RatPoly":
        if not isinstance(other, RatPoly):
            c = as_rational(other)
            return RatPoly(c * x for x in self.coeffs)
        if not self.coeffs or not other.coeffs:
            return RatPoly()
        out = [Fraction(0)] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, x in enumerate(self.coeffs):
            if x:
                for j, y in enumerate(other.coeffs):
                    out[i + j] += x * y
        return RatPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "RatPoly":
        out = RatPoly((1,))
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __divmod__(self, other: "RatPoly") -> tuple["RatPoly", "RatPoly"]:
        if other.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        r = list(self.coeffs)
        db = other.degree
        lb = other.coeffs[-1]
        q = [Fraction(0)] * max(len(r) - db, 0)
        while len(r) - 1 >= db and r:
            shift = len(r) - 1 - db
            c = r[-1] / lb
            q[shift] = c
            for i, y in enumerate(other.coeffs):
                r[shift + i] -= c * y
            r.pop()
            while r and r[-1] == 0:
                r.pop()
        return RatPoly(q), RatPoly(r)

    def __floordiv__(self, other: "RatPoly") -> "RatPoly":
        return divmod(self, other)[0]

    def __mod__(self, other: "RatPoly") -> "RatPoly":
        return divmod(self, other)[1]

    def exact_div(self, other: "RatPoly") -> "RatPoly":
        q, r = divmod(self, other)
        if not r.is_zero():
            raise ArithmeticError(f"{other} does not divide {self}")
        return q

    def compose_neg(self) -> "RatPoly":
        """The polynomial p(-x)."""
        return RatPoly(-c if i % 2 else c for i, c in enumerate(self.coeffs))

    def __repr__(self) -> str:
        return f"RatPoly({self})"

    def __str__(self) -> str:
        if not self.coeffs:
            return "0"
        terms = []
        for i in range(len(self.coeffs) - 1, -1, -1):
            c = self.coeffs[i]
            if c == 0:
                continue
            sign = "-" if c < 0 else "+"
            mag = -c if c < 0 else c
            if i == 0:
                body = format_rational(mag)
            else:
                mono = "x" if i == 1 else f"x^{i}"
                body = mono if mag == 1 else f"{format_rational(mag)}*{mono}"
            terms.append((sign, body))
        first_sign, first = terms[0]
        out = ("-" if first_sign == "-" else "") + first
        for sign, body in terms[1:]:
            out += f" {sign} {body}"
        return out


@dataclass(frozen=True)
class Interval:
    """Open interval (lo, hi); ``None`` stands for an infinite endpoint."""

    lo: Optional[Fraction] = None
    hi: Optional[Fraction] = None

    def __post_init__(self):
        if self.lo is not None:
            object.__setattr__(self, "lo", as_rational(self.lo))
        if self.hi is not None:
            object.__setattr__(self, "hi", as_rational(self.hi))
        if self.lo is not None and self.hi is not None and not self.lo < self.hi:
            raise ValueError(f"empty interval ({self.lo}, {self.hi})")

    @classmethod
    def real_line(cls) -> "Interval":
        return cls(None, None)

    @classmethod
    def parse(cls, text: str) -> "Interval":
        """Parse ``"lo,hi"`` where each side is a rational or ``-inf``/``inf``."""
        lo_s, hi_s = (s.strip().lower() for s in text.split(","))
        lo = None if lo_s in ("-inf", "-oo") else as_rational(lo_s)
        hi = None if hi_s in ("inf", "+inf", "oo", "+oo") else as_rational(hi_s)
        return cls(lo, hi)

    def contains(self, x: Number) -> bool:
        x = as_rational(x)
        return (self.lo is None or self.lo < x) and (self.hi is None or x < self.hi)

    @property
    def width(self) -> Optional[Fraction]:
        if self.lo is None or self.hi is None:
            return None
        return self.hi - self.lo

    def __str__(self) -> str:
        lo = "-inf" if self.lo is None else format_rational(self.lo)
        hi = "inf" if self.hi is None else format_rational(self.hi)
        return f"({lo}, {hi})"


def derivative(p: RatPoly, order: int = 1) -> RatPoly:
    if order < 0:
        raise ValueError("derivative order must be nonnegative")
    cs = list(p.coeffs)
    for _ in range(order):
        cs = [i * cs[i] for i in range(1, len(cs))]
    return RatPoly(cs)


def gcd(p: RatPoly, q: RatPoly) -> RatPoly:
    """Monic greatest common divisor."""
    if p.is_zero() and q.is_zero():
        raise BothZero("gcd(0, 0) is undefined")
    if p.is_zero():
        return q.monic()
    if q.is_zero():
        return p.monic()
    g = Z.pgcd(p.zpoly(), q.zpoly())
    return RatPoly(g).monic()


def squarefree_part(p: RatPoly) -> RatPoly:
    """Monic product of the distinct irreducible factors of p."""
    if p.is_zero():
        raise ZeroPolynomial("squarefree part of the zero polynomial")
    a = p.zpoly()
    g = Z.pgcd(a, Z.deriv(a))
    return RatPoly(Z.divexact(a, g)).monic()


def squarefree_decomposition(p: RatPoly) -> list[tuple[RatPoly, int]]:
    """Yun's algorithm: monic, squarefree, pairwise coprime factors with multiplicities.

    The product of ``f**m`` over the result equals ``p`` up to a nonzero constant.
    Constant inputs yield an empty list.
    """
    if p.is_zero():
        raise ZeroPolynomial("squarefree decomposition of the zero polynomial")
    a = p.zpoly()
    if len(a) == 1:
        return []
    da = Z.deriv(a)
    g = Z.pgcd(a, da)
    b = Z.divexact(a, g)
    c = Z.divexact(da, g)
    d = Z.sub(c, Z.deriv(b))
    out = []
    i = 1
    while len(b) > 1:
        h = Z.pgcd(b, d)
        b = Z.divexact(b, h)
        c = Z.divexact(d, h)
        d = Z.sub(c, Z.deriv(b))
        if len(h) > 1:
            out.append((RatPoly(h).monic(), i))
        i += 1
    return out


class RootCount(NamedTuple):
    count: int
    endpoint_roots: tuple[Fraction, ...]


def _sturm_chain(a: Z.ZPoly) -> list[Z.ZPoly]:
    """Sturm chain of a squarefree primitive polynomial, up to positive factors."""
    # a has a positive leading coefficient, so primitive() keeps the sign of a'.
    chain = [a]
    b = Z.primitive(Z.deriv(a))
    while b:
        chain.append(b)
        r, m = Z.prem(chain[-2], b)
        if not r:
            break
        if m > 0:
            r = [-c for c in r]
        g = Z.content(r)
        b = [c // g for c in r]
    return chain


def _variations(chain: list[Z.ZPoly], x: Optional[Fraction], positive: bool) -> int:
    last = 0
    v = 0
    for f in chain:
        s = Z.sign_at_infinity(f, positive) if x is None else Z.sign_at(f, x)
        if s:
            if last and s != last:
                v += 1
            last = s
    return v


def _strip_endpoint_roots(a: Z.ZPoly, iv: Interval) -> tuple[Z.ZPoly, tuple[Fraction, ...]]:
    hits = []
    for e in (iv.lo, iv.hi):
        if e is not None and Z.sign_at(a, e) == 0:
            hits.append(e)
            a = Z.divexact(a, Z.linear_factor(e))
    return a, tuple(hits)


def _sqf_zpoly(p: RatPoly) -> Z.ZPoly:
    if p.is_zero():
        raise ZeroPolynomial("root counting on the zero polynomial")
    a = p.zpoly()
    g = Z.pgcd(a, Z.deriv(a))
    return Z.primitive(Z.divexact(a, g))


def _count_sqf(a: Z.ZPoly, iv: Interval) -> int:
    if len(a) <= 1:
        return 0
    chain = _sturm_chain(a)
    va = _variations(chain, iv.lo, positive=False)
    vb = _variations(chain, iv.hi, positive=True)
    return va - vb


def count_roots(p: RatPoly, iv: Interval = Interval()) -> RootCount:
    """Distinct real roots strictly inside ``iv``, plus any roots sitting on its endpoints."""
    a, hits = _strip_endpoint_roots(_sqf_zpoly(p), iv)
    return RootCount(_count_sqf(a, iv), hits)


def sturm_count(p: RatPoly, iv: Interval = Interval()) -> int:
    """Number of distinct real roots of p in the open interval iv (Sturm's theorem)."""
    return count_roots(p, iv).count


def _split_point(a: Z.ZPoly, lo: Fraction, hi: Fraction) -> Fraction:
    """A rational strictly between lo and hi where a does not vanish, near the midpoint."""
    m = (lo + hi) / 2
    if Z.sign_at(a, m):
        return m
    t = 3
    while True:
        for k in range(1, t):
            cand = lo + (hi - lo) * k / t
            if Z.sign_at(a, cand):
                return cand
        t += 2


def _bounded(a: Z.ZPoly, iv: Interval) -> tuple[Fraction, Fraction]:
    b = Fraction(Z.cauchy_bound(a)) if len(a) > 1 else Fraction(1)
    lo = -b if iv.lo is None else max(iv.lo, -b)
    hi = b if iv.hi is None else min(iv.hi, b)
    return lo, hi


def _isolate_sqf(a: Z.ZPoly, iv: Interval) -> list[Interval]:
    if len(a) <= 1:
        return []
    chain = _sturm_chain(a)
    lo, hi = _bounded(a, iv)
    if lo >= hi:
        return []

    def count(l: Fraction, h: Fraction) -> int:
        return _variations(chain, l, False) - _variations(chain, h, True)

    out = []
    stack = [(lo, hi, count(lo, hi))]
    while stack:
        l, h, n = stack.pop()
        if n == 0:
            continue
        if n == 1:
            out.append(Interval(l, h))
            continue
        m = _split_point(a, l, h)
        nl = count(l, m)
        stack.append((m, h, n - nl))
        stack.append((l, m, nl))
    out.sort(key=lambda i: i.lo)
    return out


def refine(p: RatPoly, iv: Interval, width: Number) -> Interval:
    """Shrink an isolating interval of p (exactly one distinct root inside) below ``width``."""
    width = as_rational(width)
    a = _sqf_zpoly(p)
    lo, hi = iv.lo, iv.hi
    if lo is None or hi is None:
        raise ValueError("refine needs a bounded isolating interval")
    slo = Z.sign_at(a, lo)
    if slo == 0 or Z.sign_at(a, hi) == 0:
        raise ValueError("isolating interval endpoints must not be roots")
    while hi - lo > width:
        m = (lo + hi) / 2
        s = Z.sign_at(a, m)
        if s == 0:
            q = (hi - lo) / 4
            q = min(q, width / 3)
            return Interval(m - q, m + q)
        if s == slo:
            lo = m
        else:
            hi = m
    return Interval(lo, hi)


def isolate_roots(p: RatPoly, iv: Interval = Interval()) -> list[tuple[Interval, int]]:
    """Disjoint rational isolating intervals of the real roots of p in iv, left to right.

    Each interval is open, its endpoints are not roots of p, and it carries the
    multiplicity of the root it contains.
    """
    if p.is_zero():
        raise ZeroPolynomial("root isolation on the zero polynomial")
    sqf, _ = _strip_endpoint_roots(_sqf_zpoly(p), iv)
    intervals = _isolate_sqf(sqf, iv)
    factors = [(f.zpoly(), m) for f, m in squarefree_decomposition(p)]
    out = []
    for box in intervals:
        mult = 0
        for f, m in factors:
            if Z.sign_at(f, box.lo) * Z.sign_at(f, box.hi) < 0:
                mult = m
                break
        out.append((box, mult))
    return out


def resultant(p: RatPoly, q: RatPoly) -> Fraction:
    """Resultant via the subresultant polynomial remainder sequence."""
    if p.is_zero() or q.is_zero():
        raise ZeroPolynomial("resultant with the zero polynomial")
    cp, a = p.split()
    cq, b = q.split()
    # res(cp*a, cq*b) = cp^deg(b) * cq^deg(a) * res(a, b)
    scale = cp ** (len(b) - 1) * cq ** (len(a) - 1)
    return scale * _zresultant(a, b)


def _zresultant(a: Z.ZPoly, b: Z.ZPoly) -> Fraction:
    da, db = len(a) - 1, len(b) - 1
    if da == 0:
        return Fraction(a[0]) ** db
    if db == 0:
        return Fraction(b[0]) ** da
    s = 1
    if da < db:
        a, b = b, a
        da, db = db, da
        if da % 2 and db % 2:
            s = -1
    g = Fraction(1)
    h = Fraction(1)
    while True:
        delta = da - db
        if da % 2 and db % 2:
            s = -s
        r, _ = Z.prem(a, b)
        if not r:
            return Fraction(0)
        a = b
        divisor = g * h**delta
        b = [Fraction(c) / divisor for c in r]
        assert all(c.denominator == 1 for c in b)
        b = [int(c) for c in b]
        g = Fraction(a[-1])
        h = h ** (1 - delta) * g**delta if delta else h
        da, db = len(a) - 1, len(b) - 1
        if db == 0:
            break
    h = h ** (1 - da) * Fraction(b[-1]) ** da
    return s * h


def ord_at(p: RatPoly, x0: Number = 0) -> int:
    """Multiplicity of x0 as a root of p (0 when p(x0) != 0)."""
    if p.is_zero():
        raise ZeroPolynomial("order of vanishing of the zero polynomial")
    x0 = as_rational(x0)
    if x0 == 0:
        for i, c in enumerate(p.coeffs):
            if c:
                return i
    a = p.zpoly()
    lin = Z.linear_factor(x0)
    k = 0
    while Z.sign_at(a, x0) == 0:
        a = Z.divexact(a, lin)
        k += 1
    return k


def rotate_imaginary(p: RatPoly, weight: int) -> RatPoly:
    """Real polynomial (-i)**weight * p(i x).

    Coefficient k picks up i**(k - weight), so every nonzero coefficient must
    sit at a degree with the parity of ``weight``.
    """
    out = []
    for k, c in enumerate(p.coeffs):
        if c == 0:
            out.append(c)
            continue
        if (k - weight) % 2:
            raise ParityViolation(
                f"coefficient of x^{k} is nonzero but weight {weight} has the other parity"
            )
        out.append(-c if ((k - weight) // 2) % 2 else c)
    return RatPoly(out)
