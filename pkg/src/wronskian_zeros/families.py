"""Classical orthogonal polynomials and moment-defined orthogonal polynomials.

Normalizations are the standard ones: physicists' Hermite, ``L_n^(a)(0) =
binom(n + a, n)`` for Laguerre, and ``P_n^(a,b)(1) = binom(n + a, n)`` for
Jacobi.  Moment families are monic.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from pathlib import Path
from typing import Optional, Sequence

from .errors import MomentsNotPositiveDefinite, ParameterOutOfRange
from .polyalg import Interval, RatPoly, as_rational, format_rational


class Kind(enum.Enum):
    HERMITE = "hermite"
    LAGUERRE = "laguerre"
    JACOBI = "jacobi"
    MOMENTS = "moments"


@dataclass(frozen=True)
class FamilySpec:
    """An orthogonal polynomial family together with its orthogonality interval.

    Build instances through :meth:`hermite`, :meth:`laguerre`, :meth:`jacobi`
    or :meth:`from_moments`; they validate parameters eagerly.
    """

    kind: Kind
    alpha: Optional[Fraction] = None
    beta: Optional[Fraction] = None
    moments: tuple[Fraction, ...] = ()
    support: Optional[Interval] = field(default=None, compare=True)

    @classmethod
    def hermite(cls) -> "FamilySpec":
        return cls(Kind.HERMITE)

    @classmethod
    def laguerre(cls, alpha) -> "FamilySpec":
        alpha = as_rational(alpha)
        if alpha <= -1:
            raise ParameterOutOfRange(f"Laguerre needs alpha > -1, got {alpha}")
        return cls(Kind.LAGUERRE, alpha=alpha)

    @classmethod
    def jacobi(cls, alpha, beta) -> "FamilySpec":
        alpha, beta = as_rational(alpha), as_rational(beta)
        if alpha <= -1 or beta <= -1:
            raise ParameterOutOfRange(f"Jacobi needs alpha, beta > -1, got ({alpha}, {beta})")
        return cls(Kind.JACOBI, alpha=alpha, beta=beta)

    @classmethod
    def from_moments(cls, moments: Sequence, support: Interval) -> "FamilySpec":
        ms = tuple(as_rational(m) for m in moments)
        hankel_pivots(ms)  # raises on failure
        return cls(Kind.MOMENTS, moments=ms, support=support)

    @property
    def interval(self) -> Interval:
        if self.kind is Kind.HERMITE:
            return Interval(None, None)
        if self.kind is Kind.LAGUERRE:
            return Interval(0, None)
        if self.kind is Kind.JACOBI:
            return Interval(-1, 1)
        return self.support

    @property
    def symmetric(self) -> bool:
        return self.kind is Kind.HERMITE or (self.kind is Kind.JACOBI and self.alpha == self.beta)

    @property
    def is_classical(self) -> bool:
        return self.kind is not Kind.MOMENTS

    @property
    def max_degree(self) -> Optional[int]:
        """Largest degree the moment data determines (None for classical families)."""
        if self.is_classical:
            return None
        return len(self.moments) // 2

    def poly(self, n: int) -> RatPoly:
        if self.is_classical:
            return classical_poly(self, n)
        return from_moments(self.moments, n)

    @property
    def label(self) -> str:
        if self.kind is Kind.HERMITE:
            return "hermite"
        if self.kind is Kind.LAGUERRE:
            return f"laguerre(alpha={format_rational(self.alpha)})"
        if self.kind is Kind.JACOBI:
            return (
                f"jacobi(alpha={format_rational(self.alpha)},"
                f"beta={format_rational(self.beta)})"
            )
        return f"moments(n={len(self.moments)},support={self.support})"

    def __str__(self) -> str:
        return self.label


def classical_poly(fam: FamilySpec, n: int) -> RatPoly:
    """Degree-n member of a classical family via its three-term recurrence."""
    if n < 0:
        raise ValueError("degree must be nonnegative")
    if fam.kind is Kind.HERMITE:
        return _hermite(n)
    if fam.kind is Kind.LAGUERRE:
        if fam.alpha <= -1:
            raise ParameterOutOfRange(f"Laguerre needs alpha > -1, got {fam.alpha}")
        return _laguerre(fam.alpha, n)
    if fam.kind is Kind.JACOBI:
        if fam.alpha <= -1 or fam.beta <= -1:
            raise ParameterOutOfRange("Jacobi needs alpha, beta > -1")
        return _jacobi(fam.alpha, fam.beta, n)
    raise ValueError("classical_poly needs a classical family")


_X = RatPoly.x()


@lru_cache(maxsize=None)
def _hermite(n: int) -> RatPoly:
    # H_{n+1} = 2x H_n - 2n H_{n-1}
    if n == 0:
        return RatPoly((1,))
    if n == 1:
        return RatPoly((0, 2))
    return _X * _hermite(n - 1) * 2 - _hermite(n - 2) * (2 * (n - 1))


@lru_cache(maxsize=None)
def _laguerre(alpha: Fraction, n: int) -> RatPoly:
    # (n+1) L_{n+1} = (2n + 1 + a - x) L_n - (n + a) L_{n-1}
    if n == 0:
        return RatPoly((1,))
    if n == 1:
        return RatPoly((1 + alpha, -1))
    m = n - 1
    lead = RatPoly((2 * m + 1 + alpha, -1))
    return (lead * _laguerre(alpha, m) - _laguerre(alpha, m - 1) * (m + alpha)) * Fraction(1, n)


@lru_cache(maxsize=None)
def _jacobi(alpha: Fraction, beta: Fraction, n: int) -> RatPoly:
    if n == 0:
        return RatPoly((1,))
    if n == 1:
        # (a + 1) + (a + b + 2)(x - 1)/2
        return RatPoly(((alpha - beta) / 2, (alpha + beta + 2) / 2))
    m = n - 1
    s = 2 * m + alpha + beta
    a1 = 2 * (m + 1) * (m + alpha + beta + 1) * s
    a2 = (s + 1) * (alpha**2 - beta**2)
    a3 = (s + 1) * (s + 2) * s
    a4 = 2 * (m + alpha) * (m + beta) * (s + 2)
    return (RatPoly((a2, a3)) * _jacobi(alpha, beta, m) - _jacobi(alpha, beta, m - 1) * a4) * (1 / a1)


def hankel_pivots(moments: Sequence[Fraction]) -> list[Fraction]:
    """Pivots of the symmetric elimination of the largest Hankel matrix the moments fill.

    The k-th leading principal minor is the product of the first k pivots, so
    positive definiteness is equivalent to every pivot being positive.
    """
    size = (len(moments) + 1) // 2
    if size == 0:
        raise MomentsNotPositiveDefinite("no moments supplied", order=1)
    h = [[Fraction(moments[i + j]) for j in range(size)] for i in range(size)]
    pivots = []
    for k in range(size):
        p = h[k][k]
        if p <= 0:
            raise MomentsNotPositiveDefinite(
                f"Hankel minor of order {k + 1} is not positive", order=k + 1
            )
        pivots.append(p)
        for i in range(k + 1, size):
            f = h[i][k] / p
            if f:
                for j in range(k, size):
                    h[i][j] -= f * h[k][j]
    return pivots


def moment_functional(moments: Sequence[Fraction], p: RatPoly, q: RatPoly) -> Fraction:
    """The bilinear form <p, q> = sum p_i q_j m_{i+j}."""
    total = Fraction(0)
    for i, a in enumerate(p.coeffs):
        if a:
            for j, b in enumerate(q.coeffs):
                total += a * b * moments[i + j]
    return total


@lru_cache(maxsize=None)
def _moment_basis(moments: tuple[Fraction, ...], n: int) -> tuple[RatPoly, ...]:
    # Monic Gram-Schmidt against the moment functional.
    if n == 0:
        return (RatPoly((1,)),)
    prev = _moment_basis(moments, n - 1)
    xn = RatPoly([0] * n + [1])
    p = xn
    for q in prev:
        p = p - q * (moment_functional(moments, xn, q) / moment_functional(moments, q, q))
    return prev + (p,)


def from_moments(moments: Sequence, n: int) -> RatPoly:
    """Monic degree-n orthogonal polynomial for the given moment sequence.

    Needs ``m_0 .. m_{2n-1}`` and a positive definite Hankel matrix of order n.
    """
    if n < 0:
        raise ValueError("degree must be nonnegative")
    ms = tuple(as_rational(m) for m in moments)
    if len(ms) < 2 * n:
        raise MomentsNotPositiveDefinite(
            f"degree {n} needs {2 * n} moments, got {len(ms)}", order=n + 1
        )
    if n == 0:
        return RatPoly((1,))
    pivots = hankel_pivots(ms[: 2 * n - 1])
    if len(pivots) < n:
        raise MomentsNotPositiveDefinite(f"not enough moments for degree {n}", order=n)
    return _moment_basis(ms, n)[n]


def load_moments(path) -> list[Fraction]:
    """Read a JSON array of ``"p/q"`` strings (plain integers are also accepted)."""
    data = json.loads(Path(path).read_text())
    if not isinstance(data, list):
        raise ValueError("moments file must hold a JSON array")
    out = []
    for item in data:
        if isinstance(item, float):
            raise ValueError("moments must be exact: use \"p/q\" strings, not floats")
        out.append(as_rational(item))
    return out


def dump_moments(moments: Sequence[Fraction]) -> str:
    return json.dumps([format_rational(Fraction(m)) for m in moments])
