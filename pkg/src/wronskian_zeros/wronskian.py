"""Partitions, multi-indices and exact Wronskian determinants.

Partitions are stored nondecreasing, ``lam[0] <= lam[1] <= ...``, and map to
multi-indices by ``k_j = lam_j + j - 1`` (1-based j).  Wronskian columns follow
the listed index order; row r holds r-th derivatives.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Sequence

from . import _zpoly as Z
from .errors import DuplicateIndex, InvalidPartition, NotStrictlyIncreasing
from .families import FamilySpec
from .polyalg import RatPoly, derivative, gcd


@dataclass(frozen=True)
class Partition:
    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(int(p) for p in self.parts)
        object.__setattr__(self, "parts", parts)
        if not parts:
            raise InvalidPartition("a partition needs at least one part")
        if any(p < 0 for p in parts):
            raise InvalidPartition(f"negative part in {parts}")
        if any(a > b for a, b in zip(parts, parts[1:])):
            raise InvalidPartition(f"parts must be nondecreasing, got {parts}")

    @classmethod
    def of(cls, *parts: int) -> "Partition":
        return cls(tuple(parts))

    @classmethod
    def parse(cls, text: str) -> "Partition":
        """Accept ``"1,3"`` (partition) or ``"k=1,4"`` (multi-index) notation."""
        text = text.strip()
        try:
            if text.startswith("k="):
                nums = tuple(int(s) for s in text[2:].split(",") if s.strip())
                return partition_from_multiindex(MultiIndex(nums))
            return cls(tuple(int(s) for s in text.split(",") if s.strip()))
        except ValueError as exc:
            if isinstance(exc, (InvalidPartition, NotStrictlyIncreasing)):
                raise
            raise InvalidPartition(f"cannot parse partition {text!r}") from exc

    @property
    def length(self) -> int:
        return len(self.parts)

    @property
    def weight(self) -> int:
        return sum(self.parts)

    def normalized(self) -> "Partition":
        """Drop leading zero parts (the all-zero partition normalizes to ``(0,)``)."""
        nz = tuple(p for p in self.parts if p)
        return Partition(nz or (0,))

    def multiindex(self) -> "MultiIndex":
        return multiindex_from_partition(self)

    def __str__(self) -> str:
        return ",".join(map(str, self.parts))


@dataclass(frozen=True)
class MultiIndex:
    indices: tuple[int, ...]

    def __post_init__(self):
        ks = tuple(int(k) for k in self.indices)
        object.__setattr__(self, "indices", ks)
        if not ks:
            raise NotStrictlyIncreasing("a multi-index needs at least one entry")
        if ks[0] < 0:
            raise NotStrictlyIncreasing(f"negative index in {ks}")
        if any(a >= b for a, b in zip(ks, ks[1:])):
            raise NotStrictlyIncreasing(f"indices must be strictly increasing, got {ks}")

    def __str__(self) -> str:
        return ",".join(map(str, self.indices))


@dataclass(frozen=True)
class WronskianResult:
    poly: RatPoly
    family: FamilySpec
    partition: Partition


def multiindex_from_partition(lam: Partition) -> MultiIndex:
    return MultiIndex(tuple(p + j for j, p in enumerate(lam.parts)))


def partition_from_multiindex(k: MultiIndex) -> Partition:
    if not isinstance(k, MultiIndex):
        k = MultiIndex(tuple(k))
    return Partition(tuple(x - j for j, x in enumerate(k.indices)))


def conjugate(lam: Partition) -> Partition:
    """Partition of the transposed Young diagram, returned nondecreasing."""
    rows = sorted((p for p in lam.parts if p), reverse=True)
    if not rows:
        return Partition((0,))
    cols = [sum(1 for r in rows if r > c) for c in range(rows[0])]
    return Partition(tuple(reversed(cols)))


def doubled_partition(mu: Sequence[int]) -> Partition:
    """``(mu_1, mu_1, ..., mu_n, mu_n)`` for strictly increasing positive mu."""
    _check_mu(mu)
    return Partition(tuple(m for m in mu for _ in range(2)))


def _check_mu(mu: Sequence[int]) -> None:
    if not mu:
        raise NotStrictlyIncreasing("mu must be nonempty")
    if mu[0] <= 0 or any(a >= b for a, b in zip(mu, mu[1:])):
        raise NotStrictlyIncreasing(f"mu must be strictly increasing positive integers, got {tuple(mu)}")


def doubled_conjugate(mu: Sequence[int]) -> Partition:
    """Closed-form conjugate of the doubled partition of mu.

    Block i (counting from the largest entry) contributes ``2i`` repeated
    ``mu_{n-i+1} - mu_{n-i}`` times, with ``mu_0 = 0``.
    """
    mu = tuple(int(m) for m in mu)
    _check_mu(mu)
    n = len(mu)
    parts: list[int] = []
    for i in range(1, n + 1):
        upper = mu[n - i]
        lower = mu[n - i - 1] if n - i - 1 >= 0 else 0
        parts.extend([2 * i] * (upper - lower))
    return Partition(tuple(parts))


def d_lambda(lam: Partition) -> int:
    """(number of odd indices) - (number of even indices) in the multi-index."""
    ks = multiindex_from_partition(lam).indices
    odd = sum(k % 2 for k in ks)
    return odd - (len(ks) - odd)


@lru_cache(maxsize=4096)
def _column(fam: FamilySpec, k: int) -> tuple[Fraction, tuple[int, ...]]:
    scale, prim = fam.poly(k).split()
    return scale, tuple(prim)


@lru_cache(maxsize=65536)
def _derivative_row(fam: FamilySpec, k: int, order: int) -> tuple[int, ...]:
    """order-th derivative of the primitive integer form of P_k."""
    return tuple(Z.deriv(list(_column(fam, k)[1]), order))


def _det_small(m: list[list[Z.ZPoly]]) -> Z.ZPoly:
    n = len(m)
    if n == 1:
        return list(m[0][0])
    if n == 2:
        return Z.sub(Z.mul(m[0][0], m[1][1]), Z.mul(m[0][1], m[1][0]))
    # cofactor expansion along the first row
    acc: Z.ZPoly = []
    for c in range(3):
        a, b = [j for j in range(3) if j != c]
        minor = Z.sub(Z.mul(m[1][a], m[2][b]), Z.mul(m[1][b], m[2][a]))
        term = Z.mul(m[0][c], minor)
        acc = Z.add(acc, term) if c % 2 == 0 else Z.sub(acc, term)
    return acc


def _det_bareiss(m: list[list[Z.ZPoly]]) -> Z.ZPoly:
    """Fraction-free Bareiss elimination over Z[x] with exact divisions."""
    n = len(m)
    a = [[list(e) for e in row] for row in m]
    sign = 1
    prev: Z.ZPoly = [1]
    for k in range(n - 1):
        if not a[k][k]:
            for r in range(k + 1, n):
                if a[r][k]:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                return []
        pivot = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            for j in range(k + 1, n):
                num = Z.sub(Z.mul(pivot, a[i][j]), Z.mul(aik, a[k][j]))
                a[i][j] = Z.divexact(num, prev) if len(prev) > 1 or prev[0] != 1 else num
            a[i][k] = []
        prev = pivot
    det = a[n - 1][n - 1]
    return Z.scale(det, sign) if sign < 0 else det


def determinant(m: list[list[Z.ZPoly]]) -> Z.ZPoly:
    """Determinant of a square matrix of integer polynomials."""
    if len(m) <= 3:
        return _det_small(m)
    return _det_bareiss(m)


def wronskian_of(fam: FamilySpec, indices: Iterable[int]) -> RatPoly:
    """Wr[P_{k_1}, ..., P_{k_l}] with columns in the given order."""
    ks = [int(k) for k in indices]
    if len(set(ks)) != len(ks):
        raise DuplicateIndex(f"repeated index in {ks}")
    if not ks:
        return RatPoly((1,))
    scale = Fraction(1)
    for k in ks:
        scale *= _column(fam, k)[0]
    ell = len(ks)
    mat = [[list(_derivative_row(fam, k, r)) for k in ks] for r in range(ell)]
    return RatPoly.from_zpoly(determinant(mat), scale)


def _result(fam: FamilySpec, ks: Sequence[int], poly: RatPoly) -> WronskianResult:
    lam = partition_from_multiindex(MultiIndex(tuple(sorted(ks))))
    if poly.is_zero():
        raise ArithmeticError(f"Wronskian of distinct indices {tuple(ks)} vanished identically")
    if poly.degree != lam.weight:
        raise ArithmeticError(
            f"Wronskian degree {poly.degree} differs from |lambda| = {lam.weight} for k={tuple(ks)}"
        )
    return WronskianResult(poly, fam, lam)


def wronskian_det(fam: FamilySpec, lam: Partition) -> WronskianResult:
    ks = multiindex_from_partition(lam).indices
    return _result(fam, ks, wronskian_of(fam, ks))


def append_index(fam: FamilySpec, lam: Partition, m: int) -> WronskianResult:
    """Wronskian with P_m appended as the last column."""
    ks = multiindex_from_partition(lam).indices
    if m in ks:
        raise DuplicateIndex(f"index {m} already present in k={ks}")
    ks = ks + (m,)
    return _result(fam, ks, wronskian_of(fam, ks))


def crum_term(w: WronskianResult | RatPoly) -> tuple[RatPoly, RatPoly]:
    """-2 (log W)'' as a coprime (numerator, denominator) pair.

    The denominator is W**2 divided by the monic common factor.
    """
    poly = w.poly if isinstance(w, WronskianResult) else w
    d1 = derivative(poly, 1)
    d2 = derivative(poly, 2)
    num = (d2 * poly - d1 * d1) * -2
    den = poly * poly
    if num.is_zero():
        return RatPoly(), RatPoly((1,))
    g = gcd(num, den)
    return num.exact_div(g), den.exact_div(g)
