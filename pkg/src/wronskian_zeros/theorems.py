"""Closed-form zero-count predictors and their exact verification.

The generic predictor is the alternating sum of partition parts; the symmetric
predictor adds the origin multiplicity ``d(d+1)/2`` and splits the remaining
real roots evenly between both half-lines.  :func:`verify_partition` compares
both against Sturm counts of the exact Wronskian and never assumes
non-degeneracy: it probes for common roots and reports what it finds.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Optional, Sequence, Union

from .errors import DuplicateIndex, NonIntegerResult
from .families import FamilySpec, Kind
from .polyalg import (
    Interval,
    RatPoly,
    count_roots,
    format_rational,
    gcd,
    isolate_roots,
    ord_at,
    refine,
    rotate_imaginary,
    squarefree_decomposition,
    sturm_count,
)
from .wronskian import (
    MultiIndex,
    Partition,
    conjugate,
    d_lambda,
    doubled_partition,
    multiindex_from_partition,
    wronskian_det,
    wronskian_of,
)


@dataclass(frozen=True)
class SymmetricPrediction:
    origin_multiplicity: int
    positive_count: int
    negative_count: int
    total_distinct: int

    def to_dict(self) -> dict:
        return {
            "origin_multiplicity": self.origin_multiplicity,
            "positive_count": self.positive_count,
            "negative_count": self.negative_count,
            "total_distinct": self.total_distinct,
        }


@dataclass(frozen=True)
class Witness:
    """A common root found by the degeneracy scan.

    ``condition`` is 1 for a (f_lam, f_lam_m) pair and 2 for (f_lam_m, f_lam_n);
    ``probes`` holds the appended indices and ``common_factor`` the monic gcd
    with any origin factor removed for symmetric families.
    """

    condition: int
    probes: tuple[int, ...]
    common_factor: RatPoly
    roots_in_interval: int

    def to_dict(self) -> dict:
        return {
            "condition": self.condition,
            "probes": list(self.probes),
            "common_factor": [format_rational(c) for c in self.common_factor.coeffs],
            "roots_in_interval": self.roots_in_interval,
        }


def alternating_sum(parts: Sequence[int]) -> int:
    ell = len(parts)
    return sum((-1) ** (ell - 1 - i) * p for i, p in enumerate(parts))


def predicted_count_generic(lam: Partition) -> int:
    """Number of real zeros in the orthogonality interval for a non-degenerate family."""
    n = alternating_sum(lam.parts)
    # nondecreasing parts make every paired difference nonnegative
    assert n >= 0, f"negative alternating sum for {lam}: partition convention violated"
    return n


def predicted_symmetric(lam: Partition) -> SymmetricPrediction:
    d = d_lambda(lam)
    ell = lam.length
    origin = d * (d + 1) // 2
    n_plus = (Fraction(alternating_sum(lam.parts)) - Fraction(abs(d + ell % 2), 2)) / 2
    if n_plus.denominator != 1 or n_plus < 0:
        raise NonIntegerResult(
            f"positive-root formula gives {n_plus} for lambda={lam} (d={d}, l={ell})"
        )
    n_plus = int(n_plus)
    total = 2 * n_plus + (0 if d in (-1, 0) else 1)
    return SymmetricPrediction(origin, n_plus, n_plus, total)


def _runs(ks: Sequence[int]) -> list[list[int]]:
    runs: list[list[int]] = []
    for k in ks:
        if runs and runs[-1][-1] + 1 == k:
            runs[-1].append(k)
        else:
            runs.append([k])
    return runs


def adler_admissible(k: MultiIndex) -> bool:
    """True iff k is an optional run from 0 followed by even-length runs of consecutive integers."""
    ks = k.indices if isinstance(k, MultiIndex) else MultiIndex(tuple(k)).indices
    for i, run in enumerate(_runs(ks)):
        if i == 0 and run[0] == 0:
            continue
        if len(run) % 2:
            return False
    return True


def krein_nonnegative(k: MultiIndex) -> bool:
    """True iff prod (n - k_j) >= 0 for every natural n (checked up to k_max + 1)."""
    ks = k.indices if isinstance(k, MultiIndex) else MultiIndex(tuple(k)).indices
    for n in range(ks[-1] + 2):
        prod = 1
        for kj in ks:
            prod *= n - kj
        if prod < 0:
            return False
    return True


def default_probes(k: MultiIndex, count: int = 2) -> list[int]:
    """The ``count`` smallest nonnegative integers missing from k."""
    present = set(k.indices)
    out = []
    n = 0
    while len(out) < count:
        if n not in present:
            out.append(n)
        n += 1
    return out


def strip_origin(p: RatPoly) -> RatPoly:
    """p / x**ord_0(p)."""
    m = ord_at(p, 0)
    return RatPoly(p.coeffs[m:]) if m else p


def common_roots(p: RatPoly, q: RatPoly, iv: Interval, ignore_origin: bool = False) -> tuple[RatPoly, int]:
    """Monic common factor of p and q and how many distinct roots it has in iv."""
    g = gcd(p, q)
    if ignore_origin and g.degree > 0:
        g = strip_origin(g).monic()
    if g.degree <= 0:
        return g, 0
    return g, sturm_count(g, iv)


def degeneracy_scan(
    fam: FamilySpec,
    lam: Partition,
    probes: Iterable[int],
    base: Optional[RatPoly] = None,
) -> list[Witness]:
    """Probe both non-degeneracy conditions for the given appended indices.

    An empty result means no common root inside the interval was found; for
    symmetric families common roots at the origin are allowed and ignored.
    """
    ks = multiindex_from_partition(lam).indices
    probes = list(probes)
    for m in probes:
        if m in ks:
            raise DuplicateIndex(f"probe {m} already in k={ks}")
    if len(set(probes)) != len(probes):
        raise DuplicateIndex(f"repeated probe in {probes}")
    iv = fam.interval
    sym = fam.symmetric
    f_lam = base if base is not None else wronskian_of(fam, ks)
    extended = {m: wronskian_of(fam, ks + (m,)) for m in probes}
    witnesses = []
    for m in probes:
        g, n = common_roots(f_lam, extended[m], iv, ignore_origin=sym)
        if n:
            witnesses.append(Witness(1, (m,), g, n))
    for m, n_ in combinations(probes, 2):
        g, n = common_roots(extended[m], extended[n_], iv, ignore_origin=sym)
        if n:
            witnesses.append(Witness(2, (m, n_), g, n))
    return witnesses


def simplicity_check(fam: FamilySpec, lam: Partition, poly: Optional[RatPoly] = None) -> tuple[bool, int]:
    """Whether every repeated root (real or complex) of the Wronskian is x = 0."""
    w = poly if poly is not None else wronskian_det(fam, lam).poly
    x = RatPoly.x()
    ok = all(m == 1 or f == x for f, m in squarefree_decomposition(w))
    return ok, ord_at(w, 0)


@dataclass
class VerificationReport:
    family: FamilySpec
    partition: Partition
    predicted: Union[int, SymmetricPrediction]
    exact_count: int
    exact_origin_mult: int
    root_multiplicities: list[int]
    degenerate: bool
    witnesses: list[Witness] = field(default_factory=list)
    passed: bool = False
    exact_positive: Optional[int] = None
    exact_negative: Optional[int] = None
    endpoint_roots: tuple[Fraction, ...] = ()
    all_simple_except_origin: bool = True
    probes: tuple[int, ...] = ()
    wronskian: Optional[RatPoly] = None

    @property
    def status(self) -> str:
        if self.degenerate:
            return "degenerate"
        return "pass" if self.passed else "mismatch"

    @property
    def predicted_total(self) -> int:
        if isinstance(self.predicted, SymmetricPrediction):
            return self.predicted.total_distinct
        return self.predicted

    @property
    def conjecture_probe(self) -> bool:
        return self.family.kind is Kind.MOMENTS

    def sort_key(self) -> tuple:
        return (self.partition.weight, self.partition.length, self.partition.parts)

    def to_dict(self) -> dict:
        k = multiindex_from_partition(self.partition)
        out = {
            "family": self.family.label,
            "interval": str(self.family.interval),
            "partition": list(self.partition.parts),
            "k": list(k.indices),
            "d_lambda": d_lambda(self.partition),
            "predicted": (
                self.predicted.to_dict()
                if isinstance(self.predicted, SymmetricPrediction)
                else self.predicted
            ),
            "exact_count": self.exact_count,
            "exact_origin_mult": self.exact_origin_mult,
            "exact_positive": self.exact_positive,
            "exact_negative": self.exact_negative,
            "root_multiplicities": list(self.root_multiplicities),
            "all_simple_except_origin": self.all_simple_except_origin,
            "endpoint_roots": [format_rational(e) for e in self.endpoint_roots],
            "probes": list(self.probes),
            "degenerate": self.degenerate,
            "witnesses": [w.to_dict() for w in self.witnesses],
            "pass": self.passed,
            "status": self.status,
        }
        if self.conjecture_probe:
            out["label"] = "conjecture probe"
        if self.wronskian is not None:
            out["wronskian"] = [format_rational(c) for c in self.wronskian.coeffs]
        return out

    def csv_row(self) -> dict:
        return {
            "family": self.family.label,
            "partition": str(self.partition),
            "k": str(multiindex_from_partition(self.partition)),
            "d_lambda": d_lambda(self.partition),
            "predicted": self.predicted_total,
            "exact": self.exact_count,
            "origin_mult": self.exact_origin_mult,
            "degenerate": str(self.degenerate).lower(),
            "pass": str(self.passed).lower(),
        }


CSV_COLUMNS = ("family", "partition", "k", "d_lambda", "predicted", "exact", "origin_mult", "degenerate", "pass")


def verify_partition(
    fam: FamilySpec,
    lam: Partition,
    probes: Optional[Sequence[int]] = None,
    probe_count: int = 2,
    keep_polynomial: bool = False,
) -> VerificationReport:
    """Compare the closed-form prediction for lam with exact root counts."""
    w = wronskian_det(fam, lam).poly
    iv = fam.interval
    k = multiindex_from_partition(lam)
    if probes is None:
        probes = default_probes(k, probe_count)
    probes = tuple(probes)

    rc = count_roots(w, iv)
    mults = [m for _, m in isolate_roots(w, iv)]
    origin = ord_at(w, 0) if iv.contains(0) else 0
    witnesses = degeneracy_scan(fam, lam, probes, base=w) if probes else []

    report = VerificationReport(
        family=fam,
        partition=lam,
        predicted=0,
        exact_count=rc.count,
        exact_origin_mult=origin,
        root_multiplicities=mults,
        degenerate=bool(witnesses),
        witnesses=witnesses,
        endpoint_roots=rc.endpoint_roots,
        probes=probes,
        wronskian=w if keep_polynomial else None,
    )
    if fam.symmetric:
        pred = predicted_symmetric(lam)
        rest = strip_origin(w)
        pos = sturm_count(w, Interval(0, iv.hi))
        neg = sturm_count(w, Interval(iv.lo, 0))
        simple = all(m == 1 for _, m in isolate_roots(rest, iv))
        report.predicted = pred
        report.exact_positive = pos
        report.exact_negative = neg
        report.all_simple_except_origin = simple
        report.passed = (
            origin == pred.origin_multiplicity
            and pos == pred.positive_count
            and neg == pred.negative_count
            and rc.count == pred.total_distinct
            and simple
        )
    else:
        pred = predicted_count_generic(lam)
        simple = all(m == 1 for m in mults)
        report.predicted = pred
        report.all_simple_except_origin = simple
        report.passed = rc.count == pred and simple
    return report


def duality_check(lam: Partition) -> tuple[bool, Optional[Fraction]]:
    """Compare H_{conj(lam)} with the imaginary rotation of H_lam.

    Returns ``(holds, c)`` where ``H_conj = c * (-i)^|lam| H_lam(i x)``.
    """
    herm = FamilySpec.hermite()
    h = wronskian_det(herm, lam).poly
    h_bar = wronskian_det(herm, conjugate(lam)).poly
    rot = rotate_imaginary(h, lam.weight)
    if rot.degree != h_bar.degree:
        return False, None
    c = h_bar.lc / rot.lc
    return h_bar == rot * c, c


def felder_counts(mu: Sequence[int]) -> tuple[int, int]:
    """(real roots, purely imaginary roots) of the Hermite Wronskian of the doubled partition."""
    lam = doubled_partition(tuple(mu))
    h = wronskian_det(FamilySpec.hermite(), lam).poly
    real = sturm_count(h)
    imaginary = sturm_count(rotate_imaginary(h, lam.weight))
    return real, imaginary


def _disjoint_roots(a: RatPoly, b: RatPoly, iv: Interval) -> Optional[list[tuple[Interval, str]]]:
    """Isolating intervals of a's and b's roots refined until no a-box meets a b-box."""
    g, shared = common_roots(a, b, iv)
    if shared:
        return None
    boxes = [(box, "a") for box, _ in isolate_roots(a, iv)] + [(box, "b") for box, _ in isolate_roots(b, iv)]

    def overlapping() -> set[int]:
        bad = set()
        for i, (u, lu) in enumerate(boxes):
            for j in range(i + 1, len(boxes)):
                v, lv = boxes[j]
                if lu != lv and u.lo < v.hi and v.lo < u.hi:
                    bad.update((i, j))
        return bad

    bad = overlapping()
    while bad:
        for i in bad:
            box, lab = boxes[i]
            poly = a if lab == "a" else b
            boxes[i] = (refine(poly, box, box.width / 2), lab)
        bad = overlapping()
    boxes.sort(key=lambda t: t[0].lo)
    return boxes


def strictly_interlace(a: RatPoly, b: RatPoly, iv: Interval) -> bool:
    """True iff the real roots of a and b in iv are distinct and alternate.

    Root counts may differ by at most one.
    """
    boxes = _disjoint_roots(a, b, iv)
    if boxes is None:
        return False
    labels = [lab for _, lab in boxes]
    if any(x == y for x, y in zip(labels, labels[1:])):
        return False
    na = labels.count("a")
    nb = labels.count("b")
    return abs(na - nb) <= 1


@dataclass(frozen=True)
class KarlinResult:
    count: int
    interlaces_with_next: Optional[bool]
    next_count: Optional[int] = None


def karlin_szego_check(fam: FamilySpec, n: int, ell: int) -> KarlinResult:
    """Root count of Wr[P_n, ..., P_{n+l-1}] and interlacing with the n+1 Wronskian.

    Interlacing is only meaningful when both Wronskians have real roots in the
    interval; otherwise ``interlaces_with_next`` is None.
    """
    if ell < 1:
        raise ValueError("ell must be positive")
    iv = fam.interval
    lam = Partition((n,) * ell)
    w = wronskian_det(fam, lam).poly
    count = sturm_count(w, iv)
    w_next = wronskian_det(fam, Partition((n + 1,) * ell)).poly
    next_count = sturm_count(w_next, iv)
    if count == 0 or next_count == 0:
        return KarlinResult(count, None, next_count)
    return KarlinResult(count, strictly_interlace(w, w_next, iv), next_count)
