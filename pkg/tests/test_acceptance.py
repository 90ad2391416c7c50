"""Acceptance suite: ten end-to-end checks, each reported as one PASS/FAIL line.

Run with ``pytest tests/test_acceptance.py`` (lines appear in the terminal
summary) or directly with ``python tests/test_acceptance.py``.
"""

from __future__ import annotations

import logging
import random
from fractions import Fraction
from itertools import combinations
from pathlib import Path

import pytest

from wronskian_zeros.cli import partitions
from wronskian_zeros.families import FamilySpec, load_moments
from wronskian_zeros.polyalg import Interval, RatPoly, derivative, isolate_roots, squarefree_decomposition, sturm_count
from wronskian_zeros.theorems import (
    adler_admissible,
    degeneracy_scan,
    duality_check,
    felder_counts,
    karlin_szego_check,
    krein_nonnegative,
    verify_partition,
)
from wronskian_zeros.wronskian import MultiIndex, Partition, partition_from_multiindex, wronskian_of

log = logging.getLogger("acceptance")
DATA = Path(__file__).resolve().parent.parent / "data"
RESULTS: dict[int, tuple[bool, str]] = {}

HERMITE = FamilySpec.hermite()
SHIFTED_LEGENDRE = FamilySpec.from_moments(load_moments(DATA / "shifted_legendre.json"), Interval(0, 1))
LINEAR_WEIGHT = FamilySpec.from_moments(load_moments(DATA / "linear_weight_unit_interval.json"), Interval(0, 1))


def sweep(fam, max_weight, max_length):
    reports = [verify_partition(fam, lam) for lam in partitions(max_weight, max_length)]
    failed = [r for r in reports if r.status == "mismatch"]
    degenerate = [r for r in reports if r.degenerate]
    return reports, failed, degenerate


def criterion_1():
    reports, failed, degenerate = sweep(HERMITE, 9, 4)
    origin_ok = all(r.exact_origin_mult == r.predicted.origin_multiplicity for r in reports if not r.degenerate)
    ok = not failed and not degenerate and origin_ok
    return ok, f"{len(reports)} partitions, {len(failed)} mismatches, {len(degenerate)} degenerate"


def criterion_2():
    parts = []
    ok = True
    for a in (Fraction(1, 2), Fraction(1, 3), Fraction(3, 7), Fraction(5, 2)):
        reports, failed, degenerate = sweep(FamilySpec.laguerre(a), 8, 4)
        ok &= not failed
        parts.append(f"alpha={a}: {len(reports)} cases, {len(failed)} mismatches, {len(degenerate)} degenerate")
    return ok, "; ".join(parts)


def criterion_3():
    parts = []
    ok = True
    for a, b in ((Fraction(1, 2), Fraction(1, 3)), (Fraction(3, 2), Fraction(1, 5)), (Fraction(1, 2), Fraction(1, 2))):
        reports, failed, degenerate = sweep(FamilySpec.jacobi(a, b), 8, 4)
        ok &= not failed
        tag = "gegenbauer" if a == b else "jacobi"
        skipped = ",".join(f"({r.partition})" for r in degenerate)
        parts.append(f"{tag}({a},{b}): {len(reports)} cases, {len(failed)} mismatches, "
                     f"{len(degenerate)} degenerate {skipped}".rstrip())
    return ok, "; ".join(parts)


def criterion_4():
    details = []
    ok = True
    for fam in (HERMITE, FamilySpec.laguerre(Fraction(1, 2))):
        exceptions, flagged, krein_gap = [], [], []
        total = 0
        for ell in range(1, 6):
            for ks in combinations(range(11), ell):
                k = MultiIndex(ks)
                total += 1
                count = sturm_count(wronskian_of(fam, ks), fam.interval)
                admissible = adler_admissible(k)
                if krein_nonnegative(k) and not admissible:
                    ok = False
                    exceptions.append(ks)
                if admissible and not krein_nonnegative(k):
                    krein_gap.append(ks)
                if admissible == (count == 0):
                    continue
                lam = partition_from_multiindex(k)
                if degeneracy_scan(fam, lam, _absent(ks, 2)):
                    flagged.append(ks)
                else:
                    exceptions.append(ks)
        ok &= not exceptions
        details.append(f"{fam.label}: {total} multi-indices, {len(exceptions)} exceptions, {len(flagged)} degenerate, "
                       f"{len(krein_gap)} admissible but not Krein")
    return ok, "; ".join(details)


def _absent(ks, count):
    out, n = [], 0
    while len(out) < count:
        if n not in ks:
            out.append(n)
        n += 1
    return out


def criterion_5():
    # taken literally: even l must give n simple roots and interlace with the next one
    bad = []
    for fam in (HERMITE, SHIFTED_LEGENDRE):
        for ell in (2, 4):
            for n in range(6):
                res = karlin_szego_check(fam, n, ell)
                w = wronskian_of(fam, range(n, n + ell))
                simple = all(m == 1 for _, m in isolate_roots(w, fam.interval))
                interlace_ok = n == 0 or res.interlaces_with_next is True
                if res.count != n or not simple or not interlace_ok:
                    bad.append(f"{fam.label} n={n} l={ell}: {res.count} roots")
    detail = f"{len(bad)} of 24 cases off" + (f", e.g. {bad[0]}" if bad else "")
    return not bad, detail


def criterion_6():
    constants = {}
    ok = True
    count = 0
    for w in range(1, 9):
        for lam in partitions(w, w):
            holds, c = duality_check(lam)
            count += 1
            ok &= holds and c is not None and c != 0
            constants[str(lam)] = c
    for lam, c in constants.items():
        log.info("duality constant for (%s): %s", lam, c)
    distinct = sorted(set(constants.values()))
    return ok, f"{count} partitions, constants in {{{', '.join(map(str, distinct[:6]))}{', ...' if len(distinct) > 6 else ''}}}"


def criterion_7():
    cases = []
    bad = 0
    for n in range(1, 4):
        for mu in combinations(range(1, 8), n):
            if sum(mu) > 7:
                continue
            real, imag = felder_counts(mu)
            expected = 2 * sum(m % 2 for m in mu)
            bad += not (real == 0 and imag == expected)
            cases.append(mu)
    return bad == 0, f"{len(cases)} sequences mu, {bad} off the (0, 2*#odd) prediction"


def criterion_8():
    x = RatPoly.x()
    bad = []
    pairs = 0
    for m, n in combinations(range(13), 2):
        pairs += 1
        w = wronskian_of(HERMITE, (m, n))
        repeated = [(f, k) for f, k in squarefree_decomposition(w) if k > 1]
        if m % 2 and n % 2:
            good = repeated == [(x, 3)]
        else:
            good = not repeated
        if not good:
            bad.append((m, n))
    return not bad, f"{pairs} pairs, {len(bad)} violations"


def criterion_9():
    rng = random.Random(20240611)
    families = [
        HERMITE,
        FamilySpec.laguerre(Fraction(1, 2)),
        FamilySpec.laguerre(Fraction(3, 7)),
        FamilySpec.jacobi(Fraction(1, 2), Fraction(1, 3)),
        FamilySpec.jacobi(Fraction(3, 2), Fraction(1, 5)),
    ]
    ok = True
    for _ in range(50):
        fam = rng.choice(families)
        ell = rng.randint(1, 3)
        weight = rng.randint(0, 6)
        cuts = sorted(rng.randint(0, weight) for _ in range(ell - 1))
        parts = sorted(b - a for a, b in zip([0] + cuts, cuts + [weight]))
        ks = list(Partition(tuple(parts)).multiindex().indices)
        j, k = rng.sample([i for i in range(max(ks) + 4) if i not in ks], 2)
        base = wronskian_of(fam, ks)
        a = wronskian_of(fam, ks + [j])
        b = wronskian_of(fam, ks + [k])
        ok &= wronskian_of(fam, ks + [j, k]) * base == a * derivative(b) - derivative(a) * b
    return ok, "50 seeded instances"


def criterion_10():
    details = []
    ok = True
    for name, fam in (("shifted Legendre", SHIFTED_LEGENDRE), ("weight 1+x on (0,1)", LINEAR_WEIGHT)):
        try:
            reports = [verify_partition(fam, lam) for lam in partitions(6, 6)]
        except Exception as exc:  # the harness must classify every case
            ok = False
            details.append(f"{name}: harness error {exc!r}")
            continue
        status = [r.status for r in reports]
        ok &= all(s in ("pass", "mismatch", "degenerate") for s in status)
        details.append(f"{name}: {len(reports)} cases, {status.count('pass')} pass, "
                       f"{status.count('degenerate')} degenerate, {status.count('mismatch')} findings")
    return ok, "; ".join(details)


CRITERIA = {
    1: ("Hermite sweep |lambda|<=9, l<=4", criterion_1),
    2: ("Laguerre sweeps |lambda|<=8, l<=4", criterion_2),
    3: ("Jacobi and Gegenbauer sweeps", criterion_3),
    4: ("Adler biconditional, k_l<=10, l<=5", criterion_4),
    5: ("Karlin-Szego consecutive Wronskians", criterion_5),
    6: ("Hermite duality |lambda|<=8", criterion_6),
    7: ("Doubled partitions, sum(mu)<=7", criterion_7),
    8: ("Multiplicities of Wr[H_m,H_n], n<=12", criterion_8),
    9: ("Wronskian identity, 50 random instances", criterion_9),
    10: ("Moment families, |lambda|<=6", criterion_10),
}


def line(number: int) -> str:
    title = CRITERIA[number][0]
    ok, detail = RESULTS[number]
    return f"{'PASS' if ok else 'FAIL'} criterion {number:>2} {title}: {detail}"


@pytest.mark.acceptance
@pytest.mark.parametrize("number", sorted(CRITERIA))
def test_criterion(number):
    ok, detail = CRITERIA[number][1]()
    RESULTS[number] = (ok, detail)
    print(line(number))
    assert ok, detail


if __name__ == "__main__":
    logging.basicConfig(level=logging.WARNING)
    for number in sorted(CRITERIA):
        RESULTS[number] = CRITERIA[number][1]()
        print(line(number), flush=True)
