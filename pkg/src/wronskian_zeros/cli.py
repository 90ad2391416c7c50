"""Command-line harness: single-partition verification, sweeps and targeted checks.

Exit codes: 0 agreement, 1 formula mismatch, 2 degenerate case skipped,
3 bad input data (e.g. moments that are not positive definite), 64 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path
from typing import Iterator, Optional, Sequence

from .errors import MomentsNotPositiveDefinite, WronskianZerosError
from .families import FamilySpec, load_moments
from .polyalg import Interval, as_rational, format_rational
from .theorems import (
    CSV_COLUMNS,
    VerificationReport,
    alternating_sum,
    duality_check,
    felder_counts,
    karlin_szego_check,
    verify_partition,
)
from .wronskian import Partition, conjugate, doubled_partition

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_DEGENERATE = 2
EXIT_DATA = 3
EXIT_USAGE = 64

WORKERS_ENV = "WRONSKIAN_ZEROS_WORKERS"


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


@dataclass
class SweepConfig:
    family: FamilySpec
    max_weight: int
    max_length: int
    probes: int = 2
    output: Optional[Path] = None
    format: str = "json"
    parallelism: int = 1

    def __post_init__(self):
        if self.max_weight < 1:
            raise UsageError("max_weight must be at least 1")
        if self.max_length < 1:
            raise UsageError("max_length must be at least 1")
        if self.parallelism < 1:
            raise UsageError("parallelism must be at least 1")
        if self.probes < 0:
            raise UsageError("probe count must be nonnegative")
        if self.format not in ("json", "csv"):
            raise UsageError(f"unknown format {self.format!r}; use json or csv")


def partitions(max_weight: int, max_length: int) -> Iterator[Partition]:
    """Partitions with positive parts, ordered by weight, then length, then lexicographically."""

    def gen(n: int, smallest: int, slots: int) -> Iterator[tuple[int, ...]]:
        if n == 0:
            yield ()
            return
        if slots == 0:
            return
        for p in range(smallest, n + 1):
            for rest in gen(n - p, p, slots - 1):
                yield (p,) + rest

    for w in range(1, max_weight + 1):
        for ell in range(1, min(w, max_length) + 1):
            for parts in gen(w, 1, ell):
                if len(parts) == ell:
                    yield Partition(parts)


def _family_from_args(kind: Optional[str], alpha, beta, moments, support) -> FamilySpec:
    if kind is None:
        raise UsageError("--family is required")
    kind = kind.lower()
    try:
        if kind == "hermite":
            return FamilySpec.hermite()
        if kind == "laguerre":
            if alpha is None:
                raise UsageError("laguerre needs --alpha (e.g. --alpha 1/2)")
            return FamilySpec.laguerre(as_rational(str(alpha)))
        if kind in ("jacobi", "gegenbauer"):
            if alpha is None:
                raise UsageError(f"{kind} needs --alpha")
            if beta is None:
                if kind == "jacobi":
                    raise UsageError("jacobi needs --beta")
                beta = alpha
            return FamilySpec.jacobi(as_rational(str(alpha)), as_rational(str(beta)))
        if kind == "moments":
            if moments is None or support is None:
                raise UsageError("moments family needs --moments FILE and --support lo,hi")
            return FamilySpec.from_moments(load_moments(moments), Interval.parse(support))
    except (ValueError, ZeroDivisionError) as exc:
        if isinstance(exc, MomentsNotPositiveDefinite):
            raise
        raise UsageError(str(exc)) from exc
    raise UsageError(f"unknown family {kind!r}; choose hermite, laguerre, jacobi, gegenbauer or moments")


def _parse_ints(text: str, what: str) -> list[int]:
    try:
        return [int(s) for s in text.split(",") if s.strip()]
    except ValueError as exc:
        raise UsageError(f"cannot parse {what} {text!r}: expected comma-separated integers") from exc


def _parse_partition(text: str) -> Partition:
    try:
        return Partition.parse(text)
    except WronskianZerosError as exc:
        raise UsageError(f"bad partition {text!r}: {exc}") from exc


def _exit_for(report: VerificationReport) -> int:
    return {"pass": EXIT_OK, "mismatch": EXIT_MISMATCH, "degenerate": EXIT_DEGENERATE}[report.status]


def _describe(report: VerificationReport) -> str:
    lines = [
        f"family      {report.family.label} on {report.family.interval}",
        f"partition   {report.partition}  (k = {','.join(map(str, report.partition.multiindex().indices))})",
    ]
    pred = report.predicted
    if isinstance(pred, int):
        lines.append(f"predicted   {pred} real zeros")
    else:
        lines.append(
            f"predicted   {pred.total_distinct} distinct real zeros "
            f"(origin multiplicity {pred.origin_multiplicity}, {pred.positive_count} positive, "
            f"{pred.negative_count} negative)"
        )
    lines.append(f"exact       {report.exact_count} distinct real zeros, origin multiplicity {report.exact_origin_mult}")
    if report.exact_positive is not None:
        lines.append(f"            {report.exact_positive} positive, {report.exact_negative} negative")
    lines.append(f"multiplicities {report.root_multiplicities}")
    if report.endpoint_roots:
        lines.append(f"warning     roots on the interval endpoints: {[format_rational(e) for e in report.endpoint_roots]}")
    if report.witnesses:
        lines.append(f"degenerate  {len(report.witnesses)} common-root witness(es) for probes {list(report.probes)}")
    if report.conjecture_probe:
        lines.append("label       conjecture probe")
    lines.append(f"status      {report.status}")
    return "\n".join(lines)


def _emit_report(report: VerificationReport, as_json: bool, out) -> None:
    if as_json:
        print(json.dumps(report.to_dict(), indent=2), file=out)
    else:
        print(_describe(report), file=out)


def cmd_verify(args, out) -> int:
    fam = _family_from_args(args.family, args.alpha, args.beta, args.moments, args.support)
    lam = _parse_partition(args.partition)
    probes = _parse_ints(args.probes, "probes") if args.probes else None
    report = verify_partition(fam, lam, probes=probes, probe_count=args.probe_count)
    _emit_report(report, args.json, out)
    return _exit_for(report)


def cmd_moments(args, out) -> int:
    args.family = "moments"
    return cmd_verify(args, out)


def _verify_one(job: tuple[FamilySpec, Partition, int]) -> VerificationReport:
    fam, lam, probes = job
    return verify_partition(fam, lam, probe_count=probes)


def run_sweep(cfg: SweepConfig) -> list[VerificationReport]:
    jobs = [(cfg.family, lam, cfg.probes) for lam in partitions(cfg.max_weight, cfg.max_length)]
    if cfg.parallelism == 1 or len(jobs) < 2:
        reports = [_verify_one(j) for j in jobs]
    else:
        with ProcessPoolExecutor(max_workers=cfg.parallelism) as pool:
            reports = list(pool.map(_verify_one, jobs, chunksize=4))
    reports.sort(key=VerificationReport.sort_key)
    return reports


def summarize(reports: Sequence[VerificationReport]) -> dict:
    statuses = [r.status for r in reports]
    return {
        "total": len(reports),
        "passed": statuses.count("pass"),
        "degenerate": statuses.count("degenerate"),
        "failed": statuses.count("mismatch"),
    }


def render_sweep(cfg: SweepConfig, reports: Sequence[VerificationReport]) -> str:
    if cfg.format == "csv":
        buf = io.StringIO()
        writer = csv.DictWriter(buf, fieldnames=CSV_COLUMNS, lineterminator="\n")
        writer.writeheader()
        for r in reports:
            writer.writerow(r.csv_row())
        return buf.getvalue()
    doc = {
        "family": cfg.family.label,
        "interval": str(cfg.family.interval),
        "max_weight": cfg.max_weight,
        "max_length": cfg.max_length,
        "probes": cfg.probes,
        "summary": summarize(reports),
        "reports": [r.to_dict() for r in reports],
    }
    return json.dumps(doc, indent=2) + "\n"


_SWEEP_KEYS = ("family", "alpha", "beta", "moments", "support", "max_weight", "max_length",
               "probes", "output", "format", "workers")


def _sweep_config(args) -> SweepConfig:
    settings: dict = {}
    if args.config:
        try:
            loaded = json.loads(Path(args.config).read_text())
        except (OSError, json.JSONDecodeError) as exc:
            raise UsageError(f"cannot read config {args.config}: {exc}") from exc
        if not isinstance(loaded, dict):
            raise UsageError("config file must hold a JSON object")
        unknown = set(loaded) - set(_SWEEP_KEYS)
        if unknown:
            raise UsageError(f"unknown config keys: {sorted(unknown)}")
        settings.update(loaded)
    for key in _SWEEP_KEYS:
        value = getattr(args, key)
        if value is not None:
            settings[key] = value
    fam = _family_from_args(settings.get("family"), settings.get("alpha"), settings.get("beta"),
                            settings.get("moments"), settings.get("support"))
    workers = settings.get("workers")
    if workers is None:
        env = os.environ.get(WORKERS_ENV)
        try:
            workers = int(env) if env else 1
        except ValueError as exc:
            raise UsageError(f"{WORKERS_ENV} must be an integer, got {env!r}") from exc
    try:
        return SweepConfig(
            family=fam,
            max_weight=int(settings.get("max_weight", 4)),
            max_length=int(settings.get("max_length", 4)),
            probes=int(settings.get("probes", 2)),
            output=Path(settings["output"]) if settings.get("output") else None,
            format=settings.get("format", "json"),
            parallelism=int(workers),
        )
    except (TypeError, ValueError) as exc:
        raise UsageError(str(exc)) from exc


def cmd_sweep(args, out) -> int:
    cfg = _sweep_config(args)
    reports = run_sweep(cfg)
    text = render_sweep(cfg, reports)
    if cfg.output is None:
        out.write(text)
    else:
        cfg.output.write_text(text)
    s = summarize(reports)
    print(
        f"total={s['total']} passed={s['passed']} degenerate={s['degenerate']} failed={s['failed']}",
        file=sys.stderr if cfg.output is None else out,
    )
    return EXIT_OK if s["failed"] == 0 else EXIT_MISMATCH


def cmd_felder(args, out) -> int:
    mu = _parse_ints(args.mu, "mu")
    try:
        lam = doubled_partition(mu)
    except WronskianZerosError as exc:
        raise UsageError(str(exc)) from exc
    real, imaginary = felder_counts(mu)
    expected_imag = 2 * sum(m % 2 for m in mu)
    print(f"doubled partition {lam}", file=out)
    print(f"real       {real} (expected 0)", file=out)
    print(f"imaginary  {imaginary} (expected {expected_imag})", file=out)
    return EXIT_OK if real == 0 and imaginary == expected_imag else EXIT_MISMATCH


def cmd_duality(args, out) -> int:
    lam = _parse_partition(args.partition)
    holds, c = duality_check(lam)
    print(f"partition  {lam}  conjugate {conjugate(lam)}", file=out)
    print(f"holds      {str(holds).lower()}", file=out)
    print(f"constant   {format_rational(c) if c is not None else 'n/a'}", file=out)
    return EXIT_OK if holds else EXIT_MISMATCH


def cmd_karlin(args, out) -> int:
    fam = _family_from_args(args.family, args.alpha, args.beta, args.moments, args.support)
    if args.n < 0 or args.ell < 1:
        raise UsageError("need n >= 0 and ell >= 1")
    res = karlin_szego_check(fam, args.n, args.ell)
    expected = alternating_sum((args.n,) * args.ell)
    print(f"W({args.n},{args.ell}) roots in {fam.interval}: {res.count} (expected {expected})", file=out)
    print(f"W({args.n + 1},{args.ell}) roots: {res.next_count}", file=out)
    inter = "n/a" if res.interlaces_with_next is None else str(res.interlaces_with_next).lower()
    print(f"interlaces with next: {inter}", file=out)
    ok = res.count == expected and res.interlaces_with_next is not False
    return EXIT_OK if ok else EXIT_MISMATCH


def _add_family_flags(p: argparse.ArgumentParser, required: bool = True) -> None:
    p.add_argument("--family", required=required, default=None,
                   help="hermite | laguerre | jacobi | gegenbauer | moments")
    p.add_argument("--alpha", default=None, help="rational parameter, e.g. 1/2")
    p.add_argument("--beta", default=None, help="rational parameter, e.g. 1/3")
    p.add_argument("--moments", default=None, help="JSON array of \"p/q\" moment strings")
    p.add_argument("--support", default=None, help="orthogonality interval for moments, e.g. 0,1 or -inf,inf")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="wronskian-zeros", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", parser_class=_Parser)
    sub.required = True

    v = sub.add_parser("verify", help="verify the zero-count formula for one partition")
    _add_family_flags(v)
    v.add_argument("--partition", required=True, help='"1,3" (nondecreasing) or "k=1,4"')
    v.add_argument("--probes", default=None, help="explicit degeneracy probe indices, e.g. 4,5")
    v.add_argument("--probe-count", type=int, default=2)
    v.add_argument("--json", action="store_true", help="print the report as JSON")
    v.set_defaults(func=cmd_verify)

    s = sub.add_parser("sweep", help="verify every partition up to the given bounds")
    _add_family_flags(s, required=False)
    s.add_argument("--max-weight", dest="max_weight", type=int, default=None)
    s.add_argument("--max-length", dest="max_length", type=int, default=None)
    s.add_argument("--probes", type=int, default=None, help="number of degeneracy probes (default 2)")
    s.add_argument("--output", default=None)
    s.add_argument("--format", default=None, choices=("json", "csv"))
    s.add_argument("--workers", type=int, default=None, help=f"worker processes (default ${WORKERS_ENV} or 1)")
    s.add_argument("--config", default=None, help="JSON file with the same keys as the flags")
    s.set_defaults(func=cmd_sweep)

    f = sub.add_parser("felder", help="real and imaginary roots for a doubled partition")
    f.add_argument("--mu", required=True, help="strictly increasing positive integers, e.g. 1,3")
    f.set_defaults(func=cmd_felder)

    d = sub.add_parser("duality", help="compare H of the conjugate partition with the rotated H")
    d.add_argument("--partition", required=True)
    d.set_defaults(func=cmd_duality)

    k = sub.add_parser("karlin", help="consecutive-index Wronskians: counts and interlacing")
    _add_family_flags(k)
    k.add_argument("--n", type=int, required=True)
    k.add_argument("--ell", type=int, required=True)
    k.set_defaults(func=cmd_karlin)

    m = sub.add_parser("moments", help="verify a partition for a moment-defined family")
    m.add_argument("--file", dest="moments", required=True)
    m.add_argument("--support", required=True)
    m.add_argument("--partition", required=True)
    m.add_argument("--probes", default=None)
    m.add_argument("--probe-count", type=int, default=2)
    m.add_argument("--json", action="store_true")
    m.set_defaults(func=cmd_moments, alpha=None, beta=None)
    return parser


def main(argv: Optional[Sequence[str]] = None, out=None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args, out)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except MomentsNotPositiveDefinite as exc:
        print(f"error: moments are not positive definite (Hankel order {exc.order}): {exc}", file=sys.stderr)
        return EXIT_DATA
    except WronskianZerosError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DATA


if __name__ == "__main__":
    sys.exit(main())
