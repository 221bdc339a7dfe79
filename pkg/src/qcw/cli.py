"""Command-line front end: ``qcw verify | sweep | identity``."""

from __future__ import annotations

import argparse
import csv
import json
import logging
import sys
from dataclasses import asdict, dataclass
from pathlib import Path
from typing import Any, Optional

from .campaigns import lookup_statement, run_case
from .congruence import Verdict
from .errors import ConfigError, QcwError
from .sweep import default_jobs, load_config, run_sweep

SCHEMA_VERSION = "1"

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_INAPPLICABLE = 0, 1, 2, 3


@dataclass
class OutputRecord:
    schema_version: str
    statement: str
    params: dict[str, Any]
    verdict: str
    remainder_digest: str
    wall_ms: int
    note: str = ""

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True)

    @classmethod
    def from_json(cls, line: str) -> "OutputRecord":
        return cls(**json.loads(line))


def _jsonable(v):
    if isinstance(v, (list, tuple)):
        return [_jsonable(x) for x in v]
    if isinstance(v, (bool, int, str)) or v is None:
        return v
    return str(v)


def to_record(report) -> OutputRecord:
    return OutputRecord(
        schema_version=SCHEMA_VERSION,
        statement=report.statement,
        params={k: _jsonable(v) for k, v in report.inputs.items()},
        verdict=report.verdict_text,
        remainder_digest=report.remainder_digest(),
        wall_ms=int(round(report.wall_time * 1000)),
        note=report.reason,
    )


def _remainder_text(report) -> Optional[str]:
    rem = getattr(report, "remainder", None)
    if report.verdict is Verdict.FAIL and rem is not None:
        return rem.canonical()
    failures = getattr(report, "failures", None)
    if report.verdict is Verdict.FAIL and failures:
        return json.dumps(failures, sort_keys=True, default=str)
    return None


def dump_remainders(reports, path: Path) -> int:
    """Append every FAIL witness to ``path`` keyed by digest; returns how many were written."""
    written = 0
    with open(path, "a", encoding="utf-8") as fh:
        for rep in reports:
            text = _remainder_text(rep)
            if text is not None:
                fh.write(json.dumps({"statement": rep.statement,
                                     "params": {k: _jsonable(v) for k, v in rep.inputs.items()},
                                     "digest": rep.remainder_digest(),
                                     "remainder": text}, sort_keys=True) + "\n")
                written += 1
    return written


def _parse_kv(items: list[str]) -> dict[str, Any]:
    out = {}
    for item in items:
        if "=" not in item:
            raise ConfigError(f"expected key=value, got {item!r}")
        k, v = item.split("=", 1)
        k = k.strip()
        v = v.strip()
        try:
            out[k] = int(v)
        except ValueError:
            out[k] = v
    return out


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"{self.prog}: error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="qcw", description="Exact verification of q-series congruences and identities.")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    v = sub.add_parser("verify", help="run one case of a statement")
    v.add_argument("statement")
    v.add_argument("params", nargs="*", help="key=value parameters")
    v.add_argument("--dump-remainder", type=Path, metavar="PATH")

    s = sub.add_parser("sweep", help="run every case of an INI config")
    s.add_argument("config", type=Path)
    s.add_argument("--jobs", type=int, default=None, help="worker processes (default $QCW_JOBS or 1)")
    s.add_argument("--timeout-secs", type=float, default=None)
    s.add_argument("--out", type=Path, default=None, help="output file (default stdout)")
    s.add_argument("--format", choices=("jsonl", "csv"), default="jsonl")
    s.add_argument("--seed", type=int, default=None)
    s.add_argument("--dump-remainder", type=Path, metavar="PATH")

    i = sub.add_parser("identity", help="check a transformation or summation identity")
    i.add_argument("which", choices=("andrews", "watson", "gasper", "ms0", "eqmulti"))
    i.add_argument("params", nargs="*", help="d=.. r=.. n=.. for eqmulti")
    i.add_argument("--m", type=int, default=2)
    i.add_argument("--N", type=int, default=2)
    i.add_argument("--n", default=None, help="n_1,...,n_m for gasper/ms0 (default 0,...,0,1)")
    i.add_argument("--points", type=int, default=20)
    i.add_argument("--seed", type=int, default=0)
    i.add_argument("--dump-remainder", type=Path, metavar="PATH")
    return p


def cmd_verify(args) -> int:
    st = lookup_statement(args.statement)
    reports = run_case(st.id, _parse_kv(args.params))
    for rep in reports:
        print(to_record(rep).to_json())
    if args.dump_remainder:
        dump_remainders(reports, args.dump_remainder)
    verdicts = {r.verdict for r in reports}
    if Verdict.FAIL in verdicts:
        return EXIT_FAIL
    if verdicts & {Verdict.INAPPLICABLE, Verdict.TIMEOUT}:
        return EXIT_INAPPLICABLE
    return EXIT_OK


def _write_records(reports, fmt: str, fh) -> None:
    if fmt == "jsonl":
        for rep in reports:
            fh.write(to_record(rep).to_json() + "\n")
        return
    w = csv.writer(fh, lineterminator="\n")
    w.writerow(["statement", "params", "verdict", "wall_ms"])
    for rep in reports:
        rec = to_record(rep)
        w.writerow([rec.statement, json.dumps(rec.params, sort_keys=True), rec.verdict, rec.wall_ms])


def cmd_sweep(args) -> int:
    cfg = load_config(args.config)
    if args.jobs is not None:
        cfg.jobs = args.jobs
    elif cfg.jobs == 1:
        cfg.jobs = default_jobs()
    if args.timeout_secs is not None:
        cfg.timeout_secs = args.timeout_secs
    if args.seed is not None:
        cfg.seed = args.seed
    result = run_sweep(cfg)
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            _write_records(result.reports, args.format, fh)
    else:
        _write_records(result.reports, args.format, sys.stdout)
    if args.dump_remainder:
        dump_remainders(result.reports, args.dump_remainder)
    counts = ", ".join(f"{k}={v}" for k, v in result.summary.items()) or "no cases"
    print(f"{len(result)} reports in {result.wall_time:.2f}s: {counts}", file=sys.stderr)
    return EXIT_FAIL if result.failed else EXIT_OK


def cmd_identity(args) -> int:
    common = {"points": args.points, "seed": args.seed}
    if args.which == "eqmulti":
        kv = _parse_kv(args.params)
        missing = {"d", "r", "n"} - set(kv)
        if missing:
            raise ConfigError(f"eqmulti needs {sorted(missing)}")
        statement, params = "EQ_MULTI", {k: kv[k] for k in ("d", "r", "n")}
    elif args.which in ("andrews", "watson"):
        statement = args.which.upper()
        params = dict(common, N=args.N) if args.which == "watson" else dict(common, m=args.m, N=args.N)
    else:
        n = args.n if args.n is not None else ",".join(["0"] * (args.m - 1) + ["1"])
        statement = "GASPER_KM" if args.which == "gasper" else "MS0"
        params = dict(common, n=n, N=args.N)
    reports = run_case(statement, params)
    for rep in reports:
        print(to_record(rep).to_json())
        failures = {f.get("point"): f for f in getattr(rep, "failures", [])}
        for i, holds in enumerate(getattr(rep, "outcomes", [])):
            point = {"statement": rep.statement, "point": i, "holds": holds}
            if not holds:
                point["witness"] = failures.get(i, failures.get(None))
            print(json.dumps(point, sort_keys=True, default=str))
    if args.dump_remainder:
        dump_remainders(reports, args.dump_remainder)
    verdicts = {r.verdict for r in reports}
    if Verdict.FAIL in verdicts:
        return EXIT_FAIL
    if Verdict.INAPPLICABLE in verdicts:
        return EXIT_USAGE
    return EXIT_OK


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    handler = {"verify": cmd_verify, "sweep": cmd_sweep, "identity": cmd_identity}[args.command]
    try:
        return handler(args)
    except (ConfigError, QcwError, ValueError) as exc:
        print(f"qcw: error: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
