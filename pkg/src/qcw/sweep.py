"""Grid sweeps: declarative configs, case enumeration and a timeout-aware worker pool.

Config files are INI.  Each section names a statement (``[thm1]``, optionally
suffixed ``[thm1:big]`` to repeat one); keys are parameter ranges::

    [sweep]
    seed = 7
    points = 20

    [thm1]
    d = 3..5
    r = -3..3
    n = 2..40
    m = paper, n-1
    first_n = 2          ; keep the 2 smallest admissible n per (d, r, m)
    admissible_only = yes

Values are comma-separated lists whose items are integers, ``a..b`` ranges
or bare words.  ``k = all`` expands to every admissible k for the lemma
statements; ``nu_max``/``N_extra`` expand the Karlsson-Minton grids.
"""

from __future__ import annotations

import configparser
import itertools
import logging
import multiprocessing as mp
import os
import time
from collections import Counter, deque
from dataclasses import dataclass, field
from multiprocessing.connection import wait
from typing import Optional

from .campaigns import STATEMENTS, lookup_statement, lemma_m, run_case
from .congruence import CongruenceReport, Verdict
from .cyclotomic import prewarm
from .errors import ConfigError

log = logging.getLogger(__name__)

def parse_values(text: str) -> list:
    out: list = []
    for item in str(text).split(","):
        item = item.strip()
        if not item:
            continue
        if ".." in item:
            lo, hi = item.split("..", 1)
            try:
                out.extend(range(int(lo), int(hi) + 1))
            except ValueError:
                raise ConfigError(f"bad range {item!r}") from None
            continue
        try:
            out.append(int(item))
        except ValueError:
            out.append(item)
    return out


@dataclass
class SectionConfig:
    statement: str
    ranges: dict[str, list]
    first_n: Optional[int] = None
    admissible_only: bool = False
    name: str = ""


@dataclass
class CampaignConfig:
    sections: list[SectionConfig] = field(default_factory=list)
    seed: int = 0
    points: int = 20
    jobs: int = 1
    timeout_secs: Optional[float] = None

    def echo(self) -> dict:
        return {
            "seed": self.seed, "points": self.points, "jobs": self.jobs,
            "timeout_secs": self.timeout_secs,
            "sections": [{"name": s.name, "statement": s.statement,
                          "ranges": {k: list(v) for k, v in s.ranges.items()},
                          "first_n": s.first_n, "admissible_only": s.admissible_only}
                         for s in self.sections],
        }


def _truthy(text: str) -> bool:
    value = str(text).strip().lower()
    if value in ("1", "yes", "true", "on"):
        return True
    if value in ("0", "no", "false", "off", ""):
        return False
    raise ConfigError(f"expected a boolean, got {text!r}")


def load_config(source, *, is_text: bool = False) -> CampaignConfig:
    """Parse an INI sweep config from a path (or from text when ``is_text``)."""
    parser = configparser.ConfigParser(inline_comment_prefixes=(";", "#"))
    parser.optionxform = str
    try:
        if is_text:
            parser.read_string(source)
        else:
            with open(source, encoding="utf-8") as fh:
                parser.read_file(fh)
    except (OSError, configparser.Error) as exc:
        raise ConfigError(f"cannot read config: {exc}") from None
    cfg = CampaignConfig()
    for name in parser.sections():
        body = dict(parser[name])
        if name.lower() == "sweep":
            try:
                cfg.seed = int(body.get("seed", cfg.seed))
                cfg.points = int(body.get("points", cfg.points))
                cfg.jobs = int(body.get("jobs", cfg.jobs))
                if body.get("timeout_secs"):
                    cfg.timeout_secs = float(body["timeout_secs"])
            except ValueError as exc:
                raise ConfigError(f"[sweep]: {exc}") from None
            continue
        st = lookup_statement(name.split(":", 1)[0])
        sec = SectionConfig(st.id, {}, name=name)
        for key, value in body.items():
            lk = key.lower()
            if lk == "first_n":
                try:
                    sec.first_n = int(value)
                except ValueError:
                    raise ConfigError(f"[{name}]: first_n must be an integer") from None
            elif lk == "admissible_only":
                sec.admissible_only = _truthy(value)
            elif lk == "n_extra":
                sec.ranges["N_extra"] = parse_values(value)
            elif lk == "nu_max":
                sec.ranges["nu_max"] = parse_values(value)
            elif key in ("N", "n"):
                # gasper-style tuples are written 1|0|0
                if st.id in ("GASPER_KM", "MS0") and key == "n":
                    sec.ranges["n"] = [v for v in (x.strip() for x in value.split(",")) if v]
                else:
                    sec.ranges[key] = parse_values(value)
            else:
                sec.ranges[key] = parse_values(value)
        cfg.sections.append(sec)
    return cfg


def _sortable(v):
    if isinstance(v, bool):
        return (0, int(v))
    if isinstance(v, int):
        return (0, v)
    if isinstance(v, (list, tuple)):
        return (2, tuple(v))
    return (1, str(v))


def case_key(statement: str, params: dict) -> tuple:
    st = STATEMENTS[statement]
    names = list(st.params) + sorted(k for k in params if k not in st.params)
    return (statement, tuple((k, _sortable(params[k])) for k in names if k in params))


def _tuples_with_sum_at_most(length: int, total: int):
    for t in itertools.product(range(total + 1), repeat=length):
        if sum(t) <= total:
            yield t


def _expand_gasper(sec: SectionConfig, st) -> list[dict]:
    r = sec.ranges
    out = []
    if "n" in r:
        n_lists = [tuple(int(x) for x in str(v).replace("|", ",").split(",") if x.strip())
                   for v in r["n"]]
    else:
        ms = r.get("m", [2])
        nu_max = max(r.get("nu_max", [3]))
        n_lists = [t for m in ms for t in _tuples_with_sum_at_most(m, nu_max)]
    for n_list in n_lists:
        nu = sum(n_list)
        if "N" in r:
            Ns = r["N"]
        else:
            Ns = [nu + extra for extra in r.get("N_extra", [1, 2, 3])]
        for N in Ns:
            out.append({"n": "|".join(str(x) for x in n_list), "N": N})
    return out


def expand_section(sec: SectionConfig, seed: int, points: int) -> list[tuple[str, dict]]:
    st = STATEMENTS[sec.statement]
    ranges = dict(sec.ranges)
    if st.id in ("GASPER_KM", "MS0"):
        combos = _expand_gasper(sec, st)
    else:
        ranges.pop("nu_max", None)
        ranges.pop("N_extra", None)
        names = [p for p in st.params if p in ranges or p not in st.defaults]
        extra = [k for k in ranges if k not in st.params and k not in ("points", "seed")]
        if extra and not set(extra) <= set(st.defaults):
            raise ConfigError(f"[{sec.name}]: unknown keys {sorted(set(extra) - set(st.defaults))}")
        names += extra
        missing = [p for p in names if p not in ranges]
        if missing:
            raise ConfigError(f"[{sec.name}]: missing ranges for {missing}")
        lazy_k = ranges.get("k") == ["all"]
        axes = [ranges[p] if not (p == "k" and lazy_k) else [None] for p in names]
        combos = []
        for values in itertools.product(*axes):
            params = dict(zip(names, values))
            if lazy_k:
                for k in _all_k(st.id, params):
                    combos.append(dict(params, k=k))
            else:
                combos.append(params)
    if st.identity and st.id != "EQ_MULTI":
        for c in combos:
            c.setdefault("points", int(ranges.get("points", [points])[0]))
            c.setdefault("seed", int(ranges.get("seed", [seed])[0]))
    if sec.admissible_only or sec.first_n:
        combos = [c for c in combos if _violation(st, c) is None]
    if sec.first_n:
        combos = _first_n(combos, sec.first_n)
    return [(st.id, c) for c in combos]


def _violation(st, params) -> Optional[str]:
    args = {k: v for k, v in params.items() if k not in ("points", "seed")}
    try:
        return st.violation(**args)
    except TypeError:
        return None


def _all_k(statement: str, params: dict) -> list[int]:
    if statement == "LEMMA_MOD_SQUARE":
        return list(range(params["n"] + 1))
    if statement in ("LEMMA_31", "LEMMA_32"):
        m = lemma_m(params["d"], params["n"], -1 if statement == "LEMMA_31" else 1)
        return list(range(m + 1)) if m is not None else [0]
    raise ConfigError(f"'k = all' is not supported for {statement}")


def _first_n(combos: list[dict], limit: int) -> list[dict]:
    groups: dict[tuple, list] = {}
    for c in combos:
        key = tuple(sorted((k, str(v)) for k, v in c.items() if k != "n"))
        groups.setdefault(key, []).append(c)
    out = []
    for group in groups.values():
        out.extend(sorted(group, key=lambda c: c["n"])[:limit])
    return out


def enumerate_cases(cfg: CampaignConfig) -> list[tuple[str, dict]]:
    cases = []
    seen = set()
    for sec in cfg.sections:
        for statement, params in expand_section(sec, cfg.seed, cfg.points):
            key = case_key(statement, params)
            if key not in seen:
                seen.add(key)
                cases.append((statement, params))
    return cases


@dataclass
class ReportSet:
    config: dict
    reports: list = field(default_factory=list)
    wall_time: float = 0.0

    @property
    def summary(self) -> dict[str, int]:
        return dict(sorted(Counter(r.verdict_text for r in self.reports).items()))

    @property
    def failed(self) -> bool:
        return any(r.verdict is Verdict.FAIL for r in self.reports)

    def __len__(self):
        return len(self.reports)


def _timeout_report(statement: str, params: dict, budget: float) -> CongruenceReport:
    return CongruenceReport(inputs=dict(params), verdict=Verdict.TIMEOUT, statement=statement,
                            reason=f"exceeded {budget:g}s budget", wall_time=budget)


def _worker_main(conn) -> None:
    while True:
        msg = conn.recv()
        if msg is None:
            return
        idx, statement, params = msg
        try:
            conn.send((idx, "ok", run_case(statement, params)))
        except Exception as exc:  # reported back, re-raised by the parent
            conn.send((idx, "error", f"{type(exc).__name__}: {exc}"))


class _Worker:
    def __init__(self, ctx):
        self.conn, child = ctx.Pipe()
        self.proc = ctx.Process(target=_worker_main, args=(child,), daemon=True)
        self.proc.start()
        child.close()
        self.task: Optional[int] = None
        self.deadline = float("inf")

    def stop(self, kill: bool = False):
        if kill:
            self.proc.kill()
        else:
            try:
                self.conn.send(None)
            except (BrokenPipeError, OSError):
                pass
        self.proc.join(timeout=5)
        self.conn.close()


def _run_pool(cases, jobs: int, timeout: Optional[float]) -> list[list]:
    ctx = mp.get_context("fork")
    results: list = [None] * len(cases)
    pending = deque(range(len(cases)))
    workers = [_Worker(ctx) for _ in range(max(1, min(jobs, len(cases))))]
    try:
        while pending or any(w.task is not None for w in workers):
            for w in workers:
                if w.task is None and pending:
                    idx = pending.popleft()
                    w.conn.send((idx, *cases[idx]))
                    w.task = idx
                    w.deadline = time.monotonic() + timeout if timeout else float("inf")
            busy = [w for w in workers if w.task is not None]
            nearest = min(w.deadline for w in busy)
            wait_for = None if nearest == float("inf") else max(0.0, nearest - time.monotonic())
            ready = wait([w.conn for w in busy], timeout=wait_for)
            for w in busy:
                if w.conn in ready:
                    try:
                        idx, status, payload = w.conn.recv()
                    except EOFError:
                        raise RuntimeError(f"worker died on case {cases[w.task]}") from None
                    if status == "error":
                        raise ConfigError(f"case {cases[idx]} failed: {payload}")
                    results[idx] = payload
                    w.task = None
            now = time.monotonic()
            for i, w in enumerate(workers):
                if w.task is not None and now >= w.deadline:
                    statement, params = cases[w.task]
                    log.warning("case %s %s timed out", statement, params)
                    results[w.task] = [_timeout_report(statement, params, timeout)]
                    w.stop(kill=True)
                    workers[i] = _Worker(ctx)
    finally:
        for w in workers:
            w.stop(kill=w.task is not None)
    return results


def run_sweep(cfg: CampaignConfig) -> ReportSet:
    """Run every case of ``cfg`` and return reports in case-key order."""
    start = time.perf_counter()
    cases = enumerate_cases(cfg)
    n_max = max((p["n"] for _, p in cases if isinstance(p.get("n"), int)), default=1)
    prewarm(max(n_max, 1))
    if cfg.jobs <= 1 and not cfg.timeout_secs:
        results = [run_case(st, params) for st, params in cases]
    else:
        results = _run_pool(cases, cfg.jobs, cfg.timeout_secs)
    keyed = sorted(zip((case_key(st, p) for st, p in cases), results), key=lambda kv: kv[0])
    reports = [rep for _, reps in keyed for rep in reps]
    return ReportSet(cfg.echo(), reports, time.perf_counter() - start)


def default_jobs() -> int:
    try:
        return max(1, int(os.environ.get("QCW_JOBS", "1")))
    except ValueError:
        return 1
