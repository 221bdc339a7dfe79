"""Statement-level verifiers.

Each ``verify_*`` function checks one numbered congruence for one parameter
choice and returns a :class:`CongruenceReport`.  Hypothesis violations are not
errors: they come back as INAPPLICABLE reports naming the failed hypothesis,
so rectangular sweeps document themselves.

The identity statements (Andrews, Watson, Gasper, the vanishing multisum and
the symbolic multisum of the [2dk+r] family) produce :class:`IdentityReport`.
"""

from __future__ import annotations

import hashlib
import math
import time
from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction
from typing import Any, Callable, Optional

from .arith import LaurentPoly, Poly, RatFunc, poly_gcd
from .congruence import (CongruenceReport, Label, Verdict, check_equal, check_zero,
                         inapplicable)
from .cyclotomic import ModulusSpec, Phi, QInt, build_modulus, cyclotomic, q_integer
from .errors import ConfigError, DegeneratePoint, PreconditionViolated
from .qseries import FamilyKind, SummandFamily, pochhammer, summand, truncated_sum
from . import transforms as tf


class MChoice(str, Enum):
    """Truncation point: the statement's short sum or the full sum to n - 1."""

    PAPER = "paper"
    N_MINUS_1 = "n-1"
    HALF = "paper"  # alias used for the (n+1)/2 truncation of the q^2 sums

    @classmethod
    def parse(cls, value) -> "MChoice":
        if isinstance(value, MChoice):
            return value
        text = str(value).strip().lower().replace("_", "-")
        if text in ("paper", "half", "short"):
            return cls.PAPER
        if text in ("n-1", "n-minus-1", "full"):
            return cls.N_MINUS_1
        raise ConfigError(f"unknown truncation choice {value!r} (use 'paper' or 'n-1')")


def _finish(report: CongruenceReport, statement: str, start: float,
            label: Label = Label.THEOREM) -> CongruenceReport:
    report.statement = statement
    report.label = label
    report.wall_time = time.perf_counter() - start
    return report


def _run_zero(statement, f, spec: ModulusSpec, inputs, start, label=Label.THEOREM):
    inputs = dict(inputs, modulus=str(spec))
    rep = check_zero(f, build_modulus(spec), inputs, str(spec))
    return _finish(rep, statement, start, label)


def _run_equal(statement, lhs, rhs, spec: ModulusSpec, inputs, start, label=Label.THEOREM):
    inputs = dict(inputs, modulus=str(spec))
    rep = check_equal(lhs, rhs, build_modulus(spec), inputs, str(spec))
    return _finish(rep, statement, start, label)


# -- hypotheses ---------------------------------------------------------------

def theorem1_violation(d: int, r: int, n: int) -> Optional[str]:
    if d < 3:
        return "d >= 3 required"
    if r > d - 2:
        return "r <= d-2 required"
    if math.gcd(d, r) != 1:
        return "d and r must be coprime"
    if (n + r) % d:
        return "n ≢ −r (mod d)"
    if n < d - r:
        return "n >= d-r required"
    return None


def theorem2_violation(d: int, n: int) -> Optional[str]:
    if d < 3:
        return "d >= 3 required"
    if n < 2:
        # no m with 1 <= m <= n-1 exists; the n = 1 sum is 1, not 0 mod Phi_1
        return "n >= 2 required"
    if math.gcd(d, n) != 1:
        return "gcd(d, n) = 1 required"
    return None


def conjecture1_violation(d: int, n: int) -> Optional[str]:
    if d < 3:
        return "d >= 3 required"
    if n < 1:
        return "n >= 1 required"
    if (n + 1) % d:
        return "n ≢ −1 (mod d)"
    return None


def conjecture2_violation(d: int, n: int) -> Optional[str]:
    if d < 2:
        return "d >= 2 required (d = 2 is exploration only)"
    if n <= 1:
        return "n > 1 required"
    if (n - 1) % d:
        return "n ≢ 1 (mod d)"
    return None


def odd_violation(n: int, n_min: int = 3) -> Optional[str]:
    if n % 2 == 0:
        return "n must be odd"
    if n < n_min:
        return f"n >= {n_min} required"
    return None


def eq_3rd_noa_violation(n: int) -> Optional[str]:
    if n < 2:
        return "n >= 2 required"
    if n % 3 == 0:
        return "n ≢ 0 (mod 3) required"
    return None


def mod_square_violation(alpha: int, r: int, d: int, n: int, k: int) -> Optional[str]:
    if n < 2:
        return "n >= 2 required"
    if d < 1:
        return "d >= 1 required"
    if not 0 <= k <= n:
        return "0 <= k <= n required"
    return None


def lemma_m(d: int, n: int, sign: int) -> Optional[int]:
    """The m in [1, n-1] with d*m = sign (mod n), or None when gcd(d, n) > 1."""
    if n < 2 or math.gcd(d, n) != 1:
        return None
    return (sign * pow(d, -1, n)) % n


def lemma3_violation(d: int, n: int, a: int, k: int, sign: int) -> Optional[str]:
    if d < 1:
        return "d >= 1 required"
    if n < 2:
        return "n >= 2 required"
    if math.gcd(d, n) != 1:
        return "gcd(d, n) = 1 required"
    m = lemma_m(d, n, sign)
    if not 0 <= k <= m:
        return f"0 <= k <= m = {m} required"
    return None


# -- congruence statements ---------------------------------------------------

def verify_theorem1(d: int, r: int, n: int, m_choice=MChoice.N_MINUS_1,
                    power: int = 4) -> CongruenceReport:
    """The [2dk+r] sum modulo Phi_n(q)^power (only power 4 is a proven claim)."""
    start = time.perf_counter()
    m_choice = MChoice.parse(m_choice)
    inputs = {"family": "THM1", "d": d, "r": r, "n": n, "m": m_choice.value}
    if power != 4:
        inputs["power"] = power
    bad = theorem1_violation(d, r, n)
    if bad:
        return inapplicable(bad, inputs, "THM1")
    M = ((d - 1) * n - r) // d if m_choice is MChoice.PAPER else n - 1
    inputs["M"] = M
    f = truncated_sum(SummandFamily(FamilyKind.THM1, d, r), M)
    label = Label.THEOREM if power <= 4 else Label.EXPLORATION
    return _run_zero("THM1", f, ModulusSpec([Phi(n, power)]), inputs, start, label)


def verify_theorem2(d: int, n: int) -> tuple[CongruenceReport, CongruenceReport]:
    """The r = 1 and r = -1 sums to n - 1, each modulo Phi_n(q)."""
    out = []
    for which, family in (("first-1", SummandFamily(FamilyKind.THM1, d, 1) if d >= 3 else None),
                          ("first-2", SummandFamily(FamilyKind.THM2_NEG, d) if d >= 3 else None)):
        start = time.perf_counter()
        inputs = {"family": "THM1" if which == "first-1" else "THM2_NEG",
                  "sum": which, "d": d, "n": n}
        bad = theorem2_violation(d, n)
        if bad:
            out.append(inapplicable(bad, inputs, "THM2"))
            continue
        inputs["M"] = n - 1
        f = truncated_sum(family, n - 1)
        out.append(_run_zero("THM2", f, ModulusSpec([Phi(n)]), inputs, start))
    return out[0], out[1]


def verify_conjecture1(d: int, n: int, m_choice=MChoice.PAPER) -> CongruenceReport:
    start = time.perf_counter()
    m_choice = MChoice.parse(m_choice)
    inputs = {"family": "THM1", "d": d, "r": 1, "n": n, "m": m_choice.value}
    bad = conjecture1_violation(d, n)
    if bad:
        return inapplicable(bad, inputs, "CONJ1")
    M = ((d - 1) * n - 1) // d if m_choice is MChoice.PAPER else n - 1
    inputs["M"] = M
    f = truncated_sum(SummandFamily(FamilyKind.THM1, d, 1), M)
    return _run_zero("CONJ1", f, ModulusSpec([QInt(n), Phi(n, 3)]), inputs, start)


def verify_conjecture2(d: int, n: int, m_choice=MChoice.PAPER) -> CongruenceReport:
    """The r = -1 sum modulo [n]Phi_n(q)^3; d = 2 runs as exploration."""
    start = time.perf_counter()
    m_choice = MChoice.parse(m_choice)
    inputs = {"family": "CONJ2", "d": d, "r": -1, "n": n, "m": m_choice.value}
    label = Label.EXPLORATION if d == 2 else Label.THEOREM
    bad = conjecture2_violation(d, n)
    if bad:
        return inapplicable(bad, inputs, "CONJ2", label)
    M = ((d - 1) * n + 1) // d if m_choice is MChoice.PAPER else n - 1
    inputs["M"] = M
    f = truncated_sum(SummandFamily(FamilyKind.CONJ2, d), M)
    return _run_zero("CONJ2", f, ModulusSpec([QInt(n), Phi(n, 3)]), inputs, start, label)


def verify_eq_3rd_noa(n: int) -> CongruenceReport:
    start = time.perf_counter()
    inputs = {"family": "THM1", "d": 3, "r": 1, "n": n}
    bad = eq_3rd_noa_violation(n)
    if bad:
        return inapplicable(bad, inputs, "EQ_3RD_NOA")
    inputs["M"] = n - 1
    spec = ModulusSpec([QInt(n)] if n % 3 == 1 else [QInt(n), Phi(n)])
    f = truncated_sum(SummandFamily(FamilyKind.THM1, 3, 1), n - 1)
    return _run_zero("EQ_3RD_NOA", f, spec, inputs, start)


def gw2_rhs(n: int) -> LaurentPoly:
    """q^{(1-n)/2}[n] + (n^2-1)(1-q)^2/24 q^{(1-n)/2}[n]^3."""
    qn = LaurentPoly(q_integer(n))
    one_minus_q = LaurentPoly(Poly([1, -1]))
    body = qn + Fraction(n * n - 1, 24) * one_minus_q ** 2 * qn ** 3
    return body.shift((1 - n) // 2)


def verify_gw2(n: int) -> CongruenceReport:
    start = time.perf_counter()
    inputs = {"family": "GENERAL", "d": 2, "r": 1, "n": n}
    bad = odd_violation(n)
    if bad:
        return inapplicable(bad, inputs, "GW2")
    inputs["M"] = (n - 1) // 2
    lhs = truncated_sum(SummandFamily(FamilyKind.GENERAL, 2, 1), (n - 1) // 2)
    return _run_equal("GW2", lhs, gw2_rhs(n), ModulusSpec([QInt(n), Phi(n, 3)]), inputs, start)


def gsdiff_rhs(n: int) -> Poly:
    return -Poly([1, 3, 1]) * q_integer(n) ** 4


def verify_gsdiff(n: int) -> CongruenceReport:
    start = time.perf_counter()
    inputs = {"family": "GENERAL", "d": 2, "r": -1, "n": n}
    bad = odd_violation(n)
    if bad:
        return inapplicable(bad, inputs, "GSDIFF")
    inputs["M"] = (n + 1) // 2
    lhs = truncated_sum(SummandFamily(FamilyKind.GENERAL, 2, -1), (n + 1) // 2)
    return _run_equal("GSDIFF", lhs, gsdiff_rhs(n), ModulusSpec([QInt(n, 4), Phi(n)]),
                      inputs, start)


def _sec5_M(n: int, m_choice: MChoice) -> int:
    return (n + 1) // 2 if m_choice is MChoice.PAPER else n - 1


def verify_sec5_theorem(n: int, m_choice=MChoice.PAPER) -> CongruenceReport:
    start = time.perf_counter()
    m_choice = MChoice.parse(m_choice)
    inputs = {"family": "SEC5", "n": n, "m": "half" if m_choice is MChoice.PAPER else "n-1"}
    bad = odd_violation(n)
    if bad:
        return inapplicable(bad, inputs, "SEC5_THM")
    M = _sec5_M(n, m_choice)
    inputs["M"] = M
    f = truncated_sum(SummandFamily(FamilyKind.SEC5), M)
    return _run_zero("SEC5_THM", f, ModulusSpec([QInt(n, t=2), Phi(n, 2, t=2)]), inputs, start)


def sec5_conjecture_rhs(n: int) -> LaurentPoly:
    """(2q + 2q^{-1} - 1)[n]_{q^2}^4."""
    return LaurentPoly(Poly([2, -1, 2]), -1) * LaurentPoly(q_integer(n, 2) ** 4)


def verify_sec5_conjecture(n: int, m_choice=MChoice.PAPER) -> CongruenceReport:
    """Evidence for the open fifth-power conjecture; never reported as proof."""
    start = time.perf_counter()
    m_choice = MChoice.parse(m_choice)
    inputs = {"family": "SEC5", "n": n, "m": "half" if m_choice is MChoice.PAPER else "n-1"}
    label = Label.CONJECTURE_EVIDENCE
    bad = odd_violation(n)
    if bad:
        return inapplicable(bad, inputs, "SEC5_CONJ", label)
    M = _sec5_M(n, m_choice)
    inputs["M"] = M
    f = truncated_sum(SummandFamily(FamilyKind.SEC5), M)
    spec = ModulusSpec([QInt(n, 4, t=2), Phi(n, t=2)])
    return _run_equal("SEC5_CONJ", f, sec5_conjecture_rhs(n), spec, inputs, start, label)


def verify_lemma_mod_square(alpha: int, r: int, d: int, n: int, k: int) -> CongruenceReport:
    start = time.perf_counter()
    inputs = {"alpha": alpha, "r": r, "d": d, "n": n, "k": k}
    bad = mod_square_violation(alpha, r, d, n, k)
    if bad:
        return inapplicable(bad, inputs, "LEMMA_MOD_SQUARE")
    lhs = pochhammer(r - alpha * n, d, k) * pochhammer(r + alpha * n, d, k)
    diff = lhs - pochhammer(r, d, k) ** 2
    return _run_zero("LEMMA_MOD_SQUARE", diff, ModulusSpec([Phi(n, 2)]), inputs, start)


def _lemma3(statement: str, d: int, n: int, a: int, k: int, sign: int) -> CongruenceReport:
    start = time.perf_counter()
    inputs = {"d": d, "n": n, "a": a, "k": k}
    bad = lemma3_violation(d, n, a, k, sign)
    if bad:
        return inapplicable(bad, inputs, statement)
    m = lemma_m(d, n, sign)
    inputs["m"] = m
    top = a + 1 if sign < 0 else a - 1  # aq or aq^{-1}
    phi = cyclotomic(n)
    for length in (m - k, k):
        raw = pochhammer(d - a, d, length)
        if raw.is_zero() or not poly_gcd(raw.base, phi).is_constant():
            # the congruence is in a generic a; this specialisation makes a
            # denominator vanish mod Phi_n before any cancellation
            return _finish(inapplicable(
                f"(q^d/a; q^d)_{length} is not invertible modulo Phi_{n} at a = q^{a}",
                dict(inputs, m=m), statement), statement, start)

    def ratio(length):
        return RatFunc(pochhammer(top, d, length), pochhammer(d - a, d, length))

    lhs = ratio(m - k)
    if sign < 0:
        expo = m * (d * m - d + 2) // 2 + (d - 1) * k
    else:
        expo = m * (d * m - d - 2) // 2 + (d + 1) * k
    sign_factor = -1 if (m - 2 * k) % 2 else 1
    rhs = ratio(k) * LaurentPoly.monomial(a * (m - 2 * k) + expo, sign_factor)
    return _run_equal(statement, lhs, rhs, ModulusSpec([Phi(n)]), inputs, start)


def verify_lemma_31(d: int, n: int, a_exponent: int, k: int) -> CongruenceReport:
    """Reflection congruence for dm = -1 (mod n), with a = q^a_exponent."""
    return _lemma3("LEMMA_31", d, n, a_exponent, k, -1)


def verify_lemma_32(d: int, n: int, a_exponent: int, k: int) -> CongruenceReport:
    """Reflection congruence for dm = 1 (mod n), with a = q^a_exponent."""
    return _lemma3("LEMMA_32", d, n, a_exponent, k, 1)


def symmetry_reports(d: int, n: int, r: int = 1) -> list[CongruenceReport]:
    """Pairing and tail checks for the r = +-1 summands, modulo Phi_n(q).

    For r = 1 (resp. r = -1) and d m = -1 (resp. 1) mod n, summands k and m-k
    cancel for 0 <= k <= m, and each summand with m < k <= n-1 vanishes.
    """
    if r not in (1, -1):
        raise ValueError("pairing is only claimed for r = 1 and r = -1")
    m = lemma_m(d, n, -r)
    if m is None:
        raise PreconditionViolated("gcd(d, n) = 1 and n >= 2 required")
    family = SummandFamily(FamilyKind.GENERAL, d, r)
    terms = [summand(family, k) for k in range(n)]
    phi = cyclotomic(n)
    out = []
    for k in range(m + 1):
        rep = check_zero(terms[k] + terms[m - k], phi,
                         {"d": d, "n": n, "r": r, "m": m, "k": k, "check": "pair"})
        rep.statement = "SYMMETRY"
        out.append(rep)
    for k in range(m + 1, n):
        rep = check_zero(terms[k], phi, {"d": d, "n": n, "r": r, "m": m, "k": k, "check": "tail"})
        rep.statement = "SYMMETRY"
        out.append(rep)
    return out


# -- identity statements -------------------------------------------------------

@dataclass
class IdentityReport:
    statement: str
    inputs: dict[str, Any]
    verdict: Verdict
    points: int = 0
    failures: list = field(default_factory=list)
    wall_time: float = 0.0
    reason: str = ""
    label: Label = Label.THEOREM
    outcomes: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return self.verdict is Verdict.PASS

    @property
    def verdict_text(self) -> str:
        return self.verdict.value

    def remainder_digest(self) -> str:
        if self.verdict is Verdict.PASS:
            return ""
        if not self.failures:
            return "n/a"
        return hashlib.sha256(repr(self.failures).encode()).hexdigest()


def _identity(statement, inputs, start, checks) -> IdentityReport:
    failures = [c for c in checks if c is not None]
    verdict = Verdict.FAIL if failures else Verdict.PASS
    return IdentityReport(statement, inputs, verdict, points=inputs.get("points", 1),
                          failures=failures, wall_time=time.perf_counter() - start,
                          outcomes=[c is None for c in checks])


def _identity_inapplicable(statement, inputs, reason) -> IdentityReport:
    return IdentityReport(statement, inputs, Verdict.INAPPLICABLE, reason=reason)


def check_andrews(m: int, N: int, points: int = 20, seed=0) -> IdentityReport:
    start = time.perf_counter()
    inputs = {"m": m, "N": N, "points": points, "seed": seed}
    if m < 1 or N < 0:
        return _identity_inapplicable("ANDREWS", inputs, "m >= 1 and N >= 0 required")
    checks = []
    for i, p in enumerate(tf.seeded_points("andrews", points, seed, m=m, N=N)):
        lhs, rhs = tf.andrews_lhs(p), tf.andrews_rhs(p)
        checks.append(None if lhs == rhs else
                      {"point": i, "lhs": str(lhs), "rhs": str(rhs), **p.as_dict()})
    return _identity("ANDREWS", inputs, start, checks)


def check_watson(N: int, points: int = 20, seed=0) -> IdentityReport:
    """Watson's transformation, plus agreement with the m = 2 Andrews verdict."""
    start = time.perf_counter()
    inputs = {"N": N, "points": points, "seed": seed}
    if N < 0:
        return _identity_inapplicable("WATSON", inputs, "N >= 0 required")
    checks = []
    for i, p in enumerate(tf.seeded_points("watson", points, seed, N=N)):
        w = tf.watson_check(p)
        andrews_holds = tf.andrews_lhs(p) == tf.andrews_rhs(p)
        ok = w.holds and andrews_holds == w.holds and w.lhs == tf.andrews_lhs(p)
        checks.append(None if ok else
                      {"point": i, "lhs": str(w.lhs), "rhs": str(w.rhs),
                       "andrews_agrees": andrews_holds == w.holds, **p.as_dict()})
    return _identity("WATSON", inputs, start, checks)


def _parse_nlist(n) -> tuple[int, ...]:
    if isinstance(n, str):
        n = [x for x in n.replace("|", ",").replace("-", ",").split(",") if x.strip()]
    if isinstance(n, int):
        n = (n,)
    return tuple(int(x) for x in n)


def check_gasper(n, N: int, points: int = 20, seed=0) -> IdentityReport:
    start = time.perf_counter()
    n_list = _parse_nlist(n)
    inputs = {"m": len(n_list), "n": list(n_list), "N": N, "points": points, "seed": seed}
    if not n_list:
        return _identity_inapplicable("GASPER_KM", inputs, "m >= 1 required")
    if N <= sum(n_list):
        return _identity_inapplicable("GASPER_KM", inputs, "N > nu required")
    checks = []
    for i, p in enumerate(tf.seeded_points("gasper", points, seed, n_list=n_list, N=N)):
        value = tf.gasper_terminating_sum(p)
        checks.append(None if value == 0 else {"point": i, "value": str(value), **p.as_dict()})
    return _identity("GASPER_KM", inputs, start, checks)


def check_ms0(n, N: int, points: int = 20, seed=0) -> IdentityReport:
    """The multisum vanishes, and Andrews specialised to the Gasper point reproduces the Gasper sum."""
    start = time.perf_counter()
    n_list = _parse_nlist(n)
    inputs = {"m": len(n_list), "n": list(n_list), "N": N, "points": points, "seed": seed}
    if len(n_list) < 2:
        return _identity_inapplicable("MS0", inputs, "m >= 2 required")
    if N <= sum(n_list):
        return _identity_inapplicable("MS0", inputs, "N > nu required")
    checks = []
    for i, p in enumerate(tf.seeded_points("ms0", points, seed, n_list=n_list, N=N)):
        value = tf.lemma_ms0_multisum(p)
        chain = tf.andrews_lhs(tf.gasper_as_andrews_point(p)) == tf.gasper_terminating_sum(p)
        checks.append(None if value == 0 and chain else
                      {"point": i, "value": str(value), "chain": chain, **p.as_dict()})
    return _identity("MS0", inputs, start, checks)


def check_eq_multi(d: int, r: int, n: int) -> IdentityReport:
    """Symbolic equality of the transformed multisum with the truncated [2dk+r] sum."""
    start = time.perf_counter()
    inputs = {"d": d, "r": r, "n": n}
    try:
        L = tf.eq_multi_length(d, r, n)
    except PreconditionViolated as exc:
        return _identity_inapplicable("EQ_MULTI", inputs, str(exc))
    inputs["M"] = L
    lhs = truncated_sum(SummandFamily(FamilyKind.GENERAL, d, r), L)
    rhs = tf.eq_multi_rhs(d, r, n)
    diff = lhs - rhs
    checks = [None if diff.is_zero() else {"difference": str(diff)}]
    return _identity("EQ_MULTI", inputs, start, checks)


# -- registry --------------------------------------------------------------------

@dataclass(frozen=True)
class Statement:
    """Registry entry: parameter names, how to run one case, and the hypothesis check."""

    id: str
    params: tuple[str, ...]
    run: Callable[..., list]
    violation: Callable[..., Optional[str]] = lambda **_: None
    defaults: dict = field(default_factory=dict)
    identity: bool = False


def _as_list(x):
    return list(x) if isinstance(x, tuple) else [x]


def _thm1_violation(d, r, n, m=None, power=4):
    return theorem1_violation(d, r, n)


def _lemma_violation(sign):
    return lambda d, n, a, k: lemma3_violation(d, n, a, k, sign)


STATEMENTS: dict[str, Statement] = {s.id: s for s in [
    Statement("THM1", ("d", "r", "n", "m"),
              lambda d, r, n, m="n-1", power=4: [verify_theorem1(d, r, n, m, power)],
              _thm1_violation, {"m": "n-1", "power": 4}),
    Statement("THM2", ("d", "n"), lambda d, n: _as_list(verify_theorem2(d, n)),
              theorem2_violation),
    Statement("CONJ1", ("d", "n", "m"), lambda d, n, m="paper": [verify_conjecture1(d, n, m)],
              lambda d, n, m=None: conjecture1_violation(d, n), {"m": "paper"}),
    Statement("CONJ2", ("d", "n", "m"), lambda d, n, m="paper": [verify_conjecture2(d, n, m)],
              lambda d, n, m=None: conjecture2_violation(d, n), {"m": "paper"}),
    Statement("EQ_3RD_NOA", ("n",), lambda n: [verify_eq_3rd_noa(n)], eq_3rd_noa_violation),
    Statement("GW2", ("n",), lambda n: [verify_gw2(n)], odd_violation),
    Statement("GSDIFF", ("n",), lambda n: [verify_gsdiff(n)], odd_violation),
    Statement("SEC5_THM", ("n", "m"), lambda n, m="half": [verify_sec5_theorem(n, m)],
              lambda n, m=None: odd_violation(n), {"m": "half"}),
    Statement("SEC5_CONJ", ("n", "m"), lambda n, m="half": [verify_sec5_conjecture(n, m)],
              lambda n, m=None: odd_violation(n), {"m": "half"}),
    Statement("LEMMA_MOD_SQUARE", ("alpha", "r", "d", "n", "k"),
              lambda alpha, r, d, n, k: [verify_lemma_mod_square(alpha, r, d, n, k)],
              mod_square_violation),
    Statement("LEMMA_31", ("d", "n", "a", "k"),
              lambda d, n, a, k: [verify_lemma_31(d, n, a, k)], _lemma_violation(-1)),
    Statement("LEMMA_32", ("d", "n", "a", "k"),
              lambda d, n, a, k: [verify_lemma_32(d, n, a, k)], _lemma_violation(1)),
    Statement("ANDREWS", ("m", "N"),
              lambda m, N, points=20, seed=0: [check_andrews(m, N, points, seed)],
              identity=True, defaults={"points": 20, "seed": 0}),
    Statement("WATSON", ("N",), lambda N, points=20, seed=0: [check_watson(N, points, seed)],
              identity=True, defaults={"points": 20, "seed": 0}),
    Statement("GASPER_KM", ("n", "N"),
              lambda n, N, points=20, seed=0: [check_gasper(n, N, points, seed)],
              lambda n, N: None if N > sum(_parse_nlist(n)) else "N > nu required",
              identity=True, defaults={"points": 20, "seed": 0}),
    Statement("MS0", ("n", "N"), lambda n, N, points=20, seed=0: [check_ms0(n, N, points, seed)],
              lambda n, N: (None if N > sum(_parse_nlist(n)) and len(_parse_nlist(n)) >= 2
                            else "m >= 2 and N > nu required"),
              identity=True, defaults={"points": 20, "seed": 0}),
    Statement("EQ_MULTI", ("d", "r", "n"), lambda d, r, n: [check_eq_multi(d, r, n)],
              identity=True),
]}

_ALIASES = {"EQ3RDNOA": "EQ_3RD_NOA", "3RD_NOA": "EQ_3RD_NOA", "SEC5": "SEC5_THM",
            "SEC5THM": "SEC5_THM", "SEC5CONJ": "SEC5_CONJ", "MOD_SQUARE": "LEMMA_MOD_SQUARE",
            "LEMMA21": "LEMMA_MOD_SQUARE", "LEMMA31": "LEMMA_31", "LEMMA32": "LEMMA_32",
            "GASPER": "GASPER_KM", "EQMULTI": "EQ_MULTI", "LEMMAMODSQUARE": "LEMMA_MOD_SQUARE"}


def lookup_statement(name: str) -> Statement:
    key = str(name).strip().upper().replace("-", "_")
    key = _ALIASES.get(key, _ALIASES.get(key.replace("_", ""), key))
    try:
        return STATEMENTS[key]
    except KeyError:
        raise ConfigError(f"unknown statement {name!r}; known: {', '.join(STATEMENTS)}") from None


def run_case(statement: str, params: dict) -> list:
    """Run one case of a registered statement; returns its report(s)."""
    st = lookup_statement(statement)
    try:
        return st.run(**params)
    except TypeError as exc:
        raise ConfigError(f"bad parameters for {st.id}: {exc}") from None
    except DegeneratePoint as exc:
        return [_identity_inapplicable(st.id, dict(params), str(exc))]
