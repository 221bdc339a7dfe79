"""Decide ``f == 0 (mod m)`` for a rational function ``f`` and polynomial ``m``.

A rational function is congruent to zero modulo ``m`` when its reduced
denominator is invertible modulo ``m`` (gcd 1) and ``m`` divides the
numerator.  Negative powers of ``q`` are harmless because every admissible
modulus is coprime to ``q``.
"""

from __future__ import annotations

import hashlib
import time
from dataclasses import dataclass
from enum import Enum
from typing import Any, Optional

from .arith import Poly, RatFunc, poly_divrem, poly_gcd
from .errors import InvalidModulus


class Verdict(str, Enum):
    PASS = "PASS"
    FAIL = "FAIL"
    INAPPLICABLE = "INAPPLICABLE"
    TIMEOUT = "TIMEOUT"


class Label(str, Enum):
    """What a PASS means: a proven statement, support for an open
    conjecture, or exploration outside any stated claim."""

    THEOREM = "THEOREM"
    CONJECTURE_EVIDENCE = "CONJECTURE-EVIDENCE"
    EXPLORATION = "EXPLORATION"


@dataclass
class CongruenceReport:
    inputs: dict[str, Any]
    verdict: Verdict
    modulus: str = ""
    remainder: Optional[Poly] = None
    denominator_gcd: Optional[Poly] = None
    wall_time: float = 0.0
    reason: str = ""
    statement: str = ""
    label: Label = Label.THEOREM

    @property
    def passed(self) -> bool:
        return self.verdict is Verdict.PASS

    @property
    def verdict_text(self) -> str:
        if self.label is Label.THEOREM or self.verdict in (Verdict.INAPPLICABLE, Verdict.TIMEOUT):
            return self.verdict.value
        return f"{self.label.value}-{self.verdict.value}"

    def remainder_digest(self) -> str:
        if self.verdict is Verdict.PASS:
            return ""
        if self.remainder is None:
            return "n/a"
        return poly_digest(self.remainder)


def poly_digest(p: Poly) -> str:
    return hashlib.sha256(p.canonical().encode()).hexdigest()


def inapplicable(reason: str, inputs=None, statement="", label=Label.THEOREM) -> CongruenceReport:
    return CongruenceReport(inputs=dict(inputs or {}), verdict=Verdict.INAPPLICABLE,
                            reason=reason, statement=statement, label=label)


def _check_modulus(modulus: Poly) -> None:
    if modulus.is_constant():
        raise InvalidModulus("modulus must be a nonconstant polynomial")
    if modulus.coefficient(0) == 0:
        raise InvalidModulus("modulus must be coprime to q")


def check_zero(f, modulus: Poly, inputs=None, modulus_text: str = "") -> CongruenceReport:
    """Report whether ``f`` vanishes modulo ``modulus``."""
    start = time.perf_counter()
    _check_modulus(modulus)
    f = RatFunc.coerce(f)
    text = modulus_text or str(modulus)
    g = poly_gcd(f.den.base, modulus)
    if not g.is_constant():
        return CongruenceReport(
            inputs=dict(inputs or {}), verdict=Verdict.INAPPLICABLE, modulus=text,
            denominator_gcd=g, wall_time=time.perf_counter() - start,
            reason="denominator not invertible modulo the modulus")
    _, rem = poly_divrem(f.num.cleared(), modulus)
    return CongruenceReport(
        inputs=dict(inputs or {}),
        verdict=Verdict.FAIL if rem else Verdict.PASS,
        modulus=text, remainder=rem, denominator_gcd=g,
        wall_time=time.perf_counter() - start)


def check_equal(lhs, rhs, modulus: Poly, inputs=None, modulus_text: str = "") -> CongruenceReport:
    """Report whether ``lhs == rhs`` modulo ``modulus``."""
    start = time.perf_counter()
    diff = RatFunc.coerce(lhs) - RatFunc.coerce(rhs)
    report = check_zero(diff, modulus, inputs, modulus_text)
    report.wall_time = time.perf_counter() - start
    return report

