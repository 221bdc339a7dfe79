"""q-shifted factorials with monomial arguments and the summands of every
truncated sum handled by the verifiers.

All summands share one shape::

    bracket(k) * (q^top; q^step)_k^power / (q^step; q^step)_k^power * q^(shift*k)

where ``bracket(k)`` is a product of q-integers (a Laurent polynomial, since
[m] with m < 0 equals -q^m [-m]).
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Callable

from .arith import LaurentPoly, Poly, RatFunc
from .errors import InvalidFamilyParams


def one_minus_q_pow(x: int) -> LaurentPoly:
    """1 - q^x for any integer x."""
    if x == 0:
        return LaurentPoly()
    if x > 0:
        return LaurentPoly(1 - Poly.monomial(x))
    return LaurentPoly(Poly.monomial(-x) - 1, x)


def pochhammer(e: int, d: int, k: int) -> LaurentPoly:
    """(q^e; q^d)_k = prod_{j<k} (1 - q^(e + d j))."""
    if d < 1:
        raise ValueError("pochhammer step must be positive")
    if k < 0:
        raise ValueError("pochhammer length must be nonnegative")
    out = LaurentPoly(1)
    for j in range(k):
        out = out * one_minus_q_pow(e + d * j)
        if out.is_zero():
            break
    return out


def q_bracket(m: int, t: int = 1) -> LaurentPoly:
    """[m]_{q^t} = (1 - q^(t m)) / (1 - q^t), for any integer m."""
    if t < 1:
        raise ValueError("substitution power must be positive")
    if m == 0:
        return LaurentPoly()
    if m > 0:
        return LaurentPoly(Poly(([1] + [0] * (t - 1)) * (m - 1) + [1]))
    return -q_bracket(-m, t).shift(t * m)


class FamilyKind(str, Enum):
    THM1 = "THM1"
    THM2_NEG = "THM2_NEG"
    CONJ2 = "CONJ2"
    SEC5 = "SEC5"
    GENERAL = "GENERAL"


@dataclass(frozen=True)
class _Shape:
    bracket: Callable[[int], LaurentPoly]
    top: int
    step: int
    power: int
    shift: int


@dataclass(frozen=True)
class SummandFamily:
    """One of the summand families.

    THM1 is ``[2dk+r] (q^r;q^d)_k^{2d}/(q^d;q^d)_k^{2d} q^{d(d-1-r)k}`` with
    d >= 3; THM2_NEG and CONJ2 are its r = -1 case; GENERAL is the same
    formula for any d >= 1 (d = 2 gives the quartic sums with [4k+1] and
    [4k-1]).  SEC5 is ``[4k-1]_{q^2}[4k-1]^2 (q^-2;q^4)_k^4/(q^4;q^4)_k^4 q^{4k}``.
    """

    kind: FamilyKind
    d: int = 0
    r: int = 0

    def __post_init__(self):
        kind = FamilyKind(self.kind)
        object.__setattr__(self, "kind", kind)
        if kind in (FamilyKind.THM2_NEG, FamilyKind.CONJ2):
            object.__setattr__(self, "r", -1)
        if kind is FamilyKind.SEC5:
            object.__setattr__(self, "d", 0)
            object.__setattr__(self, "r", 0)
            return
        min_d = 1 if kind is FamilyKind.GENERAL else 2 if kind is FamilyKind.CONJ2 else 3
        if not isinstance(self.d, int) or self.d < min_d:
            raise InvalidFamilyParams(f"{kind.value} needs integer d >= {min_d}, got d={self.d!r}")
        if not isinstance(self.r, int):
            raise InvalidFamilyParams(f"r must be an integer, got {self.r!r}")

    def shape(self) -> _Shape:
        if self.kind is FamilyKind.SEC5:
            def bracket(k):
                m = 4 * k - 1
                return q_bracket(m, 2) * q_bracket(m) ** 2

            return _Shape(bracket, top=-2, step=4, power=4, shift=4)
        d, r = self.d, self.r
        return _Shape(lambda k: q_bracket(2 * d * k + r), top=r, step=d,
                      power=2 * d, shift=d * (d - 1 - r))


def summand(family: SummandFamily, k: int) -> RatFunc:
    """The k-th term of the family as a reduced rational function."""
    if k < 0:
        raise ValueError("summand index must be nonnegative")
    s = family.shape()
    num = s.bracket(k) * pochhammer(s.top, s.step, k) ** s.power
    num = num.shift(s.shift * k)
    den = pochhammer(s.step, s.step, k) ** s.power
    return RatFunc(num, den)


def truncated_sum(family: SummandFamily, M: int) -> RatFunc:
    """Sum of summands k = 0..M over the common denominator (q^step;q^step)_M^power.

    The numerator is assembled by a Horner scheme in the factors
    (1 - q^(step k))^power, and the quotient is reduced once at the end.
    """
    if M < 0:
        raise ValueError("truncation point must be nonnegative")
    s = family.shape()
    acc = LaurentPoly()
    top_pow = LaurentPoly(1)
    for k in range(M + 1):
        if k:
            top_pow = top_pow * one_minus_q_pow(s.top + s.step * (k - 1)) ** s.power
            acc = acc * one_minus_q_pow(s.step * k) ** s.power
        acc = acc + (s.bracket(k) * top_pow).shift(s.shift * k)
    den = pochhammer(s.step, s.step, M) ** s.power
    return RatFunc(acc, den)
