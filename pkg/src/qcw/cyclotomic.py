"""Cyclotomic polynomials, q-integers and composite congruence moduli."""

from __future__ import annotations

import threading
from dataclasses import dataclass
from enum import Enum
from typing import Iterable

from .arith import Poly, poly_subst_power
from .errors import InvalidIndex

_memo: dict[int, Poly] = {}
_memo_lock = threading.Lock()


def divisors(n: int) -> list[int]:
    small, large = [], []
    i = 1
    while i * i <= n:
        if n % i == 0:
            small.append(i)
            if i * i != n:
                large.append(n // i)
        i += 1
    return small + large[::-1]


def _check_index(n) -> None:
    if not isinstance(n, int) or n < 1:
        raise InvalidIndex(f"index must be a positive integer, got {n!r}")


def cyclotomic(n: int) -> Poly:
    """The n-th cyclotomic polynomial, by exact division of q^n - 1."""
    _check_index(n)
    hit = _memo.get(n)
    if hit is not None:
        return hit
    if n == 1:
        phi = Poly([-1, 1])
    else:
        phi = Poly.monomial(n) - 1
        for d in divisors(n)[:-1]:
            phi = phi.exact_div(cyclotomic(d))
    with _memo_lock:
        return _memo.setdefault(n, phi)


def prewarm(n_max: int) -> None:
    """Fill the memo table up to ``n_max`` (call before forking workers)."""
    for n in range(1, n_max + 1):
        cyclotomic(n)


def q_integer(n: int, t: int = 1) -> Poly:
    """[n]_{q^t} = 1 + q^t + ... + q^{t(n-1)}."""
    _check_index(n)
    return poly_subst_power(Poly([1] * n), t)


class FactorKind(str, Enum):
    CYCLOTOMIC = "CYCLOTOMIC"
    Q_INTEGER = "Q_INTEGER"


@dataclass(frozen=True)
class ModulusFactor:
    kind: FactorKind
    n: int
    t: int = 1
    e: int = 1

    def expand(self) -> Poly:
        if self.t < 1 or self.e < 1:
            raise InvalidIndex(f"substitution power and exponent must be >= 1: {self}")
        if self.kind is FactorKind.CYCLOTOMIC:
            base = poly_subst_power(cyclotomic(self.n), self.t)
        else:
            base = q_integer(self.n, self.t)
        return base ** self.e

    def __str__(self):
        var = "q" if self.t == 1 else f"q^{self.t}"
        if self.kind is FactorKind.CYCLOTOMIC:
            s = f"Phi_{self.n}({var})"
        else:
            s = f"[{self.n}]" if self.t == 1 else f"[{self.n}]_{{{var}}}"
        return s if self.e == 1 else f"{s}^{self.e}"


@dataclass(frozen=True)
class ModulusSpec:
    """Declarative product of cyclotomic / q-integer factors."""

    factors: tuple[ModulusFactor, ...]

    def __init__(self, factors: Iterable[ModulusFactor]):
        object.__setattr__(self, "factors", tuple(factors))

    def __str__(self):
        return "*".join(str(f) for f in self.factors) or "1"


def Phi(n: int, e: int = 1, t: int = 1) -> ModulusFactor:
    return ModulusFactor(FactorKind.CYCLOTOMIC, n, t, e)


def QInt(n: int, e: int = 1, t: int = 1) -> ModulusFactor:
    return ModulusFactor(FactorKind.Q_INTEGER, n, t, e)


def build_modulus(spec: ModulusSpec) -> Poly:
    out = Poly.constant(1)
    for f in spec.factors:
        out = out * f.expand()
    return out
