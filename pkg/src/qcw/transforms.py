"""Exact checks of the very-well-poised transformation and summation formulas.

Generic-parameter identities (Andrews' multiseries transformation, Watson's
8phi7 -> 4phi3 transformation, the terminating Gasper/Karlsson-Minton
summation and the multisum derived from them) are evaluated exactly at
rational parameter points.  ``a`` is always drawn as a square ``s**2`` so the
factors built from ``sqrt(a)`` stay rational.

The fully symbolic multisum :func:`eq_multi_rhs` lives here too; there every
parameter is a power of ``q`` and the result is a :class:`RatFunc`.
"""

from __future__ import annotations

import itertools
import math
import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

from .arith import LaurentPoly, RatFunc, to_bigrat
from .errors import DegeneratePoint, PreconditionViolated
from .qseries import one_minus_q_pow, pochhammer


def pochhammer_at(x, q_val, k: int) -> Fraction:
    """(x; q)_k evaluated exactly."""
    x, q_val = to_bigrat(x), to_bigrat(q_val)
    out = Fraction(1)
    t = x
    for _ in range(k):
        out *= 1 - t
        t *= q_val
    return out


def _poch_prod(args, q_val, k) -> Fraction:
    out = Fraction(1)
    for x in args:
        out *= pochhammer_at(x, q_val, k)
    return out


def _quotient(uppers, lowers, q_val, k, what: str) -> Fraction:
    den = _poch_prod(lowers, q_val, k)
    if den == 0:
        raise DegeneratePoint(f"vanishing denominator factor in {what} at index {k}")
    return _poch_prod(uppers, q_val, k) / den


def compositions(parts: int, total_max: int) -> Iterator[tuple[int, ...]]:
    """All tuples of ``parts`` nonnegative integers with sum <= ``total_max``."""
    if parts == 0:
        yield ()
        return
    for first in range(total_max + 1):
        for rest in compositions(parts - 1, total_max - first):
            yield (first,) + rest


def partial_sums(j: Sequence[int]) -> list[int]:
    return list(itertools.accumulate(j))


@dataclass(frozen=True)
class ParamPoint:
    """Rational parameter point for the generic-parameter identities.

    ``b`` and ``c`` feed Andrews/Watson, ``e`` and ``n_list`` feed the
    Gasper summation and the derived multisum.
    """

    q_val: Fraction
    sqrt_a: Fraction
    b: tuple = ()
    c: tuple = ()
    e: tuple = ()
    n_list: tuple = ()
    N: int = 0
    m: int = 1

    def __post_init__(self):
        for name in ("q_val", "sqrt_a"):
            object.__setattr__(self, name, to_bigrat(getattr(self, name)))
        for name in ("b", "c", "e"):
            object.__setattr__(self, name, tuple(to_bigrat(x) for x in getattr(self, name)))
        object.__setattr__(self, "n_list", tuple(int(x) for x in self.n_list))
        values = (self.q_val, self.sqrt_a) + self.b + self.c + self.e
        if any(v == 0 for v in values):
            raise DegeneratePoint("parameters must be nonzero")
        if self.N < 0 or any(x < 0 for x in self.n_list):
            raise ValueError("N and n_i must be nonnegative")

    @property
    def a(self) -> Fraction:
        return self.sqrt_a ** 2

    @property
    def nu(self) -> int:
        return sum(self.n_list)

    def as_dict(self) -> dict:
        return {
            "q": str(self.q_val), "sqrt_a": str(self.sqrt_a),
            "b": [str(x) for x in self.b], "c": [str(x) for x in self.c],
            "e": [str(x) for x in self.e], "n": list(self.n_list),
            "N": self.N, "m": self.m,
        }


def _vwp_lowers(p: ParamPoint) -> list:
    s, q = p.sqrt_a, p.q_val
    return [q, s, -s]


def andrews_lhs(p: ParamPoint) -> Fraction:
    """Very-well-poised side of Andrews' transformation, terminating at k = N."""
    q, a, s, N, m = p.q_val, p.a, p.sqrt_a, p.N, p.m
    if len(p.b) != m or len(p.c) != m:
        raise ValueError("andrews point needs m values of b and of c")
    uppers = [a, q * s, -q * s, *p.b, *p.c, q ** -N]
    lowers = _vwp_lowers(p) + [a * q / x for x in p.b] + [a * q / x for x in p.c] + [a * q ** (N + 1)]
    z = a ** m * q ** (m + N)
    for x in p.b + p.c:
        z /= x
    return sum(_quotient(uppers, lowers, q, k, "andrews lhs") * z ** k for k in range(N + 1))


def andrews_prefactor(p: ParamPoint) -> Fraction:
    q, a, N = p.q_val, p.a, p.N
    bm, cm = p.b[-1], p.c[-1]
    return _quotient([a * q, a * q / (bm * cm)], [a * q / bm, a * q / cm], q, N, "andrews prefactor")


def andrews_multisum(p: ParamPoint) -> Fraction:
    """The (m-1)-fold sum on the right of Andrews' transformation (no prefactor)."""
    q, a, N, m = p.q_val, p.a, p.N, p.m
    b, c = p.b, p.c
    total = Fraction(0)
    for j in compositions(m - 1, N):
        J = partial_sums(j)
        Jlast = J[-1] if J else 0
        term = Fraction(1)
        for i in range(m - 1):
            term *= _quotient([a * q / (b[i] * c[i])], [q], q, j[i], "andrews multisum")
            term *= _quotient([b[i + 1], c[i + 1]], [a * q / b[i], a * q / c[i]], q, J[i],
                              "andrews multisum")
        term *= _quotient([q ** -N], [b[-1] * c[-1] * q ** -N / a], q, Jlast, "andrews multisum")
        for i in range(m - 2):
            term *= (a * q / (b[i + 1] * c[i + 1])) ** J[i]
        total += term * q ** Jlast
    return total


def andrews_rhs(p: ParamPoint) -> Fraction:
    return andrews_prefactor(p) * andrews_multisum(p)


def watson_lhs(q_val, sqrt_a, b, c, d, e, n: int) -> Fraction:
    """Terminating 8phi7 with upper parameter q^-n."""
    q, s = to_bigrat(q_val), to_bigrat(sqrt_a)
    a = s * s
    uppers = [a, q * s, -q * s, b, c, d, e, q ** -n]
    lowers = [q, s, -s, a * q / b, a * q / c, a * q / d, a * q / e, a * q ** (n + 1)]
    z = a * a * q ** (n + 2) / (b * c * d * e)
    return sum(_quotient(uppers, lowers, q, k, "8phi7") * z ** k for k in range(n + 1))


def watson_rhs(q_val, sqrt_a, b, c, d, e, n: int) -> Fraction:
    """Prefactor times the balanced 4phi3."""
    q, s = to_bigrat(q_val), to_bigrat(sqrt_a)
    a = s * s
    pre = _quotient([a * q, a * q / (d * e)], [a * q / d, a * q / e], q, n, "watson prefactor")
    uppers = [a * q / (b * c), d, e, q ** -n]
    lowers = [q, a * q / b, a * q / c, d * e * q ** -n / a]
    return pre * sum(_quotient(uppers, lowers, q, k, "4phi3") * q ** k for k in range(n + 1))


@dataclass(frozen=True)
class IdentityCheck:
    lhs: Fraction
    rhs: Fraction

    @property
    def holds(self) -> bool:
        return self.lhs == self.rhs


def watson_roles(p: ParamPoint) -> tuple:
    """Map an m = 2 Andrews point to Watson's (b, c, d, e, n)."""
    if p.m != 2:
        raise ValueError("Watson roles need an m = 2 point")
    return p.b[0], p.c[0], p.b[1], p.c[1], p.N


def watson_check(p: ParamPoint) -> IdentityCheck:
    b, c, d, e, n = watson_roles(p)
    return IdentityCheck(watson_lhs(p.q_val, p.sqrt_a, b, c, d, e, n),
                         watson_rhs(p.q_val, p.sqrt_a, b, c, d, e, n))


def gasper_terminating_sum(p: ParamPoint) -> Fraction:
    """Left side of the terminating very-well-poised Karlsson-Minton sum (claimed 0 for N > nu)."""
    if len(p.e) != len(p.n_list) or not p.e:
        raise ValueError("gasper point needs matching e and n lists, m >= 1")
    if p.N <= p.nu:
        raise PreconditionViolated(f"summation is only claimed for N > nu (N={p.N}, nu={p.nu})")
    q, a, s, N = p.q_val, p.a, p.sqrt_a, p.N
    uppers = [a, q * s, -q * s, q ** -N]
    lowers = _vwp_lowers(p) + [a * q ** (N + 1)]
    for ei, ni in zip(p.e, p.n_list):
        uppers += [ei, a * q ** (ni + 1) / ei]
        lowers += [a * q / ei, ei * q ** -ni]
    z = q ** (N - p.nu)
    return sum(_quotient(uppers, lowers, q, k, "gasper sum") * z ** k for k in range(N + 1))


def gasper_as_andrews_point(p: ParamPoint) -> ParamPoint:
    """Specialise Andrews' b_i -> a q^{n_i+1}/e_i, c_i -> e_{i+1} (e_{m+1} = e_1)."""
    m = len(p.e)
    a, q = p.a, p.q_val
    b = tuple(a * q ** (p.n_list[i] + 1) / p.e[i] for i in range(m))
    c = tuple(p.e[(i + 1) % m] for i in range(m))
    return ParamPoint(q, p.sqrt_a, b=b, c=c, N=p.N, m=m)


def lemma_ms0_multisum(p: ParamPoint) -> Fraction:
    """(m-1)-fold multisum obtained from Andrews + Gasper; claimed to vanish."""
    m = len(p.e)
    if m < 2:
        raise PreconditionViolated("the multisum needs m >= 2")
    if len(p.n_list) != m:
        raise ValueError("need one n_i per e_i")
    if p.N <= p.nu:
        raise PreconditionViolated(f"multisum is only claimed for N > nu (N={p.N}, nu={p.nu})")
    q, a, N = p.q_val, p.a, p.N
    e = p.e + (p.e[0],)
    n = p.n_list
    total = Fraction(0)
    for j in compositions(m - 1, N):
        J = partial_sums(j)
        term = Fraction(1)
        for i in range(m - 1):
            term *= _quotient([e[i] * q ** -n[i] / e[i + 1]], [q], q, j[i], "multisum")
            term *= _quotient([a * q ** (n[i + 1] + 1) / e[i + 1], e[i + 2]],
                              [e[i] * q ** -n[i], a * q / e[i + 1]], q, J[i], "multisum")
        term *= _quotient([q ** -N], [e[0] * q ** (n[m - 1] - N + 1) / e[m - 1]], q, J[-1],
                          "multisum")
        for i in range(m - 2):
            term *= (a * q) ** J[i] / (a * q ** (n[i + 1] + 1) * e[i + 2] / e[i + 1]) ** J[i]
        total += term * q ** J[-1]
    return total


# -- seeded points ----------------------------------------------------------

_Q_CHOICES = tuple(Fraction(x) for x in ("2", "3", "1/2", "1/3", "-2", "2/3", "3/2", "-1/2",
                                          "5/2", "-3", "4/3", "3/5"))
_SMALL = tuple(sorted({Fraction(p, r) for p in range(-7, 8) for r in range(1, 6) if p},
                      key=lambda x: (x.denominator, x.numerator)))
_ROOTS = tuple(x for x in _SMALL if abs(x) != 1)

MAX_DRAWS = 2000


def _rng(seed, *tags) -> random.Random:
    return random.Random(":".join(str(t) for t in (seed,) + tags))


def draw_andrews_point(rng: random.Random, m: int, N: int) -> ParamPoint:
    return ParamPoint(rng.choice(_Q_CHOICES), rng.choice(_ROOTS),
                      b=tuple(rng.choice(_SMALL) for _ in range(m)),
                      c=tuple(rng.choice(_SMALL) for _ in range(m)), N=N, m=m)


def draw_gasper_point(rng: random.Random, n_list: Sequence[int], N: int) -> ParamPoint:
    m = len(n_list)
    return ParamPoint(rng.choice(_Q_CHOICES), rng.choice(_ROOTS),
                      e=tuple(rng.choice(_SMALL) for _ in range(m)),
                      n_list=tuple(n_list), N=N, m=m)


def seeded_points(kind: str, count: int, seed, *, m: int = 2, N: int = 0,
                  n_list: Sequence[int] = ()) -> list[ParamPoint]:
    """Deterministic nondegenerate points for ``kind`` in {andrews, watson, gasper, ms0}.

    Candidates whose evaluation hits a vanishing denominator are rejected and
    redrawn from the same stream.
    """
    rng = _rng(seed, kind, m, N, tuple(n_list))
    out: list[ParamPoint] = []
    draws = 0
    while len(out) < count:
        draws += 1
        if draws > MAX_DRAWS:
            raise DegeneratePoint(f"could not find {count} nondegenerate {kind} points")
        try:
            if kind in ("andrews", "watson"):
                p = draw_andrews_point(rng, 2 if kind == "watson" else m, N)
                andrews_lhs(p)
                andrews_rhs(p)
                if kind == "watson":
                    watson_check(p)
            elif kind in ("gasper", "ms0"):
                p = draw_gasper_point(rng, n_list, N)
                gasper_terminating_sum(p)
                if kind == "ms0":
                    lemma_ms0_multisum(p)
                    andrews_prefactor(gasper_as_andrews_point(p))
            else:
                raise ValueError(f"unknown identity kind {kind!r}")
        except DegeneratePoint:
            continue
        out.append(p)
    return out


# -- the symbolic (d-1)-fold multisum for the [2dk+r] family -----------------

def eq_multi_length(d: int, r: int, n: int) -> int:
    """((d-1)n - r)/d after checking the divisibility and coprimality conditions."""
    if d < 2 or n < 1:
        raise PreconditionViolated("need d >= 2 and n >= 1")
    if math.gcd(d, r) != 1:
        raise PreconditionViolated(f"d={d} and r={r} must be coprime")
    if ((d - 1) * n - r) % d:
        raise PreconditionViolated(f"n={n} must satisfy n = -r (mod d)")
    L = ((d - 1) * n - r) // d
    if L < 0:
        raise PreconditionViolated("need (d-1)n >= r")
    return L


def _poch_ratio(num_args, den_args, d, k) -> RatFunc:
    num = LaurentPoly(1)
    for x in num_args:
        num = num * pochhammer(x, d, k)
    den = LaurentPoly(1)
    for x in den_args:
        den = den * pochhammer(x, d, k)
    return RatFunc(num, den)


def eq_multi_rhs(d: int, r: int, n: int) -> RatFunc:
    """The m = d, q -> q^d case of Andrews' transformation applied to the
    [2dk+r] sum truncated at L = ((d-1)n - r)/d, as an exact function of q."""
    L = eq_multi_length(d, r, n)
    big = (d - 1) * n
    pre = RatFunc(one_minus_q_pow(r), one_minus_q_pow(1))
    pre = pre * _poch_ratio([d + r, -big], [d, r - big], d, L)
    acc = RatFunc(0)
    for j in compositions(d - 1, L):
        J = partial_sums(j)
        Jlast = J[-1]
        num = LaurentPoly(1)
        den = LaurentPoly(1)
        for i in range(d - 1):
            num = num * pochhammer(d - r, d, j[i])
            den = den * pochhammer(d, d, j[i]) * pochhammer(d, d, J[i]) ** 2
        for i in range(d - 2):
            num = num * pochhammer(r, d, J[i]) ** 2
        num = num * pochhammer(r, d, Jlast) * pochhammer(d + big, d, Jlast)
        num = num * pochhammer(r - big, d, Jlast)
        if num.is_zero():
            continue
        den = den * pochhammer(d + r, d, Jlast)
        inner = sum(J[: d - 2])
        num = num.shift((d + r) * inner + d * Jlast - 2 * r * inner)
        acc = acc + RatFunc(num, den)
    return pre * acc
