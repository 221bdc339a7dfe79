"""Exact arithmetic over Q: dense polynomials in ``q``, Laurent polynomials and
reduced rational functions.

Coefficients cross the API as :class:`fractions.Fraction`.  Dense storage and
the heavy operations (multiplication, division with remainder, gcd) are
delegated to FLINT's ``fmpq_poly``; everything here is immutable.
"""

from __future__ import annotations

from fractions import Fraction
from numbers import Rational
from typing import Iterable, Union

import flint

from .errors import DivisorZero, PoleAtPoint, UndefinedGcd

BigRat = Fraction

Scalar = Union[int, Fraction]


def to_bigrat(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    if isinstance(x, flint.fmpq):
        return Fraction(int(x.p), int(x.q))
    if isinstance(x, str):
        return Fraction(x)
    raise TypeError(f"cannot interpret {x!r} as an exact rational")


def _fmpq(x) -> flint.fmpq:
    x = to_bigrat(x)
    return flint.fmpq(x.numerator, x.denominator)


class _ZeroDegree:
    """Degree of the zero polynomial.

    Orders below every integer but refuses arithmetic, so an accidental
    ``deg + 1`` on the zero polynomial raises instead of producing nonsense.
    """

    __slots__ = ()

    def _cmp_ok(self, other):
        return isinstance(other, (int, _ZeroDegree))

    def __lt__(self, other):
        if not self._cmp_ok(other):
            return NotImplemented
        return not isinstance(other, _ZeroDegree)

    def __le__(self, other):
        if not self._cmp_ok(other):
            return NotImplemented
        return True

    def __gt__(self, other):
        if not self._cmp_ok(other):
            return NotImplemented
        return False

    def __ge__(self, other):
        if not self._cmp_ok(other):
            return NotImplemented
        return isinstance(other, _ZeroDegree)

    def __eq__(self, other):
        return isinstance(other, _ZeroDegree)

    def __hash__(self):
        return hash("ZERO_DEGREE")

    def __repr__(self):
        return "ZERO_DEGREE"

    def __reduce__(self):
        return "ZERO_DEGREE"


ZERO_DEGREE = _ZeroDegree()


def _format_terms(coeffs, offset: int = 0, var: str = "q") -> str:
    parts = []
    for i in range(len(coeffs) - 1, -1, -1):
        c = coeffs[i]
        if c == 0:
            continue
        e = i + offset
        mag = abs(c)
        if e == 0:
            body = str(mag)
        else:
            mono = var if e == 1 else f"{var}^{e}" if e > 0 else f"{var}^({e})"
            body = mono if mag == 1 else f"{mag}*{mono}"
        sign = "-" if c < 0 else "+"
        parts.append((sign, body))
    if not parts:
        return "0"
    first_sign, first = parts[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


class Poly:
    """Dense univariate polynomial in ``q`` with rational coefficients."""

    __slots__ = ("_p",)

    def __init__(self, coeffs: Iterable[Scalar] = ()):
        if isinstance(coeffs, flint.fmpq_poly):
            self._p = coeffs
        else:
            self._p = flint.fmpq_poly([_fmpq(c) for c in coeffs])

    @classmethod
    def constant(cls, c: Scalar) -> "Poly":
        return cls([c])

    @classmethod
    def monomial(cls, e: int, c: Scalar = 1) -> "Poly":
        if e < 0:
            raise ValueError("Poly cannot hold negative exponents; use LaurentPoly")
        return cls([0] * e + [c])

    @classmethod
    def gen(cls) -> "Poly":
        return cls([0, 1])

    # -- inspection -------------------------------------------------------
    @property
    def coeffs(self) -> tuple:
        return tuple(to_bigrat(c) for c in self._p.coeffs())

    @property
    def degree(self):
        d = self._p.degree()
        return ZERO_DEGREE if d < 0 else d

    def is_zero(self) -> bool:
        return self._p.is_zero()

    def __bool__(self):
        return not self._p.is_zero()

    def is_constant(self) -> bool:
        return self._p.degree() <= 0

    @property
    def leading_coefficient(self) -> Fraction:
        if self.is_zero():
            return Fraction(0)
        return to_bigrat(self._p[self._p.degree()])

    def coefficient(self, i: int) -> Fraction:
        return to_bigrat(self._p[i]) if i >= 0 else Fraction(0)

    def valuation(self) -> int:
        """Lowest exponent carrying a nonzero coefficient."""
        if self.is_zero():
            raise ValueError("valuation of the zero polynomial is undefined")
        p = self._p
        i = 0
        while p[i] == 0:
            i += 1
        return i

    def is_integral(self) -> bool:
        return self._p.denom() == 1

    # -- arithmetic -------------------------------------------------------
    @staticmethod
    def _raw(other):
        if isinstance(other, Poly):
            return other._p
        if isinstance(other, (int, Fraction, Rational)):
            return flint.fmpq_poly([_fmpq(other)])
        return None

    def __add__(self, other):
        o = self._raw(other)
        if o is None:
            return NotImplemented
        return Poly(self._p + o)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._raw(other)
        if o is None:
            return NotImplemented
        return Poly(self._p - o)

    def __rsub__(self, other):
        o = self._raw(other)
        if o is None:
            return NotImplemented
        return Poly(o - self._p)

    def __mul__(self, other):
        o = self._raw(other)
        if o is None:
            return NotImplemented
        return Poly(self._p * o)

    __rmul__ = __mul__

    def __neg__(self):
        return Poly(-self._p)

    def __pos__(self):
        return self

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("Poly powers must be nonnegative integers")
        return Poly(self._p ** k)

    def __divmod__(self, other):
        if not isinstance(other, Poly):
            other = Poly.constant(other)
        return poly_divrem(self, other)

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def exact_div(self, other: "Poly") -> "Poly":
        quo, rem = poly_divrem(self, other)
        if rem:
            raise ArithmeticError(f"{other} does not divide {self}")
        return quo

    def scale(self, c: Scalar) -> "Poly":
        return Poly(self._p * _fmpq(c))

    def shift(self, k: int) -> "Poly":
        """Multiply by ``q**k``; negative ``k`` must only drop zero coefficients."""
        if k >= 0:
            return Poly(self._p.left_shift(k)) if k else self
        if self and self.valuation() < -k:
            raise ValueError("shift would create negative exponents")
        return Poly(self._p.right_shift(-k))

    def monic(self) -> "Poly":
        if self.is_zero():
            return self
        return Poly(self._p / self._p[self._p.degree()])

    def subst_power(self, t: int) -> "Poly":
        return poly_subst_power(self, t)

    def __call__(self, x) -> Fraction:
        return to_bigrat(self._p(_fmpq(x)))

    # -- comparison / display --------------------------------------------
    def __eq__(self, other):
        o = self._raw(other)
        if o is None:
            return NotImplemented
        return self._p == o

    def __hash__(self):
        return hash(("Poly", self.coeffs))

    def __reduce__(self):
        return (Poly, (self.coeffs,))

    def canonical(self) -> str:
        """Stable text form: ascending coefficients, comma separated."""
        return ",".join(str(c) for c in self.coeffs)

    def __str__(self):
        return _format_terms(self.coeffs)

    def __repr__(self):
        return f"Poly('{self}')"


def poly_divrem(a: Poly, b: Poly) -> tuple[Poly, Poly]:
    """Return ``(quotient, remainder)`` with ``a = b*quotient + remainder``."""
    if b.is_zero():
        raise DivisorZero("polynomial division by zero")
    quo, rem = divmod(a._p, b._p)
    return Poly(quo), Poly(rem)


def poly_gcd(a: Poly, b: Poly) -> Poly:
    """Monic greatest common divisor."""
    if a.is_zero() and b.is_zero():
        raise UndefinedGcd("gcd(0, 0) is undefined")
    return Poly(a._p.gcd(b._p)).monic()


def poly_subst_power(a: Poly, t: int) -> Poly:
    """Return ``a(q**t)``."""
    if not isinstance(t, int) or t < 1:
        raise ValueError("substitution power must be a positive integer")
    if t == 1 or a.is_constant():
        return a
    src = a.coeffs
    out = [0] * ((len(src) - 1) * t + 1)
    for i, c in enumerate(src):
        out[i * t] = c
    return Poly(out)


class LaurentPoly:
    """``q**offset * base`` with ``base(0) != 0`` (or the zero value)."""

    __slots__ = ("base", "offset")

    def __init__(self, base=0, offset: int = 0):
        if not isinstance(base, Poly):
            base = Poly.constant(to_bigrat(base))
        if base.is_zero():
            offset = 0
        else:
            v = base.valuation()
            if v:
                base = base.shift(-v)
                offset += v
        object.__setattr__(self, "base", base)
        object.__setattr__(self, "offset", offset)

    def __setattr__(self, name, value):
        raise AttributeError("LaurentPoly is immutable")

    @classmethod
    def monomial(cls, e: int, c: Scalar = 1) -> "LaurentPoly":
        return cls(Poly.constant(c), e)

    @classmethod
    def coerce(cls, x) -> "LaurentPoly":
        if isinstance(x, LaurentPoly):
            return x
        if isinstance(x, Poly):
            return cls(x)
        return cls(Poly.constant(to_bigrat(x)))

    def is_zero(self) -> bool:
        return self.base.is_zero()

    def __bool__(self):
        return not self.is_zero()

    @property
    def max_exponent(self):
        if self.is_zero():
            return ZERO_DEGREE
        return self.offset + self.base.degree

    def to_poly(self) -> Poly:
        if self.offset < 0:
            raise ValueError(f"{self} has negative exponents")
        return self.base.shift(self.offset)

    def cleared(self) -> Poly:
        """Polynomial left after multiplying away any negative powers of ``q``."""
        return self.base.shift(max(self.offset, 0))

    @staticmethod
    def _try(other):
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, (Poly, int, Fraction, Rational)):
            return LaurentPoly.coerce(other)
        return None

    def __add__(self, other):
        o = self._try(other)
        if o is None:
            return NotImplemented
        if o.is_zero():
            return self
        if self.is_zero():
            return o
        m = min(self.offset, o.offset)
        return LaurentPoly(self.base.shift(self.offset - m) + o.base.shift(o.offset - m), m)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly(-self.base, self.offset)

    def __sub__(self, other):
        o = self._try(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._try(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._try(other)
        if o is None:
            return NotImplemented
        return LaurentPoly(self.base * o.base, self.offset + o.offset)

    __rmul__ = __mul__

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("LaurentPoly powers must be nonnegative integers")
        return LaurentPoly(self.base ** k, self.offset * k)

    def shift(self, k: int) -> "LaurentPoly":
        return LaurentPoly(self.base, self.offset + k) if self else self

    def __call__(self, x) -> Fraction:
        x = to_bigrat(x)
        if x == 0 and self.offset < 0:
            raise PoleAtPoint("negative power of q evaluated at 0")
        return x ** self.offset * self.base(x)

    def __eq__(self, other):
        o = self._try(other)
        if o is None:
            return NotImplemented
        return self.offset == o.offset and self.base == o.base

    def __hash__(self):
        return hash(("LaurentPoly", self.offset, self.base))

    def __reduce__(self):
        return (LaurentPoly, (self.base, self.offset))

    def __str__(self):
        return _format_terms(self.base.coeffs, self.offset)

    def __repr__(self):
        return f"LaurentPoly('{self}')"


class RatFunc:
    """Reduced quotient ``num/den`` of Laurent polynomials.

    ``den`` always has offset 0 and leading coefficient 1, and the polynomial
    parts of ``num`` and ``den`` are coprime.
    """

    __slots__ = ("num", "den")

    def __init__(self, num=0, den=1):
        num = LaurentPoly.coerce(num)
        den = LaurentPoly.coerce(den)
        if den.is_zero():
            raise DivisorZero("rational function with zero denominator")
        if num.is_zero():
            num, den = LaurentPoly(), LaurentPoly(1)
        else:
            g = poly_gcd(num.base, den.base)
            nb = num.base.exact_div(g) if not g.is_constant() else num.base
            db = den.base.exact_div(g) if not g.is_constant() else den.base
            lc = db.leading_coefficient
            if lc != 1:
                nb = nb.scale(1 / lc)
                db = db.scale(1 / lc)
            num = LaurentPoly(nb, num.offset - den.offset)
            den = LaurentPoly(db)
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    def __setattr__(self, name, value):
        raise AttributeError("RatFunc is immutable")

    @classmethod
    def coerce(cls, x) -> "RatFunc":
        if isinstance(x, RatFunc):
            return x
        return cls(x)

    @staticmethod
    def _try(other):
        if isinstance(other, RatFunc):
            return other
        if isinstance(other, (LaurentPoly, Poly, int, Fraction, Rational)):
            return RatFunc(other)
        return None

    def is_zero(self) -> bool:
        return self.num.is_zero()

    def __bool__(self):
        return not self.is_zero()

    def __add__(self, other):
        o = self._try(other)
        if o is None:
            return NotImplemented
        if self.den == o.den:
            return RatFunc(self.num + o.num, self.den)
        return RatFunc(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self):
        # already reduced; skip the gcd
        out = object.__new__(RatFunc)
        object.__setattr__(out, "num", -self.num)
        object.__setattr__(out, "den", self.den)
        return out

    def __sub__(self, other):
        o = self._try(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._try(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._try(other)
        if o is None:
            return NotImplemented
        return RatFunc(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._try(other)
        if o is None:
            return NotImplemented
        if o.is_zero():
            raise DivisorZero("division by the zero rational function")
        return RatFunc(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        o = self._try(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, k: int):
        if k >= 0:
            return RatFunc(self.num ** k, self.den ** k)
        if self.is_zero():
            raise DivisorZero("negative power of zero")
        return RatFunc(self.den ** -k, self.num ** -k)

    def __call__(self, x) -> Fraction:
        return ratfunc_eval(self, x)

    def __eq__(self, other):
        o = self._try(other)
        if o is None:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        return hash(("RatFunc", self.num, self.den))

    def __reduce__(self):
        return (RatFunc, (self.num, self.den))

    def __str__(self):
        if self.den.base.is_constant():
            return str(self.num)
        return f"({self.num})/({self.den})"

    def __repr__(self):
        return f"RatFunc('{self}')"


def ratfunc_normalize(num, den) -> RatFunc:
    """Cancel common factors and normalise ``den`` to offset 0, monic."""
    return RatFunc(num, den)


def ratfunc_eval(f: RatFunc, x) -> Fraction:
    x = to_bigrat(x)
    d = f.den(x)
    if d == 0:
        raise PoleAtPoint(f"{f} has a pole at q = {x}")
    return f.num(x) / d


q = Poly.gen()
