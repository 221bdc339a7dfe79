"""Exception hierarchy shared by every qcw module."""


class QcwError(Exception):
    """Base class for all errors raised by qcw."""


class DivisorZero(QcwError, ZeroDivisionError):
    """Division by the zero polynomial (or a zero denominator)."""


class UndefinedGcd(QcwError, ValueError):
    """gcd(0, 0) was requested."""


class PoleAtPoint(QcwError, ZeroDivisionError):
    """A rational function was evaluated at one of its poles."""


class InvalidIndex(QcwError, ValueError):
    """A cyclotomic polynomial or q-integer was requested for n < 1."""


class InvalidFamilyParams(QcwError, ValueError):
    """Summand family parameters outside the family's domain."""


class InvalidModulus(QcwError, ValueError):
    """A congruence modulus that is constant or divisible by q."""


class DegeneratePoint(QcwError, ZeroDivisionError):
    """A parameter point makes some denominator factor vanish."""


class PreconditionViolated(QcwError, ValueError):
    """An identity was requested outside the range where it is claimed."""


class ConfigError(QcwError, ValueError):
    """Malformed sweep configuration or command-line parameters."""
