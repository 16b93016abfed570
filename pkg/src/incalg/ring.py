"""Exact coefficient rings: the integers, the rationals and the integers mod n.

Coefficients are stored *raw* inside elements and maps (``int`` for Z and
Z/n, :class:`fractions.Fraction` for Q) and the :class:`RingSpec` carries the
arithmetic.  :class:`Scalar` wraps a raw value together with its ring for
user-facing code.
"""
from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property

from .errors import InputError

INTEGERS = "Z"
RATIONALS = "Q"
MODN = "Z/n"

_MOD_RE = re.compile(r"^\s*(?:Z|GF)\s*/?\s*\(?\s*(\d+)\s*\)?\s*$")


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class RingSpec:
    """Descriptor of a coefficient ring.

    ``kind`` is one of ``"Z"``, ``"Q"`` or ``"Z/n"``; ``modulus`` is set only
    for the latter.
    """

    kind: str
    modulus: int | None = None

    def __post_init__(self):
        if self.kind == MODN:
            if not isinstance(self.modulus, int) or self.modulus < 2:
                raise InputError(f"Z/n requires an integer n >= 2, got {self.modulus!r}")
        elif self.kind in (INTEGERS, RATIONALS):
            if self.modulus is not None:
                raise InputError(f"ring {self.kind} takes no modulus")
        else:
            raise InputError(f"unknown ring kind {self.kind!r}")

    @classmethod
    def integers(cls) -> RingSpec:
        return cls(INTEGERS)

    @classmethod
    def rationals(cls) -> RingSpec:
        return cls(RATIONALS)

    @classmethod
    def mod(cls, n: int) -> RingSpec:
        return cls(MODN, n)

    @classmethod
    def parse(cls, text: str) -> RingSpec:
        """Parse ``"Z"``, ``"Q"``, ``"Z/5"`` (``"GF(5)"`` is accepted too)."""
        t = str(text).strip()
        if t in ("Z", "ZZ"):
            return cls.integers()
        if t in ("Q", "QQ"):
            return cls.rationals()
        m = _MOD_RE.match(t)
        if m:
            return cls.mod(int(m.group(1)))
        raise InputError(f"cannot parse ring descriptor {text!r}")

    def __str__(self) -> str:
        if self.kind == MODN:
            return f"Z/{self.modulus}"
        return self.kind

    # -- structural predicates -------------------------------------------

    @cached_property
    def is_field(self) -> bool:
        if self.kind == RATIONALS:
            return True
        if self.kind == MODN:
            return _is_prime(self.modulus)
        return False

    @cached_property
    def is_two_torsion_free(self) -> bool:
        """True iff ``2a = 0`` forces ``a = 0``."""
        if self.kind == MODN:
            return self.modulus % 2 == 1
        return True

    @property
    def characteristic(self) -> int:
        return self.modulus if self.kind == MODN else 0

    # -- raw arithmetic --------------------------------------------------

    @property
    def zero(self):
        return Fraction(0) if self.kind == RATIONALS else 0

    @property
    def one(self):
        return Fraction(1) if self.kind == RATIONALS else 1

    def coerce(self, value):
        """Canonical raw value of ``value`` (int, Fraction, Scalar or string)."""
        if isinstance(value, Scalar):
            if value.ring != self:
                raise InputError(f"scalar from ring {value.ring} used in ring {self}")
            return value.value
        if isinstance(value, str):
            return self.parse_value(value)
        if isinstance(value, bool):
            value = int(value)
        if self.kind == INTEGERS:
            if isinstance(value, Fraction):
                if value.denominator != 1:
                    raise InputError(f"{value} is not an integer")
                return value.numerator
            if isinstance(value, int):
                return value
        elif self.kind == RATIONALS:
            if isinstance(value, (int, Fraction)):
                return Fraction(value)
        else:
            n = self.modulus
            if isinstance(value, int):
                return value % n
            if isinstance(value, Fraction):
                den = value.denominator % n
                try:
                    inv = pow(den, -1, n)
                except ValueError:
                    raise InputError(f"{value} has no image in {self}") from None
                return value.numerator * inv % n
        raise InputError(f"cannot interpret {value!r} in ring {self}")

    def parse_value(self, text: str):
        t = str(text).strip().replace("−", "-")
        try:
            if "/" in t:
                num, den = t.split("/")
                value = Fraction(int(num), int(den))
            else:
                value = int(t)
        except (ValueError, ZeroDivisionError):
            raise InputError(f"cannot parse scalar {text!r}") from None
        return self.coerce(value)

    def format_value(self, value) -> str:
        return str(value)

    def add(self, a, b):
        if self.kind == MODN:
            return (a + b) % self.modulus
        return a + b

    def sub(self, a, b):
        if self.kind == MODN:
            return (a - b) % self.modulus
        return a - b

    def neg(self, a):
        if self.kind == MODN:
            return -a % self.modulus
        return -a

    def mul(self, a, b):
        if self.kind == MODN:
            return a * b % self.modulus
        return a * b

    def inv(self, a):
        if not self.is_field:
            raise ArithmeticError(f"{self} is not a field")
        if a == 0:
            raise ZeroDivisionError(f"0 has no inverse in {self}")
        if self.kind == MODN:
            return pow(a, -1, self.modulus)
        return 1 / a

    def elements(self):
        """All elements of a finite ring, in canonical order."""
        if self.kind != MODN:
            raise InputError(f"{self} is infinite")
        return range(self.modulus)

    def scalar(self, value) -> Scalar:
        return Scalar(self, self.coerce(value))


@dataclass(frozen=True)
class Scalar:
    """An exact ring element tagged with its ring."""

    ring: RingSpec
    value: object

    def _other(self, other):
        if isinstance(other, Scalar):
            if other.ring != self.ring:
                raise InputError(f"ring mismatch: {self.ring} vs {other.ring}")
            return other.value
        return self.ring.coerce(other)

    def __add__(self, other):
        return Scalar(self.ring, self.ring.add(self.value, self._other(other)))

    __radd__ = __add__

    def __sub__(self, other):
        return Scalar(self.ring, self.ring.sub(self.value, self._other(other)))

    def __rsub__(self, other):
        return Scalar(self.ring, self.ring.sub(self._other(other), self.value))

    def __mul__(self, other):
        return Scalar(self.ring, self.ring.mul(self.value, self._other(other)))

    __rmul__ = __mul__

    def __neg__(self):
        return Scalar(self.ring, self.ring.neg(self.value))

    def invert(self) -> Scalar:
        return Scalar(self.ring, self.ring.inv(self.value))

    def is_zero(self) -> bool:
        return self.value == 0

    def __str__(self) -> str:
        return self.ring.format_value(self.value)


def zero(ring: RingSpec) -> Scalar:
    return Scalar(ring, ring.zero)


def one(ring: RingSpec) -> Scalar:
    return Scalar(ring, ring.one)


def is_two_torsion_free(ring: RingSpec) -> bool:
    return ring.is_two_torsion_free


def is_field(ring: RingSpec) -> bool:
    return ring.is_field
