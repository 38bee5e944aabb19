"""Exact coefficient fields: GF(p) for prime p, and the rational numbers.

Elements are immutable `Scalar` values in canonical form -- GF(p) elements
are residues in ``range(p)``, rationals are reduced `fractions.Fraction`s
(positive denominator, gcd 1, zero is 0/1).  Canonical form is unique, so
equality is plain representational equality and scalars can be shared
freely between threads.

Floating point is deliberately absent: the synthesis engine branches on
"discrepancy == 0" and an approximate zero test would corrupt the whole
degree sequence.
"""

from __future__ import annotations

from fractions import Fraction
from math import isqrt

from .errors import FieldMismatchError, ParseError

# GF(p) residues stay machine-word sized and products of two residues fit
# in a signed 64-bit integer, which the array kernels rely on.
MAX_MODULUS = 2**31


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f <= isqrt(n):
        if n % f == 0:
            return False
        f += 2
    return True


class Scalar:
    """A field element in canonical form.

    Arithmetic is exact and pure; mixing elements of different fields
    raises `FieldMismatchError`.
    """

    __slots__ = ("field", "value")

    def __init__(self, field: Field, value):
        self.field = field
        self.value = value

    def _check(self, other: "Scalar") -> "Scalar":
        if not isinstance(other, Scalar):
            raise TypeError(f"expected Scalar, got {type(other).__name__}")
        if other.field != self.field:
            raise FieldMismatchError(f"{self.field.spec} vs {other.field.spec}")
        return other

    def __add__(self, other):
        other = self._check(other)
        return Scalar(self.field, self.field._add(self.value, other.value))

    def __sub__(self, other):
        other = self._check(other)
        return Scalar(self.field, self.field._sub(self.value, other.value))

    def __mul__(self, other):
        other = self._check(other)
        return Scalar(self.field, self.field._mul(self.value, other.value))

    def __truediv__(self, other):
        other = self._check(other)
        if not other:
            raise ZeroDivisionError("division by the zero scalar")
        return Scalar(self.field, self.field._mul(self.value, self.field._inv(other.value)))

    def __neg__(self):
        return Scalar(self.field, self.field._neg(self.value))

    def inverse(self) -> "Scalar":
        if not self:
            raise ZeroDivisionError("the zero scalar has no inverse")
        return Scalar(self.field, self.field._inv(self.value))

    def __bool__(self) -> bool:
        return self.value != 0

    def __eq__(self, other):
        return (
            isinstance(other, Scalar)
            and self.field == other.field
            and self.value == other.value
        )

    def __hash__(self):
        return hash((self.field, self.value))

    def __str__(self) -> str:
        return str(self.value)

    def __repr__(self) -> str:
        return f"Scalar({self.field.spec}, {self.value})"


class Field:
    """Interface shared by the concrete fields.

    `spec` follows the grammar used everywhere (CLI included):
    ``gf2``, ``gf:<p>`` for a decimal prime p, ``q`` for the rationals.
    """

    __slots__ = ()

    spec: str

    def scalar(self, value) -> Scalar:
        """Canonicalize `value` (int, Fraction or Scalar) into this field."""
        if isinstance(value, Scalar):
            if value.field != self:
                raise FieldMismatchError(f"{value.field.spec} scalar used in {self.spec}")
            return value
        return Scalar(self, self._canon(value))

    def from_int(self, k: int) -> Scalar:
        """Canonical image of the integer k in this field."""
        return Scalar(self, self._canon(int(k)))

    @property
    def zero(self) -> Scalar:
        return self.from_int(0)

    @property
    def one(self) -> Scalar:
        return self.from_int(1)

    # raw-value arithmetic, implemented by subclasses
    def _canon(self, value):
        raise NotImplementedError

    def _add(self, a, b):
        raise NotImplementedError

    def _sub(self, a, b):
        raise NotImplementedError

    def _mul(self, a, b):
        raise NotImplementedError

    def _neg(self, a):
        raise NotImplementedError

    def _inv(self, a):
        raise NotImplementedError

    def parse_scalar(self, token: str) -> Scalar:
        raise NotImplementedError

    def scalar_to_json(self, s: Scalar):
        """JSON-friendly rendering: int where possible, 'a/b' otherwise."""
        raise NotImplementedError

    @property
    def is_finite(self) -> bool:
        raise NotImplementedError


class PrimeField(Field):
    """GF(p) with residues stored as plain Python integers.

    The modulus is checked for primality by trial division at construction:
    failing fast beats silently computing in a non-field.  p must satisfy
    2 <= p < 2**31.
    """

    __slots__ = ("p",)

    def __init__(self, p: int):
        p = int(p)
        if not 2 <= p < MAX_MODULUS:
            raise ValueError(f"modulus must satisfy 2 <= p < 2**31, got {p}")
        if not _is_prime(p):
            raise ValueError(f"modulus {p} is not prime")
        self.p = p

    @property
    def spec(self) -> str:
        return "gf2" if self.p == 2 else f"gf:{self.p}"

    @property
    def order(self) -> int:
        return self.p

    @property
    def is_finite(self) -> bool:
        return True

    def _canon(self, value):
        if isinstance(value, Fraction):
            if value.denominator != 1:
                raise TypeError("cannot coerce a non-integer fraction into GF(p)")
            value = value.numerator
        if not isinstance(value, int):
            raise TypeError(f"GF({self.p}) values must be integers, got {type(value).__name__}")
        return value % self.p

    def _add(self, a, b):
        return (a + b) % self.p

    def _sub(self, a, b):
        return (a - b) % self.p

    def _mul(self, a, b):
        return (a * b) % self.p

    def _neg(self, a):
        return (-a) % self.p

    def _inv(self, a):
        # pow(a, -1, p) is CPython's extended-Euclid modular inverse
        return pow(a, -1, self.p)

    def elements(self):
        """All residues, in canonical order."""
        return (Scalar(self, v) for v in range(self.p))

    def parse_scalar(self, token: str) -> Scalar:
        try:
            return self.from_int(int(token, 10))
        except ValueError:
            raise ParseError(f"{token!r} is not an integer") from None

    def scalar_to_json(self, s: Scalar):
        return s.value

    def __eq__(self, other):
        return isinstance(other, PrimeField) and other.p == self.p

    def __hash__(self):
        return hash(("gfp", self.p))

    def __repr__(self):
        return f"PrimeField({self.p})"


class RationalField(Field):
    """The rational numbers, backed by `fractions.Fraction`.

    Numerators and denominators are arbitrary-precision, so long runs of
    the engine cannot overflow; Fraction keeps values reduced with a
    positive denominator, which is exactly the canonical form required.
    """

    __slots__ = ()

    spec = "q"

    @property
    def is_finite(self) -> bool:
        return False

    def _canon(self, value):
        if isinstance(value, float):
            raise TypeError("floating point values are not accepted; use Fraction")
        return Fraction(value)

    def _add(self, a, b):
        return a + b

    def _sub(self, a, b):
        return a - b

    def _mul(self, a, b):
        return a * b

    def _neg(self, a):
        return -a

    def _inv(self, a):
        return 1 / a

    def parse_scalar(self, token: str) -> Scalar:
        try:
            return Scalar(self, Fraction(token))
        except (ValueError, ZeroDivisionError):
            raise ParseError(f"{token!r} is not an integer or a/b fraction") from None

    def scalar_to_json(self, s: Scalar):
        return s.value.numerator if s.value.denominator == 1 else str(s.value)

    def __eq__(self, other):
        return isinstance(other, RationalField)

    def __hash__(self):
        return hash("q")

    def __repr__(self):
        return "RationalField()"


GF2 = PrimeField(2)
QQ = RationalField()


def parse_field(spec: str) -> Field:
    """Parse a field spec string: ``gf2``, ``gf:<p>`` or ``q``."""
    spec = spec.strip().lower()
    if spec == "gf2":
        return GF2
    if spec == "q":
        return QQ
    if spec.startswith("gf:"):
        try:
            p = int(spec[3:], 10)
        except ValueError:
            raise ParseError(f"bad modulus in field spec {spec!r}") from None
        try:
            return PrimeField(p)
        except ValueError as exc:
            raise ParseError(str(exc)) from None
    raise ParseError(f"unknown field spec {spec!r} (expected gf2, gf:<p> or q)")
