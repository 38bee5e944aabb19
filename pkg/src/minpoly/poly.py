"""Dense univariate polynomials over an exact field.

Coefficients are stored low-to-high: ``coeffs[j]`` is the coefficient of
x^j.  Polynomials are normalized on construction (trailing zeros
stripped); the zero polynomial is the empty tuple and its degree is the
sentinel `NEG_INF` rather than -1, because the engine compares degrees
against exponent values where -1 is legitimate.

Only the operations the synthesis engine actually needs are provided:
degree, the combined update alpha*P - beta*x^k*Q, reciprocal, and monic
normalization, plus shifting/scaling helpers and the canonical text
rendering shared with the CLI.  There is deliberately no general product,
quotient or gcd.
"""

from __future__ import annotations

import re
from typing import Iterable, Iterator, Union

from .errors import FieldMismatchError, ParseError, ZeroPolynomialError
from .field import Field, Scalar

NEG_INF = float("-inf")

Degree = Union[int, float]


class Poly:
    """An immutable polynomial over a fixed field."""

    __slots__ = ("field", "coeffs")

    def __init__(self, field: Field, coeffs: Iterable = ()):
        """Build from low-to-high coefficients (Scalars or raw ints/Fractions)."""
        sc = tuple(field.scalar(c) for c in coeffs)
        while sc and not sc[-1]:
            sc = sc[:-1]
        self.field = field
        self.coeffs = sc

    @classmethod
    def zero(cls, field: Field) -> "Poly":
        return cls(field, ())

    @classmethod
    def one(cls, field: Field) -> "Poly":
        return cls(field, (1,))

    @classmethod
    def x_power(cls, field: Field, k: int) -> "Poly":
        """The monomial x^k."""
        if k < 0:
            raise ValueError("exponent must be nonnegative")
        return cls(field, (0,) * k + (1,))

    @property
    def degree(self) -> Degree:
        """Index of the highest nonzero coefficient; NEG_INF for zero."""
        return len(self.coeffs) - 1 if self.coeffs else NEG_INF

    @property
    def is_zero(self) -> bool:
        return not self.coeffs

    @property
    def lead(self) -> Scalar:
        if not self.coeffs:
            raise ZeroPolynomialError("the zero polynomial has no leading coefficient")
        return self.coeffs[-1]

    @property
    def is_monic(self) -> bool:
        return bool(self.coeffs) and self.lead == self.field.one

    def coefficient(self, j: int) -> Scalar:
        """Coefficient of x^j (zero beyond the stored degree)."""
        if 0 <= j < len(self.coeffs):
            return self.coeffs[j]
        return self.field.zero

    def shift(self, k: int) -> "Poly":
        """Multiply by x^k."""
        if k < 0:
            raise ValueError("shift must be nonnegative")
        if self.is_zero or k == 0:
            return self
        return Poly(self.field, (self.field.zero,) * k + self.coeffs)

    def scaled_by(self, alpha: Scalar) -> "Poly":
        """Multiply every coefficient by the scalar alpha."""
        alpha = self.field.scalar(alpha)
        return Poly(self.field, tuple(alpha * c for c in self.coeffs))

    def make_monic(self) -> "Poly":
        """Divide by the leading coefficient; idempotent."""
        if self.is_zero:
            raise ZeroPolynomialError("cannot normalize the zero polynomial")
        if self.is_monic:
            return self
        return self.scaled_by(self.lead.inverse())

    def reciprocal(self) -> "Poly":
        """x^deg * P(1/x): the coefficient vector reversed, then normalized.

        The degree can only drop, and drops exactly when P(0) = 0.
        """
        if self.is_zero:
            raise ZeroPolynomialError("the zero polynomial has no reciprocal")
        return Poly(self.field, tuple(reversed(self.coeffs)))

    def __eq__(self, other):
        return (
            isinstance(other, Poly)
            and self.field == other.field
            and self.coeffs == other.coeffs
        )

    def __hash__(self):
        return hash((self.field, self.coeffs))

    def __iter__(self) -> Iterator[Scalar]:
        return iter(self.coeffs)

    def __str__(self) -> str:
        return render_poly(self)

    def __repr__(self) -> str:
        return f"Poly({self.field.spec}, {str(self)!r})"


def linear_combine(alpha: Scalar, p: Poly, beta: Scalar, q: Poly, k: int) -> Poly:
    """alpha*P - beta*x^k*Q, normalized.

    This is the single update shape the engine uses; the result degree is
    at most max(deg P, k + deg Q), with equality unless the leading terms
    cancel.
    """
    if p.field != q.field:
        raise FieldMismatchError(f"{p.field.spec} vs {q.field.spec}")
    field = p.field
    alpha = field.scalar(alpha)
    beta = field.scalar(beta)
    if k < 0:
        raise ValueError("shift must be nonnegative")
    n = max(len(p.coeffs), (k + len(q.coeffs)) if q.coeffs else 0)
    out = []
    for j in range(n):
        c = alpha * p.coefficient(j)
        if j >= k:
            c = c - beta * q.coefficient(j - k)
        out.append(c)
    return Poly(field, out)


def _render_term(coeff: Scalar, j: int, field: Field) -> str:
    if j == 0:
        return str(coeff)
    x = "x" if j == 1 else f"x^{j}"
    if coeff == field.one:
        return x
    return f"{coeff}*{x}"


def render_poly(p: Poly) -> str:
    """Canonical text form: descending powers, unit coefficients suppressed.

    Examples: ``x^2 + x + 1``, ``2*x^3 + 1``, ``3/2*x + 1``, ``0``.
    Negative rational coefficients fold their sign into the separator.
    """
    if p.is_zero:
        return "0"
    field = p.field
    parts: list[str] = []
    for j in range(len(p.coeffs) - 1, -1, -1):
        c = p.coeffs[j]
        if not c:
            continue
        negative = c.value < 0  # only possible over the rationals
        mag = -c if negative else c
        term = _render_term(mag, j, field)
        if not parts:
            parts.append(f"-{term}" if negative else term)
        else:
            parts.append(f"- {term}" if negative else f"+ {term}")
    return " ".join(parts)


_TERM_RE = re.compile(
    r"""^\s*
        (?:(?P<coef>\d+(?:/\d+)?)\s*\*?\s*)?   # optional coefficient, optional *
        (?:(?P<x>x)(?:\^(?P<exp>\d+))?)?       # optional x or x^k
        \s*$""",
    re.VERBOSE,
)


def parse_poly(text: str, field: Field) -> Poly:
    """Parse the canonical text form back into a Poly.

    Accepts the renderer's output plus minor latitude (missing ``*``,
    arbitrary spacing).  Raises `ParseError` on anything else.
    """
    src = text.strip()
    if not src:
        raise ParseError("empty polynomial text")
    # split into sign-prefixed chunks: "2*x^3 - x + 1" -> (+, 2*x^3), (-, x), (+, 1)
    chunks = re.findall(r"([+-]?)\s*([^+-]+)", src)
    if not chunks or "".join(s + c for s, c in chunks).replace(" ", "") != src.replace(" ", ""):
        raise ParseError(f"malformed polynomial {text!r}")
    acc: dict[int, Scalar] = {}
    for sign, chunk in chunks:
        m = _TERM_RE.match(chunk)
        if not m or (m.group("coef") is None and m.group("x") is None):
            raise ParseError(f"malformed term {chunk.strip()!r}")
        if m.group("coef") is not None:
            coeff = field.parse_scalar(m.group("coef"))
        else:
            coeff = field.one
        if sign == "-":
            coeff = -coeff
        if m.group("x") is None:
            exp = 0
        elif m.group("exp") is None:
            exp = 1
        else:
            exp = int(m.group("exp"))
        acc[exp] = acc.get(exp, field.zero) + coeff
    if not acc:
        raise ParseError(f"malformed polynomial {text!r}")
    coeffs = [field.zero] * (max(acc) + 1)
    for exp, coeff in acc.items():
        coeffs[exp] = coeff
    return Poly(field, coeffs)
