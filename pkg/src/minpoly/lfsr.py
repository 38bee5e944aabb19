"""Sequence generation from a linear recurrence, and the feedback-polynomial
to characteristic-polynomial conversion."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from .engine import Sequence
from .errors import DegreeUnderflowError, NotMonicError, ZeroPolynomialError
from .poly import Poly
from .field import Scalar


@dataclass(frozen=True)
class Recurrence:
    """A monic characteristic polynomial C of degree d plus the d seed terms
    s_1..s_d it needs to start generating."""

    C: Poly
    seed: tuple[Scalar, ...]

    def __post_init__(self):
        if self.C.is_zero or not self.C.is_monic:
            raise NotMonicError("the generating polynomial must be monic")
        if len(self.seed) != self.C.degree:
            raise ValueError(
                f"seed length {len(self.seed)} != degree {self.C.degree}"
            )

    @classmethod
    def from_ints(cls, C: Poly, seed: Iterable[int]) -> "Recurrence":
        return cls(C, tuple(C.field.from_int(v) for v in seed))


def extend(r: Recurrence, count: int) -> Sequence:
    """The unique sequence of length deg C + count starting with the seed and
    annihilated by C: each new term is s_j = -(C_0 s_{j-d} + ... + C_{d-1} s_{j-1})."""
    if count < 0:
        raise ValueError("count must be nonnegative")
    field = r.C.field
    d = r.C.degree
    terms = list(r.seed)
    for _ in range(count):
        acc = field.zero
        base = len(terms) - d
        for k in range(d):
            acc = acc + r.C.coefficient(k) * terms[base + k]
        terms.append(-acc)
    return Sequence(field, terms)


def feedback_to_characteristic(F: Poly, L: int) -> Poly:
    """x^(L - deg F) * reciprocal(F): the degree-L characteristic polynomial
    behind the feedback polynomial F.

    The result is reported exactly as the formula yields it, with no
    re-normalization.
    """
    if F.is_zero:
        raise ZeroPolynomialError("the zero polynomial is not a feedback polynomial")
    if L < F.degree:
        raise DegreeUnderflowError(f"L={L} is below deg F={F.degree}")
    return F.reciprocal().shift(L - F.degree)
