"""Iterative minimal-polynomial synthesis and linear-complexity profiles.

The engine maintains the state (i, C, B, b, e): C is the current minimal
polynomial of the first i terms, B the last lower-degree predecessor, b
the (nonzero) discrepancy B produced, and e an exponent that tracks the
degree implicitly through deg C = (e + i + 1) / 2.  One step consumes one
sequence term:

    c = sum_{j=0}^{(e+i)/2} C_j * s_{j + (i-e)/2}        (discrepancy)
    if c != 0 and e >= 0:   C <- b*C - c*x^e*B
    if c != 0 and e <  0:   e <- -e; (C, B, b) <- (b*x^e*C - c*B, C, c)
    e <- e - 1

started from C=1, B=0, b=1, e=-1.  After n steps C/b is a minimal
polynomial of the whole sequence; the public entry point additionally
normalizes it to be monic (C/b alone is not monic for every field and
sequence).

Two initializations are supported: the default starts with B=0; the
`B_ONE` variant starts with B=1, which changes the polynomial produced at
the step that ends a run of i-1 >= 0 leading zeros from x^i to x^i - c,
while preserving minimality at every step.

All values are immutable and every function is pure, so any number of
analyses may run concurrently.  For prime fields the profile computation
dispatches to the array kernels in `minpoly._kernels`; the generic
object-level path covers every field, the rationals included.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Iterator

from .errors import (
    EmptySequenceError,
    FieldMismatchError,
    ParityError,
    ZeroPolynomialError,
)
from .field import Field, PrimeField, Scalar
from .poly import Poly, linear_combine


class Sequence:
    """A finite sequence s_1..s_n over one field.

    Storage is 0-based: the j-th term (1-based, as in all formulas here)
    lives at ``terms[j-1]``.
    """

    __slots__ = ("field", "terms")

    def __init__(self, field: Field, terms: Iterable = ()):
        sc = tuple(field.scalar(t) for t in terms)
        self.field = field
        self.terms = sc

    @classmethod
    def from_ints(cls, field: Field, values: Iterable[int]) -> "Sequence":
        return cls(field, tuple(field.from_int(v) for v in values))

    def __len__(self) -> int:
        return len(self.terms)

    def __iter__(self) -> Iterator[Scalar]:
        return iter(self.terms)

    def __getitem__(self, idx):
        return self.terms[idx]

    def __eq__(self, other):
        return (
            isinstance(other, Sequence)
            and self.field == other.field
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.field, self.terms))

    def __repr__(self):
        return f"Sequence({self.field.spec}, ({', '.join(map(str, self.terms))}))"


class InitVariant(Enum):
    """Initialization of the predecessor polynomial B."""

    B_ZERO = "b0"
    B_ONE = "b1"


@dataclass(frozen=True)
class EngineState:
    """Engine state after i consumed terms; `disc` is the discrepancy the
    last step consumed (None in the initial state)."""

    i: int
    C: Poly
    B: Poly
    b: Scalar
    e: int
    disc: Scalar | None = None

    @property
    def complexity(self) -> int:
        """deg C, recovered from the exponent: (e + i + 1) / 2."""
        return (self.e + self.i + 1) // 2

    @property
    def v(self) -> int:
        """Sign-flipped exponent (-e), the counter some LFSR-synthesis
        tables track instead; exposed so traces line up with them."""
        return -self.e


@dataclass(frozen=True)
class ProfileEntry:
    """One linear-complexity profile row: after i terms the complexity is
    `complexity`, and `disc` is the discrepancy consumed at step i."""

    i: int
    complexity: int
    disc: Scalar


@dataclass(frozen=True)
class TraceRecord:
    """Everything one step did, for diagnostic output."""

    i: int
    disc: Scalar
    e_before: int
    e_after: int
    complexity: int
    C: str
    B: str
    b: str

    def line(self) -> str:
        """Stable one-line rendering consumed by the CLI trace mode."""
        return f"i={self.i} c={self.disc} e={self.e_after} L={self.complexity} C={self.C}"


def initial_state(field: Field, variant: InitVariant = InitVariant.B_ZERO) -> EngineState:
    b_init = Poly.one(field) if variant is InitVariant.B_ONE else Poly.zero(field)
    return EngineState(i=0, C=Poly.one(field), B=b_init, b=field.one, e=-1)


def discrepancy(state: EngineState, s: Sequence) -> Scalar:
    """Discrepancy of state.C against the next term s_{i+1}.

    Zero iff C remains a characteristic polynomial after the next term.
    """
    i = state.i + 1
    if i > len(s):
        raise IndexError(f"step {i} beyond the sequence length {len(s)}")
    e = state.e
    if (e + i) % 2 != 0:
        raise ParityError(f"e + i = {e + i} must be even at the head of a step")
    upper = (e + i) // 2          # = deg C
    offset = (i - e) // 2         # s-index of the j=0 term (1-based)
    field = s.field
    acc = field.zero
    terms = s.terms
    for j in range(upper + 1):
        acc = acc + state.C.coefficient(j) * terms[j + offset - 1]
    return acc


def step(state: EngineState, s: Sequence, *, monic_steps: bool = False) -> EngineState:
    """Consume one term and return the next state.

    With `monic_steps` the new C is normalized to be monic before it is
    stored, which rescales later discrepancies but provably changes no
    degree and no zero/nonzero pattern.
    """
    c = discrepancy(state, s)
    i = state.i + 1
    C, B, b, e = state.C, state.B, state.b, state.e
    if c:
        if e >= 0:
            C = linear_combine(b, C, c, B, e)
        else:
            e = -e
            C, B, b = linear_combine(b, C.shift(e), c, B, 0), C, c
    if monic_steps and not C.is_zero:
        C = C.make_monic()
    return EngineState(i=i, C=C, B=B, b=b, e=e - 1, disc=c)


def iter_states(
    s: Sequence,
    variant: InitVariant = InitVariant.B_ZERO,
    *,
    monic_steps: bool = False,
) -> Iterator[EngineState]:
    """Yield the state after each of the n steps."""
    state = initial_state(s.field, variant)
    for _ in range(len(s)):
        state = step(state, s, monic_steps=monic_steps)
        yield state


@dataclass(frozen=True)
class EngineRun:
    """A full run: the per-step states, the raw quotient C/b, and the
    monic output."""

    states: tuple[EngineState, ...]
    quotient: Poly
    output: Poly

    @property
    def final(self) -> EngineState | None:
        return self.states[-1] if self.states else None


def run(s: Sequence, variant: InitVariant = InitVariant.B_ZERO) -> EngineRun:
    states = tuple(iter_states(s, variant))
    last = states[-1] if states else initial_state(s.field, variant)
    quotient = last.C.scaled_by(last.b.inverse())
    return EngineRun(states=states, quotient=quotient, output=quotient.make_monic())


def minimal_polynomial(s: Sequence, variant: InitVariant = InitVariant.B_ZERO) -> Poly:
    """A monic minimal polynomial of s.

    The result satisfies the defining recurrence check
    (`is_characteristic`) and no characteristic polynomial of s has
    smaller degree.  An empty sequence yields the constant 1, which every
    polynomial-free convention agrees is the monic minimal choice.
    """
    return run(s, variant).output


def trace_records(s: Sequence, variant: InitVariant = InitVariant.B_ZERO) -> list[TraceRecord]:
    """Per-step trace of a run, in a stable renderable form."""
    prev = initial_state(s.field, variant)
    out: list[TraceRecord] = []
    for state in iter_states(s, variant):
        out.append(
            TraceRecord(
                i=state.i,
                disc=state.disc,
                e_before=prev.e,
                e_after=state.e,
                complexity=state.complexity,
                C=str(state.C),
                B=str(state.B),
                b=str(state.b),
            )
        )
        prev = state
    return out


def complexity_profile(s: Sequence) -> list[ProfileEntry]:
    """Linear complexity of every prefix, with the per-step discrepancies.

    Complexities are nondecreasing and the last one equals the degree of
    `minimal_polynomial(s)`.  Prime fields take the fast array-kernel
    path; other fields run the generic engine.
    """
    field = s.field
    if isinstance(field, PrimeField):
        import numpy as np

        from . import _kernels

        seq = np.array([t.value for t in s.terms], dtype=np.int64)
        _, _, _, lengths, discs = _kernels.minpoly_run(seq, field.p, False)
        return [
            ProfileEntry(i=i + 1, complexity=int(lengths[i]), disc=field.from_int(int(discs[i])))
            for i in range(len(s))
        ]
    return [
        ProfileEntry(i=st.i, complexity=st.complexity, disc=st.disc)
        for st in iter_states(s)
    ]


def is_characteristic(C: Poly, s: Sequence) -> bool:
    """Does C annihilate every full window of s?

    True iff sum_k C_k * s_{j-d+k} = 0 for every j in d+1..n, where
    d = deg C; vacuously true when d >= n.  The zero polynomial is
    rejected: it annihilates everything and certifies nothing.
    """
    if C.is_zero:
        raise ZeroPolynomialError("the zero polynomial is not a characteristic polynomial")
    if C.field != s.field:
        raise FieldMismatchError(f"{C.field.spec} vs {s.field.spec}")
    d = C.degree
    n = len(s)
    field = s.field
    terms = s.terms
    for j in range(d + 1, n + 1):
        acc = field.zero
        for k in range(d + 1):
            acc = acc + C.coefficient(k) * terms[j - d + k - 1]
        if acc:
            return False
    return True


def naive_construct(s: Sequence) -> list[Poly]:
    """History-keeping reference construction of per-prefix minimal polynomials.

    Unlike the engine it stores every previous polynomial and degree and
    re-derives the predecessor index a = max{j <= i-2 : deg C_j < deg C_{i-1}}
    explicitly at each nonzero discrepancy.  It exists for verification,
    not performance: each returned C_i is a minimal polynomial of
    s_1..s_i, with the same degree as the engine's.
    """
    n = len(s)
    if n == 0:
        raise EmptySequenceError("need at least one term")
    field = s.field
    terms = s.terms
    s1 = terms[0]

    history: list[Poly] = [Poly.one(field) if not s1 else Poly.x_power(field, 1)]
    degrees: list[int] = [history[0].degree]
    discs: dict[int, Scalar] = {}  # discs[j] = discrepancy of C_j, consumed at step j+1

    for i in range(2, n + 1):
        prev = history[-1]
        d_prev = degrees[-1]
        c_prev = field.zero
        for j in range(d_prev + 1):
            c_prev = c_prev + prev.coefficient(j) * terms[j + i - d_prev - 1]
        discs[i - 1] = c_prev

        if not c_prev:
            cur = prev
        elif d_prev == degrees[0]:
            if not s1:
                cur = Poly.x_power(field, i)  # i-1 leading zeros so far
            else:
                cur = linear_combine(s1, prev.shift(i - 2), c_prev, Poly.one(field), 0)
        else:
            a = next(j for j in range(i - 2, 0, -1) if degrees[j - 1] < d_prev)
            e = 2 * d_prev - i
            if e >= 0:
                cur = linear_combine(discs[a], prev, c_prev, history[a - 1], e)
            else:
                cur = linear_combine(discs[a], prev.shift(-e), c_prev, history[a - 1], 0)
        history.append(cur)
        degrees.append(cur.degree)
    return history


def massey_form(s: Sequence) -> tuple[Poly, int]:
    """The (feedback polynomial, linear complexity) view of the result.

    F is the reciprocal of the monic minimal polynomial C, so F has
    constant term 1 (the usual LFSR normalization) and the round trip
    x^(L - deg F) * reciprocal(F) reproduces C exactly.
    """
    if len(s) == 0:
        raise EmptySequenceError("need at least one term")
    C = minimal_polynomial(s)
    return C.reciprocal(), C.degree
