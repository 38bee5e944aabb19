"""Brute-force ground truth for small instances.

Independent of the synthesis engine: candidates are enumerated
exhaustively and tested directly against the defining recurrence, so the
two routes can be played against each other in tests.  Only finite
fields make sense here; the enumeration is bounded by a candidate budget
rather than a hard size limit so callers can tune exhaustiveness.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .engine import Sequence
from .errors import BudgetExceededError, InfiniteFieldError
from .field import PrimeField
from .poly import Poly

DEFAULT_BUDGET = 1 << 24


@dataclass(frozen=True)
class OracleResult:
    """All monic minimal polynomials of a sequence.

    `polys` is nonempty, every entry has degree `min_degree`, and the
    tuple is sorted by the low-to-high coefficient vector so output is
    reproducible however the search was partitioned.
    """

    min_degree: int
    polys: tuple[Poly, ...]


def _require_prime(s: Sequence) -> PrimeField:
    if not isinstance(s.field, PrimeField):
        raise InfiniteFieldError("exhaustive search needs a finite field")
    return s.field


def _as_array(s: Sequence) -> np.ndarray:
    return np.array([t.value for t in s.terms], dtype=np.int64)


def _poly_from_index(field: PrimeField, d: int, idx: int) -> Poly:
    coeffs = []
    t = idx
    for _ in range(d):
        coeffs.append(t % field.p)
        t //= field.p
    coeffs.append(1)
    return Poly(field, coeffs)


def brute_force_min_degree(s: Sequence, budget: int = DEFAULT_BUDGET) -> int:
    """Smallest degree of any monic characteristic polynomial of s.

    Scans degree tiers 0..n; x^n is vacuously characteristic, so the scan
    always terminates at n or earlier.  Raises `BudgetExceededError` when
    the tiers visited would exceed `budget` candidates in total.
    """
    field = _require_prime(s)
    from . import _kernels

    seq = _as_array(s)
    used = 0
    for d in range(len(s) + 1):
        tier = field.p**d
        if used + tier > budget:
            raise BudgetExceededError(
                f"degree-{d} tier needs {tier} candidates, budget has {budget - used} left"
            )
        used += tier
        if _kernels.oracle_first_match(seq, field.p, d, tier) >= 0:
            return d
    raise AssertionError("unreachable: x^n always matches")


def enumerate_minimal_polys(s: Sequence, budget: int = DEFAULT_BUDGET) -> OracleResult:
    """Every monic minimal polynomial of s, canonically sorted.

    The budget covers both the min-degree scan and the full sweep of the
    minimal tier.
    """
    field = _require_prime(s)
    from . import _kernels

    p = field.p
    seq = _as_array(s)
    min_d = brute_force_min_degree(s, budget)
    scanned = sum(p**d for d in range(min_d + 1))
    tier = p**min_d
    if scanned + tier > budget:
        raise BudgetExceededError(
            f"enumerating the degree-{min_d} tier needs {tier} more candidates"
        )
    matches = _kernels.oracle_all_matches(seq, p, min_d, tier)
    polys = [_poly_from_index(field, min_d, int(idx)) for idx in matches]
    polys.sort(key=lambda q: tuple(c.value for c in q.coeffs))
    if not polys:
        raise AssertionError("unreachable: the minimal tier has a match by construction")
    return OracleResult(min_degree=min_d, polys=tuple(polys))
