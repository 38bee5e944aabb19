"""Array kernels for prime fields, with two interchangeable backends.

The JIT backend (`gfp_numba`) is the default; the vectorized NumPy
backend (`gfp_numpy`) is selected when ``MINPOLY_DISABLE_NUMBA`` is set
to a truthy value, or automatically when numba is not importable.  Both
backends implement identical signatures and produce identical results;
all arithmetic is exact int64 with immediate reduction mod p, which is
why moduli are capped below 2**31.

    minpoly_run(seq, p, b_one)     -> (C, b, e, lengths, discs)
    oracle_first_match(seq, p, d, total)  -> first candidate index or -1
    oracle_all_matches(seq, p, d, total)  -> indices of all matches
"""

import os


def _numba_disabled() -> bool:
    return os.environ.get("MINPOLY_DISABLE_NUMBA", "").strip().lower() in {"1", "true", "yes", "on"}


if _numba_disabled():
    from . import gfp_numpy as _backend
else:
    try:
        from . import gfp_numba as _backend
    except ImportError:  # pragma: no cover - exercised only without numba
        from . import gfp_numpy as _backend

BACKEND = _backend.NAME

minpoly_run = _backend.minpoly_run
oracle_first_match = _backend.oracle_first_match
oracle_all_matches = _backend.oracle_all_matches
