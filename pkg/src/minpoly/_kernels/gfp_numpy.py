"""Vectorized NumPy fallbacks for the GF(p) kernels.

Same contracts and same exact int64 arithmetic as the JIT backend:
products are reduced mod p before they are summed, so sums stay far
below 2**63 for any modulus < 2**31.
"""

import numpy as np
from numpy.lib.stride_tricks import sliding_window_view


NAME = "numpy"

_CHUNK = 1 << 14  # candidates scored per batch in the oracle kernels


def minpoly_run(seq, p, b_one):
    """One full synthesis run over GF(p); see the JIT backend docstring."""
    n = int(seq.shape[0])
    C = np.zeros(n + 2, np.int64)
    C[0] = 1
    B = np.zeros(n + 2, np.int64)
    len_b = 0
    if b_one:
        B[0] = 1
        len_b = 1
    len_c = 1
    b = 1
    e = -1
    lengths = np.empty(n, np.int64)
    discs = np.empty(n, np.int64)

    for i in range(1, n + 1):
        deg_c = (e + i) // 2
        offset = (i - e) // 2 - 1
        window = seq[offset : offset + deg_c + 1]
        c = int(((C[: deg_c + 1] * window) % p).sum() % p)
        discs[i - 1] = c
        if c != 0:
            if e >= 0:
                # deg(x^e * B) < deg C, so the slice below covers the update
                upd = (b * C[:len_c]) % p
                if len_b:
                    upd[e : e + len_b] = (upd[e : e + len_b] - c * B[:len_b]) % p
                C[:len_c] = upd
            else:
                e = -e
                new_len = e + len_c
                newC = np.zeros(n + 2, np.int64)
                newC[e:new_len] = (b * C[:len_c]) % p
                if len_b:
                    newC[:len_b] = (newC[:len_b] - c * B[:len_b]) % p
                B, len_b = C, len_c
                C, len_c = newC, new_len
                b = c
        e -= 1
        lengths[i - 1] = (e + i + 1) // 2
    return C[:len_c].copy(), np.int64(b), np.int64(e), lengths, discs


def _digit_matrix(idxs, p, d):
    if d == 0:
        return np.empty((idxs.shape[0], 0), np.int64)
    powers = np.array([p**k for k in range(d)], dtype=np.int64)
    return (idxs[:, None] // powers[None, :]) % p


def _match_mask(seq, p, d, idxs):
    n = int(seq.shape[0])
    if n - d <= 0:
        return np.ones(idxs.shape[0], dtype=bool)  # vacuous: no full window
    windows = sliding_window_view(seq, d + 1)
    digits = _digit_matrix(idxs, p, d)
    alive = np.ones(idxs.shape[0], dtype=bool)
    for w in windows:
        if not alive.any():
            break
        acc = (((digits * w[:d]) % p).sum(axis=1) + w[d]) % p
        alive &= acc == 0
    return alive


def oracle_first_match(seq, p, d, total):
    """Index of the first monic degree-d candidate annihilating seq, or -1."""
    for start in range(0, int(total), _CHUNK):
        stop = min(start + _CHUNK, int(total))
        idxs = np.arange(start, stop, dtype=np.int64)
        hits = np.flatnonzero(_match_mask(seq, p, d, idxs))
        if hits.size:
            return np.int64(idxs[hits[0]])
    return np.int64(-1)


def oracle_all_matches(seq, p, d, total):
    """Indices of every monic degree-d candidate annihilating seq."""
    parts = []
    for start in range(0, int(total), _CHUNK):
        stop = min(start + _CHUNK, int(total))
        idxs = np.arange(start, stop, dtype=np.int64)
        hits = np.flatnonzero(_match_mask(seq, p, d, idxs))
        if hits.size:
            parts.append(idxs[hits])
    if not parts:
        return np.empty(0, np.int64)
    return np.concatenate(parts)
