"""JIT-compiled GF(p) kernels.

All state is int64.  Residues are < 2**31, so a product of two residues
is < 2**62 and every partial result is reduced mod p before the next
addition; nothing can overflow.
"""

import numpy as np
from numba import njit


NAME = "numba"


@njit(cache=True)
def _inv_mod(a, p):
    # extended Euclid; a must be nonzero mod p
    t, new_t = 0, 1
    r, new_r = p, a % p
    while new_r != 0:
        q = r // new_r
        t, new_t = new_t, t - q * new_t
        r, new_r = new_r, r - q * new_r
    if t < 0:
        t += p
    return t


@njit(cache=True)
def minpoly_run(seq, p, b_one):
    """One full synthesis run over GF(p).

    Returns (C, b, e, lengths, discs): the final raw polynomial C (not yet
    divided by b or made monic), the final b and e, the per-step
    complexities and the per-step discrepancies.
    """
    n = seq.shape[0]
    C = np.zeros(n + 2, np.int64)
    C[0] = 1
    B = np.zeros(n + 2, np.int64)
    len_b = 0
    if b_one:
        B[0] = 1
        len_b = 1
    len_c = 1
    b = np.int64(1)
    e = np.int64(-1)
    lengths = np.empty(n, np.int64)
    discs = np.empty(n, np.int64)

    for i in range(1, n + 1):
        deg_c = (e + i) // 2
        offset = (i - e) // 2 - 1
        c = np.int64(0)
        for j in range(deg_c + 1):
            c = (c + C[j] * seq[j + offset]) % p
        discs[i - 1] = c
        if c != 0:
            if e >= 0:
                # deg(x^e * B) < deg C here, so the update stays inside len_c
                for k in range(len_c):
                    v = b * C[k] % p
                    if e <= k < e + len_b:
                        v = (v - c * B[k - e]) % p
                    C[k] = v
            else:
                e = -e
                new_len = e + len_c
                newC = np.zeros(n + 2, np.int64)
                for k in range(new_len):
                    v = np.int64(0)
                    if k >= e:
                        v = b * C[k - e] % p
                    if k < len_b:
                        v = (v - c * B[k]) % p
                    newC[k] = v
                B = C
                len_b = len_c
                C = newC
                len_c = new_len
                b = c
        e -= 1
        lengths[i - 1] = (e + i + 1) // 2
    return C[:len_c].copy(), b, e, lengths, discs


@njit(cache=True)
def _window_match(seq, p, coeff, d):
    n = seq.shape[0]
    for j0 in range(n - d):
        acc = np.int64(0)
        for k in range(d + 1):
            acc = (acc + coeff[k] * seq[j0 + k]) % p
        if acc != 0:
            return False
    return True


@njit(cache=True)
def oracle_first_match(seq, p, d, total):
    """Index of the first monic degree-d candidate annihilating seq, or -1.

    Candidate idx encodes the free coefficients base p, least significant
    digit first: coeff_k = (idx // p**k) % p, with coeff_d = 1.
    """
    coeff = np.empty(d + 1, np.int64)
    coeff[d] = 1
    for idx in range(total):
        t = idx
        for k in range(d):
            coeff[k] = t % p
            t //= p
        if _window_match(seq, p, coeff, d):
            return idx
    return np.int64(-1)


@njit(cache=True)
def oracle_all_matches(seq, p, d, total):
    """Indices of every monic degree-d candidate annihilating seq."""
    coeff = np.empty(d + 1, np.int64)
    coeff[d] = 1
    out = np.empty(total, np.int64)
    found = 0
    for idx in range(total):
        t = idx
        for k in range(d):
            coeff[k] = t % p
            t //= p
        if _window_match(seq, p, coeff, d):
            out[found] = idx
            found += 1
    return out[:found].copy()
