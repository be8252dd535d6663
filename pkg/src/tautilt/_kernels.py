"""Row-reduction kernels over F_p.

The numba kernel is used when numba imports cleanly. Setting
TAUTILT_NO_NUMBA=1 selects the pure-numpy kernel instead; both return
identical results, so the flag only changes speed.
"""
import os

import numpy as np


def rref_numpy(m, p):
    """In-place reduced row echelon form. Returns (rank, pivots)."""
    rows, cols = m.shape
    pivots = np.empty(min(rows, cols), dtype=np.int64)
    r = 0
    for c in range(cols):
        if r == rows:
            break
        nz = np.flatnonzero(m[r:, c])
        if nz.size == 0:
            continue
        piv = r + nz[0]
        if piv != r:
            m[[r, piv]] = m[[piv, r]]
        inv = pow(int(m[r, c]), p - 2, p)
        if inv != 1:
            m[r, c:] = (m[r, c:] * inv) % p
        col = m[:, c].copy()
        col[r] = 0
        hit = np.flatnonzero(col)
        if hit.size:
            m[hit, c:] = (m[hit, c:] - np.outer(col[hit], m[r, c:])) % p
        pivots[r] = c
        r += 1
    return r, pivots[:r].copy()


def _rref_loops(m, p):
    rows, cols = m.shape
    pivots = np.empty(min(rows, cols), dtype=np.int64)
    r = 0
    for c in range(cols):
        if r == rows:
            break
        piv = -1
        for i in range(r, rows):
            if m[i, c] != 0:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            for j in range(c, cols):
                t = m[r, j]
                m[r, j] = m[piv, j]
                m[piv, j] = t
        # modular inverse by exponentiation
        a = m[r, c]
        e = p - 2
        inv = 1
        while e > 0:
            if e & 1:
                inv = (inv * a) % p
            a = (a * a) % p
            e >>= 1
        if inv != 1:
            for j in range(c, cols):
                m[r, j] = (m[r, j] * inv) % p
        for i in range(rows):
            if i != r:
                f = m[i, c]
                if f != 0:
                    for j in range(c, cols):
                        m[i, j] = (m[i, j] - f * m[r, j]) % p
        pivots[r] = c
        r += 1
    return r, pivots[:r].copy()


def _want_numba():
    return os.environ.get("TAUTILT_NO_NUMBA", "") not in ("1", "true", "yes")


BACKEND = "numpy"
rref_inplace = rref_numpy

if _want_numba():
    try:
        from numba import njit

        rref_inplace = njit(cache=True)(_rref_loops)
        BACKEND = "numba"
    except ImportError:  # pragma: no cover
        pass
