"""Exact rank computation kernels.

Rank over GF(p) is the hot loop of every homology query, so it is compiled
with numba when available.  A pure-numpy implementation computes the same
values and is selected by setting CMTKIT_BACKEND=numpy (CMTKIT_BACKEND=numba
insists on the compiled path and fails loudly if numba is missing).

Rank over the rationals uses fraction-free (Bareiss) elimination on Python
integers; no floating point is involved anywhere.
"""

from __future__ import annotations

import os

import numpy as np

from .fields import FieldSpec

_BACKEND_ENV = "CMTKIT_BACKEND"


def _rank_mod_p_numpy(a: np.ndarray, p: int) -> int:
    """Row reduce mod p with vectorized numpy updates."""
    a = np.mod(a, p).astype(np.int64, copy=True)
    m, n = a.shape
    row = 0
    for col in range(n):
        if row == m:
            break
        nz = np.nonzero(a[row:, col])[0]
        if nz.size == 0:
            continue
        piv = row + int(nz[0])
        if piv != row:
            a[[row, piv]] = a[[piv, row]]
        inv = pow(int(a[row, col]), p - 2, p)
        a[row] = a[row] * inv % p
        below = a[row + 1:]
        factors = below[:, col]
        if factors.any():
            below -= np.outer(factors, a[row])
            np.mod(below, p, out=below)
        row += 1
    return row


try:
    from numba import njit

    @njit(cache=True, nogil=True)
    def _pow_mod(base, exp, p):  # pragma: no cover - exercised through rank
        result = 1
        b = base % p
        e = exp
        while e > 0:
            if e & 1:
                result = (result * b) % p
            b = (b * b) % p
            e >>= 1
        return result

    @njit(cache=True, nogil=True)
    def _rank_mod_p_jit(a, p):  # pragma: no cover - exercised through rank
        m, n = a.shape
        row = 0
        for col in range(n):
            if row == m:
                break
            piv = -1
            for r in range(row, m):
                if a[r, col] != 0:
                    piv = r
                    break
            if piv < 0:
                continue
            if piv != row:
                for c in range(col, n):
                    tmp = a[row, c]
                    a[row, c] = a[piv, c]
                    a[piv, c] = tmp
            inv = _pow_mod(a[row, col], p - 2, p)
            for c in range(col, n):
                a[row, c] = (a[row, c] * inv) % p
            for r in range(row + 1, m):
                f = a[r, col]
                if f != 0:
                    for c in range(col, n):
                        a[r, c] = (a[r, c] - f * a[row, c]) % p
            row += 1
        return row

    def _rank_mod_p_numba(a: np.ndarray, p: int) -> int:
        work = np.mod(a, p).astype(np.int64, copy=True)
        return int(_rank_mod_p_jit(work, p))

    HAS_NUMBA = True
except ImportError:  # pragma: no cover - depends on environment
    HAS_NUMBA = False
    _rank_mod_p_numba = None


def _select_backend() -> str:
    choice = os.environ.get(_BACKEND_ENV, "auto").strip().lower()
    if choice not in ("auto", "numba", "numpy"):
        raise ValueError(f"{_BACKEND_ENV} must be auto, numba or numpy, got {choice!r}")
    if choice == "numpy":
        return "numpy"
    if choice == "numba" and not HAS_NUMBA:
        raise RuntimeError("CMTKIT_BACKEND=numba but numba is not importable")
    return "numba" if HAS_NUMBA else "numpy"


_ACTIVE = _select_backend()


def active_backend() -> str:
    """Name of the GF(p) elimination backend selected at import time."""
    return _ACTIVE


def rank_mod_p(a: np.ndarray, p: int) -> int:
    """Exact rank of an integer matrix viewed over GF(p)."""
    if a.size == 0:
        return 0
    if _ACTIVE == "numba":
        return _rank_mod_p_numba(a, p)
    return _rank_mod_p_numpy(a, p)


def rank_rational(a) -> int:
    """Exact rank over Q via fraction-free elimination on Python ints.

    Intermediate entries are minors of the input, so divisions are exact
    and magnitudes stay Hadamard-bounded.
    """
    rows = [[int(x) for x in r] for r in a]
    m = len(rows)
    n = len(rows[0]) if m else 0
    rank = 0
    prev = 1
    row = 0
    for col in range(n):
        if row == m:
            break
        piv = None
        for r in range(row, m):
            if rows[r][col]:
                piv = r
                break
        if piv is None:
            continue
        if piv != row:
            rows[row], rows[piv] = rows[piv], rows[row]
        pv = rows[row][col]
        for r in range(row + 1, m):
            f = rows[r][col]
            rr = rows[r]
            top = rows[row]
            for c in range(col + 1, n):
                num = rr[c] * pv - top[c] * f
                q, rem = divmod(num, prev)
                if rem:
                    raise ArithmeticError("fraction-free elimination produced a non-exact division")
                rr[c] = q
            rr[col] = 0
        prev = pv
        row += 1
        rank += 1
    return rank


def rank(a: np.ndarray, field: FieldSpec) -> int:
    """Exact rank of an integer matrix over the requested field."""
    if a.size == 0:
        return 0
    if field.is_rationals:
        return rank_rational(a)
    return rank_mod_p(a, field.p)
