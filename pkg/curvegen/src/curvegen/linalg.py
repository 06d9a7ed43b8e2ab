"""Vectorized linear algebra over a finite field via numpy lookup tables."""

from __future__ import annotations

import numpy as np


def rref(F, rows, ncons):
    """Reduced row echelon form, pivoting only within the first ncons columns.

    rows is a list of int lists (each of equal length, constraint columns
    first).  Returns (matrix, pivots) where pivots maps pivot column ->
    row index.  Every pivot column is eliminated from all other rows, so
    each surviving row is fully reduced against the others.
    """
    add_t, mul_t = F.np_tables()
    neg_arr = np.array([F.neg(a) for a in range(F.q)], dtype=np.int64)
    inv_arr = np.array([0] + [F.inv(a) for a in range(1, F.q)], dtype=np.int64)
    A = np.array(rows, dtype=np.int64)
    nrows = A.shape[0]
    pivots = {}
    r = 0
    for col in range(ncons):
        if r >= nrows:
            break
        nz = np.nonzero(A[r:, col])[0]
        if nz.size == 0:
            continue
        p = r + int(nz[0])
        if p != r:
            A[[r, p]] = A[[p, r]]
        A[r] = mul_t[int(inv_arr[A[r, col]]), A[r]]
        factors = neg_arr[A[:, col]].copy()
        factors[r] = 0
        mask = factors != 0
        if mask.any():
            A[mask] = add_t[A[mask], mul_t[factors[mask][:, None], A[r][None, :]]]
        pivots[col] = r
        r += 1
    return A, pivots
