"""Numpy implementations of the elimination kernels.

Semantics (and pivot order) match the Cython versions in _celim exactly;
see derring.kernels for the selection logic.
"""

from __future__ import annotations

import numpy as np


def _egcd(a: int, b: int) -> tuple[int, int, int]:
    """(g, x, y) with x*a + y*b = g = gcd(a, b); a, b >= 0."""
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q = a // b
        a, b = b, a - q * b
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    return a, x0, y0


def echelon_mod(mat: np.ndarray, m: int) -> int:
    """In-place row echelon form of an int64 matrix over Z_m.

    Row operations are restricted to invertible (determinant-1) 2x2
    combinations, so the row span over Z_m is preserved exactly.
    Returns the number of nonzero rows.
    """
    rows, cols = mat.shape
    r = 0
    for c in range(cols):
        if r == rows:
            break
        piv = -1
        for i in range(r, rows):
            if mat[i, c] != 0:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            mat[[r, piv]] = mat[[piv, r]]
        for i in range(r + 1, rows):
            b = int(mat[i, c])
            if b == 0:
                continue
            a = int(mat[r, c])
            g, x, y = _egcd(a, b)
            new_r = (x * mat[r] + y * mat[i]) % m
            new_i = ((a // g) * mat[i] - (b // g) * mat[r]) % m
            mat[r] = new_r
            mat[i] = new_i
        r += 1
    return r


def rref_field(
    mat: np.ndarray,
    add: np.ndarray,
    mul: np.ndarray,
    neg: np.ndarray,
    inv: np.ndarray,
) -> tuple[int, list[int]]:
    """In-place reduced row echelon form over a tabulated field.

    Entries are element codes into the add/mul/neg/inv tables; code 0 is
    the field zero.  Returns (rank, pivot column list).
    """
    rows, cols = mat.shape
    r = 0
    pivots: list[int] = []
    for c in range(cols):
        if r == rows:
            break
        piv = -1
        for i in range(r, rows):
            if mat[i, c] != 0:
                piv = i
                break
        if piv < 0:
            continue
        if piv != r:
            mat[[r, piv]] = mat[[piv, r]]
        s = inv[mat[r, c]]
        mat[r] = mul[s][mat[r]]
        factors = mat[:, c].copy()
        factors[r] = 0
        hit = np.nonzero(factors)[0]
        if hit.size:
            # row_i += (-factor_i) * row_r, all rows at once
            scaled = mul[neg[factors[hit]][:, None], mat[r][None, :]]
            mat[hit] = add[mat[hit], scaled]
        pivots.append(c)
        r += 1
    return r, pivots
