# cython: boundscheck=False, wraparound=False, cdivision=True
"""Cython elimination kernels; same semantics as python_impl."""

from libc.stdint cimport int64_t


def echelon_mod(int64_t[:, ::1] mat, int64_t m):
    """In-place row echelon over Z_m via determinant-1 row combinations.

    Returns the number of nonzero rows.
    """
    cdef Py_ssize_t rows = mat.shape[0]
    cdef Py_ssize_t cols = mat.shape[1]
    cdef Py_ssize_t r = 0, c, i, j, piv
    cdef int64_t a, b, g, x, y, q, t, u, aa, bb, x0, y0, x1, y1, ad, bd
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
            for j in range(cols):
                t = mat[r, j]
                mat[r, j] = mat[piv, j]
                mat[piv, j] = t
        for i in range(r + 1, rows):
            b = mat[i, c]
            if b == 0:
                continue
            a = mat[r, c]
            # extended gcd: x*a + y*b = g, inputs nonnegative
            aa = a
            bb = b
            x0 = 1
            y0 = 0
            x1 = 0
            y1 = 1
            while bb != 0:
                q = aa / bb
                t = aa - q * bb
                aa = bb
                bb = t
                t = x0 - q * x1
                x0 = x1
                x1 = t
                t = y0 - q * y1
                y0 = y1
                y1 = t
            g = aa
            x = x0
            y = y0
            ad = a / g
            bd = b / g
            for j in range(cols):
                t = (x * mat[r, j] + y * mat[i, j]) % m
                if t < 0:
                    t += m
                u = (ad * mat[i, j] - bd * mat[r, j]) % m
                if u < 0:
                    u += m
                mat[r, j] = t
                mat[i, j] = u
        r += 1
    return r


def rref_field(int64_t[:, ::1] mat,
               int64_t[:, ::1] add,
               int64_t[:, ::1] mul,
               int64_t[::1] neg,
               int64_t[::1] inv):
    """In-place reduced row echelon over a tabulated field.

    Entries are element codes; code 0 is the field zero.  Returns
    (rank, pivot column list).
    """
    cdef Py_ssize_t rows = mat.shape[0]
    cdef Py_ssize_t cols = mat.shape[1]
    cdef Py_ssize_t r = 0, c, i, j, piv
    cdef int64_t s, f, t
    pivots = []
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
            for j in range(cols):
                t = mat[r, j]
                mat[r, j] = mat[piv, j]
                mat[piv, j] = t
        s = inv[mat[r, c]]
        for j in range(cols):
            mat[r, j] = mul[s, mat[r, j]]
        for i in range(rows):
            if i == r:
                continue
            f = mat[i, c]
            if f == 0:
                continue
            f = neg[f]
            for j in range(cols):
                mat[i, j] = add[mat[i, j], mul[f, mat[r, j]]]
        pivots.append(c)
        r += 1
    return r, pivots
