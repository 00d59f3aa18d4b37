# cython: language_level=3, boundscheck=False, wraparound=False
"""Compiled twin of _kernels_py.

Entries stay Python objects (arbitrary-precision ints, gmpy2.mpz, or
polynomials); Cython removes the interpreter loop overhead around them.
Keep this file in lockstep with _kernels_py.py.
"""


def det_bareiss(list rows):
    cdef Py_ssize_t n = len(rows)
    cdef Py_ssize_t i, j, k
    cdef int sign = 1
    cdef bint found
    cdef list ri, rk
    if n == 0:
        return 1
    prev = None
    for k in range(n - 1):
        rk = rows[k]
        if not rk[k]:
            found = False
            for i in range(k + 1, n):
                if (<list>rows[i])[k]:
                    rows[k], rows[i] = rows[i], rows[k]
                    sign = -sign
                    found = True
                    break
            if not found:
                return 0 * (<list>rows[k])[k]
            rk = rows[k]
        pivot = rk[k]
        for i in range(k + 1, n):
            ri = rows[i]
            aik = ri[k]
            if aik:
                if prev is None:
                    for j in range(k + 1, n):
                        ri[j] = pivot * ri[j] - aik * rk[j]
                else:
                    for j in range(k + 1, n):
                        ri[j] = (pivot * ri[j] - aik * rk[j]) // prev
            else:
                if prev is None:
                    for j in range(k + 1, n):
                        ri[j] = pivot * ri[j]
                else:
                    for j in range(k + 1, n):
                        ri[j] = (pivot * ri[j]) // prev
        prev = pivot
    d = (<list>rows[n - 1])[n - 1]
    return d if sign > 0 else -d


def rank_echelon(list rows):
    cdef Py_ssize_t m = len(rows)
    cdef Py_ssize_t ncols, i, j, col, row, piv
    cdef Py_ssize_t rank = 0
    cdef list ri, rk
    if m == 0:
        return 0
    ncols = len(<list>rows[0])
    prev = None
    row = 0
    for col in range(ncols):
        if row >= m:
            break
        piv = -1
        for i in range(row, m):
            if (<list>rows[i])[col]:
                piv = i
                break
        if piv < 0:
            continue
        if piv != row:
            rows[row], rows[piv] = rows[piv], rows[row]
        rk = rows[row]
        pivot = rk[col]
        for i in range(row + 1, m):
            ri = rows[i]
            aic = ri[col]
            if aic:
                if prev is None:
                    for j in range(col + 1, ncols):
                        ri[j] = pivot * ri[j] - aic * rk[j]
                else:
                    for j in range(col + 1, ncols):
                        ri[j] = (pivot * ri[j] - aic * rk[j]) // prev
                ri[col] = 0 * aic
            else:
                if prev is None:
                    for j in range(col + 1, ncols):
                        ri[j] = pivot * ri[j]
                else:
                    for j in range(col + 1, ncols):
                        ri[j] = (pivot * ri[j]) // prev
        prev = pivot
        row += 1
        rank += 1
    return rank
