"""Exact dense linear algebra over a prime field F_p, on top of numpy int64.

All matrices are numpy arrays with dtype int64 and entries reduced to
[0, p).  The default modulus keeps every intermediate product well inside
int64 range (values < p**2 * ncols for the row updates used here).

Vectors are rows throughout the package: matrices act on the right.
"""

import numpy as np

DEFAULT_PRIME = 32003

__all__ = [
    "DEFAULT_PRIME",
    "is_prime",
    "inv_mod",
    "as_matrix",
    "rref",
    "rank",
    "nullspace",
    "left_nullspace",
    "matmul",
    "row_space_dims",
    "is_invertible",
    "det_int",
]


def is_prime(n):
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def inv_mod(a, p):
    """Multiplicative inverse of a modulo the prime p."""
    a = int(a) % p
    if a == 0:
        raise ZeroDivisionError("inverse of 0 mod %d" % p)
    return pow(a, p - 2, p)


def as_matrix(rows, p, width=None):
    """Build an int64 matrix reduced mod p from a list of row iterables."""
    if len(rows) == 0:
        return np.zeros((0, 0 if width is None else width), dtype=np.int64)
    a = np.array(rows, dtype=np.int64)
    if a.ndim == 1:
        a = a.reshape(1, -1)
    return np.mod(a, p)


def rref(a, p):
    """Reduced row echelon form over F_p.

    Args:
        a: 2d int64 array (not modified).
        p: prime modulus.

    Returns:
        (r, pivots) where r contains the nonzero rows of the RREF and
        pivots is the list of pivot column indices, one per row of r.
    """
    a = np.mod(np.asarray(a, dtype=np.int64), p)
    if a.ndim != 2:
        raise ValueError("rref expects a 2d array")
    nrows, ncols = a.shape
    r = 0
    pivots = []
    for c in range(ncols):
        if r == nrows:
            break
        nz = np.nonzero(a[r:, c])[0]
        if nz.size == 0:
            continue
        i = r + int(nz[0])
        if i != r:
            a[[r, i]] = a[[i, r]]
        a[r] = (a[r] * inv_mod(a[r, c], p)) % p
        col = a[:, c].copy()
        col[r] = 0
        a = (a - np.outer(col, a[r])) % p
        pivots.append(c)
        r += 1
    return a[:r], pivots


def rank(a, p):
    return rref(a, p)[0].shape[0]


def nullspace(a, p):
    """Basis of the right kernel {x : a @ x = 0}, x read as a column.

    Returns:
        (n, free) where the rows of n span the kernel and free lists the
        free column indices; row i of n has a 1 in column free[i] and 0 in
        every other free column, so kernel coordinates can be read off at
        the free positions directly.
    """
    a = np.asarray(a, dtype=np.int64)
    ncols = a.shape[1]
    r, pivots = rref(a, p)
    pivset = set(pivots)
    free = [c for c in range(ncols) if c not in pivset]
    n = np.zeros((len(free), ncols), dtype=np.int64)
    for i, f in enumerate(free):
        n[i, f] = 1
        for row, pc in enumerate(pivots):
            n[i, pc] = (-int(r[row, f])) % p
    return n, free


def left_nullspace(a, p):
    """Basis (as rows) of {x : x @ a = 0} in coordinate-readable form."""
    n, free = nullspace(np.asarray(a, dtype=np.int64).T, p)
    return n, free


def matmul(a, b, p):
    a = np.asarray(a, dtype=np.int64)
    b = np.asarray(b, dtype=np.int64)
    return np.mod(a @ b, p)


def row_space_dims(mats, p):
    """Rank of the stacked rows of the given matrices (same width)."""
    rows = [m for m in mats if m.shape[0] > 0]
    if not rows:
        return 0
    return rank(np.vstack(rows), p)


def is_invertible(a, p):
    a = np.asarray(a, dtype=np.int64)
    if a.shape[0] != a.shape[1]:
        return False
    if a.shape[0] == 0:
        return True
    return rank(a, p) == a.shape[0]


def det_int(a):
    """Exact integer determinant (Bareiss, fraction-free).

    Works on plain Python integers so there is no overflow; intended for
    the small integer matrices produced by Cartan counts.
    """
    m = [[int(x) for x in row] for row in np.asarray(a)]
    n = len(m)
    if n == 0:
        return 1
    if any(len(row) != n for row in m):
        raise ValueError("determinant of a non-square matrix")
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]
