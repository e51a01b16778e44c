"""
Compiled kernels of the band eigensolver: plane-rotation reduction of a symmetric band matrix to
tridiagonal form, and implicitly shifted QL iteration on the tridiagonal.

Band matrices are passed in lower storage band[d, k] = A[k + d, k] with one spare row (d = w + 1)
holding the bulge created by each rotation.
"""

import math

import numba as nb

_numba_setting = {"nogil": True, "cache": True}


@nb.njit(**_numba_setting)
def apply_rotation(band, n, w, p, c, s):
    """
    Similarity transform by the plane rotation in (p, p + 1), in place on the lower band.
    """

    q = p + 1

    for k in range(max(0, q - w - 1), p):
        x = band[p - k, k]
        y = band[q - k, k]
        band[p - k, k] = c * x + s * y
        band[q - k, k] = -s * x + c * y

    for k in range(q + 1, min(n, p + w + 2)):
        x = band[k - p, p]
        y = band[k - q, q]
        band[k - p, p] = c * x + s * y
        band[k - q, q] = -s * x + c * y

    a = band[0, p]
    e = band[1, p]
    d = band[0, q]
    cs = c * s
    band[0, p] = c * c * a + 2.0 * cs * e + s * s * d
    band[0, q] = s * s * a - 2.0 * cs * e + c * c * d
    band[1, p] = cs * (d - a) + (c * c - s * s) * e


@nb.njit(**_numba_setting)
def reduce_band(band, w):
    """
    Reduce the band in place to tridiagonal form, column by column. Each element below the first
    subdiagonal is annihilated against its upper neighbour, and the resulting bulge is chased off
    the bottom of the matrix one band-width at a time.
    """

    n = band.shape[1]

    for j in range(n - 2):
        for dist in range(min(w, n - 1 - j), 1, -1):
            y = band[dist, j]
            if y == 0.0:
                continue

            x = band[dist - 1, j]
            r = math.hypot(x, y)
            p = j + dist - 1
            apply_rotation(band, n, w, p, x / r, y / r)
            band[dist - 1, j] = r
            band[dist, j] = 0.0

            row = p + w + 1
            col = p
            while row < n:
                y = band[w + 1, col]
                if y == 0.0:
                    break

                x = band[w, col]
                r = math.hypot(x, y)
                apply_rotation(band, n, w, row - 1, x / r, y / r)
                band[w, col] = r
                band[w + 1, col] = 0.0

                col = row - 1
                row = col + w + 1

    return band[0].copy(), band[1, : n - 1].copy()


@nb.njit(**_numba_setting)
def tql_eigenvalues(d, e, tol, max_iterations):
    """
    Eigenvalues of the symmetric tridiagonal (d, e) by QL with implicit Wilkinson-type shifts.
    d (length n) is overwritten by the eigenvalues, e (length n, last entry ignored) is destroyed.

    Returns 0 on success, otherwise 1 + the index of the eigenvalue that hit the iteration cap.
    """

    n = d.shape[0]
    if n > 0:
        e[n - 1] = 0.0

    for l in range(n):
        iterations = 0
        while True:
            m = l
            while m < n - 1:
                if abs(e[m]) <= tol * (abs(d[m]) + abs(d[m + 1])):
                    break
                m += 1

            if m == l:
                break
            if iterations == max_iterations:
                return l + 1
            iterations += 1

            g = (d[l + 1] - d[l]) / (2.0 * e[l])
            r = math.hypot(g, 1.0)
            g = d[m] - d[l] + e[l] / (g + math.copysign(r, g))

            s = 1.0
            c = 1.0
            p = 0.0
            underflow = False
            i = m - 1
            while i >= l:
                f = s * e[i]
                b = c * e[i]
                r = math.hypot(f, g)
                e[i + 1] = r
                if r == 0.0:
                    d[i + 1] -= p
                    e[m] = 0.0
                    underflow = True
                    break

                s = f / r
                c = g / r
                g = d[i + 1] - p
                r = (d[i] - g) * s + 2.0 * c * b
                p = s * r
                d[i + 1] = g + p
                g = c * r - b
                i -= 1

            if underflow:
                continue

            d[l] -= p
            e[l] = g
            e[m] = 0.0

    return 0
