"""Numba-compiled coloring enumeration kernels.

Colorings are base-``k`` digit strings, vertex 0 most significant.  ``perms``
holds the automorphisms to test, one image row each (identity excluded).
"""

import numpy as np
from numba import njit


@njit(cache=True, nogil=True)
def _preserved(c, perms):
    for r in range(perms.shape[0]):
        ok = True
        for v in range(perms.shape[1]):
            if c[perms[r, v]] != c[v]:
                ok = False
                break
        if ok:
            return True
    return False


@njit(cache=True, nogil=True)
def count_distinguishing(perms, n, k, start, stop):
    """Number of colorings with index in ``[start, stop)`` fixed by no row of ``perms``."""
    c = np.zeros(n, dtype=np.int64)
    x = start
    for v in range(n - 1, -1, -1):
        c[v] = x % k
        x //= k
    total = 0
    for _ in range(start, stop):
        if not _preserved(c, perms):
            total += 1
        v = n - 1
        while v >= 0:
            c[v] += 1
            if c[v] < k:
                break
            c[v] = 0
            v -= 1
    return total


@njit(cache=True, nogil=True)
def first_distinguishing_rgs(perms, n, d, max_steps):
    """Scan restricted growth strings with at most ``d`` blocks in lexicographic order.

    Returns ``(examined, coloring)``; ``coloring[0] == -1`` when nothing was
    found within ``max_steps`` candidates or the space was exhausted.
    """
    c = np.zeros(n, dtype=np.int64)
    pmax = np.zeros(n, dtype=np.int64)  # pmax[i] = max(c[:i]), pmax[0] unused
    examined = 0
    while examined < max_steps:
        examined += 1
        if not _preserved(c, perms):
            return examined, c
        i = n - 1
        while i >= 1:
            if c[i] <= pmax[i] and c[i] < d - 1:
                break
            i -= 1
        if i < 1:
            break
        c[i] += 1
        m = max(pmax[i], c[i])
        for j in range(i + 1, n):
            c[j] = 0
            pmax[j] = m
    c[:] = -1
    return examined, c
