"""Pure-numpy versions of the enumeration kernels, processed in index chunks."""

import numpy as np

CHUNK = 1 << 15


def _digits(idx, n, k):
    powers = k ** np.arange(n - 1, -1, -1, dtype=np.int64)
    return (idx[:, None] // powers[None, :]) % k


def preserved_mask(cols, perms):
    """Boolean mask over rows of ``cols``: fixed by at least one row of ``perms``."""
    hit = np.zeros(cols.shape[0], dtype=bool)
    for p in perms:
        hit |= np.all(cols[:, p] == cols, axis=1)
    return hit


def count_distinguishing(perms, n, k, start, stop):
    total = 0
    for lo in range(start, stop, CHUNK):
        idx = np.arange(lo, min(lo + CHUNK, stop), dtype=np.int64)
        total += int(np.count_nonzero(~preserved_mask(_digits(idx, n, k), perms)))
    return total


def first_distinguishing_rgs(perms, n, d, max_steps):
    # Lexicographic RGS order is the order of base-d strings filtered to RGS.
    examined = 0
    stop = d ** (n - 1)
    for lo in range(0, stop, CHUNK):
        idx = np.arange(lo, min(lo + CHUNK, stop), dtype=np.int64)
        cols = _digits(idx, n, d)
        prefix = np.maximum.accumulate(cols, axis=1)
        valid = np.all(cols[:, 1:] <= prefix[:, :-1] + 1, axis=1)
        cols = cols[valid][: max_steps - examined]
        bad = preserved_mask(cols, perms)
        good = np.flatnonzero(~bad)
        if good.size:
            return examined + int(good[0]) + 1, cols[good[0]].copy()
        examined += cols.shape[0]
        if examined >= max_steps:
            break
    return examined, np.full(n, -1, dtype=np.int64)
