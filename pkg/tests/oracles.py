"""Slow, obviously-correct reference computations used only by the tests."""

import itertools
import math


def all_automorphisms(n, edges):
    """Every vertex permutation preserving the edge set (n! scan)."""
    es = {frozenset(e) for e in edges}
    out = []
    for perm in itertools.permutations(range(n)):
        if all(frozenset((perm[u], perm[v])) in es for u, v in edges):
            out.append(perm)
    return out


def preserved(coloring, perm):
    return all(coloring[perm[v]] == coloring[v] for v in range(len(perm)))


def count_distinguishing(n, perms, k):
    """Colorings in {0..k-1}^n preserved by no non-identity permutation in ``perms``."""
    ident = tuple(range(n))
    others = [p for p in perms if tuple(p) != ident]
    return sum(1 for c in itertools.product(range(k), repeat=n)
               if not any(preserved(c, p) for p in others))


def distinguishing_number(n, perms):
    for d in range(1, n + 1):
        if count_distinguishing(n, perms, d):
            return d
    return n


def stirling2_explicit(n, k):
    """Inclusion-exclusion form of the Stirling number of the second kind."""
    return sum((-1) ** j * math.comb(k, j) * (k - j) ** n for j in range(k + 1)) // math.factorial(k)


def set_partitions(n):
    """Number of blocks of every set partition of range(n)."""
    if n == 0:
        yield 0
        return

    def rec(i, blocks):
        if i == n:
            yield blocks
            return
        for b in range(blocks):
            yield from rec(i + 1, blocks)
        yield from rec(i + 1, blocks + 1)

    yield from rec(0, 0)


def exact_colorings(n, perms, k):
    """Orbits of distinguishing colorings using exactly k colors (brute force)."""
    ident = tuple(range(n))
    others = [p for p in perms if tuple(p) != ident]
    good = [c for c in itertools.product(range(k), repeat=n)
            if len(set(c)) == k and not any(preserved(c, p) for p in others)]
    return len(good) // len(perms)


def cycle_count(perm):
    seen, count = set(), 0
    for s in range(len(perm)):
        if s not in seen:
            count += 1
            v = s
            while v not in seen:
                seen.add(v)
                v = perm[v]
    return count
