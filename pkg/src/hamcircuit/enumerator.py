"""Fixed-start permutations in lexicographic order, with rank/unrank.

Only positions ``1..n-1`` vary; position 0 always holds vertex 0. Ranks index
the ``(n-1)!`` suffix permutations through the factorial number system, so a
flagged register's rank is enough to recover its walk.
"""

from __future__ import annotations

import math
from typing import Iterator

from .encoding import Initialization


def count_initializations(n: int) -> int:
    if n < 2:
        raise ValueError(f"need at least 2 vertices, got {n}")
    return math.factorial(n - 1)


def unrank(i: int, n: int) -> Initialization:
    total = count_initializations(n)
    if not 0 <= i < total:
        raise IndexError(f"rank {i} outside [0, {total})")
    pool = list(range(1, n))
    perm = [0]
    rem = i
    for slots in range(n - 1, 0, -1):
        block = math.factorial(slots - 1)
        digit, rem = divmod(rem, block)
        perm.append(pool.pop(digit))
    return Initialization(tuple(perm), i)


def rank(init: Initialization | tuple[int, ...]) -> int:
    perm = init.perm if isinstance(init, Initialization) else tuple(init)
    n = len(perm)
    if n < 2 or perm[0] != 0 or sorted(perm) != list(range(n)):
        raise ValueError(f"not a fixed-start permutation: {perm}")
    pool = list(range(1, n))
    r = 0
    for pos in range(1, n):
        digit = pool.index(perm[pos])
        r += digit * math.factorial(n - 1 - pos)
        pool.pop(digit)
    return r


def _next_permutation(a: list[int]) -> bool:
    i = len(a) - 2
    while i >= 0 and a[i] >= a[i + 1]:
        i -= 1
    if i < 0:
        return False
    j = len(a) - 1
    while a[j] <= a[i]:
        j -= 1
    a[i], a[j] = a[j], a[i]
    a[i + 1:] = reversed(a[i + 1:])
    return True


def stream(n: int, start: int = 0, stop: int | None = None) -> Iterator[Initialization]:
    """Yield initializations with ranks in ``[start, stop)`` in increasing order."""
    total = count_initializations(n)
    stop = total if stop is None else min(stop, total)
    if start < 0 or start > stop:
        raise IndexError(f"bad rank range [{start}, {stop})")
    if start == stop:
        return
    cur = list(unrank(start, n).perm)
    for r in range(start, stop):
        yield Initialization(tuple(cur), r)
        if r + 1 < stop:
            _next_permutation(cur)


def partition(total: int, parts: int) -> list[tuple[int, int]]:
    """Split ``[0, total)`` into at most ``parts`` contiguous, nearly equal ranges."""
    parts = max(1, min(parts, total)) if total else 1
    bounds = [total * i // parts for i in range(parts + 1)]
    return [(a, b) for a, b in zip(bounds, bounds[1:]) if b > a] or [(0, 0)]
