"""Reference Hamiltonian cycle enumeration by backtracking.

Independent of the circuit path; used to check what the register farm flags.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .graph import Graph

CycleSet = frozenset  # of canonical tuples


def canonicalize(seq: Sequence[int]) -> tuple[int, ...]:
    """Least representative over all rotations and both directions."""
    seq = tuple(seq)
    if sorted(seq) != list(range(len(seq))):
        raise ValueError(f"not a permutation of 0..{len(seq) - 1}: {seq}")
    n = len(seq)
    rev = seq[::-1]
    return min(min(s[i:] + s[:i] for i in range(n)) for s in (seq, rev))


def find_cycles(g: Graph) -> frozenset[tuple[int, ...]]:
    adj: list[list[int]] = [[] for _ in range(g.n)]
    for u, v in g.sorted_edges():
        adj[u].append(v)
        adj[v].append(u)

    found: set[tuple[int, ...]] = set()
    used = [False] * g.n
    path = [0]
    used[0] = True

    def extend(cur: int) -> None:
        if len(path) == g.n:
            if 0 in adj[cur]:
                found.add(canonicalize(path))
            return
        for nxt in adj[cur]:
            if not used[nxt]:
                used[nxt] = True
                path.append(nxt)
                extend(nxt)
                path.pop()
                used[nxt] = False

    extend(0)
    return frozenset(found)


def _directions(cycle: tuple[int, ...]) -> list[tuple[int, ...]]:
    return [cycle, cycle[::-1]]


def expected_fixed_start(cs: Iterable[tuple[int, ...]]) -> set[tuple[int, ...]]:
    """Both traversals of each cycle, rotated so vertex 0 comes first."""
    out = set()
    for cycle in cs:
        for s in _directions(tuple(cycle)):
            i = s.index(0)
            out.add(s[i:] + s[:i])
    return out


def expected_full_codes(cs: Iterable[tuple[int, ...]], n: int) -> set[tuple[int, ...]]:
    """Every rotation of both traversals of each cycle."""
    out = set()
    for cycle in cs:
        if len(cycle) != n:
            raise ValueError(f"cycle {cycle} does not have length {n}")
        for s in _directions(tuple(cycle)):
            out.update(s[i:] + s[:i] for i in range(n))
    return out
