"""Undirected graphs: parsing, validation, arc expansion and the edge matrix."""

from __future__ import annotations

import hashlib
from dataclasses import dataclass, field
from typing import Iterable, NamedTuple


class GraphError(ValueError):
    """Invalid graph structure or malformed graph file."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class DirectedArc(NamedTuple):
    src: int
    dst: int

    @property
    def ascending(self) -> bool:
        return self.src < self.dst

    def reversed(self) -> "DirectedArc":
        return DirectedArc(self.dst, self.src)


@dataclass(frozen=True)
class Graph:
    """Undirected simple graph on vertices ``0..n-1``.

    Edges are stored as ``(u, v)`` pairs with ``u < v``.
    """

    n: int
    edges: frozenset[tuple[int, int]] = field(default_factory=frozenset)

    def __post_init__(self) -> None:
        if self.n < 2:
            raise GraphError(f"vertex count must be >= 2, got {self.n}")
        for u, v in self.edges:
            if not (0 <= u < v < self.n):
                raise GraphError(f"edge ({u}, {v}) is not a normalized pair within 0..{self.n - 1}")

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]]) -> "Graph":
        """Build a graph from 0-based pairs, rejecting self-loops and duplicates."""
        seen: set[tuple[int, int]] = set()
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"vertex out of range in edge ({u}, {v}) for n={n}")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            key = (min(u, v), max(u, v))
            if key in seen:
                raise GraphError(f"duplicate edge ({u}, {v})")
            seen.add(key)
        return cls(n, frozenset(seen))

    @classmethod
    def complete(cls, n: int) -> "Graph":
        return cls(n, frozenset((u, v) for u in range(n) for v in range(u + 1, n)))

    @property
    def m(self) -> int:
        return len(self.edges)

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def fingerprint(self) -> str:
        return hashlib.sha256(render_graph(self).encode("ascii")).hexdigest()[:16]


def parse_graph(text: str) -> Graph:
    """Parse the edge-list format: ``<n> <m>`` header then ``m`` lines of 1-based pairs.

    Blank lines and lines starting with ``#`` are skipped anywhere.
    """
    header: tuple[int, int] | None = None
    pairs: list[tuple[int, int, int]] = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) != 2:
            raise GraphError(f"expected two integers, got {line!r}", lineno)
        try:
            a, b = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphError(f"expected two integers, got {line!r}", lineno) from None
        if header is None:
            if a < 2 or b < 0:
                raise GraphError(f"malformed header {line!r}: need n >= 2 and m >= 0", lineno)
            header = (a, b)
        else:
            pairs.append((a, b, lineno))

    if header is None:
        raise GraphError("missing header line '<n> <m>'")
    n, m = header
    if len(pairs) != m:
        raise GraphError(f"header declares {m} edges but {len(pairs)} were given")

    seen: dict[tuple[int, int], int] = {}
    for a, b, lineno in pairs:
        for label in (a, b):
            if not 1 <= label <= n:
                raise GraphError(f"vertex label {label} out of range 1..{n}", lineno)
        if a == b:
            raise GraphError(f"self-loop at vertex {a}", lineno)
        key = (min(a, b) - 1, max(a, b) - 1)
        if key in seen:
            raise GraphError(f"duplicate edge {a} {b} (first at line {seen[key]})", lineno)
        seen[key] = lineno
    return Graph(n, frozenset(seen))


def render_graph(g: Graph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines.extend(f"{u + 1} {v + 1}" for u, v in g.sorted_edges())
    return "\n".join(lines) + "\n"


def directed_arcs(g: Graph) -> list[DirectedArc]:
    """Both orientations of every edge, ascending first, edges in sorted order."""
    arcs = []
    for u, v in g.sorted_edges():
        arcs.append(DirectedArc(u, v))
        arcs.append(DirectedArc(v, u))
    return arcs


def has_edge(g: Graph, u: int, v: int) -> bool:
    if not (0 <= u < g.n and 0 <= v < g.n):
        raise IndexError(f"vertex out of range for n={g.n}: ({u}, {v})")
    return (min(u, v), max(u, v)) in g.edges


def adjacency_table(g: Graph) -> str:
    """Tab-separated n x n grid; cell (i, j) reads ``ij`` (1-based) when the edge exists."""
    rows = []
    for i in range(g.n):
        cells = []
        for j in range(g.n):
            cells.append(f"{i + 1}{j + 1}" if i != j and has_edge(g, i, j) else "")
        rows.append("\t".join(cells))
    return "\n".join(rows) + "\n"
