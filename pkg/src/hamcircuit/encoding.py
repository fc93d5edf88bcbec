"""Vertex codes and the register bit layout.

Position ``p`` of a candidate walk occupies workspace lines ``p*k .. p*k + k - 1``,
least significant bit first.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence


def bits_per_vertex(n: int) -> int:
    """Bits needed for vertex codes ``0..n-1``, i.e. ``ceil(log2(n))``."""
    if n < 2:
        raise ValueError(f"need at least 2 vertices, got {n}")
    return (n - 1).bit_length()


@dataclass(frozen=True)
class Encoding:
    n: int
    k: int

    def __post_init__(self) -> None:
        if self.k != bits_per_vertex(self.n):
            raise ValueError(f"k={self.k} does not match ceil(log2({self.n}))")

    @classmethod
    def for_vertices(cls, n: int) -> "Encoding":
        return cls(n, bits_per_vertex(n))

    @property
    def workspace_width(self) -> int:
        return self.n * self.k

    def position_lines(self, p: int) -> range:
        return range(p * self.k, (p + 1) * self.k)

    def pack(self, seq: Sequence[int]) -> int:
        """Raw workspace integer for a sequence of codes (code ``p`` at bit ``p*k``)."""
        if len(seq) != self.n:
            raise ValueError(f"expected {self.n} codes, got {len(seq)}")
        raw = 0
        for p, code in enumerate(seq):
            if not 0 <= code < (1 << self.k):
                raise ValueError(f"code {code} does not fit in {self.k} bits")
            raw |= code << (p * self.k)
        return raw

    def unpack(self, raw: int) -> tuple[int, ...]:
        mask = (1 << self.k) - 1
        return tuple((raw >> (p * self.k)) & mask for p in range(self.n))


@dataclass(frozen=True)
class Initialization:
    """A candidate walk starting at vertex 0, with its lexicographic rank."""

    perm: tuple[int, ...]
    rank: int

    def __post_init__(self) -> None:
        n = len(self.perm)
        if n < 2 or sorted(self.perm) != list(range(n)) or self.perm[0] != 0:
            raise ValueError(f"not a permutation of 0..n-1 starting at 0: {self.perm}")


@dataclass(frozen=True)
class RegisterState:
    """Fixed-width bit vector; bit ``i`` of ``value`` is line ``i``."""

    width: int
    value: int = 0

    def __post_init__(self) -> None:
        if self.value < 0 or self.value >> self.width:
            raise ValueError(f"value does not fit in {self.width} lines")

    def __getitem__(self, line: int) -> int:
        if not 0 <= line < self.width:
            raise IndexError(line)
        return (self.value >> line) & 1

    def bits(self) -> tuple[int, ...]:
        return tuple((self.value >> i) & 1 for i in range(self.width))

    def lines(self, indices) -> tuple[int, ...]:
        return tuple(self[i] for i in indices)


def encode_sequence(seq: Sequence[int], enc: Encoding, total_lines: int) -> RegisterState:
    """Load arbitrary k-bit codes into the workspace; every other line is 0."""
    if total_lines < enc.workspace_width:
        raise ValueError(f"layout of {total_lines} lines cannot hold {enc.workspace_width} workspace lines")
    return RegisterState(total_lines, enc.pack(seq))


def encode_initialization(init: Initialization, enc: Encoding, total_lines: int) -> RegisterState:
    if len(init.perm) != enc.n:
        raise ValueError(f"initialization has {len(init.perm)} vertices, encoding expects {enc.n}")
    return encode_sequence(init.perm, enc, total_lines)


def decode_workspace(state: RegisterState, enc: Encoding) -> tuple[int, ...]:
    """Read the n position codes back; codes >= n are returned as-is."""
    if state.width < enc.workspace_width:
        raise ValueError("state narrower than the workspace")
    return enc.unpack(state.value & ((1 << enc.workspace_width) - 1))
