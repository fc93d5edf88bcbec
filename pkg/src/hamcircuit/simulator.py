"""Register-level circuit execution.

Single registers run on one integer bit vector. Batches are bit-sliced: line
``i`` becomes one Python integer whose bit ``r`` is that line's value in
register ``r``, so each gate updates every register of the batch at once.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import islice
from typing import Iterable, Sequence

import numpy as np

from .circuit import Circuit, Gate, GateKind, Mode
from .encoding import Encoding, Initialization, RegisterState
from .enumerator import count_initializations, partition, stream

MAX_FULL_CODE_BITS = 20


class CodeSpaceTooLarge(ValueError):
    def __init__(self, bits: int, bound: int = MAX_FULL_CODE_BITS):
        self.bits = bits
        self.bound = bound
        super().__init__(f"full code space needs 2^{bits} registers; refusing beyond n*k <= {bound}")


@dataclass(frozen=True)
class FlagReadout:
    """Flagged registers, ascending by rank (or raw code), with decoded walks."""

    entries: tuple[tuple[int, tuple[int, ...]], ...]
    total_tested: int

    @property
    def any_flag(self) -> bool:
        return bool(self.entries)

    @property
    def ranks(self) -> list[int]:
        return [r for r, _ in self.entries]

    @property
    def sequences(self) -> list[tuple[int, ...]]:
        return [s for _, s in self.entries]

    @classmethod
    def concat(cls, parts: Sequence["FlagReadout"]) -> "FlagReadout":
        entries = tuple(e for part in parts for e in part.entries)
        return cls(entries, sum(p.total_tested for p in parts))


def apply_gate(state: RegisterState, gate: Gate) -> RegisterState:
    if max(gate.operands) >= state.width:
        raise IndexError(f"gate {gate} exceeds register width {state.width}")
    return RegisterState(state.width, _apply(state.value, gate))


def _apply(v: int, g: Gate) -> int:
    t = 1 << g.target
    kind = g.kind
    if kind is GateKind.NOT:
        return v ^ t
    if kind is GateKind.RST:
        return v & ~t
    fire = all((v >> c) & 1 for c in g.controls)
    if kind is GateKind.CRST:
        return v & ~t if fire else v
    return v ^ t if fire else v


def run(c: Circuit, state: RegisterState) -> RegisterState:
    if state.width != c.layout.total:
        raise ValueError(f"state width {state.width} != circuit width {c.layout.total}")
    v = state.value
    for g in c.gates:
        v = _apply(v, g)
    return RegisterState(state.width, v)


def run_sliced(gates: Iterable[Gate], lines: list[int], mask: int) -> list[int]:
    """Apply ``gates`` in place to bit-sliced ``lines`` (all registers share ``mask``)."""
    for g in gates:
        kind = g.kind
        t = g.target
        if kind is GateKind.TOF:
            c1, c2 = g.controls
            lines[t] ^= lines[c1] & lines[c2]
        elif kind is GateKind.NOT:
            lines[t] ^= mask
        elif kind is GateKind.CNOT:
            lines[t] ^= lines[g.controls[0]]
        elif kind is GateKind.MCN:
            acc = mask
            for c in g.controls:
                acc &= lines[c]
            lines[t] ^= acc
        elif kind is GateKind.RST:
            lines[t] = 0
        else:
            lines[t] &= ~lines[g.controls[0]]
    return lines


def _pack(bits: np.ndarray) -> int:
    return int.from_bytes(np.packbits(bits.astype(np.uint8), bitorder="little").tobytes(), "little")


def _set_bits(value: int, count: int) -> np.ndarray:
    raw = value.to_bytes((count + 7) // 8, "little")
    bits = np.unpackbits(np.frombuffer(raw, dtype=np.uint8), bitorder="little")[:count]
    return np.flatnonzero(bits)


def _load_codes(codes: np.ndarray, enc: Encoding, total: int) -> list[int]:
    """Bit-sliced lines for a ``(batch, n)`` array of position codes."""
    lines = [0] * total
    for p in range(enc.n):
        col = codes[:, p]
        for bit, line in enumerate(enc.position_lines(p)):
            lines[line] = _pack((col >> bit) & 1)
    return lines


def _simulate_perms(c: Circuit, perms: list[tuple[int, ...]]) -> np.ndarray:
    enc = Encoding.for_vertices(c.n)
    lines = _load_codes(np.asarray(perms, dtype=np.int64), enc, c.layout.total)
    mask = (1 << len(perms)) - 1
    run_sliced(c.gates, lines, mask)
    return _set_bits(lines[c.flag_line], len(perms))


def run_batch(c: Circuit, inits: Iterable[Initialization], chunk_size: int = 8192) -> FlagReadout:
    """One fresh register per initialization; report those whose flag ends at 1."""
    entries = []
    tested = 0
    it = iter(inits)
    while True:
        chunk = list(islice(it, chunk_size))
        if not chunk:
            break
        for i in _simulate_perms(c, [init.perm for init in chunk]):
            entries.append((chunk[i].rank, chunk[i].perm))
        tested += len(chunk)
    entries.sort()
    return FlagReadout(tuple(entries), tested)


def _run_range(args: tuple[Circuit, int, int]) -> FlagReadout:
    c, start, stop = args
    return run_batch(c, stream(c.n, start, stop))


def run_ranks(c: Circuit, start: int = 0, stop: int | None = None, workers: int = 1) -> FlagReadout:
    """Run ranks ``[start, stop)``, fanned out over ``workers`` processes when > 1."""
    total = count_initializations(c.n)
    stop = total if stop is None else stop
    ranges = [(start + a, start + b) for a, b in partition(stop - start, max(workers, 1))]
    jobs = [(c, a, b) for a, b in ranges]
    if workers <= 1 or len(jobs) == 1:
        parts = [_run_range(j) for j in jobs]
    else:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            parts = list(pool.map(_run_range, jobs))
    return FlagReadout.concat(parts)


def run_full_code_space(c: Circuit, enc: Encoding | None = None, max_bits: int = MAX_FULL_CODE_BITS) -> FlagReadout:
    """Every one of the ``2^(nk)`` workspace codes, including non-permutations.

    Entries are ``(raw_code, decoded_codes)`` where position ``p`` occupies bits
    ``p*k .. p*k + k - 1`` of ``raw_code``.
    """
    enc = enc or Encoding.for_vertices(c.n)
    if c.mode is not Mode.REVERSIBLE_FULL:
        raise ValueError("full code space runs need the reversible-full circuit (enables reject revisits)")
    bits = enc.workspace_width
    if bits > max_bits:
        raise CodeSpaceTooLarge(bits, max_bits)
    count = 1 << bits
    idx = np.arange(count, dtype=np.int64)
    lines = [0] * c.layout.total
    for j in range(bits):
        lines[j] = _pack((idx >> j) & 1)
    run_sliced(c.gates, lines, (1 << count) - 1)
    flagged = _set_bits(lines[c.flag_line], count)
    return FlagReadout(tuple((int(r), enc.unpack(int(r))) for r in flagged), count)


def or_reduce(r: FlagReadout) -> bool:
    return r.any_flag
