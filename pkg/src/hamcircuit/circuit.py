"""Gate IR, line layouts and compiled circuits."""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Sequence


class Mode(str, Enum):
    REVERSIBLE_FULL = "reversible-full"
    CMOS_ONESHOT = "cmos-oneshot"
    CMOS_REDUCED = "cmos-reduced"

    def __str__(self) -> str:
        return self.value

    @property
    def reversible(self) -> bool:
        return self is Mode.REVERSIBLE_FULL

    @property
    def has_enables(self) -> bool:
        return self is not Mode.CMOS_REDUCED


class GateKind(str, Enum):
    NOT = "NOT"
    CNOT = "CNOT"
    TOF = "TOF"
    MCN = "MCN"
    RST = "RST"
    CRST = "CRST"


# Number of controls each fixed-arity kind takes; MCN is variadic.
_ARITY = {GateKind.NOT: 0, GateKind.CNOT: 1, GateKind.TOF: 2, GateKind.RST: 0, GateKind.CRST: 1}

IRREVERSIBLE = frozenset({GateKind.RST, GateKind.CRST})


@dataclass(frozen=True)
class Gate:
    kind: GateKind
    controls: tuple[int, ...]
    target: int

    def __post_init__(self) -> None:
        expected = _ARITY.get(self.kind)
        if expected is None:
            if len(self.controls) < 1:
                raise ValueError("MCN needs at least one control")
        elif len(self.controls) != expected:
            raise ValueError(f"{self.kind.value} takes {expected} controls, got {len(self.controls)}")
        operands = (*self.controls, self.target)
        if len(set(operands)) != len(operands):
            raise ValueError(f"repeated operand in {self.kind.value} {operands}")
        if min(operands) < 0:
            raise ValueError(f"negative line index in {operands}")

    @property
    def operands(self) -> tuple[int, ...]:
        return (*self.controls, self.target)

    @property
    def reversible(self) -> bool:
        return self.kind not in IRREVERSIBLE


def x(t: int) -> Gate:
    return Gate(GateKind.NOT, (), t)


def cx(c: int, t: int) -> Gate:
    return Gate(GateKind.CNOT, (c,), t)


def ccx(c1: int, c2: int, t: int) -> Gate:
    return Gate(GateKind.TOF, (c1, c2), t)


def mcx(controls: Sequence[int], t: int) -> Gate:
    return Gate(GateKind.MCN, tuple(controls), t)


def reset(t: int) -> Gate:
    return Gate(GateKind.RST, (), t)


def creset(c: int, t: int) -> Gate:
    return Gate(GateKind.CRST, (c,), t)


SEGMENT_ORDER = ("workspace", "pair_result", "enable", "scratch", "hit", "temp", "flag")


@dataclass(frozen=True)
class LineLayout:
    """Named contiguous line ranges; ``segments`` holds ``(name, start, length)``."""

    segments: tuple[tuple[str, int, int], ...]

    def __post_init__(self) -> None:
        pos = 0
        names = []
        for name, start, length in self.segments:
            if name not in SEGMENT_ORDER:
                raise ValueError(f"unknown segment {name!r}")
            if start != pos or length <= 0:
                raise ValueError(f"segment {name} is not contiguous or is empty")
            names.append(name)
            pos += length
        if names != sorted(names, key=SEGMENT_ORDER.index) or len(set(names)) != len(names):
            raise ValueError(f"segments out of order: {names}")

    @property
    def total(self) -> int:
        if not self.segments:
            return 0
        _, start, length = self.segments[-1]
        return start + length

    def has(self, name: str) -> bool:
        return any(s[0] == name for s in self.segments)

    def segment(self, name: str) -> range:
        for seg, start, length in self.segments:
            if seg == name:
                return range(start, start + length)
        raise KeyError(name)

    def size(self, name: str) -> int:
        return len(self.segment(name)) if self.has(name) else 0

    def line(self, name: str, i: int = 0) -> int:
        return self.segment(name)[i]


@dataclass(frozen=True)
class Circuit:
    layout: LineLayout
    gates: tuple[Gate, ...]
    mode: Mode
    fingerprint: str

    def __post_init__(self) -> None:
        total = self.layout.total
        for g in self.gates:
            if max(g.operands) >= total:
                raise ValueError(f"gate {g} references a line beyond {total}")
            if self.mode.reversible and not g.reversible:
                raise ValueError(f"{g.kind.value} gate in a reversible circuit")

    @property
    def n(self) -> int:
        return self.layout.size("pair_result")

    @property
    def k(self) -> int:
        return self.layout.size("workspace") // self.n

    @property
    def flag_line(self) -> int:
        return self.layout.line("flag")

    @property
    def lowered(self) -> bool:
        return all(g.kind is not GateKind.MCN for g in self.gates)
