"""Resource formulas (NUM, BITS, OPS, TOTBITS, quantum estimates) and their
comparison with compiled circuits."""

from __future__ import annotations

import math
from dataclasses import dataclass, field, replace
from typing import Iterable

from .circuit import Circuit, GateKind, Mode
from .compiler import compile_graph
from .encoding import bits_per_vertex
from .graph import Graph

BITS_FULL_EXPR = "n(k+2m+3)-1"
BITS_ONESHOT_EXPR = "n(k+3)-1"
BITS_REDUCED_EXPR = "n(k+2)-1"
OPS_FULL_EXPR = "n[m(8k+10)+1]-1"
OPS_REDUCED_EXPR = "6mn+8kmn+2mn+n-1"

REASONS = ("extra-enable-control", "flag-line", "scratch-pool", "temp-line", "gate-granularity")


@dataclass(frozen=True)
class Delta:
    quantity: str
    formula: int
    measured: int
    reasons: tuple[tuple[str, int], ...]

    @property
    def value(self) -> int:
        return self.measured - self.formula


@dataclass(frozen=True)
class ResourceReport:
    n: int
    k: int
    m: int
    num_registers: int
    bits_formula_full: int
    bits_formula_oneshot: int
    bits_formula_reduced: int
    ops_formula_full: int
    ops_formula_reduced: int
    totbits: int
    qubits_quantum: int
    qubits_workspace: int
    grover_steps: int
    mode: Mode | None = None
    bits_measured: int | None = None
    ops_measured: int | None = None
    deltas: tuple[Delta, ...] = field(default_factory=tuple)

    def bits_formula(self, mode: Mode) -> int:
        return {
            Mode.REVERSIBLE_FULL: self.bits_formula_full,
            Mode.CMOS_ONESHOT: self.bits_formula_oneshot,
            Mode.CMOS_REDUCED: self.bits_formula_reduced,
        }[mode]

    def ops_formula(self, mode: Mode) -> int:
        return self.ops_formula_full if mode is Mode.REVERSIBLE_FULL else self.ops_formula_reduced


def grover_steps(n: int) -> int:
    """``sqrt(n^n)`` rounded to the nearest integer, computed exactly."""
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    space = n**n
    r = math.isqrt(space)
    return r + 1 if space - r * r > r else r


def evaluate_formulas(n: int, k: int | None = None, m: int = 0) -> ResourceReport:
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    if m < 0:
        raise ValueError(f"negative edge count {m}")
    k = bits_per_vertex(n) if k is None else k
    return ResourceReport(
        n=n,
        k=k,
        m=m,
        num_registers=math.factorial(n - 1),
        bits_formula_full=n * (k + 2 * m + 3) - 1,
        bits_formula_oneshot=n * (k + 3) - 1,
        bits_formula_reduced=n * (k + 2) - 1,
        ops_formula_full=n * (m * (8 * k + 10) + 1) - 1,
        ops_formula_reduced=6 * m * n + 8 * k * m * n + 2 * m * n + n - 1,
        totbits=k * math.factorial(n),
        qubits_quantum=k * n + 2 * m * n,
        # ceil(n log2 n) == ceil(log2(n^n)), exact in integers
        qubits_workspace=(n**n - 1).bit_length(),
        grover_steps=grover_steps(n),
    )


def lowered_gate_count(c: Circuit) -> int:
    total = 0
    for g in c.gates:
        if g.kind is GateKind.MCN and len(g.controls) >= 3:
            total += 2 * len(g.controls) - 3
        else:
            total += 1
    return total


def measure(c: Circuit) -> tuple[int, int]:
    """``(lines, post-lowering gate count)``."""
    return c.layout.total, lowered_gate_count(c)


def _line_delta(c: Circuit, formula: int) -> Delta:
    layout = c.layout
    n, k = c.n, c.k
    reasons: list[tuple[str, int]] = []
    scratch = layout.size("scratch")
    base = max(2 * k - 1, n - 2, 0)
    if scratch > base:
        reasons.append(("extra-enable-control", scratch - base))
    if base != n - 1:
        reasons.append(("scratch-pool", base - (n - 1)))
    if layout.has("temp"):
        reasons.append(("temp-line", layout.size("temp")))
    reasons.append(("flag-line", layout.size("flag")))
    return Delta("bits", formula, layout.total, tuple(reasons))


def report(g: Graph, mode: Mode | str = Mode.CMOS_REDUCED, circuit: Circuit | None = None) -> ResourceReport:
    """Formulas for ``g`` plus measured lines and gates of its compiled circuit."""
    mode = Mode(mode)
    c = circuit or compile_graph(g, mode)
    base = evaluate_formulas(g.n, bits_per_vertex(g.n), g.m)
    lines, gates = measure(c)
    ops_formula = base.ops_formula(mode)
    deltas = (
        _line_delta(c, base.bits_formula(mode)),
        Delta("ops", ops_formula, gates, (("gate-granularity", gates - ops_formula),)),
    )
    return replace(base, mode=mode, bits_measured=lines, ops_measured=gates, deltas=deltas)


def _fmt_delta(d: Delta) -> str:
    parts = ", ".join(f"{name} {amount:+d}" for name, amount in d.reasons)
    return f"delta {d.value:+d} [{parts}]"


def format_report(r: ResourceReport) -> str:
    rows = [
        f"n={r.n} k={r.k} m={r.m}" + (f" mode={r.mode}" if r.mode else ""),
        f"NUM      registers (n-1)!               {r.num_registers}",
        f"BITS     full {BITS_FULL_EXPR:<26}{r.bits_formula_full}",
        f"BITS     oneshot {BITS_ONESHOT_EXPR:<23}{r.bits_formula_oneshot}",
        f"BITS     reduced {BITS_REDUCED_EXPR:<23}{r.bits_formula_reduced}",
    ]
    by_name = {d.quantity: d for d in r.deltas}
    if r.bits_measured is not None:
        rows.append(f"BITS     measured                       {r.bits_measured}  {_fmt_delta(by_name['bits'])}")
    rows += [
        f"OPS      full {OPS_FULL_EXPR:<26}{r.ops_formula_full}",
        f"OPS      reduced {OPS_REDUCED_EXPR:<23}{r.ops_formula_reduced}",
    ]
    if r.ops_measured is not None:
        rows.append(f"OPS      measured                       {r.ops_measured}  {_fmt_delta(by_name['ops'])}")
    rows += [
        f"TOTBITS  k*n!                           {r.totbits}",
        f"QUBITS   kn+2mn                         {r.qubits_quantum}",
        f"QUBITS   workspace ceil(n*log2(n))      {r.qubits_workspace}",
        f"GROVER   sqrt(n^n)                      {r.grover_steps}",
    ]
    return "\n".join(rows) + "\n"


TOTBITS_HEADER = "n,k,num_registers,bits_reduced,totbits"


def totbits_table(n_range: Iterable[int]) -> str:
    rows = [TOTBITS_HEADER]
    for n in n_range:
        r = evaluate_formulas(n)
        rows.append(f"{n},{r.k},{r.num_registers},{r.bits_formula_reduced},{r.totbits}")
    return "\n".join(rows) + "\n"
