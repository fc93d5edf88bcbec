"""Compile a graph into a Hamiltonian-cycle recognizer circuit.

Each register holds one candidate walk in its workspace. For every adjacent
position pair ``(p, p+1 mod n)`` and every directed arc ``(a, b)`` an edge
detector conditions the two position codes against ``a`` and ``b`` and fires a
multi-controlled NOT. A final AND over the ``n`` pair-result lines sets the flag.

Three modes differ only in how revisits are prevented:

* ``reversible-full``: per-vertex enable lines, latched to zero through a
  dedicated hit line per (arc, pair) so the circuit stays reversible.
* ``cmos-oneshot``: same enables, but one temp line stands in for every hit
  line and is reset after each use.
* ``cmos-reduced``: no enables at all; the fixed-start permutation
  initializations already rule out revisits.
"""

from __future__ import annotations

from .circuit import Circuit, Gate, GateKind, LineLayout, Mode, ccx, cx, mcx, reset, x
from .encoding import Encoding
from .graph import DirectedArc, Graph, directed_arcs


class InsufficientScratch(ValueError):
    pass


def scratch_size(mode: Mode, n: int, k: int) -> int:
    # Detectors with both enables as controls have 2k + 2 controls, needing 2k scratch.
    detector = 2 * k if mode.has_enables else 2 * k - 1
    return max(detector, n - 2, 0)


def layout_for(mode: Mode | str, g: Graph) -> LineLayout:
    mode = Mode(mode)
    n = g.n
    k = Encoding.for_vertices(n).k
    sizes = [("workspace", n * k), ("pair_result", n)]
    if mode.has_enables:
        sizes.append(("enable", n))
    sizes.append(("scratch", scratch_size(mode, n, k)))
    if mode is Mode.REVERSIBLE_FULL and g.m:
        sizes.append(("hit", 2 * g.m * n))
    if mode is Mode.CMOS_ONESHOT:
        sizes.append(("temp", 1))
    sizes.append(("flag", 1))

    segments = []
    pos = 0
    for name, length in sizes:
        if length:
            segments.append((name, pos, length))
            pos += length
    return LineLayout(tuple(segments))


def lower_mcn(controls: list[int] | tuple[int, ...], target: int, scratch: list[int] | range) -> list[Gate]:
    """Toffoli ladder for an AND of ``controls`` into ``target``.

    Uses ``len(controls) - 2`` scratch lines, which must start at 0 and are
    returned to 0 by the mirrored uncompute half.
    """
    c = len(controls)
    if c == 0:
        raise ValueError("MCN needs at least one control")
    if c == 1:
        return [cx(controls[0], target)]
    if c == 2:
        return [ccx(controls[0], controls[1], target)]
    need = c - 2
    if len(scratch) < need:
        raise InsufficientScratch(f"{c} controls need {need} scratch lines, got {len(scratch)}")
    anc = list(scratch[:need])
    compute = [ccx(controls[0], controls[1], anc[0])]
    for i in range(2, c - 1):
        compute.append(ccx(controls[i], anc[i - 2], anc[i - 1]))
    final = ccx(controls[-1], anc[-1], target)
    return compute + [final] + compute[::-1]


def lower(gates: list[Gate], scratch: range) -> list[Gate]:
    out: list[Gate] = []
    for g in gates:
        if g.kind is GateKind.MCN:
            out.extend(lower_mcn(g.controls, g.target, scratch))
        else:
            out.append(g)
    return out


def _conditioning(p: int, arc: DirectedArc, enc: Encoding) -> tuple[list[Gate], list[int]]:
    """NOTs turning a match of ``arc`` at positions ``p, p+1`` into all ones."""
    q = (p + 1) % enc.n
    nots = []
    code_lines = []
    for pos, code in ((p, arc.src), (q, arc.dst)):
        for bit, line in enumerate(enc.position_lines(pos)):
            code_lines.append(line)
            if not (code >> bit) & 1:
                nots.append(x(line))
    return nots, code_lines


def build_edge_detector(
    p: int,
    arc: DirectedArc,
    mode: Mode | str,
    enc: Encoding,
    layout: LineLayout,
    arc_index: int = 0,
    m: int = 0,
) -> list[Gate]:
    """Detector gates (MCN left unlowered) for ``arc`` across pair ``p``.

    ``arc_index`` and ``m`` locate the hit line in reversible-full mode.
    """
    mode = Mode(mode)
    if not 0 <= p < enc.n:
        raise IndexError(f"pair {p} out of range for n={enc.n}")
    nots, code_lines = _conditioning(p, arc, enc)
    result = layout.line("pair_result", p)
    closing = p == enc.n - 1

    if mode is Mode.CMOS_REDUCED or closing:
        body = [mcx(code_lines, result)]
    else:
        enable = layout.segment("enable")
        controls = code_lines + [enable[arc.src], enable[arc.dst]]
        if mode is Mode.REVERSIBLE_FULL:
            latch = layout.line("hit", p * 2 * m + arc_index)
            body = [mcx(controls, latch), cx(latch, result), cx(latch, enable[arc.src])]
        else:
            latch = layout.line("temp")
            body = [mcx(controls, latch), cx(latch, result), cx(latch, enable[arc.src]), reset(latch)]
    return nots + body + nots


def compile_graph(
    g: Graph,
    mode: Mode | str = Mode.CMOS_REDUCED,
    enc: Encoding | None = None,
    lower_gates: bool = True,
) -> Circuit:
    mode = Mode(mode)
    enc = enc or Encoding.for_vertices(g.n)
    if enc.n != g.n:
        raise ValueError(f"encoding is for n={enc.n}, graph has n={g.n}")
    layout = layout_for(mode, g)
    arcs = directed_arcs(g)

    gates: list[Gate] = []
    if mode.has_enables:
        gates.extend(x(line) for line in layout.segment("enable"))
    for p in range(g.n):
        for i, arc in enumerate(arcs):
            gates.extend(build_edge_detector(p, arc, mode, enc, layout, i, g.m))
    gates.append(mcx(list(layout.segment("pair_result")), layout.line("flag")))

    if lower_gates:
        gates = lower(gates, layout.segment("scratch"))
    return Circuit(layout, tuple(gates), mode, g.fingerprint())


def invert(c: Circuit) -> Circuit:
    """Reverse the gate order; valid because every reversible gate is self-inverse."""
    if not c.mode.reversible or any(not g.reversible for g in c.gates):
        raise ValueError("cannot invert a circuit containing irreversible gates")
    return Circuit(c.layout, c.gates[::-1], c.mode, c.fingerprint)
