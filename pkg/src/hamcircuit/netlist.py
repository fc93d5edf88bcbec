"""Plain-text netlist format.

Header::

    # mode <mode>
    # graph <fingerprint>
    # bitorder lsb-first
    # lines <total>
    # segment <name> <start> <len>     (one per segment, layout order)

followed by one gate per line: ``NOT t``, ``CNOT c t``, ``TOF c1 c2 t``,
``MCN c1,...,cj t``, ``RST t`` or ``CRST c t``.
"""

from __future__ import annotations

from .circuit import Circuit, Gate, GateKind, LineLayout, Mode


class NetlistError(ValueError):
    pass


def _gate_line(g: Gate) -> str:
    if g.kind is GateKind.MCN:
        return f"MCN {','.join(map(str, g.controls))} {g.target}"
    return " ".join([g.kind.value, *map(str, g.operands)])


def emit_netlist(c: Circuit) -> str:
    out = [
        f"# mode {c.mode.value}",
        f"# graph {c.fingerprint}",
        "# bitorder lsb-first",
        f"# lines {c.layout.total}",
    ]
    out.extend(f"# segment {name} {start} {length}" for name, start, length in c.layout.segments)
    out.extend(_gate_line(g) for g in c.gates)
    return "\n".join(out) + "\n"


def parse_netlist(text: str) -> Circuit:
    mode = fingerprint = None
    total = None
    segments: list[tuple[str, int, int]] = []
    gates: list[Gate] = []
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.strip()
        if not line:
            continue
        parts = line.split()
        try:
            if parts[0] == "#":
                key, args = parts[1], parts[2:]
                if key == "mode":
                    mode = Mode(args[0])
                elif key == "graph":
                    fingerprint = args[0]
                elif key == "lines":
                    total = int(args[0])
                elif key == "segment":
                    segments.append((args[0], int(args[1]), int(args[2])))
                continue
            kind = GateKind(parts[0])
            if kind is GateKind.MCN:
                if len(parts) != 3:
                    raise NetlistError(f"line {lineno}: MCN expects 'MCN c1,...,cj t'")
                controls = tuple(int(v) for v in parts[1].split(","))
                gates.append(Gate(kind, controls, int(parts[2])))
            else:
                nums = [int(v) for v in parts[1:]]
                if not nums:
                    raise NetlistError(f"line {lineno}: missing operands")
                gates.append(Gate(kind, tuple(nums[:-1]), nums[-1]))
        except NetlistError:
            raise
        except (ValueError, IndexError) as exc:
            raise NetlistError(f"line {lineno}: {exc or 'malformed'}: {line!r}") from None

    if mode is None or total is None or not segments:
        raise NetlistError("missing '# mode', '# lines' or '# segment' header")
    try:
        layout = LineLayout(tuple(segments))
        if layout.total != total:
            raise NetlistError(f"segments cover {layout.total} lines, header says {total}")
        return Circuit(layout, tuple(gates), mode, fingerprint or "")
    except NetlistError:
        raise
    except ValueError as exc:
        raise NetlistError(str(exc)) from None
