"""Command-line entry point: ``hamcircuit find|compile|resources|verify``."""

from __future__ import annotations

import argparse
import random
import sys
from pathlib import Path
from typing import Sequence

from .circuit import Circuit, Mode
from .compiler import compile_graph
from .encoding import Encoding
from .graph import Graph, GraphError, parse_graph
from .netlist import NetlistError, emit_netlist, parse_netlist
from .oracle import canonicalize, expected_fixed_start, expected_full_codes, find_cycles
from .resources import format_report, report, totbits_table
from .simulator import CodeSpaceTooLarge, FlagReadout, run_full_code_space, run_ranks

EXIT_OK, EXIT_MISMATCH, EXIT_INPUT, EXIT_GUARD = 0, 1, 2, 3


class InputError(Exception):
    pass


def _load_graph(path: str) -> Graph:
    try:
        return parse_graph(Path(path).read_text(encoding="ascii"))
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from None
    except (GraphError, UnicodeDecodeError) as exc:
        raise InputError(f"{path}: {exc}") from None


def _cycle_label(seq: Sequence[int]) -> str:
    return "-".join(str(v + 1) for v in (*seq, seq[0]))


def _distinct(readout: FlagReadout) -> set[tuple[int, ...]]:
    return {canonicalize(s) for s in readout.sequences}


def _resolve_mode(args: argparse.Namespace) -> Mode:
    if getattr(args, "full_codes", False):
        if args.mode not in (None, Mode.REVERSIBLE_FULL.value):
            raise InputError("--full-codes needs --mode reversible-full")
        return Mode.REVERSIBLE_FULL
    return Mode(args.mode or Mode.CMOS_REDUCED.value)


def cmd_find(args: argparse.Namespace) -> int:
    g = _load_graph(args.graph)
    mode = _resolve_mode(args)
    c = compile_graph(g, mode)
    if args.full_codes:
        readout = run_full_code_space(c)
        key = "code"
    else:
        readout = run_ranks(c, workers=args.workers)
        key = "rank"

    shown = readout.entries if args.limit is None else readout.entries[: args.limit]
    out = []
    if args.format == "csv":
        out.append(f"{key},cycle")
        out.extend(f"{idx},{_cycle_label(seq)}" for idx, seq in shown)
    else:
        out.extend(_cycle_label(seq) for _, seq in shown)
        if len(shown) < len(readout.entries):
            out.append(f"... {len(readout.entries) - len(shown)} more not shown")
        out.append(f"registers tested: {readout.total_tested}")
        out.append(f"flagged: {len(readout.entries)}")
        out.append(f"distinct cycles: {len(_distinct(readout))}")
        if not readout.any_flag:
            out.append("no Hamiltonian circuit")
    print("\n".join(out))
    return EXIT_OK


def cmd_compile(args: argparse.Namespace) -> int:
    g = _load_graph(args.graph)
    c = compile_graph(g, Mode(args.mode or Mode.CMOS_REDUCED.value), lower_gates=not args.no_lower)
    sys.stdout.write(emit_netlist(c))
    return EXIT_OK


def _parse_range(text: str) -> range:
    try:
        a, b = text.split("..")
        lo, hi = int(a), int(b)
    except ValueError:
        raise InputError(f"bad --n-range {text!r}; expected a..b") from None
    if lo < 2 or hi < lo:
        raise InputError(f"bad --n-range {text!r}; need 2 <= a <= b")
    return range(lo, hi + 1)


def cmd_resources(args: argparse.Namespace) -> int:
    if args.n_range:
        sys.stdout.write(totbits_table(_parse_range(args.n_range)))
        return EXIT_OK
    if not args.graph:
        raise InputError("give a graph file or --n-range a..b")
    g = _load_graph(args.graph)
    r = report(g, Mode(args.mode or Mode.CMOS_REDUCED.value))
    if args.format == "csv":
        rows = ["field,value"]
        for name in (
            "n", "k", "m", "num_registers", "bits_formula_full", "bits_formula_oneshot",
            "bits_formula_reduced", "bits_measured", "ops_formula_full", "ops_formula_reduced",
            "ops_measured", "totbits", "qubits_quantum", "qubits_workspace", "grover_steps",
        ):
            rows.append(f"{name},{getattr(r, name)}")
        sys.stdout.write("\n".join(rows) + "\n")
    else:
        sys.stdout.write(format_report(r))
    return EXIT_OK


def random_graph(n: int, p: float, rng: random.Random) -> Graph:
    edges = [(u, v) for u in range(n) for v in range(u + 1, n) if rng.random() < p]
    return Graph.from_edges(n, edges)


def verify_graph(g: Graph, mode: Mode, workers: int = 1, circuit: Circuit | None = None) -> list[str]:
    """Mismatches between the circuit's flags and the backtracking oracle."""
    problems = []
    cycles = find_cycles(g)
    c = circuit or compile_graph(g, mode)
    readout = run_ranks(c, workers=workers)
    want = expected_fixed_start(cycles)
    got = set(readout.sequences)
    if got != want:
        from .enumerator import rank

        bad = sorted(rank(s) for s in got ^ want)
        problems.append(
            f"fixed-start mismatch: first rank {bad[0]}, "
            f"{len(got - want)} unexpected, {len(want - got)} missing"
        )
    enc = Encoding.for_vertices(g.n)
    if circuit is None and g.n <= 4 and enc.workspace_width <= 20:
        full = run_full_code_space(compile_graph(g, Mode.REVERSIBLE_FULL), enc)
        want_full = expected_full_codes(cycles, g.n)
        got_full = set(full.sequences)
        if got_full != want_full:
            bad = sorted(enc.pack(s) for s in got_full ^ want_full)
            problems.append(f"full-code mismatch: first code {bad[0]}")
    return problems


def cmd_verify(args: argparse.Namespace) -> int:
    mode = Mode(args.mode or Mode.CMOS_REDUCED.value)
    cases: list[tuple[str, Graph, Circuit | None]] = []
    if args.random:
        rng = random.Random(args.seed)
        for i in range(args.random):
            cases.append((f"random[{i}]", random_graph(args.n, args.edge_prob, rng), None))
    elif args.graph:
        g = _load_graph(args.graph)
        circuit = None
        if args.netlist:
            try:
                circuit = parse_netlist(Path(args.netlist).read_text(encoding="ascii"))
            except (OSError, NetlistError) as exc:
                raise InputError(f"{args.netlist}: {exc}") from None
            if circuit.n != g.n:
                raise InputError(f"netlist is for n={circuit.n}, graph has n={g.n}")
        cases.append((args.graph, g, circuit))
    else:
        raise InputError("give a graph file or --random COUNT")

    failed = 0
    for name, g, circuit in cases:
        problems = verify_graph(g, circuit.mode if circuit else mode, args.workers, circuit)
        if problems:
            failed += 1
            print(f"{name}: MISMATCH n={g.n} m={g.m}")
            for p in problems:
                print(f"  {p}")
        else:
            print(f"{name}: ok n={g.n} m={g.m} cycles={len(find_cycles(g))}")
    print(f"{len(cases) - failed}/{len(cases)} graphs match the oracle")
    return EXIT_MISMATCH if failed else EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="hamcircuit", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)
    modes = [m.value for m in Mode]

    p = sub.add_parser("find", help="report every Hamiltonian cycle flagged by the register farm")
    p.add_argument("graph")
    p.add_argument("--mode", choices=modes)
    p.add_argument("--full-codes", action="store_true", help="run all 2^(nk) codes (reversible-full)")
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--limit", type=int, default=None, help="print at most this many flagged entries")
    p.add_argument("--format", choices=["text", "csv"], default="text")
    p.set_defaults(func=cmd_find)

    p = sub.add_parser("compile", help="emit the netlist for a graph")
    p.add_argument("graph")
    p.add_argument("--mode", choices=modes)
    p.add_argument("--no-lower", action="store_true", help="keep multi-controlled NOTs unlowered")
    p.set_defaults(func=cmd_compile)

    p = sub.add_parser("resources", help="formula vs measured resource report")
    p.add_argument("graph", nargs="?")
    p.add_argument("--mode", choices=modes)
    p.add_argument("--n-range", help="emit the TOTBITS table for n in a..b")
    p.add_argument("--format", choices=["text", "csv"], default="text")
    p.set_defaults(func=cmd_resources)

    p = sub.add_parser("verify", help="check circuit flags against the backtracking oracle")
    p.add_argument("graph", nargs="?")
    p.add_argument("--netlist", help="replay this netlist instead of compiling")
    p.add_argument("--mode", choices=modes)
    p.add_argument("--random", type=int, default=0, metavar="COUNT")
    p.add_argument("--n", type=int, default=5)
    p.add_argument("--edge-prob", type=float, default=0.5)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--workers", type=int, default=1)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except CodeSpaceTooLarge as exc:
        print(f"refused: {exc}", file=sys.stderr)
        return EXIT_GUARD


if __name__ == "__main__":
    sys.exit(main())
