"""Hamiltonian cycle recognition with reversible register circuits."""

from .circuit import Circuit, Gate, GateKind, LineLayout, Mode
from .compiler import build_edge_detector, compile_graph, invert, layout_for, lower_mcn
from .encoding import (
    Encoding,
    Initialization,
    RegisterState,
    bits_per_vertex,
    decode_workspace,
    encode_initialization,
    encode_sequence,
)
from .enumerator import count_initializations, rank, stream, unrank
from .graph import DirectedArc, Graph, GraphError, adjacency_table, directed_arcs, has_edge, parse_graph, render_graph
from .netlist import emit_netlist, parse_netlist
from .oracle import canonicalize, expected_fixed_start, expected_full_codes, find_cycles
from .resources import ResourceReport, evaluate_formulas, grover_steps, measure, report, totbits_table
from .simulator import FlagReadout, apply_gate, or_reduce, run, run_batch, run_full_code_space, run_ranks

__version__ = "0.1.0"
