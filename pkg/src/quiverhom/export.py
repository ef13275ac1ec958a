"""DOT and CSV export of the syzygy graph; byte-stable across runs."""

from __future__ import annotations

import io

from collections import Counter

from .algebra import BoundQuiverAlgebra
from .itfunctions import phi_of_class_set, psi_of_class_counter
from .representations import INFINITE
from .syzygies import build_syzygy_graph


def _pd_text(value) -> str:
    return "INF" if value == INFINITE else str(value)


def syzygy_graph_dot(A: BoundQuiverAlgebra) -> str:
    """Graphviz source: one node per class, projective classes boxed,
    edges labelled with syzygy multiplicities when above one."""
    graph = build_syzygy_graph(A)
    out = io.StringIO()
    out.write("digraph syzygies {\n")
    out.write("  rankdir=LR;\n")
    for node in graph.nodes:
        label = (f"{node.label()}\\ndim {node.dim}"
                 f"\\npd {_pd_text(graph.pd[node.node_id])}")
        shape = ", shape=box" if node.projective_flag else ""
        out.write(f'  c{node.node_id} [label="{label}"{shape}];\n')
    for node in graph.nodes:
        for succ in sorted(graph.edges[node.node_id]):
            mult = graph.edges[node.node_id][succ]
            attr = f' [label="{mult}"]' if mult > 1 else ""
            out.write(f"  c{node.node_id} -> c{succ}{attr};\n")
    out.write("}\n")
    return out.getvalue()


def class_table_csv(A: BoundQuiverAlgebra) -> str:
    """One row per class: identity, dimension, pd and its phi/psi."""
    graph = build_syzygy_graph(A)
    lines = ["class_id,representative,terminal_vertex,dim,projective,pd,"
             "phi,psi"]
    for node in graph.nodes:
        nid = node.node_id
        phi_val = phi_of_class_set([nid], A)
        psi_val = psi_of_class_counter(Counter({nid: 1}), A)
        lines.append(
            f"c{nid},{node.label()},{node.top_vertex},{node.dim},"
            f"{'yes' if node.projective_flag else 'no'},"
            f"{_pd_text(graph.pd[nid])},{phi_val},{psi_val}")
    return "\n".join(lines) + "\n"
