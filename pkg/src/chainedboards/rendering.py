"""Plain-text and Graphviz renderings.

ascii covers boards, placements, matrix families, and triangle chains; dot
covers the chain graph, matchings, the grid graph, ice (arrows carry the
orientation), and fully-packed loops.  Output is deterministic.
"""

from __future__ import annotations

from .asm import ChainedASM, PlainASM
from .boards import BoardSpec
from .errors import UnsupportedDomainError
from .ice import FPLConfiguration, GridGraph, IceConfiguration
from .matchings import ChainGraph, ChainMatching
from .perms import ChainedPermutation, OneLine, one_line_text
from .placements import RookPlacement
from .serialization import edge_to_str, vertex_to_str
from .triangles import MonotoneTriangleChain


def render(obj, format: str = "ascii") -> str:
    """Render ``obj`` in the requested format ('ascii' or 'dot')."""
    if format == "ascii":
        return _render_ascii(obj)
    if format == "dot":
        return _render_dot(obj)
    raise UnsupportedDomainError(f"unknown format {format!r}")


def _render_ascii(obj) -> str:
    if isinstance(obj, BoardSpec):
        return _boards_ascii(obj, set())
    if isinstance(obj, RookPlacement):
        return _boards_ascii(obj.board, set(obj.squares))
    if isinstance(obj, (ChainedPermutation, ChainedASM)):
        return _matrices_ascii(obj.matrices)
    if isinstance(obj, PlainASM):
        return _matrices_ascii((obj.rows,))
    if isinstance(obj, OneLine):
        return one_line_text(obj) + "\n"
    if isinstance(obj, MonotoneTriangleChain):
        return _triangles_ascii(obj)
    raise UnsupportedDomainError(f"no ascii rendering for {type(obj).__name__}")


def _render_dot(obj) -> str:
    if isinstance(obj, ChainGraph):
        return _chain_graph_dot(obj, matched=frozenset())
    if isinstance(obj, ChainMatching):
        return _chain_graph_dot(obj.graph, matched=frozenset(obj.edges))
    if isinstance(obj, GridGraph):
        return _grid_graph_dot(obj)
    if isinstance(obj, IceConfiguration):
        return _ice_dot(obj)
    if isinstance(obj, FPLConfiguration):
        return _fpl_dot(obj)
    raise UnsupportedDomainError(f"no dot rendering for {type(obj).__name__}")


def _boards_ascii(board: BoardSpec, rooks: set) -> str:
    lines = []
    occupied = {(s.board, s.row, s.col) for s in rooks}
    for b in range(1, board.k + 1):
        lines.append(f"board {b}")
        for r in range(1, board.n + 1):
            lines.append(
                "".join("R" if (b, r, c) in occupied else "." for c in range(1, board.n + 1))
            )
    return "\n".join(lines) + "\n"


def _matrices_ascii(matrices) -> str:
    width = max(
        len(str(x)) for mat in matrices for row in mat for x in row
    )
    blocks = []
    for idx, mat in enumerate(matrices, start=1):
        lines = [f"matrix {idx}"] if len(matrices) > 1 else []
        for row in mat:
            lines.append(" ".join(str(x).rjust(width) for x in row))
        blocks.append("\n".join(lines))
    return "\n".join(blocks) + "\n"


def _triangles_ascii(t: MonotoneTriangleChain) -> str:
    width = len(str(2 * t.n))
    blocks = []
    for idx, tri in enumerate(t.triangles, start=1):
        lines = [f"triangle {idx}"]
        for m, row in enumerate(tri, start=1):
            pad = " " * ((t.n - m) * (width + 1) // 2)
            lines.append(pad + " ".join(str(x).rjust(width) for x in row))
        blocks.append("\n".join(lines))
    return "\n".join(blocks) + "\n"


def _chain_graph_dot(g: ChainGraph, matched: frozenset) -> str:
    lines = ["graph chain {"]
    for v in g.vertices():
        lines.append(f'  "{v[0]}:{v[1]}";')
    for e in g.edges():
        u, v = g.endpoints(e)
        attrs = [f'label="{e[0]},{e[1]},{e[2]}"']
        if e in matched:
            attrs.append("style=bold")
        lines.append(f'  "{u[0]}:{u[1]}" -- "{v[0]}:{v[1]}" [{", ".join(attrs)}];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def _grid_graph_dot(g: GridGraph) -> str:
    lines = ["graph grid {"]
    for v in g.vertices():
        lines.append(f'  "{vertex_to_str(v)}";')
    for e in g.edges():
        u, v = g.endpoints(e)
        lines.append(f'  "{vertex_to_str(u)}" -- "{vertex_to_str(v)}" [label="{edge_to_str(e)}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


def _ice_dot(c: IceConfiguration) -> str:
    lines = ["digraph ice {"]
    for v in c.graph.vertices():
        lines.append(f'  "{vertex_to_str(v)}";')
    for e in c.graph.edges():
        head = c.head(e)
        tail = c.tail(e)
        lines.append(
            f'  "{vertex_to_str(tail)}" -> "{vertex_to_str(head)}" [label="{edge_to_str(e)}"];'
        )
    lines.append("}")
    return "\n".join(lines) + "\n"


def _fpl_dot(f: FPLConfiguration) -> str:
    lines = ["graph fpl {"]
    for v in f.graph.vertices():
        lines.append(f'  "{vertex_to_str(v)}";')
    for e in f.chosen:
        u, v = f.graph.endpoints(e)
        lines.append(f'  "{vertex_to_str(u)}" -- "{vertex_to_str(v)}" [label="{edge_to_str(e)}"];')
    lines.append("}")
    return "\n".join(lines) + "\n"


__all__ = ["render"]
