"""The matching form of chained permutations.

The chain graph has rows 0..k of n labelled vertices with a complete
bipartite K_{n,n} between consecutive rows; circular graphs identify rows 0
and k.  Edges keep the identity (l, i, j): the K_{n,n} between rows l-1
and l, joining the i-th vertex of row l to the j-th vertex of row l-1.  The
circular identification never merges edges: k = 2 keeps parallel edges
and k = 1 keeps loops (which no matching may use).

A 1 at (i, j) of matrix l corresponds to the edge (l, i, j); matchings of
the right size are exactly the chained permutations.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .boards import BoardSpec, max_rooks
from .errors import InputDomainError, ValidationError
from .perms import ChainedPermutation

Vertex = tuple[int, int]  # (row, index); circular rows run 1..k, linear 0..k
EdgeId = tuple[int, int, int]  # (l, i, j)


@dataclass(frozen=True)
class ChainGraph:
    board: BoardSpec

    @property
    def vertex_rows(self) -> range:
        return range(1, self.board.k + 1) if self.board.circular else range(self.board.k + 1)

    def vertices(self) -> Iterator[Vertex]:
        for row in self.vertex_rows:
            for i in range(1, self.board.n + 1):
                yield (row, i)

    def edges(self) -> Iterator[EdgeId]:
        for l in range(1, self.board.k + 1):
            for i in range(1, self.board.n + 1):
                for j in range(1, self.board.n + 1):
                    yield (l, i, j)

    def endpoints(self, edge: EdgeId) -> tuple[Vertex, Vertex]:
        l, i, j = edge
        if not (1 <= l <= self.board.k and 1 <= i <= self.board.n and 1 <= j <= self.board.n):
            raise InputDomainError(f"edge {edge} out of range")
        below = l - 1
        if self.board.circular and below == 0:
            below = self.board.k
        return ((l, i), (below, j))

    def is_loop(self, edge: EdgeId) -> bool:
        u, v = self.endpoints(edge)
        return u == v


def build_chain_graph(board: BoardSpec) -> ChainGraph:
    return ChainGraph(board)


@dataclass(frozen=True)
class ChainMatching:
    graph: ChainGraph
    edges: tuple[EdgeId, ...]

    def __post_init__(self):
        fixed = tuple(sorted(set(tuple(e) for e in self.edges)))
        for e in fixed:
            self.graph.endpoints(e)  # range check
        object.__setattr__(self, "edges", fixed)


def matching_size(board: BoardSpec) -> int:
    """Edges in the matching of a chained permutation: one per rook."""
    return max_rooks(board)


def matching_kind(board: BoardSpec) -> str:
    """perfect / near-perfect / leaves-n-unmatched, by shape and parity."""
    if board.circular:
        return "near-perfect" if board.n % 2 == 1 and board.k % 2 == 1 else "perfect"
    return "perfect" if board.k % 2 == 1 else "leaves-n-unmatched"


def matching_problems(m: ChainMatching) -> list[str]:
    problems = []
    seen: set[Vertex] = set()
    for e in m.edges:
        if m.graph.is_loop(e):
            problems.append(f"edge {e} is a loop")
            continue
        for v in m.graph.endpoints(e):
            if v in seen:
                problems.append(f"vertex {v} is covered twice")
            seen.add(v)
    want = matching_size(m.graph.board)
    if len(m.edges) != want:
        problems.append(f"matching has {len(m.edges)} edges, expected {want}")
    return problems


def validate_matching(m: ChainMatching) -> bool:
    return not matching_problems(m)


def to_matching(cp: ChainedPermutation) -> ChainMatching:
    edges = [
        (l, i + 1, j + 1)
        for l, mat in enumerate(cp.matrices, start=1)
        for i, row in enumerate(mat)
        for j, x in enumerate(row)
        if x
    ]
    return ChainMatching(build_chain_graph(cp.board), tuple(edges))


def from_matching(m: ChainMatching) -> ChainedPermutation:
    problems = matching_problems(m)
    if problems:
        raise ValidationError("invalid chain matching", problems)
    board = m.graph.board
    n = board.n
    grids = [[[0] * n for _ in range(n)] for _ in range(board.k)]
    for l, i, j in m.edges:
        grids[l - 1][i - 1][j - 1] = 1
    return ChainedPermutation(board, tuple(tuple(map(tuple, g)) for g in grids))


def enumerate_matchings(board: BoardSpec) -> Iterator[ChainMatching]:
    """All matchings of the chained-permutation size, by direct search."""
    graph = build_chain_graph(board)
    all_edges = [e for e in graph.edges() if not graph.is_loop(e)]
    want = matching_size(board)
    used: set[Vertex] = set()
    chosen: list[EdgeId] = []

    def extend(start: int) -> Iterator[ChainMatching]:
        if len(chosen) == want:
            yield ChainMatching(graph, tuple(chosen))
            return
        if want - len(chosen) > len(all_edges) - start:
            return
        for idx in range(start, len(all_edges)):
            e = all_edges[idx]
            u, v = graph.endpoints(e)
            if u in used or v in used:
                continue
            used.update((u, v))
            chosen.append(e)
            yield from extend(idx + 1)
            chosen.pop()
            used.difference_update((u, v))

    yield from extend(0)


__all__ = [
    "ChainGraph",
    "ChainMatching",
    "build_chain_graph",
    "matching_size",
    "matching_kind",
    "matching_problems",
    "validate_matching",
    "to_matching",
    "from_matching",
    "enumerate_matchings",
]
