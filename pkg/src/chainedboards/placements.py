"""Rook placements on chained boards: validation and brute-force enumeration.

The enumerator is an independent oracle for the counting formulas: it walks
cells in (board, row, col) order and backtracks, so placements stream out in
lexicographic order of their sorted square lists.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from .boards import (
    BoardSpec,
    Composition,
    Square,
    attacks,
    check_square,
    is_admissible_composition,
    self_chained,
)
from .errors import InputDomainError


@dataclass(frozen=True)
class RookPlacement:
    """A set of occupied squares on a chained board.

    Squares are stored sorted; construction checks coordinate ranges only,
    use :func:`validate_placement` for the non-attacking property.
    """

    board: BoardSpec
    squares: tuple[Square, ...]

    def __post_init__(self):
        normalized = tuple(sorted(set(Square(*s) for s in self.squares)))
        for s in normalized:
            check_square(self.board, s)
        object.__setattr__(self, "squares", normalized)

    @property
    def m(self) -> int:
        return len(self.squares)

    def composition(self) -> Composition:
        counts = [0] * self.board.k
        for s in self.squares:
            counts[s.board - 1] += 1
        return tuple(counts)


def validate_placement(p: RookPlacement) -> bool:
    """True iff no pair of rooks attacks and no rook self-attacks."""
    squares = p.squares
    for s in squares:
        if self_chained(p.board, s):
            return False
    for i, s in enumerate(squares):
        for t in squares[i + 1 :]:
            if attacks(p.board, s, t):
                return False
    return True


def canonical_placement(board: BoardSpec, comp: Composition) -> RookPlacement:
    """A non-attacking placement witnessing an admissible composition.

    Board i gets rooks at (row l, col a_{i-1} + l) for l = 1..a_i; on a
    circular board the last board's rows are shifted by a_1 so they clear
    the columns occupied on board 1 (for k = 1 the shift applies to the
    single board, whose columns start at 1).
    """
    if not is_admissible_composition(board, tuple(comp)):
        raise InputDomainError(f"composition {tuple(comp)} is not admissible on {board}")
    squares = []
    prev = 0
    for i, a in enumerate(comp, start=1):
        row_shift = comp[0] if board.circular and i == board.k else 0
        for l in range(1, a + 1):
            squares.append(Square(i, row_shift + l, prev + l))
        prev = a
    return RookPlacement(board, tuple(squares))


def enumerate_placements(board: BoardSpec, m: int) -> Iterator[RookPlacement]:
    """All valid m-rook placements, each exactly once, in lexicographic order."""
    yield from _search(board, m, count_only=False)


def count_placements_brute(board: BoardSpec, m: int) -> int:
    """Length of the enumerate_placements stream, without materializing it."""
    total = 0
    for _ in _search(board, m, count_only=True):
        total += 1
    return total


def _search(board: BoardSpec, m: int, count_only: bool) -> Iterator[RookPlacement | None]:
    if not (0 <= m <= board.n * board.k):
        raise InputDomainError(f"m must be in 0..n*k, got {m}")
    n, k = board.n, board.k
    circ = board.circular
    suffix_bound = _suffix_bound_table(board)

    rows = [set() for _ in range(k + 1)]  # rows occupied per board, 1-based
    cols = [set() for _ in range(k + 1)]
    chosen: list[Square] = []

    def can_place(b: int, r: int, c: int) -> bool:
        if r in rows[b] or c in cols[b]:
            return False
        if b > 1 and c in rows[b - 1]:
            return False
        if circ:
            if b == 1 and c in rows[k]:  # only bites when k == 1
                return False
            if b == k and r in cols[1]:
                return False
            if k == 1 and r == c:
                return False
        return True

    def capacity(b: int, r: int) -> int:
        """Upper bound on rooks still placeable from board b, row r on."""
        cur = len(rows[b])
        room = n - r + 1
        prev_count = len(rows[b - 1]) if b > 1 else 0
        room = min(room, n - prev_count - cur)
        if circ and b == k:
            room = min(room, n - len(cols[1]) - cur)
        room = max(room, 0)
        # bounding room and the suffix independently keeps this an over-estimate
        later = suffix_bound(b + 1, cur, len(rows[1]) if circ else 0)
        return room + later

    def walk(b: int, r: int, placed: int) -> Iterator[RookPlacement | None]:
        if placed == m:
            yield None if count_only else RookPlacement(board, tuple(chosen))
            return
        if b > k or placed + capacity(b, r) < m:
            return
        # advance row by row; each row holds at most one rook
        if r > n:
            yield from walk(b + 1, 1, placed)
            return
        for c in range(1, n + 1):
            if can_place(b, r, c):
                rows[b].add(r)
                cols[b].add(c)
                chosen.append(Square(b, r, c))
                yield from walk(b, r + 1, placed + 1)
                chosen.pop()
                cols[b].discard(c)
                rows[b].discard(r)
        yield from walk(b, r + 1, placed)

    yield from walk(1, 1, 0)


def _suffix_bound_table(board: BoardSpec):
    """Max rooks on boards b..k given the previous board's final count.

    The bound uses only the adjacency cap a_{i-1} + a_i <= n; the circular
    wrap cap against a_1 is applied when a_1 is known.
    """
    n, k = board.n, board.k

    @lru_cache(maxsize=None)
    def bound(b: int, prev: int, a1: int) -> int:
        if b > k:
            return 0
        best = 0
        hi = n - prev
        if board.circular and b == k:
            hi = min(hi, n - a1)
        for a in range(0, max(hi, 0) + 1):
            best = max(best, a + bound(b + 1, a, a1))
        return best

    def lookup(b: int, prev: int, a1: int) -> int:
        return bound(b, min(prev, n), a1)

    return lookup


__all__ = [
    "RookPlacement",
    "validate_placement",
    "canonical_placement",
    "enumerate_placements",
    "count_placements_brute",
]
