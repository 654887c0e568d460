"""Chained chessboards: geometry, the attack relation, and compositions.

A board is ``k`` copies of an ``n x n`` chessboard chained together so that
row ``j`` of board ``i-1`` attacks column ``j`` of board ``i``.  In the
linear configuration the chain is open (board 0 is empty); in the circular
configuration board 0 is identified with board ``k``, so the chain closes.
Circular ``k = 1`` chains a board to itself (its diagonal squares are
self-attacking) and circular ``k = 2`` applies both chainings between the
two boards.

Every placement of non-attacking rooks induces a composition
``(a_1, ..., a_k)`` of per-board rook counts; a composition arises from some
placement exactly when all adjacent sums ``a_{i-1} + a_i`` are at most ``n``.
All coordinates are 1-based.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Iterator, NamedTuple

from .errors import InputDomainError


class Shape(enum.Enum):
    LINEAR = "linear"
    CIRCULAR = "circular"


@dataclass(frozen=True)
class BoardSpec:
    """Shape plus dimensions: side length ``n``, number of boards ``k``."""

    shape: Shape
    n: int
    k: int

    def __post_init__(self):
        if not isinstance(self.shape, Shape):
            raise InputDomainError(f"shape must be a Shape, got {self.shape!r}")
        if self.n < 1:
            raise InputDomainError(f"board side n must be >= 1, got {self.n}")
        if self.k < 1:
            raise InputDomainError(f"board count k must be >= 1, got {self.k}")

    @property
    def circular(self) -> bool:
        return self.shape is Shape.CIRCULAR

    def max_rooks(self) -> int:
        return max_rooks(self)

    def squares(self) -> Iterator[Square]:
        """All squares in (board, row, col) order."""
        for b in range(1, self.k + 1):
            for r in range(1, self.n + 1):
                for c in range(1, self.n + 1):
                    yield Square(b, r, c)


def linear(n: int, k: int) -> BoardSpec:
    return BoardSpec(Shape.LINEAR, n, k)


def circular(n: int, k: int) -> BoardSpec:
    return BoardSpec(Shape.CIRCULAR, n, k)


class Square(NamedTuple):
    """One cell: board index, row, column, all 1-based."""

    board: int
    row: int
    col: int


def check_square(board: BoardSpec, s: Square) -> None:
    """Raise InputDomainError unless ``s`` is in range for ``board``."""
    if not (1 <= s.board <= board.k and 1 <= s.row <= board.n and 1 <= s.col <= board.n):
        raise InputDomainError(f"square {tuple(s)} out of range for n={board.n}, k={board.k}")


def _chains_into(board: BoardSpec, s: Square, t: Square) -> bool:
    """True if s sits on the board preceding t's board and s.row == t.col.

    A rook in row j of board i-1 attacks column j of board i; circularly,
    board 0 is board k, so for k = 1 a board precedes itself.
    """
    if board.circular:
        follows = t.board == s.board % board.k + 1
    else:
        follows = t.board == s.board + 1
    return follows and s.row == t.col


def self_chained(board: BoardSpec, s: Square) -> bool:
    """True when the chaining relation makes ``s`` attack itself (circular k=1 diagonal)."""
    return _chains_into(board, s, s)


def attacks(board: BoardSpec, s: Square, t: Square) -> bool:
    """Whether two squares attack each other on ``board``.

    Symmetric.  Note attacks(board, s, s) is trivially true (a square shares
    its own row); use :func:`self_chained` to test the circular k=1 diagonal
    self-attack specifically.
    """
    check_square(board, s)
    check_square(board, t)
    if s.board == t.board and (s.row == t.row or s.col == t.col):
        return True
    return _chains_into(board, s, t) or _chains_into(board, t, s)


def max_rooks(board: BoardSpec) -> int:
    """Maximum number of non-attacking rooks the board admits."""
    if board.circular:
        return board.n * board.k // 2
    return board.n * ((board.k + 1) // 2)


Composition = tuple[int, ...]


def is_admissible_composition(board: BoardSpec, parts: Composition) -> bool:
    """Whether ``parts`` arises as the per-board rook counts of some placement."""
    if len(parts) != board.k:
        return False
    if any(not (0 <= a <= board.n) for a in parts):
        return False
    prev = parts[-1] if board.circular else 0
    for a in parts:
        if prev + a > board.n:
            return False
        prev = a
    return True


def admissible_compositions(board: BoardSpec, m: int) -> Iterator[Composition]:
    """All compositions of ``m`` admissible on ``board``, in lexicographic order."""
    if not (0 <= m <= board.n * board.k):
        raise InputDomainError(f"m must be in 0..n*k, got {m}")
    n, k = board.n, board.k
    parts: list[int] = []

    def extend(i: int, prev: int, remaining: int) -> Iterator[Composition]:
        if i == k:
            if remaining == 0:
                yield tuple(parts)
            return
        hi = min(n - prev, remaining)
        if board.circular and i == k - 1 and parts:
            hi = min(hi, n - parts[0])
        # the unplaced boards can hold at most n each
        if remaining > hi + (k - i - 1) * n:
            return
        for a in range(0, hi + 1):
            parts.append(a)
            yield from extend(i + 1, a, remaining - a)
            parts.pop()

    if board.circular and k == 1:
        # a_0 = a_1, so the single part must satisfy 2*a_1 <= n
        if m <= n // 2:
            yield (m,)
        return
    if board.circular:
        # the first part has no left bound yet; a_0 = a_k is enforced at i = k-1
        for a1 in range(0, min(n, m) + 1):
            parts.append(a1)
            yield from extend(1, a1, m - a1)
            parts.pop()
    else:
        yield from extend(0, 0, m)


def maximum_compositions(board: BoardSpec) -> Iterator[Composition]:
    """The compositions of maximum placements, from the closed characterization.

    Linear, k even: (n-j_1, j_1, ..., n-j_{k/2}, j_{k/2}) over weakly
    increasing 0 <= j_1 <= ... <= j_{k/2} <= n.  Linear, k odd: the single
    (n, 0, n, ..., 0, n).  Circular, k even: (n-j, j, ..., n-j, j) for
    0 <= j <= n.  Circular, k odd, n even: all parts n/2.  Circular, both
    odd: the k cyclic shifts of ((n-1)/2, (n+1)/2, ..., (n+1)/2, (n-1)/2).
    Emitted in lexicographic order.
    """
    n, k = board.n, board.k
    out: set[Composition] = set()
    if not board.circular:
        if k % 2 == 1:
            comp = []
            for i in range(k):
                comp.append(n if i % 2 == 0 else 0)
            out.add(tuple(comp))
        else:
            out.update(_linear_even_max(n, k))
    else:
        if k % 2 == 0:
            for j in range(n + 1):
                out.add((n - j, j) * (k // 2))
        elif n % 2 == 0:
            out.add((n // 2,) * k)
        else:
            base = [(n - 1) // 2 if i % 2 == 0 else (n + 1) // 2 for i in range(k)]
            for s in range(k):
                out.add(tuple(base[(i + s) % k] for i in range(k)))
    yield from sorted(out)


def _linear_even_max(n: int, k: int) -> Iterator[Composition]:
    half = k // 2
    js = [0] * half

    def extend(pos: int, lo: int) -> Iterator[Composition]:
        if pos == half:
            comp = []
            for j in js:
                comp.extend((n - j, j))
            yield tuple(comp)
            return
        for j in range(lo, n + 1):
            js[pos] = j
            yield from extend(pos + 1, j)

    yield from extend(0, 0)
