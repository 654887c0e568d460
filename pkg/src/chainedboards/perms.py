"""Chained permutations: matrix form and one-line notation.

A chained permutation is the matrix form of a maximum rook placement: a
k-tuple of n x n 0/1 matrices where every row and column holds at most one
1, a 1 in row i of matrix l-1 excludes 1s from column i of matrix l (matrix
0 is the zero matrix for linear chains and matrix k for circular ones), and
the total number of 1s is the board's maximum rook count.

One-line notation records, per row of each matrix, the column of its 1 (0
for an empty row).  Blocks are joined by dashes and written with a trailing
dash in the circular case, e.g. ``12-00-``; for n >= 10 the entries within
a block are comma-separated.
"""

from __future__ import annotations

from dataclasses import dataclass

from .boards import BoardSpec, Shape, Square, max_rooks
from .errors import InputDomainError, ParseError, ValidationError
from .placements import RookPlacement, validate_placement

Matrix = tuple[tuple[int, ...], ...]


def _check_matrix_tuple(board: BoardSpec, matrices, allowed: set[int], what: str) -> Matrix:
    if len(matrices) != board.k:
        raise InputDomainError(f"expected {board.k} matrices, got {len(matrices)}")
    fixed = []
    for mat in matrices:
        if len(mat) != board.n or any(len(row) != board.n for row in mat):
            raise InputDomainError(f"each matrix must be {board.n}x{board.n}")
        for row in mat:
            for x in row:
                if x not in allowed:
                    raise InputDomainError(f"{what} entries must be in {sorted(allowed)}, got {x}")
        fixed.append(tuple(tuple(int(x) for x in row) for row in mat))
    return tuple(fixed)


@dataclass(frozen=True)
class ChainedPermutation:
    board: BoardSpec
    matrices: tuple[Matrix, ...]

    def __post_init__(self):
        object.__setattr__(
            self,
            "matrices",
            _check_matrix_tuple(self.board, self.matrices, {0, 1}, "permutation"),
        )


def chained_permutation_problems(cp: ChainedPermutation) -> list[str]:
    """Diagnostics for the chained permutation matrix conditions; empty = valid."""
    n, k = cp.board.n, cp.board.k
    problems = []
    for l, mat in enumerate(cp.matrices, start=1):
        for i in range(n):
            if sum(mat[i]) > 1:
                problems.append(f"matrix {l} row {i + 1} holds more than one 1")
            if sum(row[i] for row in mat) > 1:
                problems.append(f"matrix {l} column {i + 1} holds more than one 1")
    for l in range(1, k + 1):
        prev = _previous_matrix(cp.board, cp.matrices, l)
        cur = cp.matrices[l - 1]
        if prev is None:
            continue
        for i in range(n):
            if sum(prev[i]) + sum(row[i] for row in cur) > 1:
                problems.append(
                    f"chaining violated at index {i + 1} between matrices {l - 1 or k} and {l}"
                )
    total = sum(sum(row) for mat in cp.matrices for row in mat)
    want = max_rooks(cp.board)
    if total != want:
        problems.append(f"total number of 1s is {total}, maximum is {want}")
    return problems


def validate_chained_permutation(cp: ChainedPermutation) -> bool:
    return not chained_permutation_problems(cp)


def _previous_matrix(board: BoardSpec, matrices, l: int):
    if l > 1:
        return matrices[l - 2]
    return matrices[board.k - 1] if board.shape is Shape.CIRCULAR else None


def placement_to_matrices(p: RookPlacement) -> ChainedPermutation:
    """Matrix form of a maximum placement: a 1 per rook."""
    want = max_rooks(p.board)
    if p.m != want:
        raise ValidationError(
            f"placement has {p.m} rooks; a chained permutation needs the maximum {want}"
        )
    if not validate_placement(p):
        raise ValidationError("placement has attacking rooks")
    n = p.board.n
    grids = [[[0] * n for _ in range(n)] for _ in range(p.board.k)]
    for s in p.squares:
        grids[s.board - 1][s.row - 1][s.col - 1] = 1
    return ChainedPermutation(p.board, tuple(tuple(map(tuple, g)) for g in grids))


def matrices_to_placement(cp: ChainedPermutation) -> RookPlacement:
    squares = [
        Square(l, i + 1, j + 1)
        for l, mat in enumerate(cp.matrices, start=1)
        for i, row in enumerate(mat)
        for j, x in enumerate(row)
        if x
    ]
    return RookPlacement(cp.board, tuple(squares))


@dataclass(frozen=True)
class OneLine:
    """Per-row column indices of a chained permutation, 0 for empty rows."""

    board: BoardSpec
    blocks: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.blocks) != self.board.k:
            raise InputDomainError(f"expected {self.board.k} blocks, got {len(self.blocks)}")
        fixed = []
        for block in self.blocks:
            if len(block) != self.board.n:
                raise InputDomainError(f"each block must have {self.board.n} entries")
            fixed.append(tuple(int(x) for x in block))
        object.__setattr__(self, "blocks", tuple(fixed))


def one_line_problems(o: OneLine) -> list[str]:
    """Check the four one-line conditions literally; empty list = valid."""
    n, k = o.board.n, o.board.k
    problems = []
    for l, block in enumerate(o.blocks, start=1):
        for i, v in enumerate(block, start=1):
            if not (0 <= v <= n):
                problems.append(f"condition (1): entry {v} at block {l} position {i} not in 0..{n}")
        nonzero = [v for v in block if v != 0]
        if len(nonzero) != len(set(nonzero)):
            problems.append(f"condition (2): repeated nonzero value in block {l}")
    total = sum(1 for block in o.blocks for v in block if v)
    want = max_rooks(o.board)
    if total != want:
        problems.append(f"condition (3): {total} nonzero entries, expected {want}")
    for l in range(1, k + 1):
        if l == 1:
            if o.board.shape is not Shape.CIRCULAR:
                continue
            prev = o.blocks[k - 1]
        else:
            prev = o.blocks[l - 2]
        banned = {i + 1 for i, v in enumerate(prev) if v != 0}
        for v in o.blocks[l - 1]:
            if v in banned:
                problems.append(
                    f"condition (4): block {l} uses value {v} but the previous block's row {v} is occupied"
                )
    return problems


def validate_one_line(o: OneLine) -> bool:
    return not one_line_problems(o)


def to_one_line(cp: ChainedPermutation) -> OneLine:
    blocks = []
    for mat in cp.matrices:
        block = []
        for row in mat:
            block.append(row.index(1) + 1 if 1 in row else 0)
        blocks.append(tuple(block))
    return OneLine(cp.board, tuple(blocks))


def from_one_line(o: OneLine) -> ChainedPermutation:
    problems = one_line_problems(o)
    if problems:
        raise ValidationError("invalid one-line notation", problems)
    n = o.board.n
    matrices = []
    for block in o.blocks:
        mat = [[0] * n for _ in range(n)]
        for i, v in enumerate(block):
            if v:
                mat[i][v - 1] = 1
        matrices.append(tuple(map(tuple, mat)))
    return ChainedPermutation(o.board, tuple(matrices))


def one_line_text(o: OneLine) -> str:
    """Wire format: dash-joined blocks, trailing dash when circular."""
    if o.board.n < 10:
        parts = ["".join(str(v) for v in block) for block in o.blocks]
    else:
        parts = [",".join(str(v) for v in block) for block in o.blocks]
    text = "-".join(parts)
    if o.board.shape is Shape.CIRCULAR:
        text += "-"
    return text


def parse_one_line(text: str) -> OneLine:
    """Parse the wire format back; shape, n, and k are inferred."""
    s = text.strip()
    if not s:
        raise ParseError("empty one-line string")
    circular = s.endswith("-")
    if circular:
        s = s[:-1]
    pieces = s.split("-")
    if any(not piece for piece in pieces):
        raise ParseError(f"empty block in one-line string {text!r}")
    blocks = []
    for piece in pieces:
        if "," in piece:
            try:
                blocks.append(tuple(int(x) for x in piece.split(",")))
            except ValueError as exc:
                raise ParseError(f"bad block {piece!r}: {exc}") from None
        else:
            if not piece.isdigit():
                raise ParseError(f"bad block {piece!r}: expected digits")
            blocks.append(tuple(int(ch) for ch in piece))
    n = len(blocks[0])
    if any(len(b) != n for b in blocks):
        raise ParseError("blocks have unequal lengths")
    board = BoardSpec(Shape.CIRCULAR if circular else Shape.LINEAR, n, len(blocks))
    return OneLine(board, tuple(blocks))


__all__ = [
    "ChainedPermutation",
    "OneLine",
    "chained_permutation_problems",
    "validate_chained_permutation",
    "placement_to_matrices",
    "matrices_to_placement",
    "to_one_line",
    "from_one_line",
    "one_line_problems",
    "validate_one_line",
    "one_line_text",
    "parse_one_line",
]
