"""Chained alternating sign matrices.

A chained ASM is a k-tuple of n x n {-1,0,1} matrices where (1) every row
prefix sum is 0 or 1, (2) the full row-i sum of matrix l-1 plus any
bottom-up partial sum of column i of matrix l is 0 or 1 (matrix 0 is zero
for linear chains, matrix k for circular ones), and (3) the total entry sum
equals the board's maximum rook count.  Chained permutations are exactly
the chained ASMs without -1 entries.

Given the previous matrix's row sum r for a column, condition (2) is
equivalent to: the column's nonzero entries alternate in sign and the
bottommost nonzero is +1 when r = 0 and -1 when r = 1.  The enumerator
leans on that form, which is checkable while filling top-down.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

from .boards import BoardSpec, Composition, Shape, max_rooks
from .errors import InputDomainError, UnsupportedDomainError, ValidationError
from .perms import ChainedPermutation, Matrix, _check_matrix_tuple


@dataclass(frozen=True)
class ChainedASM:
    board: BoardSpec
    matrices: tuple[Matrix, ...]

    def __post_init__(self):
        object.__setattr__(
            self,
            "matrices",
            _check_matrix_tuple(self.board, self.matrices, {-1, 0, 1}, "chained ASM"),
        )

    def total(self) -> int:
        return sum(sum(row) for mat in self.matrices for row in mat)


def _previous(a: ChainedASM, l: int) -> Matrix | None:
    """Matrix l-1 (1-based l); None stands for the zero matrix."""
    if l > 1:
        return a.matrices[l - 2]
    return a.matrices[a.board.k - 1] if a.board.circular else None


def chained_asm_problems(a: ChainedASM) -> list[str]:
    """Diagnostics against the three chained-ASM conditions; empty = valid."""
    n, k = a.board.n, a.board.k
    problems = []
    for l, mat in enumerate(a.matrices, start=1):
        for i in range(n):
            s = 0
            for j in range(n):
                s += mat[i][j]
                if s not in (0, 1):
                    problems.append(
                        f"condition (1): matrix {l} row {i + 1} has prefix sum {s} at column {j + 1}"
                    )
                    break
    for l in range(1, k + 1):
        prev = _previous(a, l)
        cur = a.matrices[l - 1]
        for i in range(n):
            s = sum(prev[i]) if prev is not None else 0
            for m in range(1, n + 1):
                s += cur[n - m][i]
                if s not in (0, 1):
                    problems.append(
                        f"condition (2): chained sum {s} at column {i + 1} of matrix {l},"
                        f" {m} rows up from the bottom"
                    )
                    break
    total = a.total()
    want = max_rooks(a.board)
    if total != want:
        problems.append(f"condition (3): total entry sum is {total}, maximum is {want}")
    return problems


def validate_chained_asm(a: ChainedASM) -> bool:
    return not chained_asm_problems(a)


def asm_sum_composition(a: ChainedASM) -> Composition:
    """Per-matrix entry sums; for a valid chained ASM this is always the
    composition of some maximum rook placement."""
    return tuple(sum(sum(row) for row in mat) for mat in a.matrices)


def permutation_to_asm(cp: ChainedPermutation) -> ChainedASM:
    """Reinterpret a chained permutation over {-1,0,1}."""
    return ChainedASM(cp.board, cp.matrices)


def asm_to_permutation(a: ChainedASM) -> ChainedPermutation:
    if any(x < 0 for mat in a.matrices for row in mat for x in row):
        raise ValidationError("chained ASM has -1 entries; not a chained permutation")
    return ChainedPermutation(a.board, a.matrices)


def enumerate_chained_asm(board: BoardSpec) -> Iterator[ChainedASM]:
    """All chained ASMs on ``board``, exactly once, in lexicographic order of
    the flattened entry sequence (-1 < 0 < 1)."""
    n, k = board.n, board.k
    circ = board.circular
    target = max_rooks(board)

    @lru_cache(maxsize=None)
    def suffix_max(l: int, prev: int, a1: int) -> int:
        """Max total of matrix sums l..k-1 given matrix l-1 sums to prev."""
        if l >= k:
            return 0
        hi = n - prev
        if circ and l == k - 1:
            hi = min(hi, n - a1)
        best = 0
        for a in range(0, max(hi, 0) + 1):
            best = max(best, a + suffix_max(l + 1, a, a1))
        return best

    mats = [[[0] * n for _ in range(n)] for _ in range(k)]
    row_sums = [[0] * n for _ in range(k)]
    col_sign = [[0] * n for _ in range(k)]  # last nonzero sign seen, top-down
    col_req = [None] * n  # circular: row sum matrix k-1 must have, per column of matrix 0
    mat_sum = [0] * k

    def required_sign(l: int, j: int) -> int | None:
        """Sign the bottommost nonzero of column j of matrix l must carry."""
        if l == 0:
            return None if circ else 1
        return 1 if row_sums[l - 1][j] == 0 else -1

    def fill(l: int, i: int, j: int, prefix: int, s_done: int, done: int):
        last_row = i == n - 1
        for v in (-1, 0, 1):
            np = prefix + v
            if np not in (0, 1):
                continue
            if v != 0 and col_sign[l][j] == v:
                continue  # column signs must alternate
            if last_row:
                final = v if v != 0 else col_sign[l][j]
                if final != 0:
                    req = required_sign(l, j)
                    if req is not None and final != req:
                        continue
                    if req is None and k == 1 and j < n - 1:
                        # circular k=1 chains the matrix to itself, and row j
                        # is already complete here
                        if row_sums[0][j] != (0 if final == 1 else 1):
                            continue
            mats[l][i][j] = v
            old = col_sign[l][j]
            if v != 0:
                col_sign[l][j] = v
            if j == n - 1:
                yield from finish_row(l, i, np, s_done, done)
            else:
                yield from fill(l, i, j + 1, np, s_done, done)
            col_sign[l][j] = old

    def finish_row(l: int, i: int, rsum: int, s_done: int, done: int):
        s2 = s_done + rsum
        cap = n
        if l >= 1:
            cap = min(cap, n - mat_sum[l - 1])
        if circ and l == k - 1 and k >= 2:
            cap = min(cap, n - mat_sum[0])
            req = col_req[i]
            if req is not None and rsum != req:
                return
        if s2 > cap:
            return
        row_sums[l][i] = rsum
        if i == n - 1:
            yield from finish_matrix(l, s2, done)
            return
        a1 = mat_sum[0] if (circ and l >= 1) else 0
        upper = done + s2 + min(n - 1 - i, cap - s2) + suffix_max(l + 1, s2, a1)
        if upper < target or done + s2 > target:
            return
        yield from fill(l, i + 1, 0, 0, s2, done)

    def finish_matrix(l: int, s: int, done: int):
        mat_sum[l] = s
        done += s
        if done > target:
            return
        if circ and l == 0:
            for j in range(n):
                sign = col_sign[0][j]
                col_req[j] = None if sign == 0 else (0 if sign == 1 else 1)
        if l == k - 1:
            if circ:
                for i in range(n):
                    req = col_req[i]
                    if req is not None and row_sums[k - 1][i] != req:
                        return
            if done == target:
                yield ChainedASM(board, tuple(tuple(map(tuple, m)) for m in mats))
            return
        a1 = mat_sum[0] if circ else 0
        if done + suffix_max(l + 1, s, a1) < target:
            return
        yield from fill(l + 1, 0, 0, 0, 0, done)

    yield from fill(0, 0, 0, 0, 0, 0)


def count_chained_asm(board: BoardSpec) -> int:
    return sum(1 for _ in enumerate_chained_asm(board))


# --- plain ASMs and the special-case bijections ---------------------------


@dataclass(frozen=True)
class PlainASM:
    size: int
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if self.size < 1:
            raise InputDomainError("size must be >= 1")
        if len(self.rows) != self.size or any(len(r) != self.size for r in self.rows):
            raise InputDomainError(f"matrix must be {self.size}x{self.size}")
        fixed = tuple(tuple(int(x) for x in r) for r in self.rows)
        if any(x not in (-1, 0, 1) for r in fixed for x in r):
            raise InputDomainError("entries must be in {-1, 0, 1}")
        object.__setattr__(self, "rows", fixed)


def plain_asm_problems(p: PlainASM) -> list[str]:
    """Rows and columns sum to 1 with partial sums in {0,1} from either end."""
    problems = []
    size = p.size
    for i in range(size):
        s = 0
        for j in range(size):
            s += p.rows[i][j]
            if s not in (0, 1):
                problems.append(f"row {i + 1} has partial sum {s}")
                break
        if s != 1:
            problems.append(f"row {i + 1} sums to {s}, not 1")
    for j in range(size):
        s = 0
        for i in range(size):
            s += p.rows[i][j]
            if s not in (0, 1):
                problems.append(f"column {j + 1} has partial sum {s}")
                break
        if s != 1:
            problems.append(f"column {j + 1} sums to {s}, not 1")
    return problems


def validate_plain_asm(p: PlainASM) -> bool:
    return not plain_asm_problems(p)


def rotate_cw(rows: Matrix) -> Matrix:
    """Quarter turn clockwise: entry (i, j) moves to (j, n+1-i)."""
    n = len(rows)
    return tuple(tuple(rows[n - 1 - q][p] for q in range(n)) for p in range(n))


def rotate_ccw(rows: Matrix) -> Matrix:
    n = len(rows)
    return tuple(tuple(rows[q][n - 1 - p] for q in range(n)) for p in range(n))


def rotate_half(rows: Matrix) -> Matrix:
    n = len(rows)
    return tuple(tuple(rows[n - 1 - p][n - 1 - q] for q in range(n)) for p in range(n))


def split_linear_odd(a: ChainedASM) -> tuple[PlainASM, ...]:
    """For linear odd k, the odd-indexed matrices as plain ASMs.

    The even-indexed matrices of any valid element are all zero, so the
    chain carries exactly (k+1)/2 independent plain ASMs.
    """
    if a.board.circular or a.board.k % 2 == 0:
        raise UnsupportedDomainError("defined for linear boards with odd k")
    for l in range(2, a.board.k + 1, 2):
        if any(x != 0 for row in a.matrices[l - 1] for x in row):
            raise ValidationError(f"even-indexed matrix {l} is not zero; input is not valid")
    out = []
    for l in range(1, a.board.k + 1, 2):
        p = PlainASM(a.board.n, a.matrices[l - 1])
        if not validate_plain_asm(p):
            raise ValidationError(f"matrix {l} is not an alternating sign matrix")
        out.append(p)
    return tuple(out)


def join_linear_odd(parts: tuple[PlainASM, ...], k: int) -> ChainedASM:
    """Inverse of split_linear_odd: interleave zero matrices."""
    if k % 2 == 0 or len(parts) != (k + 1) // 2:
        raise InputDomainError(f"need (k+1)/2 matrices for odd k, got {len(parts)}")
    n = parts[0].size
    zero = tuple((0,) * n for _ in range(n))
    matrices = []
    for idx in range(k):
        matrices.append(parts[idx // 2].rows if idx % 2 == 0 else zero)
    return ChainedASM(BoardSpec(Shape.LINEAR, n, k), tuple(matrices))


def _assemble_quadrants(q1: Matrix, q2: Matrix, q3: Matrix, q4: Matrix) -> PlainASM:
    """2n x 2n matrix: q1 as-is (top left), q2 rotated cw (top right), q3
    rotated a half turn (bottom right), q4 rotated ccw (bottom left)."""
    n = len(q1)
    tr = rotate_cw(q2)
    br = rotate_half(q3)
    bl = rotate_ccw(q4)
    rows = []
    for i in range(n):
        rows.append(tuple(q1[i]) + tuple(tr[i]))
    for i in range(n):
        rows.append(tuple(bl[i]) + tuple(br[i]))
    out = PlainASM(2 * n, tuple(rows))
    problems = plain_asm_problems(out)
    if problems:
        raise ValidationError("assembled matrix is not an ASM", problems)
    return out


def concat_circular_k4(a: ChainedASM) -> PlainASM:
    """Assemble a circular k=4 chained ASM into one 2n x 2n ASM."""
    if not a.board.circular or a.board.k != 4:
        raise UnsupportedDomainError("defined for circular boards with k = 4")
    return _assemble_quadrants(*a.matrices)


def split_circular_k4(p: PlainASM) -> ChainedASM:
    """Inverse of concat_circular_k4."""
    if p.size % 2 != 0:
        raise InputDomainError("matrix size must be even")
    n = p.size // 2
    q1 = tuple(row[:n] for row in p.rows[:n])
    tr = tuple(row[n:] for row in p.rows[:n])
    br = tuple(row[n:] for row in p.rows[n:])
    bl = tuple(row[:n] for row in p.rows[n:])
    a = ChainedASM(
        BoardSpec(Shape.CIRCULAR, n, 4),
        (q1, rotate_ccw(tr), rotate_half(br), rotate_cw(bl)),
    )
    problems = chained_asm_problems(a)
    if problems:
        raise ValidationError("matrix does not split into a chained ASM", problems)
    return a


def fold_qt(a: ChainedASM) -> PlainASM:
    """Circular k=1, n even: four rotated copies make a quarter-turn
    symmetric ASM of size 2n."""
    if not a.board.circular or a.board.k != 1:
        raise UnsupportedDomainError("defined for circular boards with k = 1")
    if a.board.n % 2 != 0:
        raise UnsupportedDomainError("defined for even n")
    m = a.matrices[0]
    return _assemble_quadrants(m, m, m, m)


def unfold_qt(p: PlainASM) -> ChainedASM:
    """Inverse of fold_qt; the input must be quarter-turn symmetric."""
    if p.size % 2 != 0 or (p.size // 2) % 2 != 0:
        raise InputDomainError("size must be a multiple of 4")
    n = p.size // 2
    q1 = tuple(row[:n] for row in p.rows[:n])
    a = ChainedASM(BoardSpec(Shape.CIRCULAR, n, 1), (q1,))
    if fold_qt(a).rows != p.rows:
        raise ValidationError("matrix is not quarter-turn symmetric")
    problems = chained_asm_problems(a)
    if problems:
        raise ValidationError("quadrant is not a valid chained ASM", problems)
    return a


__all__ = [
    "ChainedASM",
    "PlainASM",
    "chained_asm_problems",
    "validate_chained_asm",
    "asm_sum_composition",
    "permutation_to_asm",
    "asm_to_permutation",
    "enumerate_chained_asm",
    "count_chained_asm",
    "plain_asm_problems",
    "validate_plain_asm",
    "rotate_cw",
    "rotate_ccw",
    "rotate_half",
    "split_linear_odd",
    "join_linear_odd",
    "concat_circular_k4",
    "split_circular_k4",
    "fold_qt",
    "unfold_qt",
]
