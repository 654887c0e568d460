"""Exact counts of non-attacking rook placements on chained boards.

Everything here is integer arithmetic on Python ints (arbitrary precision);
no floating point.  The quarter-turn product is accumulated as an exact
rational and asserted integral.
"""

from __future__ import annotations

import math
from fractions import Fraction

from .boards import BoardSpec, admissible_compositions
from .errors import InputDomainError


def falling_factorial(n: int, m: int) -> int:
    """(n)_m = n (n-1) ... (n-m+1); 1 when m = 0, 0 when m > n."""
    if n < 0 or m < 0:
        raise InputDomainError("falling_factorial needs nonnegative arguments")
    out = 1
    for i in range(m):
        out *= n - i
        if out == 0:
            return 0
    return out


def count_placements_formula(board: BoardSpec, m: int) -> int:
    """Number of ways to place m non-attacking rooks on ``board``.

    Sums, over the admissible compositions (a_1,...,a_k) of m, the product
    of C(n - a_{i-1}, a_i) * (n)_{a_i}, with a_0 = 0 (linear) or a_k
    (circular).
    """
    n = board.n
    total = 0
    for comp in admissible_compositions(board, m):
        prev = comp[-1] if board.circular else 0
        term = 1
        for a in comp:
            term *= math.comb(n - prev, a) * falling_factorial(n, a)
            prev = a
        total += term
    return total


def count_max_linear(n: int, k: int) -> int:
    """Number of maximum rook placements on the linear board.

    k odd: (n!)^((k+1)/2).  k even: (n!)^(k/2) times the sum over weakly
    increasing chains 0 <= j_1 <= ... <= j_{k/2} <= n of the product of
    C(n - j_{l-1}, n - j_l) * C(n, j_l), with j_0 = 0.
    """
    if n < 1 or k < 1:
        raise InputDomainError("n and k must be >= 1")
    if k % 2 == 1:
        return math.factorial(n) ** ((k + 1) // 2)
    total = 0
    for chain in _weakly_increasing(n, k // 2):
        prev = 0
        term = 1
        for j in chain:
            term *= math.comb(n - prev, n - j) * math.comb(n, j)
            prev = j
        total += term
    return math.factorial(n) ** (k // 2) * total


def count_max_linear_multinomial(n: int, k: int) -> int:
    """The k-even linear count rewritten with multinomial coefficients."""
    if n < 1 or k < 1 or k % 2 == 1:
        raise InputDomainError("defined for n >= 1 and even k >= 2")
    total = 0
    for chain in _weakly_increasing(n, k // 2):
        gaps = [n - chain[-1]]
        gaps.extend(chain[i + 1] - chain[i] for i in reversed(range(len(chain) - 1)))
        gaps.append(chain[0])
        term = _multinomial(n, gaps)
        for j in chain:
            term *= math.comb(n, j)
        total += term
    return math.factorial(n) ** (k // 2) * total


def count_max_circular(n: int, k: int) -> int:
    """Number of maximum rook placements on the circular board.

    k even: (n!)^(k/2) * sum_j C(n,j)^(k/2).  k odd, n even: ((n)_{n/2})^k.
    k odd, n odd: k * ceil(n/2) * ((n)_{ceil(n/2)})^floor(k/2)
    * ((n)_{floor(n/2)})^ceil(k/2).
    """
    if n < 1 or k < 1:
        raise InputDomainError("n and k must be >= 1")
    if k % 2 == 0:
        s = sum(math.comb(n, j) ** (k // 2) for j in range(n + 1))
        return math.factorial(n) ** (k // 2) * s
    if n % 2 == 0:
        return falling_factorial(n, n // 2) ** k
    hi = (n + 1) // 2
    lo = n // 2
    return (
        k
        * hi
        * falling_factorial(n, hi) ** (k // 2)
        * falling_factorial(n, lo) ** ((k + 1) // 2)
    )


def count_max(board: BoardSpec) -> int:
    """Closed-form count of maximum placements for either shape."""
    if board.circular:
        return count_max_circular(board.n, board.k)
    return count_max_linear(board.n, board.k)


def classical_asm_count(n: int) -> int:
    """Number of n x n alternating sign matrices: prod (3k+1)!/(n+k)!."""
    if n < 0:
        raise InputDomainError("n must be >= 0")
    num = 1
    den = 1
    for k in range(n):
        num *= math.factorial(3 * k + 1)
        den *= math.factorial(n + k)
    q, r = divmod(num, den)
    assert r == 0, "ASM product formula must divide exactly"
    return q


def qtasm_count(m: int) -> int:
    """Number of quarter-turn symmetric ASMs of size 4m (= |chained circular
    ASMs on a 2m board with k = 1|)."""
    if m < 1:
        raise InputDomainError("m must be >= 1")
    total = Fraction(classical_asm_count(m) ** 3)
    for i in range(1, m + 1):
        factor = Fraction(3 * i - 1, 3 * i - 2)
        for j in range(i, m + 1):
            factor *= Fraction(m + i + j - 1, 2 * i + j - 1)
        total *= factor
    if total.denominator != 1:
        raise AssertionError(f"quarter-turn product did not cancel: {total}")
    return total.numerator


def _weakly_increasing(n: int, length: int):
    """All weakly increasing integer chains of the given length in 0..n."""
    chain = [0] * length

    def extend(pos: int, lo: int):
        if pos == length:
            yield tuple(chain)
            return
        for j in range(lo, n + 1):
            chain[pos] = j
            yield from extend(pos + 1, j)

    yield from extend(0, 0)


def _multinomial(n: int, parts: list[int]) -> int:
    assert sum(parts) == n
    out = math.factorial(n)
    for p in parts:
        out //= math.factorial(p)
    return out


__all__ = [
    "falling_factorial",
    "count_placements_formula",
    "count_max_linear",
    "count_max_linear_multinomial",
    "count_max_circular",
    "count_max",
    "classical_asm_count",
    "qtasm_count",
]
