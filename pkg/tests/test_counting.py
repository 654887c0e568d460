from __future__ import annotations

import math

import pytest

from chainedboards.boards import circular, linear, max_rooks
from chainedboards.counting import (
    classical_asm_count,
    count_max_circular,
    count_max_linear,
    count_max_linear_multinomial,
    count_placements_formula,
    falling_factorial,
    qtasm_count,
)
from chainedboards.errors import InputDomainError
from chainedboards.placements import count_placements_brute


def test_falling_factorial():
    assert falling_factorial(5, 2) == 20
    assert falling_factorial(7, 0) == 1
    assert falling_factorial(3, 4) == 0
    assert falling_factorial(0, 0) == 1
    with pytest.raises(InputDomainError):
        falling_factorial(-1, 2)


def test_count_placements_formula_examples():
    assert count_placements_formula(circular(2, 2), 2) == 8
    assert count_placements_formula(linear(2, 2), 2) == 12
    assert count_placements_formula(circular(2, 2), 1) == 8
    # above the maximum there are no placements
    assert count_placements_formula(circular(2, 2), 3) == 0


def test_formula_matches_brute_force_small():
    for ctor in (linear, circular):
        for n in range(1, 4):
            for k in range(1, 5):
                board = ctor(n, k)
                for m in range(max_rooks(board) + 1):
                    assert count_placements_formula(board, m) == count_placements_brute(
                        board, m
                    ), (board, m)


def test_count_max_linear_examples():
    assert count_max_linear(5, 3) == 14400
    assert count_max_linear(1, 2) == 2
    assert count_max_linear(2, 2) == 12


def test_count_max_circular_examples():
    assert count_max_circular(2, 2) == 8
    assert count_max_circular(3, 3) == 324
    assert count_max_circular(1, 3) == 3


def test_closed_forms_match_formula_at_max():
    for n in range(1, 7):
        for k in range(1, 9):
            lin = linear(n, k)
            circ = circular(n, k)
            assert count_max_linear(n, k) == count_placements_formula(lin, max_rooks(lin))
            assert count_max_circular(n, k) == count_placements_formula(
                circ, max_rooks(circ)
            )


def test_closed_forms_match_brute_spot_checks():
    assert count_max_linear(5, 3) == count_placements_brute(linear(5, 3), 10)
    assert count_max_circular(2, 2) == count_placements_brute(circular(2, 2), 2)
    assert count_max_circular(3, 3) == count_placements_brute(circular(3, 3), 4)


def test_hypergeometric_reductions():
    # sum_j C(n,j) = 2^n and sum_j C(n,j)^2 = C(2n,n)
    for n in range(1, 21):
        assert count_max_circular(n, 2) == math.factorial(n) * 2**n
        assert count_max_circular(n, 4) == math.factorial(n) ** 2 * math.comb(2 * n, n)


def test_multinomial_rewrite_matches():
    for n in range(1, 6):
        for k in (2, 4, 6):
            assert count_max_linear_multinomial(n, k) == count_max_linear(n, k)
    with pytest.raises(InputDomainError):
        count_max_linear_multinomial(3, 3)


def test_classical_asm_count():
    assert [classical_asm_count(n) for n in range(7)] == [1, 1, 2, 7, 42, 429, 7436]


def test_qtasm_count():
    assert qtasm_count(1) == 2
    assert qtasm_count(2) == 40
    # Table row for k=1 circular continues 3430 (n=5), 6860 (n=6); the even
    # entry is the one the quarter-turn product covers.
    assert qtasm_count(3) == 6860
    with pytest.raises(InputDomainError):
        qtasm_count(0)
