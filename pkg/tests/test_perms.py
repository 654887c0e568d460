from __future__ import annotations

import itertools

import pytest

from chainedboards.boards import Square, circular, linear, max_rooks
from chainedboards.counting import count_max_circular, count_max_linear
from chainedboards.errors import ParseError, ValidationError
from chainedboards.perms import (
    OneLine,
    from_one_line,
    matrices_to_placement,
    one_line_problems,
    one_line_text,
    parse_one_line,
    placement_to_matrices,
    to_one_line,
    validate_chained_permutation,
    validate_one_line,
)
from chainedboards.placements import RookPlacement, enumerate_placements

from tests.worked_examples import ONE_LINE_54, ONE_LINE_46, P22_CIRCULAR


def max_placements(board):
    return enumerate_placements(board, max_rooks(board))


def test_placement_matrix_round_trip_exhaustive():
    for board in (linear(2, 2), circular(2, 2), linear(3, 3), circular(3, 3), circular(2, 1)):
        for p in max_placements(board):
            cp = placement_to_matrices(p)
            assert validate_chained_permutation(cp)
            assert matrices_to_placement(cp) == p


def test_placement_to_matrices_rejects_non_maximum():
    p = RookPlacement(linear(2, 2), (Square(1, 1, 1),))
    with pytest.raises(ValidationError, match="maximum"):
        placement_to_matrices(p)


def test_single_rook_matrix_example():
    p = RookPlacement(linear(1, 2), (Square(1, 1, 1),))
    cp = placement_to_matrices(p)
    assert cp.matrices == (((1,),), ((0,),))


def test_one_line_round_trip_exhaustive():
    for board in (linear(2, 3), circular(2, 3), circular(3, 2), linear(3, 2)):
        for p in max_placements(board):
            cp = placement_to_matrices(p)
            o = to_one_line(cp)
            assert validate_one_line(o)
            assert from_one_line(o) == cp


def test_reference_one_line_strings_round_trip():
    for text, shape_board in ((ONE_LINE_46, circular(4, 6)), (ONE_LINE_54, linear(5, 4))):
        o = parse_one_line(text)
        assert o.board == shape_board
        assert validate_one_line(o)
        cp = from_one_line(o)
        assert validate_chained_permutation(cp)
        assert one_line_text(to_one_line(cp)) == text


def test_one_line_46_matrices_content():
    cp = from_one_line(parse_one_line(ONE_LINE_46))
    # block 2 is "3104": ones at (1,3), (2,1), (4,4)
    assert cp.matrices[1] == (
        (0, 0, 1, 0),
        (1, 0, 0, 0),
        (0, 0, 0, 0),
        (0, 0, 0, 1),
    )
    assert matrices_to_placement(cp).composition() == (1, 3, 1, 3, 1, 3)


def test_p22_circular_one_line_set():
    board = circular(2, 2)
    got = {one_line_text(to_one_line(placement_to_matrices(p))) for p in max_placements(board)}
    assert got == set(P22_CIRCULAR)


def test_one_line_examples_from_p22():
    o = parse_one_line("10-02-")
    assert validate_one_line(o)
    bad = parse_one_line("12-12-")
    assert not validate_one_line(bad)
    problems = one_line_problems(bad)
    assert any("condition (3)" in p for p in problems)
    assert any("condition (4)" in p for p in problems)

    identity_board_one = from_one_line(parse_one_line("12-00-"))
    assert identity_board_one.matrices == (((1, 0), (0, 1)), ((0, 0), (0, 0)))


def test_one_line_wrong_count_rejected():
    o = OneLine(linear(3, 3), ((3, 0, 0), (0, 0, 0), (0, 0, 3)))
    assert not validate_one_line(o)
    assert any("condition (3)" in p for p in one_line_problems(o))
    with pytest.raises(ValidationError):
        from_one_line(o)


def test_round_trips_full_grid():
    # all three forms agree on every maximum placement for n <= 3, k <= 4
    from chainedboards.matchings import from_matching, to_matching, validate_matching

    for ctor in (linear, circular):
        for n in range(1, 4):
            for k in range(1, 5):
                for p in max_placements(ctor(n, k)):
                    cp = placement_to_matrices(p)
                    assert matrices_to_placement(cp) == p
                    o = to_one_line(cp)
                    assert validate_one_line(o) and from_one_line(o) == cp
                    m = to_matching(cp)
                    assert validate_matching(m) and from_matching(m) == cp


def test_one_line_validator_completeness_exhaustive():
    # every value vector passing the validator is the image of a maximum placement
    boards = [ctor(n, k) for ctor in (linear, circular) for n in (1, 2) for k in (1, 2, 3)]
    for board in boards:
        n, k = board.n, board.k
        images = set()
        for p in max_placements(board):
            images.add(to_one_line(placement_to_matrices(p)).blocks)
        accepted = set()
        for flat in itertools.product(range(n + 1), repeat=n * k):
            blocks = tuple(tuple(flat[b * n : (b + 1) * n]) for b in range(k))
            if validate_one_line(OneLine(board, blocks)):
                accepted.add(blocks)
        assert accepted == images, board


def test_one_line_text_linear_vs_circular_dash():
    lin = to_one_line(placement_to_matrices(next(max_placements(linear(2, 1)))))
    assert one_line_text(lin) == "12"
    circ = parse_one_line("12-")
    assert circ.board == circular(2, 1)


def test_one_line_comma_format_for_wide_boards():
    board = linear(10, 1)
    blocks = (tuple(range(1, 11)),)
    o = OneLine(board, blocks)
    text = one_line_text(o)
    assert text == "1,2,3,4,5,6,7,8,9,10"
    assert parse_one_line(text) == o


def test_parse_one_line_errors():
    with pytest.raises(ParseError):
        parse_one_line("")
    with pytest.raises(ParseError):
        parse_one_line("12--00")
    with pytest.raises(ParseError):
        parse_one_line("1a-00")
    with pytest.raises(ParseError):
        parse_one_line("12-000")


def test_cardinality_p_n1_is_factorial():
    import math

    for n in range(1, 7):
        board = linear(n, 1)
        assert sum(1 for _ in max_placements(board)) == math.factorial(n)
        assert count_max_linear(n, 1) == math.factorial(n)


def test_cardinality_p_n4_circular_is_factorial_2n():
    import math

    for n in range(1, 4):
        board = circular(n, 4)
        assert sum(1 for _ in max_placements(board)) == math.factorial(2 * n)
        assert count_max_circular(n, 4) == math.factorial(2 * n)
