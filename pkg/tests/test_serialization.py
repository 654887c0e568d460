from __future__ import annotations

import json

import pytest

from chainedboards.asm import PlainASM, enumerate_chained_asm, fold_qt, permutation_to_asm
from chainedboards.boards import circular, linear, max_rooks
from chainedboards.errors import ParseError, ValidationError
from chainedboards.ice import to_fpl, to_ice
from chainedboards.matchings import to_matching
from chainedboards.perms import placement_to_matrices, to_one_line
from chainedboards.placements import canonical_placement, enumerate_placements
from chainedboards.serialization import deserialize, serialize
from chainedboards.triangles import to_monotone_triangles
from tests.worked_examples import ONE_LINE_46, QT_6, WORKED_46


def sample_objects():
    board = circular(2, 2)
    placement = next(iter(enumerate_placements(board, max_rooks(board))))
    cp = placement_to_matrices(placement)
    asm = WORKED_46
    ice = to_ice(asm)
    yield placement
    yield cp
    yield to_one_line(cp)
    yield to_matching(cp)
    yield asm
    yield fold_qt(next(iter(enumerate_chained_asm(circular(2, 1)))))
    yield to_monotone_triangles(asm)
    yield ice
    yield to_fpl(ice)


def test_round_trip_byte_identical():
    for obj in sample_objects():
        text = serialize(obj)
        assert text.endswith("\n") and "\n" not in text[:-1]
        back = deserialize(text)
        assert back == obj
        assert serialize(back) == text


def test_documents_are_canonical_json():
    for obj in sample_objects():
        doc = json.loads(serialize(obj))
        assert list(doc)[0] == "family"
        if "shape" in doc:
            assert list(doc)[1:4] == ["shape", "n", "k"]


def test_one_line_string_accepted():
    o = deserialize(ONE_LINE_46)
    assert o.board == circular(4, 6)
    # and the canonical JSON document for the same object round-trips to it
    assert deserialize(serialize(o)) == o


def test_one_line_46_document_round_trip():
    o = deserialize(ONE_LINE_46)
    from chainedboards.perms import from_one_line

    cp = from_one_line(o)
    assert deserialize(serialize(cp)) == cp


def test_parse_errors():
    with pytest.raises(ParseError):
        deserialize("")
    with pytest.raises(ParseError):
        deserialize('{"family": "placement", "shape": "linear"')  # truncated
    with pytest.raises(ParseError):
        deserialize('{"family": "martian"}')
    with pytest.raises(ParseError):
        deserialize('{"family": "placement", "shape": "linear", "n": 2}')
    with pytest.raises(ParseError):
        deserialize('[1, 2, 3]')


def test_validation_errors():
    # well-formed JSON, attacking placement
    bad = json.dumps(
        {
            "family": "placement",
            "shape": "linear",
            "n": 2,
            "k": 1,
            "squares": [[1, 1, 1], [1, 1, 2]],
        }
    )
    with pytest.raises(ValidationError):
        deserialize(bad)
    # out-of-range coordinates
    with pytest.raises(ValidationError):
        deserialize(
            json.dumps(
                {
                    "family": "placement",
                    "shape": "linear",
                    "n": 2,
                    "k": 1,
                    "squares": [[1, 3, 1]],
                }
            )
        )
    # a chained ASM whose total misses the maximum
    with pytest.raises(ValidationError) as info:
        deserialize(
            json.dumps(
                {
                    "family": "chained-asm",
                    "shape": "linear",
                    "n": 2,
                    "k": 1,
                    "matrices": [[[1, 0], [0, 0]]],
                }
            )
        )
    assert any("condition (3)" in p for p in info.value.problems)


def test_plain_asm_document():
    p = PlainASM(2, ((0, 1), (1, 0)))
    assert deserialize(serialize(p)) == p
    q6 = PlainASM(6, QT_6)  # the 6x6 quadrant is not itself a plain ASM
    with pytest.raises(ValidationError):
        deserialize(serialize(q6))


def test_canonical_placement_document_stable():
    p = canonical_placement(linear(2, 1), (2,))
    assert (
        serialize(p)
        == '{"family": "placement", "shape": "linear", "n": 2, "k": 1,'
        ' "squares": [[1, 1, 1], [1, 2, 2]]}\n'
    )


def test_permutation_asm_documents_distinct():
    cp = placement_to_matrices(next(iter(enumerate_placements(circular(2, 2), 2))))
    asm = permutation_to_asm(cp)
    assert serialize(cp) != serialize(asm)
    assert deserialize(serialize(asm)) == asm
