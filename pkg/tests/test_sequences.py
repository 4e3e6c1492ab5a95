from itertools import product

import pytest

from ferrers.diagrams import enumerate_diagrams, enumerate_symmetric_diagrams
from ferrers.sequences import (
    is_ferrers_sequence,
    is_symmetric_sequence,
    normalize,
    parse_sequence,
    sequence_degree,
    validate_sequence,
)


def test_normalize():
    assert normalize((0, 1, 2)) == (1, 2)
    assert normalize((1, 0)) == (1,)
    assert normalize((0, 0)) == ()
    assert normalize(()) == ()
    assert normalize((1, 0, 1)) == (1, 0, 1)  # interior zeros stay


def test_normalize_is_idempotent():
    for entries in product(range(3), repeat=4):
        assert normalize(normalize(entries)) == normalize(entries)


def test_is_ferrers_sequence_examples():
    assert is_ferrers_sequence((1, 2, 3, 3, 2))
    assert is_ferrers_sequence((1, 1, 0))
    assert not is_ferrers_sequence((2, 1))
    assert is_ferrers_sequence(())
    assert is_ferrers_sequence((0, 0))
    assert is_ferrers_sequence((0, 1, 2))  # leading zeros are immaterial
    assert not is_ferrers_sequence((1, 1, 2))
    assert not is_ferrers_sequence((1, 0, 1))
    assert not is_ferrers_sequence((1, -1))


def test_is_symmetric_sequence_examples():
    assert is_symmetric_sequence((1, 2, 3, 2, 1))  # realized by the full 3x3 board
    assert is_symmetric_sequence((1, 2, 2))
    assert not is_symmetric_sequence((1, 2, 3, 3))  # odd value at an even index
    assert not is_symmetric_sequence((2, 1))
    assert is_symmetric_sequence(())


def test_sequence_degree():
    assert sequence_degree((1, 2, 3, 4, 3)) == 4
    assert sequence_degree(()) == 0
    assert sequence_degree((1, 2, 2, 2)) == 2
    with pytest.raises(ValueError):
        sequence_degree((2, 1))


def test_sequence_degree_invariant_under_normalize():
    assert sequence_degree((0, 1, 2, 0)) == sequence_degree((1, 2))


def test_validate_sequence_messages():
    with pytest.raises(ValueError, match="d_1 must equal 1"):
        validate_sequence((2, 1))
    with pytest.raises(ValueError, match="non-increasing"):
        validate_sequence((1, 1, 2))
    with pytest.raises(ValueError, match="non-negative"):
        validate_sequence((1, -2))


def test_parse_sequence():
    assert parse_sequence("1,2,3,3,2") == (1, 2, 3, 3, 2)
    assert parse_sequence("") == ()
    assert parse_sequence("1,2,1,0") == (1, 2, 1)
    with pytest.raises(ValueError):
        parse_sequence("1,x")


def test_validity_matches_realizability_exhaustively():
    # Realizable diagonal count vectors of length l live in the l x l board.
    realized = {d.diagonal_sequence() for d in enumerate_diagrams(6, 6)}
    for length in range(0, 7):
        for entries in product(range(7), repeat=length):
            expected = normalize(entries) in realized
            assert is_ferrers_sequence(entries) == expected, entries


def _all_valid_sequences(length):
    """All valid normalized sequences of exactly this length, built directly."""
    if length == 0:
        yield ()
        return
    for r in range(1, length + 1):
        staircase = tuple(range(1, r + 1))
        tails = [()]
        for _ in range(length - r):
            tails = [t + (v,) for t in tails for v in range(1, (t[-1] if t else r) + 1)]
        for tail in tails:
            if r == length or tail:
                yield staircase + tail


def test_symmetric_validity_matches_symmetric_realizability():
    # Spot the parity criterion against exhaustive search over symmetric
    # diagrams: first on every candidate vector up to length 5, then on
    # every valid sequence up to length 7.
    realized = {d.diagonal_sequence() for d in enumerate_symmetric_diagrams(7)}
    for length in range(0, 6):
        for entries in product(range(6), repeat=length):
            expected = normalize(entries) in realized
            assert is_symmetric_sequence(entries) == expected, entries
    for length in (6, 7):
        for seq in _all_valid_sequences(length):
            assert is_symmetric_sequence(seq) == (seq in realized), seq
