"""Diagonal cardinality sequences.

A staircase diagram is determined up to diagonal equivalence by the vector
(d_1, ..., d_l) counting its cells on each anti-diagonal.  A vector is
realizable exactly when, after stripping zeros at both ends, it starts with
the staircase 1, 2, ..., r and is non-increasing afterwards.  Raw integer
lists (with leading or trailing zeros, as produced mid-recursion) are
accepted by every predicate and normalised on the way in; the convention is
that a leading zero never changes the meaning of a sequence.
"""

from __future__ import annotations

from typing import Iterable, Sequence


def normalize(entries: Iterable[int]) -> tuple[int, ...]:
    """Strip leading and trailing zeros; an all-zero vector becomes ()."""
    values = list(entries)
    lo = 0
    hi = len(values)
    while lo < hi and values[lo] == 0:
        lo += 1
    while hi > lo and values[hi - 1] == 0:
        hi -= 1
    return tuple(values[lo:hi])


def _staircase_prefix(entries: Sequence[int]) -> int:
    """Largest r with d_i = i for all i <= r."""
    r = 0
    for i, d in enumerate(entries, start=1):
        if d != i:
            break
        r = i
    return r


def is_ferrers_sequence(entries: Iterable[int]) -> bool:
    """True when some staircase diagram has these diagonal counts.

    Up to normalisation, valid vectors are () plus those of the form
    (1, 2, ..., r, d_{r+1}, ..., d_l) with r >= d_{r+1} >= ... >= d_l >= 1.
    """
    values = list(entries)
    if any(not isinstance(d, int) or d < 0 for d in values):
        return False
    values = list(normalize(values))
    if not values:
        return True
    r = _staircase_prefix(values)
    if r == 0:
        return False
    # Only the maximal staircase prefix can witness validity: a shorter r
    # is immediately followed by d_{r+1} = r + 1 > d_r.
    prev = values[r - 1]
    for d in values[r:]:
        if d > prev or d == 0:
            return False
        prev = d
    return True


def is_symmetric_sequence(entries: Iterable[int]) -> bool:
    """True when a transpose-invariant diagram realizes these counts.

    Two parity constraints follow from transpose invariance.  Cells of an
    even anti-diagonal split into transpose pairs, so every even-indexed
    entry must be even.  An odd anti-diagonal 2k-1 has odd count exactly
    when its center cell (k, k) is present, and the occupied principal
    diagonal cells form a prefix (1,1), ..., (k, k); so once an odd-indexed
    entry is even, every later odd-indexed entry must be even too.  Both
    conditions together are also sufficient, which the tests confirm by
    exhaustive search over symmetric diagrams.
    """
    values = list(entries)
    if not is_ferrers_sequence(values):
        return False
    norm = normalize(values)
    center_gone = False
    for i, d in enumerate(norm, start=1):
        if i % 2 == 0:
            if d % 2 == 1:
                return False
        elif d % 2 == 0:
            center_gone = True
        elif center_gone:
            return False
    return True


def validate_sequence(entries: Iterable[int]) -> tuple[int, ...]:
    """Return the entries as a tuple, raising with the violated rule named."""
    values = tuple(entries)
    if any(not isinstance(d, int) or d < 0 for d in values):
        raise ValueError("sequence entries must be non-negative integers")
    norm = normalize(values)
    if not norm:
        return values
    if norm[0] != 1:
        raise ValueError("d_1 must equal 1")
    if not is_ferrers_sequence(values):
        raise ValueError(
            "entries must follow the staircase 1,2,...,r and then be non-increasing"
        )
    return values


def validate_symmetric_sequence(entries: Iterable[int]) -> tuple[int, ...]:
    values = validate_sequence(entries)
    if not is_symmetric_sequence(values):
        raise ValueError(
            "symmetric sequences need even entries at even indices and, once an "
            "odd-indexed entry is even, at every later odd index too"
        )
    return values


def sequence_degree(entries: Iterable[int]) -> int:
    """Maximum entry of a valid sequence; 0 for the empty or all-zero one."""
    values = validate_sequence(entries)
    return max(values, default=0)


def parse_sequence(text: str) -> tuple[int, ...]:
    """Parse and normalise a comma-separated entry list; "" is the empty sequence."""
    text = text.strip()
    if not text:
        return ()
    try:
        values = tuple(int(tok) for tok in text.split(","))
    except ValueError:
        raise ValueError(f"not a comma-separated integer list: {text!r}") from None
    return normalize(validate_sequence(values))
