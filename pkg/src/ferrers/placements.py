"""Non-attacking rook placements and the diagram surgery built on them.

A placement is a sorted tuple of cells, no two sharing a row or a column.
The central statistic counts the cells of a diagram that survive when every
rook deletes itself, everything above it in its column, and everything to
its left in its row.  Puncturing and reduction shrink a diagram while
controlling its diagonal counts; they drive all the recursions.
"""

from __future__ import annotations

from collections import Counter
from itertools import combinations
from typing import Iterable

from .diagrams import Cell, FerrersDiagram

Placement = tuple[Cell, ...]


def is_non_attacking(cells: Iterable[Cell]) -> bool:
    cells = list(cells)
    rows = {r for r, _ in cells}
    cols = {c for _, c in cells}
    return len(rows) == len(cells) and len(cols) == len(cells)


def validate_placement(diagram: FerrersDiagram, cells: Iterable[Cell]) -> Placement:
    """Sorted placement tuple; raises unless the cells sit in the diagram, non-attacking."""
    placement = tuple(sorted(set(cells)))
    for cell in placement:
        if cell not in diagram:
            raise ValueError(f"cell {cell} is outside the diagram")
    if not is_non_attacking(placement):
        raise ValueError("placement has two rooks in one row or column")
    return placement


def placement_to_json_dict(cells: Iterable[Cell]) -> dict:
    """Stable JSON form: sorted (row, column) pairs."""
    return {"cells": [list(c) for c in sorted(set(cells))]}


def atk(cells: Iterable[Cell]) -> set[Cell]:
    """All board cells deleted by the given rooks.

    A rook on (i, j) deletes its own cell, every cell above it in column j,
    and every cell to its left in row i.
    """
    deleted: set[Cell] = set()
    for i, j in cells:
        deleted.update((r, j) for r in range(1, i + 1))
        deleted.update((i, c) for c in range(1, j))
    return deleted


def inv(diagram: FerrersDiagram, cells: Iterable[Cell]) -> int:
    """Number of diagram cells not deleted by the placement; |F| for the empty one."""
    placement = validate_placement(diagram, cells)
    # For a placement inside a staircase the deleted set stays inside it.
    return diagram.size - len(atk(placement))


def enumerate_placements(diagram: FerrersDiagram, r: int) -> list[Placement]:
    """All size-r non-attacking placements, sorted lexicographically."""
    if r < 0:
        return []
    cols = diagram.columns
    out: list[Placement] = []
    chosen: list[Cell] = []
    used_rows: set[int] = set()

    def walk(col_index: int):
        if len(chosen) == r:
            out.append(tuple(sorted(chosen)))
            return
        remaining = len(cols) - col_index
        if remaining < r - len(chosen):
            return
        # skip this column
        walk(col_index + 1)
        # or place a rook somewhere in it
        for row in range(1, cols[col_index] + 1):
            if row not in used_rows:
                chosen.append((row, col_index + 1))
                used_rows.add(row)
                walk(col_index + 1)
                used_rows.remove(row)
                chosen.pop()

    walk(0)
    out.sort()
    return out


def enumerate_alternating(diagram: FerrersDiagram, r: int) -> list[Placement]:
    """Placements closed under transposition with no rook on the principal diagonal.

    Empty for odd r.  Only defined on symmetric diagrams.
    """
    if not diagram.is_symmetric():
        raise ValueError("alternating placements need a symmetric diagram")
    if r < 0 or r % 2 == 1:
        return []
    t = r // 2
    upper = sorted((i, j) for (i, j) in diagram.cells() if i < j)
    out: list[Placement] = []
    chosen: list[Cell] = []
    used: set[int] = set()

    def walk(start: int):
        if len(chosen) == t:
            full = chosen + [(j, i) for (i, j) in chosen]
            out.append(tuple(sorted(full)))
            return
        for idx in range(start, len(upper)):
            i, j = upper[idx]
            if i not in used and j not in used:
                chosen.append((i, j))
                used.update((i, j))
                walk(idx + 1)
                used.difference_update((i, j))
                chosen.pop()

    walk(0)
    out.sort()
    return out


def enumerate_symmetric(diagram: FerrersDiagram, t: int, s: int) -> list[Placement]:
    """Placements made of an alternating part of t transpose pairs plus s diagonal rooks."""
    if not diagram.is_symmetric():
        raise ValueError("symmetric placements need a symmetric diagram")
    if t < 0 or s < 0:
        return []
    diagonal = sorted(diagram.xi_cells())
    out: list[Placement] = []
    for pairs in enumerate_alternating(diagram, 2 * t):
        used = {i for (i, _) in pairs} | {j for (_, j) in pairs}
        free = [cell for cell in diagonal if cell[0] not in used]
        for extra in combinations(free, s):
            out.append(tuple(sorted(pairs + extra)))
    out.sort()
    return out


def inv_histogram(diagram: FerrersDiagram, r: int) -> dict[int, int]:
    """Multiplicity of each statistic value over all size-r placements."""
    return dict(Counter(inv(diagram, p) for p in enumerate_placements(diagram, r)))


def inv_histogram_alternating(diagram: FerrersDiagram, r: int) -> dict[int, int]:
    return dict(Counter(inv(diagram, p) for p in enumerate_alternating(diagram, r)))


def inv_histogram_symmetric(diagram: FerrersDiagram, t: int, s: int) -> dict[int, int]:
    return dict(Counter(inv(diagram, p) for p in enumerate_symmetric(diagram, t, s)))


def diagonal_position(diagram: FerrersDiagram, i: int, j: int) -> Cell:
    """The j-th cell (counting from the topmost row) on anti-diagonal i."""
    cells = diagram.diagonal_cells(i)
    if not 1 <= j <= len(cells):
        raise ValueError(f"diagonal {i} has {len(cells)} cells, position {j} is out of range")
    return cells[j - 1]


def puncture(diagram: FerrersDiagram) -> FerrersDiagram:
    """Remove the last nonempty anti-diagonal."""
    if not diagram.columns:
        raise ValueError("cannot puncture the empty diagram")
    last = len(diagram.diagonal_sequence())
    # Each cell on the last diagonal is the bottom cell of its column.
    columns = list(diagram.columns)
    for idx, height in enumerate(columns):
        if height + idx == last:  # (height, idx + 1) lies on diagonal height + idx
            columns[idx] -= 1
    return FerrersDiagram(tuple(c for c in columns if c > 0))


def _realign(cells: set[Cell]) -> tuple[FerrersDiagram, dict[Cell, Cell]]:
    """Compact a cell set to the top, then to the left.

    Returns the resulting diagram together with the map sending each
    surviving cell to its new position.  Column compaction preserves the
    vertical order inside a column; row compaction then preserves the
    horizontal order inside a row, which lands the columns in non-increasing
    length order.
    """
    by_col: dict[int, list[int]] = {}
    for r, c in sorted(cells):
        by_col.setdefault(c, []).append(r)
    heights = {c: len(rows) for c, rows in by_col.items()}
    col_order = sorted(heights)
    mapping: dict[Cell, Cell] = {}
    for c, rows in by_col.items():
        for new_r, r in enumerate(rows, start=1):
            new_c = sum(1 for c2 in col_order if c2 <= c and heights[c2] >= new_r)
            mapping[(r, c)] = (new_r, new_c)
    columns = tuple(sorted(heights.values(), reverse=True))
    return FerrersDiagram(columns), mapping


def _reduce_with_map(
    diagram: FerrersDiagram, i: int, j: int
) -> tuple[FerrersDiagram, dict[Cell, Cell]]:
    cell = diagonal_position(diagram, i, j)
    removed = atk([cell])
    seq = diagram.diagonal_sequence()
    for d in range(i, len(seq) + 1):
        on_diag = diagram.diagonal_cells(d)
        removed.update(on_diag[j:] if d == i else on_diag)
    survivors = set(diagram.cells()) - removed
    return _realign(survivors)


def reduce(diagram: FerrersDiagram, i: int, j: int) -> FerrersDiagram:
    """Reduction at the j-th cell of anti-diagonal i.

    Deletes that cell's attack set plus every diagonal-indexed cell that
    comes later in the (diagonal, position) order, then realigns top and
    left.  The result's diagonal counts are
    normalize(d_2 - 1, ..., d_{i-1} - 1, j - 1).
    """
    reduced, _ = _reduce_with_map(diagram, i, j)
    return reduced


def reduce_placement(diagram: FerrersDiagram, cells: Iterable[Cell]) -> FerrersDiagram:
    """Iterated reduction over a placement, largest (diagonal, position) first.

    After each step the surviving rooks are carried through the realignment;
    they remain a valid placement inside the reduced diagram.
    """
    rooks = set(validate_placement(diagram, cells))
    if not rooks:
        raise ValueError("reduce_placement needs a nonempty placement")
    current = diagram
    while rooks:
        keyed = []
        for r, c in rooks:
            diag = r + c - 1
            pos = current.diagonal_cells(diag).index((r, c)) + 1
            keyed.append(((diag, pos), (r, c)))
        (diag, pos), rook = max(keyed)
        current, mapping = _reduce_with_map(current, diag, pos)
        survivors = set()
        for other in rooks:
            if other == rook:
                continue
            if other not in mapping:
                raise RuntimeError(f"rook {other} was deleted by reducing at {rook}")
            survivors.add(mapping[other])
        rooks = set(validate_placement(current, survivors))
    return current


def reduce_symmetric(diagram: FerrersDiagram, i: int, j: int) -> FerrersDiagram:
    """Reduction of a symmetric diagram at a transpose pair on anti-diagonal i.

    The pair is the j-th cell of the diagonal together with its mirror, the
    (d_i + 1 - j)-th; the deletion also covers the diagonal cells strictly
    between them and everything on later anti-diagonals.  The result is
    symmetric with diagonal counts
    normalize(d_3 - 2, ..., d_{i-1} - 2, 2j - 2).
    """
    if not diagram.is_symmetric():
        raise ValueError("symmetric reduction needs a symmetric diagram")
    on_diag = diagram.diagonal_cells(i)
    d_i = len(on_diag)
    if not 1 <= j <= d_i // 2:
        raise ValueError(f"pair position {j} out of range for a diagonal of {d_i} cells")
    pair = [on_diag[j - 1], on_diag[d_i - j]]
    removed = atk(pair)
    removed.update(on_diag[j : d_i - j])
    seq = diagram.diagonal_sequence()
    for d in range(i + 1, len(seq) + 1):
        removed.update(diagram.diagonal_cells(d))
    survivors = set(diagram.cells()) - removed
    reduced, _ = _realign(survivors)
    return reduced
