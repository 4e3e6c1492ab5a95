"""Staircase (Ferrers) diagrams as geometric objects.

A diagram is stored as its non-increasing column lengths; cells are (row,
column) pairs with both coordinates starting at 1, and cell (r, c) lies on
anti-diagonal r + c - 1.  Instances are immutable and hashable.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from . import sequences

Cell = tuple[int, int]


@dataclass(frozen=True)
class FerrersDiagram:
    """Top-left justified staircase given by column lengths c_1 >= ... >= c_m >= 1."""

    columns: tuple[int, ...] = ()

    def __post_init__(self):
        cols = tuple(self.columns)
        object.__setattr__(self, "columns", cols)
        for c in cols:
            if not isinstance(c, int) or c < 1:
                raise ValueError("column lengths must be positive integers")
        for a, b in zip(cols, cols[1:]):
            if b > a:
                raise ValueError("column lengths must be non-increasing")

    @property
    def size(self) -> int:
        """Number of cells."""
        return sum(self.columns)

    @property
    def num_columns(self) -> int:
        return len(self.columns)

    @property
    def num_rows(self) -> int:
        return self.columns[0] if self.columns else 0

    def __contains__(self, cell: Cell) -> bool:
        r, c = cell
        return 1 <= c <= len(self.columns) and 1 <= r <= self.columns[c - 1]

    def cells(self) -> list[Cell]:
        """All cells, sorted by (row, column)."""
        return sorted((r, c + 1) for c, h in enumerate(self.columns) for r in range(1, h + 1))

    def row_lengths(self) -> tuple[int, ...]:
        """Conjugate partition: length of each row, top to bottom."""
        return tuple(
            sum(1 for c in self.columns if c >= r) for r in range(1, self.num_rows + 1)
        )

    def diagonal_sequence(self) -> tuple[int, ...]:
        """Cell count on each anti-diagonal, up to the last nonempty one."""
        if not self.columns:
            return ()
        last = self.num_rows + self.num_columns - 1
        counts = [0] * last
        for c, h in enumerate(self.columns, start=1):
            # column c occupies diagonals c, c+1, ..., c+h-1
            for i in range(c, c + h):
                counts[i - 1] += 1
        while counts and counts[-1] == 0:
            counts.pop()
        return tuple(counts)

    def diagonal_cells(self, i: int) -> list[Cell]:
        """Cells on anti-diagonal i, ordered from the topmost row down."""
        return [(r, i - r + 1) for r in range(1, i + 1) if (r, i - r + 1) in self]

    def degree(self) -> int:
        """Largest anti-diagonal count = largest non-attacking placement size."""
        return max(self.diagonal_sequence(), default=0)

    def is_symmetric(self) -> bool:
        """True when the cell set is invariant under transposition."""
        return self.columns == self.row_lengths()

    def xi_cells(self) -> set[Cell]:
        """Cells on the principal diagonal {(i, i)}."""
        return {(i, i) for i in range(1, len(self.columns) + 1) if self.columns[i - 1] >= i}

    def canonical_form(self) -> "FerrersDiagram":
        """The equivalent diagram with every anti-diagonal aligned to the top."""
        return diagram_from_sequence(self.diagonal_sequence())

    def ascii_art(self) -> str:
        """Row-per-line rendering with '#' cells; '(empty)' for the empty diagram."""
        rows = self.row_lengths()
        if not rows:
            return "(empty)"
        return "\n".join("#" * width for width in rows)

    def to_json_dict(self) -> dict:
        return {"columns": list(self.columns)}

    def __str__(self) -> str:
        return "[" + ",".join(str(c) for c in self.columns) + "]"


def parse_diagram(text: str) -> FerrersDiagram:
    """Parse comma-separated column lengths; the empty string is the empty diagram."""
    text = text.strip()
    if not text:
        return FerrersDiagram()
    try:
        cols = tuple(int(tok) for tok in text.split(","))
    except ValueError:
        raise ValueError(f"not a comma-separated integer list: {text!r}") from None
    return FerrersDiagram(cols)


def _diagram_from_cell_set(cells: set[Cell]) -> FerrersDiagram:
    """Build a diagram from a cell set, checking it is closed down and to the left."""
    if not cells:
        return FerrersDiagram()
    heights: dict[int, int] = {}
    for r, c in cells:
        heights[c] = max(heights.get(c, 0), r)
    m = max(heights)
    columns = tuple(heights.get(c, 0) for c in range(1, m + 1))
    if sum(columns) != len(cells):
        raise ValueError("cell set has gaps inside a column")
    diagram = FerrersDiagram(columns)  # re-checks the staircase property
    return diagram


def diagram_from_sequence(seq: Iterable[int]) -> FerrersDiagram:
    """The canonical diagram of a valid sequence: diagonal i holds its topmost d_i cells."""
    s = sequences.normalize(sequences.validate_sequence(seq))
    cells = {(t, i - t + 1) for i, d in enumerate(s, start=1) for t in range(1, d + 1)}
    diagram = _diagram_from_cell_set(cells)
    if diagram.diagonal_sequence() != s:
        raise AssertionError(f"canonical construction failed for {s}")
    return diagram


def symmetric_diagram_from_sequence(seq: Iterable[int]) -> FerrersDiagram:
    """A transpose-invariant diagram realizing a valid symmetric sequence.

    On each anti-diagonal the d_i cells are placed centered about the
    principal diagonal (for odd i and even d_i, the center cell is skipped).
    The construction is verified per instance; if it ever failed to produce
    a staircase, an exhaustive search over symmetric diagrams in the l x l
    board would take over.
    """
    s = sequences.normalize(sequences.validate_symmetric_sequence(seq))
    cells: set[Cell] = set()
    for i, d in enumerate(s, start=1):
        if i % 2 == 1:
            center = (i + 1) // 2
            k = d // 2
            rows = [center + offset for offset in range(-k, k + 1)]
            if d % 2 == 0:
                rows.remove(center)
        else:
            lo = (i + 2 - d) // 2  # d is even here, so this is an integer
            rows = list(range(lo, lo + d))
        cells.update((r, i - r + 1) for r in rows)
    try:
        diagram = _diagram_from_cell_set(cells)
    except ValueError:
        diagram = None
    if (
        diagram is not None
        and diagram.is_symmetric()
        and diagram.diagonal_sequence() == s
    ):
        return diagram
    # Fallback: the sequence is valid, so a realization exists in the l x l board.
    side = len(s)
    for candidate in enumerate_diagrams(side, side):
        if candidate.is_symmetric() and candidate.diagonal_sequence() == s:
            return candidate
    raise RuntimeError(f"no symmetric realization found for valid sequence {s}")


def enumerate_diagrams(max_rows: int, max_cols: int) -> list[FerrersDiagram]:
    """All diagrams with at most max_cols columns of length at most max_rows.

    Includes the empty diagram; ordered lexicographically by column vector.
    """
    if max_rows < 0 or max_cols < 0:
        raise ValueError("board bounds must be non-negative")
    out: list[FerrersDiagram] = []

    def extend(prefix: list[int], bound: int):
        out.append(FerrersDiagram(tuple(prefix)))
        if len(prefix) == max_cols:
            return
        for value in range(1, bound + 1):
            prefix.append(value)
            extend(prefix, value)
            prefix.pop()

    extend([], max_rows)
    return out


def enumerate_symmetric_diagrams(max_size: int) -> list[FerrersDiagram]:
    """All transpose-invariant diagrams in the max_size x max_size board."""
    return [d for d in enumerate_diagrams(max_size, max_size) if d.is_symmetric()]


def equivalence_classes(
    diagrams: Iterable[FerrersDiagram],
) -> dict[tuple[int, ...], list[FerrersDiagram]]:
    """Group diagrams by diagonal sequence (the diagonal-equivalence classes)."""
    classes: dict[tuple[int, ...], list[FerrersDiagram]] = {}
    for diagram in diagrams:
        classes.setdefault(diagram.diagonal_sequence(), []).append(diagram)
    return classes
