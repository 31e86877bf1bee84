"""Kohnert diagrams and the key polynomial as their weight generating function.

Rows are numbered 1..n from south to north, columns 1, 2, ... from west to
east.  Internally a diagram is a tuple of per-row column bitmasks (bit c-1
set when (row, c) is occupied); :class:`Diagram` wraps that with set-like
accessors.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterator, Sequence

from keypoly.compositions import KM_PATTERNS, find_pattern
from keypoly.polynomial import Polynomial

Box = tuple[int, int]
Rows = tuple[int, ...]


@dataclass(frozen=True, order=True)
class Diagram:
    rows: Rows  # rows[i - 1] is the column bitmask of row i

    @classmethod
    def from_boxes(cls, n: int, boxes) -> Diagram:
        rows = [0] * n
        for r, c in boxes:
            if not 1 <= r <= n or c < 1:
                raise ValueError(f"box {(r, c)} outside rows 1..{n}, columns >= 1")
            rows[r - 1] |= 1 << (c - 1)
        return cls(tuple(rows))

    @property
    def n(self) -> int:
        return len(self.rows)

    def boxes(self) -> list[Box]:
        """Occupied cells sorted by (row, column)."""
        return [
            (r, c)
            for r, mask in enumerate(self.rows, start=1)
            for c in range(1, mask.bit_length() + 1)
            if mask >> (c - 1) & 1
        ]

    def __contains__(self, box: Box) -> bool:
        r, c = box
        return 1 <= r <= self.n and c >= 1 and bool(self.rows[r - 1] >> (c - 1) & 1)

    def __iter__(self) -> Iterator[Box]:
        return iter(self.boxes())

    def __len__(self) -> int:
        return sum(mask.bit_count() for mask in self.rows)

    def rightmost(self, row: int) -> int:
        """Column of the rightmost box in ``row`` (0 when the row is empty)."""
        return self.rows[row - 1].bit_length()

    def render(self) -> str:
        """North-to-south rows, ``O`` for a box and ``.`` for an empty cell."""
        width = max((mask.bit_length() for mask in self.rows), default=0)
        lines = []
        for mask in reversed(self.rows):
            line = "".join("O" if mask >> c & 1 else "." for c in range(width))
            lines.append(line or ".")
        return "\n".join(lines)


def skyline(alpha: Sequence[int]) -> Diagram:
    return Diagram(tuple((1 << a) - 1 for a in alpha))


def _landing_row(rows: Rows, r: int, c: int) -> int:
    """Largest row below ``r`` whose cell in column ``c`` is free, or 0."""
    bit = 1 << (c - 1)
    for below in range(r - 1, 0, -1):
        if not rows[below - 1] & bit:
            return below
    return 0


def _moves(rows: Rows) -> Iterator[tuple[Box, Rows]]:
    for r in range(2, len(rows) + 1):
        mask = rows[r - 1]
        if not mask:
            continue
        c = mask.bit_length()
        target = _landing_row(rows, r, c)
        if target:
            bit = 1 << (c - 1)
            new = list(rows)
            new[r - 1] ^= bit
            new[target - 1] |= bit
            yield (r, c), tuple(new)


def movable_boxes(d: Diagram) -> list[Box]:
    return [box for box, _ in _moves(d.rows)]


def apply_kohnert_move(d: Diagram, box: Box) -> Diagram:
    """Drop ``box`` to the highest free cell below it in its column."""
    for movable, rows in _moves(d.rows):
        if movable == box:
            return Diagram(rows)
    raise ValueError(f"box {box} is not movable in this diagram")


def _closure(start: Rows) -> set[Rows]:
    seen = {start}
    queue = deque([start])
    while queue:
        for _, nxt in _moves(queue.popleft()):
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return seen


def kohnert_diagrams(alpha: Sequence[int]) -> set[Diagram]:
    return {Diagram(rows) for rows in _closure(skyline(alpha).rows)}


def kohwt(d: Diagram) -> tuple[int, ...]:
    return tuple(mask.bit_count() for mask in d.rows)


def key_polynomial_kohnert(alpha: Sequence[int]) -> Polynomial:
    closure = _closure(skyline(alpha).rows)
    return Polynomial(len(alpha), ((tuple(m.bit_count() for m in rows), 1) for rows in closure))


def is_initial_row(d: Diagram, row: int) -> bool:
    """Row is empty or exactly (row, 1), ..., (row, j) for some j."""
    mask = d.rows[row - 1]
    return mask & (mask + 1) == 0


def jump(d: Diagram, row: int, to_row: int) -> Diagram:
    """Replace the rightmost box (row, j) by (to_row, j).

    This is the composite move that is guaranteed to stay inside KD(alpha)
    when every row from ``to_row`` up to ``row - 1`` is initial and the
    rightmost box of ``to_row`` sits strictly left of column j.
    """
    if not 1 <= to_row < row <= d.n:
        raise ValueError(f"need 1 <= to_row < row <= {d.n}, got {to_row}, {row}")
    c = d.rightmost(row)
    if c == 0:
        raise ValueError(f"row {row} is empty")
    if (to_row, c) in d:
        raise ValueError(f"cell {(to_row, c)} is occupied")
    bit = 1 << (c - 1)
    rows = list(d.rows)
    rows[row - 1] ^= bit
    rows[to_row - 1] |= bit
    return Diagram(tuple(rows))


def jump_applies(d: Diagram, row: int, to_row: int) -> bool:
    """Hypotheses under which :func:`jump` lands in the Kohnert closure."""
    return (
        1 <= to_row < row <= d.n
        and d.rightmost(to_row) < d.rightmost(row)
        and all(is_initial_row(d, r) for r in range(to_row, row))
    )


def _two_step(d: Diagram, low: int, mid: int, high: int) -> tuple[Diagram, Diagram]:
    # rows low < mid < high with rightmost columns strictly increasing
    first = jump(d, high, low)
    second = jump(jump(d, mid, low), high, mid)
    return first, second


def necessity_pair(
    alpha: Sequence[int], pattern: Sequence[int], positions: Sequence[int]
) -> tuple[Diagram, Diagram]:
    """Two distinct Kohnert diagrams of equal weight built from a KM occurrence.

    ``positions`` are the 1-based rows where ``pattern`` occurs in ``alpha``.
    """
    pattern = tuple(pattern)
    d = skyline(alpha)
    if pattern == (0, 1, 2):
        i0, i1, i2 = positions
        return _two_step(d, i0, i1, i2)
    if pattern in ((0, 0, 2, 1), (1, 0, 3, 2)):
        # rows a < b < c < e: move the two tall rows onto the two short rows
        # in both possible assignments
        a, b, top, second = positions
        first = jump(jump(d, second, a), top, b)
        other = jump(jump(d, top, a), second, b)
        return first, other
    if pattern in ((0, 0, 2, 2), (1, 0, 2, 2)):
        a, b, c, e = positions
        lowered = jump(d, c, a)
        return _two_step(lowered, b, c, e)
    raise ValueError(f"{pattern} is not a KM pattern")


def necessity_witness(alpha: Sequence[int]) -> tuple[tuple[int, ...], tuple[int, ...], Diagram, Diagram] | None:
    """(pattern, positions, D, E) for the first KM pattern in ``alpha``, or None."""
    for pattern in KM_PATTERNS:
        positions = find_pattern(alpha, pattern)
        if positions is not None:
            return (pattern, positions, *necessity_pair(alpha, pattern, positions))
    return None
