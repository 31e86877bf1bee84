"""Quasi-key tableaux, quasi-key polynomials and the quasi-key expansion of kappa_alpha.

A tableau of shape alpha fills the skyline diagram: row r (1-based, south to
north) holds alpha_r entries.  Entries are stored as a tuple of row tuples.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from keypoly.compositions import qlswap
from keypoly.polynomial import Polynomial

Rows = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class QuasiKeyTableau:
    shape: tuple[int, ...]
    rows: Rows

    def __post_init__(self):
        if len(self.rows) != len(self.shape) or any(
            len(row) != a for row, a in zip(self.rows, self.shape)
        ):
            raise ValueError("row lengths must match the shape")

    def __getitem__(self, box: tuple[int, int]) -> int:
        r, c = box
        return self.rows[r - 1][c - 1]

    def boxes(self) -> Iterator[tuple[int, int]]:
        for r, a in enumerate(self.shape, start=1):
            for c in range(1, a + 1):
                yield r, c

    def reading_word(self) -> tuple[int, ...]:
        """Column by column, each column read bottom to top."""
        width = max(self.shape, default=0)
        return tuple(
            row[c] for c in range(width) for row in self.rows if c < len(row)
        )

    def render(self) -> str:
        """Rows from north to south, entries separated by spaces; ``.`` marks an empty row."""
        return "\n".join(
            " ".join(str(v) for v in row) if row else "." for row in reversed(self.rows)
        )


def super_tableau(alpha: Sequence[int]) -> QuasiKeyTableau:
    """The filling with only r's in row r."""
    alpha = tuple(alpha)
    return QuasiKeyTableau(alpha, tuple((r,) * a for r, a in enumerate(alpha, start=1)))


# Independent rule checkers, written directly from the definitions and used by
# the tests to audit the enumerator.

def check_qkt1(t: QuasiKeyTableau) -> bool:
    """Rows weakly decrease left to right; entries in row i are at most i."""
    return all(
        all(0 < v <= r for v in row) and all(x >= y for x, y in zip(row, row[1:]))
        for r, row in enumerate(t.rows, start=1)
    )


def _column(t: QuasiKeyTableau, c: int) -> list[tuple[int, int]]:
    return [(r, row[c - 1]) for r, row in enumerate(t.rows, start=1) if len(row) >= c]


def check_qkt2(t: QuasiKeyTableau) -> bool:
    """Column entries are distinct; the first column increases upward."""
    width = max(t.shape, default=0)
    for c in range(1, width + 1):
        values = [v for _, v in _column(t, c)]
        if len(set(values)) != len(values):
            return False
    first = [v for _, v in _column(t, 1)]
    return all(x < y for x, y in zip(first, first[1:]))


def check_qkt3(t: QuasiKeyTableau) -> bool:
    """If i sits above k in a column with i < k, the cell right of k exists and holds j > i."""
    width = max(t.shape, default=0)
    for c in range(1, width + 1):
        col = _column(t, c)
        for r, k in col:
            for r2, i in col:
                if r2 > r and i < k:
                    if t.shape[r - 1] <= c or t[r, c + 1] <= i:
                        return False
    return True


def check_qkt4(t: QuasiKeyTableau) -> bool:
    """If r < s, alpha_r < alpha_s and (r, c), (s, c+1) exist then T(r, c) < T(s, c+1)."""
    alpha = t.shape
    n = len(alpha)
    for r in range(1, n + 1):
        for s in range(r + 1, n + 1):
            if alpha[r - 1] < alpha[s - 1]:
                for c in range(1, min(alpha[r - 1], alpha[s - 1] - 1) + 1):
                    if t[r, c] >= t[s, c + 1]:
                        return False
    return True


def is_quasi_key_tableau(t: QuasiKeyTableau) -> bool:
    return check_qkt1(t) and check_qkt2(t) and check_qkt3(t) and check_qkt4(t)


def enumerate_qkt(alpha: Sequence[int]) -> list[QuasiKeyTableau]:
    """All quasi-key tableaux of shape ``alpha``, sorted by reading word.

    Backtracking fills columns left to right, each from bottom to top.  Row
    bounds, row monotonicity, column distinctness and the QKT4 comparison are
    enforced as each cell is placed; QKT3 is enforced once the cell to the
    right of a potential violation is placed, or when a column without such
    a cell is closed.
    """
    alpha = tuple(alpha)
    n = len(alpha)
    width = max(alpha, default=0)
    cols = [[r for r in range(1, n + 1) if alpha[r - 1] >= c] for c in range(1, width + 1)]
    cells = [(r, c) for c in range(1, width + 1) for r in cols[c - 1]]
    grid: dict[tuple[int, int], int] = {}
    # for each cell (s, c+1): the rows r < s with alpha_r < alpha_s, so T(r,c) < T(s,c+1)
    qkt4_rows = {
        (s, c): [r for r in range(1, s) if alpha[r - 1] < alpha[s - 1] and alpha[r - 1] >= c - 1]
        for s, c in cells
        if c > 1
    }
    out: list[QuasiKeyTableau] = []

    def qkt3_pending(r: int, c: int) -> int:
        """Largest i above (r, c) in column c with i < T(r, c); 0 if none."""
        k = grid[r, c]
        return max((grid[r2, c] for r2 in cols[c - 1] if r2 > r and grid[r2, c] < k), default=0)

    def column_closes(c: int) -> bool:
        # rows whose cell (r, c+1) is missing must not carry a QKT3 obligation
        return all(qkt3_pending(r, c) == 0 for r in cols[c - 1] if alpha[r - 1] == c)

    def place(idx: int) -> None:
        if idx == len(cells):
            out.append(
                QuasiKeyTableau(
                    alpha,
                    tuple(tuple(grid[r, c] for c in range(1, a + 1)) for r, a in enumerate(alpha, start=1)),
                )
            )
            return
        r, c = cells[idx]
        upper = r if c == 1 else min(r, grid[r, c - 1])
        lower = 1
        if c == 1:
            below = [grid[r2, 1] for r2 in cols[0] if r2 < r]
            if below:
                lower = below[-1] + 1
        else:
            lower = max([lower, qkt3_pending(r, c - 1) + 1] + [grid[q, c - 1] + 1 for q in qkt4_rows[r, c]])
        used = {grid[r2, c] for r2 in cols[c - 1] if r2 < r}
        last_in_column = r == cols[c - 1][-1]
        for v in range(lower, upper + 1):
            if v in used:
                continue
            grid[r, c] = v
            if not last_in_column or column_closes(c):
                place(idx + 1)
        grid.pop((r, c), None)

    place(0)
    out.sort(key=QuasiKeyTableau.reading_word)
    return out


def weight_of(t: QuasiKeyTableau) -> tuple[int, ...]:
    """Number of occurrences of each entry 1..n."""
    w = [0] * len(t.shape)
    for row in t.rows:
        for v in row:
            w[v - 1] += 1
    return tuple(w)


def quasi_key_polynomial(alpha: Sequence[int]) -> Polynomial:
    return Polynomial(len(alpha), ((weight_of(t), 1) for t in enumerate_qkt(alpha)))


def key_polynomial_quasikey(alpha: Sequence[int]) -> Polynomial:
    """kappa_alpha as the sum of quasi-key polynomials over Qlswap(alpha)."""
    total = Polynomial.zero(len(alpha))
    for beta in qlswap(alpha):
        total = total + quasi_key_polynomial(beta)
    return total


def count_low_entries_above(t: QuasiKeyTableau, b: int) -> int:
    """Number of cells strictly above row b holding an entry at most b."""
    n = len(t.shape)
    if not 1 <= b <= n:
        raise IndexError(f"b={b} outside 1..{n}")
    return sum(1 for r, row in enumerate(t.rows, start=1) if r > b for v in row if v <= b)
