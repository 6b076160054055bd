"""Explicit grid numberings: the down-diagonal order, the cut-and-flip variant
that leaves only m-n+2k over-length edges, and the two-long-edge square boards.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .graphs import grid_vertex
from .numbering import Numbering

Cell = tuple[int, int]  # (row, col), 1-based, rows counted bottom-up


def _diag_order(cells) -> list[Cell]:
    """Anti-diagonals in increasing order; top-left to bottom-right within each."""
    return sorted(cells, key=lambda rc: (rc[0] + rc[1], -rc[0]))


@dataclass(frozen=True)
class StaircaseBoard:
    """Cell set whose rows are contiguous column intervals."""

    cells: frozenset[Cell]

    def __post_init__(self):
        for r, (lo, hi, count) in self._row_spans().items():
            if count != hi - lo + 1:
                raise ValueError(f"row {r} is not a contiguous column interval")

    def _row_spans(self) -> dict[int, tuple[int, int, int]]:
        spans: dict[int, tuple[int, int, int]] = {}
        for r, c in self.cells:
            lo, hi, count = spans.get(r, (c, c, 0))
            spans[r] = (min(lo, c), max(hi, c), count + 1)
        return spans

    def rows(self) -> list[int]:
        return sorted({r for r, _ in self.cells})

    def row_interval(self, r: int) -> tuple[int, int]:
        lo, hi, _ = self._row_spans()[r]
        return lo, hi

    def diagonal_length(self, d: int) -> int:
        return sum(1 for r, c in self.cells if r + c - 1 == d)

    def max_diagonal_length(self) -> int:
        return max(self.diagonal_length(d) for d in {r + c - 1 for r, c in self.cells})

    def ranks(self) -> dict[Cell, int]:
        """Down-diagonal enumeration of the cells, 1-based."""
        return {cell: i + 1 for i, cell in enumerate(_diag_order(self.cells))}

    def rank_rows(self) -> dict[int, list[int]]:
        ranks = self.ranks()
        out: dict[int, list[int]] = {}
        for r in self.rows():
            lo, hi = self.row_interval(r)
            out[r] = [ranks[(r, c)] for c in range(lo, hi + 1)]
        return out


@dataclass(frozen=True)
class ConstructionReport:
    numbering: Numbering
    long_edges: tuple[tuple[tuple[int, int], int], ...]  # ((u, v), length)
    threshold: int


def _grid_long_edges(nu: Numbering, m: int, n: int, t: int):
    """All lattice edges of grid(m, n) longer than t under nu, as ((u,v), len)."""
    arr = label_array(nu, m, n)
    horiz = np.abs(np.diff(arr, axis=1))
    vert = np.abs(np.diff(arr, axis=0))
    out = []
    for r, c in zip(*np.nonzero(horiz > t)):
        u = grid_vertex(int(r) + 1, int(c) + 1, m)
        out.append(((u, u + 1), int(horiz[r, c])))
    for r, c in zip(*np.nonzero(vert > t)):
        u = grid_vertex(int(r) + 1, int(c) + 1, m)
        out.append(((u, u + m), int(vert[r, c])))
    return tuple(sorted(out))


def down_diagonal_lex(m: int, n: int) -> Numbering:
    """Number grid(m, n) along anti-diagonals; bandwidth n whenever m >= 2."""
    if not m >= n >= 1:
        raise ValueError(f"need m >= n >= 1, got ({m},{n})")
    cells = [(r, c) for r in range(1, n + 1) for c in range(1, m + 1)]
    labels = {grid_vertex(r, c, m): i + 1 for i, (r, c) in enumerate(_diag_order(cells))}
    return Numbering.from_labels(labels)


def _flip(m: int, k: int):
    """Reflection folding the cut-out block back across its upper-right hinge."""

    def phi(cell: Cell) -> Cell:
        r, c = cell
        return (m + k + 1 - c, m + k + 1 - r)

    return phi


def cut_block(m: int, n: int, k: int) -> set[Cell]:
    """The k x (m-n+k+1) bottom-right block that gets cut out and flipped."""
    return {(r, c) for r in range(1, k + 1) for c in range(n - k, m + 1)}


def modified_staircase(m: int, n: int, k: int) -> StaircaseBoard:
    if not (m >= n > 2 * k >= 2):
        raise ValueError(f"need m >= n > 2k >= 2, got ({m},{n},{k})")
    block = cut_block(m, n, k)
    phi = _flip(m, k)
    cells = {(r, c) for r in range(1, n + 1) for c in range(1, m + 1)}
    return StaircaseBoard(frozenset((cells - block) | {phi(cell) for cell in block}))


def modified_board_numbering(m: int, n: int, k: int) -> ConstructionReport:
    """Cut-and-flip numbering of grid(m, n): exactly m-n+2k edges longer than n-k."""
    board = modified_staircase(m, n, k)
    ranks = board.ranks()
    block = cut_block(m, n, k)
    phi = _flip(m, k)
    labels = {}
    for r in range(1, n + 1):
        for c in range(1, m + 1):
            cell = (r, c)
            labels[grid_vertex(r, c, m)] = ranks[phi(cell) if cell in block else cell]
    nu = Numbering.from_labels(labels)
    t = n - k
    return ConstructionReport(nu, _grid_long_edges(nu, m, n, t), t)


def expected_long_edge_cells(m: int, n: int, k: int) -> set[frozenset[Cell]]:
    """Where the over-length edges of the cut-and-flip numbering must sit."""
    horiz = {frozenset({(r, n - k - 1), (r, n - k)}) for r in range(1, k + 1)}
    vert = {frozenset({(k, c), (k + 1, c)}) for c in range(n - k, m)}
    return horiz | vert


def adjacent_reduction_numbering(n: int) -> ConstructionReport:
    """Square-grid numbering with two long edges (lengths 5n-7, 3n-4) sharing
    the bottom-row vertex in column n-1."""
    if n < 3:
        raise ValueError(f"need n >= 3, got {n}")
    base = modified_board_numbering(n, n, 1)
    t = n - 1
    return ConstructionReport(base.numbering, _grid_long_edges(base.numbering, n, n, t), t)


def nonadjacent_reduction_numbering(n: int) -> ConstructionReport:
    """Square-grid numbering with two disjoint long edges, lengths 5n-8 and 3n-5.

    The top-left two cells (n,1) and (n,2) are deferred: (n,2) is inserted right
    after the last cell of diagonal n+2 and (n,1) right after the last cell of
    diagonal n+3 (directly after (n,2) when that diagonal is empty, i.e. n = 3).
    """
    if n < 3:
        raise ValueError(f"need n >= 3, got {n}")
    deferred = {(n, 1), (n, 2)}
    cells = [(r, c) for r in range(1, n + 1) for c in range(1, n + 1)]
    seq = [cell for cell in _diag_order(cells) if cell not in deferred]

    def insert_after_diag(cell: Cell, d: int):
        i = len(seq)
        while i > 0 and seq[i - 1][0] + seq[i - 1][1] - 1 > d:
            i -= 1
        seq.insert(i, cell)

    insert_after_diag((n, 2), n + 2)
    if any(c[0] + c[1] - 1 == n + 3 for c in seq):
        insert_after_diag((n, 1), n + 3)
    else:
        seq.insert(seq.index((n, 2)) + 1, (n, 1))
    labels = {grid_vertex(r, c, n): i + 1 for i, (r, c) in enumerate(seq)}
    nu = Numbering.from_labels(labels)
    t = n - 1
    return ConstructionReport(nu, _grid_long_edges(nu, n, n, t), t)


# bottom-up rows of the 4x4 board whose single weak spot is the (4,1)-(4,2) edge
_VI_BOARD_ROWS = ((1, 3, 6, 10), (2, 5, 9, 11), (4, 8, 12, 14), (7, 13, 15, 16))


def vi_example_board() -> tuple[Numbering, tuple[int, int]]:
    """The fixed grid(4,4) numbering whose frontier drops to 3 once the edge
    joining the cells labelled 7 and 13 is removed."""
    labels = {}
    for r, row in enumerate(_VI_BOARD_ROWS, start=1):
        for c, lab in enumerate(row, start=1):
            labels[grid_vertex(r, c, 4)] = lab
    edge = (grid_vertex(4, 1, 4), grid_vertex(4, 2, 4))
    return Numbering.from_labels(labels), edge


def label_array(nu: Numbering, m: int, n: int) -> np.ndarray:
    """Grid labels as an (n, m) array, row 1 first (bottom-up)."""
    if nu.size != m * n:
        raise ValueError(f"numbering of size {nu.size} does not fit a {m}x{n} grid")
    return np.asarray(nu.label[1:], dtype=np.int64).reshape(n, m)


def grid_edge_lengths(arr: np.ndarray) -> np.ndarray:
    """Induced lengths of all lattice edges of a label array, as a flat vector."""
    horiz = np.abs(np.diff(arr, axis=1)).ravel()
    vert = np.abs(np.diff(arr, axis=0)).ravel()
    return np.concatenate([horiz, vert])
