"""Board text format: one line per grid row, top row first, labels whitespace-separated."""

from __future__ import annotations

from .graphs import grid_vertex
from .numbering import Numbering


def format_board(nu: Numbering, m: int, n: int) -> str:
    """Render a grid numbering as board text (n lines, top row first)."""
    if nu.size != m * n:
        raise ValueError(f"numbering of size {nu.size} does not fit a {m}x{n} grid")
    lines = []
    for r in range(n, 0, -1):
        lines.append(" ".join(str(nu.of(grid_vertex(r, c, m))) for c in range(1, m + 1)))
    return "\n".join(lines) + "\n"


def parse_board(text: str) -> tuple[int, int, Numbering]:
    """Parse board text; returns (m, n, numbering) for the implied grid(m, n)."""
    rows = [ln.split() for ln in text.splitlines() if ln.strip()]
    if not rows:
        raise ValueError("empty board")
    n = len(rows)
    m = len(rows[0])
    if any(len(row) != m for row in rows):
        raise ValueError("board rows have unequal lengths")
    labels: dict[int, int] = {}
    for i, row in enumerate(rows):
        r = n - i  # file lists the top row first
        for j, tok in enumerate(row):
            labels[grid_vertex(r, j + 1, m)] = int(tok)
    return m, n, Numbering.from_labels(labels)


def format_staircase(rows: dict[int, list[int]]) -> str:
    """Render a staircase board ({row: labels left to right}), top row first."""
    order = sorted(rows, reverse=True)
    return "\n".join(" ".join(str(x) for x in rows[r]) for r in order) + "\n"
