"""Character renderings: boards and permuted-adjacency band structure."""

from __future__ import annotations

from dataclasses import dataclass

from .graphs import Graph
from .numbering import Numbering

# band matrix glyphs: entry within the band, at the threshold, beyond it
WITHIN, AT, BEYOND, EMPTY = "*", "=", "O", "."


@dataclass(frozen=True)
class BandReport:
    lines: list[str]
    max_distance: int
    pairs_at: int  # symmetric pairs at exactly the threshold distance
    pairs_beyond: int  # symmetric pairs strictly beyond it


def render_band(g: Graph, nu: Numbering, distance: int) -> BandReport:
    """Adjacency matrix permuted by the numbering, with its band structure."""
    n = g.vertex_count
    inv = nu.inverse
    lines = []
    max_d = 0
    pairs_at = 0
    pairs_beyond = 0
    for i in range(1, n + 1):
        row = []
        for j in range(1, n + 1):
            if i != j and g.has_edge(inv[i], inv[j]):
                d = abs(i - j)
                max_d = max(max_d, d)
                if d < distance:
                    row.append(WITHIN)
                elif d == distance:
                    row.append(AT)
                    if i < j:
                        pairs_at += 1
                else:
                    row.append(BEYOND)
                    if i < j:
                        pairs_beyond += 1
            else:
                row.append(EMPTY)
        lines.append("".join(row))
    return BandReport(lines, max_d, pairs_at, pairs_beyond)
