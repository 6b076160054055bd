"""Vertex numberings and everything measured on them."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property

from .graphs import Graph


@dataclass(frozen=True)
class Numbering:
    """Bijection from vertex ids to labels 1..n; ``label[0]`` is unused."""

    label: tuple[int, ...]

    def __post_init__(self):
        n = len(self.label) - 1
        if n < 1 or self.label[0] != 0:
            raise ValueError("label array must be 1-based with a 0 sentinel at index 0")
        if sorted(self.label[1:]) != list(range(1, n + 1)):
            raise ValueError("labels are not a bijection onto [1, n]")

    @staticmethod
    def from_labels(labels: dict[int, int] | list[int]) -> "Numbering":
        """From a {vertex: label} dict or a 0-based list (labels[i] = label of i+1)."""
        if isinstance(labels, dict):
            n = len(labels)
            arr = [0] * (n + 1)
            for v, lab in labels.items():
                arr[v] = lab
            return Numbering(tuple(arr))
        return Numbering((0, *labels))

    @staticmethod
    def identity(n: int) -> "Numbering":
        return Numbering(tuple(range(n + 1)))

    @property
    def size(self) -> int:
        return len(self.label) - 1

    def of(self, v: int) -> int:
        return self.label[v]

    @cached_property
    def inverse(self) -> tuple[int, ...]:
        inv = [0] * (self.size + 1)
        for v in range(1, self.size + 1):
            inv[self.label[v]] = v
        return tuple(inv)

    def vertex_of(self, lab: int) -> int:
        return self.inverse[lab]

    def reversed(self) -> "Numbering":
        n = self.size
        return Numbering((0, *(n + 1 - self.label[v] for v in range(1, n + 1))))


@dataclass(frozen=True)
class LengthProfile:
    """Histogram of induced edge lengths; max_length is the numbering's bandwidth."""

    counts: dict[int, int]
    max_length: int


def _check_sizes(g: Graph, nu: Numbering):
    if g.vertex_count != nu.size:
        raise ValueError(
            f"numbering of size {nu.size} does not fit graph on {g.vertex_count} vertices"
        )


def edge_length(g: Graph, nu: Numbering, u: int, v: int) -> int:
    _check_sizes(g, nu)
    if not g.has_edge(u, v):
        raise ValueError(f"({u},{v}) is not an edge")
    return abs(nu.of(u) - nu.of(v))


def bandwidth_of_numbering(g: Graph, nu: Numbering) -> int:
    _check_sizes(g, nu)
    lab = nu.label
    return max((abs(lab[u] - lab[v]) for u, v in g.edges()), default=0)


def count_edges_longer_than(g: Graph, nu: Numbering, t: int) -> int:
    _check_sizes(g, nu)
    lab = nu.label
    return sum(1 for u, v in g.edges() if abs(lab[u] - lab[v]) > t)


def length_profile(g: Graph, nu: Numbering) -> LengthProfile:
    _check_sizes(g, nu)
    lab = nu.label
    counts: dict[int, int] = {}
    for u, v in g.edges():
        d = abs(lab[u] - lab[v])
        counts[d] = counts.get(d, 0) + 1
    return LengthProfile(counts, max(counts) if counts else 0)


def boundary_profile(g: Graph, nu: Numbering) -> list[int]:
    """Entry k = number of vertices labelled in [k] with a neighbor labelled > k."""
    _check_sizes(g, nu)
    n = g.vertex_count
    lab = nu.label
    out = [0] * (n + 1)
    for k in range(1, n):
        out[k] = sum(
            1
            for v in range(1, n + 1)
            if lab[v] <= k and any(lab[w] > k for w in g.adjacency[v])
        )
    return out
