"""Exact desk-scale solvers: bandwidth, minimum over-length edge counts,
bandwidth reduction numbers and vertex-isoperimetric numbers."""

from __future__ import annotations

import itertools
import time
from dataclasses import dataclass
from enum import Enum

from . import constructions
from .backend import NO, UNKNOWN, YES, csr_adjacency, kernels, neighbor_masks
from .graphs import DisconnectedGraphError, Graph, diameter
from .numbering import Numbering, count_edges_longer_than


class Status(str, Enum):
    OPTIMAL = "optimal"
    UPPER_BOUND = "upper_bound"
    UNKNOWN = "unknown"


@dataclass(frozen=True)
class Budget:
    max_nodes: int = 10**8
    wall_clock: float | None = None  # seconds

    def __post_init__(self):
        if self.max_nodes < 1:
            raise ValueError("max_nodes must be positive")


@dataclass
class SearchOutcome:
    value: int
    status: Status
    witness: object  # Numbering, edge tuple, or None
    nodes_expanded: int
    elapsed: float
    lower: int | None = None
    upper: int | None = None


class _Tracker:
    """Shared node/wall-clock budget across the decision calls of one solve."""

    def __init__(self, budget: Budget):
        self.left = budget.max_nodes
        self.deadline = (
            time.monotonic() + budget.wall_clock if budget.wall_clock else 0.0
        )
        self.used = 0
        self.start = time.perf_counter()

    def charge(self, nodes: int):
        self.left -= nodes
        self.used += nodes

    @property
    def exhausted(self) -> bool:
        if self.left <= 0:
            return True
        return bool(self.deadline and time.monotonic() > self.deadline)

    @property
    def elapsed(self) -> float:
        return time.perf_counter() - self.start


def _labels_from_positions(positions) -> Numbering:
    return Numbering.from_labels([p + 1 for p in positions])


def _positions_from_numbering(nu: Numbering) -> list[int]:
    return [nu.label[v] - 1 for v in range(1, nu.size + 1)]


def _decide(g: Graph, b: int, tracker: _Tracker):
    flat, ptr = csr_adjacency(g)
    status, nodes, positions = kernels.decide_bandwidth(
        g.vertex_count, flat, ptr, b, max(tracker.left, 0), tracker.deadline
    )
    tracker.charge(nodes)
    witness = _labels_from_positions(positions) if status == YES else None
    return status, witness


def bandwidth_decision(g: Graph, b: int, budget: Budget = Budget()) -> str:
    """"yes" iff some numbering of g has bandwidth <= b; "unknown" on budget
    exhaustion."""
    if b < 0:
        raise ValueError("b must be nonnegative")
    status, _ = _decide(g, b, _Tracker(budget))
    return {YES: "yes", NO: "no", UNKNOWN: "unknown"}[status]


def diameter_lower_bound(g: Graph) -> int:
    """bandwidth >= ceil((v - 1) / diameter) for connected graphs."""
    if g.vertex_count < 2:
        raise ValueError("need at least 2 vertices")
    d = diameter(g)
    return -((g.vertex_count - 1) // -d)


def density_lower_bound(g: Graph) -> int:
    """Largest v - k forced by the edge count alone; 0 when no k qualifies."""
    v, e = g.vertex_count, g.edge_count
    for k in range(1, v):
        if e > v * (v - 1) // 2 - k * (k + 1) // 2:
            return v - k
    return 0


def _static_lower_bound(g: Graph) -> int:
    lb = density_lower_bound(g)
    if g.vertex_count >= 2:
        try:
            lb = max(lb, diameter_lower_bound(g))
        except DisconnectedGraphError:
            pass
    return lb


def exact_bandwidth(g: Graph, budget: Budget = Budget()) -> SearchOutcome:
    tracker = _Tracker(budget)
    if g.edge_count == 0:
        return SearchOutcome(
            0, Status.OPTIMAL, Numbering.identity(g.vertex_count), 0, tracker.elapsed
        )
    b = max(_static_lower_bound(g), 1)
    while True:
        status, witness = _decide(g, b, tracker)
        if status == YES:
            return SearchOutcome(
                b, Status.OPTIMAL, witness, tracker.used, tracker.elapsed
            )
        if status == UNKNOWN:
            return SearchOutcome(
                b,
                Status.UNKNOWN,
                None,
                tracker.used,
                tracker.elapsed,
                lower=b,
                upper=g.vertex_count - 1,
            )
        b += 1


def _grid_incumbent(g: Graph, t: int) -> tuple[int, Numbering]:
    """Best known numbering for a grid from the explicit constructions."""
    _, m, n = g.family
    candidates = [constructions.down_diagonal_lex(m, n)]
    for k in range(1, (n - 1) // 2 + 1):
        candidates.append(constructions.modified_board_numbering(m, n, k).numbering)
    if m == n and n >= 3:
        candidates.append(constructions.nonadjacent_reduction_numbering(n).numbering)
    best = None
    for nu in candidates:
        c = count_edges_longer_than(g, nu, t)
        if best is None or c < best[0]:
            best = (c, nu)
    return best


def min_long_edges(
    g: Graph, t: int, budget: Budget = Budget(), initial=None
) -> SearchOutcome:
    """Minimum, over all numberings, of the number of edges longer than t."""
    if t < 0:
        raise ValueError("t must be nonnegative")
    tracker = _Tracker(budget)
    if initial is None:
        if g.family and g.family[0] == "grid":
            initial = _grid_incumbent(g, t)
        else:
            nu = Numbering.identity(g.vertex_count)
            initial = (count_edges_longer_than(g, nu, t), nu)
    inc_value, inc_numbering = initial
    flat, ptr = csr_adjacency(g)
    best, proven, nodes, positions = kernels.min_long_edges_search(
        g.vertex_count, flat, ptr, t, inc_value, max(tracker.left, 0), tracker.deadline
    )
    tracker.charge(nodes)
    witness = _labels_from_positions(positions) if positions is not None else inc_numbering
    status = Status.OPTIMAL if proven else Status.UPPER_BOUND
    return SearchOutcome(
        best, status, witness, tracker.used, tracker.elapsed, lower=0, upper=best
    )


def _bandwidth_for_reduction(g: Graph, k: int, tracker: _Tracker) -> int:
    bw = exact_bandwidth(g, Budget(max(tracker.left, 1)))
    tracker.charge(bw.nodes_expanded)
    if bw.status is not Status.OPTIMAL:
        raise RuntimeError("budget too small to establish the exact bandwidth")
    if bw.value == 0:
        raise ValueError("bandwidth cannot be reduced")
    if not 1 <= k <= bw.value:
        raise ValueError(f"k must be in [1, {bw.value}], got {k}")
    return bw.value


def reduction_number(g: Graph, k: int, budget: Budget = Budget()) -> SearchOutcome:
    """Minimum count of edges longer than b - k over all numberings."""
    tracker = _Tracker(budget)
    b = _bandwidth_for_reduction(g, k, tracker)
    out = min_long_edges(g, b - k, Budget(max(tracker.left, 1), None))
    tracker.charge(out.nodes_expanded)
    out.nodes_expanded = tracker.used
    out.elapsed = tracker.elapsed
    return out


def _promoted_deletion_sets(g: Graph, target: int, f: int):
    """Construction long-edge sets worth trying first, deterministically."""
    if not (g.family and g.family[0] == "grid"):
        return []
    _, m, n = g.family
    reports = []
    kk = n - target
    if m >= n > 2 * kk >= 2:
        reports.append(constructions.modified_board_numbering(m, n, kk))
    if m == n and n >= 3 and target == n - 1:
        reports.append(constructions.nonadjacent_reduction_numbering(n))
    out = []
    for rep in reports:
        edges = tuple(sorted(e for e, _ in rep.long_edges))
        if len(edges) == f and edges not in out:
            out.append(edges)
    return out


def reduction_by_deletion(g: Graph, k: int, budget: Budget = Budget()) -> SearchOutcome:
    """Smallest edge set whose deletion brings the bandwidth down to b - k."""
    tracker = _Tracker(budget)
    b = _bandwidth_for_reduction(g, k, tracker)
    target = b - k
    edges = g.edges()
    for f in range(1, len(edges) + 1):
        promoted = _promoted_deletion_sets(g, target, f)
        promoted_set = set(promoted)
        rest = (
            fs for fs in itertools.combinations(edges, f) if fs not in promoted_set
        )
        for fs in itertools.chain(promoted, rest):
            status, witness = _decide(g.delete_edges(fs), target, tracker)
            if status == YES:
                return SearchOutcome(
                    f, Status.OPTIMAL, tuple(fs), tracker.used, tracker.elapsed
                )
            if status == UNKNOWN:
                return SearchOutcome(
                    f,
                    Status.UNKNOWN,
                    None,
                    tracker.used,
                    tracker.elapsed,
                    lower=f,
                    upper=None,
                )
    raise AssertionError("deleting all edges always reaches bandwidth 0")


def vertex_isoperimetric(g: Graph, cap: int = 20) -> SearchOutcome:
    """Exact vertex-isoperimetric number by DP over all vertex subsets."""
    n = g.vertex_count
    if n > cap:
        raise ValueError(f"vertex count {n} exceeds the subset-DP cap {cap}")
    start = time.perf_counter()
    masks = neighbor_masks(g)
    table = kernels.vi_table(n, masks)
    full = (1 << n) - 1
    value = table[full]
    # rebuild one optimal numbering: peel off the vertex keeping f smallest
    order = []
    s = full
    while s:
        pick = None
        m = s
        while m:
            v = (m & -m).bit_length() - 1
            m &= m - 1
            if table[s ^ (1 << v)] <= value:
                pick = v
                break
        order.append(pick)
        s ^= 1 << pick
    labels = {v + 1: len(order) - i for i, v in enumerate(order)}
    return SearchOutcome(
        value,
        Status.OPTIMAL,
        Numbering.from_labels(labels),
        full,
        time.perf_counter() - start,
    )


def brk_complete_formula(n: int, k: int) -> int:
    """Closed form for the k-th reduction number of the complete graph."""
    if not 1 <= k <= n - 1:
        raise ValueError(f"need 1 <= k <= n-1, got (n,k)=({n},{k})")
    return k * (k + 1) // 2
