import pytest

from gridband import BACKEND
from gridband.backend import csr_adjacency, kernels, neighbor_masks, python_kernels
from gridband.graphs import (
    Graph,
    complete,
    complete_bipartite,
    cycle,
    double_wheel_axis,
    grid,
    path,
    wheel,
)
from gridband.numbering import (
    bandwidth_of_numbering,
    boundary_profile,
    count_edges_longer_than,
)
from gridband.solvers import (
    Budget,
    Status,
    bandwidth_decision,
    brk_complete_formula,
    density_lower_bound,
    diameter_lower_bound,
    exact_bandwidth,
    min_long_edges,
    reduction_by_deletion,
    reduction_number,
    vertex_isoperimetric,
)

from oracles import brute_bandwidth, brute_min_long, brute_vi

SMALL_GRAPHS = [
    path(5),
    cycle(6),
    complete(5),
    wheel(7),
    grid(2, 2),
    grid(4, 2),
    grid(3, 2),
    complete_bipartite(3, 2),
]


# ------------------------------------------------------------------- decision


def test_bandwidth_decision_examples():
    assert bandwidth_decision(grid(3, 3), 2) == "no"
    assert bandwidth_decision(grid(3, 3), 3) == "yes"
    assert bandwidth_decision(path(6), 1) == "yes"
    assert bandwidth_decision(cycle(6), 1) == "no"
    assert bandwidth_decision(complete(5), 3) == "no"
    assert bandwidth_decision(complete(5), 4) == "yes"


def test_bandwidth_decision_budget_exhaustion():
    assert bandwidth_decision(grid(4, 4), 3, Budget(max_nodes=5)) == "unknown"


def test_bandwidth_decision_rejects_negative():
    with pytest.raises(ValueError):
        bandwidth_decision(path(3), -1)


# ------------------------------------------------------------- exact bandwidth


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_exact_bandwidth_square_grids(n):
    out = exact_bandwidth(grid(n, n))
    assert out.value == (n if n > 1 else 0)
    assert out.status is Status.OPTIMAL
    assert bandwidth_of_numbering(grid(n, n), out.witness) == out.value


def test_exact_bandwidth_rect_grids():
    for m, n in [(5, 2), (7, 3), (6, 4)]:
        out = exact_bandwidth(grid(m, n))
        assert out.value == n
        assert out.status is Status.OPTIMAL


def test_exact_bandwidth_known_families():
    assert exact_bandwidth(path(9)).value == 1
    assert exact_bandwidth(cycle(8)).value == 2
    assert exact_bandwidth(complete(6)).value == 5
    assert exact_bandwidth(wheel(7)).value == 3
    assert exact_bandwidth(complete_bipartite(3, 3)).value == 4


def test_exact_bandwidth_matches_oracle_on_corpus():
    for g in SMALL_GRAPHS:
        out = exact_bandwidth(g)
        assert out.status is Status.OPTIMAL
        assert out.value == brute_bandwidth(g)
        assert bandwidth_of_numbering(g, out.witness) == out.value


def test_exact_bandwidth_edgeless_and_disconnected():
    out = exact_bandwidth(Graph.from_edges(3, []))
    assert out.value == 0 and out.status is Status.OPTIMAL
    two_paths = Graph.from_edges(4, [(1, 2), (3, 4)])
    assert exact_bandwidth(two_paths).value == 1


def test_exact_bandwidth_budget_exhaustion_reports_bracket():
    out = exact_bandwidth(grid(4, 4), Budget(max_nodes=5))
    assert out.status is Status.UNKNOWN
    assert out.witness is None
    assert out.lower is not None and out.lower <= 4 <= out.upper


def test_exact_bandwidth_is_deterministic():
    a = exact_bandwidth(wheel(9))
    b = exact_bandwidth(wheel(9))
    assert (a.value, a.nodes_expanded, a.witness) == (b.value, b.nodes_expanded, b.witness)


# ---------------------------------------------------------------------- bounds


def test_diameter_lower_bound_examples():
    assert diameter_lower_bound(grid(3, 3)) == 2
    assert diameter_lower_bound(path(9)) == 1
    assert diameter_lower_bound(complete(5)) == 4
    assert diameter_lower_bound(double_wheel_axis()) == 5
    with pytest.raises(ValueError):
        diameter_lower_bound(path(1))


def test_density_lower_bound_examples():
    assert density_lower_bound(complete(6)) == 5
    assert density_lower_bound(complete(6).delete_edges([(1, 2)])) == 4
    assert density_lower_bound(path(6)) == 1
    assert density_lower_bound(Graph.from_edges(3, [])) == 0
    assert density_lower_bound(grid(3, 3)) == 2


def test_lower_bounds_never_exceed_bandwidth():
    for g in SMALL_GRAPHS:
        bw = brute_bandwidth(g)
        assert density_lower_bound(g) <= bw
        if g.vertex_count >= 2:
            assert diameter_lower_bound(g) <= bw


# ---------------------------------------------------------------- min long edges


def test_min_long_edges_matches_oracle_all_thresholds():
    for g in SMALL_GRAPHS:
        for t in range(g.vertex_count):
            out = min_long_edges(g, t)
            assert out.status is Status.OPTIMAL
            assert out.value == brute_min_long(g, t)
            assert count_edges_longer_than(g, out.witness, t) == out.value


def test_min_long_edges_zero_threshold_counts_all_edges():
    g = cycle(5)
    assert min_long_edges(g, g.vertex_count - 1).value == 0
    with pytest.raises(ValueError):
        min_long_edges(g, -1)


def test_min_long_edges_budget_exhaustion_keeps_incumbent():
    out = min_long_edges(grid(4, 4), 3, Budget(max_nodes=5))
    assert out.status is Status.UPPER_BOUND
    assert count_edges_longer_than(grid(4, 4), out.witness, 3) == out.value


# ------------------------------------------------------------ reduction numbers


def test_reduction_number_examples():
    assert reduction_number(grid(2, 2), 1).value == 1
    assert reduction_number(grid(3, 3), 1).value == 2
    assert reduction_number(grid(3, 3), 2).value == 4
    assert reduction_number(complete(5), 1).value == 1
    assert reduction_number(complete(5), 2).value == 3
    assert reduction_number(wheel(7), 1).value == 3


def test_reduction_number_witness_certifies_value():
    g = grid(3, 3)
    out = reduction_number(g, 1)
    assert count_edges_longer_than(g, out.witness, 2) == out.value


def test_reduction_number_matches_complete_formula():
    for n in range(2, 7):
        for k in range(1, n):
            assert reduction_number(complete(n), k).value == brk_complete_formula(n, k)


def test_reduction_number_rejects_bad_k():
    with pytest.raises(ValueError):
        reduction_number(grid(3, 3), 0)
    with pytest.raises(ValueError):
        reduction_number(grid(3, 3), 4)
    with pytest.raises(ValueError):
        reduction_number(Graph.from_edges(3, []), 1)


def test_brk_complete_formula_validation():
    assert brk_complete_formula(6, 5) == 15
    with pytest.raises(ValueError):
        brk_complete_formula(5, 5)


# ---------------------------------------------------------- reduction by deletion


def test_reduction_by_deletion_examples():
    out = reduction_by_deletion(grid(3, 3), 1)
    assert out.value == 2 and out.status is Status.OPTIMAL
    g = grid(3, 3).delete_edges(out.witness)
    assert bandwidth_of_numbering(g, exact_bandwidth(g).witness) <= 2
    assert reduction_by_deletion(grid(2, 2), 1).value == 1
    assert reduction_by_deletion(complete(4), 1).value == 1


def test_reduction_by_deletion_never_below_reduction_number():
    for g in [grid(2, 2), grid(3, 2), complete(4), wheel(6)]:
        assert reduction_by_deletion(g, 1).value >= reduction_number(g, 1).value


# --------------------------------------------------------- vertex isoperimetric


def test_vertex_isoperimetric_examples():
    assert vertex_isoperimetric(path(6)).value == 1
    assert vertex_isoperimetric(cycle(6)).value == 2
    assert vertex_isoperimetric(complete(5)).value == 4
    for n in (2, 3, 4):
        assert vertex_isoperimetric(grid(n, n)).value == n


def test_vertex_isoperimetric_matches_oracle():
    for g in [path(5), cycle(5), grid(3, 2), wheel(6), complete_bipartite(3, 2)]:
        out = vertex_isoperimetric(g)
        assert out.value == brute_vi(g)
        assert max(boundary_profile(g, out.witness)) == out.value


def test_vertex_isoperimetric_witness_for_grid4_minus_edge():
    from gridband.constructions import vi_example_board

    _, edge = vi_example_board()
    g = grid(4, 4).delete_edges([edge])
    out = vertex_isoperimetric(g)
    assert out.value == 3
    assert max(boundary_profile(g, out.witness)) == 3


def test_vertex_isoperimetric_cap():
    with pytest.raises(ValueError):
        vertex_isoperimetric(grid(5, 5))
    assert vertex_isoperimetric(grid(5, 4), cap=20).value == 4


def test_vi_is_a_bandwidth_lower_bound():
    for g in SMALL_GRAPHS:
        assert vertex_isoperimetric(g).value <= brute_bandwidth(g)


# ------------------------------------------------------------- backend parity


def _kernel_pair_cases():
    return [
        (grid(3, 3), 2),
        (grid(3, 3), 3),
        (wheel(7), 3),
        (complete(5), 4),
        (cycle(6), 2),
    ]


@pytest.mark.parametrize("g,b", _kernel_pair_cases())
def test_backends_agree_on_bandwidth_decisions(g, b):
    flat, ptr = csr_adjacency(g)
    got = kernels.decide_bandwidth(g.vertex_count, flat, ptr, b, 10**7, 0.0)
    ref = python_kernels.decide_bandwidth(g.vertex_count, flat, ptr, b, 10**7, 0.0)
    assert got[0] == ref[0]
    assert got[1] == ref[1]  # identical branch order, identical node counts
    assert list(got[2] or []) == list(ref[2] or [])


@pytest.mark.parametrize("g,t", [(grid(3, 3), 2), (wheel(7), 2), (complete(5), 2)])
def test_backends_agree_on_min_long_search(g, t):
    flat, ptr = csr_adjacency(g)
    args = (g.vertex_count, flat, ptr, t, g.edge_count + 1, 10**7, 0.0)
    got = kernels.min_long_edges_search(*args)
    ref = python_kernels.min_long_edges_search(*args)
    assert got[:3] == ref[:3]
    assert list(got[3] or []) == list(ref[3] or [])


@pytest.mark.parametrize("g", [path(4), grid(3, 2), wheel(6)])
def test_backends_agree_on_vi_tables(g):
    masks = neighbor_masks(g)
    assert bytes(kernels.vi_table(g.vertex_count, masks)) == bytes(
        python_kernels.vi_table(g.vertex_count, masks)
    )


def test_active_backend_is_reported():
    assert BACKEND in {"compiled", "python"}
