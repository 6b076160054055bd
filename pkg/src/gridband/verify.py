"""Machine checks for every quantitative claim the toolkit implements."""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources

from . import constructions, solvers
from .boards import format_board, format_staircase
from .graphs import grid
from .numbering import boundary_profile, bandwidth_of_numbering, count_edges_longer_than


@dataclass
class SuiteCase:
    case_id: str
    description: str
    provenance: str
    expected: object
    actual: object
    status: str  # pass | fail | unknown


def _case(case_id, description, provenance, expected, actual) -> SuiteCase:
    status = "pass" if expected == actual else "fail"
    return SuiteCase(case_id, description, provenance, expected, actual, status)


def _unknown(case_id, description, provenance, expected) -> SuiteCase:
    return SuiteCase(case_id, description, provenance, expected, None, "unknown")


def load_fixture(name: str) -> str:
    return (resources.files("gridband") / "fixtures" / name).read_text()


def _constructive_cases(max_n: int) -> list[SuiteCase]:
    cases = []
    for n in range(2, max_n + 1):
        for m in range(n, max_n + 1):
            g = grid(m, n)
            nu = constructions.down_diagonal_lex(m, n)
            cases.append(
                _case(
                    f"ddl-bandwidth-{m}x{n}",
                    f"down-diagonal numbering of grid({m},{n}) has bandwidth {n}",
                    "band-count",
                    n,
                    bandwidth_of_numbering(g, nu),
                )
            )
            cases.append(
                _case(
                    f"ddl-full-length-count-{m}x{n}",
                    f"down-diagonal numbering induces 2(n-1)+n(m-n) edges of length {n}",
                    "band-count",
                    2 * (n - 1) + n * (m - n),
                    count_edges_longer_than(g, nu, n - 1),
                )
            )
            for k in range(1, min(5, (n - 1) // 2) + 1):
                rep = constructions.modified_board_numbering(m, n, k)
                cases.append(
                    _case(
                        f"cutflip-long-count-{m}x{n}-k{k}",
                        f"cut-and-flip numbering of grid({m},{n}) has m-n+2k={m - n + 2 * k} "
                        f"edges longer than {n - k}",
                        "cut-flip",
                        m - n + 2 * k,
                        len(rep.long_edges),
                    )
                )
    for n in range(3, max(max_n, 3) + 1):
        adj = constructions.adjacent_reduction_numbering(n)
        cases.append(
            _case(
                f"two-long-adjacent-{n}",
                f"adjacent two-long-edge numbering of grid({n},{n}): lengths 5n-7, 3n-4",
                "two-long",
                {5 * n - 7, 3 * n - 4},
                {length for _, length in adj.long_edges},
            )
        )
        non = constructions.nonadjacent_reduction_numbering(n)
        cases.append(
            _case(
                f"two-long-nonadjacent-{n}",
                f"non-adjacent two-long-edge numbering of grid({n},{n}): lengths 5n-8, 3n-5",
                "two-long",
                {5 * n - 8, 3 * n - 5},
                {length for _, length in non.long_edges},
            )
        )
    board = constructions.modified_staircase(8, 8, 2)
    cases.append(
        _case(
            "fixture-staircase-8x8-k2",
            "cut-and-flip staircase for grid(8,8), k=2 matches the shipped fixture",
            "fixture",
            load_fixture("g8_k2_modified.board"),
            format_staircase(board.rank_rows()),
        )
    )
    cases.append(
        _case(
            "fixture-nonadjacent-6",
            "non-adjacent two-long-edge board for n=6 matches the shipped fixture",
            "fixture",
            load_fixture("n6_nonadjacent.board"),
            format_board(constructions.nonadjacent_reduction_numbering(6).numbering, 6, 6),
        )
    )
    nu, edge = constructions.vi_example_board()
    cases.append(
        _case(
            "fixture-frontier-4x4",
            "frontier of the 4x4 example board drops to 3 once its weak edge is removed",
            "fixture",
            3,
            max(boundary_profile(grid(4, 4).delete_edges([edge]), nu)),
        )
    )
    return cases


def _solver_cases(max_n: int, budget_nodes: int) -> list[SuiteCase]:
    cases = []

    def run(case_id, description, provenance, expected, compute):
        if budget_nodes <= 0:
            cases.append(_unknown(case_id, description, provenance, expected))
            return
        outcome = compute(solvers.Budget(budget_nodes))
        if outcome.status is solvers.Status.OPTIMAL:
            cases.append(_case(case_id, description, provenance, expected, outcome.value))
        else:
            cases.append(_unknown(case_id, description, provenance, expected))

    for n in range(2, min(max_n, 4) + 1):
        run(
            f"bandwidth-grid-{n}",
            f"exact bandwidth of grid({n},{n}) is {n}",
            "solver",
            n,
            lambda b, n=n: solvers.exact_bandwidth(grid(n, n), b),
        )
    if max_n >= 2:
        run(
            "br1-grid-2",
            "one deleted edge suffices for the 4-cycle grid(2,2)",
            "solver",
            1,
            lambda b: solvers.reduction_number(grid(2, 2), 1, b),
        )
    if max_n >= 3:
        run(
            "br1-grid-3",
            "bandwidth reduction number of grid(3,3) is 2",
            "solver",
            2,
            lambda b: solvers.reduction_number(grid(3, 3), 1, b),
        )
    for n in range(2, min(max_n, 4) + 1):
        run(
            f"vi-grid-{n}",
            f"vertex-isoperimetric number of grid({n},{n}) is {n}",
            "solver",
            n,
            lambda b, n=n: solvers.vertex_isoperimetric(grid(n, n)),
        )
    if max_n >= 4:
        _, edge = constructions.vi_example_board()
        run(
            "vi-grid-4-minus-edge",
            "deleting the example edge drops the vertex-isoperimetric number to 3",
            "solver",
            3,
            lambda b: solvers.vertex_isoperimetric(grid(4, 4).delete_edges([edge])),
        )
    from .graphs import complete

    for n in range(3, min(max_n + 2, 5) + 1):
        for k in range(1, 3):
            run(
                f"complete-{n}-minlong-k{k}",
                f"min edges longer than {n - 1 - k} in K_{n} is k(k+1)/2 = "
                f"{solvers.brk_complete_formula(n, k)}",
                "solver",
                solvers.brk_complete_formula(n, k),
                lambda b, n=n, k=k: solvers.min_long_edges(complete(n), n - 1 - k, b),
            )
    return cases


def run_suite(max_n: int = 4, budget_nodes: int = 10**8) -> list[SuiteCase]:
    if max_n < 2:
        raise ValueError("max_n must be at least 2")
    cases = _constructive_cases(max_n) + _solver_cases(max_n, budget_nodes)
    return sorted(cases, key=lambda c: c.case_id)
