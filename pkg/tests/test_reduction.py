import pytest

from strongmatch import (
    Graph,
    GraphError,
    BudgetExceededError,
    ReductionStep,
    ReductionTrace,
    count_invariants,
    exact_strong_matching_number,
    find_induced_matching_subcubic,
    format_trace,
    gen_extremal_cubic,
    gen_k33plus,
    gen_random_cubic,
    gen_random_subcubic,
    ledger_check,
    verify_induced_matching,
)

from bruteforce import replay_trace
from util import (
    make_circular_ladder,
    make_cycle,
    make_dodecahedron,
    make_path,
    make_petersen,
)


def run_checked(g: Graph):
    """Reduce g and assert every certificate: validity, size bound, ledger,
    and an independent step-by-step replay."""
    matching, trace = find_induced_matching_subcubic(g)
    assert verify_induced_matching(g, matching) is None
    assert len(matching) >= count_invariants(g).thm2_bound
    assert ledger_check(trace) == (True, None)
    assert sorted(replay_trace(g, trace)) == matching
    assert trace.matching == matching
    return matching, trace


class TestFrozenTraces:
    def test_extremal_cubic(self):
        g = gen_extremal_cubic()
        matching, trace = run_checked(g)
        assert len(matching) == 5
        assert matching == [(1, 4), (6, 28), (8, 11), (15, 18), (21, 25)]
        assert [s.rule for s in trace.steps] == [
            "R1", "R1", "R1", "COMPONENT-BRUTE",
        ]

    def test_k33plus_component(self):
        g = gen_k33plus()
        matching, trace = run_checked(g)
        assert matching == [(1, 4)]
        assert len(trace.steps) == 1
        step = trace.steps[0]
        assert step.rule == "COMPONENT-K33PLUS"
        assert step.removed == (0, 1, 2, 3, 4, 5, 6)
        assert step.isolated_created == 0

    def test_c5(self):
        matching, trace = run_checked(make_cycle(5))
        assert matching == [(0, 1)]
        assert [s.rule for s in trace.steps] == ["COMPONENT-BRUTE"]

    def test_petersen(self, petersen):
        matching, _ = run_checked(petersen)
        assert len(matching) == 3

    def test_p13(self):
        matching, trace = run_checked(make_path(13))
        assert matching == [(0, 1), (3, 4), (6, 7), (9, 10)]
        assert trace.steps[0] == ReductionStep(
            rule="R2", removed=(0, 1, 2), added=((0, 1),), isolated_created=0
        )
        assert trace.steps[1].rule == "COMPONENT-BRUTE"

    def test_single_edge(self):
        matching, trace = run_checked(Graph(2, [(0, 1)]))
        assert matching == [(0, 1)]
        assert [s.rule for s in trace.steps] == ["COMPONENT-BRUTE"]

    def test_empty_graph(self):
        matching, trace = run_checked(Graph(0, []))
        assert matching == []
        assert trace.steps == ()

    def test_isolated_vertices_only(self):
        matching, trace = run_checked(Graph(4, []))
        assert matching == []
        assert trace.steps == ()


def pendant_siblings_lollipop() -> Graph:
    # two leaves on hub 2, tail 2-3-4-5 into a C8; the only degree-1
    # classification available is the shared-neighbor pair
    edges = [(0, 2), (1, 2), (2, 3), (3, 4), (4, 5)]
    edges += [(5 + i, 5 + i + 1) for i in range(7)]
    edges += [(5, 12)]
    return Graph(13, edges)


def pendants_at_distance_four() -> Graph:
    # leaves 0 and 4 joined by the path 0-1-2-3-4; anchors 1 and 3 hang on
    # a C8, so neither leaf sees a degree-2 neighbor or a sibling
    edges = [(0, 1), (1, 2), (2, 3), (3, 4), (1, 5), (3, 6), (5, 6)]
    edges += [(6, 7), (7, 8), (8, 9), (9, 10), (10, 11), (11, 12), (12, 5)]
    return Graph(13, edges)


def pendant_on_c12() -> Graph:
    edges = [(i, (i + 1) % 12) for i in range(12)] + [(0, 12)]
    return Graph(13, edges)


def petersen_with_triangle_gadget() -> Graph:
    # replace the Petersen edge 0-1 with a triangle 10-11-12 attached via
    # 11-0 and 12-1: vertex 10 is the only degree-2 vertex and sits on a
    # triangle; girth 5 elsewhere keeps every earlier rule silent
    pet = make_petersen()
    edges = [e for e in pet.edges if e != (0, 1)]
    edges += [(10, 11), (10, 12), (11, 12), (11, 0), (12, 1)]
    return Graph(13, edges)


def ladder_minus_cycle_edge() -> Graph:
    # CL_7 without the outer edge 0-6: vertex 0 keeps neighbors 1 and 7,
    # which share the second common neighbor 8, putting 0 on a 4-cycle
    cl7 = make_circular_ladder(7)
    return Graph(14, [e for e in cl7.edges if e != (0, 6)])


def ladder_minus_rung() -> Graph:
    # CL_7 without the rung 0-7: both degree-2 vertices have two degree-3
    # neighbors and lie on no short cycle
    cl7 = make_circular_ladder(7)
    return Graph(14, [e for e in cl7.edges if e != (0, 7)])


def triangle_capped_ladder() -> Graph:
    # 2x6 grid ladder with triangle caps 12 and 13 joined to each other:
    # cubic, order 14, has triangles, planar (so no subdivided-K33 subgraph)
    k = 6
    edges = [(c, k + c) for c in range(k)]
    for c in range(k - 1):
        edges += [(c, c + 1), (k + c, k + c + 1)]
    edges += [(12, 0), (12, k), (13, k - 1), (13, 2 * k - 1), (12, 13)]
    return Graph(14, edges)


RULE_CASES = [
    ("R2", make_path(13), 4),
    ("R3", pendant_siblings_lollipop(), 4),
    ("R4", pendants_at_distance_four(), 4),
    ("R5", pendant_on_c12(), 4),
    ("R6", make_cycle(14), 4),
    ("R7", petersen_with_triangle_gadget(), 4),
    ("R8", ladder_minus_cycle_edge(), 3),
    ("R9", ladder_minus_rung(), 4),
    ("R10", triangle_capped_ladder(), 3),
    ("R11", make_circular_ladder(7), 3),
    ("R12", make_dodecahedron(), 6),
]


class TestRuleSelection:
    """Each graph is built so that exactly one rule is the highest-priority
    applicable pattern on the first step."""

    @pytest.mark.parametrize("first,g,size", RULE_CASES, ids=[c[0] for c in RULE_CASES])
    def test_first_rule_and_size(self, first, g, size):
        matching, trace = run_checked(g)
        assert trace.steps[0].rule == first
        assert len(matching) == size

    def test_r1_first_on_extremal(self):
        _, trace = run_checked(gen_extremal_cubic())
        assert trace.steps[0].rule == "R1"

    def test_dodecahedron_full_trace(self):
        matching, trace = run_checked(make_dodecahedron())
        assert [s.rule for s in trace.steps] == ["R12", "R5", "COMPONENT-BRUTE"]
        assert matching == [
            (0, 1), (3, 4), (6, 7), (9, 13), (11, 18), (15, 16),
        ]
        first = trace.steps[0]
        assert first.added == ((0, 1),)
        assert first.isolated_created == 0

    def test_every_rule_respects_accounting(self):
        for _, g, _ in RULE_CASES:
            _, trace = find_induced_matching_subcubic(g)
            for step in trace.steps:
                if step.rule.startswith("R"):
                    budget = 6 * len(step.added)
                    assert len(step.removed) + step.isolated_created <= budget


class TestLedgerCheck:
    def test_synthetic_valid_trace(self):
        g = make_cycle(5)
        trace = ReductionTrace(
            original=g,
            steps=(
                ReductionStep("R6", (0, 1, 2, 4), ((0, 1),), 1),
            ),
        )
        assert ledger_check(trace) == (True, None)

    def test_step_without_added_edge(self):
        g = make_cycle(12)
        trace = ReductionTrace(g, (ReductionStep("R6", (0, 1), (), 0),))
        assert ledger_check(trace) == (False, 0)

    def test_step_over_accounting(self):
        g = make_cycle(12)
        steps = (
            ReductionStep("R6", (0, 1, 2, 3, 4, 5, 6), ((0, 1),), 0),
            ReductionStep("R6", (7, 8, 9, 10, 11), ((8, 9),), 0),
        )
        assert ledger_check(ReductionTrace(g, steps)) == (False, 0)

    def test_component_steps_exempt_from_per_step_cap(self):
        # a component rule may consume arbitrarily many vertices per edge;
        # only the global bound applies
        g = make_cycle(5)
        steps = (ReductionStep("COMPONENT-BRUTE", (0, 1, 2, 3, 4), ((0, 1),), 0),)
        assert ledger_check(ReductionTrace(g, steps)) == (True, None)

    def test_duplicate_removed_vertex(self):
        g = make_cycle(12)
        steps = (
            ReductionStep("R6", (0, 1, 2), ((0, 1),), 0),
            ReductionStep("R6", (2, 3, 4), ((3, 4),), 0),
        )
        assert ledger_check(ReductionTrace(g, steps)) == (False, 1)

    def test_added_edge_not_in_graph(self):
        g = make_cycle(12)
        steps = (ReductionStep("R6", (0, 1), ((0, 2),), 0),)
        assert ledger_check(ReductionTrace(g, steps)) == (False, 0)

    def test_added_edge_touches_removed_vertex(self):
        g = make_cycle(12)
        steps = (
            ReductionStep("R6", (0, 1, 2), ((0, 1),), 0),
            ReductionStep("R6", (3, 4, 5), ((2, 3),), 0),
        )
        assert ledger_check(ReductionTrace(g, steps)) == (False, 1)

    def test_global_shortfall(self):
        g = make_cycle(20)  # bound is ceil(20/6) = 4
        steps = (
            ReductionStep("R6", (0, 1, 2), ((0, 1),), 0),
            ReductionStep("R6", (5, 6, 7), ((5, 6),), 0),
        )
        assert ledger_check(ReductionTrace(g, steps)) == (False, None)

    def test_k33plus_component_cancels_bound(self):
        g = gen_k33plus()
        steps = (ReductionStep("COMPONENT-K33PLUS", tuple(range(7)), ((1, 4),), 0),)
        assert ledger_check(ReductionTrace(g, steps)) == (True, None)

    def test_negative_isolated_rejected(self):
        g = make_cycle(12)
        steps = (ReductionStep("R6", (0, 1, 2), ((0, 1),), -1),)
        assert ledger_check(ReductionTrace(g, steps)) == (False, 0)


class TestFormatTrace:
    def test_k33plus_text(self):
        _, trace = find_induced_matching_subcubic(gen_k33plus())
        assert format_trace(trace) == (
            "rule=COMPONENT-K33PLUS removed=0,1,2,3,4,5,6 added=1-4 isolated=0\n"
            "matching=1 bound=1 ok=true\n"
        )

    def test_empty_graph_text(self):
        _, trace = find_induced_matching_subcubic(Graph(0, []))
        assert format_trace(trace) == "matching=0 bound=0 ok=true\n"

    def test_line_count(self):
        _, trace = find_induced_matching_subcubic(make_path(13))
        text = format_trace(trace)
        assert text.endswith("\n")
        lines = text.splitlines()
        assert len(lines) == len(trace.steps) + 1
        assert lines[-1] == "matching=4 bound=3 ok=true"


class TestPreconditionsAndBudget:
    def test_degree_four_rejected(self):
        g = Graph(5, [(0, 1), (0, 2), (0, 3), (0, 4)])
        with pytest.raises(GraphError):
            find_induced_matching_subcubic(g)

    def test_budget_propagates_from_component_oracle(self):
        with pytest.raises(BudgetExceededError):
            find_induced_matching_subcubic(make_petersen(), oracle_budget=0)


class TestDeterminism:
    def test_double_run_identical(self):
        for seed in (3, 14, 159):
            g = gen_random_subcubic(80, 110, seed)
            a = find_induced_matching_subcubic(g)
            b = find_induced_matching_subcubic(g)
            assert a[0] == b[0]
            assert a[1].steps == b[1].steps


class TestRandomized:
    def test_random_subcubic_batch(self):
        for seed in range(200):
            g = gen_random_subcubic(12 + seed % 49, 70, 5000 + seed)
            matching, trace = run_checked(g)
            if g.m <= 25:
                exact, _ = exact_strong_matching_number(g)
                assert len(matching) <= exact

    def test_random_cubic_batch(self):
        for seed in range(40):
            g = gen_random_cubic(14 + 2 * (seed % 20), 6000 + seed)
            matching, _ = run_checked(g)
            m9 = -(-g.m // 9)
            assert len(matching) >= m9

    def test_disconnected_mixture(self):
        # K33+ copy, a path, a cycle and isolated vertices in one graph
        base = gen_k33plus()
        edges = list(base.edges)
        edges += [(u + 7, v + 7) for u, v in make_path(8).edges]
        edges += [(u + 15, v + 15) for u, v in make_cycle(9).edges]
        g = Graph(27, edges)  # vertices 24..26 isolated
        matching, trace = run_checked(g)
        rep = count_invariants(g)
        assert rep.isolated == 3
        assert rep.n33plus == 1
        assert len(matching) >= rep.thm2_bound
