"""Independent reference implementations for cross-checking.

Everything here is deliberately naive: plain enumeration with no shared
code paths beyond the Graph container and the matching validity checker,
so that agreement with the library is meaningful evidence.
"""

from itertools import combinations, permutations
from typing import Optional

from strongmatch import Graph, ReductionTrace, verify_induced_matching


def girth_by_enumeration(g: Graph) -> Optional[int]:
    """Shortest cycle length by trying every vertex sequence; n <= 8 only."""
    assert g.n <= 8, "enumeration girth is factorial; keep graphs tiny"
    for k in range(3, g.n + 1):
        for subset in combinations(range(g.n), k):
            first = subset[0]
            for perm in permutations(subset[1:]):
                if perm[0] > perm[-1]:
                    continue  # same cycle traversed backwards
                cyc = (first, *perm)
                if all(g.has_edge(cyc[i], cyc[(i + 1) % k]) for i in range(k)):
                    return k
    return None


def max_induced_matching_by_subsets(g: Graph) -> int:
    """Largest valid edge subset, checked only via verify_induced_matching."""
    m = g.m
    assert m <= 16, "subset enumeration is exponential; keep graphs tiny"
    for r in range(min(m, g.n // 2), 0, -1):
        for subset in combinations(g.edges, r):
            if verify_induced_matching(g, subset) is None:
                return r
    return 0


_K33PLUS_REF_EDGES = frozenset(
    [
        (0, 4), (0, 5), (1, 3), (1, 4), (1, 5),
        (2, 3), (2, 4), (2, 5), (0, 6), (3, 6),
    ]
)


def is_k33plus_by_isomorphism(g: Graph, component) -> bool:
    """Exhaustive isomorphism test against a hand-built reference K33+."""
    comp = sorted(component)
    if len(comp) != 7:
        return False
    local = {v: i for i, v in enumerate(comp)}
    sub_edges = set()
    for v in comp:
        for w in g.adj[v]:
            if w in local and w > v:
                sub_edges.add((local[v], local[w]))
    if len(sub_edges) != 10:
        return False
    for perm in permutations(range(7)):
        mapped = {tuple(sorted((perm[u], perm[v]))) for u, v in sub_edges}
        if mapped == _K33PLUS_REF_EDGES:
            return True
    return False


def replay_trace(g: Graph, trace: ReductionTrace) -> list:
    """Re-execute a reduction trace step by step, checking its bookkeeping.

    Verifies that removed vertices are alive when removed, matched edges
    vanish with their own step, the recorded isolated counts match what the
    deletions actually isolate, and every vertex is accounted for by the
    end.  Returns the accumulated matching.
    """
    n = g.n
    alive = [bool(g.adj[v]) for v in range(n)]  # engine drops isolated up front
    matching = []
    for step in trace.steps:
        removed = set(step.removed)
        for v in removed:
            assert alive[v], f"vertex {v} removed twice"
        for u, v in step.added:
            assert u in removed and v in removed
            matching.append((u, v))
        for v in removed:
            alive[v] = False
        iso = [
            w
            for w in range(n)
            if alive[w] and g.adj[w] and not any(alive[x] for x in g.adj[w])
        ]
        assert len(iso) == step.isolated_created, (
            f"step {step.rule}: recorded {step.isolated_created} isolated, "
            f"replay found {iso}"
        )
        for w in iso:
            alive[w] = False
    assert not any(alive), "trace left vertices unconsumed"
    return matching
