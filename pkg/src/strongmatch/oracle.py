"""Exact strong matching number via maximum independent set on the conflict graph.

Two edges of G conflict when they share an endpoint or some endpoint of one
is adjacent to an endpoint of the other; induced matchings of G are exactly
the independent sets of the conflict graph.  Conflict graphs of
bounded-degree graphs are dense, so optima are small and branch-and-bound
with a clique-cover bound terminates quickly.

The solver is capped at m <= 64 edges so node sets fit in one machine-word
bitmask; larger inputs are rejected rather than silently attempted.
"""

from __future__ import annotations

from typing import Optional

from .graph import Edge, Graph, GraphError, connected_components

ORACLE_EDGE_CAP = 64
DEFAULT_BUDGET = 10_000_000


class BudgetExceededError(RuntimeError):
    """Branch-and-bound node budget exhausted before proving optimality."""

    def __init__(self, nodes: int):
        self.nodes = nodes
        super().__init__(f"search budget exhausted after {nodes} nodes")


class ConflictGraph:
    """Conflict structure of the edges of a graph.

    ``nodes[i]`` is the i-th edge of g in lexicographic order and
    ``masks[i]`` is the bitmask of conflicting node indices (excluding i).
    """

    __slots__ = ("nodes", "masks")

    def __init__(self, nodes: tuple[Edge, ...], masks: list[int]):
        self.nodes = nodes
        self.masks = masks

    @property
    def size(self) -> int:
        return len(self.nodes)


def build_conflict_graph(g: Graph) -> ConflictGraph:
    """Conflict graph of g's edges; symmetric, loop-free by construction."""
    edges = g.edges
    incident: list[list[int]] = [[] for _ in range(g.n)]
    for i, (u, v) in enumerate(edges):
        incident[u].append(i)
        incident[v].append(i)
    masks = [0] * len(edges)
    for i, (u, v) in enumerate(edges):
        mask = 0
        # conflicting edges are those with an endpoint in N[u] union N[v]
        for x in (u, v):
            for j in incident[x]:
                mask |= 1 << j
            for w in g.adj[x]:
                for j in incident[w]:
                    mask |= 1 << j
        masks[i] = mask & ~(1 << i)
    return ConflictGraph(edges, masks)


def exact_strong_matching_number(
    g: Graph, budget: int = DEFAULT_BUDGET
) -> tuple[int, list[Edge]]:
    """Maximum induced matching size plus one witness, deterministic.

    Branch-and-bound on the conflict graph: branch on a maximum-degree node
    (ties to the smallest index), include-first; prune with the candidate
    count and a greedy clique-cover bound.  Raises BudgetExceededError when
    more than ``budget`` search nodes are expanded, GraphError for m > 64.
    """
    m = g.m
    if m > ORACLE_EDGE_CAP:
        raise GraphError(f"oracle supports at most {ORACLE_EDGE_CAP} edges, got {m}")
    if m == 0:
        return 0, []
    cg = build_conflict_graph(g)
    masks = cg.masks

    # deterministic greedy start: take nodes in index order when compatible
    best_set = 0
    blocked = 0
    for i in range(m):
        bit = 1 << i
        if not blocked & bit:
            best_set |= bit
            blocked |= bit | masks[i]
    best = best_set.bit_count()

    full = (1 << m) - 1
    nodes_expanded = 0
    # iterative DFS; include-branch pushed last so it is explored first
    stack: list[tuple[int, int, int]] = [(full, 0, 0)]
    while stack:
        cand, size, chosen = stack.pop()
        nodes_expanded += 1
        if nodes_expanded > budget:
            raise BudgetExceededError(nodes_expanded)
        if not cand:
            if size > best:
                best = size
                best_set = chosen
            continue
        k = cand.bit_count()
        if size + k <= best:
            continue
        if size + _clique_cover_bound(cand, masks) <= best:
            continue
        pick = _max_degree_node(cand, masks)
        bit = 1 << pick
        stack.append((cand & ~bit, size, chosen))
        stack.append((cand & ~bit & ~masks[pick], size + 1, chosen | bit))

    witness = [cg.nodes[i] for i in _bits(best_set)]
    return best, sorted(witness)


def _bits(mask: int):
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _max_degree_node(cand: int, masks: list[int]) -> int:
    best_i = -1
    best_d = -1
    for i in _bits(cand):
        d = (masks[i] & cand).bit_count()
        if d > best_d:
            best_d = d
            best_i = i
    return best_i


def _clique_cover_bound(cand: int, masks: list[int]) -> int:
    """Greedy partition of cand into cliques; the clique count bounds the MIS."""
    cliques_mask: list[int] = []
    cliques_common: list[int] = []
    for i in _bits(cand):
        bit = 1 << i
        placed = False
        for c in range(len(cliques_mask)):
            if cliques_common[c] & bit:
                cliques_mask[c] |= bit
                cliques_common[c] &= masks[i]
                placed = True
                break
        if not placed:
            cliques_mask.append(bit)
            cliques_common.append(masks[i])
    return len(cliques_mask)


def exhaustive_strong_matching_number(g: Graph) -> int:
    """Strong matching number by unpruned include/exclude enumeration.

    Independent slow route used to cross-check the branch-and-bound solver:
    no bounding, no branching heuristics, just complete enumeration of edge
    subsets that stay conflict-free, summed over connected components
    (induced matchings of different components are independent).  Practical
    for graphs whose components have few edges (the m <= 25 corpus).
    """
    total = 0
    for comp in connected_components(g):
        if len(comp) < 2:
            continue
        local = {v: i for i, v in enumerate(comp)}
        sub = Graph(
            len(comp),
            [
                (local[u], local[v])
                for (u, v) in g.edges
                if u in local and v in local
            ],
        )
        if sub.m == 0:
            continue
        masks = build_conflict_graph(sub).masks
        total += _enumerate_max(0, (1 << sub.m) - 1, masks)
    return total


def _enumerate_max(size: int, cand: int, masks: list[int]) -> int:
    best = size
    while cand:
        low = cand & -cand
        i = low.bit_length() - 1
        cand &= ~low
        with_i = _enumerate_max(size + 1, cand & ~masks[i], masks)
        if with_i > best:
            best = with_i
    return best
