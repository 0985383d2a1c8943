"""Greedy induced matchings: baselines with weaker but simple guarantees.

Three strategies, each deterministic for a fixed labeling:

  greedy_induced_matching   any graph, size >= ceil(m / (2D(D-1) + 1))
  forest_greedy_induced_matching   forests, size >= ceil(m / (2D - 1))
  girth6_induced_matching   girth >= 6, size >= ceil(4(n - i) / (D + 2)^2)

where D is the maximum degree and i the number of isolated vertices.
"""

from __future__ import annotations

from heapq import heapify, heappop, heappush

from .graph import Edge, Graph, GraphError, connected_components, girth, normalize_edge


def _incident_lists(g: Graph) -> list[list[int]]:
    incident: list[list[int]] = [[] for _ in range(g.n)]
    for i, (u, v) in enumerate(g.edges):
        incident[u].append(i)
        incident[v].append(i)
    return incident


def greedy_induced_matching(g: Graph) -> list[Edge]:
    """Maximal induced matching, repeatedly taking a least-conflicting edge.

    Two edges conflict when they share an endpoint or are joined by an
    edge.  Taking an edge discards at most 2D(D-1) others, so any maximal
    selection has size at least ceil(m / (2D(D-1) + 1)); preferring the
    edge with the fewest live conflicts (ties to the smaller edge id) just
    tends to do better than that floor.
    """
    edges = g.edges
    m = len(edges)
    if m == 0:
        return []
    adj = g.adj
    incident = _incident_lists(g)
    conf: list[list[int]] = []
    for i, (u, v) in enumerate(edges):
        span: set[int] = set()
        for x in (u, v, *adj[u], *adj[v]):
            span.update(incident[x])
        span.discard(i)
        conf.append(list(span))
    cdeg = [len(c) for c in conf]
    alive = bytearray(b"\x01" * m)
    heap = [(cdeg[i], i) for i in range(m)]
    heapify(heap)
    chosen: list[Edge] = []
    while heap:
        d, i = heappop(heap)
        if not alive[i] or d != cdeg[i]:
            continue
        chosen.append(edges[i])
        killed = [j for j in conf[i] if alive[j]]
        killed.append(i)
        for j in killed:
            alive[j] = 0
        for j in killed:
            for t in conf[j]:
                if alive[t]:
                    cdeg[t] -= 1
                    heappush(heap, (cdeg[t], t))
    return sorted(chosen)


def forest_greedy_induced_matching(g: Graph) -> list[Edge]:
    """Bottom-up induced matching in a forest, size >= ceil(m / (2D - 1)).

    Each tree is rooted at its smallest vertex and vertices are processed
    deepest first.  When a vertex still has its parent edge, that edge is
    taken and everything incident to the two closed neighborhoods dies.
    Processing deepest first means all edges strictly below the taken edge
    are already dead, so a step discards at most 1 + 2(D - 1) live edges,
    which gives the stated size.  Raises GraphError when g has a cycle.
    """
    comps = connected_components(g)
    if g.m != g.n - len(comps):
        raise GraphError("forest strategy requires an acyclic graph")
    adj = g.adj
    incident = _incident_lists(g)
    edge_id = {e: i for i, e in enumerate(g.edges)}
    alive = bytearray(b"\x01" * g.m)
    chosen: list[Edge] = []
    depth = [0] * g.n
    parent = [-1] * g.n
    for comp in comps:
        if len(comp) < 2:
            continue
        root = comp[0]
        parent[root] = -1
        depth[root] = 0
        order = [root]
        qi = 0
        while qi < len(order):
            v = order[qi]
            qi += 1
            for w in adj[v]:
                if w != parent[v]:
                    parent[w] = v
                    depth[w] = depth[v] + 1
                    order.append(w)
        order.sort(key=lambda v: (-depth[v], v))
        for v in order:
            p = parent[v]
            if p < 0:
                continue
            i = edge_id[normalize_edge(v, p)]
            if not alive[i]:
                continue
            chosen.append(g.edges[i])
            region = {v, p, *adj[v], *adj[p]}
            for x in region:
                for j in incident[x]:
                    alive[j] = 0
    return sorted(chosen)


def girth6_induced_matching(g: Graph) -> list[Edge]:
    """Induced matching of size >= ceil(4(n - i) / (D + 2)^2), girth >= 6.

    While an end-vertex exists, pick the vertex v with the most pendant
    neighbors (say k of them; ties to the smallest v), match v with its
    smallest pendant neighbor, and delete N[v].  Only pendants hanging off
    N(v) become isolated, at most k per vertex by the choice of v, so the
    step consumes at most (D + 1) + k(D - k) <= (D + 2)^2 / 4 vertices.
    Without end-vertices, take the smallest edge uv and delete N[u] and
    N[v]: at most 2D <= (D + 2)^2 / 4 vertices, and the girth condition
    means nothing becomes isolated.  Raises GraphError when girth < 6.
    """
    gv = girth(g)
    if gv is not None and gv < 6:
        raise GraphError(f"girth-6 strategy requires girth >= 6, got {gv}")
    n = g.n
    adj = g.adj
    deg = g.degrees()
    alive = bytearray(b"\x01" * n) if n else bytearray()
    for v in range(n):
        if deg[v] == 0:
            alive[v] = 0
    kcount = [0] * n
    for v in range(n):
        if alive[v]:
            kcount[v] = sum(1 for w in adj[v] if alive[w] and deg[w] == 1)
    heap = [(-kcount[v], v) for v in range(n) if kcount[v] > 0]
    heapify(heap)
    ptr = 0
    chosen: list[Edge] = []
    while True:
        while heap:
            negk, v = heap[0]
            if alive[v] and kcount[v] == -negk and kcount[v] > 0:
                break
            heappop(heap)
        if heap:
            v = heap[0][1]
            u = min(w for w in adj[v] if alive[w] and deg[w] == 1)
            removal = {v}
            removal.update(w for w in adj[v] if alive[w])
        else:
            while ptr < n and (not alive[ptr] or deg[ptr] == 0):
                ptr += 1
            if ptr == n:
                break
            u = ptr
            v = min(w for w in adj[u] if alive[w])
            removal = {u, v}
            removal.update(w for w in adj[u] if alive[w])
            removal.update(w for w in adj[v] if alive[w])
        chosen.append(normalize_edge(u, v))
        iso = []
        for r in removal:
            for w in adj[r]:
                if alive[w] and w not in removal:
                    for x in adj[w]:
                        if alive[x] and x not in removal:
                            break
                    else:
                        iso.append(w)
        for r in removal:
            alive[r] = 0
        ring1 = set()
        for r in removal:
            for w in adj[r]:
                if alive[w]:
                    deg[w] -= 1
                    ring1.add(w)
        for w in iso:
            alive[w] = 0
            ring1.discard(w)
        touched = set(ring1)
        for w in ring1:
            for x in adj[w]:
                if alive[x]:
                    touched.add(x)
        for t in touched:
            k = sum(1 for w in adj[t] if alive[w] and deg[w] == 1)
            if k != kcount[t]:
                kcount[t] = k
            if k > 0:
                heappush(heap, (-k, t))
    return sorted(chosen)
