"""Deterministic graph generators: extremal constructions and seeded random families.

All randomness comes from SplitMix64 below, so every generator is a pure
function of its arguments and produces identical graphs on any platform.
"""

from __future__ import annotations

from collections import deque

from .graph import Edge, Graph, GraphError

_MASK64 = (1 << 64) - 1


class SplitMix64:
    """SplitMix64 generator (Steele, Lea, Flood 2014).

    state := state + 0x9E3779B97F4A7C15 (mod 2^64), output mixed with two
    xor-shift-multiply rounds.  Chosen for portability: the algorithm is a
    dozen lines of 64-bit arithmetic, reproducible in any language.
    """

    __slots__ = ("state",)

    def __init__(self, seed: int):
        self.state = seed & _MASK64

    def next_u64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def below(self, bound: int) -> int:
        """Uniform draw from [0, bound) by rejection (no modulo bias)."""
        if bound <= 0:
            raise ValueError(f"bound must be positive, got {bound}")
        threshold = (1 << 64) % bound
        while True:
            r = self.next_u64()
            if r >= threshold:
                return r % bound

    def shuffle(self, items: list) -> None:
        """In-place Fisher-Yates shuffle."""
        for i in range(len(items) - 1, 0, -1):
            j = self.below(i + 1)
            items[i], items[j] = items[j], items[i]


def gen_k33plus() -> Graph:
    """K_{3,3} with one edge subdivided: 7 vertices, 10 edges, nu_s = 1.

    Sides {0,1,2} and {3,4,5}; the edge 0-3 is replaced by the path 0-6-3.
    The order-7 graph whose ceil(n/6) = 2 overshoot forces the n33plus
    correction term in the subcubic guarantee.
    """
    edges = [(a, b) for a in (0, 1, 2) for b in (3, 4, 5) if (a, b) != (0, 3)]
    edges += [(0, 6), (3, 6)]
    return Graph(7, edges)


def gen_extremal_cubic() -> Graph:
    """Cubic graph on 30 vertices and 45 edges with nu_s = 5 = ceil(45/9).

    Four disjoint copies of the subdivided-K33 block (vertices 7k..7k+6) plus
    adjacent hubs 28 and 29; hub 28 absorbs the degree-2 vertices of copies
    0 and 1, hub 29 those of copies 2 and 3.  Tight for both the m/9 and the
    n/6 guarantees.
    """
    base = gen_k33plus()
    edges: list[Edge] = []
    for k in range(4):
        off = 7 * k
        edges.extend((u + off, v + off) for u, v in base.edges)
    edges += [(6, 28), (13, 28), (20, 29), (27, 29), (28, 29)]
    return Graph(30, edges)


def gen_c5_blowup(delta: int) -> Graph:
    """C5 blowup: five independent sets of size delta/2, consecutive classes
    fully joined.  delta must be even and >= 4.  The result is delta-regular
    of order 5*delta/2 with nu_s = 1 (every two edges conflict).
    """
    if delta < 4 or delta % 2:
        raise GraphError(f"delta must be even and >= 4, got {delta}")
    s = delta // 2
    return Graph(5 * s, _blowup_edges([s] * 5))


def _blowup_edges(sizes: list[int]) -> list[Edge]:
    starts = [0]
    for sz in sizes:
        starts.append(starts[-1] + sz)
    classes = [list(range(starts[i], starts[i + 1])) for i in range(len(sizes))]
    edges = []
    k = len(sizes)
    for i in range(k):
        for u in classes[i]:
            for v in classes[(i + 1) % k]:
                edges.append((u, v))
    return edges


def gen_odd_regular_extremal(delta: int) -> tuple[Graph, list[str]]:
    """Delta-regular graph of order 10*delta with nu_s = 5, for odd delta >= 3.

    Write delta = 2r + 1.  The block G0 is a C5 blowup with class sizes
    (r+1, r+1, r, r, r): its class-3 vertices have degree delta - 1, all
    others degree delta.  Four disjoint blocks plus adjacent hubs u, v; u is
    joined to every degree-(delta-1) vertex of blocks 0 and 1, v to those of
    blocks 2 and 3.  Any attachment bijection yields the same graph up to
    isomorphism; the one used is recorded in the returned comment lines.

    For delta = 3 the block is the subdivided-K33 graph and the result is a
    relabeling of gen_extremal_cubic().
    """
    if delta < 3 or delta % 2 == 0:
        raise GraphError(f"delta must be odd and >= 3, got {delta}")
    r = (delta - 1) // 2
    sizes = [r + 1, r + 1, r, r, r]
    block_n = sum(sizes)
    block_edges = _blowup_edges(sizes)
    # class 3 of each block holds the degree-(delta-1) vertices
    class3_start = 2 * (r + 1) + r
    low_deg = list(range(class3_start, class3_start + r))
    edges: list[Edge] = []
    for k in range(4):
        off = k * block_n
        edges.extend((u + off, v + off) for u, v in block_edges)
    hub_u = 4 * block_n
    hub_v = hub_u + 1
    comments = [f"odd-regular extremal construction, delta={delta}"]
    for k, hub in ((0, hub_u), (1, hub_u), (2, hub_v), (3, hub_v)):
        targets = [t + k * block_n for t in low_deg]
        edges.extend((hub, t) for t in targets)
        comments.append(
            f"hub {hub} -> block {k} vertices {','.join(map(str, targets))}"
        )
    edges.append((hub_u, hub_v))
    return Graph(4 * block_n + 2, edges), comments


def gen_random_bounded_degree(
    n: int, target_m: int, max_degree: int, seed: int, attempt_factor: int = 20
) -> Graph:
    """Random simple graph by attempt-limited edge insertion under a degree cap.

    Draws endpoint pairs from SplitMix64(seed); an attempt is kept when it is
    not a loop, not a duplicate, and both endpoints have degree below
    max_degree.  Stops after target_m accepted edges or
    attempt_factor * (target_m + 1) attempts, so m <= target_m and near-full
    degree sequences simply come out sparser.
    """
    if n < 0:
        raise GraphError(f"negative vertex count {n}")
    if max_degree < 1:
        raise GraphError(f"max_degree must be >= 1, got {max_degree}")
    below = SplitMix64(seed).below
    adj: list[set[int]] = [set() for _ in range(n)]
    degree = [0] * n
    edges: list[Edge] = []
    attempts = attempt_factor * (target_m + 1)
    while len(edges) < target_m and attempts > 0 and n >= 2:
        attempts -= 1
        u = below(n)
        v = below(n)
        if u == v or v in adj[u]:
            continue
        if degree[u] >= max_degree or degree[v] >= max_degree:
            continue
        adj[u].add(v)
        adj[v].add(u)
        degree[u] += 1
        degree[v] += 1
        edges.append((u, v))
    return Graph(n, edges)


def gen_random_subcubic(n: int, target_m: int, seed: int) -> Graph:
    """Random subcubic graph (degree cap 3); see gen_random_bounded_degree."""
    return gen_random_bounded_degree(n, target_m, 3, seed)


def gen_random_cubic(n: int, seed: int, max_attempts: int = 1000) -> Graph:
    """Random cubic graph via the pairing model with rejection.

    Three stubs per vertex are shuffled and paired consecutively; an attempt
    is rejected wholesale if any pair is a loop or duplicate edge.  The
    acceptance rate tends to e^-2, independent of n.  Raises GraphError when
    n is odd, n < 4, or max_attempts rejections occur.
    """
    if n < 4 or n % 2:
        raise GraphError(f"cubic graphs need even n >= 4, got {n}")
    rng = SplitMix64(seed)
    for _ in range(max_attempts):
        stubs = [v for v in range(n) for _ in range(3)]
        rng.shuffle(stubs)
        seen: set[Edge] = set()
        ok = True
        for i in range(0, 3 * n, 2):
            u, v = stubs[i], stubs[i + 1]
            if u == v:
                ok = False
                break
            key = (u, v) if u < v else (v, u)
            if key in seen:
                ok = False
                break
            seen.add(key)
        if ok:
            return Graph(n, sorted(seen))
    raise GraphError(f"no simple cubic pairing found in {max_attempts} attempts")


def gen_random_girth6(n: int, max_degree: int, seed: int) -> Graph:
    """Random graph of girth >= 6 under a degree cap.

    Edge insertion as in gen_random_bounded_degree, but a candidate u-v is
    also rejected unless the current distance between u and v is at least 5
    (checked by a depth-4 BFS), so every created cycle has length >= 6.
    Attempt limit: 10 * n * max_degree.
    """
    if n < 0:
        raise GraphError(f"negative vertex count {n}")
    if max_degree < 1:
        raise GraphError(f"max_degree must be >= 1, got {max_degree}")
    rng = SplitMix64(seed)
    adj: list[list[int]] = [[] for _ in range(n)]
    edges: list[Edge] = []
    for _ in range(10 * n * max_degree):
        if n < 2:
            break
        u = rng.below(n)
        v = rng.below(n)
        if u == v:
            continue
        if len(adj[u]) >= max_degree or len(adj[v]) >= max_degree:
            continue
        if _within_distance4(adj, u, v):
            continue
        adj[u].append(v)
        adj[v].append(u)
        edges.append((u, v))
    return Graph(n, edges)


def _within_distance4(adj: list[list[int]], u: int, v: int) -> bool:
    dist = {u: 0}
    queue = deque((u,))
    while queue:
        x = queue.popleft()
        d = dist[x]
        if d == 4:
            continue
        for w in adj[x]:
            if w not in dist:
                if w == v:
                    return True
                dist[w] = d + 1
                queue.append(w)
    return v in dist


def gen_random_forest(n: int, seed: int, attach_percent: int = 75) -> Graph:
    """Random labeled forest by sequential attachment.

    Vertex v >= 1 attaches to a uniformly random earlier vertex with
    probability attach_percent/100, otherwise starts a new tree.  Degrees
    are unbounded (hubs are likely), which exercises the forest guarantee at
    varying max degree.
    """
    if n < 0:
        raise GraphError(f"negative vertex count {n}")
    if not 0 <= attach_percent <= 100:
        raise GraphError(f"attach_percent must be in 0..100, got {attach_percent}")
    rng = SplitMix64(seed)
    edges = []
    for v in range(1, n):
        if rng.below(100) < attach_percent:
            edges.append((rng.below(v), v))
    return Graph(n, edges)
