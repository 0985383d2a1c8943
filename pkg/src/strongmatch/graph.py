"""Graph core: immutable undirected graphs, file formats, structural queries.

Vertices are dense 0-based integer ids.  Graphs are simple (no loops, no
parallel edges) and immutable after construction; every algorithm in this
package iterates vertices in ascending id and neighbors in sorted order so
that results are reproducible for a fixed input labeling.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Optional, Sequence

Edge = tuple[int, int]


class GraphError(ValueError):
    """Invalid graph construction or a precondition violation."""


class GraphParseError(GraphError):
    """Malformed input file; carries the 1-based line number."""

    def __init__(self, message: str, line: Optional[int] = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


def normalize_edge(u: int, v: int) -> Edge:
    """Return the unordered pair (u, v) with the smaller id first."""
    return (u, v) if u < v else (v, u)


class Graph:
    """Simple undirected graph with a fixed vertex set 0..n-1.

    ``adj[v]`` is a sorted tuple of neighbors; ``edges`` is the sorted tuple
    of normalized (min, max) pairs.  Construction validates ids, rejects
    loops and duplicate edges, and freezes the structure.
    """

    __slots__ = ("n", "adj", "edges")

    def __init__(self, n: int, edges: Iterable[Edge]):
        if n < 0:
            raise GraphError(f"negative vertex count {n}")
        lists: list[list[int]] = [[] for _ in range(n)]
        normalized = []
        for u, v in edges:
            if u == v:
                raise GraphError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) outside vertex range 0..{n - 1}")
            normalized.append(normalize_edge(u, v))
            lists[u].append(v)
            lists[v].append(u)
        normalized.sort()
        for i in range(1, len(normalized)):
            if normalized[i] == normalized[i - 1]:
                raise GraphError(f"duplicate edge {normalized[i]}")
        self.n = n
        self.adj: tuple[tuple[int, ...], ...] = tuple(
            tuple(sorted(nbrs)) for nbrs in lists
        )
        self.edges: tuple[Edge, ...] = tuple(normalized)

    @property
    def m(self) -> int:
        return len(self.edges)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def degrees(self) -> list[int]:
        return [len(nbrs) for nbrs in self.adj]

    def neighbors(self, v: int) -> tuple[int, ...]:
        return self.adj[v]

    def has_edge(self, u: int, v: int) -> bool:
        if not (0 <= u < self.n and 0 <= v < self.n):
            return False
        # neighbor tuples are short in bounded-degree graphs; linear scan wins
        return v in self.adj[u]

    def max_degree(self) -> int:
        return max((len(nbrs) for nbrs in self.adj), default=0)

    def min_degree(self) -> int:
        return min((len(nbrs) for nbrs in self.adj), default=0)

    def isolated_count(self) -> int:
        return sum(1 for nbrs in self.adj if not nbrs)

    def is_cubic(self) -> bool:
        return self.n > 0 and all(len(nbrs) == 3 for nbrs in self.adj)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.edges == other.edges

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def connected_components(g: Graph) -> list[list[int]]:
    """Components as sorted vertex lists, ordered by their smallest vertex."""
    seen = bytearray(g.n)
    adj = g.adj
    out: list[list[int]] = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = 1
        comp = [s]
        queue = deque((s,))
        while queue:
            v = queue.popleft()
            for w in adj[v]:
                if not seen[w]:
                    seen[w] = 1
                    comp.append(w)
                    queue.append(w)
        comp.sort()
        out.append(comp)
    return out


def girth(g: Graph) -> Optional[int]:
    """Length of a shortest cycle, or None for acyclic graphs.

    BFS from every vertex; the first non-tree edge seen from root s gives a
    closed walk of length dist[a] + dist[b] + 1 which never undercuts the
    girth, and for s on a shortest cycle the estimate is exact, so the
    minimum over all roots is the girth.
    """
    n = g.n
    adj = g.adj
    best: Optional[int] = None
    dist = [0] * n
    stamp = [0] * n
    parent = [0] * n
    for s in range(n):
        if best == 3:
            break
        gen = s + 1
        stamp[s] = gen
        dist[s] = 0
        parent[s] = -1
        queue = deque((s,))
        while queue:
            v = queue.popleft()
            dv = dist[v]
            if best is not None and 2 * dv + 1 >= best:
                break
            for w in adj[v]:
                if stamp[w] != gen:
                    stamp[w] = gen
                    dist[w] = dv + 1
                    parent[w] = v
                    queue.append(w)
                elif w != parent[v]:
                    cand = dv + dist[w] + 1
                    if best is None or cand < best:
                        best = cand
    return best


def is_k33plus(g: Graph, component: Sequence[int]) -> bool:
    """Test whether a component of g is K33+ (K_{3,3} with one edge subdivided).

    The target graph has 7 vertices, 10 edges, degree multiset {3,3,3,3,3,3,2};
    the degree-2 vertex u sits on the subdivided edge between branch vertices
    a1 and b1.  The check verifies that exact structure, which determines the
    graph completely.

    Raises GraphError if ``component`` is not a connected component of g.
    """
    comp = sorted(component)
    if not comp:
        raise GraphError("empty component")
    actual = _component_of(g, comp[0])
    if comp != actual:
        raise GraphError("vertex set is not a connected component of the graph")
    if len(comp) != 7:
        return False
    degs = sorted(g.degree(v) for v in comp)
    if degs != [2, 3, 3, 3, 3, 3, 3]:
        return False
    u = next(v for v in comp if g.degree(v) == 2)
    a1, b1 = g.adj[u]
    if g.has_edge(a1, b1):
        return False
    side_b = [w for w in g.adj[a1] if w != u]
    side_a = [w for w in g.adj[b1] if w != u]
    if len(side_b) != 2 or len(side_a) != 2:
        return False
    six = {a1, b1, *side_a, *side_b}
    if len(six) != 6 or u in six:
        return False
    a_all = tuple(sorted([a1, *side_a]))
    b_all = tuple(sorted([b1, *side_b]))
    for a in side_a:
        if g.adj[a] != b_all:
            return False
    for b in side_b:
        if g.adj[b] != a_all:
            return False
    return True


def _component_of(g: Graph, s: int) -> list[int]:
    seen = {s}
    queue = deque((s,))
    while queue:
        v = queue.popleft()
        for w in g.adj[v]:
            if w not in seen:
                seen.add(w)
                queue.append(w)
    return sorted(seen)


@dataclass(frozen=True)
class BoundReport:
    """Exact invariants of a graph plus every applicable size guarantee.

    ``girth`` is None for acyclic graphs.  A bound field is None when its
    hypothesis fails; ``reasons`` maps each absent field to a short
    explanation ("not cubic", "girth < 6", "not forest").  Rational fields
    are exact Fractions; integer bounds are ceilings.
    """

    n: int
    m: int
    isolated: int
    n33plus: int
    max_degree: int
    girth: Optional[int]
    thm2_bound: int
    thm1_bound: Optional[int]
    prop1_bound: Optional[int]
    greedy_general_bound: Fraction
    greedy_forest_bound: Optional[Fraction]
    reasons: Mapping[str, str] = field(default_factory=dict)


def _ceil_div(a: int, b: int) -> int:
    return -(-a // b)


def count_invariants(g: Graph) -> BoundReport:
    """Compute the BoundReport for g.

    thm2_bound = ceil((n - isolated - n33plus) / 6) is the guarantee met by
    the reduction engine on subcubic inputs, where n33plus counts components
    isomorphic to K33+.  thm1_bound = ceil(m / 9) applies to cubic graphs,
    prop1_bound = ceil((n - isolated) / (D^2/4 + D + 1)) to graphs of girth
    at least 6 (D = max degree), and the greedy bounds m / (2D(D-1) + 1) and
    m / (2D - 1) to arbitrary graphs and forests respectively.
    """
    n = g.n
    m = g.m
    comps = connected_components(g)
    isolated = sum(1 for c in comps if len(c) == 1)
    n33 = sum(1 for c in comps if len(c) == 7 and is_k33plus(g, c))
    dmax = g.max_degree()
    gi = girth(g)
    reasons: dict[str, str] = {}

    thm2 = _ceil_div(n - isolated - n33, 6) if n else 0

    if g.is_cubic():
        thm1: Optional[int] = _ceil_div(m, 9)
    else:
        thm1 = None
        reasons["thm1_bound"] = "not cubic"

    if gi is None or gi >= 6:
        # (n - i) / (D^2/4 + D + 1) == 4 (n - i) / (D + 2)^2
        prop1: Optional[int] = _ceil_div(4 * (n - isolated), (dmax + 2) ** 2)
    else:
        prop1 = None
        reasons["prop1_bound"] = "girth < 6"

    greedy_general = Fraction(m, 2 * dmax * (dmax - 1) + 1)

    if gi is None:
        forest_bound: Optional[Fraction] = (
            Fraction(m, 2 * dmax - 1) if dmax >= 1 else Fraction(0)
        )
    else:
        forest_bound = None
        reasons["greedy_forest_bound"] = "not forest"

    return BoundReport(
        n=n,
        m=m,
        isolated=isolated,
        n33plus=n33,
        max_degree=dmax,
        girth=gi,
        thm2_bound=thm2,
        thm1_bound=thm1,
        prop1_bound=prop1,
        greedy_general_bound=greedy_general,
        greedy_forest_bound=forest_bound,
        reasons=reasons,
    )


def verify_induced_matching(
    g: Graph, matching: Iterable[Edge]
) -> Optional[tuple[int, int]]:
    """Check that ``matching`` is an induced matching of g.

    Returns None when valid, otherwise one violating vertex pair: (x, x) when
    two edges share vertex x, or an adjacent pair (x, y) with x and y on
    distinct matching edges.  Edges not present in g raise GraphError.
    Runs in O(n + m) independent of matching size.
    """
    edges = sorted(normalize_edge(u, v) for u, v in matching)
    owner: dict[int, int] = {}
    for idx, (u, v) in enumerate(edges):
        if not g.has_edge(u, v):
            raise GraphError(f"matching edge {(u, v)} is not an edge of the graph")
        for x in (u, v):
            if x in owner:
                return (x, x)
            owner[x] = idx
    for idx, (u, v) in enumerate(edges):
        for x in (u, v):
            for w in g.adj[x]:
                j = owner.get(w)
                if j is not None and j != idx:
                    return (x, w)
    return None


# ---------------------------------------------------------------------------
# file formats


def parse_graph(text: str, fmt: str = "edge-list") -> Graph:
    """Parse a graph from text in 'edge-list' or 'dimacs' format.

    edge-list: '#' comment lines, an optional first directive "n <count>",
    then "u v" lines with 0-based ids.  Without a directive the vertex count
    is max id + 1 (0 for an empty file).

    dimacs: header "p edge <n> <m>", edge lines "e <u> <v>" with 1-based ids
    (renumbered to 0-based); 'c' comment lines are accepted.  The declared
    edge count must match.

    Duplicate edges, loops and out-of-range ids are errors (GraphParseError
    with the offending line number); silent repair would hide corpus bugs.
    """
    if fmt == "edge-list":
        return _parse_edge_list(text)
    if fmt == "dimacs":
        return _parse_dimacs(text)
    raise GraphParseError(f"unknown format {fmt!r}")


def _edge_lines(text: str) -> Iterator[tuple[int, str]]:
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        yield lineno, line


def _parse_edge_list(text: str) -> Graph:
    declared: Optional[int] = None
    pairs: list[tuple[int, int, int]] = []  # (u, v, lineno)
    first = True
    for lineno, line in _edge_lines(text):
        parts = line.split()
        if first and parts[0] == "n":
            first = False
            if len(parts) != 2:
                raise GraphParseError("directive must be 'n <count>'", lineno)
            try:
                declared = int(parts[1])
            except ValueError:
                raise GraphParseError(f"bad vertex count {parts[1]!r}", lineno) from None
            if declared < 0:
                raise GraphParseError(f"negative vertex count {declared}", lineno)
            continue
        first = False
        if len(parts) != 2:
            raise GraphParseError(f"expected 'u v', got {line!r}", lineno)
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise GraphParseError(f"non-integer vertex id in {line!r}", lineno) from None
        if u < 0 or v < 0:
            raise GraphParseError(f"negative vertex id in {line!r}", lineno)
        pairs.append((u, v, lineno))
    if declared is None:
        n = 1 + max((max(u, v) for u, v, _ in pairs), default=-1)
    else:
        n = declared
    return _build_checked(n, pairs)


def _parse_dimacs(text: str) -> Graph:
    n: Optional[int] = None
    declared_m = 0
    pairs: list[tuple[int, int, int]] = []
    for lineno, line in _edge_lines(text):
        parts = line.split()
        kind = parts[0]
        if kind == "c":
            continue
        if kind == "p":
            if n is not None:
                raise GraphParseError("second problem line", lineno)
            if len(parts) != 4 or parts[1] != "edge":
                raise GraphParseError(f"expected 'p edge <n> <m>', got {line!r}", lineno)
            try:
                n, declared_m = int(parts[2]), int(parts[3])
            except ValueError:
                raise GraphParseError(f"bad problem line {line!r}", lineno) from None
            if n < 0 or declared_m < 0:
                raise GraphParseError(f"negative counts in {line!r}", lineno)
            continue
        if kind == "e":
            if n is None:
                raise GraphParseError("edge line before problem line", lineno)
            if len(parts) != 3:
                raise GraphParseError(f"expected 'e <u> <v>', got {line!r}", lineno)
            try:
                u, v = int(parts[1]), int(parts[2])
            except ValueError:
                raise GraphParseError(f"non-integer vertex id in {line!r}", lineno) from None
            if u < 1 or v < 1:
                raise GraphParseError(f"dimacs ids are 1-based, got {line!r}", lineno)
            pairs.append((u - 1, v - 1, lineno))
            continue
        raise GraphParseError(f"unknown line kind {kind!r}", lineno)
    if n is None:
        raise GraphParseError("missing problem line")
    if len(pairs) != declared_m:
        raise GraphParseError(
            f"problem line declares {declared_m} edges, found {len(pairs)}"
        )
    return _build_checked(n, pairs)


def _build_checked(n: int, pairs: list[tuple[int, int, int]]) -> Graph:
    seen: dict[Edge, int] = {}
    for u, v, lineno in pairs:
        if u == v:
            raise GraphParseError(f"loop at vertex {u}", lineno)
        if u >= n or v >= n:
            raise GraphParseError(
                f"vertex id {max(u, v)} outside declared range 0..{n - 1}", lineno
            )
        key = normalize_edge(u, v)
        if key in seen:
            raise GraphParseError(
                f"duplicate edge {key} (first seen on line {seen[key]})", lineno
            )
        seen[key] = lineno
    return Graph(n, list(seen))


def write_edge_list(g: Graph, comments: Sequence[str] = ()) -> str:
    """Serialize g bit-exactly: comments, "n <count>" directive, sorted edges.

    Every line is newline-terminated.  Parsing the result reproduces g.
    """
    lines = [f"# {c}" if c else "#" for c in comments]
    lines.append(f"n {g.n}")
    lines.extend(f"{u} {v}" for u, v in g.edges)
    return "\n".join(lines) + "\n"
