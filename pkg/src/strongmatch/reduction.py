"""Reduction engine: induced matchings in subcubic graphs with a certified size.

The engine repeatedly applies local reduction rules, each of which commits
one or two matching edges and deletes a bounded vertex set, until the graph
is empty.  Per committed edge a step consumes at most 6 vertices (deleted
plus newly isolated), which yields the certified output size

    |M| >= ceil((n - isolated - n33plus) / 6)

where n33plus counts components isomorphic to K33+ (K_{3,3} with one edge
subdivided, the unique connected subcubic graph of order 7 with strong
matching number 1); those components contribute their single edge via a
dedicated step.

Per component the engine works as follows: singletons are skipped, K33+
components emit one edge (COMPONENT-K33PLUS), components of order <= 12 are
solved exactly by the oracle (COMPONENT-BRUTE), and larger components go
through rules R1..R12 in fixed priority:

  R1   a K33+ subgraph: match one central edge, delete its six degree-3
       branch vertices (the degree-2 subdivision vertex survives)
  R2   end-vertex u with a degree-2 neighbor v: match uv, delete N[v]
  R3   vertex v adjacent to two end-vertices: match v with the smallest,
       delete N[v]
  R4   end-vertices u1, u2 at distance exactly 4: match u1 and u2 with
       their neighbors v1, v2, delete N[v1] and N[v2]
  R5   end-vertex u with a degree-3 neighbor v: match uv, delete N[v]
  R6   adjacent degree-2 vertices u1, u2: match u1u2, delete both closed
       neighborhoods
  R7   degree-2 vertex u on a triangle u v1 v2: match uv1, delete N[v1]
  R8   degree-2 vertex u on a 4-cycle u v1 w v2: match uv1, delete
       N[v1] and N[u]
  R9   degree-2 vertex u, both neighbors degree 3, no 3- or 4-cycle at u:
       match u with whichever neighbor's deletion leaves at most one
       isolated vertex
  R10  triangle in a now-cubic component: match one triangle edge, delete
       both closed neighborhoods
  R11  4-cycle in a now-cubic component: match the cycle edge whose
       deletion isolates nothing
  R12  cubic component of girth >= 5: match the smallest edge, delete both
       closed neighborhoods

Rule priority is the correctness argument: each rule's bound on the number
of isolated vertices it creates assumes every earlier rule is exhausted.
The order <= 12 threshold similarly precludes the degenerate order-7
components that R1, R8 and R9 would otherwise have to special-case.

Implementation: per-vertex alive flags, dynamic degrees, and per-rule
candidate heaps with lazy revalidation.  After a deletion only vertices
within distance 2 are reclassified; patterns spanning larger distances (R4)
are symmetric, so rechecking the near side suffices.  Candidates for R1,
R10 and R11 are scanned once up front, which is sound because vertex
deletion never creates a subgraph.  Before any rule fires, a capped BFS
probes its component; components that have shrunk to order <= 12 are
diverted to the oracle.  This realizes the per-component recursion of the
scheme above in near-linear total time.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from heapq import heappop, heappush
from typing import NamedTuple, Optional

from .graph import (
    Edge,
    Graph,
    GraphError,
    connected_components,
    is_k33plus,
    normalize_edge,
)
from .oracle import DEFAULT_BUDGET, exact_strong_matching_number

BRUTE_FORCE_THRESHOLD = 12
FALLBACK_THRESHOLD = 30

# rule priorities; FRAG is the internal id for leftover order-2 fragments,
# which are consumed like any other small component
_FRAG = 0
_R1, _R2, _R3, _R4, _R5, _R6, _R7, _R8, _R9, _R10, _R11, _R12 = range(1, 13)
_RULE_NAMES = {
    _R1: "R1", _R2: "R2", _R3: "R3", _R4: "R4", _R5: "R5", _R6: "R6",
    _R7: "R7", _R8: "R8", _R9: "R9", _R10: "R10", _R11: "R11", _R12: "R12",
}


class LedgerViolationError(RuntimeError):
    """A reduction step broke the 6-vertices-per-edge accounting.

    The rule system guarantees this cannot happen; raising instead of
    continuing keeps a bug from silently weakening the size certificate.
    """


@dataclass(frozen=True)
class ReductionStep:
    """One committed step: rule id, sorted deleted vertices, matched edges,
    and the number of vertices the deletion isolated (those are dropped)."""

    rule: str
    removed: tuple[int, ...]
    added: tuple[Edge, ...]
    isolated_created: int


@dataclass(frozen=True)
class ReductionTrace:
    """Full replayable record of a reduction run on ``original``."""

    original: Graph
    steps: tuple[ReductionStep, ...]

    @property
    def matching(self) -> list[Edge]:
        return sorted(e for s in self.steps for e in s.added)


class LedgerResult(NamedTuple):
    """ok, plus the offending step index (None for a global shortfall)."""

    ok: bool
    violation_step: Optional[int]


def find_induced_matching_subcubic(
    g: Graph, oracle_budget: int = DEFAULT_BUDGET
) -> tuple[list[Edge], ReductionTrace]:
    """Induced matching of size >= ceil((n - i - n33plus)/6), with trace.

    Deterministic for a fixed labeling.  Raises GraphError when g has a
    vertex of degree > 3, LedgerViolationError if the internal accounting
    ever fails (theoretically unreachable).
    """
    if g.max_degree() > 3:
        raise GraphError(
            f"reduction requires max degree <= 3, got {g.max_degree()}"
        )
    eng = _Engine(g, oracle_budget)
    eng.run()
    steps = tuple(eng.steps)
    trace = ReductionTrace(original=g, steps=steps)
    return sorted(eng.matching), trace


def ledger_check(trace: ReductionTrace) -> LedgerResult:
    """Audit a trace: per-step accounting plus the global size guarantee.

    Per step: at least one added edge; for rules R1..R12, deleted count plus
    isolated count is at most 6 per added edge; removed sets are pairwise
    disjoint; added edges are graph edges and avoid all previously removed
    vertices.  Globally: total added edges >= ceil((n - i - n33plus)/6),
    recomputed from the original graph.  Component steps are covered by the
    global check (a K33+ step consumes 7 vertices but also cancels one
    n33plus unit).
    """
    g = trace.original
    removed_before: set[int] = set()
    for idx, step in enumerate(trace.steps):
        if len(step.added) < 1 or step.isolated_created < 0:
            return LedgerResult(False, idx)
        if step.rule.startswith("R"):
            if len(step.removed) + step.isolated_created > 6 * len(step.added):
                return LedgerResult(False, idx)
        for v in step.removed:
            if v in removed_before:
                return LedgerResult(False, idx)
        for u, v in step.added:
            if not g.has_edge(u, v):
                return LedgerResult(False, idx)
            if u in removed_before or v in removed_before:
                return LedgerResult(False, idx)
        removed_before.update(step.removed)
    comps = connected_components(g)
    iso = sum(1 for c in comps if len(c) == 1)
    n33 = sum(1 for c in comps if len(c) == 7 and is_k33plus(g, c))
    need = -(-(g.n - iso - n33) // 6)
    total = sum(len(step.added) for step in trace.steps)
    if total < need:
        return LedgerResult(False, None)
    return LedgerResult(True, None)


def format_trace(trace: ReductionTrace) -> str:
    """Serialize a trace, one step per line, ending with a summary line.

    Step lines: ``rule=<id> removed=<ids> added=<u-v,...> isolated=<k>``.
    Summary: ``matching=<size> bound=<thm2> ok=<bool>``.
    """
    lines = []
    for step in trace.steps:
        removed = ",".join(map(str, step.removed))
        added = ",".join(f"{u}-{v}" for u, v in step.added)
        lines.append(
            f"rule={step.rule} removed={removed} added={added} "
            f"isolated={step.isolated_created}"
        )
    g = trace.original
    comps = connected_components(g)
    iso = sum(1 for c in comps if len(c) == 1)
    n33 = sum(1 for c in comps if len(c) == 7 and is_k33plus(g, c))
    need = -(-(g.n - iso - n33) // 6)
    ok = ledger_check(trace).ok
    size = sum(len(step.added) for step in trace.steps)
    lines.append(f"matching={size} bound={need} ok={str(ok).lower()}")
    return "\n".join(lines) + "\n"


class _Engine:
    def __init__(self, g: Graph, oracle_budget: int):
        n = g.n
        self.g = g
        self.adj = g.adj
        self.alive = bytearray(b"\x01" * n) if n else bytearray()
        self.deg = g.degrees()
        self.oracle_budget = oracle_budget
        self.steps: list[ReductionStep] = []
        self.matching: list[Edge] = []
        # heaps[rule] holds candidate anchor vertices, lazily revalidated
        self.heaps: list[list[int]] = [[] for _ in range(12)]
        self.r10_heap: list[int] = []
        self.r11_heap: list[int] = []
        self.r12_ptr = 0
        self.n_deg1 = 0
        self.mark = [0] * n
        self.mark_gen = 0
        self.initial_isolated = 0
        self.initial_n33 = 0

    # -- setup ------------------------------------------------------------

    def run(self) -> None:
        self._setup()
        while self._step_once():
            pass
        total = len(self.matching)
        need = -(-(self.g.n - self.initial_isolated - self.initial_n33) // 6)
        if total < need:
            raise LedgerViolationError(
                f"matching of size {total} falls short of guarantee {need}"
            )

    def _setup(self) -> None:
        g = self.g
        n = g.n
        adj = self.adj
        deg = self.deg
        alive = self.alive
        seen = bytearray(n)
        active: list[int] = []
        for s in range(n):
            if seen[s]:
                continue
            seen[s] = 1
            if deg[s] == 0:
                self.initial_isolated += 1
                alive[s] = 0
                continue
            comp = [s]
            qi = 0
            while qi < len(comp):
                v = comp[qi]
                qi += 1
                for w in adj[v]:
                    if not seen[w]:
                        seen[w] = 1
                        comp.append(w)
            comp.sort()
            if len(comp) <= BRUTE_FORCE_THRESHOLD:
                rule = self._consume_component(comp)
                if rule == "COMPONENT-K33PLUS":
                    self.initial_n33 += 1
            else:
                active.extend(comp)
        active.sort()
        for v in active:
            if deg[v] == 1:
                self.n_deg1 += 1
        on_c4 = self._scan_short_cycles(active)
        heaps = self.heaps
        for v in active:
            d = deg[v]
            if d == 1:
                heappush(heaps[self._classify_deg1(v)], v)
            elif d == 2:
                cls = self._classify_deg2(v)
                if cls is not None:
                    heappush(heaps[cls], v)
            # a K33+ subgraph puts every branch vertex on a 4-cycle, so only
            # vertices next to one can anchor R1; this keeps the scan cheap
            if d >= 2 and any(on_c4[w] for w in adj[v]):
                if self._detect_k33(v) is not None:
                    heappush(heaps[_R1], v)

    def _scan_short_cycles(self, active: list[int]) -> bytearray:
        # triangles and 4-cycles only ever disappear, so one scan suffices;
        # every short cycle gets an anchor entry at its smallest vertex
        adj = self.adj
        n = self.g.n
        tri_pushed = bytearray(n)
        c4_pushed = bytearray(n)
        on_c4 = bytearray(n)
        for u in active:
            nbrs_u = adj[u]
            for v in nbrs_u:
                if v < u:
                    continue
                tri = False
                c4 = False
                for x in nbrs_u:
                    if x != v and x in adj[v]:
                        tri = True
                        break
                for x in nbrs_u:
                    if x == v:
                        continue
                    for w in adj[v]:
                        if w != u and w != x and w in adj[x]:
                            c4 = True
                            break
                    if c4:
                        break
                if tri and not tri_pushed[u]:
                    tri_pushed[u] = 1
                    heappush(self.r10_heap, u)
                if c4:
                    on_c4[u] = 1
                    on_c4[v] = 1
                    if not c4_pushed[u]:
                        c4_pushed[u] = 1
                        heappush(self.r11_heap, u)
        return on_c4

    # -- candidate classification -----------------------------------------

    def _classify_deg1(self, u: int) -> int:
        """Current rule for an end-vertex anchor: R2/R3/R4/R5 or FRAG."""
        adj = self.adj
        alive = self.alive
        deg = self.deg
        v = -1
        for w in adj[u]:
            if alive[w]:
                v = w
                break
        dv = deg[v]
        if dv == 1:
            return _FRAG
        if dv == 2:
            return _R2
        for w in adj[v]:
            if w != u and alive[w] and deg[w] == 1:
                return _R3
        if self.n_deg1 >= 2 and self._r4_partner(u) is not None:
            return _R4
        return _R5

    def _classify_deg2(self, u: int) -> Optional[int]:
        """Current rule for a degree-2 anchor: R6/R7/R8/R9, or None when a
        degree-1 neighbor owns the local pattern."""
        adj = self.adj
        alive = self.alive
        deg = self.deg
        v1 = v2 = -1
        for w in adj[u]:
            if alive[w]:
                if v1 < 0:
                    v1 = w
                else:
                    v2 = w
        if deg[v1] == 1 or deg[v2] == 1:
            return None
        if deg[v1] == 2 or deg[v2] == 2:
            return _R6
        if v2 in adj[v1]:
            return _R7
        for x in adj[v1]:
            if x != u and alive[x] and x in adj[v2]:
                return _R8
        return _R9

    def _r4_partner(self, u: int) -> Optional[int]:
        """Smallest end-vertex at alive-distance exactly 4 from u, or None."""
        adj = self.adj
        alive = self.alive
        deg = self.deg
        mark = self.mark
        self.mark_gen += 1
        gen = self.mark_gen
        mark[u] = gen
        frontier = [u]
        for _ in range(4):
            nxt = []
            for v in frontier:
                for w in adj[v]:
                    if alive[w] and mark[w] != gen:
                        mark[w] = gen
                        nxt.append(w)
            frontier = nxt
            if not frontier:
                return None
        best = -1
        for w in frontier:
            if deg[w] == 1 and (best < 0 or w < best):
                best = w
        return best if best >= 0 else None

    def _detect_k33(self, u: int):
        """K33+ subgraph with subdivision vertex u in the alive graph.

        Returns (a1, b1, side_a, side_b) or None.  In a subcubic graph the
        six branch vertices have no edges outside the subgraph, so checking
        exact alive neighborhoods is a complete test.
        """
        adj = self.adj
        alive = self.alive
        deg = self.deg
        if deg[u] < 2:
            return None
        nbrs_u = [w for w in adj[u] if alive[w]]
        for a1 in nbrs_u:
            if deg[a1] != 3:
                continue
            for b1 in nbrs_u:
                if b1 == a1 or deg[b1] != 3 or b1 in adj[a1]:
                    continue
                side_b = [w for w in adj[a1] if alive[w] and w != u]
                if len(side_b) != 2:
                    continue
                side_a = [w for w in adj[b1] if alive[w] and w != u]
                if len(side_a) != 2:
                    continue
                six = {a1, b1, *side_a, *side_b}
                if len(six) != 6 or u in six:
                    continue
                b_all = sorted((b1, *side_b))
                a_all = sorted((a1, *side_a))
                ok = True
                for a in side_a:
                    if sorted(w for w in adj[a] if alive[w]) != b_all:
                        ok = False
                        break
                if ok:
                    for b in side_b:
                        if sorted(w for w in adj[b] if alive[w]) != a_all:
                            ok = False
                            break
                if ok:
                    return a1, b1, sorted(side_a), sorted(side_b)
        return None

    # -- probes and small components --------------------------------------

    def _probe(self, s: int, cap: int) -> Optional[list[int]]:
        """Alive component of s when its order is <= cap, else None."""
        adj = self.adj
        alive = self.alive
        mark = self.mark
        self.mark_gen += 1
        gen = self.mark_gen
        mark[s] = gen
        comp = [s]
        qi = 0
        while qi < len(comp):
            v = comp[qi]
            qi += 1
            for w in adj[v]:
                if alive[w] and mark[w] != gen:
                    mark[w] = gen
                    comp.append(w)
                    if len(comp) > cap:
                        return None
        return comp

    def _consume_component(self, comp: list[int]) -> str:
        """Steps (b)/(c): emit the single K33+ edge or brute-force exactly.

        ``comp`` must be a sorted, whole alive component of order >= 2;
        closed components have no outside neighbors, so no vertex outside
        is touched and no isolated vertices arise.
        """
        adj = self.adj
        alive = self.alive
        local = {v: i for i, v in enumerate(comp)}
        sub_edges = []
        for v in comp:
            lv = local[v]
            for w in adj[v]:
                if w > v and alive[w]:
                    sub_edges.append((lv, local[w]))
        sub = Graph(len(comp), sub_edges)
        rule = "COMPONENT-BRUTE"
        if sub.n == 7 and is_k33plus(sub, range(7)):
            rule = "COMPONENT-K33PLUS"
            u = next(v for v in range(7) if sub.degree(v) == 2)
            a1, b1 = sub.adj[u]
            side_b = [w for w in sub.adj[a1] if w != u]
            side_a = [w for w in sub.adj[b1] if w != u]
            added = [
                min(
                    normalize_edge(comp[a], comp[b])
                    for a in side_a
                    for b in side_b
                )
            ]
        else:
            _, witness = exact_strong_matching_number(sub, self.oracle_budget)
            added = sorted(
                normalize_edge(comp[u], comp[v]) for u, v in witness
            )
        deg = self.deg
        for v in comp:
            if deg[v] == 1:
                self.n_deg1 -= 1
            alive[v] = 0
        self._record(rule, comp, added, 0)
        return rule

    # -- the step dispatcher ----------------------------------------------

    def _step_once(self) -> bool:
        heaps = self.heaps
        alive = self.alive
        deg = self.deg
        while True:
            frag = heaps[_FRAG]
            while frag:
                u = frag[0]
                if not alive[u] or deg[u] != 1:
                    heappop(frag)
                    continue
                v = next(w for w in self.adj[u] if alive[w])
                if deg[v] != 1:
                    heappop(frag)
                    heappush(heaps[self._classify_deg1(u)], u)
                    continue
                self._consume_component(sorted((u, v)))
                return True
            r1 = heaps[_R1]
            while r1:
                u = r1[0]
                if alive[u] and deg[u] >= 2:
                    pat = self._detect_k33(u)
                    if pat is not None:
                        self._fire_r1(u, pat)
                        return True
                heappop(r1)
            restart = False
            for rule in (_R2, _R3, _R4, _R5):
                h = heaps[rule]
                while h:
                    u = h[0]
                    if not alive[u] or deg[u] != 1:
                        heappop(h)
                        continue
                    actual = self._classify_deg1(u)
                    if actual == rule:
                        self._fire_deg1(rule, u)
                        return True
                    heappop(h)
                    heappush(heaps[actual], u)
                    if actual < rule:
                        restart = True
                        break
                if restart:
                    break
            if restart:
                continue
            for rule in (_R6, _R7, _R8, _R9):
                h = heaps[rule]
                while h:
                    u = h[0]
                    if not alive[u] or deg[u] != 2:
                        heappop(h)
                        continue
                    actual = self._classify_deg2(u)
                    if actual == rule:
                        self._fire_deg2(rule, u)
                        return True
                    heappop(h)
                    if actual is not None:
                        heappush(heaps[actual], u)
                        if actual < rule:
                            restart = True
                            break
                if restart:
                    break
            if restart:
                continue
            # beyond this point no vertex of degree 1 or 2 is left anywhere,
            # so every remaining component is cubic
            h = self.r10_heap
            while h:
                a = h[0]
                tri = self._find_triangle(a) if alive[a] else None
                if tri is not None:
                    self._fire_r10(a, tri)
                    return True
                heappop(h)
            h = self.r11_heap
            while h:
                a = h[0]
                cyc = self._find_c4(a) if alive[a] else None
                if cyc is not None:
                    self._fire_r11(cyc)
                    return True
                heappop(h)
            ptr = self.r12_ptr
            n = self.g.n
            while ptr < n and (not alive[ptr] or deg[ptr] == 0):
                ptr += 1
            self.r12_ptr = ptr
            if ptr < n:
                self._fire_r12(ptr)
                return True
            return False

    def _find_triangle(self, a: int) -> Optional[int]:
        """Smallest b completing an alive triangle a-b-c, or None."""
        adj = self.adj
        alive = self.alive
        nbrs = [w for w in adj[a] if alive[w]]
        for i, b in enumerate(nbrs):
            for c in nbrs[i + 1:]:
                if c in adj[b]:
                    return b
        return None

    def _find_c4(self, a: int) -> Optional[tuple[int, int, int, int]]:
        """Lexicographically smallest alive 4-cycle (a, n1, x, n2), or None."""
        adj = self.adj
        alive = self.alive
        nbrs = [w for w in adj[a] if alive[w]]
        for i, n1 in enumerate(nbrs):
            for n2 in nbrs[i + 1:]:
                best_x = -1
                for x in adj[n1]:
                    if x != a and alive[x] and x in adj[n2]:
                        if best_x < 0 or x < best_x:
                            best_x = x
                if best_x >= 0:
                    return (a, n1, best_x, n2)
        return None

    # -- rule firing -------------------------------------------------------

    def _alive_closed(self, v: int) -> list[int]:
        alive = self.alive
        out = [v]
        for w in self.adj[v]:
            if alive[w]:
                out.append(w)
        return out

    def _small_diverted(self, anchor: int) -> bool:
        comp = self._probe(anchor, BRUTE_FORCE_THRESHOLD)
        if comp is None:
            return False
        self._consume_component(sorted(comp))
        return True

    def _isolated_after(self, removal: set[int]) -> list[int]:
        """Alive vertices outside ``removal`` whose neighbors all lie in it."""
        adj = self.adj
        alive = self.alive
        iso = []
        seen = set()
        for r in removal:
            for w in adj[r]:
                if alive[w] and w not in removal and w not in seen:
                    seen.add(w)
                    for x in adj[w]:
                        if alive[x] and x not in removal:
                            break
                    else:
                        iso.append(w)
        return iso

    def _guarded_commit(
        self, rule: int, anchor: int, removal: set[int], added: list[Edge]
    ) -> None:
        iso = self._isolated_after(removal)
        if len(removal) + len(iso) > 6 * len(added):
            self._fallback(anchor, _RULE_NAMES[rule])
            return
        self._commit(_RULE_NAMES[rule], removal, added, iso)

    def _fallback(self, anchor: int, rule_name: str) -> None:
        # defensive path for accounting the rule system proves unreachable
        comp = self._probe(anchor, FALLBACK_THRESHOLD)
        if comp is None:
            raise LedgerViolationError(
                f"rule {rule_name} at vertex {anchor} would break the "
                f"6-per-edge ledger in a component of order > {FALLBACK_THRESHOLD}"
            )
        self._consume_component(sorted(comp))

    def _fire_r1(self, u: int, pat) -> None:
        if self._small_diverted(u):
            return
        a1, b1, side_a, side_b = pat
        removal = {a1, b1, *side_a, *side_b}
        added = [
            min(
                normalize_edge(a, b)
                for a in side_a
                for b in side_b
            )
        ]
        self._guarded_commit(_R1, u, removal, added)

    def _fire_deg1(self, rule: int, u: int) -> None:
        if self._small_diverted(u):
            return
        alive = self.alive
        adj = self.adj
        v = next(w for w in adj[u] if alive[w])
        if rule == _R4:
            u2 = self._r4_partner(u)
            if u2 is None:
                # partner vanished between classification and firing; the
                # dispatcher will reclassify on the next pass
                heappush(self.heaps[self._classify_deg1(u)], u)
                return
            v2 = next(w for w in adj[u2] if alive[w])
            removal = set(self._alive_closed(v)) | set(self._alive_closed(v2))
            added = sorted((normalize_edge(u, v), normalize_edge(u2, v2)))
            self._guarded_commit(_R4, u, removal, added)
            return
        removal = set(self._alive_closed(v))
        if rule == _R3:
            deg = self.deg
            mate = min(
                w for w in adj[v] if alive[w] and deg[w] == 1
            )
            added = [normalize_edge(mate, v)]
        else:
            added = [normalize_edge(u, v)]
        self._guarded_commit(rule, u, removal, added)

    def _fire_deg2(self, rule: int, u: int) -> None:
        if self._small_diverted(u):
            return
        alive = self.alive
        adj = self.adj
        deg = self.deg
        nbrs = [w for w in adj[u] if alive[w]]
        v1, v2 = nbrs
        if rule == _R6:
            mate = v1 if deg[v1] == 2 else v2
            removal = set(self._alive_closed(u)) | set(self._alive_closed(mate))
            self._guarded_commit(_R6, u, removal, [normalize_edge(u, mate)])
            return
        if rule == _R7:
            removal = set(self._alive_closed(v1))
            self._guarded_commit(_R7, u, removal, [normalize_edge(u, v1)])
            return
        if rule == _R8:
            removal = set(self._alive_closed(v1)) | set(self._alive_closed(u))
            self._guarded_commit(_R8, u, removal, [normalize_edge(u, v1)])
            return
        # R9: pick the side whose deletion isolates at most one vertex
        base = set(self._alive_closed(u))
        side1 = base | set(self._alive_closed(v1))
        iso1 = self._isolated_after(side1)
        if len(iso1) <= 1:
            self._commit("R9", side1, [normalize_edge(u, v1)], iso1)
            return
        side2 = base | set(self._alive_closed(v2))
        iso2 = self._isolated_after(side2)
        if len(iso2) <= 1:
            self._commit("R9", side2, [normalize_edge(u, v2)], iso2)
            return
        self._fallback(u, "R9")

    def _fire_r10(self, a: int, b: int) -> None:
        if self._small_diverted(a):
            return
        removal = set(self._alive_closed(a)) | set(self._alive_closed(b))
        self._guarded_commit(_R10, a, removal, [normalize_edge(a, b)])

    def _fire_r11(self, cyc: tuple[int, int, int, int]) -> None:
        a = cyc[0]
        if self._small_diverted(a):
            return
        v1, v2, v3, v4 = cyc
        for (p, q) in ((v1, v2), (v2, v3), (v3, v4), (v4, v1)):
            removal = set(self._alive_closed(p)) | set(self._alive_closed(q))
            iso = self._isolated_after(removal)
            if not iso:
                self._commit("R11", removal, [normalize_edge(p, q)], iso)
                return
        self._fallback(a, "R11")

    def _fire_r12(self, u: int) -> None:
        if self._small_diverted(u):
            return
        alive = self.alive
        v = next(w for w in self.adj[u] if alive[w])
        removal = set(self._alive_closed(u)) | set(self._alive_closed(v))
        self._guarded_commit(_R12, u, removal, [normalize_edge(u, v)])

    # -- committing --------------------------------------------------------

    def _commit(
        self, rule_name: str, removal: set[int], added: list[Edge], iso: list[int]
    ) -> None:
        adj = self.adj
        alive = self.alive
        deg = self.deg
        for v in removal:
            if deg[v] == 1:
                self.n_deg1 -= 1
            alive[v] = 0
        ring1 = []
        for v in removal:
            for w in adj[v]:
                if alive[w]:
                    old = deg[w]
                    deg[w] = old - 1
                    if old == 2:
                        self.n_deg1 += 1
                    elif old == 1:
                        self.n_deg1 -= 1
                    ring1.append(w)
        for w in iso:
            alive[w] = 0
        touched = set()
        for w in ring1:
            if alive[w]:
                touched.add(w)
                for x in adj[w]:
                    if alive[x]:
                        touched.add(x)
        heaps = self.heaps
        for t in sorted(touched):
            d = deg[t]
            if d == 1:
                heappush(heaps[self._classify_deg1(t)], t)
            elif d == 2:
                cls = self._classify_deg2(t)
                if cls is not None:
                    heappush(heaps[cls], t)
        self._record(rule_name, sorted(removal), sorted(added), len(iso))

    def _record(
        self, rule: str, removed: list[int], added: list[Edge], iso_count: int
    ) -> None:
        self.steps.append(
            ReductionStep(
                rule=rule,
                removed=tuple(removed),
                added=tuple(added),
                isolated_created=iso_count,
            )
        )
        self.matching.extend(added)
