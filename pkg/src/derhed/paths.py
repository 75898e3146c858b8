"""Path calculus on shift-graphs.

A path in the triangulated category steps along nonzero morphisms or
single shifts X -> X[1].  On the shift-graph this becomes a walk in a
weighted multidigraph: a hom edge of weight n moves from (X, a) to
(Y, a + n), and every node carries an implicit shift self-edge of weight
+1.  "A path from X[1] to X exists" is then exactly "some closed walk
through X has total weight <= -1", which Bellman-Ford style relaxation
detects as a reachable negative cycle.

Witness construction for the zero-weight-closed-walk test (directing
objects) uses shortest-walk potentials: with pi(v) the distance from a
fixed source inside a strongly connected component free of negative
cycles, every edge has reduced weight pi(u) + w - pi(v) >= 0, so a closed
walk has total weight zero exactly when all its edges are tight.  Hence
the zero-weight closed walks through X are the cycles of tight edges
through X.
"""

from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass

from .shiftgraph import ObjRef, ShiftGraph, UnknownOrbit

NEG_INF = -math.inf
POS_INF = math.inf


class _NoConcreteWitness(Exception):
    """A pair forced to -inf by the periodicity short-circuit without a
    concrete negative cycle between the endpoints."""


@dataclass(frozen=True)
class PathStep:
    kind: str  # "hom" | "shift"
    at: ObjRef


@dataclass
class PathReport:
    exists: bool
    min_weight: float  # int, or +-inf
    witness: list[PathStep] | None = None

    def to_dict(self) -> dict:
        return {
            "exists": self.exists,
            "min_weight": _encode_weight(self.min_weight),
            "witness": None if self.witness is None else [
                {"kind": s.kind, "orbit": s.at.orbit, "offset": s.at.offset}
                for s in self.witness
            ],
        }


def _encode_weight(w) -> int | str:
    if w == POS_INF:
        return "+inf"
    if w == NEG_INF:
        return "-inf"
    return int(w)


@dataclass(frozen=True)
class NonDegenerate:
    def to_dict(self):
        return {"kind": "non-degenerate"}


@dataclass(frozen=True)
class DegenerateAperiodic:
    """Shifts of a single object, never self-isomorphic: the derived
    category of a division ring."""

    end_dim: int

    def to_dict(self):
        return {"kind": "degenerate-aperiodic", "end_dim": self.end_dim,
                "model": "derived category of a division ring"}


@dataclass(frozen=True)
class DegeneratePeriodic:
    """Shifts of a single object with X = X[period]: semisimple module
    category with a twisted translation."""

    period: int
    end_dim: int

    def to_dict(self):
        return {"kind": "degenerate-periodic", "period": self.period,
                "end_dim": self.end_dim,
                "model": "semisimple category with cyclically twisted translation"}


class PathEngine:
    """All-pairs shortest-walk machinery over one immutable shift-graph.

    Per-source results are cached; blocks containing a periodic orbit are
    short-circuited to -inf on reachable pairs, because the mandatory iso
    edges at weights -p, +p already contain a negative closed walk that
    any reachable pair can route through.
    """

    def __init__(self, g: ShiftGraph, proper_only: bool = False):
        self.g = g
        self.nodes = sorted(g.orbit_ids())
        self.edges: list[tuple[str, str, int]] = []
        for (a, b), hom_edges in g.homs.items():
            for e in hom_edges:
                if proper_only and e.all_iso:
                    continue
                self.edges.append((a, b, e.weight))
        self.edges.sort()
        self.succ: dict[str, list[tuple[str, int]]] = {v: [] for v in self.nodes}
        for (a, b, w) in self.edges:
            self.succ[a].append((b, w))
        self.periodic = {o.id for o in g.orbits if o.period is not None}
        self._proper_only = proper_only
        self._blocks = self._compute_blocks()
        self._block_of = {v: i for i, blk in enumerate(self._blocks) for v in blk}
        self._dist_cache: dict[str, dict[str, float]] = {}
        self._pred_cache: dict[str, dict[str, tuple[str, int]]] = {}

    # -- structure --

    def _compute_blocks(self) -> list[list[str]]:
        parent = {v: v for v in self.nodes}

        def find(x):
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for (a, b), hom_edges in self.g.homs.items():
            if a != b and hom_edges:
                ra, rb = find(a), find(b)
                if ra != rb:
                    parent[ra] = rb
        groups: dict[str, list[str]] = {}
        for v in self.nodes:
            groups.setdefault(find(v), []).append(v)
        return sorted([sorted(grp) for grp in groups.values()])

    def blocks(self) -> list[list[str]]:
        return [list(b) for b in self._blocks]

    def _reachable_from(self, s: str) -> set[str]:
        seen = {s}
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for (v, _w) in self.succ[u]:
                if v not in seen:
                    seen.add(v)
                    queue.append(v)
        return seen

    # -- shortest walks --

    def _run_source(self, s: str):
        if s not in self.g._by_id:
            raise UnknownOrbit(s)
        if s in self._dist_cache:
            return
        block = self._blocks[self._block_of[s]]
        if not self._proper_only and any(v in self.periodic for v in block):
            reach = self._reachable_from(s)
            self._dist_cache[s] = {
                v: (NEG_INF if v in reach else POS_INF) for v in self.nodes}
            self._pred_cache[s] = {}
            return
        # label-correcting relaxation with (weight, hom-steps) labels:
        # weight first, then fewer hom steps, so witnesses are minimal.
        dist: dict[str, tuple[float, int]] = {v: (POS_INF, 0) for v in self.nodes}
        pred: dict[str, tuple[str, int]] = {}
        dist[s] = (0, 0)
        n = len(self.nodes)
        for _ in range(n):
            changed = False
            for (u, v, w) in self.edges:
                du = dist[u]
                if du[0] == POS_INF:
                    continue
                cand = (du[0] + w, du[1] + 1)
                if cand < dist[v]:
                    dist[v] = cand
                    pred[v] = (u, w)
                    changed = True
            if not changed:
                break
        seeds = set()
        for (u, v, w) in self.edges:
            du = dist[u]
            if du[0] != POS_INF and (du[0] + w, du[1] + 1) < dist[v]:
                seeds.add(v)
        neg = set()
        queue = deque(seeds)
        neg.update(seeds)
        while queue:
            u = queue.popleft()
            for (v, _w) in self.succ[u]:
                if v not in neg:
                    neg.add(v)
                    queue.append(v)
        out = {}
        for v in self.nodes:
            if v in neg:
                out[v] = NEG_INF
            else:
                out[v] = dist[v][0]
        self._dist_cache[s] = out
        self._pred_cache[s] = pred

    def min_weight(self, x: str, y: str) -> float:
        """Minimum total weight of a walk from orbit x to orbit y; walks of
        length zero count, so min_weight(x, x) <= 0 always."""
        if y not in self.g._by_id:
            raise UnknownOrbit(y)
        self._run_source(x)
        return self._dist_cache[x][y]

    def negative_walk_objects(self) -> set[str]:
        """Orbits on a negative closed walk: exactly those X admitting a
        path from X[1] back to X."""
        return {v for v in self.nodes if self.min_weight(v, v) == NEG_INF}

    # -- witnesses --

    def _bfs_path(self, s: str, t: str, allowed: set[str]) -> list[tuple[str, str, int]]:
        """Deterministic unweighted path s -> t within `allowed`, returned
        as a list of hom edges (u, v, w); per node pair the lightest edge
        is used."""
        best_edge: dict[tuple[str, str], int] = {}
        for (u, v, w) in self.edges:
            if u in allowed and v in allowed:
                key = (u, v)
                if key not in best_edge or w < best_edge[key]:
                    best_edge[key] = w
        prev: dict[str, tuple[str, int]] = {}
        seen = {s}
        queue = deque([s])
        while queue:
            u = queue.popleft()
            if u == t:
                break
            for (v, w) in sorted(self.succ[u]):
                if v in allowed and v not in seen and best_edge.get((u, v)) is not None:
                    seen.add(v)
                    prev[v] = (u, best_edge[(u, v)])
                    queue.append(v)
        if t not in seen:
            raise RuntimeError(f"no path {s} -> {t} during witness construction")
        path = []
        cur = t
        while cur != s:
            u, w = prev[cur]
            path.append((u, cur, w))
            cur = u
        path.reverse()
        return path

    def _negative_cycle_within(self, allowed: set[str]) -> list[tuple[str, str, int]] | None:
        """A negative cycle using only nodes in `allowed`, as a list of hom
        edges, or None."""
        nodes = sorted(allowed)
        if not nodes:
            return None
        edges = [(u, v, w) for (u, v, w) in self.edges
                 if u in allowed and v in allowed]
        dist = {v: 0 for v in nodes}  # virtual super-source
        pred: dict[str, tuple[str, int]] = {}
        relaxed_v = None
        for i in range(len(nodes) + 1):
            relaxed_v = None
            for (u, v, w) in edges:
                if dist[u] + w < dist[v]:
                    dist[v] = dist[u] + w
                    pred[v] = (u, w)
                    relaxed_v = v
            if relaxed_v is None:
                return None
        # walk predecessors until we are guaranteed to sit on a cycle
        x = relaxed_v
        for _ in range(len(nodes)):
            x = pred[x][0]
        cycle = []
        cur = x
        while True:
            u, w = pred[cur]
            cycle.append((u, cur, w))
            cur = u
            if cur == x:
                break
        cycle.reverse()
        assert sum(w for (_u, _v, w) in cycle) < 0
        return cycle

    def walk_with_weight(self, x: str, y: str, target: int) -> list[tuple[str, str, int]] | None:
        """Hom-edge walk x -> y of total weight <= target, minimal under the
        relaxation labels; None when min_weight(x, y) > target.  The
        caller pads the difference with shift steps."""
        mw = self.min_weight(x, y)
        if mw > target:
            return None
        if mw != NEG_INF:
            pred = self._pred_cache[x]
            path = []
            cur = y
            while cur != x:
                u, w = pred[cur]
                path.append((u, cur, w))
                cur = u
            path.reverse()
            return path
        # -inf: pump a negative cycle lying between x and y.
        reach = self._reachable_from(x)
        coreach = {v for v in self.nodes if y in self._reachable_from(v)}
        region = reach & coreach
        cycle = self._negative_cycle_within(region)
        if cycle is None:
            # periodic short-circuit decreed -inf for a pair with no
            # concrete negative cycle between them; no witness exists
            raise _NoConcreteWitness(x, y)
        c = cycle[0][0]
        p1 = self._bfs_path(x, c, region)
        p2 = self._bfs_path(c, y, region)
        w1 = sum(w for (_u, _v, w) in p1)
        w2 = sum(w for (_u, _v, w) in p2)
        wc = sum(w for (_u, _v, w) in cycle)
        k = 1
        while w1 + k * wc + w2 > target:
            k += 1
        return p1 + cycle * k + p2

    def path_report(self, src: ObjRef, dst: ObjRef) -> PathReport:
        """Existence of a two-kinds-of-steps path from src to dst: a hom-edge walk
        of weight <= (dst.offset - src.offset), padded up exactly by the
        +1 shift self-edges."""
        target = dst.offset - src.offset
        mw = self.min_weight(src.orbit, dst.orbit)
        if mw > target:
            return PathReport(exists=False, min_weight=mw, witness=None)
        try:
            walk = self.walk_with_weight(src.orbit, dst.orbit, target)
        except _NoConcreteWitness:
            return PathReport(exists=True, min_weight=mw, witness=None)
        steps = [PathStep("start", src)]
        offset = src.offset
        for (_u, v, w) in walk:
            offset += w
            steps.append(PathStep("hom", ObjRef(v, offset)))
        while offset < dst.offset:
            offset += 1
            steps.append(PathStep("shift", ObjRef(dst.orbit, offset)))
        return PathReport(exists=True, min_weight=mw, witness=steps)


# -- strongly connected components (Kosaraju, deterministic order) --

def _sccs(nodes: list[str], succ: dict[str, list[str]]) -> list[list[str]]:
    pred: dict[str, list[str]] = {v: [] for v in nodes}
    for u in nodes:
        for v in succ[u]:
            pred[v].append(u)
    order = []
    seen = set()
    for start in nodes:
        if start in seen:
            continue
        stack = [(start, iter(sorted(succ[start])))]
        seen.add(start)
        while stack:
            u, it = stack[-1]
            advanced = False
            for v in it:
                if v not in seen:
                    seen.add(v)
                    stack.append((v, iter(sorted(succ[v]))))
                    advanced = True
                    break
            if not advanced:
                order.append(u)
                stack.pop()
    comps = []
    assigned = set()
    for u in reversed(order):
        if u in assigned:
            continue
        comp = [u]
        assigned.add(u)
        queue = deque([u])
        while queue:
            x = queue.popleft()
            for y in pred[x]:
                if y not in assigned:
                    assigned.add(y)
                    comp.append(y)
                    queue.append(y)
        comps.append(sorted(comp))
    return comps


# -- public operations --

def blocks(g: ShiftGraph, engine: PathEngine | None = None) -> list[list[str]]:
    """Connected components of the undirected hom-edge graph: the orbit
    sets of the triangulated blocks."""
    return (engine or PathEngine(g)).blocks()


def min_weight(g: ShiftGraph, x: str, y: str,
               engine: PathEngine | None = None) -> float:
    return (engine or PathEngine(g)).min_weight(x, y)


def path_exists(g: ShiftGraph, src: ObjRef, dst: ObjRef,
                engine: PathEngine | None = None) -> bool:
    return (engine or PathEngine(g)).path_report(src, dst).exists


def negative_walk_objects(g: ShiftGraph,
                          engine: PathEngine | None = None) -> set[str]:
    return (engine or PathEngine(g)).negative_walk_objects()


def classify_degenerate(g: ShiftGraph, block: list[str]):
    """Degenerate blocks consist of the shifts of a single object with
    every incident nonzero morphism invertible."""
    if len(block) != 1:
        return NonDegenerate()
    x = block[0]
    for e in g.edges_between(x, x):
        if not e.all_iso:
            return NonDegenerate()
    orb = g.orbit(x)
    if orb.period is None:
        return DegenerateAperiodic(orb.end_dim)
    return DegeneratePeriodic(orb.period, orb.end_dim)


def directing_objects(g: ShiftGraph) -> set[str]:
    """Orbits with no proper closed walk of length >= 1 and total weight
    zero, where proper walks use only non-invertible nonzero morphisms
    (edges with all_iso false) and shift steps.

    A periodic orbit is never directing: p shift steps already close up.
    Orbits sharing a strongly connected component with a periodic orbit
    inherit this, since offsets can be reduced mod p while passing
    through."""
    eng = PathEngine(g, proper_only=True)
    succ = {v: sorted({b for (b, _w) in eng.succ[v]}) for v in eng.nodes}
    comps = _sccs(eng.nodes, succ)
    non_directing: set[str] = set(eng.periodic)
    for comp in comps:
        comp_set = set(comp)
        if comp_set & eng.periodic:
            non_directing.update(comp)
            continue
        comp_edges = [(u, v, w) for (u, v, w) in eng.edges
                      if u in comp_set and v in comp_set]
        if not comp_edges:
            continue
        if eng._negative_cycle_within(comp_set) is not None:
            # pad the <= -1 closed walk up to weight zero with shift steps
            non_directing.update(comp)
            continue
        # potentials from the least node; all of comp is reachable from it
        src = comp[0]
        pi = {v: (0 if v == src else POS_INF) for v in comp}
        for _ in range(len(comp)):
            changed = False
            for (u, v, w) in comp_edges:
                if pi[u] != POS_INF and pi[u] + w < pi[v]:
                    pi[v] = pi[u] + w
                    changed = True
            if not changed:
                break
        tight_succ = {v: [] for v in comp}
        tight_loops = set()
        for (u, v, w) in comp_edges:
            if pi[u] != POS_INF and pi[u] + w == pi[v]:
                if u == v:
                    tight_loops.add(u)
                else:
                    tight_succ[u].append(v)
        tight_succ = {v: sorted(set(ws)) for v, ws in tight_succ.items()}
        for tc in _sccs(comp, tight_succ):
            if len(tc) > 1:
                non_directing.update(tc)
        non_directing.update(tight_loops)
    return set(eng.nodes) - non_directing
