"""Independent brute-force oracles used to cross-check the library.

Everything here deliberately avoids the library's own algorithms: ranks
come from minor enumeration, walk weights from bounded dynamic
programming plus explicit simple-cycle search, and homotopy-category hom
dimensions from vector-space-level chain-map equations.
"""

from __future__ import annotations

import itertools

import numpy as np

NEG_INF = float("-inf")
POS_INF = float("inf")


# -- exact rank via minor enumeration --


def _det_int(rows: list[list[int]]) -> int:
    n = len(rows)
    if n == 1:
        return rows[0][0]
    total = 0
    for j in range(n):
        if rows[0][j] == 0:
            continue
        minor = [r[:j] + r[j + 1:] for r in rows[1:]]
        total += (-1) ** j * rows[0][j] * _det_int(minor)
    return total


def rank_oracle(mat: np.ndarray, p: int) -> int:
    m = np.asarray(mat, dtype=object) % p
    rows, cols = m.shape
    for k in range(min(rows, cols), 0, -1):
        for ri in itertools.combinations(range(rows), k):
            for ci in itertools.combinations(range(cols), k):
                sub = [[int(m[r, c]) for c in ci] for r in ri]
                if _det_int(sub) % p != 0:
                    return k
    return 0


# -- walk weights by bounded min-plus DP --


def _min_edge_weights(g):
    """(u, v) -> lightest hom-edge weight, over stored edges."""
    out = {}
    for (a, b), edges in g.homs.items():
        out[(a, b)] = min(e.weight for e in edges)
    return out


def _succ(g):
    succ = {x: set() for x in g.orbit_ids()}
    for (a, b) in g.homs:
        succ[a].add(b)
    return succ


def _reach(succ, start):
    seen = {start}
    frontier = [start]
    while frontier:
        u = frontier.pop()
        for v in succ[u]:
            if v not in seen:
                seen.add(v)
                frontier.append(v)
    return seen


def _negative_cycle_nodes(g) -> set:
    """Nodes lying on some simple hom-edge cycle of negative total weight."""
    w = _min_edge_weights(g)
    nodes = g.orbit_ids()
    bad = set()
    for v in nodes:
        if w.get((v, v), 1) < 0:
            bad.add(v)
    for size in range(2, len(nodes) + 1):
        for subset in itertools.combinations(nodes, size):
            first = subset[0]
            for rest in itertools.permutations(subset[1:]):
                cycle = (first,) + rest
                try:
                    total = sum(w[(cycle[i], cycle[(i + 1) % size])]
                                for i in range(size))
                except KeyError:
                    continue
                if total < 0:
                    bad.update(cycle)
    return bad


def min_weight_oracle(g, x: str, y: str) -> float:
    """Minimum total weight of a hom-edge walk x -> y (length 0 allowed
    when x == y); -inf when a negative simple cycle sits on some x -> y
    corridor.  Aperiodic graphs only."""
    assert all(o.period is None for o in g.orbits)
    succ = _succ(g)
    reach_x = _reach(succ, x)
    tainted = _negative_cycle_nodes(g)
    for v in tainted & reach_x:
        if y in _reach(succ, v):
            return NEG_INF
    n = len(g.orbit_ids())
    w = _min_edge_weights(g)
    dist = {v: (0 if v == x else POS_INF) for v in g.orbit_ids()}
    best = dict(dist)
    for _ in range(n):
        nxt = {}
        for v in g.orbit_ids():
            vals = [dist[u] + w[(u, v)] for u in g.orbit_ids()
                    if (u, v) in w and dist[u] < POS_INF]
            nxt[v] = min(vals) if vals else POS_INF
        dist = nxt
        for v in dist:
            best[v] = min(best[v], dist[v])
    return best[y]


def enumerate_hom_walks(g, x: str, max_steps: int):
    """All hom-edge walks from x with at most max_steps steps, as
    (endpoint, total weight, steps) tuples."""
    out = []
    frontier = [(x, 0)]
    for step in range(1, max_steps + 1):
        nxt = []
        for (u, wt) in frontier:
            for (a, b), edges in g.homs.items():
                if a != u:
                    continue
                for e in edges:
                    nxt.append((b, wt + e.weight))
        out.extend((v, wt, step) for (v, wt) in nxt)
        frontier = nxt
    return out


# -- homotopy-category hom dimension at the vector-space level --


def _proj_basis(alg, v: str):
    """Basis indices of the projective at vertex v: paths starting at v."""
    return [i for i, b in enumerate(alg.basis) if b.source == v]


def _premult_matrix(alg, g_idx: int, src_vertex: str, dst_vertex: str,
                    p: int) -> np.ndarray:
    """Matrix of left multiplication by basis path g (a path dst -> src)
    as a map P_src -> P_dst on path bases."""
    src_basis = _proj_basis(alg, src_vertex)
    dst_basis = _proj_basis(alg, dst_vertex)
    pos = {k: r for r, k in enumerate(dst_basis)}
    m = np.zeros((len(dst_basis), len(src_basis)), dtype=np.int64)
    for c, k in enumerate(src_basis):
        prod = alg.mul_basis(g_idx, k)
        if prod is not None:
            m[pos[prod], c] = 1
    return m % p


def _elem_matrix(alg, elem: dict, src_vertex: str, dst_vertex: str,
                 p: int) -> np.ndarray:
    src_basis = _proj_basis(alg, src_vertex)
    dst_basis = _proj_basis(alg, dst_vertex)
    m = np.zeros((len(dst_basis), len(src_basis)), dtype=np.int64)
    for g_idx, coeff in elem.items():
        m = (m + coeff * _premult_matrix(alg, g_idx, src_vertex, dst_vertex, p)) % p
    return m


def _space(alg, cx, d: int):
    """Per-summand vector-space offsets and total dimension of degree d."""
    offs, total = [], 0
    for v in cx.summands(d):
        offs.append((v, total))
        total += len(_proj_basis(alg, v))
    return offs, total


def _diff_matrix(alg, cx, d: int, p: int) -> np.ndarray:
    """Vector-space matrix of the differential cx_d -> cx_{d+1}."""
    src_offs, src_total = _space(alg, cx, d)
    dst_offs, dst_total = _space(alg, cx, d + 1)
    m = np.zeros((dst_total, src_total), dtype=np.int64)
    entries = cx.diff(d)
    for i, (sv, so) in enumerate(src_offs):
        for j, (tv, to) in enumerate(dst_offs):
            blk = _elem_matrix(alg, entries[i][j], sv, tv, p)
            m[to:to + blk.shape[0], so:so + blk.shape[1]] = blk
    return m


def _map_coords(alg, x, y, dx: int, dy: int):
    """Unknown coordinates of an A-linear map x_dx -> y_dy: one per
    (source summand, target summand, connecting path)."""
    coords = []
    for i, u in enumerate(x.summands(dx)):
        for j, w in enumerate(y.summands(dy)):
            for g_idx in alg.paths_between(w, u):
                coords.append((i, j, g_idx))
    return coords


def _coords_to_matrix(alg, x, y, dx: int, dy: int, coords, vec, p: int):
    src_offs, src_total = _space(alg, x, dx)
    dst_offs, dst_total = _space(alg, y, dy)
    m = np.zeros((dst_total, src_total), dtype=np.int64)
    for (i, j, g_idx), c in zip(coords, vec):
        if c % p == 0:
            continue
        sv, so = src_offs[i]
        tv, to = dst_offs[j]
        blk = _premult_matrix(alg, g_idx, sv, tv, p)
        m[to:to + blk.shape[0], so:so + blk.shape[1]] = (
            m[to:to + blk.shape[0], so:so + blk.shape[1]] + c * blk) % p
    return m


def _matrix_to_coords(alg, x, y, dx: int, dy: int, coords, m, p: int):
    """Read premultiplication coordinates back off a vector-space matrix
    by evaluating on the unit path of each source summand."""
    src_offs, _ = _space(alg, x, dx)
    dst_offs, _ = _space(alg, y, dy)
    out = []
    for (i, j, g_idx) in coords:
        sv, so = src_offs[i]
        tv, to = dst_offs[j]
        src_basis = _proj_basis(alg, sv)
        dst_basis = _proj_basis(alg, tv)
        unit_col = so + src_basis.index(alg.unit_index(sv))
        row = to + dst_basis.index(g_idx)
        out.append(int(m[row, unit_col]) % p)
    return out


def hom_oracle(alg, x, y, n: int, p: int) -> int:
    """dim Hom_{K}(X, Y[n]) by solving the chain-map equations directly
    on vector-space matrices and quotienting by null-homotopies."""
    degs_f = sorted(d for d in x.support if (d + n) in y.support)
    f_coords = {d: _map_coords(alg, x, y, d, d + n) for d in degs_f}
    f_index = {}
    nf = 0
    for d in degs_f:
        for c in f_coords[d]:
            f_index[(d, c)] = nf
            nf += 1
    if nf == 0:
        return 0
    sign = (-1) ** n

    # chain-map condition: sign * d_Y f_d - f_{d+1} d_X = 0 in every degree
    rows = []
    for d in sorted(set(x.support)):
        tgt = d + n + 1
        if tgt not in y.support:
            continue
        _, x_dim = _space(alg, x, d)
        _, y_dim = _space(alg, y, tgt)
        if y_dim == 0 or x_dim == 0:
            continue
        eq = np.zeros((y_dim * x_dim, nf), dtype=np.int64)
        if d in degs_f:
            dy = _diff_matrix(alg, y, d + n, p)
            for c in f_coords[d]:
                fm = _coords_to_matrix(alg, x, y, d, d + n, f_coords[d],
                                       [1 if cc == c else 0 for cc in f_coords[d]], p)
                eq[:, f_index[(d, c)]] = (sign * (dy @ fm)).ravel() % p
        if (d + 1) in degs_f:
            dxm = _diff_matrix(alg, x, d, p)
            for c in f_coords[d + 1]:
                fm = _coords_to_matrix(alg, x, y, d + 1, d + n + 1,
                                       f_coords[d + 1],
                                       [1 if cc == c else 0 for cc in f_coords[d + 1]], p)
                eq[:, f_index[(d + 1, c)]] = (
                    eq[:, f_index[(d + 1, c)]] - (fm @ dxm).ravel()) % p
        rows.append(eq % p)
    eqm = np.vstack(rows) if rows else np.zeros((0, nf), dtype=np.int64)
    cycles = nf - rank_oracle_gauss(eqm, p)

    # null-homotopies: f = sign * d_Y h_d + h_{d+1} d_X
    degs_h = sorted(d for d in x.support if (d + n - 1) in y.support)
    h_coords = {d: _map_coords(alg, x, y, d, d + n - 1) for d in degs_h}
    nh = sum(len(h_coords[d]) for d in degs_h)
    bnd = np.zeros((nf, nh), dtype=np.int64)
    col = 0
    for d in degs_h:
        for c in h_coords[d]:
            hm = _coords_to_matrix(alg, x, y, d, d + n - 1, h_coords[d],
                                   [1 if cc == c else 0 for cc in h_coords[d]], p)
            # contribution to f_d via d_Y h_d
            if d in degs_f:
                dy = _diff_matrix(alg, y, d + n - 1, p)
                fd = (sign * (dy @ hm)) % p
                vec = _matrix_to_coords(alg, x, y, d, d + n, f_coords[d], fd, p)
                for cc, val in zip(f_coords[d], vec):
                    bnd[f_index[(d, cc)], col] = (bnd[f_index[(d, cc)], col] + val) % p
            # contribution to f_{d-1} via h_d d_X
            if (d - 1) in degs_f:
                dxm = _diff_matrix(alg, x, d - 1, p)
                fd = (hm @ dxm) % p
                vec = _matrix_to_coords(alg, x, y, d - 1, d + n - 1,
                                        f_coords[d - 1], fd, p)
                for cc, val in zip(f_coords[d - 1], vec):
                    bnd[f_index[(d - 1, cc)], col] = (
                        bnd[f_index[(d - 1, cc)], col] + val) % p
            col += 1
    boundaries = rank_oracle_gauss(bnd, p)
    return cycles - boundaries


def rank_oracle_gauss(mat: np.ndarray, p: int) -> int:
    """Rank over GF(p) via pure-Python row reduction; used where minor
    enumeration would be too slow, still independent of the library
    implementation."""
    m = [[int(v) % p for v in row] for row in np.asarray(mat)]
    rows = len(m)
    cols = len(m[0]) if rows else 0
    rank = 0
    for c in range(cols):
        piv = next((i for i in range(rank, rows) if m[i][c]), None)
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        inv = pow(m[rank][c], p - 2, p)
        m[rank] = [(v * inv) % p for v in m[rank]]
        for i in range(rows):
            if i != rank and m[i][c]:
                f = m[i][c]
                m[i] = [(a - f * b) % p for a, b in zip(m[i], m[rank])]
        rank += 1
    return rank


# -- random instances and witness checking --


def random_graph(rng, max_orbits: int = 6, w_lo: int = -3, w_hi: int = 3,
                 edge_prob: float = 0.35, name: str = "random"):
    """Random aperiodic shift-graph with identity self-edges and uniform
    extra hom edges; structurally valid by construction."""
    from derhed.shiftgraph import HomEdge, Orbit, ShiftGraph

    n = int(rng.integers(1, max_orbits + 1))
    ids = [f"O{i}" for i in range(n)]
    homs = {}
    for a in ids:
        weights = {0}
        for b in ids:
            ws = set()
            if a == b:
                ws.add(0)
            for w in range(w_lo, w_hi + 1):
                if w == 0 and a == b:
                    continue
                if rng.random() < edge_prob / (w_hi - w_lo + 1) * 2:
                    ws.add(w)
            if ws:
                homs[(a, b)] = tuple(
                    HomEdge(w, 1, all_iso=(a == b and w == 0)) for w in sorted(ws))
    return ShiftGraph(name, [Orbit(i) for i in ids], homs)


def check_witness(g, steps, src, dst) -> bool:
    """Whether a reported witness is a legal walk (hom steps and unit shifts) from src to dst."""
    if not steps:
        return False
    if steps[0].kind != "start" or steps[0].at != src:
        return False
    cur = steps[0].at
    for s in steps[1:]:
        if s.kind == "shift":
            if s.at.orbit != cur.orbit or s.at.offset != cur.offset + 1:
                return False
        elif s.kind == "hom":
            w = s.at.offset - cur.offset
            if not any(e.weight == w
                       for e in g.edges_between(cur.orbit, s.at.orbit)):
                return False
        else:
            return False
        cur = s.at
    return cur == dst
