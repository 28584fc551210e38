"""Hyperbolicity parameters, BFS orderings and cycle fillings."""
from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .core import max_metric_triangle_side
from .errors import CapReached, InvariantError, NotAClosedWalk, NotApplicable
from .graph import Graph, mask_to_list
from .recognition import check_meshed, is_weakly_modular


# -- four-point hyperbolicity -------------------------------------------------
def _fourpoint_block(D, a):
    """Doubled-delta contributions for quadruples (a, b, c, d) over all b, c, d."""
    Da = D[a]
    s1 = Da[:, None, None] + D[None, :, :]
    s2 = Da[None, :, None] + D[:, None, :]
    s3 = Da[None, None, :] + D[:, :, None]
    hi = np.maximum(np.maximum(s1, s2), s3)
    lo = np.minimum(np.minimum(s1, s2), s3)
    return 2 * hi - (s1 + s2 + s3 - lo)   # largest minus middle, i.e. 2*delta


def hyperbolicity_delta(g: Graph) -> tuple[Fraction, tuple[int, int, int, int]]:
    """Four-point delta and the lexicographically smallest quadruple a<b<c<d
    attaining it (the all-zero quadruple when fewer than four vertices)."""
    D = g.dist
    n = g.n
    best = 0
    for a in range(n):
        best = max(best, int(_fourpoint_block(D, a).max()))
    witness = (0, 0, 0, 0)
    if best > 0:
        idx = np.arange(n)
        ordered = (idx[:, None, None] < idx[None, :, None]) & (idx[None, :, None] < idx[None, None, :])
        for a in range(n):
            hits = np.argwhere((_fourpoint_block(D, a) == best) & ordered & (idx[:, None, None] > a))
            if hits.size:
                b, c, d = (int(t) for t in hits[0])
                witness = (a, b, c, d)
                break
    return Fraction(best, 2), witness


# -- isometric grids -----------------------------------------------------------
def _embed_grid(g: Graph, k: int):
    """Isometric embedding of the (k+1)x(k+1) grid as a dict, or None."""
    D = g.dist.tolist()
    adj = g.adj_mask
    cells = [(i, j) for i in range(k + 1) for j in range(k + 1)]
    img: dict = {}
    placed: list = []

    def go(t):
        if t == len(cells):
            return True
        i, j = cells[t]
        if t == 0:
            cand = (1 << g.n) - 1
        else:
            cand = (1 << g.n) - 1
            if j > 0:
                cand &= adj[img[(i, j - 1)]]
            if i > 0:
                cand &= adj[img[(i - 1, j)]]
            cand &= g.sphere(img[(0, 0)], i + j)
        for x in mask_to_list(cand):
            row = D[x]
            if any(row[y] != abs(i - a) + abs(j - b) for (a, b), y in placed):
                continue
            img[(i, j)] = x
            placed.append(((i, j), x))
            if go(t + 1):
                return True
            placed.pop()
        img.pop((i, j), None)
        return False

    return dict(img) if go(0) else None


def max_isometric_grid_side(g: Graph, cap: int | None = None):
    """Largest k such that the grid with k edges per side embeds isometrically.

    Returns (kappa, embedding) where embedding maps (i, j) to vertices.
    Raises CapReached when an embedding of side ``cap`` exists.
    """
    limit = g.diameter // 2
    best, wit = 0, {(0, 0): 0}
    k = 1
    while k <= limit and (cap is None or k <= cap):
        emb = _embed_grid(g, k)
        if emb is None:
            break
        best, wit = k, emb
        if cap is not None and k == cap:
            raise CapReached(f"isometric grid of side {cap} exists", value=cap, witness=emb)
        k += 1
    return best, wit


# -- interval thinness -----------------------------------------------------------
def interval_thinness(g: Graph):
    """Max d(x, y) over x, y in some I(u, v) with d(u, x) = d(u, y); witness (u, v, x, y)."""
    D = g.dist
    I = g.interval_masks()
    best, wit = 0, (0, 0, 0, 0)
    for u in range(g.n):
        for v in range(u + 1, g.n):
            members = np.array(mask_to_list(I[u][v]))
            levels = D[u, members]
            for lev in np.unique(levels):
                grp = members[levels == lev]
                if grp.size < 2:
                    continue
                sub = D[np.ix_(grp, grp)]
                m = int(sub.max())
                if m > best:
                    a, b = np.unravel_index(int(np.argmax(sub)), sub.shape)
                    best, wit = m, (u, v, int(grp[a]), int(grp[b]))
    return best, wit


@dataclass
class HyperbolicityReport:
    delta: Fraction
    mu: int
    kappa: int
    nu_thin: int
    witnesses: dict = field(default_factory=dict)
    checks: dict = field(default_factory=dict)
    applicable: bool = True

    def to_json(self) -> dict:
        return {"delta": str(self.delta), "mu": self.mu, "kappa": self.kappa,
                "nu_thin": self.nu_thin, "applicable": self.applicable,
                "witnesses": self.witnesses, "checks": self.checks}


def verify_hyperbolicity_bounds(g: Graph, cap: int | None = None) -> HyperbolicityReport:
    """All four parameters plus the inequalities relating them.

    ``checks`` holds ``mu<=4delta``, ``kappa<=delta``, ``nu<=2kappa+mu``,
    ``delta<=32kappa+20mu`` and ``mu<=4delta+1``. The last one is what the
    four-point argument on a metric triangle actually yields; the first
    fails on K3 (delta 0, mu 1). For graphs that are not weakly modular the
    report is attached to the raised NotApplicable with checks unset.
    """
    delta, dwit = hyperbolicity_delta(g)
    mu, tri = max_metric_triangle_side(g)
    kappa, grid = max_isometric_grid_side(g, cap)
    nu, nwit = interval_thinness(g)
    witnesses = {"delta": list(dwit), "mu": [tri.v1, tri.v2, tri.v3],
                 "kappa": {f"{i},{j}": v for (i, j), v in sorted(grid.items())},
                 "nu_thin": list(nwit)}
    report = HyperbolicityReport(delta, mu, kappa, nu, witnesses)
    names = ("mu<=4delta", "kappa<=delta", "nu<=2kappa+mu", "delta<=32kappa+20mu", "mu<=4delta+1")
    if not is_weakly_modular(g):
        report.applicable = False
        report.checks = dict.fromkeys(names)
        raise NotApplicable("hyperbolicity bounds need a weakly modular graph", report=report)
    report.checks = dict(zip(names, (
        mu <= 4 * delta,
        kappa <= delta,
        nu <= 2 * kappa + mu,
        delta <= 32 * kappa + 20 * mu,
        mu <= 4 * delta + 1,
    )))
    return report


# -- BFS orders ------------------------------------------------------------------
@dataclass(frozen=True)
class BfsOrder:
    order: tuple[int, ...]
    parent: tuple[int | None, ...]   # indexed by vertex; None for the base
    base: int


def bfs_order(g: Graph, v0: int, seed: int) -> BfsOrder:
    """Breadth-first order from v0; neighbours are enqueued in a seeded random order."""
    if not 0 <= v0 < g.n:
        raise ValueError(f"vertex {v0} not in graph")
    rng = random.Random(seed)
    parent: list = [None] * g.n
    seen = [False] * g.n
    seen[v0] = True
    order = [v0]
    head = 0
    while head < len(order):
        x = order[head]
        head += 1
        nbrs = list(g.adj[x])
        rng.shuffle(nbrs)
        for y in nbrs:
            if not seen[y]:
                seen[y] = True
                parent[y] = x
                order.append(y)
    return BfsOrder(tuple(order), tuple(parent), v0)


def _check_permutation(g: Graph, order) -> list[int]:
    order = list(order)
    if sorted(order) != list(range(g.n)):
        raise ValueError("order must be a permutation of the vertices")
    return order


def is_bfs_order(g: Graph, order) -> bool:
    """Queue-order test: with each vertex's father its earliest neighbour in
    the order, fathers are nondecreasing in position, and distances from the
    first vertex are nondecreasing."""
    order = _check_permutation(g, order)
    pos = {v: i for i, v in enumerate(order)}
    D0 = g.dist[order[0]]
    last_father = -1
    for i, v in enumerate(order[1:], 1):
        earlier = [pos[w] for w in g.adj[v] if pos[w] < i]
        if not earlier:
            return False
        f = min(earlier)
        if f < last_father or D0[v] < D0[order[i - 1]]:
            return False
        last_father = f
    return True


def is_distance_preserving(g: Graph, order):
    """Are all prefix-induced subgraphs isometric? Returns (ok, witness pair).

    Prefixes grow one vertex at a time; once the previous prefix is known to
    be isometric, distances from the newcomer inside the new prefix are one
    more than the minimum over its neighbours already present.
    """
    order = _check_permutation(g, order)
    pos = {v: i for i, v in enumerate(order)}
    D = g.dist
    big = np.iinfo(np.int64).max // 4
    for i in range(1, len(order)):
        v = order[i]
        prefix = np.array(order[:i])
        inside = [w for w in g.adj[v] if pos[w] < i]
        if inside:
            through = D[np.ix_(inside, prefix)].min(axis=0) + 1
        else:
            through = np.full(i, big)
        bad = np.flatnonzero(through != D[v, prefix])
        if bad.size:
            return False, (int(prefix[bad[0]]), v)
    return True, None


# -- cycle filling ---------------------------------------------------------------
@dataclass(frozen=True)
class Move:
    """Replace ``walk[at:at+len(replace)]`` by ``with_``. ``face`` is the
    triangle or square whose boundary is replace + reversed(with_); an empty
    face marks a backtrack cancellation a-b-a -> a, which costs no area."""

    face: tuple[int, ...]
    replace: tuple[int, ...]
    with_: tuple[int, ...]
    at: int

    def to_json(self):
        return {"face": list(self.face), "replace": list(self.replace),
                "with": list(self.with_), "at": self.at}


@dataclass(frozen=True)
class DiscFilling:
    cycle: tuple[int, ...]
    moves: tuple[Move, ...]

    @property
    def area(self) -> int:
        return sum(1 for m in self.moves if m.face)

    @property
    def length(self) -> int:
        return len(self.cycle) if len(self.cycle) > 1 else 0

    def to_json(self):
        return {"cycle": list(self.cycle), "length": self.length, "area": self.area,
                "moves": [m.to_json() for m in self.moves]}


def _normalise_cycle(g: Graph, cycle) -> list[int]:
    cyc = [int(v) for v in cycle]
    if not cyc:
        raise NotAClosedWalk("empty cycle")
    if len(cyc) > 1 and cyc[0] == cyc[-1]:
        cyc = cyc[:-1]
    for v in cyc:
        if not 0 <= v < g.n:
            raise NotAClosedWalk(f"vertex {v} not in graph")
    if len(cyc) > 1:
        for a, b in zip(cyc, cyc[1:] + cyc[:1]):
            if not g.has_edge(a, b):
                raise NotAClosedWalk(f"{a} and {b} are not adjacent")
    return cyc


class _Filler:
    def __init__(self, g: Graph):
        self.g = g
        self.D = g.dist
        self.moves: list[Move] = []

    def _pick(self, u, a, b, bound2):
        """Smallest common neighbour x of a, b with 2 d(u, x) <= bound2."""
        for x in mask_to_list(self.g.adj_mask[a] & self.g.adj_mask[b]):
            if 2 * self.D[u, x] <= bound2:
                return x
        raise InvariantError(f"no suitable common neighbour of {a} and {b}")

    def _quad(self, at, vp, v, w, mid):
        """Turn the walk piece [vp, v, w] into [vp, mid, w]."""
        g = self.g
        if not g.has_edge(v, mid):
            self.moves.append(Move((vp, v, w, mid), (vp, v, w), (vp, mid, w), at))
        else:
            self.moves.append(Move((vp, mid, v), (vp, v), (vp, mid, v), at))
            self.moves.append(Move((mid, v, w), (mid, v, w), (mid, w), at + 1))

    def extend(self, P: list[int], w: int) -> list[int]:
        """The walk currently starts with P + [w]; rewrite that prefix into a
        geodesic from P[0] to w and return it."""
        g, D = self.g, self.D
        u, v = P[0], P[-1]
        k, l = len(P) - 1, int(D[u, w])
        if l == k + 1:
            return P + [w]
        vp, Pp, at = P[-2], P[:-1], len(P) - 2
        if l == k:
            if g.has_edge(vp, w):
                self.moves.append(Move((vp, v, w), (vp, v, w), (vp, w), at))
                return Pp + [w]
            wp = self._pick(u, vp, w, 2 * k - 1)
            self._quad(at, vp, v, w, wp)
            return self.extend(Pp, wp) + [w]
        # l == k - 1
        if w == vp:
            self.moves.append(Move((), (vp, v, vp), (vp,), at))
            return Pp
        if g.has_edge(vp, w):
            self.moves.append(Move((vp, v, w), (vp, v, w), (vp, w), at))
            return self.extend(Pp, w)
        zp = self._pick(u, vp, w, 2 * k - 2)
        self._quad(at, vp, v, w, zp)
        Z = self.extend(Pp, zp)
        if D[u, zp] == k - 2:
            return Z + [w]
        return self.extend(Z, w)


def fill_cycle(g: Graph, cycle) -> DiscFilling:
    """Null-homotopy of a closed walk by triangle and square moves.

    Geodesics from the first vertex to each successive vertex are built one
    after another; each new geodesic is obtained from the previous one plus
    the next cycle edge by the three-case recursion on the distance change.
    """
    if not check_meshed(g):
        raise NotApplicable("fill_cycle requires a meshed graph")
    cyc = _normalise_cycle(g, cycle)
    filler = _Filler(g)
    P = [cyc[0]]
    for w in cyc[1:] + cyc[:1] if len(cyc) > 1 else []:
        P = filler.extend(P, w)
    if P != [cyc[0]]:
        raise InvariantError("filling did not close up")
    return DiscFilling(tuple(cyc), tuple(filler.moves))


def _is_face(g: Graph, face) -> bool:
    k = len(face)
    if len(set(face)) != k or k not in (3, 4):
        return False
    ring = all(g.has_edge(face[i], face[(i + 1) % k]) for i in range(k))
    if k == 3:
        return ring
    return ring and not g.has_edge(face[0], face[2]) and not g.has_edge(face[1], face[3])


def _same_cycle(a, b) -> bool:
    if len(a) != len(b):
        return False
    doubled = list(b) + list(b)
    rev = doubled[::-1]
    k = len(a)
    return any(doubled[i:i + k] == list(a) or rev[i:i + k] == list(a) for i in range(k))


def replay(g: Graph, cycle, moves) -> list[int]:
    """Apply moves to the closed walk and return the final walk; raises
    ValueError on any invalid move."""
    cyc = _normalise_cycle(g, cycle)
    walk = cyc + [cyc[0]] if len(cyc) > 1 else cyc
    for idx, m in enumerate(moves):
        r, w, at = list(m.replace), list(m.with_), m.at
        if walk[at:at + len(r)] != r:
            raise ValueError(f"move {idx}: walk does not contain {r} at {at}")
        if r[0] != w[0] or r[-1] != w[-1]:
            raise ValueError(f"move {idx}: endpoints differ")
        if not m.face:
            if not (len(r) == 3 and r[0] == r[2] and w == r[:1] and g.has_edge(r[0], r[1])):
                raise ValueError(f"move {idx}: bad backtrack cancellation")
        else:
            if not _is_face(g, m.face):
                raise ValueError(f"move {idx}: {m.face} is not a triangle or induced square")
            boundary = r + w[::-1][1:-1]
            if not _same_cycle(boundary, m.face):
                raise ValueError(f"move {idx}: replaced paths do not bound the face")
        walk = walk[:at] + w + walk[at + len(r):]
    return walk
