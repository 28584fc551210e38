"""Membership tests for the weakly modular hierarchy.

Every ``check_*`` function returns a :class:`Verdict`. A failing verdict
carries the lexicographically smallest violating tuple found by the scan
order documented on the function.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations

import numpy as np

from .errors import NotApplicable
from .graph import Graph, bool_to_mask, mask_to_list, popcount
from .patterns import find_pattern, induced_squares


@dataclass(frozen=True)
class Verdict:
    holds: bool | None
    witness: tuple | None = None

    @property
    def label(self) -> str:
        return {True: "yes", False: "no", None: "not-evaluated"}[self.holds]

    def __bool__(self):
        return bool(self.holds)

    def to_json(self):
        return {"verdict": self.label, "witness": None if self.witness is None else list(self.witness)}


YES = Verdict(True)


def _memo(g: Graph, key, compute):
    cache = g._cache.setdefault("verdicts", {})
    if key not in cache:
        cache[key] = compute(g)
    return cache[key]


# -- triangle / quadrangle conditions ------------------------------------
def _tc_qc_violation(g: Graph, local: bool):
    """Scan bases u in increasing order; report TC failures before QC ones."""
    adj, n = g.adj_mask, g.n
    D = g.dist.tolist()
    for u in range(n):
        sm = g.sphere_masks(u)
        du = D[u]
        tc, qc = [], []
        for v, w in g.edges:
            k = du[v]
            if k == du[w] and k >= 1 and (not local or k == 2):
                if not adj[v] & adj[w] & sm[k - 1]:
                    tc.append(("TC", u, v, w))
        if tc:
            return min(tc)
        for z in range(n):
            kz = du[z]
            if kz < 3 or (local and kz != 3):
                continue
            below = mask_to_list(adj[z] & sm[kz - 1])
            for i, v in enumerate(below):
                for w in below[i + 1:]:
                    if not adj[v] >> w & 1 and not adj[v] & adj[w] & sm[kz - 2]:
                        qc.append(("QC", u, v, w, z))
        if qc:
            return min(qc)
    return None


def check_weakly_modular(g: Graph) -> Verdict:
    """Witness: ("TC", u, v, w) or ("QC", u, v, w, z)."""
    def run(g):
        wit = _tc_qc_violation(g, local=False)
        return YES if wit is None else Verdict(False, wit)
    return _memo(g, "wm", run)


def is_weakly_modular(g: Graph) -> bool:
    return check_weakly_modular(g).holds


def check_locally_weakly_modular(g: Graph) -> Verdict:
    def run(g):
        wit = _tc_qc_violation(g, local=True)
        return YES if wit is None else Verdict(False, ("L" + wit[0],) + wit[1:])
    return _memo(g, "lwm", run)


# -- metric families -----------------------------------------------------
def _medianless_triple(g: Graph):
    I = g.interval_masks()
    for x, y, z in combinations(range(g.n), 3):
        if not I[x][y] & I[y][z] & I[x][z]:
            return (x, y, z)
    return None


def check_modular(g: Graph) -> Verdict:
    """Bipartite and weakly modular. Witness: a triple with no median."""
    def run(g):
        D0 = g.dist[0]
        bipartite = all(D0[u] != D0[v] for u, v in g.edges)
        if bipartite and is_weakly_modular(g):
            return YES
        return Verdict(False, _medianless_triple(g))
    return _memo(g, "modular", run)


def _distance_two_pairs(g: Graph):
    for v in range(g.n):
        for w in mask_to_list(g.sphere(v, 2)):
            if w > v:
                yield v, w


def check_meshed(g: Graph) -> Verdict:
    """Witness (u, v, w): d(v, w) = 2 and every common neighbour x of v, w
    has 2 d(u, x) > d(u, v) + d(u, w)."""
    def run(g):
        D = g.dist
        best = None
        for v, w in _distance_two_pairs(g):
            common = mask_to_list(g.adj_mask[v] & g.adj_mask[w])
            bad = np.flatnonzero(2 * D[common].min(axis=0) > D[v] + D[w])
            if bad.size:
                cand = (int(bad[0]), v, w)
                if best is None or cand < best:
                    best = cand
        return YES if best is None else Verdict(False, best)
    return _memo(g, "meshed", run)


def check_pseudo_modular(g: Graph) -> Verdict:
    """Witness (u, w, v): 1 <= d(u, w) <= 2, d(v, u) = d(v, w) = k >= 2, and
    no x adjacent to both u and w has d(v, x) = k - 1."""
    def run(g):
        D = g.dist
        best = None
        for u in range(g.n):
            for w in range(u + 1, g.n):
                if D[u, w] > 2:
                    continue
                common = mask_to_list(g.adj_mask[u] & g.adj_mask[w])
                need = (D[u] == D[w]) & (D[u] >= 2)
                if common:
                    need &= ~(D[common] == D[u] - 1).any(axis=0)
                bad = np.flatnonzero(need)
                if bad.size:
                    cand = (u, w, int(bad[0]))
                    if best is None or cand < best:
                        best = cand
        return YES if best is None else Verdict(False, best)
    return _memo(g, "pseudo-modular", run)


def _pattern_free(g, *names):
    for name in names:
        hit = find_pattern(g, name)
        if hit is not None:
            return Verdict(False, (name,) + hit.vertices)
    return YES


def _wm_and(g, *names):
    wm = check_weakly_modular(g)
    if not wm:
        return wm
    return _pattern_free(g, *names)


def check_bridged(g: Graph) -> Verdict:
    return _memo(g, "bridged", lambda g: _wm_and(g, "C4", "C5"))


def check_weakly_bridged(g: Graph) -> Verdict:
    return _memo(g, "weakly-bridged", lambda g: _wm_and(g, "C4"))


def check_thick(g: Graph) -> Verdict:
    """Witness (u, v): a distance-2 pair whose interval holds no square."""
    def run(g):
        adj = g.adj_mask
        for u, v in _distance_two_pairs(g):
            common = adj[u] & adj[v]
            if not any(common & ~adj[x] & ~(1 << x) for x in mask_to_list(common)):
                return Verdict(False, (u, v))
        return YES
    return _memo(g, "thick", run)


def check_thin(g: Graph) -> Verdict:
    def run(g):
        sq = induced_squares(g)
        return Verdict(False, sq[0]) if sq else YES
    return _memo(g, "thin", run)


FAMILY_CHECKS = {}


def check_metric_family(g: Graph, family: str) -> Verdict:
    try:
        return FAMILY_CHECKS[family](g)
    except KeyError:
        raise ValueError(f"unknown family {family!r}; expected one of {sorted(FAMILY_CHECKS)}") from None


# -- pre-median, swm, dual polar -------------------------------------------
def check_pre_median(g: Graph) -> Verdict:
    return _memo(g, "pre-median", lambda g: _wm_and(g, "K23", "W4minus"))


def _square_extends(g: Graph, sq) -> bool:
    adj = g.adj_mask
    x = sq
    if adj[x[0]] & adj[x[1]] & adj[x[2]] & adj[x[3]]:
        return True  # induced W4 (the square is induced, so the wheel is too)
    # a_i adjacent to x_i, x_{i+1} and to neither other square vertex
    slots = []
    for i in range(4):
        a, b, c, d = x[i], x[(i + 1) % 4], x[(i + 2) % 4], x[(i + 3) % 4]
        slots.append(adj[a] & adj[b] & ~adj[c] & ~adj[d])
    def pick(i, chosen):
        if i == 4:
            return True
        cand = slots[i]
        for y in chosen:
            cand &= adj[y]
        return any(pick(i + 1, chosen + [y]) for y in mask_to_list(cand))
    return pick(0, [])


def check_prime_pre_median(g: Graph) -> Verdict:
    """Pre-median and every induced square sits in an induced W4 or M4.
    Witness: ("square", x1, x2, x3, x4) for an unextendable square."""
    def run(g):
        pm = check_pre_median(g)
        if not pm:
            return pm
        for sq in induced_squares(g):
            if not _square_extends(g, sq):
                return Verdict(False, ("square",) + sq)
        return YES
    return _memo(g, "prime-pre-median", run)


def check_swm(g: Graph) -> Verdict:
    return _memo(g, "swm", lambda g: _wm_and(g, "K4minus", "K33minus-isometric"))


def is_swm(g: Graph) -> bool:
    return check_swm(g).holds


def check_dual_polar(g: Graph) -> Verdict:
    def run(g):
        s = check_swm(g)
        return s if not s else check_thick(g)
    return _memo(g, "dual-polar", run)


# -- Helly side --------------------------------------------------------------
def check_clique_helly(g: Graph) -> Verdict:
    """Witness: the first triangle (a, b, c) whose extension T* has no
    vertex adjacent to all its other members."""
    def run(g):
        adj = g.adj_mask
        for a in range(g.n):
            for b in mask_to_list(adj[a]):
                if b <= a:
                    continue
                for c in mask_to_list(adj[a] & adj[b]):
                    if c <= b:
                        continue
                    A, B, C = adj[a], adj[b], adj[c]
                    star = (A & B) | (A & C) | (B & C) | (1 << a) | (1 << b) | (1 << c)
                    if not any(star & ~(adj[u] | 1 << u) == 0 for u in mask_to_list(star)):
                        return Verdict(False, (a, b, c))
        return YES
    return _memo(g, "clique-Helly", run)


def dismantling_order(g: Graph):
    """Greedy elimination: repeatedly drop the smallest dominated vertex.

    Returns a list of (removed, dominator) pairs ending when one vertex is
    left, or None when the greedy gets stuck.
    """
    adj = [a | 1 << v for v, a in enumerate(g.adj_mask)]  # closed neighbourhoods
    alive = (1 << g.n) - 1
    steps = []
    while alive & (alive - 1):
        for x in mask_to_list(alive):
            nx_ = adj[x] & alive
            dom = next((y for y in mask_to_list(nx_ & ~(1 << x)) if nx_ & ~adj[y] == 0), None)
            if dom is not None:
                steps.append((x, dom))
                alive &= ~(1 << x)
                break
        else:
            return None
    return steps


def check_dismantlable(g: Graph) -> Verdict:
    def run(g):
        order = dismantling_order(g)
        if order is not None:
            return Verdict(True, tuple(x for x, _ in order))
        return Verdict(False, None)
    return _memo(g, "dismantlable", run)


def check_helly(g: Graph) -> Verdict:
    def run(g):
        ch = check_clique_helly(g)
        if not ch:
            return ch
        dm = check_dismantlable(g)
        return YES if dm else Verdict(False, ("not-dismantlable",))
    return _memo(g, "Helly", run)


# -- admissible orientations -------------------------------------------------
@dataclass(frozen=True)
class Orientation:
    """Direction per edge: ``arcs[(u, v)]`` with u < v is (tail, head)."""
    arcs: dict

    def points(self, a: int, b: int) -> bool:
        key = (min(a, b), max(a, b))
        return self.arcs[key] == (a, b)


@dataclass(frozen=True)
class OrientationResult:
    orientation: Orientation | None
    certificate: tuple = ()     # squares forming a contradictory cycle
    modular: bool = False

    @property
    def orientable(self) -> bool:
        return self.orientation is not None


def find_admissible_orientation(g: Graph) -> OrientationResult:
    """Solve 'opposite edges of each square point the same way' by parity
    union-find over one boolean per edge (True means low id -> high id)."""
    eid = {e: i for i, e in enumerate(g.edges)}
    m = len(eid)
    parent = list(range(m))
    parity = [0] * m          # parity relative to parent
    links = [[] for _ in range(m)]  # constraint graph: (other, parity, square)

    def find(i):
        path = []
        while parent[i] != i:
            path.append(i)
            i = parent[i]
        root, acc = i, 0
        for j in reversed(path):
            acc ^= parity[j]
            parity[j] = acc
            parent[j] = root
        return root

    def rel(a, b):  # value of edge variable for a->b relative to its own var
        return 0 if a < b else 1

    def var(a, b):
        return eid[(min(a, b), max(a, b))]

    def explain(src, dst):
        prev = {src: None}
        queue = [src]
        for x in queue:
            if x == dst:
                break
            for y, _, sq in links[x]:
                if y not in prev:
                    prev[y] = (x, sq)
                    queue.append(y)
        out = []
        x = dst
        while prev.get(x) is not None:
            x, sq = prev[x]
            out.append(sq)
        return out[::-1]

    for sq in induced_squares(g):
        x1, x2, x3, x4 = sq
        for (a, b), (c, d) in (((x1, x2), (x4, x3)), ((x2, x3), (x1, x4))):
            e, f = var(a, b), var(c, d)
            p = rel(a, b) ^ rel(c, d)
            re, rf = find(e), find(f)
            if re == rf:
                if parity[e] ^ parity[f] != p:
                    return OrientationResult(None, tuple(explain(e, f)) + (sq,), bool(check_modular(g)))
                continue
            parent[re] = rf
            parity[re] = parity[e] ^ parity[f] ^ p
            links[e].append((f, p, sq))
            links[f].append((e, p, sq))

    arcs = {}
    for (u, v), i in eid.items():
        find(i)
        value = parity[i] if parent[i] != i else 0
        arcs[(u, v)] = (u, v) if value == 0 else (v, u)
    return OrientationResult(Orientation(arcs), (), bool(check_modular(g)))


def check_orientable_modular(g: Graph) -> Verdict:
    def run(g):
        mod = check_modular(g)
        if not mod:
            return mod
        res = find_admissible_orientation(g)
        return YES if res.orientable else Verdict(False, tuple(x for sq in res.certificate for x in sq))
    return _memo(g, "orientable-modular", run)


# -- simple connectivity -----------------------------------------------------
@dataclass(frozen=True)
class SimpleConnectivity:
    simply_connected: bool
    complex: str   # "triangle-square" or "triangle"
    reason: str


def decide_simple_connectivity(g: Graph) -> SimpleConnectivity:
    if check_locally_weakly_modular(g):
        wm = is_weakly_modular(g)
        return SimpleConnectivity(wm, "triangle-square",
                                  "locally weakly modular; simply connected iff weakly modular")
    if check_clique_helly(g):
        helly = bool(check_helly(g))
        return SimpleConnectivity(helly, "triangle", "clique-Helly; simply connected iff Helly")
    raise NotApplicable("graph is neither locally weakly modular nor clique-Helly")


def is_two_connected(g: Graph) -> bool:
    if g.n < 3:
        return g.n == 2
    full = (1 << g.n) - 1
    from .core import is_connected_mask
    return all(is_connected_mask(g, full & ~(1 << v)) for v in range(g.n))


# -- report ------------------------------------------------------------------
FAMILY_CHECKS.update({
    "weakly-modular": check_weakly_modular,
    "locally-weakly-modular": check_locally_weakly_modular,
    "modular": check_modular,
    "orientable-modular": check_orientable_modular,
    "meshed": check_meshed,
    "pseudo-modular": check_pseudo_modular,
    "bridged": check_bridged,
    "weakly-bridged": check_weakly_bridged,
    "thick": check_thick,
    "thin": check_thin,
    "pre-median": check_pre_median,
    "prime-pre-median": check_prime_pre_median,
    "swm": check_swm,
    "dual-polar": check_dual_polar,
    "clique-Helly": check_clique_helly,
    "dismantlable": check_dismantlable,
    "Helly": check_helly,
})

FAMILIES = tuple(FAMILY_CHECKS)


@dataclass
class ClassReport:
    verdicts: dict = field(default_factory=dict)
    thick: bool | None = None
    cube_dimension: int | None = None
    two_connected: bool | None = None

    def __getitem__(self, family) -> Verdict:
        return self.verdicts[family]

    def to_json(self) -> dict:
        """Keys: one per family in ``FAMILIES`` mapping to
        ``{"verdict": "yes"|"no"|"not-evaluated", "witness": list|null}``, plus
        ``"parameters": {"thick", "cube-dimension", "two-connected"}``."""
        out = {f: v.to_json() for f, v in self.verdicts.items()}
        out["parameters"] = {"thick": self.thick, "cube-dimension": self.cube_dimension,
                             "two-connected": self.two_connected}
        return out


def recognize(g: Graph, families=None) -> ClassReport:
    wanted = FAMILIES if families is None else tuple(families)
    verdicts = {f: (FAMILY_CHECKS[f](g) if f in wanted else Verdict(None)) for f in FAMILIES}
    report = ClassReport(verdicts, thick=bool(check_thick(g)), two_connected=is_two_connected(g))
    if verdicts["swm"].holds or (verdicts["swm"].holds is None and is_swm(g)):
        from .swm import cube_dimension
        report.cube_dimension = cube_dimension(g)
    return report
