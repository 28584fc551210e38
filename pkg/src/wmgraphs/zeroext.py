"""Minimum 0-extension: place n facilities on vertices to minimise

    sum_{i,v} b[i][v] * d(v, x_i)  +  sum_{i<j} c[i][j] * d(x_i, x_j).

Weights are exact rationals. ``solve_exact`` enumerates all placements;
``approx2`` solves the problem on the barycentric graph (distances halved)
and rounds each chosen Boolean-gated set to the gate of a fixed anchor.
"""
from __future__ import annotations

import json
import math
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product

import numpy as np

from .core import _gate_mask
from .errors import BudgetExceeded, GraphFormatError
from .graph import Graph, list_to_mask
from .swm import _require_swm, barycentric_graph

DEFAULT_BUDGET = 10 ** 7


def _weight(x) -> Fraction:
    if isinstance(x, bool):
        raise GraphFormatError(f"bad weight {x!r}")
    try:
        w = Fraction(str(x)) if isinstance(x, float) else Fraction(x)
    except (TypeError, ValueError, ZeroDivisionError):
        raise GraphFormatError(f"bad weight {x!r}") from None
    if w < 0:
        raise GraphFormatError(f"negative weight {x!r}")
    return w


@dataclass
class ZeroExtInstance:
    n: int
    b: dict = field(default_factory=dict)   # (facility, vertex) -> Fraction
    c: dict = field(default_factory=dict)   # (i, j) with i < j -> Fraction

    def __post_init__(self):
        if self.n < 0:
            raise GraphFormatError("number of facilities must be nonnegative")
        b, c = {}, {}
        for (i, v), w in self.b.items():
            if not 0 <= i < self.n:
                raise GraphFormatError(f"facility {i} out of range")
            b[(i, v)] = b.get((i, v), 0) + _weight(w)
        for (i, j), w in self.c.items():
            if i == j or not (0 <= i < self.n and 0 <= j < self.n):
                raise GraphFormatError(f"bad facility pair ({i}, {j})")
            key = (min(i, j), max(i, j))
            c[key] = c.get(key, 0) + _weight(w)
        self.b, self.c = b, c

    @classmethod
    def from_json(cls, data) -> "ZeroExtInstance":
        if isinstance(data, str):
            data = json.loads(data)
        try:
            return cls(int(data["n"]),
                       {(int(i), int(v)): w for i, v, w in data.get("b", [])},
                       {(int(i), int(j)): w for i, j, w in data.get("c", [])})
        except (KeyError, TypeError, ValueError) as exc:
            raise GraphFormatError(f"bad instance: {exc}") from None

    def to_json(self) -> dict:
        return {"n": self.n,
                "b": [[i, v, str(w)] for (i, v), w in sorted(self.b.items())],
                "c": [[i, j, str(w)] for (i, j), w in sorted(self.c.items())]}

    def check_vertices(self, g: Graph) -> None:
        for _, v in self.b:
            if not 0 <= v < g.n:
                raise GraphFormatError(f"instance mentions vertex {v} outside the graph")


@dataclass(frozen=True)
class ZeroExtSolution:
    assignment: tuple[int, ...]
    cost: Fraction
    bound: Fraction | None = None
    relaxed: tuple[int, ...] | None = None   # nodes of the barycentric graph, approx2 only

    def to_json(self, exact: Fraction | None = None) -> dict:
        out = {"assignment": list(self.assignment), "cost": str(self.cost),
               "bound": None if self.bound is None else str(self.bound)}
        if exact is not None:
            out["ratio"] = str(self.cost / exact) if exact else ("1" if self.cost == 0 else None)
        return out


def cost(g: Graph, inst: ZeroExtInstance, assignment) -> Fraction:
    assignment = tuple(assignment)
    if len(assignment) != inst.n:
        raise ValueError(f"assignment has {len(assignment)} entries, expected {inst.n}")
    for x in assignment:
        if not (isinstance(x, (int, np.integer)) and 0 <= x < g.n):
            raise ValueError(f"invalid vertex {x!r} in assignment")
    inst.check_vertices(g)
    D = g.dist
    total = Fraction(0)
    for (i, v), w in inst.b.items():
        total += w * int(D[v, assignment[i]])
    for (i, j), w in inst.c.items():
        total += w * int(D[assignment[i], assignment[j]])
    return total


def _minimise(dist: np.ndarray, anchors, inst: ZeroExtInstance, budget: int):
    """Exact minimum of the objective over placements on the nodes of ``dist``.

    ``anchors[v]`` is the node standing for vertex v. Returns (assignment,
    integer cost, scale) with true cost = integer cost / scale.
    """
    N, n = dist.shape[0], inst.n
    if n == 0:
        return (), 0, 1
    if N ** n > budget:
        raise BudgetExceeded(f"{N}^{n} placements exceed budget {budget}")
    weights = list(inst.b.values()) + list(inst.c.values())
    scale = math.lcm(*(w.denominator for w in weights)) if weights else 1
    total_weight = sum(weights, Fraction(0)) * scale
    dtype = np.int64 if total_weight * int(dist.max(initial=0)) < 2 ** 62 else object
    D = dist.astype(dtype)
    unary = np.zeros((n, N), dtype=dtype)
    for (i, v), w in inst.b.items():
        unary[i] += int(w * scale) * D[anchors[v]]
    pairs = [(i, j, int(w * scale)) for (i, j), w in inst.c.items()]

    def block(first):
        # objective over facilities 1..n-1 with facility 0 fixed at ``first``
        shape = (N,) * (n - 1)
        T = np.full(shape, unary[0, first], dtype=dtype)
        for i in range(1, n):
            T = T + unary[i].reshape([N if a == i - 1 else 1 for a in range(n - 1)])
        for i, j, w in pairs:
            if i == 0:
                T = T + w * D[first].reshape([N if a == j - 1 else 1 for a in range(n - 1)])
            else:
                view = [1] * (n - 1)
                view[i - 1] = view[j - 1] = N
                T = T + w * D.reshape(view)
        return T

    best, best_assign = None, None
    for first in range(N):
        T = block(first)
        if n == 1:
            val, rest = T, ()
        else:
            flat = int(np.argmin(T)) if dtype is np.int64 else min(range(T.size), key=lambda k: T.flat[k])
            val, rest = T.flat[flat], np.unravel_index(flat, T.shape)
        if best is None or val < best:
            best, best_assign = val, (first,) + tuple(int(r) for r in rest)
    return best_assign, int(best), scale


def solve_exact(g: Graph, inst: ZeroExtInstance, budget: int = DEFAULT_BUDGET) -> ZeroExtSolution:
    inst.check_vertices(g)
    assign, val, scale = _minimise(g.dist, list(range(g.n)), inst, budget)
    return ZeroExtSolution(assign, Fraction(val, scale))


def round_to_gate(g: Graph, members_mask: int, anchor: int) -> int:
    gt = _gate_mask(g, members_mask, anchor)
    if gt is None:
        raise ValueError("rounding target is not gated")
    return gt


def approx2(g: Graph, inst: ZeroExtInstance, anchor: int = 0,
            budget: int = DEFAULT_BUDGET) -> ZeroExtSolution:
    _require_swm(g, "approx2")
    inst.check_vertices(g)
    if not 0 <= anchor < g.n:
        raise ValueError(f"anchor {anchor} not in graph")
    bary = barycentric_graph(g)
    relaxed, val, scale = _minimise(bary.graph.dist, bary.origin, inst, budget)
    bound = Fraction(val, 2 * scale)
    assignment = tuple(round_to_gate(g, list_to_mask(bary.sets[x]), anchor) for x in relaxed)
    return ZeroExtSolution(assignment, cost(g, inst, assignment), bound, relaxed)


def brute_force_cost_table(g: Graph, inst: ZeroExtInstance):
    """Every placement with its exact cost, in lexicographic order (test helper)."""
    return [(a, cost(g, inst, a)) for a in product(range(g.n), repeat=inst.n)]
