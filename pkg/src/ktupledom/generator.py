"""Seeded instance generation.

Staircase instances: two cliques C1 (``n1`` vertices) and C2 (``n2``) plus
``u`` universal vertices. C1 vertex ``i`` misses the C2 positions in its run
``[p_i, q_i]`` (1-based, inside ``n1+1 .. n1+n2``). When the runs' endpoints
are non-decreasing in ``i``, the non-neighbours of every vertex are
consecutive in the canonical order, in rows and columns alike.
"""
from __future__ import annotations

import bisect
import random
from dataclasses import dataclass

import numpy as np

from .errors import SpecViolation
from .graph import Graph
from .structure import C0PStructure, IntervalModel, from_models

Run = tuple[int, int] | None


@dataclass(frozen=True)
class StaircaseSpec:
    n1: int
    n2: int
    u: int
    band: tuple[Run, ...]  # one run per C1 vertex, None for no zeros
    seed: int | None = None

    @property
    def n(self) -> int:
        return self.n1 + self.n2 + self.u

    def validate(self) -> None:
        if min(self.n1, self.n2, self.u) < 0:
            raise SpecViolation("part sizes must be non-negative")
        if len(self.band) != self.n1:
            raise SpecViolation(f"band has {len(self.band)} runs for {self.n1} C1 vertices")
        lo_bound, hi_bound = self.n1 + 1, self.n1 + self.n2
        prev = None
        for i, run in enumerate(self.band):
            if run is None:
                continue
            p, q = run
            if not lo_bound <= p <= q <= hi_bound:
                raise SpecViolation(f"run {i} = {run} outside [{lo_bound}, {hi_bound}]")
            if prev is not None and (p < prev[0] or q < prev[1]):
                raise SpecViolation(f"run {i} = {run} breaks monotonicity after {prev}")
            prev = run


def random_staircase(n1: int, n2: int, u: int = 0, seed: int = 0, p_empty: float = 0.0,
                     max_width: int | None = None) -> StaircaseSpec:
    """Sample a monotone band.

    Left endpoints are drawn then sorted; each right endpoint is at least the
    previous one and at least its own left endpoint.
    """
    rng = random.Random(seed)
    if n2 == 0:
        return StaircaseSpec(n1, n2, u, tuple(None for _ in range(n1)), seed)
    lo_bound, hi_bound = n1 + 1, n1 + n2
    lefts = sorted(rng.randint(lo_bound, hi_bound) for _ in range(n1))
    band: list[Run] = []
    prev_q = lo_bound
    for p in lefts:
        if rng.random() < p_empty:
            band.append(None)
            continue
        q_min = max(p, prev_q)
        q_max = hi_bound if max_width is None else max(q_min, min(hi_bound, p + max_width - 1))
        q = rng.randint(q_min, q_max)
        band.append((p, q))
        prev_q = q
    return StaircaseSpec(n1, n2, u, tuple(band), seed)


def banded_staircase(n1: int, n2: int, u: int = 0, width: int = 3) -> StaircaseSpec:
    """Deterministic band whose runs slide evenly across C2 and cover every position."""
    if n2 == 0:
        return StaircaseSpec(n1, n2, u, tuple(None for _ in range(n1)))
    base = n1 + 1
    band = []
    for i in range(n1):
        p = base + (i * n2) // max(n1, 1)
        nxt = base + ((i + 1) * n2) // max(n1, 1) - 1
        q = min(base + n2 - 1, max(p + width - 1, nxt))
        band.append((p, q))
    return StaircaseSpec(n1, n2, u, tuple(band))


def _c2_runs(spec: StaircaseSpec) -> list[Run]:
    """For each C2 position, the run of C1 indices (1-based) whose band covers it."""
    live = [(i + 1, run) for i, run in enumerate(spec.band) if run is not None]
    ps = [run[0] for _, run in live]
    qs = [run[1] for _, run in live]
    out: list[Run] = []
    for j in range(spec.n1 + 1, spec.n1 + spec.n2 + 1):
        a = bisect.bisect_left(qs, j)   # first live run with q >= j
        b = bisect.bisect_right(ps, j)  # live runs with p <= j end here
        if a < b:
            out.append((live[a][0], live[b - 1][0]))
        else:
            out.append(None)
    return out


def gen_staircase(spec: StaircaseSpec) -> Graph:
    """Dense graph for ``spec``; vertices 0..n1-1 are C1, then C2, then the universal block."""
    spec.validate()
    n = spec.n
    adj = np.ones((n, n), dtype=bool)
    for i, run in enumerate(spec.band):
        if run is not None:
            p, q = run
            adj[i, p - 1:q] = False
            adj[p - 1:q, i] = False
    np.fill_diagonal(adj, False)
    return Graph.from_matrix(adj)


def staircase_structure(spec: StaircaseSpec) -> C0PStructure:
    """The C0P structure of ``gen_staircase(spec)`` computed directly, in O(n log n).

    Vertices with no zeros (empty runs, uncovered C2 positions) are universal
    and move to U; the remaining positions are compacted.
    """
    spec.validate()
    c2_runs = _c2_runs(spec)
    c1 = [i for i, run in enumerate(spec.band) if run is not None]
    c2_local = [j for j, run in enumerate(c2_runs) if run is not None]
    c2 = [spec.n1 + j for j in c2_local]
    u = ([i for i, run in enumerate(spec.band) if run is None]
         + [spec.n1 + j for j, run in enumerate(c2_runs) if run is None]
         + list(range(spec.n1 + spec.n2, spec.n)))
    r = len(c1)
    # compacted 1-based positions
    c1_pos = {i + 1: k + 1 for k, i in enumerate(c1)}
    c2_pos = {spec.n1 + j + 1: r + k + 1 for k, j in enumerate(c2_local)}
    h1 = IntervalModel(tuple((i, c2_pos[spec.band[i][0]], c2_pos[spec.band[i][1]]) for i in c1))
    h2 = IntervalModel(tuple((spec.n1 + j, c1_pos[c2_runs[j][0]], c1_pos[c2_runs[j][1]])
                             for j in c2_local))
    return from_models(spec.n, c1, c2, u, h1, h2)


def gen_random_graph(n: int, p: float, seed: int | None = None) -> Graph:
    if not 0.0 <= p <= 1.0:
        raise ValueError("edge probability must lie in [0, 1]")
    rng = random.Random(seed)
    edges = [(a, b) for a in range(n) for b in range(a + 1, n) if rng.random() < p]
    return Graph.from_edge_list(n, edges)


def scramble(g: Graph, seed: int | None = None) -> Graph:
    """Isomorphic copy: old vertex ``v`` becomes ``sigma[v]`` for a uniform random ``sigma``."""
    rng = random.Random(seed)
    sigma = list(range(g.n))
    rng.shuffle(sigma)
    inverse = np.argsort(sigma)
    return Graph.from_matrix(g.adjacency[np.ix_(inverse, inverse)])


def disjoint_cliques(sizes, universal: int = 0) -> Graph:
    """Disjoint union of cliques joined to ``universal`` extra vertices."""
    n = sum(sizes) + universal
    adj = np.zeros((n, n), dtype=bool)
    start = 0
    for s in sizes:
        adj[start:start + s, start:start + s] = True
        start += s
    adj[start:, :] = True
    adj[:, start:] = True
    np.fill_diagonal(adj, False)
    return Graph.from_matrix(adj)
