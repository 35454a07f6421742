"""The (C1, C2, U) partition of a C0P-graph and its two auxiliary interval models.

Positions are 1-based inside the ordered matrix of ``G - U``: C1 occupies
``1..r`` and C2 occupies ``r+1..n'``. The interval of a C1 vertex is the run
of its zero rows within C2's range, and vice versa. Together with the vertex
order these intervals describe the whole graph, so everything downstream
(minimum degree, domination checks, even the graph itself) can be derived from
a :class:`C0PStructure` without the dense matrix.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from itertools import accumulate

import numpy as np

from .errors import NotC0PError, StructureViolation
from .graph import Graph, VertexSet, augmented_matrix
from .recognition import Ordering, find_c0p_ordering, verify_c0p_ordering


@dataclass(frozen=True)
class IntervalModel:
    intervals: tuple[tuple[int, int, int], ...]  # (vertex, lo, hi), inclusive
    isolated: tuple[int, ...] = ()

    def __len__(self):
        return len(self.intervals)

    def as_dict(self) -> dict[int, tuple[int, int]]:
        return {v: (lo, hi) for v, lo, hi in self.intervals}

    def max_run(self) -> int:
        return max((hi - lo + 1 for _, lo, hi in self.intervals), default=0)


def max_stable_set(m: IntervalModel) -> VertexSet:
    """Pairwise disjoint intervals chosen greedily by earliest right endpoint.

    Ties break on left endpoint, then vertex index. Returned in pick order.
    """
    chosen = []
    last_hi = None
    for v, lo, hi in sorted(m.intervals, key=lambda t: (t[2], t[1], t[0])):
        if last_hi is None or lo > last_hi:
            chosen.append(v)
            last_hi = hi
    return tuple(chosen)


def stability_number(m: IntervalModel) -> int:
    return len(max_stable_set(m))


@dataclass(frozen=True)
class C0PStructure:
    n: int
    ordering: Ordering
    c1: VertexSet
    c2: VertexSet
    u: VertexSet
    h1: IntervalModel | None = None
    h2: IntervalModel | None = None
    s1: VertexSet = ()
    s2: VertexSet = ()
    _pos: dict = field(default=None, repr=False, compare=False)

    @property
    def r(self) -> int:
        return len(self.c1)

    @property
    def core_size(self) -> int:
        return len(self.c1) + len(self.c2)

    @property
    def alpha1(self) -> int:
        return len(self.s1)

    @property
    def alpha2(self) -> int:
        return len(self.s2)

    @property
    def position(self) -> dict[int, int]:
        """Vertex -> 1-based position in the ordered matrix (U after the core)."""
        if self._pos is None:
            object.__setattr__(self, "_pos", {v: i + 1 for i, v in enumerate(self.ordering.perm)})
        return self._pos

    def min_degree(self) -> int:
        if self.n == 0:
            raise ValueError("empty graph has no minimum degree")
        runs = max(self.h1.max_run(), self.h2.max_run()) if self.h1 is not None else 0
        return self.n - 1 - runs

    def swapped(self) -> C0PStructure:
        """Same graph with the roles of C1 and C2 exchanged (positions recomputed)."""
        r2 = len(self.c2)
        r1 = len(self.c1)

        def shift(model, delta):
            return IntervalModel(tuple((v, lo + delta, hi + delta) for v, lo, hi in model.intervals),
                                 model.isolated)

        # C2 vertices now come first; C1's runs (inside old C2 range) move down by r1
        h1 = shift(self.h2, r2)
        h2 = shift(self.h1, -r1)
        return from_models(self.n, self.c2, self.c1, self.u, h1, h2)

    def is_k_tuple_dominating(self, d, k: int) -> bool:
        """Linear-time k-tuple domination check using only the interval data.

        A vertex misses exactly the members of ``d`` inside its zero run, so its
        closed-neighbourhood count is ``|d|`` minus that run's share.
        """
        if k <= 0:
            return True
        d = set(d)
        if len(d) < k:
            return False
        pos = self.position
        n_core = self.core_size
        inset = [0] * (n_core + 1)
        for v in d:
            p = pos[v]
            if p <= n_core:
                inset[p] = 1
        prefix = list(accumulate(inset))
        limit = len(d) - k
        for model in (self.h1, self.h2):
            for _, lo, hi in model.intervals:
                if prefix[hi] - prefix[lo - 1] > limit:
                    return False
        return True

    def to_graph(self) -> Graph:
        """Materialise the dense graph the structure describes."""
        n = self.n
        adj = np.ones((n, n), dtype=bool)
        perm = self.ordering.perm
        for model in (self.h1, self.h2):
            for v, lo, hi in model.intervals:
                rows = list(perm[lo - 1:hi])
                adj[rows, v] = False
                adj[v, rows] = False
        np.fill_diagonal(adj, False)
        g = Graph.from_matrix(adj)
        back = build_structure(g, self.ordering)
        if back.h1.as_dict() != self.h1.as_dict() or back.h2.as_dict() != self.h2.as_dict():
            raise StructureViolation("interval models are not mutually consistent")
        return g


def from_models(n: int, c1, c2, u, h1: IntervalModel, h2: IntervalModel) -> C0PStructure:
    """Assemble a structure from partition and interval models, computing stable sets."""
    c1, c2, u = tuple(c1), tuple(c2), tuple(u)
    ordering = Ordering(c1 + c2 + u)
    r, n_core = len(c1), len(c1) + len(c2)
    for v, lo, hi in h1.intervals:
        if not r + 1 <= lo <= hi <= n_core:
            raise StructureViolation(f"C1 interval of vertex {v} = [{lo}, {hi}] outside [{r + 1}, {n_core}]")
    for v, lo, hi in h2.intervals:
        if not 1 <= lo <= hi <= r:
            raise StructureViolation(f"C2 interval of vertex {v} = [{lo}, {hi}] outside [1, {r}]")
    return C0PStructure(n, ordering, c1, c2, u, h1, h2, max_stable_set(h1), max_stable_set(h2))


def extract_partition(g: Graph, ord: Ordering) -> C0PStructure:
    """Classify columns of the ordered M* into C1 (zeros below the diagonal), C2 (above), U (none).

    The returned ordering is the stable re-sort C1, C2, U; interval models are
    left empty (see :func:`build_interval_models`).
    """
    m = augmented_matrix(g)
    if not verify_c0p_ordering(m, ord):
        raise StructureViolation("ordering does not certify consecutive zeros")
    perm = list(ord.perm)
    zeros = ~m.data[np.ix_(perm, perm)]
    n = g.n
    c1, c2, u = [], [], []
    if n:
        cnt = zeros.sum(axis=0)
        first = zeros.argmax(axis=0)
        last = n - 1 - zeros[::-1].argmax(axis=0)
        for j, v in enumerate(perm):
            if cnt[j] == 0:
                u.append(v)
            elif first[j] > j:
                c1.append(v)
            elif last[j] < j:
                c2.append(v)
            else:
                raise StructureViolation(f"zero run of vertex {v} straddles the diagonal")
    resorted = Ordering(tuple(c1 + c2 + u))
    if not verify_c0p_ordering(m, resorted):
        raise StructureViolation("re-sorted ordering lost consecutive zeros")
    adj = g.adjacency
    for side, name in ((c1, "C1"), (c2, "C2")):
        block = adj[np.ix_(side, side)] | np.eye(len(side), dtype=bool)
        if not block.all():
            raise StructureViolation(f"{name} is not a clique")
    for v in u:
        if g.degree(v) != n - 1:
            raise StructureViolation(f"vertex {v} placed in U is not universal")
    return C0PStructure(n, resorted, tuple(c1), tuple(c2), tuple(u))


def build_interval_models(s: C0PStructure, g: Graph) -> C0PStructure:
    """Fill H1 and H2 from the zero runs of the ordered matrix of ``G - U``."""
    core = list(s.c1 + s.c2)
    r, n_core = s.r, len(core)
    if n_core == 0:
        return from_models(s.n, s.c1, s.c2, s.u, IntervalModel(()), IntervalModel(()))
    zeros = ~g.adjacency[np.ix_(core, core)]
    np.fill_diagonal(zeros, False)
    cnt = zeros.sum(axis=0)
    if (cnt == 0).any():
        v = core[int(np.flatnonzero(cnt == 0)[0])]
        raise StructureViolation(f"vertex {v} is universal in G - U")
    first = zeros.argmax(axis=0) + 1
    last = n_core - zeros[::-1].argmax(axis=0)
    h1 = IntervalModel(tuple((core[j], int(first[j]), int(last[j])) for j in range(r)))
    h2 = IntervalModel(tuple((core[j], int(first[j]), int(last[j])) for j in range(r, n_core)))
    return from_models(s.n, s.c1, s.c2, s.u, h1, h2)


def build_structure(g: Graph, ordering: Ordering | None = None) -> C0PStructure:
    """Recognise (unless an ordering is supplied), partition, and build both interval models."""
    if ordering is None:
        ordering = find_c0p_ordering(g)
        if ordering is None:
            raise NotC0PError("augmented adjacency matrix has no consecutive-zeros ordering")
    return build_interval_models(extract_partition(g, ordering), g)
