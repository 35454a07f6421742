"""Recognition of graphs whose augmented adjacency matrix has consecutive zeros per column.

The zeros of column ``v`` of M*(G) are the non-neighbours of ``v``. An ordering
is valid when every vertex's non-neighbours occupy consecutive positions.
Permuting columns never affects per-column consecutiveness, so a row
permutation works iff the same permutation applied to rows and columns does.

Under a valid ordering the non-universal vertices split into two cliques, so
the complement graph restricted to them is bipartite. Each side then only
constrains the order of the other side, which turns recognition into two
independent consecutive-ones problems.
"""
from __future__ import annotations

import random
from collections.abc import Sequence
from dataclasses import dataclass

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import breadth_first_order, connected_components

from .consecutive import consecutive_ones_order
from .errors import DimensionMismatch
from .graph import BitMatrix, Graph, augmented_matrix


@dataclass(frozen=True)
class Ordering:
    """``perm[position] = vertex``."""

    perm: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "perm", tuple(int(v) for v in self.perm))
        if sorted(self.perm) != list(range(len(self.perm))):
            raise ValueError("ordering is not a permutation")

    def __len__(self):
        return len(self.perm)

    def __iter__(self):
        return iter(self.perm)

    def position(self) -> list[int]:
        pos = [0] * len(self.perm)
        for i, v in enumerate(self.perm):
            pos[v] = i
        return pos

    @classmethod
    def identity(cls, n: int) -> Ordering:
        return cls(tuple(range(n)))


def _zero_runs_consecutive(zeros: np.ndarray) -> bool:
    n = zeros.shape[0]
    if n == 0:
        return True
    cnt = zeros.sum(axis=0)
    first = zeros.argmax(axis=0)
    last = n - 1 - zeros[::-1].argmax(axis=0)
    return bool(np.all((cnt == 0) | (last - first + 1 == cnt)))


def verify_c0p_ordering(m: BitMatrix, ord: Ordering | Sequence[int], symmetric: bool = True) -> bool:
    """True iff relabelling by ``ord`` leaves each column's zeros contiguous.

    With ``symmetric=False`` only the rows are permuted.
    """
    perm = list(ord.perm if isinstance(ord, Ordering) else ord)
    if len(perm) != m.n:
        raise DimensionMismatch(f"ordering has {len(perm)} entries, matrix has {m.n} rows")
    if sorted(perm) != list(range(m.n)):
        raise ValueError("ordering is not a permutation")
    data = m.data[perm]
    if symmetric:
        data = data[:, perm]
    return _zero_runs_consecutive(~data)


def _two_sides(nonadj: np.ndarray, core: np.ndarray):
    """Bipartition of the complement graph on ``core``; ``None`` if it has an odd cycle."""
    sub = nonadj[np.ix_(core, core)]
    sparse = csr_matrix(sub)
    ncomp, label = connected_components(sparse, directed=False)
    side = np.full(core.size, -1, dtype=np.int64)
    for comp in range(ncomp):
        root = int(np.flatnonzero(label == comp)[0])
        order, pred = breadth_first_order(sparse, root, directed=False)
        side[root] = 0
        for v in order[1:]:
            side[v] = 1 - side[pred[v]]
    same = side[:, None] == side[None, :]
    if (sub & same).any():
        return None
    return core[side == 0], core[side == 1]


def _find(g: Graph) -> Ordering | None:
    n = g.n
    if n == 0:
        return Ordering(())
    nonadj = ~augmented_matrix(g).data
    universal = np.flatnonzero(~nonadj.any(axis=0))
    core = np.flatnonzero(nonadj.any(axis=0))
    if core.size == 0:
        return Ordering.identity(n)
    sides = _two_sides(nonadj, core)
    if sides is None:
        return None
    c1, c2 = sides
    order2 = consecutive_ones_order(nonadj[np.ix_(c1, c2)], c2.size)
    if order2 is None:
        return None
    order1 = consecutive_ones_order(nonadj[np.ix_(c2, c1)], c1.size)
    if order1 is None:
        return None
    perm = c1[order1].tolist() + c2[order2].tolist() + universal.tolist()
    return Ordering(tuple(perm))


def find_c0p_ordering(g: Graph, seed: int | None = None) -> Ordering | None:
    """A vertex ordering certifying consecutive zeros, or ``None`` when none exists.

    Deterministic for a fixed graph. Passing ``seed`` perturbs the tie-breaking
    (by solving a randomly relabelled copy) to reach other valid orderings.
    """
    if seed is None:
        found = _find(g)
    else:
        rng = random.Random(seed)
        sigma = list(range(g.n))
        rng.shuffle(sigma)
        adj = g.adjacency
        scrambled = Graph.from_matrix(adj[np.ix_(sigma, sigma)]) if g.n else g
        found = _find(scrambled)
        if found is not None:
            perm = [sigma[v] for v in found.perm]
            if rng.random() < 0.5:
                perm.reverse()
            found = Ordering(tuple(perm))
    if found is not None and not verify_c0p_ordering(augmented_matrix(g), found):
        raise RuntimeError("recognizer produced an invalid certificate")
    return found


def is_c0p(g: Graph) -> bool:
    return find_c0p_ordering(g) is not None
