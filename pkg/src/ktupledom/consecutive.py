"""Consecutive-ones ordering of a ground set for a family of subsets.

Given sets over ``0..N-1`` (rows of a boolean matrix), find a permutation of
the ground set in which every set occupies a contiguous block, or report
that none exists.

Method: split the family into overlap components (two sets overlap when they
intersect and neither contains the other). Inside one component the block
arrangement is forced up to reversal, so sets are placed one at a time in BFS
order of the overlap graph, refining an ordered partition of the covered
elements. Distinct components are either disjoint or one sits entirely inside
a single block of the other, which gives a containment forest; the final
order is read off that forest.
"""
from __future__ import annotations

import numpy as np
from scipy.sparse import csr_matrix
from scipy.sparse.csgraph import breadth_first_order, connected_components


class _Arrangement:
    """Ordered partition of the elements covered by one overlap component."""

    def __init__(self, n_ground: int):
        self.order: list[int] = []  # class ids, left to right
        self.members: dict[int, np.ndarray] = {}
        self.cls_of = np.full(n_ground, -1, dtype=np.int64)
        self._next = 0
        self._mark = np.zeros(n_ground, dtype=bool)

    def _new_class(self, elems: np.ndarray) -> int:
        cid = self._next
        self._next += 1
        self.members[cid] = elems
        self.cls_of[elems] = cid
        return cid

    def _split(self, cid: int, s_first: bool) -> list[int]:
        """Split class ``cid`` by the marked set; return the new ids in order."""
        elems = self.members.pop(cid)
        inside = self._mark[elems]
        a = self._new_class(elems[inside])
        b = self._new_class(elems[~inside])
        return [a, b] if s_first else [b, a]

    def place(self, elems: np.ndarray) -> bool:
        if not self.order:
            self.order.append(self._new_class(elems))
            return True
        ids = self.cls_of[elems]
        fresh = elems[ids < 0]
        touched, counts = np.unique(ids[ids >= 0], return_counts=True)
        if touched.size == 0:
            raise RuntimeError("set placed without touching the component")
        pos = {c: i for i, c in enumerate(self.order)}
        where = sorted(pos[c] for c in touched.tolist())
        a, b = where[0], where[-1]
        if b - a + 1 != len(where):
            return False
        full = {int(c): int(cnt) == self.members[int(c)].size for c, cnt in zip(touched, counts)}
        for p in range(a + 1, b):
            if not full[self.order[p]]:
                return False
        t = len(self.order)
        left_full = full[self.order[a]]
        right_full = full[self.order[b]]

        attach = None
        if fresh.size:
            if a == b:
                if t == 1 or b == t - 1:
                    attach = "right"
                elif a == 0:
                    attach = "left"
                else:
                    return False
            elif a == 0 and b == t - 1:
                if right_full:
                    attach = "right"
                elif left_full:
                    attach = "left"
                else:
                    return False
            elif a == 0 and left_full:
                attach = "left"
            elif b == t - 1 and right_full:
                attach = "right"
            else:
                return False
        elif a == b:
            raise RuntimeError("overlapping set lies inside a single class")

        self._mark[elems] = True
        try:
            new_order = self.order[:a]
            if a == b:
                c = self.order[a]
                if full[c]:
                    mid = [c]
                else:
                    # the marked part faces the side where fresh elements attach
                    mid = self._split(c, s_first=(attach == "left"))
            else:
                ca, cb = self.order[a], self.order[b]
                mid = [ca] if left_full else self._split(ca, s_first=False)
                mid += self.order[a + 1:b]
                mid += [cb] if right_full else self._split(cb, s_first=True)
            if attach == "left":
                new_order.append(self._new_class(fresh))
            new_order += mid
            if attach == "right":
                new_order.append(self._new_class(fresh))
            new_order += self.order[b + 1:]
            self.order = new_order
        finally:
            self._mark[elems] = False
        return True

    def blocks(self) -> list[np.ndarray]:
        return [self.members[c] for c in self.order]


def consecutive_ones_order(sets, n_ground: int) -> list[int] | None:
    """Order ``0..n_ground-1`` so that every row of ``sets`` is contiguous.

    ``sets`` is an ``(m, n_ground)`` boolean array. Returns the element order,
    or ``None`` when the family has no consecutive-ones arrangement. The result
    is deterministic for a fixed input.
    """
    sets = np.asarray(sets, dtype=bool).reshape(-1, n_ground)
    if n_ground == 0:
        return []
    sets = sets[sets.any(axis=1)]
    if sets.shape[0] == 0:
        return list(range(n_ground))
    sets = np.unique(sets, axis=0)[::-1]
    m = sets.shape[0]

    f = sets.astype(np.float32)
    inter = f @ f.T
    size = sets.sum(axis=1).astype(np.float32)
    overlap = (inter > 0) & (inter < size[:, None]) & (inter < size[None, :])
    ncomp, label = connected_components(csr_matrix(overlap), directed=False)

    arrangements: list[_Arrangement] = []
    for comp in range(ncomp):
        idx = np.flatnonzero(label == comp)
        arr = _Arrangement(n_ground)
        if idx.size == 1:
            arr.place(np.flatnonzero(sets[idx[0]]))
        else:
            sub = csr_matrix(overlap[np.ix_(idx, idx)])
            bfs = breadth_first_order(sub, 0, directed=False, return_predecessors=False)
            for local in bfs:
                if not arr.place(np.flatnonzero(sets[idx[local]])):
                    return None
        arrangements.append(arr)

    # containment forest over component unions
    unions = np.zeros((ncomp, n_ground), dtype=bool)
    for comp in range(ncomp):
        unions[comp] = sets[label == comp].any(axis=0)
    usize = unions.sum(axis=1)
    nclass = np.array([len(a.order) for a in arrangements])
    rank_order = sorted(range(ncomp), key=lambda c: (-usize[c], nclass[c], c))
    rank = np.empty(ncomp, dtype=np.int64)
    rank[rank_order] = np.arange(ncomp)
    uf = unions.astype(np.float32)
    cont = (uf @ uf.T) == usize[None, :]  # cont[y, x]: union x within union y
    np.fill_diagonal(cont, False)

    parent = np.full(ncomp, -1, dtype=np.int64)
    parent_class = np.full(ncomp, -1, dtype=np.int64)
    for x in range(ncomp):
        cand = np.flatnonzero(cont[:, x] & (rank < rank[x]))
        if cand.size == 0:
            continue
        y = int(cand[np.argmax(rank[cand])])
        elems = np.flatnonzero(unions[x])
        cls = arrangements[y].cls_of[elems]
        if cls.min() != cls.max():
            raise RuntimeError("nested component straddles a block boundary")
        parent[x] = y
        parent_class[x] = cls[0]

    children: dict[tuple[int, int], list[int]] = {}
    roots = []
    for x in rank_order:
        if parent[x] < 0:
            roots.append(x)
        else:
            children.setdefault((int(parent[x]), int(parent_class[x])), []).append(x)

    block: dict[int, list[int]] = {}
    for x in reversed(rank_order):
        out: list[int] = []
        arr = arrangements[x]
        for cid in arr.order:
            covered = np.zeros(n_ground, dtype=bool)
            for child in children.get((x, cid), ()):
                out += block.pop(child)
                covered |= unions[child]
            rest = arr.members[cid]
            out += rest[~covered[rest]].tolist()
        block[x] = out

    order: list[int] = []
    covered = np.zeros(n_ground, dtype=bool)
    for x in roots:
        order += block.pop(x)
        covered |= unions[x]
    order += np.flatnonzero(~covered).tolist()
    return order


def is_consecutive(sets, order) -> bool:
    """Check that every row of ``sets`` is contiguous under ``order``."""
    sets = np.asarray(sets, dtype=bool)
    if sets.size == 0:
        return True
    permuted = sets[:, list(order)]
    cnt = permuted.sum(axis=1)
    first = permuted.argmax(axis=1)
    last = permuted.shape[1] - 1 - permuted[:, ::-1].argmax(axis=1)
    return bool(np.all((cnt == 0) | (last - first + 1 == cnt)))
