"""Simple undirected graphs stored as packed bit rows.

Vertices are the integers ``0..n-1``. Row ``v`` is a Python int whose bit
``u`` is set when ``u`` and ``v`` are adjacent, so closed-neighbourhood
intersections reduce to ``&`` plus ``int.bit_count``.
"""
from __future__ import annotations

from collections.abc import Iterable, Sequence
from functools import cached_property

import numpy as np

from .errors import DimensionMismatch, EmptyGraph, IndexOutOfRange, SelfLoop

VertexSet = tuple[int, ...]


def vertex_set(vertices: Iterable[int]) -> VertexSet:
    return tuple(sorted(set(vertices)))


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def _rows_from_array(adj: np.ndarray) -> tuple[int, ...]:
    if adj.shape[0] == 0:
        return ()
    packed = np.packbits(adj, axis=1, bitorder="little")
    return tuple(int.from_bytes(packed[i].tobytes(), "little") for i in range(adj.shape[0]))


class Graph:
    """Immutable simple graph. Build with :meth:`from_edge_list` or :meth:`from_matrix`."""

    __slots__ = ("n", "rows", "labels", "__dict__")

    def __init__(self, n: int, rows: Sequence[int], labels: Sequence[str] | None = None):
        if len(rows) != n:
            raise DimensionMismatch(f"expected {n} rows, got {len(rows)}")
        if labels is not None and len(labels) != n:
            raise DimensionMismatch(f"expected {n} labels, got {len(labels)}")
        self.n = n
        self.rows = tuple(rows)
        self.labels = tuple(labels) if labels is not None else None

    @classmethod
    def from_edge_list(cls, n: int, edges: Iterable[tuple[int, int]], labels=None) -> Graph:
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        rows = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise IndexOutOfRange(f"edge ({u}, {v}) has an endpoint outside 0..{n - 1}")
            if u == v:
                raise SelfLoop(f"self-loop at vertex {u}")
            rows[u] |= 1 << v
            rows[v] |= 1 << u
        return cls(n, rows, labels)

    @classmethod
    def from_matrix(cls, adj, labels=None) -> Graph:
        """Graph from a square 0/1 adjacency array; the diagonal is ignored."""
        adj = np.asarray(adj, dtype=bool)
        if adj.ndim != 2 or adj.shape[0] != adj.shape[1]:
            raise DimensionMismatch(f"adjacency must be square, got shape {adj.shape}")
        if not np.array_equal(adj, adj.T):
            raise ValueError("adjacency matrix is not symmetric")
        adj = adj.copy()
        np.fill_diagonal(adj, False)
        g = cls(adj.shape[0], _rows_from_array(adj), labels)
        adj.setflags(write=False)
        g.__dict__["adjacency"] = adj
        return g

    @cached_property
    def adjacency(self) -> np.ndarray:
        """Dense boolean adjacency (read-only), zero diagonal."""
        n = self.n
        nbytes = (n + 7) // 8
        if n == 0:
            return np.zeros((0, 0), dtype=bool)
        buf = b"".join(r.to_bytes(nbytes, "little") for r in self.rows)
        packed = np.frombuffer(buf, dtype=np.uint8).reshape(n, nbytes)
        adj = np.unpackbits(packed, axis=1, bitorder="little")[:, :n].astype(bool)
        adj.setflags(write=False)
        return adj

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return bits(self.rows[v])

    def closed_mask(self, v: int) -> int:
        return self.rows[v] | (1 << v)

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in bits(self.rows[u] >> (u + 1) << (u + 1))]

    def label(self, v: int) -> str:
        return self.labels[v] if self.labels is not None else str(v + 1)

    @property
    def vertices(self) -> range:
        return range(self.n)

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.rows == other.rows

    def __hash__(self):
        return hash((self.n, self.rows))

    def __repr__(self):
        m = sum(r.bit_count() for r in self.rows) // 2
        return f"Graph(n={self.n}, m={m})"


class BitMatrix:
    """Square read-only 0/1 matrix."""

    __slots__ = ("data",)

    def __init__(self, data):
        arr = np.array(data, dtype=bool)
        if arr.ndim != 2 or arr.shape[0] != arr.shape[1]:
            raise DimensionMismatch(f"matrix must be square, got shape {arr.shape}")
        arr.setflags(write=False)
        self.data = arr

    @property
    def n(self) -> int:
        return self.data.shape[0]

    def __getitem__(self, ij):
        return self.data[ij]

    def is_symmetric(self) -> bool:
        return bool(np.array_equal(self.data, self.data.T))

    def has_unit_diagonal(self) -> bool:
        return bool(self.data.diagonal().all())

    def tolist(self) -> list[list[int]]:
        return self.data.astype(int).tolist()

    def __eq__(self, other):
        if isinstance(other, BitMatrix):
            return np.array_equal(self.data, other.data)
        return np.array_equal(self.data, np.asarray(other, dtype=bool))

    def __repr__(self):
        return f"BitMatrix(n={self.n})"


def from_edge_list(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    return Graph.from_edge_list(n, edges)


def augmented_matrix(g: Graph) -> BitMatrix:
    """M(G) + I: adjacency with ones on the diagonal."""
    m = g.adjacency.copy()
    np.fill_diagonal(m, True)
    return BitMatrix(m)


def min_degree(g: Graph) -> int:
    if g.n == 0:
        raise EmptyGraph("minimum degree of the empty graph is undefined")
    return min(r.bit_count() for r in g.rows)


def universal_vertices(g: Graph) -> VertexSet:
    return tuple(v for v in range(g.n) if g.rows[v].bit_count() == g.n - 1)


def _check_members(g: Graph, vs: Iterable[int]) -> VertexSet:
    vs = vertex_set(vs)
    for v in vs:
        if not 0 <= v < g.n:
            raise IndexOutOfRange(f"vertex {v} outside 0..{g.n - 1}")
    return vs


def induced_subgraph(g: Graph, keep: Iterable[int]) -> tuple[Graph, dict[int, int]]:
    """``G[keep]`` relabelled to ``0..len(keep)-1`` plus the old-to-new index map."""
    keep = _check_members(g, keep)
    index = {old: new for new, old in enumerate(keep)}
    rows = []
    for old in keep:
        row = 0
        for u in bits(g.rows[old]):
            if u in index:
                row |= 1 << index[u]
        rows.append(row)
    labels = [g.labels[v] for v in keep] if g.labels is not None else None
    return Graph(len(keep), rows, labels), index


def is_k_tuple_dominating(g: Graph, d: Iterable[int], k: int) -> bool:
    """True when every vertex has at least ``k`` members of ``d`` in its closed neighbourhood."""
    if k <= 0:
        return True
    dm = mask_of(_check_members(g, d))
    if dm.bit_count() < k:
        return False
    return all((g.closed_mask(v) & dm).bit_count() >= k for v in range(g.n))


def connected_components(g: Graph) -> list[VertexSet]:
    seen = 0
    comps = []
    for s in range(g.n):
        if seen >> s & 1:
            continue
        comp = frontier = 1 << s
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= g.rows[v]
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        comps.append(tuple(bits(comp)))
    return comps
