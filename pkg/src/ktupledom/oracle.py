"""Exhaustive reference answers for small instances.

Nothing here touches the recognizer or the closed-form solver; these searches
work straight from the definitions and serve as ground truth in tests.
"""
from __future__ import annotations

from itertools import combinations

from .errors import CapExceeded
from .graph import BitMatrix, Graph, bits, connected_components, induced_subgraph
from .recognition import Ordering
from .solver import DominationResult

DEFAULT_GAMMA_CAP = 20
DEFAULT_C0P_CAP = 12


def _min_ktuple_connected(g: Graph, k: int) -> tuple[int, ...] | None:
    n = g.n
    closed = [g.closed_mask(v) for v in range(n)]
    if any(c.bit_count() < k for c in closed):
        return None
    # a vertex with exactly k closed neighbours forces all of them into D
    forced = 0
    for c in closed:
        if c.bit_count() == k:
            forced |= c
    free = [v for v in range(n) if not forced >> v & 1]
    base = forced.bit_count()
    for extra in range(max(0, k - base), len(free) + 1):
        for combo in combinations(free, extra):
            d = forced
            for v in combo:
                d |= 1 << v
            if all((c & d).bit_count() >= k for c in closed):
                return tuple(bits(d))
    return None


def brute_force_gamma(g: Graph, k: int, cap: int = DEFAULT_GAMMA_CAP) -> DominationResult:
    """Minimum k-tuple dominating set by enumeration, summed over components."""
    if g.n > cap:
        raise CapExceeded(f"brute force limited to n <= {cap}, got n = {g.n}")
    if k <= 0:
        return DominationResult.value(0, (), "oracle")
    witness: list[int] = []
    for comp in connected_components(g):
        sub, index = induced_subgraph(g, comp)
        found = _min_ktuple_connected(sub, k)
        if found is None:
            return DominationResult.infeasible()
        back = {new: old for old, new in index.items()}
        witness += [back[v] for v in found]
    witness.sort()
    return DominationResult.value(len(witness), tuple(witness), "oracle")


def brute_force_c0p(m: BitMatrix, cap: int = DEFAULT_C0P_CAP) -> Ordering | None:
    """Row order making each column's zeros contiguous, by backtracking; ``None`` if none.

    Columns are tracked as not-started / running / closed; a row that reopens a
    closed column prunes the branch. The closed set is a function of the rows
    used and the running set, so failed ``(used, running)`` states are memoised.
    """
    n = m.n
    if n > cap:
        raise CapExceeded(f"C0P search limited to n <= {cap}, got n = {n}")
    zero_rows = []
    for i in range(n):
        z = 0
        for j in range(n):
            if not m.data[i, j]:
                z |= 1 << j
        zero_rows.append(z)

    perm: list[int] = []
    dead: set[tuple[int, int]] = set()

    def extend(used: int, running: int, closed: int) -> bool:
        if len(perm) == n:
            return True
        if (used, running) in dead:
            return False
        for r in range(n):
            if used >> r & 1:
                continue
            z = zero_rows[r]
            if z & closed:
                continue
            perm.append(r)
            if extend(used | 1 << r, z, closed | (running & ~z)):
                return True
            perm.pop()
        dead.add((used, running))
        return False

    if extend(0, 0, 0):
        return Ordering(tuple(perm))
    return None
