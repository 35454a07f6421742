"""Minimum k-tuple domination on C0P-graphs from the (C1, C2, U) structure.

Dispatch for ``gamma_ktuple``:

* ``k = 0`` gives 0; ``k > delta + 1`` is infeasible.
* ``k <= |U|``: any ``k`` universal vertices.
* otherwise all of U is taken and the remaining ``k' = k - |U|`` is solved on
  ``G - U`` from the stability numbers ``a1, a2`` of the two interval models:

  ====================  =========  ==============================
  condition             value      witness
  ====================  =========  ==============================
  k' = 1                2          one vertex from each clique
  a1 + a2 = 2           2k'        k' vertices from each clique
  a1 + a2 > k'          k' + 1     stable sets trimmed to k' + 1
  a1 + a2 = k', room    k' + 2     both stable sets + one extra per side
  anything else         undetermined
  ====================  =========  ==============================

  "room" means each clique has a vertex outside its stable set. For k' = 2
  and k' = 3 the table covers every feasible case.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import ConstructionFailure, StructureViolation
from .graph import Graph, VertexSet

VALUE = "value"
INFEASIBLE = "infeasible"
UNDETERMINED = "undetermined"

# Rule tags
TRIVIAL = "zero"
UNIVERSAL = "universal"
PAIR = "pair"
TWO_CLIQUES = "two-cliques"
STABLE_UNION = "stable-union"
STABLE_UNION_PLUS_TWO = "stable-union+2"
ORACLE = "oracle"
REDUCED = "reduce-universal"

OPEN_REGION = "unresolved: 2 < a1 + a2 < k, or a1 + a2 = k with a clique fully used by its stable set"

ORACLE_FALLBACK_CAP = 20


@dataclass(frozen=True)
class DominationResult:
    status: str
    gamma: int | None = None
    witness: VertexSet = ()
    rule: str = ""
    reason: str = ""

    @classmethod
    def value(cls, gamma: int, witness, rule: str) -> DominationResult:
        return cls(VALUE, gamma, tuple(sorted(witness)), rule)

    @classmethod
    def infeasible(cls) -> DominationResult:
        return cls(INFEASIBLE, rule="degree")

    @classmethod
    def undetermined(cls, reason: str) -> DominationResult:
        return cls(UNDETERMINED, reason=reason)

    @property
    def is_value(self) -> bool:
        return self.status == VALUE

    def __str__(self):
        if self.status == VALUE:
            return str(self.gamma)
        if self.status == INFEASIBLE:
            return "inf"
        return "?"


def gamma2_core(alpha1: int, alpha2: int) -> int:
    """gamma_x2 of a C0P-graph without universal vertices."""
    return 3 if alpha1 + alpha2 >= 3 else 4


def gamma3_core(alpha1: int, alpha2: int) -> int:
    """gamma_x3 of a C0P-graph without universal vertices."""
    total = alpha1 + alpha2
    if total >= 4:
        return 4
    if total == 3:
        return 5
    return 6


def _core_rule(k: int, alpha1: int, alpha2: int, size1: int, size2: int) -> tuple[int, str] | None:
    total = alpha1 + alpha2
    if k == 1:
        return 2, PAIR
    if total == 2:
        return 2 * k, TWO_CLIQUES
    if total > k:
        return k + 1, STABLE_UNION
    if total == k and size1 >= alpha1 + 1 and size2 >= alpha2 + 1:
        return k + 2, STABLE_UNION_PLUS_TWO
    return None


def gamma_general_core(k: int, alpha1: int, alpha2: int, size1: int, size2: int) -> DominationResult:
    """Value-only answer on a universal-free core; witness left to the caller."""
    found = _core_rule(k, alpha1, alpha2, size1, size2)
    if found is None:
        return DominationResult.undetermined(OPEN_REGION)
    gamma, rule = found
    return DominationResult(VALUE, gamma, (), rule)


def _trim(s1: VertexSet, s2: VertexSet, target: int) -> tuple[list[int], list[int]]:
    a, b = list(s1), list(s2)
    while len(a) + len(b) > target:
        if len(a) >= len(b):
            a.pop()
        else:
            b.pop()
    return a, b


def _first_outside(side: VertexSet, taken) -> int:
    taken = set(taken)
    for v in side:
        if v not in taken:
            return v
    raise ConstructionFailure("clique has no vertex outside its stable set")


def build_witness(structure, k: int, rule: str) -> VertexSet:
    """Core witness (no universal vertices) for ``k`` under ``rule``."""
    c1, c2 = structure.c1, structure.c2
    if rule == PAIR:
        d = [c1[0], c2[0]]
    elif rule == TWO_CLIQUES:
        d = list(c1[:k]) + list(c2[:k])
    elif rule == STABLE_UNION:
        a, b = _trim(structure.s1, structure.s2, k + 1)
        d = a + b
    elif rule == STABLE_UNION_PLUS_TWO:
        s1, s2 = structure.s1, structure.s2
        d = list(s1) + list(s2) + [_first_outside(c1, s1), _first_outside(c2, s2)]
    else:
        raise ValueError(f"no witness construction for rule {rule!r}")
    return tuple(sorted(d))


def _structure_of(g_or_structure):
    from .structure import C0PStructure, build_structure

    if isinstance(g_or_structure, C0PStructure):
        return g_or_structure, None
    return build_structure(g_or_structure), g_or_structure


def solve(structure, k: int, *, oracle_fallback: bool = False, graph: Graph | None = None,
          oracle_cap: int = ORACLE_FALLBACK_CAP) -> DominationResult:
    """gamma_xk from a prepared :class:`~ktupledom.structure.C0PStructure`."""
    if k < 0:
        raise ValueError("k must be non-negative")
    if k == 0:
        return DominationResult.value(0, (), TRIVIAL)
    if structure.n == 0 or k > structure.min_degree() + 1:
        return DominationResult.infeasible()
    u = structure.u
    if k <= len(u):
        return DominationResult.value(k, u[:k], UNIVERSAL)

    kc = k - len(u)
    if structure.core_size == 0:
        raise StructureViolation("feasible k beyond |U| on a complete graph")
    found = _core_rule(kc, structure.alpha1, structure.alpha2, len(structure.c1), len(structure.c2))
    if found is None:
        if oracle_fallback and structure.n <= oracle_cap:
            from .oracle import brute_force_gamma

            res = brute_force_gamma(graph if graph is not None else structure.to_graph(), k, cap=oracle_cap)
            if res.is_value and not structure.is_k_tuple_dominating(res.witness, k):
                raise ConstructionFailure("oracle witness failed verification")
            return res
        return DominationResult.undetermined(OPEN_REGION)

    gamma_core, rule = found
    witness = tuple(sorted(u + build_witness(structure, kc, rule)))
    if u:
        rule = f"{REDUCED}+{rule}"
    gamma = gamma_core + len(u)
    if len(witness) != gamma or not structure.is_k_tuple_dominating(witness, k):
        raise ConstructionFailure(f"witness {witness} for k={k} under {rule} is not {k}-tuple dominating")
    return DominationResult.value(gamma, witness, rule)


def gamma_ktuple(g, k: int, *, oracle_fallback: bool = False, oracle_cap: int = ORACLE_FALLBACK_CAP) -> DominationResult:
    """gamma_xk(G) with a witness. ``g`` may be a Graph or a prepared structure.

    Raises :class:`~ktupledom.errors.NotC0PError` when a Graph fails recognition.
    """
    structure, graph = _structure_of(g)
    return solve(structure, k, oracle_fallback=oracle_fallback, graph=graph, oracle_cap=oracle_cap)


def gamma_range(g, *, oracle_fallback: bool = False) -> list[tuple[int, DominationResult]]:
    """Results for ``k = 1 .. |U| + 3``, stopping before the first infeasible k."""
    structure, graph = _structure_of(g)
    out = []
    for k in range(1, len(structure.u) + 4):
        res = solve(structure, k, oracle_fallback=oracle_fallback, graph=graph)
        if res.status == INFEASIBLE:
            break
        out.append((k, res))
    return out
