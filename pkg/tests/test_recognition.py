import itertools
import random

import networkx as nx
import numpy as np
import pytest

from ktupledom.consecutive import consecutive_ones_order, is_consecutive
from ktupledom.errors import DimensionMismatch
from ktupledom.generator import gen_random_graph, gen_staircase, random_staircase, scramble
from ktupledom.graph import BitMatrix, Graph, augmented_matrix
from ktupledom.oracle import brute_force_c0p
from ktupledom.recognition import Ordering, find_c0p_ordering, verify_c0p_ordering

from conftest import EXAMPLE_MATRIX, complete, cycle


def _runs_ok(matrix_rows):
    """Column-by-column scan: zero row indices form one contiguous block."""
    n = len(matrix_rows)
    for j in range(n):
        zs = [i for i in range(n) if matrix_rows[i][j] == 0]
        if zs and zs[-1] - zs[0] + 1 != len(zs):
            return False
    return True


class TestVerify:
    def test_example_identity(self):
        assert verify_c0p_ordering(BitMatrix(EXAMPLE_MATRIX), Ordering.identity(7))

    def test_swap_v1_v5(self):
        perm = [4, 1, 2, 3, 0, 5, 6]
        relabelled = [[EXAMPLE_MATRIX[a][b] for b in perm] for a in perm]
        assert not _runs_ok(relabelled)
        assert not verify_c0p_ordering(BitMatrix(EXAMPLE_MATRIX), perm)

    def test_all_ones(self):
        ones = BitMatrix(np.ones((4, 4), dtype=bool))
        for perm in itertools.permutations(range(4)):
            assert verify_c0p_ordering(ones, perm)

    def test_dimension_mismatch(self):
        with pytest.raises(DimensionMismatch):
            verify_c0p_ordering(BitMatrix(EXAMPLE_MATRIX), [0, 1, 2])

    def test_row_only_form_agrees(self, fig1):
        m = augmented_matrix(fig1)
        for perm in itertools.permutations(range(7)):
            assert verify_c0p_ordering(m, perm) == verify_c0p_ordering(m, perm, symmetric=False)


class TestFind:
    def test_example(self, fig1):
        order = find_c0p_ordering(fig1)
        assert order is not None
        assert verify_c0p_ordering(augmented_matrix(fig1), order)

    @pytest.mark.parametrize("n", [1, 2, 3, 6])
    def test_complete_is_identity(self, n):
        assert find_c0p_ordering(complete(n)) == Ordering.identity(n)

    def test_c5_rejected(self):
        # exhaustive check over all 120 orderings
        m = augmented_matrix(cycle(5))
        assert not any(verify_c0p_ordering(m, p) for p in itertools.permutations(range(5)))
        assert find_c0p_ordering(cycle(5)) is None

    def test_scrambled_c5_rejected(self):
        for seed in range(5):
            assert find_c0p_ordering(scramble(cycle(5), seed)) is None

    def test_c4_accepted(self):
        # complement of C4 is a perfect matching: two cliques {0,2}, {1,3}
        assert find_c0p_ordering(cycle(4)) is not None

    def test_empty_graph(self):
        assert find_c0p_ordering(Graph(0, [])) == Ordering(())

    def test_deterministic(self, fig1):
        assert find_c0p_ordering(fig1) == find_c0p_ordering(fig1)

    def test_seeded_still_valid(self, fig1):
        m = augmented_matrix(fig1)
        orders = {find_c0p_ordering(fig1, seed=s) for s in range(20)}
        assert len(orders) > 1
        assert all(verify_c0p_ordering(m, o) for o in orders)


def test_atlas_agrees_with_brute_force():
    for nxg in nx.graph_atlas_g()[1:]:
        if nxg.number_of_nodes() > 6:
            break
        g = Graph.from_edge_list(nxg.number_of_nodes(), list(nxg.edges()))
        fast = find_c0p_ordering(g)
        slow = brute_force_c0p(augmented_matrix(g))
        assert (fast is None) == (slow is None), list(nxg.edges())


def test_random_graphs_agree_with_brute_force():
    rng = random.Random(11)
    for seed in range(300):
        g = gen_random_graph(rng.randint(4, 8), rng.choice([0.6, 0.75, 0.9]), seed)
        fast = find_c0p_ordering(g)
        slow = brute_force_c0p(augmented_matrix(g))
        assert (fast is None) == (slow is None), seed


def test_staircase_relabel_invariance():
    for seed in range(60):
        rng = random.Random(seed)
        spec = random_staircase(rng.randint(1, 8), rng.randint(1, 8), rng.randint(0, 2), seed=seed,
                                p_empty=0.2)
        g = gen_staircase(spec)
        assert find_c0p_ordering(g) is not None
        assert find_c0p_ordering(scramble(g, seed)) is not None


class TestConsecutiveOnes:
    def _brute(self, sets, n):
        return any(is_consecutive(sets, p) for p in itertools.permutations(range(n)))

    def test_simple_chain(self):
        sets = [[1, 1, 0, 0], [0, 1, 1, 0], [0, 0, 1, 1]]
        order = consecutive_ones_order(sets, 4)
        assert is_consecutive(sets, order)

    def test_tucker_obstruction(self):
        # three pairs of a triangle cannot all be consecutive
        sets = [[1, 1, 0], [0, 1, 1], [1, 0, 1]]
        assert consecutive_ones_order(sets, 3) is None

    def test_nested_components(self):
        sets = [[1, 1, 1, 1, 1, 0], [1, 1, 0, 0, 0, 0], [0, 1, 1, 0, 0, 0], [0, 0, 0, 1, 1, 0]]
        order = consecutive_ones_order(sets, 6)
        assert is_consecutive(sets, order)

    def test_equal_union_single_set_parent(self):
        sets = [[1, 1, 1], [1, 1, 0], [0, 1, 1]]
        assert is_consecutive(sets, consecutive_ones_order(sets, 3))

    def test_no_sets(self):
        assert consecutive_ones_order(np.zeros((0, 4), dtype=bool), 4) == [0, 1, 2, 3]

    def test_random_matches_exhaustive(self):
        rng = np.random.default_rng(5)
        for _ in range(400):
            n = int(rng.integers(1, 7))
            m = int(rng.integers(1, 6))
            sets = rng.random((m, n)) < rng.uniform(0.2, 0.7)
            order = consecutive_ones_order(sets, n)
            if order is None:
                assert not self._brute(sets, n)
            else:
                assert sorted(order) == list(range(n))
                assert is_consecutive(sets, order)
