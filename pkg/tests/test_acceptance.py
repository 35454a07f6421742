"""Acceptance gate: one test per criterion, each printing a PASS/FAIL line."""
import random
import time
from itertools import combinations

import networkx as nx
import pytest

from ktupledom import io
from ktupledom.generator import (
    StaircaseSpec,
    banded_staircase,
    gen_staircase,
    random_staircase,
    scramble,
    staircase_structure,
)
from ktupledom.graph import (
    Graph,
    augmented_matrix,
    induced_subgraph,
    is_k_tuple_dominating,
    min_degree,
    universal_vertices,
)
from ktupledom.oracle import brute_force_c0p, brute_force_gamma
from ktupledom.recognition import find_c0p_ordering, verify_c0p_ordering
from ktupledom.solver import (
    INFEASIBLE,
    OPEN_REGION,
    STABLE_UNION,
    STABLE_UNION_PLUS_TWO,
    TWO_CLIQUES,
    UNDETERMINED,
    gamma_ktuple,
    gamma_range,
    solve,
)
from ktupledom.structure import build_structure, stability_number

from conftest import FIXTURES, cycle


@pytest.fixture
def report(capsys):
    def emit(num, ok, detail):
        with capsys.disabled():
            print(f"\nACCEPTANCE {num}: {'PASS' if ok else 'FAIL'} - {detail}")
        assert ok, detail
    return emit


def best_of(fn, repeats=5):
    best = float("inf")
    for _ in range(repeats):
        t0 = time.perf_counter()
        fn()
        best = min(best, time.perf_counter() - t0)
    return best


def staircase_corpus(count, max_n, seed, u_choices=(0, 1, 2, 3)):
    """Seeded staircases with random, empty-run, full-run and disconnected members."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        u = rng.choice(u_choices)
        budget = max_n - u
        n1 = rng.randint(1, budget - 1)
        n2 = rng.randint(1, budget - n1)
        flavour = len(out) % 4
        if flavour == 0:
            spec = random_staircase(n1, n2, u, seed=rng.randrange(2**31))
        elif flavour == 1:
            spec = random_staircase(n1, n2, u, seed=rng.randrange(2**31), p_empty=0.3)
        elif flavour == 2:
            # every C1 vertex misses all of C2: the core is two disjoint cliques
            full = (n1 + 1, n1 + n2)
            spec = StaircaseSpec(n1, n2, 0 if rng.random() < 0.5 else u, tuple(full for _ in range(n1)))
        else:
            spec = random_staircase(n1, n2, u, seed=rng.randrange(2**31), max_width=2)
        out.append(spec)
    return out


def oracle_match(res, ref):
    if res.status != ref.status:
        return False
    return res.gamma == ref.gamma


def test_criterion_1_worked_example(report):
    g = io.read_graph(FIXTURES / "figure1.graph")
    s = build_structure(g)
    parts = {frozenset(s.c1), frozenset(s.c2)}
    want = {frozenset({0, 1, 2}), frozenset({3, 4, 5})}
    rng = [(k, r.gamma) for k, r in gamma_range(g)]
    k5 = gamma_ktuple(g, 5).status
    elapsed = best_of(lambda: gamma_range(build_structure(io.read_graph(FIXTURES / "figure1.graph"))))
    ok = (parts == want and s.u == (6,) and sorted((s.alpha1, s.alpha2)) == [1, 2]
          and rng == [(1, 1), (2, 3), (3, 4), (4, 6)] and k5 == INFEASIBLE and elapsed < 0.010)
    report(1, ok, f"range={rng} k5={k5} alpha=({s.alpha1},{s.alpha2}) time={elapsed * 1e3:.2f}ms")


def test_criterion_2_oracle_equivalence(report):
    t0 = time.perf_counter()
    cases = mismatches = undetermined = 0
    for idx, spec in enumerate(staircase_corpus(520, 12, seed=2024)):
        g = scramble(gen_staircase(spec), idx)
        s = build_structure(g)
        for k in range(0, min_degree(g) + 3):
            ref = brute_force_gamma(g, k)
            res = solve(s, k)
            if res.status == UNDETERMINED:
                undetermined += 1
                if res.reason != OPEN_REGION:
                    mismatches += 1
                res = solve(s, k, oracle_fallback=True, graph=g)
            cases += 1
            good = oracle_match(res, ref)
            if good and res.is_value:
                good = len(res.witness) == ref.gamma and is_k_tuple_dominating(g, res.witness, k)
            mismatches += not good
    elapsed = time.perf_counter() - t0
    report(2, mismatches == 0 and elapsed < 60,
           f"{cases} (instance, k) pairs over 520 instances, {mismatches} mismatches, "
           f"{undetermined} open-region answers resolved by fallback, {elapsed:.1f}s")


def test_criterion_3_recognition_small(report):
    mismatches = checked = 0
    for h in nx.graph_atlas_g():
        n = h.number_of_nodes()
        if n > 6:
            continue
        g = Graph.from_edge_list(n, list(h.edges()))
        m = augmented_matrix(g)
        ours = find_c0p_ordering(g)
        ref = brute_force_c0p(m)
        checked += 1
        if (ours is None) != (ref is None):
            mismatches += 1
        elif ours is not None and not (verify_c0p_ordering(m, ours)
                                       and verify_c0p_ordering(m, ref, symmetric=False)):
            mismatches += 1
    c5 = cycle(5)
    rejected = find_c0p_ordering(c5) is None and all(
        find_c0p_ordering(scramble(c5, seed)) is None for seed in range(20))
    report(3, mismatches == 0 and rejected,
           f"{checked} graphs with n<=6, {mismatches} mismatches, C5 and 20 relabellings rejected={rejected}")


def _cores(count, seed, max_n=12):
    """Universal-free staircase cores, each with both cliques non-empty."""
    out = []
    for spec in staircase_corpus(count * 3, max_n, seed, u_choices=(0,)):
        s = staircase_structure(spec)
        if s.u or not s.c1 or not s.c2:
            continue
        out.append((gen_staircase(spec), build_structure(gen_staircase(spec))))
        if len(out) == count:
            break
    return out


def _domination_floor(g, s_set, targets):
    return min(bin(g.closed_mask(x) & sum(1 << v for v in s_set)).count("1") for x in targets)


def test_criterion_4_property_suites(report):
    rng = random.Random(4)
    cores = _cores(220, seed=44)
    failures = {name: 0 for name in ("stable", "size", "bound", "reduction", "helly", "alpha-one")}
    counts = dict.fromkeys(failures, 0)

    for g, s in cores:
        h = {1: s.h1.as_dict(), 2: s.h2.as_dict()}
        side = {1: s.c1, 2: s.c2}
        for i, j in ((1, 2), (2, 1)):
            # stable in H_i <=> (|S|-1)-dominates the opposite clique
            size = rng.randint(1, len(side[i]))
            subset = rng.sample(side[i], size)
            ivs = sorted(h[i][v] for v in subset)
            stable = all(a[1] < b[0] for a, b in zip(ivs, ivs[1:]))
            dominates = _domination_floor(g, subset, side[j]) >= size - 1
            failures["stable"] += stable != dominates
            counts["stable"] += 1
            # a subset of C_i that t-dominates C_j (t >= 1) has at least t+1 members
            draws = [list(side[i])] + [rng.sample(side[i], rng.randint(1, len(side[i]))) for _ in range(4)]
            for sub in draws:
                t = _domination_floor(g, sub, side[j])
                if t >= 1:
                    failures["size"] += len(sub) < t + 1
                    counts["size"] += 1
            # alpha_i = 1 <=> some vertex of C_j misses all of C_i
            alpha_i = stability_number(s.h1 if i == 1 else s.h2)
            blind = any(not any(g.has_edge(x, y) for y in side[i]) for x in side[j])
            failures["helly"] += (alpha_i == 1) != blind
            counts["helly"] += 1
        # alpha_i = 1 => a minimum k-tuple dominating set takes k vertices from C_j
        for k in range(1, min_degree(g) + 2):
            ref = brute_force_gamma(g, k)
            for alpha_i, cj in ((s.alpha1, s.c2), (s.alpha2, s.c1)):
                if alpha_i == 1 and ref.is_value:
                    failures["alpha-one"] += len(set(ref.witness) & set(cj)) < k
                    counts["alpha-one"] += 1

    for idx, spec in enumerate(staircase_corpus(220, 11, seed=45, u_choices=(1, 2, 3))):
        g = gen_staircase(spec)
        s = build_structure(g)
        u = universal_vertices(g)
        # gamma <= 2k once both cliques have k vertices
        for k in range(1, min(len(s.c1), len(s.c2)) + 1):
            ref = brute_force_gamma(g, k)
            failures["bound"] += not (ref.is_value and ref.gamma <= 2 * k)
            counts["bound"] += 1
        # removing a universal vertex lowers k and gamma by one
        if not u:
            continue
        rest, _ = induced_subgraph(g, [v for v in range(g.n) if v != u[0]])
        for k in range(1, min_degree(g) + 2):
            a, b = brute_force_gamma(g, k), brute_force_gamma(rest, k - 1)
            good = a.status == b.status and (not a.is_value or a.gamma == b.gamma + 1)
            failures["reduction"] += not good
            counts["reduction"] += 1

    ok = all(v == 0 for v in failures.values()) and all(c >= 200 for c in counts.values())
    detail = ", ".join(f"{name} {counts[name]} cases/{failures[name]} failures" for name in failures)
    report(4, ok, detail)


def test_criterion_5_ordering_independence(report):
    found = differing = 0
    rng = random.Random(5)
    while found < 100:
        spec = random_staircase(rng.randint(2, 7), rng.randint(2, 7), rng.randint(0, 3),
                                seed=rng.randrange(2**31), p_empty=rng.choice([0.0, 0.2]))
        g = gen_staircase(spec)
        base = find_c0p_ordering(g)
        alt = next((o for o in (find_c0p_ordering(g, seed=sd) for sd in range(10)) if o != base), None)
        if alt is None:
            continue
        found += 1
        a = [(k, str(r)) for k, r in gamma_range(build_structure(g, base), oracle_fallback=True)]
        b = [(k, str(r)) for k, r in gamma_range(build_structure(g, alt), oracle_fallback=True)]
        differing += a != b
    report(5, differing == 0, f"{found} instances with two distinct orderings, {differing} disagreements")


def _solver_phase(s):
    stability_number(s.h1)
    stability_number(s.h2)
    gamma_range(s)


def test_criterion_6_performance(report):
    sizes = [12_500, 25_000, 50_000, 100_000]
    timings = []
    for n in sizes:
        spec = banded_staircase(n // 2, n - n // 2 - 2, 2, 8)
        s = staircase_structure(spec)
        timings.append(best_of(lambda: _solver_phase(s), repeats=3))
    ratios = [b / a for a, b in zip(timings, timings[1:])]
    spec = banded_staircase(1000, 998, 2, 8)
    dense = scramble(gen_staircase(spec), 6)
    t0 = time.perf_counter()
    order = find_c0p_ordering(dense)
    recog = time.perf_counter() - t0
    ok = timings[-1] < 1.0 and all(r <= 2.5 for r in ratios) and order is not None and recog < 5.0
    report(6, ok, f"n=1e5 solver phase {timings[-1] * 1e3:.1f}ms, doubling ratios "
                  f"{', '.join(f'{r:.2f}' for r in ratios)}, dense n=2000 recognition {recog:.2f}s")


def test_criterion_7_dispatch_coverage(report):
    mismatches = cases = fallback = 0
    seen = set()
    for g, s in _cores(300, seed=77, max_n=14):
        for k in range(1, min_degree(g) + 2):
            ref = brute_force_gamma(g, k)
            res = solve(s, k)
            cases += 1
            if res.status == UNDETERMINED:
                seen.add("undetermined")
                fallback += 1
                res = solve(s, k, oracle_fallback=True, graph=g)
            else:
                seen.add(res.rule)
            mismatches += not oracle_match(res, ref)
    wanted = {TWO_CLIQUES, STABLE_UNION, STABLE_UNION_PLUS_TWO, "undetermined"}
    report(7, mismatches == 0 and wanted <= seen,
           f"{cases} core cases, {mismatches} mismatches, {fallback} fallback answers, "
           f"branches hit: {sorted(seen)}")
