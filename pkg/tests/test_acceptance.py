"""Acceptance suite: one test per criterion, printed as it passes.

Run with ``pytest -v tests/test_acceptance.py`` (add ``-s`` to see the
per-criterion lines as they print).
"""

import gc
import random
import statistics
import time
from itertools import permutations

import numpy as np

from orginfer import oracle
from orginfer.critical_pairs import build_graph, count_critical_pairs, feasible
from orginfer.departments import greedy_departments, min_departments, solve_partition
from orginfer.hierarchy import TraversalPair, random_hierarchy, reconstruct, validate
from orginfer.interactions import min_structure, solve_composition
from orginfer.model import (
    INCONSISTENT,
    INFEASIBLE,
    CommunicationGraph,
    traverse_bf,
    traverse_df,
)


def _report(criterion, detail):
    print(f"criterion {criterion}: PASS ({detail})")


def test_criterion_01_department_dp_matches_oracle():
    checked = 0
    for n in range(13):
        for k in range(n * (n - 1) // 2 + 1):
            got = min_departments(n, k)
            want = oracle.oracle_min_departments(n, k)
            assert got == want or (got is INFEASIBLE and want is INFEASIBLE), (n, k, got, want)
            checked += 1
    _report(1, f"department DP equals oracle on {checked} instances with n <= 12")


def test_criterion_02_greedy_counterexample():
    assert greedy_departments(12, 18) == 5
    assert min_departments(12, 18) == 3
    assert greedy_departments(12, 18) > min_departments(12, 18)
    _report(2, "greedy gives 5 departments at n=12, k=18 where the optimum is 3")


def test_criterion_03_interaction_dp_matches_oracle():
    for ti in range(61):
        got = min_structure(ti)
        want = oracle.oracle_min_structure(ti)
        assert got == want, (ti, got, want)
        witness = solve_composition(ti)
        assert witness.interactions == ti, ti
        assert (witness.total_employees, witness.bosses) == want, ti
    _report(3, "interaction DP equals oracle and witnesses re-evaluate for TI <= 60")


def test_criterion_04_critical_pair_feasibility_matches_oracle():
    checked = 0
    for n in range(7):
        achievable = oracle.oracle_feasible_set(n)
        for k in range(n * (n - 1) // 2 + 1):
            assert feasible(n, k) == (k in achievable), (n, k)
            checked += 1
    assert feasible(2, 0) is False
    for i in range(3, 7):
        assert feasible(i, 0) is True
    _report(4, f"feasibility equals exhaustive graph enumeration on {checked} instances")


def _random_connected_graph(n, extra_edges, rnd):
    edges = {(min(v, p), max(v, p)) for v, p in ((v, rnd.randrange(1, v)) for v in range(2, n + 1))}
    candidates = [(u, v) for u in range(1, n + 1) for v in range(u + 1, n + 1) if (u, v) not in edges]
    rnd.shuffle(candidates)
    edges.update(candidates[:extra_edges])
    return CommunicationGraph.make(n, edges)


def test_criterion_05_witness_graphs_verified():
    built = 0
    for n in range(7):
        for k in range(n * (n - 1) // 2 + 1):
            g = build_graph(n, k)
            if g is INFEASIBLE:
                continue
            assert count_critical_pairs(g) == k, (n, k)
            built += 1
    rnd = random.Random(97531)
    for _ in range(200):
        n = rnd.randrange(2, 11)
        g = _random_connected_graph(n, rnd.randrange(0, n), rnd)
        assert count_critical_pairs(g) == oracle.oracle_critical_pairs(g)
    _report(5, f"{built} witnesses hit their count; bridge decomposition matches "
               "the edge-deletion oracle on 200 random graphs")


def test_criterion_06_reconstruction_roundtrip():
    total = 0
    for n in range(1, 8):
        for h in oracle.all_rooted_hierarchies(n):
            pair = TraversalPair.make(traverse_df(h), traverse_bf(h))
            got = reconstruct(pair)
            assert got is not INCONSISTENT, pair
            assert validate(pair, got), pair
            total += 1
    rng = np.random.default_rng(424242)
    random_counts = ((100, 1000), (1000, 1000), (10_000, 1000), (100_000, 30))
    for n, reps in random_counts:
        for _ in range(reps):
            h = random_hierarchy(n, rng)
            pair = TraversalPair.make(traverse_df(h), traverse_bf(h))
            got = reconstruct(pair)
            assert got is not INCONSISTENT, n
            assert validate(pair, got), n
            total += 1
    _report(6, f"round-trip holds for {total} trees (exhaustive n <= 7 plus random)")


def test_criterion_07_inconsistency_detection_matches_oracle():
    checked = 0
    for n in range(1, 6):
        realizable = set()
        for h in oracle.all_rooted_hierarchies(n):
            realizable.add((traverse_df(h).seq, traverse_bf(h).seq))
        for df in permutations(range(1, n + 1)):
            for bf in permutations(range(1, n + 1)):
                if df[0] != bf[0]:
                    continue
                got = reconstruct(TraversalPair.make(df, bf))
                assert (got is INCONSISTENT) == ((df, bf) not in realizable), (df, bf)
                checked += 1
    # spot-check that the bulk realizable set agrees with the literal oracle
    rnd = random.Random(8)
    spot = 0
    for n in (3, 4, 5):
        for _ in range(20):
            df = tuple(rnd.sample(range(1, n + 1), n))
            bf = (df[0],) + tuple(rnd.sample([v for v in range(1, n + 1) if v != df[0]], n - 1))
            pair = TraversalPair.make(df, bf)
            literal = oracle.oracle_consistent_trees(pair)
            assert (reconstruct(pair) is INCONSISTENT) == (literal == []), (df, bf)
            spot += 1
    _report(7, f"inconsistency calls match enumeration on {checked} ordering pairs "
               f"(+{spot} literal oracle spot checks)")


def _median_reconstruct_seconds(n, reps, rng):
    times = []
    for _ in range(reps):
        h = random_hierarchy(n, rng)
        pair = TraversalPair.make(traverse_df(h), traverse_bf(h))
        gc.collect()
        gc.disable()
        try:
            start = time.perf_counter()
            got = reconstruct(pair)
            times.append(time.perf_counter() - start)
        finally:
            gc.enable()
        assert got is not INCONSISTENT
    return statistics.median(times)


def test_criterion_08_reconstruction_scales_linearly():
    rng = np.random.default_rng(77)
    _median_reconstruct_seconds(100_000, 1, rng)  # warm-up
    small = _median_reconstruct_seconds(100_000, 5, rng)
    big = _median_reconstruct_seconds(1_000_000, 3, rng)
    ratio = big / small
    assert ratio <= 15.0, f"10x input grew runtime {ratio:.1f}x (bound 15)"
    _report(8, f"median reconstruction time grows {ratio:.1f}x from n=1e5 to n=1e6 (bound 15)")


def test_criterion_09_dp_complexity_smoke():
    start = time.perf_counter()
    depts = min_departments(100, 2000)
    dept_seconds = time.perf_counter() - start
    assert dept_seconds < 10.0, f"min_departments(100, 2000) took {dept_seconds:.1f}s"
    assert depts is not INFEASIBLE
    witness = solve_partition(100, 2000, depts)
    assert witness.employees == 100 and witness.pairs == 2000

    start = time.perf_counter()
    structure = min_structure(2000)
    ti_seconds = time.perf_counter() - start
    assert ti_seconds < 10.0, f"min_structure(2000) took {ti_seconds:.1f}s"
    # 2000 = 40*50 and sqrt is superadditive, so one department is forced
    assert structure == (90, 40)
    _report(9, f"min_departments(100, 2000) in {dept_seconds:.2f}s, "
               f"min_structure(2000) in {ti_seconds:.2f}s (bound 10s each)")
