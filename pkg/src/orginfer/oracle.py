"""Brute-force reference implementations for property tests and verify
sweeps.

Everything here enumerates the literal definitions within a small
budget and shares no recurrence or traversal-construction logic with
the solver modules; a divergence between a solver and its oracle on any
in-budget instance is a bug in one of them.  Budgets are sized so the
whole oracle-backed test suite stays well under a minute.
"""

from __future__ import annotations

from itertools import combinations, product
from math import isqrt

from .model import (
    INFEASIBLE,
    CommunicationGraph,
    Hierarchy,
    Infeasible,
    _check_count,
    traverse_bf,
    traverse_df,
)

PARTITION_LIMIT = 14
INTERACTION_LIMIT = 60
GRAPH_LIMIT = 6
CRITICAL_LIMIT = 10
TREE_LIMIT = 6


def partitions(n: int):
    """All integer partitions of n, each as an ascending list."""
    # Kelleher's accelerated ascending-composition generator
    if n == 0:
        yield []
        return
    a = [0] * (n + 1)
    k = 1
    y = n - 1
    while k != 0:
        x = a[k - 1] + 1
        k -= 1
        while 2 * x <= y:
            a[k] = x
            k += 1
            y -= x
        length = k + 1
        while x <= y:
            a[k] = x
            a[length] = y
            yield a[:k + 2]
            x += 1
            y -= 1
        a[k] = x + y
        y = x + y - 1
        yield a[:k + 1]


def oracle_min_departments(n, k) -> int | Infeasible:
    """Exhaustive minimum part count over all partitions of n whose
    same-group pair counts sum to exactly k."""
    _check_count(n, "employee count")
    _check_count(k, "pair count")
    if n > PARTITION_LIMIT:
        raise ValueError(f"enumeration budget is n <= {PARTITION_LIMIT}, got {n}")
    best: int | None = None
    for part in partitions(n):
        if sum(s * (s - 1) // 2 for s in part) == k:
            if best is None or len(part) < best:
                best = len(part)
    return INFEASIBLE if best is None else best


def oracle_min_structure(ti) -> tuple[int, int]:
    """Exhaustive lexicographic optimum over all department multisets.

    Enumerates multisets of (bosses, employees) pairs with products
    summing to ti, in canonical non-increasing order, pruned by the
    bound staff >= 2*sqrt(interactions) (AM-GM, and sqrt superadditive
    over departments).
    """
    _check_count(ti, "interaction count")
    if ti > INTERACTION_LIMIT:
        raise ValueError(f"enumeration budget is ti <= {INTERACTION_LIMIT}, got {ti}")
    if ti == 0:
        return (0, 0)
    pairs = sorted(
        ((b * e, b, e) for b in range(1, ti + 1) for e in range(1, ti // b + 1)),
        reverse=True,
    )
    best = [ti + 1, 1]  # one department: 1 boss, ti employees

    def staff_floor(remaining: int) -> int:
        r = isqrt(4 * remaining)
        return r if r * r == 4 * remaining else r + 1

    def extend(start: int, remaining: int, staff: int, bosses: int) -> None:
        if remaining == 0:
            if staff < best[0] or (staff == best[0] and bosses < best[1]):
                best[0] = staff
                best[1] = bosses
            return
        if staff + staff_floor(remaining) > best[0]:
            return
        if staff + staff_floor(remaining) == best[0] and bosses + 1 > best[1]:
            return
        for idx in range(start, len(pairs)):
            load, b, e = pairs[idx]
            if load > remaining:
                continue
            extend(idx, remaining - load, staff + b + e, bosses + b)

    extend(0, ti, 0, 0)
    return (best[0], best[1])


def oracle_critical_pairs(g: CommunicationGraph) -> int:
    """Critical pairs by the definition: delete each edge in turn,
    collect every newly disconnected vertex pair, count the union."""
    if g.n > CRITICAL_LIMIT:
        raise ValueError(f"enumeration budget is n <= {CRITICAL_LIMIT}, got {g.n}")
    if not g._is_connected():
        raise ValueError("graph is not connected")
    vertices = set(range(1, g.n + 1))
    critical: set[tuple[int, int]] = set()
    for removed in g.edges:
        adj: dict[int, list[int]] = {v: [] for v in vertices}
        for u, v in g.edges:
            if (u, v) != removed:
                adj[u].append(v)
                adj[v].append(u)
        side = {removed[0]}
        queue = [removed[0]]
        while queue:
            u = queue.pop()
            for w in adj[u]:
                if w not in side:
                    side.add(w)
                    queue.append(w)
        if removed[1] not in side:
            other = vertices - side
            for a in side:
                for b in other:
                    critical.add((a, b) if a < b else (b, a))
    return len(critical)


def connected_graphs(n: int):
    """All connected simple graphs on vertices 1..n, by edge subsets."""
    if n > GRAPH_LIMIT:
        raise ValueError(f"enumeration budget is n <= {GRAPH_LIMIT}, got {n}")
    all_edges = list(combinations(range(1, n + 1), 2))
    for mask in range(1 << len(all_edges)):
        edges = [all_edges[b] for b in range(len(all_edges)) if mask >> b & 1]
        adj: dict[int, list[int]] = {v: [] for v in range(1, n + 1)}
        for u, v in edges:
            adj[u].append(v)
            adj[v].append(u)
        if n > 1:
            seen = {1}
            queue = [1]
            while queue:
                u = queue.pop()
                for w in adj[u]:
                    if w not in seen:
                        seen.add(w)
                        queue.append(w)
            if len(seen) != n:
                continue
        yield CommunicationGraph.make(n, edges)


def oracle_feasible_set(n) -> set[int]:
    """Every critical-pair count achieved by some connected simple graph
    on n labeled vertices."""
    _check_count(n, "vertex count")
    achieved = set()
    for g in connected_graphs(n):
        achieved.add(oracle_critical_pairs(g))
    return achieved


def _edges_from_pruefer(seq, n: int) -> list[tuple[int, int]]:
    degree = [1] * (n + 1)
    for s in seq:
        degree[s] += 1
    edges = []
    for s in seq:
        for v in range(1, n + 1):
            if degree[v] == 1:
                break
        edges.append((v, s))
        degree[v] -= 1
        degree[s] -= 1
    last = [v for v in range(1, n + 1) if degree[v] == 1]
    edges.append((last[0], last[1]))
    return edges


def _rooted(edges, n: int, root: int) -> Hierarchy:
    adj: list[list[int]] = [[] for _ in range(n + 1)]
    for u, v in edges:
        adj[u].append(v)
        adj[v].append(u)
    parent = [0] * (n + 1)
    seen = [False] * (n + 1)
    seen[root] = True
    queue = [root]
    qi = 0
    while qi < len(queue):
        u = queue[qi]
        qi += 1
        for w in adj[u]:
            if not seen[w]:
                seen[w] = True
                parent[w] = u
                queue.append(w)
    return Hierarchy(n, tuple(parent))


def all_rooted_hierarchies(n: int):
    """Every rooted labeled tree on 1..n (n^(n-1) of them), via Pruefer
    sequences crossed with all root choices."""
    if n > TREE_LIMIT + 1:
        raise ValueError(f"enumeration budget is n <= {TREE_LIMIT + 1}, got {n}")
    if n == 1:
        yield Hierarchy(1, (0, 0))
        return
    if n == 2:
        yield Hierarchy(2, (0, 0, 1))
        yield Hierarchy(2, (0, 2, 0))
        return
    for seq in product(range(1, n + 1), repeat=n - 2):
        edges = _edges_from_pruefer(seq, n)
        for root in range(1, n + 1):
            yield _rooted(edges, n, root)


def oracle_consistent_trees(pair) -> list[Hierarchy]:
    """All rooted labeled trees whose DF and BF traversals equal the
    given pair, by plain enumeration."""
    n = pair.n
    if n > TREE_LIMIT:
        raise ValueError(f"enumeration budget is n <= {TREE_LIMIT}, got {n}")
    found = []
    for h in all_rooted_hierarchies(n):
        if traverse_df(h).seq == pair.df.seq and traverse_bf(h).seq == pair.bf.seq:
            found.append(h)
    return found
