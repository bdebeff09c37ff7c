"""Communication graphs with a prescribed number of critical pairs.

A pair of employees (i, j) is critical when deleting some single edge of
the communication graph disconnects i from j.  Equivalently, i and j lie
in different 2-edge-connected components, so a connected graph on n
vertices has C(n, 2) - sum C(c_t, 2) critical pairs, where c_t are the
2-edge-connected component sizes.

Key structural facts used here:

* a bridge with n1 vertices on one side and n2 on the other contributes
  exactly n1*n2 critical pairs, and the two sides count independently;
* the bridge tree (components as vertices, bridges as edges) can be
  rearranged into a path without changing the critical-pair count;
* a component is a lone vertex or has size >= 3 (a 2-vertex component is
  itself a single bridge edge, not bridge-free).

Feasibility of (n, k) therefore reduces to choosing component sizes
p_1..p_m, each 1 or >= 3, summing to n, with all cross-component pairs
totaling k.  Peeling a leading component of size p from state (i, j)
leads to state (i - p, j - p*(i - p)).
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import chain

from .model import INFEASIBLE, CommunicationGraph, Infeasible, _check_count


@dataclass(frozen=True, slots=True)
class FeasibilityTable:
    """Reachability of every sub-instance (i <= n employees, j <= k pairs).

    ``ok[i][j]`` is True when some connected simple graph on i vertices
    has exactly j critical pairs.  ``choices[i][j]`` records the smallest
    leading component size proving it, or 0 where the whole remainder
    forms one bridge-free component (j = 0).
    """

    n: int
    k: int
    ok: tuple[tuple[bool, ...], ...]
    choices: tuple[tuple[int, ...], ...]

    @classmethod
    def build(cls, n: int, k: int) -> "FeasibilityTable":
        _check_count(n, "vertex count")
        _check_count(k, "pair count")
        ok: list[list[bool]] = [[False] * (k + 1) for _ in range(n + 1)]
        choices: list[list[int]] = [[0] * (k + 1) for _ in range(n + 1)]
        for i in range(n + 1):
            ok[i][0] = i != 2  # two vertices force one bridge, hence one critical pair
        for i in range(1, n + 1):
            cap = i * (i - 1) // 2
            for j in range(1, min(k, cap) + 1):
                for p in chain((1,), range(3, i + 1)):
                    rest = j - p * (i - p)
                    if rest >= 0 and ok[i - p][rest]:
                        ok[i][j] = True
                        choices[i][j] = p
                        break
        return cls(n, k, tuple(tuple(r) for r in ok), tuple(tuple(r) for r in choices))


@dataclass(frozen=True, slots=True)
class ComponentPath:
    """Bridge-free component sizes chained into a path by single bridges.

    Cross-component pairs are exactly the critical pairs of the realized
    graph: sum_{t<u} p_t * p_u, which also equals C(n,2) - sum C(p_t,2).
    """

    sizes: tuple[int, ...]

    @classmethod
    def make(cls, sizes) -> "ComponentPath":
        sizes = tuple(sizes)
        for p in sizes:
            _check_count(p, "component size")
            if p == 0 or p == 2:
                raise ValueError(f"component size must be 1 or >= 3, got {p}")
        return cls(sizes)

    @property
    def vertices(self) -> int:
        return sum(self.sizes)

    @property
    def cross_pairs(self) -> int:
        total = self.vertices
        return (total * total - sum(p * p for p in self.sizes)) // 2


def feasible(n, k) -> bool:
    """Whether some connected simple graph on n vertices has exactly k
    critical pairs."""
    _check_count(n, "vertex count")
    _check_count(k, "pair count")
    if k > n * (n - 1) // 2:
        return False
    return FeasibilityTable.build(n, k).ok[n][k]


def component_path(n, k) -> ComponentPath | Infeasible:
    """Component sizes witnessing feasibility of (n, k), or INFEASIBLE.

    Read by traceback over the feasibility table; the peeled component
    is appended last, so sizes come out in path order.
    """
    _check_count(n, "vertex count")
    _check_count(k, "pair count")
    if k > n * (n - 1) // 2:
        return INFEASIBLE
    table = FeasibilityTable.build(n, k)
    if not table.ok[n][k]:
        return INFEASIBLE
    peeled = []
    i, j = n, k
    while i > 0:
        if j == 0:
            peeled.append(i)
            break
        p = table.choices[i][j]
        peeled.append(p)
        j -= p * (i - p)
        i -= p
    return ComponentPath.make(reversed(peeled))


def build_graph(n, k) -> CommunicationGraph | Infeasible:
    """A connected simple graph on n vertices with exactly k critical pairs.

    Components get consecutive label blocks in path order starting at 1;
    a size-p >= 3 component becomes a simple cycle (fewest edges), a
    size-1 component a lone vertex, and consecutive components are joined
    by a bridge between their lowest-numbered vertices.
    """
    path = component_path(n, k)
    if path is INFEASIBLE:
        return INFEASIBLE
    edges = []
    start = 1
    prev_start = 0
    for p in path.sizes:
        if p >= 3:
            for t in range(p - 1):
                edges.append((start + t, start + t + 1))
            edges.append((start, start + p - 1))
        if prev_start:
            edges.append((prev_start, start))
        prev_start = start
        start += p
    return CommunicationGraph.make(n, edges)


def find_bridges(g: CommunicationGraph) -> frozenset[tuple[int, int]]:
    """All bridges of a connected graph, by one lowpoint traversal.

    A tree edge (u, v) is a bridge exactly when no back edge from v's
    subtree reaches u or above, i.e. low[v] > disc[u].
    """
    n = g.n
    if n == 0:
        return frozenset()
    edges = g.edge_list()
    adj: list[list[tuple[int, int]]] = [[] for _ in range(n + 1)]
    for eid, (u, v) in enumerate(edges):
        adj[u].append((v, eid))
        adj[v].append((u, eid))
    disc = [0] * (n + 1)
    low = [0] * (n + 1)
    cursor = [0] * (n + 1)
    in_edge = [-1] * (n + 1)
    bridges = []
    timer = 1
    disc[1] = low[1] = timer
    path = [1]
    while path:
        v = path[-1]
        neighbors = adj[v]
        if cursor[v] < len(neighbors):
            w, eid = neighbors[cursor[v]]
            cursor[v] += 1
            if eid == in_edge[v]:
                continue
            if disc[w]:
                if disc[w] < low[v]:
                    low[v] = disc[w]
            else:
                timer += 1
                disc[w] = low[w] = timer
                in_edge[w] = eid
                path.append(w)
        else:
            path.pop()
            if path:
                u = path[-1]
                if low[v] < low[u]:
                    low[u] = low[v]
                if low[v] > disc[u]:
                    bridges.append(edges[in_edge[v]])
    return frozenset(bridges)


def _component_sizes(g: CommunicationGraph, removed: frozenset[tuple[int, int]]) -> list[int]:
    adj: list[list[int]] = [[] for _ in range(g.n + 1)]
    for u, v in g.edges:
        if (u, v) not in removed:
            adj[u].append(v)
            adj[v].append(u)
    seen = [False] * (g.n + 1)
    sizes = []
    for s in range(1, g.n + 1):
        if seen[s]:
            continue
        seen[s] = True
        stack = [s]
        count = 1
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if not seen[w]:
                    seen[w] = True
                    count += 1
                    stack.append(w)
        sizes.append(count)
    return sizes


def count_critical_pairs(g: CommunicationGraph) -> int:
    """Number of vertex pairs separated by the removal of some one edge.

    Computed by bridge decomposition: all pairs minus the pairs interior
    to a 2-edge-connected component.
    """
    n = g.n
    if n <= 1:
        return 0
    inner = sum(c * (c - 1) // 2 for c in _component_sizes(g, find_bridges(g)))
    return n * (n - 1) // 2 - inner
