"""Shared domain types for company-structure inference.

Employees and tree vertices are labeled 1..n; 0 is the reserved
"no parent" label.  Counts are plain Python integers, so pair counts
never overflow or wrap.  All types here are immutable values after
construction: build them through the validating ``make`` classmethods
and share them freely between threads.
"""

from __future__ import annotations

from array import array
from dataclasses import dataclass


class Infeasible:
    """Result marker: no structure realizes the requested counts."""

    _instance = None

    def __new__(cls) -> "Infeasible":
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "INFEASIBLE"


class Inconsistent:
    """Result marker: no tree agrees with the given orderings."""

    _instance = None

    def __new__(cls) -> "Inconsistent":
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self) -> str:
        return "INCONSISTENT"


INFEASIBLE = Infeasible()
INCONSISTENT = Inconsistent()


def _check_count(value, name: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ValueError(f"{name} must be an integer, got {value!r}")
    if value < 0:
        raise ValueError(f"{name} must be non-negative, got {value}")
    return value


def pair_count(sizes) -> int:
    """Number of same-group pairs in groups of the given sizes.

    A group of s members contains s*(s-1)/2 unordered pairs; the result
    is the sum over all groups.  Invariant under reordering of sizes.
    """
    total = 0
    for s in sizes:
        _check_count(s, "group size")
        total += s * (s - 1) // 2
    return total


@dataclass(frozen=True, slots=True)
class DepartmentPartition:
    """Department sizes (largest first) splitting a workforce.

    ``sizes`` may contain zero-size departments; they contribute no
    employees and no pairs.
    """

    sizes: tuple[int, ...]

    @classmethod
    def make(cls, sizes) -> "DepartmentPartition":
        sizes = tuple(sizes)
        for s in sizes:
            _check_count(s, "department size")
        return cls(tuple(sorted(sizes, reverse=True)))

    @property
    def employees(self) -> int:
        return sum(self.sizes)

    @property
    def pairs(self) -> int:
        return pair_count(self.sizes)


@dataclass(frozen=True, slots=True)
class DeptComposition:
    """Per-department (bosses, employees) pairs; both counts >= 1 each."""

    departments: tuple[tuple[int, int], ...]

    @classmethod
    def make(cls, departments) -> "DeptComposition":
        deps = []
        for b, e in departments:
            _check_count(b, "boss count")
            _check_count(e, "employee count")
            if b < 1 or e < 1:
                raise ValueError(f"department ({b}, {e}) needs at least one boss and one employee")
            deps.append((b, e))
        return cls(tuple(deps))

    @property
    def interactions(self) -> int:
        return sum(b * e for b, e in self.departments)

    @property
    def total_employees(self) -> int:
        return sum(b + e for b, e in self.departments)

    @property
    def bosses(self) -> int:
        return sum(b for b, _ in self.departments)


@dataclass(frozen=True, slots=True)
class CommunicationGraph:
    """Connected simple graph over employees 1..n.

    Edges are stored as (u, v) with u < v.  Connectivity is part of the
    type: every employee can reach every other one.
    """

    n: int
    edges: frozenset[tuple[int, int]]

    @classmethod
    def make(cls, n, edges) -> "CommunicationGraph":
        _check_count(n, "vertex count")
        seen = set()
        for u, v in edges:
            _check_count(u, "vertex")
            _check_count(v, "vertex")
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (1 <= u <= n and 1 <= v <= n):
                raise ValueError(f"edge ({u}, {v}) outside 1..{n}")
            e = (u, v) if u < v else (v, u)
            if e in seen:
                raise ValueError(f"duplicate edge {e}")
            seen.add(e)
        graph = cls(n, frozenset(seen))
        if n > 1 and not graph._is_connected():
            raise ValueError("graph is not connected")
        return graph

    def edge_list(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def adjacency(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in range(self.n + 1)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return adj

    def _is_connected(self) -> bool:
        if self.n <= 1:
            return True
        adj = self.adjacency()
        seen = [False] * (self.n + 1)
        seen[1] = True
        queue = [1]
        count = 1
        while queue:
            u = queue.pop()
            for w in adj[u]:
                if not seen[w]:
                    seen[w] = True
                    count += 1
                    queue.append(w)
        return count == self.n


@dataclass(frozen=True, slots=True)
class Hierarchy:
    """Rooted tree over vertices 1..n given as a parent array.

    ``parent[v]`` is the boss of vertex v; the unique root r has
    ``parent[r] == 0``.  Slot 0 is unused padding.  Children of a vertex
    are visited in ascending label order by both traversals.
    """

    n: int
    parent: tuple[int, ...]

    @classmethod
    def make(cls, n, parent) -> "Hierarchy":
        _check_count(n, "vertex count")
        if n < 1:
            raise ValueError("a hierarchy needs at least one vertex")
        parent = tuple(parent)
        if len(parent) != n + 1:
            raise ValueError(f"parent array must have length n+1 = {n + 1}, got {len(parent)}")
        roots = 0
        for v in range(1, n + 1):
            p = parent[v]
            if isinstance(p, bool) or not isinstance(p, int) or not 0 <= p <= n:
                raise ValueError(f"parent of {v} must be in 0..{n}, got {p!r}")
            if p == v:
                raise ValueError(f"vertex {v} is its own parent")
            if p == 0:
                roots += 1
        if roots != 1:
            raise ValueError(f"expected exactly one root, found {roots}")
        h = cls(n, parent)
        off, kid = _children_csr(n, parent)
        reached = 1
        stack = [h.root]
        while stack:
            v = stack.pop()
            a, b = off[v], off[v + 1]
            if a != b:
                reached += b - a
                stack.extend(kid[a:b])
        if reached != n:
            raise ValueError("parent links do not form a single tree")
        return h

    @classmethod
    def from_parent_map(cls, mapping, n=None) -> "Hierarchy":
        """Build from a {vertex: parent} map; unlisted vertices are roots.

        Convenient for literals like ``{2: 1, 3: 1, 4: 2}`` where vertex 1
        is the implied root.
        """
        labels = set(mapping) | {p for p in mapping.values() if p != 0}
        if n is None:
            n = max(labels, default=0)
        parent = [0] * (n + 1)
        for v, p in mapping.items():
            parent[v] = p
        return cls.make(n, parent)

    @property
    def root(self) -> int:
        for v in range(1, self.n + 1):
            if self.parent[v] == 0:
                return v
        raise ValueError("hierarchy has no root")

    def parent_of(self, v: int) -> int:
        return self.parent[v]


@dataclass(frozen=True, slots=True)
class Ordering:
    """A permutation of 1..n recording a vertex visit sequence."""

    seq: tuple[int, ...]

    @classmethod
    def make(cls, seq) -> "Ordering":
        seq = tuple(seq)
        n = len(seq)
        seen = [False] * (n + 1)
        for v in seq:
            if isinstance(v, bool) or not isinstance(v, int) or not 1 <= v <= n or seen[v]:
                raise ValueError(f"sequence is not a permutation of 1..{n}")
            seen[v] = True
        return cls(seq)

    def positions(self) -> tuple[int, ...]:
        """Index of each vertex in the sequence; slot 0 is -1 padding."""
        pos = [-1] * (len(self.seq) + 1)
        for i, v in enumerate(self.seq):
            pos[v] = i
        return tuple(pos)

    def __len__(self) -> int:
        return len(self.seq)

    def __iter__(self):
        return iter(self.seq)


def _children_csr(n: int, parent) -> tuple[array, array]:
    """Children of v as kid[off[v]:off[v+1]], ascending within each vertex.

    Ascending order falls out of filling by increasing child label, so no
    sort is ever needed.
    """
    cnt = array("l", bytes(8 * (n + 2)))
    for v in range(1, n + 1):
        cnt[parent[v]] += 1
    off = array("l", bytes(8 * (n + 2)))
    s = 0
    for v in range(n + 1):
        off[v] = s
        s += cnt[v]
    off[n + 1] = s
    cur = array("l", off)
    kid = array("l", bytes(8 * n))
    for v in range(1, n + 1):
        p = parent[v]
        kid[cur[p]] = v
        cur[p] += 1
    return off, kid


def traverse_df(h: Hierarchy) -> Ordering:
    """Depth-first (preorder) visit sequence of a hierarchy.

    Each vertex is emitted before its subtrees; children are expanded in
    ascending label order.
    """
    n = h.n
    off, kid = _children_csr(n, h.parent)
    out = [0] * n
    stack = [h.root]
    pop = stack.pop
    extend = stack.extend
    i = 0
    while stack:
        v = pop()
        out[i] = v
        i += 1
        a, b = off[v], off[v + 1]
        if a != b:
            extend(kid[a:b][::-1])
    return Ordering(tuple(out))


def traverse_bf(h: Hierarchy) -> Ordering:
    """Breadth-first (level-order) visit sequence of a hierarchy.

    Levels are emitted top-down; within a vertex, children appear in
    ascending label order.
    """
    n = h.n
    off, kid = _children_csr(n, h.parent)
    out = [0] * n
    out[0] = h.root
    qi = 0
    qn = 1
    while qi < qn:
        v = out[qi]
        qi += 1
        a, b = off[v], off[v + 1]
        if a != b:
            out[qn:qn + b - a] = kid[a:b]
            qn += b - a
    return Ordering(tuple(out))
