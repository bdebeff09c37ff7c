"""Minimum department counts from a same-department pair census.

Splitting i employees into departments of sizes e_1..e_d yields
sum C(e_t, 2) same-department pairs.  ``PartitionTable`` tabulates, for
every (i, j) with i <= n and j <= k, the least number of departments
whose sizes sum to i and whose pair counts sum to j; peeling one
department of size p from state (i, j) leads to state
(i - p, j - p*(p-1)/2), and the recorded peel sizes make a witness
recoverable by traceback.

The simple greedy that repeatedly opens the largest department still
fitting the remaining pair budget is provided for comparison; it is not
optimal (n=12, k=18 is a counterexample: greedy 5 vs optimum 3).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import isqrt

from .model import INFEASIBLE, DepartmentPartition, Infeasible, _check_count


def _check_instance(n, k) -> tuple[int, int]:
    _check_count(n, "employee count")
    _check_count(k, "pair count")
    if k > n * (n - 1) // 2:
        raise ValueError(f"pair count {k} exceeds C({n},2) = {n * (n - 1) // 2}")
    return n, k


@dataclass(frozen=True, slots=True)
class PartitionTable:
    """Least department counts for all sub-instances of (n, k).

    ``cells[i][j]`` is the minimum number of departments for i employees
    and j pairs, or None when no partition of i realizes exactly j pairs.
    ``choices[i][j]`` records the smallest first-department size p that
    attains the minimum, for traceback.
    """

    n: int
    k: int
    cells: tuple[tuple[int | None, ...], ...]
    choices: tuple[tuple[int, ...], ...]

    @classmethod
    def build(cls, n: int, k: int) -> "PartitionTable":
        _check_instance(n, k)
        cells: list[list[int | None]] = [[None] * (k + 1) for _ in range(n + 1)]
        choices: list[list[int]] = [[0] * (k + 1) for _ in range(n + 1)]
        cells[0][0] = 0
        for i in range(1, n + 1):
            row = cells[i]
            chrow = choices[i]
            row[0] = i
            chrow[0] = 1
            cap = i * (i - 1) // 2
            for j in range(1, min(k, cap) + 1):
                best: int | None = None
                best_p = 0
                p = 1
                cp = 0  # C(p, 2)
                while p <= i and cp <= j:
                    below = cells[i - p][j - cp]
                    if below is not None and (best is None or below < best):
                        best = below
                        best_p = p
                    p += 1
                    cp = p * (p - 1) // 2
                if best is not None:
                    row[j] = best + 1
                    chrow[j] = best_p
        return cls(n, k, tuple(tuple(r) for r in cells), tuple(tuple(r) for r in choices))

    def cell(self, i: int, j: int) -> int | None:
        return self.cells[i][j]


def min_departments(n, k) -> int | Infeasible:
    """Least number of departments for n employees and exactly k pairs.

    Raises ValueError when k > C(n,2); returns INFEASIBLE when no
    partition of n employees produces exactly k same-department pairs.
    """
    _check_instance(n, k)
    result = PartitionTable.build(n, k).cells[n][k]
    return INFEASIBLE if result is None else result


def solve_partition(n, k, d) -> DepartmentPartition | Infeasible:
    """Witness sizes for n employees, k pairs, and exactly d departments.

    The returned partition has exactly d entries, padded with
    zero-employee departments beyond the optimum.  INFEASIBLE when the
    minimum department count exceeds d or no partition exists at all.
    """
    _check_instance(n, k)
    _check_count(d, "department count")
    table = PartitionTable.build(n, k)
    needed = table.cells[n][k]
    if needed is None or needed > d:
        return INFEASIBLE
    sizes = []
    i, j = n, k
    while i > 0:
        p = table.choices[i][j]
        sizes.append(p)
        i -= p
        j -= p * (p - 1) // 2
    sizes.extend([0] * (d - len(sizes)))
    return DepartmentPartition.make(sizes)


def _largest_block(k: int) -> int:
    """Largest p with p*(p-1)/2 <= k."""
    p = (1 + isqrt(1 + 8 * k)) // 2
    while (p + 1) * p // 2 <= k:
        p += 1
    while p * (p - 1) // 2 > k:
        p -= 1
    return p


def greedy_departments(n, k) -> int | Infeasible:
    """Department count from the largest-first greedy; not optimal.

    Repeatedly opens a department holding the largest group whose pair
    count still fits the remaining budget, then counts every leftover
    employee as a singleton department.  Returns INFEASIBLE if a chosen
    group would need more employees than remain.
    """
    _check_instance(n, k)
    d = 0
    while k > 0:
        p = _largest_block(k)
        if p > n:
            return INFEASIBLE
        k -= p * (p - 1) // 2
        n -= p
        d += 1
    return d + n
