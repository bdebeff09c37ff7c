"""Smallest staff realizing a given boss/employee interaction total.

A department with b bosses and e simple employees produces b*e
interactions (every boss talks to every simple employee in it).  Given
only the company-wide interaction total, find the composition with the
fewest people overall and, among those, the fewest bosses.

One department with 1 boss and TI employees is always valid, so every
total is realizable and total staff never exceeds TI + 1.
"""

from __future__ import annotations

from dataclasses import dataclass

from .model import DeptComposition, _check_count


@dataclass(frozen=True, slots=True)
class InteractionTables:
    """Optimal staffing per interaction sub-total 0..ti.

    ``total_employees[i]`` is the least bosses-plus-employees head count
    realizing i interactions; ``bosses[i]`` the least boss count among
    those head-count optima.  ``choices[i]`` is the (bosses, employees)
    department peeled at i, lexicographically smallest among all optimal
    peels, for traceback; (0, 0) at i = 0.
    """

    ti: int
    total_employees: tuple[int, ...]
    bosses: tuple[int, ...]
    choices: tuple[tuple[int, int], ...]

    @classmethod
    def build(cls, ti: int) -> "InteractionTables":
        _check_count(ti, "interaction count")
        inf = float("inf")
        te: list = [0] * (ti + 1)
        bo: list = [0] * (ti + 1)
        ch: list[tuple[int, int]] = [(0, 0)] * (ti + 1)
        for i in range(1, ti + 1):
            best_te = inf
            best_b = inf
            best = (0, 0)
            for b in range(1, i + 1):
                # e runs 1..i//b; i - b*e steps down by b
                e = 1
                people = b + 1
                for rest in range(i - b, -1, -b):
                    cand = te[rest] + people
                    if cand < best_te or (cand == best_te and bo[rest] + b < best_b):
                        best_te = cand
                        best_b = bo[rest] + b
                        best = (b, e)
                    e += 1
                    people += 1
            te[i] = int(best_te)
            bo[i] = int(best_b)
            ch[i] = best
        return cls(ti, tuple(te), tuple(bo), tuple(ch))


def min_structure(ti) -> tuple[int, int]:
    """(total staff, bosses) of the smallest composition for ti interactions.

    The objective is lexicographic: head count first, boss count second.
    ti = 0 means no departments at all, hence (0, 0).
    """
    tables = InteractionTables.build(ti)
    return tables.total_employees[ti], tables.bosses[ti]


def solve_composition(ti) -> DeptComposition:
    """A witness composition attaining min_structure(ti).

    Departments are reported as (bosses, employees) pairs in ascending
    lexicographic order.
    """
    tables = InteractionTables.build(ti)
    parts = []
    i = ti
    while i > 0:
        b, e = tables.choices[i]
        parts.append((b, e))
        i -= b * e
    parts.sort()
    return DeptComposition.make(parts)
