"""Infer company structures from scalar observations.

Four solvers, each paired with an independent brute-force oracle in
``orginfer.oracle``:

* departments: minimum department count realizing a same-department
  pair census, with a witness partition and the (non-optimal) greedy;
* interactions: smallest staffing whose boss/employee interactions sum
  to a given total;
* critical pairs: a connected communication graph with a prescribed
  number of bridge-separated vertex pairs;
* hierarchy: a rooted tree consistent with given depth-first and
  breadth-first orderings, in linear time.
"""

from . import oracle
from .critical_pairs import (
    ComponentPath,
    FeasibilityTable,
    build_graph,
    component_path,
    count_critical_pairs,
    feasible,
    find_bridges,
)
from .departments import PartitionTable, greedy_departments, min_departments, solve_partition
from .hierarchy import TraversalPair, random_hierarchy, reconstruct, validate
from .interactions import InteractionTables, min_structure, solve_composition
from .model import (
    INCONSISTENT,
    INFEASIBLE,
    CommunicationGraph,
    DepartmentPartition,
    DeptComposition,
    Hierarchy,
    Inconsistent,
    Infeasible,
    Ordering,
    pair_count,
    traverse_bf,
    traverse_df,
)

__version__ = "0.1.0"

__all__ = [
    "INFEASIBLE",
    "INCONSISTENT",
    "Infeasible",
    "Inconsistent",
    "CommunicationGraph",
    "ComponentPath",
    "DepartmentPartition",
    "DeptComposition",
    "FeasibilityTable",
    "Hierarchy",
    "InteractionTables",
    "Ordering",
    "PartitionTable",
    "TraversalPair",
    "build_graph",
    "component_path",
    "count_critical_pairs",
    "feasible",
    "find_bridges",
    "greedy_departments",
    "min_departments",
    "min_structure",
    "oracle",
    "pair_count",
    "random_hierarchy",
    "reconstruct",
    "solve_composition",
    "solve_partition",
    "traverse_bf",
    "traverse_df",
    "validate",
]
