import random

import pytest

from orginfer import oracle
from orginfer.model import (
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


def test_sentinels_are_singletons():
    assert Infeasible() is INFEASIBLE
    assert Inconsistent() is INCONSISTENT
    assert repr(INFEASIBLE) == "INFEASIBLE"
    assert repr(INCONSISTENT) == "INCONSISTENT"


def test_pair_count_examples():
    assert pair_count([]) == 0
    assert pair_count([4, 4, 4]) == 18
    assert pair_count([1, 1, 1]) == 0
    assert pair_count([5]) == 10


def test_pair_count_rejects_bad_sizes():
    with pytest.raises(ValueError):
        pair_count([3, -1])
    with pytest.raises(ValueError):
        pair_count([True])


def test_pair_count_permutation_invariant():
    rnd = random.Random(7)
    for _ in range(200):
        sizes = [rnd.randrange(0, 9) for _ in range(rnd.randrange(0, 8))]
        shuffled = sizes[:]
        rnd.shuffle(shuffled)
        assert pair_count(sizes) == pair_count(shuffled)


def test_partition_sorts_sizes_descending():
    part = DepartmentPartition.make([0, 4, 1, 4])
    assert part.sizes == (4, 4, 1, 0)
    assert part.employees == 9
    assert part.pairs == 12


def test_composition_validates_and_sums():
    comp = DeptComposition.make([(2, 3), (1, 1)])
    assert comp.interactions == 7
    assert comp.total_employees == 7
    assert comp.bosses == 3
    with pytest.raises(ValueError):
        DeptComposition.make([(0, 3)])
    with pytest.raises(ValueError):
        DeptComposition.make([(3, 0)])


def test_graph_validation():
    g = CommunicationGraph.make(3, [(2, 1), (2, 3)])
    assert g.edge_list() == [(1, 2), (2, 3)]
    with pytest.raises(ValueError):
        CommunicationGraph.make(3, [(1, 1)])
    with pytest.raises(ValueError):
        CommunicationGraph.make(3, [(1, 2), (2, 1)])
    with pytest.raises(ValueError):
        CommunicationGraph.make(3, [(1, 4)])
    with pytest.raises(ValueError):
        CommunicationGraph.make(3, [(1, 2)])  # vertex 3 unreachable


def test_empty_and_single_vertex_graphs():
    assert CommunicationGraph.make(0, []).edges == frozenset()
    assert CommunicationGraph.make(1, []).n == 1


def test_hierarchy_validation():
    h = Hierarchy.make(3, (0, 0, 1, 1))
    assert h.root == 1
    assert h.parent_of(3) == 1
    with pytest.raises(ValueError):
        Hierarchy.make(3, (0, 0, 1))  # wrong length
    with pytest.raises(ValueError):
        Hierarchy.make(3, (0, 0, 0, 1))  # two roots
    with pytest.raises(ValueError):
        Hierarchy.make(3, (0, 0, 3, 2))  # 2-3 cycle, unreachable from root
    with pytest.raises(ValueError):
        Hierarchy.make(2, (0, 2, 1))  # no root at all
    with pytest.raises(ValueError):
        Hierarchy.make(0, (0,))


def test_hierarchy_from_parent_map():
    h = Hierarchy.from_parent_map({2: 1, 3: 1, 4: 2})
    assert h.n == 4
    assert h.parent == (0, 0, 1, 1, 2)
    assert Hierarchy.from_parent_map({1: 0}).n == 1


def test_traverse_examples():
    assert traverse_df(Hierarchy.from_parent_map({1: 0})).seq == (1,)
    assert traverse_bf(Hierarchy.from_parent_map({1: 0})).seq == (1,)
    h = Hierarchy.from_parent_map({2: 1, 3: 1, 4: 2})
    assert traverse_df(h).seq == (1, 2, 4, 3)
    assert traverse_bf(h).seq == (1, 2, 3, 4)
    chain = Hierarchy.from_parent_map({2: 1, 3: 2})
    assert traverse_df(chain).seq == (1, 2, 3)
    assert traverse_bf(chain).seq == (1, 2, 3)


def test_traverse_children_ascending():
    # root 2 with children 1 and 3: label order decides the visit order
    h = Hierarchy.make(3, (0, 2, 0, 2))
    assert traverse_df(h).seq == (2, 1, 3)
    assert traverse_bf(h).seq == (2, 1, 3)


def test_traversals_are_permutations_sharing_the_root():
    for n in range(1, 6):
        for h in oracle.all_rooted_hierarchies(n):
            df = traverse_df(h)
            bf = traverse_bf(h)
            assert sorted(df.seq) == list(range(1, n + 1))
            assert sorted(bf.seq) == list(range(1, n + 1))
            assert df.seq[0] == bf.seq[0] == h.root


def test_ordering_validation_and_positions():
    o = Ordering.make([2, 3, 1])
    assert o.positions() == (-1, 2, 0, 1)
    for v in (1, 2, 3):
        assert o.seq[o.positions()[v]] == v
    with pytest.raises(ValueError):
        Ordering.make([1, 1])
    with pytest.raises(ValueError):
        Ordering.make([1, 3])
    with pytest.raises(ValueError):
        Ordering.make([0, 1])


def test_types_are_immutable():
    h = Hierarchy.from_parent_map({2: 1})
    with pytest.raises(AttributeError):
        h.n = 5
    o = Ordering.make([1, 2])
    with pytest.raises(AttributeError):
        o.seq = (2, 1)
