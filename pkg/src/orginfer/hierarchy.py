"""Rebuild a hierarchy from its depth-first and breadth-first orderings.

Both traversals start at the root and expand children in ascending label
order, so the first DF element after a vertex v is v's smallest child
(when v has children at all), a vertex's children occupy one contiguous
run of the BF sequence, and every subtree covers one contiguous DF
interval.  The construction walks the BF sequence greedily: starting
from the forced first child, it extends a vertex's child run while the
candidates keep ascending labels, ascending DF positions, stay inside
the parent's DF interval, and are still unclaimed; DF intervals are then
subdivided between consecutive children.  When several trees fit the
orderings the greedy picks one of them, which is all the contract asks.

Construction alone cannot certify the input, so the result is accepted
only after a full round-trip: the candidate's own traversals must
reproduce the inputs exactly, otherwise the orderings are inconsistent.
For large inputs that round-trip check is replaced by an equivalent
vectorized verification (same accept/reject decision, no Python-level
tree walk):

* every non-root vertex sits after its parent in DF;
* concatenating child groups in BF order reproduces bf[1:];
* a first child sits right after its parent in DF, and each later child
  right after the preceding sibling's whole subtree.

Runtime is linear in n apart from the sort-free CSR grouping; an
explicit work stack keeps deep chains off the Python call stack.
"""

from __future__ import annotations

from array import array
from dataclasses import dataclass

import numpy as np

from .model import (
    INCONSISTENT,
    Hierarchy,
    Inconsistent,
    Ordering,
    _children_csr,
    traverse_bf,
    traverse_df,
)

# below this size the plain traversal round-trip beats numpy call overhead
_VECTOR_MIN = 2048


@dataclass(frozen=True, slots=True)
class TraversalPair:
    """A DF (preorder) and BF (level-order) ordering of the same tree."""

    df: Ordering
    bf: Ordering

    @classmethod
    def make(cls, df, bf) -> "TraversalPair":
        df = df if isinstance(df, Ordering) else Ordering.make(df)
        bf = bf if isinstance(bf, Ordering) else Ordering.make(bf)
        if len(df) != len(bf):
            raise ValueError(f"orderings disagree on size: {len(df)} vs {len(bf)}")
        if len(df) == 0:
            raise ValueError("orderings must cover at least one vertex")
        if df.seq[0] != bf.seq[0]:
            raise ValueError(f"orderings disagree on the root: {df.seq[0]} vs {bf.seq[0]}")
        return cls(df, bf)

    @property
    def n(self) -> int:
        return len(self.df)


def _attach(df: array, bf: array, df_pos: array, bf_pos: array, n: int) -> array | None:
    """Greedy parent assignment; returns the parent array or None on a
    dead end (the forced first child of some vertex is already taken)."""
    parent = array("i", bytes(4 * (n + 1)))
    root = df[0]
    stack_v = [root]
    stack_hi = [n - 1]
    pop_v = stack_v.pop
    pop_hi = stack_hi.pop
    push_v = stack_v.append
    push_hi = stack_hi.append
    while stack_v:
        v = pop_v()
        hi = pop_hi()
        lo = df_pos[v]
        if lo >= hi:
            continue
        first = df[lo + 1]
        if parent[first]:
            return None
        parent[first] = v
        prev = first
        pd_prev = lo + 1
        j = bf_pos[first] + 1
        while j < n:
            w = bf[j]
            pd = df_pos[w]
            if w > prev and pd_prev < pd <= hi and parent[w] == 0:
                parent[w] = v
                push_v(prev)  # prev's subtree ends right before w's DF position
                push_hi(pd - 1)
                prev = w
                pd_prev = pd
                j += 1
            else:
                break
        push_v(prev)
        push_hi(hi)
    return parent


def _roundtrip_small(n: int, parent, df_seq, bf_seq) -> bool:
    """Plain traversal round-trip; tolerates parent arrays that are not
    single trees (unreached vertices simply fail the comparison)."""
    root = df_seq[0]
    if parent[root] != 0:
        return False
    off, kid = _children_csr(n, parent)
    out = [0] * n
    stack = [root]
    i = 0
    while stack:
        v = stack.pop()
        out[i] = v
        i += 1
        a, b = off[v], off[v + 1]
        if a != b:
            stack.extend(kid[a:b][::-1])
        if i + len(stack) > n:
            return False
    if i < n or tuple(out) != tuple(df_seq):
        return False
    out[0] = root
    qi = 0
    qn = 1
    while qi < qn:
        v = out[qi]
        qi += 1
        a, b = off[v], off[v + 1]
        if a != b:
            out[qn:qn + b - a] = kid[a:b]
            qn += b - a
    return qn == n and tuple(out) == tuple(bf_seq)


def _roundtrip_vector(n: int, par_np, df_np, bf_np) -> bool:
    """Vectorized equivalent of the traversal round-trip (see module doc)."""
    pos_np = np.zeros(n + 1, dtype=np.int64)
    pos_np[df_np] = np.arange(n, dtype=np.int64)
    if par_np[df_np[0]] != 0:
        return False
    cnt = np.bincount(par_np[1:], minlength=n + 1)
    if cnt[0] != 1:
        return False

    verts = np.arange(1, n + 1, dtype=np.int64)
    parents = par_np[1:]
    nonroot = parents > 0
    if not (pos_np[parents[nonroot]] < pos_np[verts[nonroot]]).all():
        return False

    order = np.argsort(parents, kind="stable").astype(np.int64)
    kid = order + 1  # grouped by parent, ascending labels inside each group
    off = np.empty(n + 2, dtype=np.int64)
    off[0] = 0
    np.cumsum(cnt, out=off[1:])

    if n > 1:
        starts = off[bf_np]
        lens = cnt[bf_np]
        ends = np.cumsum(lens)
        idx = np.arange(n - 1, dtype=np.int64) - np.repeat(ends - lens, lens) + np.repeat(starts, lens)
        if not (kid[idx] == bf_np[1:]).all():
            return False

    # subtree sizes; safe because parents precede children in DF (checked)
    size = array("i", [1]) * (n + 1)
    parent = array("i")
    parent.frombytes(par_np.astype(np.int32).tobytes())
    df_a = array("i")
    df_a.frombytes(df_np.astype(np.int32).tobytes())
    for i in range(n - 1, 0, -1):
        v = df_a[i]
        size[parent[v]] += size[v]
    size_np = np.frombuffer(size, dtype=np.int32)

    if n > 1:
        pk = np.repeat(np.arange(n + 1, dtype=np.int64), cnt)
        slots = np.arange(n, dtype=np.int64)
        is_head = slots == off[pk]
        heads = is_head & (pk != 0)
        if not (pos_np[kid[heads]] == pos_np[pk[heads]] + 1).all():
            return False
        rest = np.nonzero(~is_head)[0]
        prevs = kid[rest - 1]
        if not (pos_np[kid[rest]] == pos_np[prevs] + size_np[prevs]).all():
            return False
    return True


def reconstruct(pair: TraversalPair) -> Hierarchy | Inconsistent:
    """A hierarchy whose DF and BF traversals equal the given orderings.

    Returns INCONSISTENT when no tree fits.  When several trees fit, one
    of them is returned (deterministically).
    """
    df_seq = pair.df.seq
    bf_seq = pair.bf.seq
    n = len(df_seq)
    if n >= _VECTOR_MIN:
        df_np = np.asarray(df_seq, dtype=np.int32)
        bf_np = np.asarray(bf_seq, dtype=np.int32)
        pos32 = np.zeros(n + 1, dtype=np.int32)
        pos32[df_np] = np.arange(n, dtype=np.int32)
        bf_pos32 = np.zeros(n + 1, dtype=np.int32)
        bf_pos32[bf_np] = np.arange(n, dtype=np.int32)
        df_a = array("i")
        df_a.frombytes(df_np.tobytes())
        bf_a = array("i")
        bf_a.frombytes(bf_np.tobytes())
        df_pos = array("i")
        df_pos.frombytes(pos32.tobytes())
        bf_pos = array("i")
        bf_pos.frombytes(bf_pos32.tobytes())
        parent = _attach(df_a, bf_a, df_pos, bf_pos, n)
        if parent is None:
            return INCONSISTENT
        par_np = np.frombuffer(parent, dtype=np.int32).astype(np.int64)
        if not _roundtrip_vector(n, par_np, df_np.astype(np.int64), bf_np.astype(np.int64)):
            return INCONSISTENT
        return Hierarchy(n, tuple(parent))

    df_a = array("i", df_seq)
    bf_a = array("i", bf_seq)
    df_pos = array("i", bytes(4 * (n + 1)))
    bf_pos = array("i", bytes(4 * (n + 1)))
    for i in range(n):
        df_pos[df_a[i]] = i
        bf_pos[bf_a[i]] = i
    parent = _attach(df_a, bf_a, df_pos, bf_pos, n)
    if parent is None or not _roundtrip_small(n, parent, df_seq, bf_seq):
        return INCONSISTENT
    return Hierarchy(n, tuple(parent))


def validate(pair: TraversalPair, h: Hierarchy) -> bool:
    """True when h's own traversals reproduce the pair exactly."""
    if h.n != pair.n:
        raise ValueError(f"size mismatch: hierarchy has {h.n} vertices, orderings {pair.n}")
    n = h.n
    if n >= _VECTOR_MIN:
        return _roundtrip_vector(
            n,
            np.asarray(h.parent, dtype=np.int64),
            np.asarray(pair.df.seq, dtype=np.int64),
            np.asarray(pair.bf.seq, dtype=np.int64),
        )
    return traverse_df(h).seq == pair.df.seq and traverse_bf(h).seq == pair.bf.seq


def random_hierarchy(n, rng=None) -> Hierarchy:
    """A random hierarchy on n vertices, for tests and benchmarks.

    Structure comes from uniform random attachment (vertex i picks an
    earlier vertex as parent), then labels are shuffled uniformly so
    parents are not biased toward small labels.
    """
    if rng is None or isinstance(rng, int):
        rng = np.random.default_rng(rng)
    if n < 1:
        raise ValueError("a hierarchy needs at least one vertex")
    labels = rng.permutation(n) + 1
    parent = np.zeros(n + 1, dtype=np.int64)
    if n > 1:
        slots = np.arange(1, n)
        attach_to = (rng.random(n - 1) * slots).astype(np.int64)
        parent[labels[1:]] = labels[attach_to]
    return Hierarchy(n, tuple(parent.tolist()))
