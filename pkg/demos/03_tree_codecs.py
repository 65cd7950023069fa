#!/usr/bin/env python3
"""Rooted-tree codecs: the classic sequence and its two-row generalization.

A rooted tree on S + {0} is encoded by repeatedly deleting the largest leaf
and recording its parent.  Multi-noded trees (each vertex carries f_i ordered
nodes, each edge selects a node of its parent) get a second row recording the
selected node, and the matrix alphabet immediately gives the counting formula
(sum f)^(n-1) * f_0.
"""

import itertools

from cyclefactor import (
    RootedTree,
    enumerate_mnr,
    mnr_cardinality,
    mnr_decode,
    mnr_encode,
    prufer_decode,
    prufer_encode,
)

t = RootedTree((1, 2, 3, 4, 5), ((1, 0), (2, 1), (3, 1), (4, 0), (5, 4)))
seq = prufer_encode(t)
print(f"tree parents {t.parents}")
print(f"  sequence: {seq}")
print(f"  decode round-trip: {prufer_decode(seq, t.svertices) == t}")

print()
n = 3
svertices = tuple(range(11, 11 + n))
count = sum(1 for _ in (prufer_decode(p + (0,), svertices)
                        for p in itertools.product(svertices + (0,), repeat=n - 1)))
print(f"trees on {n} + root vertices: {count} = (n+1)^(n-1) = {(n + 1) ** (n - 1)}")

print()
print("multi-noded families (vertex data -> count):")
for vd in [(1, 1, 1), (1, 1, 2), (1, 2, 2), (2, 1, 3), (1, 1, 1, 1)]:
    svertices = tuple(range(21, 21 + len(vd) - 1))
    items = list(enumerate_mnr(svertices, vd))
    assert len(items) == mnr_cardinality(vd)
    print(f"  {vd}: {len(items)}")
    for m in items:
        h = mnr_encode(m)
        assert mnr_decode(h, svertices, vd) == m

print()
print("a two-row code and the tree it opens to:")
vd = (1, 2, 1, 3)
svertices = (21, 22, 23)
m = next(iter(enumerate_mnr(svertices, vd)))
h = mnr_encode(m)
print(f"  top {list(h.top)} / bottom {list(h.bottom)}")
print(f"  parents {m.tree.parents}, node choices {m.beta}")
