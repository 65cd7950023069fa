"""Rooted trees, multi-noded rooted trees, and their Prufer-style codecs.

A multi-noded rooted tree is a rooted tree on S + {0} together with an edge
function beta that picks, for every edge, one of the f_i ordered nodes of the
edge's parent vertex.  The classic Prufer sequence extends to a 2xn matrix
codec for these objects, which is the enumeration backbone of this package.

Nodes inside a multi-noded vertex are addressed as (vertex, position) with
positions 1..f_i running left to right.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field


class TrivialTreeError(ValueError):
    """Raised when a codec is applied to the single-vertex tree."""


@dataclass(frozen=True)
class RootedTree:
    """A tree on S + {0} rooted at 0, stored as a child -> parent map.

    ``parents`` holds one (child, parent) pair per non-root vertex, sorted by
    child.
    """

    svertices: tuple[int, ...]
    parents: tuple[tuple[int, int], ...]
    _pmap: dict = field(init=False, repr=False, compare=False, default=None)

    def __post_init__(self) -> None:
        svertices = tuple(self.svertices)
        object.__setattr__(self, "svertices", svertices)
        if 0 in svertices:
            raise ValueError("0 is reserved for the root")
        if any(a >= b for a, b in zip(svertices, svertices[1:])):
            raise ValueError("vertex set must be strictly increasing")
        parents = tuple(sorted((int(c), int(p)) for c, p in self.parents))
        object.__setattr__(self, "parents", parents)
        sset = set(svertices)
        if [c for c, _ in parents] != sorted(sset):
            raise ValueError("parent map must cover every non-root vertex once")
        pmap = dict(parents)
        object.__setattr__(self, "_pmap", pmap)
        for c, p in parents:
            if p != 0 and p not in sset:
                raise ValueError(f"unknown parent {p}")
            # walk to the root; a revisit means a cycle
            seen = {c}
            while p != 0:
                if p in seen:
                    raise ValueError(f"cycle through {p}")
                seen.add(p)
                p = pmap[p]

    @property
    def n(self) -> int:
        return len(self.svertices)

    def parent_of(self, v: int) -> int:
        return self._pmap[v]

    def children_of(self) -> dict[int, list[int]]:
        children: dict[int, list[int]] = {0: []}
        for s in self.svertices:
            children[s] = []
        for c, p in self.parents:
            children[p].append(c)
        return children


def _deletion_steps(tree: RootedTree) -> list[tuple[int, int]]:
    """(leaf, parent) pairs in largest-leaf deletion order; the root stays."""
    if tree.n == 0:
        raise TrivialTreeError("the trivial tree has no codec")
    pmap = dict(tree.parents)
    child_count: dict[int, int] = {0: 0}
    for s in tree.svertices:
        child_count.setdefault(s, 0)
    for _, p in tree.parents:
        child_count[p] = child_count.get(p, 0) + 1
    leaves = {s for s in tree.svertices if child_count[s] == 0}
    steps = []
    for _ in range(tree.n):
        v = max(leaves)
        leaves.remove(v)
        w = pmap[v]
        steps.append((v, w))
        child_count[w] -= 1
        if w != 0 and child_count[w] == 0:
            leaves.add(w)
    return steps


def prufer_encode(tree: RootedTree) -> tuple[int, ...]:
    """The Prufer sequence of a rooted tree: parents of deleted largest leaves.

    The sequence has length |S| and always ends in the root 0.
    """
    return tuple(w for _, w in _deletion_steps(tree))


def _decode_steps(seq, svertices) -> list[tuple[int, int]]:
    seq = tuple(seq)
    svertices = tuple(sorted(svertices))
    n = len(svertices)
    if n == 0:
        raise TrivialTreeError("the trivial tree has no codec")
    if len(seq) != n:
        raise ValueError(f"sequence length {len(seq)} != |S| = {n}")
    if seq[-1] != 0:
        raise ValueError("sequence must end in the root 0")
    allowed = set(svertices) | {0}
    if any(w not in allowed for w in seq):
        raise ValueError("sequence entries must lie in S + {0}")
    remaining = {}
    for w in seq:
        remaining[w] = remaining.get(w, 0) + 1
    alive = set(svertices)
    steps = []
    for w in seq:
        v = max(x for x in alive if not remaining.get(x))
        steps.append((v, w))
        alive.remove(v)
        remaining[w] -= 1
    return steps


def prufer_decode(seq, svertices) -> RootedTree:
    """Invert ``prufer_encode``; the sequence must end in 0 and have length |S|."""
    steps = _decode_steps(seq, svertices)
    return RootedTree(tuple(sorted(svertices)), tuple((v, w) for v, w in steps))


@dataclass(frozen=True)
class MultiNodedRootedTree:
    """A rooted tree plus vertex data and a node-selecting edge function.

    ``vertex_data[0]`` is the node count of the root; ``vertex_data[i]`` that
    of the i-th smallest S-vertex.  ``beta`` stores one (child, b) pair per
    edge, keyed by the child end; b selects a node of the parent end.
    """

    tree: RootedTree
    vertex_data: tuple[int, ...]
    beta: tuple[tuple[int, int], ...]
    _fmap: dict = field(init=False, repr=False, compare=False, default=None)
    _bmap: dict = field(init=False, repr=False, compare=False, default=None)

    def __post_init__(self) -> None:
        vertex_data = tuple(self.vertex_data)
        object.__setattr__(self, "vertex_data", vertex_data)
        if len(vertex_data) != self.tree.n + 1:
            raise ValueError("vertex data must list the root and every S-vertex")
        if any(f < 1 for f in vertex_data):
            raise ValueError("node counts must be positive")
        beta = tuple(sorted((int(c), int(b)) for c, b in self.beta))
        object.__setattr__(self, "beta", beta)
        if [c for c, _ in beta] != list(self.tree.svertices):
            raise ValueError("beta must be defined on exactly the edges")
        object.__setattr__(self, "_fmap", dict(zip((0,) + self.tree.svertices, vertex_data)))
        object.__setattr__(self, "_bmap", dict(beta))
        for c, b in beta:
            cap = self.f_of(self.tree.parent_of(c))
            if not 1 <= b <= cap:
                raise ValueError(f"beta({c}) = {b} exceeds the parent's {cap} nodes")

    def f_of(self, vertex: int) -> int:
        return self._fmap[vertex]

    def beta_of(self, child: int) -> int:
        return self._bmap[child]

    @property
    def total_nodes(self) -> int:
        return sum(self.vertex_data)

    def nodes(self) -> list[tuple[int, int]]:
        """All (vertex, position) node addresses, root first."""
        verts = (0,) + self.tree.svertices
        return [(v, p) for v, f in zip(verts, self.vertex_data) for p in range(1, f + 1)]


@dataclass(frozen=True)
class LabeledMNR:
    """A multi-noded rooted tree whose nodes are bijectively labeled by [d]."""

    mnr: MultiNodedRootedTree
    labels: tuple[tuple[tuple[int, int], int], ...]
    _lmap: dict = field(init=False, repr=False, compare=False, default=None)

    def __post_init__(self) -> None:
        labels = tuple(sorted(((int(v), int(p)), int(x)) for (v, p), x in self.labels))
        object.__setattr__(self, "labels", labels)
        object.__setattr__(self, "_lmap", dict(labels))
        d = self.mnr.total_nodes
        if [node for node, _ in labels] != sorted(self.mnr.nodes()):
            raise ValueError("labels must cover every node exactly once")
        if sorted(x for _, x in labels) != list(range(1, d + 1)):
            raise ValueError(f"labels must be a bijection onto [1, {d}]")

    def label_of(self, node: tuple[int, int]) -> int:
        return self._lmap[node]


@dataclass(frozen=True)
class PruferMatrix:
    """The 2xn codec image of a multi-noded rooted tree: parents over beta values."""

    top: tuple[int, ...]
    bottom: tuple[int, ...]

    def __post_init__(self) -> None:
        top = tuple(self.top)
        bottom = tuple(self.bottom)
        object.__setattr__(self, "top", top)
        object.__setattr__(self, "bottom", bottom)
        if len(top) != len(bottom) or not top:
            raise ValueError("matrix rows must be nonempty and of equal length")
        if top[-1] != 0:
            raise ValueError("last top entry must be the root 0")
        if any(b < 1 for b in bottom):
            raise ValueError("bottom entries must be positive")


def mnr_encode(m: MultiNodedRootedTree) -> PruferMatrix:
    """Encode: Prufer sequence on top, beta of each deleted edge below."""
    steps = _deletion_steps(m.tree)
    return PruferMatrix(
        top=tuple(w for _, w in steps),
        bottom=tuple(m.beta_of(v) for v, _ in steps),
    )


def mnr_decode(h: PruferMatrix, svertices, vertex_data) -> MultiNodedRootedTree:
    """Invert ``mnr_encode`` for the given S and vertex data."""
    svertices = tuple(sorted(svertices))
    vertex_data = tuple(vertex_data)
    if len(vertex_data) != len(svertices) + 1:
        raise ValueError("vertex data must list the root and every S-vertex")
    f_of = dict(zip((0,) + svertices, vertex_data))
    steps = _decode_steps(h.top, svertices)
    for (v, w), b in zip(steps, h.bottom):
        if not 1 <= b <= f_of[w]:
            raise ValueError(f"bottom entry {b} exceeds the {f_of[w]} nodes of vertex {w}")
    tree = RootedTree(svertices, tuple((v, w) for v, w in steps))
    beta = tuple((v, b) for (v, _), b in zip(steps, h.bottom))
    return MultiNodedRootedTree(tree, vertex_data, beta)


def mnr_cardinality(vertex_data) -> int:
    """(sum of node counts)^(n-1) * f_0 for n >= 1 S-vertices."""
    vertex_data = tuple(vertex_data)
    n = len(vertex_data) - 1
    if n < 1:
        raise ValueError("need at least one non-root vertex")
    if any(f < 1 for f in vertex_data):
        raise ValueError("node counts must be positive")
    return sum(vertex_data) ** (n - 1) * vertex_data[0]


def enumerate_mnr(svertices, vertex_data):
    """Every multi-noded rooted tree for the given S and vertex data, once each.

    Streams in lexicographic order of the codec matrix columns, a column
    being the pair (parent entry, beta entry).
    """
    svertices = tuple(sorted(svertices))
    vertex_data = tuple(vertex_data)
    n = len(svertices)
    if len(vertex_data) != n + 1:
        raise ValueError("vertex data must list the root and every S-vertex")
    if n < 1:
        raise ValueError("need at least one non-root vertex")
    alphabet = sorted(
        (w, b)
        for w, f in zip((0,) + svertices, vertex_data)
        for b in range(1, f + 1)
    )
    last = [(0, b) for b in range(1, vertex_data[0] + 1)]
    for prefix in itertools.product(alphabet, repeat=n - 1):
        for end in last:
            cols = prefix + (end,)
            h = PruferMatrix(tuple(w for w, _ in cols), tuple(b for _, b in cols))
            yield mnr_decode(h, svertices, vertex_data)


def tree_to_json(tree: RootedTree) -> dict:
    return {
        "S": list(tree.svertices),
        "edges": [[p, c] for c, p in tree.parents],
    }


def tree_from_json(data: dict) -> RootedTree:
    svertices = tuple(sorted(data["S"]))
    parents = tuple((c, p) for p, c in data["edges"])
    return RootedTree(svertices, parents)


def mnr_to_json(m: MultiNodedRootedTree) -> dict:
    edges = sorted(((m.tree.parent_of(c), c) for c in m.tree.svertices))
    return {
        "S": list(m.tree.svertices),
        "vertex_data": list(m.vertex_data),
        "edges": [{"parent": p, "child": c, "beta": m.beta_of(c)} for p, c in edges],
    }


def mnr_from_json(data: dict) -> MultiNodedRootedTree:
    svertices = tuple(sorted(data["S"]))
    parents = tuple((e["child"], e["parent"]) for e in data["edges"])
    beta = tuple((e["child"], e["beta"]) for e in data["edges"])
    tree = RootedTree(svertices, parents)
    return MultiNodedRootedTree(tree, tuple(data["vertex_data"]), beta)


def labeled_mnr_to_json(lm: LabeledMNR) -> dict:
    data = mnr_to_json(lm.mnr)
    data["labels"] = {f"({v},{p})": x for (v, p), x in lm.labels}
    return data


def labeled_mnr_from_json(data: dict) -> LabeledMNR:
    m = mnr_from_json(data)
    labels = []
    for key, x in data["labels"].items():
        v, p = key.strip("()").split(",")
        labels.append(((int(v), int(p)), int(x)))
    return LabeledMNR(m, tuple(labels))


def matrix_to_json(h: PruferMatrix, svertices, vertex_data) -> dict:
    return {
        "S": list(svertices),
        "vertex_data": list(vertex_data),
        "top": list(h.top),
        "bottom": list(h.bottom),
    }


def matrix_from_json(data: dict) -> tuple[PruferMatrix, tuple[int, ...], tuple[int, ...]]:
    h = PruferMatrix(tuple(data["top"]), tuple(data["bottom"]))
    return h, tuple(data["S"]), tuple(data["vertex_data"])


def mnr_to_dot(m: MultiNodedRootedTree, labels: dict | None = None) -> str:
    """DOT text for the multi-noded representation: ported boxes, top down.

    ``labels`` optionally maps (vertex, position) to a node label to display
    inside the ports.
    """
    lines = ["graph mnr {", "  rankdir=TB;", '  node [shape=record];']
    verts = (0,) + m.tree.svertices
    for v, f in zip(verts, m.vertex_data):
        cells = []
        for p in range(1, f + 1):
            text = str(labels[(v, p)]) if labels else ""
            cells.append(f"<p{p}> {text}")
        name = "root" if v == 0 else f"s{v}"
        lines.append(f'  {name} [label="{{{name}|{{{"|".join(cells)}}}}}"];')
    for c in m.tree.svertices:
        parent = m.tree.parent_of(c)
        pname = "root" if parent == 0 else f"s{parent}"
        lines.append(f"  {pname}:p{m.beta_of(c)} -- s{c};")
    lines.append("}")
    return "\n".join(lines) + "\n"
