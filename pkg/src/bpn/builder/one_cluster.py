"""Base case on the 8-cycle and the all-terminals-in-one-cluster recursion."""

from __future__ import annotations

from collections import deque

from .. import perm
from ..graph import BurntPancakeGraph
from ..paths import terminal_tree
from ..trees import Edge, norm_edge
from .context import Ctx, EdgeSet

__all__ = ["build_ring_tree", "build_all_in_one"]


def build_ring_tree(g: BurntPancakeGraph, s: list[int]) -> EdgeSet:
    """The single tree on the 8-cycle: the cycle minus its largest gap
    between consecutive terminals (ties broken at the smallest start)."""
    order = _ring_order(g)
    pos = sorted(order.index(v) for v in set(s))
    m = len(order)
    gaps = []
    for a, b in zip(pos, pos[1:] + [pos[0] + m]):
        gaps.append((b - a, a))
    width, start = max(gaps, key=lambda t: (t[0], -t[1]))
    es: EdgeSet = set()
    at = (start + width) % m
    # walk the covering arc, skipping the widest gap
    steps = m - width
    for _ in range(steps):
        nxt = (at + 1) % m
        es.add(norm_edge(order[at], order[nxt]))
        at = nxt
    return es


def _ring_order(g: BurntPancakeGraph) -> list[int]:
    start = 0
    order = [start]
    prev = -1
    while True:
        nxts = [v for v in g.neighbour_ids(order[-1]) if v != prev]
        nxt = min(nxts)
        if nxt == start:
            break
        prev = order[-1]
        order.append(nxt)
    return order


_SMALL: dict[int, BurntPancakeGraph] = {}


def _small_graph(n: int) -> BurntPancakeGraph:
    if n not in _SMALL:
        _SMALL[n] = BurntPancakeGraph(n)
    return _SMALL[n]


def build_all_in_one(g: BurntPancakeGraph, s: list[int], build_idsts) -> tuple[list[EdgeSet], list[str]]:
    """Recurse into the shared cluster for n-2 trees; the last tree picks the
    four out-neighbours up outside the cluster."""
    c = g.cluster[s[0]]
    n = g.n
    small = _small_graph(n - 1)
    mags = [m for m in range(1, n + 1) if m != abs(c)]
    relabel = {m: i + 1 for i, m in enumerate(mags)}
    unlabel = {i + 1: m for i, m in enumerate(mags)}

    def shrink(vid: int) -> int:
        p = g.verts[vid]
        return small.index[
            tuple(relabel[abs(x)] * (1 if x > 0 else -1) for x in p[:-1])
        ]

    def grow(svid: int) -> int:
        p = small.verts[svid]
        return g.index[
            tuple(unlabel[abs(x)] * (1 if x > 0 else -1) for x in p) + (c,)
        ]

    inner = build_idsts(small, [shrink(v) for v in s])
    tree_sets: list[EdgeSet] = []
    for t in inner.trees:
        es: EdgeSet = set()
        for u, v in t.edges:
            es.add(norm_edge(grow(u), grow(v)))
        if not t.edges:  # single-vertex inner tree cannot happen for |s|=4
            raise AssertionError("degenerate inner tree")
        tree_sets.append(es)

    outside = [cl for cl in g.cluster_ids() if cl != c]
    hats = [g.out[v] for v in s]
    ttree = terminal_tree(g.cluster_view(*outside), hats)
    es = set(ttree.edges)
    for v, h in zip(s, hats):
        es.add(norm_edge(v, h))
    tree_sets.append(es)
    trace = [f"one-cluster/recurse-n{n - 1}"] + list(inner.case_trace) + ["one-cluster/outer-tree"]
    return tree_sets, trace
