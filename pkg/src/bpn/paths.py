"""Disjoint-path primitives over subgraph views, via unit-capacity flow.

Vertices are split into entry/exit nodes so one unit of flow occupies one
vertex; internally disjoint path families, fans and fully disjoint
set-to-set path systems all reduce to integral max flow.  Arcs are laid
down in canonical id order and BFS is FIFO, so results are deterministic.
"""

from __future__ import annotations

from collections import deque
from typing import Iterable, Sequence

from .graph import SubgraphView
from .trees import Tree

__all__ = [
    "Infeasible",
    "PathFamily",
    "disjoint_paths",
    "fan",
    "set_to_set_paths",
    "min_vertex_cut",
    "terminal_tree",
]

_S = -1
_T = -2


class Infeasible(Exception):
    """The requested family does not exist; carries the best achievable count."""

    def __init__(self, message: str, achievable: int = 0):
        super().__init__(message)
        self.achievable = achievable


class PathFamily:
    """An ordered family of vertex paths plus the disjointness kind."""

    def __init__(self, kind: str, paths: Sequence[Sequence[int]]):
        self.kind = kind
        self.paths = tuple(tuple(p) for p in paths)

    def __len__(self) -> int:
        return len(self.paths)

    def __iter__(self):
        return iter(self.paths)

    def by_terminal(self) -> dict[int, tuple[int, ...]]:
        return {p[-1]: p for p in self.paths}


class _Net:
    """Residual network with integer capacities."""

    def __init__(self) -> None:
        self.cap: dict[int, dict[int, int]] = {_S: {}, _T: {}}
        self.init: dict[tuple[int, int], int] = {}

    def add(self, u: int, v: int, c: int) -> None:
        row = self.cap.setdefault(u, {})
        self.cap.setdefault(v, {})
        row[v] = row.get(v, 0) + c
        self.init[(u, v)] = self.init.get((u, v), 0) + c

    def augment(self) -> bool:
        prev: dict[int, int] = {_S: _S}
        q = deque([_S])
        while q:
            u = q.popleft()
            if u == _T:
                break
            for v, c in self.cap[u].items():
                if c > 0 and v not in prev:
                    prev[v] = u
                    q.append(v)
        if _T not in prev:
            return False
        v = _T
        while v != _S:
            u = prev[v]
            self.cap[u][v] -= 1
            row = self.cap[v]
            row[u] = row.get(u, 0) + 1
            v = u
        return True

    def send(self, want: int | None) -> int:
        sent = 0
        while (want is None or sent < want) and self.augment():
            sent += 1
        return sent

    def used(self) -> dict[int, dict[int, int]]:
        """Net consumed units per original arc: init minus residual, floored
        at zero (reverse pushes can leave the residual above the original)."""
        out: dict[int, dict[int, int]] = {}
        for (u, v), c0 in self.init.items():
            consumed = c0 - self.cap[u].get(v, 0)
            if consumed > 0:
                out.setdefault(u, {})[v] = consumed
        return out


def _ein(v: int) -> int:
    return 2 * v


def _eout(v: int) -> int:
    return 2 * v + 1


def _trace_paths(net: _Net, count: int) -> list[list[int]]:
    """Decompose the consumed arcs into `count` source-to-sink vertex paths."""
    used = net.used()

    def take(u: int) -> int | None:
        row = used.get(u)
        if not row:
            return None
        for v in row:
            row[v] -= 1
            if row[v] == 0:
                del row[v]
            return v
        return None

    paths: list[list[int]] = []
    for _ in range(count):
        path: list[int] = []
        u = _S
        while u != _T:
            v = take(u)
            if v is None:
                raise AssertionError("flow decomposition stalled")
            if v == _T:
                if u != _S:  # arcs into the sink leave from entry nodes
                    vid = u // 2
                    if not path or path[-1] != vid:
                        path.append(vid)
            elif v % 2 == 1:  # arrived at an exit node: vertex occupied
                vid = v // 2
                if not path or path[-1] != vid:
                    path.append(vid)
            u = v
        paths.append(path)
    return paths


def _build(
    view: SubgraphView,
    *,
    source_exits: dict[int, int] | None = None,
    source_entries: dict[int, int] | None = None,
    sink_entries: dict[int, int] | None = None,
    no_through: Iterable[int] = (),
    no_entry: Iterable[int] = (),
) -> _Net:
    """Split-vertex residual network over the view.

    source_exits: vertex -> capacity wired S -> exit(v) (path start occupies v).
    source_entries: vertex -> capacity wired S -> entry(v).
    sink_entries: vertex -> capacity wired entry(v) -> T.
    no_through: vertices with no exit arcs (flow entering must stop there).
    no_entry: vertices that cannot be entered from neighbours.
    """
    net = _Net()
    source_exits = source_exits or {}
    source_entries = source_entries or {}
    sink_entries = sink_entries or {}
    stop = set(no_through)
    sealed = set(no_entry)
    members = list(view.vertices())
    inside = set(members)
    for v in members:
        if v in source_exits:
            continue  # path starts occupy the vertex via the source arc
        net.add(_ein(v), _eout(v), 1)
    for v in members:
        if v in stop:
            continue
        for w in view.neighbours(v):
            if w in inside and w not in sealed:
                net.add(_eout(v), _ein(w), 1)
    for v, c in source_exits.items():
        net.add(_S, _eout(v), c)
    for v, c in source_entries.items():
        net.add(_S, _ein(v), c)
    for v, c in sink_entries.items():
        net.add(_ein(v), _T, c)
    return net


def _finish(path: list[int], sink: int) -> list[int]:
    if not path or path[-1] != sink:
        path.append(sink)
    return path


def disjoint_paths(h: SubgraphView, x: int, y: int, k: int) -> PathFamily:
    """k internally disjoint x-y paths inside the view."""
    if x == y:
        raise ValueError("endpoints must differ")
    if not (h.contains(x) and h.contains(y)):
        raise ValueError("endpoints must lie in the view")
    net = _build(
        h,
        source_exits={x: k},
        sink_entries={y: k},
        no_through=[y],
        no_entry=[x],
    )
    sent = net.send(k)
    if sent < k:
        raise Infeasible(f"only {sent} of {k} disjoint paths between {x} and {y}", sent)
    return PathFamily("pair", _trace_paths(net, k))


def fan(h: SubgraphView, x: int, targets: Iterable[int], k: int | None = None) -> PathFamily:
    """Internally disjoint paths from x to k distinct targets; targets never
    appear as interior vertices."""
    tset = sorted(set(targets))
    if x in tset:
        raise ValueError("fan origin may not be a target")
    if k is None:
        k = len(tset)
    if k > len(tset):
        raise Infeasible(f"only {len(tset)} targets for a {k}-fan", 0)
    if not h.contains(x) or not all(h.contains(t) for t in tset):
        raise Infeasible("origin or target outside the view", 0)
    net = _build(
        h,
        source_exits={x: k},
        sink_entries={t: 1 for t in tset},
        no_through=tset,
        no_entry=[x],
    )
    sent = net.send(k)
    if sent < k:
        raise Infeasible(f"only a {sent}-fan exists from {x}", sent)
    return PathFamily("fan", _trace_paths(net, k))


def set_to_set_paths(h: SubgraphView, xs: Iterable[int], ys: Iterable[int], k: int) -> PathFamily:
    """k fully vertex-disjoint paths, each from a vertex of xs to one of ys;
    no path meets xs or ys internally."""
    xs = sorted(set(xs))
    ys = sorted(set(ys))
    if k > min(len(xs), len(ys)):
        raise Infeasible("fewer endpoints than requested paths", 0)
    yset = set(ys)
    net = _build(
        h,
        source_entries={v: 1 for v in xs},
        sink_entries={v: 1 for v in yset},
        no_through=ys,
        no_entry=xs,
    )
    sent = net.send(k)
    if sent < k:
        raise Infeasible(f"only {sent} of {k} disjoint set-to-set paths", sent)
    return PathFamily("set", _trace_paths(net, k))


def min_vertex_cut(h: SubgraphView, x: int, y: int) -> int:
    """Maximum number of internally disjoint x-y paths (the minimum vertex
    cut when x and y are non-adjacent)."""
    if x == y:
        raise ValueError("endpoints must differ")
    deg = min(len(h.neighbours(x)), len(h.neighbours(y)))
    net = _build(
        h,
        source_exits={x: deg},
        sink_entries={y: deg},
        no_through=[y],
        no_entry=[x],
    )
    return net.send(None)


def terminal_tree(h: SubgraphView, terminals: Iterable[int]) -> Tree:
    """A tree inside the view containing every terminal.

    Terminals attach in canonical order, each by a shortest path from the
    partial tree.  Not a minimum Steiner tree; connectedness is all the
    callers need.
    """
    terms = sorted(set(terminals))
    if not terms:
        raise ValueError("need at least one terminal")
    for t in terms:
        if not h.contains(t):
            raise Infeasible(f"terminal {t} outside the view", 0)
    in_tree = {terms[0]}
    edges: set[tuple[int, int]] = set()
    for t in terms[1:]:
        if t in in_tree:
            continue
        prev: dict[int, int] = {t: t}
        q = deque([t])
        hit = None
        while q:
            u = q.popleft()
            if u in in_tree:
                hit = u
                break
            for v in h.neighbours(u):
                if v not in prev:
                    prev[v] = u
                    q.append(v)
        if hit is None:
            raise Infeasible(f"terminal {t} disconnected from the rest", 0)
        cur = hit
        while prev[cur] != cur:
            nxt = prev[cur]
            edges.add((cur, nxt) if cur < nxt else (nxt, cur))
            in_tree.add(cur)
            cur = nxt
        in_tree.add(cur)
    return Tree(frozenset(in_tree), frozenset(edges))
