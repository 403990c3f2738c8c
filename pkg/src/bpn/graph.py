"""The burnt pancake network: adjacency, clusters, cross edges, structure checks."""

from __future__ import annotations

import os
from collections import deque
from dataclasses import dataclass
from typing import Callable, Iterable, Iterator

from . import perm
from .perm import Perm

DEFAULT_N_MAX = 7
MATERIALIZE_MAX = 5

__all__ = [
    "BurntPancakeGraph",
    "SubgraphView",
    "CheckReport",
    "build",
    "vertex_count",
    "edge_count",
]


def vertex_count(n: int) -> int:
    import math

    return (2**n) * math.factorial(n)


def edge_count(n: int) -> int:
    import math

    return n * math.factorial(n) * 2 ** (n - 1)


@dataclass
class CheckReport:
    ok: bool
    checked: int
    failure: str | None = None

    def __bool__(self) -> bool:
        return self.ok


class BurntPancakeGraph:
    """Immutable n-dimensional burnt pancake network over dense vertex ids.

    Vertex ids follow the canonical order of the signed sequences, so runs
    are reproducible.  Adjacency lists are materialized for small n and
    generated on demand above MATERIALIZE_MAX.
    """

    def __init__(self, n: int, n_max: int | None = None):
        if n < 2:
            raise ValueError(f"dimension must be >= 2, got {n}")
        if n_max is None:
            n_max = int(os.environ.get("BPN_MAX_N", DEFAULT_N_MAX))
        if n > n_max:
            raise ValueError(f"n={n} exceeds construction ceiling {n_max}")
        self.n = n
        self.verts: list[Perm] = perm.all_vertices(n)
        self.index: dict[Perm, int] = {v: i for i, v in enumerate(self.verts)}
        self.cluster: list[int] = [v[-1] for v in self.verts]
        self.out: list[int] = [self.index[perm.out_neighbour(v)] for v in self.verts]
        buckets: dict[int, list[int]] = {}
        for vid, c in enumerate(self.cluster):
            buckets.setdefault(c, []).append(vid)
        self._cluster_verts: dict[int, tuple[int, ...]] = {
            c: tuple(ids) for c, ids in buckets.items()
        }
        self._nbrs: list[tuple[int, ...]] | None = None
        if n <= MATERIALIZE_MAX:
            idx = self.index
            self._nbrs = [
                tuple(sorted(idx[y] for y in perm.neighbours(v))) for v in self.verts
            ]

    # -- basic queries ---------------------------------------------------

    @property
    def num_vertices(self) -> int:
        return len(self.verts)

    @property
    def num_edges(self) -> int:
        return self.num_vertices * self.n // 2

    def id_of(self, v: Perm) -> int:
        return self.index[v]

    def vertex(self, vid: int) -> Perm:
        return self.verts[vid]

    def neighbour_ids(self, vid: int) -> tuple[int, ...]:
        if self._nbrs is not None:
            return self._nbrs[vid]
        idx = self.index
        return tuple(sorted(idx[y] for y in perm.neighbours(self.verts[vid])))

    def has_edge(self, u: int, v: int) -> bool:
        return v in self.neighbour_ids(u)

    def edges(self) -> Iterator[tuple[int, int]]:
        for u in range(self.num_vertices):
            for v in self.neighbour_ids(u):
                if u < v:
                    yield (u, v)

    # -- clusters --------------------------------------------------------

    def cluster_ids(self) -> list[int]:
        return sorted(self._cluster_verts, key=perm.symbol_key)

    def cluster_vertices(self, c: int) -> tuple[int, ...]:
        return self._cluster_verts[c]

    def cross_edges(self, i: int, j: int) -> list[tuple[int, int]]:
        """All edges with one endpoint in cluster i and one in cluster j."""
        if i == j:
            raise ValueError("cross_edges needs two distinct clusters")
        out = self.out
        found = []
        for u in self._cluster_verts[i]:
            v = out[u]
            if self.cluster[v] == j:
                found.append((u, v) if u < v else (v, u))
        return sorted(found)

    def subgraph(self, allowed: Iterable[int] | Callable[[int], bool] | None) -> "SubgraphView":
        if allowed is None or callable(allowed):
            if callable(allowed):
                allowed = frozenset(v for v in range(self.num_vertices) if allowed(v))
            return SubgraphView(self, allowed)
        return SubgraphView(self, frozenset(allowed))

    def cluster_view(self, *clusters: int, forbidden: Iterable[int] = ()) -> "SubgraphView":
        ids: set[int] = set()
        for c in clusters:
            ids.update(self._cluster_verts[c])
        ids.difference_update(forbidden)
        return SubgraphView(self, frozenset(ids))

    # -- automorphisms ---------------------------------------------------

    def normalize(self, anchor: Perm | int) -> tuple[Perm, Perm]:
        """Left-translation pair (fwd, inv) with fwd sending ``anchor`` to identity."""
        a = anchor if isinstance(anchor, tuple) else self.verts[anchor]
        fwd = perm.inverse(a)
        return fwd, a

    def apply_auto(self, g_elem: Perm, vid: int) -> int:
        return self.index[perm.left_multiply(g_elem, self.verts[vid])]

    # -- structure checks ------------------------------------------------

    def girth(self) -> int:
        """Length of the shortest cycle, by per-vertex BFS."""
        best = self.num_vertices + 1
        for root in range(self.num_vertices):
            dist = {root: 0}
            parent = {root: -1}
            q = deque([root])
            while q:
                u = q.popleft()
                if 2 * dist[u] + 1 >= best:
                    break
                for v in self.neighbour_ids(u):
                    if v not in dist:
                        dist[v] = dist[u] + 1
                        parent[v] = u
                        q.append(v)
                    elif parent[u] != v and parent[v] != u:
                        # non-tree edge closes a cycle through the root region
                        best = min(best, dist[u] + dist[v] + 1)
        return best

    def check_out_neighbours(self) -> CheckReport:
        """No two vertices of a cluster share an out-neighbour, and the
        out-neighbours of a closed in-cluster neighbourhood hit n distinct
        clusters."""
        checked = 0
        for c, ids in self._cluster_verts.items():
            seen: dict[int, int] = {}
            for u in ids:
                checked += 1
                t = self.out[u]
                if t in seen:
                    return CheckReport(
                        False, checked,
                        f"vertices {self.verts[seen[t]]} and {self.verts[u]} of "
                        f"cluster {c} share out-neighbour {self.verts[t]}",
                    )
                seen[t] = u
        for u in range(self.num_vertices):
            checked += 1
            closed = [u] + [v for v in self.neighbour_ids(u) if self.cluster[v] == self.cluster[u]]
            targets = {self.cluster[self.out[v]] for v in closed}
            if len(targets) != self.n:
                return CheckReport(
                    False, checked,
                    f"closed neighbourhood of {self.verts[u]} exits into {len(targets)} clusters",
                )
        return CheckReport(True, checked)

    def check_exit_mirror(self) -> CheckReport:
        """If a vertex exits into a foreign cluster j (not its own pair),
        flipping its first symbol exits into cluster -j."""
        if self.n < 3:
            return CheckReport(True, 0)
        checked = 0
        for u in range(self.num_vertices):
            i = self.cluster[u]
            j = self.cluster[self.out[u]]
            if j == i or j == -i:
                continue
            checked += 1
            flip = self.index[perm.prefix_reversal(self.verts[u], 1)]
            if self.cluster[self.out[flip]] != -j:
                return CheckReport(
                    False, checked,
                    f"{self.verts[u]} exits to {j} but its flip exits to "
                    f"{self.cluster[self.out[flip]]}",
                )
        return CheckReport(True, checked)

    def check_pair_deletion(self, samples: int | None = None, seed: int = 0) -> CheckReport:
        """Every cluster stays connected after removing a vertex together with
        one of its in-cluster neighbours (exhaustive at n == 3, sampled above)."""
        if self.n < 3:
            return CheckReport(True, 0)
        import random

        cases: list[tuple[int, int]] = []
        for c, ids in self._cluster_verts.items():
            for u in ids:
                for i in range(1, self.n):
                    v = self.index[perm.prefix_reversal(self.verts[u], i)]
                    cases.append((u, v))
        if samples is not None and samples < len(cases):
            cases = random.Random(seed).sample(cases, samples)
        checked = 0
        for u, v in cases:
            checked += 1
            c = self.cluster[u]
            view = self.cluster_view(c, forbidden=(u, v))
            if not view.is_connected():
                return CheckReport(
                    False, checked,
                    f"cluster {c} disconnected by removing {self.verts[u]} and {self.verts[v]}",
                )
        return CheckReport(True, checked)


@dataclass(frozen=True)
class SubgraphView:
    """Restriction of the graph to an allowed vertex set; never a copy."""

    graph: BurntPancakeGraph
    allowed: frozenset[int] | None  # None means everything

    def contains(self, vid: int) -> bool:
        return self.allowed is None or vid in self.allowed

    def vertices(self) -> Iterator[int]:
        if self.allowed is None:
            return iter(range(self.graph.num_vertices))
        return iter(sorted(self.allowed))

    def num_vertices(self) -> int:
        if self.allowed is None:
            return self.graph.num_vertices
        return len(self.allowed)

    def neighbours(self, vid: int) -> list[int]:
        if self.allowed is None:
            return list(self.graph.neighbour_ids(vid))
        return [v for v in self.graph.neighbour_ids(vid) if v in self.allowed]

    def edges(self) -> Iterator[tuple[int, int]]:
        for u in self.vertices():
            for v in self.neighbours(u):
                if u < v:
                    yield (u, v)

    def minus(self, forbidden: Iterable[int]) -> "SubgraphView":
        forbidden = set(forbidden)
        if self.allowed is None:
            base = set(range(self.graph.num_vertices))
        else:
            base = set(self.allowed)
        return SubgraphView(self.graph, frozenset(base - forbidden))

    def is_connected(self, within: Iterable[int] | None = None) -> bool:
        """Connectivity of the whole view, or of the vertices in ``within``."""
        targets = set(within) if within is not None else None
        verts = list(self.vertices()) if targets is None else sorted(targets)
        if not verts:
            return True
        if targets is not None and not all(self.contains(v) for v in verts):
            return False
        start = verts[0]
        seen = {start}
        q = deque([start])
        remaining = set(verts) - {start}
        while q and (remaining or targets is None):
            u = q.popleft()
            for v in self.neighbours(u):
                if v not in seen:
                    seen.add(v)
                    remaining.discard(v)
                    q.append(v)
        if targets is not None:
            return not remaining
        return len(seen) == self.num_vertices()


def build(n: int, n_max: int | None = None) -> BurntPancakeGraph:
    return BurntPancakeGraph(n, n_max=n_max)
