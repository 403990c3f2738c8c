"""Shared machinery for the tree-family constructions.

All case builders work in a normalized coordinate frame (a left translation
sends a designated anchor terminal to the identity vertex, which puts its
cluster at the top index and aligns its in-cluster neighbours with the
direction labels 1..n-1).  A per-call claims ledger steers every auxiliary
choice to the canonically smallest vertex that collides with nothing chosen
so far.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .. import perm
from ..graph import BurntPancakeGraph, SubgraphView
from ..paths import Infeasible
from ..trees import Edge, norm_edge

__all__ = ["BuildDefect", "Ctx", "EdgeSet"]

EdgeSet = set[Edge]


class BuildDefect(Exception):
    """The construction plus repair failed; indicates an implementation bug."""


@dataclass
class Ctx:
    g: BurntPancakeGraph
    trace: list[str] = field(default_factory=list)
    claims: set[int] = field(default_factory=set)

    # -- id-level permutation helpers -------------------------------------

    @property
    def n(self) -> int:
        return self.g.n

    def vert(self, vid: int) -> perm.Perm:
        return self.g.verts[vid]

    def vid(self, p: perm.Perm) -> int:
        return self.g.index[p]

    def cluster(self, vid: int) -> int:
        return self.g.cluster[vid]

    def out(self, vid: int) -> int:
        return self.g.out[vid]

    def first(self, vid: int) -> int:
        return self.g.verts[vid][0]

    def rev(self, vid: int, i: int) -> int:
        return self.g.index[perm.prefix_reversal(self.g.verts[vid], i)]

    def gamma(self, vid: int, i: int) -> int:
        return self.g.index[perm.gamma_neighbour(self.g.verts[vid], i)]

    def gamma_exit(self, vid: int, i: int) -> int:
        return self.out(self.gamma(vid, i))

    def side(self, vid: int, i: int) -> int:
        """+1 if the direction-i exit of ``vid`` lands in cluster i, else -1."""
        return 1 if self.cluster(self.gamma_exit(vid, i)) == i else -1

    # -- claims and canonical choices --------------------------------------

    def claim(self, *vids: int) -> None:
        self.claims.update(vids)

    def pick(self, cluster: int, first_sym: int | None = None, avoid: set[int] | None = None) -> int:
        """Canonically smallest unclaimed vertex of a cluster, optionally with
        a fixed first symbol; out-neighbours of candidates are kept unclaimed
        too, since they become attachment targets."""
        avoid = avoid or set()
        for vid in self.g.cluster_vertices(cluster):
            if vid in self.claims or vid in avoid:
                continue
            if first_sym is not None and self.g.verts[vid][0] != first_sym:
                continue
            if self.out(vid) in self.claims or self.out(vid) in avoid:
                continue
            return vid
        raise Infeasible(f"no eligible vertex in cluster {cluster} with first {first_sym}")

    def pick_bridge(self, host: int, direction: int, avoid: set[int] | None = None) -> tuple[int, int, int, int]:
        """An adjacent pair (a, b=a(1)) inside ``host`` whose exits attach the
        pair of clusters +-direction: returns (a, b, a_exit, b_exit)."""
        avoid = avoid or set()
        for a in self.g.cluster_vertices(host):
            if self.g.verts[a][0] != -direction:
                continue
            b = self.rev(a, 1)
            group = (a, b, self.out(a), self.out(b))
            if any(v in self.claims or v in avoid for v in group):
                continue
            self.claim(*group)
            return group
        raise Infeasible(f"no bridge pair in cluster {host} for direction {direction}")

    def relay(self, source_cluster: int, via_cluster: int, avoid: set[int] | None = None) -> tuple[int, list[int]]:
        """A three-hop escape from ``source_cluster`` into its opposite.

        Picks u in the source cluster exiting into ``via_cluster``; flipping
        the first symbol of that exit exits again into the opposite of the
        source cluster.  Returns (u, [u, u_exit, flip, final]) where the pins
        {u_exit, flip} are claimed inside ``via_cluster``.
        """
        avoid = set(avoid or set())
        for u in self.g.cluster_vertices(source_cluster):
            if self.g.verts[u][0] != -via_cluster:
                continue
            hat = self.out(u)
            flip = self.rev(hat, 1)
            final = self.out(flip)
            group = (u, hat, flip, final)
            if any(v in self.claims or v in avoid for v in group):
                continue
            self.claim(*group)
            return u, [u, hat, flip, final]
        raise Infeasible(f"no relay from {source_cluster} via {via_cluster}")

    # -- views -------------------------------------------------------------

    def view(self, *clusters: int, forbidden: set[int] | None = None) -> SubgraphView:
        forb = set(forbidden or set())
        return self.g.cluster_view(*clusters, forbidden=forb)

    def region_view(self, clusters: list[int], forbidden: set[int] | None = None) -> SubgraphView:
        return self.g.cluster_view(*clusters, forbidden=set(forbidden or set()))

    # -- assembly helpers ----------------------------------------------------

    @staticmethod
    def add_path(es: EdgeSet, path: list[int] | tuple[int, ...]) -> None:
        for a, b in zip(path, path[1:]):
            es.add(norm_edge(a, b))

    @staticmethod
    def add_edge(es: EdgeSet, a: int, b: int) -> None:
        es.add(norm_edge(a, b))

    def two_step_edges(self, es: EdgeSet, t: int, i: int) -> int:
        """Add the two-edge attachment path for terminal t along direction i;
        returns the exit vertex."""
        mid = self.gamma(t, i)
        end = self.out(mid)
        self.add_path(es, [t, mid, end])
        return end
