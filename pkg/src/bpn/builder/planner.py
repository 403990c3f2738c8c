"""Territory planning: per-tree cluster ownership and connector resolution.

Each tree under construction owns a set of clusters holding its attachment
targets.  A union of clusters is disconnected exactly when it is an
opposite pair, so a tree whose territory splits needs either an extra free
cluster (extension) or a bridge: an adjacent vertex pair in a third cluster
whose two exits land on the two sides.  Bridges for different directions
can share one host cluster because their pairs carry different first-symbol
magnitudes; with no free cluster at all, each bridge is hosted inside
another tree's cluster and excluded from that tree's view.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .. import perm
from ..paths import Infeasible, terminal_tree
from ..trees import norm_edge
from .context import Ctx, EdgeSet

__all__ = ["Plan", "resolve_and_assemble"]


@dataclass
class Plan:
    targets: set[int] = field(default_factory=set)
    own: set[int] = field(default_factory=set)
    forbidden: set[int] = field(default_factory=set)
    pieces: EdgeSet = field(default_factory=set)
    w_target: int | None = None  # cluster steering a fan pin, if any

    def piece_vertices(self) -> set[int]:
        return {v for e in self.pieces for v in e}


def _components(clusters: set[int]) -> list[set[int]]:
    comps: list[set[int]] = []
    todo = set(clusters)
    while todo:
        c = min(todo, key=perm.symbol_key)
        comp = {c}
        todo.discard(c)
        grown = True
        while grown:
            grown = False
            for d in list(todo):
                if any(d != -e for e in comp):
                    comp.add(d)
                    todo.discard(d)
                    grown = True
        comps.append(comp)
    return comps


def resolve_and_assemble(
    ctx: Ctx,
    plans: dict[int, Plan],
    reserved_clusters: set[int],
    host_pref: list[int] | None = None,
) -> dict[int, EdgeSet]:
    """Fix up disconnected territories, then build each tree's terminal trees.

    reserved_clusters: clusters no plan may annex (terminal clusters, the
    fan cluster).  host_pref: clusters to prefer as bridge hosts.
    """
    all_clusters = set(ctx.g.cluster_ids())
    used = set(reserved_clusters)
    for p in plans.values():
        used |= p.own
    free = sorted(all_clusters - used, key=perm.symbol_key)
    order = sorted(plans)

    # -- connector resolution ---------------------------------------------
    split = [i for i in order if len(_components(plans[i].own)) > 1]
    host = None
    if split:
        for c in host_pref or []:
            if c in free:
                host = c
                break
        if host is None and free:
            host = free[0]
    for pos, i in enumerate(split):
        plan = plans[i]
        while True:
            comps = _components(plan.own)
            if len(comps) == 1:
                break
            comp_of = {c: idx for idx, comp in enumerate(comps) for c in comp}
            pair_mag = None
            for c in sorted(plan.own, key=perm.symbol_key):
                if -c in plan.own and comp_of[c] != comp_of[-c]:
                    pair_mag = abs(c)
                    break
            if pair_mag is None:
                # no opposite pair across components: annex a free cluster
                if not free:
                    raise Infeasible(f"cannot connect territory {plan.own}")
                plan.own.add(free.pop(0))
                continue
            if host is not None:
                h = host
                excl_plan = None
            else:
                # zero free clusters: host inside the next split tree's
                # territory and carve the pair out of its view
                nxt = split[(pos + 1) % len(split)]
                if nxt == i:
                    raise Infeasible("single split tree with no free cluster")
                h = min(
                    (c for c in plans[nxt].own if abs(c) != pair_mag),
                    key=perm.symbol_key,
                )
                excl_plan = plans[nxt]
            a, b, a_exit, b_exit = ctx.pick_bridge(h, pair_mag)
            plan.pieces.add(norm_edge(a, b))
            plan.pieces.add(norm_edge(a, a_exit))
            plan.pieces.add(norm_edge(b, b_exit))
            plan.targets.update((a_exit, b_exit))
            if excl_plan is not None:
                excl_plan.forbidden.update((a, b))

    # -- terminal trees per connected territory component -------------------
    result: dict[int, EdgeSet] = {}
    for i in order:
        plan = plans[i]
        mine = plan.targets | plan.piece_vertices()
        es: EdgeSet = set(plan.pieces)
        for comp in _components(plan.own):
            terms = [t for t in plan.targets if ctx.cluster(t) in comp]
            if not terms:
                continue
            forb = set(plan.forbidden)
            for v in ctx.claims:
                if ctx.cluster(v) in comp and v not in mine:
                    forb.add(v)
            view = ctx.view(*sorted(comp, key=perm.symbol_key), forbidden=forb)
            ttree = terminal_tree(view, terms)
            es |= ttree.edges
            ctx.claim(*ttree.vertices)
        result[i] = es
    return result
