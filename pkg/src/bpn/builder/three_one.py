"""Three terminals in one cluster, the fourth elsewhere.

After normalizing the anchor terminal to the identity, each direction
1..n-1 yields one tree: the anchor's two-step attachment always lands
in-side, the other two in-cluster terminals land on either side of the
direction pair, and the fourth terminal is reached through a fan in the
opposite cluster (when it lives there) or through its own two-step
attachments plus one direct pickup tree.  Terminals adjacent inside the
shared cluster pivot through each other, so those directions get special
templates that spend the terminal-terminal and terminal-exit edges exactly
once across the family.
"""

from __future__ import annotations

from itertools import combinations

from ..graph import BurntPancakeGraph
from ..paths import fan
from ..trees import norm_edge
from .context import Ctx, EdgeSet
from .planner import Plan, resolve_and_assemble

__all__ = ["build_three_one"]


def build_three_one(g: BurntPancakeGraph, s_ids: list[int]) -> tuple[list[EdgeSet], list[str]]:
    from collections import Counter

    counts = Counter(g.cluster[v] for v in s_ids)
    c3 = next(c for c, k in counts.items() if k == 3)
    triple = sorted(v for v in s_ids if g.cluster[v] == c3)
    w_raw = next(v for v in s_ids if g.cluster[v] != c3)

    edges_in = [(a, b) for a, b in combinations(triple, 2) if g.has_edge(a, b)]
    if not edges_in:
        anchor = triple[0]
        y_raw, z_raw = [v for v in triple if v != anchor]
    elif len(edges_in) == 1:
        a, b = edges_in[0]
        anchor = min(a, b)
        y_raw = max(a, b)
        z_raw = next(v for v in triple if v not in (a, b))
    else:
        centers = set(edges_in[0]) & set(edges_in[1])
        anchor = centers.pop()
        y_raw, z_raw = [v for v in triple if v != anchor]

    fwd, inv = g.normalize(anchor)
    x = g.apply_auto(fwd, anchor)
    y = g.apply_auto(fwd, y_raw)
    z = g.apply_auto(fwd, z_raw)
    w = g.apply_auto(fwd, w_raw)

    ctx = Ctx(g)
    n = g.n
    l = abs(ctx.first(y)) if g.has_edge(x, y) else None
    k = abs(ctx.first(z)) if g.has_edge(x, z) else None
    if l is not None and k is not None and l > k:
        y, z = z, y
        l, k = k, l
    ctx.claim(x, y, z, w)

    jc = g.cluster[w]
    fan_branch = jc == -n
    dirs = list(range(1, n))
    trace = ["three-one/" + ("edge2" if k else "edge1" if l else "edge0"),
             "three-one/" + ("fan" if fan_branch else "pickup")]

    plans: dict[int, Plan] = {i: Plan() for i in dirs}
    specials: set[int] = set()

    if l is not None and k is None:
        specials = _case_one_edge(ctx, plans, x, y, z, l)
    elif k is not None:
        specials = _case_two_edges(ctx, plans, x, y, z, l, k)

    for i in dirs:
        if i in specials:
            continue
        plan = plans[i]
        plan.own.add(i)
        for t in (x, y, z):
            exit_v = ctx.two_step_edges(plan.pieces, t, i)
            ctx.claim(ctx.gamma(t, i), exit_v)
            plan.targets.add(exit_v)
            plan.own.add(ctx.cluster(exit_v))
        plan.w_target = i

    if fan_branch:
        _attach_by_fan(ctx, plans, w)
    else:
        _attach_by_pickup(ctx, plans, w, jc)

    reserved = {n, -n} if fan_branch else {n}
    host_pref = [] if fan_branch else [-n]
    built = resolve_and_assemble(ctx, plans, reserved, host_pref)

    raw_sets = []
    for i in dirs:
        raw_sets.append(
            {norm_edge(g.apply_auto(inv, u), g.apply_auto(inv, v)) for u, v in built[i]}
        )
    return raw_sets, trace


def _case_one_edge(ctx: Ctx, plans: dict[int, Plan], x: int, y: int, z: int, l: int) -> set[int]:
    """One in-cluster edge x-y with y = x(l): directions 1 and l share the
    xy / y-exit edges, steered by which side z leaves at direction l."""
    yhat = ctx.out(y)
    ctx.claim(yhat)
    if l == 1:
        p = plans[1]
        p.own.update({1, ctx.cluster(yhat)})
        p.targets.add(yhat)
        ctx.add_edge(p.pieces, x, y)
        ctx.add_edge(p.pieces, y, yhat)
        ze = ctx.two_step_edges(p.pieces, z, 1)
        ctx.claim(ctx.gamma(z, 1), ze)
        p.targets.add(ze)
        p.own.add(ctx.cluster(ze))
        p.w_target = 1
        return {1}

    p1, pl = plans[1], plans[l]
    if ctx.side(z, l) > 0:
        # tree l stays in-side; tree 1 borrows y's direction-l attachment
        pl.own.add(l)
        pl.targets.add(yhat)
        ze_l = ctx.two_step_edges(pl.pieces, z, l)
        ctx.claim(ctx.gamma(z, l), ze_l)
        pl.targets.add(ze_l)
        ctx.add_edge(pl.pieces, x, y)
        ctx.add_edge(pl.pieces, y, yhat)
        pl.w_target = l

        p1.own.update({1, -l})
        for t, d in ((x, 1), (z, 1), (y, l)):
            ev = ctx.two_step_edges(p1.pieces, t, d)
            ctx.claim(ctx.gamma(t, d), ev)
            p1.targets.add(ev)
            p1.own.add(ctx.cluster(ev))
        p1.w_target = 1
    else:
        # both of y's and z's direction-l exits flip: tree l lives out-side
        pl.own.add(-l)
        for t in (y, z):
            ev = ctx.two_step_edges(pl.pieces, t, l)
            ctx.claim(ctx.gamma(t, l), ev)
            pl.targets.add(ev)
        ctx.add_edge(pl.pieces, x, y)
        pl.w_target = -l

        p1.own.update({1, ctx.cluster(yhat)})
        p1.targets.add(yhat)
        ctx.add_edge(p1.pieces, y, yhat)
        for t in (x, z):
            ev = ctx.two_step_edges(p1.pieces, t, 1)
            ctx.claim(ctx.gamma(t, 1), ev)
            p1.targets.add(ev)
            p1.own.add(ctx.cluster(ev))
        p1.w_target = 1
    return {1, l}


def _case_two_edges(ctx: Ctx, plans: dict[int, Plan], x: int, y: int, z: int, l: int, k: int) -> set[int]:
    """Two in-cluster edges x-y, x-z with y = x(l), z = x(k), l < k."""
    xhat, yhat, zhat = ctx.out(x), ctx.out(y), ctx.out(z)
    ctx.claim(xhat, yhat, zhat)
    pk = plans[k]
    pk.own.add(k)
    pk.targets.add(zhat)
    ye_k = ctx.two_step_edges(pk.pieces, y, k)
    ctx.claim(ctx.gamma(y, k), ye_k)
    pk.targets.add(ye_k)
    pk.own.add(ctx.cluster(ye_k))
    ctx.add_edge(pk.pieces, x, y)
    ctx.add_edge(pk.pieces, z, zhat)
    pk.w_target = k

    if l == 1:
        p1 = plans[1]
        p1.own.update({ctx.cluster(xhat), ctx.cluster(yhat)})
        p1.targets.update({xhat, yhat})
        ctx.add_edge(p1.pieces, x, xhat)
        ctx.add_edge(p1.pieces, y, yhat)
        ctx.add_edge(p1.pieces, x, z)
        p1.w_target = ctx.cluster(yhat)
        return {1, k}

    p1, pl = plans[1], plans[l]
    p1.own.update({1, -l})
    for t, d in ((x, 1), (y, l), (z, l)):
        ev = ctx.two_step_edges(p1.pieces, t, d)
        ctx.claim(ctx.gamma(t, d), ev)
        p1.targets.add(ev)
        p1.own.add(ctx.cluster(ev))
    p1.w_target = 1

    pl.own.update({ctx.cluster(xhat), ctx.cluster(yhat)})
    pl.targets.update({xhat, yhat})
    ctx.add_edge(pl.pieces, x, xhat)
    ctx.add_edge(pl.pieces, x, z)
    ctx.add_edge(pl.pieces, y, yhat)
    pl.w_target = ctx.cluster(yhat)
    return {1, l, k}


def _attach_by_fan(ctx: Ctx, plans: dict[int, Plan], w: int) -> None:
    """Fourth terminal in the opposite cluster: one fan path per tree to a
    pin whose exit lands inside that tree's territory."""
    n = ctx.n
    pins: dict[int, int] = {}
    for i, plan in sorted(plans.items()):
        wt = plan.w_target if plan.w_target is not None else i
        if wt not in plan.own:
            plan.own.add(wt)
        pin = ctx.pick(-n, first_sym=-wt, avoid={w})
        ctx.claim(pin, ctx.out(pin))
        pins[i] = pin
        plan.targets.add(ctx.out(pin))
        ctx.add_edge(plan.pieces, pin, ctx.out(pin))
    pin_set = set(pins.values())
    forb = {v for v in ctx.claims if ctx.cluster(v) == -n and v not in pin_set and v != w}
    fam = fan(ctx.view(-n, forbidden=forb), w, sorted(pin_set))
    by_term = fam.by_terminal()
    for i, plan in plans.items():
        path = by_term[pins[i]]
        ctx.add_path(plan.pieces, path)
        ctx.claim(*path)


def _attach_by_pickup(ctx: Ctx, plans: dict[int, Plan], w: int, jc: int) -> None:
    """Fourth terminal in a direction cluster: two-step attachments for the
    other trees, direct pickup (avoiding those pivots) for its own tree."""
    d = abs(jc)
    pivots: set[int] = set()
    for i, plan in sorted(plans.items()):
        if i == d:
            continue
        mid = ctx.gamma(w, i)
        ev = ctx.out(mid)
        ctx.claim(mid, ev)
        pivots.add(mid)
        ctx.add_path(plan.pieces, [w, mid, ev])
        plan.targets.add(ev)
        plan.own.add(ctx.cluster(ev))
    pickup = plans[d]
    pickup.targets.add(w)
    pickup.own.add(jc)
    pickup.forbidden |= pivots
