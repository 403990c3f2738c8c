"""Independent certification of disjoint tree families.

This module re-checks candidate output from first principles: it queries
only the graph's adjacency and the trees' own vertex/edge sets, and shares
no construction code with the builder.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from typing import Iterable

from .graph import BurntPancakeGraph
from .trees import STreeFamily, Tree

__all__ = ["Violation", "VerificationReport", "verify_tree", "verify_family"]


@dataclass(frozen=True)
class Violation:
    kind: str  # not-a-tree | missing-terminal | vertex-overlap | edge-overlap | edge-not-in-graph | wrong-count
    witness: tuple
    trees: tuple[int, ...]

    def __str__(self) -> str:
        return f"{self.kind} in trees {self.trees}: {self.witness}"


@dataclass
class VerificationReport:
    ok: bool
    violations: list[Violation] = field(default_factory=list)

    def __bool__(self) -> bool:
        return self.ok


def _tree_violations(g: BurntPancakeGraph, t: Tree, index: int) -> list[Violation]:
    out: list[Violation] = []
    for u, v in t.edges:
        if u not in t.vertices or v not in t.vertices:
            out.append(Violation("not-a-tree", (u, v), (index,)))
        if not g.has_edge(u, v):
            out.append(Violation("edge-not-in-graph", (u, v), (index,)))
    if out:
        return out
    if len(t.edges) != len(t.vertices) - 1:
        return [Violation("not-a-tree", (len(t.vertices), len(t.edges)), (index,))]
    if not t.vertices:
        return [Violation("not-a-tree", ("empty",), (index,))]
    adj: dict[int, list[int]] = {v: [] for v in t.vertices}
    for u, v in t.edges:
        adj[u].append(v)
        adj[v].append(u)
    start = next(iter(t.vertices))
    seen = {start}
    q = deque([start])
    while q:
        u = q.popleft()
        for v in adj[u]:
            if v not in seen:
                seen.add(v)
                q.append(v)
    if len(seen) != len(t.vertices):
        missing = min(t.vertices - seen)
        return [Violation("not-a-tree", ("disconnected", missing), (index,))]
    # connected with |E| = |V| - 1 implies acyclic
    return []


def verify_tree(g: BurntPancakeGraph, t: Tree, s: Iterable[int] = ()) -> VerificationReport:
    """Check one candidate: edges exist, connected, acyclic, contains s."""
    violations = _tree_violations(g, t, 0)
    for term in s:
        if term not in t.vertices:
            violations.append(Violation("missing-terminal", (term,), (0,)))
    return VerificationReport(not violations, violations)


def verify_family(
    g: BurntPancakeGraph,
    s: Iterable[int],
    fam: STreeFamily,
    expected_count: int | None = None,
) -> VerificationReport:
    """Full family contract: per-tree checks, terminals present, pairwise
    vertex intersections exactly s, pairwise edge intersections empty."""
    sset = frozenset(s)
    violations: list[Violation] = []
    if expected_count is not None and len(fam.trees) != expected_count:
        violations.append(
            Violation("wrong-count", (len(fam.trees), expected_count), ())
        )
    for i, t in enumerate(fam.trees):
        violations.extend(_tree_violations(g, t, i))
        for term in sset:
            if term not in t.vertices:
                violations.append(Violation("missing-terminal", (term,), (i,)))
    for i in range(len(fam.trees)):
        for j in range(i + 1, len(fam.trees)):
            ti, tj = fam.trees[i], fam.trees[j]
            shared_v = (ti.vertices & tj.vertices) - sset
            if shared_v:
                violations.append(Violation("vertex-overlap", (min(shared_v),), (i, j)))
            shared_e = ti.edges & tj.edges
            if shared_e:
                violations.append(Violation("edge-overlap", (min(shared_e),), (i, j)))
    return VerificationReport(not violations, violations)
