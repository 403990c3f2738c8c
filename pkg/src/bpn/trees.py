"""Tree and tree-family values used by the builder, verifier and oracle."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Sequence

Edge = tuple[int, int]

__all__ = ["Edge", "norm_edge", "path_edges", "Tree", "STreeFamily"]


def norm_edge(u: int, v: int) -> Edge:
    if u == v:
        raise ValueError(f"loop edge at {u}")
    return (u, v) if u < v else (v, u)


def path_edges(path: Sequence[int]) -> list[Edge]:
    return [norm_edge(a, b) for a, b in zip(path, path[1:])]


@dataclass(frozen=True)
class Tree:
    """A candidate tree: a vertex set plus an edge set over vertex ids.

    Construction does not validate acyclicity; the verifier owns that.
    """

    vertices: frozenset[int]
    edges: frozenset[Edge]

    @classmethod
    def from_edges(cls, edges: Iterable[Edge], extra_vertices: Iterable[int] = ()) -> "Tree":
        es = frozenset(edges)
        vs = set(extra_vertices)
        for u, v in es:
            vs.add(u)
            vs.add(v)
        return cls(frozenset(vs), es)

    @classmethod
    def from_path(cls, path: Sequence[int]) -> "Tree":
        if len(path) == 1:
            return cls(frozenset(path), frozenset())
        return cls.from_edges(path_edges(path))

    def union(self, other: "Tree") -> "Tree":
        return Tree(self.vertices | other.vertices, self.edges | other.edges)

    def __len__(self) -> int:
        return len(self.vertices)


@dataclass(frozen=True)
class STreeFamily:
    """Ordered family of candidate trees over a common terminal set."""

    s: frozenset[int]
    trees: tuple[Tree, ...]
    case_trace: tuple[str, ...] = ()
    repaired: bool = False

    def with_trace(self, *labels: str) -> "STreeFamily":
        return STreeFamily(self.s, self.trees, self.case_trace + labels, self.repaired)
