"""Signed-permutation arithmetic: the vertex algebra of the burnt pancake network.

A vertex is a tuple of nonzero ints whose absolute values permute 1..n.
Negative entries model burnt-side-up pancakes.  All functions are pure;
tuples are never mutated.
"""

from __future__ import annotations

from typing import Iterable, Sequence

Perm = tuple[int, ...]

__all__ = [
    "Perm",
    "identity",
    "validate",
    "is_signed_perm",
    "prefix_reversal",
    "out_neighbour",
    "cluster_of",
    "neighbours",
    "gamma_neighbour",
    "gamma_out",
    "two_step",
    "left_multiply",
    "inverse",
    "symbol_key",
    "sort_key",
    "parse_vertex",
    "format_vertex",
    "all_vertices",
]


def identity(n: int) -> Perm:
    return tuple(range(1, n + 1))


def is_signed_perm(seq: Sequence[int]) -> bool:
    n = len(seq)
    if n == 0:
        return False
    mags = sorted(abs(s) for s in seq)
    return 0 not in mags and mags == list(range(1, n + 1))


def validate(seq: Sequence[int]) -> Perm:
    """Return ``seq`` as a Perm, raising ValueError if it is not one."""
    x = tuple(seq)
    if not is_signed_perm(x):
        raise ValueError(f"not a signed permutation: {x!r}")
    return x


def prefix_reversal(x: Perm, i: int) -> Perm:
    """Reverse and negate the first ``i`` symbols of ``x`` (1-based)."""
    if not 1 <= i <= len(x):
        raise ValueError(f"reversal index {i} out of range for n={len(x)}")
    return tuple(-x[i - 1 - p] for p in range(i)) + x[i:]


def out_neighbour(x: Perm) -> Perm:
    """The unique neighbour of ``x`` outside its cluster: the full reversal."""
    return tuple(-s for s in reversed(x))


def cluster_of(x: Perm) -> int:
    """Cluster id = the last symbol; the full reversal leaves the cluster."""
    return x[-1]


def neighbours(x: Perm) -> list[Perm]:
    """All n neighbours x(1), ..., x(n), in reversal-index order."""
    return [prefix_reversal(x, i) for i in range(1, len(x) + 1)]


def gamma_neighbour(x: Perm, i: int) -> Perm:
    """In-cluster neighbour of ``x`` whose out-neighbour has cluster magnitude ``i``.

    Reversing at the position holding +-i moves that symbol to the front, so
    the subsequent full reversal lands in cluster i or -i.
    """
    n = len(x)
    if not 1 <= i <= n or i == abs(x[-1]):
        raise ValueError(f"direction {i} invalid for vertex with last symbol {x[-1]}")
    for p in range(n):
        if abs(x[p]) == i:
            return prefix_reversal(x, p + 1)
    raise AssertionError("unreachable: magnitude missing from signed permutation")


def gamma_out(x: Perm, i: int) -> Perm:
    """Out-neighbour of gamma_neighbour(x, i); lies in cluster i or -i."""
    return out_neighbour(gamma_neighbour(x, i))


def two_step(x: Perm, i: int) -> tuple[Perm, Perm, Perm]:
    """The two-edge path x -- gamma_neighbour -- its out-neighbour."""
    g = gamma_neighbour(x, i)
    return (x, g, out_neighbour(g))


def left_multiply(g: Perm, x: Perm) -> Perm:
    """Compose ``g`` after ``x``: position p holds sign(x_p) * g[|x_p|].

    Left translations are adjacency-preserving relabelings of the whole
    network and map clusters onto clusters.
    """
    if len(g) != len(x):
        raise ValueError(f"size mismatch: {len(g)} vs {len(x)}")
    return tuple(g[abs(s) - 1] if s > 0 else -g[abs(s) - 1] for s in x)


def inverse(x: Perm) -> Perm:
    """The group inverse: left_multiply(inverse(x), x) == identity."""
    out = [0] * len(x)
    for p, s in enumerate(x, start=1):
        out[abs(s) - 1] = p if s > 0 else -p
    return tuple(out)


def symbol_key(s: int) -> tuple[int, int]:
    """Total order on symbols: -1 < 1 < -2 < 2 < ..."""
    return (abs(s), 0 if s < 0 else 1)


def sort_key(x: Perm) -> tuple[tuple[int, int], ...]:
    """Canonical total order on vertices (lexicographic over symbol_key)."""
    return tuple(symbol_key(s) for s in x)


def parse_vertex(text: str) -> Perm:
    """Parse the comma-separated text form, e.g. "-2,-1,3"."""
    try:
        vals = tuple(int(part) for part in text.replace(" ", "").split(",") if part)
    except ValueError as exc:
        raise ValueError(f"bad vertex text {text!r}") from exc
    return validate(vals)


def format_vertex(x: Iterable[int]) -> str:
    return ",".join(str(s) for s in x)


def all_vertices(n: int) -> list[Perm]:
    """All 2^n * n! vertices in canonical order."""
    import itertools

    verts = []
    for base in itertools.permutations(range(1, n + 1)):
        for signs in itertools.product((-1, 1), repeat=n):
            verts.append(tuple(s * b for s, b in zip(signs, base)))
    verts.sort(key=sort_key)
    return verts
