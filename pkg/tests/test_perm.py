import itertools

import pytest

from bpn import perm
from bpn.perm import (
    all_vertices,
    cluster_of,
    format_vertex,
    gamma_neighbour,
    gamma_out,
    identity,
    inverse,
    left_multiply,
    neighbours,
    out_neighbour,
    parse_vertex,
    prefix_reversal,
    two_step,
    validate,
)


def test_prefix_reversal_basic():
    assert prefix_reversal((1, 2, 3), 2) == (-2, -1, 3)
    assert prefix_reversal((1, 2, 3), 1) == (-1, 2, 3)
    assert prefix_reversal((1, 2, 3), 3) == (-3, -2, -1)


def test_prefix_reversal_of_identity_prefix():
    # reversing the first l symbols of 1..n gives -l ... -1 (l+1) ... n
    for n in (3, 4, 5):
        x = identity(n)
        for l in range(1, n):
            expect = tuple(range(-l, 0)) + tuple(range(l + 1, n + 1))
            assert prefix_reversal(x, l) == expect


def test_prefix_reversal_involution_exhaustive():
    for n in (2, 3):
        for x in all_vertices(n):
            for i in range(1, n + 1):
                assert prefix_reversal(prefix_reversal(x, i), i) == x


def test_prefix_reversal_rejects_bad_index():
    with pytest.raises(ValueError):
        prefix_reversal((1, 2, 3), 0)
    with pytest.raises(ValueError):
        prefix_reversal((1, 2, 3), 4)


def test_neighbours_distinct():
    for x in all_vertices(3):
        ns = neighbours(x)
        assert len(set(ns)) == 3
        assert x not in ns


def test_out_neighbour():
    assert out_neighbour((1, 2, 3)) == (-3, -2, -1)
    assert cluster_of(out_neighbour((1, 2, 3))) == -1
    assert out_neighbour((2, -1, 3)) == (-3, 1, -2)
    assert cluster_of(out_neighbour((2, -1, 3))) == -2


def test_out_neighbour_cluster_is_negated_first_symbol():
    for x in all_vertices(3):
        assert cluster_of(out_neighbour(x)) == -x[0]
        assert out_neighbour(out_neighbour(x)) == x


def test_cluster_of():
    assert cluster_of((1, 2, 3)) == 3
    assert cluster_of((-3, -2, -1)) == -1
    for x in all_vertices(3):
        for i in (1, 2):
            assert cluster_of(prefix_reversal(x, i)) == cluster_of(x)


def test_gamma_neighbour_identity_anchor():
    for n in (3, 4):
        x = identity(n)
        for i in range(1, n):
            assert gamma_neighbour(x, i) == prefix_reversal(x, i)
            assert cluster_of(gamma_out(x, i)) == i


def test_gamma_neighbour_derived_example():
    x = (2, 1, 3)
    assert gamma_neighbour(x, 2) == (-2, 1, 3)
    assert out_neighbour((-2, 1, 3)) == (-3, -1, 2)
    assert cluster_of(gamma_out(x, 2)) == 2


def test_gamma_classification_exhaustive():
    # every admissible direction lands in cluster +-i, and the pivot is unique
    for n in (2, 3, 4):
        for x in all_vertices(n):
            own = abs(x[-1])
            for i in range(1, n + 1):
                if i == own:
                    with pytest.raises(ValueError):
                        gamma_neighbour(x, i)
                else:
                    g = gamma_neighbour(x, i)
                    assert cluster_of(g) == cluster_of(x)
                    assert abs(cluster_of(out_neighbour(g))) == i


def test_two_step_shape():
    x = (1, 2, 3)
    a, b, c = two_step(x, 1)
    assert (a, b) != (b, c)
    assert a == x and b == prefix_reversal(x, 1)
    assert c == out_neighbour(b)


def test_left_multiply_identity_and_inverse():
    for x in all_vertices(3):
        assert left_multiply(identity(3), x) == x
        assert left_multiply(inverse(x), x) == identity(3)


def test_left_multiply_size_mismatch():
    with pytest.raises(ValueError):
        left_multiply((1, 2), (1, 2, 3))


def test_left_multiply_preserves_adjacency_exhaustive_bp3():
    verts = all_vertices(3)
    edges = set()
    for x in verts:
        for y in neighbours(x):
            edges.add(frozenset((x, y)))
    assert len(edges) == 72
    for g in verts:
        for e in edges:
            x, y = tuple(e)
            assert frozenset((left_multiply(g, x), left_multiply(g, y))) in edges


def test_left_multiply_maps_clusters_consistently():
    verts = all_vertices(3)
    for g in verts[:8]:
        seen = {}
        for x in verts:
            img = cluster_of(left_multiply(g, x))
            c = cluster_of(x)
            assert seen.setdefault(c, img) == img


def test_parse_and_format_round_trip():
    assert parse_vertex("-2,-1,3") == (-2, -1, 3)
    assert format_vertex((-2, -1, 3)) == "-2,-1,3"
    for x in all_vertices(3)[:10]:
        assert parse_vertex(format_vertex(x)) == x
    with pytest.raises(ValueError):
        parse_vertex("1,2,2")
    with pytest.raises(ValueError):
        parse_vertex("1,2,x")


def test_validate():
    assert validate([1, -2, 3]) == (1, -2, 3)
    for bad in ([], [0, 1], [1, 1, 2], [1, 2, 4]):
        with pytest.raises(ValueError):
            validate(bad)


def test_all_vertices_counts_and_order():
    assert len(all_vertices(2)) == 8
    assert len(all_vertices(3)) == 48
    v3 = all_vertices(3)
    assert v3[0] == (-1, -2, -3)
    assert v3 == sorted(v3, key=perm.sort_key)
