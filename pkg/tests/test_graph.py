import math

import pytest

from bpn import graph as bg
from bpn import perm


def factorial_counts(n):
    return (2**n) * math.factorial(n), n * math.factorial(n) * 2 ** (n - 1)


@pytest.fixture(scope="module")
def bp2():
    return bg.build(2)


@pytest.fixture(scope="module")
def bp3():
    return bg.build(3)


@pytest.fixture(scope="module")
def bp4():
    return bg.build(4)


def test_rejects_small_n():
    with pytest.raises(ValueError):
        bg.build(1)


def test_respects_ceiling(monkeypatch):
    with pytest.raises(ValueError):
        bg.build(4, n_max=3)
    monkeypatch.setenv("BPN_MAX_N", "3")
    with pytest.raises(ValueError):
        bg.build(4)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_counts_and_regularity(n, request):
    g = request.getfixturevalue(f"bp{n}")
    nv, ne = factorial_counts(n)
    assert g.num_vertices == nv
    assert g.num_edges == ne
    assert sum(len(g.neighbour_ids(v)) for v in range(nv)) == 2 * ne
    assert all(len(g.neighbour_ids(v)) == n for v in range(nv))
    assert len(list(g.edges())) == ne


def test_bp2_is_an_eight_cycle(bp2):
    assert bp2.num_vertices == 8
    assert bp2.num_edges == 8
    assert all(len(bp2.neighbour_ids(v)) == 2 for v in range(8))
    assert bp2.subgraph(None).is_connected()


def test_cluster_decomposition(bp3):
    ids = bp3.cluster_ids()
    assert len(ids) == 6
    sizes = {c: len(bp3.cluster_vertices(c)) for c in ids}
    assert set(sizes.values()) == {8}
    for c in ids:
        for v in bp3.cluster_vertices(c):
            assert bp3.vertex(v)[-1] == c


@pytest.mark.parametrize("n", [3, 4])
def test_cluster_isomorphic_to_smaller_graph(n, request):
    # relabel a cluster by dropping the fixed last symbol; adjacency must
    # match the (n-1)-dimensional network exactly
    g = request.getfixturevalue(f"bp{n}")
    small = bg.build(n - 1)
    for c in (g.cluster_ids()[0], g.cluster_ids()[-1]):
        mags = [m for m in range(1, n + 1) if m != abs(c)]
        relabel = {m: i + 1 for i, m in enumerate(mags)}

        def shrink(v):
            return tuple(
                relabel[abs(s)] * (1 if s > 0 else -1) for s in g.vertex(v)[:-1]
            )

        ids = g.cluster_vertices(c)
        assert len(ids) == small.num_vertices
        edge_images = set()
        for u in ids:
            for w in g.neighbour_ids(u):
                if g.cluster[w] == c and u < w:
                    a, b = small.id_of(shrink(u)), small.id_of(shrink(w))
                    edge_images.add((min(a, b), max(a, b)))
        assert edge_images == set(small.edges())


@pytest.mark.parametrize("n", [3, 4])
def test_cross_edge_counts(n, request):
    g = request.getfixturevalue(f"bp{n}")
    expect = math.factorial(n - 2) * 2 ** (n - 2)
    for i in g.cluster_ids():
        for j in g.cluster_ids():
            if i == j:
                continue
            found = g.cross_edges(i, j)
            assert len(found) == (0 if i == -j else expect)
            for u, v in found:
                assert {g.cluster[u], g.cluster[v]} == {i, j}
                assert g.has_edge(u, v)


def test_cross_edges_rejects_same_cluster(bp3):
    with pytest.raises(ValueError):
        bp3.cross_edges(1, 1)


def test_cross_edges_examples(bp3, bp4):
    assert bp3.cross_edges(1, -1) == []
    assert len(bp3.cross_edges(1, 2)) == 2
    assert len(bp4.cross_edges(2, -3)) == 8


@pytest.mark.parametrize("n", [2, 3, 4])
def test_girth_is_eight(n, request):
    assert request.getfixturevalue(f"bp{n}").girth() == 8


@pytest.mark.parametrize("n", [3, 4])
def test_out_neighbour_facts(n, request):
    rep = request.getfixturevalue(f"bp{n}").check_out_neighbours()
    assert rep.ok, rep.failure


def test_out_neighbour_facts_detect_corruption(bp3):
    # a doctored graph where two cluster mates point at the same vertex
    class Corrupt(bg.BurntPancakeGraph):
        def __init__(self):
            super().__init__(3)
            c = self.cluster_ids()[0]
            a, b = self.cluster_vertices(c)[:2]
            self.out = list(self.out)
            self.out[b] = self.out[a]

    rep = Corrupt().check_out_neighbours()
    assert not rep.ok
    assert "share out-neighbour" in rep.failure


@pytest.mark.parametrize("n", [3, 4])
def test_exit_mirror(n, request):
    rep = request.getfixturevalue(f"bp{n}").check_exit_mirror()
    assert rep.ok, rep.failure
    assert rep.checked > 0


def test_exit_mirror_checks_every_vertex(bp3):
    # |x_1| != |x_n| forces every exit into a foreign cluster, so the
    # own-pair exclusion never fires and all vertices are checked
    rep = bp3.check_exit_mirror()
    assert rep.checked == bp3.num_vertices


def test_pair_deletion_exhaustive_bp3(bp3):
    rep = bp3.check_pair_deletion()
    assert rep.ok, rep.failure
    # every cluster, every vertex, both in-cluster reversals
    assert rep.checked == 6 * 8 * 2


def test_pair_deletion_sampled_bp4(bp4):
    rep = bp4.check_pair_deletion(samples=200, seed=7)
    assert rep.ok, rep.failure
    assert rep.checked == 200


def test_subgraph_views(bp3):
    c = 3
    view = bp3.cluster_view(c)
    assert view.num_vertices() == 8
    assert all(len(view.neighbours(v)) == 2 for v in view.vertices())
    full = bp3.subgraph(None)
    assert full.num_vertices() == 48
    assert sum(1 for _ in full.edges()) == 72
    both = bp3.cluster_view(1, 2)
    assert both.num_vertices() == 16
    cross = [e for e in both.edges() if bp3.cluster[e[0]] != bp3.cluster[e[1]]]
    assert len(cross) == len(bp3.cross_edges(1, 2)) == 2


def test_subgraph_minus_and_connectivity(bp3):
    c = 3
    view = bp3.cluster_view(c)
    ids = bp3.cluster_vertices(c)
    assert view.is_connected()
    # removing an adjacent pair from an 8-vertex ring keeps it connected
    u = ids[0]
    v = view.neighbours(u)[0]
    assert view.minus({u, v}).is_connected()
    # removing two antipodal vertices disconnects the ring
    far = max(ids, key=lambda w: _ring_dist(view, u, w))
    cut = view.minus({u, far})
    assert not cut.is_connected()


def _ring_dist(view, src, dst):
    from collections import deque

    dist = {src: 0}
    q = deque([src])
    while q:
        x = q.popleft()
        for y in view.neighbours(x):
            if y not in dist:
                dist[y] = dist[x] + 1
                q.append(y)
    return dist.get(dst, -1)


def test_normalize_roundtrip(bp3):
    anchor = bp3.id_of((-3, -2, -1))
    fwd, inv = bp3.normalize(anchor)
    assert bp3.apply_auto(fwd, anchor) == bp3.id_of((1, 2, 3))
    for v in range(0, 48, 5):
        assert bp3.apply_auto(inv, bp3.apply_auto(fwd, v)) == v
    # edge preservation under the forward map, exhaustively
    for u, v in bp3.edges():
        assert bp3.has_edge(bp3.apply_auto(fwd, u), bp3.apply_auto(fwd, v))


def test_normalize_identity_anchor(bp3):
    fwd, inv = bp3.normalize((1, 2, 3))
    assert fwd == (1, 2, 3) == inv
