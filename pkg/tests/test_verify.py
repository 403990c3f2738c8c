import pytest

from bpn import graph as bg
from bpn.trees import STreeFamily, Tree
from bpn.verify import verify_family, verify_tree


@pytest.fixture(scope="module")
def bp3():
    return bg.build(3)


def edge(u, v):
    return (u, v) if u < v else (v, u)


def test_single_edge_ok(bp3):
    x = bp3.id_of((1, 2, 3))
    y = bp3.neighbour_ids(x)[0]
    rep = verify_tree(bp3, Tree.from_edges([edge(x, y)]))
    assert rep.ok


def test_cycle_rejected(bp3):
    # an 8-cycle cluster is itself a cycle
    c = bp3.cluster_ids()[0]
    view = bp3.cluster_view(c)
    t = Tree.from_edges(list(view.edges()))
    rep = verify_tree(bp3, t)
    assert not rep.ok
    assert any(v.kind == "not-a-tree" for v in rep.violations)


def test_phantom_edge_rejected(bp3):
    x = bp3.id_of((1, 2, 3))
    far = bp3.id_of((-3, -1, 2))
    assert not bp3.has_edge(x, far)
    rep = verify_tree(bp3, Tree.from_edges([edge(x, far)]))
    assert not rep.ok
    assert any(v.kind == "edge-not-in-graph" for v in rep.violations)


def test_disconnected_rejected(bp3):
    x = bp3.id_of((1, 2, 3))
    y = bp3.neighbour_ids(x)[0]
    u = bp3.id_of((-3, -1, 2))
    v = bp3.neighbour_ids(u)[0]
    t = Tree.from_edges([edge(x, y), edge(u, v)])
    rep = verify_tree(bp3, t)
    assert not rep.ok


def test_family_duplicate_tree_overlaps(bp3):
    x = bp3.id_of((1, 2, 3))
    y = bp3.neighbour_ids(x)[0]
    z = bp3.neighbour_ids(x)[1]
    t = Tree.from_edges([edge(x, y), edge(x, z)])
    fam = STreeFamily(frozenset({x, y}), (t, t))
    rep = verify_family(bp3, {x, y}, fam, expected_count=2)
    kinds = {v.kind for v in rep.violations}
    assert "vertex-overlap" in kinds and "edge-overlap" in kinds


def test_family_missing_terminal(bp3):
    x = bp3.id_of((1, 2, 3))
    y = bp3.neighbour_ids(x)[0]
    w = bp3.id_of((-3, -1, 2))
    t = Tree.from_edges([edge(x, y)])
    fam = STreeFamily(frozenset({x, y, w}), (t,))
    rep = verify_family(bp3, {x, y, w}, fam, expected_count=1)
    assert not rep.ok
    assert any(v.kind == "missing-terminal" and v.witness == (w,) for v in rep.violations)


def test_family_wrong_count(bp3):
    x = bp3.id_of((1, 2, 3))
    y = bp3.neighbour_ids(x)[0]
    t = Tree.from_edges([edge(x, y)])
    fam = STreeFamily(frozenset({x, y}), (t,))
    rep = verify_family(bp3, {x, y}, fam, expected_count=2)
    assert any(v.kind == "wrong-count" for v in rep.violations)


def test_single_vertex_tree_ok(bp3):
    rep = verify_tree(bp3, Tree(frozenset({5}), frozenset()))
    assert rep.ok


def test_shared_terminals_allowed(bp3):
    # two trees meeting exactly at the terminal set are a valid family
    x = bp3.id_of((1, 2, 3))
    nbrs = bp3.neighbour_ids(x)
    t1 = Tree.from_edges([edge(x, nbrs[0])])
    t2 = Tree.from_edges([edge(x, nbrs[1])])
    fam = STreeFamily(frozenset({x}), (t1, t2))
    rep = verify_family(bp3, {x}, fam)
    assert not any(v.kind == "edge-overlap" for v in rep.violations)
    # nbrs are not terminals here, so vertex overlap reports nothing shared
    assert not any(v.kind == "vertex-overlap" for v in rep.violations)
