import p3t
import pytest


def test_geometry():
    assert p3t.orient((0, 0), (1, 0), (0, 1)) == 1
    assert not p3t.strictly_inside((1, 2), [(12, 0), (0, 12), (4, 4)])
    assert p3t.hull_triangle([(0, 0), (10, 0), (10, 10), (0, 10)]) is None
    assert p3t.segments_cross((0, 0), (3, 3), (1, 1), (2, 2))


def test_tritree_and_recognition():
    t = p3t.TriTree.new_root()
    t.stack((0, 1, 2), "d")
    t.stack((0, 2, 3), "e")
    assert len(t) == 5
    assert len(t.faces()) == 6
    assert p3t.face_tree_counts(t)[0] == [0, 1, 0]
    tree, original = p3t.recognize(t.adjacency(), (0, 1, 3))
    assert tree.size == 5
    assert sorted(original) == list(range(5))
    assert p3t.TriTree.parse(t.to_text()) == t


def test_embedding():
    X = [(0, 0), (12, 0), (0, 12), (4, 4), (1, 2)]
    t = p3t.TriTree.new_root()
    t.stack((0, 1, 2), "d")
    t.stack((0, 2, 3), "e")
    w = p3t.decide_embed_fixed(t, X, [(0, 0), (12, 0), (0, 12)])
    assert w[3] == (4, 4) and w[4] == (1, 2)
    assert p3t.place_apex([(1, 2), (2, 1), (4, 4)], [(0, 0), (12, 0), (0, 12)], (2, 0, 0)) is None
    assert (p3t.decide_embed_free(t, X) is not None) == p3t.brute_embed(t, X)
    with pytest.raises(ValueError):
        p3t.decide_embed_fixed(t, X, [(0, 0), (12, 0), (4, 4)])


def test_family_and_bounds():
    spec = p3t.family_parameters(22)
    assert (spec["F1"], spec["F2"], spec["k"]) == (1, 5, [1, 1, 1])
    assert p3t.family_size(238) == 7**38 * 3**10
    g = p3t.graph_at(22, 1700)
    assert g.size == 22 and len(g.faces()) == 40
    with pytest.raises(ValueError):
        p3t.family_parameters(21)
    b = p3t.bounds_report(238)
    assert int(b["theorem_upper_exact"]) == 5550 * 2**50
    assert b["upper_chain_holds"]
    ratio, residual, _ = p3t.corollary_ratio(1e-9)
    assert round(ratio, 3) == 1.059 and residual < 1e-9


def test_iso():
    a = p3t.graph_at(22, 5).adjacency()
    perm = list(range(22))[::-1]
    b = [[] for _ in range(22)]
    for v, row in enumerate(a):
        b[perm[v]] = sorted(perm[u] for u in row)
    assert p3t.canonical_form(a) == p3t.canonical_form(b)


def test_reports():
    r = p3t.verify("lemma7", trials=100, seed=1)
    assert r["check"] == "lemma7" and r["violations"] == 0
    c = p3t.conflict(n=22, trials=2, seed=7)
    assert c["max_embeddable"] <= 59904
    assert c == p3t.conflict(n=22, trials=2, seed=7)
    assert len(p3t.sample(10, seed=3)) == 10
