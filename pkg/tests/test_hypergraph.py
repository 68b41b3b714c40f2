import random

import pytest
from hypothesis import given, settings, strategies as st

from almost_gentle import (
    configuration_of_pair,
    cut_algebra,
    admissible_cuts,
    hypergraph_of,
    hypergraphs_isomorphic,
    invariant_signature,
    pairs_isomorphic,
    reduce_to_configuration,
    star,
    truncation_vertices,
)
from almost_gentle.generators import random_almost_gentle, relabel
from almost_gentle.hypergraph import PATH, TRUNCATION


def one_based(h, v):
    return sorted(i + 1 for i in h.hyperedge(v))


class TestTruncation:
    @pytest.mark.parametrize("name,expected", [("AG1", ["v3"]), ("LIN", ["u", "v"]), ("LOOP", []), ("AG2", ["v3"])])
    def test_examples(self, algebras, name, expected):
        assert truncation_vertices(algebras[name]) == expected

    def test_middle_vertex(self):
        from almost_gentle import parse
        p = parse("vertices u v w; arrow a u v; arrow b v w")
        assert truncation_vertices(p) == ["u", "v", "w"]


class TestHypergraphOf:
    def test_ag1(self, ag1):
        h = hypergraph_of(ag1)
        assert [x.label for x in h.vertices] == ["a1 a2 a3", "b", "c", "e_v3"]
        assert [x.kind for x in h.vertices] == [PATH, PATH, PATH, TRUNCATION]
        assert one_based(h, "v2") == [1, 2, 3]
        assert one_based(h, "v3") == [3, 4]
        # three visits of v1 along a1 a2 a3; see the note in corpus/ag1.alg
        assert one_based(h, "v1") == [1, 1, 1, 2]
        assert h.orientation[0] == ("v1", "v1", "v2", "v1")
        assert h.orientation[3] == ("v3",)

    def test_loop(self, algebras):
        h = hypergraph_of(algebras["LOOP"])
        assert len(h.vertices) == 1
        assert h.hyperedges == (("v", (0, 0)),)
        assert h.orientation == (("v", "v"),)

    def test_lin(self, algebras):
        h = hypergraph_of(algebras["LIN"])
        assert [x.label for x in h.vertices] == ["a", "e_u", "e_v"]
        assert one_based(h, "u") == [1, 2] and one_based(h, "v") == [1, 3]


class TestReduce:
    def test_ag1(self, ag1):
        cfg = reduce_to_configuration(hypergraph_of(ag1))
        assert cfg.polygon("v3") == (2,)
        assert cfg == configuration_of_pair(star(ag1).pair)

    def test_lin(self, algebras):
        cfg = reduce_to_configuration(hypergraph_of(algebras["LIN"]))
        assert cfg.polygons == (("u", (0,)), ("v", (0,)))

    def test_loop_unchanged(self, algebras):
        h = hypergraph_of(algebras["LOOP"])
        cfg = reduce_to_configuration(h)
        assert cfg.polygons == h.hyperedges and cfg.orientation == h.orientation


class TestIsomorphic:
    def test_ag1_ag2(self, ag1, ag2):
        iso = hypergraphs_isomorphic(hypergraph_of(ag1), hypergraph_of(ag2))
        assert iso is not None
        assert iso.vertex_map == {0: 0, 1: 1, 2: 2, 3: 3}
        assert iso.edge_map == {"v1": "v1", "v2": "v2", "v3": "v3"}

    def test_self(self, ag1):
        h = hypergraph_of(ag1)
        iso = hypergraphs_isomorphic(h, h)
        assert iso.vertex_map == {i: i for i in range(4)}

    def test_lin_loop(self, algebras):
        assert hypergraphs_isomorphic(hypergraph_of(algebras["LIN"]), hypergraph_of(algebras["LOOP"])) is None

    def test_reflection_is_not_rotation(self):
        from almost_gentle import parse
        # a 3-cycle read backwards has the reflected orientation
        p = parse("vertices u v w; arrow a u v; arrow b v w; arrow c w u; rel a b; rel b c; rel c a")
        h = hypergraph_of(p)
        assert hypergraphs_isomorphic(h, h) is not None

    def test_all_cuts_share_hypergraph(self, ag1):
        h = hypergraph_of(ag1)
        pair = star(ag1).pair
        for d in admissible_cuts(pair):
            assert hypergraphs_isomorphic(hypergraph_of(cut_algebra(pair, d)), h) is not None


@settings(max_examples=100, deadline=None)
@given(st.integers(0, 2**32))
def test_hypergraph_properties(seed):
    rng = random.Random(seed)
    p = random_almost_gentle(rng)
    h = hypergraph_of(p)
    for _, members in h.hyperedges:
        assert len(members) >= 2
    for x, seq in zip(h.vertices, h.orientation):
        if x.kind == PATH:
            assert len(seq) == len(x.label.split()) + 1
        else:
            assert len(seq) == 1
    assert reduce_to_configuration(h) == configuration_of_pair(star(p).pair)
    q = relabel(p, rng)
    assert hypergraphs_isomorphic(h, hypergraph_of(q)) is not None
    assert invariant_signature(h) == invariant_signature(hypergraph_of(q))


@settings(max_examples=80, deadline=None)
@given(st.integers(0, 2**32), st.integers(0, 2**32))
def test_agrees_with_pair_isomorphism(s1, s2):
    p = random_almost_gentle(random.Random(s1), max_vertices=4, max_arrows=6)
    q = random_almost_gentle(random.Random(s2), max_vertices=4, max_arrows=6)
    hp, hq = hypergraph_of(p), hypergraph_of(q)
    by_h = hypergraphs_isomorphic(hp, hq) is not None
    assert by_h == (hypergraphs_isomorphic(hp, hq, prefilter=False) is not None)
    assert by_h == (pairs_isomorphic(star(p).pair, star(q).pair) is not None)
