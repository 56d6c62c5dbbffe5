import itertools

import pytest

from posetmorph import (Graph, GraphError, ParseError, VertexMap,
                        dump_graph, load_graph, lshom_brute, verify_lshom)

from conftest import all_graphs, connected_graphs, lshom_oracle


class TestGraph:
    def test_loop_rejected(self):
        with pytest.raises(GraphError):
            Graph(["a"], [("a", "a")])

    def test_unknown_endpoint(self):
        with pytest.raises(GraphError):
            Graph(["a"], [("a", "b")])

    def test_duplicate_vertex(self):
        with pytest.raises(GraphError):
            Graph(["a", "a"], [])

    def test_edges_deduplicated(self):
        g = Graph(["a", "b"], [("a", "b"), ("b", "a")])
        assert g.edges == {("a", "b")}

    def test_load_dump_round_trip(self, path2):
        assert load_graph(dump_graph(path2)) == path2

    def test_load_malformed(self):
        with pytest.raises(ParseError):
            load_graph("v a\ne a")


class TestVerify:
    def test_identity_accepts(self, path2):
        g = VertexMap(path2, path2, {v: v for v in path2.vertices})
        assert verify_lshom(g) is None

    def test_path2_onto_k2(self, path2, k2):
        g = VertexMap(path2, k2, {"u": "a", "v": "b", "w": "a"})
        assert verify_lshom(g, require_surjective=True) is None

    def test_k3_to_path2_always_rejected(self, k3, path2):
        # K3 has an odd cycle and the path is bipartite, so no
        # assignment can even be a homomorphism.
        for images in itertools.product(path2.vertices, repeat=3):
            g = VertexMap(k3, path2, dict(zip(k3.vertices, images)))
            assert verify_lshom(g, require_surjective=False) is not None

    def test_not_total(self, path2, k2):
        with pytest.raises(GraphError):
            VertexMap(path2, k2, {"u": "a"})

    def test_surjectivity_reported(self, path2, k2):
        g = VertexMap(k2, k2, {"a": "a", "b": "b"})
        assert verify_lshom(g) is None
        h = VertexMap(Graph(["x"], []), Graph(["p", "q"], []), {"x": "p"})
        assert "surjective" in verify_lshom(h, require_surjective=True)


class TestBrute:
    def test_self_map(self, path2, k3, c4):
        for g in (path2, k3, c4):
            ok, wit = lshom_brute(g, g)
            assert ok
            assert verify_lshom(wit) is None

    def test_k3_to_path2(self, k3, path2):
        assert lshom_brute(k3, path2) == (False, None)

    def test_path2_to_k2(self, path2, k2):
        ok, wit = lshom_brute(path2, k2)
        assert ok
        assert verify_lshom(wit, require_surjective=True) is None

    def test_empty_cases(self):
        empty = Graph([], [])
        one = Graph(["a"], [])
        assert lshom_brute(empty, empty)[0] is True
        assert lshom_brute(empty, one, require_surjective=True)[0] is False
        assert lshom_brute(empty, one, require_surjective=False)[0] is True
        assert lshom_brute(one, empty)[0] is False

    def test_agrees_with_enumeration_oracle(self):
        gs = list(all_graphs(3, prefix="g"))
        hs = list(all_graphs(3, prefix="h"))
        for G in gs:
            for H in hs:
                for surj in (True, False):
                    got, wit = lshom_brute(G, H, require_surjective=surj)
                    assert got == lshom_oracle(G, H, surj)
                    if got and wit is not None:
                        assert verify_lshom(wit, surj) is None

    def test_agrees_with_oracle_four_vertices(self):
        # Spot the larger side exhaustively against small targets.
        hs = list(all_graphs(2, prefix="h"))
        for G in all_graphs(4, prefix="g"):
            for H in hs:
                got, _ = lshom_brute(G, H)
                assert got == lshom_oracle(G, H)

    def test_connected_target_forces_surjectivity(self):
        # For connected G and connected H, any accepted map is onto.
        for G in connected_graphs(3, prefix="g"):
            for H in connected_graphs(3, prefix="h"):
                for images in itertools.product(H.vertices,
                                                repeat=len(G.vertices)):
                    g = VertexMap(G, H, dict(zip(G.vertices, images)))
                    if verify_lshom(g, require_surjective=False) is None:
                        assert g.image() == set(H.vertices)
