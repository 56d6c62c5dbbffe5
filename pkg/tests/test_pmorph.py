import pytest

from posetmorph import (Poset, PosetError, PosetMap, build_pos, logcontain,
                        lshom_brute, spmorph_brute, verify_pmorphism)

from conftest import (fresh_rng, random_poset, random_rooted_poset,
                      spmorph_oracle)


class TestVerify:
    def test_identity(self, chain3):
        h = PosetMap(chain3, chain3, {x: x for x in chain3.elements})
        assert verify_pmorphism(h) is None

    def test_constant_onto_singleton(self, chain3):
        one = Poset(["z"], [])
        h = PosetMap(chain3, one, {x: "z" for x in chain3.elements})
        assert verify_pmorphism(h, require_surjective=True) is None

    def test_backward_property_violation(self):
        src = Poset(["a", "b"], [("a", "b")])
        dst = Poset(["c", "d"], [("c", "d")])
        h = PosetMap(src, dst, {"a": "c", "b": "c"})
        msg = verify_pmorphism(h, require_surjective=False)
        assert msg is not None and "(BP)" in msg and "d" in msg

    def test_not_total(self, chain3):
        with pytest.raises(PosetError):
            PosetMap(chain3, chain3, {"a": "a"})


class TestBrute:
    def test_self_map(self, chain3):
        ok, wit = spmorph_brute(chain3, chain3)
        assert ok
        assert verify_pmorphism(wit) is None

    def test_depth_obstruction(self, chain2, chain3):
        assert spmorph_brute(chain2, chain3) == (False, None)

    def test_matches_graph_level_decisions(self, path2, k2, k3):
        pk3, _ = build_pos(k3)
        ppath, _ = build_pos(path2)
        pk2, _ = build_pos(k2)
        assert spmorph_brute(pk3, ppath)[0] is lshom_brute(k3, path2)[0] is False
        assert spmorph_brute(ppath, pk2)[0] is lshom_brute(path2, k2)[0] is True

    def test_empty_cases(self):
        empty = Poset([], [])
        one = Poset(["a"], [])
        assert spmorph_brute(empty, empty)[0] is True
        assert spmorph_brute(one, empty) == (False, None)
        assert spmorph_brute(empty, one) == (False, None)

    def test_agrees_with_enumeration_oracle(self):
        rng = fresh_rng(101)
        pairs = 0
        while pairs < 200:
            P = random_poset(rng, rng.randrange(1, 6), p=0.4, prefix="p")
            Q = random_poset(rng, rng.randrange(1, 5), p=0.4, prefix="q")
            got, wit = spmorph_brute(P, Q)
            assert got == spmorph_oracle(P, Q)
            if got:
                assert verify_pmorphism(wit, require_surjective=True) is None
            pairs += 1

    def test_accepted_maps_respect_depth_and_upset_bounds(self):
        # Found witnesses satisfy the two search obstructions and send
        # maximal elements to maximal elements.
        rng = fresh_rng(103)
        found = 0
        while found < 40:
            P = random_poset(rng, rng.randrange(1, 7), p=0.45, prefix="p")
            Q = random_poset(rng, rng.randrange(1, 5), p=0.45, prefix="q")
            ok, wit = spmorph_brute(P, Q)
            if not ok:
                continue
            found += 1
            maxq = set(Q.maximal_elements())
            for x in P.elements:
                y = wit(x)
                assert Q.depth_of(y) <= P.depth_of(x)
                assert Q.upset_size(y) <= P.upset_size(x)
                if not P.isucc(x):
                    assert y in maxq


class TestLogContain:
    def test_reflexive(self, chain3, path2):
        assert logcontain(chain3, chain3)[0]
        p, _ = build_pos(path2, rooted=True)
        assert logcontain(p, p)[0]

    def test_chain3_contains_chain2(self, chain3, chain2):
        ok, wit = logcontain(chain3, chain2)
        assert ok
        (h,) = wit.values()
        assert verify_pmorphism(h, require_surjective=True) is None

    def test_chain2_does_not_contain_chain3(self, chain2, chain3):
        assert logcontain(chain2, chain3) == (False, None)

    def test_empty_rejected(self, chain3):
        with pytest.raises(PosetError):
            logcontain(Poset([], []), chain3)
        with pytest.raises(PosetError):
            logcontain(chain3, Poset([], []))

    def test_witnesses_per_minimal_element(self, chain3):
        anti = Poset(["m", "n"], [])
        ok, wit = logcontain(chain3, anti)
        assert ok
        assert set(wit) == {"m", "n"}
        for h in wit.values():
            assert verify_pmorphism(h, require_surjective=True) is None

    def test_rooted_equal_depth_matches_spmorph(self):
        rng = fresh_rng(107)
        checked = 0
        while checked < 60:
            P = random_rooted_poset(rng, rng.randrange(1, 7), prefix="p")
            Q = random_rooted_poset(rng, rng.randrange(1, 6), prefix="q")
            if P.depth() != Q.depth():
                continue
            checked += 1
            assert logcontain(P, Q)[0] == spmorph_brute(P, Q)[0]

    def test_transitive_on_random_corpus(self):
        rng = fresh_rng(109)
        posets = [random_poset(rng, rng.randrange(1, 6), prefix=f"t{i}_")
                  for i in range(12)]
        results = {}
        for i, P in enumerate(posets):
            for j, Q in enumerate(posets):
                results[i, j] = logcontain(P, Q)[0]
        for i in range(len(posets)):
            assert results[i, i]
            for j in range(len(posets)):
                for k in range(len(posets)):
                    if results[i, j] and results[j, k]:
                        assert results[i, k]
