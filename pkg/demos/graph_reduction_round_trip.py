"""From graphs to posets and back.

Every graph G yields a poset Pos(G) (and a rooted variant with a added
bottom) such that locally surjective homomorphisms G -> H correspond
exactly to surjective p-morphisms Pos(G) -> Pos(H).  This demo builds
the poset for the 3-vertex path, lifts a graph homomorphism to a
p-morphism, restricts it back, and cross-checks the two decision
procedures.
"""
from posetmorph import (Graph, VertexMap, build_pos, dump_poset,
                        lift_homomorphism, lshom_brute, restrict_pmorphism,
                        theorem3_check, verify_pmorphism)


def main():
    path2 = Graph(["u", "v", "w"], [("u", "v"), ("v", "w")])
    k2 = Graph(["a", "b"], [("a", "b")])
    k3 = Graph(["a", "b", "c"], [("a", "b"), ("a", "c"), ("b", "c")])

    poset, labeling = build_pos(path2, rooted=True)
    print(f"Rooted reduction poset of the 3-vertex path: "
          f"{len(poset)} elements, depth {poset.depth()}")
    print(dump_poset(poset))

    # Fold the path onto a single edge: ends map together.
    g = VertexMap(path2, k2, {"u": "a", "v": "b", "w": "a"})
    _, lab_k2 = build_pos(k2, rooted=True)
    h = lift_homomorphism(g, labeling, lab_k2)
    assert verify_pmorphism(h, require_surjective=True) is None
    print("Lifted p-morphism on the vertex layer and the sentinels:")
    for x in h.source.elements:
        if x.startswith("V:") or ":" not in x:
            print(f"  {x} -> {h(x)}")

    back = restrict_pmorphism(h, labeling, lab_k2)
    print(f"Restricting back recovers the graph map: "
          f"{back.assignment == g.assignment}")
    print()

    # The two decision procedures agree, positively and negatively.
    for G, H, name in ((path2, k2, "path -> edge"),
                       (k3, path2, "triangle -> path")):
        lshom_dec, spm_dec, agree = theorem3_check(G, H, rooted=True)
        print(f"{name}: graph decision {lshom_dec}, "
              f"poset decision {spm_dec}, agree {agree}")

    # For completeness, show the found graph witness in the positive case.
    ok, wit = lshom_brute(path2, k2)
    assert ok
    print(f"graph witness: {wit.assignment}")


if __name__ == "__main__":
    main()
