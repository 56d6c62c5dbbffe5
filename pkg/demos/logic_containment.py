"""Deciding containment of tabular logics.

A finite poset P determines a tabular intermediate logic L(P).
L(P) is contained in L(Q) exactly when, for every minimal element y of
Q, the upset of y is a surjective p-morphic image of the upset of some
element of P.  This demo walks that criterion on small posets.
"""
from posetmorph import Poset, dump_map, logcontain, verify_pmorphism


def show(P, Q, label_p, label_q):
    ok, witnesses = logcontain(P, Q)
    print(f"L({label_p}) <= L({label_q})?  {'yes' if ok else 'no'}")
    if ok:
        for y, h in witnesses.items():
            assert verify_pmorphism(h, require_surjective=True) is None
            print(f"  minimal target element {y!r} is covered by the map:")
            for line in dump_map(h.assignment,
                                 order=h.source.elements).splitlines():
                print(f"    {line}")
    print()


def main():
    chain3 = Poset(["a", "b", "c"], [("a", "b"), ("b", "c")])
    chain2 = Poset(["x", "y"], [("x", "y")])
    antichain = Poset(["m", "n"], [])
    diamond = Poset(["r", "p", "q", "t"],
                    [("r", "p"), ("r", "q"), ("p", "t"), ("q", "t")])

    # A longer chain collapses onto a shorter one (map two top elements
    # together), so the 3-chain's logic is contained in the 2-chain's.
    show(chain3, chain2, "chain3", "chain2")

    # The reverse fails: no poset of depth 2 surjects onto depth 3.
    show(chain2, chain3, "chain2", "chain3")

    # A disconnected target is handled one minimal element at a time;
    # each singleton upset is reached by a constant map.
    show(chain3, antichain, "chain3", "antichain")

    # The diamond needs a source element whose upset branches.
    show(chain3, diamond, "chain3", "diamond")
    show(diamond, diamond, "diamond", "diamond")


if __name__ == "__main__":
    main()
