"""The polynomial tree-source algorithm, step by step.

When the source poset is a tree, surjective p-morphism existence is
decided bottom-up: each tree element t gets the set Q_t of target
elements whose upsets its own upset can cover.  Leaves reach exactly
the maximal targets; an internal element inherits its children's sets
and admits a deeper target q when a bipartite matching pairs the
children of t with the immediate successors of q.
"""
import random
import time

from posetmorph import (Poset, compute_qt, dump_qt, reconstruct_witness,
                        spmorph_brute, tree_spmorph, verify_pmorphism)


def main():
    # A small tree: root with two 2-element chains above it.
    T = Poset(["r", "a", "b", "c", "d"],
              [("r", "a"), ("a", "b"), ("r", "c"), ("c", "d")])
    # Target: a diamond.  Its bottom x has two immediate successors, so
    # reaching x from r requires matching them to distinct children of r.
    Q = Poset(["x", "p", "q", "t"],
              [("x", "p"), ("x", "q"), ("p", "t"), ("q", "t")])

    table = compute_qt(T, Q)
    print("Reachability table (tree element : reachable targets):")
    print(dump_qt(table))

    for (t, q), cert in sorted(table.certificates.items()):
        print(f"  certificate for ({t}, {q}): {cert}")
    print()

    ok, wit = tree_spmorph(T, Q)
    print(f"Surjective p-morphism tree -> diamond exists: {ok}")
    if ok:
        print(f"  witness: {wit.assignment}")
        assert verify_pmorphism(wit, require_surjective=True) is None

    # The witness can also be rebuilt for any table entry.
    h = reconstruct_witness(table, "a", "p")
    print(f"  upset of 'a' onto upset of 'p': {h.assignment}")
    print()

    # Scale: the table-based decision is polynomial, while brute force
    # explores exponentially many maps.
    rng = random.Random(42)
    names = [f"t{i}" for i in range(1000)]
    big_tree = Poset(names, [(names[rng.randrange(i)], names[i])
                             for i in range(1, 1000)])
    qnames = [f"q{i}" for i in range(100)]
    covers = [(qnames[0], qnames[i]) for i in range(1, 100)]
    covers += [(qnames[i], qnames[j]) for i in range(1, 100)
               for j in range(i + 1, 100) if rng.random() < 0.15]
    big_q = Poset(qnames, covers)
    start = time.perf_counter()
    decision, _ = tree_spmorph(big_tree, big_q)
    print(f"1000-node tree vs 100-element poset: {decision} "
          f"in {time.perf_counter() - start:.3f}s")

    # Sanity on a small instance: the fast path equals brute force.
    small_q = Poset(["x", "y"], [("x", "y")])
    assert tree_spmorph(T, small_q)[0] == spmorph_brute(T, small_q)[0]
    print("fast decision agrees with brute force on the small instance")


if __name__ == "__main__":
    main()
