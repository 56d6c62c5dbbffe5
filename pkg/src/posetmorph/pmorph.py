"""p-morphisms between finite posets.

Provides a verifier for the homomorphism property (HP), the backward
property (BP) and surjectivity of a poset map; a backtracking decision
procedure for the existence of a surjective p-morphism; and the logic
containment decision, which reduces containment of the induced tabular
logics to surjective p-morphisms between principal upsets of the two
posets (one per minimal element of the target).
"""
from __future__ import annotations

from dataclasses import dataclass

from .order import Poset, PosetError


@dataclass(frozen=True)
class PosetMap:
    """Total map between the carriers of two posets."""

    source: Poset
    target: Poset
    assignment: dict

    def __post_init__(self):
        for x in self.source.elements:
            if x not in self.assignment:
                raise PosetError(f"map is not total: missing {x!r}")
        for x, y in self.assignment.items():
            if x not in self.source:
                raise PosetError(f"map references unknown source element: {x!r}")
            if y not in self.target:
                raise PosetError(f"map references unknown target element: {y!r}")

    def __call__(self, x):
        return self.assignment[x]

    def image(self) -> frozenset:
        return frozenset(self.assignment[x] for x in self.source.elements)


def verify_pmorphism(h: PosetMap, require_surjective: bool = True):
    """Check (HP), (BP) and optionally surjectivity of `h`.

    Returns None on accept, or a message citing the first violation
    under deterministic iteration order.
    """
    P, Q, a = h.source, h.target, h.assignment
    for x in P.elements:
        for y in P.upset(x):
            if not Q.leq(a[x], a[y]):
                return (f"(HP) fails: {x} <= {y} but "
                        f"{a[x]} <= {a[y]} does not hold")
    for x in P.elements:
        ups = P.upset(x)
        imgs = {a[z] for z in ups}
        for y in Q.upset(a[x]):
            if y not in imgs:
                return (f"(BP) fails at ({x}, {y}): no z >= {x} "
                        f"with image {y}")
    if require_surjective:
        img = h.image()
        for y in Q.elements:
            if y not in img:
                return f"not surjective: {y} has no preimage"
    return None


def spmorph_brute(P: Poset, Q: Poset):
    """Decide whether a surjective p-morphism P -> Q exists.

    Backtracking over a top-down linear extension of P (all strict
    successors of an element are assigned before it).  Candidate images
    of x are restricted to targets of no larger depth and no larger
    upset; (HP) is enforced incrementally against immediate successors,
    (BP) is checked exactly when an element is assigned (its whole upset
    is assigned by then), and surjectivity is pruned by counting and by
    target-support checks.  Deterministic given declaration orders.
    """
    m, n = len(P), len(Q)
    if n == 0:
        if m == 0:
            return True, PosetMap(P, Q, {})
        return False, None
    if m < n:
        return False, None

    pe, qe = P.elements, Q.elements
    up_p = [P._up[i] for i in range(m)]
    isucc_p = [P._isucc[i] for i in range(m)]
    depth_p = [P._depth[i] for i in range(m)]
    size_p = [u.bit_count() for u in up_p]
    up_q = [Q._up[j] for j in range(n)]
    down_q = [Q._down[j] for j in range(n)]
    depth_q = [Q._depth[j] for j in range(n)]
    size_q = [u.bit_count() for u in up_q]
    full_q = (1 << n) - 1

    dom = []
    for i in range(m):
        d = 0
        for j in range(n):
            if depth_q[j] <= depth_p[i] and size_q[j] <= size_p[i]:
                d |= 1 << j
        dom.append(d)

    def bits(mask: int):
        out = []
        while mask:
            out.append((mask & -mask).bit_length() - 1)
            mask &= mask - 1
        return out

    isucc_list = [bits(isucc_p[i]) for i in range(m)]
    ipred_list = [[] for _ in range(m)]
    for i in range(m):
        for j in isucc_list[i]:
            ipred_list[j].append(i)
    up_strict_list = [bits(up_p[i] & ~(1 << i)) for i in range(m)]

    assign = [-1] * m
    pending_succ = [len(isucc_list[i]) for i in range(m)]
    unassigned = set(range(m))

    def search(covered: int):
        if not unassigned:
            if covered == full_q:
                return {pe[i]: qe[assign[i]] for i in range(m)}
            return None
        uncovered = full_q & ~covered
        if uncovered.bit_count() > len(unassigned):
            return None
        best = -1
        best_size = n + 1
        support = 0
        for i in unassigned:
            d = dom[i]
            if d == 0:
                return None
            support |= d
            if pending_succ[i] == 0:
                size = d.bit_count()
                if size < best_size or (size == best_size and i < best):
                    best = i
                    best_size = size
        if uncovered & ~support:
            return None
        i = best
        unassigned.remove(i)
        for k in ipred_list[i]:
            pending_succ[k] -= 1
        # (BP) at i is exact here: the whole strict upset of p_i is
        # already assigned, so its image is fixed.
        img_base = 0
        for k in up_strict_list[i]:
            img_base |= 1 << assign[k]
        found = None
        for j in bits(dom[i]):
            if up_q[j] & ~(img_base | 1 << j):
                continue
            assign[i] = j
            trail = []
            dj = down_q[j]
            dead = False
            for k in ipred_list[i]:
                old = dom[k]
                new = old & dj
                if new != old:
                    dom[k] = new
                    trail.append((k, old))
                    if new == 0:
                        dead = True
            if not dead:
                found = search(covered | 1 << j)
            for k, old in trail:
                dom[k] = old
            if found is not None:
                return found
            assign[i] = -1
        for k in ipred_list[i]:
            pending_succ[k] += 1
        unassigned.add(i)
        return None

    found = search(0)
    if found is None:
        return False, None
    witness = PosetMap(P, Q, found)
    bad = verify_pmorphism(witness, require_surjective=True)
    assert bad is None, f"internal error: witness rejected: {bad}"
    return True, witness


def logcontain(P: Poset, Q: Poset):
    """Decide containment of the tabular logics of P and Q.

    Containment holds iff for every minimal y of Q, the upset of y is a
    surjective p-morphic image of the upset of some x in P.  Candidate
    sources x are scanned in decreasing upset-size order (ties by
    declaration order), skipping those that fail the depth or upset-size
    obstructions.  Tree-shaped upsets are dispatched to the polynomial
    tree solver, all others to the brute-force search.

    Returns (decision, witnesses) where witnesses maps each minimal
    element of Q to a surjective PosetMap onto its upset.
    """
    from .treesolver import tree_spmorph

    if len(P) == 0 or len(Q) == 0:
        raise PosetError("logic containment requires nonempty posets")
    order = {x: i for i, x in enumerate(P.elements)}
    candidates = sorted(P.elements,
                        key=lambda x: (-P.upset_size(x), order[x]))
    witnesses = {}
    for y in Q.minimal_elements():
        target = Q.upset_poset(y)
        found = None
        for x in candidates:
            if P.depth_of(x) < Q.depth_of(y):
                continue
            if P.upset_size(x) < Q.upset_size(y):
                continue
            source = P.upset_poset(x)
            if source.is_tree():
                ok, wit = tree_spmorph(source, target)
            else:
                ok, wit = spmorph_brute(source, target)
            if ok:
                found = wit
                break
        if found is None:
            return False, None
        witnesses[y] = found
    return True, witnesses
