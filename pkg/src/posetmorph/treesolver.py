"""Polynomial-time surjective p-morphism decision for tree sources.

For a tree T and a target poset Q we compute, bottom-up, the sets
Q_t = { q : the upset of t surjects p-morphically onto the upset of q }.
Leaves get the maximal elements of Q; an internal element inherits the
union of its children's sets and additionally admits any q outside the
union whose immediate successors all lie in it and whose successor set
can be saturated by a matching against the children.  Certificates are
recorded for every admission so that witnesses can be rebuilt without
re-running any search.
"""
from __future__ import annotations

from dataclasses import dataclass

from .order import Poset, PosetError
from .pmorph import PosetMap

LEAF = "leaf"
INHERITED = "inherited"
MATCHED = "matched"


@dataclass(frozen=True)
class MatchInstance:
    """Bipartite matching instance between the immediate successors of a
    tree element (left) and of a target element (right)."""

    left: tuple
    right: tuple
    edges: frozenset

    def __post_init__(self):
        ls, rs = set(self.left), set(self.right)
        for s, p in self.edges:
            if s not in ls or p not in rs:
                raise PosetError(f"edge ({s!r}, {p!r}) leaves the parts")


def saturating_matching(inst: MatchInstance):
    """Maximum bipartite matching via Hopcroft-Karp; succeeds iff every
    right vertex is matched.  Returns (ok, matching pairs or None)."""
    adj = {s: [] for s in inst.left}
    for p in inst.right:
        for s in inst.left:
            if (s, p) in inst.edges:
                adj[s].append(p)
    pair_l = {s: None for s in inst.left}
    pair_r = {p: None for p in inst.right}
    INF = float("inf")

    def bfs():
        dist = {}
        queue = [s for s in inst.left if pair_l[s] is None]
        for s in queue:
            dist[s] = 0
        found = False
        i = 0
        while i < len(queue):
            s = queue[i]
            i += 1
            for p in adj[s]:
                t = pair_r[p]
                if t is None:
                    found = True
                elif t not in dist:
                    dist[t] = dist[s] + 1
                    queue.append(t)
        return dist, found

    def dfs(s, dist):
        for p in adj[s]:
            t = pair_r[p]
            if t is None or (dist.get(t) == dist[s] + 1 and dfs(t, dist)):
                pair_l[s] = p
                pair_r[p] = s
                return True
        dist[s] = INF
        return False

    matched = 0
    while True:
        dist, found = bfs()
        if not found:
            break
        for s in inst.left:
            if pair_l[s] is None and dfs(s, dist):
                matched += 1
    if matched != len(inst.right):
        return False, None
    pairs = tuple((s, pair_l[s]) for s in inst.left if pair_l[s] is not None)
    return True, pairs


@dataclass
class QtTable:
    """Per-element reachable-target sets with admission certificates.

    certificates[(t, q)] is ("leaf",), ("inherited", child) or
    ("matched", ((child, target), ...)).
    """

    tree: Poset
    target: Poset
    sets: dict
    certificates: dict


def _qt_scan(T: Poset, Q: Poset, stop_q=None):
    """Bottom-up table computation.  If `stop_q` is given, stop as soon
    as it is admitted into some Q_t and report that element."""
    if not T.is_tree():
        raise PosetError("source poset is not a tree")
    if len(Q) == 0:
        raise PosetError("target poset is empty")
    order = {t: i for i, t in enumerate(T.elements)}
    # Children of t sit above it and have strictly smaller upset-chain
    # depth, so increasing depth processes every child before its parent.
    schedule = sorted(T.elements, key=lambda t: (T.depth_of(t), order[t]))
    maximal_q = tuple(Q.maximal_elements())
    q_isucc = {q: Q.isucc(q) for q in Q.elements}
    sets = {}
    certs = {}
    hit = None
    for t in schedule:
        children = T.isucc(t)
        if not children:
            sets[t] = frozenset(maximal_q)
            for q in maximal_q:
                certs[(t, q)] = (LEAF,)
        else:
            union = set()
            for s in children:
                union.update(sets[s])
            admitted = set(union)
            for q in Q.elements:
                if q in union:
                    for s in children:
                        if q in sets[s]:
                            certs[(t, q)] = (INHERITED, s)
                            break
                    continue
                succ = q_isucc[q]
                if any(p not in union for p in succ):
                    continue
                inst = MatchInstance(
                    left=children, right=succ,
                    edges=frozenset((s, p) for s in children for p in succ
                                    if p in sets[s]))
                ok, pairs = saturating_matching(inst)
                if ok:
                    admitted.add(q)
                    certs[(t, q)] = (MATCHED, pairs)
            sets[t] = frozenset(admitted)
        if stop_q is not None and stop_q in sets[t]:
            hit = t
            break
    return QtTable(tree=T, target=Q, sets=sets, certificates=certs), hit


def compute_qt(T: Poset, Q: Poset) -> QtTable:
    """Compute the complete table for every tree element (no early
    exit; decision wrappers may opt into one separately)."""
    table, _ = _qt_scan(T, Q)
    return table


def _filler(Q: Poset, q):
    """First maximal element of the upset of q, in declaration order."""
    for u in Q.elements:
        if Q.leq(q, u) and not Q.isucc(u):
            return u
    raise PosetError(f"no maximal element above {q!r}")


def reconstruct_witness(table: QtTable, t, q) -> PosetMap:
    """Assemble a surjective p-morphism from the upset of t onto the
    upset of q by following the recorded certificates."""
    if q not in table.sets.get(t, frozenset()):
        raise PosetError(f"{q!r} is not reachable from {t!r} in the table")
    T, Q = table.tree, table.target
    assignment = _assemble(table, t, q)
    return PosetMap(T.upset_poset(t), Q.upset_poset(q), assignment)


def _assemble(table: QtTable, t, q) -> dict:
    T, Q = table.tree, table.target
    cert = table.certificates[(t, q)]
    if cert[0] == LEAF:
        return {t: q}
    if cert[0] == INHERITED:
        s = cert[1]
        inner = _assemble(table, s, q)
        u = _filler(Q, q)
        out = {t: q}
        for x in T.upset(t):
            if x == t:
                continue
            out[x] = inner[x] if T.leq(s, x) else u
        return out
    pairs = cert[1]
    matched = {s: p for s, p in pairs}
    u = _filler(Q, q)
    out = {t: q}
    for s in T.isucc(t):
        if s in matched:
            out.update(_assemble(table, s, matched[s]))
        else:
            for x in T.upset(s):
                out[x] = u
    return out


def tree_spmorph(T: Poset, Q: Poset, early_exit: bool = False):
    """Decide whether a surjective p-morphism T -> Q exists, T a tree.

    No whenever Q is not rooted; otherwise yes iff the root of Q is
    reachable from the root of T.  With `early_exit` the table scan
    stops at the first element reaching the root of Q and the witness is
    extended down to the root of T (reachability is monotone downwards).
    """
    if not T.is_tree():
        raise PosetError("source poset is not a tree")
    root_q = Q.root() if len(Q) else None
    if root_q is None:
        return False, None
    root_t = T.root()
    if early_exit:
        table, hit = _qt_scan(T, Q, stop_q=root_q)
        if hit is None:
            return False, None
        inner = _assemble(table, hit, root_q)
        u = _filler(Q, root_q)
        assignment = {}
        for x in T.elements:
            if T.leq(hit, x):
                assignment[x] = inner[x]
            elif T.leq(x, hit):
                assignment[x] = root_q
            else:
                assignment[x] = u
        return True, PosetMap(T, Q, assignment)
    table = compute_qt(T, Q)
    if root_q not in table.sets[root_t]:
        return False, None
    return True, reconstruct_witness(table, root_t, root_q)


def tree_logcontain(T: Poset, Q: Poset):
    """Decide containment of the tabular logics for a tree source.

    Yes iff every minimal element of Q is reachable from the root of T
    (membership anywhere implies membership at the root).  Witnesses are
    rebuilt per minimal element of Q.
    """
    if not T.is_tree():
        raise PosetError("source poset is not a tree")
    if len(Q) == 0:
        raise PosetError("target poset is empty")
    table = compute_qt(T, Q)
    root_t = T.root()
    witnesses = {}
    for y in Q.minimal_elements():
        if y not in table.sets[root_t]:
            return False, None
        witnesses[y] = reconstruct_witness(table, root_t, y)
    return True, witnesses


def dump_qt(table: QtTable) -> str:
    """Table dump: `qt ELEMENT : q1 q2 ...` per tree element, elements
    in declaration order, targets in target declaration order."""
    lines = []
    for t in table.tree.elements:
        members = [q for q in table.target.elements if q in table.sets[t]]
        lines.append(f"qt {t} : " + " ".join(members))
    return "\n".join(lines) + "\n"
