"""The graph-to-poset reduction and its companion translations.

For a graph G we build a poset over three copies of the vertex set
(v, v_a, v_b), two copies of the edge set (e_1, e_2) and four sentinel
elements TOP1, TOP2, INFA, INFB that rule out degenerate morphisms;
optionally an added root BOT.  A surjective locally surjective
homomorphism G -> H exists iff a surjective p-morphism exists between
the constructed posets, and both directions of that translation are
implemented: restricting a p-morphism to the vertex layer, and lifting a
graph homomorphism pointwise.

Also included: the path-decomposition transformer (pathwidth k yields a
decomposition of the cover graph of width at most 3k+7, or 3k+8 with the
root) and the successor-count bound checker for degree-bounded graphs.
"""
from __future__ import annotations

import warnings
from dataclasses import dataclass, field

from .graphs import Graph, GraphError, VertexMap, verify_lshom, lshom_brute
from .order import ParseError, Poset, PosetError
from .pmorph import PosetMap, spmorph_brute, verify_pmorphism

TOP1 = "TOP1"
TOP2 = "TOP2"
INFA = "INFA"
INFB = "INFB"
BOT = "BOT"
SENTINELS = (TOP1, TOP2, INFA, INFB)


def vertex_name(v: str) -> str:
    return f"V:{v}"


def copy_a_name(v: str) -> str:
    return f"Va:{v}"


def copy_b_name(v: str) -> str:
    return f"Vb:{v}"


def edge_name(u: str, v: str, i: int) -> str:
    return f"E{i}:{u}|{v}"


@dataclass(frozen=True)
class PosLabeling:
    """Bookkeeping for a constructed reduction poset.

    `edges` holds each graph edge as the ordered pair used for naming
    (declaration order of the endpoints).  `below_pairs` maps an ordered
    vertex pair (x, y) to the edge-copy element that has x_a and y_b
    below it; this is the orientation table consulted when lifting a
    graph homomorphism.
    """

    graph: Graph
    rooted: bool
    edges: tuple
    below_pairs: dict
    poset: Poset = field(compare=False)

    def copy_with_below(self, x: str, y: str) -> str:
        try:
            return self.below_pairs[(x, y)]
        except KeyError:
            raise PosetError(
                f"no edge copy with {x}_a, {y}_b below it") from None


def build_pos(G: Graph, rooted: bool = False):
    """Construct the reduction poset of G, with its labeling.

    Carrier size is 3|V| + 2|E| + 4, plus 1 when rooted.  The canonical
    orientation puts u_a, v_b below the first copy of an edge uv with u
    before v in declaration order, and u_b, v_a below the second.
    """
    order = {v: i for i, v in enumerate(G.vertices)}
    edges = tuple(sorted(((u, v) if order[u] < order[v] else (v, u)
                          for u, v in G.edges),
                         key=lambda e: (order[e[0]], order[e[1]])))
    elements = []
    if rooted:
        elements.append(BOT)
    elements += [vertex_name(v) for v in G.vertices]
    elements += [copy_a_name(v) for v in G.vertices]
    elements += [copy_b_name(v) for v in G.vertices]
    for u, v in edges:
        elements.append(edge_name(u, v, 1))
        elements.append(edge_name(u, v, 2))
    elements += list(SENTINELS)

    covers = []
    below_pairs = {}
    for v in G.vertices:
        covers.append((vertex_name(v), copy_a_name(v)))
        covers.append((vertex_name(v), copy_b_name(v)))
        covers.append((copy_a_name(v), INFA))
        covers.append((copy_b_name(v), INFB))
        if G.degree(v) == 0:
            covers.append((copy_a_name(v), TOP1))
            covers.append((copy_b_name(v), TOP1))
            covers.append((copy_a_name(v), TOP2))
            covers.append((copy_b_name(v), TOP2))
    for u, v in edges:
        e1 = edge_name(u, v, 1)
        e2 = edge_name(u, v, 2)
        covers += [(e1, TOP1), (e1, TOP2), (e2, TOP1), (e2, TOP2)]
        covers += [(copy_a_name(u), e1), (copy_b_name(v), e1)]
        covers += [(copy_b_name(u), e2), (copy_a_name(v), e2)]
        below_pairs[(u, v)] = e1
        below_pairs[(v, u)] = e2
    if rooted:
        if G.vertices:
            covers += [(BOT, vertex_name(v)) for v in G.vertices]
        else:
            covers += [(BOT, s) for s in SENTINELS]
    if not G.vertices:
        warnings.warn("reduction poset of an empty graph is degenerate; "
                      "the correspondence theorems assume >= 1 vertex",
                      stacklevel=2)
    poset = Poset(elements, covers)
    labeling = PosLabeling(graph=G, rooted=rooted, edges=edges,
                           below_pairs=below_pairs, poset=poset)
    return poset, labeling


def labeling_from_poset(P: Poset) -> PosLabeling:
    """Reconstruct the labeling of a reduction poset from its reserved
    element names and emitted covers (orientation included)."""
    vertices = []
    raw_edges = []
    rooted = False
    for e in P.elements:
        if e == BOT:
            rooted = True
        elif e.startswith("V:"):
            vertices.append(e[2:])
        elif e.startswith("E1:"):
            u, sep, v = e[3:].partition("|")
            if not sep:
                raise ParseError(f"malformed edge-copy name: {e!r}")
            raw_edges.append((u, v))
    G = Graph(vertices, raw_edges)
    below_pairs = {}
    for u, v in raw_edges:
        for i in (1, 2):
            name = edge_name(u, v, i)
            lows = set(P.ipred(name)) - {vertex_name(u), vertex_name(v)}
            if lows == {copy_a_name(u), copy_b_name(v)}:
                below_pairs[(u, v)] = name
            elif lows == {copy_b_name(u), copy_a_name(v)}:
                below_pairs[(v, u)] = name
            else:
                raise ParseError(
                    f"covers below {name!r} do not match the reduction "
                    f"construction: {sorted(lows)}")
    order = {v: i for i, v in enumerate(vertices)}
    edges = tuple(sorted(raw_edges, key=lambda e: (order[e[0]], order[e[1]])))
    return PosLabeling(graph=G, rooted=rooted, edges=edges,
                       below_pairs=below_pairs, poset=P)


def lift_homomorphism(g: VertexMap, lab_g: PosLabeling,
                      lab_h: PosLabeling) -> PosetMap:
    """Extend a surjective locally surjective homomorphism to a
    surjective p-morphism between the reduction posets.

    Sentinels (and the root, when present) are fixed pointwise; vertex
    layers map through g; an edge copy with u_a, v_b below it maps to
    the copy of g(u)g(v) that has g(u)_a, g(v)_b below it.
    """
    if not lab_h.graph.vertices:
        raise GraphError("lift target graph must have at least one vertex")
    bad = verify_lshom(g, require_surjective=True)
    if bad is not None:
        raise GraphError(f"map is not a surjective locally surjective "
                         f"homomorphism: {bad}")
    a = {s: s for s in SENTINELS}
    if lab_g.rooted != lab_h.rooted:
        raise PosetError("rooted/unrooted labelings cannot be mixed")
    if lab_g.rooted:
        a[BOT] = BOT
    for v in lab_g.graph.vertices:
        w = g(v)
        a[vertex_name(v)] = vertex_name(w)
        a[copy_a_name(v)] = copy_a_name(w)
        a[copy_b_name(v)] = copy_b_name(w)
    for u, v in lab_g.edges:
        a[lab_g.copy_with_below(u, v)] = lab_h.copy_with_below(g(u), g(v))
        a[lab_g.copy_with_below(v, u)] = lab_h.copy_with_below(g(v), g(u))
    h = PosetMap(lab_g.poset, lab_h.poset, a)
    bad = verify_pmorphism(h, require_surjective=True)
    assert bad is None, f"internal error: lifted map rejected: {bad}"
    return h


def restrict_pmorphism(h: PosetMap, lab_g: PosLabeling,
                       lab_h: PosLabeling) -> VertexMap:
    """Restrict a surjective p-morphism between reduction posets to the
    vertex layer, yielding a surjective locally surjective homomorphism.
    """
    bad = verify_pmorphism(h, require_surjective=True)
    if bad is not None:
        raise PosetError(f"map is not a surjective p-morphism: {bad}")
    a = {}
    for v in lab_g.graph.vertices:
        img = h(vertex_name(v))
        if not img.startswith("V:"):
            raise PosetError(
                f"integrity error: vertex element {vertex_name(v)!r} maps "
                f"to {img!r} outside the vertex layer")
        a[v] = img[2:]
    g = VertexMap(lab_g.graph, lab_h.graph, a)
    bad = verify_lshom(g, require_surjective=True)
    assert bad is None, f"internal error: restriction rejected: {bad}"
    return g


def theorem3_check(G: Graph, H: Graph, rooted: bool = False):
    """Decide LSHom(G, H) directly and through the reduction posets.

    Returns (lshom decision, spmorph decision, agreement flag); the two
    decisions must agree whenever H has at least one vertex.
    """
    if not H.vertices:
        raise GraphError("correspondence requires H with >= 1 vertex")
    lshom_dec, _ = lshom_brute(G, H, require_surjective=True)
    P, _ = build_pos(G, rooted)
    Q, _ = build_pos(H, rooted)
    spm_dec, _ = spmorph_brute(P, Q)
    return lshom_dec, spm_dec, lshom_dec == spm_dec


def reserved_label_isomorphism(P: Poset, Q: Poset):
    """Isomorphism between two reduction posets that preserves the
    reserved-name scheme: fixed on every element except that the two
    copies of an edge may be exchanged (the construction leaves the copy
    index free).  Returns the element bijection, or None.
    """
    if sorted(P.elements) != sorted(Q.elements):
        return None
    edges = {e[3:] for e in P.elements if e.startswith("E1:")}
    mapping = {e: e for e in P.elements}
    for key in edges:
        e1, e2 = f"E1:{key}", f"E2:{key}"
        low_p = frozenset(P.ipred(e1))
        if low_p == frozenset(Q.ipred(e1)):
            continue
        if low_p == frozenset(Q.ipred(e2)):
            mapping[e1], mapping[e2] = e2, e1
        else:
            return None
    translated = {(mapping[a], mapping[b]) for a, b in P.covers}
    if translated != set(Q.covers):
        return None
    return mapping


def check_degree_bounds(G: Graph, rooted: bool = False) -> dict:
    """Scan the constructed poset for the successor bounds implied by
    the maximum degree k of G: at most k+1 immediate successors and at
    most 2k+6 strict successors per element (root excluded)."""
    k = G.max_degree()
    if k < 2:
        raise GraphError("degree bound check requires max degree >= 2")
    P, _ = build_pos(G, rooted)
    max_isucc = 0
    max_succ = 0
    for x in P.elements:
        if x == BOT:
            continue
        max_isucc = max(max_isucc, len(P.isucc(x)))
        max_succ = max(max_succ, P.upset_size(x) - 1)
    return {
        "max_degree": k,
        "max_immediate_successors": max_isucc,
        "immediate_bound": k + 1,
        "max_strict_successors": max_succ,
        "total_bound": 2 * k + 6,
        "ok": max_isucc <= k + 1 and max_succ <= 2 * k + 6,
    }


# -- path decompositions -----------------------------------------------

@dataclass(frozen=True)
class PathDecomposition:
    """Ordered sequence of bags over some vertex set."""

    bags: tuple

    def width(self) -> int:
        return max((len(b) for b in self.bags), default=0) - 1

    def validate(self, vertices, edges):
        """Check coverage of vertices and edges and contiguity of every
        vertex's bag interval.  Returns None or a violation message."""
        vertices = list(vertices)
        vset = set(vertices)
        for b in self.bags:
            for x in b:
                if x not in vset:
                    return f"bag member {x!r} is not a vertex"
        occur = {v: [i for i, b in enumerate(self.bags) if v in b]
                 for v in vertices}
        for v in vertices:
            idx = occur[v]
            if not idx:
                return f"vertex {v!r} occurs in no bag"
            if idx[-1] - idx[0] + 1 != len(idx):
                return f"occurrences of {v!r} are not contiguous"
        for u, v in edges:
            if not any(u in b and v in b for b in self.bags):
                return f"edge {u!r}-{v!r} is contained in no bag"
        return None


def transform_pathdecomp(G: Graph, D: PathDecomposition,
                         rooted: bool = False):
    """Turn a path decomposition of G into one of the cover graph of the
    reduction poset.

    For each edge, two bags augmented with the edge copies are inserted
    after the first original bag containing both endpoints; then every
    vertex entry is tripled (v, v_a, v_b); then the four sentinels (and
    the root, when requested) are added to every bag.  Width at most
    3k+7 for input width k (3k+8 rooted).
    """
    bad = D.validate(G.vertices, G.edges)
    if bad is not None:
        raise GraphError(f"invalid path decomposition: {bad}")
    if D.width() < 1:
        raise GraphError("path decomposition width must be >= 1")
    poset, lab = build_pos(G, rooted)
    order = {v: i for i, v in enumerate(G.vertices)}
    host = {}
    for u, v in lab.edges:
        for i, b in enumerate(D.bags):
            if u in b and v in b:
                host.setdefault(i, []).append((u, v))
                break
    extra = [BOT] if rooted else []
    out = []
    for i, b in enumerate(D.bags):
        base = set()
        for v in b:
            base.update((vertex_name(v), copy_a_name(v), copy_b_name(v)))
        base.update(SENTINELS)
        base.update(extra)
        out.append(frozenset(base))
        for u, v in host.get(i, ()):
            out.append(frozenset(base | {edge_name(u, v, 1)}))
            out.append(frozenset(base | {edge_name(u, v, 2)}))
    result = PathDecomposition(tuple(out))
    cover_edges = [(a, b) for a, b in poset.covers]
    bad = result.validate(poset.elements, cover_edges)
    assert bad is None, f"internal error: transformed decomposition: {bad}"
    return result


# -- file format -------------------------------------------------------
#
# One `bag NAME NAME ...` line per bag, in path order.

def load_pathdecomp(text: str) -> PathDecomposition:
    bags = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if parts[0] != "bag":
            raise ParseError(f"line {lineno}: malformed bag line: {raw!r}")
        bags.append(frozenset(parts[1:]))
    return PathDecomposition(tuple(bags))


def dump_pathdecomp(D: PathDecomposition) -> str:
    lines = ["bag " + " ".join(sorted(b)) for b in D.bags]
    return "\n".join(lines) + "\n"
