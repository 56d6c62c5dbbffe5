"""Finite simple graphs and locally surjective homomorphisms.

Includes a verifier for the homomorphism property (HP) and the backward
property (BP) of a vertex map, and a brute-force decision procedure for
the existence of a (surjective) locally surjective homomorphism, used as
an oracle by the reduction machinery.
"""
from __future__ import annotations

from dataclasses import dataclass, field

from .order import ParseError


class GraphError(ValueError):
    """Invalid graph construction or query."""


class Graph:
    """Immutable finite simple undirected graph."""

    def __init__(self, vertices, edges=()):
        verts = []
        seen = set()
        for v in vertices:
            v = str(v)
            if v in seen:
                raise GraphError(f"duplicate vertex declaration: {v!r}")
            seen.add(v)
            verts.append(v)
        self.vertices = tuple(verts)
        canon = set()
        for u, v in edges:
            if u not in seen or v not in seen:
                missing = u if u not in seen else v
                raise GraphError(f"edge endpoint not declared: {missing!r}")
            if u == v:
                raise GraphError(f"loop edge not allowed: {u!r}")
            canon.add((u, v) if u < v else (v, u))
        self.edges = frozenset(canon)
        adj = {v: [] for v in verts}
        for u, v in canon:
            adj[u].append(v)
            adj[v].append(u)
        order = {v: i for i, v in enumerate(verts)}
        self._adj = {v: tuple(sorted(ns, key=order.__getitem__))
                     for v, ns in adj.items()}

    def __len__(self) -> int:
        return len(self.vertices)

    def __eq__(self, other) -> bool:
        return (isinstance(other, Graph)
                and self.vertices == other.vertices
                and self.edges == other.edges)

    def __hash__(self):
        return hash((self.vertices, self.edges))

    def __repr__(self) -> str:
        return f"Graph({len(self.vertices)} vertices, {len(self.edges)} edges)"

    def neighbors(self, v) -> tuple:
        try:
            return self._adj[v]
        except KeyError:
            raise GraphError(f"unknown vertex: {v!r}") from None

    def degree(self, v) -> int:
        return len(self.neighbors(v))

    def has_edge(self, u, v) -> bool:
        return ((u, v) if u < v else (v, u)) in self.edges

    def max_degree(self) -> int:
        return max((len(ns) for ns in self._adj.values()), default=0)

    def is_connected(self) -> bool:
        if not self.vertices:
            return True
        seen = {self.vertices[0]}
        stack = [self.vertices[0]]
        while stack:
            for w in self.neighbors(stack.pop()):
                if w not in seen:
                    seen.add(w)
                    stack.append(w)
        return len(seen) == len(self.vertices)


@dataclass(frozen=True)
class VertexMap:
    """Total map between the vertex sets of two graphs."""

    source: Graph
    target: Graph
    assignment: dict

    def __post_init__(self):
        for v in self.source.vertices:
            if v not in self.assignment:
                raise GraphError(f"map is not total: missing {v!r}")
        for v, w in self.assignment.items():
            if v not in self.source._adj:
                raise GraphError(f"map references unknown source vertex: {v!r}")
            if w not in self.target._adj:
                raise GraphError(f"map references unknown target vertex: {w!r}")

    def __call__(self, v):
        return self.assignment[v]

    def image(self) -> frozenset:
        return frozenset(self.assignment[v] for v in self.source.vertices)


def verify_lshom(g: VertexMap, require_surjective: bool = True):
    """Check (HP), (BP) and optionally surjectivity.

    Returns None on accept, or a message naming the first violation
    under deterministic iteration order.
    """
    G, H, a = g.source, g.target, g.assignment
    for u in G.vertices:
        for v in G.neighbors(u):
            if not H.has_edge(a[u], a[v]):
                return (f"(HP) fails: edge {u}{v} maps to non-edge "
                        f"{a[u]}{a[v]}")
    for u in G.vertices:
        imgs = {a[v] for v in G.neighbors(u)}
        for w in H.neighbors(a[u]):
            if w not in imgs:
                return (f"(BP) fails at ({u}, {w}): no neighbor of {u} "
                        f"maps to {w}")
    if require_surjective:
        missing = [w for w in H.vertices if w not in g.image()]
        if missing:
            return f"not surjective: {missing[0]} has no preimage"
    return None


def lshom_brute(G: Graph, H: Graph, require_surjective: bool = True):
    """Backtracking search for a locally surjective homomorphism G -> H.

    Variable order: descending degree (ties by declaration order).
    Value order: declaration order of H.  Deterministic.
    """
    if not G.vertices:
        if H.vertices and require_surjective:
            return False, None
        return True, VertexMap(G, H, {})
    if not H.vertices:
        return False, None

    order = {v: i for i, v in enumerate(G.vertices)}
    variables = sorted(G.vertices, key=lambda v: (-G.degree(v), order[v]))
    pos = {v: i for i, v in enumerate(variables)}
    assign = {}
    n_h = len(H.vertices)

    def bp_ok(u) -> bool:
        imgs = {assign[v] for v in G.neighbors(u)}
        return all(w in imgs for w in H.neighbors(assign[u]))

    def search(i, covered: frozenset):
        if i == len(variables):
            if require_surjective and len(covered) != n_h:
                return None
            return dict(assign)
        u = variables[i]
        remaining = len(variables) - i
        for w in H.vertices:
            if H.degree(w) > G.degree(u):
                continue
            ok = True
            for v in G.neighbors(u):
                if v in assign and not H.has_edge(w, assign[v]):
                    ok = False
                    break
            if not ok:
                continue
            assign[u] = w
            new_cov = covered | {w}
            if not require_surjective or n_h - len(new_cov) <= remaining - 1:
                # BP is checkable for any vertex whose neighborhood is
                # now fully assigned.
                check = [x for x in (u, *G.neighbors(u))
                         if x in assign
                         and all(y in assign for y in G.neighbors(x))]
                if all(bp_ok(x) for x in check):
                    found = search(i + 1, new_cov)
                    if found is not None:
                        return found
            del assign[u]
        return None

    found = search(0, frozenset())
    if found is None:
        return False, None
    witness = VertexMap(G, H, {v: found[v] for v in G.vertices})
    bad = verify_lshom(witness, require_surjective)
    assert bad is None, f"internal error: witness rejected: {bad}"
    return True, witness


# -- file format -------------------------------------------------------
#
# `# comment`, `v NAME`, `e A B`.

def load_graph(text: str) -> Graph:
    vertices = []
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if parts[0] == "v" and len(parts) == 2:
            vertices.append(parts[1])
        elif parts[0] == "e" and len(parts) == 3:
            edges.append((parts[1], parts[2]))
        else:
            raise ParseError(f"line {lineno}: malformed graph line: {raw!r}")
    seen = set()
    for v in vertices:
        if v in seen:
            raise ParseError(f"duplicate vertex declaration: {v!r}")
        seen.add(v)
    try:
        return Graph(vertices, edges)
    except GraphError as exc:
        raise ParseError(str(exc)) from exc


def dump_graph(g: Graph) -> str:
    lines = [f"v {v}" for v in g.vertices]
    lines += [f"e {a} {b}" for a, b in sorted(g.edges)]
    return "\n".join(lines) + "\n"
