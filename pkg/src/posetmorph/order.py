"""Finite posets over opaque string identifiers.

A poset is built from arbitrary strict-order pairs.  Internally we keep
the full reachability relation (as bitmasks over element indices) and
the cover relation, i.e. the transitive reduction.  Declaration order of
elements is preserved everywhere so that all derived output is
deterministic.
"""
from __future__ import annotations

from functools import cached_property


class PosetError(ValueError):
    """Invalid poset construction or query."""


class ParseError(PosetError):
    """Malformed poset/graph/map file content."""


class CycleError(PosetError):
    """Declared order pairs induce a cycle (including reflexive pairs)."""


class Poset:
    """Immutable finite poset.

    `elements` is the carrier in declaration order, `covers` the set of
    immediate-successor pairs (a, b) with a covered by b.  Arbitrary
    strict pairs may be supplied; the constructor closes them
    transitively and recomputes the reduction.
    """

    def __init__(self, elements, lt_pairs=()):
        elems = []
        seen = set()
        for e in elements:
            e = str(e)
            if e in seen:
                raise PosetError(f"duplicate element declaration: {e!r}")
            seen.add(e)
            elems.append(e)
        self.elements = tuple(elems)
        self._index = {e: i for i, e in enumerate(elems)}
        n = len(elems)

        direct = [set() for _ in range(n)]
        for a, b in lt_pairs:
            ia = self._require(a)
            ib = self._require(b)
            if ia == ib:
                raise CycleError(f"reflexive pair: lt {a} {b}")
            direct[ia].add(ib)

        # Kahn topological order; leftovers mean a cycle.
        indeg = [0] * n
        for i in range(n):
            for j in direct[i]:
                indeg[j] += 1
        queue = [i for i in range(n) if indeg[i] == 0]
        topo = []
        while queue:
            i = queue.pop()
            topo.append(i)
            for j in direct[i]:
                indeg[j] -= 1
                if indeg[j] == 0:
                    queue.append(j)
        if len(topo) != n:
            bad = [elems[i] for i in range(n) if indeg[i] > 0]
            raise CycleError(f"order pairs induce a cycle through: {bad}")

        # Reflexive-transitive closure as bitmasks, in reverse topo order.
        up = [0] * n
        for i in reversed(topo):
            m = 1 << i
            for j in direct[i]:
                m |= up[j]
            up[i] = m
        self._up = up
        down = [0] * n
        for i in range(n):
            mi = up[i]
            for j in range(n):
                if mi >> j & 1:
                    down[j] |= 1 << i
        self._down = down

        # Transitive reduction: b covers a iff b is a strict successor
        # not reachable through another strict successor.
        isucc = []
        for i in range(n):
            strict = up[i] & ~(1 << i)
            via = 0
            m = strict
            while m:
                j = (m & -m).bit_length() - 1
                m &= m - 1
                via |= up[j] & ~(1 << j)
            isucc.append(strict & ~via)
        self._isucc = isucc
        ipred = [0] * n
        covers = set()
        for i in range(n):
            m = isucc[i]
            while m:
                j = (m & -m).bit_length() - 1
                m &= m - 1
                ipred[j] |= 1 << i
                covers.add((elems[i], elems[j]))
        self._ipred = ipred
        self.covers = frozenset(covers)

        # depth(x) = largest chain cardinality in the upset of x.
        depth = [0] * n
        for i in topo[::-1]:
            best = 0
            m = isucc[i]
            while m:
                j = (m & -m).bit_length() - 1
                m &= m - 1
                if depth[j] > best:
                    best = depth[j]
            depth[i] = best + 1
        self._depth = depth

    def _require(self, x) -> int:
        try:
            return self._index[x]
        except KeyError:
            raise PosetError(f"unknown element: {x!r}") from None

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, x) -> bool:
        return x in self._index

    def __eq__(self, other) -> bool:
        return (isinstance(other, Poset)
                and self.elements == other.elements
                and self.covers == other.covers)

    def __hash__(self):
        return hash((self.elements, self.covers))

    def __repr__(self) -> str:
        return f"Poset({len(self.elements)} elements, {len(self.covers)} covers)"

    # -- order queries -------------------------------------------------

    def leq(self, a, b) -> bool:
        return bool(self._up[self._require(a)] >> self._require(b) & 1)

    def lt(self, a, b) -> bool:
        return a != b and self.leq(a, b)

    def _names(self, mask: int) -> tuple:
        out = []
        elems = self.elements
        while mask:
            j = (mask & -mask).bit_length() - 1
            mask &= mask - 1
            out.append(elems[j])
        return tuple(out)

    def upset(self, x) -> tuple:
        """All y with x <= y, in declaration order."""
        return self._names(self._up[self._require(x)])

    def downset(self, x) -> tuple:
        """All y with y <= x, in declaration order."""
        return self._names(self._down[self._require(x)])

    def upset_size(self, x) -> int:
        return self._up[self._require(x)].bit_count()

    def isucc(self, x) -> tuple:
        """Immediate successors (elements covering x)."""
        return self._names(self._isucc[self._require(x)])

    def ipred(self, x) -> tuple:
        """Immediate predecessors (elements covered by x)."""
        return self._names(self._ipred[self._require(x)])

    def depth_of(self, x) -> int:
        return self._depth[self._require(x)]

    def depth(self) -> int:
        return max(self._depth, default=0)

    @cached_property
    def _minimal_mask(self) -> int:
        m = 0
        for i in range(len(self.elements)):
            if self._ipred[i] == 0:
                m |= 1 << i
        return m

    def minimal_elements(self) -> tuple:
        return self._names(self._minimal_mask)

    def maximal_elements(self) -> tuple:
        m = 0
        for i in range(len(self.elements)):
            if self._isucc[i] == 0:
                m |= 1 << i
        return self._names(m)

    def root(self):
        """The least element, or None if the poset is not rooted."""
        mins = self.minimal_elements()
        if len(mins) != 1:
            return None
        return mins[0]

    def is_rooted(self) -> bool:
        return self.root() is not None

    def is_tree(self) -> bool:
        """Rooted, and every principal downset is a chain."""
        if not self.is_rooted():
            return False
        # Downsets are chains iff no element has two immediate predecessors.
        return all(p.bit_count() <= 1 for p in self._ipred)

    # -- derived posets ------------------------------------------------

    def restrict(self, members) -> "Poset":
        """Induced subposet on `members`, declaration order preserved."""
        keep = set(members)
        for m in keep:
            self._require(m)
        sub = [e for e in self.elements if e in keep]
        pairs = [(a, b) for a in sub for b in sub
                 if a != b and self.leq(a, b)]
        return Poset(sub, pairs)

    def upset_poset(self, x) -> "Poset":
        return self.restrict(self.upset(x))

    def cover_pairs(self) -> tuple:
        """Cover pairs in deterministic (declaration) order."""
        out = []
        for i, a in enumerate(self.elements):
            m = self._isucc[i]
            while m:
                j = (m & -m).bit_length() - 1
                m &= m - 1
                out.append((a, self.elements[j]))
        return tuple(out)


# -- file format -------------------------------------------------------
#
# UTF-8, line oriented:  `# comment`, `el NAME`, `lt A B`.
# The writer emits `el` lines in declaration order, then `lt` lines for
# covers only, sorted lexicographically.

def load_poset(text: str) -> Poset:
    elements = []
    pairs = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if parts[0] == "el" and len(parts) == 2:
            elements.append(parts[1])
        elif parts[0] == "lt" and len(parts) == 3:
            pairs.append((parts[1], parts[2]))
        else:
            raise ParseError(f"line {lineno}: malformed poset line: {raw!r}")
    seen = set()
    for e in elements:
        if e in seen:
            raise ParseError(f"duplicate element declaration: {e!r}")
        seen.add(e)
    for a, b in pairs:
        if a not in seen or b not in seen:
            missing = a if a not in seen else b
            raise ParseError(f"lt references undeclared element: {missing!r}")
    return Poset(elements, pairs)


def dump_poset(p: Poset) -> str:
    lines = [f"el {e}" for e in p.elements]
    lines += [f"lt {a} {b}" for a, b in sorted(p.covers)]
    return "\n".join(lines) + "\n"
