import itertools
import random

import pytest

from posetmorph import (Graph, Poset, PosetMap, VertexMap, verify_lshom,
                        verify_pmorphism)


# -- standard fixtures ---------------------------------------------------

@pytest.fixture
def path2():
    return Graph(["u", "v", "w"], [("u", "v"), ("v", "w")])


@pytest.fixture
def k2():
    return Graph(["a", "b"], [("a", "b")])


@pytest.fixture
def k3():
    return Graph(["a", "b", "c"], [("a", "b"), ("b", "c"), ("a", "c")])


@pytest.fixture
def k4():
    verts = ["a", "b", "c", "d"]
    return Graph(verts, list(itertools.combinations(verts, 2)))


@pytest.fixture
def c4():
    return Graph(["a", "b", "c", "d"],
                 [("a", "b"), ("b", "c"), ("c", "d"), ("d", "a")])


@pytest.fixture
def chain3():
    return Poset(["a", "b", "c"], [("a", "b"), ("b", "c")])


@pytest.fixture
def chain2():
    return Poset(["a", "b"], [("a", "b")])


# -- random instance generators ------------------------------------------

def random_poset(rng, n, p=0.35, prefix="x"):
    names = [f"{prefix}{i}" for i in range(n)]
    pairs = [(names[i], names[j])
             for i in range(n) for j in range(i + 1, n)
             if rng.random() < p]
    return Poset(names, pairs)


def random_rooted_poset(rng, n, p=0.35, prefix="x"):
    assert n >= 1
    names = [f"{prefix}{i}" for i in range(n)]
    pairs = [(names[0], names[i]) for i in range(1, n)]
    pairs += [(names[i], names[j])
              for i in range(1, n) for j in range(i + 1, n)
              if rng.random() < p]
    return Poset(names, pairs)


def random_tree_poset(rng, n, prefix="t"):
    names = [f"{prefix}{i}" for i in range(n)]
    pairs = [(names[rng.randrange(i)], names[i]) for i in range(1, n)]
    return Poset(names, pairs)


def all_graphs(max_n, prefix="g"):
    for n in range(max_n + 1):
        verts = [f"{prefix}{i}" for i in range(n)]
        pairs = list(itertools.combinations(verts, 2))
        for sel in range(1 << len(pairs)):
            yield Graph(verts, [pairs[i] for i in range(len(pairs))
                                if sel >> i & 1])


def connected_graphs(max_n, prefix="h"):
    for g in all_graphs(max_n, prefix):
        if g.vertices and g.is_connected():
            yield g


# -- independent oracles --------------------------------------------------

def spmorph_oracle(P, Q):
    """Enumerate every total map and verify it post hoc."""
    if len(Q) == 0:
        return len(P) == 0
    for images in itertools.product(Q.elements, repeat=len(P)):
        h = PosetMap(P, Q, dict(zip(P.elements, images)))
        if verify_pmorphism(h, require_surjective=True) is None:
            return True
    return False


def lshom_oracle(G, H, require_surjective=True):
    if len(H) == 0:
        return len(G) == 0
    if len(G) == 0:
        return not require_surjective
    for images in itertools.product(H.vertices, repeat=len(G)):
        g = VertexMap(G, H, dict(zip(G.vertices, images)))
        if verify_lshom(g, require_surjective) is None:
            return True
    return False


def fresh_rng(seed):
    return random.Random(seed)
