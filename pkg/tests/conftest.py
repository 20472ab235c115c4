import random

import pytest

from strandkit.families import random_maximal_outerplanar, random_partial_2tree
from strandkit.graphs import Graph, is_outerplanar


def mop_corpus(count: int, n_lo: int, n_hi: int, seed: int = 0):
    """Seeded maximal outer-planar corpus with sizes spread over [n_lo, n_hi]."""
    out = []
    for i in range(count):
        n = n_lo + ((n_hi - n_lo) * i) // max(1, count - 1)
        out.append((n, seed + i, random_maximal_outerplanar(n, seed=seed + i)))
    return out


def p2t_corpus(count: int, n_lo: int, n_hi: int, seed: int = 0):
    rng = random.Random(seed)
    out = []
    for i in range(count):
        n = n_lo + ((n_hi - n_lo) * i) // max(1, count - 1)
        d = rng.choice([0.4, 0.6, 0.8, 1.0])
        out.append((n, seed + i, random_partial_2tree(n, d, seed=seed + i)))
    return out


def outerplanar_corpus(count: int, n_hi: int, seed: int = 0) -> list[Graph]:
    """Random connected outer-planar graphs (including trees and graphs with
    cut vertices), filtered from random partial 2-trees."""
    rng = random.Random(seed)
    out = []
    s = 0
    while len(out) < count:
        n = rng.randint(2, n_hi)
        g = random_partial_2tree(n, rng.choice([0.3, 0.5, 0.8, 1.0]), seed=seed * 1000 + s)
        s += 1
        if is_outerplanar(g)[0]:
            out.append(g)
    return out


def atlas_connected_outerplanar(max_n: int = 7) -> list[Graph]:
    """All connected outer-planar graphs on at most max_n vertices, one per
    isomorphism class (networkx atlas)."""
    import networkx as nx
    from networkx.generators.atlas import graph_atlas_g

    out = []
    for G in graph_atlas_g():
        n = G.number_of_nodes()
        if n < 2 or n > max_n:
            continue
        if not nx.is_connected(G):
            continue
        g = Graph(n, [tuple(e) for e in G.edges()])
        if is_outerplanar(g)[0]:
            out.append(g)
    return out
