import itertools
import random

import networkx as nx
import pytest

from strandkit.graphs import Graph, RotationScheme, euler_check, is_planar
from strandkit.planarity import is_planar_edges, planar_rotation

K5 = list(itertools.combinations(range(5), 2))
K33 = [(i, 3 + j) for i in range(3) for j in range(3)]


def test_kuratowski():
    assert not is_planar_edges(5, K5)
    assert not is_planar_edges(6, K33)
    assert is_planar_edges(4, list(itertools.combinations(range(4), 2)))


def test_k5_minus_edge_planar():
    assert is_planar_edges(5, K5[1:])


def subdivide(n, edges, times, seed):
    rng = random.Random(seed)
    edges = list(edges)
    for _ in range(times):
        i = rng.randrange(len(edges))
        u, v = edges.pop(i)
        edges += [(u, n), (n, v)]
        n += 1
    return n, edges


@pytest.mark.parametrize("seed", range(6))
def test_kuratowski_subdivisions(seed):
    n, edges = subdivide(5, K5, 4 + seed, seed)
    assert not is_planar_edges(n, edges)
    n, edges = subdivide(6, K33, 4 + seed, seed)
    assert not is_planar_edges(n, edges)


@pytest.mark.parametrize("seed", range(40))
def test_random_against_networkx(seed):
    rng = random.Random(seed)
    n = rng.randint(1, 11)
    pool = list(itertools.combinations(range(n), 2))
    m = rng.randint(0, len(pool))
    edges = rng.sample(pool, m)
    G = nx.Graph()
    G.add_nodes_from(range(n))
    G.add_edges_from(edges)
    want, _ = nx.check_planarity(G)
    assert is_planar_edges(n, edges) == want
    rot = planar_rotation(n, edges)
    assert (rot is not None) == want


@pytest.mark.parametrize("seed", range(25))
def test_embedding_euler_valid(seed):
    # random connected planar graphs: spanning tree plus a few safe extras
    rng = random.Random(100 + seed)
    n = rng.randint(2, 14)
    edges = [(rng.randrange(v), v) for v in range(1, n)]
    pool = [e for e in itertools.combinations(range(n), 2) if e not in set(edges)]
    rng.shuffle(pool)
    for e in pool:
        cand = edges + [e]
        if is_planar_edges(n, cand):
            edges = cand
        if len(edges) >= 3 * n - 6:
            break
    g = Graph(n, edges)
    ok, rot = is_planar(g)
    assert ok
    assert euler_check(g, rot)
