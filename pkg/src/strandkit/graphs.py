"""Combinatorial graph infrastructure: simple graphs, rotation schemes, face
traversal, outer-planarity, biconnectivity augmentation, ear decomposition and
2-tree completion.

Conventions: rotations are read as CLOCKWISE cyclic neighbor orders. Faces are
traced with the next-edge rule  next(u,v) = (v, successor of u in rot[v]),
under which the outer face of an outer-plane graph is the directed walk whose
edges (u,v) have u as the counterclockwise outer neighbor of v.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import (
    GraphNotConnected,
    InconsistentRotation,
    NotBiconnected,
    NotOuterplanar,
    NotPartialTwoTree,
    RootNotOnOuterFace,
)
from . import planarity


class Graph:
    """Simple undirected graph on vertices 0..n-1."""

    __slots__ = ("n", "adj", "_adj_sets", "_edges")

    def __init__(self, n: int, edges: list[tuple[int, int]] | tuple = ()):
        self.n = n
        adj: list[list[int]] = [[] for _ in range(n)]
        seen: set[tuple[int, int]] = set()
        norm: list[tuple[int, int]] = []
        for u, v in edges:
            if u == v:
                raise ValueError(f"loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u},{v}) out of range for n={n}")
            key = (u, v) if u < v else (v, u)
            if key in seen:
                raise ValueError(f"parallel edge {key}")
            seen.add(key)
            norm.append(key)
            adj[u].append(v)
            adj[v].append(u)
        self.adj = tuple(tuple(a) for a in adj)
        self._adj_sets = tuple(frozenset(a) for a in adj)
        self._edges = tuple(norm)

    @property
    def edges(self) -> tuple[tuple[int, int], ...]:
        return self._edges

    @property
    def edge_count(self) -> int:
        return len(self._edges)

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._adj_sets[u]

    def is_connected(self) -> bool:
        if self.n <= 1:
            return True
        seen = bytearray(self.n)
        stack = [0]
        seen[0] = 1
        cnt = 1
        while stack:
            v = stack.pop()
            for w in self.adj[v]:
                if not seen[w]:
                    seen[w] = 1
                    cnt += 1
                    stack.append(w)
        return cnt == self.n

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and set(self._edges) == set(other._edges)
        )

    def __hash__(self):
        return hash((self.n, frozenset(self._edges)))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.edge_count})"


class RotationScheme:
    """Clockwise cyclic neighbor order at every vertex."""

    __slots__ = ("order", "_pos")

    def __init__(self, order):
        self.order = tuple(tuple(r) for r in order)
        self._pos = tuple({u: i for i, u in enumerate(r)} for r in self.order)

    def validate(self, g: Graph) -> None:
        if len(self.order) != g.n:
            raise InconsistentRotation("rotation has wrong vertex count")
        for v in range(g.n):
            if len(self.order[v]) != g.degree(v) or set(self.order[v]) != set(g.adj[v]):
                raise InconsistentRotation(
                    f"order[{v}] is not a permutation of the neighbors of {v}"
                )

    def position(self, v: int, u: int) -> int:
        return self._pos[v][u]

    def __repr__(self) -> str:
        return f"RotationScheme({list(map(list, self.order))})"


@dataclass(frozen=True)
class PlaneGraph:
    graph: Graph
    rot: RotationScheme


@dataclass(frozen=True)
class FaceSet:
    faces: tuple[tuple[tuple[int, int], ...], ...]
    outer_face_index: int | None = None

    def __len__(self) -> int:
        return len(self.faces)

    def face_vertices(self, i: int) -> tuple[int, ...]:
        return tuple(u for (u, _v) in self.faces[i])

    def directed_edge_face(self) -> dict[tuple[int, int], int]:
        out: dict[tuple[int, int], int] = {}
        for i, f in enumerate(self.faces):
            for de in f:
                out[de] = i
        return out


def faces(g: Graph, rot: RotationScheme, outer_face_index: int | None = None) -> FaceSet:
    """All faces of the rotation scheme by next-edge traversal."""
    rot.validate(g)
    out: list[tuple[tuple[int, int], ...]] = []
    seen: set[tuple[int, int]] = set()
    order = rot.order
    for a, b in g.edges:
        for start in ((a, b), (b, a)):
            if start in seen:
                continue
            face = []
            cu, cv = start
            while True:
                face.append((cu, cv))
                seen.add((cu, cv))
                r = order[cv]
                nxt = r[(rot.position(cv, cu) + 1) % len(r)]
                cu, cv = cv, nxt
                if (cu, cv) == start:
                    break
            out.append(tuple(face))
    return FaceSet(tuple(out), outer_face_index)


def euler_check(g: Graph, rot: RotationScheme) -> bool:
    """V - E + F == 2 for a connected graph: rot is a plane embedding."""
    if not g.is_connected():
        return False
    if g.edge_count == 0:
        return g.n == 1
    return g.n - g.edge_count + len(faces(g, rot)) == 2


def is_planar(g: Graph) -> tuple[bool, RotationScheme | None]:
    rot = planarity.planar_rotation(g.n, list(g.edges))
    if rot is None:
        return False, None
    return True, RotationScheme(rot)


def is_outerplanar(g: Graph) -> tuple[bool, RotationScheme | None, int | None]:
    """Apex test: g is outer-planar iff g plus a universal vertex is planar.

    On YES returns an outer-plane rotation of g and the index of the face
    holding every vertex.
    """
    if not g.is_connected():
        raise GraphNotConnected("is_outerplanar expects a connected graph")
    n = g.n
    if n == 1:
        return True, RotationScheme([[]]), None
    apex_edges = list(g.edges) + [(v, n) for v in range(n)]
    rot_full = planarity.planar_rotation(n + 1, apex_edges)
    if rot_full is None:
        return False, None, None
    rot = RotationScheme([[w for w in rot_full[v] if w != n] for v in range(n)])
    fs = faces(g, rot)
    for i in range(len(fs)):
        if len(set(fs.face_vertices(i))) == n:
            return True, rot, i
    raise AssertionError("apex embedding lost the outer face")


def is_biconnected(g: Graph) -> bool:
    """2-connected; K_2 counts (it is the ear-induction base case)."""
    if g.n < 2 or not g.is_connected():
        return False
    if g.n == 2:
        return g.edge_count == 1
    # iterative articulation-point detection
    disc = [-1] * g.n
    low = [0] * g.n
    parent = [-1] * g.n
    timer = 0
    root_children = 0
    stack: list[list[int]] = [[0, 0]]
    disc[0] = low[0] = timer
    timer += 1
    while stack:
        fr = stack[-1]
        v, i = fr
        if i < len(g.adj[v]):
            fr[1] = i + 1
            w = g.adj[v][i]
            if disc[w] == -1:
                parent[w] = v
                if v == 0:
                    root_children += 1
                disc[w] = low[w] = timer
                timer += 1
                stack.append([w, 0])
            elif w != parent[v]:
                if disc[w] < low[v]:
                    low[v] = disc[w]
        else:
            stack.pop()
            if stack:
                p = parent[v]
                if low[v] < low[p]:
                    low[p] = low[v]
                if p != 0 and low[v] >= disc[p]:
                    return False
    if timer != g.n:
        return False
    return root_children <= 1


def outer_walk(g: Graph, rot: RotationScheme, outer_face_index: int) -> tuple[tuple[int, int], ...]:
    return faces(g, rot).faces[outer_face_index]


def biconnect_outerplanar(g: Graph) -> tuple[Graph, list[int]]:
    """2-connected outer-planar supergraph containing g as an INDUCED subgraph.

    Augmentation adds new vertices only (one per missing hop between
    consecutive first occurrences along the outer face walk), never edges
    between existing vertices; that is what lets constructors drop the added
    curves afterwards.
    """
    if not g.is_connected():
        raise GraphNotConnected("biconnect_outerplanar expects a connected graph")
    if g.n == 1:
        return Graph(2, [(0, 1)]), [0]
    ok, rot, ofi = is_outerplanar(g)
    if not ok:
        raise NotOuterplanar("input graph is not outer-planar")
    if is_biconnected(g):
        return g, list(range(g.n))
    walk = outer_walk(g, rot, ofi)
    first_seen: list[int] = []
    seen: set[int] = set()
    for u, _v in walk:
        if u not in seen:
            seen.add(u)
            first_seen.append(u)
    assert len(first_seen) == g.n
    edges = list(g.edges)
    next_id = g.n
    for i, a in enumerate(first_seen):
        b = first_seen[(i + 1) % len(first_seen)]
        if not g.has_edge(a, b):
            edges.append((a, next_id))
            edges.append((next_id, b))
            next_id += 1
    out = Graph(next_id, edges)
    if not is_biconnected(out):
        raise AssertionError("augmentation failed to biconnect")
    return out, list(range(g.n))


@dataclass(frozen=True)
class EarDecomposition:
    """Root edge plus ears; each ear is a directed path (u, x_1, .., x_k, v)
    attached at the directed outer edge (u, v) of the graph built so far."""

    root_edge: tuple[int, int]
    ears: tuple[tuple[int, ...], ...]


def ear_decomposition(
    g: Graph,
    rot: RotationScheme,
    root: tuple[int, int] | None = None,
    outer_face_index: int | None = None,
) -> EarDecomposition:
    """Ears from the weak dual tree of inner faces, rooted at the face beside
    the root edge, emitted in DFS order."""
    if not is_biconnected(g):
        raise NotBiconnected("ear decomposition needs a 2-connected graph (or K_2)")
    fs = faces(g, rot, outer_face_index)
    if outer_face_index is None:
        cands = [i for i in range(len(fs)) if len(set(fs.face_vertices(i))) == g.n]
        if not cands:
            raise NotOuterplanar("no face contains every vertex")
        outer_face_index = cands[0]
    outer = fs.faces[outer_face_index]
    outer_undirected = {(min(u, v), max(u, v)) for (u, v) in outer}
    if root is None:
        root = min(outer_undirected)
    rkey = (min(root), max(root))
    if rkey not in outer_undirected:
        raise RootNotOnOuterFace(f"root edge {root} is not on the outer face")
    if g.n == 2:
        return EarDecomposition(rkey, ())

    edge_faces: dict[tuple[int, int], list[int]] = {}
    for i, f in enumerate(fs.faces):
        for u, v in f:
            edge_faces.setdefault((min(u, v), max(u, v)), []).append(i)
    root_face = next(i for i in edge_faces[rkey] if i != outer_face_index)

    ears: list[tuple[int, ...]] = []
    visited = {root_face}
    stack: list[tuple[int, tuple[int, int]]] = [(root_face, rkey)]
    while stack:
        fi, attach = stack.pop()
        cycle = fs.faces[fi]
        # locate the directed copy of the attach edge inside this face
        k = next(
            j for j, (u, v) in enumerate(cycle) if (min(u, v), max(u, v)) == attach
        )
        cycle = cycle[k:] + cycle[:k]
        a, b = cycle[0]
        interior = [v for (_u, v) in cycle[1:-1]]
        ears.append((a, *reversed(interior), b))
        children = []
        for u, v in cycle[1:]:
            key = (min(u, v), max(u, v))
            for fj in edge_faces[key]:
                if fj != fi and fj != outer_face_index and fj not in visited:
                    visited.add(fj)
                    children.append((fj, key))
        stack.extend(reversed(children))
    return EarDecomposition(rkey, tuple(ears))


def replay_ears(n: int, dec: EarDecomposition) -> Graph:
    """Rebuild the graph from the decomposition, checking the ear invariants."""
    edges = {dec.root_edge}
    present = set(dec.root_edge)
    for ear in dec.ears:
        u, v = ear[0], ear[-1]
        key = (min(u, v), max(u, v))
        if key not in edges:
            raise AssertionError(f"ear {ear} attaches at a missing edge")
        for x in ear[1:-1]:
            if x in present:
                raise AssertionError(f"ear {ear} reuses vertex {x}")
        for a, b in zip(ear, ear[1:]):
            k = (min(a, b), max(a, b))
            if k in edges:
                raise AssertionError(f"ear {ear} duplicates edge {k}")
            edges.add(k)
        present.update(ear)
    return Graph(n, sorted(edges))


@dataclass(frozen=True)
class EliminationOrder:
    """Order of removed degree<=2 vertices, the <=2 neighbors each attaches
    to, and the fill edges completing the input to a 2-tree."""

    order: tuple[int, ...]
    attach: tuple[tuple[int, ...], ...]
    fill_edges: tuple[tuple[int, int], ...]
    base: tuple[int, ...]


def two_tree_completion(g: Graph) -> EliminationOrder:
    """Recognize a connected partial 2-tree and complete it to a 2-tree.

    Repeatedly removes the smallest vertex of degree <= 2; a degree-2 removal
    fills the edge between its neighbors, a degree-1 removal attaches to an
    edge through its neighbor. Raises NotPartialTwoTree when stuck.
    """
    if not g.is_connected():
        raise GraphNotConnected("two_tree_completion expects a connected graph")
    n = g.n
    if n == 1:
        return EliminationOrder((), (), (), (0,))
    adj: list[set[int]] = [set(a) for a in g.adj]
    alive = set(range(n))
    order: list[int] = []
    attach: list[tuple[int, ...]] = []
    fills: list[tuple[int, int]] = []
    while len(alive) > 2:
        v = min((x for x in alive if len(adj[x]) <= 2), default=-1)
        if v == -1:
            raise NotPartialTwoTree("all remaining vertices have degree >= 3")
        nb = sorted(adj[v])
        if len(nb) == 2:
            a, b = nb
            if b not in adj[a]:
                adj[a].add(b)
                adj[b].add(a)
                fills.append((min(a, b), max(a, b)))
            attach.append((a, b))
        else:
            a = nb[0]
            b = min(x for x in adj[a] if x != v)
            fills.append((min(v, b), max(v, b)))
            attach.append((a, b))
        order.append(v)
        for w in adj[v]:
            adj[w].discard(v)
        adj[v].clear()
        alive.discard(v)
    base = tuple(sorted(alive))
    assert base[1] in adj[base[0]], "connected elimination must end at an edge"
    return EliminationOrder(tuple(order), tuple(attach), tuple(fills), base)


def completed_two_tree(g: Graph, elim: EliminationOrder) -> Graph:
    return Graph(g.n, list(g.edges) + list(elim.fill_edges))


def replay_two_tree(g: Graph, elim: EliminationOrder) -> Graph:
    """Rebuild the completed 2-tree in reverse elimination order, checking
    that every re-inserted vertex attaches to an existing edge."""
    present = set(elim.base)
    edges: set[tuple[int, int]] = set()
    if len(elim.base) == 2:
        edges.add(elim.base)
    for v, att in zip(reversed(elim.order), reversed(elim.attach)):
        a, b = att
        if a not in present or b not in present:
            raise AssertionError(f"vertex {v} attaches to absent vertices {att}")
        if (min(a, b), max(a, b)) not in edges:
            raise AssertionError(f"vertex {v} attaches to the non-edge {att}")
        edges.add((min(v, a), max(v, a)))
        edges.add((min(v, b), max(v, b)))
        present.add(v)
    return Graph(g.n, sorted(edges))
