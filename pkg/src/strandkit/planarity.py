"""Left-right planarity test with optional combinatorial embedding.

Iterative implementation of the LR algorithm (Brandes' formulation). The
boolean entry point `is_planar_edges` skips all embedding bookkeeping and is
the hot path for the realizability oracle; `planar_rotation` additionally
resolves edge sides and produces a rotation system, which callers validate
via the Euler check in `graphs.faces`.
"""

from __future__ import annotations


def is_planar_edges(n: int, edges: list[tuple[int, int]]) -> bool:
    """Planarity of the simple graph on vertices 0..n-1."""
    m = len(edges)
    if n <= 3 or m <= 3:
        return True
    if m > 3 * n - 6:
        return False
    return _LRTest(n, edges).test()


def planar_rotation(n: int, edges: list[tuple[int, int]]) -> list[list[int]] | None:
    """Rotation system witnessing planarity, or None if non-planar.

    Isolated vertices get empty rotations. The handedness of the returned
    system is not specified; callers needing a particular outer face locate
    it by face content.
    """
    if n == 0:
        return []
    if not edges:
        return [[] for _ in range(n)]
    if n > 3 and len(edges) > 3 * n - 6:
        return None
    t = _LRTest(n, edges)
    if not t.test():
        return None
    return t.embed()


class _LRTest:
    def __init__(self, n: int, edges: list[tuple[int, int]]) -> None:
        self.n = n
        self.edges = edges
        m = len(edges)
        self.adj: list[list[tuple[int, int]]] = [[] for _ in range(n)]
        for eid, (u, v) in enumerate(edges):
            self.adj[u].append((v, eid))
            self.adj[v].append((u, eid))

        self.src = [-1] * m
        self.dst = [-1] * m
        self.lowpt = [0] * m
        self.lowpt2 = [0] * m
        self.nesting_depth = [0] * m
        self.height = [-1] * n
        self.parent_edge = [-1] * n
        self.roots: list[int] = []

        # phase 2 state
        self.ref: list[int | None] = [None] * m
        self.side = [1] * m
        self.lowpt_edge = [-1] * m
        self.stack_bottom: list[object | None] = [None] * m
        self.S: list[list[list[int | None]]] = []

        self.out_edges: list[list[int]] = [[] for _ in range(n)]

    # ------------------------------------------------------------------
    # phase 1: DFS orientation
    # ------------------------------------------------------------------

    def _finish_edge(self, eid: int, v: int) -> None:
        # nesting depth of eid, then merge its lowpoints into v's parent edge
        nd = 2 * self.lowpt[eid]
        if self.lowpt2[eid] < self.height[v]:
            nd += 1
        self.nesting_depth[eid] = nd
        pe = self.parent_edge[v]
        if pe != -1:
            if self.lowpt[eid] < self.lowpt[pe]:
                self.lowpt2[pe] = min(self.lowpt[pe], self.lowpt2[eid])
                self.lowpt[pe] = self.lowpt[eid]
            elif self.lowpt[eid] > self.lowpt[pe]:
                if self.lowpt[eid] < self.lowpt2[pe]:
                    self.lowpt2[pe] = self.lowpt[eid]
            else:
                if self.lowpt2[eid] < self.lowpt2[pe]:
                    self.lowpt2[pe] = self.lowpt2[eid]

    def _orient(self) -> None:
        height = self.height
        src = self.src
        for s in range(self.n):
            if height[s] != -1:
                continue
            self.roots.append(s)
            height[s] = 0
            stack = [[s, 0]]
            while stack:
                fr = stack[-1]
                v, i = fr
                av = self.adj[v]
                if i < len(av):
                    fr[1] = i + 1
                    w, eid = av[i]
                    if src[eid] != -1:
                        continue
                    src[eid] = v
                    self.dst[eid] = w
                    self.lowpt[eid] = height[v]
                    self.lowpt2[eid] = height[v]
                    if height[w] == -1:
                        self.parent_edge[w] = eid
                        height[w] = height[v] + 1
                        stack.append([w, 0])
                    else:
                        self.lowpt[eid] = height[w]
                        self._finish_edge(eid, v)
                else:
                    stack.pop()
                    pe = self.parent_edge[v]
                    if pe != -1:
                        self._finish_edge(pe, src[pe])

    # ------------------------------------------------------------------
    # phase 2: testing via conflict pairs
    # ------------------------------------------------------------------
    # A conflict pair is [[Llow, Lhigh], [Rlow, Rhigh]] with edge ids or None.

    def _conflicting(self, interval: list[int | None], b: int) -> bool:
        return interval[1] is not None and self.lowpt[interval[1]] > self.lowpt[b]

    def _lowest(self, pair: list[list[int | None]]) -> int:
        left, right = pair
        if left[0] is None:
            return self.lowpt[right[0]]
        if right[0] is None:
            return self.lowpt[left[0]]
        return min(self.lowpt[left[0]], self.lowpt[right[0]])

    def _add_constraints(self, ei: int, e: int) -> bool:
        S = self.S
        lowpt = self.lowpt
        ref = self.ref
        P: list[list[int | None]] = [[None, None], [None, None]]
        bottom = self.stack_bottom[ei]
        while True:
            Q = S.pop()
            if Q[0][0] is not None or Q[0][1] is not None:
                Q[0], Q[1] = Q[1], Q[0]
            if Q[0][0] is not None or Q[0][1] is not None:
                return False
            if lowpt[Q[1][0]] > lowpt[e]:
                if P[1][1] is None:
                    P[1][1] = Q[1][1]
                else:
                    ref[P[1][0]] = Q[1][1]
                P[1][0] = Q[1][0]
            else:
                ref[Q[1][0]] = self.lowpt_edge[e]
            if (S[-1] if S else None) is bottom:
                break
        while S and (self._conflicting(S[-1][0], ei) or self._conflicting(S[-1][1], ei)):
            Q = S.pop()
            if self._conflicting(Q[1], ei):
                Q[0], Q[1] = Q[1], Q[0]
            if self._conflicting(Q[1], ei):
                return False
            if P[1][0] is not None:
                ref[P[1][0]] = Q[1][1]
            if Q[1][0] is not None:
                P[1][0] = Q[1][0]
            if P[0][1] is None:
                P[0][1] = Q[0][1]
            else:
                ref[P[0][0]] = Q[0][1]
            P[0][0] = Q[0][0]
        if P[0][0] is not None or P[0][1] is not None or P[1][0] is not None or P[1][1] is not None:
            S.append(P)
        return True

    def _trim_back_edges(self, u: int) -> None:
        S = self.S
        hu = self.height[u]
        while S and self._lowest(S[-1]) == hu:
            P = S.pop()
            if P[0][0] is not None:
                self.side[P[0][0]] = -1
        if S:
            P = S.pop()
            while P[0][1] is not None and self.dst[P[0][1]] == u:
                P[0][1] = self.ref[P[0][1]]
            if P[0][1] is None and P[0][0] is not None:
                self.ref[P[0][0]] = P[1][0]
                self.side[P[0][0]] = -1
                P[0][0] = None
            while P[1][1] is not None and self.dst[P[1][1]] == u:
                P[1][1] = self.ref[P[1][1]]
            if P[1][1] is None and P[1][0] is not None:
                self.ref[P[1][0]] = P[0][0]
                self.side[P[1][0]] = -1
                P[1][0] = None
            S.append(P)

    def _integrate(self, v: int, ei: int, idx: int) -> bool:
        if self.lowpt[ei] < self.height[v]:
            e = self.parent_edge[v]
            if idx == 0:
                if e != -1:
                    self.lowpt_edge[e] = self.lowpt_edge[ei]
            else:
                if not self._add_constraints(ei, e):
                    return False
        return True

    def _test_root(self, root: int) -> bool:
        out_edges = self.out_edges
        parent_edge = self.parent_edge
        dst = self.dst
        stack = [[root, 0]]
        while stack:
            fr = stack[-1]
            v, i = fr
            out = out_edges[v]
            if i < len(out):
                fr[1] = i + 1
                ei = out[i]
                self.stack_bottom[ei] = self.S[-1] if self.S else None
                w = dst[ei]
                if parent_edge[w] == ei:
                    stack.append([w, 0])
                else:
                    self.lowpt_edge[ei] = ei
                    self.S.append([[None, None], [ei, ei]])
                    if not self._integrate(v, ei, i):
                        return False
            else:
                stack.pop()
                e = parent_edge[v]
                if e != -1:
                    u = self.src[e]
                    self._trim_back_edges(u)
                    if self.lowpt[e] < self.height[u]:
                        top = self.S[-1]
                        hl = top[0][1]
                        hr = top[1][1]
                        if hl is not None and (hr is None or self.lowpt[hl] > self.lowpt[hr]):
                            self.ref[e] = hl
                        else:
                            self.ref[e] = hr
                    if stack:
                        pfr = stack[-1]
                        if not self._integrate(pfr[0], e, pfr[1] - 1):
                            return False
        return True

    def test(self) -> bool:
        self._orient()
        nd = self.nesting_depth
        for eid in range(len(self.edges)):
            v = self.src[eid]
            if v != -1:
                self.out_edges[v].append(eid)
        for v in range(self.n):
            self.out_edges[v].sort(key=nd.__getitem__)
        for root in self.roots:
            if not self._test_root(root):
                return False
        return True

    # ------------------------------------------------------------------
    # phase 3: embedding
    # ------------------------------------------------------------------

    def _resolved_side(self, e: int) -> int:
        chain = []
        ref = self.ref
        side = self.side
        while ref[e] is not None:
            chain.append(e)
            e = ref[e]
        s = side[e]
        for x in reversed(chain):
            side[x] = side[x] * s
            ref[x] = None
            s = side[x]
        return s

    def embed(self) -> list[list[int]]:
        """Rotation system; call only after test() returned True."""
        m = len(self.edges)
        signed_nd = list(self.nesting_depth)
        for eid in range(m):
            if self.src[eid] != -1:
                signed_nd[eid] = self.nesting_depth[eid] * self._resolved_side(eid)
        ordered: list[list[int]] = [[] for _ in range(self.n)]
        for v in range(self.n):
            ordered[v] = sorted(self.out_edges[v], key=signed_nd.__getitem__)

        rotation: list[list[int]] = [[] for _ in range(self.n)]
        for v in range(self.n):
            rotation[v] = [self.dst[eid] for eid in ordered[v]]

        left_ref = [-1] * self.n
        right_ref = [-1] * self.n
        dst = self.dst
        parent_edge = self.parent_edge
        side = self.side
        for root in self.roots:
            stack = [[root, 0]]
            while stack:
                fr = stack[-1]
                v, i = fr
                out = ordered[v]
                if i >= len(out):
                    stack.pop()
                    continue
                fr[1] = i + 1
                eid = out[i]
                w = dst[eid]
                if parent_edge[w] == eid:
                    rotation[w].insert(0, v)
                    left_ref[v] = w
                    right_ref[v] = w
                    stack.append([w, 0])
                else:
                    if side[eid] == 1:
                        pos = rotation[w].index(right_ref[w])
                        rotation[w].insert(pos + 1, v)
                    else:
                        pos = rotation[w].index(left_ref[w])
                        rotation[w].insert(pos, v)
                        left_ref[w] = v
        return rotation
