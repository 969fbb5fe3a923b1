"""Network-flow view of trapezoidal strip-concave arrays.

Arrays correspond bijectively (and linearly) to nonnegative flows on a
layered acyclic digraph whose layer ``i`` holds nodes ``(i, j)`` for
``j = 0..i+m``.  Edge ``e0_{ij}`` points to ``(i+1, j)`` and ``e1_{ij}`` to
``(i+1, j+1)``.  Divergences are prescribed by the boundary tuples; vertices
of the array polytope correspond to flows supported on forests, and swapping
zigzag capacities between adjacent layers exchanges two entries of the right
boundary (the Bender-Knuth involution on integer points).
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional, Sequence

from .core import (
    ConvexConfig,
    GTPattern,
    InputError,
    InternalError,
    Rat,
    StripConcaveArray,
    derivative,
    integrate,
    is_weakly_decreasing,
)


@dataclass(frozen=True)
class FlowGraph:
    """The layered digraph on nodes ``(i, j)``, ``0 <= i <= n``, ``0 <= j <= i+m``."""

    n: int
    m: int

    def __post_init__(self):
        if self.n < 1 or self.m < 0:
            raise InputError("flow graph needs n >= 1 and m >= 0")

    def nodes(self) -> Iterator[tuple]:
        for i in range(self.n + 1):
            for j in range(i + self.m + 1):
                yield (i, j)

    def edges(self) -> Iterator[tuple]:
        """Edges as ``(i, j, t)`` with ``t = 0`` for e0 and ``t = 1`` for e1."""
        for i in range(self.n):
            for j in range(i + self.m + 1):
                yield (i, j, 0)
                yield (i, j, 1)

    @staticmethod
    def head(edge: tuple) -> tuple:
        i, j, t = edge
        return (i + 1, j + t)

    @staticmethod
    def tail(edge: tuple) -> tuple:
        i, j, t = edge
        return (i, j)


@dataclass(frozen=True)
class Flow:
    """Nonnegative edge values, stored per tail row (row ``i`` has ``i+m+1`` slots)."""

    graph: FlowGraph
    e0: tuple
    e1: tuple

    def __post_init__(self):
        e0 = tuple(tuple(r) for r in self.e0)
        e1 = tuple(tuple(r) for r in self.e1)
        object.__setattr__(self, "e0", e0)
        object.__setattr__(self, "e1", e1)
        g = self.graph
        for name, rows in (("e0", e0), ("e1", e1)):
            if len(rows) != g.n:
                raise InputError(f"{name} must have n rows")
            for i, row in enumerate(rows):
                if len(row) != i + g.m + 1:
                    raise InputError(f"{name} row {i} must have {i + g.m + 1} entries")
        if any(v < 0 for rows in (e0, e1) for row in rows for v in row):
            raise InputError("flow values must be nonnegative")

    def value(self, edge: tuple) -> Rat:
        i, j, t = edge
        return (self.e1 if t else self.e0)[i][j]

    def divergence(self, node: tuple) -> Rat:
        """Inflow minus outflow at a node (void edges count as zero)."""
        i, j = node
        g = self.graph
        total = 0
        if i > 0:
            if j <= (i - 1) + g.m:
                total = total + self.e0[i - 1][j]
            if j >= 1:
                total = total + self.e1[i - 1][j - 1]
        if i < g.n:
            total = total - self.e0[i][j] - self.e1[i][j]
        return total


def boundary_of_flow(g: Flow) -> tuple:
    """Recover ``(lam, lam_bar)`` from the prescribed layer divergences."""
    n, m = g.graph.n, g.graph.m
    lam = [0] * (n + m + 1)  # lam[j] for j = 1..n+m, trailing sentinel 0
    for j in range(n + m, 0, -1):
        lam[j - 1] = lam[j] + g.divergence((n, j))
    lam_bar = [0] * (m + 1)
    for j in range(m, 0, -1):
        lam_bar[j - 1] = lam_bar[j] - g.divergence((0, j))
    return tuple(lam[:-1]), tuple(lam_bar[:-1])


def admissibility_violation(g: Flow, lam: Sequence[Rat], lam_bar: Sequence[Rat]) -> Optional[tuple]:
    """First node whose divergence deviates from the prescription, or None."""
    n, m = g.graph.n, g.graph.m
    if len(lam) != n + m or len(lam_bar) != m:
        raise InputError("boundary lengths do not match the graph")
    lam_ext = [lam[0]] + list(lam) + [0]  # lam_ext[j] = lam_j with lam_0 = lam_1
    bar_ext = [lam[0]] + list(lam_bar) + [0]
    for node in g.graph.nodes():
        i, j = node
        if i == 0 and n > 0:
            want = bar_ext[j + 1] - bar_ext[j]
        elif i == n:
            want = lam_ext[j] - lam_ext[j + 1]
        else:
            want = 0
        if g.divergence(node) != want:
            return node
    return None


def gamma(x: StripConcaveArray) -> Flow:
    """The flow image of a trapezoidal array.

    ``g(e0_{ij}) = dx_{ij} - dx_{i+1,j+1}`` and
    ``g(e1_{ij}) = dx_{i+1,j+1} - dx_{i,j+1}`` with the conventions
    ``dx_{i0} = lam_1`` and ``dx_{i,i+m+1} = 0``.
    """
    c = x.config
    if not c.is_trapezoidal:
        raise InputError("flows are defined on trapezoids; apply extend_to_trapezoid first")
    n, m = c.n, c.m
    p = derivative(x)
    lam1 = p.rows[n][0] if p.rows[n] else 0

    def dx(i, j):
        if j == 0:
            return lam1
        if j > i + m:
            return 0
        return p.rows[i][j - 1]

    e0 = tuple(
        tuple(dx(i, j) - dx(i + 1, j + 1) for j in range(i + m + 1)) for i in range(n)
    )
    e1 = tuple(
        tuple(dx(i + 1, j + 1) - dx(i, j + 1) for j in range(i + m + 1)) for i in range(n)
    )
    return Flow(FlowGraph(n, m), e0, e1)


def gamma_inv(g: Flow, lam: Sequence[Rat]) -> StripConcaveArray:
    """The array with the given lower boundary whose flow image is ``g``.

    The upper boundary implied by the divergences of ``g`` must be
    consistent with ``lam``; the left boundary is normalized to zero.
    """
    n, m = g.graph.n, g.graph.m
    lam = tuple(lam)
    _, lam_bar = boundary_of_flow(g)
    bad = admissibility_violation(g, lam, lam_bar)
    if bad is not None:
        raise InputError(f"flow is not admissible: divergence mismatch at node {bad}")
    rows = [None] * (n + 1)
    rows[n] = list(lam)
    for i in range(n - 1, -1, -1):
        rows[i] = [rows[i + 1][j - 1] - g.e1[i][j - 1] for j in range(1, i + m + 1)]
    pattern = GTPattern(ConvexConfig.trapezoid(n, m), tuple(tuple(r) for r in rows))
    return integrate(pattern)


def nu_of_flow(g: Flow) -> tuple:
    """Right-boundary differences read off the diagonal edges per layer."""
    return tuple(sum(g.e1[i - 1], 0) for i in range(1, g.graph.n + 1))


# ---------------------------------------------------------------------------
# vertex enumeration
# ---------------------------------------------------------------------------

def _distinguished_nodes(lam: tuple, lam_bar: tuple):
    """Roots on layer 0 and leaves on layer n marked by strict decreases."""
    n = len(lam) - len(lam_bar)
    m = len(lam_bar)
    bar_ext = [lam[0] if lam else 0] + list(lam_bar) + [0]
    lam_ext = list(lam) + [0]
    roots = {(0, j) for j in range(m + 1) if bar_ext[j] > bar_ext[j + 1]}
    leaves = {(n, j) for j in range(1, n + m + 1) if lam_ext[j - 1] > lam_ext[j]}
    supply = {(0, j): bar_ext[j] - bar_ext[j + 1] for j in range(m + 1)}
    demand = {(n, j): (lam_ext[j - 1] - lam_ext[j] if j >= 1 else 0) for j in range(n + m + 1)}
    return roots, leaves, supply, demand


class _DSU:
    """Union-find with an undo stack (no path compression, union by size)."""

    def __init__(self, items):
        self.parent = {v: v for v in items}
        self.size = {v: 1 for v in items}
        self.trail = []

    def find(self, v):
        while self.parent[v] != v:
            v = self.parent[v]
        return v

    def union(self, u, v):
        ru, rv = self.find(u), self.find(v)
        if ru == rv:
            return False
        if self.size[ru] < self.size[rv]:
            ru, rv = rv, ru
        self.parent[rv] = ru
        self.size[ru] += self.size[rv]
        self.trail.append(rv)
        return True

    def mark(self):
        return len(self.trail)

    def undo(self, mark):
        while len(self.trail) > mark:
            rv = self.trail.pop()
            ru = self.parent[rv]
            self.parent[rv] = rv
            self.size[ru] -= self.size[rv]


def _forest_flow(graph: FlowGraph, chosen, roots, leaves, supply, demand) -> Optional[Flow]:
    """Evaluate the unique candidate flow on a forest; None if invalid.

    Each tree is rooted anywhere; the flow on an edge equals the net demand
    of the head-side part, which must be strictly positive, and every whole
    component must balance exactly.
    """
    nodes = set()
    adj = {}
    for e in chosen:
        u, v = FlowGraph.tail(e), FlowGraph.head(e)
        nodes.update((u, v))
        adj.setdefault(u, []).append((v, e, 1))
        adj.setdefault(v, []).append((u, e, -1))

    def net(v):
        i = v[0]
        if i == graph.n:
            return demand.get(v, 0)
        if i == 0:
            return -supply.get(v, 0)
        return 0

    value = {}
    seen = set()
    for start in nodes:
        if start in seen:
            continue
        # iterative post-order over the tree component
        order = []
        parent_edge = {start: None}
        stack = [(start, None)]
        while stack:
            v, pe = stack.pop()
            seen.add(v)
            order.append(v)
            for w, e, sign in adj[v]:
                if e != pe:
                    parent_edge[w] = (e, sign)
                    stack.append((w, e))
        subtotal = {v: net(v) for v in order}
        for v in reversed(order):
            pe = parent_edge[v]
            if pe is None:
                continue
            e, sign = pe
            # v's subtree meets the rest only through e; the flow on e equals
            # the net demand of the subtree, entering when v is the head side
            flow = subtotal[v] if sign == 1 else -subtotal[v]
            value[e] = flow
            up = FlowGraph.head(e) if sign == -1 else FlowGraph.tail(e)
            subtotal[up] = subtotal[up] + subtotal[v]
        if subtotal[start] != 0:
            return None
    if any(v <= 0 for v in value.values()):
        return None
    e0 = [[0] * (i + graph.m + 1) for i in range(graph.n)]
    e1 = [[0] * (i + graph.m + 1) for i in range(graph.n)]
    for (i, j, t), v in value.items():
        (e1 if t else e0)[i][j] = v
    return Flow(graph, tuple(tuple(r) for r in e0), tuple(tuple(r) for r in e1))


def enumerate_vertices(lam: Sequence[Rat], lam_bar: Sequence[Rat]):
    """All vertices of the polytope of arrays with fixed lower and upper
    boundaries and zero left boundary.

    Backtracks over edge subsets of the flow graph, keeping the underlying
    undirected graph acyclic and pruning by node-degree balance; every
    surviving forest determines a unique candidate flow, accepted when all
    component balances are zero, all edge values are positive and the
    divergences match.  Output is sorted by edge set.
    """
    lam = tuple(lam)
    lam_bar = tuple(lam_bar)
    if not is_weakly_decreasing(lam) or not is_weakly_decreasing(lam_bar):
        raise InputError("boundary tuples must be weakly decreasing")
    n = len(lam) - len(lam_bar)
    m = len(lam_bar)
    if n < 1:
        raise InputError("lambda must be longer than lambda_bar")
    graph = FlowGraph(n, m)
    roots, leaves, supply, demand = _distinguished_nodes(lam, lam_bar)
    edges = [
        e
        for e in graph.edges()
        if (e[0] > 0 or (0, e[1]) in roots) and (e[0] < n - 1 or FlowGraph.head(e) in leaves)
    ]
    edges.sort()
    layer_end = {}  # edge index at which each tail layer is fully decided
    for idx, e in enumerate(edges):
        layer_end[e[0]] = idx + 1
    dsu = _DSU(list(graph.nodes()))
    in_deg = {v: 0 for v in graph.nodes()}
    out_deg = {v: 0 for v in graph.nodes()}
    chosen = []
    results = []

    def layer_ok(i):
        if i == 0:
            return all(out_deg[r] > 0 for r in roots)
        return all(
            (in_deg[(i, j)] > 0) == (out_deg[(i, j)] > 0) for j in range(i + m + 1)
        )

    def finish():
        if not all(in_deg[leaf] > 0 for leaf in leaves):
            return
        flow = _forest_flow(graph, chosen, roots, leaves, supply, demand)
        if flow is None:
            return
        if admissibility_violation(flow, lam, lam_bar) is not None:
            return
        results.append((tuple(chosen), flow))

    def step(idx):
        while idx < len(edges) and layer_end.get(edges[idx][0] - 1) == idx:
            if not layer_ok(edges[idx][0] - 1):
                return
            idx += 0  # boundary verified; fall through to branching
            break
        if idx == len(edges):
            if layer_ok(n - 1) if n >= 1 else True:
                finish()
            return
        e = edges[idx]
        u, v = FlowGraph.tail(e), FlowGraph.head(e)
        # exclude
        step(idx + 1)
        # include, unless it closes an undirected cycle
        mark = dsu.mark()
        if dsu.union(u, v):
            in_deg[v] += 1
            out_deg[u] += 1
            chosen.append(e)
            step(idx + 1)
            chosen.pop()
            in_deg[v] -= 1
            out_deg[u] -= 1
        dsu.undo(mark)

    step(0)
    results.sort(key=lambda item: item[0])
    return [gamma_inv(flow, lam) for _, flow in results]


# ---------------------------------------------------------------------------
# zigzag swaps
# ---------------------------------------------------------------------------

def swap_flow(g: Flow, layer: int) -> Flow:
    """Swap the capacities of the paired zigzags around a middle layer."""
    n, m = g.graph.n, g.graph.m
    i = layer
    if not 1 <= i <= n - 1:
        raise InputError("swap layer must be between 1 and n-1")
    e0 = [list(r) for r in g.e0]
    e1 = [list(r) for r in g.e1]
    for j in range(i + m):
        cap_z = min(g.e0[i - 1][j], g.e1[i][j])
        cap_zp = min(g.e1[i - 1][j], g.e0[i][j + 1])
        delta = cap_zp - cap_z
        e0[i - 1][j] += delta
        e1[i][j] += delta
        e1[i - 1][j] -= delta
        e0[i][j + 1] -= delta
    return Flow(g.graph, tuple(tuple(r) for r in e0), tuple(tuple(r) for r in e1))


def zigzag_swap(x: StripConcaveArray, layer: int) -> StripConcaveArray:
    """Exchange right-boundary entries ``layer`` and ``layer + 1``.

    Operates on the flow image and maps back; an involution that preserves
    the lower and upper boundaries and 1/k-integrality for every k.
    """
    g = gamma(x)
    lam, _ = boundary_of_flow(g)
    return gamma_inv(swap_flow(g, layer), lam)


def permute_nu(x: StripConcaveArray, pi: Sequence[int]) -> StripConcaveArray:
    """Rearrange the right boundary: entry ``k`` of the result is the
    original entry ``pi[k-1]``.

    Composed from adjacent swaps along a sorting of ``pi``.
    """
    n = x.config.n
    pi = tuple(pi)
    if sorted(pi) != list(range(1, n + 1)):
        raise InputError("pi must be a permutation of 1..n")
    current = list(range(1, n + 1))
    out = x
    for pos in range(n):
        want = pi[pos]
        at = current.index(want)
        while at > pos:
            out = zigzag_swap(out, at)  # swaps boundary entries at, at+1
            current[at - 1], current[at] = current[at], current[at - 1]
            at -= 1
    return out


# ---------------------------------------------------------------------------
# path decomposition and generators
# ---------------------------------------------------------------------------

def flow_to_json(g: Flow) -> dict:
    from .core import rat_to_json

    return {
        "n": g.graph.n,
        "m": g.graph.m,
        "e0": [[rat_to_json(v) for v in row] for row in g.e0],
        "e1": [[rat_to_json(v) for v in row] for row in g.e1],
    }


def flow_from_json(obj) -> Flow:
    from .core import rat

    if not isinstance(obj, dict) or not {"n", "m", "e0", "e1"} <= set(obj):
        raise InputError("flow JSON must be an object with keys n, m, e0, e1")
    graph = FlowGraph(int(obj["n"]), int(obj["m"]))
    e0 = tuple(tuple(rat(v) for v in row) for row in obj["e0"])
    e1 = tuple(tuple(rat(v) for v in row) for row in obj["e1"])
    return Flow(graph, e0, e1)


@dataclass(frozen=True)
class PathDecomposition:
    """Weighted source-to-sink paths whose indicator sum is the flow."""

    paths: tuple  # of (node tuple, weight)

    def to_json(self) -> list:
        from .core import rat_to_json

        return [
            {"nodes": [list(v) for v in nodes], "weight": rat_to_json(w)}
            for nodes, w in self.paths
        ]


def path_decompose(g: Flow) -> PathDecomposition:
    """Greedy exact decomposition into at most ``|A|`` weighted paths.

    Repeatedly extracts the lexicographically leftmost top-to-bottom path
    through positive edges with the bottleneck weight; requires the flow to
    be conservative at interior nodes.
    """
    n, m = g.graph.n, g.graph.m
    lam, lam_bar = boundary_of_flow(g)
    if admissibility_violation(g, lam, lam_bar) is not None:
        raise InputError("path decomposition needs an admissible flow")
    e0 = [list(r) for r in g.e0]
    e1 = [list(r) for r in g.e1]
    paths = []
    guard = 2 * sum(i + m + 1 for i in range(n)) + 1
    while True:
        guard -= 1
        if guard < 0:
            raise InternalError("path decomposition failed to terminate")
        start = None
        for j in range(m + 1):
            if n > 0 and (e0[0][j] > 0 or e1[0][j] > 0):
                start = (0, j)
                break
        if start is None:
            break
        nodes = [start]
        weight = None
        i, j = start
        while i < n:
            if e0[i][j] > 0:
                step_t, nxt = 0, (i + 1, j)
            elif e1[i][j] > 0:
                step_t, nxt = 1, (i + 1, j + 1)
            else:
                raise InternalError("stuck path: positive inflow without outflow")
            v = (e1 if step_t else e0)[i][j]
            weight = v if weight is None else min(weight, v)
            nodes.append(nxt)
            i, j = nxt
        # subtract the bottleneck along the recorded path
        for (pi, pj), (qi, qj) in zip(nodes, nodes[1:]):
            t = qj - pj
            rows = e1 if t else e0
            rows[pi][pj] -= weight
        paths.append((tuple(nodes), weight))
    return PathDecomposition(tuple(paths))


def generator_array(path: Sequence[tuple], m: int) -> GTPattern:
    """The 0/1 pattern generator attached to a top-to-bottom path.

    Row ``i`` has ones in the first ``p(i)`` slots, where ``(i, p(i))`` is
    the node of the path on layer ``i``; every nonnegative pattern is the
    weighted sum of the generators of any path decomposition of its flow.
    """
    path = [tuple(v) for v in path]
    if not path or path[0][0] != 0:
        raise InputError("path must start on layer 0")
    n = path[-1][0]
    if [v[0] for v in path] != list(range(n + 1)):
        raise InputError("path must visit consecutive layers")
    for (i, j), (_, j2) in zip(path, path[1:]):
        if j2 - j not in (0, 1):
            raise InputError("path steps must follow graph edges")
        if not 0 <= j <= i + m:
            raise InputError("path node out of range")
    if path[-1] == (n, 0):
        raise InputError("path may not end at the leftmost bottom node")
    rows = []
    for i, j in path:
        rows.append(tuple([1] * j + [0] * (i + m - j)))
    return GTPattern(ConvexConfig.trapezoid(n, m), tuple(rows))
