"""Exact max-flow machinery behind the membership and decomposition solvers.

The network for a symmetric nonnegative matrix A (all diagonal entries <= 1):

    source -> pair-node {i,j}   capacity 2*a_ij   (one node per i<j, a_ij > 0)
    pair-node {i,j} -> vertex-node i, vertex-node j   capacity 2*a_ij each
    vertex-node i -> sink       capacity 1 - a_ii

Saturating every source arc distributes each off-diagonal mass 2*a_ij between
its two endpoints without overfilling any row budget 1 - a_ii, which is
exactly the feasibility content of the subset-sum inequalities: the min cut
over a vertex-node set alpha equals
    sum_{pairs not inside alpha} 2*a_ij  +  sum_{i in alpha} (1 - a_ii),
so full flow is possible iff every principal sum is at most |alpha|.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from .errors import DiagonalOverflowError
from .matrices import SymMatrix, ZERO


@dataclass(frozen=True)
class FlowNetwork:
    """Immutable description; node ordering (pairs lexicographic) is the
    canonical one used by the solver, so results are deterministic."""

    m: int
    pairs: tuple  # ((i, j), ...) with i < j, 1-based, lexicographic
    pair_capacity: tuple  # Fraction 2*a_ij per pair
    sink_capacity: tuple  # Fraction 1 - a_ii, index i-1

    @property
    def source_capacity_total(self) -> Fraction:
        return sum(self.pair_capacity, ZERO)


@dataclass(frozen=True)
class MaxFlowResult:
    value: Fraction
    # flow on arc pair {i,j} -> vertex endpoint, keyed ((i, j), endpoint)
    pair_to_vertex: dict
    # source-side of a min cut, from residual reachability
    cut_vertices: frozenset
    cut_pairs: frozenset


def build_flow_network(A: SymMatrix) -> FlowNetwork:
    """Network whose max flow decides membership; requires a_ii <= 1."""
    m = A.m
    for i in range(m):
        if A.entries[i][i] > 1:
            raise DiagonalOverflowError(
                "diagonal entry (%d,%d)=%s exceeds 1" % (i + 1, i + 1, A.entries[i][i]),
                index=i + 1,
            )
    pairs = []
    caps = []
    for i in range(m):
        for j in range(i + 1, m):
            if A.entries[i][j] > 0:
                pairs.append((i + 1, j + 1))
                caps.append(2 * A.entries[i][j])
    sink = tuple(1 - A.entries[i][i] for i in range(m))
    return FlowNetwork(
        m=m, pairs=tuple(pairs), pair_capacity=tuple(caps), sink_capacity=sink
    )


def max_flow(net: FlowNetwork) -> MaxFlowResult:
    """Exact maximum flow by integer-scaled shortest augmenting paths.

    Capacities are scaled by the LCM of their denominators so augmentation
    terminates on integers; flows are divided back at the end.  BFS visits
    neighbors in node-index order, so the flow and the extracted min cut are
    deterministic for a fixed network.
    """
    m = net.m
    n_pairs = len(net.pairs)
    # node ids: 0 source, 1..n_pairs pair-nodes, then vertex-nodes, then sink
    vertex_node = lambda i: n_pairs + i  # i is 1-based
    sink = n_pairs + m + 1
    n_nodes = sink + 1

    scale = 1
    for c in list(net.pair_capacity) + list(net.sink_capacity):
        scale = math.lcm(scale, Fraction(c).denominator)

    cap = [[0] * n_nodes for _ in range(n_nodes)]
    for p, (i, j) in enumerate(net.pairs):
        c = int(net.pair_capacity[p] * scale)
        cap[0][p + 1] = c
        cap[p + 1][vertex_node(i)] = c
        cap[p + 1][vertex_node(j)] = c
    for i in range(1, m + 1):
        cap[vertex_node(i)][sink] = int(net.sink_capacity[i - 1] * scale)

    adj = [
        [v for v in range(n_nodes) if cap[u][v] or cap[v][u]] for u in range(n_nodes)
    ]
    flow = [[0] * n_nodes for _ in range(n_nodes)]

    def bfs_path():
        parent = [-1] * n_nodes
        parent[0] = 0
        queue = [0]
        while queue:
            nxt = []
            for u in queue:
                for v in adj[u]:
                    if parent[v] == -1 and cap[u][v] - flow[u][v] > 0:
                        parent[v] = u
                        if v == sink:
                            return parent
                        nxt.append(v)
            queue = nxt
        return None

    total = 0
    while True:
        parent = bfs_path()
        if parent is None:
            break
        bottleneck = None
        v = sink
        while v != 0:
            u = parent[v]
            residual = cap[u][v] - flow[u][v]
            bottleneck = residual if bottleneck is None else min(bottleneck, residual)
            v = u
        v = sink
        while v != 0:
            u = parent[v]
            flow[u][v] += bottleneck
            flow[v][u] -= bottleneck
            v = u
        total += bottleneck

    # residual reachability from the source picks out a min cut
    reachable = [False] * n_nodes
    reachable[0] = True
    stack = [0]
    while stack:
        u = stack.pop()
        for v in adj[u]:
            if not reachable[v] and cap[u][v] - flow[u][v] > 0:
                reachable[v] = True
                stack.append(v)

    pair_to_vertex = {}
    for p, (i, j) in enumerate(net.pairs):
        pair_to_vertex[((i, j), i)] = Fraction(flow[p + 1][vertex_node(i)], scale)
        pair_to_vertex[((i, j), j)] = Fraction(flow[p + 1][vertex_node(j)], scale)

    return MaxFlowResult(
        value=Fraction(total, scale),
        pair_to_vertex=pair_to_vertex,
        cut_vertices=frozenset(
            i for i in range(1, m + 1) if reachable[vertex_node(i)]
        ),
        cut_pairs=frozenset(
            net.pairs[p] for p in range(n_pairs) if reachable[p + 1]
        ),
    )
