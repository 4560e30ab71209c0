"""Small max-flow helpers (unit capacities, BFS augmentation).

Instances are tiny, so everything runs on dense capacity dicts.  These
routines provide cheap upper bounds for the packing solvers and an
independent route to cut sizes and disjoint-path counts.
"""

from __future__ import annotations

from collections import deque

from .digraph import Digraph
from .errors import PreconditionError

_BIG = 1 << 20


def max_flow(n: int, capacity: dict[tuple[int, int], int], s: int, t: int):
    """Edmonds-Karp.  Returns (value, residual) with residual a dict."""
    if s == t:
        raise PreconditionError("source equals sink")
    residual = dict(capacity)
    adj: list[set[int]] = [set() for _ in range(n)]
    for (u, v), c in capacity.items():
        if c > 0:
            adj[u].add(v)
            adj[v].add(u)  # back arcs for residual traversal
            residual.setdefault((v, u), 0)
    value = 0
    while True:
        parent = [-1] * n
        parent[s] = s
        queue = deque([s])
        while queue and parent[t] == -1:
            u = queue.popleft()
            for v in sorted(adj[u]):
                if parent[v] == -1 and residual.get((u, v), 0) > 0:
                    parent[v] = u
                    queue.append(v)
        if parent[t] == -1:
            return value, residual
        # unit-style augmentation: find bottleneck
        bottleneck = _BIG
        v = t
        while v != s:
            u = parent[v]
            bottleneck = min(bottleneck, residual[(u, v)])
            v = u
        v = t
        while v != s:
            u = parent[v]
            residual[(u, v)] -= bottleneck
            residual[(v, u)] = residual.get((v, u), 0) + bottleneck
            v = u
        value += bottleneck


def _residual_reachable(n, residual, s) -> set[int]:
    seen = {s}
    todo = [s]
    adj: list[set[int]] = [set() for _ in range(n)]
    for (u, v), c in residual.items():
        if c > 0:
            adj[u].add(v)
    while todo:
        u = todo.pop()
        for v in adj[u]:
            if v not in seen:
                seen.add(v)
                todo.append(v)
    return seen


def min_arc_cut(d: Digraph, s: int, t: int):
    """Minimum set of arcs whose removal kills every s->t path.

    Returns (size, frozenset of arcs).  The cut returned is the canonical
    source-side cut of the maximum flow, so the result is deterministic.
    """
    capacity = {arc: 1 for arc in d.arcs}
    value, residual = max_flow(d.n, capacity, s, t)
    reach = _residual_reachable(d.n, residual, s)
    cut = frozenset((u, v) for (u, v) in d.arcs if u in reach and v not in reach)
    assert len(cut) == value
    return value, cut


def arc_connectivity(d: Digraph, s: int, t: int) -> int:
    return min_arc_cut(d, s, t)[0]


def vertex_capacitated_connectivity(d: Digraph, s: int, t: int,
                                    uncapped: frozenset[int]) -> int:
    """Max s->t flow where arcs have capacity 1 and every vertex outside
    ``uncapped`` also has capacity 1 (standard vertex splitting)."""
    # vertex v becomes v_in = 2v, v_out = 2v + 1
    capacity: dict[tuple[int, int], int] = {}
    for v in range(d.n):
        capacity[(2 * v, 2 * v + 1)] = _BIG if v in uncapped else 1
    for u, v in d.arcs:
        capacity[(2 * u + 1, 2 * v)] = 1
    value, _ = max_flow(2 * d.n, capacity, 2 * s + 1, 2 * t)
    return value


def max_vertex_disjoint_paths(d: Digraph, s: int, t: int) -> int:
    """Maximum number of s->t paths pairwise sharing no inner vertex.

    Arc capacities stay at 1 as well, so on symmetric digraphs this equals
    the count of internally disjoint undirected paths.
    """
    return vertex_capacitated_connectivity(d, s, t, frozenset({s, t}))
