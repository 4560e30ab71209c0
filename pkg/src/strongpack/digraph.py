"""Loop-free simple digraphs and the class predicates used as preconditions.

Vertices are dense integer ids 0..n-1.  Arcs are ordered pairs (u, v) with
u != v, stored as a frozenset, so a digraph is hashable and comparable.
All functions here are pure.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator

from .errors import GraphFormatError, PreconditionError

Arc = tuple[int, int]


@dataclass(frozen=True)
class Digraph:
    """A simple directed graph on vertices 0..n-1 with no loops."""

    n: int
    arcs: frozenset[Arc] = field(default_factory=frozenset)

    def __init__(self, n: int, arcs: Iterable[Arc] = ()):
        if n < 0:
            raise PreconditionError("vertex count must be nonnegative")
        arcset = frozenset((int(u), int(v)) for u, v in arcs)
        for u, v in arcset:
            if u == v:
                raise PreconditionError(f"loop arc ({u}, {u}) not allowed")
            if not (0 <= u < n and 0 <= v < n):
                raise PreconditionError(f"arc ({u}, {v}) out of range for n={n}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "arcs", arcset)

    @property
    def m(self) -> int:
        return len(self.arcs)

    def vertices(self) -> range:
        return range(self.n)

    def has_arc(self, u: int, v: int) -> bool:
        return (u, v) in self.arcs

    def out_neighbors(self, u: int) -> list[int]:
        return sorted(v for (x, v) in self.arcs if x == u)

    def in_neighbors(self, v: int) -> list[int]:
        return sorted(u for (u, x) in self.arcs if x == v)

    def out_degree(self, u: int) -> int:
        return sum(1 for (x, _) in self.arcs if x == u)

    def in_degree(self, v: int) -> int:
        return sum(1 for (_, x) in self.arcs if x == v)

    def reverse(self) -> "Digraph":
        return Digraph(self.n, ((v, u) for (u, v) in self.arcs))

    def adjacency(self) -> list[list[int]]:
        """Out-adjacency lists, each sorted ascending."""
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in sorted(self.arcs):
            adj[u].append(v)
        return adj

    def out_masks(self) -> list[int]:
        """Out-neighborhoods as bitmasks (arbitrary-precision ints)."""
        masks = [0] * self.n
        for u, v in self.arcs:
            masks[u] |= 1 << v
        return masks

    def in_masks(self) -> list[int]:
        masks = [0] * self.n
        for u, v in self.arcs:
            masks[v] |= 1 << u
        return masks

    def __repr__(self):
        return f"Digraph(n={self.n}, m={self.m})"


@dataclass(frozen=True)
class TerminalSet:
    """A set of at least two vertex ids singled out as terminals."""

    members: frozenset[int]

    def __init__(self, members: Iterable[int]):
        ms = frozenset(int(v) for v in members)
        if len(ms) < 2:
            raise PreconditionError("terminal set needs at least 2 vertices")
        object.__setattr__(self, "members", ms)

    def __iter__(self) -> Iterator[int]:
        return iter(sorted(self.members))

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, v) -> bool:
        return v in self.members


def as_terminals(d: Digraph, terminals) -> frozenset[int]:
    """Normalize and validate a terminal collection against a host digraph."""
    if isinstance(terminals, TerminalSet):
        ts = terminals.members
    else:
        ts = frozenset(int(v) for v in terminals)
    if len(ts) < 2:
        raise PreconditionError("terminal set needs at least 2 vertices")
    if any(not (0 <= v < d.n) for v in ts):
        raise PreconditionError(f"terminal out of range for n={d.n}")
    return ts


def strong_components(d: Digraph) -> list[frozenset[int]]:
    """Strongly connected components, iterative Tarjan.

    Components are returned sorted by their smallest vertex, so the result
    is deterministic and two vertices share a component iff they reach each
    other.
    """
    adj = d.adjacency()
    index = [-1] * d.n
    low = [0] * d.n
    on_stack = [False] * d.n
    stack: list[int] = []
    comps: list[frozenset[int]] = []
    counter = 0

    for root in range(d.n):
        if index[root] != -1:
            continue
        # explicit DFS stack of (vertex, iterator position)
        work = [(root, 0)]
        while work:
            v, pi = work.pop()
            if pi == 0:
                index[v] = low[v] = counter
                counter += 1
                stack.append(v)
                on_stack[v] = True
            recurse = False
            for i in range(pi, len(adj[v])):
                w = adj[v][i]
                if index[w] == -1:
                    work.append((v, i + 1))
                    work.append((w, 0))
                    recurse = True
                    break
                if on_stack[w]:
                    low[v] = min(low[v], index[w])
            if recurse:
                continue
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp.append(w)
                    if w == v:
                        break
                comps.append(frozenset(comp))
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[v])
    comps.sort(key=min)
    return comps


def is_strong(d: Digraph) -> bool:
    """True iff every vertex reaches every other (single vertex counts)."""
    if d.n < 1:
        raise PreconditionError("is_strong needs at least one vertex")
    return len(strong_components(d)) == 1


def is_symmetric(d: Digraph) -> bool:
    """True iff the arc set is closed under reversal."""
    return all((v, u) in d.arcs for (u, v) in d.arcs)


def is_semicomplete(d: Digraph) -> bool:
    """True iff every unordered vertex pair carries at least one arc."""
    for u in range(d.n):
        for v in range(u + 1, d.n):
            if (u, v) not in d.arcs and (v, u) not in d.arcs:
                return False
    return True


def underlying_connected(d: Digraph) -> bool:
    """Connectivity of the underlying undirected graph."""
    if d.n == 0:
        return True
    nbr: list[set[int]] = [set() for _ in range(d.n)]
    for u, v in d.arcs:
        nbr[u].add(v)
        nbr[v].add(u)
    seen = {0}
    todo = [0]
    while todo:
        u = todo.pop()
        for v in nbr[u]:
            if v not in seen:
                seen.add(v)
                todo.append(v)
    return len(seen) == d.n


def is_eulerian(d: Digraph) -> bool:
    """Balanced in/out degree at every vertex and connected underlying graph."""
    if not underlying_connected(d):
        return False
    outd = [0] * d.n
    ind = [0] * d.n
    for u, v in d.arcs:
        outd[u] += 1
        ind[v] += 1
    return all(outd[v] == ind[v] for v in range(d.n))


def is_quasi_transitive(d: Digraph) -> bool:
    """True iff every 2-arc path x->y->z forces an arc between x and z."""
    adj = d.adjacency()
    for x, y in d.arcs:
        for z in adj[y]:
            if z == x:
                continue
            if (x, z) not in d.arcs and (z, x) not in d.arcs:
                return False
    return True


def min_semi_degree(d: Digraph) -> int:
    """min over vertices of min(out-degree, in-degree)."""
    if d.n < 1:
        raise PreconditionError("min_semi_degree needs at least one vertex")
    outd = [0] * d.n
    ind = [0] * d.n
    for u, v in d.arcs:
        outd[u] += 1
        ind[v] += 1
    return min(min(outd[v], ind[v]) for v in range(d.n))


# -- convenience constructors ------------------------------------------------

def directed_cycle(t: int) -> Digraph:
    if t < 2:
        raise PreconditionError("directed cycle needs at least 2 vertices")
    return Digraph(t, ((i, (i + 1) % t) for i in range(t)))


def directed_path(t: int) -> Digraph:
    return Digraph(t, ((i, i + 1) for i in range(t - 1)))


def empty_digraph(n: int) -> Digraph:
    return Digraph(n)


def biorientation(n: int, edges: Iterable[tuple[int, int]]) -> Digraph:
    """Symmetric digraph obtained by replacing each edge with both arcs."""
    arcs = []
    for u, v in edges:
        arcs.append((u, v))
        arcs.append((v, u))
    return Digraph(n, arcs)


def complete_bipartite_digraph(a: int, b: int) -> Digraph:
    """All arcs both ways between side {0..a-1} and side {a..a+b-1}."""
    if a < 1 or b < 1:
        raise PreconditionError("both sides must be nonempty")
    return biorientation(a + b, ((i, a + j) for i in range(a) for j in range(b)))


# -- text format ---------------------------------------------------------------
#
# First line "n m", then m lines "u v" (0-based).  Lines starting with '#'
# are comments.  The writer is canonical (arcs sorted), so reading what was
# written and writing it again reproduces the bytes exactly.

def write_digraph(d: Digraph) -> str:
    lines = [f"{d.n} {d.m}"]
    lines.extend(f"{u} {v}" for u, v in sorted(d.arcs))
    return "\n".join(lines) + "\n"


def read_digraph(text: str) -> Digraph:
    header = None
    arcs = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        if header is None:
            if len(fields) != 2:
                raise GraphFormatError("expected header 'n m'", lineno)
            try:
                header = (int(fields[0]), int(fields[1]))
            except ValueError:
                raise GraphFormatError("header fields must be integers", lineno)
            continue
        if len(fields) != 2:
            raise GraphFormatError("expected arc line 'u v'", lineno)
        try:
            arcs.append((int(fields[0]), int(fields[1])))
        except ValueError:
            raise GraphFormatError("arc endpoints must be integers", lineno)
    if header is None:
        raise GraphFormatError("empty digraph file")
    n, m = header
    if len(arcs) != m:
        raise GraphFormatError(f"header promises {m} arcs, found {len(arcs)}")
    try:
        return Digraph(n, arcs)
    except PreconditionError as exc:
        raise GraphFormatError(str(exc))
