"""Digraph compositions: an outer digraph whose vertices are replaced by
inner digraphs, every outer arc becoming a complete set of cross arcs.

Flattened ids are layer-major: vertex j of inner i maps to offset_i + j
where offset_i is the total size of earlier inners.  The packing routines
rely on that convention.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .digraph import (Digraph, is_quasi_transitive, is_semicomplete, is_strong,
                      read_digraph, write_digraph)
from .errors import GraphFormatError, PreconditionError, StrongpackError


@dataclass(frozen=True)
class CompositionSpec:
    """An outer digraph on t >= 2 vertices plus one inner digraph per
    outer vertex.  ``original_ids`` optionally records which external
    vertex each flattened id stands for (used when a digraph was
    decomposed rather than built)."""

    outer: Digraph
    inners: tuple[Digraph, ...]
    original_ids: tuple[int, ...] | None = None

    def __init__(self, outer: Digraph, inners: Sequence[Digraph],
                 original_ids: Sequence[int] | None = None):
        inners = tuple(inners)
        if outer.n < 2:
            raise PreconditionError("outer digraph needs at least 2 vertices")
        if len(inners) != outer.n:
            raise PreconditionError("need one inner digraph per outer vertex")
        if any(h.n < 1 for h in inners):
            raise PreconditionError("inner digraphs must be nonempty")
        object.__setattr__(self, "outer", outer)
        object.__setattr__(self, "inners", inners)
        if original_ids is not None:
            original_ids = tuple(original_ids)
            if sorted(original_ids) != list(range(sum(h.n for h in inners))):
                raise PreconditionError("original_ids must be a permutation")
        object.__setattr__(self, "original_ids", original_ids)

    @property
    def t(self) -> int:
        return self.outer.n

    @property
    def n(self) -> int:
        return sum(h.n for h in self.inners)

    @property
    def n0(self) -> int:
        """Smallest inner order; the guaranteed packing size."""
        return min(h.n for h in self.inners)

    def offsets(self) -> list[int]:
        offs = [0]
        for h in self.inners:
            offs.append(offs[-1] + h.n)
        return offs

    def flat_id(self, layer: int, j: int) -> int:
        return self.offsets()[layer] + j

    def layer_of(self, flat: int) -> tuple[int, int]:
        offs = self.offsets()
        for i in range(self.t):
            if flat < offs[i + 1]:
                return i, flat - offs[i]
        raise PreconditionError(f"flat id {flat} out of range")


def compose(spec: CompositionSpec) -> Digraph:
    """Flatten the composition: inner arcs plus all cross arcs per outer arc."""
    offs = spec.offsets()
    arcs: list[tuple[int, int]] = []
    for i, h in enumerate(spec.inners):
        base = offs[i]
        arcs.extend((base + u, base + v) for (u, v) in h.arcs)
    for i, p in spec.outer.arcs:
        for u in range(spec.inners[i].n):
            for v in range(spec.inners[p].n):
                arcs.append((offs[i] + u, offs[p] + v))
    return Digraph(offs[-1], arcs)


def lexicographic_product(g: Digraph, h: Digraph) -> Digraph:
    """Composition with every inner equal to ``h``.

    Vertex (u, u') of the product gets id u*|V(h)| + u'.
    """
    if g.n < 2:
        raise PreconditionError("left factor needs at least 2 vertices")
    return compose(CompositionSpec(g, (h,) * g.n))


def canonical_decomposition_strong_qt(d: Digraph) -> CompositionSpec:
    """Express a strong quasi-transitive digraph as a composition with a
    strong semicomplete outer digraph whose inners are single vertices or
    non-strong.

    The inner parts are the connected components of the complement of the
    underlying undirected graph.  That identity is not assumed: the result
    is checked against every claimed property and against recomposition,
    and any mismatch raises.
    """
    if d.n < 2:
        raise PreconditionError("need at least 2 vertices")
    if not is_strong(d):
        raise PreconditionError("digraph is not strong")
    if not is_quasi_transitive(d):
        raise PreconditionError("digraph is not quasi-transitive")

    adjacent = [[False] * d.n for _ in range(d.n)]
    for u, v in d.arcs:
        adjacent[u][v] = adjacent[v][u] = True

    comp = [-1] * d.n
    parts: list[list[int]] = []
    for root in range(d.n):
        if comp[root] != -1:
            continue
        comp[root] = len(parts)
        bucket = [root]
        todo = [root]
        while todo:
            u = todo.pop()
            for v in range(d.n):
                if v != u and comp[v] == -1 and not adjacent[u][v]:
                    comp[v] = comp[root]
                    bucket.append(v)
                    todo.append(v)
        parts.append(sorted(bucket))
    parts.sort(key=min)

    t = len(parts)
    if t < 2:
        raise StrongpackError("decomposition produced a single part on a "
                              "strong digraph; input violates the structure")
    index_of = {}
    for i, bucket in enumerate(parts):
        for j, v in enumerate(bucket):
            index_of[v] = (i, j)

    inners = tuple(
        Digraph(len(bucket),
                ((index_of[u][1], index_of[v][1]) for (u, v) in d.arcs
                 if index_of[u][0] == i and index_of[v][0] == i))
        for i, bucket in enumerate(parts))
    outer_arcs = set()
    for u, v in d.arcs:
        iu, ip = index_of[u][0], index_of[v][0]
        if iu != ip:
            outer_arcs.add((iu, ip))
    outer = Digraph(t, outer_arcs)
    original_ids = tuple(v for bucket in parts for v in bucket)
    spec = CompositionSpec(outer, inners, original_ids)

    # operational checks replace the structural theorem
    if not is_semicomplete(outer) or not is_strong(outer):
        raise StrongpackError("outer quotient is not strong semicomplete")
    for h in inners:
        if h.n > 1 and is_strong(h):
            raise StrongpackError("an inner part is strong but not a vertex")
    relabeled = relabel(compose(spec), original_ids)
    if relabeled != d:
        raise StrongpackError("recomposition does not reproduce the input")
    return spec


def relabel(d: Digraph, mapping: Sequence[int]) -> Digraph:
    """New digraph with vertex i renamed mapping[i]."""
    return Digraph(d.n, ((mapping[u], mapping[v]) for (u, v) in d.arcs))


# -- text format ---------------------------------------------------------------
#
# Line 1: t.  Then the outer digraph in the digraph text format, then each
# inner digraph, every block preceded by a line of three dashes.

def write_composition(spec: CompositionSpec) -> str:
    blocks = [f"{spec.t}\n" + write_digraph(spec.outer)]
    for h in spec.inners:
        blocks.append("---\n" + write_digraph(h))
    return "".join(blocks)


def read_composition(text: str) -> CompositionSpec:
    chunks = text.split("---\n")
    head = chunks[0].strip().splitlines()
    if not head:
        raise GraphFormatError("empty composition file")
    try:
        t = int(head[0].strip())
    except ValueError:
        raise GraphFormatError("first line must be the outer order t", 1)
    outer = read_digraph("\n".join(head[1:]))
    if outer.n != t:
        raise GraphFormatError(f"outer digraph has {outer.n} vertices, expected {t}")
    if len(chunks) - 1 != t:
        raise GraphFormatError(f"expected {t} inner digraphs, found {len(chunks) - 1}")
    inners = [read_digraph(chunk) for chunk in chunks[1:]]
    return CompositionSpec(outer, inners)
