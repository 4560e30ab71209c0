"""Constructive packings of arc-disjoint strongly connected subgraphs,
their verifier, and the detector for the three exceptional compositions.

A packing is a collection of arc sets over one host digraph.  Each part
must induce a strong subgraph containing every terminal; parts never share
an arc, and in "internal" mode the vertex sets of two parts meet exactly
in the terminal set.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Iterable, Optional

from . import _kernel
from .composition import CompositionSpec, canonical_decomposition_strong_qt, compose
from .digraph import (Arc, Digraph, as_terminals, complete_bipartite_digraph,
                      directed_cycle, directed_path, empty_digraph,
                      is_semicomplete, is_strong, is_symmetric, strong_components)
from .errors import GraphFormatError, InfeasibleError, PreconditionError, StrongpackError
from .hamilton import decompose_cycle_blowup, hamilton_semicomplete

MODE_ARC = "arc"
MODE_INTERNAL = "internal"


@dataclass(frozen=True)
class Packing:
    host: Digraph
    terminals: frozenset[int]
    mode: str
    parts: tuple[frozenset[Arc], ...]

    def part_vertices(self, i: int) -> frozenset[int]:
        return frozenset(v for arc in self.parts[i] for v in arc)


@dataclass(frozen=True)
class Verdict:
    """Outcome of verify_packing: ok, or the first violated clause."""

    ok: bool
    reason: Optional[str] = None
    parts: tuple[int, ...] = ()
    witness: object = None

    def __bool__(self):
        return self.ok


def _subgraph_strong_with(arcs: frozenset[Arc], required: frozenset[int]) -> bool:
    """The subgraph spanned by ``arcs`` is strong and covers ``required``."""
    verts = {v for arc in arcs for v in arc}
    if not required <= verts:
        return False
    if not verts:
        return False
    ids = {v: i for i, v in enumerate(sorted(verts))}
    sub = Digraph(len(ids), ((ids[u], ids[v]) for (u, v) in arcs))
    return len(strong_components(sub)) == 1


def verify_packing(p: Packing) -> Verdict:
    if p.mode not in (MODE_ARC, MODE_INTERNAL):
        return Verdict(False, "unknown mode", witness=p.mode)
    for i, part in enumerate(p.parts):
        stray = part - p.host.arcs
        if stray:
            return Verdict(False, "arc not in host", (i,), sorted(stray)[0])
        if not _subgraph_strong_with(part, p.terminals):
            return Verdict(False, "part is not a terminal-covering strong subgraph", (i,))
    for i in range(len(p.parts)):
        for j in range(i + 1, len(p.parts)):
            shared = p.parts[i] & p.parts[j]
            if shared:
                return Verdict(False, "arc-disjoint", (i, j), sorted(shared)[0])
    if p.mode == MODE_INTERNAL:
        for i in range(len(p.parts)):
            vi = p.part_vertices(i)
            for j in range(i + 1, len(p.parts)):
                extra = (vi & p.part_vertices(j)) - p.terminals
                if extra:
                    return Verdict(False, "internal disjointness", (i, j), min(extra))
    return Verdict(True)


def _checked(p: Packing) -> Packing:
    verdict = verify_packing(p)
    if not verdict:
        raise StrongpackError(f"constructed packing failed self-check: "
                              f"{verdict.reason} parts={verdict.parts}")
    return p


# -- complete bipartite hosts --------------------------------------------------

def pack_bipartite(a: int, b: int, terminals: Iterable[int] | None = None) -> Packing:
    """``a`` arc-disjoint strong spanning subgraphs of the complete
    bipartite digraph with sides of size a <= b.

    The balanced sub-digraph on the first a vertices of each side splits
    into a Hamiltonian cycles; part i additionally picks up both arcs
    between vertex i of the small side and every unmatched vertex of the
    large side.
    """
    if not (1 <= a <= b):
        raise PreconditionError("need 1 <= a <= b")
    host = complete_bipartite_digraph(a, b)
    dec = decompose_cycle_blowup(2, a)  # ids align: layer 0 -> 0..a-1, layer 1 -> a..2a-1
    parts = []
    for i, cyc in enumerate(dec.cycles):
        arcs = set(cyc.arcs())
        for z in range(2 * a, a + b):
            arcs.add((i, z))
            arcs.add((z, i))
        parts.append(frozenset(arcs))
    ts = frozenset(range(a + b)) if terminals is None else as_terminals(host, terminals)
    return _checked(Packing(host, ts, MODE_ARC, tuple(parts)))


# -- the exceptional compositions ----------------------------------------------

def _exceptional_members() -> tuple[tuple[str, Digraph], ...]:
    c3 = directed_cycle(3)
    k1, k2, k3 = empty_digraph(1), empty_digraph(2), empty_digraph(3)
    p2 = directed_path(2)
    return (
        ("triple-2", compose(CompositionSpec(c3, (k2, k2, k2)))),
        ("path-2-2", compose(CompositionSpec(c3, (p2, k2, k2)))),
        ("2-2-3", compose(CompositionSpec(c3, (k2, k2, k3)))),
    )


EXCEPTIONAL_COMPOSITIONS = _exceptional_members()


@dataclass(frozen=True)
class ExceptionalVerdict:
    """Whether a digraph is one of the three small compositions with no
    pair of arc-disjoint strong spanning subgraphs.  ``witness`` maps the
    input's vertices onto the named member."""

    member: bool
    name: Optional[str] = None
    witness: Optional[tuple[int, ...]] = None


def _degree_profile(d: Digraph):
    outd = [0] * d.n
    ind = [0] * d.n
    for u, v in d.arcs:
        outd[u] += 1
        ind[v] += 1
    return sorted(zip(outd, ind))


def _isomorphism(d: Digraph, target: Digraph) -> Optional[tuple[int, ...]]:
    """Mapping of d's vertices onto target's, by permutation search with a
    degree-profile precheck.  Hosts here have at most 7 vertices."""
    if d.n != target.n or d.m != target.m:
        return None
    if _degree_profile(d) != _degree_profile(target):
        return None
    tgt = target.arcs
    for perm in permutations(range(d.n)):
        if all((perm[u], perm[v]) in tgt for (u, v) in d.arcs):
            return perm
    return None


def is_in_exceptional(d: Digraph) -> ExceptionalVerdict:
    for name, member in EXCEPTIONAL_COMPOSITIONS:
        mapping = _isomorphism(d, member)
        if mapping is not None:
            return ExceptionalVerdict(True, name, mapping)
    return ExceptionalVerdict(False)


# -- composition packings --------------------------------------------------------

def pack_symmetric_composition(spec: CompositionSpec, terminals) -> Packing:
    """n0 arc-disjoint strong spanning subgraphs of a composition whose
    outer digraph is strong and symmetric.

    Inner arcs are ignored.  Every symmetric outer pair spans a complete
    bipartite digraph across its two layers; that digraph is packed as in
    ``pack_bipartite`` and part s collects the s-th piece from every pair.
    """
    outer = spec.outer
    if not is_symmetric(outer):
        raise PreconditionError("outer digraph is not symmetric")
    if not is_strong(outer):
        raise PreconditionError("outer digraph is not strong")
    host = compose(spec)
    ts = as_terminals(host, terminals)
    n0 = spec.n0
    offs = spec.offsets()

    parts: list[set[Arc]] = [set() for _ in range(n0)]
    pairs = sorted({(min(i, p), max(i, p)) for (i, p) in outer.arcs})
    for p, q in pairs:
        np_, nq = spec.inners[p].n, spec.inners[q].n
        # smaller layer plays the small side; ties go to the lower index
        if nq < np_:
            small, large = q, p
        else:
            small, large = p, q
        a, b = spec.inners[small].n, spec.inners[large].n
        block = pack_bipartite(a, b)
        for s in range(n0):
            for u, v in block.parts[s]:
                parts[s].add((_bip_to_flat(u, a, offs, small, large),
                              _bip_to_flat(v, a, offs, small, large)))
    packing = Packing(host, ts, MODE_ARC, tuple(frozenset(p) for p in parts))
    return _checked(packing)


def _bip_to_flat(x: int, a: int, offs, small: int, large: int) -> int:
    if x < a:
        return offs[small] + x
    return offs[large] + (x - a)


def pack_semicomplete_composition(spec: CompositionSpec, terminals) -> Packing:
    """n0 arc-disjoint strong spanning subgraphs of a composition whose
    outer digraph is strong semicomplete, refusing the three exceptional
    hosts.

    n0 = 1 takes the whole digraph.  n0 = 2 finds two arc-disjoint strong
    spanning subgraphs by exact search (they exist for every non-
    exceptional host).  For n0 >= 3 a Hamiltonian cycle of the outer
    digraph yields a spanning cycle blow-up on the first n0 vertices of
    each layer; its Hamiltonian decomposition gives the cores, and each
    leftover vertex joins core j through its layer's neighbors of index j
    along the outer cycle.
    """
    outer = spec.outer
    if not is_semicomplete(outer):
        raise PreconditionError("outer digraph is not semicomplete")
    if not is_strong(outer):
        raise PreconditionError("outer digraph is not strong")
    host = compose(spec)
    verdict = is_in_exceptional(host)
    if verdict.member:
        raise InfeasibleError(
            f"host is the exceptional composition '{verdict.name}' (vertex "
            f"mapping {verdict.witness}), which has no pair of arc-disjoint "
            f"strong spanning subgraphs")
    ts = as_terminals(host, terminals)
    n0 = spec.n0

    if n0 == 1:
        return _checked(Packing(host, ts, MODE_ARC, (host.arcs,)))

    if n0 == 2:
        arcs = sorted(host.arcs)
        full = (1 << host.n) - 1
        found = _kernel.search_arc_disjoint(host.n, arcs, full, 2)
        if found is None:
            raise StrongpackError("exact search found no strong arc "
                                  "decomposition on a non-exceptional host")
        parts = tuple(frozenset(arcs[i] for i in pt) for pt in found)
        return _checked(Packing(host, ts, MODE_ARC, parts))

    # n0 >= 3
    ham = hamilton_semicomplete(outer)
    order = list(ham.order)
    offs = spec.offsets()
    t = spec.t
    dec = decompose_cycle_blowup(t, n0)

    def rep(layer: int, j: int) -> int:
        return offs[layer] + j

    parts = []
    for j, cyc in enumerate(dec.cycles):
        arcs: set[Arc] = set()
        for x, y in cyc.arcs():
            # blow-up vertex (i, k) stands for vertex k of the layer at
            # cycle position i
            xi, xk = divmod(x, n0)
            yi, yk = divmod(y, n0)
            arcs.add((rep(order[xi], xk), rep(order[yi], yk)))
        for pos, layer in enumerate(order):
            pred = order[(pos - 1) % t]
            succ = order[(pos + 1) % t]
            for k in range(n0, spec.inners[layer].n):
                v = offs[layer] + k
                arcs.add((rep(pred, j), v))
                arcs.add((v, rep(succ, j)))
        parts.append(frozenset(arcs))
    return _checked(Packing(host, ts, MODE_ARC, tuple(parts)))


def pack_quasi_transitive(d: Digraph, terminals) -> Packing:
    """Packing for a strong quasi-transitive digraph through its canonical
    decomposition; the part count is that decomposition's n0."""
    verdict = is_in_exceptional(d)
    if verdict.member:
        raise InfeasibleError(
            f"digraph is the exceptional composition '{verdict.name}' "
            f"(vertex mapping {verdict.witness})")
    spec = canonical_decomposition_strong_qt(d)
    ts = as_terminals(d, terminals)
    flat_of = {orig: flat for flat, orig in enumerate(spec.original_ids)}
    inner = pack_semicomplete_composition(spec, frozenset(flat_of[v] for v in ts))
    back = spec.original_ids
    parts = tuple(
        frozenset((back[u], back[v]) for (u, v) in part) for part in inner.parts)
    return _checked(Packing(d, ts, MODE_ARC, parts))


# -- text format ---------------------------------------------------------------
#
# Line 1: "parts=<count> mode=<arc|internal>"; then one line per part with
# its arcs as "u>v" tokens separated by spaces.

def write_packing(p: Packing) -> str:
    lines = [f"parts={len(p.parts)} mode={p.mode}"]
    for part in p.parts:
        lines.append(" ".join(f"{u}>{v}" for u, v in sorted(part)))
    return "\n".join(lines) + "\n"


def read_packing(text: str, host: Digraph, terminals) -> Packing:
    lines = [ln for ln in text.splitlines() if ln.strip() and not ln.startswith("#")]
    if not lines:
        raise GraphFormatError("empty packing file")
    head = dict(item.split("=", 1) for item in lines[0].split() if "=" in item)
    try:
        count = int(head["parts"])
        mode = head["mode"]
    except (KeyError, ValueError):
        raise GraphFormatError("expected header 'parts=<count> mode=<arc|internal>'", 1)
    if mode not in (MODE_ARC, MODE_INTERNAL):
        raise GraphFormatError(f"unknown mode {mode!r}", 1)
    if len(lines) - 1 != count:
        raise GraphFormatError(f"header promises {count} parts, found {len(lines) - 1}")
    parts = []
    for lineno, line in enumerate(lines[1:], start=2):
        arcs = []
        for token in line.split():
            try:
                u, v = token.split(">")
                arcs.append((int(u), int(v)))
            except ValueError:
                raise GraphFormatError(f"bad arc token {token!r}", lineno)
        parts.append(frozenset(arcs))
    return Packing(host, as_terminals(host, terminals), mode, tuple(parts))
