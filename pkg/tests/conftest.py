import itertools

import pytest

import strongpack as sp


@pytest.fixture
def c3():
    return sp.directed_cycle(3)


@pytest.fixture
def k23():
    return sp.complete_bipartite_digraph(2, 3)


@pytest.fixture
def strong_tournament4():
    return sp.Digraph(4, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2), (3, 1)])


def all_hamiltonian_cycles(d):
    """Exhaustive enumeration, normalized to start at vertex 0."""
    found = []
    for perm in itertools.permutations(range(1, d.n)):
        order = (0,) + perm
        if all(d.has_arc(order[i], order[(i + 1) % d.n]) for i in range(d.n)):
            found.append(order)
    return found


def exceptional_member(i):
    return sp.EXCEPTIONAL_COMPOSITIONS[i][1]
