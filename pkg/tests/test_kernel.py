"""Backend parity: the compiled kernel must reproduce the pure kernel's
output exactly, branch order included."""

import random

import pytest

from strongpack import _pycore

fastcore = pytest.importorskip("strongpack._fastcore")


def random_instances(seed, count):
    rng = random.Random(seed)
    for _ in range(count):
        n = rng.randint(2, 7)
        pool = [(u, v) for u in range(n) for v in range(n) if u != v]
        rng.shuffle(pool)
        arcs = sorted(pool[:rng.randint(1, 14)])
        k = rng.randint(2, n)
        s_mask = 0
        for v in rng.sample(range(n), k):
            s_mask |= 1 << v
        yield n, arcs, s_mask


@pytest.mark.parametrize("ell", [1, 2, 3])
def test_arc_disjoint_parity(ell):
    for n, arcs, s_mask in random_instances(100 + ell, 120):
        assert (_pycore.search_arc_disjoint(n, arcs, s_mask, ell)
                == fastcore.search_arc_disjoint(n, arcs, s_mask, ell))


@pytest.mark.parametrize("ell", [1, 2, 3])
def test_internally_disjoint_parity(ell):
    for n, arcs, s_mask in random_instances(200 + ell, 120):
        assert (_pycore.search_internally_disjoint(n, arcs, s_mask, ell)
                == fastcore.search_internally_disjoint(n, arcs, s_mask, ell))


def test_both_reject_oversize():
    arcs = [(0, 1)]
    with pytest.raises(ValueError):
        _pycore.search_arc_disjoint(65, arcs, 3, 1)
    with pytest.raises(ValueError):
        fastcore.search_arc_disjoint(65, arcs, 3, 1)


def test_backends_report_names():
    assert _pycore.BACKEND == "pure"
    assert fastcore.BACKEND == "compiled"
