import pytest

import strongpack as sp
from strongpack.errors import InfeasibleError, PreconditionError
from strongpack.hamilton import blowup_host, shift_rows

from conftest import all_hamiltonian_cycles


class TestHamiltonSemicomplete:
    def test_three_cycle(self, c3):
        cyc = sp.hamilton_semicomplete(c3)
        assert set(cyc.order) == {0, 1, 2}
        cyc.check()

    def test_strong_tournament(self, strong_tournament4):
        cyc = sp.hamilton_semicomplete(strong_tournament4)
        cyc.check()
        # cross-check against exhaustive enumeration
        normalized = cyc.order[cyc.order.index(0):] + cyc.order[:cyc.order.index(0)]
        assert normalized in all_hamiltonian_cycles(strong_tournament4)

    def test_complete_biorientation_k3(self):
        d = sp.biorientation(3, [(0, 1), (1, 2), (0, 2)])
        sp.hamilton_semicomplete(d).check()

    def test_two_vertices(self):
        cyc = sp.hamilton_semicomplete(sp.biorientation(2, [(0, 1)]))
        assert sorted(cyc.order) == [0, 1]

    def test_deterministic(self, strong_tournament4):
        a = sp.hamilton_semicomplete(strong_tournament4)
        b = sp.hamilton_semicomplete(strong_tournament4)
        assert a.order == b.order

    @pytest.mark.parametrize("n", range(3, 8))
    def test_matches_enumeration_on_rotated_tournaments(self, n):
        # circulant-style strong tournaments: i beats i+1 .. i+(n-1)//2
        arcs = []
        for i in range(n):
            for step in range(1, (n - 1) // 2 + 1):
                arcs.append((i, (i + step) % n))
            if n % 2 == 0:
                if i < (i + n // 2) % n:
                    arcs.append((i, (i + n // 2) % n))
        d = sp.Digraph(n, arcs)
        if not (sp.is_semicomplete(d) and sp.is_strong(d)):
            pytest.skip("construction not strong for this n")
        cyc = sp.hamilton_semicomplete(d)
        cyc.check()
        at0 = cyc.order.index(0)
        normalized = cyc.order[at0:] + cyc.order[:at0]
        assert normalized in all_hamiltonian_cycles(d)

    def test_rejects_non_semicomplete(self):
        with pytest.raises(PreconditionError):
            sp.hamilton_semicomplete(sp.directed_cycle(4))

    def test_rejects_non_strong(self):
        tt3 = sp.Digraph(3, [(0, 1), (0, 2), (1, 2)])
        with pytest.raises(PreconditionError):
            sp.hamilton_semicomplete(tt3)


class TestBlowupDecomposition:
    def test_minimal_case(self):
        dec = sp.decompose_cycle_blowup(2, 1)
        assert len(dec.cycles) == 1
        assert dec.cycles[0].order == (0, 1)

    def test_two_by_two_matches_brute_force(self):
        dec = sp.decompose_cycle_blowup(2, 2)
        dec.check()
        host = dec.host
        # enumerate every partition of the 8 arcs into two Hamiltonian cycles
        cycles = all_hamiltonian_cycles(host)
        arcsets = {frozenset(zip(c, c[1:] + c[:1])): c for c in cycles}
        partitions = []
        for a in arcsets:
            b = host.arcs - a
            if b in arcsets:
                partitions.append({a, b})
        got = {frozenset(c.arcs()) for c in dec.cycles}
        assert got in partitions

    @pytest.mark.parametrize("t,r", [(t, r) for t in range(2, 6) for r in range(1, 6)
                                     if not (t % 2 == 1 and r == 2)])
    def test_grid_is_exact_decomposition(self, t, r):
        dec = sp.decompose_cycle_blowup(t, r)
        assert len(dec.cycles) == r
        dec.check()  # partition + Hamiltonicity of every cycle
        assert dec.host.m == t * r * r

    @pytest.mark.parametrize("t", [3, 5])
    def test_odd_cycle_doubling_is_refused(self, t):
        with pytest.raises(InfeasibleError):
            sp.decompose_cycle_blowup(t, 2)

    def test_odd_cycle_doubling_truly_has_none(self):
        # every spanning cycle of the doubled host picks one of two
        # matchings per interface, and complementary choices cannot both
        # close into single cycles when t is odd
        host = blowup_host(3, 2)
        assert sp.has_strong_arc_decomposition(host)[0] is False

    def test_deterministic(self):
        a = sp.decompose_cycle_blowup(4, 3)
        b = sp.decompose_cycle_blowup(4, 3)
        assert [c.order for c in a.cycles] == [c.order for c in b.cycles]

    def test_rejects_small_t(self):
        with pytest.raises(PreconditionError):
            sp.decompose_cycle_blowup(1, 3)

    def test_shift_rows_are_latin_with_coprime_sums(self):
        from math import gcd
        for t in (2, 3, 4, 5, 6, 7):
            for r in (1, 3, 4, 5, 7, 8):
                rows = shift_rows(t, r)
                assert len(rows) == t
                for row in rows:
                    assert sorted(row) == list(range(r))
                for c in range(r):
                    total = sum(rows[i][c] for i in range(t)) % r
                    assert r == 1 or gcd(total, r) == 1


class TestBalancedBipartite:
    @pytest.mark.parametrize("a", [1, 2, 4])
    def test_decomposes(self, a):
        dec = sp.decompose_complete_bipartite_balanced(a)
        assert len(dec.cycles) == a
        dec.check()
        # host is the complete bipartite digraph under the layer-major ids
        assert dec.host == sp.complete_bipartite_digraph(a, a)

    def test_rejects_zero(self):
        with pytest.raises(PreconditionError):
            sp.decompose_complete_bipartite_balanced(0)
