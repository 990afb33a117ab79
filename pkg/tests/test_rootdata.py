import itertools
from fractions import Fraction

import pytest

from cohomrep import partitions as pt
from cohomrep import rootdata as rd
from cohomrep import vz_catalog as vz
from cohomrep.partitions import BoxContext


class TestRho:
    def test_rho_decomposition(self):
        for p, q in itertools.product(range(1, 10), repeat=2):
            if p + q > 10:
                continue
            for kind in ("U", "O"):
                rs = rd.root_system(kind, p, q)
                total = rs.rho_c + rs.rho_n
                assert total == rs.rho

    def test_rho_n_shape_U(self):
        rs = rd.root_system("U", 2, 3)
        assert all(v == Fraction(3, 2) for v in rs.rho_n.xs)
        assert all(v == Fraction(-1) for v in rs.rho_n.ys)


class TestKtypeU:
    def test_against_box_sum(self, compatible_by_box):
        for (p, q), pairs in compatible_by_box.items():
            ctx = BoxContext(p, q)
            for cp in pairs:
                w = rd.ktype_weight_U(cp.lam, cp.mu, ctx)
                assert w == rd.ktype_box_sum_U(cp.lam, cp.mu, ctx)
                assert w.is_dominant()

    def test_ladder_identity(self):
        # lam = (r^p), mu = (q^p) in p x (q+r): weight p * sum(y_{q+j} - y_j)
        for p, q, r in itertools.product(range(1, 5), repeat=3):
            if r > q:
                continue
            w = rd.ktype_weight_U((r,) * p, (q,) * p, BoxContext(p, q + r))
            assert all(v == 0 for v in w.xs)
            for j in range(q + r):
                expect = -p if j < r else (p if j >= q else 0)
                assert w.ys[j] == expect

    def test_trivial_and_one_box(self):
        assert rd.ktype_weight_U((), (2, 2), BoxContext(2, 2)).is_zero()
        w = rd.ktype_weight_U((1,), (1,), BoxContext(1, 1))
        assert w.xs == (Fraction(1),) and w.ys == (Fraction(-1),)


class TestKtypeO:
    def test_ladder_identity(self):
        for p, q, r in itertools.product(range(1, 5), repeat=3):
            if r > q:
                continue
            ctx = BoxContext(p, q + r)
            orth = pt.ortho_classify((r,) * p, ctx)
            assert orth is not None
            s1, s2 = vz.sign_slots(orth)[0]
            w = rd.ktype_weight_O(orth, s1, s2)
            beta = (q + r) // 2
            assert all(v == 0 for v in w.xs)
            for j in range(1, beta + 1):
                assert w.ys[j - 1] == (p if j > beta - r else 0), (p, q, r, w)

    def test_sign_dependence_2x2(self):
        ctx = BoxContext(2, 2)
        orth = pt.ortho_classify((1, 1), ctx)
        plus = rd.ktype_weight_O(orth, None, 1)
        minus = rd.ktype_weight_O(orth, None, -1)
        assert plus.ys == (Fraction(2),) and minus.ys == (Fraction(-2),)
        with pytest.raises(ValueError):
            rd.ktype_weight_O(orth, -1, None)  # sign1 meaningless for type 2

    def test_all_variants_distinct_when_swaps_bite(self, orthogonal_by_box):
        for (p, q), orths in orthogonal_by_box.items():
            if p * q > 16:
                continue
            for o in orths:
                weights = [rd.ktype_weight_O(o, s1, s2) for s1, s2 in vz.sign_slots(o)]
                assert len({(w.xs, w.ys) for w in weights}) == len(weights)


class TestDegrees:
    def test_holomorphic_degree(self):
        assert rd.holomorphic_degree(0, 0, 3, 4) == 0
        assert rd.holomorphic_degree(3, 2, 3, 4) == 12
        assert rd.holomorphic_degree(1, 1, 2, 2) == 3

    def test_trivial_module_degree_zero(self):
        cp = pt.compatible_pair((), (4, 4, 4), BoxContext(3, 4))
        assert rd.degree_U(cp) == 0

    def test_levi_identity_O(self, orthogonal_by_box):
        for (p, q), orths in orthogonal_by_box.items():
            for o in orths:
                assert rd.degree_O(o) == pt.weight(o.lam)

    def test_column_ladder_O(self):
        for p in range(1, 5):
            for q in range(3, 6):
                orth = pt.ortho_classify((1,) * p, BoxContext(p, q))
                assert rd.degree_O(orth) == p


class TestRG:
    def test_values(self):
        assert rd.r_G("U", 2, 3) == 2
        assert rd.r_G("O", 5, 5) == 5
        assert rd.r_G("U", 1, 1) == 1
        with pytest.raises(ValueError):
            rd.r_G("U", 0, 3)


class TestDirac:
    def test_zero_at_catalog_ktypes(self):
        checked = 0
        for p, q in itertools.product(range(1, 7), repeat=2):
            if p + q > 7:
                continue
            for kind in ("U", "O"):
                for mod in vz.catalog(kind, p, q):
                    assert rd.dirac_bound(kind, p, q, mod.lowest_ktype) == 0, mod.label
                    checked += 1
        assert checked > 1000

    def test_strictly_negative_off_catalog(self):
        # chi = 0 is not of the form 2rho(u cap p) for the discrete-series
        # slot; a generic non-catalog K-type of wedge p gives a negative bound
        w = rd.Weight.make([3], [-3], "U")
        assert rd.dirac_bound("U", 1, 1, w) < 0

    def test_identity_path(self):
        # chi - rho_n already dominant for the standard system
        rs = rd.root_system("U", 1, 2)
        chi = rs.rho_n + rs.rho_n
        assert rd.dirac_bound("U", 1, 2, chi) == 0

    def test_cap(self):
        with pytest.raises(rd.CapError):
            rd.dirac_bound("U", 15, 15, rd.Weight.make([0] * 15, [0] * 15, "U"))
