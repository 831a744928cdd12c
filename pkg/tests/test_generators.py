import math

import numpy as np
import pytest

import divbounds as db
from divbounds.errors import LengthMismatch, NonFinite, UnknownMeasure

GRID = np.exp(np.linspace(math.log(1e-3), math.log(1e3), 601))


class TestCatalog:
    def test_ids_and_count(self):
        cat = db.catalog()
        assert tuple(cat) == db.CATALOG_IDS
        assert len(cat) == 9

    def test_normalization_at_one(self):
        assert db.catalog()["J"].f(1) == 0

    def test_d1_curvature_at_one(self):
        assert db.catalog()["D1"].f_second(1) == pytest.approx(1.0, abs=1e-15)

    def test_t_curvature_at_one(self):
        assert db.catalog()["T"].f_second(1) == pytest.approx(0.25, abs=1e-15)

    @pytest.mark.parametrize("mid", db.CATALOG_IDS)
    def test_convex_and_normalized_on_grid(self, mid):
        gen = db.catalog()[mid]
        assert abs(float(gen.f(1.0))) <= 1e-15
        assert float(np.min(gen.f_second(GRID))) > 0.0

    def test_generator_identities_pointwise(self):
        cat = db.catalog()
        fj = cat["J"].f(GRID)
        scale = 1.0 + np.abs(fj)
        assert np.max(np.abs(fj - (cat["D1"].f(GRID) + cat["D2"].f(GRID))) / scale) <= 1e-12
        assert np.max(np.abs(fj - 4.0 * (cat["I"].f(GRID) + cat["T"].f(GRID))) / scale) <= 1e-12
        d1 = cat["D1"].f(GRID)
        assert np.max(np.abs(d1 - 2.0 * (cat["F2"].f(GRID) + cat["G2"].f(GRID))) / scale) <= 1e-12

    def test_get_generator(self):
        assert db.get_generator("J") is db.catalog()["J"]
        with pytest.raises(UnknownMeasure):
            db.get_generator("NOPE")


class TestCheckGenerator:
    @pytest.mark.parametrize("mid", db.CATALOG_IDS)
    def test_finite_difference_agreement(self, mid):
        report = db.check_generator(db.catalog()[mid], GRID)
        assert report.max_abs_f_at_1 <= 1e-15
        assert report.min_f_second > 0.0
        assert report.max_f_prime_dev <= 1e-5
        assert report.max_f_second_dev <= 1e-5

    def test_phi_family_derivatives(self):
        for s in (-2.0, -0.5, 0.0, 0.5, 1.0, 1.7, 3.0):
            report = db.check_generator(db.phi_generator(s), GRID)
            assert report.max_abs_f_at_1 <= 1e-15
            assert report.min_f_second > 0.0
            assert report.max_f_prime_dev <= 1e-5
            assert report.max_f_second_dev <= 1e-5


class TestPhiGenerator:
    def test_power_branch(self):
        assert db.phi_generator(2).f(3.0) == pytest.approx(4.0, abs=1e-14)

    def test_zero_pole_branch(self):
        assert db.phi_generator(0).f(math.e) == pytest.approx(-1.0, abs=1e-14)

    def test_half_curvature(self):
        assert db.phi_generator(0.5).f_second(4.0) == pytest.approx(0.125, abs=1e-15)

    def test_pole_dispatch_threshold(self):
        assert db.phi_generator(1e-11).id == "PHI_S(0)"
        assert db.phi_generator(1.0 + 1e-11).id == "PHI_S(1)"
        assert db.phi_generator(1e-9).id != "PHI_S(0)"

    def test_one_pole_is_entropy_form(self):
        gen = db.phi_generator(1)
        x = 2.5
        assert gen.f(x) == pytest.approx(x * math.log(x), abs=1e-15)

    def test_non_finite_s(self):
        with pytest.raises(NonFinite):
            db.phi_generator(float("nan"))


class TestEvalCsiszar:
    def test_equal_pair_is_zero(self):
        d = db.normalize([2, 3, 5])
        assert db.eval_csiszar(db.catalog()["J"], d, d) == pytest.approx(0.0, abs=1e-15)

    def test_golden_j(self, golden_pair):
        P, Q = golden_pair
        assert db.eval_csiszar(db.catalog()["J"], P, Q) == pytest.approx(math.log(3), abs=1e-12)

    def test_golden_f2(self, golden_pair):
        P, Q = golden_pair
        assert db.eval_csiszar(db.catalog()["F2"], P, Q) == pytest.approx(0.1308123, abs=1e-6)

    def test_length_mismatch(self):
        with pytest.raises(LengthMismatch):
            db.eval_csiszar(db.catalog()["J"], db.normalize([1, 1]), db.normalize([1, 1, 1]))

    @pytest.mark.parametrize("mid", db.CATALOG_IDS)
    def test_nonnegative(self, mid, pairs_100):
        gen = db.catalog()[mid]
        for P, Q in pairs_100:
            assert db.eval_csiszar(gen, P, Q) >= -1e-12
