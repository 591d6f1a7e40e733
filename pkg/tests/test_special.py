import pytest  # NOQA
import logging
import math
import mpmath
from pygrandconfluent.exceptions import DivergenceError, DomainError, NonConvergenceError, PoleError, PreconditionError
from pygrandconfluent.special import (
    AdditionVariant, SeriesControl, appell_f1, assoc_laguerre, beta, gamma_ratio, gauss_2f1, kummer_addition,
    kummer_m, kummer_u, laguerre, log_gamma, pochhammer
)


class TestGammaFamily:

    def setup_class(self):
        mpmath.mp.dps = 30

    def teardown_class(self):
        mpmath.mp.dps = 15

    def setup_method(self, method):
        pass

    def teardown_method(self, method):
        pass

    def test_gamma_ratio_factorial(self):
        assert gamma_ratio([5.0]) == pytest.approx(24.0, rel=1e-14)

    def test_gamma_ratio_denominator_pole_vanishes(self):
        assert gamma_ratio([1.0], [0.0]) == 0.0
        assert gamma_ratio([2.5], [-3.0]) == 0.0

    def test_gamma_ratio_numerator_pole_raises(self):
        with pytest.raises(PoleError):
            gamma_ratio([-2.0])

    def test_gamma_ratio_sign(self):
        # Gamma(-0.5) = -2 sqrt(pi), Gamma(-1.5) = 4 sqrt(pi) / 3
        assert gamma_ratio([-0.5], [-1.5]) == pytest.approx(-1.5, rel=1e-14)

    def test_log_gamma_sign(self):
        lg = log_gamma(-0.5)
        assert lg.sign == -1.0
        assert lg.value == pytest.approx(math.log(2 * math.sqrt(math.pi)), rel=1e-14)

    def test_pochhammer(self):
        assert pochhammer(3, 4) == 360.0
        assert pochhammer(-2, 3) == 0.0
        assert pochhammer(1.5, 0) == 1.0
        assert pochhammer(0.5, 40) == pytest.approx(float(mpmath.rf(0.5, 40)), rel=1e-12)

    def test_pochhammer_rejects_negative_length(self):
        with pytest.raises(PreconditionError):
            pochhammer(1.0, -1)

    def test_beta_symmetric(self):
        assert beta(2, 3) == pytest.approx(1 / 12, rel=1e-14)
        assert beta(0.3, 1.7) == pytest.approx(beta(1.7, 0.3), rel=1e-14)


class TestPolynomials:

    def setup_class(self):
        pass

    def teardown_class(self):
        pass

    def setup_method(self, method):
        pass

    def teardown_method(self, method):
        pass

    def test_laguerre_degree_two(self):
        z = 0.7
        assert laguerre(2, z) == pytest.approx(1 - 2 * z + z * z / 2, rel=1e-14)

    @pytest.mark.parametrize('n,k,z', [(0, 0.5, 1.0), (3, 0.5, 2.0), (6, 1.5, 0.3), (10, 2.0, 4.0)])
    def test_assoc_laguerre_matches_mpmath(self, n, k, z):
        assert assoc_laguerre(n, k, z) == pytest.approx(float(mpmath.laguerre(n, k, z)), rel=1e-11, abs=1e-13)


class TestHypergeometric:

    def setup_class(self):
        mpmath.mp.dps = 30

    def teardown_class(self):
        mpmath.mp.dps = 15

    def setup_method(self, method):
        pass

    def teardown_method(self, method):
        pass

    def test_kummer_m_terminates(self):
        z = 1.2
        assert kummer_m(-2, 1.5, z) == pytest.approx(1 - 4 * z / 3 + z * z / 3.75, rel=1e-14)

    @pytest.mark.parametrize('a,b,z', [(0.3, 1.7, 2.0), (-0.35, 1.5, 0.8), (2.5, 0.75, 5.0)])
    def test_kummer_m_matches_mpmath(self, a, b, z):
        assert kummer_m(a, b, z) == pytest.approx(float(mpmath.hyp1f1(a, b, z)), rel=1e-13)

    def test_kummer_m_pole(self):
        with pytest.raises(PoleError):
            kummer_m(0.5, -1.0, 1.0)

    def test_kummer_u_power_identity(self):
        # U(a, a+1, z) = z^-a
        assert kummer_u(0.5, 1.5, 2.0) == pytest.approx(2.0 ** -0.5, rel=1e-13)

    def test_kummer_u_integer_b(self):
        assert kummer_u(1.0, 1.0, 1.0) == pytest.approx(float(mpmath.hyperu(1, 1, 1)), rel=1e-9)
        assert kummer_u(2.0, 3.0, 0.5) == pytest.approx(float(mpmath.hyperu(2, 3, 0.5)), rel=1e-9)

    @pytest.mark.parametrize('a,b,z', [(1.3, 0.4, 40.0), (0.5, 2.7, 15.0), (2.0, -0.5, 60.0)])
    def test_kummer_u_large_z(self, a, b, z):
        assert kummer_u(a, b, z) == pytest.approx(float(mpmath.hyperu(a, b, z)), rel=1e-9)

    def test_kummer_u_large_z_negative_a(self):
        assert kummer_u(-2.0, 0.5, 25.0) == pytest.approx(float(mpmath.hyperu(-2, 0.5, 25)), rel=1e-10)

    def test_kummer_u_logs_branch(self, caplog):
        with caplog.at_level(logging.DEBUG, logger='GCH'):
            kummer_u(0.5, 1.5, 2.0)
            assert 'two-M path' in caplog.text
            caplog.clear()
            assert kummer_u(0.5, 1.5, 30.0) == pytest.approx(30.0 ** -0.5, rel=1e-10)
            assert 'integral path' in caplog.text
            caplog.clear()
            kummer_u(-1.0, 0.5, 20.0)
            assert 'hyperu path' in caplog.text

    def test_kummer_u_domain(self):
        with pytest.raises(DomainError):
            kummer_u(1.0, 2.0, -1.0)
        with pytest.raises(PreconditionError):
            kummer_u(-1.0, 2.0, 1.0)

    def test_gauss_2f1_log(self):
        assert gauss_2f1(1, 1, 2, 0.5) == pytest.approx(2 * math.log(2), rel=1e-14)

    def test_gauss_2f1_terminating_beyond_unit_disk(self):
        # 2F1(-n, b; b; z) = (1-z)^n
        assert gauss_2f1(-2, 1, 1, 3.0) == pytest.approx(4.0, rel=1e-14)

    def test_gauss_2f1_divergence(self):
        with pytest.raises(DivergenceError):
            gauss_2f1(0.5, 1, 2, 1.0)

    def test_appell_f1_matches_mpmath(self):
        expected = float(mpmath.appellf1(0.5, 1, 0.7, 1.8, 0.3, 0.2))
        assert appell_f1(0.5, 1, 0.7, 1.8, 0.3, 0.2) == pytest.approx(expected, rel=1e-12)

    def test_appell_f1_reduces_to_2f1(self):
        assert appell_f1(0.5, 1.2, 0.7, 1.8, 0.4, 0.0) == pytest.approx(gauss_2f1(0.5, 1.2, 1.8, 0.4), rel=1e-13)

    def test_appell_f1_terminating_y_channel(self):
        expected = sum(float(mpmath.rf(1, n) * mpmath.rf(-2, n) / (mpmath.rf(2.5, n) * mpmath.factorial(n)) * 4.0 ** n
                             * mpmath.hyp2f1(1 + n, 2, 2.5 + n, 0.3)) for n in range(3))
        assert appell_f1(1, 2, -2, 2.5, 0.3, 4.0) == pytest.approx(expected, rel=1e-11)

    @pytest.mark.parametrize('variant', [AdditionVariant.A, AdditionVariant.B])
    def test_kummer_addition(self, variant):
        a, b, x, y = 0.4, 1.3, 0.5, 0.3
        assert kummer_addition(a, b, x, y, variant) == pytest.approx(kummer_m(a, b, x + y), rel=1e-12)

    def test_non_convergence(self):
        with pytest.raises(NonConvergenceError) as info:
            kummer_m(0.5, 1.5, 10.0, SeriesControl(max_terms=5))
        assert info.value.terms == 5
        assert info.value.field == 'max_terms'

    def test_series_control_validation(self):
        with pytest.raises(ValueError):
            SeriesControl(max_terms=0)
        with pytest.raises(ValueError):
            SeriesControl(rel_tol=0.0)
