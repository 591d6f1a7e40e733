import pytest  # NOQA
import math
import mpmath
from scipy import special as sc
from pygrandconfluent.GchFunction import (
    GchFunction, SeriesMode, f_poly, least_squares_fit, pi_series, second_solution_integral, wronskian_invariant
)
from pygrandconfluent.GchParams import GchParams, TerminationSpec
from pygrandconfluent.RecurrenceEngine import LambdaBranch, RecurrenceEngine, pi_first_term
from pygrandconfluent.exceptions import DomainError, PoleError, PreconditionError, ZeroCrossingError


class TestPolynomials:

    def setup_class(self):
        self.params = GchParams.from_gamma(-1.0, 0.01, 1.5)
        self.gch = GchFunction(self.params)

    def teardown_class(self):
        pass

    def setup_method(self, method):
        pass

    def teardown_method(self, method):
        pass

    def test_f_poly(self):
        assert f_poly(1, 1.5, 1.0) == pytest.approx(0.5, rel=1e-15)
        assert f_poly(0, 2.5, 3.0) == 1.0

    def test_f_poly_pole(self):
        with pytest.raises(PoleError):
            f_poly(1, -1.0, 0.5)

    def test_lowest_qw(self):
        for x in (0.0, 0.5, 1.0, 2.0):
            rst = self.gch.qw(TerminationSpec(0, 0), x)
            assert rst.eps0_part == 1.0
            assert rst.value == pytest.approx(1 - self.params.eps * x / 2, rel=1e-14)

    def test_qw_at_origin(self):
        rst = self.gch.qw(TerminationSpec(2, 3), 0.0)
        assert rst.z == 0.0
        assert rst.eps1_part == 0.0
        assert rst.value == pytest.approx(f_poly(2, 1.5, 0.0), rel=1e-15)

    def test_qw_parity(self):
        term = TerminationSpec(1, 2)
        plus = self.gch.qw(term, 0.8)
        minus = self.gch.qw(term, -0.8)
        assert minus.eps0_part == pytest.approx(plus.eps0_part, rel=1e-15)
        assert minus.eps1_part == pytest.approx(-plus.eps1_part, rel=1e-15)

    def test_qw_needs_negative_mu(self):
        with pytest.raises(DomainError):
            GchFunction(GchParams.from_gamma(1.0, 0.0, 1.5)).qw(TerminationSpec(0, 0), 1.0)

    def test_pi_series_order(self):
        with pytest.raises(PreconditionError):
            pi_series(2, 1, 1.5, 1.0, 0.5)

    def test_rw_lowest(self):
        gch = GchFunction(GchParams.from_gamma(-1.0, 0.0, 1.5))
        rst = gch.rw(0, 0, 1.0)
        assert rst.value == pytest.approx(0.5 ** -0.5, rel=1e-14)

    def test_rw_origin(self):
        with pytest.raises(DomainError):
            GchFunction(GchParams.from_gamma(-1.0, 0.0, 1.5)).rw(0, 0, 0.0)

    def test_evaluate_dispatch(self):
        term = TerminationSpec(1, 1)
        direct = self.gch.qw(term, 0.6)
        routed = self.gch.evaluate(0.6, SeriesMode.POLYNOMIAL, LambdaBranch.ROOT0, term)
        assert routed == direct
        with pytest.raises(PreconditionError):
            self.gch.evaluate(0.6, SeriesMode.POLYNOMIAL)


def second_kind_oracle(psi0, psi1, gamma, x):
    """ z^(1-gamma) split into (A_psi0, Lambda) with mpmath, gamma nudged off the removable point. """
    mpmath.mp.dps = 50
    try:
        gam = mpmath.mpf(gamma) + mpmath.mpf('1e-30')
        g = 2 - gam
        h = (gam - mpmath.mpf(0.5)) / 2 + 1 - gam
        z = mpmath.mpf(x) ** 2 / 2
        prefactor = z ** (1 - gam)
        norm = mpmath.rf(g, psi0)
        even = norm * mpmath.hyp1f1(-psi0, g, z)
        odd = mpmath.mpf(0)
        for n in range(psi0 + 1):
            fn = mpmath.rf(-psi0, n) * z ** n / (mpmath.factorial(n) * mpmath.rf(g, n))
            for k in range(psi1 - n + 1):
                odd += fn * (n + h) * mpmath.rf(n - psi1, k) * z ** k / (
                    mpmath.rf(n + mpmath.mpf(0.5), k + 1) * mpmath.rf(n + g - mpmath.mpf(0.5), k + 1))
        return float(prefactor * even), float(-(mpmath.mpf(x) / 2) * prefactor * norm * odd)
    finally:
        mpmath.mp.dps = 15


class TestSecondKindPolynomials:

    def setup_class(self):
        pass

    def teardown_class(self):
        pass

    def setup_method(self, method):
        pass

    def teardown_method(self, method):
        pass

    @pytest.mark.parametrize('l,psi0,psi1', [(0, 0, 0), (0, 1, 2), (1, 0, 0), (1, 2, 3), (2, 1, 1), (2, 2, 4)])
    @pytest.mark.parametrize('x', [0.5, 1.3])
    def test_quarkonium_gamma_without_eps(self, l, psi0, psi1, x):
        gamma = l + 1.5
        rst = GchFunction(GchParams.from_gamma(-1.0, 0.0, gamma)).rw(psi0, psi1, x)
        even, _ = second_kind_oracle(psi0, 0, gamma, x)
        assert rst.eps1_part == 0.0
        assert rst.value == pytest.approx(even, rel=1e-12)

    @pytest.mark.parametrize('l,psi0,psi1', [(0, 0, 0), (0, 1, 1), (0, 2, 3), (1, 0, 0), (2, 0, 1), (2, 1, 1)])
    @pytest.mark.parametrize('x', [0.5, 1.3])
    def test_quarkonium_gamma_with_eps(self, l, psi0, psi1, x):
        gamma = l + 1.5
        rst = GchFunction(GchParams.from_gamma(-1.0, 1e-3, gamma)).rw(psi0, psi1, x)
        even, odd = second_kind_oracle(psi0, psi1, gamma, x)
        assert rst.eps0_part == pytest.approx(even, rel=1e-12)
        assert rst.eps1_part == pytest.approx(odd, rel=1e-10, abs=1e-14)
        assert rst.value == pytest.approx(even + 1e-3 * odd, rel=1e-12)

    def test_lowest_leading_term_limit(self):
        # l = 0 on the second branch: g = 1/2 and h = 0
        assert pi_first_term(0, 0.5, 0.0) == 1.0
        assert pi_first_term(0, 0.5 + 1e-9, 0.5e-9) == pytest.approx(1.0, rel=1e-6)

    def test_true_pole_with_eps(self):
        gch = GchFunction(GchParams.from_gamma(-1.0, 1e-3, 2.5))
        with pytest.raises(PoleError):
            gch.rw(1, 1, 1.0)
        assert gch.rw(0, 0, 1.0).eps1_part != 0.0
        assert GchFunction(GchParams.from_gamma(-1.0, 0.0, 2.5)).rw(1, 1, 1.0).eps1_part == 0.0


class TestInfiniteSeries:

    def setup_class(self):
        pass

    def teardown_class(self):
        pass

    def setup_method(self, method):
        pass

    def teardown_method(self, method):
        pass

    @pytest.mark.parametrize('x', [0.3, 1.0, 2.0])
    def test_matches_kummer(self, x):
        # Omega = 0.6 gives alpha0 = 0.3, no terminating eigennumber
        gch = GchFunction(GchParams.from_gamma(-1.0, 0.0, 1.5, 0.6))
        z = x * x / 2
        expected = sc.gamma(1.8) / sc.gamma(1.5) * sc.hyp1f1(-0.3, 1.5, z)
        rst = gch.evaluate(x, SeriesMode.INFINITE)
        assert rst.value == pytest.approx(expected, rel=1e-12)
        assert rst.truncated_at > 0

    def test_refuses_polynomial(self):
        gch = GchFunction(GchParams.from_gamma(-1.0, 0.0, 1.5, 4.0))
        with pytest.raises(PreconditionError):
            gch.infinite_series_eval(LambdaBranch.ROOT0, 1.0)

    def test_envelope_grows(self):
        gch = GchFunction(GchParams.from_gamma(-1.0, 0.0, 1.5))
        assert gch.asymptotic_envelope(4.0) > gch.asymptotic_envelope(2.0) > 1.0


class TestSecondSolution:

    def setup_class(self):
        self.params = GchParams(mu=-1.0, eps=1e-3, nu=0.5, big_omega=-0.7)
        self.g1, self.g2 = RecurrenceEngine(self.params).frobenius_solve()

    def teardown_class(self):
        pass

    def setup_method(self, method):
        pass

    def teardown_method(self, method):
        pass

    def test_reduced_order_wronskian(self):
        g2 = second_solution_integral(self.g1, self.params, 0.2, 3.0)
        for x in (0.5, 1.0, 2.5):
            assert wronskian_invariant(self.g1, g2, self.params, x) == pytest.approx(1.0, rel=1e-8)

    def test_series_wronskian_constant(self):
        values = [wronskian_invariant(self.g1, self.g2, self.params, x) for x in (0.3, 1.0, 2.0)]
        assert values[1] == pytest.approx(values[0], rel=1e-8)
        assert values[2] == pytest.approx(values[0], rel=1e-8)

    def test_reduced_order_anchor(self):
        g2 = second_solution_integral(self.g1, self.params, 0.2, 3.0)
        assert g2(0.2) == 0.0
        with pytest.raises(DomainError):
            g2(3.5)

    def test_zero_crossing(self):
        with pytest.raises(ZeroCrossingError):
            second_solution_integral(lambda x, d=0: x - 1.0 if d == 0 else float(d == 1), self.params, 0.5, 2.0)

    def test_least_squares(self):
        coef, residual = least_squares_fit(lambda x: 2 * x + 3, (lambda x: x, lambda x: 1.0), [0.0, 1.0, 2.0, 3.0])
        assert coef.tolist() == pytest.approx([2.0, 3.0], rel=1e-12)
        assert residual < 1e-12
