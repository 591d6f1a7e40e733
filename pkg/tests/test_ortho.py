import pytest  # NOQA
import math
from pygrandconfluent.GchParams import GchParams, TerminationSpec
from pygrandconfluent.OrthoExpansion import OrthoExpansion


class TestOrthogonality:

    def setup_class(self):
        self.plain = OrthoExpansion(GchParams.from_gamma(-2.0, 0.0, 1.5))
        self.shifted = OrthoExpansion(GchParams.from_gamma(-2.0, 1e-3, 1.5))

    def teardown_class(self):
        pass

    def setup_method(self, method):
        pass

    def teardown_method(self, method):
        pass

    def test_lowest_norm(self):
        report = self.plain.diagonal_norm(TerminationSpec(0, 0))
        assert report.integral == pytest.approx(math.sqrt(math.pi) / 4, rel=1e-10)
        assert report.predicted == pytest.approx(math.sqrt(math.pi) / 4, rel=1e-14)
        assert report.passed

    @pytest.mark.parametrize('a,b', [((0, 0), (1, 1)), ((1, 2), (2, 3)), ((0, 1), (3, 3))])
    def test_distinct_alpha0_orthogonal(self, a, b):
        report = self.plain.cross_integral(TerminationSpec(*a), TerminationSpec(*b))
        assert report.predicted == 0.0
        assert report.passed
        assert abs(report.integral) < 1e-9

    def test_shared_alpha0_coincide(self):
        report = self.plain.cross_integral(TerminationSpec(1, 1), TerminationSpec(1, 3))
        assert report.predicted == pytest.approx(self.plain.leading_norm(1), rel=1e-14)
        assert report.passed

    def test_moment_oracle(self):
        report = self.shifted.diagonal_norm(TerminationSpec(2, 3))
        assert report.oracle == pytest.approx(report.integral, rel=1e-8)

    def test_moment_integral_of_constant(self):
        poly = self.plain.polynomial(TerminationSpec(0, 0))
        assert self.plain.moment_integral(poly) == pytest.approx(math.sqrt(math.pi) / 4, rel=1e-12)
        assert self.plain.moment_integral(poly * poly) == pytest.approx(math.sqrt(math.pi) / 4, rel=1e-12)

    def test_printed_norm_reduces_at_eps_zero(self):
        term = TerminationSpec(2, 2)
        assert self.plain.printed_norm(term) == self.plain.leading_norm(2)


class TestExpansion:

    def setup_class(self):
        self.basis = OrthoExpansion(GchParams.from_gamma(-2.0, 0.0, 1.5))

    def teardown_class(self):
        pass

    def setup_method(self, method):
        pass

    def teardown_method(self, method):
        pass

    def test_recovers_basis_polynomial(self):
        target = self.basis.polynomial(TerminationSpec(1, 1))
        rst = self.basis.expand_function(target, (1, 1))
        assert rst.coefficients[(1, 1)] == pytest.approx(1.0, rel=1e-8)
        assert abs(rst.coefficients[(0, 0)]) < 1e-8
        assert rst.reconstruct(0.7) == pytest.approx(target(0.7), rel=1e-8)

    def test_error_shrinks_with_cap(self):
        def psi(x):
            return math.exp(-x * x / 4)

        coarse = self.basis.expand_function(psi, (2, 2))
        fine = self.basis.expand_function(psi, (6, 6))
        assert abs(fine.reconstruct(1.0) - psi(1.0)) < abs(coarse.reconstruct(1.0) - psi(1.0))

    def test_flags_slow_decay(self):
        rst = self.basis.expand_function(lambda x: math.exp(x * x / 2), (0, 0))
        assert rst.tail_violation
