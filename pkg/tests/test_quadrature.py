import pytest  # NOQA
import math
from pygrandconfluent.exceptions import DomainError
from pygrandconfluent.quadrature import halfline_moment, integrate_cube, integrate_halfline


class TestHalfline:

    def setup_class(self):
        pass

    def teardown_class(self):
        pass

    def setup_method(self, method):
        pass

    def teardown_method(self, method):
        pass

    def test_gaussian_second_moment(self):
        # int_0^inf x^2 e^(-x^2) dx
        rst = integrate_halfline(lambda x: 1.0, nu=2.0, mu=-2.0)
        assert rst.value == pytest.approx(math.sqrt(math.pi) / 4, rel=1e-10)
        assert rst.evaluations > 0

    def test_half_gaussian(self):
        rst = integrate_halfline(lambda x: 1.0, nu=0.0, mu=-1.0)
        assert rst.value == pytest.approx(math.sqrt(math.pi / 2), rel=1e-10)

    def test_zero_integrand(self):
        assert integrate_halfline(lambda x: 0.0, nu=1.0, mu=-1.0).value == 0.0

    def test_singular_endpoint(self):
        # int_0^inf x^-1/2 e^(-x^2/2) dx = 2^(-3/4) Gamma(1/4)
        rst = integrate_halfline(lambda x: 1.0, nu=-0.5, mu=-1.0)
        assert rst.value == pytest.approx(2 ** -0.75 * math.gamma(0.25), rel=1e-9)

    def test_moment_matches_quadrature(self):
        exact = halfline_moment(1.0, nu=2.0, mu=-1.0, eps=0.05)
        numeric = integrate_halfline(lambda x: x, nu=2.0, mu=-1.0, eps=0.05).value
        assert exact == pytest.approx(numeric, rel=1e-9)

    def test_moment_eps_zero(self):
        assert halfline_moment(0.0, nu=2.0, mu=-2.0) == pytest.approx(math.sqrt(math.pi) / 4, rel=1e-14)

    def test_weight_domain(self):
        with pytest.raises(DomainError):
            integrate_halfline(lambda x: 1.0, nu=1.0, mu=1.0)
        with pytest.raises(DomainError):
            halfline_moment(0.0, nu=-1.5, mu=-1.0)


class TestCube:

    def setup_class(self):
        pass

    def teardown_class(self):
        pass

    def setup_method(self, method):
        pass

    def teardown_method(self, method):
        pass

    def test_unit_square(self):
        rst = integrate_cube(lambda s, t: 1.0 + 0.0 * s * t, 2)
        assert rst.value == pytest.approx(1.0, rel=1e-13)

    def test_endpoint_singularity(self):
        # int_0^1 t^-1/2 (1-t)^-1/2 dt = pi
        rst = integrate_cube(lambda t: 1.0 / ((t * (1 - t)) ** 0.5), 1, 64)
        assert rst.value == pytest.approx(math.pi, rel=1e-8)

    def test_bad_arguments(self):
        with pytest.raises(ValueError):
            integrate_cube(lambda t: t, 1, 1)
        with pytest.raises(ValueError):
            integrate_cube(lambda t: t, 4)
