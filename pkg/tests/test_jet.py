import pytest  # NOQA
from pygrandconfluent.Jet import Jet


class TestJet:

    def setup_class(self):
        pass

    def teardown_class(self):
        pass

    def setup_method(self, method):
        pass

    def teardown_method(self, method):
        pass

    def test_variable(self):
        x = Jet.variable(2.0, 3)
        assert x.order == 3
        assert x.value == 2.0
        assert x.derivative == 1.0

    def test_square(self):
        x = Jet.variable(3.0, 2)
        sq = x * x
        assert sq.coeffs.tolist() == [9.0, 6.0, 1.0]

    def test_reciprocal(self):
        x = Jet.variable(2.0, 2)
        inv = 1.0 / x
        # 1/(2+h) = 1/2 - h/4 + h^2/8
        assert inv.coeffs.tolist() == pytest.approx([0.5, -0.25, 0.125], rel=1e-15)

    def test_mixed_scalar_arithmetic(self):
        x = Jet.variable(1.0, 1)
        y = 3 - 2 * x + 0.5
        assert y.coeffs.tolist() == [1.5, -2.0]

    def test_division_cancels_common_zero(self):
        quot = Jet([0.0, 2.0, 4.0]) / Jet([0.0, 1.0, 1.0])
        assert quot.coeffs.tolist() == [2.0, 2.0]

    def test_division_pole(self):
        with pytest.raises(ZeroDivisionError):
            Jet([1.0, 1.0]) / Jet([0.0, 1.0])

    def test_division_by_zero(self):
        with pytest.raises(ZeroDivisionError):
            Jet([1.0, 1.0]) / Jet([0.0, 0.0])
        with pytest.raises(ZeroDivisionError):
            Jet([1.0, 1.0]) / 0

    def test_truncates_to_shorter(self):
        total = Jet([1.0, 2.0, 3.0]) + Jet([1.0, 1.0])
        assert total.order == 1
        assert total.coeffs.tolist() == [2.0, 3.0]

    def test_order_zero_derivative(self):
        assert Jet.constant(4.0, 0).derivative == 0.0

    def test_empty(self):
        with pytest.raises(ValueError):
            Jet([])
