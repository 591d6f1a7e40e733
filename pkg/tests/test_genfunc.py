import pytest  # NOQA
from pygrandconfluent.GchParams import GchParams
from pygrandconfluent.GeneratingFunction import GeneratingFunction
from pygrandconfluent.exceptions import DomainError


class TestGeneratingFunction:

    def setup_class(self):
        self.gen = GeneratingFunction(GchParams.from_gamma(-1.0, 0.0, 1.5))

    def teardown_class(self):
        pass

    def setup_method(self, method):
        pass

    def teardown_method(self, method):
        pass

    @pytest.mark.parametrize('v0,v1,z', [(0.1, 0.1, 0.2), (0.3, 0.1, 1.0), (0.1, 0.3, 0.2)])
    def test_forms_agree_at_eps_zero(self, v0, v1, z):
        check = self.gen.check(v0, v1, z)
        assert check.agrees
        assert check.rhs_integral == pytest.approx(check.lhs, rel=1e-5)
        assert check.rhs_series == pytest.approx(check.lhs, rel=1e-5)

    def test_term_a_forms(self):
        appell = self.gen.term_a_appell(0.3, 0.3, 1.0)
        series = self.gen.term_a_series(0.3, 0.3, 1.0)
        assert series == pytest.approx(appell, rel=1e-10)

    def test_lhs_tail(self):
        rst = self.gen.lhs(0.3, 0.3, 0.2)
        assert rst.terms > 2
        assert rst.tail < 1e-12

    def test_domain(self):
        with pytest.raises(DomainError):
            self.gen.lhs(1.0, 0.1, 0.2)
        with pytest.raises(DomainError):
            self.gen.x_of(-0.5)
