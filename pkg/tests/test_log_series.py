import pytest  # NOQA
import logging
import math
from pygrandconfluent.GchParams import GchParams, TerminationSpec
from pygrandconfluent.LogSeries import LogCase, PrintedLogSeries, log_case_for, second_solution_log
from pygrandconfluent.exceptions import CaseMismatchError


class TestPrintedLogSeries:

    def setup_class(self):
        pass

    def teardown_class(self):
        pass

    def setup_method(self, method):
        pass

    def teardown_method(self, method):
        pass

    @pytest.mark.parametrize('nu,case', [(0.0, LogCase.NU_NONPOSITIVE), (-3.0, LogCase.NU_NONPOSITIVE),
                                         (1.0, LogCase.NU_EQUALS_ONE), (4.0, LogCase.NU_POSITIVE_EXCEPT_ONE)])
    def test_case_for(self, nu, case):
        assert log_case_for(nu) == case

    def test_non_integer_nu(self):
        with pytest.raises(CaseMismatchError):
            log_case_for(0.5)

    def test_requested_case_mismatch(self):
        with pytest.raises(CaseMismatchError):
            PrintedLogSeries(GchParams(mu=-1.0, eps=0.0, nu=2.0), TerminationSpec(0, 0), LogCase.NU_EQUALS_ONE)

    def test_lowest_term_is_log(self):
        params = GchParams(mu=-1.0, eps=0.0, nu=1.0)
        g = second_solution_log(LogCase.NU_EQUALS_ONE, TerminationSpec(0, 0), params)
        assert g.has_log
        for x in (0.5, 1.0, 2.0):
            assert g(x) == pytest.approx(math.log(x), abs=1e-15)

    def test_eps_terms_present(self):
        params = GchParams(mu=-1.0, eps=1e-3, nu=2.0)
        g = PrintedLogSeries(params, TerminationSpec(1, 2)).build()
        assert any(order == 1 for order, _ in g.coeffs)
        assert any(order == 1 for order, _ in g.log_part)

    def test_audit_flags_lowest_term(self, caplog):
        params = GchParams(mu=-1.0, eps=0.0, nu=1.0)
        with caplog.at_level(logging.WARNING, logger='GCH'):
            audit = PrintedLogSeries(params, TerminationSpec(0, 0)).audit()
        assert audit.case == LogCase.NU_EQUALS_ONE
        assert not audit.consistent
        assert audit.max_residual > 1e-3
        assert len(audit.residuals) == 3
        assert 'deviates' in caplog.text
