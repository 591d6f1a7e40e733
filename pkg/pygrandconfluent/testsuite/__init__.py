"""Verification suites run by `gch verify` and by the unit tests."""

from pygrandconfluent.testsuite.VerificationSuite import CheckRow, Status, VerificationSuite, count_status
from pygrandconfluent.testsuite.RecurrenceSuite import RecurrenceSuite
from pygrandconfluent.testsuite.FrobeniusSuite import FrobeniusSuite
from pygrandconfluent.testsuite.OrthoSuite import OrthoSuite
from pygrandconfluent.testsuite.GenFuncSuite import GenFuncSuite
from pygrandconfluent.testsuite.SpectrumSuite import SpectrumSuite

SUITES = {
    RecurrenceSuite.name: RecurrenceSuite,
    FrobeniusSuite.name: FrobeniusSuite,
    OrthoSuite.name: OrthoSuite,
    GenFuncSuite.name: GenFuncSuite,
    SpectrumSuite.name: SpectrumSuite,
}

__all__ = ['CheckRow', 'Status', 'VerificationSuite', 'count_status', 'RecurrenceSuite', 'FrobeniusSuite',
           'OrthoSuite', 'GenFuncSuite', 'SpectrumSuite', 'SUITES']
