"""OrthoSuite checks weighted inner products of first-kind polynomials and the
radial normalization constants."""
import itertools
import logging
import math
from typing import List, Sequence
from pygrandconfluent.GchParams import GchParams, TerminationSpec
from pygrandconfluent.OrthoExpansion import OrthoExpansion
from pygrandconfluent.QQbarSpectrum import PhysicsParams, QQbarSpectrum, QuantumNumbers
from pygrandconfluent.exceptions import GchError
from pygrandconfluent.testsuite.VerificationSuite import CheckRow, VerificationSuite
logger = logging.getLogger('GCH')

CROSS_TOL = 1e-10
NORM_TOL = 1e-8
CLOSED_FORM_TOL = 1e-12
SPOT_VALUE = math.sqrt(math.pi) / 4


class OrthoSuite(VerificationSuite):
    """Orthogonality and norms at eps = 0 and at eps.

    Args:
        gamma (float, optional): gamma
        mu (float, optional): mu
        eps (float, optional): Nonzero eps checked beside eps = 0
        max_alpha (int, optional): Largest alpha1
        masses (Sequence[float], optional): Quark masses for the normalization rows (b = 1)
        workers (int, optional): Threads
    """

    name = 'ortho'

    def __init__(self, gamma: float = 1.5, mu: float = -2.0, eps: float = 1e-3, max_alpha: int = 4,
                 masses: Sequence[float] = (0.0, 0.01), workers: int = 1):
        super().__init__(workers)
        self.gamma = gamma
        self.mu = mu
        self.eps = eps
        self.max_alpha = max_alpha
        self.masses = tuple(masses)

    def terms(self) -> List[TerminationSpec]:
        """ Every alpha0 <= alpha1 <= max_alpha. """
        return [TerminationSpec(a0, a1) for a1 in range(self.max_alpha + 1) for a0 in range(a1 + 1)]

    def tasks(self):
        tasks = [self._spot]
        for eps in (0.0, self.eps):
            basis = OrthoExpansion(GchParams.from_gamma(self.mu, eps, self.gamma))
            for a, b in itertools.combinations(self.terms(), 2):
                tasks.append(lambda o=basis, x=a, y=b: self._cross(o, x, y))
            for a in self.terms():
                tasks.append(lambda o=basis, x=a: self._diagonal(o, x))
        for m in self.masses:
            for l in range(3):
                for n0 in range(1, 4):
                    tasks.append(lambda mass=m, ll=l, n=n0: self._normalization(mass, ll, n))
        return tasks

    def _case(self, basis: OrthoExpansion, *terms: TerminationSpec) -> str:
        pairs = ' '.join(str(t.as_tuple()) for t in terms)
        return f'gamma={self.gamma!r} mu={self.mu!r} eps={basis.params.eps!r} {pairs}'

    def _spot(self) -> List[CheckRow]:
        basis = OrthoExpansion(GchParams.from_gamma(-2.0, 0.0, 1.5))
        report = basis.diagonal_norm(TerminationSpec(0, 0))
        return [self.row('diagonal_spot', 'gamma=1.5 mu=-2.0 alpha0=0', report.integral, SPOT_VALUE, NORM_TOL)]

    def _cross(self, basis: OrthoExpansion, a: TerminationSpec, b: TerminationSpec) -> List[CheckRow]:
        """ At eps = 0 a miss is a failure; at eps it measures the printed orthogonality. """
        printed = basis.params.eps != 0.0
        case = self._case(basis, a, b)
        try:
            report = basis.cross_integral(a, b)
        except GchError as err:
            return [self.error_row('cross_integral', case, err)]
        scale = math.sqrt(basis.leading_norm(a.alpha0) * basis.leading_norm(b.alpha0))
        tolerance = report.tolerance_used / scale if printed else CROSS_TOL
        return [self.row('cross_integral', case, report.integral / scale, report.predicted / scale, tolerance,
                         relative=False, printed=printed)]

    def _diagonal(self, basis: OrthoExpansion, a: TerminationSpec) -> List[CheckRow]:
        case = self._case(basis, a)
        try:
            report = basis.diagonal_norm(a)
        except GchError as err:
            return [self.error_row('diagonal_norm', case, err)]
        rows = [self.row('diagonal_moment_oracle', case, report.integral, report.oracle, NORM_TOL)]
        rows.append(self.row('diagonal_printed_norm', case, report.predicted, report.oracle,
                             report.tolerance_used / abs(report.predicted), printed=True))
        return rows

    def _normalization(self, m: float, l: int, n0: int) -> List[CheckRow]:
        spectrum = QQbarSpectrum(PhysicsParams(m, 1.0, l))
        qn = QuantumNumbers(l, 0, (n0,))
        case = f'm={m!r} b=1.0 l={l} n0={n0}'
        rows = []
        try:
            if m == 0:
                rows.append(self.row('massless_closed_forms', case, spectrum.normalization_constant(qn),
                                     spectrum.massless_normalization_constant(qn), CLOSED_FORM_TOL))
                rows.append(self.row('unit_norm', case, spectrum.norm_integral(qn), 1.0, NORM_TOL))
            else:
                exact = spectrum.exact_normalization_constant(qn)
                rows.append(self.row('unit_norm', case, spectrum.norm_integral(qn, exact), 1.0, NORM_TOL))
                tolerance = max(NORM_TOL, 10 * (2 * m) ** 2)
                rows.append(self.row('printed_normalization', case, spectrum.normalization_constant(qn), exact,
                                     tolerance, printed=True))
        except GchError as err:
            rows.append(self.error_row('normalization', case, err, printed=m != 0))
        return rows
