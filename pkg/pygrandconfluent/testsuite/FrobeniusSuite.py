"""FrobeniusSuite checks lambda-derivatives, second-solution residuals, Wronskian
invariance and the printed logarithmic series."""
import logging
from typing import List, Sequence
import numpy as np
from pygrandconfluent.GchFunction import second_solution_integral, wronskian_invariant
from pygrandconfluent.GchParams import GchParams, TerminationSpec
from pygrandconfluent.LogSeries import PrintedLogSeries
from pygrandconfluent.RecurrenceEngine import RecurrenceEngine
from pygrandconfluent.exceptions import GchError
from pygrandconfluent.testsuite.VerificationSuite import CheckRow, VerificationSuite
logger = logging.getLogger('GCH')

DERIVATIVE_TOL = 1e-6
RESIDUAL_TOL = 1e-8
WRONSKIAN_TOL = 1e-8
FIT_TOL = 1e-7
RESIDUAL_POINTS = (0.3, 0.7, 1.2)
WRONSKIAN_SPAN = (0.2, 3.0)
WRONSKIAN_POINTS = 9
STEP = 1e-6


class FrobeniusSuite(VerificationSuite):
    """Frobenius engine checks on integer and non-integer nu.

    Args:
        nus (Sequence[float], optional): nu values for residual and Wronskian checks
        mu (float, optional): mu
        eps (float, optional): eps
        big_omega (float, optional): Omega; negative keeps the first solution free of zeros
        power_cap (int, optional): Series length
        workers (int, optional): Threads
    """

    name = 'frobenius'

    def __init__(self, nus: Sequence[float] = (-2.0, 0.0, 0.5, 1.0, 3.0), mu: float = -1.0, eps: float = 1e-3,
                 big_omega: float = -0.7, power_cap: int = 96, workers: int = 1):
        super().__init__(workers)
        self.nus = tuple(nus)
        self.mu = mu
        self.eps = eps
        self.big_omega = big_omega
        self.power_cap = power_cap

    def params(self, nu: float) -> GchParams:
        """ Parameter set at one nu. """
        return GchParams(mu=self.mu, eps=self.eps, nu=nu, big_omega=self.big_omega)

    def tasks(self):
        tasks = [self._derivatives]
        for nu in self.nus:
            tasks.append(lambda v=nu: self._residuals(v))
            tasks.append(lambda v=nu: self._wronskian(v))
            if float(nu).is_integer():
                for numbers in (TerminationSpec(0, 0), TerminationSpec(1, 2)):
                    tasks.append(lambda v=nu, t=numbers: self._printed_log(v, t))
        return tasks

    def _derivatives(self) -> List[CheckRow]:
        """ Jet derivatives of C_n against central differences at a non-resonant lambda. """
        engine = RecurrenceEngine(GchParams(mu=self.mu, eps=self.eps, nu=0.5, big_omega=0.7))
        lam = 0.3
        jets = engine.coefficient_derivatives(lam, 10)
        upper = engine.exact_coefficients(lam + STEP, 1.0, 10)
        lower = engine.exact_coefficients(lam - STEP, 1.0, 10)
        rows = []
        for n, (value, derivative) in enumerate(jets):
            diff = (upper[n] - lower[n]) / (2 * STEP)
            scale = max(abs(diff), abs(value), 1e-300)
            rows.append(self.row('lambda_derivative', f'n={n}', abs(derivative - diff) / scale, 0.0,
                                 DERIVATIVE_TOL, relative=False))
        return rows

    def _residuals(self, nu: float) -> List[CheckRow]:
        p = self.params(nu)
        try:
            g1, g2 = RecurrenceEngine(p, self.power_cap).frobenius_solve()
        except GchError as err:
            return [self.error_row('second_solution_residual', f'nu={nu!r}', err)]
        rows = []
        for label, g in (('first_solution_residual', g1), ('second_solution_residual', g2)):
            for x in RESIDUAL_POINTS:
                rows.append(self.row(label, f'nu={nu!r} x={x!r}', g.residual(p, x), 0.0, RESIDUAL_TOL,
                                     relative=False))
        return rows

    def _spread(self, values) -> float:
        values = np.asarray(values)
        return float((values.max() - values.min()) / max(abs(values.mean()), 1e-300))

    def _wronskian(self, nu: float) -> List[CheckRow]:
        p = self.params(nu)
        xs = np.linspace(*WRONSKIAN_SPAN, WRONSKIAN_POINTS)
        try:
            g1, g2 = RecurrenceEngine(p, self.power_cap).frobenius_solve()
            series = [wronskian_invariant(g1.evaluate, g2.evaluate, p, float(x)) for x in xs]
            reduced = second_solution_integral(g1.evaluate, p, *WRONSKIAN_SPAN)
            integral = [wronskian_invariant(g1.evaluate, reduced, p, float(x)) for x in xs]
        except GchError as err:
            return [self.error_row('wronskian', f'nu={nu!r}', err)]
        return [
            self.row('wronskian_series', f'nu={nu!r}', self._spread(series), 0.0, WRONSKIAN_TOL, relative=False),
            self.row('wronskian_reduced_order', f'nu={nu!r}', self._spread(integral), 0.0, WRONSKIAN_TOL,
                     relative=False),
        ]

    def _printed_log(self, nu: float, numbers: TerminationSpec) -> List[CheckRow]:
        """ Printed logarithmic series against the equation; misses are findings. """
        case = f'nu={nu!r} numbers={numbers.as_tuple()}'
        try:
            audit = PrintedLogSeries(self.params(nu), numbers).audit()
        except GchError as err:
            return [self.error_row('printed_log_series', case, err, printed=True)]
        return [
            self.row('printed_log_residual', case, audit.max_residual, 0.0, RESIDUAL_TOL, relative=False,
                     printed=True, detail=audit.case.value),
            self.row('printed_log_fit', case, audit.fit_residual, 0.0, FIT_TOL, relative=False, printed=True,
                     detail=audit.case.value),
        ]
