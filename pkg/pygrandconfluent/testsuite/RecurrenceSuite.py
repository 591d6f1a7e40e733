"""RecurrenceSuite compares recurrence coefficients with the closed-form polynomial
and checks that the eps^0 part solves the confluent equation."""
import logging
from typing import List, Sequence
from numpy.polynomial import polynomial as P
from pygrandconfluent.GchParams import GchParams, TerminationSpec
from pygrandconfluent.RecurrenceEngine import RecurrenceEngine
from pygrandconfluent.special import gamma_ratio
from pygrandconfluent.testsuite.VerificationSuite import CheckRow, VerificationSuite
logger = logging.getLogger('GCH')

COEFF_TOL = 1e-12
KUMMER_TOL = 1e-10
KUMMER_POINTS = (0.1, 0.5, 1.0, 2.0, 5.0)


class RecurrenceSuite(VerificationSuite):
    """Recurrence oracle over alpha0 <= alpha1 <= max_alpha and a gamma grid.

    Args:
        gammas (Sequence[float], optional): gamma values
        max_alpha (int, optional): Largest alpha1
        mu (float, optional): mu
        eps (float, optional): eps
        workers (int, optional): Threads
    """

    name = 'recurrence'

    def __init__(self, gammas: Sequence[float] = (0.3, 1.5, 2.7), max_alpha: int = 6, mu: float = -1.0,
                 eps: float = 1e-3, workers: int = 1):
        super().__init__(workers)
        self.gammas = tuple(gammas)
        self.max_alpha = max_alpha
        self.mu = mu
        self.eps = eps

    def tasks(self):
        tasks = []
        for gamma in self.gammas:
            for a1 in range(self.max_alpha + 1):
                for a0 in range(a1 + 1):
                    tasks.append(lambda g=gamma, t=TerminationSpec(a0, a1): self._coefficients(g, t))
            for a0 in range(self.max_alpha + 1):
                tasks.append(lambda g=gamma, a=a0: self._kummer(g, a))
            tasks.append(lambda g=gamma: self._eps_zero(g))
        return tasks

    def _coefficients(self, gamma: float, term: TerminationSpec) -> List[CheckRow]:
        engine = RecurrenceEngine(GchParams.from_gamma(self.mu, self.eps, gamma))
        c0 = gamma_ratio([gamma + term.alpha0], [gamma])
        built = engine.build_coefficients(0.0, term, c0)
        closed = engine.closed_form_coefficients(term)
        rows = []
        for order in (0, 1):
            keys = sorted(set(k for k in list(built.coeffs) + list(closed.coeffs) if k[0] == order))
            scale = max(abs(closed.coeffs.get(k, 0.0)) for k in keys)
            worst = max(abs(built.coeffs.get(k, 0.0) - closed.coeffs.get(k, 0.0)) for k in keys)
            case = f'gamma={gamma!r} alpha={term.as_tuple()} eps_order={order}'
            rows.append(self.row('closed_form', case, worst / max(scale, 1e-300), 0.0, COEFF_TOL, relative=False))
        return rows

    def _kummer(self, gamma: float, alpha0: int) -> List[CheckRow]:
        """ z f'' + (gamma - z) f' + alpha0 f for the eps^0 coefficients rewritten in z. """
        p = GchParams.from_gamma(self.mu, 0.0, gamma)
        built = RecurrenceEngine(p).build_coefficients(0.0, TerminationSpec(alpha0, alpha0))
        scale = -self.mu / 2
        f = P.Polynomial([built.coefficient(0, 2 * n) / scale ** n for n in range(alpha0 + 1)])
        df, d2f = f.deriv(1), f.deriv(2)
        rows = []
        for z in KUMMER_POINTS:
            terms = (z * d2f(z), (gamma - z) * df(z), alpha0 * f(z))
            residual = abs(sum(terms)) / max(sum(abs(t) for t in terms), 1e-300)
            rows.append(self.row('kummer_residual', f'gamma={gamma!r} alpha0={alpha0} z={z!r}', residual, 0.0,
                                 KUMMER_TOL, relative=False))
        return rows

    def _eps_zero(self, gamma: float) -> List[CheckRow]:
        p = GchParams.from_gamma(self.mu, 0.0, gamma)
        built = RecurrenceEngine(p).build_coefficients(0.0, TerminationSpec(self.max_alpha, self.max_alpha))
        odd = [abs(c) for (order, _), c in built.coeffs.items() if order == 1]
        return [self.row('eps_zero_odd', f'gamma={gamma!r}', max(odd), 0.0, 0.0, relative=False)]
