"""GenFuncSuite evaluates the generating function three ways on a grid."""
import itertools
import logging
from typing import List, Sequence
from pygrandconfluent.GchParams import GchParams
from pygrandconfluent.GeneratingFunction import AGREEMENT, GeneratingFunction
from pygrandconfluent.exceptions import GchError
from pygrandconfluent.testsuite.VerificationSuite import CheckRow, VerificationSuite
logger = logging.getLogger('GCH')

TERM_A_TOL = 1e-10


class GenFuncSuite(VerificationSuite):
    """Sum of polynomials against the integral and Appell forms.
    At eps = 0 disagreement is a failure; the eps term is a printed form.

    Args:
        vs (Sequence[float], optional): Values for v0 and v1
        zs (Sequence[float], optional): z values
        eps (float, optional): Nonzero eps checked beside eps = 0
        gammas (Sequence[float], optional): gamma values
        mu (float, optional): mu
        workers (int, optional): Threads
    """

    name = 'genfunc'

    def __init__(self, vs: Sequence[float] = (0.1, 0.3), zs: Sequence[float] = (0.2, 1.0), eps: float = 1e-3,
                 gammas: Sequence[float] = (1.5, 2.5), mu: float = -1.0, workers: int = 1):
        super().__init__(workers)
        self.vs = tuple(vs)
        self.zs = tuple(zs)
        self.eps = eps
        self.gammas = tuple(gammas)
        self.mu = mu

    def tasks(self):
        tasks = []
        for gamma, eps in itertools.product(self.gammas, (0.0, self.eps)):
            gen = GeneratingFunction(GchParams.from_gamma(self.mu, eps, gamma))
            for v0, v1, z in itertools.product(self.vs, self.vs, self.zs):
                tasks.append(lambda g=gen, a=v0, b=v1, c=z: self._point(g, a, b, c))
        return tasks

    def _point(self, gen: GeneratingFunction, v0: float, v1: float, z: float) -> List[CheckRow]:
        p = gen.params
        printed = p.eps != 0.0
        case = f'gamma={p.gamma!r} eps={p.eps!r} v0={v0!r} v1={v1!r} z={z!r}'
        try:
            check = gen.check(v0, v1, z)
            appell = gen.term_a_appell(v0, v1, z)
            series = gen.term_a_series(v0, v1, z)
        except GchError as err:
            return [self.error_row('generating_function', case, err, printed=printed)]
        detail = f'lhs={check.lhs!r} integral={check.rhs_integral!r} series={check.rhs_series!r}'
        tolerance = max(AGREEMENT, check.truncation_tail / max(abs(check.lhs), 1e-300))
        return [
            self.row('lhs_vs_integral', case, check.rhs_integral, check.lhs, tolerance, printed=printed,
                     detail=detail),
            self.row('lhs_vs_series', case, check.rhs_series, check.lhs, tolerance, printed=printed,
                     detail=detail),
            self.row('term_a_forms', case, series, appell, TERM_A_TOL),
        ]
