"""Closed logarithmic second solutions for integer nu, summed term by term as printed,
and an audit of those series against the generic Frobenius engine."""
import logging
import math
from collections import defaultdict
from dataclasses import dataclass
from enum import Enum
from typing import Dict, Optional, Tuple
import numpy as np
from pygrandconfluent.GchFunction import least_squares_fit
from pygrandconfluent.GchParams import GchParams, TerminationSpec
from pygrandconfluent.RecurrenceEngine import DEFAULT_POWER_CAP, RecurrenceEngine
from pygrandconfluent.SeriesSolution import SeriesSolution
from pygrandconfluent.exceptions import CaseMismatchError, VanishingDenominatorError
from pygrandconfluent.special import gamma_ratio, pochhammer
from pygrandconfluent.utils import KahanSum
logger = logging.getLogger('GCH')

AUDIT_POINTS = (0.3, 0.7, 1.2)
RESIDUAL_LIMIT = 1e-8
FIT_LIMIT = 1e-7


class LogCase(str, Enum):
    """Integer-nu family of the printed logarithmic solution."""
    NU_NONPOSITIVE = 'nu_nonpos_or_one'  # nu = 0, -1, -2, ...
    NU_POSITIVE_EXCEPT_ONE = 'nu_pos_except_one'  # nu = 2, 3, ...
    NU_EQUALS_ONE = 'nu_equals_one'


def log_case_for(nu: float) -> LogCase:
    """ LogCase of an integer nu. """
    if not float(nu).is_integer():
        raise CaseMismatchError('nu', 'integer nu', f'nu={nu!r} has no logarithmic solution')
    if nu <= 0:
        return LogCase.NU_NONPOSITIVE
    return LogCase.NU_EQUALS_ONE if nu == 1 else LogCase.NU_POSITIVE_EXCEPT_ONE


def _recip(value: float, k: int, label: str) -> float:
    if value == 0:
        raise VanishingDenominatorError(k, label, value)
    return 1.0 / value


@dataclass(frozen=True)
class LogSeriesAudit:
    """ODE residuals of the eps^0 part and its distance from the engine's solution space."""
    case: LogCase
    residuals: Tuple[float, ...]
    max_residual: float
    fit_residual: float
    consistent: bool


class PrintedLogSeries:
    """Printed logarithmic second solution for one integer nu.

    The three families share one layout: an F-type polynomial times (1 + ln x)
    (ln x alone when nu = 1), a bracket-sum correction, and an eps x term with
    a ln x double sum and three plain double sums. The nu <= 0 family runs on
    the second-kind parameters (2 - gamma, omega/2 + 1 - gamma) times z^(1-gamma).

    Args:
        params (GchParams): mu, eps and an integer nu
        numbers (TerminationSpec): (alpha0, alpha1), or (psi0, psi1) for nu <= 0
        case (LogCase, optional): Expected family; mismatch raises
        power_cap (int, optional): Terms above this power are dropped
    """

    def __init__(self, params: GchParams, numbers: TerminationSpec, case: Optional[LogCase] = None,
                 power_cap: int = DEFAULT_POWER_CAP):
        params.require_negative_mu()
        actual = log_case_for(params.nu)
        if case is not None and LogCase(case) != actual:
            raise CaseMismatchError('case', f'{actual.value} for nu={params.nu!r}',
                                    f'Requested {LogCase(case).value} but nu={params.nu!r} gives {actual.value}')
        self.params = params
        self.numbers = numbers
        self.case = actual
        self.power_cap = power_cap
        gamma = params.gamma
        self.scale = -params.mu / 2
        if actual == LogCase.NU_NONPOSITIVE:
            self.g = 2 - gamma
            self.h = params.omega / 2 + 1 - gamma
            self.lam = 1 - params.nu
            self.prefactor = self.scale ** (1 - gamma)
            self.with_one = True
            self.eigenvalue = -2 * params.mu * (numbers.alpha0 + 1 - gamma)
        else:
            self.g = gamma
            self.h = params.omega / 2
            self.lam = 0.0
            self.prefactor = 1.0
            self.with_one = actual == LogCase.NU_POSITIVE_EXCEPT_ONE
            self.eigenvalue = -2 * params.mu * numbers.alpha0
        self._plain: Dict[Tuple[int, int], KahanSum] = defaultdict(KahanSum)
        self._log: Dict[Tuple[int, int], KahanSum] = defaultdict(KahanSum)

    def _add(self, order: int, power: int, value: float, log: bool = False):
        if power > self.power_cap or value == 0.0:
            return
        table = self._log if log else self._plain
        table[(order, power)].add(self.prefactor * value)

    def _f(self, n: int) -> float:
        n0 = self.numbers.alpha0
        return pochhammer(-n0, n) / (math.factorial(n) * pochhammer(self.g, n))

    def _u(self, n: int, k: int) -> float:
        """ Gamma(n+1/2) Gamma(n+g-1/2) (n-n1)_k / (Gamma(n+k+3/2) Gamma(n+k+g+1/2)) """
        g = self.g
        ratio = gamma_ratio([n + 0.5, n + g - 0.5], [n + k + 1.5, n + k + g + 0.5])
        return ratio * pochhammer(n - self.numbers.alpha1, k)

    def _even_family(self, norm: float):
        n0 = self.numbers.alpha0
        g = self.g
        for n in range(n0 + 1):
            c = norm * self._f(n) * self.scale ** n
            self._add(0, 2 * n, c, log=True)
            if self.with_one:
                self._add(0, 2 * n, c)
        for n in range(1, n0 + 1):
            bracket = KahanSum()
            for k in range(n):
                bracket.add(_recip(k - n0, k, 'k-alpha0') - _recip(k + 1, k, 'k+1') - _recip(k + g, k, 'k+gamma'))
            self._add(0, 2 * n, norm * self._f(n) / 2 * bracket.value * self.scale ** n)

    def _odd_family(self, norm: float):
        n0, n1 = self.numbers.as_tuple()
        g, h, s = self.g, self.h, self.scale
        front = -0.5 * norm
        for n in range(n0 + 1):
            fn = self._f(n)
            shape = 0.5 - (n + g / 2) * (n + h) * _recip((n + 0.5) * (n + g - 0.5), n, 'n+gamma-1/2')
            for k in range(n1 - n + 1):
                u = self._u(n, k)
                power = 2 * (n + k) + 1
                self._add(1, power, front * fn * (n + h) * u * s ** (n + k), log=True)
                self._add(1, power, front * fn * shape * u * s ** (n + k))
        for n in range(1, n1 + 1):
            self._add(1, 2 * n + 1, -front * self._single_bracket(n) * s ** n)
        for n in range(2, n1 + 1):
            level = KahanSum()
            for j in range(1, min(n - 1, n0) + 1):
                level.add(self._mixed_bracket(n, j))
            self._add(1, 2 * n + 1, -front * level.value * s ** n)

    def _p1(self, start: int, stop: int) -> float:
        rst = 1.0
        for p in range(start, stop):
            rst *= (p - self.numbers.alpha1) * _recip((p + 1.5) * (p + self.g + 0.5), p, 'p+gamma+1/2')
        return rst

    def _p0(self, stop: int) -> float:
        rst = 1.0
        for p in range(stop):
            rst *= (p - self.numbers.alpha0) * _recip((p + 1) * (p + self.g), p, 'p+gamma')
        return rst

    def _s0(self, start: int, stop: int) -> float:
        acc = KahanSum()
        for k in range(start, stop):
            acc.add(_recip(self.numbers.alpha0 - k, k, 'alpha0-k') + _recip(k + 1, k, 'k+1')
                    + _recip(k + self.g, k, 'k+gamma'))
        return acc.value

    def _s1(self, start: int, stop: int) -> float:
        acc = KahanSum()
        for k in range(start, stop):
            acc.add(_recip(self.numbers.alpha1 - k, k, 'alpha1-k') + _recip(k + 1.5, k, 'k+3/2')
                    + _recip(k + self.g + 0.5, k, 'k+gamma+1/2'))
        return acc.value

    def _single_bracket(self, n: int) -> float:
        g, h = self.g, self.h
        rst = 0.0
        p1 = self._p1(0, n)
        if p1 != 0.0:
            rst += h * _recip(g - 0.5, 0, 'gamma-1/2') * p1 * self._s1(0, n)
        p0 = self._p0(n)
        if p0 != 0.0:
            rst += (n + h) / 2 * _recip((n + 0.5) * (n + g - 0.5), n, 'n+gamma-1/2') * p0 * self._s0(0, n)
        return rst

    def _mixed_bracket(self, n: int, j: int) -> float:
        product = self._p1(j, n) * self._p0(j)
        if product == 0.0:
            return 0.0
        front = (j + self.h) / 2 * _recip((j + 0.5) * (j + self.g - 0.5), j, 'j+gamma-1/2')
        return front * product * (self._s0(0, j) + self._s1(j, n))

    def build(self) -> SeriesSolution:
        """ Sum the printed series into a SeriesSolution with log_part populated. """
        self._plain.clear()
        self._log.clear()
        norm = gamma_ratio([self.numbers.alpha0 + self.g], [self.g])
        self._even_family(norm)
        if self.params.eps != 0.0:
            self._odd_family(norm)
        coeffs = {key: acc.value for key, acc in self._plain.items()}
        logs = {key: acc.value for key, acc in self._log.items()}
        powers = [power for _, power in list(coeffs) + list(logs)] or [0]
        top = max(powers)
        last = max(abs(coeffs.get((top % 2, top), 0.0)), abs(logs.get((top % 2, top), 0.0)))
        return SeriesSolution(self.lam, coeffs, self.params.eps, logs, top, True, last)

    def audit(self, points=AUDIT_POINTS, fit_points: int = 12) -> LogSeriesAudit:
        """ Check the eps^0 part against the equation with eps = 0 and the eigenvalue Omega0.
        Mismatches are logged, never corrected.
        Args:
            points (tuple, optional): Residual sample points
            fit_points (int, optional): Number of least-squares points on [0.3, 1.2]
        Returns:
            LogSeriesAudit: Residuals and fit residual
        """
        base = self.params.replace(eps=0.0, big_omega=self.eigenvalue)
        printed = self.build().order_part(0)
        residuals = tuple(printed.residual(base, x) for x in points)
        g1, g2 = RecurrenceEngine(base).frobenius_solve()
        _, fit = least_squares_fit(printed.evaluate, (g1.evaluate, g2.evaluate), np.linspace(0.3, 1.2, fit_points))
        worst = max(residuals)
        consistent = worst < RESIDUAL_LIMIT and fit < FIT_LIMIT
        if not consistent:
            logger.warning('Printed logarithmic series %s with %s deviates from the equation: '
                           'residual %.3e, fit residual %.3e', self.case.value, self.numbers.as_tuple(), worst, fit)
        return LogSeriesAudit(self.case, residuals, worst, fit, consistent)


def second_solution_log(case: LogCase, numbers: TerminationSpec, params: GchParams,
                        power_cap: int = DEFAULT_POWER_CAP) -> SeriesSolution:
    """ Printed logarithmic second solution for integer nu. """
    return PrintedLogSeries(params, numbers, case, power_cap).build()
