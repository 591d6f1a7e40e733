"""GeneratingFunction compares the weighted sum of first-kind polynomials with its
integral and multi-series closed forms."""
import logging
import math
from dataclasses import dataclass
import numpy as np
from pygrandconfluent.GchFunction import GchFunction
from pygrandconfluent.GchParams import GchParams, TerminationSpec
from pygrandconfluent.exceptions import DomainError, NonConvergenceError
from pygrandconfluent.quadrature import DEFAULT_NODES, integrate_cube
from pygrandconfluent.special import SeriesControl, appell_f1, beta, gamma_ratio, pochhammer
from pygrandconfluent.utils import KahanSum, relative_deviation
logger = logging.getLogger('GCH')

GENFUNC_CONTROL = SeriesControl(max_terms=400, rel_tol=1e-16, abs_tol=1e-15)
AGREEMENT = 1e-6


@dataclass(frozen=True)
class SeriesValue:
    """Truncated sum with a bound on the dropped tail."""
    value: float
    tail: float
    terms: int


@dataclass(frozen=True)
class IntegralValue:
    """Integral form split into its eps^0 and eps terms."""
    value: float
    first: float
    second: float
    abs_error: float


@dataclass(frozen=True)
class GenFuncCheck:
    """Three evaluations of the generating function at one grid point."""
    v0: float
    v1: float
    z: float
    eps: float
    lhs: float
    rhs_integral: float
    rhs_series: float
    truncation_tail: float
    deviation: float

    @property
    def agrees(self) -> bool:
        """ Pairwise agreement within max(1e-6 relative, tail). """
        return self.deviation <= AGREEMENT or self.deviation * abs(self.lhs) <= self.truncation_tail


class GeneratingFunction:
    """Generating function of the first-kind polynomials; x is tied to z by x = sqrt(2z/|mu|).

    Args:
        params (GchParams): mu < 0
        ctl (SeriesControl, optional): Truncation control for the sums
    """

    def __init__(self, params: GchParams, ctl: SeriesControl = GENFUNC_CONTROL):
        params.require_negative_mu()
        self.params = params
        self.ctl = ctl
        self.gch = GchFunction(params)

    def x_of(self, z: float) -> float:
        """ x = sqrt(2 z / |mu|) """
        if z < 0:
            raise DomainError('z', z, 'z >= 0')
        return math.sqrt(2 * z / abs(self.params.mu))

    @staticmethod
    def _check_v(v0: float, v1: float):
        if not abs(v0) < 1:
            raise DomainError('v0', v0, '|v0| < 1')
        if not abs(v1) < 1:
            raise DomainError('v1', v1, '|v1| < 1')

    def lhs(self, v0: float, v1: float, z: float) -> SeriesValue:
        """ sum_{alpha1} sum_{alpha0<=alpha1} B(alpha1+1, 1/2)/alpha0! v0^alpha1 v1^alpha0 QW(z).
        Args:
            v0 (float): |v0| < 1
            v1 (float): |v1| < 1
            z (float): z >= 0
        Returns:
            SeriesValue: Sum with the geometric tail bound
        """
        self._check_v(v0, v1)
        x = self.x_of(z)
        acc = KahanSum()
        small = 0
        envelope = 0.0
        for a1 in range(self.ctl.max_terms):
            weight = beta(a1 + 1, 0.5) * v0 ** a1
            level = KahanSum()
            peak = 0.0
            for a0 in range(a1 + 1):
                factor = v1 ** a0 / math.factorial(a0)
                q = self.gch.qw(TerminationSpec(a0, a1), x).value
                level.add(weight * factor * q)
                peak = max(peak, abs(factor * q))
            acc.add(level.value)
            envelope = abs(weight) * peak
            small = small + 1 if envelope < self.ctl.abs_tol else 0
            if small >= 2:
                tail = envelope * abs(v0) / (1 - abs(v0))
                logger.debug('genfunc lhs v0=%r v1=%r z=%r terms=%d tail=%.3e', v0, v1, z, a1 + 1, tail)
                return SeriesValue(acc.value, tail, a1 + 1)
        raise NonConvergenceError('genfunc lhs', self.ctl.max_terms, envelope, acc.value)

    def rhs_integral(self, v0: float, v1: float, z: float, nodes: int = DEFAULT_NODES) -> IntegralValue:
        """ Integral form: a 1-D eps^0 integral plus -(eps/2) x (1-v1)^-gamma times a triple integral.
        Args:
            v0 (float): |v0| < 1
            v1 (float): |v1| < 1
            z (float): z >= 0
            nodes (int, optional): Gauss-Legendre nodes per axis
        Returns:
            IntegralValue: Total and parts
        """
        self._check_v(v0, v1)
        p = self.params
        gamma = p.gamma
        x = self.x_of(z)
        w = v0 * v1

        def first(t):
            return (1 - t) ** -0.5 / (1 - v0 * t) * (1 - w * t) ** -gamma * np.exp(-z * w * t / (1 - w * t))

        one = integrate_cube(first, 1, nodes)
        second_value = 0.0
        error = one.abs_error_estimate
        if p.eps != 0.0:
            def triple(u, t, q):
                bracket = p.omega / 2 - z * q * t * (1 - u) * w / ((1 - v1) * (1 - u * v1))
                exponent = -(z * q * v0 / (1 - u * v0)) * (u - t * (u - v1) / (1 - v1))
                weight = (1 - u) ** -0.5 / (1 - v0 * u) * t ** (gamma - 1.5) * (1 - q) ** -0.5
                return weight * bracket * np.exp(exponent)

            three = integrate_cube(triple, 3, nodes)
            front = -(p.eps / 2) * x * (1 - v1) ** -gamma
            second_value = front * three.value
            error += abs(front) * three.abs_error_estimate
        return IntegralValue(one.value + second_value, one.value, second_value, error)

    def term_a_appell(self, v0: float, v1: float, z: float) -> float:
        """ sum_n Gamma(1/2) (-z v0 v1)^n / Gamma(n+3/2) F1(n+1; 1, gamma+n; n+3/2; v0, v0 v1) """
        self._check_v(v0, v1)
        gamma = self.params.gamma
        acc = KahanSum()
        small = 0
        for n in range(self.ctl.max_terms):
            lead = (-z * v0 * v1) ** n
            term = 0.0
            if lead != 0.0:
                term = gamma_ratio([0.5], [n + 1.5]) * lead * appell_f1(n + 1, 1, gamma + n, n + 1.5, v0, v0 * v1)
            acc.add(term)
            small = small + 1 if self.ctl.is_small(term, acc.value) else 0
            if small >= 2:
                return acc.value
        raise NonConvergenceError('term_a_appell', self.ctl.max_terms, abs(term), acc.value)

    def term_a_series(self, v0: float, v1: float, z: float) -> float:
        """ sum_{n,m,j} B(n+m+j+1, 1/2) (gamma+n)_m (-z)^n / (n! m!) v0^(n+m+j) v1^(n+m), grouped by n+m+j. """
        self._check_v(v0, v1)
        gamma = self.params.gamma
        acc = KahanSum()
        inner = KahanSum()
        small = 0
        for degree in range(self.ctl.max_terms):
            level = KahanSum()
            for n in range(degree + 1):
                m = degree - n
                level.add(pochhammer(gamma + n, m) * (-z) ** n / (math.factorial(n) * math.factorial(m)))
            inner.add(level.value * v1 ** degree)
            term = beta(degree + 1, 0.5) * v0 ** degree * inner.value
            acc.add(term)
            small = small + 1 if self.ctl.is_small(term, acc.value) else 0
            if small >= 2:
                return acc.value
        raise NonConvergenceError('term_a_series', self.ctl.max_terms, abs(term), acc.value)

    def _eps_bracket(self, v0: float, v1: float, z: float) -> float:
        """ Double series multiplying -(eps/2) x in the multi-series form. """
        if v1 == 0:
            raise DomainError('v1', v1, 'v1 != 0 for the eps series')
        p = self.params
        gamma = p.gamma
        zv = z * v0
        acc = KahanSum()
        small = 0
        for total in range(self.ctl.max_terms):
            level = KahanSum()
            for n in range(total + 1):
                m = total - n
                one = (-1) ** (n + m + 1) * (n + m + 1) * gamma_ratio([0.5, 1.5], [m + 2.5, n + m + 2.5]) \
                    * (1 - v1) ** -(n + gamma + 1) * zv ** (n + m + 1) * v1 ** (n + 1) / (gamma + n + 0.5)
                if one != 0.0:
                    one *= appell_f1(m + 1, n + m + 2, -n, m + 2.5, v0, 1 / v1)
                two = p.omega * (-1) ** (n + m) * gamma_ratio([0.5], [m + 1.5]) * pochhammer(n + 1, m) \
                    * (1 - v1) ** -(n + gamma) * zv ** (n + m) * v1 ** n \
                    / ((gamma + n - 0.5) * pochhammer(1.5, n) * pochhammer(n + 1.5, m))
                if two != 0.0:
                    two *= appell_f1(m + 1, n + m + 1, -n, m + 1.5, v0, 1 / v1)
                level.add(one + two)
            acc.add(level.value)
            small = small + 1 if self.ctl.is_small(level.value, acc.value) else 0
            if small >= 2:
                return acc.value
        raise NonConvergenceError('genfunc eps series', self.ctl.max_terms, abs(level.value), acc.value)

    def rhs_series(self, v0: float, v1: float, z: float) -> float:
        """ Appell form of the eps^0 term minus (eps/2) x times the eps double series. """
        value = self.term_a_appell(v0, v1, z)
        if self.params.eps != 0.0:
            value -= self.params.eps / 2 * self.x_of(z) * self._eps_bracket(v0, v1, z)
        return value

    def check(self, v0: float, v1: float, z: float, nodes: int = DEFAULT_NODES) -> GenFuncCheck:
        """ Evaluate all three forms and their largest pairwise relative deviation. """
        left = self.lhs(v0, v1, z)
        integral = self.rhs_integral(v0, v1, z, nodes)
        series = self.rhs_series(v0, v1, z)
        values = (left.value, integral.value, series)
        deviation = max(relative_deviation(a, b) for a, b in
                        ((values[0], values[1]), (values[0], values[2]), (values[1], values[2])))
        tail = left.tail + integral.abs_error
        rst = GenFuncCheck(v0, v1, z, self.params.eps, left.value, integral.value, series, tail, deviation)
        if not rst.agrees:
            logger.warning('Generating function forms disagree at v0=%r v1=%r z=%r eps=%r: '
                           'lhs=%.17g integral=%.17g series=%.17g', v0, v1, z, self.params.eps, *values)
        return rst
