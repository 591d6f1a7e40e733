"""GchFunction evaluates first- and second-kind grand confluent hypergeometric
polynomials, their non-terminating series and reduction-of-order solutions."""
import logging
import math
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Optional, Tuple
import numpy as np
from scipy import integrate
from pygrandconfluent.GchParams import GchParams, TerminationSpec
from pygrandconfluent.RecurrenceEngine import LambdaBranch, RecurrenceEngine, pi_first_term, pi_next_ratio
from pygrandconfluent.exceptions import (
    DomainError, NonConvergenceError, PoleError, PreconditionError, ZeroCrossingError
)
from pygrandconfluent.special import DEFAULT_CONTROL, SeriesControl, erf, gamma_ratio
from pygrandconfluent.utils import KahanSum, is_nonpositive_integer, power_limit
logger = logging.getLogger('GCH')


class SeriesMode(str, Enum):
    """A polynomial is never treated as a truncated infinite series."""
    POLYNOMIAL = 'polynomial'
    INFINITE = 'infinite'


@dataclass(frozen=True)
class GchEvaluation:
    """One evaluation split by eps order: value = eps0_part + eps*eps1_part."""
    value: float
    eps0_part: float
    eps1_part: float
    z: float
    x: float
    truncated_at: Optional[int] = None
    last_term: Optional[float] = None

    @classmethod
    def combine(cls, eps: float, eps0: float, eps1: float, z: float, x: float, **kwargs) -> 'GchEvaluation':
        """ Assemble from the two orders. """
        return cls(eps0 + eps * eps1, eps0, eps1, z, x, **kwargs)


def _check_order(n: int, name: str):
    if int(n) != n or n < 0:
        raise PreconditionError(name, 'non-negative integer')


def confluent_polynomial(alpha0: int, gamma: float, z: float) -> float:
    """ sum_{n<=alpha0} (-alpha0)_n / (n! (gamma)_n) z^n """
    acc = KahanSum(1.0)
    term = 1.0
    for n in range(int(alpha0)):
        term *= (n - alpha0) / ((n + 1) * (gamma + n)) * z
        acc.add(term)
    return acc.value


def f_poly(alpha0: int, gamma: float, z: float) -> float:
    """ Confluent hypergeometric polynomial Gamma(alpha0+gamma)/Gamma(gamma) sum (-alpha0)_n z^n/(n!(gamma)_n).
    Args:
        alpha0 (int): Eigennumber
        gamma (float): gamma, not a non-positive integer
        z (float): Argument
    Returns:
        float: F_alpha0(gamma; z)
    """
    _check_order(alpha0, 'alpha0')
    if is_nonpositive_integer(gamma):
        raise PoleError(gamma, 'gamma')
    return gamma_ratio([alpha0 + gamma], [gamma]) * confluent_polynomial(alpha0, gamma, z)


def _double_sum(alpha0: int, alpha1: int, gamma: float, half_omega: float, z: float) -> float:
    """ sum_n (-a0)_n z^n/(n!(g)_n) sum_k (n+h) G(n+1/2)G(n+g-1/2)(n-a1)_k z^k / (G(k+n+3/2)G(k+n+g+1/2)) """
    outer = KahanSum()
    fn = 1.0
    for n in range(alpha0 + 1):
        inner = KahanSum()
        tk = pi_first_term(n, gamma, half_omega)
        for k in range(alpha1 - n + 1):
            inner.add(tk)
            tk *= pi_next_ratio(n, k, alpha1, gamma) * z
        outer.add(fn * inner.value)
        fn *= (n - alpha0) / ((n + 1) * (gamma + n)) * z
    return outer.value


def pi_series(alpha0: int, alpha1: int, gamma: float, omega: float, z: float) -> float:
    """ Normalized double sum multiplying -(eps/2) x in the first-kind polynomial.
    Args:
        alpha0 (int): Even-family eigennumber
        alpha1 (int): Odd-family eigennumber, >= alpha0
        gamma (float): gamma
        omega (float): omega
        z (float): Argument
    Returns:
        float: Pi(gamma; z)
    """
    _check_order(alpha0, 'alpha0')
    _check_order(alpha1, 'alpha1')
    if alpha0 > alpha1:
        raise PreconditionError('alpha0', 'alpha0 <= alpha1', f'alpha0={alpha0} exceeds alpha1={alpha1}')
    return gamma_ratio([alpha0 + gamma], [gamma]) * _double_sum(alpha0, alpha1, gamma, omega / 2, z)


def a_poly(psi0: int, gamma: float, z: float) -> float:
    """ Second-kind even polynomial: f_poly with gamma -> 2-gamma. """
    return f_poly(psi0, 2 - gamma, z)


def lambda_series(psi0: int, psi1: int, gamma: float, omega: float, z: float) -> float:
    """ Second-kind double sum: pi_series with gamma -> 2-gamma and omega/2 -> omega/2 + 1 - gamma. """
    _check_order(psi0, 'psi0')
    _check_order(psi1, 'psi1')
    if psi0 > psi1:
        raise PreconditionError('psi0', 'psi0 <= psi1', f'psi0={psi0} exceeds psi1={psi1}')
    shifted = 2 - gamma
    return gamma_ratio([psi0 + shifted], [shifted]) * _double_sum(psi0, psi1, shifted, omega / 2 + 1 - gamma, z)


class GchFunction:
    """Evaluator bound to one parameter set (mu < 0 required for evaluation)."""

    def __init__(self, params: GchParams):
        self.params = params

    def z_of(self, x: float) -> float:
        """ z = -mu x^2 / 2 """
        return -self.params.mu * x * x / 2

    def qw(self, term: TerminationSpec, x: float) -> GchEvaluation:
        """ First-kind polynomial QW_{alpha0, alpha1}(gamma; z).
        Args:
            term (TerminationSpec): Eigennumbers
            x (float): Evaluation point
        Returns:
            GchEvaluation: eps0 part F, eps1 part -(x/2) Pi
        """
        p = self.params
        p.require_negative_mu()
        z = self.z_of(x)
        eps0 = f_poly(term.alpha0, p.gamma, z)
        eps1 = 0.0 if p.eps == 0 else -(x / 2) * pi_series(term.alpha0, term.alpha1, p.gamma, p.omega, z)
        return GchEvaluation.combine(p.eps, eps0, eps1, z, x)

    def rw(self, psi0: int, psi1: int, x: float) -> GchEvaluation:
        """ Second-kind polynomial z^(1-gamma) {A_psi0 - (eps/2) x Lambda}.
        Args:
            psi0 (int): Even-family eigennumber
            psi1 (int): Odd-family eigennumber, >= psi0
            x (float): Evaluation point
        Returns:
            GchEvaluation: Split evaluation
        """
        p = self.params
        p.require_negative_mu()
        if psi0 > psi1:
            raise PreconditionError('psi0', 'psi0 <= psi1', f'psi0={psi0} exceeds psi1={psi1}')
        if is_nonpositive_integer(2 - p.gamma):
            raise PoleError(2 - p.gamma, 'gamma')
        z = self.z_of(x)
        exponent = 1 - p.gamma
        if z == 0 and exponent < 0:
            raise DomainError('x', x, 'x != 0 when 1-gamma < 0')
        prefactor = power_limit(z, exponent)
        eps0 = prefactor * a_poly(psi0, p.gamma, z)
        eps1 = 0.0 if p.eps == 0 else -(x / 2) * prefactor * lambda_series(psi0, psi1, p.gamma, p.omega, z)
        return GchEvaluation.combine(p.eps, eps0, eps1, z, x)

    def infinite_series_eval(self, branch: LambdaBranch, x: float,
                             ctl: SeriesControl = DEFAULT_CONTROL) -> GchEvaluation:
        """ Non-terminating series with alpha0 = -Omega/(2mu) (shifted on the 1-nu branch).
        Args:
            branch (LambdaBranch): Indicial root
            x (float): Evaluation point
            ctl (SeriesControl, optional): Truncation control
        Returns:
            GchEvaluation: Split evaluation with truncation metadata
        """
        p = self.params
        p.require_negative_mu()
        branch = LambdaBranch(branch)
        if RecurrenceEngine(p).detect_termination(branch) is not None:
            raise PreconditionError('big_omega', 'no terminating eigennumber',
                                    'Omega gives a polynomial; use polynomial mode')
        z = self.z_of(x)
        a = -p.big_omega / (2 * p.mu)
        if branch == LambdaBranch.ROOT0:
            g, half_omega, prefactor = p.gamma, p.omega / 2, 1.0
        else:
            a += p.gamma - 1
            g, half_omega = 2 - p.gamma, p.omega / 2 + 1 - p.gamma
            if z == 0 and 1 - p.gamma < 0:
                raise DomainError('x', x, 'x != 0 when 1-gamma < 0')
            prefactor = power_limit(z, 1 - p.gamma)
        if is_nonpositive_integer(g):
            raise PoleError(g, 'gamma')
        norm = gamma_ratio([a + g], [g])
        even, m_even, last_even = self._infinite_even(a, g, z, ctl)
        odd, m_odd, last_odd = self._infinite_odd(a, a - 0.5, g, half_omega, z, ctl)
        eps0 = prefactor * norm * even
        eps1 = -(x / 2) * prefactor * norm * odd
        logger.debug('infinite_series_eval branch=%s terms=%d/%d', branch.value, m_even, m_odd)
        return GchEvaluation.combine(p.eps, eps0, eps1, z, x, truncated_at=max(m_even, m_odd),
                                     last_term=max(last_even, last_odd))

    @staticmethod
    def _infinite_even(a: float, g: float, z: float, ctl: SeriesControl):
        acc = KahanSum(1.0)
        term = 1.0
        small = 0
        for n in range(ctl.max_terms):
            term *= (n - a) / ((n + 1) * (g + n)) * z
            acc.add(term)
            small = small + 1 if ctl.is_small(term, acc.value) else 0
            if small >= 2:
                return acc.value, n + 1, abs(term)
        raise NonConvergenceError('infinite even series', ctl.max_terms, abs(term), acc.value)

    @staticmethod
    def _infinite_odd(a0: float, a1: float, g: float, half_omega: float, z: float, ctl: SeriesControl):
        """ sum_m z^m sum_{n<=m} f_n t(n, m-n), rows advanced one power at a time. """
        acc = KahanSum()
        fn = []
        rows = []
        zm = 1.0
        small = 0
        coef = 1.0
        for m in range(ctl.max_terms):
            fn.append(coef)
            coef *= (m - a0) / ((m + 1) * (g + m))
            rows.append(pi_first_term(m, g, half_omega))
            level = KahanSum()
            for n in range(m + 1):
                level.add(fn[n] * rows[n])
                k = m - n
                rows[n] *= pi_next_ratio(n, k, a1, g)
            term = level.value * zm
            acc.add(term)
            zm *= z
            small = small + 1 if ctl.is_small(term, acc.value) else 0
            if small >= 2:
                return acc.value, m + 1, abs(term)
        raise NonConvergenceError('infinite odd series', ctl.max_terms, abs(term), acc.value)

    def evaluate(self, x: float, mode: SeriesMode, branch: LambdaBranch = LambdaBranch.ROOT0,
                 numbers: Optional[TerminationSpec] = None, ctl: SeriesControl = DEFAULT_CONTROL) -> GchEvaluation:
        """ Dispatch on the explicit polynomial/infinite mode. """
        mode = SeriesMode(mode)
        branch = LambdaBranch(branch)
        if mode == SeriesMode.INFINITE:
            return self.infinite_series_eval(branch, x, ctl)
        if numbers is None:
            raise PreconditionError('numbers', 'eigennumbers required in polynomial mode')
        if branch == LambdaBranch.ROOT0:
            return self.qw(numbers, x)
        return self.rw(numbers.alpha0, numbers.alpha1, x)

    def asymptotic_envelope(self, x: float) -> float:
        """ Large-x growth of a non-terminating first-kind series:
        1 + sqrt(pi) e^z sqrt(z) erf(sqrt(z)) - (eps/2) x e^z.
        """
        z = self.z_of(x)
        root = math.sqrt(z)
        return 1 + math.sqrt(math.pi) * math.exp(z) * root * erf(root) - self.params.eps / 2 * x * math.exp(z)


class ReducedOrderSolution:
    """Second solution g2 = g1 * int_{x_lo}^x t^-nu e^-(mu t^2/2 + eps t) / g1(t)^2 dt.

    Args:
        g1 (callable): g1(x, derivative) for derivative 0..2
        params (GchParams): Equation coefficients
        x_lo (float): Anchor and left end (g2(x_lo) = 0)
        x_hi (float): Right end
        tol (float, optional): Relative quadrature tolerance
    """

    SCAN_POINTS = 200

    def __init__(self, g1: Callable[[float, int], float], params: GchParams, x_lo: float, x_hi: float,
                 tol: float = 1e-12):
        params.require_negative_mu()
        if not 0 < x_lo < x_hi:
            raise DomainError('x_lo', x_lo, '0 < x_lo < x_hi')
        self.g1 = g1
        self.params = params
        self.x_lo = x_lo
        self.x_hi = x_hi
        self.tol = tol
        self._scan()

    def _scan(self):
        grid = np.linspace(self.x_lo, self.x_hi, self.SCAN_POINTS)
        values = [self.g1(float(x), 0) for x in grid]
        for i, value in enumerate(values):
            if value == 0.0:
                raise ZeroCrossingError((float(grid[max(i - 1, 0)]), float(grid[min(i + 1, len(grid) - 1)])))
            if i and (values[i - 1] > 0) != (value > 0):
                raise ZeroCrossingError((float(grid[i - 1]), float(grid[i])))

    def weight(self, x: float) -> float:
        """ x^-nu e^-(mu x^2/2 + eps x) """
        p = self.params
        return math.exp(-p.nu * math.log(x) - (p.mu * x * x / 2 + p.eps * x))

    def integral(self, x: float) -> float:
        """ Integral from the anchor to x. """
        if not self.x_lo <= x <= self.x_hi:
            raise DomainError('x', x, f'{self.x_lo} <= x <= {self.x_hi}')
        if x == self.x_lo:
            return 0.0
        value, _ = integrate.quad(lambda t: self.weight(t) / self.g1(t, 0) ** 2, self.x_lo, x,
                                  epsabs=0, epsrel=self.tol, limit=200)
        return value

    def evaluate(self, x: float, derivative: int = 0) -> float:
        """ g2 and its first two derivatives. """
        g = self.g1(x, 0)
        big_i = self.integral(x)
        if derivative == 0:
            return g * big_i
        w = self.weight(x)
        if derivative == 1:
            return self.g1(x, 1) * big_i + w / g
        if derivative == 2:
            p = self.params
            dw = w * (-p.nu / x - p.mu * x - p.eps)
            return self.g1(x, 2) * big_i + dw / g
        raise ValueError(f'derivative must be 0, 1 or 2, got {derivative!r}')

    def __call__(self, x: float, derivative: int = 0) -> float:
        return self.evaluate(x, derivative)


def second_solution_integral(g1: Callable[[float, int], float], params: GchParams,
                             x_lo: float, x_hi: float) -> ReducedOrderSolution:
    """ Reduction-of-order second solution anchored at x_lo. """
    return ReducedOrderSolution(g1, params, x_lo, x_hi)


def wronskian_invariant(g1: Callable[[float, int], float], g2: Callable[[float, int], float],
                        params: GchParams, x: float) -> float:
    """ (g1 g2' - g1' g2) x^nu e^(mu x^2/2 + eps x), constant for two solutions. """
    w = g1(x, 0) * g2(x, 1) - g1(x, 1) * g2(x, 0)
    return w * math.exp(params.nu * math.log(x) + params.mu * x * x / 2 + params.eps * x)


def least_squares_fit(target: Callable[[float], float], basis: Tuple[Callable[[float], float], ...],
                      points) -> Tuple[np.ndarray, float]:
    """ Fit target by a linear combination of basis functions.
    Returns:
        Tuple[np.ndarray, float]: coefficients and residual norm relative to |target|
    """
    xs = np.asarray(points, dtype=float)
    matrix = np.array([[f(x) for f in basis] for x in xs])
    rhs = np.array([target(x) for x in xs])
    coef, *_ = np.linalg.lstsq(matrix, rhs, rcond=None)
    norm = np.linalg.norm(rhs)
    return coef, float(np.linalg.norm(matrix @ coef - rhs) / (norm if norm > 0 else 1.0))
