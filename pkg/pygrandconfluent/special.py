"""Scalar special-function primitives: gamma family, Pochhammer, beta,
Laguerre, Kummer M and U, Gauss 2F1, Appell F1 and the Kummer addition
theorems.

All infinite sums use compensated summation and stop once two consecutive
terms fall below ``abs_tol + rel_tol*|partial sum|``. A non-positive integer
numerator parameter makes a series an exact polynomial and bypasses the
tolerance test.
"""
import logging
import math
from dataclasses import dataclass
from enum import Enum
from typing import NamedTuple, Sequence
from scipy import special as sc
from scipy import integrate
from pygrandconfluent.exceptions import (
    DivergenceError, DomainError, NonConvergenceError, PoleError, PreconditionError
)
from pygrandconfluent.utils import KahanSum, is_nonpositive_integer
logger = logging.getLogger('GCH')

EXACT_POCHHAMMER_LIMIT = 30
KUMMER_U_LARGE_Z = 10.0


@dataclass(frozen=True)
class SeriesControl:
    """Truncation control shared by every infinite sum."""
    max_terms: int = 500
    rel_tol: float = 1e-15
    abs_tol: float = 1e-300

    def __post_init__(self):
        if int(self.max_terms) != self.max_terms or self.max_terms < 1:
            raise ValueError(f'max_terms must be a positive integer, got {self.max_terms!r}')
        if not (self.rel_tol > 0 and self.abs_tol > 0):
            raise ValueError('rel_tol and abs_tol must be positive')

    def is_small(self, term: float, partial: float) -> bool:
        """ Check the per-term stopping rule. """
        return abs(term) < self.abs_tol + self.rel_tol * abs(partial)


DEFAULT_CONTROL = SeriesControl()


class SignedLog(NamedTuple):
    """ log|f| together with the sign of f. """
    value: float
    sign: float


def log_gamma(x: float) -> SignedLog:
    """ Natural log of |Gamma(x)| with its sign.
    Args:
        x (float): Argument, not a non-positive integer
    Returns:
        SignedLog: (ln|Gamma(x)|, sign of Gamma(x))
    """
    if is_nonpositive_integer(x):
        raise PoleError(x)
    return SignedLog(float(sc.gammaln(x)), float(sc.gammasgn(x)))


def gamma_ratio(numerator: Sequence[float], denominator: Sequence[float] = ()) -> float:
    """ prod Gamma(numerator) / prod Gamma(denominator) through log-gamma differences.
    A pole in the denominator makes the ratio vanish (1/Gamma is entire);
    a pole in the numerator raises.
    Args:
        numerator (Sequence[float]): Gamma arguments above the bar
        denominator (Sequence[float]): Gamma arguments below the bar
    Returns:
        float: Ratio
    """
    for arg in numerator:
        if is_nonpositive_integer(arg):
            raise PoleError(arg)
    if any(is_nonpositive_integer(arg) for arg in denominator):
        return 0.0
    logs = []
    sign = 1.0
    for arg in numerator:
        lg = log_gamma(arg)
        logs.append(lg.value)
        sign *= lg.sign
    for arg in denominator:
        lg = log_gamma(arg)
        logs.append(-lg.value)
        sign *= lg.sign
    return sign * math.exp(math.fsum(logs))


def pochhammer(x: float, n: int) -> float:
    """ Rising factorial (x)_n.
    Args:
        x (float): Base
        n (int): Non-negative length
    Returns:
        float: prod_{k<n} (x+k)
    """
    if int(n) != n or n < 0:
        raise PreconditionError('n', 'non-negative integer')
    n = int(n)
    if n <= EXACT_POCHHAMMER_LIMIT or float(x).is_integer():
        rst = 1.0
        for k in range(n):
            rst *= x + k
        return rst
    return gamma_ratio([x + n], [x])


def beta(p: float, q: float) -> float:
    """ Beta function Gamma(p)Gamma(q)/Gamma(p+q); symmetric in p and q. """
    return gamma_ratio([p, q], [p + q])


def assoc_laguerre(n: int, k: float, z: float) -> float:
    """ Associated Laguerre polynomial L_n^k(z) by its three-term recurrence.
    Args:
        n (int): Degree
        k (float): Order
        z (float): Argument
    Returns:
        float: L_n^k(z)
    """
    if int(n) != n or n < 0:
        raise PreconditionError('n', 'non-negative integer')
    prev, cur = 0.0, 1.0
    for j in range(int(n)):
        prev, cur = cur, ((2 * j + 1 + k - z) * cur - (j + k) * prev) / (j + 1)
    return cur


def laguerre(n: int, z: float) -> float:
    """ Laguerre polynomial L_n(z). """
    return assoc_laguerre(n, 0, z)


def erf(x: float) -> float:
    """ Error function. """
    return float(sc.erf(x))


def _terminating_length(params: Sequence[float]):
    lengths = [int(-a) for a in params if is_nonpositive_integer(a)]
    return min(lengths) if lengths else None


def hypergeometric_series(numerator: Sequence[float], denominator: Sequence[float], z: float,
                          ctl: SeriesControl = DEFAULT_CONTROL, label: str = 'pFq') -> float:
    """ Generalized hypergeometric series sum_n prod (a)_n / prod (b)_n z^n/n!.
    Args:
        numerator (Sequence[float]): Upper parameters
        denominator (Sequence[float]): Lower parameters (no poles)
        z (float): Argument
        ctl (SeriesControl, optional): Truncation control
        label (str, optional): Name used in errors
    Returns:
        float: Series value
    """
    for b in denominator:
        if is_nonpositive_integer(b):
            raise PoleError(b, 'b')
    stop = _terminating_length(numerator)
    acc = KahanSum(1.0)
    term = 1.0
    small = 0
    n = 0
    while True:
        if stop is not None and n >= stop:
            return acc.value
        ratio = z / (n + 1)
        for a in numerator:
            ratio *= a + n
        for b in denominator:
            ratio /= b + n
        term *= ratio
        n += 1
        acc.add(term)
        if stop is not None:
            continue
        small = small + 1 if ctl.is_small(term, acc.value) else 0
        if small >= 2:
            logger.debug('%s converged after %d terms', label, n)
            return acc.value
        if n >= ctl.max_terms:
            raise NonConvergenceError(label, n, abs(term), acc.value)


def kummer_m(a: float, b: float, z: float, ctl: SeriesControl = DEFAULT_CONTROL) -> float:
    """ Kummer function of the first kind M(a, b, z). """
    return hypergeometric_series([a], [b], z, ctl, 'kummer_m')


def _kummer_u_integral(a: float, b: float, z: float) -> float:
    """ Laplace integral (1/Gamma(a)) int_0^inf e^(-zt) t^(a-1) (1+t)^(b-a-1) dt, a > 0. """
    def integrand(t):
        return math.exp(-z * t + (a - 1) * math.log(t) + (b - a - 1) * math.log1p(t)) if t > 0 else (
            1.0 if a == 1 else 0.0)

    value, abserr = integrate.quad(integrand, 0, math.inf, epsabs=0, epsrel=1e-12, limit=200)
    logger.debug('kummer_u integral path a=%r b=%r z=%r err=%.3e', a, b, z, abserr)
    return value * math.exp(-float(sc.gammaln(a)))


def kummer_u(a: float, b: float, z: float, ctl: SeriesControl = DEFAULT_CONTROL) -> float:
    """ Kummer function of the second kind U(a, b, z) for z > 0.
    Below KUMMER_U_LARGE_Z the two-M combination is used when b is not an integer
    and the Laplace integral otherwise. Above it the two M terms cancel, so the
    integral (a > 0) or scipy's hyperu takes over.
    Args:
        a (float): First parameter
        b (float): Second parameter
        z (float): Positive argument
        ctl (SeriesControl, optional): Truncation control for the M series
    Returns:
        float: U(a, b, z)
    """
    if not z > 0:
        raise DomainError('z', z, 'z > 0')
    if z > KUMMER_U_LARGE_Z:
        if a > 0:
            return _kummer_u_integral(a, b, z)
        logger.debug('kummer_u hyperu path a=%r b=%r z=%r', a, b, z)
        value = float(sc.hyperu(a, b, z))
        if not math.isfinite(value):
            raise NonConvergenceError('kummer_u', 0, math.nan, value)
        return value
    if not float(b).is_integer():
        logger.debug('kummer_u two-M path a=%r b=%r z=%r', a, b, z)
        first = gamma_ratio([1 - b], [a - b + 1]) * kummer_m(a, b, z, ctl)
        second = gamma_ratio([b - 1], [a])
        if second != 0.0:
            second *= math.exp((1 - b) * math.log(z)) * kummer_m(a - b + 1, 2 - b, z, ctl)
        return first + second
    if not a > 0:
        raise PreconditionError('a', 'a > 0 when b is an integer',
                                f'U({a!r}, {b!r}, z) hits gamma poles and the integral path needs a > 0')
    return _kummer_u_integral(a, b, z)


def gauss_2f1(a: float, b: float, c: float, z: float, ctl: SeriesControl = DEFAULT_CONTROL) -> float:
    """ Gauss hypergeometric series 2F1(a, b; c; z).
    Non-terminating series require |z| < 1.
    """
    if is_nonpositive_integer(c):
        raise PoleError(c, 'c')
    if _terminating_length([a, b]) is None and abs(z) >= 1:
        raise DivergenceError('z', z)
    return hypergeometric_series([a, b], [c], z, ctl, 'gauss_2f1')


def appell_f1(alpha: float, beta_: float, beta_p: float, gamma: float, x: float, y: float,
              ctl: SeriesControl = DEFAULT_CONTROL) -> float:
    """ Appell F1(alpha; beta, beta'; gamma; x, y) as
    sum_j (alpha)_j (beta)_j / ((gamma)_j j!) x^j 2F1(alpha+j, beta'; gamma+j; y).
    Args:
        alpha (float): alpha
        beta_ (float): beta (x channel)
        beta_p (float): beta' (y channel); a non-positive integer allows any y
        gamma (float): gamma
        x (float): First argument, |x| < 1 unless the x channel terminates
        y (float): Second argument, |y| < 1 unless beta' terminates
        ctl (SeriesControl, optional): Truncation control
    Returns:
        float: F1 value
    """
    if is_nonpositive_integer(gamma):
        raise PoleError(gamma, 'gamma')
    stop = _terminating_length([alpha, beta_])
    if stop is None and abs(x) >= 1:
        raise DivergenceError('x', x)
    acc = KahanSum()
    coef = 1.0
    small = 0
    j = 0
    while True:
        term = coef * gauss_2f1(alpha + j, beta_p, gamma + j, y, ctl) if coef != 0.0 else 0.0
        acc.add(term)
        if stop is not None and j >= stop:
            return acc.value
        if stop is None:
            small = small + 1 if ctl.is_small(term, acc.value) else 0
            if small >= 2:
                return acc.value
            if j + 1 >= ctl.max_terms:
                raise NonConvergenceError('appell_f1', j + 1, abs(term), acc.value)
        coef *= (alpha + j) * (beta_ + j) / ((gamma + j) * (j + 1)) * x
        j += 1


class AdditionVariant(str, Enum):
    """Which Kummer addition theorem to sum."""
    A = 'A'
    B = 'B'


def kummer_addition(a: float, b: float, x: float, y: float, variant: AdditionVariant,
                    ctl: SeriesControl = DEFAULT_CONTROL) -> float:
    """ Right-hand side of the Kummer addition theorems for M(a, b, x+y).
    Variant A: sum_n (a)_n y^n / ((b)_n n!) M(a+n, b+n, x).
    Variant B: e^y sum_n (b-a)_n (-y)^n / ((b)_n n!) M(a, b+n, x).
    """
    variant = AdditionVariant(variant)
    if is_nonpositive_integer(b):
        raise PoleError(b, 'b')
    head = a if variant == AdditionVariant.A else b - a
    arg = y if variant == AdditionVariant.A else -y
    stop = _terminating_length([head])
    acc = KahanSum()
    coef = 1.0
    small = 0
    n = 0
    while True:
        if coef != 0.0:
            if variant == AdditionVariant.A:
                term = coef * kummer_m(a + n, b + n, x, ctl)
            else:
                term = coef * kummer_m(a, b + n, x, ctl)
        else:
            term = 0.0
        acc.add(term)
        if stop is not None and n >= stop:
            break
        if stop is None:
            small = small + 1 if ctl.is_small(term, acc.value) else 0
            if small >= 2:
                break
            if n + 1 >= ctl.max_terms:
                raise NonConvergenceError('kummer_addition', n + 1, abs(term), acc.value)
        coef *= (head + n) / ((b + n) * (n + 1)) * arg
        n += 1
    if variant == AdditionVariant.B:
        return math.exp(y) * acc.value
    return acc.value
