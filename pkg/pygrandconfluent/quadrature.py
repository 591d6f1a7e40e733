"""Integration with the GCH weight x^nu e^(mu x^2/2 + eps x) on the half line,
tensor Gauss-Legendre cubes, and exact weight moments."""
import logging
import math
from dataclasses import dataclass
from typing import Callable
import numpy as np
from scipy import integrate
from scipy import special as sc
from pygrandconfluent.exceptions import DomainError, NonConvergenceError, QuadratureError
from pygrandconfluent.special import DEFAULT_CONTROL, SeriesControl
from pygrandconfluent.utils import KahanSum
logger = logging.getLogger('GCH')

DEFAULT_TOL = 1e-10
DEFAULT_NODES = 48
TAIL_U = 700.0


@dataclass(frozen=True)
class QuadratureResult:
    """Integral estimate with its error estimate and integrand call count."""
    value: float
    abs_error_estimate: float
    evaluations: int


def _weight_check(nu: float, mu: float):
    if not mu < 0:
        raise DomainError('mu', mu, 'mu < 0')
    if not nu > -1:
        raise DomainError('nu', nu, 'nu > -1')


def integrate_halfline(f: Callable[[float], float], nu: float, mu: float, eps: float = 0.0,
                       tol: float = DEFAULT_TOL) -> QuadratureResult:
    """ Integrate x^nu e^(mu x^2/2 + eps x) f(x) over [0, inf).
    Substitutes u = |mu| x^2 / 2; the u^((nu-1)/2) endpoint factor on [0, 1] is handed
    to QUADPACK's algebraic weight, the rest of [1, u_max] is plain adaptive.
    Args:
        f (callable): Polynomially bounded integrand factor
        nu (float): Weight exponent, > -1
        mu (float): Gaussian coefficient, < 0
        eps (float, optional): Linear exponent coefficient
        tol (float, optional): Accepted error relative to max(1, |value|)
    Returns:
        QuadratureResult: Value, error estimate, evaluations
    """
    _weight_check(nu, mu)
    a = -mu / 2
    const = a ** (-(nu + 1) / 2) / 2
    power = (nu - 1) / 2

    def reduced(u):
        x = math.sqrt(u / a)
        return math.exp(-u + eps * x) * f(x)

    u_max = TAIL_U + abs(eps) * math.sqrt(TAIL_U / a) + max(power, 0.0) * math.log(TAIL_U)
    inner = max(tol * 1e-3, 1e-14)
    head = integrate.quad(reduced, 0.0, 1.0, weight='alg', wvar=(power, 0.0),
                          epsabs=inner * 1e-3, epsrel=inner, limit=200, full_output=1)
    tail = integrate.quad(lambda u: u ** power * reduced(u), 1.0, u_max,
                          epsabs=inner * 1e-3, epsrel=inner, limit=400, full_output=1)
    value = const * (head[0] + tail[0])
    error = const * (head[1] + tail[1])
    evaluations = max(1, int(head[2].get('neval', 0) + tail[2].get('neval', 0)))
    logger.debug('integrate_halfline nu=%r mu=%r eps=%r value=%.17g err=%.3e evals=%d',
                 nu, mu, eps, value, error, evaluations)
    if error > max(tol, 1e-13) * max(1.0, abs(value)):
        raise QuadratureError(value, error, tol)
    return QuadratureResult(value, error, evaluations)


def halfline_moment(power: float, nu: float, mu: float, eps: float = 0.0,
                    ctl: SeriesControl = DEFAULT_CONTROL) -> float:
    """ Exact moment int_0^inf x^(nu+power) e^(mu x^2/2 + eps x) dx as
    sum_j eps^j/j! Gamma((q+j)/2) / (2 a^((q+j)/2)), q = nu+power+1, a = |mu|/2.
    """
    _weight_check(nu + power, mu)
    a = -mu / 2
    q = nu + power + 1
    acc = KahanSum()
    small = 0
    for j in range(ctl.max_terms):
        if eps == 0 and j > 0:
            return acc.value
        half = (q + j) / 2
        log_term = float(sc.gammaln(half)) - half * math.log(a) - float(sc.gammaln(j + 1))
        if j:
            log_term += j * math.log(abs(eps))
        term = math.copysign(1.0, eps) ** j * math.exp(log_term) / 2
        acc.add(term)
        small = small + 1 if ctl.is_small(term, acc.value) else 0
        if small >= 2:
            return acc.value
    raise NonConvergenceError('halfline_moment', ctl.max_terms, abs(term), acc.value)


def _sine_rule(nodes: int):
    """ Gauss-Legendre on theta in [0, pi/2] mapped by t = sin^2(theta). """
    s, w = np.polynomial.legendre.leggauss(nodes)
    theta = (s + 1) * math.pi / 4
    t = np.sin(theta) ** 2
    weights = w * (math.pi / 4) * np.sin(2 * theta)
    return t, weights


def _cube_sum(f: Callable, d: int, nodes: int):
    t, w = _sine_rule(nodes)
    grids = np.meshgrid(*([t] * d), indexing='ij')
    weights = w
    for _ in range(d - 1):
        weights = np.multiply.outer(weights, w)
    products = np.ravel(weights * np.asarray(f(*grids), dtype=float))
    return math.fsum(products), float(np.sum(np.abs(products)))


def integrate_cube(f: Callable, d: int, nodes_per_axis: int = DEFAULT_NODES) -> QuadratureResult:
    """ Tensor Gauss-Legendre over [0,1]^d after t = sin^2(theta) on every axis,
    which absorbs (1-t)^(-1/2) and t^(-1/2) type endpoint singularities.
    Args:
        f (callable): Vectorized integrand f(t1, ..., td) over numpy arrays
        d (int): Dimension 1..3
        nodes_per_axis (int, optional): Nodes per axis, >= 2
    Returns:
        QuadratureResult: Value with |I(n) - I(n/2)| plus a rounding floor as error
    """
    if nodes_per_axis < 2:
        raise ValueError(f'nodes_per_axis must be >= 2, got {nodes_per_axis!r}')
    if d not in (1, 2, 3):
        raise ValueError(f'd must be 1, 2 or 3, got {d!r}')
    coarse_nodes = max(2, nodes_per_axis // 2)
    value, magnitude = _cube_sum(f, d, nodes_per_axis)
    coarse, _ = _cube_sum(f, d, coarse_nodes)
    error = abs(value - coarse) + 64 * np.finfo(float).eps * magnitude
    return QuadratureResult(value, error, nodes_per_axis ** d + coarse_nodes ** d)
