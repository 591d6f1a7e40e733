"""SeriesSolution holds Frobenius coefficients keyed by (eps_order, power)."""
import logging
import math
from dataclasses import dataclass, field
from types import MappingProxyType
from typing import Dict, Mapping, Tuple
from pygrandconfluent.GchParams import GchParams
from pygrandconfluent.exceptions import DomainError
from pygrandconfluent.utils import KahanSum
logger = logging.getLogger('GCH')

Key = Tuple[int, int]


def _power_term(x: float, s: float, derivative: int) -> float:
    """ d^k/dx^k x^s """
    factor = 1.0
    for j in range(derivative):
        factor *= s - j
    if factor == 0.0:
        return 0.0
    return factor * x ** (s - derivative)


def _log_term(x: float, s: float, derivative: int) -> float:
    """ d^k/dx^k (x^s ln x) for x > 0 """
    ln = math.log(x)
    if derivative == 0:
        return x ** s * ln
    if derivative == 1:
        return x ** (s - 1) * (s * ln + 1)
    return x ** (s - 2) * (s * (s - 1) * ln + 2 * s - 1)


@dataclass(frozen=True)
class SeriesSolution:
    """Series g(x) = sum c[o, n] eps^o x^(n+lam) + ln x * sum d[o, n] eps^o x^(n+lam).

    Args:
        lam (float): Indicial root
        coeffs (Mapping[Key, float]): Plain coefficients keyed by (eps_order, power)
        eps (float): eps used to combine the orders
        log_part (Mapping[Key, float]): Coefficients of ln x, same keys
        truncated_at (int): Highest power kept
        terminated (bool): True when the series is an exact polynomial
        last_magnitude (float): |coefficient| at truncated_at
    """
    lam: float
    coeffs: Mapping[Key, float]
    eps: float = 0.0
    log_part: Mapping[Key, float] = field(default_factory=dict)
    truncated_at: int = 0
    terminated: bool = False
    last_magnitude: float = 0.0

    def __post_init__(self):
        object.__setattr__(self, 'coeffs', MappingProxyType(dict(self.coeffs)))
        object.__setattr__(self, 'log_part', MappingProxyType(dict(self.log_part)))

    @property
    def has_log(self) -> bool:
        """ True when any ln x coefficient is nonzero. """
        return any(v != 0.0 for v in self.log_part.values())

    def coefficient(self, eps_order: int, power: int) -> float:
        """ Plain coefficient, 0 when absent. """
        return self.coeffs.get((eps_order, power), 0.0)

    def log_coefficient(self, eps_order: int, power: int) -> float:
        """ ln x coefficient, 0 when absent. """
        return self.log_part.get((eps_order, power), 0.0)

    def order_part(self, eps_order: int) -> 'SeriesSolution':
        """ One eps order as a standalone eps-free solution. """
        coeffs = {(0, n): c for (o, n), c in self.coeffs.items() if o == eps_order}
        logs = {(0, n): c for (o, n), c in self.log_part.items() if o == eps_order}
        return SeriesSolution(self.lam, coeffs, 0.0, logs, self.truncated_at, self.terminated, self.last_magnitude)

    def _sum(self, x: float, derivative: int, eps_order: int) -> float:
        acc = KahanSum()
        for (order, power), c in sorted(self.coeffs.items()):
            if order == eps_order and c != 0.0:
                acc.add(c * _power_term(x, power + self.lam, derivative))
        for (order, power), c in sorted(self.log_part.items()):
            if order == eps_order and c != 0.0:
                acc.add(c * _log_term(x, power + self.lam, derivative))
        return acc.value

    def evaluate(self, x: float, derivative: int = 0) -> float:
        """ Value or derivative of the series at x.
        Args:
            x (float): Evaluation point
            derivative (int, optional): 0, 1 or 2
        Returns:
            float: g^(derivative)(x)
        """
        if derivative not in (0, 1, 2):
            raise ValueError(f'derivative must be 0, 1 or 2, got {derivative!r}')
        if x <= 0 and (self.has_log or not float(self.lam).is_integer()):
            raise DomainError('x', x, 'x > 0 for logarithmic or non-integer exponents')
        value = self._sum(x, derivative, 0)
        if self.eps != 0.0:
            value += self.eps * self._sum(x, derivative, 1)
        return value

    def __call__(self, x: float, derivative: int = 0) -> float:
        return self.evaluate(x, derivative)

    def residual(self, params: GchParams, x: float) -> float:
        """ Relative ODE residual |x g'' + (mu x^2 + eps x + nu) g' + (Omega x + eps omega) g| / scale. """
        return ode_residual(self.evaluate, params, x)


def ode_residual(solution, params: GchParams, x: float) -> float:
    """ Relative residual of a callable solution(x, derivative) in the GCH equation.
    Args:
        solution (callable): g(x, derivative)
        params (GchParams): Equation coefficients
        x (float): Evaluation point
    Returns:
        float: |sum of terms| / sum of |terms|
    """
    g0 = solution(x, 0)
    g1 = solution(x, 1)
    g2 = solution(x, 2)
    terms = (x * g2,
             (params.mu * x * x + params.eps * x + params.nu) * g1,
             (params.big_omega * x + params.eps * params.omega) * g0)
    scale = sum(abs(t) for t in terms)
    if scale == 0.0:
        return 0.0
    return abs(math.fsum(terms)) / scale
