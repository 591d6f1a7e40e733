"""QQbarSpectrum maps the quark-antiquark radial problem onto the GCH equation,
enumerates its energy ladder and evaluates normalized radial wavefunctions."""
import itertools
import logging
import math
from dataclasses import dataclass
from typing import Iterable, List, Optional, Tuple
from scipy import special as sc
from pygrandconfluent.GchFunction import GchFunction
from pygrandconfluent.GchParams import EPS_SMALLNESS_LIMIT, GchParams, TerminationSpec
from pygrandconfluent.exceptions import DomainError, PreconditionError
from pygrandconfluent.quadrature import integrate_halfline
from pygrandconfluent.special import gamma_ratio, pochhammer
from pygrandconfluent.utils import KahanSum
logger = logging.getLogger('GCH')


@dataclass(frozen=True)
class PhysicsParams:
    """Quark mass m, string tension coefficient b > 0 and orbital momentum l."""
    m: float
    b: float
    l: int = 0

    def __post_init__(self):
        if not self.b > 0:
            raise DomainError('b', self.b, 'b > 0')
        if not self.m >= 0:
            raise DomainError('m', self.m, 'm >= 0')
        if int(self.l) != self.l or self.l < 0:
            raise DomainError('l', self.l, 'non-negative integer')
        object.__setattr__(self, 'l', int(self.l))
        if not self.perturbative:
            logger.warning('m/sqrt(b) = %.3g reaches %.2g; first-order mass corrections are unreliable',
                           self.m / math.sqrt(self.b), EPS_SMALLNESS_LIMIT)

    @property
    def perturbative(self) -> bool:
        """ |eps/2| = m below the smallness limit in units of sqrt(b). """
        return self.m / math.sqrt(self.b) < EPS_SMALLNESS_LIMIT

    @property
    def gamma(self) -> float:
        """ l + 3/2 """
        return self.l + 1.5

    def with_l(self, l: int) -> 'PhysicsParams':
        """ Copy at another orbital momentum. """
        return PhysicsParams(self.m, self.b, l)


@dataclass(frozen=True)
class QuantumNumbers:
    """Orbital momentum, eps order i and radial numbers n0 <= n1 <= ... <= ni."""
    l: int
    order_i: int
    n: Tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, 'n', tuple(int(v) for v in self.n))
        if self.order_i < 0 or len(self.n) != self.order_i + 1:
            raise PreconditionError('n', 'len(n) == order_i + 1')
        if any(v < 1 for v in self.n):
            raise PreconditionError('n', 'positive radial numbers')
        if any(a > b for a, b in zip(self.n, self.n[1:])):
            raise PreconditionError('n', 'n_i <= n_j for i <= j', f'radial numbers {self.n} are not ordered')

    @property
    def termination(self) -> TerminationSpec:
        """ (n0-1, n1-1); n1 defaults to n0 at order 0. """
        n1 = self.n[1] if len(self.n) > 1 else self.n[0]
        return TerminationSpec(self.n[0] - 1, n1 - 1)


@dataclass(frozen=True)
class SpectrumEntry:
    """One level of the ladder and the formula line that produced it."""
    qn: QuantumNumbers
    order_i: int
    E_squared: float
    formula_id: str

    def as_dict(self) -> dict:
        """ JSON-ready form. """
        return {'l': self.qn.l, 'order_i': self.order_i, 'n_values': list(self.qn.n),
                'E_squared': self.E_squared, 'formula_id': self.formula_id}


def formula_id(order_i: int) -> str:
    """ 'primary' for the eps^0 ladder, 'hidden-i' above it. """
    return 'primary' if order_i == 0 else f'hidden-{order_i}'


def energy_level(b: float, l: int, order_i: int, n_i: int) -> float:
    """ E_i^2 = 4b (l + 2 n_i + i - 1/2).
    Args:
        b (float): String tension coefficient
        l (int): Orbital momentum
        order_i (int): eps order
        n_i (int): Radial number of that order
    Returns:
        float: Energy squared
    """
    if order_i < 0:
        raise PreconditionError('order_i', 'order_i >= 0')
    if n_i < 1:
        raise PreconditionError('n_i', 'n_i >= 1')
    return 4 * b * (l + 2 * n_i + order_i - 0.5)


def enumerate_spectrum(pp: PhysicsParams, order_cap: int, n_cap: int, l_range: Iterable[int]) -> List[SpectrumEntry]:
    """ Every ordered radial tuple up to the caps, sorted by energy. """
    entries = []
    for l in l_range:
        for order_i in range(order_cap + 1):
            for n in itertools.combinations_with_replacement(range(1, n_cap + 1), order_i + 1):
                qn = QuantumNumbers(l, order_i, n)
                entries.append(SpectrumEntry(qn, order_i, energy_level(pp.b, l, order_i, n[-1]), formula_id(order_i)))
    entries.sort(key=lambda e: (e.E_squared, e.qn.l, e.order_i, e.qn.n))
    return entries


class QQbarSpectrum:
    """Radial quark-antiquark states for one (m, b, l).

    Args:
        physics (PhysicsParams): Mass, tension and orbital momentum
    """

    def __init__(self, physics: PhysicsParams):
        self.physics = physics

    def map_physics_to_ode(self, e_squared: float) -> GchParams:
        """ mu = -b, eps = -2m, nu = 2(l+1), Omega = E^2/4 - b(l+3/2). """
        pp = self.physics
        return GchParams(mu=-pp.b, eps=-2 * pp.m, nu=2 * (pp.l + 1), big_omega=e_squared / 4 - pp.b * (pp.l + 1.5))

    def energy_from_omega(self, big_omega: float) -> float:
        """ Inverse of the Omega mapping. """
        pp = self.physics
        return 4 * (big_omega + pp.b * (pp.l + 1.5))

    def gch_params(self, qn: QuantumNumbers) -> GchParams:
        """ Parameters at the primary level of qn. """
        self._check_l(qn)
        return self.map_physics_to_ode(energy_level(self.physics.b, qn.l, 0, qn.n[0]))

    def _check_l(self, qn: QuantumNumbers):
        if qn.l != self.physics.l:
            raise PreconditionError('l', f'l == {self.physics.l}', f'quantum numbers carry l={qn.l}')

    def enumerate(self, order_cap: int, n_cap: int, l_range: Iterable[int]) -> List[SpectrumEntry]:
        """ enumerate_spectrum for this tension. """
        return enumerate_spectrum(self.physics, order_cap, n_cap, l_range)

    def normalization_constant(self, qn: QuantumNumbers) -> float:
        """ First-order-in-m normalization as printed:
        bracket = 2^(g-1)/b^g G(a0+1)G(a0+g) - m (-1)^a0 2^(g-1/2)/b^(g+1/2) {2 G(a0+g-1/2)G(a0+g+1/2)/G(g-1/2)
        - sum_n sum_k (n+(g-1/2)/2) G(a0+g)G(g+n-1/2)(-a0)_n(n-a1)_k / (G(g)G(k+n-a0+1/2)(g)_n n!)}.
        """
        self._check_l(qn)
        pp = self.physics
        a0, a1 = qn.termination.as_tuple()
        g = pp.gamma
        leading = math.exp((g - 1) * math.log(2) - g * math.log(pp.b)) * gamma_ratio([a0 + 1, a0 + g])
        if pp.m == 0:
            return leading ** -0.5
        acc = KahanSum()
        for n in range(a0 + 1):
            front = (n + (g - 0.5) / 2) * pochhammer(-a0, n) / (pochhammer(g, n) * math.factorial(n))
            for k in range(a1 - n + 1):
                acc.add(front * pochhammer(n - a1, k) * gamma_ratio([a0 + g, g + n - 0.5], [g, k + n - a0 + 0.5]))
        inner = 2 * gamma_ratio([a0 + g - 0.5, a0 + g + 0.5], [g - 0.5]) - acc.value
        correction = pp.m * (-1) ** a0 * math.exp((g - 0.5) * math.log(2) - (g + 0.5) * math.log(pp.b)) * inner
        bracket = leading - correction
        if not bracket > 0:
            raise DomainError('m', pp.m, 'positive first-order norm')
        return bracket ** -0.5

    def massless_normalization_constant(self, qn: QuantumNumbers) -> float:
        """ sqrt((2b)^(l+3/2) (l+1)! (l+1/2)! / ((2l+2)! a0! (l+a0+1/2)! sqrt(pi))) """
        self._check_l(qn)
        l = qn.l
        a0 = qn.termination.alpha0
        log_value = ((l + 1.5) * math.log(2 * self.physics.b) + sc.gammaln(l + 2) + sc.gammaln(l + 1.5)
                     - sc.gammaln(2 * l + 3) - sc.gammaln(a0 + 1) - sc.gammaln(l + a0 + 1.5) - 0.5 * math.log(math.pi))
        return math.exp(float(log_value) / 2)

    def weighted_norm(self, qn: QuantumNumbers) -> float:
        """ e^(-2m^2/b) int x^nu e^(mu x^2/2 + eps x) QW^2 dx """
        p = self.gch_params(qn)
        gch = GchFunction(p)
        term = qn.termination
        value = integrate_halfline(lambda x: gch.qw(term, x).value ** 2, p.nu, p.mu, p.eps).value
        return math.exp(-2 * self.physics.m ** 2 / self.physics.b) * value

    def exact_normalization_constant(self, qn: QuantumNumbers) -> float:
        """ Normalization by direct quadrature of the first-order wavefunction. """
        return self.weighted_norm(qn) ** -0.5

    def radial_wavefunction(self, r: float, qn: QuantumNumbers, normalization: Optional[float] = None) -> float:
        """ N e^(-(b/4)(r + 2m/b)^2) r^l QW(gamma = l+3/2; z = b r^2/2).
        Args:
            r (float): Radius, >= 0
            qn (QuantumNumbers): Quantum numbers with n0 <= n1
            normalization (float, optional): Constant, printed first-order form by default
        Returns:
            float: Radial wavefunction value
        """
        if r < 0:
            raise DomainError('r', r, 'r >= 0')
        pp = self.physics
        norm = self.normalization_constant(qn) if normalization is None else normalization
        gch = GchFunction(self.gch_params(qn))
        envelope = math.exp(-(pp.b / 4) * (r + 2 * pp.m / pp.b) ** 2)
        return norm * envelope * r ** pp.l * gch.qw(qn.termination, r).value

    def norm_integral(self, qn: QuantumNumbers, normalization: Optional[float] = None) -> float:
        """ int r^2 psi^2 dr """
        norm = self.normalization_constant(qn) if normalization is None else normalization
        return norm * norm * self.weighted_norm(qn)

    def node_count(self, qn: QuantumNumbers, points: int = 2000) -> int:
        """ Sign changes of the radial wavefunction on (0, 12/sqrt(b)]. """
        r_max = 12 / math.sqrt(self.physics.b)
        values = [self.radial_wavefunction(r_max * (i + 1) / points, qn, 1.0) for i in range(points)]
        return sum(1 for a, b in zip(values, values[1:]) if (a > 0) != (b > 0))
