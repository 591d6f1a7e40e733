"""OrthoExpansion checks orthogonality of first-kind polynomials under the weight
x^nu e^(mu x^2/2 + eps x), evaluates their norms and expands functions in them."""
import logging
import math
from dataclasses import dataclass, field
from typing import Callable, Dict, Optional, Tuple
import numpy as np
from numpy.polynomial import polynomial as P
from pygrandconfluent.GchParams import GchParams, TerminationSpec
from pygrandconfluent.RecurrenceEngine import RecurrenceEngine
from pygrandconfluent.quadrature import DEFAULT_TOL, halfline_moment, integrate_halfline
from pygrandconfluent.special import gamma_ratio, pochhammer
from pygrandconfluent.utils import KahanSum
logger = logging.getLogger('GCH')

CROSS_FLOOR = 1e-9
DIAGONAL_FLOOR = 1e-8
DECAY_U = 30.0


@dataclass(frozen=True)
class OrthoReport:
    """One weighted inner product against its printed prediction."""
    pair: Tuple[TerminationSpec, TerminationSpec]
    integral: float
    predicted: float
    abs_deviation: float
    tolerance_used: float
    passed: bool
    oracle: Optional[float] = None


@dataclass
class ExpansionResult:
    """Expansion coefficients with a sibling-averaged reconstruction."""
    coefficients: Dict[Tuple[int, int], float]
    basis: 'OrthoExpansion'
    tail_violation: bool = False
    siblings: Dict[int, int] = field(default_factory=dict)

    def reconstruct(self, x: float) -> float:
        """ sum over alpha0 of the mean over alpha1 of A * QW at x. """
        acc = KahanSum()
        for (a0, a1), coef in sorted(self.coefficients.items()):
            if coef != 0.0:
                acc.add(coef * self.basis.polynomial(TerminationSpec(a0, a1))(x) / self.siblings[a0])
        return acc.value


class OrthoExpansion:
    """Inner products of first-kind polynomials for one parameter set.

    Args:
        params (GchParams): mu < 0 and nu > -1
        tol (float, optional): Half-line quadrature tolerance
    """

    def __init__(self, params: GchParams, tol: float = DEFAULT_TOL):
        params.require_negative_mu()
        self.params = params
        self.tol = tol
        self._cache: Dict[Tuple[int, int], Tuple[np.ndarray, np.ndarray]] = {}

    def _tables(self, term: TerminationSpec):
        key = term.as_tuple()
        if key not in self._cache:
            self._cache[key] = RecurrenceEngine.closed_form_tables(term, self.params.gamma, self.params.mu)
        return self._cache[key]

    def polynomial(self, term: TerminationSpec) -> P.Polynomial:
        """ First-kind polynomial QW as a power series in x. """
        eps0, eps1 = self._tables(term)
        return P.Polynomial(eps0 + self.params.eps * eps1)

    def weighted_integral(self, f: Callable[[float], float]) -> float:
        """ int_0^inf x^nu e^(mu x^2/2 + eps x) f(x) dx """
        p = self.params
        return integrate_halfline(f, p.nu, p.mu, p.eps, self.tol).value

    def moment_integral(self, poly: P.Polynomial) -> float:
        """ Exact weighted integral of a polynomial from the weight moments. """
        p = self.params
        acc = KahanSum()
        for power, c in enumerate(poly.coef):
            if c != 0.0:
                acc.add(c * halfline_moment(power, p.nu, p.mu, p.eps))
        return acc.value

    def leading_norm(self, alpha0: int) -> float:
        """ 2^(gamma-1) / |mu|^gamma Gamma(alpha0+1) Gamma(alpha0+gamma), the eps^0 norm. """
        gamma = self.params.gamma
        return math.exp((gamma - 1) * math.log(2) - gamma * math.log(abs(self.params.mu))) * \
            gamma_ratio([alpha0 + 1, alpha0 + gamma])

    def printed_norm(self, term: TerminationSpec) -> float:
        """ Diagonal norm to first order in eps as printed:
        leading norm + eps (-1)^a0 2^(gamma-1/2)/|mu|^(gamma+1/2) {G(a0+g-1/2)G(a0+g+1/2)/G(g-1/2)
        - G(a0+g)/G(g) sum_n (-a0)_n/(n!(g)_n) sum_k (n+w/2)G(n+1/2)G(n+g-1/2)(n-a1)_k / (2 G(k+n+3/2-a0))}.
        """
        p = self.params
        a0, a1 = term.as_tuple()
        gamma = p.gamma
        leading = self.leading_norm(a0)
        if p.eps == 0.0:
            return leading
        outer = KahanSum()
        for n in range(a0 + 1):
            fn = pochhammer(-a0, n) / (math.factorial(n) * pochhammer(gamma, n))
            for k in range(a1 - n + 1):
                outer.add(fn * (n + p.omega / 2) * pochhammer(n - a1, k)
                          * gamma_ratio([n + 0.5, n + gamma - 0.5], [k + n + 1.5 - a0]) / 2)
        bracket = gamma_ratio([a0 + gamma - 0.5, a0 + gamma + 0.5], [gamma - 0.5]) \
            - gamma_ratio([a0 + gamma], [gamma]) * outer.value
        front = (-1) ** a0 * math.exp((gamma - 0.5) * math.log(2) - (gamma + 0.5) * math.log(abs(p.mu)))
        return leading + p.eps * front * bracket

    def moment_norm(self, term: TerminationSpec) -> float:
        """ Exact int W QW^2 from polynomial coefficients and weight moments. """
        poly = self.polynomial(term)
        return self.moment_integral(poly * poly)

    def _product(self, a: TerminationSpec, b: TerminationSpec) -> Callable[[float], float]:
        pa, pb = self.polynomial(a), self.polynomial(b)
        return lambda x: pa(x) * pb(x)

    def cross_integral(self, a: TerminationSpec, b: TerminationSpec) -> OrthoReport:
        """ Weighted inner product of two distinct first-kind polynomials.
        Pairs sharing alpha0 coincide at eps^0, so their prediction is the eps^0 norm.
        Args:
            a (TerminationSpec): First eigennumbers
            b (TerminationSpec): Second eigennumbers
        Returns:
            OrthoReport: Integral against its prediction
        """
        if a == b:
            return self.diagonal_norm(a)
        integral = self.weighted_integral(self._product(a, b))
        predicted = self.leading_norm(a.alpha0) if a.alpha0 == b.alpha0 else 0.0
        scale = math.sqrt(self.leading_norm(a.alpha0) * self.leading_norm(b.alpha0))
        tolerance = max(CROSS_FLOOR, 50 * self.params.eps ** 2) * scale
        deviation = abs(integral - predicted)
        logger.debug('cross_integral %s %s integral=%.17g', a.as_tuple(), b.as_tuple(), integral)
        return OrthoReport((a, b), integral, predicted, deviation, tolerance, deviation <= tolerance)

    def diagonal_norm(self, a: TerminationSpec) -> OrthoReport:
        """ Weighted norm of one polynomial against the printed first-order norm;
        tolerance is relative, max(1e-8, 10 eps^2).
        """
        integral = self.weighted_integral(self._product(a, a))
        predicted = self.printed_norm(a)
        tolerance = max(DIAGONAL_FLOOR, 10 * self.params.eps ** 2) * abs(predicted)
        deviation = abs(integral - predicted)
        return OrthoReport((a, a), integral, predicted, deviation, tolerance, deviation <= tolerance,
                           oracle=self.moment_norm(a))

    def expand_function(self, psi: Callable[[float], float], cap: Tuple[int, int]) -> ExpansionResult:
        """ Coefficients A = int W psi QW / norm for every alpha0 <= alpha1 within cap.
        Args:
            psi (callable): Function decaying at infinity
            cap (Tuple[int, int]): (max alpha0, max alpha1)
        Returns:
            ExpansionResult: Coefficients and reconstruction
        """
        p = self.params
        x_far = math.sqrt(2 * DECAY_U / abs(p.mu))
        far_weight = math.exp(p.nu * math.log(x_far) + p.mu * x_far * x_far / 2 + p.eps * x_far)
        violation = abs(psi(x_far)) * far_weight > self.tol
        if violation:
            logger.warning('Expanded function does not decay: weighted value %.3e at x=%.3g',
                           abs(psi(x_far)) * far_weight, x_far)
        coefficients = {}
        siblings = {}
        max0, max1 = cap
        for a0 in range(max0 + 1):
            for a1 in range(a0, max1 + 1):
                term = TerminationSpec(a0, a1)
                poly = self.polynomial(term)
                coefficients[(a0, a1)] = self.weighted_integral(lambda x, q=poly: psi(x) * q(x)) / \
                    self.printed_norm(term)
                siblings[a0] = siblings.get(a0, 0) + 1
        return ExpansionResult(coefficients, self, violation, siblings)
