"""RecurrenceEngine builds Frobenius coefficients from the three-term recurrence
C_{n+1} = A_n C_n + B_n C_{n-1} of the grand confluent equation."""
import logging
import math
from dataclasses import dataclass
from enum import Enum
from typing import Dict, List, Optional, Tuple, Union
import numpy as np
from pygrandconfluent.GchParams import GchParams, TerminationSpec
from pygrandconfluent.Jet import Jet
from pygrandconfluent.SeriesSolution import SeriesSolution
from pygrandconfluent.exceptions import CaseMismatchError, PoleError, ResonanceError
from pygrandconfluent.special import gamma_ratio, pochhammer
from pygrandconfluent.utils import KahanSum, nearest_nonnegative_integer
logger = logging.getLogger('GCH')

DEFAULT_POWER_CAP = 64
ZERO_TOL = 1e-12
Number = Union[float, Jet]


class FrobeniusCase(str, Enum):
    """Frobenius case for the indicial roots 0 and 1-nu."""
    A = 'A'  # nu < 1, not an integer
    B = 'B'  # nu = 1, double root
    C = 'C'  # nu a non-positive integer
    D = 'D'  # nu > 1, not an integer
    E = 'E'  # nu an integer >= 2


def frobenius_case(nu: float) -> FrobeniusCase:
    """ Classify the indicial roots 0 and 1-nu. """
    if not float(nu).is_integer():
        return FrobeniusCase.A if nu < 1 else FrobeniusCase.D
    if nu == 1:
        return FrobeniusCase.B
    return FrobeniusCase.C if nu <= 0 else FrobeniusCase.E


class LambdaBranch(str, Enum):
    """Indicial root a series is built on."""
    ROOT0 = 'root0'
    ROOT1MNU = 'root1mnu'


@dataclass(frozen=True)
class EigenDetection:
    """Eigennumbers found by detect_termination; None where the ratio is not integral."""
    branch: LambdaBranch
    alpha0: Optional[int]
    alpha1: Optional[int]
    ratio: float

    def as_termination(self) -> Optional[TerminationSpec]:
        """ TerminationSpec when both eigennumbers exist and are ordered. """
        if self.alpha0 is None or self.alpha1 is None or self.alpha0 > self.alpha1:
            return None
        return TerminationSpec(self.alpha0, self.alpha1)


def _divide(num: Number, den: Number, n: int, lam: Number) -> Number:
    if isinstance(den, Jet) or isinstance(num, Jet):
        try:
            return num / den
        except ZeroDivisionError as err:
            raise ResonanceError(n, lam.value if isinstance(lam, Jet) else lam) from err
    if den == 0:
        raise ResonanceError(n, lam)
    return num / den


class RecurrenceEngine:
    """Coefficient construction for one parameter set.

    Args:
        params (GchParams): Equation coefficients
        power_cap (int, optional): Highest power of x generated by default
    """

    def __init__(self, params: GchParams, power_cap: int = DEFAULT_POWER_CAP):
        if power_cap < 1:
            raise ValueError(f'power_cap must be >= 1, got {power_cap!r}')
        self.params = params
        self.power_cap = power_cap

    def _denominator(self, n: int, lam: Number) -> Number:
        return (n + lam + 1) * (n + lam + self.params.nu)

    def _numerator_a(self, n: int, lam: Number) -> Number:
        """ A_n numerator with eps factored out. """
        return -(n + lam + self.params.omega)

    def _numerator_b(self, n: int, lam: Number, big_omega: float) -> Number:
        return -(big_omega + self.params.mu * (n + lam - 1))

    def coeff_a(self, n: int, lam: float = 0.0) -> float:
        """ A_n = -eps (n+lam+omega) / ((n+lam+1)(n+lam+nu)). """
        return self.params.eps * _divide(self._numerator_a(n, lam), self._denominator(n, lam), n, lam)

    def coeff_a_hat(self, n: int, lam: float = 0.0) -> float:
        """ A_n / eps """
        return _divide(self._numerator_a(n, lam), self._denominator(n, lam), n, lam)

    def coeff_b(self, n: int, lam: float = 0.0, big_omega: Optional[float] = None) -> float:
        """ B_n = -(Omega + mu (n+lam-1)) / ((n+lam+1)(n+lam+nu)).
        Args:
            n (int): Index (>= 1)
            lam (float, optional): Indicial root
            big_omega (float, optional): Omega override, defaults to params
        Returns:
            float: B_n
        """
        big_omega = self.params.big_omega if big_omega is None else big_omega
        return _divide(self._numerator_b(n, lam, big_omega), self._denominator(n, lam), n, lam)

    def eigenvalues(self, term: TerminationSpec) -> Tuple[float, float]:
        """ (Omega0, Omega1) terminating the even and odd families. """
        scale = -2.0 * self.params.mu
        return scale * term.alpha0, scale * (term.alpha1 + 0.5)

    def build_coefficients(self, lam: float = 0.0, term: Optional[TerminationSpec] = None,
                           c0: float = 1.0, power_cap: Optional[int] = None) -> SeriesSolution:
        """ eps-split coefficients: even powers at eps order 0, odd powers at eps order 1.
        With a TerminationSpec the odd-index B factors use Omega0 and the even-index
        ones Omega1; without one both use params.big_omega and the series is cut at power_cap.
        Args:
            lam (float, optional): Indicial root
            term (TerminationSpec, optional): Eigennumbers
            c0 (float, optional): Leading coefficient
            power_cap (int, optional): Highest power when not terminating
        Returns:
            SeriesSolution: Coefficients
        """
        cap = self.power_cap if power_cap is None else power_cap
        if term is not None:
            omega_even, omega_odd = self.eigenvalues(term)
            n_even, n_odd = term.alpha0, term.alpha1
        else:
            omega_even = omega_odd = self.params.big_omega
            n_even, n_odd = cap // 2, (cap - 1) // 2
        keep_odd = self.params.eps != 0.0
        even = c0
        odd = c0 * self.coeff_a_hat(0, lam)
        coeffs: Dict[Tuple[int, int], float] = {(0, 0): even, (1, 1): odd if keep_odd else 0.0}
        for n in range(1, max(n_even, n_odd) + 1):
            even = even * self.coeff_b(2 * n - 1, lam, omega_even) if n <= n_even else 0.0
            if n <= n_even:
                coeffs[(0, 2 * n)] = even
            if n <= n_odd:
                odd = odd * self.coeff_b(2 * n, lam, omega_odd) + self.coeff_a_hat(2 * n, lam) * even
                coeffs[(1, 2 * n + 1)] = odd if keep_odd else 0.0
        truncated_at = max(power for _, power in coeffs)
        last = abs(coeffs[(truncated_at % 2, truncated_at)])
        logger.debug('build_coefficients lam=%r term=%r truncated_at=%d', lam, term, truncated_at)
        return SeriesSolution(lam, coeffs, self.params.eps, {}, truncated_at, term is not None, last)

    @staticmethod
    def closed_form_tables(term: TerminationSpec, gamma: float, mu: float) -> Tuple[np.ndarray, np.ndarray]:
        """ Power-of-x coefficient arrays (eps0, eps1) of the first-kind polynomial.
        Args:
            term (TerminationSpec): Eigennumbers
            gamma (float): gamma
            mu (float): mu, fixing z = -mu x^2 / 2
        Returns:
            Tuple[np.ndarray, np.ndarray]: eps0 and eps1 coefficients indexed by power
        """
        a0, a1 = term.alpha0, term.alpha1
        half_omega = (gamma - 0.5) / 2
        scale = -mu / 2
        norm = gamma_ratio([gamma + a0], [gamma])
        size = 2 * a1 + 2
        eps0 = np.zeros(size)
        sums = [KahanSum() for _ in range(size)]
        for n in range(a0 + 1):
            fn = pochhammer(-a0, n) / (math.factorial(n) * pochhammer(gamma, n))
            eps0[2 * n] = norm * fn * scale ** n
            inner = pi_first_term(n, gamma, half_omega)
            for k in range(a1 - n + 1):
                sums[2 * (n + k) + 1].add(-0.5 * norm * fn * inner * scale ** (n + k))
                inner *= pi_next_ratio(n, k, a1, gamma)
        eps1 = np.array([s.value for s in sums])
        return eps0, eps1

    def closed_form_coefficients(self, term: TerminationSpec) -> SeriesSolution:
        """ Closed-form first-kind polynomial coefficients normalized with C0 = Gamma(gamma+alpha0)/Gamma(gamma). """
        eps0, eps1 = self.closed_form_tables(term, self.params.gamma, self.params.mu)
        keep_odd = self.params.eps != 0.0
        coeffs = {}
        for n in range(term.alpha0 + 1):
            coeffs[(0, 2 * n)] = float(eps0[2 * n])
        for p in range(term.alpha1 + 1):
            coeffs[(1, 2 * p + 1)] = float(eps1[2 * p + 1]) if keep_odd else 0.0
        truncated_at = 2 * term.alpha1 + 1
        return SeriesSolution(0.0, coeffs, self.params.eps, {}, truncated_at, True,
                              abs(coeffs[(1, truncated_at)]))

    def exact_coefficients(self, lam: Number = 0.0, c0: Number = 1.0,
                           power_cap: Optional[int] = None) -> List[Number]:
        """ Coefficients of the full recurrence with a single Omega (no eps split).
        Jets may be passed for lam and c0 to differentiate in lambda.
        Args:
            lam (Number, optional): Indicial root (float or Jet)
            c0 (Number, optional): Leading coefficient (float or Jet)
            power_cap (int, optional): Highest power
        Returns:
            List[Number]: C_0 ... C_cap
        """
        cap = self.power_cap if power_cap is None else power_cap
        p = self.params
        prev: Number = 0.0
        cur: Number = c0
        out = [cur]
        for n in range(cap):
            num = p.eps * self._numerator_a(n, lam) * cur
            if n >= 1:
                num = num + self._numerator_b(n, lam, p.big_omega) * prev
            prev, cur = cur, _divide(num, self._denominator(n, lam), n, lam)
            out.append(cur)
        return out

    def coefficient_derivatives(self, lam: float, power_cap: Optional[int] = None) -> List[Tuple[float, float]]:
        """ (C_n, dC_n/dlam) pairs from first-order jets. """
        jets = self.exact_coefficients(Jet.variable(lam, 1), Jet.constant(1.0, 1), power_cap)
        return [(j.value, j.derivative) for j in jets]

    def _plain_solution(self, lam: float, cap: int) -> SeriesSolution:
        values = self.exact_coefficients(lam, 1.0, cap)
        coeffs = {(0, n): float(c) for n, c in enumerate(values)}
        return SeriesSolution(lam, coeffs, 0.0, {}, cap, False, abs(values[-1]))

    def _log_solution(self, lam: float, cap: int, shifted: bool) -> SeriesSolution:
        if shifted:
            jets = self.exact_coefficients(Jet.variable(lam, 2), Jet([0.0, 1.0, 0.0]), cap)
        else:
            jets = self.exact_coefficients(Jet.variable(lam, 1), Jet.constant(1.0, 1), cap)
        coeffs = {(0, n): j.derivative for n, j in enumerate(jets)}
        logs = {(0, n): j.value for n, j in enumerate(jets)}
        return SeriesSolution(lam, coeffs, 0.0, logs, cap, False, abs(jets[-1].derivative))

    def frobenius_solve(self, which_case: Optional[FrobeniusCase] = None,
                        power_cap: Optional[int] = None) -> Tuple[SeriesSolution, SeriesSolution]:
        """ Two independent Frobenius solutions about x = 0 with the exact recurrence.
        Coefficients are exact in eps and stored at eps order 0.
        Args:
            which_case (FrobeniusCase, optional): Expected case; mismatch raises
            power_cap (int, optional): Highest power
        Returns:
            Tuple[SeriesSolution, SeriesSolution]: (g1, g2)
        """
        cap = self.power_cap if power_cap is None else power_cap
        nu = self.params.nu
        case = frobenius_case(nu)
        if which_case is not None and FrobeniusCase(which_case) != case:
            raise CaseMismatchError('which_case', f'case {case.value} for nu={nu!r}',
                                    f'Requested case {FrobeniusCase(which_case).value} '
                                    f'but nu={nu!r} gives {case.value}')
        logger.debug('frobenius_solve nu=%r case=%s cap=%d', nu, case.value, cap)
        if case in (FrobeniusCase.A, FrobeniusCase.D):
            return self._plain_solution(0.0, cap), self._plain_solution(1.0 - nu, cap)
        if case == FrobeniusCase.B:
            return self._plain_solution(0.0, cap), self._log_solution(0.0, cap, shifted=False)
        if case == FrobeniusCase.C:
            return self._plain_solution(1.0 - nu, cap), self._log_solution(0.0, cap, shifted=True)
        return self._plain_solution(0.0, cap), self._log_solution(1.0 - nu, cap, shifted=True)

    def detect_termination(self, branch: LambdaBranch = LambdaBranch.ROOT0) -> Optional[EigenDetection]:
        """ Eigennumbers implied by Omega on one branch, or None for an infinite series. """
        p = self.params
        if p.mu == 0:
            return None
        ratio = -p.big_omega / (2 * p.mu)
        if LambdaBranch(branch) == LambdaBranch.ROOT1MNU:
            ratio += p.gamma - 1
        alpha0 = nearest_nonnegative_integer(ratio)
        alpha1 = nearest_nonnegative_integer(ratio - 0.5)
        if alpha0 is None and alpha1 is None:
            return None
        return EigenDetection(LambdaBranch(branch), alpha0, alpha1, ratio)


def pi_first_term(n: int, gamma: float, half_omega: float) -> float:
    """ (n + omega/2) Gamma(n+1/2) Gamma(n+gamma-1/2) / (Gamma(n+3/2) Gamma(n+gamma+1/2)).
    The gamma quotient reduces to 1/(n+gamma-1/2). When that vanishes together with
    n + omega/2 the term takes its limit; omega = nu/2 ties omega/2 to (gamma-1/2)/2.
    Args:
        n (int): Outer index
        gamma (float): gamma (or 2-gamma on the second branch)
        half_omega (float): omega/2 (or omega/2 + 1 - gamma)
    Returns:
        float: Leading inner term
    """
    shift = n + gamma - 0.5
    lead = n + half_omega
    if abs(shift) < ZERO_TOL:
        if abs(lead) >= ZERO_TOL:
            raise PoleError(shift, 'gamma')
        return 0.5 / (n + 0.5)
    return lead / ((n + 0.5) * shift)


def pi_next_ratio(n: int, k: int, alpha1: int, gamma: float) -> float:
    """ Inner-sum ratio (n-alpha1+k) / ((k+n+3/2)(k+n+gamma+1/2)); raises at a true gamma pole. """
    den = (k + n + 1.5) * (k + n + gamma + 0.5)
    if abs(den) < ZERO_TOL:
        if n - alpha1 + k == 0:
            return 0.0
        raise PoleError(k + n + gamma + 0.5, 'gamma')
    return (n - alpha1 + k) / den
