"""Coefficient bundles of the grand confluent equation
x g'' + (mu x^2 + eps x + nu) g' + (Omega x + eps omega) g = 0."""
import dataclasses
import logging
import math
from dataclasses import dataclass
from typing import Optional
from pygrandconfluent.exceptions import DomainError, PreconditionError, UnsupportedParameterError
logger = logging.getLogger('GCH')

EPS_SMALLNESS_LIMIT = 0.1


@dataclass(frozen=True)
class GchParams:
    """ODE coefficients (mu, eps, nu, Omega); omega is tied to nu/2.

    Args:
        mu (float): Coefficient of x^2 g' (negative for normalizable solutions)
        eps (float): Small coefficient of x g'
        nu (float): Coefficient of g'
        big_omega (float): Coefficient of x g (the eigenvalue)
        omega (float, optional): Must equal nu/2 when given
    """
    mu: float
    eps: float
    nu: float
    big_omega: float = 0.0
    omega: Optional[float] = None

    def __post_init__(self):
        for name in ('mu', 'eps', 'nu', 'big_omega'):
            value = getattr(self, name)
            if not math.isfinite(value):
                raise DomainError(name, value, 'finite')
            object.__setattr__(self, name, float(value))
        if self.omega is None:
            object.__setattr__(self, 'omega', self.nu / 2)
        elif abs(self.omega - self.nu / 2) > 1e-15 * max(1.0, abs(self.nu)):
            raise UnsupportedParameterError('omega', 'omega = nu/2',
                                            f'omega={self.omega!r} differs from nu/2={self.nu / 2!r}')
        else:
            object.__setattr__(self, 'omega', self.nu / 2)
        if not self.perturbative:
            logger.warning('|eps/2| = %.3g is not small (limit %.2g); first-order results are unreliable',
                           abs(self.eps / 2), EPS_SMALLNESS_LIMIT)

    @property
    def gamma(self) -> float:
        """ gamma = (1+nu)/2 """
        return (1 + self.nu) / 2

    @property
    def perturbative(self) -> bool:
        """ True when |eps/2| is below the perturbative limit. """
        return abs(self.eps / 2) < EPS_SMALLNESS_LIMIT

    @classmethod
    def from_gamma(cls, mu: float, eps: float, gamma: float, big_omega: float = 0.0) -> 'GchParams':
        """ Build from gamma instead of nu. """
        return cls(mu=mu, eps=eps, nu=2 * gamma - 1, big_omega=big_omega)

    @classmethod
    def from_dict(cls, doc: dict) -> 'GchParams':
        """ Build from a document with keys mu, eps, nu (or gamma) and Omega. """
        try:
            mu = doc['mu']
            eps = doc.get('eps', 0.0)
            big_omega = doc.get('Omega', doc.get('big_omega', 0.0))
            if 'nu' in doc:
                return cls(mu=mu, eps=eps, nu=doc['nu'], big_omega=big_omega, omega=doc.get('omega'))
            return cls.from_gamma(mu, eps, doc['gamma'], big_omega)
        except KeyError as err:
            raise PreconditionError(str(err.args[0]), 'required key') from err

    def replace(self, **changes) -> 'GchParams':
        """ Copy with some fields changed; omega follows nu. """
        changes.setdefault('omega', None)
        return dataclasses.replace(self, **changes)

    def require_negative_mu(self):
        """ Raise unless mu < 0. """
        if not self.mu < 0:
            raise DomainError('mu', self.mu, 'mu < 0')


@dataclass(frozen=True)
class TerminationSpec:
    """Pair of eigennumbers (alpha0, alpha1) with alpha0 <= alpha1."""
    alpha0: int
    alpha1: int

    def __post_init__(self):
        for name in ('alpha0', 'alpha1'):
            value = getattr(self, name)
            if int(value) != value or value < 0:
                raise PreconditionError(name, 'non-negative integer')
            object.__setattr__(self, name, int(value))
        if self.alpha0 > self.alpha1:
            raise PreconditionError('alpha0', 'alpha0 <= alpha1',
                                    f'alpha0={self.alpha0} exceeds alpha1={self.alpha1}')

    def as_tuple(self):
        """ (alpha0, alpha1) """
        return (self.alpha0, self.alpha1)
