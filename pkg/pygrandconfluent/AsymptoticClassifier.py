"""AsymptoticClassifier labels the boundary behavior of solutions of
x^2 y'' + a0 x y' + (a1 x^4 + b1 x^3 + c1 x^2 + d1) y = 0 by the sign of a1 and the exponent at x = 0."""
import logging
import math
from dataclasses import dataclass, field
from enum import Enum
from typing import List, Optional
from pygrandconfluent.GchParams import EPS_SMALLNESS_LIMIT, GchParams
from pygrandconfluent.exceptions import ComplexExponentError, DomainError
logger = logging.getLogger('GCH')


class Branch(str, Enum):
    """Sign in front of the discriminant root."""
    PLUS = 'plus'
    MINUS = 'minus'


class CaseLabel(str, Enum):
    """Regime label."""
    I_A = 'I_a'
    I_B = 'I_b'
    I_C = 'I_c'
    I_D = 'I_d'
    I_E = 'I_e'
    II = 'II'
    III_A = 'III_a'
    III_B = 'III_b'
    III_C = 'III_c'


class Behavior(str, Enum):
    """Limit of the solution at a boundary."""
    DIVERGENT = 'divergent'
    FINITE_ONE = 'finite_one'
    VANISHES = 'vanishes'
    CONVERGENT = 'convergent'
    BOUNDED = 'bounded'


@dataclass(frozen=True)
class RawOdeParams:
    """Raw coefficients (a0, a1, b1, c1, d1) with an explicit exponent branch."""
    a0: float
    a1: float
    b1: float
    c1: float
    d1: float
    branch: Branch = Branch.PLUS

    def __post_init__(self):
        for name in ('a0', 'a1', 'b1', 'c1', 'd1'):
            if not math.isfinite(getattr(self, name)):
                raise DomainError(name, getattr(self, name), 'finite')
        object.__setattr__(self, 'branch', Branch(self.branch))

    @property
    def discriminant(self) -> float:
        """ (a0-1)^2 - 4 d1 """
        return (self.a0 - 1) ** 2 - 4 * self.d1

    @property
    def exponent(self) -> float:
        """ (1/2)(-(a0-1) +- sqrt(discriminant)) """
        disc = self.discriminant
        if disc < 0:
            raise ComplexExponentError('d1', '(a0-1)^2 >= 4 d1',
                                       f'Exponent is complex: (a0-1)^2 - 4 d1 = {disc!r}')
        root = math.sqrt(disc)
        sign = 1.0 if self.branch == Branch.PLUS else -1.0
        return (-(self.a0 - 1) + sign * root) / 2

    @property
    def smallness(self) -> Optional[float]:
        """ |b1| / (2 sqrt|a1|), None when a1 = 0 """
        if self.a1 == 0:
            return None
        return abs(self.b1) / (2 * math.sqrt(abs(self.a1)))

    @classmethod
    def from_physics(cls, m: float, b: float, l: int, e_squared: float) -> 'RawOdeParams':
        """ Raw form of the radial quark-antiquark equation. """
        return cls(a0=2.0, a1=-b * b / 4, b1=-m * b, c1=e_squared / 4 - m * m, d1=-l * (l + 1), branch=Branch.PLUS)


@dataclass(frozen=True)
class ClassificationResult:
    """Regime with boundary behavior of the infinite series and, for a1 < 0, of the polynomial."""
    case_label: CaseLabel
    behavior_at_zero: Behavior
    behavior_at_infinity: Behavior
    polynomial_admissible: bool
    exponent: float
    smallness: Optional[float]
    polynomial_behavior_at_zero: Optional[Behavior] = None
    polynomial_behavior_at_infinity: Optional[Behavior] = None
    reasons: List[str] = field(default_factory=list)

    def as_dict(self) -> dict:
        """ JSON-ready form. """
        return {
            'case_label': self.case_label.value,
            'behavior_at_zero': self.behavior_at_zero.value,
            'behavior_at_infinity': self.behavior_at_infinity.value,
            'polynomial_admissible': self.polynomial_admissible,
            'polynomial_behavior_at_zero': None if self.polynomial_behavior_at_zero is None
            else self.polynomial_behavior_at_zero.value,
            'polynomial_behavior_at_infinity': None if self.polynomial_behavior_at_infinity is None
            else self.polynomial_behavior_at_infinity.value,
            'exponent': self.exponent,
            'smallness': self.smallness,
            'reasons': list(self.reasons),
        }


def _zero_behavior(exponent: float) -> Behavior:
    if exponent < 0:
        return Behavior.DIVERGENT
    if exponent == 0:
        return Behavior.FINITE_ONE
    return Behavior.VANISHES


def polynomial_admissible(raw: RawOdeParams):
    """ Check a1 < 0, exponent >= 0 and |b1|/(2 sqrt|a1|) below the smallness limit.
    Args:
        raw (RawOdeParams): Raw coefficients
    Returns:
        Tuple[bool, List[str]]: Verdict and the failed clauses
    """
    reasons = []
    if not raw.a1 < 0:
        reasons.append('a1 not real negative')
    if raw.exponent < 0:
        reasons.append(f'exponent {raw.exponent!r} < 0')
    ratio = raw.smallness
    if ratio is None or not ratio < EPS_SMALLNESS_LIMIT:
        reasons.append(f'|eps/2| = {ratio!r} not below {EPS_SMALLNESS_LIMIT}')
    return not reasons, reasons


def classify(raw: RawOdeParams) -> ClassificationResult:
    """ Regime label and boundary behaviors.
    Args:
        raw (RawOdeParams): Raw coefficients
    Returns:
        ClassificationResult: Result
    """
    exponent = raw.exponent
    admissible, reasons = polynomial_admissible(raw)
    poly_zero = poly_inf = None
    if raw.a1 > 0:
        if exponent < -1:
            label, zero, inf = CaseLabel.I_A, Behavior.DIVERGENT, Behavior.VANISHES
        elif exponent == -1:
            label, zero, inf = CaseLabel.I_B, Behavior.DIVERGENT, Behavior.BOUNDED
        elif exponent < 0:
            label, zero, inf = CaseLabel.I_C, Behavior.DIVERGENT, Behavior.DIVERGENT
        elif exponent == 0:
            label, zero, inf = CaseLabel.I_D, Behavior.FINITE_ONE, Behavior.DIVERGENT
        else:
            label, zero, inf = CaseLabel.I_E, Behavior.VANISHES, Behavior.DIVERGENT
    elif raw.a1 == 0:
        label, zero, inf = CaseLabel.II, Behavior.DIVERGENT, Behavior.DIVERGENT
    else:
        zero, inf = _zero_behavior(exponent), Behavior.DIVERGENT
        label = CaseLabel.III_A if exponent < 0 else (CaseLabel.III_B if exponent == 0 else CaseLabel.III_C)
        poly_zero, poly_inf = zero, Behavior.VANISHES
    logger.debug('classify exponent=%r label=%s', exponent, label.value)
    return ClassificationResult(label, zero, inf, admissible, exponent, raw.smallness, poly_zero, poly_inf, reasons)


def to_gch_params(raw: RawOdeParams) -> GchParams:
    """ Canonical GCH coefficients of a raw equation with a1 < 0:
    mu = -2 sqrt|a1|, eps = b1/sqrt|a1|, nu = 1 +- sqrt(disc), Omega = c1 - b1^2/(4 a1) - sqrt|a1| (2 +- sqrt(disc)).
    """
    if not raw.a1 < 0:
        raise DomainError('a1', raw.a1, 'a1 < 0')
    if raw.discriminant < 0:
        raise ComplexExponentError('d1', '(a0-1)^2 >= 4 d1')
    root = math.sqrt(raw.discriminant)
    if raw.branch == Branch.MINUS:
        root = -root
    scale = math.sqrt(-raw.a1)
    return GchParams(mu=-2 * scale, eps=raw.b1 / scale, nu=1 + root,
                     big_omega=raw.c1 - raw.b1 ** 2 / (4 * raw.a1) - scale * (2 + root))
