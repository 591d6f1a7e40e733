"""Various helper routines."""
import math
from typing import Iterable, Optional


class KahanSum:
    """ Compensated (Neumaier) running sum. """

    def __init__(self, start: float = 0.0):
        self.total = float(start)
        self.compensation = 0.0

    def add(self, value: float):
        """ Add a term to the running sum.
        Args:
            value (float): Term to add
        """
        t = self.total + value
        if abs(self.total) >= abs(value):
            self.compensation += (self.total - t) + value
        else:
            self.compensation += (value - t) + self.total
        self.total = t

    @property
    def value(self) -> float:
        """ Current compensated sum. """
        return self.total + self.compensation


def compensated_sum(values: Iterable[float]) -> float:
    """ Sum values with Kahan-Babuska compensation.
    Args:
        values (Iterable[float]): Terms
    Returns:
        float: Compensated sum
    """
    acc = KahanSum()
    for value in values:
        acc.add(value)
    return acc.value


def is_nonpositive_integer(x: float) -> bool:
    ''' Check if x is exactly 0, -1, -2, ... '''
    return x <= 0 and float(x).is_integer()


def nearest_nonnegative_integer(x: float, tol: float = 1e-9) -> Optional[int]:
    """ Return round(x) if x lies within tol of a non-negative integer, else None.
    Args:
        x (float): Candidate value
        tol (float, optional): Absolute tolerance
    Returns:
        Optional[int]: Integer or None
    """
    if not math.isfinite(x):
        return None
    k = round(x)
    if k >= 0 and abs(x - k) <= tol:
        return int(k)
    return None


def power_limit(base: float, exponent: float) -> float:
    """ base**exponent for base >= 0 evaluated as exp(exponent*ln(base)).
    At base == 0 the signed limit is returned: 0, 1 or +inf.
    """
    if base > 0:
        return math.exp(exponent * math.log(base))
    if exponent > 0:
        return 0.0
    if exponent == 0:
        return 1.0
    return math.inf


def relative_deviation(value: float, reference: float, floor: float = 1e-300) -> float:
    ''' |value - reference| relative to max(|reference|, floor). '''
    return abs(value - reference) / max(abs(reference), floor)
