"""Jet is a truncated Taylor series in one variable (a generalized dual number)."""
from typing import Sequence, Union
import numpy as np


class Jet:
    """Truncated Taylor series c0 + c1*h + ... + ck*h^k.

    Arithmetic between two jets truncates to the shorter one. Division by a
    jet whose leading coefficients vanish exactly shifts both operands down,
    which removes one order per cancelled power; this is what lets a
    recurrence pass through an indicial resonance when the numerator carries
    the same zero.
    """

    __slots__ = ('coeffs',)

    def __init__(self, coeffs: Sequence[float]):
        self.coeffs = np.array(coeffs, dtype=float).ravel()
        if self.coeffs.size == 0:
            raise ValueError('Jet needs at least one coefficient')

    @classmethod
    def variable(cls, value: float, order: int = 1) -> 'Jet':
        """ Independent variable expanded around value. """
        coeffs = np.zeros(order + 1)
        coeffs[0] = value
        if order >= 1:
            coeffs[1] = 1.0
        return cls(coeffs)

    @classmethod
    def constant(cls, value: float, order: int = 1) -> 'Jet':
        """ Constant with zero higher coefficients. """
        coeffs = np.zeros(order + 1)
        coeffs[0] = value
        return cls(coeffs)

    @property
    def order(self) -> int:
        """ Highest retained power. """
        return self.coeffs.size - 1

    @property
    def value(self) -> float:
        """ Zeroth coefficient. """
        return float(self.coeffs[0])

    @property
    def derivative(self) -> float:
        """ First derivative (0 when the jet was truncated to order 0). """
        return float(self.coeffs[1]) if self.coeffs.size > 1 else 0.0

    @staticmethod
    def _pair(lhs: 'Jet', rhs: 'Jet'):
        size = min(lhs.coeffs.size, rhs.coeffs.size)
        return lhs.coeffs[:size], rhs.coeffs[:size]

    def __add__(self, other: Union['Jet', float]) -> 'Jet':
        if isinstance(other, Jet):
            a, b = self._pair(self, other)
            return Jet(a + b)
        coeffs = self.coeffs.copy()
        coeffs[0] += other
        return Jet(coeffs)

    __radd__ = __add__

    def __neg__(self) -> 'Jet':
        return Jet(-self.coeffs)

    def __sub__(self, other: Union['Jet', float]) -> 'Jet':
        return self + (-other)

    def __rsub__(self, other: float) -> 'Jet':
        return (-self) + other

    def __mul__(self, other: Union['Jet', float]) -> 'Jet':
        if isinstance(other, Jet):
            a, b = self._pair(self, other)
            return Jet(np.convolve(a, b)[:a.size])
        return Jet(self.coeffs * other)

    __rmul__ = __mul__

    def __truediv__(self, other: Union['Jet', float]) -> 'Jet':
        if not isinstance(other, Jet):
            if other == 0:
                raise ZeroDivisionError('Jet division by zero')
            return Jet(self.coeffs / other)
        num, den = self._pair(self, other)
        nonzero = np.flatnonzero(den)
        if nonzero.size == 0:
            raise ZeroDivisionError('Jet division by an identically zero jet')
        shift = int(nonzero[0])
        if shift:
            if np.any(num[:shift] != 0):
                raise ZeroDivisionError('Jet division has a pole')
            num, den = num[shift:], den[shift:]
        quot = np.zeros(num.size)
        for i in range(num.size):
            quot[i] = (num[i] - np.dot(quot[:i], den[i:0:-1])) / den[0]
        return Jet(quot)

    def __rtruediv__(self, other: float) -> 'Jet':
        return Jet.constant(other, self.order) / self

    def __repr__(self) -> str:
        return f'Jet({self.coeffs.tolist()!r})'
