"""Errors raised by pygrandconfluent.

Every error carries a `field` and a `constraint` so callers (the CLI in
particular) can report what was violated without parsing messages.
"""
from typing import Optional, Tuple


class GchError(Exception):
    """Base class for all library errors."""

    def __init__(self, message: str, field: str = '', constraint: str = ''):
        super().__init__(message)
        self.field = field
        self.constraint = constraint

    def as_dict(self) -> dict:
        """ Machine-readable form used by the CLI. """
        return {'field': self.field, 'constraint': self.constraint, 'message': str(self)}


class PoleError(GchError, ValueError):
    """Gamma-family function evaluated at a pole."""

    def __init__(self, argument: float, field: str = 'x'):
        super().__init__(f'Gamma pole at {argument!r}', field, 'not a non-positive integer')
        self.argument = argument


class DomainError(GchError, ValueError):
    """Argument outside the domain of the operation."""

    def __init__(self, field: str, value, constraint: str):
        super().__init__(f'{field}={value!r} violates {constraint}', field, constraint)
        self.value = value


class PreconditionError(GchError, ValueError):
    """Operation precondition violated."""

    def __init__(self, field: str, constraint: str, message: Optional[str] = None):
        super().__init__(message or f'{field} must satisfy {constraint}', field, constraint)


class UnsupportedParameterError(PreconditionError):
    """Parameter combination the library deliberately does not support."""


class CaseMismatchError(PreconditionError):
    """Requested Frobenius case does not match the indicial roots."""


class ComplexExponentError(PreconditionError):
    """Boundary exponent at x=0 is complex."""


class NonConvergenceError(GchError, ArithmeticError):
    """Series did not meet its tolerance within the allowed number of terms."""

    def __init__(self, what: str, terms: int, last_term: float, partial: float):
        super().__init__(
            f'{what} did not converge after {terms} terms (last term {last_term:.3e}, partial sum {partial:.17g})',
            'max_terms', 'tolerance met before max_terms')
        self.terms = terms
        self.last_term = last_term
        self.partial = partial


class DivergenceError(GchError, ArithmeticError):
    """Series outside its region of convergence."""

    def __init__(self, field: str, value: float, constraint: str = '|z| < 1'):
        super().__init__(f'Series diverges for {field}={value!r}', field, constraint)
        self.value = value


class ResonanceError(GchError, ZeroDivisionError):
    """Recurrence denominator vanished at an indicial resonance."""

    def __init__(self, n: int, lam: float):
        super().__init__(f'Recurrence denominator vanishes at n={n}, lambda={lam!r}',
                         'lambda', '(n+lambda+1)(n+lambda+nu) != 0')
        self.n = n
        self.lam = lam


class VanishingDenominatorError(GchError, ZeroDivisionError):
    """A bracket-sum denominator of a logarithmic series vanished."""

    def __init__(self, k: int, label: str, value: float):
        super().__init__(f'Denominator vanishes at k={k} for {label}={value!r}', label, 'denominator != 0')
        self.k = k
        self.label = label
        self.value = value


class QuadratureError(GchError, ArithmeticError):
    """Quadrature could not meet the requested tolerance."""

    def __init__(self, estimate: float, abs_error: float, tol: float):
        super().__init__(f'Quadrature error {abs_error:.3e} exceeds tolerance {tol:.3e} (estimate {estimate:.17g})',
                         'tol', 'abs_error_estimate <= tol')
        self.estimate = estimate
        self.abs_error = abs_error


class ZeroCrossingError(GchError, ValueError):
    """Reference solution vanishes inside the reduction-of-order interval."""

    def __init__(self, interval: Tuple[float, float]):
        super().__init__(f'g1 changes sign in [{interval[0]!r}, {interval[1]!r}]', 'g1', 'no zero in [x_lo, x_hi]')
        self.interval = interval


class UsageError(GchError, ValueError):
    """Malformed command line or parameter document."""
