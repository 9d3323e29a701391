"""Exact integer/rational arithmetic shared by every count formula.

Rationals are :class:`fractions.Fraction`, which is always normalized
(positive denominator, coprime parts) and backed by Python's unbounded ints.
"""
from __future__ import annotations

import math
from fractions import Fraction

__all__ = [
    "ExactRational",
    "CountingError",
    "IntegralityViolation",
    "DivisibilityViolation",
    "DecompositionViolation",
    "binomial",
    "rational_to_integer",
    "exact_divide",
]

ExactRational = Fraction


class CountingError(ArithmeticError):
    """A count came out in a shape no correct formula can produce."""


class IntegralityViolation(CountingError):
    def __init__(self, value: Fraction, what: str = "count"):
        self.value = value
        self.what = what
        super().__init__(f"{what} is not an integer: {value}")


class DivisibilityViolation(CountingError):
    def __init__(self, value: int, divisor: int, what: str = "count"):
        self.value = value
        self.divisor = divisor
        self.what = what
        super().__init__(f"{what} = {value} is not divisible by {divisor}")


class DecompositionViolation(CountingError):
    def __init__(self, degree: int, total: int, parts: tuple[int, ...]):
        self.degree = degree
        self.total = total
        self.parts = parts
        rhs = " + ".join(str(p) for p in parts)
        super().__init__(f"d={degree}: {total} != {rhs}")


def binomial(n: int, k: int) -> int:
    """C(n, k), with the convention C(n, k) = 0 for k outside [0, n]."""
    if n < 0:
        raise ValueError(f"binomial needs n >= 0, got n={n}")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


def rational_to_integer(q: Fraction, what: str = "count") -> int:
    q = Fraction(q)
    if q.denominator != 1:
        raise IntegralityViolation(q, what)
    return q.numerator


def exact_divide(value: int, divisor: int, what: str = "count") -> int:
    quotient, remainder = divmod(value, divisor)
    if remainder:
        raise DivisibilityViolation(value, divisor, what)
    return quotient
