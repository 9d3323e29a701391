"""Genus-zero plane curve counts N_d via Kontsevich's quadratic recursion."""
from __future__ import annotations

from collections.abc import Callable, Mapping
from dataclasses import dataclass
from fractions import Fraction

from .cache import CountCache
from .exact import binomial, rational_to_integer

__all__ = [
    "DegreeSplit",
    "splits",
    "split_sum",
    "kontsevich_coefficient",
    "kontsevich_sum",
    "n_rational",
    "BASE_VALUES",
    "check_degree",
]

# N_1 = N_2 = 1; the recursion's 1/(6(d-1)) prefactor is undefined at d = 1.
BASE_VALUES = {1: 1, 2: 1}

Coefficient = Callable[[int, int], Fraction]


@dataclass(frozen=True)
class DegreeSplit:
    d1: int
    d2: int

    @property
    def degree(self) -> int:
        return self.d1 + self.d2

    @property
    def weight(self) -> int:
        """binom(3d-2, 3d1-1) * d1 * d2."""
        return binomial(3 * self.degree - 2, 3 * self.d1 - 1) * self.d1 * self.d2

    def swapped(self) -> DegreeSplit:
        return DegreeSplit(self.d2, self.d1)


def check_degree(d: int) -> None:
    if not isinstance(d, int) or isinstance(d, bool) or d < 1:
        raise ValueError(f"degree must be a positive integer, got {d!r}")


def splits(d: int) -> list[DegreeSplit]:
    check_degree(d)
    return [DegreeSplit(d1, d - d1) for d1 in range(1, d)]


def split_sum(
    d: int,
    coefficient: Coefficient,
    genus0: Mapping[int, int],
    order: str = "forward",
) -> Fraction:
    """Sum ``coefficient(d1, d2) * weight * N_{d1} * N_{d2}`` over ordered splits of d.

    ``order`` is one of ``"forward"``, ``"reverse"`` or ``"swapped"``; the
    last evaluates every term at (d2, d1) instead of (d1, d2). All three give
    the same exact value, which the verification suite relies on.
    """
    terms = splits(d)
    if order == "reverse":
        terms = terms[::-1]
    elif order == "swapped":
        terms = [s.swapped() for s in terms]
    elif order != "forward":
        raise ValueError(f"unknown summation order {order!r}")
    total = Fraction(0)
    for s in terms:
        total += coefficient(s.d1, s.d2) * s.weight * genus0[s.d1] * genus0[s.d2]
    return total


def kontsevich_coefficient(d1: int, d2: int) -> Fraction:
    d = d1 + d2
    return d1 * d2 - Fraction(2 * (d1 - d2) ** 2, 3 * d - 2)


def kontsevich_sum(d: int, genus0: Mapping[int, int], order: str = "forward") -> Fraction:
    """The recursion's split sum before the 1/(6(d-1)) prefactor."""
    return split_sum(d, kontsevich_coefficient, genus0, order)


def n_rational(d: int, cache: CountCache | None = None) -> int:
    """Number of rational degree-d plane curves through 3d-1 general points.

    Fills ``cache`` bottom-up from degree 1 to d and returns N_d.
    """
    check_degree(d)
    if cache is None:
        cache = CountCache()
    values = cache.genus0_values()
    for k in range(1, d + 1):
        if k in values:
            continue
        if k in BASE_VALUES:
            cache.put("genus0", k, BASE_VALUES[k])
            continue
        q = kontsevich_sum(k, values) / (6 * (k - 1))
        cache.put("genus0", k, rational_to_integer(q, f"N_{k}"))
    return values[d]
