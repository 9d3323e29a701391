"""Genus-two counts N_{2,d}, their boundary-stratum contributions and T_d.

N_{2,d} splits as the sum of two stratum contributions, W11 and W13; the
second is six times the number T_d of tacnodal rational curves. The
comparison value ``kqr_published`` solves N_{2,d} = 6 (K + T_d) for K.

Every function has an ``*_exact`` twin returning the raw
:class:`~fractions.Fraction` before any integrality assertion.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .cache import CountCache
from .exact import (
    DecompositionViolation,
    DivisibilityViolation,
    exact_divide,
    rational_to_integer,
)
from .rational import check_degree, n_rational, split_sum

__all__ = [
    "GenusTwoCoefficients",
    "THEOREM",
    "GenusTwoBreakdown",
    "genus_two_exact",
    "genus_two_split_sum",
    "w11_exact",
    "w11_split_sum",
    "w13_exact",
    "w13_split_sum",
    "n_genus_two",
    "w11_contribution",
    "w13_contribution",
    "tacnodal_count",
    "kqr_published",
    "breakdown",
]


@dataclass(frozen=True)
class GenusTwoCoefficients:
    """Integer constants of the closed formula for N_{2,d}.

        N_{2,d} = leading (d^2 - square_shift) N_d
                + 1/2 sum (d1^2 d2^2 + constant
                           - tacnode_scale (node_weight d1 d2 - node_shift)
                             / (degree_scale d - degree_shift))
                  * binom(3d-2, 3d1-1) d1 d2 N_{d1} N_{d2}

    Only the defaults give the correct count; the fields exist so tests can
    mutate one constant at a time.
    """

    leading: int = 3
    square_shift: int = 1
    constant: int = 28
    tacnode_scale: int = 16
    node_weight: int = 9
    node_shift: int = 1
    degree_scale: int = 3
    degree_shift: int = 2


THEOREM = GenusTwoCoefficients()


def _genus0_upto(d: int, cache: CountCache) -> dict[int, int]:
    n_rational(d, cache)
    return cache.genus0_values()


def genus_two_split_sum(d, cache, coefficients=THEOREM, order="forward") -> Fraction:
    c = coefficients

    def coefficient(d1, d2):
        return d1**2 * d2**2 + c.constant - Fraction(
            c.tacnode_scale * (c.node_weight * d1 * d2 - c.node_shift),
            c.degree_scale * (d1 + d2) - c.degree_shift,
        )

    return split_sum(d, coefficient, _genus0_upto(d, cache), order)


def genus_two_exact(d: int, cache: CountCache, coefficients=THEOREM) -> Fraction:
    check_degree(d)
    c = coefficients
    n_d = n_rational(d, cache)
    return c.leading * (d * d - c.square_shift) * n_d + Fraction(1, 2) * genus_two_split_sum(
        d, cache, coefficients
    )


def w11_split_sum(d, cache, order="forward") -> Fraction:
    def coefficient(d1, d2):
        return d1**2 * d2**2 - 6 * d1 * d2 - 4 + Fraction(18 * d1 * d2, d1 + d2)

    return split_sum(d, coefficient, _genus0_upto(d, cache), order)


def w11_exact(d: int, cache: CountCache) -> Fraction:
    check_degree(d)
    n_d = n_rational(d, cache)
    first = Fraction(3 * (d - 1) * (d - 2) * (d - 3), d) * n_d
    return first + Fraction(1, 2) * w11_split_sum(d, cache)


def w13_split_sum(d, cache, order="forward") -> Fraction:
    def coefficient(d1, d2):
        return d1 * d2 + 4 - Fraction(9 * d1 * d2, d1 + d2)

    return split_sum(d, coefficient, _genus0_upto(d, cache), order)


def w13_exact(d: int, cache: CountCache) -> Fraction:
    # the stray lowercase n_d in the published statement is N_d
    check_degree(d)
    n_d = n_rational(d, cache)
    first = Fraction(6 * (3 * d * d - 12 * d + 9) * n_d, d)
    return first + 3 * w13_split_sum(d, cache)


def _cached(family, d, cache, compute):
    value = cache.get(family, d)
    if value is None:
        value = compute()
        cache.put(family, d, value)
    return value


def n_genus_two(d: int, cache: CountCache | None = None, coefficients=THEOREM) -> int:
    """Number of genus-two degree-d plane curves with fixed normalization
    through 3d-2 general points."""
    if cache is None:
        cache = CountCache()

    def compute():
        return rational_to_integer(genus_two_exact(d, cache, coefficients), f"N_2,{d}")

    if coefficients != THEOREM:
        return compute()
    return _cached("genus2", d, cache, compute)


def w11_contribution(d: int, cache: CountCache | None = None) -> int:
    if cache is None:
        cache = CountCache()
    return _cached("w11", d, cache, lambda: rational_to_integer(w11_exact(d, cache), f"W11({d})"))


def w13_contribution(d: int, cache: CountCache | None = None) -> int:
    """W13 contribution; always a multiple of 6."""
    if cache is None:
        cache = CountCache()

    def compute():
        value = rational_to_integer(w13_exact(d, cache), f"W13({d})")
        if value % 6:
            raise DivisibilityViolation(value, 6, f"W13({d})")
        return value

    return _cached("w13", d, cache, compute)


def tacnodal_count(d: int, cache: CountCache | None = None) -> int:
    """Number of tacnodal rational degree-d curves through 3d-2 general points."""
    if cache is None:
        cache = CountCache()
    return _cached("tacnodal", d, cache, lambda: w13_contribution(d, cache) // 6)


def kqr_published(d: int, cache: CountCache | None = None) -> int:
    """N_{2,d}/6 - T_d. Signed; no sign is guaranteed."""
    if cache is None:
        cache = CountCache()
    return exact_divide(n_genus_two(d, cache), 6, f"N_2,{d}") - tacnodal_count(d, cache)


@dataclass(frozen=True)
class GenusTwoBreakdown:
    degree: int
    n2d: int
    w11: int
    w13: int
    tacnodal: int
    kqr_published: int

    def as_strings(self) -> dict[str, str]:
        return {
            "degree": str(self.degree),
            "n2d": str(self.n2d),
            "w11": str(self.w11),
            "w13": str(self.w13),
            "tacnodal": str(self.tacnodal),
            "kqr_published": str(self.kqr_published),
        }


def breakdown(d: int, cache: CountCache | None = None) -> GenusTwoBreakdown:
    if cache is None:
        cache = CountCache()
    n2d = n_genus_two(d, cache)
    w11 = w11_contribution(d, cache)
    w13 = w13_contribution(d, cache)
    if n2d != w11 + w13:
        raise DecompositionViolation(d, n2d, (w11, w13))
    tac = tacnodal_count(d, cache)
    if w13 != 6 * tac:
        raise DecompositionViolation(d, w13, (6 * tac,))
    kqr = kqr_published(d, cache)
    if n2d != 6 * (kqr + tac):
        raise DecompositionViolation(d, n2d, (6 * kqr, 6 * tac))
    return GenusTwoBreakdown(d, n2d, w11, w13, tac, kqr)
