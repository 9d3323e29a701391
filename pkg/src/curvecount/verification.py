"""Invariant suite over a degree range, with exact witnesses for every check.

Each check compares two exact values; integrality and divisibility are phrased
as ``q == floor(q)`` and ``n == 6 * floor(n / 6)`` so that a failure always
carries both sides. Checks never raise: an arithmetic violation raised while
evaluating a side is recorded as a failure.
"""
from __future__ import annotations

import json
import math
from collections.abc import Callable
from dataclasses import dataclass, field
from fractions import Fraction

from .cache import CountCache
from .exact import CountingError
from .genus_two import (
    THEOREM,
    GenusTwoCoefficients,
    genus_two_exact,
    genus_two_split_sum,
    n_genus_two,
    w11_exact,
    w11_split_sum,
    w13_exact,
    w13_split_sum,
)
from .rational import kontsevich_sum, n_rational

__all__ = [
    "GOLDEN_GENUS_TWO",
    "GOLDEN_RATIONAL",
    "CheckResult",
    "VerificationReport",
    "check_table",
    "check_decomposition",
    "check_integrality",
    "check_divisibility",
    "check_symmetry",
    "run_suite",
]

# Published values for d = 1..7.
GOLDEN_GENUS_TWO = ("0", "0", "0", "14400", "6350400", "3931128000", "3718909209600")
GOLDEN_RATIONAL = ("1", "1", "12", "620", "87304", "26312976", "14616808192")


@dataclass(frozen=True)
class CheckResult:
    name: str
    degree: int
    passed: bool
    lhs: str | None = None
    rhs: str | None = None

    def to_dict(self) -> dict:
        out = {"name": self.name, "degree": self.degree, "passed": self.passed}
        if self.lhs is not None:
            out["lhs"] = self.lhs
        if self.rhs is not None:
            out["rhs"] = self.rhs
        return out


@dataclass
class VerificationReport:
    max_degree: int
    checks: list[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> list[CheckResult]:
        return [c for c in self.checks if not c.passed]

    def to_dict(self) -> dict:
        return {
            "max_degree": self.max_degree,
            "passed": self.passed,
            "checks": [c.to_dict() for c in self.checks],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)


def _witness(exc: Exception) -> str | None:
    value = getattr(exc, "value", None)
    return None if value is None else str(value)


def _compare(name: str, degree: int, lhs: Callable[[], Fraction], rhs: Callable[[], Fraction]) -> CheckResult:
    try:
        left = Fraction(lhs())
    except (CountingError, ZeroDivisionError) as exc:
        return CheckResult(name, degree, False, _witness(exc), None)
    try:
        right = Fraction(rhs())
    except (CountingError, ZeroDivisionError) as exc:
        return CheckResult(name, degree, False, str(left), _witness(exc))
    return CheckResult(name, degree, left == right, str(left), str(right))


def _n2d(d, cache, coefficients) -> Fraction:
    if coefficients == THEOREM:
        return Fraction(n_genus_two(d, cache))
    return genus_two_exact(d, cache, coefficients)


def check_table(cache: CountCache | None = None, coefficients: GenusTwoCoefficients = THEOREM) -> list[CheckResult]:
    """Compare N_d and N_{2,d} for d = 1..7 against the published values."""
    if cache is None:
        cache = CountCache()
    results = []
    for d, golden in enumerate(GOLDEN_RATIONAL, start=1):
        results.append(_compare("table:n_rational", d, lambda: n_rational(d, cache), lambda: int(golden)))
    for d, golden in enumerate(GOLDEN_GENUS_TWO, start=1):
        results.append(
            _compare("table:n_genus_two", d, lambda: _n2d(d, cache, coefficients), lambda: int(golden))
        )
    return results


def check_decomposition(
    d_max: int, cache: CountCache | None = None, coefficients: GenusTwoCoefficients = THEOREM
) -> list[CheckResult]:
    """N_{2,d} == W11 + W13 for every d in 2..d_max."""
    if d_max < 2:
        raise ValueError(f"d_max must be >= 2, got {d_max}")
    if cache is None:
        cache = CountCache()
    return [
        _compare(
            "decomposition",
            d,
            lambda: _n2d(d, cache, coefficients),
            lambda: w11_exact(d, cache) + w13_exact(d, cache),
        )
        for d in range(2, d_max + 1)
    ]


def check_integrality(
    d_max: int, cache: CountCache | None = None, coefficients: GenusTwoCoefficients = THEOREM
) -> list[CheckResult]:
    if cache is None:
        cache = CountCache()

    def n_d(d):
        if d <= 2:
            return Fraction(1)
        n_rational(d - 1, cache)
        return kontsevich_sum(d, cache.genus0_values()) / (6 * (d - 1))

    quantities = {
        "n_rational": n_d,
        "n_genus_two": lambda d: genus_two_exact(d, cache, coefficients),
        "w11": lambda d: w11_exact(d, cache),
        "w13": lambda d: w13_exact(d, cache),
        "tacnodal": lambda d: w13_exact(d, cache) / 6,
        "kqr_published": lambda d: (genus_two_exact(d, cache, coefficients) - w13_exact(d, cache)) / 6,
    }
    results = []
    for label, value in quantities.items():
        for d in range(1, d_max + 1):
            results.append(
                _compare(f"integrality:{label}", d, lambda: value(d), lambda: math.floor(value(d)))
            )
    return results


def check_divisibility(
    d_max: int, cache: CountCache | None = None, coefficients: GenusTwoCoefficients = THEOREM
) -> list[CheckResult]:
    if cache is None:
        cache = CountCache()
    quantities = {
        "n_genus_two": lambda d: genus_two_exact(d, cache, coefficients),
        "w13": lambda d: w13_exact(d, cache),
    }
    results = []
    for label, value in quantities.items():
        for d in range(1, d_max + 1):
            results.append(
                _compare(f"divisibility:{label}_by_6", d, lambda: value(d), lambda: 6 * math.floor(value(d) / 6))
            )
    return results


def check_symmetry(
    d_max: int, cache: CountCache | None = None, coefficients: GenusTwoCoefficients = THEOREM
) -> list[CheckResult]:
    """Every split sum is unchanged by reversing the order or swapping (d1, d2)."""
    if cache is None:
        cache = CountCache()

    def genus0_sum(d, order):
        n_rational(d - 1, cache)
        return kontsevich_sum(d, cache.genus0_values(), order)

    sums = {
        "n_rational": genus0_sum,
        "n_genus_two": lambda d, order: genus_two_split_sum(d, cache, coefficients, order),
        "w11": lambda d, order: w11_split_sum(d, cache, order),
        "w13": lambda d, order: w13_split_sum(d, cache, order),
    }
    results = []
    for label, total in sums.items():
        for order in ("reverse", "swapped"):
            for d in range(2, d_max + 1):
                results.append(
                    _compare(
                        f"symmetry:{label}:{order}",
                        d,
                        lambda: total(d, "forward"),
                        lambda: total(d, order),
                    )
                )
    return results


def run_suite(
    d_max: int, coefficients: GenusTwoCoefficients = THEOREM, cache: CountCache | None = None
) -> VerificationReport:
    """Run every check up to ``d_max`` (at least 7, so the published table is covered)."""
    if not isinstance(d_max, int) or d_max < 7:
        raise ValueError(f"d_max must be an integer >= 7, got {d_max!r}")
    if cache is None:
        cache = CountCache()
    checks = [
        *check_table(cache, coefficients),
        *check_decomposition(d_max, cache, coefficients),
        *check_integrality(d_max, cache, coefficients),
        *check_divisibility(d_max, cache, coefficients),
        *check_symmetry(d_max, cache, coefficients),
    ]
    checks.sort(key=lambda c: (c.name, c.degree))
    return VerificationReport(d_max, checks)
