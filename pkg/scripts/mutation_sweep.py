"""Perturb each constant of the genus-two formula and count failing suite checks.

    python scripts/mutation_sweep.py [d_max]
"""
import dataclasses
import sys
from collections import Counter

from curvecount.genus_two import THEOREM
from curvecount.verification import run_suite


def main(d_max=7):
    for field in dataclasses.fields(THEOREM):
        base = getattr(THEOREM, field.name)
        for delta in (-1, 1):
            report = run_suite(d_max, coefficients=dataclasses.replace(THEOREM, **{field.name: base + delta}))
            kinds = Counter(c.name.split(":")[0] for c in report.failures)
            summary = ", ".join(f"{k}={n}" for k, n in sorted(kinds.items())) or "none"
            print(f"{field.name:>14} {base:>3} -> {base + delta:<3} failures: {len(report.failures):>3} ({summary})")


if __name__ == "__main__":
    main(int(sys.argv[1]) if len(sys.argv) > 1 else 7)
