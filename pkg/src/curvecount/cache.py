"""In-memory and on-disk cache of computed counts, keyed by family then degree."""
from __future__ import annotations

import json
import os
import re
from dataclasses import dataclass, field
from pathlib import Path

__all__ = ["FAMILIES", "CountCache", "CacheFormatError", "save_cache", "load_cache"]

FAMILIES = ("genus0", "genus2", "w11", "w13", "tacnodal")

_DECIMAL = re.compile(r"[0-9]+")


class CacheFormatError(ValueError):
    pass


def _empty_entries() -> dict[str, dict[int, int]]:
    return {family: {} for family in FAMILIES}


@dataclass
class CountCache:
    """Per-family map ``degree -> count``.

    Values are write-once. The ``genus0`` family is filled bottom-up: degree
    ``d`` may only be present when every degree below it is.
    """

    entries: dict[str, dict[int, int]] = field(default_factory=_empty_entries)

    def __post_init__(self):
        unknown = set(self.entries) - set(FAMILIES)
        if unknown:
            raise CacheFormatError(f"unknown count family: {sorted(unknown)[0]!r}")
        filled = _empty_entries()
        for family, values in self.entries.items():
            filled[family] = {int(d): int(v) for d, v in values.items()}
        self.entries = filled
        _check_bottom_up(self.entries["genus0"])

    def get(self, family: str, degree: int) -> int | None:
        return self.entries[family].get(degree)

    def put(self, family: str, degree: int, value: int) -> None:
        column = self.entries[family]
        if degree in column:
            if column[degree] != value:
                raise ValueError(
                    f"cached {family}[{degree}] = {column[degree]} cannot be overwritten with {value}"
                )
            return
        if family == "genus0" and degree > 1 and degree - 1 not in column:
            raise ValueError(f"genus0[{degree}] written before genus0[{degree - 1}]")
        column[degree] = value

    def genus0_values(self) -> dict[int, int]:
        return self.entries["genus0"]

    def to_json_obj(self) -> dict[str, dict[str, str]]:
        return {
            family: {str(d): str(v) for d, v in sorted(self.entries[family].items())}
            for family in FAMILIES
            if self.entries[family]
        }


def _check_bottom_up(column: dict[int, int]) -> None:
    for d in sorted(column):
        if d < 1:
            raise CacheFormatError(f"genus0 degree {d} is not positive")
        if d > 1 and d - 1 not in column:
            raise CacheFormatError(f"genus0 entry at degree {d} but degree {d - 1} is missing")


def save_cache(path: str | os.PathLike, cache: CountCache) -> None:
    path = Path(path)
    tmp = path.with_name(path.name + ".tmp")
    tmp.write_text(json.dumps(cache.to_json_obj(), indent=2, sort_keys=True) + "\n")
    os.replace(tmp, path)


def load_cache(path: str | os.PathLike) -> CountCache:
    """Read a cache file written by :func:`save_cache`.

    Every key and value is validated: families must be known, degrees must be
    positive decimal integers and counts decimal strings without sign,
    exponent or separators. Raises :class:`CacheFormatError` naming the
    offending key.
    """
    try:
        raw = json.loads(Path(path).read_text())
    except json.JSONDecodeError as exc:
        raise CacheFormatError(f"{path}: not valid JSON ({exc})") from exc
    if not isinstance(raw, dict):
        raise CacheFormatError(f"{path}: top level must be an object")

    entries = _empty_entries()
    for family, column in raw.items():
        if family not in FAMILIES:
            raise CacheFormatError(f"unknown count family: {family!r}")
        if not isinstance(column, dict):
            raise CacheFormatError(f"{family}: expected an object of degree -> value")
        for key, value in column.items():
            if not _DECIMAL.fullmatch(key) or int(key) < 1:
                raise CacheFormatError(f"{family}: bad degree key {key!r}")
            if not isinstance(value, str) or not _DECIMAL.fullmatch(value):
                raise CacheFormatError(f"{family}[{key}]: value {value!r} is not a decimal integer string")
            entries[family][int(key)] = int(value)
    return CountCache(entries)
