"""On-disk cache of Bernoulli numbers.

File layout (UTF-8, one item per line)::

    bernoulli-check-cache 1
    count 51
    1
    -1/2
    1/6
    ...

Each value line is the canonical ``num/den`` string of B_k, k = 0 .. count-1.
Loading re-derives B_0, B_1 and one randomly chosen entry with the explicit
double-sum formula, and checks every entry against the cheap structural facts
(odd entries past B_1 vanish, von Staudt-Clausen, alternating signs of the even
entries).  Any disagreement refuses the whole file.
"""

from __future__ import annotations

import random
from fractions import Fraction
from pathlib import Path

from .exact import parse_rational, to_str
from .sequences import CACHE, SequenceCache, bernoulli_explicit, vsc_primes

MAGIC = "bernoulli-check-cache"
VERSION = 1


class CacheError(Exception):
    pass


def dumps(values: list[Fraction]) -> str:
    lines = [f"{MAGIC} {VERSION}", f"count {len(values)}"]
    lines.extend(to_str(v) for v in values)
    return "\n".join(lines) + "\n"


def parse(text: str) -> list[Fraction]:
    lines = text.split("\n")
    if lines and lines[-1] == "":
        lines.pop()
    if len(lines) < 2:
        raise CacheError("cache file too short")
    head = lines[0].split()
    if len(head) != 2 or head[0] != MAGIC:
        raise CacheError(f"bad cache header {lines[0]!r}")
    if head[1] != str(VERSION):
        raise CacheError(f"unsupported cache version {head[1]!r}")
    tag, _, count = lines[1].partition(" ")
    if tag != "count" or not count.isdigit():
        raise CacheError(f"bad count line {lines[1]!r}")
    body = lines[2:]
    if len(body) != int(count):
        raise CacheError(f"cache declares {count} entries but holds {len(body)}")
    try:
        return [parse_rational(line) for line in body]
    except ValueError as exc:
        raise CacheError(str(exc)) from None


def spot_check(values: list[Fraction], rng: random.Random | None = None) -> list[int]:
    """Recompute B_0, B_1 and one random entry independently; return indices checked."""
    rng = rng or random.Random()
    indices = [k for k in (0, 1) if k < len(values)]
    if len(values) > 2:
        indices.append(rng.randrange(2, len(values)))
    for k in indices:
        expected = bernoulli_explicit(k)
        if values[k] != expected:
            raise CacheError(
                f"cache entry B_{k} = {to_str(values[k])} fails recomputation ({to_str(expected)})"
            )
    return indices


def check_structure(values: list[Fraction]) -> None:
    for k, b in enumerate(values):
        if k >= 3 and k % 2:
            if b != 0:
                raise CacheError(f"cache entry B_{k} = {to_str(b)} should vanish")
        elif k >= 2:
            half = k // 2
            if (b > 0) != (half % 2 == 1):
                raise CacheError(f"cache entry B_{k} = {to_str(b)} has the wrong sign")
            if (b + sum(Fraction(1, p) for p in vsc_primes(half))).denominator != 1:
                raise CacheError(f"cache entry B_{k} = {to_str(b)} fails von Staudt-Clausen")


def save(path: str | Path, count: int, cache: SequenceCache = CACHE) -> Path:
    if count < 1:
        raise ValueError("cache must hold at least one entry")
    path = Path(path)
    path.write_text(dumps(cache.bernoulli_numbers(count)), encoding="utf-8")
    return path


def load(
    path: str | Path, cache: SequenceCache = CACHE, rng: random.Random | None = None
) -> int:
    """Validate ``path`` and install its values; return the number of entries.

    Nothing is installed unless the whole file validates.
    """
    try:
        text = Path(path).read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as exc:
        raise CacheError(f"cannot read cache {path}: {exc}") from None
    values = parse(text)
    check_structure(values)
    spot_check(values, rng)
    try:
        cache.preload_bernoulli(values)
    except ValueError as exc:
        raise CacheError(str(exc)) from None
    return len(values)
