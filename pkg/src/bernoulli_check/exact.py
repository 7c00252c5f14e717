"""Exact scalar arithmetic: rationals, binomials and p-adic valuations.

Python integers are already arbitrary precision, and ``fractions.Fraction``
keeps every value in lowest terms with a positive denominator, so the
rational type used throughout the package is just ``Fraction``.
"""

from __future__ import annotations

import math
import operator
import re
from fractions import Fraction
from functools import lru_cache
from typing import Union

Rational = Fraction
RationalLike = Union[int, Fraction]

_OPS = {
    "add": operator.add,
    "sub": operator.sub,
    "mul": operator.mul,
    "div": operator.truediv,
}

_CANONICAL_RE = re.compile(r"-?(0|[1-9][0-9]*)(/[1-9][0-9]*)?")


class ExactArithmeticError(ArithmeticError):
    """Raised for operations with no exact rational result."""


def rat(value: RationalLike | str, den: int = 1) -> Fraction:
    """Build a normalized rational from an int, Fraction, or ``"num/den"``."""
    if den == 0:
        raise ExactArithmeticError("zero denominator")
    if isinstance(value, str):
        value = parse_rational(value)
    return Fraction(value, den)


def rat_arith(a: RationalLike, b: RationalLike, op: str) -> Fraction:
    try:
        fn = _OPS[op]
    except KeyError:
        raise ValueError(f"unknown operation {op!r}") from None
    a, b = Fraction(a), Fraction(b)
    if op == "div" and b == 0:
        raise ExactArithmeticError("division by zero")
    return fn(a, b)


def to_str(q: RationalLike) -> str:
    """Canonical ``num/den`` form, denominator omitted when it is 1."""
    return str(Fraction(q))


def parse_rational(text: str) -> Fraction:
    """Parse a canonical rational string; anything non-canonical is rejected.

    ``"2/4"``, ``"+1"``, ``"1/1"`` and ``"-0"`` all fail: the cache file relies on
    there being exactly one spelling per value.
    """
    text = text.strip()
    if not _CANONICAL_RE.fullmatch(text):
        raise ValueError(f"not a rational: {text!r}")
    q = Fraction(text)
    if str(q) != text:
        raise ValueError(f"rational not in canonical form: {text!r}")
    return q


def binomial(n: int, k: int) -> int:
    if n < 0:
        raise ValueError(f"binomial requires n >= 0, got {n}")
    if k < 0 or k > n:
        return 0
    return math.comb(n, k)


@lru_cache(maxsize=None)
def factorial(n: int) -> int:
    return math.factorial(n)


def is_prime(p: int) -> bool:
    # Trial division; callers only pass small values.
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    d = 3
    while d * d <= p:
        if p % d == 0:
            return False
        d += 2
    return True


def primes_upto(limit: int) -> list[int]:
    """All primes ``p <= limit`` (sieve of Eratosthenes)."""
    if limit < 2:
        return []
    sieve = bytearray([1]) * (limit + 1)
    sieve[0] = sieve[1] = 0
    for i in range(2, math.isqrt(limit) + 1):
        if sieve[i]:
            sieve[i * i :: i] = bytearray(len(range(i * i, limit + 1, i)))
    return [i for i, flag in enumerate(sieve) if flag]


def _multiplicity(m: int, p: int) -> int:
    k = 0
    while m % p == 0:
        m //= p
        k += 1
    return k


def padic_valuation(q: RationalLike, p: int) -> float | int:
    """v_p(q); ``math.inf`` for q == 0."""
    if not is_prime(p):
        raise ValueError(f"{p} is not prime")
    q = Fraction(q)
    if q == 0:
        return math.inf
    return _multiplicity(abs(q.numerator), p) - _multiplicity(q.denominator, p)


def is_p_integral(q: RationalLike, p: int) -> bool:
    return padic_valuation(q, p) >= 0
