"""Bernoulli and Euler data, harmonic numbers and binomial polynomials.

Every value is memoized in a process-wide :class:`SequenceCache`.  Entries are
appended in index order under a lock and never change afterwards, so readers
can share a populated cache freely.
"""

from __future__ import annotations

import threading
from fractions import Fraction
from functools import lru_cache

from .exact import binomial, factorial, is_p_integral, is_prime, padic_valuation, primes_upto
from .poly import UniPoly


class SequenceCache:
    """Append-only memo tables for the sequences used by the identity checks."""

    def __init__(self) -> None:
        self._lock = threading.RLock()
        self.bernoulli: list[Fraction] = [Fraction(1)]
        self.harmonic1: list[Fraction] = [Fraction(0)]
        self.harmonic2: list[Fraction] = [Fraction(0)]
        self.bernoulli_polys: dict[int, UniPoly] = {}
        self.euler_polys: dict[int, UniPoly] = {}
        self.reflected: dict[tuple[str, int], UniPoly] = {}

    def clear(self) -> None:
        with self._lock:
            self.__init__()

    def bernoulli_number(self, n: int) -> Fraction:
        if n < 0:
            raise ValueError(f"Bernoulli index must be >= 0, got {n}")
        B = self.bernoulli
        if n < len(B):
            return B[n]
        with self._lock:
            # sum_{k=0}^{m} C(m+1, k) B_k = 0 for m >= 1.
            while len(B) <= n:
                m = len(B)
                acc = Fraction(0)
                for k in range(m):
                    if B[k]:
                        acc += binomial(m + 1, k) * B[k]
                B.append(-acc / (m + 1))
        return B[n]

    def bernoulli_numbers(self, count: int) -> list[Fraction]:
        if count > 0:
            self.bernoulli_number(count - 1)
        return self.bernoulli[:count]

    def preload_bernoulli(self, values: list[Fraction]) -> None:
        """Install externally loaded values; must agree with anything already cached."""
        with self._lock:
            known = self.bernoulli
            overlap = min(len(known), len(values))
            if known[:overlap] != list(values[:overlap]):
                raise ValueError("preloaded Bernoulli numbers disagree with cached values")
            if len(values) > len(known):
                known.extend(values[len(known):])

    def harmonic(self, n: int, order: int = 1) -> Fraction:
        if n < 0:
            raise ValueError(f"harmonic index must be >= 0, got {n}")
        if order not in (1, 2):
            raise ValueError(f"harmonic order must be 1 or 2, got {order}")
        table = self.harmonic1 if order == 1 else self.harmonic2
        if n >= len(table):
            with self._lock:
                while len(table) <= n:
                    k = len(table)
                    table.append(table[-1] + Fraction(1, k**order))
        return table[n]

    def bernoulli_poly(self, n: int, var: str = "x") -> UniPoly:
        if n < 0:
            raise ValueError(f"Bernoulli polynomial index must be >= 0, got {n}")
        p = self.bernoulli_polys.get(n)
        if p is None:
            # B_n(x) = sum_k C(n, k) B_k x^{n-k}
            coeffs = [binomial(n, k) * self.bernoulli_number(k) for k in range(n, -1, -1)]
            p = UniPoly(coeffs, "x")
            with self._lock:
                p = self.bernoulli_polys.setdefault(n, p)
        return p if var == "x" else UniPoly(p.coeffs, var)

    def euler_poly(self, n: int, var: str = "x") -> UniPoly:
        if n < 0:
            raise ValueError(f"Euler polynomial index must be >= 0, got {n}")
        p = self.euler_polys.get(n)
        if p is None:
            # E_n is the unique polynomial with E_n(x+1) + E_n(x) = 2 x^n.
            p = UniPoly.monomial(n, 2, "x").solve_signed_sum()
            with self._lock:
                p = self.euler_polys.setdefault(n, p)
        return p if var == "x" else UniPoly(p.coeffs, var)

    def reflected_poly(self, kind: str, n: int) -> UniPoly:
        """``B_n(-x)`` (kind ``"B"``) or ``E_n(-x)`` (kind ``"E"``)."""
        key = (kind, n)
        p = self.reflected.get(key)
        if p is None:
            base = {"B": self.bernoulli_poly, "E": self.euler_poly}[kind](n)
            p = base.substitute_linear(-1, 0)
            with self._lock:
                p = self.reflected.setdefault(key, p)
        return p


CACHE = SequenceCache()


def bernoulli_number(n: int) -> Fraction:
    return CACHE.bernoulli_number(n)


def harmonic(n: int, order: int = 1) -> Fraction:
    return CACHE.harmonic(n, order)


def bernoulli_poly(n: int, var: str = "x") -> UniPoly:
    return CACHE.bernoulli_poly(n, var)


def euler_poly(n: int, var: str = "x") -> UniPoly:
    return CACHE.euler_poly(n, var)


def appell_poly(kind: str, n: int) -> UniPoly:
    return {"B": bernoulli_poly, "E": euler_poly}[kind](n)


def reflected_poly(kind: str, n: int) -> UniPoly:
    return CACHE.reflected_poly(kind, n)


@lru_cache(maxsize=4096)
def binom_poly(k: int, shift: int = 0, var: str = "y") -> UniPoly:
    """``C(var + shift, k)`` as a degree-k polynomial in ``var``.

    Built as the integer falling factorial ``prod_{i<k} (var + shift - i)`` and
    divided by k! once at the end.
    """
    if k < 0:
        raise ValueError(f"binomial polynomial degree must be >= 0, got {k}")
    coeffs = [1]
    for i in range(k):
        c = shift - i
        nxt = [0] * (len(coeffs) + 1)
        for j, a in enumerate(coeffs):
            nxt[j] += c * a
            nxt[j + 1] += a
        coeffs = nxt
    kf = factorial(k)
    return UniPoly([Fraction(a, kf) for a in coeffs], var)


def bernoulli_explicit(n: int) -> Fraction:
    """B_n from the closed double sum, independent of the recurrence.

    B_n = sum_{m=0}^{n} 1/(m+1) sum_{j=0}^{m} (-1)^j C(m, j) j^n, with 0^0 = 1.
    """
    total = Fraction(0)
    for m in range(n + 1):
        inner = sum((-1) ** j * binomial(m, j) * j**n for j in range(m + 1))
        total += Fraction(inner, m + 1)
    return total


def verify_paper_recurrence(n: int) -> bool:
    """(-1)^n B_n == sum_{r=0}^{n} C(n, r) B_r."""
    if n < 0:
        raise ValueError(f"n must be >= 0, got {n}")
    lhs = (-1) ** n * bernoulli_number(n)
    rhs = sum((binomial(n, r) * bernoulli_number(r) for r in range(n + 1)), Fraction(0))
    return lhs == rhs


def vsc_primes(k: int) -> list[int]:
    """Primes p with (p - 1) dividing 2k."""
    return [p for p in primes_upto(2 * k + 1) if (2 * k) % (p - 1) == 0]


def vsc_check(k: int) -> bool:
    """B_{2k} + sum of 1/p over primes with (p-1) | 2k is an integer."""
    if k < 1:
        raise ValueError(f"k must be >= 1, got {k}")
    total = bernoulli_number(2 * k) + sum(Fraction(1, p) for p in vsc_primes(k))
    return total.denominator == 1


def wolstenholme_check(p: int) -> bool:
    """v_p(H_{p-1}) >= 2 and v_p(H^{(2)}_{p-1}) >= 1."""
    if p < 5 or not is_prime(p):
        raise ValueError(f"Wolstenholme check needs a prime p >= 5, got {p}")
    return (
        padic_valuation(harmonic(p - 1, 1), p) >= 2
        and padic_valuation(harmonic(p - 1, 2), p) >= 1
    )


__all__ = [
    "CACHE",
    "SequenceCache",
    "appell_poly",
    "bernoulli_explicit",
    "bernoulli_number",
    "bernoulli_poly",
    "binom_poly",
    "euler_poly",
    "harmonic",
    "is_p_integral",
    "reflected_poly",
    "verify_paper_recurrence",
    "vsc_check",
    "vsc_primes",
    "wolstenholme_check",
]
