"""Truncated formal power series in ``t``.

A ``Series`` holds coefficients ``c_0 .. c_N`` for a fixed truncation order N.
Coefficients are either all rationals or all ``UniPoly`` in one indeterminate;
the generating functions for Bernoulli and Euler polynomials live in the
second ring.  Arithmetic between series of different orders or rings is an
error rather than a silent truncation or coercion.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence, Union

from .exact import factorial
from .poly import UniPoly

Coeff = Union[Fraction, UniPoly]

RATIONAL = "Q"


class SeriesError(ArithmeticError):
    pass


def _ring_of(c: Coeff | int) -> str:
    return c.var if isinstance(c, UniPoly) else RATIONAL


class Series:
    __slots__ = ("order", "ring", "coeffs")

    def __init__(self, coeffs: Sequence[Coeff | int], order: int, ring: str | None = None):
        if order < 0:
            raise ValueError("truncation order must be >= 0")
        if len(coeffs) > order + 1:
            raise ValueError(f"{len(coeffs)} coefficients exceed order {order}")
        if ring is None:
            polys = {c.var for c in coeffs if isinstance(c, UniPoly)}
            if len(polys) > 1:
                raise SeriesError(f"coefficients over several rings: {sorted(polys)}")
            ring = polys.pop() if polys else RATIONAL
        self.order = order
        self.ring = ring
        padded = list(coeffs) + [0] * (order + 1 - len(coeffs))
        self.coeffs: tuple[Coeff, ...] = tuple(self._to_ring(c) for c in padded)

    def _to_ring(self, c) -> Coeff:
        if self.ring == RATIONAL:
            if isinstance(c, UniPoly):
                raise SeriesError("polynomial coefficient in a rational series")
            return Fraction(c)
        if isinstance(c, UniPoly):
            if c.var != self.ring:
                raise SeriesError(f"coefficient in {c.var!r}, series over {self.ring!r}")
            return c
        return UniPoly.constant(c, self.ring)

    def __len__(self) -> int:
        return self.order + 1

    def __getitem__(self, k: int) -> Coeff:
        return self.coeffs[k]

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Series):
            return NotImplemented
        return (self.order, self.ring, self.coeffs) == (other.order, other.ring, other.coeffs)

    def __repr__(self) -> str:
        body = ", ".join(str(c) for c in self.coeffs)
        return f"Series([{body}], order={self.order}, ring={self.ring!r})"

    def lift(self, var: str) -> "Series":
        """Reinterpret a rational series as one over polynomials in ``var``."""
        if self.ring == var:
            return self
        if self.ring != RATIONAL:
            raise SeriesError(f"cannot lift a series over {self.ring!r}")
        return Series(self.coeffs, self.order, var)

    def _check(self, other: "Series") -> None:
        if not isinstance(other, Series):
            raise TypeError(f"expected Series, got {type(other).__name__}")
        if other.order != self.order:
            raise SeriesError(f"truncation orders differ: {self.order} vs {other.order}")
        if other.ring != self.ring:
            raise SeriesError(f"coefficient rings differ: {self.ring!r} vs {other.ring!r}")

    def __add__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        self._check(other)
        return Series([a + b for a, b in zip(self.coeffs, other.coeffs)], self.order, self.ring)

    def __neg__(self) -> "Series":
        return Series([-c for c in self.coeffs], self.order, self.ring)

    def __sub__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        return self + (-other)

    def scale(self, c: Coeff | int) -> "Series":
        return Series([c * a for a in self.coeffs], self.order, self.ring)

    def __mul__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        self._check(other)
        a, b = self.coeffs, other.coeffs
        out = []
        for k in range(self.order + 1):
            acc = a[0] * b[k]
            for i in range(1, k + 1):
                acc = acc + a[i] * b[k - i]
            out.append(acc)
        return Series(out, self.order, self.ring)

    def __truediv__(self, other):
        if not isinstance(other, Series):
            return NotImplemented
        self._check(other)
        b0 = other.coeffs[0]
        if isinstance(b0, UniPoly):
            if b0.degree != 0:
                raise SeriesError(f"constant term {b0} is not invertible")
            inv = 1 / b0.coeffs[0]
        else:
            if b0 == 0:
                raise SeriesError("division by a series with zero constant term")
            inv = 1 / b0
        a, b = self.coeffs, other.coeffs
        out: list[Coeff] = []
        for k in range(self.order + 1):
            acc = a[k]
            for i in range(1, k + 1):
                acc = acc - b[i] * out[k - i]
            out.append(acc * inv)
        return Series(out, self.order, self.ring)

    def egf_values(self) -> list[Coeff]:
        """``k! * c_k`` for every k: the sequence this series generates."""
        return [factorial(k) * c for k, c in enumerate(self.coeffs)]


def series_arith(a: Series, b: Series, op: str) -> Series:
    if op == "add":
        return a + b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown series operation {op!r}")


def one(order: int, ring: str = RATIONAL) -> Series:
    return Series([1], order, ring)


def exp_series(scale: Coeff | int, order: int) -> Series:
    """``exp(scale * t)`` truncated at ``t^order``."""
    if isinstance(scale, UniPoly):
        power, ring = UniPoly.constant(1, scale.var), scale.var
    else:
        power, ring, scale = Fraction(1), RATIONAL, Fraction(scale)
    out = []
    for k in range(order + 1):
        out.append(power / factorial(k))
        power = power * scale
    return Series(out, order, ring)


def exp_minus_one_over_t(order: int) -> Series:
    # (e^t - 1)/t written out directly: coefficients 1/(k+1)!.
    return Series([Fraction(1, factorial(k + 1)) for k in range(order + 1)], order)


def bernoulli_egf(order: int) -> Series:
    """``t / (e^t - 1)``; coefficient n is B_n / n!."""
    return one(order) / exp_minus_one_over_t(order)


def bernoulli_poly_egf(order: int, var: str = "x") -> Series:
    """``t e^{xt} / (e^t - 1)``; coefficient n is B_n(x) / n!."""
    return exp_series(UniPoly.identity(var), order) * bernoulli_egf(order).lift(var)


def euler_poly_egf(order: int, var: str = "x") -> Series:
    """``2 e^{xt} / (e^t + 1)``; coefficient n is E_n(x) / n!."""
    numerator = exp_series(UniPoly.identity(var), order).scale(2)
    denominator = (exp_series(1, order) + one(order)).lift(var)
    return numerator / denominator
