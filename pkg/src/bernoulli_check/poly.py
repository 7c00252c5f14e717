"""Exact polynomial rings over the rationals.

``UniPoly`` is dense (ascending coefficient tuple) and carries the name of its
indeterminate.  ``BiPoly`` is a sparse map ``(i, j) -> coefficient`` for the
monomial ``x^i * y^j`` over an ordered pair of indeterminate names.

Rendering is in descending order: ``UniPoly`` by degree, ``BiPoly`` by
graded-lex order (total degree first, then the power of the first variable).
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Iterable, Iterator, Mapping, Union

from .exact import binomial

Scalar = Union[int, Fraction]

#: Degree reported for the zero polynomial.
ZERO_DEGREE = -1


def _is_scalar(value: object) -> bool:
    return isinstance(value, (int, Fraction)) and not isinstance(value, bool)


def _term(coeff: Fraction, powers: str, first: bool) -> str:
    neg = coeff < 0
    mag = -coeff if neg else coeff
    if not powers:
        body = str(mag)
    elif mag == 1:
        body = powers
    else:
        body = f"{mag}*{powers}"
    if first:
        return f"-{body}" if neg else body
    return f" - {body}" if neg else f" + {body}"


def _power(var: str, k: int) -> str:
    if k == 0:
        return ""
    return var if k == 1 else f"{var}^{k}"


class UniPoly:
    """Dense univariate polynomial with exact rational coefficients."""

    __slots__ = ("coeffs", "var", "_scaled")

    def __init__(self, coeffs: Iterable[Scalar] = (), var: str = "x"):
        cs = [Fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs: tuple[Fraction, ...] = tuple(cs)
        self.var = var
        self._scaled = None

    @classmethod
    def _raw(cls, coeffs: list[Fraction], var: str) -> "UniPoly":
        # Trusted fast path: coeffs are already Fractions.
        while coeffs and coeffs[-1] == 0:
            coeffs.pop()
        obj = cls.__new__(cls)
        obj.coeffs = tuple(coeffs)
        obj.var = var
        obj._scaled = None
        return obj

    @classmethod
    def constant(cls, c: Scalar, var: str = "x") -> "UniPoly":
        return cls((c,), var)

    @classmethod
    def monomial(cls, k: int, c: Scalar = 1, var: str = "x") -> "UniPoly":
        return cls([0] * k + [c], var)

    @classmethod
    def identity(cls, var: str = "x") -> "UniPoly":
        return cls((0, 1), var)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, k: int) -> Fraction:
        if 0 <= k < len(self.coeffs):
            return self.coeffs[k]
        return Fraction(0)

    def leading(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    # ring structure

    def _coerce(self, other: object) -> "UniPoly | None":
        if isinstance(other, UniPoly):
            if other.var != self.var:
                raise ValueError(
                    f"mismatched indeterminates {self.var!r} and {other.var!r}"
                )
            return other
        if _is_scalar(other):
            return UniPoly((other,), self.var)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        a, b = self.coeffs, o.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for i, c in enumerate(b):
            out[i] += c
        return UniPoly._raw(out, self.var)

    __radd__ = __add__

    def __neg__(self) -> "UniPoly":
        return UniPoly._raw([-c for c in self.coeffs], self.var)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        if _is_scalar(other):
            c = Fraction(other)
            return UniPoly._raw([c * a for a in self.coeffs], self.var)
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not self.coeffs or not o.coeffs:
            return UniPoly((), self.var)
        out = [Fraction(0)] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(o.coeffs):
                    out[i + j] += a * b
        return UniPoly._raw(out, self.var)

    __rmul__ = __mul__

    def __truediv__(self, other):
        if not _is_scalar(other):
            return NotImplemented
        if other == 0:
            raise ZeroDivisionError("polynomial divided by zero")
        c = 1 / Fraction(other)
        return UniPoly._raw([c * a for a in self.coeffs], self.var)

    def __pow__(self, k: int) -> "UniPoly":
        if k < 0:
            raise ValueError("negative power")
        result = UniPoly((1,), self.var)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __divmod__(self, other: "UniPoly") -> tuple["UniPoly", "UniPoly"]:
        o = self._coerce(other)
        if o is None or o.is_zero():
            raise ZeroDivisionError("division by the zero polynomial")
        rem = list(self.coeffs)
        dq = o.degree
        lead = o.leading()
        if len(rem) <= dq:
            return UniPoly((), self.var), self
        quot = [Fraction(0)] * (len(rem) - dq)
        for k in range(len(rem) - 1, dq - 1, -1):
            c = rem[k] / lead
            quot[k - dq] = c
            if c:
                for i, b in enumerate(o.coeffs):
                    rem[k - dq + i] -= c * b
        return UniPoly._raw(quot, self.var), UniPoly._raw(rem[:dq], self.var)

    def exact_div(self, other: "UniPoly") -> "UniPoly":
        q, r = divmod(self, other)
        if not r.is_zero():
            raise ArithmeticError(f"{other} does not divide {self}: remainder {r}")
        return q

    def __eq__(self, other: object) -> bool:
        if isinstance(other, UniPoly):
            return self.var == other.var and self.coeffs == other.coeffs
        if _is_scalar(other):
            return self.coeffs == UniPoly((other,), self.var).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.var, self.coeffs))

    # evaluation and calculus

    def _integer_form(self) -> tuple[list[int], int]:
        # (numerators, common denominator); cached since polys are immutable.
        if self._scaled is None:
            den = 1
            for c in self.coeffs:
                den = den * c.denominator // math.gcd(den, c.denominator)
            self._scaled = ([c.numerator * (den // c.denominator) for c in self.coeffs], den)
        return self._scaled

    def __call__(self, value):
        """Horner evaluation at a scalar (or at another ``UniPoly``).

        Scalar points are evaluated in integers over a common denominator,
        which avoids a gcd per step.
        """
        if not _is_scalar(value):
            acc = UniPoly((), value.var)
            for c in reversed(self.coeffs):
                acc = acc * value + c
            return acc
        nums, den = self._integer_form()
        value = Fraction(value)
        p, q = value.numerator, value.denominator
        acc, qpow = 0, 1
        for a in reversed(nums):
            acc = acc * p + a * qpow
            qpow *= q
        # acc = q^deg * sum a_k value^k; qpow overshoots by one factor of q.
        return Fraction(acc * q, den * qpow) if nums else Fraction(0)

    def derivative(self) -> "UniPoly":
        return UniPoly._raw(
            [k * c for k, c in enumerate(self.coeffs) if k], self.var
        )

    def shift(self, c: Scalar) -> "UniPoly":
        """``f(var + c)`` by repeated synthetic division (Taylor shift)."""
        c = Fraction(c)
        a = list(self.coeffs)
        if c == 0 or len(a) < 2:
            return UniPoly._raw(a, self.var)
        n = len(a) - 1
        for i in range(n):
            for j in range(n - 1, i - 1, -1):
                a[j] += c * a[j + 1]
        return UniPoly._raw(a, self.var)

    def substitute_linear(self, a: Scalar, b: Scalar) -> "UniPoly":
        """``f(a*var + b)``."""
        shifted = self.shift(b).coeffs
        a = Fraction(a)
        out, scale = [], Fraction(1)
        for c in shifted:
            out.append(c * scale)
            scale *= a
        return UniPoly._raw(out, self.var)

    def forward_difference(self) -> "UniPoly":
        return self.shift(1) - self

    def signed_sum(self) -> "UniPoly":
        return self.shift(1) + self

    def anti_difference(self) -> "UniPoly":
        """The F with zero constant term and ``F(var+1) - F(var) == self``.

        The coefficient map of the difference operator is strictly upper
        triangular: the coefficient of ``var^m`` in the image of F is
        ``sum_{k>m} C(k, m) F_k``.  Solve it from the top degree down.
        """
        g = self.coeffs
        d = len(g) - 1
        if d < 0:
            return UniPoly((), self.var)
        F = [Fraction(0)] * (d + 2)
        for m in range(d, -1, -1):
            acc = g[m]
            for k in range(m + 2, d + 2):
                acc -= binomial(k, m) * F[k]
            F[m + 1] = acc / (m + 1)
        return UniPoly._raw(F, self.var)

    def solve_signed_sum(self) -> "UniPoly":
        """The unique F with ``F(var+1) + F(var) == self``.

        Same triangular structure as :meth:`anti_difference`, but with 2 on
        the diagonal, so the inverse always exists.
        """
        g = self.coeffs
        d = len(g) - 1
        F = [Fraction(0)] * (d + 1)
        for m in range(d, -1, -1):
            acc = g[m]
            for k in range(m + 1, d + 1):
                acc -= binomial(k, m) * F[k]
            F[m] = acc / 2
        return UniPoly._raw(F, self.var)

    def __repr__(self) -> str:
        return f"UniPoly({self}, var={self.var!r})"

    def __str__(self) -> str:
        terms = [
            (k, c) for k, c in reversed(list(enumerate(self.coeffs))) if c
        ]
        if not terms:
            return "0"
        return "".join(
            _term(c, _power(self.var, k), i == 0) for i, (k, c) in enumerate(terms)
        )


def graded_lex_key(monomial: tuple[int, int]) -> tuple[int, int]:
    i, j = monomial
    return (i + j, i)


class BiPoly:
    """Sparse polynomial in two indeterminates; no zero coefficients stored."""

    __slots__ = ("terms", "vars")

    def __init__(
        self,
        terms: Mapping[tuple[int, int], Scalar] | None = None,
        vars: tuple[str, str] = ("x", "y"),
    ):
        self.terms: dict[tuple[int, int], Fraction] = {
            m: Fraction(c) for m, c in (terms or {}).items() if c
        }
        self.vars = tuple(vars)

    @classmethod
    def _raw(cls, terms: dict, vars: tuple[str, str]) -> "BiPoly":
        obj = cls.__new__(cls)
        obj.terms = {m: c for m, c in terms.items() if c}
        obj.vars = vars
        return obj

    @classmethod
    def from_uni(cls, f: UniPoly, vars: tuple[str, str] = ("x", "y")) -> "BiPoly":
        if f.var == vars[0]:
            return cls._raw({(k, 0): c for k, c in enumerate(f.coeffs)}, vars)
        if f.var == vars[1]:
            return cls._raw({(0, k): c for k, c in enumerate(f.coeffs)}, vars)
        raise ValueError(f"indeterminate {f.var!r} not in {vars}")

    @classmethod
    def outer(
        cls, fx: UniPoly, gy: UniPoly, scale: Scalar = 1,
        vars: tuple[str, str] = ("x", "y"),
    ) -> "BiPoly":
        """``scale * fx(x) * gy(y)`` for univariate factors in each variable."""
        if fx.var != vars[0] or gy.var != vars[1]:
            raise ValueError(
                f"outer product expects ({vars[0]}, {vars[1]}) factors, "
                f"got ({fx.var}, {gy.var})"
            )
        scale = Fraction(scale)
        out = {}
        for j, b in enumerate(gy.coeffs):
            if b:
                sb = scale * b
                for i, a in enumerate(fx.coeffs):
                    if a:
                        out[(i, j)] = a * sb
        return cls._raw(out, vars)

    def is_zero(self) -> bool:
        return not self.terms

    def degree_in(self, var: str) -> int:
        idx = self._index(var)
        return max((m[idx] for m in self.terms), default=ZERO_DEGREE)

    def _index(self, var: str) -> int:
        try:
            return self.vars.index(var)
        except ValueError:
            raise ValueError(f"unknown variable {var!r}; have {self.vars}") from None

    def _coerce(self, other: object) -> "BiPoly | None":
        if isinstance(other, BiPoly):
            if other.vars != self.vars:
                raise ValueError(f"mismatched indeterminates {self.vars} and {other.vars}")
            return other
        if isinstance(other, UniPoly):
            return BiPoly.from_uni(other, self.vars)
        if _is_scalar(other):
            return BiPoly._raw({(0, 0): Fraction(other)}, self.vars)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out = dict(self.terms)
        for m, c in o.terms.items():
            out[m] = out.get(m, 0) + c
        return BiPoly._raw(out, self.vars)

    __radd__ = __add__

    def __neg__(self) -> "BiPoly":
        return BiPoly._raw({m: -c for m, c in self.terms.items()}, self.vars)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        if _is_scalar(other):
            c = Fraction(other)
            return BiPoly._raw({m: c * v for m, v in self.terms.items()}, self.vars)
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        out: dict[tuple[int, int], Fraction] = {}
        for (i1, j1), a in self.terms.items():
            for (i2, j2), b in o.terms.items():
                m = (i1 + i2, j1 + j2)
                out[m] = out.get(m, 0) + a * b
        return BiPoly._raw(out, self.vars)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "BiPoly":
        if k < 0:
            raise ValueError("negative power")
        result = BiPoly._raw({(0, 0): Fraction(1)}, self.vars)
        for _ in range(k):
            result = result * self
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, BiPoly):
            return self.vars == other.vars and self.terms == other.terms
        if isinstance(other, UniPoly) or _is_scalar(other):
            try:
                return self == self._coerce(other)
            except ValueError:
                return False
        return NotImplemented

    def __hash__(self) -> int:
        return hash((self.vars, frozenset(self.terms.items())))

    def derivative(self, var: str) -> "BiPoly":
        idx = self._index(var)
        out = {}
        for m, c in self.terms.items():
            k = m[idx]
            if k:
                nm = (m[0] - 1, m[1]) if idx == 0 else (m[0], m[1] - 1)
                out[nm] = k * c
        return BiPoly._raw(out, self.vars)

    def eval(self, assignment: Mapping[str, Scalar]):
        """Evaluate at some or all variables.

        Fixing one variable gives a ``UniPoly`` in the other; fixing both gives
        a ``Fraction``.
        """
        unknown = set(assignment) - set(self.vars)
        if unknown:
            raise ValueError(f"unknown variables {sorted(unknown)}")
        if not assignment:
            return self
        if len(assignment) == 2:
            vx = Fraction(assignment[self.vars[0]])
            vy = Fraction(assignment[self.vars[1]])
            return sum(
                (c * vx**i * vy**j for (i, j), c in self.terms.items()), Fraction(0)
            )
        (var, value), = assignment.items()
        idx = self._index(var)
        value = Fraction(value)
        keep = 1 - idx
        out: dict[int, Fraction] = {}
        for m, c in self.terms.items():
            out[m[keep]] = out.get(m[keep], 0) + c * value ** m[idx]
        width = max(out, default=-1) + 1
        return UniPoly([out.get(k, 0) for k in range(width)], self.vars[keep])

    def monomials(self) -> list[tuple[int, int]]:
        """Stored monomials in descending graded-lex order."""
        return sorted(self.terms, key=graded_lex_key, reverse=True)

    def __iter__(self) -> Iterator[tuple[tuple[int, int], Fraction]]:
        for m in self.monomials():
            yield m, self.terms[m]

    def __repr__(self) -> str:
        return f"BiPoly({self}, vars={self.vars!r})"

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for idx, ((i, j), c) in enumerate(self):
            powers = "*".join(
                p for p in (_power(self.vars[0], i), _power(self.vars[1], j)) if p
            )
            parts.append(_term(c, powers, idx == 0))
        return "".join(parts)


Poly = Union[UniPoly, BiPoly]


def _check_var(f: Poly, var: str) -> None:
    names = (f.var,) if isinstance(f, UniPoly) else f.vars
    if var not in names:
        raise ValueError(f"unknown variable {var!r}; have {names}")


def derivative(f: Poly, var: str) -> Poly:
    _check_var(f, var)
    return f.derivative() if isinstance(f, UniPoly) else f.derivative(var)


def substitute_linear(f: UniPoly, a: Scalar, b: Scalar) -> UniPoly:
    return f.substitute_linear(a, b)


def forward_difference(f: UniPoly, var: str) -> UniPoly:
    _check_var(f, var)
    return f.forward_difference()


def signed_sum(f: UniPoly, var: str) -> UniPoly:
    _check_var(f, var)
    return f.signed_sum()


def anti_difference(g: UniPoly, var: str) -> UniPoly:
    _check_var(g, var)
    return g.anti_difference()


def solve_signed_sum(g: UniPoly, var: str) -> UniPoly:
    _check_var(g, var)
    return g.solve_signed_sum()


def evaluate(f: Poly, assignment: Mapping[str, Scalar]):
    if isinstance(f, UniPoly):
        if set(assignment) != {f.var}:
            raise ValueError(f"assignment must fix exactly {f.var!r}")
        return f(Fraction(assignment[f.var]))
    return f.eval(assignment)


def first_difference(lhs: Poly, rhs: Poly) -> str | None:
    """Describe the first monomial where two polynomials disagree, or None.

    Monomials are scanned in the same descending order used for rendering.
    """
    if isinstance(lhs, UniPoly) and isinstance(rhs, UniPoly):
        if lhs.var != rhs.var:
            return f"indeterminates differ: {lhs.var} vs {rhs.var}"
        for k in range(max(len(lhs.coeffs), len(rhs.coeffs)) - 1, -1, -1):
            a, b = lhs.coeff(k), rhs.coeff(k)
            if a != b:
                return f"coefficient of {_power(lhs.var, k) or '1'}: {a} != {b}"
        return None
    lhs = lhs if isinstance(lhs, BiPoly) else BiPoly.from_uni(lhs)
    rhs = rhs if isinstance(rhs, BiPoly) else BiPoly.from_uni(rhs, lhs.vars)
    for m in sorted(set(lhs.terms) | set(rhs.terms), key=graded_lex_key, reverse=True):
        a, b = lhs.terms.get(m, Fraction(0)), rhs.terms.get(m, Fraction(0))
        if a != b:
            name = "*".join(
                p for p in (_power(lhs.vars[0], m[0]), _power(lhs.vars[1], m[1])) if p
            ) or "1"
            return f"coefficient of {name}: {a} != {b}"
    return None
