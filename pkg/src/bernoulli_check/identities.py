"""Exact checks of the Bernoulli-number identity and its supporting identities.

Each ``verify_*`` function builds the two sides of one displayed identity for
concrete parameters and returns an :class:`IdentityReport`.  The sides are
computed by separate code paths; the only shared machinery is the sequence
cache and the polynomial arithmetic.  Scalar identities compare ``Fraction``
values, the lemma-level ones compare exact ``UniPoly``/``BiPoly`` objects
coefficient by coefficient.

Sums with an empty index range are zero and binomials outside ``0 <= k <= n``
vanish, so every identity is meaningful from n = 1 on.
"""

from __future__ import annotations

import contextlib
import enum
import os
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Any, Callable, Iterable, Iterator, Mapping

from .exact import binomial, is_p_integral, is_prime, padic_valuation, primes_upto, to_str
from .poly import BiPoly, UniPoly, first_difference
from .sequences import (
    appell_poly,
    bernoulli_number,
    binom_poly,
    harmonic,
    reflected_poly,
    verify_paper_recurrence,
)

PERTURB_ENV = "BERNOULLI_CHECK_PERTURB"


class IdentityId(str, enum.Enum):
    EQ1 = "eq1"
    EQ1_RESTATED = "eq1_restated"
    REWRITE_H = "rewrite_h"
    REWRITE_L = "rewrite_l"
    EQ2 = "eq2"
    EQ3 = "eq3"
    LEMMA4 = "lemma4"
    EQ5 = "eq5"
    EQ6 = "eq6"
    DERIV_FACTS = "deriv_facts"
    RATIO = "ratio"
    EQ7 = "eq7"
    EQ8 = "eq8"
    PAPER_RECURRENCE = "paper_recurrence"
    P_INTEGRAL_EQ1 = "p_integral_eq1"

    @classmethod
    def parse(cls, text: str) -> "IdentityId":
        try:
            return cls(text.lower())
        except ValueError:
            try:
                return cls[text.upper()]
            except KeyError:
                raise ValueError(f"unknown identity id {text!r}") from None


_ORDER = {ident: i for i, ident in enumerate(IdentityId)}

#: Largest n checked per identity when no explicit bound is given.
DEFAULT_N_MAX: dict[IdentityId, int] = {
    IdentityId.EQ1: 200,
    IdentityId.EQ1_RESTATED: 200,
    IdentityId.REWRITE_H: 200,
    IdentityId.REWRITE_L: 200,
    IdentityId.EQ2: 200,
    IdentityId.EQ3: 200,
    IdentityId.LEMMA4: 40,
    IdentityId.EQ5: 40,
    IdentityId.EQ6: 30,
    IdentityId.DERIV_FACTS: 200,
    IdentityId.RATIO: 200,
    IdentityId.EQ7: 60,
    IdentityId.EQ8: 60,
    IdentityId.PAPER_RECURRENCE: 200,
    IdentityId.P_INTEGRAL_EQ1: 200,
}
DEFAULT_D_MAX = 3


@dataclass(frozen=True)
class IdentityReport:
    id: IdentityId
    params: dict[str, Any]
    lhs: str
    rhs: str
    equal: bool
    witness: str | None = None

    def sort_key(self) -> tuple:
        p = self.params
        return (_ORDER[self.id],) + tuple(
            p.get(k, -1) if isinstance(p.get(k, -1), int) else -1
            for k in ("n", "p", "r", "d")
        )

    def to_dict(self) -> dict[str, Any]:
        return {
            "id": self.id.value,
            "params": dict(self.params),
            "lhs": self.lhs,
            "rhs": self.rhs,
            "equal": self.equal,
            "witness": self.witness,
        }


@dataclass
class SuiteReport:
    reports: list[IdentityReport] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.equal for r in self.reports)

    @property
    def failures(self) -> list[IdentityReport]:
        return [r for r in self.reports if not r.equal]

    def summary(self) -> dict[str, Any]:
        per_id: dict[str, dict[str, int]] = {}
        for r in self.reports:
            entry = per_id.setdefault(r.id.value, {"checked": 0, "failed": 0})
            entry["checked"] += 1
            entry["failed"] += not r.equal
        return {
            "passed": self.passed,
            "checked": len(self.reports),
            "failed": len(self.failures),
            "identities": per_id,
        }

    def to_dict(self) -> dict[str, Any]:
        return {
            "reports": [r.to_dict() for r in self.reports],
            "summary": self.summary(),
        }


# report construction

_perturbed: set[IdentityId] = set()


@contextlib.contextmanager
def perturbed(*ids: IdentityId) -> Iterator[None]:
    """Test hook: corrupt one coefficient of the right side of ``ids``."""
    added = set(ids) - _perturbed
    _perturbed.update(added)
    try:
        yield
    finally:
        _perturbed.difference_update(added)


def _is_perturbed(ident: IdentityId) -> bool:
    if ident in _perturbed:
        return True
    env = os.environ.get(PERTURB_ENV, "")
    return any(ident is IdentityId.parse(t) for t in env.split(",") if t.strip())


def _perturb(value):
    if isinstance(value, tuple):
        return (_perturb(value[0]),) + value[1:]
    if isinstance(value, bool):
        return not value
    return value + 1


def render(value) -> str:
    if isinstance(value, tuple):
        return "[" + ", ".join(render(v) for v in value) + "]"
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (int, Fraction)):
        return to_str(value)
    return str(value)


def _witness(lhs, rhs) -> str | None:
    if isinstance(lhs, tuple):
        for i, (a, b) in enumerate(zip(lhs, rhs)):
            w = _witness(a, b)
            if w:
                return f"component {i}: {w}"
        return None
    if isinstance(lhs, (UniPoly, BiPoly)) or isinstance(rhs, (UniPoly, BiPoly)):
        return first_difference(lhs, rhs)
    if lhs != rhs:
        return f"{render(lhs)} != {render(rhs)}"
    return None


def make_report(ident: IdentityId, params: dict[str, Any], lhs, rhs) -> IdentityReport:
    if _is_perturbed(ident):
        rhs = _perturb(rhs)
    l_str, r_str = render(lhs), render(rhs)
    witness = _witness(lhs, rhs)
    equal = witness is None
    if equal != (l_str == r_str):
        raise AssertionError(f"canonical forms disagree with comparison for {ident}")
    return IdentityReport(ident, params, l_str, r_str, equal, witness)


def _require(cond: bool, message: str) -> None:
    if not cond:
        raise ValueError(message)


def _sign(k: int) -> int:
    return -1 if k % 2 else 1


B = bernoulli_number
H = harmonic


# scalar identities


@lru_cache(maxsize=512)
def _suffix_sums(n: int, kind: str) -> tuple[Fraction, ...]:
    """S[r] = sum_{l=r}^{n} term(l) for 1 <= r <= n + 1 (S[0] unused).

    kind "H": term(l) = (-1)^l C(n, l) H_{l-1}
    kind "L": term(l) = (-1)^l / l * C(n, l)
    """
    out = [Fraction(0)] * (n + 2)
    acc = Fraction(0)
    for l in range(n, 0, -1):
        if kind == "H":
            acc += _sign(l) * binomial(n, l) * H(l - 1)
        else:
            acc += Fraction(_sign(l) * binomial(n, l), l)
        out[l] = acc
    return tuple(out)


def eq1_lhs(n: int, reverse: bool = False) -> Fraction:
    """Left side of the main identity.

    ``reverse=True`` evaluates every sum directly, in descending index order,
    instead of through cached suffix sums.
    """
    total = Fraction(0)
    if not reverse:
        inner = _suffix_sums(n, "H")
        for r in range(1, n):
            bracket = inner[r] / n + Fraction(1, r * (n - r))
            total += _sign(r) * B(r) / r * bracket
        return total
    for r in range(n - 1, 0, -1):
        s = Fraction(0)
        for l in range(n, r - 1, -1):
            s += _sign(l) * binomial(n, l) * H(l - 1)
        total += _sign(r) * B(r) / r * (s / n + Fraction(1, r * (n - r)))
    return total


def eq1_rhs(n: int) -> Fraction:
    return H(n - 1, 2) / n + H(n - 1) / n**2


def verify_eq1(n: int) -> IdentityReport:
    _require(n >= 1, f"eq1 needs n >= 1, got {n}")
    return make_report(IdentityId.EQ1, {"n": n}, eq1_lhs(n), eq1_rhs(n))


def verify_eq1_restated(n: int) -> IdentityReport:
    _require(n >= 1, f"eq1_restated needs n >= 1, got {n}")
    tail = _suffix_sums(n - 1, "L") if n > 1 else ()
    lhs = Fraction(0)
    for r in range(1, n):
        bracket = (
            Fraction(n, r * (n - r))
            - tail[r]
            + _sign(r) * binomial(n - 1, r - 1) * H(r - 1)
        )
        lhs += _sign(r) * B(r) / r * bracket
    rhs = H(n - 1, 2) + H(n - 1) / n
    return make_report(IdentityId.EQ1_RESTATED, {"n": n}, lhs, rhs)


def verify_rewrite_H(n: int, r: int) -> IdentityReport:
    _require(n >= 2 and 1 <= r <= n, f"rewrite_h needs n >= 2, 1 <= r <= n; got n={n}, r={r}")
    lhs = _suffix_sums(n, "H")[r]
    rhs = -_suffix_sums(n - 1, "L")[r] + _sign(r) * binomial(n - 1, r - 1) * H(r - 1)
    return make_report(IdentityId.REWRITE_H, {"n": n, "r": r}, lhs, rhs)


def verify_rewrite_L(n: int, r: int) -> IdentityReport:
    _require(n >= 2 and 1 <= r <= n, f"rewrite_l needs n >= 2, 1 <= r <= n; got n={n}, r={r}")
    lhs = _suffix_sums(n, "L")[r]
    rhs = _suffix_sums(n - 1, "L")[r] + Fraction(_sign(r) * binomial(n - 1, r - 1), n)
    return make_report(IdentityId.REWRITE_L, {"n": n, "r": r}, lhs, rhs)


def _harmonic_bernoulli_sum(n: int) -> Fraction:
    # sum_{r=1}^{n-1} B_r / r * C(n-1, r-2) * H_{r-1}
    return sum(
        (B(r) / r * binomial(n - 1, r - 2) * H(r - 1) for r in range(1, n)),
        Fraction(0),
    )


def _reciprocal_bernoulli_sum(n: int) -> Fraction:
    # sum_{r=1}^{n-1} (-1)^r B_r / (r (n+1-r) (n-r))
    return sum(
        (_sign(r) * B(r) / (r * (n + 1 - r) * (n - r)) for r in range(1, n)),
        Fraction(0),
    )


def verify_eq2(n: int) -> IdentityReport:
    _require(n >= 1, f"eq2 needs n >= 1, got {n}")
    third = sum(
        (B(r) / (r * n) * binomial(n - 1, r - 1) for r in range(1, n + 1)), Fraction(0)
    )
    lhs = _harmonic_bernoulli_sum(n) - _reciprocal_bernoulli_sum(n) - third
    s = _sign(n)
    rhs = (
        Fraction(1, n * n)
        + H(n) / (n + 1)
        - H(n - 1) / n
        - s * B(n) / n**2
        - s * B(n) / n
        - B(n) * H(n - 1)
    )
    return make_report(IdentityId.EQ2, {"n": n}, lhs, rhs)


def eq3_sides(n: int) -> tuple[Fraction, Fraction]:
    lhs = _harmonic_bernoulli_sum(n) - _reciprocal_bernoulli_sum(n)
    rhs = H(n) / (n + 1) - H(n - 1) / n - _sign(n) * B(n) / n - H(n - 1) * B(n)
    return lhs, rhs


def verify_eq3(n: int) -> IdentityReport:
    _require(n >= 1, f"eq3 needs n >= 1, got {n}")
    lhs, rhs = eq3_sides(n)
    return make_report(IdentityId.EQ3, {"n": n}, lhs, rhs)


def verify_ratio_identity(n: int, r: int) -> IdentityReport:
    _require(n >= 2 and 1 <= r <= n - 1, f"ratio needs 1 <= r <= n-1; got n={n}, r={r}")
    lhs = Fraction(binomial(n - 1, r - 1), n * binomial(n - 1, r)) - Fraction(
        binomial(n - 1, r - 2), n * binomial(n - 1, r - 1)
    )
    rhs = Fraction(1, (n - r) * (n - r + 1))
    return make_report(IdentityId.RATIO, {"n": n, "r": r}, lhs, rhs)


def verify_recurrence(n: int) -> IdentityReport:
    """Report form of :func:`sequences.verify_paper_recurrence`."""
    _require(n >= 0, f"paper_recurrence needs n >= 0, got {n}")
    lhs = _sign(n) * B(n)
    rhs = sum((binomial(n, r) * B(r) for r in range(n + 1)), Fraction(0))
    return make_report(IdentityId.PAPER_RECURRENCE, {"n": n}, lhs, rhs)


def p_integrality_eq1(p: int) -> IdentityReport:
    _require(p >= 5 and is_prime(p), f"p_integral_eq1 needs a prime p >= 5, got {p}")
    lhs_value, rhs_value = eq1_lhs(p), eq1_rhs(p)
    lhs = (is_p_integral(lhs_value, p), is_p_integral(rhs_value, p))
    report = make_report(IdentityId.P_INTEGRAL_EQ1, {"p": p}, lhs, (True, True))
    if not report.equal:
        vals = f"v_{p}(lhs) = {padic_valuation(lhs_value, p)}, v_{p}(rhs) = {padic_valuation(rhs_value, p)}"
        report = IdentityReport(report.id, report.params, report.lhs, report.rhs, False,
                                f"{report.witness}; {vals}")
    return report


# polynomial identities

X = UniPoly.identity("x")
Y = UniPoly.identity("y")


@lru_cache(maxsize=256)
def _x_minus_one_pow(k: int) -> UniPoly:
    return UniPoly([binomial(k, i) * _sign(k - i) for i in range(k + 1)], "x")


@lru_cache(maxsize=1024)
def lemma_tail(n: int) -> UniPoly:
    """C(y+n, n+1) / (y+1) as a polynomial in y (the division is exact)."""
    return binom_poly(n + 1, n).exact_div(Y + 1)


def lemma4_lhs(n: int) -> BiPoly:
    out = BiPoly()
    for r in range(2, n + 2):
        scale = Fraction(_sign(r) * binomial(n - 1, r - 2), r)
        out += BiPoly.outer(appell_poly("B", r), binom_poly(r - 1), scale)
    return out


def lemma4_rhs(n: int) -> BiPoly:
    out = BiPoly.from_uni(lemma_tail(n))
    for r in range(1, n + 1):
        x_part = reflected_poly("B", r + 1) / (r + 1) + reflected_poly("B", r) / r
        out += BiPoly.outer(x_part, binom_poly(n, n - r), binomial(n - 1, r - 1))
    return out


def verify_lemma4(n: int) -> IdentityReport:
    _require(n >= 1, f"lemma4 needs n >= 1, got {n}")
    return make_report(IdentityId.LEMMA4, {"n": n}, lemma4_lhs(n), lemma4_rhs(n))


def eq5_lhs(n: int) -> BiPoly:
    out = BiPoly()
    for r in range(2, n + 2):
        scale = Fraction(binomial(n - 1, r - 2), r)
        out += BiPoly.outer(UniPoly.monomial(r, 1, "x"), binom_poly(r - 1), scale)
    return out


def eq5_rhs(n: int) -> BiPoly:
    out = BiPoly.from_uni(lemma_tail(n))
    for r in range(1, n + 1):
        x_part = _x_minus_one_pow(r + 1) / (r + 1) + _x_minus_one_pow(r) / r
        out += BiPoly.outer(x_part, binom_poly(n, n - r), binomial(n - 1, r - 1))
    return out


def verify_eq5(n: int) -> IdentityReport:
    _require(n >= 1, f"eq5 needs n >= 1, got {n}")
    return make_report(IdentityId.EQ5, {"n": n}, eq5_lhs(n), eq5_rhs(n))


def eq6_sides(n: int, d: int) -> tuple[BiPoly, BiPoly]:
    lhs = BiPoly()
    for r in range(n + 1):
        lhs += BiPoly.outer(UniPoly.monomial(r, 1, "x"), binom_poly(r + d), binomial(n, r))
    rhs = BiPoly()
    for j in range(n + 1):
        rhs += BiPoly.outer(_x_minus_one_pow(j), binom_poly(n + d, n - j), binomial(n, j))
    return lhs, rhs


def verify_eq6(n: int, d: int) -> IdentityReport:
    _require(n >= 0 and d >= 0, f"eq6 needs n, d >= 0; got n={n}, d={d}")
    lhs, rhs = eq6_sides(n, d)
    return make_report(IdentityId.EQ6, {"n": n, "d": d}, lhs, rhs)


@lru_cache(maxsize=1024)
def _binom_poly_slope(k: int) -> UniPoly:
    return binom_poly(k).derivative()


@lru_cache(maxsize=1024)
def _lemma_tail_slope(n: int) -> UniPoly:
    return lemma_tail(n).derivative()


def verify_derivative_facts(n: int, r: int) -> IdentityReport:
    """The three y-derivatives at y = -1 used to pass from the lemma to the eq7 identity.

    The third fact is included only for 1 <= r <= n - 1.
    """
    _require(n >= 1 and r >= 1, f"deriv_facts needs n, r >= 1; got n={n}, r={r}")
    lhs = [
        _binom_poly_slope(r - 1)(-1),
        _lemma_tail_slope(n)(-1),
    ]
    rhs = [
        _sign(r) * H(r - 1),
        (1 - H(n - 1)) / (n * (n + 1)),
    ]
    if r <= n - 1:
        # d/dy C(y + n - r, n) at y = -1 is the slope of C(y, n) at n - r - 1.
        lhs.append(_binom_poly_slope(n)(n - r - 1))
        rhs.append(Fraction(_sign(r), n * binomial(n - 1, r)))
    return make_report(IdentityId.DERIV_FACTS, {"n": n, "r": r}, tuple(lhs), tuple(rhs))


def master_lhs(n: int, kind: str = "B") -> UniPoly:
    out = UniPoly((), "x")
    for r in range(1, n + 2):
        c = binomial(n - 1, r - 2)
        if c:
            out += appell_poly(kind, r) * (c * H(r - 1) / r)
    return out


def master_rhs(n: int, kind: str = "B") -> UniPoly:
    refl = lambda k: reflected_poly(kind, k)  # noqa: E731
    out = UniPoly((), "x")
    for r in range(1, n):
        out += refl(r) * Fraction(_sign(r), r * (n - r) * (n - r + 1))
    out += refl(n) * Fraction(_sign(n - 1) * (n - 1), n * n)
    out += (refl(n + 1) / (n + 1) + refl(n) / n) * (_sign(n + 1) * H(n))
    out += (1 - H(n - 1)) / (n * (n + 1))
    return out


def verify_eq7(n: int) -> IdentityReport:
    _require(n >= 1, f"eq7 needs n >= 1, got {n}")
    return make_report(IdentityId.EQ7, {"n": n}, master_lhs(n, "B"), master_rhs(n, "B"))


def verify_eq8(n: int) -> IdentityReport:
    _require(n >= 1, f"eq8 needs n >= 1, got {n}")
    return make_report(IdentityId.EQ8, {"n": n}, master_lhs(n, "E"), master_rhs(n, "E"))


def reconcile_eq7_with_eq3(n: int) -> IdentityReport:
    """Set x = 0 in eq7, strip the terms eq3 does not have, compare.

    Moving the r = n, n + 1 terms of the left sum and the first right sum
    across leaves exactly the sides of eq3, once B_{n+1} = 0 for odd
    n + 1 >= 3 is used.  That vanishing is reported as a third component.
    """
    _require(n >= 1, f"needs n >= 1, got {n}")
    lhs0 = master_lhs(n, "B")(Fraction(0))
    rhs0 = master_rhs(n, "B")(Fraction(0))
    moved = (
        bernoulli_number(n) / n * binomial(n - 1, n - 2) * H(n - 1)
        + bernoulli_number(n + 1) / (n + 1) * H(n)
    )
    first_sum = sum(
        (_sign(r) * reflected_poly("B", r)(0) / (r * (n - r) * (n - r + 1)) for r in range(1, n)),
        Fraction(0),
    )
    odd_next = n + 1 >= 3 and (n + 1) % 2 == 1
    lhs = (lhs0 - moved - first_sum, rhs0 - moved - first_sum,
           bernoulli_number(n + 1) if odd_next else Fraction(0))
    e3l, e3r = eq3_sides(n)
    return make_report(IdentityId.EQ7, {"n": n, "slice": "x=0"}, lhs, (e3l, e3r, Fraction(0)))


def lemma4_y_derivative(n: int) -> IdentityReport:
    """d/dy of both sides of the lemma at y = -1 must give both sides of eq7."""
    _require(n >= 1, f"needs n >= 1, got {n}")
    dl = lemma4_lhs(n).derivative("y").eval({"y": -1})
    dr = lemma4_rhs(n).derivative("y").eval({"y": -1})
    return make_report(
        IdentityId.LEMMA4, {"n": n, "d/dy at": "y=-1"},
        (dl, dr), (master_lhs(n, "B"), master_rhs(n, "B")),
    )


# suite

VERIFIERS: dict[IdentityId, Callable[..., IdentityReport]] = {
    IdentityId.EQ1: verify_eq1,
    IdentityId.EQ1_RESTATED: verify_eq1_restated,
    IdentityId.REWRITE_H: verify_rewrite_H,
    IdentityId.REWRITE_L: verify_rewrite_L,
    IdentityId.EQ2: verify_eq2,
    IdentityId.EQ3: verify_eq3,
    IdentityId.LEMMA4: verify_lemma4,
    IdentityId.EQ5: verify_eq5,
    IdentityId.EQ6: verify_eq6,
    IdentityId.DERIV_FACTS: verify_derivative_facts,
    IdentityId.RATIO: verify_ratio_identity,
    IdentityId.EQ7: verify_eq7,
    IdentityId.EQ8: verify_eq8,
    IdentityId.PAPER_RECURRENCE: verify_recurrence,
    IdentityId.P_INTEGRAL_EQ1: p_integrality_eq1,
}


def parameter_grid(ident: IdentityId, n_max: int, d_max: int = DEFAULT_D_MAX) -> Iterator[dict[str, int]]:
    """Every valid parameter set for ``ident`` with n (or p) at most ``n_max``."""
    if ident in (IdentityId.REWRITE_H, IdentityId.REWRITE_L):
        for n in range(2, n_max + 1):
            for r in range(1, n + 1):
                yield {"n": n, "r": r}
    elif ident is IdentityId.RATIO:
        for n in range(2, n_max + 1):
            for r in range(1, n):
                yield {"n": n, "r": r}
    elif ident is IdentityId.DERIV_FACTS:
        for n in range(1, n_max + 1):
            for r in range(1, n + 1):
                yield {"n": n, "r": r}
    elif ident is IdentityId.EQ6:
        for n in range(0, n_max + 1):
            for d in range(0, d_max + 1):
                yield {"n": n, "d": d}
    elif ident is IdentityId.PAPER_RECURRENCE:
        for n in range(0, n_max + 1):
            yield {"n": n}
    elif ident is IdentityId.P_INTEGRAL_EQ1:
        for p in primes_upto(n_max):
            if p >= 5:
                yield {"p": p}
    else:
        for n in range(1, n_max + 1):
            yield {"n": n}


def run_one(ident: IdentityId, params: Mapping[str, int]) -> IdentityReport:
    return VERIFIERS[ident](**params)


def _run_task(task: tuple[IdentityId, dict[str, int]]) -> IdentityReport:
    return run_one(*task)


def run_suite(
    ids: Iterable[IdentityId] | None = None,
    n_max: int | Mapping[IdentityId, int] | None = None,
    *,
    d_max: int = DEFAULT_D_MAX,
    workers: int = 1,
) -> SuiteReport:
    """Run every selected identity over its full grid.

    ``n_max`` may be one bound for all identities or a per-identity mapping;
    missing entries fall back to :data:`DEFAULT_N_MAX`.  Reports come back
    ordered by (identity, n, r, d) however many workers were used.
    """
    selected = sorted(set(ids) if ids is not None else set(IdentityId), key=_ORDER.get)
    tasks = []
    for ident in selected:
        if n_max is None:
            bound = DEFAULT_N_MAX[ident]
        elif isinstance(n_max, Mapping):
            bound = n_max.get(ident, DEFAULT_N_MAX[ident])
        else:
            bound = n_max
        if bound < 1:
            raise ValueError(f"n_max must be >= 1, got {bound}")
        tasks.extend((ident, params) for params in parameter_grid(ident, bound, d_max))

    if workers <= 1 or len(tasks) < 2:
        reports = [_run_task(t) for t in tasks]
    else:
        chunk = max(1, len(tasks) // (workers * 8))
        with ProcessPoolExecutor(max_workers=workers) as pool:
            reports = list(pool.map(_run_task, tasks, chunksize=chunk))
    reports.sort(key=IdentityReport.sort_key)
    return SuiteReport(reports)
