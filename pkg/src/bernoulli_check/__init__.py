"""Exact Bernoulli/Euler arithmetic and mechanical verification of a harmonic-number
identity for Bernoulli numbers, together with the lemmas it rests on."""

from .exact import Rational, binomial, padic_valuation, rat, rat_arith
from .identities import IdentityId, IdentityReport, SuiteReport, run_suite
from .poly import BiPoly, UniPoly
from .sequences import (
    bernoulli_number,
    bernoulli_poly,
    binom_poly,
    euler_poly,
    harmonic,
)
from .series import Series, bernoulli_egf, bernoulli_poly_egf, euler_poly_egf

__version__ = "0.1.0"

__all__ = [
    "BiPoly",
    "IdentityId",
    "IdentityReport",
    "Rational",
    "Series",
    "SuiteReport",
    "UniPoly",
    "bernoulli_egf",
    "bernoulli_number",
    "bernoulli_poly",
    "bernoulli_poly_egf",
    "binom_poly",
    "binomial",
    "euler_poly",
    "euler_poly_egf",
    "harmonic",
    "padic_valuation",
    "rat",
    "rat_arith",
    "run_suite",
]
