"""Exit criteria.  Every comparison is exact (tolerance zero).

Each test records one PASS/FAIL line, printed in the terminal summary.
"""

import contextlib
import json
import os
import random
import subprocess
import sys
import time
from fractions import Fraction

import pytest

from bernoulli_check import identities as I
from bernoulli_check.exact import primes_upto
from bernoulli_check.poly import UniPoly
from bernoulli_check.sequences import (
    CACHE,
    bernoulli_number,
    bernoulli_poly,
    euler_poly,
    reflected_poly,
    verify_paper_recurrence,
    vsc_check,
    wolstenholme_check,
)
from bernoulli_check.series import bernoulli_egf, bernoulli_poly_egf, euler_poly_egf
from conftest import ACCEPTANCE_RESULTS

@contextlib.contextmanager
def criterion(key, detail):
    try:
        yield
    except BaseException as exc:
        ACCEPTANCE_RESULTS[key] = (False, f"{detail} -- {type(exc).__name__}: {exc}"[:300])
        raise
    ACCEPTANCE_RESULTS[key] = (True, detail)


def all_equal(reports):
    bad = [r for r in reports if not r.equal]
    assert not bad, f"{len(bad)} mismatches, first {bad[0]}"
    return len(reports)


def test_criterion_01_main_identity():
    CACHE.clear()
    I._suffix_sums.cache_clear()
    with criterion("1 eq1", "verify_eq1 exact for n in [1, 200] in < 30 s; n=2 gives 3/4 = 3/4"):
        start = time.perf_counter()
        count = all_equal([I.verify_eq1(n) for n in range(1, 201)])
        elapsed = time.perf_counter() - start
        assert count == 200
        assert elapsed < 30, f"took {elapsed:.1f} s"
        r = I.verify_eq1(2)
        assert (r.lhs, r.rhs) == ("3/4", "3/4")


def test_criterion_02_restatement_and_induction():
    with criterion("2 restated/eq2/eq3/rewrites",
                   "eq1_restated, eq2, eq3 for n <= 200; rewrite_H, rewrite_L for n <= 100, 1 <= r <= n"):
        for fn in (I.verify_eq1_restated, I.verify_eq2, I.verify_eq3):
            assert all_equal([fn(n) for n in range(1, 201)]) == 200
        pairs = [(n, r) for n in range(2, 101) for r in range(1, n + 1)]
        all_equal([I.verify_rewrite_H(n, r) for n, r in pairs])
        all_equal([I.verify_rewrite_L(n, r) for n, r in pairs])


def test_criterion_03_lemma_and_helpers():
    with criterion("3 lemma4/eq5/eq6",
                   "lemma4, eq5 as exact BiPoly identities for n <= 40; eq6 for n <= 30, d <= 3"):
        all_equal([I.verify_lemma4(n) for n in range(1, 41)])
        all_equal([I.verify_eq5(n) for n in range(1, 41)])
        all_equal([I.verify_eq6(n, d) for n in range(0, 31) for d in range(4)])
        # d/dy of the lemma at y = -1 reproduces both sides of eq7
        all_equal([I.lemma4_y_derivative(n) for n in range(1, 31)])


def test_criterion_04_master_identities():
    with criterion("4 eq7/eq8",
                   "eq7, eq8 exact UniPoly identities for n <= 60; x=0 slice of eq7 reconciles with eq3"):
        all_equal([I.verify_eq7(n) for n in range(1, 61)])
        all_equal([I.verify_eq8(n) for n in range(1, 61)])
        all_equal([I.reconcile_eq7_with_eq3(n) for n in range(1, 61)])


def test_criterion_05_derivative_facts_and_ratio():
    with criterion("5 derivative facts/ratio",
                   "derivative facts for n <= 100 and 1 <= r <= n; ratio for n <= 100, 1 <= r <= n-1"):
        all_equal([I.verify_derivative_facts(n, r) for n in range(1, 101) for r in range(1, n + 1)])
        all_equal([I.verify_ratio_identity(n, r) for n in range(2, 101) for r in range(1, n)])


def test_criterion_06_recurrence():
    with criterion("6 recurrence", "(-1)^n B_n = sum C(n,r) B_r for n in [0, 200]"):
        assert all(verify_paper_recurrence(n) for n in range(201))
        all_equal([I.verify_recurrence(n) for n in range(201)])


def test_criterion_07_oracle_equivalence():
    with criterion("7 egf oracle",
                   "EGF oracle equals B_n for n <= 100 and B_n(x), E_n(x) for n <= 30"):
        assert bernoulli_egf(100).egf_values() == [bernoulli_number(n) for n in range(101)]
        assert bernoulli_poly_egf(30).egf_values() == [bernoulli_poly(n) for n in range(31)]
        assert euler_poly_egf(30).egf_values() == [euler_poly(n) for n in range(31)]


def test_criterion_08_number_theory():
    with criterion("8 number theory",
                   "vsc for k <= 50; Wolstenholme and p-integrality of eq1 for primes 5 <= p < 200"):
        assert all(vsc_check(k) for k in range(1, 51))
        primes = [p for p in primes_upto(199) if p >= 5]
        assert len(primes) == 44
        assert all(wolstenholme_check(p) for p in primes)
        all_equal([I.p_integrality_eq1(p) for p in primes])


def _random_poly(rng, var="x"):
    deg = rng.randint(0, 12)
    return UniPoly(
        [Fraction(rng.randint(-1000, 1000), rng.randint(1, 1000)) for _ in range(deg + 1)], var
    )


def test_criterion_09_calculus_properties():
    with criterion("9 calculus properties",
                   "200 random polys (deg <= 12, |num|, den <= 1000): difference/derivative laws"):
        rng = random.Random(20261016)
        for _ in range(200):
            f, g = _random_poly(rng), _random_poly(rng)
            c = Fraction(rng.randint(-1000, 1000), rng.randint(1, 1000))
            assert f.forward_difference().derivative() == f.derivative().forward_difference()
            for other in (g, f + c):
                a = f.forward_difference() == other.forward_difference()
                b = (f - other).degree <= 0
                d = f.derivative() == other.derivative()
                assert a == b == d
            assert f.signed_sum().solve_signed_sum() == f
            assert f.substitute_linear(-1, 1).substitute_linear(-1, 1) == f


def test_criterion_10_sequence_invariants():
    with criterion("10 sequence invariants",
                   "n <= 100: monic degree n, derivative, reflection, difference relations, odd B_n = 0, B_n(0) = B_n"):
        for n in range(101):
            B, E = bernoulli_poly(n), euler_poly(n)
            for P in (B, E):
                assert P.degree == n and P.leading() == 1
                assert P.substitute_linear(-1, 1) == P * (-1) ** n
            B1, E1 = bernoulli_poly(n + 1), euler_poly(n + 1)
            assert B1.derivative() == B * (n + 1)
            assert E1.derivative() == E * (n + 1)
            assert B1.forward_difference() == UniPoly.monomial(n, n + 1)
            assert E.signed_sum() == UniPoly.monomial(n, 2)
            assert B(0) == bernoulli_number(n)
            assert reflected_poly("B", n) == B.substitute_linear(-1, 0)
            if n >= 3 and n % 2:
                assert bernoulli_number(n) == 0


def _cli(*argv, env=None, timeout=300):
    return subprocess.run(
        [sys.executable, "-m", "bernoulli_check", *argv],
        capture_output=True, text=True, env=env, timeout=timeout,
    )


@pytest.mark.slow
def test_criterion_11_cli_contract(tmp_path):
    with criterion("11 cli",
                   "`verify all` exits 0 in < 60 s; perturbed identity exits 1 with witness; cache round trip and tamper"):
        start = time.perf_counter()
        full = _cli("verify", "all")
        elapsed = time.perf_counter() - start
        assert full.returncode == 0, full.stdout[-2000:] + full.stderr
        assert "overall: PASS" in full.stdout
        assert elapsed < 60, f"verify all took {elapsed:.1f} s"

        env = dict(os.environ, **{I.PERTURB_ENV: "eq7"})
        bad = _cli("verify", "eq7", "--n-max", "5", "--format", "json", env=env)
        assert bad.returncode == 1
        failing = [r for r in json.loads(bad.stdout)["reports"] if not r["equal"]]
        assert failing and all(r["witness"] for r in failing)

        path = tmp_path / "b.cache"
        copy = tmp_path / "copy.cache"
        assert _cli("cache", "save", str(path), "--n", "50").returncode == 0
        assert _cli("cache", "load", str(path)).returncode == 0
        assert _cli("bn", "50", "--cache", str(path)).returncode == 0
        from bernoulli_check import cache as cache_io
        from bernoulli_check.sequences import SequenceCache
        fresh = SequenceCache()
        cache_io.load(path, fresh)
        cache_io.save(copy, 51, fresh)
        assert copy.read_bytes() == path.read_bytes()

        lines = path.read_text(encoding="utf-8").splitlines()
        lines[4] = "1/7"  # B_2
        path.write_text("\n".join(lines) + "\n", encoding="utf-8")
        tampered = _cli("cache", "load", str(path))
        assert tampered.returncode == 2 and "B_2" in tampered.stderr
