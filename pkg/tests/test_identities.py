from fractions import Fraction

import pytest

from bernoulli_check import identities as I
from bernoulli_check.identities import IdentityId
from bernoulli_check.poly import BiPoly, UniPoly
from bernoulli_check.sequences import bernoulli_explicit, bernoulli_poly, binom_poly, euler_poly
from oracles import binom_at

F = Fraction
x = UniPoly.identity("x")
y = UniPoly.identity("y")


def naive_H(n, k=1):
    return sum((F(1, j**k) for j in range(1, n + 1)), F(0))


def C(n, k):
    return binom_at(n, k) if 0 <= k <= n else F(0)


def test_eq1_examples():
    r1 = I.verify_eq1(1)
    assert (r1.lhs, r1.rhs, r1.equal) == ("0", "0", True)
    r2 = I.verify_eq1(2)
    assert (r2.lhs, r2.rhs, r2.equal) == ("3/4", "3/4", True)
    r10 = I.verify_eq1(10)
    assert r10.equal and r10.lhs == "11574649/63504000"


def test_eq1_rejects_bad_n():
    with pytest.raises(ValueError):
        I.verify_eq1(0)


def test_eq1_naive_evaluation_agrees():
    # Direct double sum with explicit-formula Bernoulli numbers.
    for n in range(1, 14):
        lhs = F(0)
        for r in range(1, n):
            inner = sum((F((-1) ** l) * C(n, l) * naive_H(l - 1) for l in range(r, n + 1)), F(0))
            lhs += F((-1) ** r) * bernoulli_explicit(r) / r * (inner / n + F(1, r * (n - r)))
        assert lhs == I.eq1_lhs(n)
        assert lhs == naive_H(n - 1, 2) / n + naive_H(n - 1) / n**2


def test_eq1_summation_order_independent():
    for n in range(1, 40):
        assert I.eq1_lhs(n) == I.eq1_lhs(n, reverse=True)


def test_eq1_restated_examples():
    assert I.verify_eq1_restated(1).equal
    r2 = I.verify_eq1_restated(2)
    assert r2.lhs == r2.rhs == "3/2"
    r25 = I.verify_eq1_restated(25)
    assert r25.equal and r25.lhs == "1437616210472386291/819079054269315840"
    for n in range(1, 30):
        assert F(I.verify_eq1_restated(n).lhs) == n * F(I.verify_eq1(n).lhs)


def test_rewrites():
    r = I.verify_rewrite_H(3, 1)
    assert r.lhs == r.rhs == "3/2"
    r = I.verify_rewrite_H(4, 2)
    assert r.equal and r.lhs == "11/6"
    for n in range(2, 12):
        r = I.verify_rewrite_H(n, n)
        assert r.equal and F(r.lhs) == (-1) ** n * naive_H(n - 1)
        r = I.verify_rewrite_L(n, n)
        assert r.equal and F(r.lhs) == F((-1) ** n, n)
    r = I.verify_rewrite_L(3, 2)
    assert r.lhs == r.rhs == "7/6"
    r = I.verify_rewrite_L(5, 1)
    assert r.equal and r.lhs == "-137/60"
    with pytest.raises(ValueError):
        I.verify_rewrite_H(3, 4)
    with pytest.raises(ValueError):
        I.verify_rewrite_L(3, 0)


def test_eq2_eq3_examples():
    for n in (1, 2, 12):
        assert I.verify_eq2(n).equal
    assert I.verify_eq2(12).lhs == "59119211/75675600"
    r = I.verify_eq3(2)
    assert r.lhs == r.rhs == "-1/4"
    assert I.verify_eq3(1).lhs == I.verify_eq3(1).rhs == "0"
    r = I.verify_eq3(20)
    assert r.equal and r.lhs == "682457838342881/358500542400"


def test_lemma4_examples():
    r1 = I.verify_lemma4(1)
    expected = BiPoly.outer(bernoulli_poly(2), y, F(1, 2))
    assert r1.equal and r1.lhs == str(expected)
    for n in (2, 3):
        lhs, rhs = I.lemma4_lhs(n), I.lemma4_rhs(n)
        assert lhs == rhs and lhs.degree_in("y") == n
    assert str(I.lemma4_lhs(2)) == (
        "-1/6*x^3*y^2 + 1/6*x^3*y + 1/4*x^2*y^2 + 1/4*x^2*y - 1/12*x*y^2 - 5/12*x*y + 1/12*y"
    )
    assert I.verify_lemma4(5).equal


def test_lemma_tail_is_polynomial():
    for n in range(1, 12):
        q = I.lemma_tail(n)
        assert q * (y + 1) == binom_poly(n + 1, n)
        for t in (F(2), F(-3, 2), F(5, 7)):
            assert q(t) == binom_at(t + n, n + 1) / (t + 1)


def test_eq5_examples():
    assert I.verify_eq5(1).equal
    assert I.verify_eq5(4).equal
    for n in range(1, 8):
        assert I.eq5_lhs(n).eval({"x": 1}) == I.lemma_tail(n)


def test_eq6_examples():
    lhs, rhs = I.eq6_sides(2, 0)
    assert lhs.eval({"x": 1}) == rhs.eval({"x": 1}) == binom_poly(2, 2)
    r = I.verify_eq6(0, 0)
    assert r.lhs == r.rhs == "1"
    r = I.verify_eq6(3, 1)
    assert r.equal
    assert r.lhs.startswith("1/24*x^3*y^4 - 1/4*x^3*y^3")


def test_derivative_facts_examples():
    r = I.verify_derivative_facts(5, 3)
    assert r.equal and r.lhs.split(", ")[0] == "[-3/2"
    r = I.verify_derivative_facts(2, 1)
    assert r.equal and r.lhs.split(", ")[1] == "0"
    r = I.verify_derivative_facts(3, 1)
    assert r.equal and r.lhs.split(", ")[2] == "-1/6]"
    # r = n: the third fact is out of range and omitted
    assert I.verify_derivative_facts(3, 3).lhs.count(",") == 1


def test_derivative_fact3_by_finite_differences():
    # d/dy C(y+n-r, n) at y=-1 from the full polynomial, not the shifted slope.
    for n in range(2, 9):
        for r in range(1, n):
            p = binom_poly(n, n - r).derivative()
            assert p(-1) == F((-1) ** r, n * int(C(n - 1, r)))


def test_ratio_examples():
    r = I.verify_ratio_identity(5, 2)
    assert r.lhs == r.rhs == "1/12"
    for n in range(2, 10):
        assert I.verify_ratio_identity(n, 1).rhs == str(F(1, n * (n - 1)))
    assert I.verify_ratio_identity(7, 4).equal
    with pytest.raises(ValueError):
        I.verify_ratio_identity(5, 5)


def test_eq7_examples():
    r = I.verify_eq7(1)
    assert r.equal and r.lhs == str(bernoulli_poly(2) / 2)
    r = I.verify_eq7(2)
    assert r.equal and r.lhs == "1/2*x^3 - 1/4*x^2 - 1/4*x + 1/12"
    for n in range(1, 15):
        assert I.reconcile_eq7_with_eq3(n).equal


def test_eq8_examples():
    r = I.verify_eq8(1)
    assert r.equal and r.lhs == str(euler_poly(2) / 2)
    r = I.verify_eq8(2)
    assert r.equal and r.lhs == "1/2*x^3 - 1/4*x^2 - 1/2*x + 1/8"
    r = I.verify_eq8(10)
    assert r.equal and r.lhs.startswith("671/2520*x^11 + 3407/3150*x^10")


def test_lemma_derivative_gives_eq7():
    for n in range(1, 8):
        assert I.lemma4_y_derivative(n).equal


def test_p_integrality():
    for p, value in ((5, "53/144"), (7, "947/3600"), (13, "21322289/153679680")):
        r = I.p_integrality_eq1(p)
        assert r.equal and r.lhs == "[true, true]"
        assert str(I.eq1_lhs(p)) == value
    with pytest.raises(ValueError):
        I.p_integrality_eq1(9)


def test_recurrence_report():
    assert all(I.verify_recurrence(n).equal for n in range(12))


def test_perturbation_produces_witness():
    with I.perturbed(IdentityId.EQ7, IdentityId.EQ1, IdentityId.DERIV_FACTS, IdentityId.P_INTEGRAL_EQ1):
        for r in (I.verify_eq7(3), I.verify_eq1(4), I.verify_derivative_facts(4, 2), I.p_integrality_eq1(5)):
            assert not r.equal
            assert r.witness
    assert I.verify_eq7(3).equal


def test_failed_reports_always_have_witness():
    r = I.make_report(IdentityId.LEMMA4, {"n": 0}, BiPoly.outer(x, y), BiPoly.outer(x, y, 2))
    assert not r.equal and r.witness == "coefficient of x*y: 1 != 2"


def test_grids():
    assert len(list(I.parameter_grid(IdentityId.EQ1, 200))) == 200
    assert list(I.parameter_grid(IdentityId.RATIO, 3)) == [{"n": 2, "r": 1}, {"n": 3, "r": 1}, {"n": 3, "r": 2}]
    assert len(list(I.parameter_grid(IdentityId.EQ6, 2))) == 12
    assert [g["p"] for g in I.parameter_grid(IdentityId.P_INTEGRAL_EQ1, 20)] == [5, 7, 11, 13, 17, 19]


def test_run_suite_small():
    rep = I.run_suite({IdentityId.EQ1}, 1)
    assert rep.passed and len(rep.reports) == 1
    rep = I.run_suite(None, 2)
    assert rep.passed
    assert rep.summary()["identities"].keys() >= {"eq1", "eq6", "eq8"}


def test_run_suite_collects_all_failures():
    with I.perturbed(IdentityId.EQ3):
        rep = I.run_suite([IdentityId.EQ3, IdentityId.EQ2], 5)
    assert not rep.passed
    assert len(rep.failures) == 5 and all(r.id is IdentityId.EQ3 for r in rep.failures)
    assert len(rep.reports) == 10


def test_run_suite_parallel_matches_sequential():
    ids = [IdentityId.EQ7, IdentityId.RATIO, IdentityId.EQ6, IdentityId.EQ1]
    seq = I.run_suite(ids, 8, workers=1)
    par = I.run_suite(ids, 8, workers=3)
    assert [r.to_dict() for r in seq.reports] == [r.to_dict() for r in par.reports]
    assert [r.id for r in seq.reports][:8] == [IdentityId.EQ1] * 8
