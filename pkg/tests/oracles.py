"""Brute-force reference computations kept independent of the package."""

from fractions import Fraction


def pascal_row(n):
    row = [1]
    for _ in range(n):
        row = [a + b for a, b in zip([0] + row, row + [0])]
    return row


def power_sum(n, m):
    """sum_{k=0}^{m-1} k^n with 0^0 = 1."""
    return sum(k**n for k in range(m))


def binom_at(y, k):
    """C(y, k) for rational y by the product formula."""
    out = Fraction(1)
    for i in range(k):
        out *= Fraction(y - i) / (i + 1)
    return out


def trial_factor(m):
    m, out, d = abs(m), {}, 2
    while d * d <= m:
        while m % d == 0:
            out[d] = out.get(d, 0) + 1
            m //= d
        d += 1
    if m > 1:
        out[m] = out.get(m, 0) + 1
    return out
