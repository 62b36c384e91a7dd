"""Independent oracles shared across the test suite.

Everything here deliberately avoids the library's own computation paths:
Bernoulli numbers come from the full recurrence over all indices, divisor
sums from exhaustive enumeration, determinants from Leibniz expansion, and
the discriminant cusp form from the unit-normalized series combination.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import permutations
from math import comb

from eisbasis import QSeries, eisenstein


def bernoulli_table(n: int) -> list[Fraction]:
    """B_0..B_n (all indices, B_1 = -1/2) by solving the defining recurrence
    sum_{j=0}^{m} C(m+1, j) B_j = 0 for B_m, one index at a time."""
    table = [Fraction(1)]
    for m in range(1, n + 1):
        acc = sum(comb(m + 1, j) * table[j] for j in range(m))
        table.append(Fraction(-acc, m + 1))
    return table


def brute_sigma(r: int, m: int) -> int:
    return sum(d**r for d in range(1, m + 1) if m % d == 0)


def delta_series(precision: int) -> QSeries:
    """The discriminant cusp form from the unit-constant-term combination
    ((240 G_4)^3 - (-504 G_6)^2) / 1728; coefficients are the tau values."""
    e4 = 240 * eisenstein(4, precision)
    e6 = -504 * eisenstein(6, precision)
    return (e4**3 - e6**2) / 1728


def det_leibniz(rows: list[list[Fraction]]) -> Fraction:
    """Determinant by signed permutation expansion; fine for n <= 5."""
    n = len(rows)
    total = Fraction(0)
    for perm in permutations(range(n)):
        inversions = sum(
            1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j]
        )
        term = Fraction(1) if inversions % 2 == 0 else Fraction(-1)
        for i in range(n):
            term *= rows[i][perm[i]]
        total += term
    return total


# Ramanujan tau values tau(1)..tau(20), frozen from the delta_series
# construction above (a_0 = 0 precedes them).
TAU = [
    1, -24, 252, -1472, 4830, -6048, -16744, 84480, -113643, -115920,
    534612, -370944, -577738, 401856, 1217160, 987136, -6905934, 2727432,
    10661420, -7109760,
]
