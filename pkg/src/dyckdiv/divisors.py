"""Divisor sets of integers, the generalized Hooley Delta and dense divisibility.

Dense divisibility is decided three ways that share no code beyond
:func:`divisor_list`: the consecutive-ratio test, a direct sweep of the
quantified definition over every critical R, and irreducibility of the
lambda-class word.
"""

from __future__ import annotations

import math
from bisect import bisect_left, bisect_right
from dataclasses import dataclass
from fractions import Fraction
from typing import List

from .classes import lambda_class
from .numerics import PositiveSet, RationalLike, check_lambda
from .words import height, omega


def _check_n(n: int) -> int:
    if not isinstance(n, int) or isinstance(n, bool):
        raise TypeError(f"n must be an int, got {type(n).__name__}")
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    return n


def divisor_list(n: int) -> List[int]:
    """Sorted divisors of ``n`` by trial division up to sqrt(n)."""
    _check_n(n)
    small, large = [], []
    for d in range(1, math.isqrt(n) + 1):
        if n % d == 0:
            small.append(d)
            if d != n // d:
                large.append(n // d)
    return small + large[::-1]


@dataclass(frozen=True)
class DivisorProfile:
    n: int
    divisors: PositiveSet


def divisors(n: int) -> DivisorProfile:
    return DivisorProfile(n, PositiveSet(tuple(Fraction(d) for d in divisor_list(n))))


def class_word_of_int(n: int, lam: RationalLike) -> str:
    return lambda_class(divisors(n).divisors, lam)


def delta(n: int, lam: RationalLike) -> int:
    """Hooley's Delta_lambda(n), read off as the height of the class word."""
    return height(class_word_of_int(n, lam))


def delta_bruteforce(n: int, lam: RationalLike) -> int:
    """Max over R of #{d | n : R/lam < d <= R}, evaluated at R in divisors(n).

    The window is open on the left and closed on the right, so sliding R up
    to the next divisor never loses a member; the maximum over real R is
    therefore attained with R equal to a divisor.
    """
    lam = check_lambda(lam)
    divs = divisor_list(n)
    best = 0
    for R in divs:
        lo = R / lam
        best = max(best, sum(1 for d in divs if lo < d <= R))
    return best


def delta_grid_oracle(n: int, lam: RationalLike, per_unit: int = 4) -> int:
    """Delta_lambda(n) maximized over a dense set of R values.

    Samples a uniform grid of step ``1/per_unit`` up to lam*n together with
    every divisor, every lam*divisor and the midpoints between consecutive
    such points. Used only to cross-check the divisor-attainment claim.
    """
    lam = check_lambda(lam)
    divs = [Fraction(d) for d in divisor_list(n)]
    critical = sorted(set(divs) | {lam * d for d in divs})
    candidates = set(critical)
    candidates.update((x + y) / 2 for x, y in zip(critical, critical[1:]))
    top = math.ceil(lam * n * per_unit)
    candidates.update(Fraction(k, per_unit) for k in range(1, top + 1))
    best = 0
    for R in candidates:
        best = max(best, bisect_right(divs, R) - bisect_right(divs, R / lam))
    return best


def is_densely_divisible(n: int, lam: RationalLike) -> bool:
    """Every gap between consecutive divisors has ratio at most lam."""
    lam = check_lambda(lam)
    p, q = lam.numerator, lam.denominator
    divs = divisor_list(n)
    return all(q * hi <= p * lo for lo, hi in zip(divs, divs[1:]))


def is_densely_divisible_sweep(n: int, lam: RationalLike) -> bool:
    """Check "some divisor lies in [R/lam, R]" for every R in [1, n].

    Membership of a divisor in the window only changes at R = d or
    R = lam*d, so testing those points and one point strictly between each
    consecutive pair covers all of [1, n].
    """
    lam = check_lambda(lam)
    divs = [Fraction(d) for d in divisor_list(n)]
    one, top = Fraction(1), Fraction(n)
    critical = {one, top}
    critical.update(x for x in divs)
    critical.update(lam * d for d in divs)
    points = sorted(x for x in critical if one <= x <= top)
    probes = points + [(x + y) / 2 for x, y in zip(points, points[1:])]
    for R in probes:
        k = bisect_left(divs, R / lam)
        if k == len(divs) or divs[k] > R:
            return False
    return True


def is_densely_divisible_via_word(n: int, lam: RationalLike) -> bool:
    return omega(class_word_of_int(n, lam)) == 1
