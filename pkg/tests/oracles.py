"""Slow, definition-level reimplementations used only to check the package.

Nothing here imports from dyckdiv; every function follows the textbook
definition as literally as possible.
"""

from fractions import Fraction
from itertools import product


def brute_divisors(n):
    return [d for d in range(1, n + 1) if n % d == 0]


def brute_class_word(S, lam):
    S = {Fraction(s) for s in S}
    lamS = {lam * s for s in S}
    return "".join("a" if x in S else "b" for x in sorted(S ^ lamS))


def brute_hooley_word(S, lam):
    S = {Fraction(s) for s in S}
    lamS = {lam * s for s in S}
    out = []
    for x in sorted(S | lamS):
        if x in S and x in lamS:
            out.append("c")
        elif x in S:
            out.append("a")
        else:
            out.append("b")
    return "".join(out)


def brute_is_dyck(w):
    return all(w[:k].count("a") >= w[:k].count("b") for k in range(len(w) + 1)) and w.count("a") == w.count("b")


def brute_factors(w):
    """Repeatedly peel off the shortest nonempty prefix that is a Dyck word."""
    out = []
    while w:
        k = next(k for k in range(1, len(w) + 1) if brute_is_dyck(w[:k]))
        out.append(w[:k])
        w = w[k:]
    return out


def brute_components(S, lam):
    """Union-find over the closed intervals [s, lam*s]."""
    S = sorted(Fraction(s) for s in S)
    parent = list(range(len(S)))

    def find(i):
        while parent[i] != i:
            i = parent[i]
        return i

    for i, j in product(range(len(S)), repeat=2):
        lo = max(S[i], S[j])
        hi = min(lam * S[i], lam * S[j])
        if lo <= hi:
            parent[find(i)] = find(j)
    return len({find(i) for i in range(len(S))})


def brute_dense(n, lam, grid=24):
    """The quantified definition over R in a fine rational grid plus all
    divisors and lam*divisors."""
    divs = brute_divisors(n)
    Rs = {Fraction(k, grid) for k in range(grid, n * grid + 1)}
    Rs |= {Fraction(d) for d in divs} | {lam * d for d in divs if lam * d <= n}
    return all(any(R / lam <= d <= R for d in divs) for R in Rs)
