"""Connected components of a union of closed log-intervals, done multiplicatively.

With L = {ln s : s in S} and t = ln(lam), the interval [ln s, ln s + t] is
the log image of [s, lam*s]. Two consecutive intervals meet exactly when
lam * s_i >= s_{i+1}, so no logarithm is ever taken.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import List, Tuple

from .numerics import PositiveSet, RationalLike, check_lambda, midpoint, singular_values


@dataclass(frozen=True)
class ComponentReport:
    """``spans[i] = (start, end)`` stands for the component [start, lam*end]."""

    lam: Fraction
    spans: Tuple[Tuple[Fraction, Fraction], ...]

    @property
    def count(self) -> int:
        return len(self.spans)

    def log_spans(self) -> List[Tuple[float, float]]:
        """Approximate endpoints of the components in log coordinates."""
        return [(math.log(a), math.log(self.lam * b)) for a, b in self.spans]


def components(S: PositiveSet, lam: RationalLike) -> ComponentReport:
    lam = check_lambda(lam)
    spans = []
    elems = S.elements
    if elems:
        start = elems[0]
        for prev, nxt in zip(elems, elems[1:]):
            if lam * prev < nxt:
                spans.append((start, prev))
                start = nxt
        spans.append((start, elems[-1]))
    return ComponentReport(lam, tuple(spans))


def components_graph_oracle(S: PositiveSet, lam: RationalLike) -> int:
    """Component count of the overlap graph of the intervals [s, lam*s]."""
    import networkx as nx

    lam = check_lambda(lam)
    elems = S.elements
    g = nx.Graph()
    g.add_nodes_from(range(len(elems)))
    scaled = [lam * x for x in elems]
    g.add_edges_from(
        (i, j)
        for i in range(len(elems))
        for j in range(i + 1, len(elems))
        if max(elems[i], elems[j]) <= min(scaled[i], scaled[j])
    )
    return nx.number_connected_components(g)


@dataclass(frozen=True)
class StepFunctionReport:
    """Piecewise-constant description of lam -> components(S, lam).count.

    ``initial`` holds on (1, breakpoints[0]); ``values[i]`` is the count at
    ``breakpoints[i]`` and, by right continuity, on the half-open interval up
    to the next breakpoint. ``below[i]`` and ``above[i]`` are the counts at
    exact midpoints just left and right of ``breakpoints[i]``.
    """

    initial: int
    breakpoints: Tuple[Fraction, ...]
    values: Tuple[int, ...]
    below: Tuple[int, ...]
    above: Tuple[int, ...]

    def value_at(self, lam: RationalLike) -> int:
        lam = check_lambda(lam)
        current = self.initial
        for bp, v in zip(self.breakpoints, self.values):
            if bp > lam:
                break
            current = v
        return current

    def is_right_continuous(self) -> bool:
        return self.values == self.above

    def jumps(self) -> List[Tuple[Fraction, int, int]]:
        """Breakpoints where the count actually changes: (lam, left, right)."""
        return [(bp, lo, v) for bp, lo, v in zip(self.breakpoints, self.below, self.values) if lo != v]


def _probe_points(S: PositiveSet) -> Tuple[Tuple[Fraction, ...], List[Fraction], List[Fraction]]:
    """Breakpoints plus one exact probe strictly below and above each one."""
    bps = singular_values(S).elements
    lefts = [Fraction(1)] + list(bps)
    rights = list(bps[1:]) + ([bps[-1] + 1] if bps else [])
    below = [midpoint(lo, bp) for lo, bp in zip(lefts, bps)]
    above = [midpoint(bp, hi) for bp, hi in zip(bps, rights)]
    return bps, below, above


def step_function(S: PositiveSet) -> StepFunctionReport:
    if not S.elements:
        raise ValueError("step function needs a nonempty set")
    bps, below, above = _probe_points(S)

    def count(lam: Fraction) -> int:
        return components(S, lam).count

    initial = count(below[0]) if bps else count(Fraction(2))
    return StepFunctionReport(
        initial=initial,
        breakpoints=bps,
        values=tuple(count(bp) for bp in bps),
        below=tuple(count(x) for x in below),
        above=tuple(count(x) for x in above),
    )
