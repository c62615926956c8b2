"""Cross-check battery behind ``dyckdiv check``.

For every n and lambda this compares each quantity against its independent
counterpart: component count vs omega vs the overlap-graph oracle, the three
dense-divisibility deciders, Delta vs its brute force, and the word-level
identities linking the two- and three-letter class words.
"""

from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, List, Optional, Sequence, Tuple

from .classes import hooley_class, lambda_class
from .divisors import (
    delta_bruteforce,
    divisors,
    is_densely_divisible,
    is_densely_divisible_sweep,
)
from .numerics import PositiveSet, format_rational, midpoint, next_singular_above, singular_values
from .topology import components, components_graph_oracle
from .words import alpha, gamma, height, is_dyck, is_hooley_dyck, omega, theta


@dataclass(frozen=True)
class Failure:
    n: int
    lam: Fraction
    check: str
    detail: str

    def __str__(self) -> str:
        return f"n={self.n} lambda={format_rational(self.lam)}: {self.check} failed ({self.detail})"


def check_set(S: PositiveSet, lam: Fraction) -> List[Tuple[str, bool, str]]:
    """Identities that hold for any finite positive set."""
    cw = lambda_class(S, lam)
    hw = hooley_class(S, lam)
    om = omega(cw)
    comp = components(S, lam).count
    graph = components_graph_oracle(S, lam)
    nxt = next_singular_above(S, lam)
    lam_right = midpoint(lam, nxt if nxt is not None else lam + 1)
    right = alpha(hw)
    results = [
        ("components == omega", comp == om, f"{comp} vs {om}"),
        ("components == graph oracle", comp == graph, f"{comp} vs {graph}"),
        ("class word is Dyck", is_dyck(cw), cw),
        ("hooley word in H", is_hooley_dyck(hw), hw),
        ("gamma(hooley) == class", gamma(hw) == cw, f"{gamma(hw)} vs {cw}"),
    ]
    if is_hooley_dyck(hw):
        th = theta(hw)
        results.append(("theta == omega(gamma)", th == om, f"{th} vs {om}"))
        results.append(("theta == omega(alpha)", th == omega(right), f"{th} vs {omega(right)}"))
    witness = lambda_class(S, lam_right)
    results.append(("right limit == class at midpoint", right == witness, f"{right} vs {witness}"))
    return results


def check_integer(n: int, lam: Fraction) -> List[Tuple[str, bool, str]]:
    S = divisors(n).divisors
    results = check_set(S, lam)
    cw = lambda_class(S, lam)
    verdicts = (
        is_densely_divisible(n, lam),
        is_densely_divisible_sweep(n, lam),
        omega(cw) == 1,
    )
    results.append(("dense deciders agree", len(set(verdicts)) == 1, str(verdicts)))
    d_word, d_brute = height(cw), delta_bruteforce(n, lam)
    results.append(("delta == brute force", d_word == d_brute, f"{d_word} vs {d_brute}"))
    return results


def lambdas_for(n: int, base: Sequence[Fraction]) -> List[Fraction]:
    return sorted(set(base) | set(singular_values(divisors(n).divisors)))


def _run_chunk(args: Tuple[Sequence[int], Sequence[Fraction]]) -> Tuple[int, Optional[Failure]]:
    ns, base = args
    total = 0
    for n in ns:
        for lam in lambdas_for(n, base):
            for name, ok, detail in check_integer(n, lam):
                total += 1
                if not ok:
                    return total, Failure(n, lam, name, detail)
    return total, None


def run_battery(
    n_max: int, base_lambdas: Iterable[Fraction], jobs: int = 1
) -> Tuple[int, Optional[Failure]]:
    """Run every check for 1 <= n <= n_max; returns (checks run, first failure)."""
    base = tuple(base_lambdas)
    if not base or any(lam <= 1 for lam in base):
        raise ValueError("lambda values must all exceed 1")
    ns = list(range(1, n_max + 1))
    if jobs <= 1:
        return _run_chunk((ns, base))
    chunks = [(ns[i::jobs], base) for i in range(jobs)]
    total = 0
    failure = None
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        for count, fail in pool.map(_run_chunk, chunks):
            total += count
            if fail is not None and (failure is None or fail.n < failure.n):
                failure = fail
    return total, failure
