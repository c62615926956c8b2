"""Exact rational scalars and finite sets of positive rationals.

Everything downstream compares ``lam * s`` against ``s'`` exactly, so no
floating point value ever enters this module. Scalars are plain
:class:`fractions.Fraction` instances.
"""

from __future__ import annotations

import enum
import functools
import math
import re
from bisect import bisect_right
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, List, Optional, Tuple, Union

Rational = Fraction
RationalLike = Union[int, Fraction, str]

_RATIONAL_RE = re.compile(r"-?[0-9]+(/[1-9][0-9]*)?|-?[0-9]+\.[0-9]+")


def make_rational(numerator: int, denominator: int = 1) -> Fraction:
    if denominator == 0:
        raise ZeroDivisionError("denominator must be non-zero")
    return Fraction(numerator, denominator)


def parse_rational(text: str) -> Fraction:
    """Parse ``p``, ``p/q`` or a finite decimal such as ``2.001`` exactly.

    >>> parse_rational("2.001")
    Fraction(2001, 1000)
    >>> parse_rational("-3/6")
    Fraction(-1, 2)
    """
    text = text.strip()
    if not _RATIONAL_RE.fullmatch(text):
        raise ValueError(f"not a rational literal: {text!r}")
    return Fraction(text)


def format_rational(x: Fraction) -> str:
    """Canonical text form: ``p/q`` in lowest terms, or ``p`` when q == 1."""
    return str(Fraction(x))


def as_rational(x: RationalLike) -> Fraction:
    if isinstance(x, str):
        return parse_rational(x)
    if isinstance(x, (int, Fraction)):
        return Fraction(x)
    raise TypeError(f"expected an int, Fraction or rational literal, got {type(x).__name__}")


@dataclass(frozen=True)
class PositiveSet:
    """Finite, strictly increasing tuple of positive rationals.

    Duplicates are merged at construction; non-positive members are rejected.
    """

    elements: Tuple[Fraction, ...] = ()

    def __post_init__(self) -> None:
        elems = sorted({x if type(x) is Fraction else as_rational(x) for x in self.elements})
        if elems and elems[0] <= 0:
            raise ValueError(f"set members must be positive, got {elems[0]}")
        object.__setattr__(self, "elements", tuple(elems))

    @classmethod
    def of(cls, *values: RationalLike) -> "PositiveSet":
        return cls(tuple(as_rational(v) for v in values))

    @classmethod
    def parse(cls, text: str) -> "PositiveSet":
        """Build a set from a comma separated list such as ``"1,2,5/2"``."""
        parts = [p for p in (s.strip() for s in text.split(",")) if p]
        return cls(tuple(parse_rational(p) for p in parts))

    def __iter__(self) -> Iterator[Fraction]:
        return iter(self.elements)

    def __len__(self) -> int:
        return len(self.elements)

    def __contains__(self, x: object) -> bool:
        return x in self.elements

    def __getitem__(self, i: int) -> Fraction:
        return self.elements[i]

    def __str__(self) -> str:
        return "{" + ", ".join(format_rational(x) for x in self.elements) + "}"


class Tag(enum.Enum):
    S_ONLY = "a"
    LAMBDA_ONLY = "b"
    BOTH = "c"


def check_lambda(lam: Fraction) -> Fraction:
    lam = as_rational(lam)
    if lam <= 1:
        raise ValueError(f"lambda must exceed 1, got {format_rational(lam)}")
    return lam


def scale_set(S: PositiveSet, lam: RationalLike) -> PositiveSet:
    lam = as_rational(lam)
    if lam <= 0:
        raise ValueError(f"scale factor must be positive, got {format_rational(lam)}")
    return PositiveSet(tuple(lam * s for s in S))


def integer_keys(S: PositiveSet, lam: Fraction) -> Tuple[int, List[int], List[int]]:
    """Clear denominators so that S and lam*S become two sorted integer lists.

    Returns ``(D, keys_S, keys_lamS)`` where ``keys_S[i] == S[i] * D`` and
    ``keys_lamS[i] == lam * S[i] * D``. Comparing ints is far cheaper than
    comparing Fractions, and the sweeps over divisor sets lean on this.
    """
    q = lam.denominator
    D = q * math.lcm(*(s.denominator for s in S)) if S.elements else q
    keys = [s.numerator * (D // s.denominator) for s in S]
    p = lam.numerator
    return D, keys, [p * (k // q) for k in keys]


def tag_sequence(S: PositiveSet, lam: RationalLike) -> List[Tuple[int, Tag]]:
    """Merge S and lam*S as integer keys (see :func:`integer_keys`)."""
    lam = check_lambda(lam)
    _, ks, kl = integer_keys(S, lam)
    out: List[Tuple[int, Tag]] = []
    i = j = 0
    while i < len(ks) or j < len(kl):
        if j == len(kl) or (i < len(ks) and ks[i] < kl[j]):
            out.append((ks[i], Tag.S_ONLY))
            i += 1
        elif i == len(ks) or kl[j] < ks[i]:
            out.append((kl[j], Tag.LAMBDA_ONLY))
            j += 1
        else:
            out.append((ks[i], Tag.BOTH))
            i += 1
            j += 1
    return out


def tagged_merge(S: PositiveSet, lam: RationalLike) -> List[Tuple[Fraction, Tag]]:
    """Sorted values of S ∪ lam*S, each tagged by which side it belongs to."""
    lam = check_lambda(lam)
    D, _, _ = integer_keys(S, lam)
    return [(Fraction(k, D), tag) for k, tag in tag_sequence(S, lam)]


@functools.lru_cache(maxsize=1024)
def singular_values(S: PositiveSet) -> PositiveSet:
    """All quotients s'/s > 1 with s, s' in S, i.e. the lambdas for which
    S and lambda*S intersect."""
    elems = S.elements
    return PositiveSet(tuple(elems[j] / elems[i] for i in range(len(elems)) for j in range(i + 1, len(elems))))


def next_singular_above(S: PositiveSet, lam: RationalLike) -> Optional[Fraction]:
    lam = check_lambda(lam)
    sing = singular_values(S).elements
    k = bisect_right(sing, lam)
    return sing[k] if k < len(sing) else None


def midpoint(x: Fraction, y: Fraction) -> Fraction:
    return (x + y) / 2
