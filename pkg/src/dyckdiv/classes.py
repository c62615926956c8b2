"""The lambda-class word of a finite set and its three-letter refinement.

``lambda_class(S, lam)`` reads the symmetric difference of S and lam*S in
increasing order, writing ``a`` for members of S and ``b`` for members of
lam*S. ``hooley_class(S, lam)`` reads the whole union instead and writes
``c`` for the values lying in both sets.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .numerics import PositiveSet, RationalLike, Tag, check_lambda, integer_keys, tag_sequence
from .words import alpha, gamma


def lambda_class(S: PositiveSet, lam: RationalLike) -> str:
    lam = check_lambda(lam)
    _, ks, kl = integer_keys(S, lam)
    own, scaled = set(ks), set(kl)
    # symmetric difference built directly, independently of tag_sequence
    letters = {k: "a" for k in own - scaled}
    letters.update({k: "b" for k in scaled - own})
    return "".join(letters[k] for k in sorted(letters))


def hooley_class(S: PositiveSet, lam: RationalLike) -> str:
    return "".join(tag.value for _, tag in tag_sequence(S, lam))


def is_regular(S: PositiveSet, lam: RationalLike) -> bool:
    """True when S and lam*S are disjoint."""
    return all(tag is not Tag.BOTH for _, tag in tag_sequence(S, lam))


def right_limit_class(S: PositiveSet, lam: RationalLike) -> str:
    """The lambda-class for every lam' slightly larger than lam.

    Computed symbolically: each shared value splits into an ``a`` followed
    immediately by a ``b`` once lam*S is nudged to the right.
    """
    return alpha(hooley_class(S, lam))


@dataclass(frozen=True)
class ClassWordBundle:
    set: PositiveSet
    lam: Fraction
    class_word: str
    hooley_word: str
    regular: bool

    @classmethod
    def build(cls, S: PositiveSet, lam: RationalLike) -> "ClassWordBundle":
        lam = check_lambda(lam)
        hw = hooley_class(S, lam)
        cw = lambda_class(S, lam)
        if gamma(hw) != cw:
            raise AssertionError(f"gamma(hooley word) != class word for S={S}, lambda={lam}")
        return cls(set=S, lam=lam, class_word=cw, hooley_word=hw, regular="c" not in hw)

    @property
    def right_limit_word(self) -> str:
        return alpha(self.hooley_word)
