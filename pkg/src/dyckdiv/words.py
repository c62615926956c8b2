"""Words over {a, b} (Dyck side) and {a, b, c} (Hooley-Dyck side).

Words are plain ``str`` objects. Reading ``a`` as +1, ``b`` as -1 and ``c``
as 0 turns a word into a lattice path; membership, height and the
irreducible factorization are all read off the running prefix sum.
Boolean membership queries accept any word over the alphabet; height,
factorization, omega and theta raise :class:`NotInLanguageError` on
non-members.
"""

from __future__ import annotations

from typing import List

DYCK_ALPHABET = frozenset("ab")
HOOLEY_ALPHABET = frozenset("abc")

_STEP = {"a": 1, "b": -1, "c": 0}


class NotInLanguageError(ValueError):
    pass


def check_alphabet(w: str, alphabet: frozenset = HOOLEY_ALPHABET) -> str:
    bad = set(w) - alphabet
    if bad:
        letters = "".join(sorted(alphabet))
        raise ValueError(f"word {w!r} has letters outside {{{letters}}}: {''.join(sorted(bad))}")
    return w


def prefix_heights(w: str) -> List[int]:
    """Heights after each letter, starting with the initial 0."""
    h = 0
    out = [0]
    for ch in w:
        h += _STEP[ch]
        out.append(h)
    return out


def is_dyck(w: str) -> bool:
    check_alphabet(w, DYCK_ALPHABET)
    h = 0
    for ch in w:
        h += 1 if ch == "a" else -1
        if h < 0:
            return False
    return h == 0


def _require_dyck(w: str) -> None:
    if not is_dyck(w):
        raise NotInLanguageError(f"{w!r} is not a Dyck word")


def height(w: str) -> int:
    """Maximum height reached by the Dyck path of ``w``."""
    _require_dyck(w)
    return max(prefix_heights(w))


def _split_at_returns(w: str) -> List[str]:
    factors = []
    start = h = 0
    for i, ch in enumerate(w):
        h += _STEP[ch]
        if h == 0 and ch == "b":
            factors.append(w[start : i + 1])
            start = i + 1
    return factors


def irreducible_factors(w: str) -> List[str]:
    """Unique factorization of a Dyck word into irreducible Dyck words.

    The path returns to height 0 exactly at the factor boundaries.

    >>> irreducible_factors("aabbab")
    ['aabb', 'ab']
    """
    _require_dyck(w)
    return _split_at_returns(w)


def omega(w: str) -> int:
    """Number of irreducible factors of the Dyck word ``w``."""
    return len(irreducible_factors(w))


def is_hooley_dyck(w: str) -> bool:
    """Schröder-path test: never below the axis, ends at 0, and every ``c``
    is a horizontal step taken at height >= 1."""
    check_alphabet(w, HOOLEY_ALPHABET)
    h = 0
    for ch in w:
        if ch == "c":
            if h < 1:
                return False
        else:
            h += 1 if ch == "a" else -1
            if h < 0:
                return False
    return h == 0


def _require_hooley(w: str) -> None:
    if not is_hooley_dyck(w):
        raise NotInLanguageError(f"{w!r} is not a Hooley-Dyck word")


_RULES = (("ab", ""), ("acb", "ab"), ("cc", "c"))


def reduce_hooley(w: str) -> str:
    """Normal form under the rewrites ab -> ε, acb -> ab, cc -> c.

    Each pass applies the rule whose match starts leftmost. All rules shorten
    the word, so the loop runs at most ``len(w)`` times. ``w`` lies in the
    Hooley-Dyck language exactly when the result is empty.
    """
    check_alphabet(w, HOOLEY_ALPHABET)
    while True:
        best = -1
        chosen = None
        for lhs, rhs in _RULES:
            k = w.find(lhs)
            if k != -1 and (best == -1 or k < best):
                best, chosen = k, (lhs, rhs)
        if chosen is None:
            return w
        lhs, rhs = chosen
        w = w[:best] + rhs + w[best + len(lhs) :]


def hooley_irreducible_factors(w: str) -> List[str]:
    _require_hooley(w)
    return _split_at_returns(w)


def theta(w: str) -> int:
    """Number of irreducible Hooley-Dyck factors of ``w``."""
    return len(hooley_irreducible_factors(w))


def gamma(w: str) -> str:
    """Erase every ``c``."""
    check_alphabet(w, HOOLEY_ALPHABET)
    return w.replace("c", "")


def alpha(w: str) -> str:
    """Replace every ``c`` by the block ``ab``."""
    check_alphabet(w, HOOLEY_ALPHABET)
    return w.replace("c", "ab")
