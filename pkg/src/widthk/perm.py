"""
Permutations in one-line notation, their symmetries, pattern containment,
and enumeration of symmetric groups and pattern-avoidance classes.

A permutation of [n] = {1, ..., n} is represented as a tuple of its values
a_1, ..., a_n.  The empty tuple is the empty permutation, which is a valid
value (recursions index down to it).  Text form is a bare digit string for
n <= 9 ("4136572") and comma-separated values beyond ("10,3,1,...").
"""
from __future__ import annotations

import itertools
import os
from typing import Iterable, Iterator, Sequence

from .errors import EnumerationCapError, InvalidInputError

DEFAULT_MAX_N = 10
_ENV_CAP = "WIDTHK_MAX_N"


def enumeration_cap(default: int = DEFAULT_MAX_N) -> int:
    """Current size cap for exhaustive enumeration (env WIDTHK_MAX_N overrides)."""
    raw = os.environ.get(_ENV_CAP)
    if raw is None:
        return default
    try:
        return int(raw)
    except ValueError:
        raise InvalidInputError(f"{_ENV_CAP} must be an integer, got {raw!r}") from None


def as_perm(word: Iterable[int]) -> tuple[int, ...]:
    """
    Validate that word is a rearrangement of {1, ..., n} and return it as a tuple.

    >>> as_perm([4, 1, 3, 2])
    (4, 1, 3, 2)
    """
    w = tuple(word)
    if sorted(w) != list(range(1, len(w) + 1)):
        raise InvalidInputError(f"not a permutation of [n]: {w!r}")
    return w


def identity(n: int) -> tuple[int, ...]:
    """The identity permutation 1 2 ... n."""
    return tuple(range(1, n + 1))


def decreasing(n: int) -> tuple[int, ...]:
    """The decreasing permutation n (n-1) ... 1."""
    return tuple(range(n, 0, -1))


def standardize(word: Sequence[int]) -> tuple[int, ...]:
    """
    Replace each entry by its rank, giving the order-isomorphic permutation.

    >>> standardize((4, 3, 5, 2))
    (3, 2, 4, 1)
    >>> standardize((4, 6, 2))
    (2, 3, 1)
    """
    if len(set(word)) != len(word):
        raise InvalidInputError(f"entries must be distinct: {tuple(word)!r}")
    rank = {v: i + 1 for i, v in enumerate(sorted(word))}
    return tuple(rank[v] for v in word)


def reverse(word: Sequence[int]) -> tuple[int, ...]:
    """Reversal a_n ... a_1."""
    return tuple(reversed(word))


def complement(word: Sequence[int]) -> tuple[int, ...]:
    """Complement (n+1-a_1) ... (n+1-a_n)."""
    n = len(word)
    return tuple(n + 1 - a for a in word)


def _extends(chosen: list[int], pattern: Sequence[int], value: int) -> bool:
    # value may fill slot len(chosen) iff it compares to every chosen value
    # the way the pattern letters compare.
    p = pattern[len(chosen)]
    for s, u in enumerate(chosen):
        if (value > u) != (p > pattern[s]):
            return False
    return True


def contains(word: Sequence[int], pattern: Sequence[int]) -> bool:
    """
    True iff some subsequence of word is order-isomorphic to pattern.

    Exhaustive search over subsequences, pruned when too few letters remain
    to complete the pattern.

    >>> contains((4, 1, 3, 6, 5, 7, 2), (3, 1, 2))
    True
    >>> contains((1, 2, 3, 4), (2, 1))
    False
    """
    m = len(pattern)
    n = len(word)
    if m == 0:
        return True
    if m > n:
        return False
    chosen: list[int] = []

    def search(start: int) -> bool:
        t = len(chosen)
        if t == m:
            return True
        for p in range(start, n - (m - t) + 1):
            v = word[p]
            if _extends(chosen, pattern, v):
                chosen.append(v)
                if search(p + 1):
                    return True
                chosen.pop()
        return False

    return search(0)


def _occurs_at_last(word: Sequence[int], pattern: Sequence[int]) -> bool:
    # Does some occurrence of pattern end exactly at the last letter of word?
    m = len(pattern)
    n = len(word)
    if m > n:
        return False
    last = word[-1]
    chosen: list[int] = []

    def search(start: int) -> bool:
        t = len(chosen)
        if t == m - 1:
            return _extends(chosen, pattern, last)
        for p in range(start, (n - 1) - (m - 1 - t) + 1):
            v = word[p]
            if _extends(chosen, pattern, v):
                chosen.append(v)
                if search(p + 1):
                    return True
                chosen.pop()
        return False

    return search(0)


def check_patterns(patterns: Iterable[Sequence[int]]) -> tuple[tuple[int, ...], ...]:
    """Validate a pattern collection: each a nonempty permutation. Sorted, deduplicated."""
    out = sorted({as_perm(p) for p in patterns})
    for p in out:
        if len(p) == 0:
            raise InvalidInputError("patterns must have length >= 1")
    return tuple(out)


def avoids(word: Sequence[int], patterns: Iterable[Sequence[int]]) -> bool:
    """True iff word contains no pattern from the collection (vacuously true for none)."""
    return all(not contains(word, p) for p in check_patterns(patterns))


def _check_cap(n: int, max_n: int | None) -> None:
    cap = enumeration_cap() if max_n is None else max_n
    if n > cap:
        raise EnumerationCapError(f"n={n} exceeds enumeration cap {cap}")
    if n < 0:
        raise InvalidInputError("n must be >= 0")


def enumerate_sn(n: int, max_n: int | None = None) -> Iterator[tuple[int, ...]]:
    """
    All n! permutations of [n], in lexicographic order of one-line notation.

    >>> list(enumerate_sn(3))
    [(1, 2, 3), (1, 3, 2), (2, 1, 3), (2, 3, 1), (3, 1, 2), (3, 2, 1)]
    """
    _check_cap(n, max_n)
    return itertools.permutations(range(1, n + 1))


def avoidance_class(
    n: int,
    patterns: Iterable[Sequence[int]] = (),
    max_n: int | None = None,
) -> Iterator[tuple[int, ...]]:
    """
    All permutations of [n] avoiding every given pattern, lexicographically.

    Generated by depth-first prefix extension: a prefix that avoids the
    patterns can only gain an occurrence ending at a newly appended letter,
    so each extension needs one anchored containment check.
    """
    _check_cap(n, max_n)
    pats = check_patterns(patterns)
    if not pats:
        yield from enumerate_sn(n, max_n)
        return

    prefix: list[int] = []
    used = [False] * (n + 1)

    def extend() -> Iterator[tuple[int, ...]]:
        if len(prefix) == n:
            yield tuple(prefix)
            return
        for v in range(1, n + 1):
            if used[v]:
                continue
            prefix.append(v)
            if not any(_occurs_at_last(prefix, p) for p in pats):
                used[v] = True
                yield from extend()
                used[v] = False
            prefix.pop()

    yield from extend()


def parse_perm(text: str) -> tuple[int, ...]:
    """
    Parse the text form of a permutation: bare digits for n <= 9,
    comma-separated integers otherwise.  Empty text is the empty permutation.

    >>> parse_perm("4136572")
    (4, 1, 3, 6, 5, 7, 2)
    >>> parse_perm("10,3,1,2,4,5,6,7,8,9")[:3]
    (10, 3, 1)
    """
    text = text.strip()
    if not text:
        return ()
    try:
        if "," in text:
            word = tuple(int(part) for part in text.split(","))
        else:
            word = tuple(int(ch) for ch in text)
    except ValueError:
        raise InvalidInputError(f"cannot parse permutation from {text!r}") from None
    return as_perm(word)


def parse_patterns(text: str) -> tuple[tuple[int, ...], ...]:
    """Parse a comma-separated list of digit-string patterns ("123,321")."""
    text = text.strip()
    if not text:
        return ()
    return check_patterns(parse_perm(part) for part in text.split(","))


def format_perm(word: Sequence[int]) -> str:
    """Inverse of parse_perm: digit string for n <= 9, comma-separated beyond."""
    if len(word) == 0:
        return ""
    if len(word) <= 9:
        return "".join(str(a) for a in word)
    return ",".join(str(a) for a in word)
