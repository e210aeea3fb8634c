"""Binary words and the open/closed machinery.

Words are plain ``str`` values over the letters ``a`` and ``b``; oc sequences
are ``str`` values over ``0`` and ``1`` whose i-th character (1-based)
describes the prefix of length i.
"""

from __future__ import annotations

from itertools import groupby

from .errors import EmptyWord, InvalidWord

ALPHABET = frozenset("ab")
_SWAP = str.maketrans("ab", "ba")


def check_word(w: str) -> str:
    """Return ``w`` unchanged, raising InvalidWord if it has a non-letter symbol."""
    if not isinstance(w, str):
        raise InvalidWord(f"word must be a str, got {type(w).__name__}")
    if not ALPHABET.issuperset(w):
        bad = sorted(set(w) - ALPHABET)
        raise InvalidWord(f"word {w!r} contains symbols outside {{a, b}}: {bad}")
    return w


def other(x: str) -> str:
    return "b" if x == "a" else "a"


def exchange(w: str) -> str:
    """Apply the alphabet isomorphism a <-> b."""
    return w.translate(_SWAP)


def border_array(w: str) -> list[int]:
    """Longest-border lengths of every prefix (classic failure function).

    Entry ``i - 1`` holds the length of the longest border of ``w[:i]``.
    """
    check_word(w)
    n = len(w)
    fail = [0] * n
    k = 0
    for i in range(1, n):
        c = w[i]
        while k and w[k] != c:
            k = fail[k - 1]
        if w[k] == c:
            k += 1
        fail[i] = k
    return fail


class PrefixTracker:
    """Grows a word one letter at a time, keeping its failure function.

    Lets callers ask whether ``w + x`` would be closed without rebuilding
    the border array.
    """

    def __init__(self):
        self.word = ""
        self.fail: list[int] = []

    def __len__(self):
        return len(self.word)

    def border_with(self, x: str) -> int:
        w = self.word
        if not w:
            return 0
        k = self.fail[-1]
        while True:
            if w[k] == x:
                return k + 1
            if k == 0:
                return 0
            k = self.fail[k - 1]

    def closed_with(self, x: str) -> bool:
        b = self.border_with(x)
        v = self.word + x
        return not _has_internal(v, len(v), b)

    def push(self, x: str) -> None:
        self.fail.append(self.border_with(x))
        self.word += x


def longest_border(w: str) -> str:
    if not check_word(w):
        raise EmptyWord("longest_border of the empty word")
    return w[: border_array(w)[-1]]


def min_period(w: str) -> int:
    if not check_word(w):
        raise EmptyWord("min_period of the empty word")
    return len(w) - border_array(w)[-1]


def occurrences(w: str, u: str) -> list[int]:
    """All start positions of ``u`` in ``w``, overlapping ones included."""
    check_word(w)
    check_word(u)
    if not u:
        return list(range(len(w) + 1))
    out = []
    i = w.find(u)
    while i != -1:
        out.append(i)
        i = w.find(u, i + 1)
    return out


def _has_internal(w: str, n: int, b: int) -> bool:
    # An occurrence of w[:b] is internal when it starts at >= 1 and ends at <= n - 1.
    return w.find(w[:b], 1, n - 1) != -1


def is_closed(w: str) -> bool:
    """True when ``w`` is empty or its longest border has no internal occurrence."""
    check_word(w)
    if not w:
        return True
    return not _has_internal(w, len(w), border_array(w)[-1])


def oc_sequence(w: str) -> str:
    """Open/closed bits of every non-empty prefix of ``w``.

    One failure-function pass gives every prefix border; each prefix then
    needs a single substring scan.
    """
    fail = border_array(w)
    return "".join(
        "0" if _has_internal(w, i, fail[i - 1]) else "1" for i in range(1, len(w) + 1)
    )


def runs(s: str) -> list[tuple[int, int]]:
    """Run-length encode a bit string as ``(bit, length)`` pairs."""
    return [(int(bit), sum(1 for _ in grp)) for bit, grp in groupby(s)]


def expand_runs(rs) -> str:
    return "".join(str(bit) * length for bit, length in rs)


def reversal(w: str) -> str:
    return check_word(w)[::-1]


def is_palindrome(w: str) -> bool:
    return check_word(w) == w[::-1]


def swap_first_letter(w: str) -> str:
    if not check_word(w):
        raise EmptyWord("cannot swap the first letter of the empty word")
    return other(w[0]) + w[1:]
