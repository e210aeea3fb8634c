"""Directive sequences, standard words and Sturmian predicates.

A directive sequence ``(d_0, d_1, ...)`` drives the standard sequence

    s_{-1} = b,  s_0 = a,  s_{n+1} = s_n^{d_n} s_{n-1}

whose limit is the standard Sturmian word with continued fraction
``[0; d_0 + 1, d_1, ...]``.  For n >= 1, ``s_n = u_n x y`` where ``u_n`` is a
central word and ``xy`` is ``ab`` for odd n, ``ba`` for even n.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import count
from typing import Iterator

import numpy as np

from .errors import InsufficientDirective, InvalidDirective
from .words import check_word, is_palindrome


@dataclass(frozen=True)
class DirectiveSequence:
    """Finite head plus an optional tail repeated forever."""

    head: tuple[int, ...]
    tail: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "head", tuple(int(v) for v in self.head))
        object.__setattr__(self, "tail", tuple(int(v) for v in self.tail))
        terms = self.head + self.tail
        if not terms:
            raise InvalidDirective("directive sequence has no terms")
        if terms[0] == 0:
            raise InvalidDirective(
                "d_0 = 0 gives a word starting with b; exchange the letters a <-> b "
                "and use the directive (d_1, d_2, ...) instead"
            )
        if any(v < 1 for v in terms):
            raise InvalidDirective(f"directive terms must be positive integers, got {terms}")

    @classmethod
    def parse(cls, text: str) -> "DirectiveSequence":
        """Parse ``"2,2,(1)"`` style text: head terms, then an optional ``(tail)``."""
        body = text.strip()
        tail_txt = None
        if "(" in body:
            body, _, tail_txt = body.partition("(")
            tail_txt = tail_txt.strip()
            if not tail_txt.endswith(")"):
                raise InvalidDirective(f"unterminated periodic block in {text!r}")
            tail_txt = tail_txt[:-1]
        body = body.strip().rstrip(",")

        def ints(part):
            items = [p.strip() for p in part.split(",")]
            if not all(p.isdigit() for p in items):
                raise InvalidDirective(f"cannot parse directive {text!r}")
            return tuple(int(p) for p in items)

        head = ints(body) if body.strip() else ()
        tail = ints(tail_txt) if tail_txt is not None else ()
        if tail_txt is not None and not tail:
            raise InvalidDirective(f"empty periodic block in {text!r}")
        return cls(head, tail)

    @property
    def is_infinite(self) -> bool:
        return bool(self.tail)

    def __getitem__(self, n: int) -> int:
        if n < 0:
            raise IndexError(n)
        if n < len(self.head):
            return self.head[n]
        if not self.tail:
            raise InsufficientDirective(
                f"directive {self} has {len(self.head)} terms; d_{n} is needed"
            )
        return self.tail[(n - len(self.head)) % len(self.tail)]

    def terms(self, m: int) -> list[int]:
        return [self[i] for i in range(m)]

    def __str__(self):
        parts = [str(v) for v in self.head]
        if self.tail:
            parts.append("(" + ",".join(str(v) for v in self.tail) + ")")
        return ",".join(parts)


def as_directive(d) -> DirectiveSequence:
    if isinstance(d, DirectiveSequence):
        return d
    if isinstance(d, str):
        return DirectiveSequence.parse(d)
    return DirectiveSequence(tuple(d))


def middle_letters(n: int) -> str:
    """The two trailing letters ``xy`` of s_n (n >= 1)."""
    return "ab" if n % 2 else "ba"


def iter_standard(d) -> Iterator[str]:
    """Yield s_0, s_1, s_2, ... lazily; d_n is read only when s_{n+1} is built."""
    d = as_directive(d)
    prev, cur = "b", "a"
    yield cur
    for n in count():
        prev, cur = cur, cur * d[n] + prev
        yield cur


@dataclass(frozen=True)
class StandardSequencePrefix:
    """s_{-1}, ..., s_n and the central words u_1, ..., u_n."""

    s_words: tuple[str, ...]
    u_words: tuple[str, ...] = field(default=())

    def s(self, k: int) -> str:
        return self.s_words[k + 1]

    def u(self, k: int) -> str:
        if k < 1:
            raise IndexError("u_k is a concrete word only for k >= 1")
        return self.u_words[k - 1]

    @property
    def n(self) -> int:
        return len(self.s_words) - 2


def standard_sequence(d, n: int) -> StandardSequencePrefix:
    if n < 0:
        raise ValueError("n must be >= 0")
    s_words = ["b"]
    for k, s in enumerate(iter_standard(d)):
        s_words.append(s)
        if k == n:
            break
    return StandardSequencePrefix(tuple(s_words), tuple(s[:-2] for s in s_words[2:]))


def generate_prefix(d, N: int) -> str:
    """Length-N prefix of the standard Sturmian word of ``d``.

    For k >= 1 the prefix ``s_k u_k`` (length ``2|s_k| - 2``) is the same for
    every choice of d_k, d_{k+1}, ..., so only d_0..d_{k-1} are read.
    """
    if N < 0:
        raise ValueError("N must be >= 0")
    for k, s in enumerate(iter_standard(d)):
        if len(s) >= N:
            return s[:N]
        if k >= 1 and 2 * len(s) - 2 >= N:
            return (s + s)[:N]


def is_finite_sturmian(w: str) -> bool:
    """Balance check: equal-length factors differ by at most one ``a``."""
    check_word(w)
    n = len(w)
    pref = np.zeros(n + 1, dtype=np.int64)
    np.cumsum(np.frombuffer(w.encode(), dtype=np.uint8) == ord("a"), out=pref[1:])
    for k in range(1, n):
        counts = pref[k:] - pref[:-k]
        if counts.max() - counts.min() > 1:
            return False
    return True


def is_left_special(w: str) -> bool:
    return is_finite_sturmian("a" + w) and is_finite_sturmian("b" + w)


def is_right_special(w: str) -> bool:
    return is_finite_sturmian(w + "a") and is_finite_sturmian(w + "b")


def is_bispecial(w: str) -> bool:
    return is_left_special(w) and is_right_special(w)


def is_central(w: str) -> bool:
    """Palindromic bispecial Sturmian word.

    For a palindrome, ``xw`` is the reversal of ``wx`` and balance is
    reversal-invariant, so right specialness alone decides it.
    """
    return is_palindrome(w) and is_right_special(w)


def is_semicentral(w: str) -> bool:
    """True for words ``u x y u`` with ``x != y`` and ``u`` central."""
    n = len(check_word(w))
    if n < 2 or n % 2:
        return False
    h = (n - 2) // 2
    u = w[:h]
    return w[h] != w[h + 1] and w[h + 2 :] == u and is_central(u)


def is_standard(w: str) -> bool:
    n = len(check_word(w))
    if n == 1:
        return True
    return n >= 2 and w[-2] != w[-1] and is_central(w[:-2])


def central_prefixes(d, N: int) -> list[str]:
    """Central prefixes of length <= N, ascending.

    These are ``(u_n x y)^k u_{n-1}`` for n >= 0 and 1 <= k <= d_n, i.e.
    ``s_n^k s_{n-1}`` with its last two letters dropped.  Every d_n >= 1, so the
    k = 1 form never needs d_n itself.
    """
    d = as_directive(d)
    out = []
    prev, cur = "b", "a"
    for n in count():
        if len(cur) + len(prev) - 2 > N:
            break
        k = 1
        while len(cur) * k + len(prev) - 2 <= N:
            if k > 1 and k > d[n]:
                break
            out.append((cur * k + prev)[:-2])
            k += 1
        # With d_n = 1 the next k = 1 form is as short as it can be.
        if 2 * len(cur) + len(prev) - 2 > N:
            break
        prev, cur = cur, cur * d[n] + prev
    return out


def reversed_standard_factor(d, n: int) -> str:
    """The word ``z`` with ``u_{n+1} = u_n z`` (``b a^{d_0 - 1}`` when n = 0)."""
    d = as_directive(d)
    if n < 0:
        raise ValueError("n must be >= 0")
    if n == 0:
        return "b" + "a" * (d[0] - 1)
    seq = standard_sequence(d, n + 1)
    un, un1 = seq.u(n), seq.u(n + 1)
    if not un1.startswith(un):
        raise AssertionError(f"u_{n} is not a prefix of u_{n + 1}")
    return un1[len(un) :]
