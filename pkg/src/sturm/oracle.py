"""Slow, definition-level reference implementations.

Nothing here reuses the fast paths in :mod:`sturm.words` or
:mod:`sturm.sturmian`; these functions exist to be compared against them.
"""

from __future__ import annotations

from itertools import product

from .errors import EmptyWord, LengthGuard

MAX_STURMIAN_ENUM = 18
MAX_STANDARD_LEN = 64


def _factors(w):
    return {w[i:j] for i in range(len(w)) for j in range(i, len(w) + 1)}


def _count(w, u):
    return sum(1 for i in range(len(w) - len(u) + 1) if w[i : i + len(u)] == u)


def naive_is_closed(w: str) -> bool:
    """Some factor v != w occurs exactly twice: once as prefix, once as suffix."""
    if not w:
        return True
    n = len(w)
    for v in _factors(w):
        if len(v) == n:
            continue
        if w.startswith(v) and w.endswith(v) and _count(w, v) == 2:
            return True
    return False


def longest_repeated_prefix(w: str) -> str:
    """Longest prefix occurring at least twice in ``w`` (overlaps allowed)."""
    for k in range(len(w), -1, -1):
        if _count(w, w[:k]) >= 2:
            return w[:k]
    return ""


def is_periodic_like(w: str) -> bool:
    """The longest repeated prefix of ``w`` is not right special in ``w``."""
    if not w:
        raise EmptyWord("is_periodic_like needs a non-empty word")
    p = longest_repeated_prefix(w)
    k = len(p)
    followers = {w[i + k] for i in range(len(w) - k) if w[i : i + k] == p}
    return len(followers) < 2


def naive_is_balanced(w: str) -> bool:
    """Compare every pair of equal-length factors directly."""
    facts = _factors(w)
    by_len = {}
    for f in facts:
        by_len.setdefault(len(f), set()).add(f.count("a"))
    return all(max(c) - min(c) <= 1 for c in by_len.values())


def enumerate_finite_sturmian(n: int) -> list[str]:
    if n > MAX_STURMIAN_ENUM:
        raise LengthGuard(f"enumerate_finite_sturmian is limited to n <= {MAX_STURMIAN_ENUM}")
    return ["".join(t) for t in product("ab", repeat=n) if naive_is_balanced("".join(t))]


def enumerate_standard_words(max_len: int) -> list[str]:
    """Every s_n of length <= max_len over all directives (d_0 >= 0, d_i >= 1)."""
    if max_len > MAX_STANDARD_LEN:
        raise LengthGuard(f"enumerate_standard_words is limited to max_len <= {MAX_STANDARD_LEN}")
    found = {w for w in ("a", "b") if len(w) <= max_len}
    # (s_{n-1}, s_n) pairs; d_0 may be 0 so the first step is handled separately.
    stack = []
    d0 = 0
    while d0 + 1 <= max_len:
        s1 = "a" * d0 + "b"
        found.add(s1)
        stack.append(("a", s1))
        d0 += 1
    while stack:
        prev, cur = stack.pop()
        k = 1
        while len(cur) * k + len(prev) <= max_len:
            nxt = cur * k + prev
            found.add(nxt)
            stack.append((cur, nxt))
            k += 1
    return sorted(found, key=lambda w: (len(w), w))


def complexity_profile(w: str) -> list[int]:
    return [len({w[i : i + k] for i in range(len(w) - k + 1)}) for k in range(1, len(w) + 1)]
