"""Run structure, boundaries, square factorization and reconstruction.

Everything here works on standard Sturmian words given by a directive
sequence, except :func:`reconstruct_from_oc`, which inverts the oc map for
any finite Sturmian word starting with ``a``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import count
from typing import Literal

import numpy as np

from .errors import InvalidOc, NotSturmianOc
from .sturmian import as_directive, generate_prefix, iter_standard, middle_letters
from .words import PrefixTracker, reversal, runs, swap_first_letter


def continuant(seq) -> int:
    """K[] = 1, K[a_0] = a_0, K[.., a_n] = a_n K[.., a_{n-1}] + K[.., a_{n-2}]."""
    before, cur = 0, 1
    for a in seq:
        before, cur = cur, a * cur + before
    return cur


def run_lengths_from_directive(d, m: int) -> list[int]:
    """k_n = K[1, d_0, ..., d_{n-1}, d_n - 1] for n < m."""
    d = as_directive(d)
    if m < 1:
        raise ValueError("m must be >= 1")
    return [continuant([1, *d.terms(n), d[n] - 1]) for n in range(m)]


def _iter_run_lengths(d):
    """k_0, k_1, ... lazily, reading d_n only when k_n is requested."""
    # Continuant state for [1, d_0, ..., d_{n-1}]: (K of it minus last, K of it).
    before, cur = 1, 1
    for n in count():
        dn = d[n]
        yield (dn - 1) * cur + before
        before, cur = cur, dn * cur + before


def oc_from_directive(d, N: int) -> str:
    """First N bits of the infinite product of blocks 1^{k_n} 0^{k_n}."""
    d = as_directive(d)
    parts, total = [], 0
    if N > 0:
        for k in _iter_run_lengths(d):
            parts.append("1" * k + "0" * k)
            total += 2 * k
            if total >= N:
                break
    return "".join(parts)[:N]


@dataclass
class RunProfile:
    runs: list[tuple[int, int]]
    predicted_k: list[int] = field(default_factory=list)
    last_run_complete: bool = False

    def expected_runs(self) -> list[tuple[int, int]]:
        return [(bit, k) for k in self.predicted_k for bit in (1, 0)]

    def comparable_runs(self) -> list[tuple[int, int]]:
        return self.runs if self.last_run_complete else self.runs[:-1]

    def matches_prediction(self) -> bool:
        got = self.comparable_runs()
        return got == self.expected_runs()[: len(got)]


def run_profile(d, N: int) -> RunProfile:
    """Runs of the oc sequence of the length-N prefix, with predicted k_n."""
    d = as_directive(d)
    bits = oc_from_directive(d, N)
    ks, total, complete = [], 0, N == 0
    if N > 0:
        for k in _iter_run_lengths(d):
            ks.append(k)
            if total + k >= N:
                complete = total + k == N
                break
            total += 2 * k
            if total >= N:
                complete = total == N
                break
    return RunProfile(runs(bits), ks, complete)


@dataclass(frozen=True)
class BoundaryEvent:
    position: int
    kind: Literal["open_to_closed", "closed_to_open"]
    witness: str
    index_n: int


def _iter_u(d):
    """Yield (n, u_n, xy) for n >= 1, where s_n = u_n x y."""
    gen = iter_standard(d)
    next(gen)  # s_0
    for n in count(1):
        yield n, next(gen)[:-2], middle_letters(n)


def boundary_classify(d, N: int) -> list[BoundaryEvent]:
    """Prefix lengths i < N where the oc bit flips between i and i + 1.

    Closed-to-open flips happen at ``a^{d_0}`` and at the central prefixes
    ``u_n x y u_{n+1}``; open-to-closed flips at the semicentral prefixes
    ``u_n x y u_n``.
    """
    d = as_directive(d)
    events = []
    if N <= d[0]:
        return events
    events.append(BoundaryEvent(d[0], "closed_to_open", "a" * d[0], 0))
    us = _iter_u(d)
    n, un, xy = next(us)
    while 2 * len(un) + 2 < N:
        events.append(BoundaryEvent(2 * len(un) + 2, "open_to_closed", un + xy + un, n))
        if len(un) + 2 + len(un) + 1 >= N:
            # u_{n+1} is strictly longer than u_n, so the next flip is past N - 1.
            break
        n1, un1, _ = next(us)
        pos = len(un) + 2 + len(un1)
        if pos >= N:
            break
        events.append(BoundaryEvent(pos, "closed_to_open", un + xy + un1, n))
        n, un, xy = n1, un1, middle_letters(n1)
    return events


def semicentral_prefixes(d, N: int) -> list[str]:
    """The prefixes u_n x y u_n (n >= 1) of length <= N."""
    out = []
    for _, un, xy in _iter_u(as_directive(d)):
        if 2 * len(un) + 2 > N:
            break
        out.append(un + xy + un)
    return out


@dataclass(frozen=True)
class Factor:
    n: int
    word: str
    verified: bool


@dataclass
class FactorizationReport:
    """Square factors (u_n^{-1} u_{n+1})^2 of the first-letter-swapped word."""

    leading: str
    factors: list[Factor]
    covered_length: int

    def swapped_product(self) -> str:
        return "".join(f.word * 2 for f in self.factors)

    def rewritten_product(self) -> str:
        return self.leading + "".join(f.word * 2 for f in self.factors[1:])

    @property
    def all_verified(self) -> bool:
        return all(f.verified for f in self.factors)


def square_factorization(d, m: int) -> FactorizationReport:
    d = as_directive(d)
    if m < 1:
        raise ValueError("m must be >= 1")
    words = ["b" + "a" * (d[0] - 1)]
    gen = iter_standard(d)
    next(gen)  # s_0
    prev_u = next(gen)[:-2]  # u_1
    for n in range(1, m):
        u_next = next(gen)[:-2]
        if not u_next.startswith(prev_u):
            raise AssertionError(f"u_{n} is not a prefix of u_{n + 1}")
        words.append(u_next[len(prev_u) :])
        prev_u = u_next
    total = 2 * sum(len(z) for z in words)
    target = swap_first_letter(generate_prefix(d, total))
    factors, pos = [], 0
    for n, z in enumerate(words):
        pos += 2 * len(z)
        factors.append(Factor(n, z, target[pos - 2 * len(z) : pos] == z * 2))
    leading = "a" * d[0] + "b" + "a" * (d[0] - 1)
    return FactorizationReport(leading, factors, total)


class _BalanceTracker:
    """Per factor length, the min and max ``a``-count seen so far."""

    _BIG = 1 << 30

    def __init__(self, capacity: int):
        self.n = 0
        self.pref = np.zeros(capacity + 2, dtype=np.int64)
        self.lo = np.full(capacity + 2, self._BIG, dtype=np.int64)
        self.hi = np.full(capacity + 2, -self._BIG, dtype=np.int64)

    def _new_counts(self, x):
        # a-counts of the suffixes of length 1..n+1 of the extended word
        n = self.n
        total = self.pref[n] + (x == "a")
        return total - self.pref[n::-1]

    def balanced_with(self, x: str) -> bool:
        c = self._new_counts(x)
        k = slice(1, self.n + 2)
        spread = np.maximum(self.hi[k], c) - np.minimum(self.lo[k], c)
        return bool(spread.max() <= 1)

    def push(self, x: str) -> None:
        c = self._new_counts(x)
        k = slice(1, self.n + 2)
        np.maximum(self.hi[k], c, out=self.hi[k])
        np.minimum(self.lo[k], c, out=self.lo[k])
        self.pref[self.n + 1] = self.pref[self.n] + (x == "a")
        self.n += 1


def reconstruct_from_oc(bits: str) -> str:
    """The unique finite Sturmian word starting with ``a`` whose oc is ``bits``.

    Letters are chosen greedily.  When both extensions stay balanced exactly
    one of them is closed, so the next bit decides; when only one stays
    balanced its closedness must agree with the bit.
    """
    if not bits or set(bits) - {"0", "1"}:
        raise InvalidOc(f"oc must be a non-empty string of 0/1, got {bits!r}")
    if bits[0] != "1":
        raise InvalidOc("the first oc bit must be 1: a single letter is closed")
    word = PrefixTracker()
    balance = _BalanceTracker(len(bits))
    word.push("a")
    balance.push("a")
    for i in range(1, len(bits)):
        want = bits[i] == "1"
        matching = [x for x in "ab" if word.closed_with(x) == want]
        viable = [x for x in matching if balance.balanced_with(x)]
        if len(viable) != 1:
            raise NotSturmianOc(i + 1)
        x = viable[0]
        word.push(x)
        balance.push(x)
    return word.word


def fibonacci_identities_check(N: int) -> bool:
    """F = prod rev(f_n) and F = ab prod f_n, both compared on N letters."""
    fib = generate_prefix(FIBONACCI, N)
    rev_parts, fwd_parts = [], ["ab"]
    for f in iter_standard(FIBONACCI):
        rev_parts.append(reversal(f))
        fwd_parts.append(f)
        if len(f) >= N:
            break
    return "".join(rev_parts)[:N] == fib and "".join(fwd_parts)[:N] == fib


FIBONACCI = as_directive("(1)")
