"""Invariant sweeps behind ``sturm verify``.

Each suite returns a :class:`SuiteResult`; a suite fails on its first few
counterexamples and records them as short strings.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field

from . import analysis, oracle, sturmian, words

MAX_FAILURES = 5


@dataclass
class SuiteResult:
    name: str
    checked: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def check(self, ok: bool, detail) -> None:
        self.checked += 1
        if not ok and len(self.failures) < MAX_FAILURES:
            self.failures.append(detail() if callable(detail) else str(detail))

    def as_dict(self) -> dict:
        return {"name": self.name, "passed": self.passed, "checked": self.checked,
                "failures": list(self.failures)}


@dataclass(frozen=True)
class Family:
    """Directive heads with entries in 1..max_digit and 1..max_terms terms, tail (1)."""

    max_terms: int = 3
    max_digit: int = 4
    depth: int = 6

    def directives(self):
        for m in range(1, self.max_terms + 1):
            for head in itertools.product(range(1, self.max_digit + 1), repeat=m):
                yield sturmian.DirectiveSequence(head, (1,))


def all_words(max_len: int, min_len: int = 0):
    for n in range(min_len, max_len + 1):
        for t in itertools.product("ab", repeat=n):
            yield "".join(t)


def suite_oracle_equivalence(max_len):
    r = SuiteResult("closed_oracle_equivalence")
    for w in all_words(max_len):
        c = words.is_closed(w)
        r.check(c == oracle.naive_is_closed(w), lambda: f"is_closed({w!r}) != naive")
        if w:
            r.check(c == oracle.is_periodic_like(w), lambda: f"is_closed({w!r}) != periodic-like")
    return r


def suite_single_closed_extension(max_len):
    r = SuiteResult("at_most_one_closed_extension")
    for w in all_words(max_len, 1):
        r.check(words.is_closed(w + "a") + words.is_closed(w + "b") <= 1,
                lambda: f"both {w!r}a and {w!r}b closed")
    return r


def suite_closed_extension_period(max_len):
    r = SuiteResult("closed_extension_keeps_period")
    for w in all_words(max_len, 1):
        if not words.is_closed(w):
            continue
        p = words.min_period(w)
        for x in "ab":
            r.check(words.is_closed(w + x) == (words.min_period(w + x) == p),
                    lambda: f"period rule fails for {w!r}+{x}")
    return r


def suite_powers_and_borders(max_len):
    r = SuiteResult("powers_closed_and_border_occurrences")
    for v in all_words(max_len // 2, 1):
        for k in range(2, max_len // len(v) + 1):
            r.check(words.is_closed(v * k), lambda: f"{v!r}^{k} is open")
    for w in all_words(max_len, 1):
        u = words.longest_border(w)
        occ = words.occurrences(w, u)
        ok = occ[0] == 0 and occ[-1] == len(w) - len(u) and (len(occ) == 2) == words.is_closed(w)
        r.check(ok, lambda: f"border occurrence rule fails for {w!r}")
    return r


def suite_oc_runs_roundtrip(max_len):
    r = SuiteResult("oc_runs_roundtrip")
    for w in all_words(max_len, 1):
        s = words.oc_sequence(w)
        r.check(words.expand_runs(words.runs(s)) == s, lambda: f"runs of oc({w!r})")
        r.check(s == "".join("1" if oracle.naive_is_closed(w[:i]) else "0"
                             for i in range(1, len(w) + 1)),
                lambda: f"oc({w!r}) differs from prefix-wise oracle")
    return r


def suite_standard_structure(family):
    r = SuiteResult("standard_sequence_structure")
    for d in family.directives():
        seq = sturmian.standard_sequence(d, family.depth + 1)
        for n in range(0, family.depth + 1):
            r.check(len(seq.s(n)) == analysis.continuant([1, *d.terms(n)]),
                    lambda: f"|s_{n}| != continuant for {d}")
        for n in range(1, family.depth + 1):
            un, un1 = seq.u(n), seq.u(n + 1)
            x, y = sturmian.middle_letters(n)
            r.check(seq.s(n) == un + x + y, lambda: f"s_{n} != u_n xy for {d}")
            r.check(words.is_palindrome(un), lambda: f"u_{n} not a palindrome for {d}")
            r.check(un + x + y + un1 == un1 + y + x + un, lambda: f"central identity at n={n}, {d}")
            r.check(un1.startswith(un) and len(un1) > len(un), lambda: f"u_{n} not proper prefix, {d}")
            r.check(sturmian.is_standard(seq.s(n)), lambda: f"s_{n} not standard, {d}")
            if n + 1 <= family.depth:
                for k in range(0, d[n + 1] + 1):
                    r.check(sturmian.is_standard(seq.s(n + 1) * k + seq.s(n)),
                            lambda: f"s_{n+1}^{k}s_{n} not standard, {d}")
    return r


def suite_sturmian_prefixes(family):
    r = SuiteResult("generated_prefixes_are_sturmian")
    for d in family.directives():
        w = sturmian.generate_prefix(d, 60)
        for i in range(1, len(w) + 1):
            p = w[:i]
            r.check(sturmian.is_finite_sturmian(p), lambda: f"{p!r} unbalanced ({d})")
        prof = oracle.complexity_profile(w)
        r.check(all(c <= k + 1 for k, c in enumerate(prof, 1)), lambda: f"complexity of {d}")
    return r


def suite_central_semicentral(max_len):
    r = SuiteResult("central_closed_semicentral_open")
    standard = set(oracle.enumerate_standard_words(max_len))
    for w in all_words(max_len):
        if sturmian.is_central(w):
            r.check(words.is_closed(w), lambda: f"central {w!r} is open")
        if sturmian.is_semicentral(w):
            r.check(not words.is_closed(w), lambda: f"semicentral {w!r} is closed")
        if w:
            r.check(sturmian.is_standard(w) == (w in standard),
                    lambda: f"is_standard({w!r}) disagrees with enumeration")
    return r


def suite_oc_formula(family):
    r = SuiteResult("oc_equals_block_product")
    for d in family.directives():
        n_len = len(sturmian.standard_sequence(d, family.depth).s(family.depth))
        direct = words.oc_sequence(sturmian.generate_prefix(d, n_len))
        r.check(analysis.oc_from_directive(d, n_len) == direct, lambda: f"oc mismatch for {d}")
        prof = analysis.run_profile(d, n_len)
        r.check(prof.runs == words.runs(direct) and prof.matches_prediction(),
                lambda: f"run pairing fails for {d}")
        seq = sturmian.standard_sequence(d, family.depth)
        ks = analysis.run_lengths_from_directive(d, family.depth)
        for n in range(1, family.depth):
            r.check(len(seq.u(n + 1)) - len(seq.u(n)) == ks[n], lambda: f"|u_(n+1)|-|u_n| != k_{n}, {d}")
    return r


def suite_boundaries(family):
    r = SuiteResult("boundaries_and_semicentral_prefixes")
    for d in family.directives():
        n_len = len(sturmian.standard_sequence(d, family.depth).s(family.depth))
        w = sturmian.generate_prefix(d, n_len)
        oc = words.oc_sequence(w)
        flips = [i for i in range(1, n_len) if oc[i - 1] != oc[i]]
        events = analysis.boundary_classify(d, n_len)
        r.check([e.position for e in events] == flips, lambda: f"flip positions differ for {d}")
        for e in events:
            r.check(w[: e.position] == e.witness, lambda: f"witness not a prefix at {e.position}, {d}")
            if e.kind == "open_to_closed":
                r.check(oc[e.position - 1] == "0" and sturmian.is_semicentral(e.witness),
                        lambda: f"open_to_closed witness at {e.position} not semicentral, {d}")
            else:
                r.check(oc[e.position - 1] == "1" and sturmian.is_central(e.witness),
                        lambda: f"closed_to_open witness at {e.position} not central, {d}")
        brute = [w[:i] for i in range(1, n_len + 1) if sturmian.is_semicentral(w[:i])]
        r.check(analysis.semicentral_prefixes(d, n_len) == brute,
                lambda: f"semicentral prefixes differ for {d}")
        brute_c = [w[:i] for i in range(0, n_len + 1) if sturmian.is_central(w[:i])]
        r.check(sturmian.central_prefixes(d, n_len) == brute_c,
                lambda: f"central prefixes differ for {d}")
    return r


def suite_factorization(family):
    r = SuiteResult("square_factorization")
    for d in family.directives():
        rep = analysis.square_factorization(d, family.depth)
        r.check(rep.all_verified, lambda: f"unverified factor for {d}")
        w = sturmian.generate_prefix(d, rep.covered_length)
        r.check(rep.swapped_product() == words.swap_first_letter(w), lambda: f"swapped product, {d}")
        r.check(rep.rewritten_product() == w, lambda: f"rewritten product, {d}")
        seq = sturmian.standard_sequence(d, family.depth)
        for f in rep.factors[1:]:
            n = f.n
            expected = words.reversal(seq.s(n) * (d[n] - 1) + seq.s(n - 1))
            r.check(f.word == expected and sturmian.is_standard(words.reversal(f.word)),
                    lambda: f"factor {n} is not a reversed standard word, {d}")
    return r


def suite_reconstruction(family, length=80):
    r = SuiteResult("oc_reconstruction_roundtrip")
    for d in family.directives():
        w = sturmian.generate_prefix(d, length)
        oc = words.oc_sequence(w)
        for i in range(1, length + 1, 7):
            r.check(analysis.reconstruct_from_oc(oc[:i]) == w[:i], lambda: f"round trip at {i}, {d}")
    r.check(analysis.reconstruct_from_oc("101001") == "abaaab", "101001 -> abaaab")
    return r


def suite_fibonacci(max_len):
    r = SuiteResult("fibonacci_identities")
    for n in range(2, 4 * max_len + 1):
        r.check(analysis.fibonacci_identities_check(n), lambda: f"N={n}")
    return r


def run_all(max_word_len: int = 12, family: Family | None = None) -> list[SuiteResult]:
    family = family or Family()
    lemma_len = min(max_word_len, 14)
    return [
        suite_oracle_equivalence(max_word_len),
        suite_single_closed_extension(lemma_len),
        suite_closed_extension_period(lemma_len),
        suite_powers_and_borders(min(max_word_len, 12)),
        suite_oc_runs_roundtrip(min(max_word_len, 10)),
        suite_central_semicentral(min(max_word_len, 12)),
        suite_standard_structure(family),
        suite_sturmian_prefixes(family),
        suite_oc_formula(family),
        suite_boundaries(family),
        suite_factorization(family),
        suite_reconstruction(family),
        suite_fibonacci(max_word_len),
    ]
