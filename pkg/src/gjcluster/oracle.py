"""Ground-truth engines: exhaustive enumeration, backtracking counts, and the
naive transfer-matrix method over all length-R suffix states.

Nothing here is clever on purpose.  Budgets are explicit; going over one
raises :class:`BudgetExceeded` instead of returning partial data.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import product
from typing import Sequence

from .errors import BudgetExceeded
from .exact import ONE, Polynomial, RationalFunction, solve_linear
from .words import Word, as_alphabet, as_badset, word

DEFAULT_BUDGET = 3**8  # words of the longest length; admits 2^12 and 3^8


def _check_budget(d: int, n: int, budget: int) -> None:
    if d**n > budget:
        raise BudgetExceeded(f"{d}^{n} words exceed the budget of {budget}")


def all_words(letters: Sequence[str], n: int):
    return product(letters, repeat=n)


def occurrences(w: Word, b: Word) -> int:
    k = len(b)
    return sum(1 for i in range(len(w) - k + 1) if w[i:i + k] == b)


@dataclass
class OccurrenceTable:
    """``counts[n][vector]`` = number of n-letter words whose bad words occur
    ``vector[i]`` times (``vector`` follows ``bad``)."""

    bad: tuple[Word, ...]
    counts: dict[int, Counter]

    def avoid_counts(self) -> list[int]:
        zero = (0,) * len(self.bad)
        return [self.counts[n].get(zero, 0) for n in sorted(self.counts)]

    def by_total(self) -> dict[int, Counter]:
        """``{n: {m: a_m(n)}}`` with ``m`` the total number of occurrences."""
        return {n: _collapse(c, sum) for n, c in self.counts.items()}

    def totals(self) -> list[int]:
        return [sum(self.counts[n].values()) for n in sorted(self.counts)]


def _collapse(counter: Counter, key) -> Counter:
    out: Counter = Counter()
    for vec, k in counter.items():
        out[key(vec)] += k
    return out


def brute_table(alphabet, B, n_max: int, budget: int = DEFAULT_BUDGET) -> OccurrenceTable:
    """Scan every word of length ``<= n_max`` and tally bad-word occurrences."""
    letters = as_alphabet(alphabet).letters
    bad = tuple(word(b) for b in (B.words if hasattr(B, "words") else B))
    _check_budget(len(letters), n_max, budget)
    counts = {}
    for n in range(n_max + 1):
        c: Counter = Counter()
        for w in all_words(letters, n):
            c[tuple(occurrences(w, b) for b in bad)] += 1
        counts[n] = c
    return OccurrenceTable(bad, counts)


def pattern_matches(w: Word, pattern: Word, blank: str) -> int:
    """Positions where ``pattern`` matches, ``blank`` matching any letter."""
    k = len(pattern)
    return sum(
        1
        for i in range(len(w) - k + 1)
        if all(p == blank or p == x for p, x in zip(pattern, w[i:i + k]))
    )


def brute_pattern_table(alphabet, patterns, blank: str, n_max: int, budget: int = DEFAULT_BUDGET) -> OccurrenceTable:
    """Like :func:`brute_table` for patterns with single-letter blanks."""
    letters = as_alphabet(alphabet).letters
    pats = tuple(word(p) for p in patterns)
    _check_budget(len(letters), n_max, budget)
    counts = {}
    for n in range(n_max + 1):
        c: Counter = Counter()
        for w in all_words(letters, n):
            c[tuple(pattern_matches(w, p, blank) for p in pats)] += 1
        counts[n] = c
    return OccurrenceTable(pats, counts)


def count_runs(w: Sequence[str]) -> int:
    return sum(1 for i in range(len(w)) if i == 0 or w[i] != w[i - 1])


def brute_runs_table(alphabet, B, n_max: int, budget: int = DEFAULT_BUDGET) -> dict[int, Counter]:
    """``{n: {k: words of length n avoiding B with k maximal runs}}``."""
    letters = as_alphabet(alphabet).letters
    bad = [word(b) for b in B]
    _check_budget(len(letters), n_max, budget)
    out = {}
    for n in range(n_max + 1):
        c: Counter = Counter()
        for w in all_words(letters, n):
            if not any(occurrences(w, b) for b in bad):
                c[count_runs(w)] += 1
        out[n] = c
    return out


def has_square_suffix(w: Sequence[str], max_half: int | None = None) -> bool:
    n = len(w)
    top = n // 2 if max_half is None else min(n // 2, max_half)
    return any(w[n - 2 * k:n - k] == w[n - k:] for k in range(1, top + 1))


def dfs_avoid_count(alphabet, B=(), n_max: int = 10, squarefree: bool = False, max_half: int | None = None) -> list[int]:
    """Count avoiding words of each length by backtracking extension.

    With ``squarefree`` the forbidden factors are all squares ``uu`` (only
    ``|u| <= max_half`` when given); otherwise the members of ``B``.
    """
    letters = as_alphabet(alphabet).letters
    bad = {word(b) for b in B}
    lengths = sorted({len(b) for b in bad})
    counts = [0] * (n_max + 1)
    w: list[str] = []

    def ok() -> bool:
        if squarefree:
            return not has_square_suffix(w, max_half)
        n = len(w)
        return not any(L <= n and tuple(w[n - L:]) in bad for L in lengths)

    def extend():
        counts[len(w)] += 1
        if len(w) == n_max:
            return
        for a in letters:
            w.append(a)
            if ok():
                extend()
            w.pop()

    extend()
    return counts


# naive transfer matrix --------------------------------------------------

def _transfer_gf(letters: Sequence[str], R: int, x, budget: int):
    """Solve the suffix-state system for weights ``x(w)`` on factors of length <= R+1.

    Returns ``sum_{|w|<R} Weight(w) + sum_{|v|=R} Weight(Sof[v])``.
    """
    d = len(letters)
    _check_budget(d, R, budget)
    cache: dict[Word, Polynomial] = {}

    def weight(w: Word) -> Polynomial:
        if w not in cache:
            acc = ONE
            for i in range(len(w)):
                for j in range(i + 1, min(len(w), i + R + 1) + 1):
                    acc = acc * x(w[i:j])
            cache[w] = acc
        return cache[w]

    states = list(all_words(letters, R))
    index = {v: k for k, v in enumerate(states)}
    rows, rhs = [], []
    for v in states:
        row: dict[int, Polynomial] = {index[v]: ONE}
        suffix_part = ONE
        for r in range(1, R + 1):
            suffix_part = suffix_part * x(v[R - r:])
        for a in letters:
            u = (a,) + v[:-1] if R else ()
            c = suffix_part * x((a,) + v)
            if not c.is_zero():
                k = index[u]
                row[k] = row.get(k, Polynomial()) - c
        rows.append({k: c for k, c in row.items() if not c.is_zero()})
        rhs.append(weight(v))
    sol = solve_linear(rows, rhs)
    total = RationalFunction.zero()
    for n in range(R):
        for w in all_words(letters, n):
            total = total + weight(w)
    for val in sol:
        total = total + val
    return total


def naive_transfer(alphabet, B, mode: str = "count", t: str = "t", budget: int = DEFAULT_BUDGET) -> RationalFunction:
    """``F(s, t)`` (or ``f(s)`` with ``mode="avoid"``) the long way."""
    letters = as_alphabet(alphabet).letters
    bad = {word(b) for b in as_badset(B)}
    R = max((len(b) for b in bad), default=1) - 1
    s = Polynomial.var("s")
    mark = Polynomial() if mode == "avoid" else Polynomial.var(t)
    if mode not in ("avoid", "count"):
        raise ValueError(f"unknown mode {mode!r}")

    def x(w: Word) -> Polynomial:
        val = s if len(w) == 1 else ONE
        return val * mark if w in bad else val

    return _transfer_gf(letters, R, x, budget)


def factor_var(w: Sequence[str], name: str = "x") -> str:
    return f"{name}[{','.join(w)}]"


def phi_R(alphabet, R: int, x: str = "x", budget: int = 3**4) -> RationalFunction:
    """The full factor-counting generating function in all variables ``x[w]``, ``|w| <= R+1``."""
    letters = as_alphabet(alphabet).letters
    nvars = sum(len(letters) ** r for r in range(1, R + 2))
    if nvars > budget:
        raise BudgetExceeded(f"{nvars} variables exceed the budget of {budget}")
    return _transfer_gf(letters, R, lambda w: Polynomial.var(factor_var(w, x)), budget)


def specialize_phi(phi: RationalFunction, alphabet, R: int, B, x: str = "x", s: str = "s", t: str = "t") -> RationalFunction:
    """Letters to ``s``, bad factors to ``t``, all other factors to 1."""
    letters = as_alphabet(alphabet).letters
    bad = {word(b) for b in B}
    sv, tv = Polynomial.var(s), Polynomial.var(t)
    mapping = {}
    for r in range(1, R + 2):
        for w in all_words(letters, r):
            val = sv if r == 1 else ONE
            if w in bad:
                val = val * tv
            mapping[factor_var(w, x)] = val
    return phi.subs(mapping)
