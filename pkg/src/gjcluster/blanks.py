"""Bad patterns with single-letter blanks, by expansion into concrete items.

A blank matches exactly one arbitrary letter.  A pattern occurs at a
position iff exactly one of its expansions does, so the expansions of a
pattern all carry that pattern's marker and are handed to the generalized
engine as separate items (two patterns expanding to the same word give two
items on the same word).
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from typing import Iterable, Sequence

from .cluster import gj_avoid
from .errors import SymbolicAlphabet
from .exact import Polynomial, RationalFunction, Series
from .general import gf_from_items
from .words import Word, as_alphabet, format_word, reduce_badset, word


@dataclass(frozen=True)
class PatternWord:
    tokens: Word
    blank: str = "B"

    def __post_init__(self):
        if not self.tokens:
            raise ValueError("a pattern needs at least one position")

    @property
    def blanks(self) -> int:
        return sum(1 for x in self.tokens if x == self.blank)

    def __str__(self) -> str:
        return format_word(self.tokens)


def as_pattern(p, blank: str) -> PatternWord:
    if isinstance(p, PatternWord):
        return p
    return PatternWord(word(p), blank)


def expand_pattern(pattern: PatternWord | Sequence[str], alphabet, blank: str = "B") -> list[Word]:
    """All ``d**blanks`` concrete words matching ``pattern``."""
    alphabet = as_alphabet(alphabet)
    if alphabet.symbolic:
        raise SymbolicAlphabet("blanks expand over the concrete letters")
    p = as_pattern(pattern, blank)
    if p.blank in alphabet.letters:
        raise ValueError(f"blank token {p.blank!r} is also a letter")
    slots = [i for i, x in enumerate(p.tokens) if x == p.blank]
    out = []
    for fill in product(alphabet.letters, repeat=len(slots)):
        w = list(p.tokens)
        for i, a in zip(slots, fill):
            w[i] = a
        out.append(tuple(w))
    return out


def pattern_items(alphabet, patterns: Iterable, blank: str = "B", markers: str = "uniform", t: str = "t"):
    pats = [as_pattern(p, blank) for p in patterns]
    items = []
    for p in pats:
        if markers == "uniform":
            m = Polynomial.var(t)
        elif markers == "perpattern":
            m = Polynomial.var(f"{t}[{','.join(p.tokens)}]")
        else:
            raise ValueError(f"unknown marker scheme {markers!r}")
        items.extend((w, m) for w in expand_pattern(p, alphabet))
    return items


def blanks_count(alphabet, patterns: Iterable, blank: str = "B", markers: str = "uniform", t: str = "t") -> RationalFunction:
    """``F(s, t)``: ``t`` marks every position where some pattern matches.

    With ``markers="perpattern"`` each pattern ``p`` gets its own ``t[p]``.
    """
    alphabet = as_alphabet(alphabet)
    return gf_from_items(alphabet, pattern_items(alphabet, patterns, blank, markers, t))


def blanks_avoid(alphabet, patterns: Iterable, blank: str = "B") -> RationalFunction:
    """Words in which no pattern matches anywhere."""
    alphabet = as_alphabet(alphabet)
    words = [w for p in patterns for w in expand_pattern(as_pattern(p, blank), alphabet)]
    return gj_avoid(alphabet, reduce_badset(words))


def blanks_series(alphabet, patterns: Iterable, order: int, blank: str = "B", markers: str = "uniform",
                  t: str = "t") -> Series:
    """Coefficients of ``blanks_count`` up to ``s^order``, with no linear solve."""
    from .series_engine import items_series

    alphabet = as_alphabet(alphabet)
    return items_series(alphabet, pattern_items(alphabet, patterns, blank, markers, t), order)
