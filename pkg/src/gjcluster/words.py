"""Words, factors, overlaps and correlation polynomials.

Letters are opaque string tokens, so ``("-1", "2")`` and
``("Gimel", "Heh")`` are words just as well as ``tuple("SEX")``.
"""
from __future__ import annotations

import re
from collections import Counter
from dataclasses import dataclass
from typing import Callable, Iterable, Mapping, Sequence

from .errors import NotAPrefix
from .exact import ONE, Polynomial, RationalFunction, var

Word = tuple[str, ...]


def word(w: str | Sequence[str]) -> Word:
    """Coerce ``"SEX"`` or ``["S", "E", "X"]`` to a word tuple."""
    if isinstance(w, str):
        return tuple(w)
    return tuple(str(x) for x in w)


def format_word(w: Sequence[str]) -> str:
    """Render in the bracketed token syntax: ``[H,H,T]``."""
    return "[" + ",".join(w) + "]"


def compact(w: Sequence[str]) -> str:
    """Concatenated form, handy for single-character alphabets."""
    return "".join(w)


_WORD_RE = re.compile(r"\[([^\[\]]*)\]")


def parse_words(text: str) -> list[Word]:
    """Parse ``"[P,I,P,I],[C,A,C,A]"`` (or one bracketed word per line)."""
    out = []
    for m in _WORD_RE.finditer(text):
        body = m.group(1).strip()
        out.append(tuple(tok.strip() for tok in body.split(",")) if body else ())
    if not out and text.strip():
        raise ValueError(f"no bracketed words found in {text!r}")
    return out


def parse_word(text: str) -> Word:
    words = parse_words(text)
    if len(words) != 1:
        raise ValueError(f"expected exactly one word in {text!r}")
    return words[0]


# alphabets -----------------------------------------------------------------

@dataclass(frozen=True)
class Alphabet:
    """Ordered distinct letters, or a symbolic alphabet of size ``d``.

    A symbolic alphabet only knows the letters its bad words use; the
    cluster engines never need the rest.
    """

    letters: tuple[str, ...] = ()
    symbolic: bool = False
    size_symbol: str = "d"

    def __post_init__(self):
        if len(set(self.letters)) != len(self.letters):
            raise ValueError(f"repeated letters in alphabet {self.letters}")
        if not self.symbolic and not self.letters:
            raise ValueError("a concrete alphabet needs at least one letter")

    @classmethod
    def of(cls, letters: Iterable[str] | str) -> "Alphabet":
        if isinstance(letters, str):
            return cls(tuple(letters))
        return cls(tuple(str(x) for x in letters))

    @classmethod
    def symbolic_size(cls, symbol: str = "d") -> "Alphabet":
        return cls((), True, symbol)

    @property
    def size(self) -> Polynomial:
        """``d`` as a polynomial: a constant, or the size symbol."""
        if self.symbolic:
            return var(self.size_symbol)
        return Polynomial.const(len(self.letters))

    def __len__(self) -> int:
        if self.symbolic:
            raise TypeError("symbolic alphabet has no concrete size")
        return len(self.letters)

    def __iter__(self):
        return iter(self.letters)


def as_alphabet(a) -> Alphabet:
    if isinstance(a, Alphabet):
        return a
    return Alphabet.of(a)


def parse_alphabet(text: str) -> Alphabet:
    """Parse ``A..Z``, ``H,T``, ``{E,S,X}`` or ``0..9``-style specs."""
    body = text.strip().strip("{}[]")
    letters: list[str] = []
    for part in body.split(","):
        part = part.strip()
        if not part:
            continue
        if ".." in part:
            lo, hi = part.split("..", 1)
            if lo.lstrip("-").isdigit() and hi.lstrip("-").isdigit():
                letters.extend(str(i) for i in range(int(lo), int(hi) + 1))
            elif len(lo) == 1 and len(hi) == 1:
                letters.extend(chr(c) for c in range(ord(lo), ord(hi) + 1))
            else:
                raise ValueError(f"bad alphabet range {part!r}")
        else:
            letters.append(part)
    return Alphabet(tuple(letters))


# factors and overlaps --------------------------------------------------------

def heads(w: Sequence[str]) -> set[Word]:
    """Proper nonempty prefixes."""
    w = tuple(w)
    return {w[:i] for i in range(1, len(w))}


def tails(w: Sequence[str]) -> set[Word]:
    """Proper nonempty suffixes."""
    w = tuple(w)
    return {w[i:] for i in range(1, len(w))}


def overlap_lengths(u: Sequence[str], v: Sequence[str]) -> list[int]:
    """Lengths of the words in OVERLAP(u, v), ascending."""
    u, v = tuple(u), tuple(v)
    return [k for k in range(1, min(len(u), len(v))) if u[-k:] == v[:k]]


def overlaps(u: Sequence[str], v: Sequence[str]) -> set[Word]:
    u = tuple(u)
    return {u[len(u) - k:] for k in overlap_lengths(u, v)}


def chop(v: Sequence[str], x: Sequence[str]) -> Word:
    """``v/x``: remove the prefix ``x`` from ``v``."""
    v, x = tuple(v), tuple(x)
    if v[: len(x)] != x:
        raise NotAPrefix(f"{format_word(x)} is not a prefix of {format_word(v)}")
    return v[len(x):]


def length_weight(w: Sequence[str], s: str = "s") -> Polynomial:
    return Polynomial.var(s, len(w)) if w else ONE


def letter_weight(w: Sequence[str], x: str = "x") -> Polynomial:
    """``prod x[w_i]``."""
    p = ONE
    for letter, k in sorted(Counter(w).items()):
        p = p * Polynomial.var(f"{x}[{letter}]", k)
    return p


def correlation(
    u: Sequence[str],
    v: Sequence[str],
    mode: str = "length",
    probs: Mapping[str, object] | None = None,
    weight: Callable[[Word], object] | None = None,
):
    """The correlation polynomial ``u:v = sum_{x in OVERLAP(u,v)} weight(v/x)``.

    ``mode="length"`` weighs a leftover by ``s^len``, ``mode="letters"`` by
    ``prod x[letter]``; ``probs`` weighs every leftover letter by
    ``probs[letter]*z``.  A custom ``weight`` callable overrides all three.
    """
    v = tuple(v)
    if weight is None:
        if probs is not None:
            z = var("z")

            def weight(rest):
                acc = RationalFunction.one()
                for letter in rest:
                    acc = acc * z * RationalFunction.coerce(probs[letter])
                return acc
        elif mode == "length":
            weight = length_weight
        elif mode == "letters":
            weight = letter_weight
        else:
            raise ValueError(f"unknown correlation mode {mode!r}")
    total = Polynomial()
    for k in overlap_lengths(u, v):
        total = total + weight(v[k:])
    return total


# bad sets ----------------------------------------------------------------

def is_factor(small: Sequence[str], big: Sequence[str]) -> bool:
    small, big = tuple(small), tuple(big)
    n, m = len(small), len(big)
    return any(big[i:i + n] == small for i in range(m - n + 1))


def is_proper_factor(small: Sequence[str], big: Sequence[str]) -> bool:
    return len(small) < len(big) and is_factor(small, big)


@dataclass(frozen=True)
class BadSet:
    """A finite set of nonempty bad words, kept in a deterministic order."""

    words: tuple[Word, ...]

    def __init__(self, words: Iterable[Sequence[str] | str] = ()):
        ws = sorted({word(w) for w in words})
        if any(len(w) == 0 for w in ws):
            raise ValueError("bad words must be nonempty")
        object.__setattr__(self, "words", tuple(ws))

    @property
    def reduced(self) -> bool:
        return not any(is_proper_factor(a, b) for a in self.words for b in self.words)

    @property
    def max_length(self) -> int:
        return max((len(w) for w in self.words), default=0)

    def letters(self) -> set[str]:
        return {c for w in self.words for c in w}

    def __iter__(self):
        return iter(self.words)

    def __len__(self) -> int:
        return len(self.words)

    def __contains__(self, w) -> bool:
        return word(w) in self.words


def as_badset(B) -> BadSet:
    return B if isinstance(B, BadSet) else BadSet(B)


def reduce_badset(B) -> BadSet:
    """Drop every word that has another member as a proper factor."""
    B = as_badset(B)
    by_len = sorted(B.words, key=len)
    keep: list[Word] = []
    for w in by_len:
        if not any(is_proper_factor(k, w) for k in keep):
            keep.append(w)
    return BadSet(keep)


def comp(v: Sequence[str], B) -> set[Word]:
    """Members ``u`` of ``B`` with a nonempty OVERLAP(u, v)."""
    v = tuple(v)
    return {u for u in as_badset(B) if overlap_lengths(u, v)}


def count_occurrences(w: Sequence[str], B) -> dict[Word, int]:
    w = tuple(w)
    out = {}
    for b in as_badset(B):
        n = len(b)
        out[b] = sum(1 for i in range(len(w) - n + 1) if w[i:i + n] == b)
    return out
