"""The cluster method for reduced bad sets.

For every bad word ``v`` the weight of the clusters ending in ``v`` obeys

    W[v] = m_v * weight(v) + m_v * sum_{u in Comp(v)} (u:v) * W[u]

with ``m_v = marker(v) - 1`` (``-1`` when avoiding, ``t - 1`` or
``t[v] - 1`` when counting).  The generating function of all words is then
``1 / (1 - d*s - sum_v W[v])``, with ``d*s`` replaced by ``sum_v x[v]`` when
letters are weighted individually.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .errors import NotReduced, SymbolicAlphabet
from .exact import ONE, Polynomial, RationalFunction, solve_fraction_free
from .exact.linsolve import check_solution
from .words import (
    Alphabet,
    BadSet,
    Word,
    as_alphabet,
    as_badset,
    correlation,
    length_weight,
    letter_weight,
    overlap_lengths,
    reduce_badset,
)


@dataclass(frozen=True)
class Marking:
    """How bad-word occurrences and letters are weighted.

    ``kind`` is ``"avoid"`` (marker 0), ``"uniform"`` (one variable ``t``)
    or ``"perword"`` (``t[b]`` for each bad word ``b``).  With ``letters``
    each letter ``v`` carries ``x[v]`` instead of the length variable ``s``.
    """

    kind: str = "avoid"
    var: str = "t"
    letters: bool = False

    def __post_init__(self):
        if self.kind not in ("avoid", "uniform", "perword"):
            raise ValueError(f"unknown marking kind {self.kind!r}")

    def marker(self, w: Sequence[str]) -> Polynomial:
        if self.kind == "avoid":
            return Polynomial()
        if self.kind == "uniform":
            return Polynomial.var(self.var)
        return Polynomial.var(word_var(self.var, w))

    def weight(self, w: Sequence[str]) -> Polynomial:
        return letter_weight(w) if self.letters else length_weight(w)


AVOID = Marking("avoid")


def word_var(base: str, w: Sequence[str]) -> str:
    """Variable name for a per-word marker: ``t[P,I,P,I]``."""
    return f"{base}[{','.join(w)}]"


@dataclass
class ClusterSystem:
    """Unknowns ``W_i = base_i + sum_j coupling[i][j] * W_j``.

    ``weight(C) = sum_i readout_i * W_i``.  The readout is all ones except
    for orbit-reduced systems (orbit sizes) and lumped automata (summed base
    weights).
    """

    labels: list
    base: list[Polynomial]
    coupling: list[dict[int, Polynomial]]
    readout: list = field(default_factory=list)

    def __post_init__(self):
        if not self.readout:
            self.readout = [1] * len(self.labels)

    def __len__(self) -> int:
        return len(self.labels)

    def matrix(self) -> tuple[list[dict[int, Polynomial]], list[Polynomial]]:
        """``(A, b)`` with ``A = I - coupling`` and ``b = base``."""
        rows = []
        for i, row in enumerate(self.coupling):
            r = {j: -c for j, c in row.items()}
            r[i] = r.get(i, Polynomial()) + ONE
            rows.append({j: c for j, c in r.items() if not c.is_zero()})
        return rows, list(self.base)

    def solve(self, verify: bool = True) -> RationalFunction:
        """Total cluster weight as one rational function."""
        if not self.labels:
            return RationalFunction.zero()
        A, b = self.matrix()
        nums, det = solve_fraction_free(A, b)
        if verify and not check_solution(A, b, nums, det):
            raise ArithmeticError("cluster system residual is not zero")
        total = Polynomial()
        for k, nv in zip(self.readout, nums):
            total = total + nv * k
        return RationalFunction(total, det)

    def unknowns(self, verify: bool = True) -> list[RationalFunction]:
        A, b = self.matrix()
        nums, det = solve_fraction_free(A, b)
        if verify and not check_solution(A, b, nums, det):
            raise ArithmeticError("cluster system residual is not zero")
        return [RationalFunction(nv, det) for nv in nums]


def check_letters(alphabet: Alphabet, words) -> None:
    if alphabet.symbolic:
        return
    allowed = set(alphabet.letters)
    for w in words:
        bad = set(w) - allowed
        if bad:
            raise ValueError(f"letters {sorted(bad)} of {w} are not in the alphabet")


def basic_system(B: BadSet, marking: Marking = AVOID) -> ClusterSystem:
    """The sparse system over a reduced bad set, unknowns in bad-word order."""
    words = list(B.words)
    index = {w: i for i, w in enumerate(words)}
    corr_mode = "letters" if marking.letters else "length"
    base, coupling = [], []
    for v in words:
        m = marking.marker(v) - 1
        base.append(m * marking.weight(v))
        row: dict[int, Polynomial] = {}
        for u in words:
            if overlap_lengths(u, v):
                row[index[u]] = m * correlation(u, v, mode=corr_mode)
        coupling.append(row)
    return ClusterSystem(words, base, coupling)


def letters_term(alphabet: Alphabet, marking: Marking) -> Polynomial:
    """``d*s`` or ``sum_v x[v]``: the weight of a single free letter."""
    if marking.letters:
        if alphabet.symbolic:
            raise SymbolicAlphabet("letter weights need a concrete alphabet")
        acc = Polynomial()
        for v in alphabet.letters:
            acc = acc + letter_weight((v,))
        return acc
    return alphabet.size * Polynomial.var("s")


def assemble(alphabet: Alphabet, cluster_weight: RationalFunction, marking: Marking) -> RationalFunction:
    """``1 / (1 - d*s - weight(C))``."""
    c = RationalFunction.coerce(cluster_weight)
    denom = RationalFunction.coerce(ONE - letters_term(alphabet, marking)) - c
    return RationalFunction.one() / denom


def cluster_weight(alphabet, B, marking: Marking = AVOID) -> RationalFunction:
    """Total weight of all clusters of a reduced bad set."""
    alphabet = as_alphabet(alphabet)
    B = as_badset(B)
    if not B.reduced:
        raise NotReduced("bad set is not reduced; use gjnz_count for nested bad words")
    if marking.letters and alphabet.symbolic:
        raise SymbolicAlphabet("letter weights need a concrete alphabet")
    check_letters(alphabet, B)
    return basic_system(B, marking).solve()


def gj_avoid(alphabet, B) -> RationalFunction:
    """Generating function of the words avoiding every member of ``B``."""
    alphabet = as_alphabet(alphabet)
    B = reduce_badset(B)
    return assemble(alphabet, cluster_weight(alphabet, B, AVOID), AVOID)


def gj_count(alphabet, B, t: str = "t") -> RationalFunction:
    """``F(s, t)``: ``t`` marks every occurrence of a bad word."""
    alphabet = as_alphabet(alphabet)
    marking = Marking("uniform", t)
    return assemble(alphabet, cluster_weight(alphabet, B, marking), marking)


def gj_detail(alphabet, B, t: str = "t", letters: bool = False) -> RationalFunction:
    """``F(s; t[b_1], ..., t[b_f])`` with one marker per bad word."""
    alphabet = as_alphabet(alphabet)
    marking = Marking("perword", t, letters)
    return assemble(alphabet, cluster_weight(alphabet, B, marking), marking)


def gj_letters(alphabet, B, marking: Marking | str = "avoid", t: str = "t") -> RationalFunction:
    """Letter-weighted generating function in the variables ``x[v]``."""
    alphabet = as_alphabet(alphabet)
    if alphabet.symbolic:
        raise SymbolicAlphabet("letter weights need a concrete alphabet")
    if isinstance(marking, str):
        marking = Marking(marking, t, True)
    else:
        marking = Marking(marking.kind, marking.var, True)
    if marking.kind == "avoid":
        B = reduce_badset(B)
    return assemble(alphabet, cluster_weight(alphabet, B, marking), marking)


def per_word_vars(B, t: str = "t") -> dict[Word, str]:
    return {w: word_var(t, w) for w in as_badset(B)}
