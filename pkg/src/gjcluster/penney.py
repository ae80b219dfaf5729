"""Penney-ante: players pick words, a loaded die is rolled until one of the
words shows up as the latest letters, and that player wins.

For player words ``A_1..A_k`` let ``N(z)`` count (with probability weight
``z^n``) the unfinished games of length ``n`` and ``W_i(z)`` the games won
by player ``i`` at time ``n``.  Then

    (1 - z) N + sum_i W_i = 1
    pi(A_j) z^|A_j| N = sum_i C_ij(z) W_i          (one equation per j)

where ``C_ij`` sums ``pi(A_j[l:]) z^(|A_j| - l)`` over every ``l`` for
which the last ``l`` letters of ``A_i`` are the first ``l`` of ``A_j``.
The win probabilities are ``W_i(1)``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from math import lcm, sqrt
from typing import Mapping, Sequence

import numpy as np

from .errors import DegenerateInstance, NoValidCandidate
from .exact import ONE, Polynomial, RationalFunction, solve_linear
from .words import Word, format_word, is_factor, word

Z = "z"


def _as_rational(x) -> RationalFunction:
    if isinstance(x, str):
        x = Fraction(x)
    return RationalFunction.coerce(x)


@dataclass
class PenneyInstance:
    """Letters, the players' words, and the probability of each letter.

    Probabilities may be ints, Fractions, fraction strings, Polynomials or
    RationalFunctions (for a symbolic die such as ``[p, 1-p]``).
    """

    letters: tuple[str, ...]
    words: tuple[Word, ...]
    probs: dict[str, RationalFunction]

    def __init__(self, letters: Sequence[str], words: Sequence, probs: Mapping[str, object] | Sequence):
        self.letters = tuple(str(a) for a in letters)
        self.words = tuple(word(w) for w in words)
        if isinstance(probs, Mapping):
            pm = {str(a): _as_rational(p) for a, p in probs.items()}
        else:
            probs = list(probs)
            if len(probs) != len(self.letters):
                raise ValueError("need one probability per letter")
            pm = {a: _as_rational(p) for a, p in zip(self.letters, probs)}
        if set(pm) != set(self.letters):
            raise ValueError("probabilities must be given for exactly the letters")
        self.probs = pm
        self.validate()

    def validate(self) -> None:
        if not self.words:
            raise ValueError("a game needs at least one player")
        for w in self.words:
            if not w:
                raise ValueError("player words must be nonempty")
            stray = set(w) - set(self.letters)
            if stray:
                raise ValueError(f"{format_word(w)} uses letters {sorted(stray)} outside the die")
        for i, u in enumerate(self.words):
            for j, v in enumerate(self.words):
                if i != j and is_factor(u, v):
                    raise DegenerateInstance(f"{format_word(u)} is a factor of {format_word(v)}")
        total = RationalFunction.zero()
        for p in self.probs.values():
            total = total + p
        if total != RationalFunction.one():
            raise ValueError(f"letter probabilities sum to {total}, not 1")

    @property
    def numeric(self) -> bool:
        return all(p.is_constant() for p in self.probs.values())

    def weight(self, w: Sequence[str]) -> RationalFunction:
        """``pi(w)``: the probability of rolling ``w``."""
        acc = RationalFunction.one()
        for a in w:
            acc = acc * self.probs[a]
        return acc

    def numeric_probs(self) -> list[Fraction]:
        if not self.numeric:
            raise ValueError("the die is symbolic")
        return [self.probs[a].to_fraction() for a in self.letters]


def _coupling(inst: PenneyInstance, a: Word, b: Word) -> RationalFunction:
    """``C(z)``: the overlap sum of ``a`` into ``b`` including full overlap."""
    z = Polynomial.var(Z)
    total = RationalFunction.zero()
    for l in range(1, min(len(a), len(b)) + 1):
        if a[len(a) - l:] == b[:l]:
            total = total + inst.weight(b[l:]) * z ** (len(b) - l)
    return total


def _clear_row(row: list[RationalFunction], rhs: RationalFunction) -> tuple[list[Polynomial], Polynomial]:
    """Multiply an equation through by the product of its distinct denominators."""
    dens: list[Polynomial] = []
    ints: list[int] = []
    for x in row + [rhs]:
        d = x.den
        if d.is_constant():
            ints.append(d.constant_term())
        elif d not in dens:
            dens.append(d)
    m = Polynomial.const(lcm(*ints) if ints else 1)
    for d in dens:
        m = m * d
    out = [(x.num * m).exact_div(x.den) for x in row + [rhs]]
    return out[:-1], out[-1]


def penney_system(inst: PenneyInstance) -> tuple[list[list[Polynomial]], list[Polynomial]]:
    """The stopping system in the unknowns ``(N, W_1, ..., W_k)``."""
    z = Polynomial.var(Z)
    k = len(inst.words)
    A: list[list[Polynomial]] = []
    b: list[Polynomial] = []
    A.append([ONE - z] + [ONE] * k)
    b.append(ONE)
    for bj in inst.words:
        row = [inst.weight(bj) * z ** len(bj)]
        row += [-_coupling(inst, ai, bj) for ai in inst.words]
        r, rhs = _clear_row(row, RationalFunction.zero())
        A.append(r)
        b.append(rhs)
    return A, b


def _at_one(f: RationalFunction) -> RationalFunction:
    """Evaluate at ``z = 1``, cancelling removable factors ``z - 1`` first."""
    num, den = f.num, f.den
    zm1 = Polynomial.var(Z) - 1
    while den.subs({Z: 1}).is_zero():
        if not num.subs({Z: 1}).is_zero():
            raise DegenerateInstance("win probability has a pole at z = 1")
        num, den = num.exact_div(zm1), den.exact_div(zm1)
    return RationalFunction(num.subs({Z: 1}), den.subs({Z: 1}))


def penney_probabilities(inst: PenneyInstance) -> list[RationalFunction]:
    """Exact win probabilities ``[W_1(1), ..., W_k(1)]``."""
    A, b = penney_system(inst)
    sol = solve_linear(A, b)
    return [_at_one(w) for w in sol[1:]]


def penney(letters, words, probs) -> list:
    """Win probabilities as Fractions (numeric die) or rational functions."""
    inst = PenneyInstance(letters, words, probs)
    out = penney_probabilities(inst)
    if inst.numeric:
        return [w.to_fraction() for w in out]
    return out


# best counter-move ---------------------------------------------------------

@dataclass(frozen=True)
class CounterMove:
    word: Word
    probability: Fraction
    table: tuple[tuple[Word, Fraction], ...]

    def __str__(self) -> str:
        return f"{format_word(self.word)} wins with probability {self.probability}"


def best_last_play(letters, opponents, probs, length: int | None = None) -> CounterMove:
    """The word of the given length (default: the longest opponent's) that
    maximizes the last player's chance; ties go to the earliest word in
    letter order."""
    letters = tuple(str(a) for a in letters)
    opponents = [word(w) for w in opponents]
    if length is None:
        length = max(len(w) for w in opponents)
    if length < 1:
        raise ValueError("candidate length must be at least 1")
    PenneyInstance(letters, opponents, probs)  # validates the opponents
    best: tuple[Word, Fraction] | None = None
    table = []
    for cand in product(letters, repeat=length):
        if any(is_factor(cand, w) or is_factor(w, cand) for w in opponents):
            continue
        inst = PenneyInstance(letters, opponents + [cand], probs)
        if not inst.numeric:
            raise ValueError("a best move needs a numeric die")
        p = penney_probabilities(inst)[-1].to_fraction()
        table.append((cand, p))
        if best is None or p > best[1]:
            best = (cand, p)
    if best is None:
        raise NoValidCandidate(f"every word of length {length} clashes with an opponent")
    return CounterMove(best[0], best[1], tuple(table))


# simulation ------------------------------------------------------------------

class _Die:
    """Exact loaded die over a PCG64 stream.

    With all probabilities over the common denominator ``D``, each roll
    takes the top ``b = bitlen(D - 1)`` bits of one 64-bit output of
    ``numpy.random.PCG64(seed)`` and rejects values ``>= D``.  Only the raw
    bit generator is consulted, so the seed-to-rolls mapping is fixed.
    """

    BLOCK = 4096

    def __init__(self, probs: Sequence[Fraction], seed: int):
        D = lcm(*(p.denominator for p in probs))
        if D > 1 << 64:
            raise ValueError("probability denominators exceed 64 bits")
        self.D = D
        self.shift = 64 - max((D - 1).bit_length(), 0)
        cuts, acc = [], 0
        for p in probs:
            acc += p.numerator * (D // p.denominator)
            cuts.append(acc)
        self.cuts = np.array(cuts, dtype=object)
        self.bitgen = np.random.PCG64(seed)
        self.buffer: list[int] = []

    def _refill(self) -> None:
        raw = self.bitgen.random_raw(self.BLOCK)
        vals = (raw >> np.uint64(self.shift)) if self.shift < 64 else np.zeros_like(raw)
        self.buffer = [int(v) for v in vals[::-1] if int(v) < self.D]

    def roll(self) -> int:
        while not self.buffer:
            self._refill()
        x = self.buffer.pop()
        for i, c in enumerate(self.cuts):
            if x < c:
                return i
        raise AssertionError("roll outside the probability table")


def simulate_games(inst: PenneyInstance, num_games: int, seed: int = 0, max_rolls: int = 10**6) -> list[int]:
    """Win counts of ``num_games`` seeded games (one stream for all games)."""
    probs = inst.numeric_probs()
    die = _Die(probs, seed)
    lengths = sorted({len(w) for w in inst.words})
    owner = {w: i for i, w in enumerate(inst.words)}
    L = lengths[-1]
    wins = [0] * len(inst.words)
    for _ in range(num_games):
        tail: list[str] = []
        for _roll in range(max_rolls):
            tail.append(inst.letters[die.roll()])
            if len(tail) > L:
                del tail[0]
            hit = next((owner[t] for n in lengths if len(tail) >= n and (t := tuple(tail[-n:])) in owner), None)
            if hit is not None:
                wins[hit] += 1
                break
        else:
            raise RuntimeError(f"a game ran past {max_rolls} rolls")
    return wins


def within_sigma(counts: Sequence[int], probs: Sequence[Fraction], sigmas: float = 3.0) -> bool:
    """Each count lies within ``sigmas`` binomial standard deviations."""
    n = sum(counts)
    for c, p in zip(counts, probs):
        p = float(p)
        sd = sqrt(n * p * (1 - p))
        if abs(c - n * p) > sigmas * sd + 1e-9:
            return False
    return True
