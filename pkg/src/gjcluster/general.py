"""Generalized cluster method: bad words may be factors of one another.

A generalized cluster is a word together with a set of marked bad-item
occurrences ``[i, j]`` that leaves no cut point: every gap between
consecutive letters lies strictly inside some marked interval.

Clusters are grown by inserting their intervals sorted by start position
(ties: longer first, then lower item rank).  Every prefix of that sequence
is again a cluster, because a later interval starts no earlier than the
current one and so cannot bridge an earlier gap.  Future intervals only
ever look at letters from the latest start onwards, so the automaton state
is

    context = letters from the latest interval start to the current end
    lock    = (length, rank) of the latest interval

which keeps ``len(context) <= L`` (the longest item).  A new item may be
placed at any offset inside the context consistent with its letters; at
offset 0 it must come after the lock in the tie order.  Letters it adds
past the current end contribute their weight, and each marked interval a
factor ``marker - 1``.
"""
from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Iterable, Sequence

from .cluster import AVOID, ClusterSystem, Marking, assemble, check_letters
from .errors import SymbolicAlphabet, ZeroCount
from .exact import ONE, Polynomial, RationalFunction, series_from_rational
from .words import Alphabet, Word, as_alphabet, as_badset, length_weight, letter_weight, word

Item = tuple[Word, Polynomial]


@dataclass(frozen=True)
class AutomatonState:
    context: Word
    lock: tuple[int, int]


@dataclass
class ClusterAutomaton:
    items: list[Item]
    states: list[AutomatonState] = field(default_factory=list)
    base: dict[int, Polynomial] = field(default_factory=dict)
    # (source, target, weight)
    transitions: list[tuple[int, int, Polynomial]] = field(default_factory=list)

    def to_system(self) -> ClusterSystem:
        n = len(self.states)
        coupling: list[dict[int, Polynomial]] = [dict() for _ in range(n)]
        for src, dst, w in self.transitions:
            row = coupling[dst]
            row[src] = row.get(src, Polynomial()) + w
        for row in coupling:
            for k in [k for k, v in row.items() if v.is_zero()]:
                del row[k]
        base = [self.base.get(i, Polynomial()) for i in range(n)]
        return ClusterSystem(list(self.states), base, coupling)

    def lumped_system(self) -> ClusterSystem:
        """A smaller system with the same total, by merging equivalent states.

        Read backwards, ``V_q = 1 + sum T(q -> q') V_q'`` and
        ``weight(C) = sum_q base_q V_q``.  States whose summed outgoing
        weight into every block agrees share one ``V``; the coarsest such
        partition is found by refinement from a single block.
        """
        n = len(self.states)
        out: list[dict[int, Polynomial]] = [dict() for _ in range(n)]
        for src, dst, w in self.transitions:
            out[src][dst] = out[src].get(dst, Polynomial()) + w
        block = [0] * n
        count = 1
        while True:
            sigs: dict[tuple, int] = {}
            new_block = []
            for q in range(n):
                acc: dict[int, Polynomial] = {}
                for r, w in out[q].items():
                    acc[block[r]] = acc.get(block[r], Polynomial()) + w
                sig = (block[q], tuple(sorted((b, w) for b, w in acc.items() if not w.is_zero())))
                new_block.append(sigs.setdefault(sig, len(sigs)))
            block = new_block
            if len(sigs) == count:
                break
            count = len(sigs)
        reps: dict[int, int] = {}
        readout = [Polynomial() for _ in range(count)]
        for q in range(n):
            reps.setdefault(block[q], q)
            readout[block[q]] = readout[block[q]] + self.base.get(q, Polynomial())
        coupling: list[dict[int, Polynomial]] = []
        for k in range(count):
            row: dict[int, Polynomial] = {}
            for r, w in out[reps[k]].items():
                row[block[r]] = row.get(block[r], Polynomial()) + w
            coupling.append({j: w for j, w in row.items() if not w.is_zero()})
        labels = [self.states[reps[k]] for k in range(count)]
        return ClusterSystem(labels, [ONE] * count, coupling, readout)

    def cluster_weight(self, lump: bool = True) -> RationalFunction:
        return (self.lumped_system() if lump else self.to_system()).solve()


def build_automaton(items: Iterable[tuple[Sequence[str], Polynomial]], letters: bool = False) -> ClusterAutomaton:
    """Breadth-first construction of the cluster automaton of ``items``.

    ``items`` are ``(word, marker)`` pairs; the same word may appear with
    several markers.  Items whose marker is 1 can never contribute and are
    dropped.
    """
    items = [(word(w), Polynomial.const(m) if isinstance(m, int) else m) for w, m in items]
    weight = letter_weight if letters else length_weight
    aut = ClusterAutomaton(items)
    live = [(k, w, m - 1) for k, (w, m) in enumerate(items) if not (m - 1).is_zero() and w]
    index: dict[AutomatonState, int] = {}
    queue: deque[int] = deque()

    def state_id(st: AutomatonState) -> int:
        i = index.get(st)
        if i is None:
            i = len(aut.states)
            index[st] = i
            aut.states.append(st)
            queue.append(i)
        return i

    for k, w, mk in live:
        i = state_id(AutomatonState(w, (len(w), k)))
        aut.base[i] = aut.base.get(i, Polynomial()) + mk * weight(w)

    while queue:
        src = queue.popleft()
        ctx = aut.states[src].context
        lock_len, lock_rank = aut.states[src].lock
        n = len(ctx)
        for k, v, mk in live:
            lv = len(v)
            for o in range(n):
                if o == 0 and not (lv < lock_len or (lv == lock_len and k > lock_rank)):
                    continue
                rest = n - o
                if lv <= rest:
                    if ctx[o:o + lv] != v:
                        continue
                    new_ctx, beta = ctx[o:], ()
                else:
                    if v[:rest] != ctx[o:]:
                        continue
                    beta = v[rest:]
                    new_ctx = ctx[o:] + beta
                dst = state_id(AutomatonState(new_ctx, (lv, k)))
                aut.transitions.append((src, dst, mk * weight(beta)))
    return aut


def marked_items(B, marking: Marking) -> list[Item]:
    return [(w, marking.marker(w)) for w in as_badset(B)]


def general_cluster_weight(items, letters: bool = False) -> RationalFunction:
    items = list(items)
    if not items:
        return RationalFunction.zero()
    return build_automaton(items, letters).cluster_weight()


def gf_from_items(alphabet, items, letters: bool = False) -> RationalFunction:
    """``1/(1 - d*s - weight(C))`` for an arbitrary list of marked items."""
    alphabet = as_alphabet(alphabet)
    if letters and alphabet.symbolic:
        raise SymbolicAlphabet("letter weights need a concrete alphabet")
    items = list(items)
    check_letters(alphabet, [w for w, _ in items])
    marking = Marking("avoid", letters=letters)
    return assemble(alphabet, general_cluster_weight(items, letters), marking)


def gjnz_count(alphabet, B, mode: Marking | str = "uniform", t: str = "t") -> RationalFunction:
    """``F(s, t)`` counting all occurrences of all bad words, nesting included."""
    if isinstance(mode, str):
        mode = Marking(mode, t)
    return gf_from_items(alphabet, marked_items(B, mode), mode.letters)


# runs ------------------------------------------------------------------

def runs_gf(alphabet, B=(), r: str = "r") -> RationalFunction:
    """``R(s, r)``: ``r`` counts maximal runs of the words avoiding ``B``."""
    alphabet = as_alphabet(alphabet)
    if alphabet.symbolic:
        raise SymbolicAlphabet("runs need the concrete letters")
    rv = Polynomial.var(r)
    items: list[Item] = [(w, Polynomial()) for w in as_badset(B)]
    items += [((a, b), rv) for a, b in product(alphabet.letters, repeat=2) if a != b]
    G = gf_from_items(alphabet, items)
    return 1 + rv * (G - 1)


@dataclass
class RunsAverage:
    """Exact average run counts ``A(n)`` and a labeled estimate of ``C(B)``."""

    averages: list[Fraction]
    estimate: float
    ratios: list[tuple[int, float]]

    def __str__(self) -> str:
        lines = [f"A({n}) = {a}" for n, a in enumerate(self.averages)]
        lines.append(f"C(B) estimate (A(n)/n, not rigorous): {self.estimate:.10f}")
        return "\n".join(lines)


def avg_runs(alphabet, B=(), n_max: int = 10, tail: int = 5) -> RunsAverage:
    R = runs_gf(alphabet, B)
    ser = series_from_rational(R, "s", n_max)
    out: list[Fraction] = []
    for n, coeff in enumerate(ser):
        p = coeff if isinstance(coeff, Polynomial) else Polynomial.const(coeff)
        parts = p.coefficients_in("r")
        count = sum(c.constant_term() for c in parts.values())
        runs = sum(k * c.constant_term() for k, c in parts.items())
        if count == 0:
            raise ZeroCount(f"no words of length {n} avoid the bad set")
        out.append(Fraction(runs, count))
    ratios = [(n, float(out[n] / n)) for n in range(max(1, n_max - tail + 1), n_max + 1)]
    est = float(out[n_max] / n_max) if n_max else 0.0
    return RunsAverage(out, est, ratios)


# conceptual checker ------------------------------------------------------

def is_cluster(w: Sequence[str], intervals: Iterable[tuple[int, int, Sequence[str]]]) -> bool:
    """Check a marked word ``(w; [i, j] labeled by item)`` for being a cluster.

    Intervals are 1-based and inclusive.  Every interval must spell its
    item, intervals must be distinct, and no gap between letters ``m`` and
    ``m+1`` may be left unbridged.
    """
    w = word(w)
    seen = set()
    ivs = []
    for i, j, item in intervals:
        item = word(item)
        if not (1 <= i <= j <= len(w)) or w[i - 1:j] != item:
            return False
        key = (i, j, item)
        if key in seen:
            return False
        seen.add(key)
        ivs.append((i, j))
    if not ivs:
        return False
    for m in range(1, len(w)):
        if not any(i <= m < j for i, j in ivs):
            return False
    return True
