from __future__ import annotations

from fractions import Fraction
from itertools import product

import pytest

from gjcluster.errors import DegenerateInstance, NoValidCandidate
from gjcluster.exact.expr import parse_expr
from gjcluster.fixtures import PENNEY_HHT_HTT
from gjcluster.penney import PenneyInstance, best_last_play, penney, simulate_games, within_sigma

HALF = [Fraction(1, 2)] * 2


def markov_oracle(letters, words, probs):
    """Win probabilities from the absorbing chain on prefixes of the words."""
    words = ["".join(w) for w in words]
    states = sorted({w[:k] for w in words for k in range(len(w))}, key=lambda x: (len(x), x))
    index = {q: i for i, q in enumerate(states)}
    n, k = len(states), len(words)

    def step(q, a):
        x = q + a
        for w in words:
            if x.endswith(w):
                return ("win", words.index(w))
        while x not in index:
            x = x[1:]
        return ("state", index[x])

    # (I - P) X = R, one column per player
    A = [[Fraction(int(i == j)) for j in range(n)] for i in range(n)]
    R = [[Fraction(0)] * k for _ in range(n)]
    for q in states:
        i = index[q]
        for a, p in zip(letters, probs):
            kind, j = step(q, a)
            if kind == "win":
                R[i][j] += p
            else:
                A[i][j] -= p
    for c in range(n):
        piv = next(r for r in range(c, n) if A[r][c])
        A[c], A[piv], R[c], R[piv] = A[piv], A[c], R[piv], R[c]
        f = A[c][c]
        A[c] = [x / f for x in A[c]]
        R[c] = [x / f for x in R[c]]
        for r in range(n):
            if r != c and A[r][c]:
                g = A[r][c]
                A[r] = [x - g * y for x, y in zip(A[r], A[c])]
                R[r] = [x - g * y for x, y in zip(R[r], R[c])]
    return R[index[""]]


FIXTURES = [
    ("HT", ["HHT", "HTT"], HALF),
    ("HT", ["HHT", "THH"], HALF),
    ("HT", ["HH", "TT", "HTH"], HALF),
    ("HT", ["HHH", "THT"], [Fraction(2, 3), Fraction(1, 3)]),
    ("ABC", ["AB", "BCA", "CC"], [Fraction(1, 2), Fraction(1, 3), Fraction(1, 6)]),
]


def test_fair_coin_pair():
    f = PENNEY_HHT_HTT
    assert penney("HT", f.bad, f.expected["probs"]) == list(f.expected["wins"])


@pytest.mark.parametrize("letters,words,probs", FIXTURES)
def test_against_markov_chain(letters, words, probs):
    got = penney(letters, words, probs)
    assert got == markov_oracle(letters, words, probs)
    assert sum(got) == 1


def test_symbolic_die():
    p = parse_expr("p")
    w1, w2 = penney("HT", ["HHT", "HTT"], [p, 1 - p])
    assert w1 == parse_expr("p/(1-p+p^2)")
    assert w2 == parse_expr("(1-p)^2/(1-p+p^2)")
    assert w1 + w2 == 1
    assert w1.subs({"p": Fraction(1, 2)}).to_fraction() == Fraction(2, 3)


def test_single_player_always_wins():
    assert penney("HT", ["HTH"], HALF) == [1]


def test_factor_containment_is_degenerate():
    with pytest.raises(DegenerateInstance):
        PenneyInstance("HT", ["HT", "HHT"], HALF)


def test_probabilities_must_sum_to_one():
    with pytest.raises(ValueError):
        PenneyInstance("HT", ["HHT", "HTT"], [Fraction(1, 2), Fraction(1, 3)])


def test_certain_letter():
    assert penney("HT", ["HH", "THT"], [1, 0]) == [1, 0]


def test_runs_of_one_letter_are_even():
    assert penney("HT", ["HHH", "TTT"], HALF) == [Fraction(1, 2)] * 2


def test_best_replies():
    move = best_last_play("HT", ["HHT"], HALF)
    assert ("".join(move.word), move.probability) == ("THH", Fraction(3, 4))
    move = best_last_play("HT", ["HTT"], HALF)
    assert ("".join(move.word), move.probability) == ("HHT", Fraction(2, 3))


def test_every_three_letter_word_can_be_beaten():
    for w in product("HT", repeat=3):
        assert best_last_play("HT", [w], HALF).probability > Fraction(1, 2)


def test_no_valid_candidate():
    with pytest.raises(NoValidCandidate):
        best_last_play("HT", ["H", "T"], HALF, length=2)


@pytest.mark.parametrize("letters,words,probs", FIXTURES)
def test_simulation_within_three_sigma(letters, words, probs):
    inst = PenneyInstance(letters, words, probs)
    counts = simulate_games(inst, 10_000, seed=1)
    assert sum(counts) == 10_000
    assert within_sigma(counts, penney(letters, words, probs), 3.0)


def test_simulation_is_deterministic():
    inst = PenneyInstance("HT", ["HHT", "HTT"], HALF)
    assert simulate_games(inst, 500, seed=7) == simulate_games(inst, 500, seed=7)
    assert simulate_games(inst, 10_000, seed=1) == [6612, 3388]
