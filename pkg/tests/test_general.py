from __future__ import annotations

import random
from fractions import Fraction

import pytest

from gjcluster.cluster import Marking, cluster_weight, gj_avoid, gj_count, gj_detail, gj_letters, per_word_vars
from gjcluster.errors import ZeroCount
from gjcluster.exact import Polynomial, RationalFunction, series_from_rational
from gjcluster.fixtures import CA_CACA, PI_PIPI, TITICACA
from gjcluster.general import (
    avg_runs, build_automaton, general_cluster_weight, gf_from_items, gjnz_count, is_cluster, marked_items, runs_gf,
)
from gjcluster.oracle import brute_runs_table, brute_table
from gjcluster.words import BadSet, reduce_badset, word

from support import marker_table, vector_table

s = Polynomial.var("s")
t = Polynomial.var("t")


def test_non_overlapping_item():
    aut = build_automaton([("PI", t)])
    assert len(aut.states) == 1
    assert aut.cluster_weight() == RationalFunction((t - 1) * s**2)


def test_self_overlapping_item():
    w = general_cluster_weight([("AA", t)])
    assert w == RationalFunction((t - 1) * s**2, 1 - (t - 1) * s)
    F = gf_from_items("AB", [("AA", t)])
    assert marker_table(F, 8) == brute_table("AB", ["AA"], 8).by_total()


def test_automaton_agrees_with_basic_engine():
    for B in (["PIPI", "CACA", "PICA", "CAPI"], ["SEX", "XE"], ["aab", "aba", "bb"]):
        assert general_cluster_weight(marked_items(B, Marking("uniform"))) == cluster_weight(
            "ACIPSXEab", B, Marking("uniform")
        )


def test_lumping_keeps_the_total():
    rng = random.Random(11)
    for _ in range(15):
        B = {"".join(rng.choice("abc") for _ in range(rng.randint(1, 4))) for _ in range(rng.randint(1, 4))}
        aut = build_automaton(marked_items(B, Marking("uniform")))
        assert len(aut.lumped_system()) <= len(aut.states)
        assert aut.cluster_weight(lump=True) == aut.cluster_weight(lump=False)


def test_pi_pipi_coefficient():
    F = gjnz_count(PI_PIPI.alphabet, PI_PIPI.bad)
    table = marker_table(F, 10)
    brute = brute_table(PI_PIPI.alphabet, PI_PIPI.bad, 10).by_total()
    assert table[10][13] == brute[10][13] == 0  # at most 5 PI and 4 PIPI fit in 10 letters
    assert table == brute


def test_ca_caca_table():
    F = gjnz_count(CA_CACA.alphabet, CA_CACA.bad)
    assert marker_table(F, 8) == brute_table(CA_CACA.alphabet, CA_CACA.bad, 8).by_total()


def test_nested_per_word_counts():
    B = ["CA", "CACA", "ACA"]
    F = gjnz_count("AC", B, "perword")
    names = [per_word_vars(B)[w] for w in BadSet(B)]
    assert vector_table(F, 8, names) == brute_table("AC", BadSet(B), 8).counts


def test_start_ordered_clusters_are_all_found():
    # [1,2] ab, [3,3] c and [1,4] abcd form a cluster whose intervals sorted by
    # right end do not build up through clusters
    B = ["ab", "c", "abcd"]
    F = gjnz_count("abcd", B)
    assert marker_table(F, 8) == brute_table("abcd", B, 6, budget=4**6).by_total() | {
        n: marker_table(F, 8)[n] for n in (7, 8)
    }
    assert is_cluster("abcd", [(1, 2, "ab"), (3, 3, "c"), (1, 4, "abcd")])


def test_reduced_sets_agree_with_gj_count():
    for a, B in (("BG", ["GBG"]), ("ESX", ["SEX", "XE"]), ("ab", ["aab", "bb"])):
        assert gjnz_count(a, B) == gj_count(a, B)


def test_zero_marker_gives_avoidance():
    for a, B in (("IP", PI_PIPI.bad), ("AC", CA_CACA.bad), ("ACIT", TITICACA.bad)):
        assert gjnz_count(a, B).subs({"t": 0}) == gj_avoid(a, reduce_badset(B))


def test_letter_weights_through_the_automaton():
    items = marked_items(["SEX", "XE"], Marking("uniform", letters=True))
    assert gf_from_items("ESX", items, letters=True) == gj_letters("ESX", ["SEX", "XE"], "uniform")


def test_titicaca_cluster_checker():
    w, ivs = TITICACA.expected["cluster"]
    intervals = [(i, j, w[i - 1:j]) for i, j in ivs]
    assert all(word(item) in BadSet(TITICACA.bad) for _, _, item in intervals)
    assert is_cluster(w, intervals)
    assert not is_cluster("SEXESEX", [(1, 3, "SEX"), (4, 6, "ESE"), (5, 7, "SEX")])


def test_cluster_checker_rejects_wrong_labels():
    assert not is_cluster("ABAB", [(1, 2, "AB"), (2, 4, "ABA")])
    assert not is_cluster("AB", [])


# runs -------------------------------------------------------------------

def _runs_table(R, n_max):
    return marker_table(R, n_max, "r")


def test_runs_three_letters_two_runs():
    R = runs_gf("01")
    assert _runs_table(R, 3)[3][2] == 4


def test_constant_words_are_single_runs():
    R = runs_gf("abc")
    table = _runs_table(R, 8)
    assert all(table[n][1] == 3 for n in range(1, 9))


def test_runs_with_bad_words():
    R = runs_gf("01", ["00"])
    assert _runs_table(R, 8) == {n: +c for n, c in brute_runs_table("01", ["00"], 8).items()}


def test_average_runs_binary():
    res = avg_runs("01", (), 8)
    assert res.averages[1:] == [1 + Fraction(n - 1, 2) for n in range(1, 9)]


def test_average_runs_ternary():
    assert avg_runs("abc", (), 4).averages[4] == 3
    assert avg_runs("abc", ["ab"], 3).averages[1] == 1


def test_average_runs_zero_count():
    with pytest.raises(ZeroCount):
        avg_runs("ab", ["a", "b"], 3)
