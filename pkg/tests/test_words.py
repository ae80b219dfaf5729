from __future__ import annotations

import random

import pytest

from gjcluster.errors import NotAPrefix
from gjcluster.exact import Polynomial
from gjcluster.oracle import brute_table
from gjcluster.words import (
    Alphabet, BadSet, chop, comp, correlation, count_occurrences, format_word, heads, overlap_lengths,
    overlaps, parse_alphabet, parse_words, reduce_badset, tails, word,
)

s = Polynomial.var("s")


def W(*ws):
    return {word(w) for w in ws}


def test_heads():
    assert heads("JOHN") == W("J", "JO", "JOH")
    assert heads("A") == set()
    assert heads("CACACA") == W("C", "CA", "CAC", "CACA", "CACAC")


def test_tails():
    assert tails("PICACA") == W("A", "CA", "ACA", "CACA", "ICACA")
    assert tails("A") == set()
    assert tails("SEXSEX") == W("X", "EX", "SEX", "XSEX", "EXSEX")


def test_overlaps():
    assert overlaps("PICACA", "CACACA") == W("CA", "CACA")
    assert overlaps("AB", "CD") == set()
    assert overlaps("SEXSEX", "EXSEXS") == W("EX", "EXSEX")


def test_overlaps_are_tails_and_heads():
    rng = random.Random(3)
    for _ in range(200):
        u = "".join(rng.choice("ab") for _ in range(rng.randint(1, 6)))
        v = "".join(rng.choice("ab") for _ in range(rng.randint(1, 6)))
        ov = overlaps(u, v)
        assert ov == tails(u) & heads(v)
        assert all(1 <= len(x) < min(len(u), len(v)) + 1 for x in ov)


def test_chop():
    assert chop("SEXYSEX", "SEX") == word("YSEX")
    assert chop("CACA", "CACA") == ()
    assert chop("CACA", "CA") == word("CA")
    with pytest.raises(NotAPrefix):
        chop("CACA", "AC")


def test_correlation():
    assert correlation("SEXSEX", "EXSEXS") == s + s**4
    assert correlation("AB", "CD") == 0
    assert correlation("CACA", "CACA") == s**2


def test_correlation_degree_bounds():
    rng = random.Random(4)
    for _ in range(200):
        u = "".join(rng.choice("ab") for _ in range(rng.randint(1, 6)))
        v = "".join(rng.choice("ab") for _ in range(rng.randint(1, 6)))
        c = correlation(u, v)
        if overlap_lengths(u, v):
            assert 1 <= c.valuation("s") and c.degree("s") <= len(v) - 1
            assert set(c.terms.values()) == {1}
        else:
            assert c.is_zero()


def test_letter_correlation():
    x = lambda a: Polynomial.var(f"x[{a}]")
    assert correlation("SEXSEX", "EXSEXS", mode="letters") == x("S") + x("E") * x("X") * x("S") ** 2


def test_reduce_badset():
    assert reduce_badset(["SEX", "SEXY"]).words == (word("SEX"),)
    B = BadSet(["AB", "BA"])
    assert reduce_badset(B) == B
    assert reduce_badset(["AC", "CA", "CACA", "ICAC", "TICA", "TIT", "TI"]).words == tuple(
        sorted(word(w) for w in ("AC", "CA", "TI"))
    )


def test_reduction_preserves_avoidance():
    rng = random.Random(5)
    for _ in range(20):
        B = {"".join(rng.choice("ab") for _ in range(rng.randint(1, 4))) for _ in range(3)}
        full = brute_table("ab", B, 8).avoid_counts()
        red = brute_table("ab", reduce_badset(B), 8).avoid_counts()
        assert full == red


def test_reduced_flag_is_computed():
    assert BadSet(["PIPI", "CACA"]).reduced
    assert not BadSet(["PI", "PIPI"]).reduced


def test_comp():
    assert comp("PIPI", ["PIPI", "CACA"]) == W("PIPI")
    assert comp("PIPI", ["PIPI", "CACA", "PICA", "CAPI"]) == W("PIPI", "CAPI")
    assert comp("AB", ["AB", "CD"]) == set()


def test_count_occurrences():
    assert count_occurrences("SEXES", ["SEX", "EXE", "XES"]) == {word(b): 1 for b in ("SEX", "EXE", "XES")}
    assert count_occurrences("TITICACA", ["CA"]) == {word("CA"): 2}
    assert count_occurrences("", ["CA", "T"]) == {word("CA"): 0, word("T"): 0}


def test_count_occurrences_matches_factor_scan():
    rng = random.Random(6)
    B = ["ab", "aba", "b"]
    for _ in range(100):
        w = "".join(rng.choice("ab") for _ in range(rng.randint(0, 9)))
        factors = [w[i:j] for i in range(len(w)) for j in range(i + 1, len(w) + 1)]
        assert sum(count_occurrences(w, B).values()) == sum(1 for f in factors if f in B)


def test_opaque_tokens():
    a = Alphabet.of(["-2", "-1", "1", "2"])
    assert len(a) == 4
    assert overlaps(("-1", "2", "-1"), ("-1", "2")) == {("-1",)}
    assert format_word(("Gimel", "Heh")) == "[Gimel,Heh]"


def test_parsing():
    assert parse_words("[P,I,P,I],[C,A,C,A]") == [word("PIPI"), word("CACA")]
    assert parse_words("[H,H,T]\n[H,T,T]\n") == [word("HHT"), word("HTT")]
    assert parse_alphabet("A..Z").letters[-1] == "Z"
    assert parse_alphabet("{E,S,X}").letters == ("E", "S", "X")
    assert parse_alphabet("0..9").letters[:3] == ("0", "1", "2")
    with pytest.raises(ValueError):
        parse_words("PIPI")
