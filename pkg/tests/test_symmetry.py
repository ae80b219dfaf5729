from __future__ import annotations

from gjcluster.cluster import cluster_weight, gj_avoid, gj_count
from gjcluster.errors import NotInvariant, NotReduced
from gjcluster.series_engine import squarefree_badset
from gjcluster.symmetry import (
    GroupAction, check_invariance, correlation_multiset, sym_cluster_weight, sym_gj_avoid, sym_gj_count, sym_system,
)
from gjcluster.words import Alphabet, BadSet, parse_alphabet

import pytest

ABC = Alphabet(("1", "2", "3"))


def test_group_orders():
    assert GroupAction.of("sym", ABC).order() == 6
    assert GroupAction.of("signed", parse_alphabet("-2,-1,1,2")).order() == 8


def test_signed_needs_negatives():
    with pytest.raises(ValueError):
        GroupAction.of("signed", parse_alphabet("1,2"))


def test_repeated_letters():
    B = ["11", "22", "33"]
    assert sym_gj_avoid(ABC, B) == gj_avoid(ABC, B)
    assert len(check_invariance(B, GroupAction.of("sym", ABC))) == 1


def test_pair_over_two_letters():
    a = Alphabet(("1", "2"))
    assert sym_gj_avoid(a, ["11", "22"]) == gj_avoid(a, ["11", "22"])
    assert sym_gj_count(a, ["11", "22"]) == gj_count(a, ["11", "22"])


def test_squarefree_relaxation_orbits():
    B = squarefree_badset(2, 3)
    G = GroupAction.of("sym", ABC)
    orbits = check_invariance(B, G)
    assert [o[0] for o in orbits] == [("1", "1"), ("1", "2", "1", "2")]
    assert sum(len(o) for o in orbits) == len(B)
    assert sym_system(B, G).readout == [3, 6]
    assert sym_gj_avoid(ABC, B) == gj_avoid(ABC, B)


def test_squarefree_memo_three_counted():
    B = squarefree_badset(3, 3)
    assert sym_gj_count(ABC, B) == gj_count(ABC, B)


def test_signed_action():
    a = parse_alphabet("-1,1")
    B = [("1", "1"), ("-1", "-1"), ("1", "-1", "1")]
    with pytest.raises(NotInvariant):
        check_invariance(B, GroupAction.of("signed", a))
    B = B + [("-1", "1", "-1")]
    assert sym_cluster_weight(a, B, "signed") == cluster_weight(a, B)
    assert sym_gj_avoid(a, B, "signed") == gj_avoid(a, B)


def test_signed_action_on_four_letters():
    a = parse_alphabet("-2,-1,1,2")
    G = GroupAction.of("signed", a)
    B = sorted(G.orbit(("1", "1")) | G.orbit(("1", "2", "1")))
    assert len(check_invariance(B, G)) == 2
    assert sym_gj_avoid(a, B, G) == gj_avoid(a, B)


def test_non_invariant_set_is_rejected():
    with pytest.raises(NotInvariant):
        sym_gj_avoid(ABC, ["11", "22"])


def test_unreduced_set_is_rejected():
    with pytest.raises(NotReduced):
        sym_system(BadSet(["11", "22", "33", "111", "222", "333"]), GroupAction.of("sym", ABC))


def test_correlations_are_invariant_on_orbits():
    B = squarefree_badset(3, 3)
    G = GroupAction.of("sym", ABC)
    for orb in check_invariance(B, G):
        first = correlation_multiset(orb[0], B)
        assert all(correlation_multiset(v, B) == first for v in orb)


def test_per_word_markers_are_rejected():
    from gjcluster.cluster import Marking

    with pytest.raises(ValueError):
        sym_system(BadSet(["11", "22", "33"]), GroupAction.of("sym", ABC), Marking("perword"))
