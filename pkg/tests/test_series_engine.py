from __future__ import annotations

import random

import pytest

from gjcluster.cluster import Marking, gj_avoid, gj_count
from gjcluster.errors import NoRootInUnitInterval
from gjcluster.exact import series_from_rational
from gjcluster.fixtures import M2250, PI_PIPI, PIPI_CACA, SEX_XE
from gjcluster.general import gjnz_count
from gjcluster.oracle import dfs_avoid_count
from gjcluster.series_engine import (
    SeriesJob, SquareFreeSpec, gj_series, growth_bounds, items_series, squarefree_badset, squarefree_gf,
    squarefree_series,
)
from gjcluster.words import Alphabet, BadSet

from support import relaxation_spectral_radius

ABC = Alphabet(("1", "2", "3"))


def _rational(F, n):
    return list(series_from_rational(F, "s", n))


def test_empty_bad_set():
    assert list(gj_series(SeriesJob("01", (), order=3))) == [1, 2, 4, 8]


def test_known_series():
    assert list(gj_series(SeriesJob(PIPI_CACA.alphabet, PIPI_CACA.bad, order=4))) == PIPI_CACA.expected["series"]
    assert list(gj_series(SeriesJob(SEX_XE.alphabet, SEX_XE.bad, order=3))) == SEX_XE.expected["series"]


def test_matches_the_solved_function():
    cases = [("ESX", ["SEX", "XE"]), ("AC", ["CACA", "ACA"]), ("01", ["0110", "101", "000"])]
    for a, B in cases:
        assert list(gj_series(SeriesJob(a, B, order=12))) == _rational(gj_avoid(a, B), 12)
        counted = gj_series(SeriesJob(a, B, Marking("uniform"), order=10))
        assert list(counted) == _rational(gjnz_count(a, B), 10)


def test_nested_sets_use_the_automaton():
    job = SeriesJob(PI_PIPI.alphabet, PI_PIPI.bad, Marking("uniform"), order=10)
    assert list(gj_series(job)) == _rational(gjnz_count(PI_PIPI.alphabet, PI_PIPI.bad), 10)


def test_random_sets_against_backtracking():
    rng = random.Random(5)
    for _ in range(10):
        B = {"".join(rng.choice("abc") for _ in range(rng.randint(2, 4))) for _ in range(rng.randint(1, 4))}
        assert list(gj_series(SeriesJob("abc", sorted(B), order=10))) == dfs_avoid_count("abc", sorted(B), 10)


def test_items_series():
    from gjcluster.general import marked_items

    items = marked_items(["CA", "CACA"], Marking("uniform"))
    assert list(items_series("AC", items, 9)) == _rational(gjnz_count("AC", ["CA", "CACA"]), 9)


def test_letter_markers_are_rejected():
    with pytest.raises(ValueError):
        SeriesJob("ab", ["ab"], Marking("avoid", letters=True))


def test_squarefree_bad_sets():
    assert BadSet(squarefree_badset(1, 3)).words == BadSet(["11", "22", "33"]).words
    two = squarefree_badset(2, 2, letters="01")
    assert set(two.words) == {tuple("00"), tuple("11"), tuple("0101"), tuple("1010")}
    with pytest.raises(ValueError):
        SquareFreeSpec(0, 3)


def test_memory_one():
    assert list(squarefree_series(1, 3, 4)) == [1, 3, 6, 12, 24]


def test_prefix_of_squarefree_counts():
    for memo in range(1, 8):
        ser = list(squarefree_series(memo, 3, 2 * memo + 1))
        assert ser == list(M2250[:2 * memo + 2])


def test_relaxation_bounds_square_free_counts():
    true = dfs_avoid_count(ABC, n_max=18, squarefree=True)
    for memo in (3, 5, 7):
        relaxed = list(squarefree_series(memo, 3, 18))
        assert all(r >= c for r, c in zip(relaxed, true))
    assert list(squarefree_series(9, 3, 18)) == true


def test_symmetry_does_not_change_counts():
    assert list(squarefree_series(4, 3, 14, symmetry=None)) == list(squarefree_series(4, 3, 14, symmetry="sym"))
    assert squarefree_gf(3, 3, None) == squarefree_gf(3, 3, "sym")


def test_growth_of_small_memories():
    g = growth_bounds(1, 3)
    assert g.lower_bound <= 2.0 <= g.upper_bound
    assert abs(growth_bounds(2, 3).upper_bound - (1 + 5**0.5) / 2) < 1e-8


@pytest.mark.parametrize("memo", [3, 5, 7])
def test_growth_against_transfer_matrix(memo):
    g = growth_bounds(memo, 3)
    assert g.root[1] - g.root[0] <= 1e-9
    assert abs(g.upper_bound - relaxation_spectral_radius(memo, 3)) < 1e-8


def test_memory_seven_growth_value():
    # frozen from the transfer-matrix oracle above
    assert abs(growth_bounds(7, 3).upper_bound - 1.332173096) < 1e-8


def test_no_root_in_unit_interval(monkeypatch):
    from gjcluster import series_engine
    from gjcluster.exact import Polynomial, RationalFunction

    s = Polynomial.var("s")
    monkeypatch.setattr(series_engine, "squarefree_gf", lambda *a, **k: RationalFunction(Polynomial.const(1), 1 - s / 2))
    with pytest.raises(NoRootInUnitInterval):
        growth_bounds(1, 3)


def test_growth_never_below_the_estimated_constant():
    bounds = [growth_bounds(memo, 3).upper_bound for memo in range(1, 12)]
    assert all(b >= 1.302 for b in bounds)
    assert all(x >= y - 1e-12 for x, y in zip(bounds, bounds[1:]))
    assert abs(bounds[-1] - 1.3115386) < 1e-6  # first memory below 1.317
