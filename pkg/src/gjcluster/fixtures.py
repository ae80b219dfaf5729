"""Named example instances shared by the tests and the CLI."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .words import Alphabet, Word, parse_alphabet, word


@dataclass(frozen=True)
class Fixture:
    name: str
    alphabet: Alphabet
    bad: tuple[Word, ...]
    note: str = ""
    expected: dict = field(default_factory=dict)


def _fx(name, alphabet, bad, note="", **expected) -> Fixture:
    a = parse_alphabet(alphabet) if isinstance(alphabet, str) else Alphabet.of(alphabet)
    return Fixture(name, a, tuple(word(b) for b in bad), note, expected)


PIPI_CACA = _fx(
    "pipi-caca", "A..Z", ["PIPI", "CACA"],
    avoid="(1+s^2)/(1-26*s+s^2-26*s^3+2*s^4)",
    cluster="(-2*s^4)/(1+s^2)",
    series=[1, 26, 676, 17576, 456974],
)

FOUR_WORD = _fx(
    "four-word", "A..Z", ["PIPI", "CACA", "PICA", "CAPI"],
    avoid="(1+2*s^2)/(1-26*s+2*s^2-52*s^3+4*s^4)",
)

SEX_XE = _fx("sex-xe", "E,S,X", ["SEX", "XE"], series=[1, 3, 8, 20])

ISOLATED_BOYS = _fx("gbg", "B,G", ["GBG"], note="boys (B) standing alone between two girls")

ISOLATED_BOTH = _fx("gbg-bgb", "B,G", ["GBG", "BGB"])

DREIDEL = _fx("dreidel", "G,H,N,S", ["GGGG", "HHHH", "NNNN", "SSSS"], note="no run of four equal spins")

TITICACA = _fx(
    "titicaca", "A,C,I,T", ["AC", "CA", "CACA", "ICAC", "TICA", "TIT", "TI"],
    reduced=("AC", "CA", "TI"),
    cluster=("TITICACA", ((1, 2), (1, 3), (3, 6), (4, 7), (6, 7), (5, 8), (7, 8))),
)

PI_PIPI = _fx("pi-pipi", "I,P", ["PI", "PIPI"])

CA_CACA = _fx("ca-caca", "A,C", ["CA", "CACA"])

# monochromatic 3-term progressions with difference 1, 2 or 3 in a 2-coloring
BLANKS_3AP = Fixture(
    "blanks-3ap", Alphabet(("0", "1")), (),
    expected={"patterns": ("000", "111", "0B0B0", "1B1B1", "0BB0BB0", "1BB1BB1"), "blank": "B"},
)

PENNEY_HHT_HTT = Fixture(
    "penney-hht-htt", Alphabet(("H", "T")), (word("HHT"), word("HTT")),
    expected={"probs": (Fraction(1, 2), Fraction(1, 2)), "wins": (Fraction(2, 3), Fraction(1, 3))},
)

M2250 = (
    1, 3, 6, 12, 18, 30, 42, 60, 78, 108, 144, 204, 264, 342, 456, 618, 798,
    1044, 1392, 1830, 2388, 3180, 4146, 5418, 7032, 9198, 11892, 15486, 20220,
    26424, 34422, 44862, 58446, 76122, 99276, 129516, 168546, 219516, 285750,
    372204, 484446, 630666, 821154, 1069512, 1392270, 1812876, 2359710, 3072486,
)

ALL = {
    f.name: f
    for f in (
        PIPI_CACA, FOUR_WORD, SEX_XE, ISOLATED_BOYS, ISOLATED_BOTH, DREIDEL,
        TITICACA, PI_PIPI, CA_CACA, BLANKS_3AP, PENNEY_HHT_HTT,
    )
}
