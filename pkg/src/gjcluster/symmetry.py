"""Orbit reduction of the cluster system under a group acting on letters.

If the bad set is invariant under a group ``G`` acting letterwise, then
``W[g v] = W[v]`` for every ``g``, so one unknown per orbit suffices.  The
equation of an orbit is the equation of its representative with the
``Comp`` terms collected by orbit, and ``weight(C) = sum |O| * W[O]``.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from itertools import permutations, product
from typing import Iterable, Sequence

from .cluster import AVOID, ClusterSystem, Marking, assemble, check_letters
from .errors import NotInvariant, NotReduced, SymbolicAlphabet
from .exact import Polynomial, RationalFunction
from .words import Alphabet, BadSet, Word, as_alphabet, as_badset, correlation, length_weight, overlap_lengths


@dataclass(frozen=True)
class GroupAction:
    """The symmetric group on the letters, or the signed permutations.

    ``kind="sym"`` permutes all letters of ``alphabet``.  ``kind="signed"``
    needs letters closed under negation (``"2"`` and ``"-2"``) and applies
    maps with ``g(-a) = -g(a)``.
    """

    kind: str
    alphabet: tuple[str, ...]

    def __post_init__(self):
        if self.kind not in ("sym", "signed"):
            raise ValueError(f"unknown group kind {self.kind!r}")
        if self.kind == "signed":
            letters = set(self.alphabet)
            for a in self.alphabet:
                if _negate(a) not in letters:
                    raise ValueError(f"letter {a!r} has no negative in the alphabet")

    @classmethod
    def of(cls, kind: str, alphabet) -> "GroupAction":
        return cls(kind, tuple(as_alphabet(alphabet).letters))

    def elements(self) -> list[dict[str, str]]:
        """Every group element as a letter map."""
        if self.kind == "sym":
            return [dict(zip(self.alphabet, p)) for p in permutations(self.alphabet)]
        bases = sorted({a.lstrip("-") for a in self.alphabet}, key=self.alphabet.index)
        out = []
        for perm in permutations(bases):
            for signs in product((1, -1), repeat=len(bases)):
                g = {}
                for b, target, sg in zip(bases, perm, signs):
                    img = target if sg == 1 else _negate(target)
                    g[b] = img
                    g[_negate(b)] = _negate(img)
                out.append(g)
        return out

    def order(self) -> int:
        return len(self.elements())

    def orbit(self, w: Sequence[str]) -> set[Word]:
        return {tuple(g[a] for a in w) for g in self.elements()}


def _negate(a: str) -> str:
    return a[1:] if a.startswith("-") else "-" + a


def _key(alphabet: Sequence[str]):
    rank = {a: i for i, a in enumerate(alphabet)}
    return lambda w: tuple(rank[a] for a in w)


def check_invariance(B, G: GroupAction) -> list[list[Word]]:
    """Orbits of ``B`` (each sorted, representative first), in representative order."""
    B = as_badset(B)
    members = set(B.words)
    key = _key(G.alphabet)
    for w in B:
        stray = set(w) - set(G.alphabet)
        if stray:
            raise NotInvariant(f"letters {sorted(stray)} are outside the group's alphabet")
    elements = G.elements()
    seen: set[Word] = set()
    orbits = []
    for w in sorted(B.words, key=key):
        if w in seen:
            continue
        orb = {tuple(g[a] for a in w) for g in elements}
        escaped = orb - members
        if escaped:
            raise NotInvariant(f"image {sorted(escaped)[0]} of {w} is not a bad word")
        seen |= orb
        orbits.append(sorted(orb, key=key))
    return orbits


def correlation_multiset(v: Sequence[str], B) -> Counter:
    """``{(u : v) : u in B}`` as a multiset of length-mode polynomials."""
    return Counter(correlation(u, v) for u in as_badset(B))


def check_correlations(B, orbits: list[list[Word]]) -> None:
    """Members of one orbit must see the same correlations, orbit by orbit."""
    where = {w: k for k, orb in enumerate(orbits) for w in orb}
    for orb in orbits:
        ref = None
        for v in orb:
            grouped: dict[int, Counter] = {}
            for u in as_badset(B):
                if overlap_lengths(u, v):
                    grouped.setdefault(where[u], Counter())[correlation(u, v)] += 1
            sig = {k: c for k, c in grouped.items()}
            if ref is None:
                ref = sig
            elif sig != ref:
                raise NotInvariant(f"correlations into {v} differ from the rest of its orbit")


def sym_system(B, G: GroupAction, marking: Marking = AVOID, verify: bool = True) -> ClusterSystem:
    """One unknown per orbit; readout weights are the orbit sizes."""
    B = as_badset(B)
    if not B.reduced:
        raise NotReduced("orbit reduction needs a reduced bad set")
    if marking.kind == "perword" or marking.letters:
        raise ValueError("per-word or letter markers break the symmetry")
    orbits = check_invariance(B, G)
    if verify:
        check_correlations(B, orbits)
    where = {w: k for k, orb in enumerate(orbits) for w in orb}
    base, coupling = [], []
    for orb in orbits:
        v = orb[0]
        m = marking.marker(v) - 1
        base.append(m * length_weight(v))
        row: dict[int, Polynomial] = {}
        for u in B:
            if overlap_lengths(u, v):
                k = where[u]
                row[k] = row.get(k, Polynomial()) + m * correlation(u, v)
        coupling.append({k: c for k, c in row.items() if not c.is_zero()})
    return ClusterSystem([orb[0] for orb in orbits], base, coupling, [len(orb) for orb in orbits])


def sym_cluster_weight(alphabet, B, G: GroupAction | str, marking: Marking = AVOID) -> RationalFunction:
    alphabet = as_alphabet(alphabet)
    if alphabet.symbolic:
        raise SymbolicAlphabet("the group acts on concrete letters")
    if isinstance(G, str):
        G = GroupAction.of(G, alphabet)
    check_letters(alphabet, as_badset(B))
    return sym_system(B, G, marking).solve()


def sym_gj_avoid(alphabet, B, G: GroupAction | str = "sym") -> RationalFunction:
    alphabet = as_alphabet(alphabet)
    return assemble(alphabet, sym_cluster_weight(alphabet, B, G, AVOID), AVOID)


def sym_gj_count(alphabet, B, G: GroupAction | str = "sym", t: str = "t") -> RationalFunction:
    alphabet = as_alphabet(alphabet)
    marking = Marking("uniform", t)
    return assemble(alphabet, sym_cluster_weight(alphabet, B, G, marking), marking)
