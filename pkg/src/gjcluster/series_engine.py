"""Order-by-order series expansion of cluster systems, and square-free words.

``gj_series`` never solves a linear system.  It fills in the coefficient
of ``s^n`` of every unknown from the coefficients of lower order, which is
enough because a transition either adds letters (raising the order) or,
in the nested automaton, adds none but moves to a state that is strictly
later in a fixed finite order.  Within one order the zero-order part is
therefore resolved by a short repeat-until-stable loop.

The square-free application bans ``uu`` for ``|u| <= MEMO``.  That is a
relaxation of square-freeness, so its counts bound the true ones from
above and agree with them for lengths up to ``2 * MEMO + 1``; its growth
rate bounds the growth rate of square-free words from above.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from itertools import product
from typing import Sequence

from .cluster import AVOID, ClusterSystem, Marking, basic_system, check_letters, letters_term
from .errors import NoRootInUnitInterval
from .exact import ONE, Polynomial, RationalFunction, Series
from .exact.roots import smallest_root
from .general import build_automaton, marked_items
from .symmetry import GroupAction, sym_system
from .words import Alphabet, BadSet, as_alphabet, as_badset, reduce_badset


@dataclass
class SeriesJob:
    """What to expand: alphabet, bad words, marking and truncation order."""

    alphabet: Alphabet | Sequence[str] | str
    bad: BadSet | Sequence = ()
    marking: Marking = AVOID
    order: int = 10
    symmetry: str | None = None

    def __post_init__(self):
        if self.order < 0:
            raise ValueError("the truncation order must be non-negative")
        self.alphabet = as_alphabet(self.alphabet)
        self.bad = as_badset(self.bad)
        if self.marking.letters:
            raise ValueError("series are taken in the length variable; letter markers are not supported")


def _split(p, var: str = "s") -> dict[int, object]:
    if not isinstance(p, Polynomial):
        return {0: p} if p else {}
    out = {}
    for k, c in p.coefficients_in(var).items():
        out[k] = c.constant_term() if c.is_constant() else c
    return out


def system_series(system: ClusterSystem, order: int) -> Series:
    """``weight(C)`` of a cluster system up to ``s^order``."""
    n = len(system)
    base = [_split(b) for b in system.base]
    readout = [_split(r) for r in system.readout]
    # split couplings into the zero-order part and the rest
    zero: list[list[tuple[int, object]]] = [[] for _ in range(n)]
    pos: list[list[tuple[int, int, object]]] = [[] for _ in range(n)]
    for i, row in enumerate(system.coupling):
        for j, c in row.items():
            for k, v in _split(c).items():
                if k == 0:
                    zero[i].append((j, v))
                else:
                    pos[i].append((j, k, v))
    W: list[list[object]] = [[] for _ in range(n)]
    for m in range(order + 1):
        fixed = []
        for i in range(n):
            acc = base[i].get(m, 0)
            for j, k, v in pos[i]:
                if k <= m:
                    w = W[j][m - k]
                    if w != 0:
                        acc = acc + v * w
            fixed.append(acc)
        cur = list(fixed)
        for _ in range(n + 1):
            new = []
            for i in range(n):
                acc = fixed[i]
                for j, v in zero[i]:
                    if cur[j] != 0:
                        acc = acc + v * cur[j]
                new.append(acc)
            if new == cur:
                break
            cur = new
        else:
            raise ArithmeticError("zero-order transitions do not settle; the system has a cycle without letters")
        for i in range(n):
            W[i].append(cur[i])
    total = []
    for m in range(order + 1):
        acc = 0
        for i in range(n):
            for k, v in readout[i].items():
                if k <= m and W[i][m - k] != 0:
                    acc = acc + v * W[i][m - k]
        total.append(acc)
    return Series(total)


def job_system(job: SeriesJob) -> ClusterSystem:
    B = job.bad
    if job.marking.kind == "avoid" and not B.reduced:
        B = reduce_badset(B)
    if B.reduced:
        if job.symmetry and job.symmetry != "none":
            return sym_system(B, GroupAction.of(job.symmetry, job.alphabet), job.marking)
        return basic_system(B, job.marking)
    return build_automaton(marked_items(B, job.marking)).lumped_system()


def gj_series(job: SeriesJob) -> Series:
    """The first ``order + 1`` coefficients of ``1 / (1 - d*s - weight(C))``."""
    check_letters(job.alphabet, job.bad)
    N = job.order
    C = system_series(job_system(job), N) if len(job.bad) else Series([0] * (N + 1))
    return _finish(job.alphabet, job.marking, C, N)


def _finish(alphabet: Alphabet, marking: Marking, C: Series, N: int) -> Series:
    lt = _split(letters_term(alphabet, marking))
    denom = [(1 if m == 0 else 0) - lt.get(m, 0) - C[m] for m in range(N + 1)]
    return Series(denom).reciprocal()


def items_series(alphabet, items, order: int) -> Series:
    """Series of ``gf_from_items(alphabet, items)`` without solving anything."""
    alphabet = as_alphabet(alphabet)
    items = list(items)
    check_letters(alphabet, [w for w, _ in items])
    if items:
        C = system_series(build_automaton(items).lumped_system(), order)
    else:
        C = Series([0] * (order + 1))
    return _finish(alphabet, AVOID, C, order)


# square-free words ---------------------------------------------------------

def _has_square(w: Sequence[str]) -> bool:
    n = len(w)
    return any(w[i:i + k] == w[i + k:i + 2 * k] for k in range(1, n // 2 + 1) for i in range(n - 2 * k + 1))


def squarefree_letters(dim: int) -> tuple[str, ...]:
    return tuple(str(i) for i in range(1, dim + 1))


def squarefree_badset(memo: int, dim: int, letters: Sequence[str] | None = None) -> BadSet:
    """Reduced set of squares ``uu`` with ``1 <= |u| <= memo`` over ``dim`` letters."""
    if memo < 1 or dim < 2:
        raise ValueError("need MEMO >= 1 and DIM >= 2")
    letters = tuple(letters) if letters is not None else squarefree_letters(dim)
    if len(letters) != dim:
        raise ValueError("need exactly DIM letters")
    words = []
    for k in range(1, memo + 1):
        for u in product(letters, repeat=k):
            if not _has_square(u):  # a square inside u makes uu superfluous
                words.append(u + u)
    return reduce_badset(words)


@dataclass
class SquareFreeSpec:
    memo: int
    dim: int
    nuterms: int = 20
    letters: tuple[str, ...] = field(default=())

    def __post_init__(self):
        if self.memo < 1 or self.dim < 2 or self.nuterms < 0:
            raise ValueError("need MEMO >= 1, DIM >= 2 and NUTERMS >= 0")
        if not self.letters:
            self.letters = squarefree_letters(self.dim)

    def job(self, symmetry: str | None = "auto") -> SeriesJob:
        if symmetry == "auto":
            symmetry = "sym" if self.dim >= 3 else None
        B = squarefree_badset(self.memo, self.dim, self.letters)
        return SeriesJob(Alphabet(self.letters), B, AVOID, self.nuterms, symmetry)


def squarefree_series(memo: int, dim: int, nuterms: int, symmetry: str | None = "auto") -> Series:
    """Counts of words avoiding every ``uu`` with ``|u| <= memo``, lengths ``0..nuterms``."""
    return gj_series(SquareFreeSpec(memo, dim, nuterms).job(symmetry))


def squarefree_gf(memo: int, dim: int, symmetry: str | None = "auto") -> RationalFunction:
    """The rational generating function of the memory-``memo`` relaxation."""
    from .cluster import assemble

    job = SquareFreeSpec(memo, dim, 0).job(symmetry)
    return assemble(job.alphabet, job_system(job).solve(), AVOID)


@dataclass
class GrowthBounds:
    """Growth rate of a memory-limited relaxation, and ratio estimates.

    ``root`` brackets the least positive pole ``R`` of the generating
    function: ``root[0] < R <= root[1]``.  The relaxed language grows like
    ``(1/R)^n``, so ``upper_bound = 1/root[0]`` is a rigorous upper bound
    for its growth rate and hence for the growth of square-free words.
    ``ratios`` are plain ``a(n+1)/a(n)`` estimates and prove nothing.
    """

    memo: int
    dim: int
    root: tuple[Fraction, Fraction]
    upper_bound: float
    lower_bound: float
    ratios: list[tuple[int, float]]

    def __str__(self) -> str:
        lines = [
            f"growth rate of the MEMO={self.memo}, DIM={self.dim} relaxation: "
            f"{self.lower_bound:.9f} <= mu_relaxed <= {self.upper_bound:.9f} (rigorous)",
            "ratio estimates a(n+1)/a(n) (not rigorous):",
        ]
        lines += [f"  n={n}: {r:.9f}" for n, r in self.ratios]
        return "\n".join(lines)


def growth_bounds(memo: int, dim: int, tol: Fraction = Fraction(1, 10**9), nuterms: int | None = None,
                  symmetry: str | None = "auto") -> GrowthBounds:
    """Bound the growth rate via the least positive root of the denominator.

    The counts are non-negative, so by Pringsheim's theorem the radius of
    convergence ``R`` is itself a pole; with the quotient fully reduced it is
    the least positive root of the denominator, isolated by Sturm sequences
    and exact bisection.
    """
    f = squarefree_gf(memo, dim, symmetry)
    q = f.den.dense("s")
    bracket = smallest_root(q, Fraction(0), Fraction(1), Fraction(tol))
    if bracket is None:
        raise NoRootInUnitInterval(f"denominator {f.den} has no root in (0, 1]")
    lo, hi = bracket
    upper = float(1 / lo) if lo > 0 else float("inf")
    lower = float(1 / hi)
    if nuterms is None:
        nuterms = 2 * (memo + 1) + 10
    ser = squarefree_series(memo, dim, nuterms, symmetry)
    ratios = [(n, ser[n + 1] / ser[n]) for n in range(1, nuterms) if ser[n]]
    return GrowthBounds(memo, dim, (lo, hi), upper, lower, ratios)
