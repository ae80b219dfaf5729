"""Exact real-root isolation for integer polynomials via Sturm sequences.

Polynomials are dense coefficient lists, lowest degree first.  Points are
Fractions and every sign is decided exactly.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Sequence

from .poly import _dense_exact_div, _trim, dense_gcd, dense_primitive


def derivative(p: Sequence[int]) -> list[int]:
    return [k * p[k] for k in range(1, len(p))]


def squarefree_part(p: Sequence[int]) -> list[int]:
    """``p / gcd(p, p')``, primitive, so every real root is simple."""
    p = _trim(list(p))
    if len(p) <= 2:
        return dense_primitive(p)
    g = dense_gcd(p, derivative(p))
    if len(g) <= 1:
        return dense_primitive(p)
    return dense_primitive(_dense_exact_div(p, g))


def _positive_scale(p: list[Fraction]) -> list[int]:
    """A positive multiple of ``p`` with coprime integer coefficients."""
    den = lcm(*(c.denominator for c in p)) if p else 1
    ints = [int(c * den) for c in p]
    g = 0
    for c in ints:
        g = gcd(g, c)
    return [c // g for c in ints] if g > 1 else ints


def _rem(a: list[int], b: list[int]) -> list[Fraction]:
    r = [Fraction(c) for c in a]
    lb = b[-1]
    db = len(b) - 1
    while len(r) - 1 >= db and r:
        c = r[-1] / lb
        shift = len(r) - 1 - db
        for j in range(db + 1):
            r[shift + j] -= c * b[j]
        r.pop()
        while r and r[-1] == 0:
            r.pop()
    return r


def sturm_chain(p: Sequence[int]) -> list[list[int]]:
    p = _trim(list(p))
    chain = [p, _trim(derivative(p))]
    while len(chain[-1]) > 1:
        r = _rem(chain[-2], chain[-1])
        if not r:
            break
        chain.append(_positive_scale([-c for c in r]))
    return chain


def evaluate(p: Sequence[int], x: Fraction) -> Fraction:
    acc = Fraction(0)
    for c in reversed(p):
        acc = acc * x + c
    return acc


def sign_changes(chain: list[list[int]], x: Fraction) -> int:
    signs = []
    for q in chain:
        v = evaluate(q, x)
        if v:
            signs.append(v > 0)
    return sum(1 for a, b in zip(signs, signs[1:]) if a != b)


def count_roots(chain: list[list[int]], a: Fraction, b: Fraction) -> int:
    """Distinct real roots in ``(a, b]`` (``a`` must not be a root)."""
    return sign_changes(chain, a) - sign_changes(chain, b)


def smallest_root(p: Sequence[int], lo: Fraction, hi: Fraction, tol: Fraction) -> tuple[Fraction, Fraction] | None:
    """Bracket ``(l, h]`` of width ``<= tol`` around the least root in ``(lo, hi]``.

    Returns ``None`` when there is no root there.  ``lo`` must not be a root.
    """
    q = squarefree_part(p)
    chain = sturm_chain(q)
    lo, hi = Fraction(lo), Fraction(hi)
    if evaluate(q, lo) == 0:
        raise ValueError("left end point is a root")
    if count_roots(chain, lo, hi) == 0:
        return None
    while hi - lo > tol:
        mid = (lo + hi) / 2
        if evaluate(q, mid) == 0 and count_roots(chain, lo, mid) == 1:
            return mid, mid
        if count_roots(chain, lo, mid) > 0:
            hi = mid
        else:
            lo = mid
    return lo, hi
