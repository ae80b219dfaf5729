"""Truncated power series in the length variable.

Coefficients are plain ints when no marking variables are involved and
:class:`Polynomial` otherwise; both support ``+`` and ``*`` so the
arithmetic below never needs to care which.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from ..errors import NonInvertibleConstantTerm, NonExactDivision, PoleAtZero
from .poly import Polynomial
from .ratfunc import RationalFunction


def _simplify(c):
    if isinstance(c, Polynomial) and c.is_constant():
        return c.constant_term()
    return c


def _is_zero(c) -> bool:
    return c == 0


@dataclass(frozen=True)
class Series:
    """``c_0 + c_1 s + ... + c_N s^N + O(s^{N+1})``."""

    coeffs: tuple

    def __init__(self, coeffs: Sequence):
        object.__setattr__(self, "coeffs", tuple(_simplify(c) for c in coeffs))
        if not self.coeffs:
            raise ValueError("a series needs at least the constant coefficient")

    @property
    def order(self) -> int:
        return len(self.coeffs) - 1

    def __getitem__(self, i):
        return self.coeffs[i]

    def __len__(self) -> int:
        return len(self.coeffs)

    def __iter__(self):
        return iter(self.coeffs)

    def to_list(self) -> list:
        return list(self.coeffs)

    def truncate(self, n: int) -> "Series":
        return Series(self.coeffs[: n + 1])

    def __add__(self, other: "Series") -> "Series":
        n = min(self.order, other.order)
        return Series([self.coeffs[i] + other.coeffs[i] for i in range(n + 1)])

    def __sub__(self, other: "Series") -> "Series":
        n = min(self.order, other.order)
        return Series([self.coeffs[i] - other.coeffs[i] for i in range(n + 1)])

    def __mul__(self, other: "Series") -> "Series":
        n = min(self.order, other.order)
        a, b = self.coeffs, other.coeffs
        out = []
        for k in range(n + 1):
            acc = 0
            for i in range(k + 1):
                x = a[i]
                if _is_zero(x):
                    continue
                y = b[k - i]
                if _is_zero(y):
                    continue
                acc = acc + x * y
            out.append(acc)
        return Series(out)

    def reciprocal(self) -> "Series":
        c0 = self.coeffs[0]
        if c0 not in (1, -1):
            raise NonInvertibleConstantTerm(f"constant term {c0} is not a unit")
        inv0 = c0  # 1/1 = 1, 1/-1 = -1
        out = [inv0]
        a = self.coeffs
        for k in range(1, self.order + 1):
            acc = 0
            for i in range(1, k + 1):
                if _is_zero(a[i]):
                    continue
                acc = acc + a[i] * out[k - i]
            out.append(-acc * inv0)
        return Series(out)

    def __str__(self) -> str:
        return ", ".join(str(c) for c in self.coeffs)


def series_arith(a: Series, b: Series | None, kind: str) -> Series:
    if kind == "add":
        return a + b
    if kind == "mul":
        return a * b
    if kind == "reciprocal":
        return a.reciprocal()
    raise ValueError(f"unknown series operation {kind!r}")


def _split(p: Polynomial, var: str) -> dict:
    return {k: _simplify(v) for k, v in p.coefficients_in(var).items()}


def series_from_rational(f: RationalFunction | Polynomial, var: str = "s", order: int = 10) -> Series:
    """Maclaurin coefficients of ``f`` in ``var`` up to ``var^order``.

    Runs the linear recurrence given by the denominator.  The denominator's
    constant term (in ``var``) must be a nonzero integer and every division
    by it must be exact.
    """
    f = RationalFunction.coerce(f)
    num = _split(f.num, var)
    den = _split(f.den, var)
    d0 = den.get(0, 0)
    if _is_zero(d0):
        raise PoleAtZero(f"denominator of {f} vanishes at {var}=0")
    if isinstance(d0, Polynomial):
        raise PoleAtZero(f"constant term {d0} of the denominator is not a number")
    den_items = sorted((k, c) for k, c in den.items() if k > 0)
    out = []
    for n in range(order + 1):
        acc = num.get(n, 0)
        for k, c in den_items:
            if k > n:
                break
            acc = acc - c * out[n - k]
        if d0 != 1:
            if isinstance(acc, Polynomial):
                acc = acc.scale_down(d0)
            else:
                q, r = divmod(acc, d0)
                if r:
                    raise NonExactDivision(f"coefficient {n} of {f} is not an integer")
                acc = q
        out.append(_simplify(acc))
    return Series(out)
