"""Quotients of integer polynomials.

Normalization always removes the integer content and the common monomial
factor of numerator and denominator, and makes the denominator's leading
coefficient (first rendered term) positive.  A full polynomial gcd is only
taken when both parts live in a single common variable; multivariate
quotients may stay unreduced, which is why equality is decided by
cross-multiplication rather than structurally.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Mapping

from ..errors import ZeroDenominator
from .poly import ONE, ZERO, Polynomial, REGISTRY, dense_gcd


def _as_poly(x) -> Polynomial | None:
    if isinstance(x, Polynomial):
        return x
    if isinstance(x, int):
        return Polynomial.const(x)
    return None


class RationalFunction:
    __slots__ = ("num", "den")
    __hash__ = None  # equality is not structural

    def __init__(self, num, den=1, *, normalize: bool = True):
        if isinstance(num, RationalFunction) or isinstance(den, RationalFunction) or isinstance(
            num, Fraction
        ) or isinstance(den, Fraction):
            q = RationalFunction.coerce(num) / RationalFunction.coerce(den)
            self.num, self.den = q.num, q.den
            return
        n = _as_poly(num)
        d = _as_poly(den)
        if n is None or d is None:
            raise TypeError(f"cannot build a rational function from {num!r}/{den!r}")
        if d.is_zero():
            raise ZeroDenominator(f"zero denominator for numerator {n}")
        if normalize:
            n, d = _normalize(n, d)
        self.num: Polynomial = n
        self.den: Polynomial = d

    @classmethod
    def coerce(cls, x) -> "RationalFunction":
        if isinstance(x, RationalFunction):
            return x
        if isinstance(x, Fraction):
            return cls(Polynomial.const(x.numerator), Polynomial.const(x.denominator))
        p = _as_poly(x)
        if p is None:
            raise TypeError(f"cannot coerce {x!r} to a rational function")
        return cls(p, ONE, normalize=False)

    @classmethod
    def zero(cls) -> "RationalFunction":
        return cls(ZERO, ONE, normalize=False)

    @classmethod
    def one(cls) -> "RationalFunction":
        return cls(ONE, ONE, normalize=False)

    # queries ---------------------------------------------------------
    def is_zero(self) -> bool:
        return self.num.is_zero()

    def is_constant(self) -> bool:
        return self.num.is_constant() and self.den.is_constant()

    def to_fraction(self) -> Fraction:
        if not self.is_constant():
            raise ValueError(f"{self} is not a constant")
        return Fraction(self.num.constant_term(), self.den.constant_term())

    def variables(self) -> set[str]:
        return self.num.variables() | self.den.variables()

    def is_polynomial(self) -> bool:
        return self.den == ONE

    # arithmetic ------------------------------------------------------
    def _other(self, other) -> "RationalFunction | None":
        try:
            return RationalFunction.coerce(other)
        except TypeError:
            return None

    def __add__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        if o.num.is_zero():
            return self
        if self.num.is_zero():
            return o
        if self.den == o.den:
            return RationalFunction(self.num + o.num, self.den)
        return RationalFunction(self.num * o.den + o.num * self.den, self.den * o.den)

    __radd__ = __add__

    def __neg__(self) -> "RationalFunction":
        return RationalFunction(-self.num, self.den, normalize=False)

    def __sub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return RationalFunction(self.num * o.num, self.den * o.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        if o.num.is_zero():
            raise ZeroDenominator("division by zero rational function")
        return RationalFunction(self.num * o.den, self.den * o.num)

    def __rtruediv__(self, other):
        o = self._other(other)
        if o is None:
            return NotImplemented
        return o / self

    def __pow__(self, n: int) -> "RationalFunction":
        if n >= 0:
            return RationalFunction(self.num**n, self.den**n)
        return RationalFunction(self.den ** (-n), self.num ** (-n))

    def __eq__(self, other) -> bool:
        o = self._other(other)
        if o is None:
            return NotImplemented
        return self.num * o.den == o.num * self.den

    def subs(self, mapping: Mapping[str, object]) -> "RationalFunction":
        n = self.num.subs(mapping)
        d = self.den.subs(mapping)
        return RationalFunction.coerce(n) / RationalFunction.coerce(d)

    def evaluate(self, values: Mapping[str, object]) -> Fraction:
        return self.subs(values).to_fraction()

    # rendering -------------------------------------------------------
    def __str__(self) -> str:
        return f"({self.num})/({self.den})"

    def __repr__(self) -> str:
        return f"RationalFunction({self})"

    def to_json(self) -> dict:
        return {"numerator": self.num.to_json(), "denominator": self.den.to_json(), "text": str(self)}

    @classmethod
    def from_json(cls, data: dict) -> "RationalFunction":
        return cls(Polynomial.from_json(data["numerator"]), Polynomial.from_json(data["denominator"]))


def _normalize(n: Polynomial, d: Polynomial) -> tuple[Polynomial, Polynomial]:
    if n.is_zero():
        return ZERO, ONE
    # common monomial factor
    mn = n.monomial_content()
    md = d.monomial_content()
    if mn and md:
        dn, dd = dict(mn), dict(md)
        common = tuple(sorted((i, min(e, dd[i])) for i, e in dn.items() if i in dd))
        if common:
            n = n.mono_divide(common)
            d = d.mono_divide(common)
    # univariate gcd
    idx = n._var_indices() | d._var_indices()
    if len(idx) == 1 and not n.is_constant() and not d.is_constant():
        v = REGISTRY.name(next(iter(idx)))
        g = dense_gcd(n.dense(v), d.dense(v))
        if len(g) > 1:
            gp = Polynomial.from_dense(g, v)
            n = n.exact_div(gp)
            d = d.exact_div(gp)
    # integer content
    g = gcd(n.content(), d.content())
    if d.leading_coefficient() < 0:
        g = -g
    if g != 1:
        n = n.scale_down(g)
        d = d.scale_down(g)
    return n, d


def rat_normalize(num: Polynomial, den: Polynomial) -> RationalFunction:
    """Build the canonical quotient ``num/den``."""
    return RationalFunction(num, den)
