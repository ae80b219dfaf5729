"""Sparse multivariate polynomials with arbitrary-precision integer coefficients.

A polynomial is an immutable mapping ``monomial -> int``.  A monomial is a
tuple of ``(variable index, exponent)`` pairs sorted by index, exponents
positive; the empty tuple is the constant monomial.  Variable indices come
from a process-wide :class:`VarRegistry` that hands them out in first-seen
order, so printed output is deterministic for a given sequence of calls.

Rendering lists terms by ascending total degree; inside one degree the
variable with the lower registry index comes first with its higher power
first (``s^2``, ``s*t``, ``t^2``).  That ordering doubles as the "term
order" of the library: the *leading* coefficient of a polynomial is the
coefficient of its first rendered term.
"""
from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Dict, Iterable, Mapping, Tuple, Union

from ..errors import NonExactDivision
from .kron import kron_exact_div, kron_mul

Monomial = Tuple[Tuple[int, int], ...]


class VarRegistry:
    """Bijection between variable names and small integer indices."""

    def __init__(self, names: Iterable[str] = ()):
        self._names: list[str] = []
        self._index: Dict[str, int] = {}
        for name in names:
            self.index(name)

    def index(self, name: str) -> int:
        idx = self._index.get(name)
        if idx is None:
            idx = len(self._names)
            self._names.append(name)
            self._index[name] = idx
        return idx

    def name(self, idx: int) -> str:
        return self._names[idx]

    def __len__(self) -> int:
        return len(self._names)


# the length variable and the default marker get the first two slots
REGISTRY = VarRegistry(["s", "t"])


def _mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    if len(a) == 1 and len(b) == 1 and a[0][0] == b[0][0]:
        return ((a[0][0], a[0][1] + b[0][1]),)
    d = dict(a)
    for i, e in b:
        d[i] = d.get(i, 0) + e
    return tuple(sorted(d.items()))


def _mono_div(a: Monomial, b: Monomial) -> Monomial | None:
    """Return a/b if b divides a, else None."""
    if not b:
        return a
    d = dict(a)
    for i, e in b:
        have = d.get(i, 0)
        if have < e:
            return None
        if have == e:
            del d[i]
        else:
            d[i] = have - e
    return tuple(sorted(d.items()))


def _mono_deg(m: Monomial) -> int:
    return sum(e for _, e in m)


def _grlex_key(m: Monomial):
    # graded lex on (index 0 highest); a genuine monomial order, used for division
    return (_mono_deg(m), tuple((-i, e) for i, e in m))


def _render_key(m: Monomial):
    return (_mono_deg(m), tuple((i, -e) for i, e in m))


Coeff = Union[int, "Polynomial"]

# term-pair count above which products go through Kronecker packing
_KRON_MUL_MIN = 64


class Polynomial:
    """Immutable sparse polynomial over the integers."""

    __slots__ = ("terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, int] | None = None, *, _trusted: bool = False):
        if terms is None:
            self.terms: Dict[Monomial, int] = {}
        elif _trusted:
            self.terms = terms  # type: ignore[assignment]
        else:
            self.terms = {m: int(c) for m, c in terms.items() if c}
        self._hash = None

    # construction ---------------------------------------------------
    @classmethod
    def const(cls, c: int) -> "Polynomial":
        c = int(c)
        return cls({(): c}, _trusted=True) if c else cls()

    @classmethod
    def var(cls, name: str, power: int = 1) -> "Polynomial":
        if power == 0:
            return cls.const(1)
        return cls({((REGISTRY.index(name), power),): 1}, _trusted=True)

    @classmethod
    def from_dense(cls, coeffs: Iterable[int], var: str = "s") -> "Polynomial":
        """Build ``sum c_i var^i`` from a low-to-high coefficient list."""
        idx = REGISTRY.index(var)
        terms = {}
        for i, c in enumerate(coeffs):
            if c:
                terms[((idx, i),) if i else ()] = int(c)
        return cls(terms, _trusted=True)

    # basic queries -------------------------------------------------
    def __bool__(self) -> bool:
        return bool(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def is_constant(self) -> bool:
        return not self.terms or (len(self.terms) == 1 and () in self.terms)

    def constant_term(self) -> int:
        return self.terms.get((), 0)

    def variables(self) -> set[str]:
        return {REGISTRY.name(i) for m in self.terms for i, _ in m}

    def _var_indices(self) -> set[int]:
        return {i for m in self.terms for i, _ in m}

    def degree(self, var: str | None = None) -> int:
        """Total degree, or degree in ``var``; -1 for the zero polynomial."""
        if not self.terms:
            return -1
        if var is None:
            return max(_mono_deg(m) for m in self.terms)
        idx = REGISTRY.index(var)
        return max((dict(m).get(idx, 0) for m in self.terms), default=0)

    def valuation(self, var: str) -> int:
        """Lowest power of ``var`` present (0 for constants); -1 for zero."""
        if not self.terms:
            return -1
        idx = REGISTRY.index(var)
        return min(dict(m).get(idx, 0) for m in self.terms)

    def sorted_terms(self) -> list[tuple[Monomial, int]]:
        return sorted(self.terms.items(), key=lambda kv: _render_key(kv[0]))

    def leading_coefficient(self) -> int:
        """Coefficient of the first term in rendering order (lowest degree)."""
        if not self.terms:
            return 0
        return self.terms[min(self.terms, key=_render_key)]

    def content(self) -> int:
        g = 0
        for c in self.terms.values():
            g = gcd(g, c)
            if g == 1:
                break
        return g

    def monomial_content(self) -> Monomial:
        """Largest monomial dividing every term."""
        it = iter(self.terms)
        try:
            first = dict(next(it))
        except StopIteration:
            return ()
        for m in it:
            dm = dict(m)
            for i in list(first):
                e = min(first[i], dm.get(i, 0))
                if e:
                    first[i] = e
                else:
                    del first[i]
            if not first:
                break
        return tuple(sorted(first.items()))

    def coefficients_in(self, var: str) -> Dict[int, "Polynomial"]:
        """Split as ``sum_k P_k * var^k``; returns ``{k: P_k}``."""
        idx = REGISTRY.index(var)
        out: Dict[int, Dict[Monomial, int]] = {}
        for m, c in self.terms.items():
            k = 0
            rest = []
            for i, e in m:
                if i == idx:
                    k = e
                else:
                    rest.append((i, e))
            out.setdefault(k, {})[tuple(rest)] = c
        return {k: Polynomial(v, _trusted=True) for k, v in out.items()}

    def dense(self, var: str = "s") -> list[int]:
        """Low-to-high integer coefficients of a polynomial in ``var`` alone."""
        idx = REGISTRY.index(var)
        if not self.terms:
            return []
        deg = 0
        for m in self.terms:
            if m and (len(m) > 1 or m[0][0] != idx):
                raise ValueError(f"{self} is not univariate in {var}")
            if m:
                deg = max(deg, m[0][1])
        out = [0] * (deg + 1)
        for m, c in self.terms.items():
            out[m[0][1] if m else 0] = c
        return out

    # arithmetic -----------------------------------------------------
    @staticmethod
    def _coerce(other) -> "Polynomial | None":
        if isinstance(other, Polynomial):
            return other
        if isinstance(other, int):
            return Polynomial.const(other)
        if isinstance(other, Fraction) and other.denominator == 1:
            return Polynomial.const(other.numerator)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not o.terms:
            return self
        if not self.terms:
            return o
        out = dict(self.terms)
        for m, c in o.terms.items():
            v = out.get(m, 0) + c
            if v:
                out[m] = v
            else:
                out.pop(m, None)
        return Polynomial(out, _trusted=True)

    __radd__ = __add__

    def __neg__(self) -> "Polynomial":
        return Polynomial({m: -c for m, c in self.terms.items()}, _trusted=True)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o + (-self)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not self.terms or not o.terms:
            return Polynomial()
        if len(o.terms) == 1 and () in o.terms:
            k = o.terms[()]
            return Polynomial({m: c * k for m, c in self.terms.items()}, _trusted=True)
        if len(self.terms) == 1 and () in self.terms:
            k = self.terms[()]
            return Polynomial({m: c * k for m, c in o.terms.items()}, _trusted=True)
        if len(self.terms) * len(o.terms) > _KRON_MUL_MIN:
            return Polynomial(kron_mul(self.terms, o.terms), _trusted=True)
        out: Dict[Monomial, int] = {}
        get = out.get
        for ma, ca in self.terms.items():
            for mb, cb in o.terms.items():
                m = _mono_mul(ma, mb)
                out[m] = get(m, 0) + ca * cb
        return Polynomial({m: c for m, c in out.items() if c}, _trusted=True)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Polynomial":
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result = Polynomial.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def __truediv__(self, other):
        from .ratfunc import RationalFunction

        return RationalFunction(self, other)

    def __rtruediv__(self, other):
        from .ratfunc import RationalFunction

        return RationalFunction(other, self)

    def scale_down(self, k: int) -> "Polynomial":
        """Divide every coefficient by the integer ``k`` (must be exact)."""
        out = {}
        for m, c in self.terms.items():
            q, r = divmod(c, k)
            if r:
                raise NonExactDivision(f"{self} not divisible by {k}")
            out[m] = q
        return Polynomial(out, _trusted=True)

    def mono_divide(self, mono: Monomial) -> "Polynomial":
        if not mono:
            return self
        out = {}
        for m, c in self.terms.items():
            q = _mono_div(m, mono)
            if q is None:
                raise NonExactDivision(f"{self} not divisible by monomial")
            out[q] = c
        return Polynomial(out, _trusted=True)

    def exact_div(self, other: "Polynomial | int") -> "Polynomial":
        """Quotient ``q`` with ``q * other == self``; raise NonExactDivision otherwise."""
        o = self._coerce(other)
        if o is None or not o.terms:
            raise NonExactDivision("division by zero polynomial")
        if not self.terms:
            return Polynomial()
        if o.is_constant():
            return self.scale_down(o.terms[()])
        if len(o.terms) == 1:
            (m, c), = o.terms.items()
            return self.scale_down(c).mono_divide(m) if c != 1 else self.mono_divide(m)
        uni = self._univariate_pair(o)
        if uni is not None:
            q = _dense_exact_div(self.dense(uni), o.dense(uni))
            return Polynomial.from_dense(q, uni)
        return _multivariate_exact_div(self, o)

    def _univariate_pair(self, other: "Polynomial") -> str | None:
        idx = self._var_indices() | other._var_indices()
        if len(idx) == 1:
            return REGISTRY.name(next(iter(idx)))
        return None

    # comparison -----------------------------------------------------
    def __eq__(self, other) -> bool:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.terms == o.terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self.terms.items()))
        return self._hash

    # evaluation -----------------------------------------------------
    def subs(self, mapping: Mapping[str, object]):
        """Substitute values for variables.

        Values may be ints, Fractions, Polynomials or RationalFunctions.  The
        result is a Polynomial when every substituted value is polynomial,
        otherwise a RationalFunction.
        """
        from .ratfunc import RationalFunction

        idx_map = {REGISTRY.index(k): v for k, v in mapping.items()}
        if not any(i in idx_map for m in self.terms for i, _ in m):
            return self
        rational = any(
            isinstance(v, RationalFunction) or (isinstance(v, Fraction) and v.denominator != 1)
            for v in idx_map.values()
        )
        powers: Dict[Tuple[int, int], object] = {}

        def power(i: int, e: int):
            key = (i, e)
            if key not in powers:
                v = idx_map[i]
                if isinstance(v, Fraction) and not rational:
                    v = v.numerator
                if isinstance(v, Fraction):
                    v = RationalFunction(Polynomial.const(v.numerator), Polynomial.const(v.denominator))
                elif isinstance(v, int):
                    v = Polynomial.const(v)
                powers[key] = v**e
            return powers[key]

        acc = RationalFunction.zero() if rational else Polynomial()
        # group by the untouched part to keep the number of rational additions low
        groups: Dict[Monomial, list] = {}
        for m, c in self.terms.items():
            kept = tuple((i, e) for i, e in m if i not in idx_map)
            hit = tuple((i, e) for i, e in m if i in idx_map)
            groups.setdefault(kept, []).append((hit, c))
        for kept, parts in groups.items():
            inner = RationalFunction.zero() if rational else Polynomial()
            for hit, c in parts:
                term = Polynomial.const(c)
                for i, e in hit:
                    term = term * power(i, e)
                inner = inner + term
            acc = acc + inner * Polynomial({kept: 1}, _trusted=True)
        return acc

    def evaluate(self, values: Mapping[str, object]):
        """Substitute numbers for every variable and return a Fraction."""
        res = self.subs(values)
        from .ratfunc import RationalFunction

        if isinstance(res, RationalFunction):
            if not (res.num.is_constant() and res.den.is_constant()):
                raise ValueError("not all variables were given values")
            return Fraction(res.num.constant_term(), res.den.constant_term())
        if not res.is_constant():
            raise ValueError("not all variables were given values")
        return Fraction(res.constant_term())

    # rendering ------------------------------------------------------
    def __str__(self) -> str:
        if not self.terms:
            return "0"
        parts = []
        for m, c in self.sorted_terms():
            factors = [REGISTRY.name(i) if e == 1 else f"{REGISTRY.name(i)}^{e}" for i, e in m]
            if not factors:
                body = str(abs(c))
            elif abs(c) == 1:
                body = "*".join(factors)
            else:
                body = str(abs(c)) + "*" + "*".join(factors)
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            out += sign + body
        return out

    def __repr__(self) -> str:
        return f"Polynomial({self})"

    def to_json(self) -> list[dict]:
        return [
            {"coeff": str(c), "exponents": {REGISTRY.name(i): e for i, e in m}}
            for m, c in self.sorted_terms()
        ]

    @classmethod
    def from_json(cls, data: list[dict]) -> "Polynomial":
        terms = {}
        for term in data:
            m = tuple(sorted((REGISTRY.index(k), int(e)) for k, e in term["exponents"].items()))
            terms[m] = int(term["coeff"])
        return cls(terms)


def var(name: str) -> Polynomial:
    return Polynomial.var(name)


def const(c: int) -> Polynomial:
    return Polynomial.const(c)


ZERO = Polynomial()
ONE = Polynomial.const(1)


# dense univariate helpers --------------------------------------------------

def _trim(a: list[int]) -> list[int]:
    while a and a[-1] == 0:
        a.pop()
    return a


def _dense_exact_div(a: list[int], b: list[int]) -> list[int]:
    a = _trim(list(a))
    b = _trim(list(b))
    if not b:
        raise NonExactDivision("division by zero polynomial")
    if not a:
        return []
    db = len(b) - 1
    lb = b[-1]
    if len(a) < len(b):
        raise NonExactDivision("degree of divisor exceeds dividend")
    q = [0] * (len(a) - db)
    r = a
    for k in range(len(q) - 1, -1, -1):
        c = r[k + db]
        if c:
            qc, rem = divmod(c, lb)
            if rem:
                raise NonExactDivision("non-integral quotient coefficient")
            q[k] = qc
            for j in range(db + 1):
                r[k + j] -= qc * b[j]
    if any(r[:db]):
        raise NonExactDivision("nonzero remainder")
    return q


def _multivariate_exact_div(a: Polynomial, b: Polynomial) -> Polynomial:
    try:
        q = kron_exact_div(a.terms, b.terms)
    except OverflowError:
        return _sparse_exact_div(a, b)
    if q is None:
        raise NonExactDivision(f"{a} is not divisible by {b}")
    return Polynomial(q, _trusted=True)


def _sparse_exact_div(a: Polynomial, b: Polynomial) -> Polynomial:
    lead_m = max(b.terms, key=_grlex_key)
    lead_c = b.terms[lead_m]
    rem = dict(a.terms)
    quot: Dict[Monomial, int] = {}
    b_items = list(b.terms.items())
    while rem:
        m = max(rem, key=_grlex_key)
        c = rem[m]
        qm = _mono_div(m, lead_m)
        if qm is None or c % lead_c:
            raise NonExactDivision(f"{a} is not divisible by {b}")
        qc = c // lead_c
        quot[qm] = qc
        for bm, bc in b_items:
            mm = _mono_mul(qm, bm)
            v = rem.get(mm, 0) - qc * bc
            if v:
                rem[mm] = v
            else:
                rem.pop(mm, None)
    return Polynomial(quot, _trusted=True)


def dense_primitive(a: list[int]) -> list[int]:
    g = 0
    for c in a:
        g = gcd(g, c)
    if g > 1:
        return [c // g for c in a]
    return list(a)


def dense_gcd(a: list[int], b: list[int]) -> list[int]:
    """Primitive gcd over Z[x] of dense low-to-high coefficient lists."""
    a = _trim(dense_primitive(a))
    b = _trim(dense_primitive(b))
    if len(a) < len(b):
        a, b = b, a
    while b:
        # pseudo-remainder of a by b
        r = list(a)
        lb = b[-1]
        db = len(b) - 1
        while len(r) - 1 >= db and r:
            c = r[-1]
            shift = len(r) - 1 - db
            r = [x * lb for x in r]
            for j in range(db + 1):
                r[shift + j] -= c * b[j]
            _trim(r)
        a, b = b, _trim(dense_primitive(r))
    if a and a[-1] < 0:
        a = [-c for c in a]
    return a
