"""Kronecker substitution: multivariate products and exact quotients via big
integers.

A polynomial whose exponents fit a mixed radix ``strides`` and whose
coefficients are below ``2**(k-1)`` in absolute value is packed into one
integer by sending variable ``v`` to ``2**(k * stride_v)``.  Packing is a
ring homomorphism, so products and exact quotients can be taken on the
packed integers and unpacked again, letting CPython's big-integer routines
do the inner loops.
"""
from __future__ import annotations

from functools import lru_cache
from typing import Dict, Tuple

try:  # GMP division is subquadratic; CPython's is not
    from gmpy2 import mpz
except ImportError:  # pragma: no cover
    mpz = None

Monomial = Tuple[Tuple[int, int], ...]
Terms = Dict[Monomial, int]


def _degrees(terms: Terms) -> dict[int, int]:
    out: dict[int, int] = {}
    for m in terms:
        for i, e in m:
            if e > out.get(i, 0):
                out[i] = e
    return out


def _max_bits(terms: Terms) -> int:
    return max(abs(c).bit_length() for c in terms.values())


def _layout(degs: dict[int, int]) -> tuple[list[int], dict[int, int]]:
    """Variables in index order and their mixed-radix place values."""
    order = sorted(degs)
    place, p = {}, 1
    for i in order:
        place[i] = p
        p *= degs[i] + 1
    return order, place


def _pack(terms: Terms, place: dict[int, int], k: int) -> int:
    pos: dict[int, int] = {}
    neg: dict[int, int] = {}
    for m, c in terms.items():
        e = 0
        for i, x in m:
            e += x * place[i]
        if c > 0:
            pos[e] = c
        else:
            neg[e] = -c
    return _pack_digits(pos, k) - _pack_digits(neg, k)


def _pack_digits(digits: dict[int, int], k: int) -> int:
    if not digits:
        return 0
    width = k // 8
    top = max(digits)
    buf = bytearray(width * (top + 1))
    for e, c in digits.items():
        buf[e * width:(e + 1) * width] = c.to_bytes(width, "little")
    return int.from_bytes(buf, "little")


def _decoder(order: list[int], degs: dict[int, int]):
    return _cached_decoder(tuple((i, degs[i] + 1) for i in order))


@lru_cache(maxsize=256)
def _cached_decoder(radices: tuple[tuple[int, int], ...]):
    cache: dict[int, Monomial] = {}

    def decode(e: int) -> Monomial:
        m = cache.get(e)
        if m is None:
            mono = []
            rest = e
            for i, r in radices:
                rest, x = divmod(rest, r)
                if x:
                    mono.append((i, x))
            if rest:
                raise OverflowError("exponent outside the packing layout")
            m = cache[e] = tuple(mono)
        return m

    return decode


def _unpack(value: int, order: list[int], degs: dict[int, int], k: int) -> Terms:
    """Inverse of :func:`_pack` for balanced base-``2**k`` digits."""
    sign = 1
    if value < 0:
        sign, value = -1, -value
    width = k // 8
    nbytes = (value.bit_length() + 7) // 8
    ndig = nbytes // width + 2
    raw = value.to_bytes(ndig * width, "little")
    zero = bytes(width)
    half = 1 << (k - 1)
    full = 1 << k
    decode = _decoder(order, degs)
    from_bytes = int.from_bytes
    out: Terms = {}
    carry = 0
    pos = 0
    for e in range(ndig):
        chunk = raw[pos:pos + width]
        pos += width
        if not carry and chunk == zero:
            continue
        d = from_bytes(chunk, "little") + carry
        if d >= half:
            d -= full
            carry = 1
        else:
            carry = 0
        if d:
            out[decode(e)] = sign * d
    if carry:
        raise OverflowError("digit overflow while unpacking")
    return out


def _divmod(A: int, B: int) -> tuple[int, int]:
    if mpz is None:
        return divmod(A, B)
    Q, R = divmod(mpz(A), mpz(B))
    return int(Q), int(R)


def _bits_for(bound: int) -> int:
    """Digit width in whole bytes holding signed values up to ``bound``."""
    k = bound.bit_length() + 2
    return (k + 7) // 8 * 8


def kron_mul(a: Terms, b: Terms) -> Terms:
    da, db = _degrees(a), _degrees(b)
    degs = {i: da.get(i, 0) + db.get(i, 0) for i in set(da) | set(db)}
    order, place = _layout(degs)
    bound = (1 << _max_bits(a)) * (1 << _max_bits(b)) * min(len(a), len(b))
    k = _bits_for(bound)
    return _unpack(_pack(a, place, k) * _pack(b, place, k), order, degs, k)


def kron_exact_div(a: Terms, b: Terms) -> Terms | None:
    """``a / b`` when ``b`` divides ``a`` exactly, otherwise ``None``.

    The quotient is unpacked with a digit width guessed from the operands
    and then verified by a packed multiplication wide enough to be
    injective, so a wrong guess can only cause a retry, never a wrong
    answer.  Returns ``None`` when ``b`` does not divide ``a``; raises
    ``OverflowError`` if no tried width works, so callers can fall back.
    """
    da, db = _degrees(a), _degrees(b)
    if any(i not in da or db[i] > da[i] for i in db):
        return None
    order, place = _layout(da)
    k = _bits_for(1 << (max(_max_bits(a), _max_bits(b)) + 8))
    for _ in range(6):
        A, B = _pack(a, place, k), _pack(b, place, k)
        Q, R = _divmod(A, B)
        if R:
            return None
        try:
            q = _unpack(Q, order, da, k)
        except OverflowError:
            k *= 2
            continue
        if q and _verify(q, b, a):
            return q
        k *= 2
    raise OverflowError("no digit width verified the quotient")


def _verify(q: Terms, b: Terms, a: Terms) -> bool:
    dq, db, da = _degrees(q), _degrees(b), _degrees(a)
    for i in set(dq) | set(db):
        if dq.get(i, 0) + db.get(i, 0) > da.get(i, -1):
            return False
    order, place = _layout(da)
    bound = max((1 << _max_bits(q)) * (1 << _max_bits(b)) * min(len(q), len(b)), 1 << _max_bits(a))
    k = _bits_for(bound)
    return _pack(q, place, k) * _pack(b, place, k) == _pack(a, place, k)
