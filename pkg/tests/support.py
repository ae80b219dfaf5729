"""Helpers shared by the test modules."""
from __future__ import annotations

from collections import Counter

from gjcluster.exact import Polynomial, series_from_rational


def _poly(c) -> Polynomial:
    return c if isinstance(c, Polynomial) else Polynomial.const(c)


def marker_table(F, n_max: int, t: str = "t") -> dict[int, Counter]:
    """``{n: {m: [s^n t^m] F}}`` from a generating function in ``s`` and ``t``."""
    ser = series_from_rational(F, "s", n_max)
    out = {}
    for n, c in enumerate(ser):
        parts = _poly(c).coefficients_in(t)
        out[n] = Counter({m: p.constant_term() for m, p in parts.items() if p.constant_term()})
    return out


def vector_table(F, n_max: int, names: list[str]) -> dict[int, Counter]:
    """``{n: {(m_1, ..., m_k): count}}`` for markers ``names``."""
    from gjcluster.exact import REGISTRY

    idx = [REGISTRY.index(v) for v in names]
    ser = series_from_rational(F, "s", n_max)
    out = {}
    for n, c in enumerate(ser):
        cnt = Counter()
        for mono, coeff in _poly(c).terms.items():
            exps = dict(mono)
            extra = set(exps) - set(idx)
            assert not extra, f"unexpected variables in coefficient {c}"
            cnt[tuple(exps.get(i, 0) for i in idx)] += coeff
        out[n] = +cnt
    return out


def clean(table: dict[int, Counter]) -> dict[int, Counter]:
    return {n: +Counter(c) for n, c in table.items()}


def series_marker_table(ser, t: str = "t") -> dict[int, Counter]:
    """Like :func:`marker_table` for an already expanded series."""
    out = {}
    for n, c in enumerate(ser):
        parts = _poly(c).coefficients_in(t)
        out[n] = Counter({m: p.constant_term() for m, p in parts.items() if p.constant_term()})
    return out


def relaxation_spectral_radius(memo: int, dim: int) -> float:
    """Growth rate of the words avoiding ``uu`` (``|u| <= memo``) from the
    transfer matrix of an Aho-Corasick automaton, via numpy eigenvalues."""
    from itertools import product

    import numpy as np

    letters = [str(i) for i in range(1, dim + 1)]
    bad = {u + u for k in range(1, memo + 1) for u in ("".join(p) for p in product(letters, repeat=k))}
    # states: prefixes of bad words that contain no bad word
    prefixes = {b[:k] for b in bad for k in range(len(b))}
    live = sorted((p for p in prefixes if not any(b in p for b in bad)), key=lambda x: (len(x), x))
    index = {p: i for i, p in enumerate(live)}
    M = np.zeros((len(live), len(live)))
    for p in live:
        for a in letters:
            x = p + a
            if any(x.endswith(b) for b in bad):
                continue
            while x not in index:
                x = x[1:]
            M[index[p], index[x]] += 1
    return float(max(abs(np.linalg.eigvals(M))))
