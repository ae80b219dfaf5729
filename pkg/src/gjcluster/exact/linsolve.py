"""Fraction-free (Bareiss) Gauss-Jordan elimination over integer polynomials.

Rows are sparse dicts.  Each row remembers the elimination step at which it
was last rewritten; a row whose pivot-column entry is zero is only rescaled
by ``P_k / P_{k-1}`` in textbook Bareiss, so that rescaling is deferred and
folded into the next real update (every entry stays a minor of the input,
hence every division below is exact).  Pivots are picked Markowitz-style:
the nonzero entry minimizing ``(row_nnz - 1) * (col_nnz - 1)``, ties to the
lowest (row, column).
"""
from __future__ import annotations

from typing import Mapping, Sequence

from ..errors import SingularSystem
from .poly import ONE, Polynomial
from .ratfunc import RationalFunction


def _poly(x) -> Polynomial:
    if isinstance(x, Polynomial):
        return x
    return Polynomial.const(int(x))


def _rows(A) -> list[dict[int, Polynomial]]:
    rows = []
    for row in A:
        if isinstance(row, Mapping):
            items = row.items()
        else:
            items = enumerate(row)
        rows.append({j: _poly(v) for j, v in items if v != 0})
    return rows


def solve_fraction_free(A, b: Sequence) -> tuple[list[Polynomial], Polynomial]:
    """Solve ``A x = b``; return numerators ``N`` and common denominator ``D``.

    ``x_i = N_i / D`` and ``D`` is (up to sign) the determinant of ``A``.
    """
    rows = _rows(A)
    n = len(rows)
    rhs = [_poly(v) for v in b]
    if len(rhs) != n:
        raise ValueError("right-hand side length does not match the matrix")
    RHS = n  # rhs stored as an extra column
    for i in range(n):
        if any(j >= n or j < 0 for j in rows[i]):
            raise ValueError("matrix is not square")
        if not rhs[i].is_zero():
            rows[i][RHS] = rhs[i]
    col_rows: dict[int, set[int]] = {}
    for i, row in enumerate(rows):
        for j in row:
            col_rows.setdefault(j, set()).add(i)

    pivots: list[Polynomial] = [ONE]
    stamp = [0] * n
    free_rows = set(range(n))
    free_cols = set(range(n))
    pivot_col_of_row = [-1] * n

    for step in range(1, n + 1):
        best = None
        for r in sorted(free_rows):
            row = rows[r]
            rn = sum(1 for j in row if j in free_cols) - 1
            for c in sorted(j for j in row if j in free_cols):
                cost = rn * (sum(1 for i in col_rows[c] if i in free_rows) - 1)
                if best is None or cost < best[0]:
                    best = (cost, r, c)
                    if cost == 0:
                        break
            if best is not None and best[0] == 0:
                break
        if best is None:
            raise SingularSystem(f"no nonzero pivot at step {step} of {n}")
        _, r, c = best
        prev = pivots[-1]
        prow = rows[r]
        if stamp[r] != step - 1:
            scale_num, scale_den = prev, pivots[stamp[r]]
            prow = {j: (v * scale_num).exact_div(scale_den) for j, v in prow.items()}
            rows[r] = prow
        pk = prow[c]
        for i in list(col_rows[c]):
            if i == r:
                continue
            row = rows[i]
            aic = row[c]
            div = pivots[stamp[i]]
            new = {}
            for j in set(row) | set(prow):
                if j == c:
                    continue
                v = row.get(j)
                w = prow.get(j)
                if v is None:
                    val = -(aic * w)
                elif w is None:
                    val = pk * v
                else:
                    val = pk * v - aic * w
                if not val.is_zero():
                    new[j] = val if div == ONE else val.exact_div(div)
            for j in set(row) - set(new):
                col_rows[j].discard(i)
            for j in set(new) - set(row):
                col_rows.setdefault(j, set()).add(i)
            rows[i] = new
            stamp[i] = step
        col_rows[c] = {r}
        pivots.append(pk)
        stamp[r] = step
        free_rows.discard(r)
        free_cols.discard(c)
        pivot_col_of_row[r] = c

    det = pivots[-1]
    nums: list[Polynomial] = [Polynomial()] * n
    for r in range(n):
        c = pivot_col_of_row[r]
        val = rows[r].get(RHS, Polynomial())
        if stamp[r] != n and not val.is_zero():
            val = (val * det).exact_div(pivots[stamp[r]])
        nums[c] = val
    return nums, det


def check_solution(A, b: Sequence, nums: Sequence[Polynomial], det: Polynomial) -> bool:
    """Exact residual test ``A N - b D == 0``."""
    rows = _rows(A)
    for row, bi in zip(rows, b):
        acc = -( _poly(bi) * det)
        for j, v in row.items():
            acc = acc + v * nums[j]
        if not acc.is_zero():
            return False
    return True


def solve_linear(A, b: Sequence, *, verify: bool = True) -> list[RationalFunction]:
    """Exact solution of ``A x = b`` as rational functions.

    With ``verify`` the solution is substituted back and the residual checked
    to be identically zero.
    """
    nums, det = solve_fraction_free(A, b)
    if verify and not check_solution(A, b, nums, det):
        raise ArithmeticError("back-substitution residual is not zero")
    return [RationalFunction(nv, det) for nv in nums]
