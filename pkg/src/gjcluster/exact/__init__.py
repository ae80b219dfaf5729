"""Exact arithmetic substrate: polynomials, rational functions, series, solver."""
from .linsolve import check_solution, solve_fraction_free, solve_linear
from .poly import ONE, REGISTRY, ZERO, Polynomial, VarRegistry, const, var
from .ratfunc import RationalFunction, rat_normalize
from .series import Series, series_arith, series_from_rational

__all__ = [
    "ONE", "ZERO", "REGISTRY", "Polynomial", "VarRegistry", "const", "var",
    "RationalFunction", "rat_normalize", "Series", "series_arith",
    "series_from_rational", "solve_linear", "solve_fraction_free", "check_solution",
]
