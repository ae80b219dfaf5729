"""Parse small arithmetic expressions such as ``1/2``, ``p`` or ``1-p``.

Only integers, names, ``+ - * /``, integer powers and parentheses are
accepted; the expression is walked with :mod:`ast`, never evaluated.
"""
from __future__ import annotations

import ast
import re
from fractions import Fraction

from .poly import Polynomial
from .ratfunc import RationalFunction

_NAME = re.compile(r"[A-Za-z_][A-Za-z_0-9]*(\[[^\]]*\])?")


def parse_expr(text: str) -> RationalFunction:
    """Exact value of ``text`` as a rational function (constants included)."""
    names: dict[str, str] = {}

    def stash(m: re.Match) -> str:
        key = f"_v{len(names)}"
        names[key] = m.group(0)
        return key

    src = _NAME.sub(stash, text.strip().replace("^", "**"))
    try:
        tree = ast.parse(src, mode="eval")
    except SyntaxError as exc:
        raise ValueError(f"cannot parse {text!r}") from exc
    return RationalFunction.coerce(_walk(tree.body, names))


def _walk(node, names):
    if isinstance(node, ast.Constant) and isinstance(node.value, int) and not isinstance(node.value, bool):
        return RationalFunction.coerce(node.value)
    if isinstance(node, ast.Name) and node.id in names:
        return RationalFunction.coerce(Polynomial.var(names[node.id]))
    if isinstance(node, ast.UnaryOp) and isinstance(node.op, (ast.USub, ast.UAdd)):
        v = _walk(node.operand, names)
        return -v if isinstance(node.op, ast.USub) else v
    if isinstance(node, ast.BinOp):
        if isinstance(node.op, ast.Pow):
            if not (isinstance(node.right, ast.Constant) and isinstance(node.right.value, int)):
                raise ValueError("powers must be integer literals")
            return _walk(node.left, names) ** node.right.value
        a, b = _walk(node.left, names), _walk(node.right, names)
        if isinstance(node.op, ast.Add):
            return a + b
        if isinstance(node.op, ast.Sub):
            return a - b
        if isinstance(node.op, ast.Mult):
            return a * b
        if isinstance(node.op, ast.Div):
            return a / b
    raise ValueError(f"unsupported expression element {ast.dump(node)}")


def parse_value(text: str) -> Fraction | RationalFunction:
    """A Fraction when the expression is constant, else a rational function."""
    v = parse_expr(text)
    return v.to_fraction() if v.is_constant() else v
