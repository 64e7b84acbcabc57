"""Restricted integer expression evaluator for catalog entries.

Catalog rows store linking numbers, family bindings and validity ranges as
short Python-syntax expressions over the host parameters ``p, q, m, n``.
Only arithmetic, comparisons, boolean logic, tuple membership and a few
integer builtins are accepted.
"""
import ast
import math
import operator
from functools import lru_cache

def _pow(base, exponent):
    if not 0 <= exponent <= 64:
        raise ExpressionError(f"exponent {exponent} out of range")
    return base**exponent


_BINOPS = {
    ast.Add: operator.add,
    ast.Sub: operator.sub,
    ast.Mult: operator.mul,
    ast.FloorDiv: operator.floordiv,
    ast.Mod: operator.mod,
    ast.Pow: _pow,
}
_UNARY = {ast.USub: operator.neg, ast.UAdd: operator.pos, ast.Not: operator.not_}
_CMPOPS = {
    ast.Eq: operator.eq,
    ast.NotEq: operator.ne,
    ast.Lt: operator.lt,
    ast.LtE: operator.le,
    ast.Gt: operator.gt,
    ast.GtE: operator.ge,
    ast.In: lambda a, b: a in b,
    ast.NotIn: lambda a, b: a not in b,
}
_FUNCS = {"abs": abs, "gcd": math.gcd, "min": min, "max": max}


class ExpressionError(ValueError):
    pass


@lru_cache(maxsize=None)
def compile_expr(source):
    try:
        tree = ast.parse(source, mode="eval")
    except SyntaxError as exc:
        raise ExpressionError(f"cannot parse {source!r}: {exc}") from None
    _check(tree.body, source)
    return tree.body


def _check(node, source):
    allowed = (
        ast.BinOp, ast.UnaryOp, ast.BoolOp, ast.Compare, ast.Call, ast.Name,
        ast.Constant, ast.Tuple, ast.IfExp, ast.Load, ast.And, ast.Or,
    )
    for sub in ast.walk(node):
        if isinstance(sub, ast.operator) and type(sub) not in _BINOPS:
            raise ExpressionError(f"operator {type(sub).__name__} not allowed in {source!r}")
        if isinstance(sub, (ast.operator, ast.unaryop, ast.cmpop, ast.boolop)):
            continue
        if not isinstance(sub, allowed):
            raise ExpressionError(f"{type(sub).__name__} not allowed in {source!r}")
        if isinstance(sub, ast.Call) and not (
            isinstance(sub.func, ast.Name) and sub.func.id in _FUNCS and not sub.keywords
        ):
            raise ExpressionError(f"only {sorted(_FUNCS)} may be called in {source!r}")
        if isinstance(sub, ast.Constant) and not isinstance(sub.value, (int, bool)):
            raise ExpressionError(f"non-integer constant in {source!r}")


def evaluate(source, env):
    """Evaluate ``source`` with the integer bindings in ``env``."""
    return _eval(compile_expr(source), env, source)


def _eval(node, env, source):
    if isinstance(node, ast.Constant):
        return node.value
    if isinstance(node, ast.Name):
        if node.id in _FUNCS:
            return _FUNCS[node.id]
        try:
            return env[node.id]
        except KeyError:
            raise ExpressionError(f"unbound name {node.id!r} in {source!r}") from None
    if isinstance(node, ast.BinOp):
        return _BINOPS[type(node.op)](_eval(node.left, env, source), _eval(node.right, env, source))
    if isinstance(node, ast.UnaryOp):
        return _UNARY[type(node.op)](_eval(node.operand, env, source))
    if isinstance(node, ast.BoolOp):
        if isinstance(node.op, ast.And):
            return all(_eval(v, env, source) for v in node.values)
        return any(_eval(v, env, source) for v in node.values)
    if isinstance(node, ast.Compare):
        left = _eval(node.left, env, source)
        for op, comp in zip(node.ops, node.comparators):
            right = _eval(comp, env, source)
            if not _CMPOPS[type(op)](left, right):
                return False
            left = right
        return True
    if isinstance(node, ast.Tuple):
        return tuple(_eval(e, env, source) for e in node.elts)
    if isinstance(node, ast.IfExp):
        branch = node.body if _eval(node.test, env, source) else node.orelse
        return _eval(branch, env, source)
    if isinstance(node, ast.Call):
        func = _FUNCS[node.func.id]
        return func(*(_eval(a, env, source) for a in node.args))
    raise ExpressionError(f"unsupported node in {source!r}")


def free_names(source):
    """Variable names referenced by ``source`` (builtins excluded)."""
    return {
        node.id
        for node in ast.walk(compile_expr(source))
        if isinstance(node, ast.Name) and node.id not in _FUNCS
    }
