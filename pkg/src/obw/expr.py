"""Tiny arithmetic expression language for user-supplied functions.

Grammar: numeric literals, the variable t, + - * / ^, unary minus,
single-argument calls (sin cos exp log abs sqrt), parentheses. ^ is
right-associative and binds tighter than unary minus; no implicit
multiplication.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Union

from .quadrature import Fn1D, derivative_callable

__all__ = ["ParseError", "Expr", "parse", "to_str", "evaluate", "differentiate", "as_fn1d"]


class ParseError(ValueError):
    def __init__(self, message: str, offset: int) -> None:
        super().__init__(f"{message} (at offset {offset})")
        self.offset = offset


@dataclass(frozen=True)
class Num:
    value: float


@dataclass(frozen=True)
class Var:
    pass


@dataclass(frozen=True)
class Neg:
    operand: "Expr"


@dataclass(frozen=True)
class BinOp:
    op: str
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Call:
    fn: str
    arg: "Expr"


Expr = Union[Num, Var, Neg, BinOp, Call]

_FUNCTIONS: dict[str, Callable[[float], float]] = {
    "sin": math.sin,
    "cos": math.cos,
    "exp": math.exp,
    "log": math.log,
    "abs": abs,
    "sqrt": math.sqrt,
}


# --- tokenizer -----------------------------------------------------------

@dataclass(frozen=True)
class _Token:
    kind: str  # "num", "ident", "op", "lparen", "rparen", "end"
    text: str
    offset: int


def _tokenize(source: str) -> list[_Token]:
    tokens = []
    i = 0
    n = len(source)
    while i < n:
        ch = source[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit() or ch == ".":
            j = i
            seen_dot = False
            while j < n and (source[j].isdigit() or (source[j] == "." and not seen_dot)):
                seen_dot = seen_dot or source[j] == "."
                j += 1
            if j < n and source[j] in "eE":
                k = j + 1
                if k < n and source[k] in "+-":
                    k += 1
                if k < n and source[k].isdigit():
                    while k < n and source[k].isdigit():
                        k += 1
                    j = k
            tokens.append(_Token("num", source[i:j], i))
            i = j
            continue
        if ch.isalpha() or ch == "_":
            j = i
            while j < n and (source[j].isalnum() or source[j] == "_"):
                j += 1
            tokens.append(_Token("ident", source[i:j], i))
            i = j
            continue
        if ch in "+-*/^":
            tokens.append(_Token("op", ch, i))
            i += 1
            continue
        if ch == "(":
            tokens.append(_Token("lparen", ch, i))
            i += 1
            continue
        if ch == ")":
            tokens.append(_Token("rparen", ch, i))
            i += 1
            continue
        raise ParseError(f"unexpected character {ch!r}", i)
    tokens.append(_Token("end", "", n))
    return tokens


# --- Pratt parser --------------------------------------------------------

# Binding powers: ^ > unary minus > * / > + -
_LEFT_BP = {"+": 10, "-": 10, "*": 20, "/": 20, "^": 40}
_UNARY_BP = 30


class _Parser:
    def __init__(self, source: str) -> None:
        self.source = source
        self.tokens = _tokenize(source)
        self.pos = 0

    def peek(self) -> _Token:
        return self.tokens[self.pos]

    def advance(self) -> _Token:
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, kind: str) -> _Token:
        tok = self.peek()
        if tok.kind != kind:
            raise ParseError(f"expected {kind}, found {tok.text or 'end of input'}", tok.offset)
        return self.advance()

    def parse_expr(self, min_bp: int = 0) -> Expr:
        left = self.parse_prefix()
        while True:
            tok = self.peek()
            if tok.kind != "op":
                break
            bp = _LEFT_BP[tok.text]
            if bp < min_bp:
                break
            self.advance()
            # right-associative ^ re-enters at its own binding power
            next_bp = bp if tok.text == "^" else bp + 1
            right = self.parse_expr(next_bp)
            left = BinOp(op=tok.text, left=left, right=right)
        return left

    def parse_prefix(self) -> Expr:
        tok = self.advance()
        if tok.kind == "num":
            return Num(float(tok.text))
        if tok.kind == "ident":
            if tok.text == "t":
                return Var()
            if tok.text == "pi":
                return Num(math.pi)
            if tok.text == "e":
                return Num(math.e)
            if tok.text in _FUNCTIONS:
                if self.peek().kind != "lparen":
                    raise ParseError(f"{tok.text} requires a parenthesized argument", self.peek().offset)
                self.advance()
                arg = self.parse_expr(0)
                self.expect("rparen")
                return Call(fn=tok.text, arg=arg)
            raise ParseError(f"unknown identifier {tok.text!r}", tok.offset)
        if tok.kind == "op" and tok.text == "-":
            return Neg(self.parse_expr(_UNARY_BP))
        if tok.kind == "op" and tok.text == "+":
            return self.parse_expr(_UNARY_BP)
        if tok.kind == "lparen":
            inner = self.parse_expr(0)
            self.expect("rparen")
            return inner
        raise ParseError(f"unexpected token {tok.text or 'end of input'!r}", tok.offset)


def parse(source: str) -> Expr:
    if not source.strip():
        raise ParseError("empty expression", 0)
    p = _Parser(source)
    expr = p.parse_expr(0)
    tok = p.peek()
    if tok.kind != "end":
        raise ParseError(f"trailing input {tok.text!r}", tok.offset)
    return expr


# --- evaluation / printing -----------------------------------------------

def evaluate(e: Expr, t: float) -> float:
    if isinstance(e, Num):
        return e.value
    if isinstance(e, Var):
        return t
    if isinstance(e, Neg):
        return -evaluate(e.operand, t)
    if isinstance(e, BinOp):
        lv = evaluate(e.left, t)
        rv = evaluate(e.right, t)
        if e.op == "+":
            return lv + rv
        if e.op == "-":
            return lv - rv
        if e.op == "*":
            return lv * rv
        if e.op == "/":
            return lv / rv
        return lv**rv
    return _FUNCTIONS[e.fn](evaluate(e.arg, t))


def _prec(e: Expr) -> int:
    if isinstance(e, BinOp):
        return _LEFT_BP[e.op]
    if isinstance(e, Neg):
        return _UNARY_BP
    return 100


def to_str(e: Expr) -> str:
    if isinstance(e, Num):
        return repr(e.value) if e.value != int(e.value) else str(int(e.value))
    if isinstance(e, Var):
        return "t"
    if isinstance(e, Neg):
        inner = to_str(e.operand)
        if _prec(e.operand) < _UNARY_BP or isinstance(e.operand, Neg):
            inner = f"({inner})"
        return f"-{inner}"
    if isinstance(e, BinOp):
        bp = _LEFT_BP[e.op]
        ls = to_str(e.left)
        rs = to_str(e.right)
        # parenthesize per associativity: left operand may tie except for ^
        if _prec(e.left) < bp or (e.op == "^" and _prec(e.left) == bp):
            ls = f"({ls})"
        if _prec(e.right) < bp or (e.op != "^" and _prec(e.right) == bp):
            rs = f"({rs})"
        return f"{ls} {e.op} {rs}"
    return f"{e.fn}({to_str(e.arg)})"


# --- symbolic differentiation --------------------------------------------

def _num(v: float) -> Num:
    return Num(float(v))


def _fold(e: Expr) -> Expr:
    """Constant folding only; no further simplification."""
    if isinstance(e, Neg):
        inner = _fold(e.operand)
        if isinstance(inner, Num):
            return _num(-inner.value)
        return Neg(inner)
    if isinstance(e, BinOp):
        left = _fold(e.left)
        right = _fold(e.right)
        if isinstance(left, Num) and isinstance(right, Num):
            return _num(evaluate(BinOp(e.op, left, right), 0.0))
        return BinOp(e.op, left, right)
    if isinstance(e, Call):
        arg = _fold(e.arg)
        if isinstance(arg, Num):
            return _num(_FUNCTIONS[e.fn](arg.value))
        return Call(e.fn, arg)
    return e


def differentiate(e: Expr) -> Expr:
    return _fold(_diff(e))


def _diff(e: Expr) -> Expr:
    if isinstance(e, Num):
        return _num(0.0)
    if isinstance(e, Var):
        return _num(1.0)
    if isinstance(e, Neg):
        return Neg(_diff(e.operand))
    if isinstance(e, BinOp):
        u, v = e.left, e.right
        du, dv = _diff(u), _diff(v)
        if e.op == "+":
            return BinOp("+", du, dv)
        if e.op == "-":
            return BinOp("-", du, dv)
        if e.op == "*":
            return BinOp("+", BinOp("*", du, v), BinOp("*", u, dv))
        if e.op == "/":
            num = BinOp("-", BinOp("*", du, v), BinOp("*", u, dv))
            return BinOp("/", num, BinOp("^", v, _num(2.0)))
        # power rule for constant exponents, full logarithmic rule otherwise
        if isinstance(v, Num):
            return BinOp(
                "*",
                BinOp("*", v, BinOp("^", u, _num(v.value - 1.0))),
                du,
            )
        log_term = BinOp("*", dv, Call("log", u))
        frac_term = BinOp("/", BinOp("*", v, du), u)
        return BinOp("*", e, BinOp("+", log_term, frac_term))
    u, du = e.arg, _diff(e.arg)
    if e.fn == "sin":
        outer: Expr = Call("cos", u)
    elif e.fn == "cos":
        outer = Neg(Call("sin", u))
    elif e.fn == "exp":
        outer = Call("exp", u)
    elif e.fn == "log":
        outer = BinOp("/", _num(1.0), u)
    elif e.fn == "sqrt":
        outer = BinOp("/", _num(0.5), Call("sqrt", u))
    else:  # abs: undefined at zero; evaluation there falls back to differences
        outer = BinOp("/", u, Call("abs", u))
    return BinOp("*", outer, du)


def as_fn1d(source: str, name: str = "") -> Fn1D:
    """Parse source into an evaluable function with a symbolic derivative.

    Points where the symbolic derivative fails to evaluate (abs at zero)
    fall back to finite differences.
    """
    tree = parse(source)
    dtree = differentiate(tree)
    base = Fn1D(fn=lambda t: evaluate(tree, t), name=name or source)

    def deriv(t: float) -> float:
        try:
            v = evaluate(dtree, t)
        except (ZeroDivisionError, ValueError, OverflowError):
            v = math.nan
        if math.isfinite(v):
            return v
        return derivative_callable(base, -math.inf, math.inf)(t)

    return Fn1D(fn=base.fn, derivative=deriv, name=base.name)
