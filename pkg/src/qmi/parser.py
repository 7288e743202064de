"""Expression parser.

Grammar (whitespace insignificant, '*' always explicit):

    expr     := term (('+' | '-') term)*
    term     := unary (('*' | '/') unary)*
    unary    := ('+' | '-')* power
    power    := atom ('^' ['-'] INT)?
    atom     := INT | NAME | 'sqrt' '(' NAME ')' | '(' expr ')'
    INT      := [0-9]+
    NAME     := [a-z][a-z0-9]*

Exponents bind tighter than unary minus, so -x1^2 is -(x1^2), and may be
negative ("x1^-1" is 1/x1). Undeclared names raise UnknownSymbol; all
other lexical/syntactic trouble raises ParseError with a character
position. Parsing evaluates directly into a canonical RatFunc.

An optional env maps extra names to already-parsed values; it is
consulted before the context's own symbols, letting callers thread local
abbreviations through long expressions.
"""

from __future__ import annotations

from .context import Context
from .errors import ParseError, UnknownSymbol
from .poly import Poly
from .ratfunc import RatFunc

_OPS = set("+-*/^()")


class _Token:
    __slots__ = ("kind", "text", "pos")

    def __init__(self, kind: str, text: str, pos: int) -> None:
        self.kind = kind  # "int" | "name" | "op" | "end"
        self.text = text
        self.pos = pos


def _lex(text: str) -> list[_Token]:
    out: list[_Token] = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            out.append(_Token("int", text[i:j], i))
            i = j
            continue
        if "a" <= ch <= "z":
            j = i
            while j < n and (text[j].isdigit() or "a" <= text[j] <= "z"):
                j += 1
            out.append(_Token("name", text[i:j], i))
            i = j
            continue
        if ch in _OPS:
            out.append(_Token("op", ch, i))
            i += 1
            continue
        raise ParseError(f"unexpected character {ch!r}", i)
    out.append(_Token("end", "", n))
    return out


class _Parser:
    def __init__(self, ctx: Context, text: str, env=None) -> None:
        self.ctx = ctx
        self.env = env or {}
        self.tokens = _lex(text)
        self.k = 0

    def peek(self) -> _Token:
        return self.tokens[self.k]

    def take(self) -> _Token:
        tok = self.tokens[self.k]
        self.k += 1
        return tok

    def expect_op(self, op: str) -> None:
        tok = self.take()
        if tok.kind != "op" or tok.text != op:
            raise ParseError(f"expected {op!r}", tok.pos)

    def parse(self) -> RatFunc:
        value = self.expr()
        tok = self.peek()
        if tok.kind != "end":
            raise ParseError(f"unexpected {tok.text!r}", tok.pos)
        return value

    def expr(self) -> RatFunc:
        value = self.term()
        while True:
            tok = self.peek()
            if tok.kind == "op" and tok.text in "+-":
                self.take()
                rhs = self.term()
                value = value + rhs if tok.text == "+" else value - rhs
            else:
                return value

    def term(self) -> RatFunc:
        value = self.unary()
        while True:
            tok = self.peek()
            if tok.kind == "op" and tok.text in "*/":
                self.take()
                rhs = self.unary()
                value = value * rhs if tok.text == "*" else value / rhs
            else:
                return value

    def unary(self) -> RatFunc:
        sign = 1
        while True:
            tok = self.peek()
            if tok.kind == "op" and tok.text in "+-":
                self.take()
                if tok.text == "-":
                    sign = -sign
            else:
                break
        value = self.power()
        return -value if sign < 0 else value

    def power(self) -> RatFunc:
        value = self.atom()
        tok = self.peek()
        if tok.kind == "op" and tok.text == "^":
            self.take()
            neg = False
            tok = self.peek()
            if tok.kind == "op" and tok.text == "-":
                self.take()
                neg = True
            tok = self.take()
            if tok.kind != "int":
                raise ParseError("expected integer exponent", tok.pos)
            n = int(tok.text)
            value = value ** (-n if neg else n)
        return value

    def atom(self) -> RatFunc:
        tok = self.take()
        if tok.kind == "int":
            return RatFunc.const(self.ctx, int(tok.text))
        if tok.kind == "name":
            if tok.text == "sqrt" and self.peek().kind == "op" and self.peek().text == "(":
                self.take()
                inner = self.take()
                if inner.kind != "name":
                    raise ParseError("expected a parameter name under sqrt", inner.pos)
                self.expect_op(")")
                idx = self.ctx.root_symbol_index(inner.text)
                return RatFunc.from_poly(Poly.symbol(self.ctx, idx))
            return self._name(tok)
        if tok.kind == "op" and tok.text == "(":
            value = self.expr()
            self.expect_op(")")
            return value
        raise ParseError(f"unexpected {tok.text!r}" if tok.text else "unexpected end of input", tok.pos)

    def _name(self, tok: _Token) -> RatFunc:
        name = tok.text
        if name in self.env:
            return self.env[name]
        if name in self.ctx.constants:
            return RatFunc.from_poly(
                Poly(self.ctx, {(0,) * self.ctx.nsym: self.ctx.constants[name]})
                if self.ctx.constants[name]
                else Poly(self.ctx, {})
            )
        if name in self.ctx.index:
            return RatFunc.named(self.ctx, name)
        raise UnknownSymbol(f"{name!r} is not declared in this context")


def parse(ctx: Context, text: str, env: "dict[str, RatFunc] | None" = None) -> RatFunc:
    """Parse an expression over the given context into a RatFunc."""
    return _Parser(ctx, text, env).parse()
