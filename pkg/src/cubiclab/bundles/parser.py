"""Recursive-descent parser for the bundle DSL.

    expr   := prod ('+' prod)*
    prod   := term ('*' term)*
    term   := atom ('^' exp)?
    atom   := SYM | 'Sym' INT '(' expr ')' | 'Wedge' INT '(' expr ')'
            | 'Dual' '(' expr ')' | 'O' '(' exp ')' | '(' expr ')'
    exp    := ['-'] INT | ['-'] NAME | '(' ['-'] (INT | NAME) (('+'|'-') INT)? ')'

Parameters are lowercase identifiers; tautological symbols are capitalised.
"""
from __future__ import annotations

import re
from typing import List, Optional, Tuple

from .ast import (LINE_SYMBOLS, TAUT_SYMBOLS, BundleExpr, Dual, Exponent, LinePow,
                  Param, Sum, Sym, Taut, Tensor, Wedge)

_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_][A-Za-z_]*)|(.))")


class BundleSyntaxError(ValueError):
    def __init__(self, message: str, pos: int, text: str):
        super().__init__(f"{message} at position {pos}: {text!r}")
        self.pos = pos
        self.text = text


def _tokenize(text: str) -> List[Tuple[str, str, int]]:
    out = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if m.group(0).strip() == "":
            break
        if m.group(1) is not None:
            out.append(("int", m.group(1), m.start(1)))
        elif m.group(2) is not None:
            out.append(("name", m.group(2), m.start(2)))
        else:
            ch = m.group(3)
            if ch not in "()*+^-":
                raise BundleSyntaxError(f"unexpected character {ch!r}", m.start(3), text)
            out.append(("op", ch, m.start(3)))
        pos = m.end()
    out.append(("end", "", len(text)))
    return out


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.toks = _tokenize(text)
        self.i = 0

    def peek(self) -> Tuple[str, str, int]:
        return self.toks[self.i]

    def take(self) -> Tuple[str, str, int]:
        tok = self.toks[self.i]
        self.i += 1
        return tok

    def error(self, message: str, tok: Optional[Tuple[str, str, int]] = None):
        tok = tok or self.peek()
        raise BundleSyntaxError(message, tok[2], self.text)

    def expect(self, value: str):
        tok = self.take()
        if tok[1] != value or tok[0] == "end":
            self.error(f"expected {value!r}", tok)

    def parse(self) -> BundleExpr:
        if self.peek()[0] == "end":
            self.error("empty expression")
        e = self.expr()
        if self.peek()[0] != "end":
            self.error("unexpected trailing input")
        return e

    def expr(self) -> BundleExpr:
        items = [self.prod()]
        while self.peek()[1] == "+" and self.peek()[0] == "op":
            self.take()
            items.append(self.prod())
        return _flatten(Sum, items)

    def prod(self) -> BundleExpr:
        items = [self.term()]
        while self.peek()[1] == "*" and self.peek()[0] == "op":
            self.take()
            items.append(self.term())
        return _flatten(Tensor, items)

    def term(self) -> BundleExpr:
        atom = self.atom()
        exp: Exponent = 1
        if self.peek()[1] == "^" and self.peek()[0] == "op":
            self.take()
            exp = self.exponent()
        return _power(atom, exp)

    def int_(self) -> int:
        tok = self.take()
        if tok[0] != "int":
            self.error("expected an integer", tok)
        return int(tok[1])

    def exponent(self) -> Exponent:
        tok = self.peek()
        if tok[1] == "(" and tok[0] == "op":
            self.take()
            e = self.exponent_inner()
            self.expect(")")
            return e
        return self.signed_atom()

    def signed_atom(self) -> Exponent:
        sign = 1
        if self.peek()[1] == "-" and self.peek()[0] == "op":
            self.take()
            sign = -1
        tok = self.take()
        if tok[0] == "int":
            return sign * int(tok[1])
        if tok[0] == "name" and tok[1][0].islower():
            return Param(tok[1], sign, 0)
        self.error("expected an integer or a parameter name", tok)

    def atom(self) -> BundleExpr:
        tok = self.take()
        kind, val, _ = tok
        if kind == "op" and val == "(":
            e = self.expr()
            self.expect(")")
            return e
        if kind != "name":
            self.error("expected a bundle", tok)
        if val in ("Sym", "Wedge"):
            k = self.int_()
            self.expect("(")
            child = self.expr()
            self.expect(")")
            return Sym(k, child) if val == "Sym" else Wedge(k, child)
        if val == "Dual":
            self.expect("(")
            child = self.expr()
            self.expect(")")
            return Dual(child)
        if val == "O":
            self.expect("(")
            exp = self.exponent_inner()
            self.expect(")")
            return LinePow("O", exp)
        if val in LINE_SYMBOLS:
            return LinePow(val, 1)
        if val in TAUT_SYMBOLS:
            return Taut(val)
        self.error(f"unknown symbol {val!r}", tok)

    def exponent_inner(self) -> Exponent:
        e = self.signed_atom()
        nxt = self.peek()
        if nxt[0] == "op" and nxt[1] in "+-":
            self.take()
            off = self.int_() * (1 if nxt[1] == "+" else -1)
            e = Param(e.name, e.scale, e.offset + off) if isinstance(e, Param) else e + off
        return e


def _flatten(cls, items: List[BundleExpr]) -> BundleExpr:
    flat: List[BundleExpr] = []
    for it in items:
        if isinstance(it, cls):
            flat.extend(it.children)
        else:
            flat.append(it)
    return flat[0] if len(flat) == 1 else cls(tuple(flat))


def _power(atom: BundleExpr, exp: Exponent) -> BundleExpr:
    if exp == 1:
        return atom
    if isinstance(atom, LinePow) and isinstance(atom.base, str):
        inner = atom.exponent
        if isinstance(exp, int) and isinstance(inner, int):
            return LinePow(atom.base, inner * exp)
        if inner == 1:
            return LinePow(atom.base, exp)
        if isinstance(exp, int) and isinstance(inner, Param) and abs(exp) == 1:
            return LinePow(atom.base, Param(inner.name, inner.scale * exp, inner.offset * exp))
    return LinePow(atom, exp)


def parse_bundle(text: str, space=None) -> BundleExpr:
    """Parse ``text``; with ``space`` given, also reject symbols undefined there."""
    expr = _Parser(text).parse()
    if space is not None:
        from .character import check_symbols
        check_symbols(expr, space)
    return expr
