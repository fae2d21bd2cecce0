"""Boolean queries over named space predicates.

Grammar::

    expr   := term ('|' term)*
    term   := factor ('&' factor)*
    factor := '~' factor | '(' expr ')' | ident
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Callable, Mapping, Union

from .errors import ParseError, UnknownIdentifier


@dataclass(frozen=True)
class Ident:
    name: str


@dataclass(frozen=True)
class Not:
    arg: "PropertyExpr"


@dataclass(frozen=True)
class And:
    args: tuple["PropertyExpr", ...]


@dataclass(frozen=True)
class Or:
    args: tuple["PropertyExpr", ...]


PropertyExpr = Union[Ident, Not, And, Or]

_TOKEN = re.compile(r"[A-Za-z_][A-Za-z0-9_]*|[&|~()]")


def _tokenize(text: str):
    out, pos = [], 0
    while True:
        while pos < len(text) and text[pos].isspace():
            pos += 1
        if pos == len(text):
            break
        m = _TOKEN.match(text, pos)
        if not m:
            raise ParseError(f"unexpected character {text[pos]!r}", 1, pos + 1)
        kind = "op" if m.group() in "&|~()" else "ident"
        out.append((kind, m.group(), pos + 1))
        pos = m.end()
    out.append(("end", "", len(text) + 1))
    return out


class _Parser:
    def __init__(self, text):
        self.tokens = _tokenize(text)
        self.i = 0

    def peek(self):
        return self.tokens[self.i]

    def take(self):
        tok = self.tokens[self.i]
        self.i += 1
        return tok

    def fail(self, expected):
        kind, value, col = self.peek()
        found = "end of input" if kind == "end" else repr(value)
        raise ParseError(f"expected {expected}, found {found}", 1, col)

    def expr(self):
        args = [self.term()]
        while self.peek()[1] == "|":
            self.take()
            args.append(self.term())
        return args[0] if len(args) == 1 else Or(tuple(args))

    def term(self):
        args = [self.factor()]
        while self.peek()[1] == "&":
            self.take()
            args.append(self.factor())
        return args[0] if len(args) == 1 else And(tuple(args))

    def factor(self):
        kind, value, _ = self.peek()
        if kind == "ident":
            self.take()
            return Ident(value)
        if value == "~":
            self.take()
            return Not(self.factor())
        if value == "(":
            self.take()
            inner = self.expr()
            if self.peek()[1] != ")":
                self.fail("')'")
            self.take()
            return inner
        self.fail("identifier, '~' or '('")


def parse_query(text: str) -> PropertyExpr:
    parser = _Parser(text)
    tree = parser.expr()
    if parser.peek()[0] != "end":
        parser.fail("end of input")
    return tree


def identifiers(expr: PropertyExpr) -> set[str]:
    if isinstance(expr, Ident):
        return {expr.name}
    if isinstance(expr, Not):
        return identifiers(expr.arg)
    return set().union(*(identifiers(a) for a in expr.args))


def check_identifiers(expr: PropertyExpr, registry: Mapping[str, Callable]) -> None:
    unknown = sorted(identifiers(expr) - set(registry))
    if unknown:
        raise UnknownIdentifier(f"unknown predicate {unknown[0]!r}")


def evaluate(expr: PropertyExpr, sp, registry: Mapping[str, Callable]) -> bool:
    if isinstance(expr, Ident):
        try:
            pred = registry[expr.name]
        except KeyError:
            raise UnknownIdentifier(f"unknown predicate {expr.name!r}") from None
        return bool(pred(sp))
    if isinstance(expr, Not):
        return not evaluate(expr.arg, sp, registry)
    if isinstance(expr, And):
        return all(evaluate(a, sp, registry) for a in expr.args)
    return any(evaluate(a, sp, registry) for a in expr.args)
