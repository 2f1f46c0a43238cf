"""Recursive-descent parser for source files and terms.

Grammar sketch (``atom`` arguments of keyword forms must be atomic or
parenthesized)::

    expr   ::= 'fun' binder+ '=>' expr
             | ('Pi' | 'Sg' | 'W') ('(' NAME+ ':' expr ')')+ ',' expr
             | arrow
    arrow  ::= sum ['->' arrow]
    sum    ::= prod ['+' sum]
    prod   ::= cplus ['*' prod]
    cplus  ::= app ['++' cplus]
    app    ::= head atom*
    atom   ::= NAME | constant | '(' expr ')' | '(' expr ',' expr ')'
    scope  ::= '(' NAME* '.' expr ')'
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .. import syntax as S
from .lexer import DECL_KEYWORDS, LexError, Token, tokenize


class ParseError(Exception):
    def __init__(self, message, line, col, expected=()):
        self.line, self.col = line, col
        self.expected = sorted(set(expected))
        msg = f"{line}:{col}: {message}"
        if self.expected:
            msg += f" (expected one of: {', '.join(self.expected)})"
        super().__init__(msg)


@dataclass
class Decl:
    kind: str
    line: int
    col: int
    expect: Optional[str] = field(default=None, kw_only=True)

    @property
    def label(self):
        name = getattr(self, "name", None)
        return f"{self.kind} {name}" if name else f"{self.kind}@{self.line}"


@dataclass
class DefDecl(Decl):
    name: str
    params: tuple
    type: S.Term
    body: Optional[S.Term]


@dataclass
class CheckDecl(Decl):
    term: S.Term
    type: S.Term


@dataclass
class NormalizeDecl(Decl):
    term: S.Term


@dataclass
class FlagDecl(Decl):
    flag: str
    value: bool


@dataclass
class InterpDecl(Decl):
    name: str


@dataclass
class RawDecl(Decl):
    """A simplicial statement, kept as its source lines."""

    lines: list
    name: Optional[str] = None


@dataclass
class SourceFile:
    decls: list


# keyword forms: argument shapes, 'a' = atom, int = scope with that many binders
_FORMS = {
    "El": (S.El, ("a",)),
    "Id": (S.Id, ("a", "a", "a")),
    "refl": (S.Refl, ("a", "a")),
    "inl": (S.Inl, ("a",)),
    "inr": (S.Inr, ("a",)),
    "sup": (S.Sup, ("a", "a")),
    "J": (S.J, (3, 1, "a", "a", "a")),
    "split": (S.Split, (1, 2, "a")),
    "wrec": (S.WRec, (1, 3, "a")),
    "case0": (S.Case0, (1, "a")),
    "rec1": (S.Rec1, (1, "a", "a")),
    "case": (S.CaseSum, (1, 1, 1, "a")),
    "pi": (S.CPi, ("a", 1)),
    "sg": (S.CSigma, ("a", 1)),
    "w": (S.CW, ("a", 1)),
    "id": (S.CId, ("a", "a", "a")),
    "ext": (S.Ext, ("a", "a", "a")),
    "extcomp": (S.ExtComp, (1,)),
}
_CONSTANTS = {
    "Zero": S.ZERO,
    "One": S.ONE,
    "star": S.STAR,
    "U": S.UNIV,
    "z": S.CZERO,
    "o": S.CONE,
}


class Parser:
    def __init__(self, tokens):
        self.toks = tokens
        self.pos = 0

    # -- token helpers ------------------------------------------------------
    @property
    def tok(self) -> Token:
        return self.toks[self.pos]

    def peek(self, k=1) -> Token:
        return self.toks[min(self.pos + k, len(self.toks) - 1)]

    def error(self, msg, expected=(), tok=None):
        tok = tok or self.tok
        raise ParseError(msg, tok.line, tok.col, expected)

    def at(self, text, kind=None):
        t = self.tok
        return t.text == text and (kind is None or t.kind == kind) and t.kind != "RAW"

    def accept(self, text):
        if self.at(text) and self.tok.kind in ("SYM", "KW"):
            self.pos += 1
            return True
        return False

    def expect(self, text):
        if not self.accept(text):
            self.error(f"unexpected {self.describe()}", [repr(text)])

    def describe(self, tok=None):
        tok = tok or self.tok
        return "end of input" if tok.kind == "EOF" else repr(tok.text)

    def name(self):
        t = self.tok
        if t.kind != "NAME":
            self.error(f"unexpected {self.describe()}", ["identifier"])
        self.pos += 1
        return t.text

    # -- expressions --------------------------------------------------------
    def expr(self) -> S.Term:
        t = self.tok
        if t.kind == "KW" and t.text == "fun":
            self.pos += 1
            binders = self.lam_binders()
            self.expect("=>")
            body = self.expr()
            for name, dom in reversed(binders):
                body = S.Lam(dom, S.abstract([name], body))
            return body
        if t.kind == "KW" and t.text in ("Pi", "Sg", "W"):
            self.pos += 1
            binders = self.typed_binders()
            self.expect(",")
            body = self.expr()
            cls = {"Pi": S.Pi, "Sg": S.Sigma, "W": S.W}[t.text]
            for name, dom in reversed(binders):
                body = cls(dom, S.abstract([name], body))
            return body
        return self.arrow()

    def lam_binders(self):
        if self.tok.kind == "NAME" and self.peek().text == ":":
            name = self.name()
            self.expect(":")
            dom = self.expr()
            return [(name, dom)]
        out = []
        while True:
            if self.tok.kind == "NAME":
                out.append((self.name(), None))
            elif self.at("(", "SYM") and self.peek().kind == "NAME":
                out.extend(self.typed_group())
            else:
                break
        if not out:
            self.error(f"unexpected {self.describe()}", ["identifier", "'('"])
        return out

    def typed_group(self):
        self.expect("(")
        names = [self.name()]
        while self.tok.kind == "NAME":
            names.append(self.name())
        self.expect(":")
        dom = self.expr()
        self.expect(")")
        return [(n, dom) for n in names]

    def typed_binders(self):
        out = []
        while self.at("(", "SYM"):
            out.extend(self.typed_group())
        if not out:
            self.error(f"unexpected {self.describe()}", ["'('"])
        return out

    def arrow(self):
        lhs = self.sum()
        if self.accept("->"):
            return S.arrow(lhs, self.expr())
        return lhs

    def sum(self):
        lhs = self.prod()
        if self.accept("+"):
            return S.Sum(lhs, self.sum())
        return lhs

    def prod(self):
        lhs = self.cplus()
        if self.accept("*"):
            return S.product(lhs, self.prod())
        return lhs

    def cplus(self):
        lhs = self.app()
        if self.accept("++"):
            return S.CPlus(lhs, self.cplus())
        return lhs

    def app(self):
        t = self.tok
        if t.kind == "KW" and t.text in _FORMS:
            self.pos += 1
            cls, shape = _FORMS[t.text]
            args = [self.scope(k) if isinstance(k, int) else self.atom() for k in shape]
            head = cls(*args)
        else:
            head = self.atom()
        while self.starts_atom():
            head = S.App(head, self.atom())
        return head

    def starts_atom(self):
        t = self.tok
        if t.kind == "NAME":
            return True
        if t.kind == "KW" and t.text in _CONSTANTS:
            return True
        return t.kind == "SYM" and t.text == "("

    def atom(self):
        t = self.tok
        if t.kind == "NAME":
            self.pos += 1
            return S.Var(t.text)
        if t.kind == "KW" and t.text in _CONSTANTS:
            self.pos += 1
            return _CONSTANTS[t.text]
        if self.accept("("):
            e = self.expr()
            if self.accept(","):
                items = [e, self.expr()]
                while self.accept(","):
                    items.append(self.expr())
                self.expect(")")
                out = items[-1]
                for x in reversed(items[:-1]):
                    out = S.Pair(x, out)
                return out
            self.expect(")")
            return e
        self.error(f"unexpected {self.describe()}", ["identifier", "'('", "constant"])

    def scope(self, arity):
        start = self.tok
        self.expect("(")
        names = []
        while self.tok.kind == "NAME":
            names.append(self.name())
        if not self.accept("."):
            self.error(f"unexpected {self.describe()}", ["'.'", "identifier"])
        if len(names) != arity:
            raise ParseError(
                f"this binder takes {arity} variable(s), got {len(names)}", start.line, start.col
            )
        body = self.expr()
        self.expect(")")
        return S.abstract(names, body)

    # -- declarations -------------------------------------------------------
    def params(self):
        out = []
        while self.at("(", "SYM"):
            self.expect("(")
            names = [self.name()]
            while self.tok.kind == "NAME":
                names.append(self.name())
            self.expect(":")
            kind = S.TYPE if self.accept("Type") else self.expr()
            self.expect(")")
            out.extend((n, kind) for n in names)
        return tuple(out)

    def decl(self, expect):
        t = self.tok
        if t.kind == "RAW":
            self.pos += 1
            words = t.payload[0].split()
            name = words[1] if len(words) > 1 else None
            return RawDecl(t.text, t.line, t.col, t.payload, name, expect=expect)
        if t.kind != "KW" or t.text not in DECL_KEYWORDS:
            self.error(f"unexpected {self.describe()}", sorted(DECL_KEYWORDS))
        self.pos += 1
        kw = t.text
        if kw in ("def", "axiom"):
            name = self.name()
            params = self.params()
            self.expect(":")
            ty = S.TYPE if self.accept("Type") else self.expr()
            body = None
            if kw == "def":
                self.expect(":=")
                body = self.expr()
            return DefDecl(kw, t.line, t.col, name, params, ty, body, expect=expect)
        if kw == "check":
            term = self.expr()
            self.expect(":")
            return CheckDecl(kw, t.line, t.col, term, self.expr(), expect=expect)
        if kw == "normalize":
            return NormalizeDecl(kw, t.line, t.col, self.expr(), expect=expect)
        if kw == "flag":
            flag = self.tok
            if flag.text not in ("eta", "funext", "univalence"):
                self.error(f"unknown flag {self.describe()}", ["eta", "funext", "univalence"])
            self.pos += 1
            if self.accept("on"):
                value = True
            else:
                self.expect("off")
                value = False
            return FlagDecl(kw, t.line, t.col, flag.text, value, expect=expect)
        return InterpDecl(kw, t.line, t.col, self.name(), expect=expect)

    def source(self):
        decls = []
        expect = None
        while self.tok.kind != "EOF":
            if self.tok.kind == "EXPECT":
                expect = self.tok.payload
                self.pos += 1
                continue
            decls.append(self.decl(expect))
            expect = None
        return SourceFile(decls)


def _tokens(text):
    try:
        return [t for t in tokenize(text)]
    except LexError as e:
        raise ParseError(str(e).split(": ", 1)[-1], e.line, e.col) from None


def parse(text: str) -> SourceFile:
    return Parser(_tokens(text)).source()


def parse_term(text: str) -> S.Term:
    p = Parser([t for t in _tokens(text) if t.kind != "EXPECT"])
    e = p.expr()
    if p.tok.kind != "EOF":
        p.error(f"unexpected {p.describe()}", ["end of input"])
    return e


def parse_context(text: str) -> S.Context:
    """Parse ``x : A, y : B`` (or an empty string) into a context."""
    p = Parser([t for t in _tokens(text) if t.kind != "EXPECT"])
    entries = []
    while p.tok.kind != "EOF":
        n = p.name()
        p.expect(":")
        ty = S.TYPE if p.accept("Type") else p.expr()
        entries.append((n, ty))
        if not p.accept(","):
            break
    if p.tok.kind != "EOF":
        p.error(f"unexpected {p.describe()}", ["','", "end of input"])
    return S.Context(tuple(entries))
