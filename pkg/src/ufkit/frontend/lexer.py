"""Tokenizer for the surface language.

Lines whose first word is a simplicial statement keyword are not tokenized;
they (and, for ``sset``/``smap`` blocks, the following lines up to ``end``)
are passed through as a single ``RAW`` token.
"""

from __future__ import annotations

import re
from dataclasses import dataclass

DECL_KEYWORDS = {"def", "axiom", "check", "normalize", "flag", "interp"}
RAW_KEYWORDS = {"sset", "smap", "kan", "trivial", "univalent", "eq", "repspace"}
EXPR_KEYWORDS = {
    "fun", "Pi", "Sg", "W", "Id", "refl", "J", "split", "sup", "wrec", "Zero", "case0",
    "One", "star", "rec1", "inl", "inr", "case", "U", "El", "pi", "sg", "id", "z", "o",
    "w", "ext", "extcomp", "Type",
}
KEYWORDS = DECL_KEYWORDS | RAW_KEYWORDS | EXPR_KEYWORDS | {"end", "on", "off"}

_TOKEN = re.compile(
    r"(?P<ws>[ \t\r]+)"
    r"|(?P<comment>--[^\n]*)"
    r"|(?P<name>[A-Za-z_][A-Za-z0-9_']*)"
    r"|(?P<num>[0-9]+)"
    r"|(?P<sym>:=|=>|->|\+\+|[():,.*+])"
)


@dataclass(frozen=True)
class Token:
    kind: str  # NAME, KW, NUM, SYM, RAW, EXPECT, EOF
    text: str
    line: int
    col: int
    payload: object = None


class LexError(Exception):
    def __init__(self, message, line, col):
        super().__init__(f"{line}:{col}: {message}")
        self.line, self.col = line, col


def _block_header(words):
    # `sset NAME` or `smap NAME : A -> B` without `=` opens a block
    return words[0] in ("sset", "smap") and "=" not in words


def tokenize(source: str):
    tokens = []
    lines = source.split("\n")
    i = 0
    while i < len(lines):
        line = lines[i]
        words = line.split()
        lineno = i + 1
        if words and words[0] in RAW_KEYWORDS:
            body = [line]
            if _block_header(words):
                j = i + 1
                while j < len(lines) and lines[j].split()[:1] != ["end"]:
                    body.append(lines[j])
                    j += 1
                if j == len(lines):
                    raise LexError(f"unterminated {words[0]} block", lineno, 1)
                i = j
            tokens.append(Token("RAW", words[0], lineno, line.index(words[0]) + 1, body))
            i += 1
            continue
        pos = 0
        while pos < len(line):
            m = _TOKEN.match(line, pos)
            if m is None:
                raise LexError(f"unexpected character {line[pos]!r}", lineno, pos + 1)
            kind = m.lastgroup
            text = m.group()
            col = pos + 1
            pos = m.end()
            if kind == "ws":
                continue
            if kind == "comment":
                body = text[2:].strip()
                if body.startswith("expect:"):
                    tokens.append(Token("EXPECT", text, lineno, col, body[len("expect:"):].strip()))
                continue
            if kind == "name":
                tokens.append(Token("KW" if text in KEYWORDS else "NAME", text, lineno, col))
            elif kind == "num":
                tokens.append(Token("NUM", text, lineno, col))
            else:
                tokens.append(Token("SYM", text, lineno, col))
        i += 1
    tokens.append(Token("EOF", "", len(lines), 1))
    return tokens
