"""Reader and writer for the `.lp` program text format.

Grammar (UTF-8; `%` starts a comment running to end of line; whitespace
is free-form):

    program  = clause*
    clause   = atom [ ":-" literal ("," literal)* ] "."
    literal  = atom | "not" atom
    atom     = [A-Za-z_][A-Za-z0-9_]*

`not` is a reserved word and cannot name an atom.  Rendering is
canonical: positive body literals first, each group in atom-id order, so
re-parsing a rendered program reproduces it exactly.
"""

from __future__ import annotations

from dataclasses import dataclass

from .core import AtomTable, Clause, Program


@dataclass(frozen=True)
class SourceSpan:
    """1-based line/column of the token a parse error points at."""

    line: int
    column: int

    def __str__(self) -> str:
        return f"line {self.line}, column {self.column}"


class ParseError(ValueError):
    def __init__(self, message: str, span: SourceSpan):
        super().__init__(f"{span}: {message}")
        self.message = message
        self.span = span


@dataclass(frozen=True)
class _Token:
    kind: str  # "ident" | "not" | ":-" | "," | "." | "eof"
    text: str
    span: SourceSpan


def _is_ident_start(ch: str) -> bool:
    return "a" <= ch <= "z" or "A" <= ch <= "Z" or ch == "_"


def _is_ident_char(ch: str) -> bool:
    return _is_ident_start(ch) or "0" <= ch <= "9"


def _tokenize(text: str) -> list[_Token]:
    tokens: list[_Token] = []
    line, col = 1, 1
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch == "\n":
            i += 1
            line += 1
            col = 1
            continue
        if ch in " \t\r":
            i += 1
            col += 1
            continue
        if ch == "%":
            while i < n and text[i] != "\n":
                i += 1
            continue
        span = SourceSpan(line, col)
        if _is_ident_start(ch):
            j = i
            while j < n and _is_ident_char(text[j]):
                j += 1
            word = text[i:j]
            tokens.append(_Token("not" if word == "not" else "ident", word, span))
            col += j - i
            i = j
            continue
        if text.startswith(":-", i):
            tokens.append(_Token(":-", ":-", span))
            i += 2
            col += 2
            continue
        if ch in ",.":
            tokens.append(_Token(ch, ch, span))
            i += 1
            col += 1
            continue
        raise ParseError(f"unexpected character {ch!r}", span)
    tokens.append(_Token("eof", "", SourceSpan(line, col)))
    return tokens


def _describe(tok: _Token) -> str:
    return "end of input" if tok.kind == "eof" else f"'{tok.text}'"


def parse_program(text: str) -> Program:
    """Parse `.lp` source into a Program with a fresh, frozen atom table.

    Clause order follows the input; exact duplicate clauses collapse.
    Raises ParseError (with a SourceSpan) on malformed input, a missing
    head, or `not` in head position.
    """
    tokens = _tokenize(text)
    pos = 0

    def take() -> _Token:
        nonlocal pos
        tok = tokens[pos]
        pos += 1
        return tok

    table = AtomTable()
    clauses: list[Clause] = []
    while tokens[pos].kind != "eof":
        tok = take()
        if tok.kind == "not":
            raise ParseError("'not' cannot appear in the head", tok.span)
        if tok.kind != "ident":
            raise ParseError(f"expected clause head, found {_describe(tok)}", tok.span)
        head = table.intern(tok.text).id
        pos_body: set[int] = set()
        neg_body: set[int] = set()
        tok = take()
        if tok.kind == ":-":
            while True:
                lit = take()
                if lit.kind == "not":
                    if tokens[pos].kind != "ident":
                        raise ParseError("expected atom name after 'not'", lit.span)
                    neg_body.add(table.intern(take().text).id)
                elif lit.kind == "ident":
                    pos_body.add(table.intern(lit.text).id)
                else:
                    raise ParseError(f"expected literal, found {_describe(lit)}", lit.span)
                sep = take()
                if sep.kind == ".":
                    break
                if sep.kind != ",":
                    raise ParseError(f"expected ',' or '.', found {_describe(sep)}", sep.span)
        elif tok.kind != ".":
            raise ParseError(f"expected ':-' or '.', found {_describe(tok)}", tok.span)
        clauses.append(Clause(head, frozenset(pos_body), frozenset(neg_body)))
    return Program(table, clauses)


def render_program(program: Program) -> str:
    """Canonical text: one clause per line, body groups in atom-id order."""
    name = program.atoms.name
    lines = []
    for clause in program.clauses:
        lits = [name(a) for a in sorted(clause.pos_body)]
        lits += [f"not {name(a)}" for a in sorted(clause.neg_body)]
        if lits:
            lines.append(f"{name(clause.head)} :- {', '.join(lits)}.")
        else:
            lines.append(f"{name(clause.head)}.")
    return "".join(line + "\n" for line in lines)
