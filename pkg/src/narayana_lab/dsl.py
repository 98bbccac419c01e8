"""A small expression language for specialization queries.

Grammar (whitespace-insensitive, LL(1)):

    query := basis '[' alpha ']' | 'P' '{' nat ',' nat '}'
    basis := ('h'|'e'|'p') nat | ('s'|'m') '{' nat (',' nat)* '}'
    alpha := term (('+'|'-') term)*
    term  := [nat '*'] atom
    atom  := nat | 'q' | 'Q' | 'q2' | 'Q2'

A bare nat in alpha contributes to the integer constant; q / q2 are rank-1
atoms with values q / q2; Q / Q2 are rank-1 atoms with values 1-q / 1-q2
(writing `1 - 1*q` instead would wrongly make q itself rank-1).
"""

from __future__ import annotations

from dataclasses import dataclass

from .lambdaring import (
    Alphabet,
    VALUE_ONE_MINUS_Q,
    VALUE_ONE_MINUS_Q2,
    VALUE_Q,
    VALUE_Q2,
    e_of,
    h_of,
    hall_littlewood_principal,
    m_of_constant,
    p_of,
    s_of,
)
from .partitions import Partition
from .poly import PolyQQ

ATOM_VALUES = {
    "q": VALUE_Q,
    "Q": VALUE_ONE_MINUS_Q,
    "q2": VALUE_Q2,
    "Q2": VALUE_ONE_MINUS_Q2,
}


class DslError(ValueError):
    """Lexical or syntax error, carrying a byte offset and the expected tokens."""

    def __init__(self, position: int, expected: tuple[str, ...], found: str):
        self.position = position
        self.expected = expected
        self.found = found
        want = " or ".join(expected)
        super().__init__(f"at offset {position}: expected {want}, found {found}")


@dataclass(frozen=True)
class AlphaTerm:
    sign: int  # +1 or -1
    mult: int | None  # explicit multiplier, or None when omitted
    atom: int | str  # integer constant or one of 'q', 'Q', 'q2', 'Q2'


@dataclass(frozen=True)
class BasisApp:
    basis: str  # 'h', 'e', 'p', 's' or 'm'
    index: int | None  # for h/e/p
    partition: tuple[int, ...] | None  # for s/m
    alpha: tuple[AlphaTerm, ...]


@dataclass(frozen=True)
class PrincipalHL:
    r: int
    n: int


Expr = BasisApp | PrincipalHL

_SYMBOLS = "[]{},+-*"


@dataclass(frozen=True)
class _Token:
    kind: str  # 'word', 'nat', one of the symbols, or 'end'
    text: str
    pos: int


def _lex(text: str) -> list[_Token]:
    out: list[_Token] = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch in _SYMBOLS:
            out.append(_Token(ch, ch, i))
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            out.append(_Token("nat", text[i:j], i))
            i = j
            continue
        if ch.isalpha():
            j = i + 1
            while j < len(text) and text[j].isdigit():
                j += 1
            out.append(_Token("word", text[i:j], i))
            i = j
            continue
        raise DslError(i, ("a letter", "a digit", "punctuation"), repr(ch))
    out.append(_Token("end", "", len(text)))
    return out


class _Parser:
    def __init__(self, tokens: list[_Token]):
        self.tokens = tokens
        self.i = 0

    @property
    def cur(self) -> _Token:
        return self.tokens[self.i]

    def _fail(self, *expected: str):
        tok = self.cur
        found = "end of input" if tok.kind == "end" else repr(tok.text)
        raise DslError(tok.pos, expected, found)

    def take(self, kind: str) -> _Token:
        tok = self.cur
        if tok.kind != kind:
            self._fail(f"'{kind}'" if kind in _SYMBOLS else kind)
        self.i += 1
        return tok

    def nat(self) -> int:
        return int(self.take("nat").text)

    def parse_query(self) -> Expr:
        tok = self.cur
        if tok.kind != "word":
            self._fail("basis name", "'P'")
        if tok.text == "P":
            self.i += 1
            self.take("{")
            r = self.nat()
            self.take(",")
            n = self.nat()
            self.take("}")
            self.take("end")
            return PrincipalHL(r, n)
        head, digits = tok.text[0], tok.text[1:]
        if head in "hep":
            if not digits:
                raise DslError(tok.pos + 1, ("index digits",), "end of name")
            self.i += 1
            index: int | None = int(digits)
            partition = None
        elif head in "sm" and not digits:
            self.i += 1
            partition = self.parse_partition(tok)
            index = None
        else:
            self._fail("one of h/e/p/s/m", "'P'")
        self.take("[")
        alpha = self.parse_alpha()
        self.take("]")
        self.take("end")
        expr = BasisApp(head, index, partition, alpha)
        if head == "m" and any(isinstance(t.atom, str) for t in alpha):
            bad = next(t for t in alpha if isinstance(t.atom, str))
            raise DslError(
                self.tokens[0].pos,
                ("a constant alphabet for m",),
                f"rank-1 atom {bad.atom!r}",
            )
        return expr

    def parse_partition(self, head: _Token) -> tuple[int, ...]:
        self.take("{")
        parts = [self.nat()]
        while self.cur.kind == ",":
            self.i += 1
            parts.append(self.nat())
        self.take("}")
        for i in range(1, len(parts)):
            if parts[i] > parts[i - 1] or parts[i] < 1:
                raise DslError(
                    head.pos, ("a weakly decreasing positive partition",), str(tuple(parts))
                )
        if parts[0] < 1:
            raise DslError(head.pos, ("positive partition parts",), str(tuple(parts)))
        return tuple(parts)

    def parse_alpha(self) -> tuple[AlphaTerm, ...]:
        terms = [self.parse_term(1)]
        while self.cur.kind in "+-":
            sign = 1 if self.cur.kind == "+" else -1
            self.i += 1
            terms.append(self.parse_term(sign))
        return tuple(terms)

    def parse_term(self, sign: int) -> AlphaTerm:
        tok = self.cur
        if tok.kind == "nat":
            self.i += 1
            value = int(tok.text)
            if self.cur.kind == "*":
                self.i += 1
                if value == 0:
                    raise DslError(tok.pos, ("a nonzero multiplier",), "0")
                return AlphaTerm(sign, value, self.parse_atom())
            return AlphaTerm(sign, None, value)
        if tok.kind == "word":
            return AlphaTerm(sign, None, self.parse_atom())
        self._fail("a number", "an atom")

    def parse_atom(self) -> int | str:
        tok = self.cur
        if tok.kind == "nat":
            self.i += 1
            return int(tok.text)
        if tok.kind == "word" and tok.text in ATOM_VALUES:
            self.i += 1
            return tok.text
        self._fail("one of q/Q/q2/Q2", "a number")


def parse(text: str) -> Expr:
    """Parse a query; errors carry the byte offset and the expected tokens."""
    return _Parser(_lex(text)).parse_query()


def render(expr: Expr) -> str:
    """Canonical text for an expression; parse(render(e)) == e."""
    if isinstance(expr, PrincipalHL):
        return f"P{{{expr.r},{expr.n}}}"
    if expr.partition is not None:
        head = f"{expr.basis}{{{','.join(map(str, expr.partition))}}}"
    else:
        head = f"{expr.basis}{expr.index}"
    pieces: list[str] = []
    for i, term in enumerate(expr.alpha):
        body = str(term.atom) if term.mult is None else f"{term.mult}*{term.atom}"
        if i == 0:
            pieces.append(body)
        else:
            pieces.append(("+ " if term.sign > 0 else "- ") + body)
    return f"{head}[{' '.join(pieces)}]"


def alphabet_of(terms: tuple[AlphaTerm, ...]) -> Alphabet:
    """Collapse parsed alphabet terms into a specialization point."""
    constant = 0
    atoms: list[tuple[int, PolyQQ]] = []
    for term in terms:
        weight = term.sign * (term.mult if term.mult is not None else 1)
        if isinstance(term.atom, int):
            constant += weight * term.atom
        else:
            atoms.append((weight, ATOM_VALUES[term.atom]))
    return Alphabet(constant=constant, atoms=tuple(atoms))


def evaluate(expr: Expr) -> PolyQQ:
    """Evaluate a parsed query against the specialization engine."""
    if isinstance(expr, PrincipalHL):
        return hall_littlewood_principal(expr.r, expr.n)
    point = alphabet_of(expr.alpha)
    if expr.basis == "h":
        return h_of(expr.index, point)
    if expr.basis == "e":
        return e_of(expr.index, point)
    if expr.basis == "p":
        return p_of(expr.index, point)
    mu = Partition(expr.partition)
    if expr.basis == "s":
        return s_of(mu, point)
    if not point.is_constant:
        raise ValueError("m needs a pure-constant alphabet")
    return PolyQQ.const(m_of_constant(mu, point.constant))


def eval_text(text: str) -> PolyQQ:
    """Parse and evaluate in one step."""
    return evaluate(parse(text))
