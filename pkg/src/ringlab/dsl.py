"""Ring-expression DSL: lexer, recursive-descent parser, printer, elaborator.

Grammar (LL(1)):

    expr       := "zmod" "(" INT ")"
                | "prod" "(" expr { "," expr } ")"
                | "quot" "(" expr "," idealspec ")"
                | "triv" "(" expr "," modulespec ")"
                | "dupl" "(" expr "," idealspec ")"
                | "amalg" "(" expr "," expr "," homspec "," idealspec ")"
    idealspec  := "full" | "zero" | "ideal" "(" [ gen { "," gen } ] ")"
    gen        := INT | "(" gen { "," gen } ")"
    modulespec := "self" | idealspec | "quotmod" "(" idealspec ")"
    homspec    := "id" | "diag" | "canon" | "table" ":" "[" [ INT { "," INT } ] "]"

Parse errors carry line/column and the expected-token set; elaboration errors
are positioned at the offending construct's keyword.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Union

from .ideals import Ideal, ideal_generated, whole_ideal, zero_ideal
from .rings import (
    FiniteRing,
    RingError,
    RingHom,
    identity_hom,
    make_hom,
    make_product,
    make_quotient,
    make_trivial_extension,
    make_zmod,
    module_from_ideal,
    module_from_quotient,
    module_self,
)
from .amalgam import AmalgamationRing, make_amalgamation, make_duplication


class DslError(Exception):
    """Positioned lexical/syntax diagnostic."""

    def __init__(self, message: str, line: int, col: int, expected: tuple[str, ...] = ()):
        self.message = message
        self.line = line
        self.col = col
        self.expected = expected
        suffix = f" (expected {', '.join(expected)})" if expected else ""
        super().__init__(f"line {line}, col {col}: {message}{suffix}")


class ElabError(Exception):
    """Semantic error while turning an AST into rings."""


# --- AST ------------------------------------------------------------------

Gen = Union[int, tuple]


@dataclass(frozen=True)
class IdealSpec:
    kind: str  # "full" | "zero" | "gens"
    gens: tuple[Gen, ...] = ()


@dataclass(frozen=True)
class ModuleSpec:
    kind: str  # "self" | "ideal" | "quotmod"
    ideal: Optional[IdealSpec] = None


@dataclass(frozen=True)
class HomSpec:
    kind: str  # "id" | "diag" | "canon" | "table"
    table: Optional[tuple[int, ...]] = None


@dataclass(frozen=True)
class ZmodE:
    n: int


@dataclass(frozen=True)
class ProdE:
    factors: tuple


@dataclass(frozen=True)
class QuotE:
    base: "RingExpr"
    ideal: IdealSpec


@dataclass(frozen=True)
class TrivE:
    base: "RingExpr"
    module: ModuleSpec


@dataclass(frozen=True)
class DuplE:
    base: "RingExpr"
    ideal: IdealSpec


@dataclass(frozen=True)
class AmalgE:
    a: "RingExpr"
    b: "RingExpr"
    hom: HomSpec
    ideal: IdealSpec


RingExpr = Union[ZmodE, ProdE, QuotE, TrivE, DuplE, AmalgE]


# --- lexer ----------------------------------------------------------------

_PUNCT = {"(": "LPAREN", ")": "RPAREN", ",": "COMMA", ":": "COLON", "[": "LBRACKET", "]": "RBRACKET"}


@dataclass(frozen=True)
class Token:
    kind: str  # IDENT, INT, punctuation kinds, EOF
    text: str
    line: int
    col: int


def tokenize(text: str) -> list[Token]:
    tokens: list[Token] = []
    line, col = 1, 1
    i = 0
    while i < len(text):
        c = text[i]
        if c == "\n":
            line += 1
            col = 1
            i += 1
            continue
        if c.isspace():
            col += 1
            i += 1
            continue
        if c in _PUNCT:
            tokens.append(Token(_PUNCT[c], c, line, col))
            col += 1
            i += 1
            continue
        if c.isdigit():
            j = i
            while j < len(text) and text[j].isdigit():
                j += 1
            tokens.append(Token("INT", text[i:j], line, col))
            col += j - i
            i = j
            continue
        if c.isalpha() or c == "_":
            j = i
            while j < len(text) and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(Token("IDENT", text[i:j], line, col))
            col += j - i
            i = j
            continue
        raise DslError(f"unexpected character {c!r}", line, col)
    tokens.append(Token("EOF", "", line, col))
    return tokens


# --- parser ---------------------------------------------------------------

_CONSTRUCTORS = ("zmod", "prod", "quot", "triv", "dupl", "amalg")


class _Parser:
    def __init__(self, tokens: list[Token]):
        self.tokens = tokens
        self.pos = 0

    def peek(self) -> Token:
        return self.tokens[self.pos]

    def advance(self) -> Token:
        t = self.tokens[self.pos]
        self.pos += 1
        return t

    def fail(self, expected: tuple[str, ...]) -> DslError:
        t = self.peek()
        what = "end of input" if t.kind == "EOF" else repr(t.text)
        return DslError(f"unexpected {what}", t.line, t.col, expected)

    def expect(self, kind: str, label: str) -> Token:
        if self.peek().kind != kind:
            raise self.fail((label,))
        return self.advance()

    def expect_keyword(self, *words: str) -> Token:
        t = self.peek()
        if t.kind != "IDENT" or t.text not in words:
            raise self.fail(words)
        return self.advance()

    def parse_int(self) -> int:
        return int(self.expect("INT", "integer").text)

    def parse_expr(self) -> RingExpr:
        t = self.peek()
        if t.kind != "IDENT" or t.text not in _CONSTRUCTORS:
            raise self.fail(_CONSTRUCTORS)
        self.advance()
        self.expect("LPAREN", "'('")
        if t.text == "zmod":
            n = self.parse_int()
            self.expect("RPAREN", "')'")
            return ZmodE(n)
        if t.text == "prod":
            factors = [self.parse_expr()]
            while self.peek().kind == "COMMA":
                self.advance()
                factors.append(self.parse_expr())
            self.expect("RPAREN", "')'")
            return ProdE(tuple(factors))
        if t.text == "quot":
            base = self.parse_expr()
            self.expect("COMMA", "','")
            spec = self.parse_idealspec()
            self.expect("RPAREN", "')'")
            return QuotE(base, spec)
        if t.text == "triv":
            base = self.parse_expr()
            self.expect("COMMA", "','")
            spec = self.parse_modulespec()
            self.expect("RPAREN", "')'")
            return TrivE(base, spec)
        if t.text == "dupl":
            base = self.parse_expr()
            self.expect("COMMA", "','")
            spec = self.parse_idealspec()
            self.expect("RPAREN", "')'")
            return DuplE(base, spec)
        a = self.parse_expr()
        self.expect("COMMA", "','")
        b = self.parse_expr()
        self.expect("COMMA", "','")
        hom = self.parse_homspec()
        self.expect("COMMA", "','")
        spec = self.parse_idealspec()
        self.expect("RPAREN", "')'")
        return AmalgE(a, b, hom, spec)

    def parse_idealspec(self) -> IdealSpec:
        t = self.expect_keyword("ideal", "full", "zero")
        if t.text == "full":
            return IdealSpec("full")
        if t.text == "zero":
            return IdealSpec("zero")
        self.expect("LPAREN", "'('")
        gens: list[Gen] = []
        if self.peek().kind != "RPAREN":
            gens.append(self.parse_gen())
            while self.peek().kind == "COMMA":
                self.advance()
                gens.append(self.parse_gen())
        self.expect("RPAREN", "')'")
        return IdealSpec("gens", tuple(gens))

    def parse_gen(self) -> Gen:
        if self.peek().kind == "INT":
            return self.parse_int()
        if self.peek().kind == "LPAREN":
            self.advance()
            items = [self.parse_gen()]
            while self.peek().kind == "COMMA":
                self.advance()
                items.append(self.parse_gen())
            self.expect("RPAREN", "')'")
            return tuple(items)
        raise self.fail(("integer", "'('"))

    def parse_modulespec(self) -> ModuleSpec:
        t = self.peek()
        if t.kind == "IDENT" and t.text == "self":
            self.advance()
            return ModuleSpec("self")
        if t.kind == "IDENT" and t.text == "quotmod":
            self.advance()
            self.expect("LPAREN", "'('")
            spec = self.parse_idealspec()
            self.expect("RPAREN", "')'")
            return ModuleSpec("quotmod", spec)
        if t.kind == "IDENT" and t.text in ("ideal", "full", "zero"):
            return ModuleSpec("ideal", self.parse_idealspec())
        raise self.fail(("self", "quotmod", "ideal", "full", "zero"))

    def parse_homspec(self) -> HomSpec:
        t = self.expect_keyword("id", "diag", "canon", "table")
        if t.text != "table":
            return HomSpec(t.text)
        self.expect("COLON", "':'")
        self.expect("LBRACKET", "'['")
        entries: list[int] = []
        if self.peek().kind != "RBRACKET":
            entries.append(self.parse_int())
            while self.peek().kind == "COMMA":
                self.advance()
                entries.append(self.parse_int())
        self.expect("RBRACKET", "']'")
        return HomSpec("table", tuple(entries))


def parse(text: str) -> RingExpr:
    p = _Parser(tokenize(text))
    expr = p.parse_expr()
    if p.peek().kind != "EOF":
        raise p.fail(("end of input",))
    return expr


def parse_idealspec_text(text: str) -> IdealSpec:
    p = _Parser(tokenize(text))
    spec = p.parse_idealspec()
    if p.peek().kind != "EOF":
        raise p.fail(("end of input",))
    return spec


# --- printer --------------------------------------------------------------


def _print_gen(g: Gen) -> str:
    if isinstance(g, tuple):
        return "(" + ", ".join(_print_gen(x) for x in g) + ")"
    return str(g)


def _print_idealspec(s: IdealSpec) -> str:
    if s.kind in ("full", "zero"):
        return s.kind
    return "ideal(" + ", ".join(_print_gen(g) for g in s.gens) + ")"


def _print_modulespec(s: ModuleSpec) -> str:
    if s.kind == "self":
        return "self"
    if s.kind == "quotmod":
        return f"quotmod({_print_idealspec(s.ideal)})"
    return _print_idealspec(s.ideal)


def _print_homspec(s: HomSpec) -> str:
    if s.kind != "table":
        return s.kind
    return "table:[" + ", ".join(str(v) for v in s.table) + "]"


def print_expr(e: RingExpr) -> str:
    if isinstance(e, ZmodE):
        return f"zmod({e.n})"
    if isinstance(e, ProdE):
        return "prod(" + ", ".join(print_expr(f) for f in e.factors) + ")"
    if isinstance(e, QuotE):
        return f"quot({print_expr(e.base)}, {_print_idealspec(e.ideal)})"
    if isinstance(e, TrivE):
        return f"triv({print_expr(e.base)}, {_print_modulespec(e.module)})"
    if isinstance(e, DuplE):
        return f"dupl({print_expr(e.base)}, {_print_idealspec(e.ideal)})"
    if isinstance(e, AmalgE):
        return (
            f"amalg({print_expr(e.a)}, {print_expr(e.b)}, "
            f"{_print_homspec(e.hom)}, {_print_idealspec(e.ideal)})"
        )
    raise TypeError(f"not a ring expression: {e!r}")


# --- elaboration ----------------------------------------------------------


def elaborate_ideal(R: FiniteRing, spec: IdealSpec) -> Ideal:
    if spec.kind == "full":
        return whole_ideal(R)
    if spec.kind == "zero":
        return zero_ideal(R)
    try:
        gens = [R.resolve(g) for g in spec.gens]
    except RingError as e:
        raise ElabError(str(e)) from e
    return ideal_generated(R, gens)


def _elaborate_module(A: FiniteRing, spec: ModuleSpec):
    if spec.kind == "self":
        return module_self(A)
    I = elaborate_ideal(A, spec.ideal)
    if spec.kind == "quotmod":
        if I.is_whole:
            raise ElabError("quotient module by the whole ring is the zero module")
        return module_from_quotient(A, I.elements, name=I.describe()[1:-1] or "0")
    return module_from_ideal(A, I.elements, name=I.describe()[1:-1] or "0")


def _elaborate_hom(A: FiniteRing, astA: RingExpr, astB: RingExpr, hom: HomSpec):
    """Target ring and validated homomorphism for an amalg node.

    id/diag/canon require the target expression to be built over the same
    source expression, so the source ring object is shared."""
    if hom.kind == "id":
        if astB != astA:
            raise ElabError("hom 'id' requires both ring expressions to be identical")
        return A, identity_hom(A)
    if hom.kind == "diag":
        if not isinstance(astB, ProdE) or any(f != astA for f in astB.factors):
            raise ElabError("hom 'diag' requires the target to be a power of the source expression")
        B = make_product([A] * len(astB.factors))
        table = []
        for a in range(A.order):
            acc = 0
            for _ in astB.factors:
                acc = acc * A.order + a
            table.append(acc)
        return B, make_hom(A, B, table, name="diag")
    if hom.kind == "canon":
        if isinstance(astB, QuotE) and astB.base == astA:
            I = elaborate_ideal(A, astB.ideal)
            if I.is_whole:
                raise ElabError("cannot quotient by the whole ring")
            B, pi = make_quotient(A, I)
            return B, pi
        if isinstance(astB, TrivE) and astB.base == astA:
            E = _elaborate_module(A, astB.module)
            B = make_trivial_extension(A, E)
            table = [a * E.size for a in range(A.order)]
            return B, make_hom(A, B, table, name="canon")
        raise ElabError(
            "hom 'canon' requires the target to be quot(<source>, ...) or triv(<source>, ...)"
        )
    B = elaborate(astB)
    try:
        return B, make_hom(A, B, hom.table, name="table")
    except RingError as e:
        raise ElabError(str(e)) from e


def elaborate(expr: RingExpr) -> FiniteRing:
    """Build the ring (or amalgamation) described by the AST."""
    try:
        if isinstance(expr, ZmodE):
            return make_zmod(expr.n)
        if isinstance(expr, ProdE):
            return make_product([elaborate(f) for f in expr.factors])
        if isinstance(expr, QuotE):
            base = elaborate(expr.base)
            I = elaborate_ideal(base, expr.ideal)
            if I.is_whole:
                raise ElabError("cannot quotient by the whole ring")
            Q, _ = make_quotient(base, I)
            return Q
        if isinstance(expr, TrivE):
            base = elaborate(expr.base)
            return make_trivial_extension(base, _elaborate_module(base, expr.module))
        if isinstance(expr, DuplE):
            base = elaborate(expr.base)
            return make_duplication(base, elaborate_ideal(base, expr.ideal))
        if isinstance(expr, AmalgE):
            A = elaborate(expr.a)
            B, f = _elaborate_hom(A, expr.a, expr.b, expr.hom)
            J = elaborate_ideal(B, expr.ideal)
            return make_amalgamation(A, B, f, J)
    except RingError as e:
        raise ElabError(str(e)) from e
    raise TypeError(f"not a ring expression: {expr!r}")


def elaborate_text(text: str) -> FiniteRing:
    return elaborate(parse(text))


def require_amalgamation(R: FiniteRing) -> AmalgamationRing:
    if not isinstance(R, AmalgamationRing):
        raise ElabError("this command needs an amalgamation expression (dupl or amalg)")
    return R
