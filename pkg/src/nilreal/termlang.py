"""Input language for the command line: scalar literals, element literals,
group words, and formula invocations.

Grammar (whitespace-insensitive, ASCII only):

    scalar  := '-'? term (('+' | '-') term)*
    term    := rational | rational? 'r2'
    rational:= INT ('/' INT)?
    expr    := factor ('*' factor)*
    factor  := atom ('^' ('-'? INT))*
    atom    := '[' scalar,scalar,scalar ']'        -- quotient-group element
             | '[' scalar,scalar,scalar,scalar ']' -- dilated-group element
             | IDENT '(' (arg (',' arg)*)? ')'     -- formula or embed call
             | '(' scalar ',' scalar ')'           -- plane point
             | '(' expr ')'
             | scalar

`^` binds tighter than `*`; both associate left.  Element arity picks the
group, and the two groups never mix in one word: crossing between them is
spelled with an explicit embed(...) call.  A scalar literal absorbs '+'
and '-' greedily, so 1-r2*2 is the product of 1-r2 and 2.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Sequence, Union

from . import interp
from .dilated import GPrimeElem, embed
from .errors import DomainError, ParseError, UsageError
from .heisenberg import EPoint, GElem, LineSubgroup
from .qfield import QuadRat, Rational, SQRT2

_DIGITS = set("0123456789")

_SINGLE_CHAR_TOKENS = {
    "/": "SLASH",
    "+": "PLUS",
    "-": "MINUS",
    "*": "STAR",
    "^": "CARET",
    "[": "LBRACKET",
    "]": "RBRACKET",
    "(": "LPAREN",
    ")": "RPAREN",
    ",": "COMMA",
}


@dataclass(frozen=True)
class Token:
    kind: str
    lexeme: str
    position: int


def tokenize(text: str) -> list[Token]:
    """Longest-match lexing; errors carry the offset of the bad character."""
    out: list[Token] = []
    i = 0
    n = len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch in _DIGITS:
            j = i
            while j < n and text[j] in _DIGITS:
                j += 1
            out.append(Token("INT", text[i:j], i))
            i = j
            continue
        if ch.isascii() and (ch.isalpha() or ch == "_"):
            j = i
            while j < n and text[j].isascii() and (text[j].isalnum() or text[j] == "_"):
                j += 1
            word = text[i:j]
            out.append(Token("R2" if word == "r2" else "IDENT", word, i))
            i = j
            continue
        kind = _SINGLE_CHAR_TOKENS.get(ch)
        if kind is None:
            raise ParseError(f"unexpected character {ch!r}", i)
        out.append(Token(kind, ch, i))
        i += 1
    return out


@dataclass(frozen=True)
class ScalarLit:
    value: QuadRat


@dataclass(frozen=True)
class GLit:
    value: GElem


@dataclass(frozen=True)
class GPLit:
    value: GPrimeElem


@dataclass(frozen=True)
class PointLit:
    value: EPoint


@dataclass(frozen=True)
class Mul:
    left: "Expr"
    right: "Expr"


@dataclass(frozen=True)
class Pow:
    base: "Expr"
    exponent: int


@dataclass(frozen=True)
class Call:
    name: str
    args: tuple["Expr", ...]


Expr = Union[ScalarLit, GLit, GPLit, PointLit, Mul, Pow, Call]

_SCALAR_START = {"INT", "R2", "MINUS"}


class _Parser:
    def __init__(self, tokens: Sequence[Token]):
        self.tokens = list(tokens)
        self.pos = 0

    def _end_offset(self) -> int:
        if not self.tokens:
            return 0
        last = self.tokens[-1]
        return last.position + len(last.lexeme)

    def peek(self) -> Optional[Token]:
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def here(self) -> int:
        tok = self.peek()
        return tok.position if tok is not None else self._end_offset()

    def advance(self) -> Token:
        tok = self.peek()
        if tok is None:
            raise ParseError("unexpected end of input", self._end_offset())
        self.pos += 1
        return tok

    def expect(self, kind: str, what: str) -> Token:
        tok = self.peek()
        if tok is None or tok.kind != kind:
            raise ParseError(f"expected {what}", self.here())
        return self.advance()

    def at(self, kind: str) -> bool:
        tok = self.peek()
        return tok is not None and tok.kind == kind

    def done(self) -> bool:
        return self.pos >= len(self.tokens)

    def require_done(self):
        if not self.done():
            raise ParseError("trailing input", self.here())

    # scalars

    def rational(self) -> Rational:
        num = self.expect("INT", "a number")
        if not self.at("SLASH"):
            return Rational(int(num.lexeme))
        self.advance()
        den = self.expect("INT", "a denominator")
        if int(den.lexeme) == 0:
            raise ParseError("zero denominator", den.position)
        return Rational(int(num.lexeme), int(den.lexeme))

    def term(self) -> QuadRat:
        if self.at("R2"):
            self.advance()
            return SQRT2
        coeff = self.rational()
        if self.at("R2"):
            self.advance()
            return QuadRat(0, coeff)
        return QuadRat(coeff)

    def scalar(self) -> QuadRat:
        negate = self.at("MINUS")
        if negate:
            self.advance()
        value = -self.term() if negate else self.term()
        while self.at("PLUS") or self.at("MINUS"):
            minus = self.advance().kind == "MINUS"
            nxt = self.term()
            value = value - nxt if minus else value + nxt
        return value

    # expressions

    def element_literal(self) -> Expr:
        self.expect("LBRACKET", "'['")
        entries: list[QuadRat] = []
        positions: list[int] = []
        while True:
            positions.append(self.here())
            entries.append(self.scalar())
            if self.at("COMMA"):
                self.advance()
                continue
            break
        self.expect("RBRACKET", "']'")
        if len(entries) == 3:
            return GLit(GElem(*entries))
        if len(entries) == 4:
            try:
                return GPLit(GPrimeElem(*entries))
            except DomainError:
                raise ParseError("x must be positive", positions[3]) from None
        raise ParseError("element literals have 3 or 4 entries", positions[0])

    def call(self) -> Expr:
        name = self.expect("IDENT", "a name")
        self.expect("LPAREN", "'('")
        args: list[Expr] = []
        if not self.at("RPAREN"):
            args.append(self.expr())
            while self.at("COMMA"):
                self.advance()
                args.append(self.expr())
        self.expect("RPAREN", "')'")
        return Call(name.lexeme, tuple(args))

    def paren_or_point(self) -> Expr:
        self.expect("LPAREN", "'('")
        tok = self.peek()
        if tok is not None and tok.kind in _SCALAR_START:
            first = self.scalar()
            if self.at("COMMA"):
                self.advance()
                second = self.scalar()
                self.expect("RPAREN", "')'")
                return PointLit(EPoint(first, second))
            inner = self.expr_after(ScalarLit(first))
        else:
            inner = self.expr()
        self.expect("RPAREN", "')'")
        return inner

    def atom(self) -> Expr:
        tok = self.peek()
        if tok is None:
            raise ParseError("expected an expression", self.here())
        if tok.kind == "LBRACKET":
            return self.element_literal()
        if tok.kind == "IDENT":
            return self.call()
        if tok.kind == "LPAREN":
            return self.paren_or_point()
        if tok.kind in _SCALAR_START:
            return ScalarLit(self.scalar())
        raise ParseError("expected an expression", tok.position)

    def factor_after(self, base: Expr) -> Expr:
        while self.at("CARET"):
            self.advance()
            negate = self.at("MINUS") or self.at("PLUS")
            minus = False
            if negate:
                minus = self.advance().kind == "MINUS"
            digits = self.expect("INT", "an integer exponent")
            exponent = -int(digits.lexeme) if minus else int(digits.lexeme)
            base = Pow(base, exponent)
        return base

    def factor(self) -> Expr:
        return self.factor_after(self.atom())

    def expr_after(self, first: Expr) -> Expr:
        node = self.factor_after(first)
        while self.at("STAR"):
            self.advance()
            node = Mul(node, self.factor())
        return node

    def expr(self) -> Expr:
        node = self.factor()
        while self.at("STAR"):
            self.advance()
            node = Mul(node, self.factor())
        return node


def parse_scalar(tokens: Sequence[Token]) -> QuadRat:
    p = _Parser(tokens)
    value = p.scalar()
    p.require_done()
    return value


def parse_expr(tokens: Sequence[Token]) -> Expr:
    p = _Parser(tokens)
    node = p.expr()
    p.require_done()
    return node


def parse_scalar_text(text: str) -> QuadRat:
    return parse_scalar(tokenize(text))


def parse_expr_text(text: str) -> Expr:
    return parse_expr(tokenize(text))


def parse_point_text(text: str) -> EPoint:
    p = _Parser(tokenize(text))
    p.expect("LPAREN", "'('")
    first = p.scalar()
    p.expect("COMMA", "','")
    second = p.scalar()
    p.expect("RPAREN", "')'")
    p.require_done()
    return EPoint(first, second)


def parse_element_text(text: str) -> Union[GElem, GPrimeElem]:
    """A single element literal of either arity, nothing else."""
    p = _Parser(tokenize(text))
    node = p.element_literal()
    p.require_done()
    assert isinstance(node, (GLit, GPLit))
    return node.value


def parse_gelem_text(text: str) -> GElem:
    p = _Parser(tokenize(text))
    node = p.element_literal()
    p.require_done()
    if not isinstance(node, GLit):
        raise ParseError("expected a 3-entry element literal", 0)
    return node.value


def parse_gprime_text(text: str) -> GPrimeElem:
    p = _Parser(tokenize(text))
    node = p.element_literal()
    p.require_done()
    if not isinstance(node, GPLit):
        raise ParseError("expected a 4-entry element literal", 0)
    return node.value


Value = Union[
    QuadRat,
    GElem,
    GPrimeElem,
    EPoint,
    bool,
    LineSubgroup,
    None,
    tuple,
]


def _kind_name(v: Value) -> str:
    if isinstance(v, QuadRat):
        return "scalar"
    if isinstance(v, GElem):
        return "quotient-group element"
    if isinstance(v, GPrimeElem):
        return "dilated-group element"
    if isinstance(v, EPoint):
        return "plane point"
    return type(v).__name__


def eval_expr(node: Expr) -> Value:
    """Evaluate a parsed tree; group words must stay inside one group."""
    if isinstance(node, ScalarLit):
        return node.value
    if isinstance(node, (GLit, GPLit, PointLit)):
        return node.value
    if isinstance(node, Mul):
        left = eval_expr(node.left)
        right = eval_expr(node.right)
        same_group = (
            (isinstance(left, GElem) and isinstance(right, GElem))
            or (isinstance(left, GPrimeElem) and isinstance(right, GPrimeElem))
            or (isinstance(left, QuadRat) and isinstance(right, QuadRat))
        )
        if not same_group:
            raise UsageError(
                f"cannot multiply a {_kind_name(left)} with a {_kind_name(right)}"
            )
        return left * right
    if isinstance(node, Pow):
        base = eval_expr(node.base)
        if isinstance(base, QuadRat):
            return base**node.exponent
        if isinstance(base, (GElem, GPrimeElem)):
            return base**node.exponent
        raise UsageError(f"cannot raise a {_kind_name(base)} to a power")
    if isinstance(node, Call):
        args = [eval_expr(a) for a in node.args]
        if interp.normalize_formula_id(node.name) == "embed":
            if len(args) != 1 or not isinstance(args[0], GElem):
                raise UsageError("embed takes one quotient-group element")
            return embed(args[0])
        return interp.definable_reals_demo(node.name, args)
    raise UsageError(f"cannot evaluate {node!r}")


def _needs_parens_in_mul(child: Expr, right_side: bool) -> bool:
    if isinstance(child, Mul):
        return right_side
    return False


def _format_pow_base(base: Expr) -> str:
    text = format_expr(base)
    if isinstance(base, Mul):
        return f"({text})"
    return text


def format_expr(node: Expr) -> str:
    """Canonical text for a tree; reparsing it yields an equal tree."""
    if isinstance(node, ScalarLit):
        return str(node.value)
    if isinstance(node, (GLit, GPLit, PointLit)):
        return str(node.value)
    if isinstance(node, Mul):
        left = format_expr(node.left)
        if _needs_parens_in_mul(node.left, right_side=False):
            left = f"({left})"
        right = format_expr(node.right)
        if _needs_parens_in_mul(node.right, right_side=True):
            right = f"({right})"
        return f"{left}*{right}"
    if isinstance(node, Pow):
        return f"{_format_pow_base(node.base)}^{node.exponent}"
    if isinstance(node, Call):
        inner = ",".join(format_expr(a) for a in node.args)
        return f"{node.name}({inner})"
    raise TypeError(f"not an expression node: {node!r}")
