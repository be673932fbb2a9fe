"""
Form expressions: tokenizer, Pratt parser and evaluator.

Grammar:
    expr    := expr ('+' | '-') expr | expr '*' expr | expr '^' expr
             | '-' expr | '(' expr ')' | literal
    literal := rational | 'P' '(' coord, ... ')' | 'V' '(' coord, ... ')'
    coord   := ['+' | '-'] rational
    rational:= digits ['/' digits]

'^' binds tighter than '*', which binds tighter than '+' and '-'; all are
left-associative. The left operand of '*' must evaluate to a scalar.
"""

import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, List, Optional, Tuple, Union

from src.layer1_settings import ExpressionSyntaxError, get_logger
from src.layer2_core import (
    Blade,
    Frame,
    GeometricForm,
    linear_combine,
    make_point,
    make_vector,
    scalar_form,
    scale,
    wedge,
)

logger = get_logger(__name__)

_TOKEN_PATTERN = re.compile(r"\s*(?:(?P<number>\d+)|(?P<name>[A-Za-z_]\w*)|(?P<op>[-+*^/(),]))")

# Binding powers
_SUM = 10
_SCALE = 20
_WEDGE = 30
_PREFIX = 40

_INFIX_POWER = {"+": _SUM, "-": _SUM, "*": _SCALE, "^": _WEDGE}


@dataclass(frozen=True)
class Token:
    kind: str  # number, name, op, end
    text: str
    line: int
    column: int


def tokenize(text: str) -> Iterator[Token]:
    """Yield tokens with 1-based line and column numbers, ending with an `end` token."""
    position = 0
    line, line_start = 1, 0
    while True:
        while position < len(text) and text[position].isspace():
            if text[position] == "\n":
                line, line_start = line + 1, position + 1
            position += 1
        if position >= len(text):
            yield Token("end", "", line, position - line_start + 1)
            return
        match = _TOKEN_PATTERN.match(text, position)
        column = position - line_start + 1
        if match is None or match.end() == position:
            raise ExpressionSyntaxError(f"unexpected character {text[position]!r}", line, column)
        kind = match.lastgroup
        yield Token(kind, match.group(kind), line, column)
        position = match.end()


# Parse tree


@dataclass(frozen=True)
class RationalLiteral:
    value: Fraction
    line: int
    column: int


@dataclass(frozen=True)
class PointLiteral:
    coords: Tuple[Fraction, ...]
    line: int
    column: int


@dataclass(frozen=True)
class VectorLiteral:
    coords: Tuple[Fraction, ...]
    line: int
    column: int


@dataclass(frozen=True)
class Negate:
    operand: "Expression"
    line: int
    column: int


@dataclass(frozen=True)
class BinaryOp:
    op: str
    left: "Expression"
    right: "Expression"
    line: int
    column: int


Expression = Union[RationalLiteral, PointLiteral, VectorLiteral, Negate, BinaryOp]


class _Parser:
    def __init__(self, text: str, n: int):
        self.tokens = tokenize(text)
        self.n = n
        self.token = next(self.tokens)

    def advance(self) -> Token:
        current = self.token
        if current.kind != "end":
            self.token = next(self.tokens)
        return current

    def fail(self, message: str, token: Optional[Token] = None) -> ExpressionSyntaxError:
        token = token or self.token
        return ExpressionSyntaxError(message, token.line, token.column)

    def expect(self, text: str) -> Token:
        if self.token.text != text or self.token.kind == "end":
            found = self.token.text or "end of input"
            raise self.fail(f"expected {text!r}, found {found!r}")
        return self.advance()

    def expression(self, rbp: int = 0) -> Expression:
        left = self.prefix(self.advance())
        while self.token.kind == "op" and rbp < _INFIX_POWER.get(self.token.text, 0):
            operator = self.advance()
            right = self.expression(_INFIX_POWER[operator.text])
            left = BinaryOp(operator.text, left, right, operator.line, operator.column)
        return left

    def rational(self, first: Token) -> Fraction:
        numerator = int(first.text)
        if self.token.text != "/":
            return Fraction(numerator)
        self.advance()
        if self.token.kind != "number":
            raise self.fail("expected a denominator after '/'")
        denominator_token = self.advance()
        if int(denominator_token.text) == 0:
            raise self.fail("zero denominator", denominator_token)
        return Fraction(numerator, int(denominator_token.text))

    def coordinate(self) -> Fraction:
        sign = 1
        if self.token.text in ("+", "-"):
            sign = -1 if self.advance().text == "-" else 1
        if self.token.kind != "number":
            raise self.fail("expected a rational coordinate")
        return sign * self.rational(self.advance())

    def literal(self, head: Token) -> Tuple[Fraction, ...]:
        self.expect("(")
        coords: List[Fraction] = []
        if self.token.text != ")":
            coords.append(self.coordinate())
            while self.token.text == ",":
                self.advance()
                coords.append(self.coordinate())
        self.expect(")")
        if len(coords) != self.n:
            raise self.fail(
                f"{head.text}(...) needs {self.n} coordinates, got {len(coords)}", head
            )
        return tuple(coords)

    def prefix(self, token: Token) -> Expression:
        if token.kind == "number":
            return RationalLiteral(self.rational(token), token.line, token.column)
        if token.kind == "name":
            if token.text == "P":
                return PointLiteral(self.literal(token), token.line, token.column)
            if token.text == "V":
                return VectorLiteral(self.literal(token), token.line, token.column)
            raise self.fail(f"unknown name {token.text!r}; expected P(...) or V(...)", token)
        if token.text == "-":
            return Negate(self.expression(_PREFIX), token.line, token.column)
        if token.text == "(":
            inner = self.expression()
            self.expect(")")
            return inner
        found = token.text or "end of input"
        raise self.fail(f"unexpected {found!r}", token)


def parse_form(text: str, n: int) -> Expression:
    """
    Parse an expression over dimension n.

    Raises:
        ExpressionSyntaxError: with the line and column of the offending token
    """
    parser = _Parser(text, n)
    tree = parser.expression()
    if parser.token.kind != "end":
        raise parser.fail(f"unexpected {parser.token.text!r} after expression")
    return tree


def evaluate(expression: Expression, frame: Frame) -> GeometricForm:
    """
    Evaluate a parse tree to a form.

    Raises:
        ExpressionSyntaxError: left operand of '*' is not a scalar
    """
    if isinstance(expression, RationalLiteral):
        return scalar_form(frame, expression.value)
    if isinstance(expression, PointLiteral):
        return make_point(frame, expression.coords)
    if isinstance(expression, VectorLiteral):
        return make_vector(frame, expression.coords)
    if isinstance(expression, Negate):
        return -evaluate(expression.operand, frame)

    left = evaluate(expression.left, frame)
    right = evaluate(expression.right, frame)
    if expression.op == "+":
        return linear_combine([(1, left), (1, right)])
    if expression.op == "-":
        return linear_combine([(1, left), (-1, right)])
    if expression.op == "^":
        return wedge(left, right)
    if not left.grades() <= {0}:
        raise ExpressionSyntaxError(
            "left operand of '*' must be a scalar", expression.line, expression.column
        )
    return scale(left.coefficient(Blade(0)), right)


def evaluate_text(text: str, frame: Frame) -> GeometricForm:
    """parse_form followed by evaluate."""
    form = evaluate(parse_form(text, frame.n), frame)
    logger.debug(f"evaluated expression into {len(form.terms)} terms")
    return form
