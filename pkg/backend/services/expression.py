"""
Expression Service - coordinate functions of a single variable t

A small expression language for curve coordinates: a regex tokenizer, a
recursive-descent parser producing an immutable AST, a checked evaluator and
exact symbolic differentiation.

Grammar (precedence ^ > unary minus > * / > + -, ^ right-associative):
    expr   := term (("+" | "-") term)*
    term   := unary (("*" | "/") unary)*
    unary  := "-" unary | power
    power  := atom ("^" unary)?
    atom   := NUMBER | "t" | FUNC "(" expr ")" | "(" expr ")"
    FUNC   := sin | cos | tan | exp | ln | sqrt | abs | atan
"""

import logging
import math
import re
from dataclasses import dataclass
from enum import Enum
from typing import Callable, Dict, List

from .errors import DiffError, EvalError, LexError, ParseError
from .tolerance_config import ToleranceConfig

logger = logging.getLogger("revolve.expression")

VARIABLE = "t"

# Builtins the user may call. "sgn" is internal: it only appears in the
# piecewise derivative of abs and is not part of the grammar.
BUILTIN_FUNCTIONS = ("sin", "cos", "tan", "exp", "ln", "sqrt", "abs", "atan")
_SIGN = "sgn"
_NEG = "neg"

BINARY_OPERATORS = {"+": "add", "-": "sub", "*": "mul", "/": "div", "^": "pow"}
_SYMBOLS = {op: sym for sym, op in BINARY_OPERATORS.items()}


# ────────────────────────────────────────────────────────────────────────────
# Tokens
# ────────────────────────────────────────────────────────────────────────────

class TokenKind(str, Enum):
    NUMBER = "number"
    IDENTIFIER = "identifier"
    OPERATOR = "operator"
    PAREN = "paren"
    COMMA = "comma"


@dataclass(frozen=True)
class Token:
    kind: TokenKind
    lexeme: str
    position: int

    @property
    def end(self) -> int:
        return self.position + len(self.lexeme)


_TOKEN_REGEXP = re.compile(
    r"""
    (?P<whitespace>\s+)
  | (?P<number>(?:[0-9]+\.?[0-9]*|\.[0-9]+)(?:[eE][+-]?[0-9]+)?)
  | (?P<identifier>[A-Za-z_][A-Za-z_0-9]*)
  | (?P<operator>[-+*/^])
  | (?P<paren>[()])
  | (?P<comma>,)
    """,
    re.VERBOSE,
)


def tokenize(source: str) -> List[Token]:
    """Split source into tokens; any character outside the grammar is a LexError."""
    tokens: List[Token] = []
    position = 0
    while position < len(source):
        match = _TOKEN_REGEXP.match(source, position)
        if match is None:
            raise LexError(position, source[position])
        kind = match.lastgroup
        lexeme = match.group()
        if kind == "number" and not math.isfinite(float(lexeme)):
            raise LexError(position, lexeme)
        if kind != "whitespace":
            tokens.append(Token(TokenKind(kind), lexeme, position))
        position = match.end()
    return tokens


# ────────────────────────────────────────────────────────────────────────────
# AST
# ────────────────────────────────────────────────────────────────────────────

def _checked(value: float, t: float, what: str) -> float:
    if not math.isfinite(value):
        raise EvalError(f"non-finite value from {what}", t)
    return value


class Expr:
    """Base class for immutable expression nodes."""

    def evaluate(self, t: float) -> float:
        raise NotImplementedError

    def has_variable(self) -> bool:
        raise NotImplementedError


@dataclass(frozen=True)
class Constant(Expr):
    value: float

    def evaluate(self, t: float) -> float:
        return self.value

    def has_variable(self) -> bool:
        return False


@dataclass(frozen=True)
class Variable(Expr):
    def evaluate(self, t: float) -> float:
        return t

    def has_variable(self) -> bool:
        return True


def _ln(x: float, t: float) -> float:
    if x <= 0.0:
        raise EvalError("ln of non-positive value", t)
    return math.log(x)


def _sqrt(x: float, t: float) -> float:
    if x < 0.0:
        raise EvalError("sqrt of negative value", t)
    return math.sqrt(x)


def _exp(x: float, t: float) -> float:
    try:
        return math.exp(x)
    except OverflowError:
        raise EvalError("overflow in exp", t) from None


def _sgn(x: float, t: float) -> float:
    if x == 0.0:
        raise EvalError(ToleranceConfig.EXPRESSION_CONFIG["abs_kink_message"], t)
    return math.copysign(1.0, x)


_UNARY_IMPLS: Dict[str, Callable[[float, float], float]] = {
    _NEG: lambda x, t: -x,
    "sin": lambda x, t: math.sin(x),
    "cos": lambda x, t: math.cos(x),
    "tan": lambda x, t: math.tan(x),
    "exp": _exp,
    "ln": _ln,
    "sqrt": _sqrt,
    "abs": lambda x, t: math.fabs(x),
    "atan": lambda x, t: math.atan(x),
    _SIGN: _sgn,
}


@dataclass(frozen=True)
class Unary(Expr):
    """Negation or a builtin function applied to one child."""

    op: str
    child: Expr

    def evaluate(self, t: float) -> float:
        return _checked(_UNARY_IMPLS[self.op](self.child.evaluate(t), t), t, self.op)

    def has_variable(self) -> bool:
        return self.child.has_variable()


def _power(base: float, exponent: float, t: float) -> float:
    try:
        return math.pow(base, exponent)
    except OverflowError:
        raise EvalError("overflow in power", t) from None
    except ValueError:
        if base == 0.0:
            raise EvalError("zero raised to a negative power", t) from None
        raise EvalError("negative base with non-integer exponent", t) from None


@dataclass(frozen=True)
class Binary(Expr):
    op: str
    left: Expr
    right: Expr

    def evaluate(self, t: float) -> float:
        a = self.left.evaluate(t)
        b = self.right.evaluate(t)
        if self.op == "add":
            value = a + b
        elif self.op == "sub":
            value = a - b
        elif self.op == "mul":
            value = a * b
        elif self.op == "div":
            if b == 0.0:
                raise EvalError("division by zero", t)
            value = a / b
        else:
            value = _power(a, b, t)
        return _checked(value, t, self.op)

    def has_variable(self) -> bool:
        return self.left.has_variable() or self.right.has_variable()


def evaluate(e: Expr, t: float) -> float:
    """Value of e at t. Domain violations and non-finite values raise EvalError."""
    return e.evaluate(t)


# ────────────────────────────────────────────────────────────────────────────
# Parser
# ────────────────────────────────────────────────────────────────────────────

class _Parser:
    def __init__(self, tokens: List[Token]):
        self.tokens = tokens
        self.index = 0

    def _peek(self):
        return self.tokens[self.index] if self.index < len(self.tokens) else None

    def _end_position(self) -> int:
        return self.tokens[-1].end if self.tokens else 0

    def _position(self) -> int:
        token = self._peek()
        return token.position if token is not None else self._end_position()

    def _accept(self, *lexemes: str):
        token = self._peek()
        if token is not None and token.kind in (TokenKind.OPERATOR, TokenKind.PAREN) and token.lexeme in lexemes:
            self.index += 1
            return token
        return None

    def _expect(self, lexeme: str) -> Token:
        token = self._accept(lexeme)
        if token is None:
            raise ParseError(self._position(), repr(lexeme))
        return token

    def parse(self) -> Expr:
        if not self.tokens:
            raise ParseError(0, "an expression")
        expr = self._expr()
        if self._peek() is not None:
            raise ParseError(self._position(), "end of input")
        return expr

    def _expr(self) -> Expr:
        node = self._term()
        while True:
            token = self._accept("+", "-")
            if token is None:
                return node
            node = Binary(BINARY_OPERATORS[token.lexeme], node, self._term())

    def _term(self) -> Expr:
        node = self._unary()
        while True:
            token = self._accept("*", "/")
            if token is None:
                return node
            node = Binary(BINARY_OPERATORS[token.lexeme], node, self._unary())

    def _unary(self) -> Expr:
        if self._accept("-") is not None:
            return Unary(_NEG, self._unary())
        return self._power()

    def _power(self) -> Expr:
        base = self._atom()
        if self._accept("^") is None:
            return base
        exponent_position = self._position()
        exponent = self._unary()
        if exponent.has_variable():
            raise ParseError(exponent_position, "a constant exponent")
        return Binary("pow", base, exponent)

    def _atom(self) -> Expr:
        token = self._peek()
        if token is None:
            raise ParseError(self._end_position(), "a number, 't', a function or '('")
        if token.kind == TokenKind.NUMBER:
            self.index += 1
            return Constant(float(token.lexeme))
        if token.kind == TokenKind.IDENTIFIER:
            self.index += 1
            if token.lexeme == VARIABLE:
                return Variable()
            if token.lexeme in BUILTIN_FUNCTIONS:
                self._expect("(")
                argument = self._expr()
                self._expect(")")
                return Unary(token.lexeme, argument)
            raise ParseError(token.position, f"'{VARIABLE}' or one of {', '.join(BUILTIN_FUNCTIONS)}")
        if self._accept("(") is not None:
            inner = self._expr()
            self._expect(")")
            return inner
        raise ParseError(token.position, "a number, 't', a function or '('")


def parse(tokens: List[Token]) -> Expr:
    """Build the AST for a token list; trailing tokens are an error."""
    return _Parser(tokens).parse()


def parse_expression(source: str) -> Expr:
    return parse(tokenize(source))


# ────────────────────────────────────────────────────────────────────────────
# Simplification
# ────────────────────────────────────────────────────────────────────────────

ZERO = Constant(0.0)
ONE = Constant(1.0)


def _is_const(e: Expr, value: float) -> bool:
    return isinstance(e, Constant) and e.value == value


def _fold(e: Expr) -> Expr:
    try:
        return Constant(e.evaluate(0.0))
    except EvalError:
        # 1/0 and friends stay symbolic so evaluation still reports them
        return e


def simplify(e: Expr) -> Expr:
    """Constant folding plus identity rewrites; never changes a defined value."""
    if isinstance(e, (Constant, Variable)):
        return e
    if isinstance(e, Unary):
        child = simplify(e.child)
        if e.op == _NEG and isinstance(child, Unary) and child.op == _NEG:
            return child.child
        node = Unary(e.op, child)
        return _fold(node) if isinstance(child, Constant) else node

    left, right = simplify(e.left), simplify(e.right)
    if isinstance(left, Constant) and isinstance(right, Constant):
        return _fold(Binary(e.op, left, right))
    if e.op == "add":
        if _is_const(left, 0.0):
            return right
        if _is_const(right, 0.0):
            return left
    elif e.op == "sub":
        if _is_const(right, 0.0):
            return left
        if _is_const(left, 0.0):
            return Unary(_NEG, right)
    elif e.op == "mul":
        if _is_const(left, 0.0) or _is_const(right, 0.0):
            return ZERO
        if _is_const(left, 1.0):
            return right
        if _is_const(right, 1.0):
            return left
    elif e.op == "div":
        if _is_const(right, 1.0):
            return left
    elif e.op == "pow":
        if _is_const(right, 1.0):
            return left
        if _is_const(right, 0.0):
            return ONE
    return Binary(e.op, left, right)


# ────────────────────────────────────────────────────────────────────────────
# Differentiation
# ────────────────────────────────────────────────────────────────────────────

def _mul(a: Expr, b: Expr) -> Expr:
    return Binary("mul", a, b)


def _outer_derivative(op: str, u: Expr, piecewise_abs: bool) -> Expr:
    """d/du of op(u), as an expression in u."""
    if op == "sin":
        return Unary("cos", u)
    if op == "cos":
        return Unary(_NEG, Unary("sin", u))
    if op == "tan":
        return Binary("div", ONE, Binary("pow", Unary("cos", u), Constant(2.0)))
    if op == "exp":
        return Unary("exp", u)
    if op == "ln":
        return Binary("div", ONE, u)
    if op == "sqrt":
        return Binary("div", ONE, _mul(Constant(2.0), Unary("sqrt", u)))
    if op == "atan":
        return Binary("div", ONE, Binary("add", ONE, Binary("pow", u, Constant(2.0))))
    if op == "abs":
        if not piecewise_abs:
            raise DiffError("abs has no symbolic derivative")
        return Unary(_SIGN, u)
    raise DiffError(f"no derivative rule for {op}")


def _derive(e: Expr, piecewise_abs: bool) -> Expr:
    if isinstance(e, Constant):
        return ZERO
    if isinstance(e, Variable):
        return ONE
    if isinstance(e, Unary):
        du = _derive(e.child, piecewise_abs)
        if e.op == _NEG:
            return Unary(_NEG, du)
        return _mul(_outer_derivative(e.op, e.child, piecewise_abs), du)

    u, v = e.left, e.right
    if e.op in ("add", "sub"):
        return Binary(e.op, _derive(u, piecewise_abs), _derive(v, piecewise_abs))
    if e.op == "mul":
        return Binary(
            "add",
            _mul(_derive(u, piecewise_abs), v),
            _mul(u, _derive(v, piecewise_abs)),
        )
    if e.op == "div":
        numerator = Binary(
            "sub",
            _mul(_derive(u, piecewise_abs), v),
            _mul(u, _derive(v, piecewise_abs)),
        )
        return Binary("div", numerator, Binary("pow", v, Constant(2.0)))
    # pow: the parser guarantees a constant exponent
    if v.has_variable():
        raise DiffError("exponent depends on t")
    reduced = simplify(Binary("sub", v, ONE))
    return _mul(_mul(v, Binary("pow", u, reduced)), _derive(u, piecewise_abs))


def differentiate(e: Expr, piecewise_abs: bool = False) -> Expr:
    """
    Exact derivative of e with respect to t.

    abs raises DiffError unless piecewise_abs is set, in which case its
    derivative becomes sgn(u)·u', which raises EvalError exactly where u = 0.
    """
    derivative = simplify(_derive(e, piecewise_abs))
    logger.debug(f"d/dt {expression_to_text(e)} = {expression_to_text(derivative)}")
    return derivative


# ────────────────────────────────────────────────────────────────────────────
# Rendering
# ────────────────────────────────────────────────────────────────────────────

def expression_to_text(e: Expr) -> str:
    """Fully parenthesised text form; re-parsing it gives an expression with the same values."""
    if isinstance(e, Constant):
        text = repr(e.value)
        return f"({text})" if e.value < 0 or text.startswith("-") else text
    if isinstance(e, Variable):
        return VARIABLE
    if isinstance(e, Unary):
        if e.op == _NEG:
            return f"(-{expression_to_text(e.child)})"
        return f"{e.op}({expression_to_text(e.child)})"
    return f"({expression_to_text(e.left)} {_SYMBOLS[e.op]} {expression_to_text(e.right)})"
