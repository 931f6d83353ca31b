"""A small expression language over blades and metric products.

Grammar, loosest to tightest binding:

    expr   := term (('+' | '-') term)*
    term   := factor ('*' factor)*
    factor := sp ('.' sp)*
    sp     := contr (('_|' | '|_') contr)*
    contr  := wterm ('^' wterm)*
    wterm  := atom | '-' wterm | 'rev(' expr ')' | 'inv(' expr ')'
            | 'g(' expr ')' | 'ginv(' expr ')'
            | 'pair(' expr ',' expr ')' | '(' expr ')'
    atom   := NUMBER | 'e'DIGITS | 'd'DIGITS | 'I' | 'J'

`_|` and `|_` denote the left/right contraction: the duality contraction
when the operands are of mixed kinds, the metric contracted product when
they are of the same kind.  Unicode spellings of the operators are accepted
as aliases of the ASCII ones.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import products
from .algebra import Multiform, Multivector, wedge
from .duality import (
    left_contract_mf,
    left_contract_mv,
    pairing,
    right_contract_mf,
    right_contract_mv,
)
from .metric import MetricExtensor, extend, extend_inverse


class ParseError(ValueError):
    def __init__(self, message: str, position: int):
        self.position = position
        super().__init__(f"{message} (at offset {position})")


class KindError(TypeError):
    """Operand kind discipline violation."""


# -- AST ---------------------------------------------------------------------


@dataclass(frozen=True)
class Num:
    value: float


@dataclass(frozen=True)
class Basis:
    kind: str  # "e" for basis blades, "d" for dual basis blades
    digits: str  # one factor index per digit: e12 is the blade e_1 ^ e_2


@dataclass(frozen=True)
class Pseudo:
    token: str  # "I" = e_wedge (multivector), "J" = eps_wedge (multiform)


@dataclass(frozen=True)
class Unary:
    op: str  # neg | rev | inv | g | ginv
    operand: object


@dataclass(frozen=True)
class Binary:
    op: str  # + - * . _| |_ ^
    left: object
    right: object


@dataclass(frozen=True)
class PairCall:
    left: object
    right: object


# -- lexer -------------------------------------------------------------------

_ALIASES = {"∧": "^", "⌟": "_|", "⌞": "|_", "·": "."}
_FUNCTIONS = ("rev", "inv", "ginv", "g", "pair")


@dataclass(frozen=True)
class _Token:
    kind: str  # op | number | basis | pseudo | func | lparen | rparen | comma | end
    text: str
    value: object
    position: int


def _tokenize(text: str) -> list[_Token]:
    for alias, ascii_op in _ALIASES.items():
        text = text.replace(alias, ascii_op)
    tokens = []
    i = 0
    length = len(text)
    while i < length:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if text.startswith("_|", i):
            tokens.append(_Token("op", "_|", None, i))
            i += 2
            continue
        if text.startswith("|_", i):
            tokens.append(_Token("op", "|_", None, i))
            i += 2
            continue
        if ch in "+-*^.":
            tokens.append(_Token("op", ch, None, i))
            i += 1
            continue
        if ch == "(":
            tokens.append(_Token("lparen", ch, None, i))
            i += 1
            continue
        if ch == ")":
            tokens.append(_Token("rparen", ch, None, i))
            i += 1
            continue
        if ch == ",":
            tokens.append(_Token("comma", ch, None, i))
            i += 1
            continue
        if ch.isdigit():
            j = i
            while j < length and (text[j].isdigit() or text[j] == "."):
                j += 1
            if j < length and text[j] in "eE" and ch != "e":
                pass  # exponents are not lexed; e introduces a basis vector
            literal = text[i:j]
            try:
                value = float(literal)
            except ValueError:
                raise ParseError(f"bad number literal {literal!r}", i) from None
            tokens.append(_Token("number", literal, value, i))
            i = j
            continue
        matched_func = None
        for name in _FUNCTIONS:
            if text.startswith(name + "(", i):
                matched_func = name
                break
        if matched_func:
            tokens.append(_Token("func", matched_func, None, i))
            i += len(matched_func)
            continue
        if ch in "ed" and i + 1 < length and text[i + 1].isdigit():
            j = i + 1
            while j < length and text[j].isdigit():
                j += 1
            tokens.append(_Token("basis", text[i:j], (ch, text[i + 1 : j]), i))
            i = j
            continue
        if ch in "IJ":
            tokens.append(_Token("pseudo", ch, ch, i))
            i += 1
            continue
        raise ParseError(f"unexpected character {ch!r}", i)
    tokens.append(_Token("end", "", None, length))
    return tokens


# -- parser ------------------------------------------------------------------


class _Parser:
    def __init__(self, tokens: list[_Token]):
        self.tokens = tokens
        self.pos = 0

    def peek(self) -> _Token:
        return self.tokens[self.pos]

    def advance(self) -> _Token:
        token = self.tokens[self.pos]
        self.pos += 1
        return token

    def expect(self, kind: str, text: str | None = None) -> _Token:
        token = self.peek()
        if token.kind != kind or (text is not None and token.text != text):
            want = text or kind
            raise ParseError(f"expected {want!r}, found {token.text or 'end of input'!r}", token.position)
        return self.advance()

    def parse(self):
        node = self.expr()
        tail = self.peek()
        if tail.kind != "end":
            raise ParseError(f"unexpected trailing input {tail.text!r}", tail.position)
        return node

    def _binary_level(self, ops: tuple[str, ...], below):
        node = below()
        while self.peek().kind == "op" and self.peek().text in ops:
            op = self.advance().text
            node = Binary(op, node, below())
        return node

    def expr(self):
        return self._binary_level(("+", "-"), self.term)

    def term(self):
        return self._binary_level(("*",), self.factor)

    def factor(self):
        return self._binary_level((".",), self.sp)

    def sp(self):
        return self._binary_level(("_|", "|_"), self.contr)

    def contr(self):
        return self._binary_level(("^",), self.wterm)

    def wterm(self):
        token = self.peek()
        if token.kind == "op" and token.text == "-":
            self.advance()
            return Unary("neg", self.wterm())
        if token.kind == "func":
            self.advance()
            self.expect("lparen")
            if token.text == "pair":
                left = self.expr()
                self.expect("comma")
                right = self.expr()
                self.expect("rparen")
                return PairCall(left, right)
            inner = self.expr()
            self.expect("rparen")
            return Unary(token.text, inner)
        if token.kind == "lparen":
            self.advance()
            inner = self.expr()
            self.expect("rparen")
            return inner
        if token.kind == "number":
            self.advance()
            return Num(token.value)
        if token.kind == "basis":
            self.advance()
            kind, digits = token.value
            return Basis(kind, digits)
        if token.kind == "pseudo":
            self.advance()
            return Pseudo(token.value)
        raise ParseError(f"unexpected token {token.text or 'end of input'!r}", token.position)


def parse_expression(text: str):
    return _Parser(_tokenize(text)).parse()


def pretty_print(node) -> str:
    """Fully parenthesized rendering; reparses to a structurally equal AST."""
    if isinstance(node, Num):
        return repr(node.value)
    if isinstance(node, Basis):
        return f"{node.kind}{node.digits}"
    if isinstance(node, Pseudo):
        return node.token
    if isinstance(node, Unary):
        if node.op == "neg":
            return f"(-{pretty_print(node.operand)})"
        return f"{node.op}({pretty_print(node.operand)})"
    if isinstance(node, Binary):
        return f"({pretty_print(node.left)} {node.op} {pretty_print(node.right)})"
    if isinstance(node, PairCall):
        return f"pair({pretty_print(node.left)}, {pretty_print(node.right)})"
    raise TypeError(f"not an expression node: {node!r}")


# -- evaluation --------------------------------------------------------------


def _kind_name(value) -> str:
    if isinstance(value, Multivector):
        return "multivector"
    if isinstance(value, Multiform):
        return "multiform"
    return "scalar"


def _promote(value, template):
    """Lift a bare scalar to the grade-0 element of the template's kind."""
    if isinstance(value, (Multivector, Multiform)):
        return value
    return type(template).scalar(template.n, float(value))


def evaluate(node, gamma: MetricExtensor):
    """Evaluate an AST against a session metric; returns a float,
    Multivector or Multiform."""
    n = gamma.n

    def ev(node):
        if isinstance(node, Num):
            return node.value
        if isinstance(node, Basis):
            indices = [int(c) for c in node.digits]
            for index in indices:
                if not 1 <= index <= n:
                    raise KindError(f"basis index {index} out of range 1..{n}")
            cls = Multivector if node.kind == "e" else Multiform
            return cls.basis_blade(n, *indices)
        if isinstance(node, Pseudo):
            cls = Multivector if node.token == "I" else Multiform
            return cls.from_blade(n, (1 << n) - 1)
        if isinstance(node, Unary):
            value = ev(node.operand)
            if node.op == "neg":
                return -value
            if node.op == "rev":
                return value.reversion() if isinstance(value, (Multivector, Multiform)) else value
            if node.op == "inv":
                return value.involution() if isinstance(value, (Multivector, Multiform)) else value
            if node.op == "g":
                if isinstance(value, Multiform):
                    raise KindError("g(.) extends the metric over multivectors, not multiforms")
                if not isinstance(value, Multivector):
                    value = Multivector.scalar(n, float(value))
                return extend(gamma, value)
            if node.op == "ginv":
                if isinstance(value, Multivector):
                    raise KindError("ginv(.) extends the inverse metric over multiforms, not multivectors")
                if not isinstance(value, Multiform):
                    value = Multiform.scalar(n, float(value))
                return extend_inverse(gamma, value)
            raise KindError(f"unknown unary operator {node.op!r}")
        if isinstance(node, PairCall):
            left, right = ev(node.left), ev(node.right)
            if isinstance(left, Multiform) and isinstance(right, Multivector):
                return pairing(left, right)
            if isinstance(left, Multivector) and isinstance(right, Multiform):
                return pairing(right, left)
            raise KindError(
                "pair(.,.) requires one multiform and one multivector, got "
                f"{_kind_name(left)} and {_kind_name(right)}"
            )
        if isinstance(node, Binary):
            return _binary(node.op, ev(node.left), ev(node.right))
        raise TypeError(f"not an expression node: {node!r}")

    def _binary(op, left, right):
        left_elem = isinstance(left, (Multivector, Multiform))
        right_elem = isinstance(right, (Multivector, Multiform))
        if op == "*":
            if left_elem and right_elem:
                raise KindError("* is scalar multiplication; use ^, ., _| or |_ between elements")
            if left_elem:
                return left * float(right)
            if right_elem:
                return right * float(left)
            return float(left) * float(right)
        if not left_elem and not right_elem:
            # scalar grade-0 semantics for every remaining operator
            if op in ("+",):
                return float(left) + float(right)
            if op == "-":
                return float(left) - float(right)
            return float(left) * float(right)
        if op in ("+", "-"):
            left = _promote(left, right if right_elem else left)
            right = _promote(right, left)
            if type(left) is not type(right):
                raise KindError(
                    f"cannot {'add' if op == '+' else 'subtract'} a {_kind_name(left)} "
                    f"and a {_kind_name(right)}"
                )
            return left + right if op == "+" else left - right
        if op == "^":
            left = _promote(left, right if right_elem else left)
            right = _promote(right, left)
            if type(left) is not type(right):
                raise KindError(
                    "exterior product requires operands of the same kind, got "
                    f"{_kind_name(left)} and {_kind_name(right)}"
                )
            return wedge(left, right)
        if op == ".":
            if left_elem and right_elem and type(left) is not type(right):
                raise KindError(
                    "scalar product requires operands of the same kind "
                    f"(metric product across kinds: {_kind_name(left)} . {_kind_name(right)})"
                )
            left = _promote(left, right if right_elem else left)
            right = _promote(right, left)
            if isinstance(left, Multivector):
                return products.scalar_product_mv(gamma, left, right)
            return products.scalar_product_mf(gamma, left, right)
        if op in ("_|", "|_"):
            if left_elem and right_elem and type(left) is not type(right):
                # mixed kinds: the metric-free duality contraction
                if op == "_|":
                    if isinstance(left, Multiform):
                        return left_contract_mv(left, right)
                    return left_contract_mf(left, right)
                if isinstance(left, Multivector):
                    return right_contract_mv(left, right)
                return right_contract_mf(left, right)
            left = _promote(left, right if right_elem else left)
            right = _promote(right, left)
            if op == "_|":
                if isinstance(left, Multivector):
                    return products.lcontract_mv(gamma, left, right)
                return products.lcontract_mf(gamma, left, right)
            if isinstance(left, Multivector):
                return products.rcontract_mv(gamma, left, right)
            return products.rcontract_mf(gamma, left, right)
        raise KindError(f"unknown operator {op!r}")

    return ev(node)


def format_value(value) -> str:
    """Canonical printing for CLI output: stable across runs."""
    if isinstance(value, (Multivector, Multiform)):
        symbol = value._basis_symbol
        terms = []
        for mask in np.nonzero(value.coeffs)[0]:
            mask = int(mask)
            coeff = f"{value.coeffs[mask]:.12g}"
            if mask == 0:
                terms.append(coeff)
            else:
                name = symbol + "".join(
                    str(j + 1) for j in range(mask.bit_length()) if mask >> j & 1
                )
                terms.append(f"{coeff}*{name}")
        return " + ".join(terms) if terms else "0"
    return f"{float(value):.12g}"
