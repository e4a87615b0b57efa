"""Group expressions: AST, parser, validation, and Hilbert series construction.

The expression language builds finitely generated pro-p groups from five leaf
families and two products:

    free(d)       free pro-p group of rank d
    cyclic(p)     cyclic group of order p (the working prime)
    demushkin(d)  one-relator Demushkin group of rank d >= 2
    zp(d)         free abelian pro-p group of rank d
    superpyth(d)  semidirect product Z_2^d with an inverting involution (p = 2)

'*' is the free product (lowest precedence, left associative) and 'x' the
direct product (binds tighter). Whitespace is insignificant.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .numtheory import is_prime
from .series import (
    RationalFunction,
    TruncPoly,
    TruncSeries,
    expand_rational,
)


@dataclass(frozen=True)
class Free:
    rank: int


@dataclass(frozen=True)
class Cyclic:
    order: int


@dataclass(frozen=True)
class Demushkin:
    rank: int


@dataclass(frozen=True)
class Zp:
    rank: int


@dataclass(frozen=True)
class SuperPyth:
    rank: int


@dataclass(frozen=True)
class FreeProduct:
    left: "GroupSpec"
    right: "GroupSpec"


@dataclass(frozen=True)
class DirectProduct:
    left: "GroupSpec"
    right: "GroupSpec"


GroupSpec = Union[Free, Cyclic, Demushkin, Zp, SuperPyth, FreeProduct, DirectProduct]

_LEAF_NAMES = {
    "free": Free,
    "cyclic": Cyclic,
    "demushkin": Demushkin,
    "superpyth": SuperPyth,
    "zp": Zp,
}


class ParseError(ValueError):
    """Syntax error in a group expression; carries the 0-based position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


class ArityError(ParseError):
    """Constructor applied to the wrong kind or number of arguments."""


class ValidationError(ValueError):
    """A structurally well-formed expression that is invalid at the working prime."""


class PrimeMismatch(ValidationError):
    pass


class RankOutOfRange(ValidationError):
    pass


def _tokenize(text: str):
    tokens = []
    i, n = 0, len(text)
    while i < n:
        ch = text[i]
        if ch.isspace():
            i += 1
            continue
        if ch == "*":
            tokens.append(("star", "*", i))
            i += 1
        elif ch == "(":
            tokens.append(("lparen", "(", i))
            i += 1
        elif ch == ")":
            tokens.append(("rparen", ")", i))
            i += 1
        elif ch == ",":
            tokens.append(("comma", ",", i))
            i += 1
        elif ch.isdigit():
            j = i
            while j < n and text[j].isdigit():
                j += 1
            tokens.append(("int", text[i:j], i))
            i = j
        elif ch.isalpha() or ch == "_":
            j = i
            while j < n and (text[j].isalnum() or text[j] == "_"):
                j += 1
            tokens.append(("name", text[i:j], i))
            i = j
        else:
            raise ParseError(f"unexpected character {ch!r}", i)
    tokens.append(("end", "", n))
    return tokens


class _Parser:
    def __init__(self, text: str):
        self.text = text
        self.tokens = _tokenize(text)
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos]

    def advance(self):
        tok = self.tokens[self.pos]
        self.pos += 1
        return tok

    def expect(self, kind: str, what: str):
        tok = self.peek()
        if tok[0] != kind:
            raise ParseError(f"expected {what}", tok[2])
        return self.advance()

    def parse_expr(self) -> GroupSpec:
        node = self.parse_term()
        while self.peek()[0] == "star":
            self.advance()
            node = FreeProduct(node, self.parse_term())
        return node

    def parse_term(self) -> GroupSpec:
        node = self.parse_atom()
        while self.peek()[0] == "name" and self.peek()[1] == "x":
            self.advance()
            node = DirectProduct(node, self.parse_atom())
        return node

    def parse_atom(self) -> GroupSpec:
        kind, value, pos = self.peek()
        if kind == "lparen":
            self.advance()
            node = self.parse_expr()
            self.expect("rparen", "')'")
            return node
        if kind == "name":
            if value not in _LEAF_NAMES:
                raise ParseError(f"unknown constructor {value!r}", pos)
            self.advance()
            self.expect("lparen", f"'(' after {value!r}")
            kind2, value2, pos2 = self.peek()
            if kind2 != "int":
                raise ArityError(f"{value} takes one integer argument", pos2)
            self.advance()
            kind3, _, pos3 = self.peek()
            if kind3 != "rparen":
                raise ArityError(f"{value} takes exactly one argument", pos3)
            self.advance()
            return _LEAF_NAMES[value](int(value2))
        raise ParseError("expected a group expression", pos)


def parse_group_spec(text: str) -> GroupSpec:
    """Parse an expression like 'cyclic(2) * (free(1) x zp(2))'."""
    parser = _Parser(text)
    node = parser.parse_expr()
    kind, value, pos = parser.peek()
    if kind != "end":
        raise ParseError(f"unexpected trailing input {value!r}", pos)
    return node


def to_text(spec: GroupSpec) -> str:
    """Canonical text form; parse_group_spec(to_text(s)) == s."""
    if isinstance(spec, Free):
        return f"free({spec.rank})"
    if isinstance(spec, Cyclic):
        return f"cyclic({spec.order})"
    if isinstance(spec, Demushkin):
        return f"demushkin({spec.rank})"
    if isinstance(spec, Zp):
        return f"zp({spec.rank})"
    if isinstance(spec, SuperPyth):
        return f"superpyth({spec.rank})"
    if isinstance(spec, FreeProduct):
        left = to_text(spec.left)
        right = to_text(spec.right)
        if isinstance(spec.right, FreeProduct):
            right = f"({right})"
        return f"{left} * {right}"
    if isinstance(spec, DirectProduct):
        left = to_text(spec.left)
        right = to_text(spec.right)
        if isinstance(spec.left, FreeProduct):
            left = f"({left})"
        if isinstance(spec.right, (FreeProduct, DirectProduct)):
            right = f"({right})"
        return f"{left} x {right}"
    raise TypeError(f"not a group spec: {spec!r}")


def validate(spec: GroupSpec, p: int) -> None:
    """Check the expression against the working prime; raise on mismatch."""
    if not is_prime(p):
        raise PrimeMismatch(f"working prime must be prime, got {p}")
    if isinstance(spec, Cyclic):
        if spec.order != p:
            raise PrimeMismatch(
                f"cyclic({spec.order}) does not match the working prime {p}"
            )
    elif isinstance(spec, SuperPyth):
        if p != 2:
            raise PrimeMismatch(f"superpyth({spec.rank}) is only defined at p = 2")
        if spec.rank < 0:
            raise RankOutOfRange(f"superpyth rank must be >= 0, got {spec.rank}")
    elif isinstance(spec, (Free, Zp)):
        if spec.rank < 0:
            raise RankOutOfRange(f"{to_text(spec)}: rank must be >= 0")
    elif isinstance(spec, Demushkin):
        if spec.rank < 2:
            raise RankOutOfRange(
                f"demushkin rank must be >= 2, got {spec.rank}"
            )
    elif isinstance(spec, (FreeProduct, DirectProduct)):
        validate(spec.left, p)
        validate(spec.right, p)
    else:
        raise TypeError(f"not a group spec: {spec!r}")


def _geometric(order: int, step: int) -> TruncSeries:
    return TruncSeries(order, [1 if k % step == 0 else 0 for k in range(order + 1)])


def hp_series(spec: GroupSpec, p: int, order: int) -> TruncSeries:
    """Hilbert series of the graded restricted Lie algebra attached to the group.

    Leaves get their known series; a free product G1 * G2 composes by
    P = (P1^-1 + P2^-1 - 1)^-1 and a direct product multiplies.
    """
    validate(spec, p)
    return _hp(spec, p, order)


def _hp(spec: GroupSpec, p: int, order: int) -> TruncSeries:
    if isinstance(spec, Free):
        return expand_rational(RationalFunction([1], [1, -spec.rank]), order)
    if isinstance(spec, Cyclic):
        return TruncSeries(order, [1] * (min(p - 1, order) + 1))
    if isinstance(spec, Demushkin):
        return expand_rational(RationalFunction([1], [1, -spec.rank, 1]), order)
    if isinstance(spec, Zp):
        return expand_rational(
            RationalFunction([1], TruncPoly([1, -1]) ** spec.rank), order
        )
    if isinstance(spec, SuperPyth):
        s = expand_rational(
            RationalFunction([1, 1], TruncPoly([1, -1]) ** spec.rank), order
        )
        k = 3
        while k <= order:
            s = s * _geometric(order, k)
            k += 2
        return s
    if isinstance(spec, FreeProduct):
        s1 = _hp(spec.left, p, order)
        s2 = _hp(spec.right, p, order)
        return (s1.inverse() + s2.inverse() - 1).inverse()
    if isinstance(spec, DirectProduct):
        return _hp(spec.left, p, order) * _hp(spec.right, p, order)
    raise TypeError(f"not a group spec: {spec!r}")


@dataclass(frozen=True)
class SeriesRecipe:
    """Closed form of a Hilbert series.

    Either a rational function, or a textual product form for expressions
    that involve superpyth (whose series has infinitely many factors).
    """

    rational: RationalFunction | None
    product_form: str | None

    @property
    def is_rational(self) -> bool:
        return self.rational is not None


def closed_form(spec: GroupSpec, p: int) -> SeriesRecipe:
    """Finite closed form where one exists; a product-form marker otherwise."""
    validate(spec, p)
    rf = _closed(spec, p)
    if rf is not None:
        return SeriesRecipe(rational=rf, product_form=None)
    if isinstance(spec, SuperPyth):
        d = spec.rank
        text = f"(1 + t) / (1 - t)^{d} * prod_(i>=1) 1 / (1 - t^(2i+1))"
    else:
        text = "product form (superpythagorean factor, no finite rational form)"
    return SeriesRecipe(rational=None, product_form=text)


def _closed(spec: GroupSpec, p: int) -> RationalFunction | None:
    if isinstance(spec, Free):
        return RationalFunction([1], [1, -spec.rank])
    if isinstance(spec, Cyclic):
        return RationalFunction([1] * p, [1])
    if isinstance(spec, Demushkin):
        return RationalFunction([1], [1, -spec.rank, 1])
    if isinstance(spec, Zp):
        return RationalFunction([1], TruncPoly([1, -1]) ** spec.rank)
    if isinstance(spec, SuperPyth):
        return None
    if isinstance(spec, FreeProduct):
        r1 = _closed(spec.left, p)
        r2 = _closed(spec.right, p)
        if r1 is None or r2 is None:
            return None
        n1, d1 = r1.num, r1.den
        n2, d2 = r2.num, r2.den
        # P^-1 = P1^-1 + P2^-1 - 1, on numerators and denominators
        return RationalFunction(n1 * n2, d1 * n2 + d2 * n1 - n1 * n2)
    if isinstance(spec, DirectProduct):
        r1 = _closed(spec.left, p)
        r2 = _closed(spec.right, p)
        if r1 is None or r2 is None:
            return None
        return r1 * r2
    raise TypeError(f"not a group spec: {spec!r}")
