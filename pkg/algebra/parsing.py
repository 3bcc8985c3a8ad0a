# algebra/parsing.py
"""
Tokenizer and recursive-descent parser for the polynomial text grammar:

    poly   := sign? term (('+'|'-') term)*
    term   := coeff? ('*'? factor)*
    factor := VAR ('^' UINT)?
    coeff  := UINT ('/' UINT)?

The tokenizer is shared with the script language in cli.dsl.
"""
import re
from collections.abc import Iterator
from dataclasses import dataclass
from fractions import Fraction
from typing import NamedTuple

from algebra.errors import PolynomialSyntaxError, UnknownVariableError

TOKEN_SPEC = {
    "comment": r"#[^\n]*",
    "newline": r"\n",
    "skip": r"[ \t\r]+",
    "name": r"@?[A-Za-z_][A-Za-z0-9_]*",
    "uint": r"\d+",
    "plus": r"\+",
    "minus": r"-",
    "star": r"\*",
    "caret": r"\^",
    "slash": r"/",
    "lpar": r"\(",
    "rpar": r"\)",
    "lbrack": r"\[",
    "rbrack": r"\]",
    "comma": r",",
    "semi": r";",
    "equal": r"=",
    "error": r".",
}
_TOKEN_RE = re.compile("|".join(f"(?P<{name}>{pattern})" for name, pattern in TOKEN_SPEC.items()))


class Token(NamedTuple):
    kind: str
    value: str
    line: int
    column: int


def tokenize(text: str) -> Iterator[Token]:
    """Yield tokens with 1-based line/column; ends with an 'eof' token."""
    line, line_start = 1, 0
    for mo in _TOKEN_RE.finditer(text):
        kind = str(mo.lastgroup)
        column = mo.start() - line_start + 1
        if kind == "newline":
            line += 1
            line_start = mo.end()
            continue
        if kind in ("skip", "comment"):
            continue
        if kind == "error":
            raise PolynomialSyntaxError(f"unexpected character '{mo.group()}'", line, column)
        yield Token(kind, mo.group(), line, column)
    yield Token("eof", "", line, len(text) - line_start + 1)


@dataclass(frozen=True)
class Term:
    """One signed term: coefficient times a product of variable powers."""

    coefficient: Fraction
    factors: tuple[tuple[str, int], ...]

    def to_text(self, first: bool) -> str:
        negative = self.coefficient < 0
        magnitude = -self.coefficient if negative else self.coefficient
        powers = "*".join(name if exp == 1 else f"{name}^{exp}" for name, exp in self.factors)
        if not powers:
            body = str(magnitude)
        elif magnitude == 1:
            body = powers
        else:
            body = f"{magnitude}*{powers}"
        if first:
            return f"-{body}" if negative else body
        return f"- {body}" if negative else f"+ {body}"


@dataclass(frozen=True)
class PolyExpr:
    terms: tuple[Term, ...]

    def to_text(self) -> str:
        return " ".join(term.to_text(i == 0) for i, term in enumerate(self.terms))

    def variables(self) -> set[str]:
        return {name for term in self.terms for name, _ in term.factors}

    def build(self, ring):
        """Evaluate in a PolyRing; every variable must be declared there."""
        result = ring.zero
        for term in self.terms:
            value = ring.constant(term.coefficient)
            for name, exp in term.factors:
                if name not in ring.variables:
                    raise UnknownVariableError(name, f"ring {ring}")
                value = value * ring.var(name) ** exp
            result += value
        return result


class TokenStream:
    """Cursor over a token list with the small helpers a recursive-descent parser needs."""

    def __init__(self, tokens: list[Token]):
        self._tokens = tokens
        self._pos = 0

    @property
    def current(self) -> Token:
        return self._tokens[self._pos]

    def peek(self, offset: int = 1) -> Token:
        return self._tokens[min(self._pos + offset, len(self._tokens) - 1)]

    def advance(self) -> Token:
        token = self._tokens[self._pos]
        if token.kind != "eof":
            self._pos += 1
        return token

    def accept(self, kind: str) -> Token | None:
        if self.current.kind == kind:
            return self.advance()
        return None

    def expect(self, kind: str, what: str | None = None) -> Token:
        token = self.current
        if token.kind != kind:
            self.fail(f"expected {what or kind}, found {describe(token)}")
        return self.advance()

    def fail(self, message: str, token: Token | None = None):
        token = token or self.current
        raise PolynomialSyntaxError(message, token.line, token.column)


def describe(token: Token) -> str:
    return "end of input" if token.kind == "eof" else f"'{token.value}'"


def parse_poly_expr(stream: TokenStream) -> PolyExpr:
    """Parse one polynomial starting at the cursor; stops before ',', ';', ')' or eof."""
    terms: list[Term] = []
    sign = 1
    if stream.accept("minus"):
        sign = -1
    elif stream.accept("plus"):
        pass
    terms.append(_parse_term(stream, sign))
    while stream.current.kind in ("plus", "minus"):
        sign = 1 if stream.advance().kind == "plus" else -1
        terms.append(_parse_term(stream, sign))
    return PolyExpr(tuple(terms))


def _parse_term(stream: TokenStream, sign: int) -> Term:
    start = stream.current
    coefficient = Fraction(1)
    seen_coefficient = False
    if stream.current.kind == "uint":
        numerator = int(stream.advance().value)
        denominator = 1
        if stream.accept("slash"):
            denominator = int(stream.expect("uint", "a denominator").value)
            if denominator == 0:
                stream.fail("division by zero")
        coefficient = Fraction(numerator, denominator)
        seen_coefficient = True
    factors: list[tuple[str, int]] = []
    while True:
        if stream.current.kind == "star":
            stream.advance()
            if stream.current.kind != "name":
                stream.fail(f"expected a variable after '*', found {describe(stream.current)}")
        if stream.current.kind != "name" or stream.peek().kind == "lpar":
            break
        name = stream.advance().value
        exp = 1
        if stream.accept("caret"):
            exp = int(stream.expect("uint", "an exponent").value)
        factors.append((name, exp))
    if not seen_coefficient and not factors:
        stream.fail(f"expected a term, found {describe(start)}", start)
    return Term(sign * coefficient, tuple(factors))


def parse_polynomial(text: str, ring):
    """Parse text into an element of the given PolyRing."""
    stream = TokenStream(list(tokenize(text)))
    expr = parse_poly_expr(stream)
    if stream.current.kind != "eof":
        stream.fail(f"unexpected {describe(stream.current)}")
    return expr.build(ring)
