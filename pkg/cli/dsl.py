# cli/dsl.py
"""
The script language: a declarative list of ring, ideal, let and print
statements.

    program   := stmt+
    stmt      := ringDecl | idealDecl | letStmt | printStmt
    ringDecl  := "ring" ID "=" field "[" ID ("," ID)* "]" ("order" ORDER)? ";"
    field     := "QQ" | "Fp" "(" UINT ")"
    idealDecl := "ideal" ID "=" expr ("," expr)* ";" | "ideal" ID "=" call ";"
    letStmt   := "let" ID "=" (call | expr) ";"
    printStmt := "print" call ";"
    call      := ID "(" (arg ("," arg)*)? ")"
    arg       := call | expr

Polynomial expressions use the grammar of algebra.parsing; identifiers in
them are ring variables or earlier let / ideal names.
"""
from dataclasses import dataclass, field
from typing import Union

from algebra.errors import InvalidInputError, PolynomialSyntaxError
from algebra.fields import FieldSpec
from algebra.orders import MonomialOrderSpec
from algebra.parsing import PolyExpr, Token, TokenStream, describe, parse_poly_expr, tokenize

KEYWORDS = {"ring", "ideal", "let", "print", "order"}

# name -> (min args, max args)
BUILTINS: dict[str, tuple[int, int]] = {
    "gfat": (1, 1),
    "sum": (2, 2),
    "product": (2, 2),
    "power": (2, 2),
    "intersect": (2, 2),
    "colon": (2, 2),
    "saturate": (2, 2),
    "eliminate": (2, 2),
    "dehomogenize": (2, 2),
    "gb": (1, 1),
    "hfun": (2, 2),
    "degree": (1, 1),
    "classify": (1, 1),
    "tangent": (1, 1),
    "is_ag": (1, 1),
    "stratum": (1, 1),
    "betti": (1, 1),
    "socle": (1, 1),
    "hilbert": (1, 1),
    "report": (1, 1),
}


class ScriptError(InvalidInputError):
    """Lexical, syntactic or scoping error in a script, with a 1-based position."""

    def __init__(self, message: str, line: int = 1, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.reason = message
        self.line = line
        self.column = column


# ── AST ──────────────────────────────────────────────────────


@dataclass(frozen=True)
class Position:
    line: int
    column: int


def _pos(token: Token) -> Position:
    return Position(token.line, token.column)


@dataclass(frozen=True)
class Call:
    name: str
    args: tuple["Argument", ...]
    pos: Position = field(default=Position(1, 1), compare=False)

    def to_text(self) -> str:
        return f"{self.name}({', '.join(a.to_text() for a in self.args)})"


Argument = Union[Call, PolyExpr]


@dataclass(frozen=True)
class RingDecl:
    name: str
    field_text: str
    variables: tuple[str, ...]
    order_text: str | None = None
    pos: Position = field(default=Position(1, 1), compare=False)

    def to_text(self) -> str:
        order = f" order {self.order_text}" if self.order_text else ""
        return f"ring {self.name} = {self.field_text}[{','.join(self.variables)}]{order};"


@dataclass(frozen=True)
class IdealDecl:
    name: str
    value: Union[Call, tuple[PolyExpr, ...]]
    pos: Position = field(default=Position(1, 1), compare=False)

    def to_text(self) -> str:
        if isinstance(self.value, Call):
            body = self.value.to_text()
        else:
            body = ", ".join(e.to_text() for e in self.value)
        return f"ideal {self.name} = {body};"


@dataclass(frozen=True)
class LetStmt:
    name: str
    value: Argument
    pos: Position = field(default=Position(1, 1), compare=False)

    def to_text(self) -> str:
        return f"let {self.name} = {self.value.to_text()};"


@dataclass(frozen=True)
class PrintStmt:
    call: Call
    pos: Position = field(default=Position(1, 1), compare=False)

    def to_text(self) -> str:
        return f"print {self.call.to_text()};"


Statement = Union[RingDecl, IdealDecl, LetStmt, PrintStmt]


@dataclass(frozen=True)
class Script:
    statements: tuple[Statement, ...]


def format_script(script: Script) -> str:
    """Canonical text; parsing it gives back an equal Script."""
    return "\n".join(s.to_text() for s in script.statements) + "\n"


# ── parser ───────────────────────────────────────────────────


class _Parser:
    def __init__(self, text: str):
        self.stream = TokenStream(list(tokenize(text)))

    def fail(self, message: str, token: Token | None = None):
        token = token or self.stream.current
        raise ScriptError(message, token.line, token.column)

    def expect(self, kind: str, what: str) -> Token:
        token = self.stream.current
        if token.kind != kind:
            self.fail(f"expected {what}, found {describe(token)}")
        return self.stream.advance()

    def expect_word(self, word: str) -> Token:
        token = self.stream.current
        if token.kind != "name" or token.value != word:
            self.fail(f"expected '{word}', found {describe(token)}")
        return self.stream.advance()

    def identifier(self) -> Token:
        token = self.expect("name", "an identifier")
        if token.value in KEYWORDS:
            self.fail(f"'{token.value}' is a keyword", token)
        return token

    def program(self) -> Script:
        statements = []
        while self.stream.current.kind != "eof":
            statements.append(self.statement())
        if not statements:
            self.fail("empty script")
        return Script(tuple(statements))

    def statement(self) -> Statement:
        token = self.stream.current
        if token.kind != "name" or token.value not in ("ring", "ideal", "let", "print"):
            self.fail(f"expected a statement, found {describe(token)}")
        self.stream.advance()
        node = getattr(self, f"{token.value}_statement")(_pos(token))
        self.expect("semi", "';'")
        return node

    def ring_statement(self, pos: Position) -> RingDecl:
        name = self.identifier().value
        self.expect("equal", "'='")
        field_token = self.expect("name", "a field")
        if field_token.value == "QQ":
            field_text = "QQ"
        elif field_token.value == "Fp":
            self.expect("lpar", "'('")
            p = self.expect("uint", "a characteristic")
            self.expect("rpar", "')'")
            field_text = f"Fp({p.value})"
        else:
            self.fail(f"unknown field '{field_token.value}'", field_token)
        try:
            FieldSpec.parse(field_text)
        except InvalidInputError as e:
            self.fail(str(e), field_token)
        self.expect("lbrack", "'['")
        variables = [self.identifier().value]
        while self.stream.accept("comma"):
            variables.append(self.identifier().value)
        close = self.expect("rbrack", "']'")
        if len(set(variables)) != len(variables):
            self.fail("duplicate variable names", close)
        order_text = None
        if self.stream.current.kind == "name" and self.stream.current.value == "order":
            self.stream.advance()
            order_token = self.expect("name", "a monomial order")
            order_text = order_token.value
            if order_text == "elim":
                self.expect("lpar", "'('")
                k = self.expect("uint", "a block size")
                self.expect("rpar", "')'")
                order_text = f"elim({k.value})"
            try:
                MonomialOrderSpec.parse(order_text)
            except InvalidInputError as e:
                self.fail(str(e), order_token)
        return RingDecl(name, field_text, tuple(variables), order_text, pos)

    def ideal_statement(self, pos: Position) -> IdealDecl:
        name = self.identifier().value
        self.expect("equal", "'='")
        if self._at_call():
            return IdealDecl(name, self.call(), pos)
        exprs = [self.expr()]
        while self.stream.accept("comma"):
            exprs.append(self.expr())
        return IdealDecl(name, tuple(exprs), pos)

    def let_statement(self, pos: Position) -> LetStmt:
        name = self.identifier().value
        self.expect("equal", "'='")
        return LetStmt(name, self.argument(), pos)

    def print_statement(self, pos: Position) -> PrintStmt:
        if not self._at_call():
            self.fail(f"expected a call, found {describe(self.stream.current)}")
        return PrintStmt(self.call(), pos)

    def _at_call(self) -> bool:
        return self.stream.current.kind == "name" and self.stream.peek().kind == "lpar"

    def argument(self) -> Argument:
        return self.call() if self._at_call() else self.expr()

    def call(self) -> Call:
        token = self.stream.advance()
        self.expect("lpar", "'('")
        args = []
        if self.stream.current.kind != "rpar":
            args.append(self.argument())
            while self.stream.accept("comma"):
                args.append(self.argument())
        self.expect("rpar", "')'")
        return Call(token.value, tuple(args), _pos(token))

    def expr(self) -> PolyExpr:
        try:
            return parse_poly_expr(self.stream)
        except PolynomialSyntaxError as e:
            raise ScriptError(e.reason, e.line, e.column) from None


# ── scope checks ─────────────────────────────────────────────


def _check_scopes(script: Script) -> None:
    ring_vars: tuple[str, ...] | None = None
    names: set[str] = set()

    def check_expr(expr: PolyExpr, pos: Position) -> None:
        for name in sorted(expr.variables()):
            if name not in names and (ring_vars is None or name not in ring_vars):
                if ring_vars is None:
                    raise ScriptError("no ring declared", pos.line, pos.column)
                raise ScriptError(f"undeclared identifier '{name}'", pos.line, pos.column)

    def check_arg(arg: Argument, pos: Position) -> None:
        if isinstance(arg, Call):
            check_call(arg)
        else:
            check_expr(arg, pos)

    def check_call(call: Call) -> None:
        if call.name not in BUILTINS:
            raise ScriptError(f"unknown function '{call.name}'", call.pos.line, call.pos.column)
        low, high = BUILTINS[call.name]
        if not low <= len(call.args) <= high:
            raise ScriptError(
                f"{call.name} takes {low} argument{'s' if low != 1 else ''}, got {len(call.args)}",
                call.pos.line,
                call.pos.column,
            )
        for arg in call.args:
            check_arg(arg, call.pos)

    for stmt in script.statements:
        if isinstance(stmt, RingDecl):
            ring_vars = stmt.variables
            names.add(stmt.name)
        elif isinstance(stmt, IdealDecl):
            if ring_vars is None:
                raise ScriptError("no ring declared", stmt.pos.line, stmt.pos.column)
            if isinstance(stmt.value, Call):
                check_call(stmt.value)
            else:
                for e in stmt.value:
                    check_expr(e, stmt.pos)
            names.add(stmt.name)
        elif isinstance(stmt, LetStmt):
            check_arg(stmt.value, stmt.pos)
            names.add(stmt.name)
        else:
            check_call(stmt.call)


def parse_script(text: str) -> Script:
    """Parse and scope-check a script."""
    try:
        script = _Parser(text).program()
    except PolynomialSyntaxError as e:
        raise ScriptError(e.reason, e.line, e.column) from None
    _check_scopes(script)
    return script
