# cli/interpreter.py
"""Evaluate a parsed script statement by statement; print statements write one line each."""
from collections.abc import Callable
from fractions import Fraction
from typing import Any, TextIO

from loguru import logger

from algebra.errors import InvalidInputError
from algebra.fields import FieldSpec
from algebra.ideals import (
    SATURATION_CAP,
    Ideal,
    colon,
    dehomogenize_ideal,
    eliminate,
    ideal_power,
    ideal_product,
    ideal_sum,
    intersect,
    saturate,
)
from algebra.orders import GREVLEX, MonomialOrderSpec
from algebra.parsing import PolyExpr
from algebra.rings import Polynomial, PolyRing
from analysis import artinian, geometry
from catalog.models import gfat
from cli.dsl import (
    BUILTINS,
    Argument,
    Call,
    IdealDecl,
    LetStmt,
    PrintStmt,
    RingDecl,
    Script,
    ScriptError,
    parse_script,
)

Value = Any


def is_affine(I: Ideal) -> bool:
    """Finite-dimensional quotient: read as an affine scheme rather than a projective one."""
    return I.is_zero_dimensional and not I.is_unit


def classify_any(I: Ideal, seed: int = 0):
    return artinian.classify(I) if is_affine(I) else geometry.classify_scheme(I, seed)


def degree_any(I: Ideal) -> int:
    return I.quotient_dimension if is_affine(I) else geometry.degree(I)


def tangent_any(I: Ideal, seed: int = 0) -> int:
    return geometry.affine_tangent_dim(I) if is_affine(I) else geometry.tangent_dim(I, seed)


def render(value: Value) -> str:
    """Text form of a result, shared by the script printer and the subcommands."""
    if isinstance(value, Ideal):
        return ", ".join(value.format()) or "0"
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, geometry.Stratum):
        return f"{value.span_codim} {value.label}"
    if isinstance(value, (list, tuple)):
        return "(" + ", ".join(render(v) for v in value) + ")"
    if hasattr(value, "model_dump_json"):
        return value.model_dump_json()
    return str(value)


class Interpreter:
    """Holds the active ring and the bindings of one script run."""

    def __init__(
        self,
        out: TextIO,
        seed: int = 0,
        field_override: FieldSpec | None = None,
        saturation_cap: int = SATURATION_CAP,
    ):
        self.out = out
        self.seed = seed
        self.field_override = field_override
        self.saturation_cap = saturation_cap
        self.ring: PolyRing | None = None
        self.env: dict[str, Value] = {}
        self.builtins: dict[str, Callable[..., Value]] = {
            "gfat": self._gfat,
            "sum": lambda I, J: ideal_sum(self._ideal(I), self._ideal(J)),
            "product": lambda I, J: ideal_product(self._ideal(I), self._ideal(J)),
            "power": lambda I, k: ideal_power(self._ideal(I), self._int(k)),
            "intersect": lambda I, J: intersect(self._ideal(I), self._ideal(J)),
            "colon": lambda I, J: colon(self._ideal(I), self._ideal(J)),
            "saturate": lambda I, J: saturate(self._ideal(I), self._ideal(J), self.saturation_cap),
            "eliminate": lambda I, k: eliminate(self._ideal(I), self._int(k)),
            "dehomogenize": self._dehomogenize,
            "gb": lambda I: Ideal.from_basis(self._ideal(I).groebner),
            "hfun": lambda I, t: geometry.hilbert_function(self._ideal(I), self._int(t)),
            "degree": lambda I: degree_any(self._ideal(I)),
            "classify": lambda I: classify_any(self._ideal(I), self.seed),
            "tangent": lambda I: tangent_any(self._ideal(I), self.seed),
            "is_ag": lambda I: geometry.is_aG(self._ideal(I), self.seed),
            "stratum": lambda I: geometry.stratum(self._ideal(I)),
            "betti": lambda I: geometry.betti_check_low_degrees(self._ideal(I), self.seed),
            "socle": lambda I: artinian.socle_dim(self._ideal(I)),
            "hilbert": lambda I: artinian.filtration_hilbert(self._ideal(I)).hilbert_fn,
            "report": lambda I: geometry.scheme_report(self._ideal(I), self.seed),
        }
        missing = set(BUILTINS) - set(self.builtins)
        if missing:
            raise RuntimeError(f"builtins without implementation: {sorted(missing)}")

    # --- statements ---

    def run(self, script: Script) -> None:
        for stmt in script.statements:
            try:
                self.execute(stmt)
            except ScriptError:
                raise
            except InvalidInputError as e:
                raise ScriptError(str(e), stmt.pos.line, stmt.pos.column) from None

    def execute(self, stmt) -> None:
        if isinstance(stmt, RingDecl):
            field_spec = self.field_override or FieldSpec.parse(stmt.field_text)
            order = MonomialOrderSpec.parse(stmt.order_text) if stmt.order_text else GREVLEX
            self.ring = PolyRing(field_spec, stmt.variables, order)
            self.env[stmt.name] = self.ring
            logger.debug(f"script: ring {stmt.name} = {self.ring}")
        elif isinstance(stmt, IdealDecl):
            if isinstance(stmt.value, Call):
                value = self.call(stmt.value)
                if not isinstance(value, Ideal):
                    raise ScriptError(f"{stmt.value.name} does not return an ideal", stmt.pos.line, stmt.pos.column)
            else:
                value = Ideal(self.ring, [self._polynomial(e) for e in stmt.value])
            self.env[stmt.name] = value
        elif isinstance(stmt, LetStmt):
            self.env[stmt.name] = self.evaluate(stmt.value)
        elif isinstance(stmt, PrintStmt):
            value = self.call(stmt.call)
            self.out.write(render(value) + "\n")

    # --- expressions ---

    def call(self, call: Call) -> Value:
        args = [self.evaluate(a) if isinstance(a, Call) else a for a in call.args]
        logger.debug(f"script: {call.to_text()}")
        return self.builtins[call.name](*args)

    def evaluate(self, arg: Argument) -> Value:
        if isinstance(arg, Call):
            return self.call(arg)
        bound = self._bound_name(arg)
        if bound is not None:
            return self.env[bound]
        if not arg.variables():
            return sum((t.coefficient for t in arg.terms), Fraction(0))
        return self._polynomial(arg)

    def _bound_name(self, expr: PolyExpr) -> str | None:
        if len(expr.terms) == 1:
            term = expr.terms[0]
            if term.coefficient == 1 and len(term.factors) == 1 and term.factors[0][1] == 1:
                name = term.factors[0][0]
                if name in self.env and not (self.ring and name in self.ring.variables):
                    return name
        return None

    def _polynomial(self, expr: PolyExpr) -> Polynomial:
        ring = self.ring
        result = ring.zero
        for term in expr.terms:
            value = ring.constant(term.coefficient)
            for name, exp in term.factors:
                if name in ring.variables:
                    factor = ring.var(name)
                elif name in self.env:
                    factor = self._as_polynomial(self.env[name], name)
                else:
                    raise InvalidInputError(f"undeclared identifier '{name}'")
                value = value * factor**exp
            result += value
        return result

    def _as_polynomial(self, value: Value, name: str) -> Polynomial:
        if isinstance(value, (int, Fraction)):
            return self.ring.constant(value)
        if isinstance(value, Polynomial) and self.ring.owns(value):
            return value
        raise InvalidInputError(f"'{name}' is not a polynomial of the active ring")

    # --- argument coercion ---

    def _ideal(self, value: Value) -> Ideal:
        if isinstance(value, Ideal):
            return value
        if isinstance(value, PolyExpr):
            bound = self._bound_name(value)
            if bound is not None and isinstance(self.env[bound], Ideal):
                return self.env[bound]
            return Ideal(self.ring, [self._polynomial(value)])
        if isinstance(value, Polynomial):
            return Ideal(self.ring, [value])
        raise InvalidInputError(f"expected an ideal, got {render(value)}")

    def _int(self, value: Value) -> int:
        if isinstance(value, PolyExpr):
            value = self.evaluate(value)
        if isinstance(value, Fraction) and value.denominator == 1:
            return int(value)
        if isinstance(value, int):
            return value
        raise InvalidInputError(f"expected an integer, got {render(value)}")

    def _gfat(self, d) -> Ideal:
        d = self._int(d)
        if self.ring is not None and self.ring.nvars >= d - 1:
            return gfat(d, ring=self.ring)
        return gfat(d, self.field_override or (self.ring.field if self.ring else FieldSpec.prime()))

    def _dehomogenize(self, I, variable) -> Ideal:
        ideal = self._ideal(I)
        if not isinstance(variable, PolyExpr) or len(variable.variables()) != 1:
            raise InvalidInputError("dehomogenize needs a variable name")
        (name,) = variable.variables()
        return dehomogenize_ideal(ideal, name)


def run_script(
    text: str,
    out: TextIO,
    seed: int = 0,
    field_override: FieldSpec | None = None,
    saturation_cap: int = SATURATION_CAP,
) -> Interpreter:
    interpreter = Interpreter(out, seed, field_override, saturation_cap)
    interpreter.run(parse_script(text))
    return interpreter
