# tests/test_dsl.py
"""Tests for the script language parser and its scope checks."""
import pytest

from cli.dsl import Call, IdealDecl, LetStmt, PrintStmt, RingDecl, ScriptError, format_script, parse_script

SCRIPT = """\
# G-fat point of degree 6
ring R = Fp(65537)[x0,x1,x2,x3,x4];
ideal G = gfat(6);
ideal I = x1^2 - 1/2*x0*x2, x3*x4;
let J = power(sum(G, I), 2);
print hfun(J, 3);
"""


class TestParse:
    def test_statements(self):
        script = parse_script(SCRIPT)
        kinds = [type(s) for s in script.statements]
        assert kinds == [RingDecl, IdealDecl, IdealDecl, LetStmt, PrintStmt]
        ring = script.statements[0]
        assert ring.field_text == "Fp(65537)"
        assert ring.variables == ("x0", "x1", "x2", "x3", "x4")

    def test_nested_calls(self):
        let = parse_script(SCRIPT).statements[3]
        assert isinstance(let.value, Call)
        assert let.value.name == "power"
        assert let.value.args[0].name == "sum"

    def test_positions(self):
        printed = parse_script(SCRIPT).statements[4]
        assert (printed.pos.line, printed.pos.column) == (6, 1)

    def test_order_clause(self):
        ring = parse_script("ring R = QQ[t,x,y] order elim(1);").statements[0]
        assert ring.order_text == "elim(1)"

    def test_format_is_a_fixpoint(self):
        script = parse_script(SCRIPT)
        text = format_script(script)
        assert parse_script(text) == script
        assert format_script(parse_script(text)) == text


# ── errors ───────────────────────────────────────────────────


class TestErrors:
    def error(self, text: str) -> ScriptError:
        with pytest.raises(ScriptError) as err:
            parse_script(text)
        return err.value

    def test_no_ring(self):
        e = self.error("ideal I = x^2;")
        assert e.reason == "no ring declared"
        assert e.line == 1

    def test_unsupported_characteristic(self):
        e = self.error("ring R = Fp(2)[x];")
        assert "characteristic 2 unsupported" in e.reason
        assert (e.line, e.column) == (1, 10)

    def test_undeclared_identifier(self):
        e = self.error("ring R = QQ[x,y];\nideal I = x + z;")
        assert e.reason == "undeclared identifier 'z'"
        assert e.line == 2

    def test_unknown_function(self):
        e = self.error("ring R = QQ[x];\nprint foo(x);")
        assert e.reason == "unknown function 'foo'"
        assert (e.line, e.column) == (2, 7)

    def test_arity(self):
        e = self.error("ring R = QQ[x];\nprint gb(x, x);")
        assert e.reason == "gb takes 1 argument, got 2"

    def test_missing_semicolon(self):
        e = self.error("ring R = QQ[x]")
        assert e.reason == "expected ';', found end of input"

    def test_keyword_as_name(self):
        assert "keyword" in self.error("ring order = QQ[x];").reason

    def test_duplicate_variables(self):
        assert self.error("ring R = QQ[x,x];").reason == "duplicate variable names"

    def test_unknown_order(self):
        assert "unknown monomial order" in self.error("ring R = QQ[x] order revlex;").reason

    def test_bad_polynomial(self):
        e = self.error("ring R = QQ[x];\nideal I = x +;")
        assert e.line == 2
        assert "expected a term" in e.reason

    def test_print_needs_call(self):
        assert "expected a call" in self.error("ring R = QQ[x];\nprint x;").reason

    def test_empty(self):
        assert self.error("# nothing here\n").reason == "empty script"

    def test_message_carries_position(self):
        assert str(self.error("ideal I = x^2;")).startswith("line 1, column 1:")
