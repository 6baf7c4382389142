import json
import subprocess
import sys
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from npvir.cli import (
    Session,
    cmd_act,
    cmd_aut,
    cmd_bracket,
    cmd_cocycle,
    cmd_irreducible,
    cmd_iso,
    cmd_member,
    cmd_verify,
    lower_to_field,
    lower_to_modulus,
    lower_to_rfunc,
    main,
    parse_expr,
)
from npvir.cli.parser import BinOp, Neg, Num, Pow, Sym
from npvir.errors import (
    ConfigMismatch,
    DivisionByZero,
    ForeignPole,
    InfiniteGroup,
    ParseError,
    ReducibleModulus,
    UnexpectedGroup,
)
from npvir.field import QQ, FieldSpec
from npvir.rfunc import PointConfig, RatFunc, from_basis
from strategies import CONFIGS, rfuncs

A01 = PointConfig(QQ, (0, 1))


class TestParser:
    def test_precedence(self):
        e = parse_expr("1 + 2*t^3")
        assert isinstance(e, BinOp) and e.op == "+"
        assert isinstance(e.right, BinOp) and e.right.op == "*"
        assert isinstance(e.right.right, Pow) and e.right.right.exp == 3

    def test_unary_minus_below_power(self):
        e = parse_expr("-t^2")
        assert isinstance(e, Neg) and isinstance(e.arg, Pow)
        assert lower_to_rfunc("-t^2", A01) == from_basis(A01, {2: -1})

    def test_left_associative(self):
        assert lower_to_field("8/2/2", QQ) == 2
        assert lower_to_field("5 - 2 - 1", QQ) == 2

    def test_negative_exponents(self):
        assert lower_to_rfunc("t^-2", A01) == RatFunc.pole(A01, 1, 2)
        assert lower_to_rfunc("(t - 1)^(-1)", A01) == RatFunc.pole(A01, 2, 1)

    def test_unicode_minus(self):
        assert lower_to_rfunc("1/(t*(t−1))", A01) == RatFunc.pole(A01, 2, 1) - RatFunc.pole(A01, 1, 1)

    def test_zero(self):
        assert lower_to_rfunc("0", A01).is_zero()

    def test_atoms(self):
        assert parse_expr("s") == Sym("s", 0)
        assert parse_expr("  42") == Num(42, 2)

    @pytest.mark.parametrize("text, pos", [("1 +", 3), ("(t", 2), ("t^x", 2), ("2 $ 3", 2), ("t t", 2), ("", 0)])
    def test_syntax_errors(self, text, pos):
        with pytest.raises(ParseError) as err:
            parse_expr(text)
        assert err.value.position == pos

    def test_foreign_pole(self):
        with pytest.raises(ForeignPole):
            lower_to_rfunc("1/(t-2)", A01)
        # foreign factors that cancel are fine
        assert lower_to_rfunc("(t-2)/(t-2)", A01) == RatFunc.constant(A01, 1)

    def test_division_by_zero(self):
        with pytest.raises(DivisionByZero):
            lower_to_rfunc("t/(t - t)", A01)
        with pytest.raises(DivisionByZero):
            lower_to_field("1/0", QQ)

    def test_field_elements(self):
        F = FieldSpec((3, 0, 1))
        assert lower_to_field("s^2", F) == -3
        assert lower_to_field("(1 + s)/2", F) == (F.gen + 1) / 2
        with pytest.raises(ParseError):
            lower_to_field("t", F)

    def test_modulus(self):
        assert lower_to_modulus("s - 0") == QQ
        assert lower_to_modulus("s^4 + s^3 + s^2 + s + 1") == FieldSpec((1, 1, 1, 1, 1))
        assert lower_to_modulus("(s^2 + 2)/1") == FieldSpec((2, 0, 1))
        for bad in ("2*s + 1", "3", "s^-1", "s/s"):
            with pytest.raises(ParseError):
                lower_to_modulus(bad)

    def test_field_generator_in_rfunc(self):
        F = FieldSpec((1, 1, 1))
        cfg = PointConfig(F, (F.one, F.gen))
        assert lower_to_rfunc("1/(t - s)", cfg) == RatFunc.pole(cfg, 2, 1)


@settings(max_examples=100, deadline=None)
@given(st.sampled_from(CONFIGS).flatmap(rfuncs))
def test_print_parse_round_trip(f):
    assert lower_to_rfunc(f.to_text(), f.config) == f


def _session(points="0,1", field="s - 0", **kw):
    return Session.from_text(points, field, **kw)


class TestCommands:
    def test_aut(self):
        doc = cmd_aut(_session())
        assert doc["order"] == 6 and doc["label"] == "D3"
        el = doc["elements"][0]
        assert set(el) >= {"matrix", "kind", "perm", "c"}
        assert len(el["matrix"]) == 4

    def test_iso(self):
        doc = cmd_iso(_session("0,1,5"), "0,1,1/5")
        assert doc["isomorphic"] and doc["maps"]
        assert set(doc["kinds_found"]) <= {"first", "second"}
        assert cmd_iso(_session("0,1,5"), "0,1,7") == {"isomorphic": False, "kinds_found": [], "maps": []}

    def test_bracket(self):
        doc = cmd_bracket(_session(), "1/t", "1/(t-1)")
        assert doc == {"result": {"poly": [], "principal": {"1": [["-2"], ["-1"]], "2": [["2"], ["-1"]]}}}

    def test_cocycle(self):
        assert cmd_cocycle(_session(), 1, "t^3", "t^-1") == {"result": ["6"]}
        assert cmd_cocycle(_session(), "sum", "1/t", "1/(t-1)") == {"result": ["0"]}

    def test_act(self):
        doc = cmd_act(_session("0"), "1/2", "1", "t", "1")
        assert doc == {"result": {"poly": [["3/2"]], "principal": {}}}

    def test_irreducible(self):
        assert cmd_irreducible(_session(), "0,0", "0") == {"irreducible": False, "reason": "beta0_alpha_integral"}
        assert cmd_irreducible(_session("0"), "1/2", "1")["irreducible"] is True

    def test_member(self):
        doc = cmd_member(_session("0"), "1/2", "1", "1")
        assert doc["member"] and doc["witness"] == {"poly": [["0"], ["2/3"]], "principal": {}}
        assert cmd_member(_session(), None, "1", "1/t") == {"member": False, "witness": None}

    def test_field_arrays(self):
        doc = cmd_aut(_session("0,1,s,-1,-s", "s^2 + 1"))
        assert doc["order"] == 24
        assert all(len(x) == 2 for el in doc["elements"] for x in el["matrix"])

    def test_verify_jacobi(self):
        doc = cmd_verify(_session(seed=1, iterations=30), "jacobi")
        assert doc == {
            "suite": "jacobi", "seed": 1, "iterations": 30, "pass": True, "failures": 0,
            "first_counterexample": None,
        }

    @pytest.mark.parametrize("suite", ["cocycle", "cor21", "cor41", "closedform", "module-axiom"])
    def test_verify_suites(self, suite):
        doc = cmd_verify(_session("0,1,3", seed=7, iterations=20), suite)
        assert doc["pass"] and doc["failures"] == 0

    def test_session_validation(self):
        with pytest.raises(ValueError):
            _session(iterations=0)
        with pytest.raises(ValueError):
            _session(seed=-1)


def _run(argv, capsys):
    status = main(argv)
    out = capsys.readouterr().out
    return status, out


class TestMain:
    def test_json_output(self, capsys):
        status, out = _run(["aut", "--points", "0,1", "--json"], capsys)
        assert status == 0
        doc = json.loads(out)
        assert doc["order"] == 6 and doc["label"] == "D3"
        assert out.count("\n") == 1

    def test_deterministic(self, capsys):
        argv = ["verify", "module-axiom", "--points", "0,1", "--seed", "42", "--iters", "15", "--json"]
        _, first = _run(argv, capsys)
        _, second = _run(argv, capsys)
        assert first == second
        assert json.loads(first)["seed"] == 42

    def test_text_output(self, capsys):
        status, out = _run(["irreducible", "--points", "0", "--alpha", "1/2", "--beta", "1"], capsys)
        assert status == 0 and "irreducible: True" in out

    @pytest.mark.parametrize(
        "argv, exc",
        [
            (["bracket", "--points", "0,1", "t^", "t"], ParseError),
            (["bracket", "--points", "0,1", "1/(t-2)", "t"], ForeignPole),
            (["aut", "--field", "s^2 - 1", "--points", "0,1,s,2"], ReducibleModulus),
            (["aut", "--points", "0"], InfiniteGroup),
        ],
    )
    def test_exit_codes(self, argv, exc, capsys):
        status, out = _run(argv + ["--json"], capsys)
        assert status == exc.exit_status
        assert json.loads(out)["error"] == exc.code

    def test_exit_codes_distinct(self):
        errs = [ParseError, ForeignPole, ConfigMismatch, ReducibleModulus, UnexpectedGroup, InfiniteGroup]
        codes = [e.exit_status for e in errs]
        assert len(set(codes)) == len(codes) and 0 not in codes

    def test_iso_flag(self, capsys):
        status, out = _run(["iso", "--points", "0,1,5", "--other", "0,1,-4", "--json"], capsys)
        assert status == 0 and json.loads(out)["isomorphic"]

    def test_module_entry_point(self):
        proc = subprocess.run(
            [sys.executable, "-m", "npvir", "cocycle", "--points", "0,1", "1", "t^3", "t^-1", "--json"],
            capture_output=True, text=True, check=True,
        )
        assert json.loads(proc.stdout) == {"result": ["6"]}
