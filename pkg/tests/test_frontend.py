import json
import subprocess
import sys

import pytest
from hypothesis import given, settings, strategies as st

from ufkit import syntax as S
from ufkit.frontend import ParseError, parse, parse_context, parse_term, pretty
from ufkit.frontend.cli import main
from ufkit.frontend.session import run_source
from ufkit.kernel.prelude import prelude_source
from termgen import typed_terms


def run_cli(tmp_path, text, *args, name="in.uf"):
    path = tmp_path / name
    path.write_text(text)
    return main([*args, str(path)] if args and args[0] in ("check", "run") else ["check", *args, str(path)])


# -- parsing -----------------------------------------------------------------------------


def test_binders_and_arrows():
    assert parse_term("fun (x : One) => x") == S.lam("x", S.ONE, S.Var("x"))
    assert parse_term("One -> Zero -> One") == S.arrow(S.ONE, S.arrow(S.ZERO, S.ONE))
    assert parse_term("Pi (a : U), El a") == S.pi("a", S.U(), S.El(S.Var("a")))


def test_application_is_left_associative():
    assert parse_term("f x y") == S.app(S.Var("f"), S.Var("x"), S.Var("y"))


def test_contexts():
    g = parse_context("x : One, p : Id One x x")
    assert g.names() == ["x", "p"]


def test_parse_errors_carry_a_position():
    with pytest.raises(ParseError) as e:
        parse_term("fun (x : One) =>")
    assert e.value.line == 1
    with pytest.raises(ParseError):
        parse("def x : One := \n")
    with pytest.raises(ParseError):
        parse_term("(star, star")


@settings(max_examples=100, deadline=None)
@given(st.integers(min_value=0, max_value=10**6))
def test_print_then_parse_is_identity(seed):
    _, ty, tm = typed_terms(seed)
    assert parse_term(pretty(tm)) == tm
    assert parse_term(pretty(ty)) == ty


# -- sessions ------------------------------------------------------------------------------


def test_declarations_produce_records():
    rep = run_source("def c : One := star\ncheck c : One\nnormalize (fun x : One => x) c\n")
    assert rep.ok and [r.kind for r in rep.records] == ["def", "check", "normalize"]


def test_failures_are_reported_not_raised():
    rep = run_source("check star : Zero\n")
    assert not rep.ok and rep.records[0].detail["error"] == "TypeMismatch"


def test_expected_errors_count_as_success():
    rep = run_source("-- expect: error TypeMismatch\ncheck star : Zero\n")
    assert rep.ok


def test_flags_switch_eta():
    src = "flag eta {}\ncheck refl (One -> One) (fun x : One => f x) : Id (One -> One) (fun x : One => f x) f\n"
    head = "axiom f : One -> One\n"
    assert run_source(head + src.format("on")).ok
    assert not run_source(head + src.format("off")).ok


def test_interp_reports_cardinalities():
    rep = run_source("def Bool : U := o ++ o\ninterp Bool\n")
    assert rep.ok


def test_simplicial_commands():
    src = "sset T = discrete(2)\nsmap f : T -> T = id\nunivalent f --dim 2 --expect no\nkan f --expect yes\n"
    rep = run_source(src)
    assert rep.ok, [r.to_json() for r in rep.records]


def test_simplicial_blocks():
    src = "sset C\nsimplex v dim=0 faces=\nsimplex a dim=1 faces=v,v\nend\nsmap f : C -> C = id\nkan f --dim 2 --expect yes\n"
    assert run_source(src).ok


# -- the command line ------------------------------------------------------------------


def test_cli_exit_codes(tmp_path, capsys):
    assert run_cli(tmp_path, "def c : One := star\n") == 0
    assert run_cli(tmp_path, "check star : Zero\n") == 1
    out = capsys.readouterr().out
    assert "TypeMismatch" in out


def test_cli_json(tmp_path, capsys):
    run_cli(tmp_path, "def c : One := star\ncheck c : One\n", "--json")
    doc = json.loads(capsys.readouterr().out)
    assert doc[0]["ok"] and len(doc[0]["records"]) == 2


def test_cli_on_the_prelude(tmp_path):
    path = tmp_path / "prelude.uf"
    path.write_text(prelude_source())
    assert main(["check", "--funext", str(path)]) == 0


def test_cli_univalence(tmp_path, capsys):
    src = "sset T = discrete(2)\nsmap f : T -> T = id\nunivalent f --dim 2\n"
    run_cli(tmp_path, src, "--json")
    rec = json.loads(capsys.readouterr().out)[0]["records"][-1]
    assert rec["detail"]["verdict"] == "no" and rec["cert_dim"] == 2


def test_missing_file_is_an_error(tmp_path):
    assert main(["check", str(tmp_path / "absent.uf")]) == 1


def test_uf_entry_point(tmp_path):
    path = tmp_path / "a.uf"
    path.write_text("def c : One := star\n")
    out = subprocess.run([sys.executable, "-m", "ufkit.frontend.cli", "run", str(path)], capture_output=True, text=True)
    assert out.returncode == 0, out.stderr
