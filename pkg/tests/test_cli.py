from __future__ import annotations

import io
import subprocess
import sys

import pytest

from conftest import DATA
from quiverar.cli import main


def run(*argv, env_format=None, monkeypatch=None):
    out, err = io.StringIO(), io.StringIO()
    code = main([str(a) for a in argv], out=out, err=err)
    return code, out.getvalue(), err.getvalue()


def q(name):
    return DATA / name


def test_coxeter_a2():
    code, out, _ = run("coxeter", q("a2.quiver"))
    assert code == 0
    assert "phi: [[0, -1], [1, -1]]" in out
    assert "phi_right: [[-1, -1], [1, 0]]" in out
    assert "ps_dual: pass" in out


def test_regular_a2():
    code, out, _ = run("regular", q("a2.quiver"), "--weight", "1,1")
    assert code == 0 and "result: regular" in out
    code, out, _ = run("regular", q("a2.quiver"), "--weight", "1,-1", "--format", "records")
    assert "result=not regular" in out and "witness=1,1" in out


def test_hrr_a2():
    code, out, _ = run("hrr", q("a2.quiver"), q("P1.rep"), q("S1.rep"), "--format", "records")
    assert code == 0
    assert out.splitlines() == ["mukai=0", "hom_minus_ext=0", "difference=0"]


def test_other_commands():
    assert "cartan: [[1, 0], [1, 1]]" in run("cartan", q("a2.quiver"))[1]
    assert "count: 12" in run("roots", q("d4.quiver"))[1]
    assert run("hom", q("a2.quiver"), q("P1.rep"), q("S1.rep"))[1].startswith("dim: 1")
    assert run("ext", q("a2.quiver"), q("S1.rep"), q("S2.rep"))[1] == "dim: 1\n"
    assert run("tau", q("a2.quiver"), q("S1.rep"))[1].startswith("dims: 0,1")
    assert run("euler", q("a2.quiver"), "1,1", "1,0")[1] == "euler: 1\n"
    assert run("chern", q("a2.quiver"), q("P1.rep"))[1] == "chern: 1,1\n"
    assert "dim: 6" in run("hh0", q("e6.quiver"))[1]


def test_knit_outputs():
    code, out, _ = run("knit", q("a2.quiver"))
    assert code == 0 and out.splitlines()[0] == "node 0 0,1 P"
    code, out, _ = run("knit", q("a3.quiver"), "--verify", "--format", "records")
    assert code == 0 and out.splitlines()[-1] == "verify=3 tau links match D Tr"
    code, out, _ = run("knit", q("d4.quiver"), "--dot", "--verify")
    assert code == 0 and out.startswith("digraph")


def test_trace_check():
    code, out, _ = run("trace-check", q("a2.quiver"), q("P1.rep"), "--weight", "1,-1")
    assert code == 0 and "degenerate weight for M" in out
    code, _, err = run("trace-check", q("a2.quiver"), q("P1_plus_S1.rep"), "--weight", "1,1")
    assert code == 2 and "indecomposable" in err


def test_diagram_commands():
    code, out, _ = run("diagram", "normalize", "bd(X{A,B} * Y{B,C})")
    assert code == 0 and "normal_form: rd(Y{B,C}) * bd(X{A,B})" in out
    code, out, _ = run("diagram", "equiv", "D(Y{B,C}) * bd(X{A,B})", "ld(X{A,B} * Y{B,C})")
    assert "result: equivalent" in out
    code, _, err = run("diagram", "equiv", "X{A,B}", "ld(X{A,B})")
    assert code == 2 and "boundary mismatch" in err
    code, out, _ = run("diagram", "zigzag", "(eps_l(X{A,B}) * id(X{A,B})) . (id(X{A,B}) * eta_l(X{A,B}))")
    assert "reduced: id(X{A,B})" in out
    code, _, err = run("diagram", "normalize", "X{A,B} * Y{C,D}")
    assert code == 2


def test_input_errors():
    assert run("roots", q("kronecker.quiver"))[0] == 2
    assert run("cartan", q("missing.quiver"))[0] == 2
    assert run("regular", q("a2.quiver"), "--weight", "1,1,1")[0] == 2
    assert run("hom", q("a2.quiver"), q("P1.rep"), q("a2.quiver"))[0] == 2


def test_unknown_command_prints_usage(capsys):
    assert main(["frobnicate"]) == 2
    assert "usage" in capsys.readouterr().err


def test_format_from_environment(monkeypatch):
    monkeypatch.setenv("QUIVERAR_FORMAT", "records")
    assert run("cartan", q("a2.quiver"))[1] == "cartan=[[1, 0], [1, 1]]\n"
    monkeypatch.setenv("QUIVERAR_FORMAT", "yaml")
    assert run("cartan", q("a2.quiver"))[0] == 2


def test_assertion_failure_is_tagged(monkeypatch):
    from quiverar import cli

    monkeypatch.setattr(cli.ktheory, "mukai_pairing", lambda Q, x, y: 5)
    code, out, err = run("hrr", q("a2.quiver"), q("P1.rep"), q("S1.rep"))
    assert code == 1 and "[HRR]" in err and "difference: 5" in out


def test_records_are_reproducible():
    argv = ["knit", q("e6.quiver"), "--verify", "--format", "records", "--seed", "3"]
    assert run(*argv)[1] == run(*argv)[1]


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "quiverar.cli", "euler", str(q("a2.quiver")), "1,0", "0,1"],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "euler: -1\n"
