import csv
import re

import pytest

from baumslag import const_circuit, eval_circuit, format_circuit, parse_circuit
from baumslag.cli import main
from test_circuit import chain


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


@pytest.mark.parametrize(
    "word, code",
    [("B A b a B a b a^-2", 0), ("a", 1), ("", 0), ("B t b", 1)],
)
@pytest.mark.parametrize("engine", ["circuit", "naive"])
def test_solve(capsys, word, code, engine):
    assert run(capsys, "solve", word, "--engine", engine)[0] == code


def test_solve_from_file_and_resource_exit(capsys, tmp_path):
    code, text, _ = run(capsys, "hard-word", "6")
    assert code == 0
    w6 = tmp_path / "w6.txt"
    w6.write_text(text)
    code, out, _ = run(capsys, "solve", "--engine", "naive", "--step-cap", "1000000", f"@{w6}")
    assert code == 3 and "resource exceeded" in out
    assert run(capsys, "solve", f"@{w6}")[0] == 1


def test_syntax_error_names_position(capsys):
    code, _, err = run(capsys, "solve", "a^x")
    assert code == 2 and "position 1" in err


def test_usage_errors(capsys):
    assert run(capsys, "frobnicate")[0] == 2
    assert run(capsys, "solve")[0] == 2
    assert run(capsys, "solve", "@/nonexistent/file")[0] == 2
    assert run(capsys, "--help")[0] == 0


def test_hard_word(capsys):
    code, out, _ = run(capsys, "hard-word", "1")
    assert code == 0 and out.split() == "b^-1 a^-1 b a b^-1 a b".split()
    code, out, _ = run(capsys, "hard-word", "2", "--commutator-with", "b")
    assert code == 0 and len(out.split()) == 2 * 19 + 2
    assert run(capsys, "solve", out.strip())[0] == 1


def test_bs_normalize(capsys, tmp_path):
    code, out, _ = run(capsys, "bs-normalize", "a^3 t^2")
    assert code == 0 and out.splitlines() == ["M = 3", "sigma = 2"]
    assert run(capsys, "bs-normalize", "t a t^-1")[:2] == (1, "irreducible\n")
    # t^-40 a t^40 = a^(2^40): too large for an 8-bit display budget
    code, out, _ = run(capsys, "bs-normalize", "t^-40 a t^40", "--max-bits", "8")
    assert code == 0 and "M = <circuit>" in out and "powercircuit v1" in out
    prefix = tmp_path / "nf"
    code, out, _ = run(capsys, "bs-normalize", "t^-40 a t^40", "--max-bits", "8", "-o", str(prefix))
    assert eval_circuit(parse_circuit((tmp_path / "nf.M.pc").read_text())) == 2**40


@pytest.fixture
def files(tmp_path):
    def write(name, P):
        p = tmp_path / name
        p.write_text(format_circuit(P))
        return str(p)

    return write


def test_circuit_commands(capsys, files, tmp_path):
    p = files("p.pc", const_circuit(-12))
    assert run(capsys, "circuit", "eval", p)[1] == "-12\n"
    assert run(capsys, "circuit", "sign", p)[1] == "-1\n"
    code, out, _ = run(capsys, "circuit", "reduce", p)
    assert code == 0 and eval_circuit(parse_circuit(out)) == -12
    big = files("big.pc", chain(7, 6))
    assert run(capsys, "circuit", "eval", big, "--max-bits", "64")[0] == 3
    assert run(capsys, "circuit", "sign", big)[1] == "1\n"


@pytest.mark.parametrize(
    "op, x, y, expected",
    [("add", 12, 5, 17), ("sub", 12, 5, 7), ("mul2", 3, 4, 48), ("div2", 48, 4, 3), ("div2", 3, -2, 12)],
)
def test_circuit_ops(capsys, files, tmp_path, op, x, y, expected):
    out = tmp_path / "out.pc"
    code = run(capsys, "circuit", "op", op, files("x.pc", const_circuit(x)), files("y.pc", const_circuit(y)), "-o", str(out))[0]
    assert code == 0
    assert eval_circuit(parse_circuit(out.read_text())) == expected


def test_circuit_op_failures(capsys, files, tmp_path):
    out = str(tmp_path / "out.pc")
    assert run(capsys, "circuit", "op", "div2", files("x.pc", const_circuit(6)), files("y.pc", const_circuit(2)), "-o", out)[0] == 1
    assert run(capsys, "circuit", "op", "mul2", files("x.pc", const_circuit(6)), files("y.pc", const_circuit(-2)), "-o", out)[0] == 2
    bad = tmp_path / "bad.pc"
    bad.write_text("powercircuit v1\nv 0\ne 0 7 +\n")
    code, _, err = run(capsys, "circuit", "eval", str(bad))
    assert code == 2 and "line 3" in err


_DOT_STMT = re.compile(
    r'^\s*(?:node \[[^\]]*\];|v\d+ \[[^\]]*\];|v\d+ -> v\d+ \[label="[+-]"\];)$'
)


def test_circuit_dot_is_valid(capsys, files):
    p = files("p.pc", const_circuit(35))
    code, out, _ = run(capsys, "circuit", "dot", p)
    lines = out.strip().splitlines()
    assert code == 0
    assert re.match(r"^digraph \w+ \{$", lines[0]) and lines[-1] == "}"
    assert all(_DOT_STMT.match(line) for line in lines[1:-1]), lines
    assert out.count("{") == out.count("}")
    assert out.count("style=filled") == 3


def test_bench_command(capsys, tmp_path):
    out = tmp_path / "bench.csv"
    code, text, _ = run(capsys, "bench", "--k-max", "3", "--engines", "circuit,naive", "--csv", str(out))
    assert code == 0 and "slope" in text
    rows = list(csv.reader(out.open()))
    assert rows[0] == ["family", "k", "length", "engine", "seconds", "peak_vertices", "verdict"]
    assert len(rows) == 1 + 3 * 2
    assert run(capsys, "bench", "--k-max", "3", "--engines", "quantum")[0] == 2
