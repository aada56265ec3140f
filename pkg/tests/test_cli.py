import pytest

from companionforms import GF, Q, Matrix, make_block_companion, make_companion
from companionforms.cli import cmd_check, cmd_make, cmd_verify, main
from companionforms.matrixfile import loads, write


def result_section(text):
    body = text.split("[result]\n", 1)[1]
    return dict(line.split("=", 1) for line in body.splitlines())


def test_make_then_check(tmp_path, capsys):
    out = tmp_path / "f.txt"
    assert main(["make", "1,2,3", "--field", "Q", "--out", str(out)]) == 0
    assert loads(out.read_text()).matrix == make_companion([1, 2, 3], Q)
    assert main(["check", str(out)]) == 0
    res = result_section(capsys.readouterr().out)
    assert res["companion"] == "true" and res["p"] == "1,2,3"


def test_make_stdout(capsys):
    assert main(["make", "11,-1", "--field", "GF:7"]) == 0
    text = capsys.readouterr().out
    assert loads(text).matrix == make_companion([GF(7)(4), GF(7)(6)])


def test_check_not_companion(tmp_path):
    path = tmp_path / "a.txt"
    write(path, Matrix(Q, [[1, 0], [0, 2]]))
    code, text = cmd_check(str(path))
    assert code == 1
    res = result_section(text)
    assert res["companion"] == "false" and res["witness_column"] == "0"
    assert res["lower_rows"] == "false"


def test_check_row_blind_case(tmp_path):
    path = tmp_path / "a.txt"
    write(path, Matrix(GF(2), [[1, 1], [1, 0]]))
    code, text = cmd_check(str(path))
    res = result_section(text)
    assert code == 1
    assert res["lower_rows"] == "true" and res["u_symmetry"] == "true"


def test_check_block(tmp_path):
    P = Matrix(GF(3), [[1, 2], [0, 1], [2, 2], [1, 0]])
    blk = tmp_path / "P.txt"
    write(blk, P)
    text = cmd_make(None, None, str(blk))
    F = tmp_path / "F.txt"
    F.write_text(text)
    assert loads(text).matrix == make_block_companion(P)
    code, out = cmd_check(str(F))
    assert code == 0
    assert result_section(out)["P"] == "1 2;0 1;2 2;1 0"
    # the same matrix read with t = 1 is not a scalar companion
    assert main(["check", str(F), "--t", "1"]) == 1


@pytest.mark.parametrize(
    "argv",
    [
        ["make", "1,,2", "--field", "Q"],
        ["make", "1,2"],
        ["make", "1,x", "--field", "Q"],
        ["make", "1", "--field", "GF:4"],
        ["check", "/nonexistent/file"],
        ["verify", "--theorem", "nope", "--field", "Q", "--n", "2"],
        ["verify", "--theorem", "krylov", "--field", "Q", "--n", "2", "--exhaustive"],
        ["verify", "--theorem", "krylov", "--field", "GF:2", "--n", "5", "--exhaustive"],
        ["verify", "--theorem", "krylov", "--field", "GF:2", "--n", "2", "--t", "2"],
        [],
    ],
)
def test_errors_exit_2(argv, capsys):
    assert main(argv) == 2


def test_malformed_file_exit_2(tmp_path):
    p = tmp_path / "bad.txt"
    p.write_text("field Q\nsize 2 2\n1 2\n")
    assert main(["check", str(p)]) == 2


def test_verify_exhaustive_counts():
    code, text = cmd_verify("bca", GF(2), 2, True, 0, 0)
    assert code == 0
    assert "16 matrices, 4 companions, 0 mismatches" in text


def test_verify_exhaustive_refuted():
    code, text = cmd_verify("usym", GF(2), 2, True, 0, 0)
    assert code == 1 and "first mismatch" in text
    code, _ = cmd_verify("usym", GF(2), 2, True, 0, 0, reference="lower_rows")
    assert code == 0


def test_verify_random_examples():
    assert cmd_verify("crossover", Q, 5, False, 100, 42)[0] == 0
    assert cmd_verify("crg", GF(3), 2, False, 50, 7, t=2)[0] == 0


def test_verify_deterministic(capsys):
    argv = ["verify", "--theorem", "krylov", "--field", "Q", "--n", "3", "--trials", "20", "--seed", "9"]
    main(argv)
    first = capsys.readouterr().out
    main(argv)
    assert capsys.readouterr().out == first
    main(argv[:-1] + ["10"])
    assert capsys.readouterr().out != first
