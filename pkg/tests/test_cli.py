import json
import subprocess
import sys

import pytest

from twisted_schubert import cli
from twisted_schubert.polyring import parse_poly


def run(capsys, *argv):
    code = cli.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_twisted_both(capsys):
    code, out, _ = run(capsys, "twisted", "--n", "3", "--perm", "123", "--method", "both", "--format", "text")
    assert code == 0
    # equal to the same polynomial written in chain-summation order
    listed = "x2*x3^2 + 2*x2*x3 + x3^2 + 2*x3 + x1*x2 + x2 + 1"
    assert parse_poly(out.strip(), 3) == parse_poly(listed, 3)
    assert out.strip() == "x2*x3^2 + x1*x2 + 2*x2*x3 + x3^2 + x2 + 2*x3 + 1"


def test_schubert_text(capsys):
    code, out, _ = run(capsys, "schubert", "--n", "4", "--perm", "2431")
    assert (code, out.strip()) == (0, "x1^2*x2*x3 + x1*x2^2*x3")


def test_localize_text_and_json(capsys):
    code, out, _ = run(capsys, "localize", "--n", "3", "--perm", "123", "--at", "213")
    assert (code, out.strip()) == (0, "(1+y3-y1)*(1+y3-y2)")
    code, out, _ = run(capsys, "localize", "--n", "3", "--perm", "123", "--at", "213", "--format", "json")
    data = json.loads(out)
    assert data["factored"] == "(1+y3-y1)*(1+y3-y2)"
    assert parse_poly(data["text"], 3) == parse_poly("(1+y3-y1)*(1+y3-y2)", 3)


def test_latex(capsys):
    code, out, _ = run(capsys, "schubert", "--perm", "2431", "--format", "latex")
    assert out.strip() == r"\mathfrak{S}_{2431} = x_{1}^{2}x_{2}x_{3} + x_{1}x_{2}^{2}x_{3}"


@pytest.mark.parametrize("cmd", ["schubert", "double", "twisted", "double-twisted"])
def test_both_methods_all_kinds(capsys, cmd):
    for perm in ("123", "132", "231", "321"):
        code, _, _ = run(capsys, cmd, "--perm", perm, "--method", "both")
        assert code == 0


def test_billey_and_pieri(capsys):
    assert run(capsys, "billey", "--perm", "213", "--at", "231", "--method", "both")[0] == 0
    code, out, _ = run(capsys, "pieri", "--perm", "123", "--m", "2", "--k", "2", "--method", "both")
    assert (code, out.strip()) == (0, "S[231]")
    code, out, _ = run(capsys, "pieri", "--perm", "213", "--m", "1", "--k", "1", "--format", "json")
    assert json.loads(out)["terms"] == [{"perm": [3, 1, 2], "coeff": "1"}]


def test_pieri_too_small(capsys):
    code, _, err = run(capsys, "pieri", "--perm", "312", "--n", "5", "--m", "3", "--k", "1", "--kind", "h")
    assert code == 1 and "too small" in err


def test_skew_op(capsys):
    code, out, _ = run(capsys, "skew-op", "--perm", "4231", "--perm2", "2134", "--word", "1,2,3,1,2")
    assert code == 0
    assert set(out.strip().split(" + ")) == {
        "∂(3,4)*∂(2,4)*∂(1,3)*∂(2,3)", "∂(3,4)*∂(1,4)*∂(2,4)*∂(1,3)", "∂(1,4)*∂(2,4)",
    }


def test_chains_and_pipedreams(capsys):
    code, out, _ = run(capsys, "chains", "--perm", "123")
    assert out.strip().endswith("# 9 chains")
    code, out, _ = run(capsys, "pipedreams", "--perm", "2431", "--format", "json")
    assert json.loads(out)["count"] == 2


def test_mismatch_exit_code(capsys, monkeypatch):
    from twisted_schubert.polyring import MultiPoly
    rec, comb, sym = cli.POLY_KINDS["schubert"]
    monkeypatch.setitem(cli.POLY_KINDS, "schubert", (rec, lambda w: comb(w) + MultiPoly.x(1, w.n), sym))
    code, _, err = run(capsys, "schubert", "--perm", "213", "--method", "both")
    assert code == 1
    assert "first differing term" in err and "-x1" in err


def test_malformed_permutation_exit_2():
    for argv in (["schubert", "--perm", "1134"], ["schubert", "--perm", "21", "--n", "1"]):
        with pytest.raises(SystemExit) as exc:
            cli.main(argv)
        assert exc.value.code == 2


def test_verify_n3_stable(capsys):
    code, first, _ = run(capsys, "verify", "--n", "3")
    assert code == 0
    assert first.strip().endswith("14/14 suites passed for n=3")
    _, second, _ = run(capsys, "verify", "--n", "3")
    assert first == second


def test_tv_experiment(capsys):
    code, out, _ = run(capsys, "experiment-tv-positivity", "--n", "3", "--format", "json")
    data = json.loads(out)
    assert code == 0 and data["pairs"] == 36


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "twisted_schubert", "schubert", "--perm", "2431"],
                          capture_output=True, text=True, check=True)
    assert proc.stdout.strip() == "x1^2*x2*x3 + x1*x2^2*x3"
