import json

import pytest

from pfaffstringy.cli import run
from pfaffstringy.qalgebra import parse


def _run(capsys, *argv):
    code = run(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_stringy_display(capsys):
    code, out, _ = _run(capsys, "stringy", "--n", "6", "--k", "2", "--kind", "usual", "--format", "json")
    d = json.loads(out)
    assert code == 0 and d["polynomial"] is False
    f = parse(d["value"])
    assert str(f) == d["value"]
    code, out, _ = _run(capsys, "stringy", "--n", "6", "--k", "2", "--kind", "usual", "--format", "latex")
    assert "(q^{12}-1)" in out


def test_display_factored_roundtrips(capsys):
    base = ["stringy", "--n", "8", "--k", "3", "--kind", "usual"]
    _, expanded, _ = _run(capsys, *base)
    _, factored, _ = _run(capsys, *base, "--display", "factored")
    assert expanded != factored
    assert parse(expanded) == parse(factored)


@pytest.mark.parametrize("fmt", ["text", "json", "csv", "latex"])
@pytest.mark.parametrize("n,k", [(6, 2), (8, 3), (10, 5)])
def test_methods_byte_identical(capsys, fmt, n, k):
    for kind in ("usual", "modified"):
        base = ["stringy", "--n", str(n), "--k", str(k), "--kind", kind, "--format", fmt]
        a = _run(capsys, *base, "--method", "closed")
        b = _run(capsys, *base, "--method", "strata")
        assert a == b


@pytest.mark.parametrize("fmt", ["text", "json"])
def test_cut_f_methods(capsys, fmt):
    base = ["cut-f", "--n", "8", "--k", "2", "--i", "3", "--format", fmt]
    assert _run(capsys, *base, "--method", "closed") == _run(capsys, *base, "--method", "recursive")


def test_l_iso(capsys):
    code, out, _ = _run(capsys, "l-iso", "--n", "4", "--k", "1", "--i", "1")
    assert code == 0 and parse(out)(2) == 19


def test_relate(capsys):
    code, out, _ = _run(capsys, "relate", "--n", "6", "--k", "1", "--l", "6", "--format", "json")
    d = json.loads(out)
    assert d["relation_rhs"] == "q^9 + q^7 + q^5"
    assert (d["euler_gap"], d["type_X"], d["type_Y"], d["dim_X"], d["dim_Y"]) == (-3, "CY", "Fano", 2, 4)


def test_sod(capsys):
    code, out, _ = _run(capsys, "sod", "--n", "7", "--k", "1", "--l", "5", "--side", "X", "--format", "json")
    d = json.loads(out)
    assert d["blocks"] == [{"count": 2, "size": 3, "first_twist": 1, "last_twist": 2}]
    code, out, _ = _run(capsys, "sod", "--n", "6", "--k", "2", "--l", "9", "--side", "Y", "--format", "csv")
    assert out.splitlines()[0] == "count,size,first_twist,last_twist"


def test_figure_check(capsys):
    code, out, _ = _run(capsys, "figure-check")
    assert code == 0
    assert "1+q+23q^2+q^3+q^4 = q*(1+22q+q^2) + 1+q^2+q^4" in out


def test_verify_lemma(capsys):
    code, out, _ = _run(capsys, "verify", "--suite", "lemma", "--grid", "n=4..14")
    assert code == 0 and "PASS" in out


def test_verify_json_and_csv(capsys, tmp_path):
    target = tmp_path / "r.json"
    code, out, _ = _run(capsys, "verify", "--suite", "phi", "--grid", "n=0..3", "--grid", "exp=-1..2",
                        "--format", "json", "--output", str(target))
    d = json.loads(target.read_text())
    assert code == 0 and out == "" and d["failed"] == 0 and d["tested"] > 0
    code, out, _ = _run(capsys, "verify", "--suite", "cases", "--grid", "n=5..6", "--format", "csv")
    assert code == 0 and out.splitlines()[0].endswith("status,lhs,rhs")


def test_verify_all_small(capsys):
    code, out, _ = _run(capsys, "verify", "--suite", "all", "--grid", "n=4..6", "--grid", "exp=0..2",
                        "--format", "latex")
    assert code == 0 and "\\begin{tabular}" in out


def test_verify_failure_exit(capsys, monkeypatch):
    from pfaffstringy import hpd
    monkeypatch.setattr(hpd, "euler_gap", lambda spec: 10 ** 6)
    code, out, err = _run(capsys, "verify", "--suite", "cases", "--grid", "n=5..5")
    assert code == 1 and json.loads(err)["failed"] > 0


@pytest.mark.parametrize("argv", [
    ["stringy", "--n", "5", "--k", "9"],
    ["stringy", "--n", "6"],
    ["stringy", "--n", "6", "--k", "2", "--bogus"],
    ["verify", "--suite", "lemma", "--grid", "n=4-8"],
    ["verify", "--suite", "lemma", "--grid", "m=1..2"],
    ["sod", "--n", "6", "--k", "3", "--l", "1", "--side", "X"],
    ["nothing"],
])
def test_usage_errors(capsys, argv):
    assert _run(capsys, *argv)[0] == 2


def test_internal_error(capsys, monkeypatch):
    from pfaffstringy import pfaffian

    def boom(*a):
        raise RuntimeError("boom")

    monkeypatch.setattr(pfaffian, "stringy_pf_closed", boom)
    assert _run(capsys, "stringy", "--n", "6", "--k", "2")[0] == 3
