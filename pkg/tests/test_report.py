import json

from pfaffstringy.report import FAIL, PASS, SKIP, VerificationReport, grid_points, merge, run_grid


def _check(p):
    if p["a"] == 0:
        return SKIP, None, None
    return (PASS, None, None) if p["a"] + p["b"] != 3 else (FAIL, "x", "y")


def test_report_counts_and_json():
    rep = run_grid("toy", grid_points({"a": range(0, 3), "b": range(0, 3)}), _check,
                   {"a": range(0, 3), "b": range(0, 3)})
    assert (rep.tested, rep.skipped, rep.failed) == (6, 3, 2)
    assert not rep
    d = json.loads(rep.to_json())
    assert d["grid"] == {"a": [0, 2], "b": [0, 2]}
    assert d["failures"][0] == {"point": {"a": 1, "b": 2}, "lhs": "x", "rhs": "y"}
    rows = rep.to_csv().splitlines()
    assert rows[0] == "a,b,status,lhs,rhs" and len(rows) == 10


def test_parallel_keeps_order():
    pts = grid_points({"a": range(0, 4), "b": range(0, 5)})
    assert run_grid("t", pts, _check, jobs=2).to_dict() == run_grid("t", pts, _check).to_dict()


def test_merge():
    a, b = VerificationReport("a"), VerificationReport("b")
    a.add({"n": 1}, PASS)
    b.add({"n": 2}, FAIL, 1, 2)
    m = merge("all", [a, b])
    assert m.failed == 1 and m.results[1].point == {"check": "b", "n": 2}
    assert "FAIL" in m.summary()
