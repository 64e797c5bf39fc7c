from fractions import Fraction

import pytest
from hypothesis import assume, given
from hypothesis import strategies as st

from pfaffstringy import _pykernels
from pfaffstringy.errors import SeriesSpecError
from pfaffstringy.qalgebra import eval_at
from pfaffstringy.qhypergeom import (
    PhiParam, PhiSeriesSpec, cancel_pairs, check_point, check_specialization, eval_phi,
    eval_phi_factored, factored_equal, identity_sides, verify_identity,
)


def qp(e, c=1):
    return PhiParam(c, e)


def numeric_phi(spec: PhiSeriesSpec, x: Fraction) -> Fraction:
    """Term-by-term sum at a number, straight from the definition."""
    base = x ** spec.base_power

    def value(p):
        return Fraction(p.coefficient) * x ** p.exponent

    def poch(a, t):
        out = Fraction(1)
        for u in range(t):
            out *= 1 - a * base ** u
        return out

    z = value(spec.argument)
    w = spec.correction
    total = Fraction(0)
    for t in range(spec.termination + 1):
        num = 1
        for a in spec.upper:
            num *= poch(value(a), t)
        den = poch(base, t)
        for b in spec.lower:
            den *= poch(value(b), t)
        corr = (Fraction(-1) ** t * base ** (t * (t - 1) // 2)) ** w
        total += num / den * corr * z ** t
    return total


def test_param_arithmetic():
    a = qp(3, 2) / qp(1, 4)
    assert a == PhiParam(Fraction(1, 2), 2)
    assert (-qp(2)) ** 2 == qp(4)
    with pytest.raises(SeriesSpecError):
        PhiParam(0, 1)


def test_spec_invariants():
    with pytest.raises(SeriesSpecError):
        PhiSeriesSpec([qp(2)], [qp(1)], 1, qp(1), 2)          # no witness
    with pytest.raises(SeriesSpecError):
        PhiSeriesSpec([qp(-3)], [qp(-1)], 1, qp(1), 3)        # pole at t = 1
    with pytest.raises(SeriesSpecError):
        PhiSeriesSpec([qp(-3)], [], 0, qp(1), 3)              # bad base
    with pytest.raises(SeriesSpecError):
        PhiSeriesSpec([qp(-3)], [], 2, qp(1), 3)              # q^-3 is no power of q^2
    with pytest.raises(SeriesSpecError):
        PhiSeriesSpec([qp(-6)], [qp(-4)], 2, qp(1), 3)        # pole at t = 2 in base q^2
    # a pole at or after termination is harmless
    PhiSeriesSpec([qp(-2)], [qp(-2)], 1, qp(1), 2)


specs = st.builds(
    lambda n, ups, los, m, z, zc, w: (n, ups, los, m, z, zc, w),
    st.integers(0, 5),
    st.lists(st.tuples(st.integers(-4, 6), st.sampled_from([1, -1, 2, Fraction(1, 3)])), max_size=3),
    st.lists(st.tuples(st.integers(-4, 6), st.sampled_from([1, -1, 3, Fraction(-1, 2)])), max_size=3),
    st.integers(1, 2),
    st.integers(-3, 3),
    st.sampled_from([1, -1, 2, Fraction(2, 3)]),
    st.integers(0, 2),
)


def build(args):
    n, ups, los, m, z, zc, w = args
    upper = [qp(-m * n)] + [qp(e, c) for e, c in ups]
    # extra lower parameters shift the correction exponent 1 + s - r
    lower = [qp(e, c) for e, c in los] + [qp(5, 1)] * w
    try:
        return PhiSeriesSpec(upper, lower, m, qp(z, zc), n)
    except SeriesSpecError:
        return None


@given(specs)
def test_paths_agree_and_match_numeric_sum(args):
    spec = build(args)
    assume(spec is not None)
    a = eval_phi_factored(spec, "ratio")
    b = eval_phi_factored(spec, "terms")
    assert factored_equal(a, b)
    f = eval_phi(spec)
    assert f == eval_phi(spec, "terms")
    for x in (Fraction(2), Fraction(3), Fraction(-1, 2)):
        try:
            want = numeric_phi(spec, x)
        except ZeroDivisionError:
            continue  # x is a root of some lower factor
        assert eval_at(f, x) == want


@given(specs)
def test_python_kernels_agree(args):
    spec = build(args)
    assume(spec is not None)
    a = eval_phi_factored(spec, "ratio", _pykernels.IntPoly)
    b = eval_phi_factored(spec, "ratio")
    assert a.to_ratfunc() == b.to_ratfunc()


def test_negative_correction_exponent():
    # r = 4, s = 2: the (-1)^t q^(t(t-1)/2) factor enters with exponent -1
    spec = PhiSeriesSpec([qp(-3), qp(1), qp(2), qp(2, -1)], [qp(4), qp(3)], 1, qp(-1, -1), 3)
    assert spec.correction == -1
    assert eval_at(eval_phi(spec), 2) == numeric_phi(spec, Fraction(2))


def test_termination_zero():
    spec = PhiSeriesSpec([qp(0), qp(3)], [qp(2)], 1, qp(1), 0)
    assert eval_phi(spec) == eval_phi(spec, "terms")
    assert eval_at(eval_phi(spec), 5) == 1


def test_unknown_path():
    spec = PhiSeriesSpec([qp(-1)], [], 1, qp(1), 1)
    with pytest.raises(ValueError):
        eval_phi(spec, "sideways")


@pytest.mark.parametrize("ident,point", [
    (1, {"n": 3, "b": 2, "c": 5}),
    (2, {"n": 4, "b": -1, "c": 3}),
    (3, {"n": 3, "b": 1, "c": 2, "d": 4, "e": 6}),
    (4, {"n": 5, "a": 2, "b": 1, "d": 7}),
])
def test_identity_sides(ident, point):
    lhs, rhs = identity_sides(ident, point)
    assert lhs == rhs
    assert check_point(ident, point)[0] == "pass"


def test_undefined_point_is_skipped():
    # c = q^-2 makes (c; q)_n vanish for n >= 3
    assert check_point(1, {"n": 4, "b": 1, "c": -2})[0] == "skip"
    assert identity_sides(1, {"n": 4, "b": 1, "c": -2}) is None


@pytest.mark.parametrize("ident", [1, 2, 4])
def test_small_grids(ident):
    grid = {k: range(-3, 7) for k in ("a", "b", "c", "d", "e")}
    grid["n"] = range(0, 7)
    from pfaffstringy.qhypergeom import DEFAULT_GRIDS
    rep = verify_identity(ident, {k: grid[k] for k in DEFAULT_GRIDS[ident]})
    assert rep.passed and rep.tested > 0 and rep.skipped > 0
    d = rep.to_dict()
    assert set(d) == {"identity", "grid", "tested", "skipped", "failed", "failures"}


def test_identity3_slice_in_parallel():
    grid = {"n": range(0, 5), "b": range(-2, 3), "c": range(-2, 3), "d": range(0, 3), "e": range(-1, 2)}
    serial = verify_identity(3, grid)
    par = verify_identity(3, grid, jobs=2)
    assert serial.passed and serial.to_dict() == par.to_dict()


def test_bad_grid():
    with pytest.raises(ValueError):
        verify_identity(3, {"n": range(2)})
    with pytest.raises(ValueError):
        verify_identity(7)


def test_cancel_pairs():
    up, lo = cancel_pairs([qp(1), qp(2), qp(1)], [qp(1), qp(3)])
    assert up == [qp(2), qp(1)] and lo == [qp(3)]


@pytest.mark.parametrize("n", range(2, 13, 2))
def test_specialization_used_for_cut_counts(n):
    statuses = []
    for k in range(1, n // 2 + 1):
        for i in range(1, n // 2 + 1):
            status = check_specialization(k, i, n)[0]
            assert status != "fail"
            statuses.append(status)
            if n >= 2 * i + 2 * k:
                assert status == "pass"
    assert "pass" in statuses
