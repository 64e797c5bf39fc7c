from math import comb

import pytest
from hypothesis import given
from hypothesis import strategies as st

import oracles
from pfaffstringy.errors import ParameterError, ZeroDenominatorError
from pfaffstringy.qalgebra import LaurentPoly, RatFunc
from pfaffstringy.qseries import (
    QSymbolSpec, cyclo_ratio, e_grassmannian, e_nondeg_skew, e_nondeg_skew_closed, e_projective,
    e_strata_pf, gauss_binomial, q_pochhammer, qint,
)


def test_pochhammer():
    # (q; q)_3 at q = 2: (1-2)(1-4)(1-8)
    assert q_pochhammer(QSymbolSpec(1, 1, 3))(2) == -21
    assert q_pochhammer(QSymbolSpec(2, 1, 0)) == LaurentPoly(1)
    assert q_pochhammer(QSymbolSpec(-1, 2, 2), sign=-1)(2) == (1 + 2 ** -1) * (1 + 2)


def test_symbol_spec_validation():
    with pytest.raises(ParameterError):
        QSymbolSpec(0, 0, 2)
    with pytest.raises(ParameterError):
        QSymbolSpec(0, 1, -1)


def test_cyclo_ratio_zero_cases():
    assert cyclo_ratio([0, 3], [1]) == RatFunc(0)
    with pytest.raises(ZeroDenominatorError):
        cyclo_ratio([3], [0])


def test_qint():
    assert qint(4)(2) == 15
    assert qint(3, 2)(2) == 1 + 4 + 16


@pytest.mark.parametrize("n", range(0, 9))
def test_gauss_binomial_against_inversions(n):
    for k in range(n + 1):
        assert gauss_binomial(n, k).terms() == oracles.inversion_polynomial(n, k)


def test_gauss_binomial_values():
    assert gauss_binomial(4, 2)(2) == 35
    assert gauss_binomial(6, 2)(2) == 651
    assert gauss_binomial(3, 5) == LaurentPoly(0)
    assert gauss_binomial(3, -1) == LaurentPoly(0)


@given(st.integers(0, 12), st.integers(0, 12), st.integers(1, 3))
def test_gauss_symmetry(n, k, m):
    if k <= n:
        assert gauss_binomial(n, k, m) == gauss_binomial(n, n - k, m)


@given(st.integers(1, 10), st.integers(1, 10))
def test_gauss_specializes_to_binomial(n, k):
    assert gauss_binomial(n, k)(1) == comb(n, k)


@pytest.mark.parametrize("d,n", [(1, 4), (2, 4), (2, 5), (3, 6), (2, 6)])
def test_grassmannian_cells(d, n):
    for qq in (2, 3):
        want = sum(oracles.schubert_cell_sizes(d, n, qq))
        assert e_grassmannian(d, n)(qq) == want == len(oracles.rref_bases(d, n, qq))


@pytest.mark.parametrize("i", range(1, 6))
def test_nondeg_closed_matches_recursion(i):
    assert e_nondeg_skew(i) == e_nondeg_skew_closed(i)


def test_nondeg_small():
    q = LaurentPoly.monomial
    assert e_nondeg_skew(2) == RatFunc(q(5) - q(2))
    assert e_strata_pf(2, 6)(2) == 18228


@pytest.mark.parametrize("n", range(4, 15))
def test_exhaustive(n):
    total = sum((e_strata_pf(i, n) for i in range(1, n // 2 + 1)), RatFunc(0))
    assert total == e_projective(comb(n, 2) - 1)


@pytest.mark.parametrize("n", range(2, 11))
def test_outputs_are_polynomials(n):
    assert e_projective(n).is_polynomial()
    for i in range(1, n // 2 + 1):
        assert e_strata_pf(i, n).is_polynomial()
        assert e_nondeg_skew(i).is_polynomial()
        assert e_grassmannian(i, n).is_polynomial()


def test_strata_range():
    with pytest.raises(ParameterError):
        e_strata_pf(4, 6)
