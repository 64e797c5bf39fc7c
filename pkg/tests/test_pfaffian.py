from math import comb

import pytest

from pfaffstringy.errors import ParameterError
from pfaffstringy.pfaffian import (
    DiscrepancyKind, PfaffianSpec, canonical_coefficient, dim_pf, discrepancy, key_lemma_sides,
    stringy_pf_closed, stringy_pf_strata, verify_key_lemma,
)
from pfaffstringy.qalgebra import LaurentPoly, RatFunc, limit_at_one, render

EVEN = [(n, k) for n in range(4, 15, 2) for k in range(1, n // 2 + 1)]


def test_spec_validation():
    with pytest.raises(ParameterError):
        PfaffianSpec(3, 1)
    with pytest.raises(ParameterError):
        PfaffianSpec(6, 4)
    with pytest.raises(ParameterError):
        discrepancy(1, 2, 6, "weird")


def test_dimensions():
    # Pf(4, 6) is the cubic hypersurface in P^14; G(2,6) has dimension 8
    assert dim_pf(PfaffianSpec(6, 2)) == 13
    assert dim_pf(PfaffianSpec(6, 1)) == 8
    assert canonical_coefficient(PfaffianSpec(6, 1)) == -6


def test_discrepancy_range():
    with pytest.raises(ParameterError):
        discrepancy(1, 2, 6)
    assert discrepancy(2, 2, 6, "usual") == 8 - 4 - 1


@pytest.mark.parametrize("n", range(4, 21, 2))
def test_boundary_discrepancies(n):
    for k in range(2, (n - 2) // 2 + 1):
        for i in range(1, k):
            j = (n - 2 * i) // 2
            assert discrepancy(j, k, n, "modified") == (n - 2 * i - 1) * (k - i) - 1
            assert discrepancy(j, k, n, "usual") == (n - 2 * i) * (k - i) - 1


@pytest.mark.parametrize("n,k", EVEN)
@pytest.mark.parametrize("kind", list(DiscrepancyKind))
def test_strata_matches_closed(n, k, kind):
    spec = PfaffianSpec(n, k)
    assert stringy_pf_strata(spec, kind) == stringy_pf_closed(spec, kind)


@pytest.mark.parametrize("n,k", EVEN)
def test_modified_is_polynomial_with_limit(n, k):
    f = stringy_pf_closed(PfaffianSpec(n, k), "modified")
    assert f.is_polynomial()
    assert limit_at_one(f) == (n - 1) * k * comb(n // 2, k)


def test_usual_display():
    f = stringy_pf_closed(PfaffianSpec(6, 2), "usual")
    assert not f.is_polynomial()
    assert render(f, "factored") == "(q^3 - 1)*(q^5 - 1)*(q^12 - 1) / ((q - 1)*(q^2 - 1)*(q^4 - 1))"
    assert f(2) == 19747


def test_usual_top_rank_not_polynomial():
    # k = n/2 gives a genuine fraction for the usual kind as well
    f = stringy_pf_closed(PfaffianSpec(4, 2), "usual")
    q = LaurentPoly.monomial
    assert f == RatFunc((q(4) + 1) * (q(3) - 1), q(2) - 1)


def test_odd_rejected():
    with pytest.raises(ParameterError):
        stringy_pf_closed(PfaffianSpec(7, 2))


@pytest.mark.parametrize("n", range(4, 15, 2))
def test_key_lemma(n):
    for k in range(1, (n - 2) // 2 + 1):
        assert verify_key_lemma(n, k).passed
        lhs, rhs = key_lemma_sides(n, k)
        assert lhs == rhs
