"""q-Pochhammer symbols, Gaussian binomials and the E-polynomials built
from them: projective spaces, Grassmannians, non-degenerate skew forms and
the rank strata of the space of skew forms."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from math import comb

from .errors import ParameterError, ZeroDenominatorError
from .qalgebra import ONE, ZERO, LaurentPoly, RatFunc, rat_normalize

__all__ = [
    "QSymbolSpec",
    "q_pochhammer",
    "gauss_binomial",
    "e_projective",
    "e_grassmannian",
    "e_nondeg_skew",
    "e_nondeg_skew_closed",
    "e_strata_pf",
    "qint",
    "qminus1",
    "cyclo_ratio",
]


@dataclass(frozen=True)
class QSymbolSpec:
    """``(±q^e; q^m)_count``."""

    start_exponent: int
    step: int = 1
    count: int = 0

    def __post_init__(self):
        if self.count < 0:
            raise ParameterError("count must be nonnegative")
        if self.step < 1:
            raise ParameterError("step must be positive")


def _binom_factor(e: int, sign: int) -> LaurentPoly:
    # 1 - sign * q^e
    if e == 0:
        return LaurentPoly(1 - sign)
    if e > 0:
        return LaurentPoly._make(0, (1,) + (0,) * (e - 1) + (-sign,))
    return LaurentPoly._make(e, (-sign,) + (0,) * (-e - 1) + (1,))


def q_pochhammer(spec: QSymbolSpec, sign: int = 1) -> LaurentPoly:
    """Product of ``1 - sign*q^(e + m*t)`` for ``t < count``."""
    if sign not in (1, -1):
        raise ParameterError("sign must be +1 or -1")
    out = ONE
    for t in range(spec.count):
        f = _binom_factor(spec.start_exponent + spec.step * t, sign)
        if not f:
            return ZERO
        out = out * f
    return out


def qminus1(e: int) -> LaurentPoly:
    """``q^e - 1`` for any integer ``e``."""
    return -_binom_factor(e, 1)


def cyclo_ratio(num_exps, den_exps, scale: LaurentPoly = ONE) -> RatFunc:
    """``scale * prod (q^a - 1) / prod (q^b - 1)`` with one normalization.

    A zero exponent upstairs makes the value 0; downstairs it is an error.
    """
    if any(b == 0 for b in den_exps):
        raise ZeroDenominatorError("factor q^0 - 1 in a denominator")
    if any(a == 0 for a in num_exps):
        return RatFunc(0)
    top = scale
    for a in num_exps:
        top = top * qminus1(a)
    bot = ONE
    for b in den_exps:
        bot = bot * qminus1(b)
    return rat_normalize(top, bot)


def qint(n: int, m: int = 1) -> LaurentPoly:
    """``(q^(m*n) - 1)/(q^m - 1)`` for ``n >= 0``."""
    if n < 0:
        raise ParameterError("qint needs n >= 0")
    if n == 0:
        return ZERO
    cs = [0] * (m * (n - 1) + 1)
    for t in range(n):
        cs[m * t] = 1
    return LaurentPoly._make(0, cs)


@lru_cache(maxsize=None)
def _gauss(n: int, k: int) -> LaurentPoly:
    # q-Pascal: [n,k] = [n-1,k-1] + q^k [n-1,k]
    if k < 0 or k > n:
        return ZERO
    if k == 0 or k == n:
        return ONE
    k = min(k, n - k)
    return _gauss(n - 1, k - 1) + _gauss(n - 1, k).shift(k)


def gauss_binomial(n: int, k: int, power: int = 1) -> LaurentPoly:
    """Gaussian binomial in base ``q^power``; zero outside ``0 <= k <= n``."""
    if power < 1:
        raise ParameterError("power must be positive")
    if k < 0 or k > n:
        return ZERO
    return _gauss(n, k).substitute_power(power)


def e_projective(n: int) -> RatFunc:
    if n < 0:
        raise ParameterError("projective dimension must be nonnegative")
    return RatFunc(qint(n + 1))


def e_grassmannian(k: int, n: int) -> RatFunc:
    if not 0 <= k <= n:
        raise ParameterError(f"need 0 <= k <= n, got k={k}, n={n}")
    return RatFunc(gauss_binomial(n, k))


def e_nondeg_skew_closed(i: int) -> RatFunc:
    """``q^(i(i-1)) * prod_{j<=i} (q^(2j-1) - 1) / (q - 1)``."""
    if i < 1:
        raise ParameterError("i must be positive")
    p = LaurentPoly.monomial(i * (i - 1))
    for j in range(1, i + 1):
        p = p * -_binom_factor(2 * j - 1, 1)
    return RatFunc(p, LaurentPoly({1: 1, 0: -1}))


@lru_cache(maxsize=None)
def _nondeg(i: int) -> RatFunc:
    n = 2 * i
    acc = e_projective(comb(n, 2) - 1)
    for p in range(1, i):
        acc = acc - e_strata_pf(p, n)
    return acc


def e_nondeg_skew(i: int) -> RatFunc:
    """Non-degenerate skew forms on a ``2i``-space up to scaling, from the
    rank stratification of the projective space of all skew forms."""
    if i < 1:
        raise ParameterError("i must be positive")
    return _nondeg(i)


def e_strata_pf(i: int, n: int) -> RatFunc:
    """Forms of rank exactly ``2i`` on an ``n``-space, up to scaling."""
    if not 1 <= i <= n // 2:
        raise ParameterError(f"need 1 <= i <= n/2, got i={i}, n={n}")
    return e_nondeg_skew(i) * e_grassmannian(n - 2 * i, n)
