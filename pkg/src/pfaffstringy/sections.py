"""Hyperplane cuts of Pfaffians by a skew form of rank ``2i``.

``f(k, i, n)`` is the modified stringy E-function of the cut of
``Pf(2k, V)``, ``f_circ`` the E-polynomial of the cut of the open rank-``2k``
stratum, and ``l_iso`` counts ``2k``-dimensional isotropic subspaces of a
rank-``2i`` form.
"""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .errors import ParameterError
from .qalgebra import LaurentPoly, RatFunc
from .qseries import QSymbolSpec, cyclo_ratio, gauss_binomial, q_pochhammer, qminus1
from .report import FAIL, PASS, VerificationReport

__all__ = [
    "CutSpec",
    "l_iso",
    "f_closed",
    "f_recursive",
    "f_circ",
    "f_from_circ",
    "inversion_check",
    "delta_sum",
    "system_coefficient",
    "system_rhs",
    "abcd",
    "verify_abcd",
    "combinatorial_sides",
    "fiber_count_sides",
]


@dataclass(frozen=True)
class CutSpec:
    n: int
    k: int
    i: int

    def __post_init__(self):
        if self.n % 2 or self.n < 2:
            raise ParameterError(f"n must be even and positive, got {self.n}")
        if not 1 <= self.k <= self.n // 2:
            raise ParameterError(f"need 1 <= k <= n/2, got k={self.k}")
        if not 1 <= self.i <= self.n // 2:
            raise ParameterError(f"need 1 <= i <= n/2, got i={self.i}")


def _mono(e: int) -> LaurentPoly:
    return LaurentPoly.monomial(e)


def _poch(e: int, m: int, count: int) -> LaurentPoly:
    return q_pochhammer(QSymbolSpec(e, m, count))


@lru_cache(maxsize=None)
def l_iso(k: int, i: int, n: int) -> RatFunc:
    """Isotropic ``2k``-subspaces of a rank-``2i`` skew form on an ``n``-space."""
    if k < 0 or 2 * k > n or not 1 <= i <= n // 2:
        raise ParameterError(f"l_iso needs 2k <= n and 1 <= i <= n/2, got k={k}, i={i}, n={n}")
    acc = RatFunc(0)
    for r in range(0, 2 * k + 1):
        g = gauss_binomial(n - 2 * i, r)
        if not g:
            continue
        # prod_{j=i+r+1-2k}^{i} (1 - q^{2j}) over prod_{j=1}^{2k-r} (1 - q^j);
        # both have 2k - r factors, so the signs cancel
        top = [2 * j for j in range(i + r + 1 - 2 * k, i + 1)]
        bot = list(range(1, 2 * k - r + 1))
        frac = cyclo_ratio(top, bot, g * _mono((2 * k - r) * (n - 2 * i - r)))
        acc = acc + frac
    return acc


def _check(spec) -> CutSpec:
    return spec if isinstance(spec, CutSpec) else CutSpec(*spec)


def _f_closed(n: int, k: int, i: int) -> RatFunc:
    e = (n - 1) * k - 1
    first = cyclo_ratio([e], [1], gauss_binomial(n // 2, k, 2))
    second = RatFunc(gauss_binomial((n - 2 * i) // 2, k, 2).shift(e))
    return first + second


def f_closed(spec: CutSpec) -> RatFunc:
    spec = _check(spec)
    return _f_closed(spec.n, spec.k, spec.i)


@lru_cache(maxsize=None)
def system_coefficient(n: int, k: int, j: int) -> RatFunc:
    """Coefficient of ``f(j)`` in the ``k``-th equation of the triangular
    system; equals 1 on the diagonal."""
    d = k - j
    top = _poch(n + 2 - 4 * k + 2 * j, 2, 2 * d).shift(2 * d * d - d)
    return RatFunc(top, _poch(1, 1, 2 * d))


def system_rhs(n: int, k: int, i: int) -> RatFunc:
    e = 2 * k * k - k - 1
    first = cyclo_ratio([e], [1], gauss_binomial(n, 2 * k))
    return first + l_iso(k, i, n) * RatFunc(_mono(e))


@lru_cache(maxsize=None)
def _f_rec(n: int, i: int, k: int) -> RatFunc:
    acc = system_rhs(n, k, i)
    for j in range(1, k):
        acc = acc - _f_rec(n, i, j) * system_coefficient(n, k, j)
    return acc


def f_recursive(spec: CutSpec) -> RatFunc:
    """Solve the triangular system for ``f`` by forward substitution."""
    spec = _check(spec)
    return _f_rec(spec.n, spec.i, spec.k)


def _inv_coeff(n: int, k: int, j: int) -> RatFunc:
    d = k - j
    b = gauss_binomial(n // 2 - j, d, 2).shift(d * (d - 1))
    return RatFunc(-b if d % 2 else b)


def f_circ(spec: CutSpec, f=None) -> RatFunc:
    """Open-stratum invariant from ``f`` through the inversion formula."""
    spec = _check(spec)
    f = f or (lambda k: _f_closed(spec.n, k, spec.i))
    acc = RatFunc(0)
    for j in range(1, spec.k + 1):
        acc = acc + f(j) * _inv_coeff(spec.n, spec.k, j)
    return acc


def f_from_circ(n: int, k: int, fc) -> RatFunc:
    """``f(k) = sum_p f_circ(p) * binom(n/2 - p, k - p)_{q^2}``."""
    acc = RatFunc(0)
    for p in range(1, k + 1):
        acc = acc + fc(p) * RatFunc(gauss_binomial(n // 2 - p, k - p, 2))
    return acc


def inversion_check(spec: CutSpec) -> VerificationReport:
    spec = _check(spec)
    n, i = spec.n, spec.i
    circ = {p: f_circ(CutSpec(n, p, i)) for p in range(1, spec.k + 1)}
    back = f_from_circ(n, spec.k, circ.__getitem__)
    want = _f_closed(n, spec.k, i)
    rep = VerificationReport("inversion", {"n": n, "k": spec.k, "i": i})
    ok = back == want
    rep.add({"n": n, "k": spec.k, "i": i}, PASS if ok else FAIL,
            None if ok else back, None if ok else want)
    return rep


def delta_sum(a: int) -> RatFunc:
    """``sum_s (-1)^s q^{s(s-1)} binom(a, s)_{q^2}``; should be 1 iff a = 0."""
    acc = LaurentPoly()
    for s in range(a + 1):
        t = gauss_binomial(a, s, 2).shift(s * (s - 1))
        acc = acc - t if s % 2 else acc + t
    return RatFunc(acc)


def abcd(n: int, k: int, i: int) -> tuple[RatFunc, RatFunc, RatFunc, RatFunc]:
    """The four sums ``A, B, C, D``; the claim is ``A = C`` and ``B = D``."""
    A = RatFunc(0)
    B = RatFunc(0)
    for j in range(0, k + 1):
        c = system_coefficient(n, k, j)
        e = (n - 1) * j - 1
        A = A + cyclo_ratio([e], [1], gauss_binomial(n // 2, j, 2)) * c
        B = B + RatFunc(gauss_binomial((n - 2 * i) // 2, j, 2).shift(e)) * c
    e = 2 * k * k - k - 1
    C = cyclo_ratio([e], [1], gauss_binomial(n, 2 * k))
    D = l_iso(k, i, n) * RatFunc(_mono(e))
    return A, B, C, D


def combinatorial_sides(a: int, b: int) -> tuple[RatFunc, RatFunc]:
    lhs = LaurentPoly()
    for s in range(a + 1):
        t = gauss_binomial(2 * b - 2 * s, 2 * a - 2 * s) * gauss_binomial(b, s, 2)
        t = t.shift(s * s - s)
        lhs = lhs - t if s % 2 else lhs + t
    rhs = RatFunc(_poch(2 * b - 4 * a + 2, 2, 2 * a).shift(2 * a * a - a), _poch(1, 1, 2 * a))
    return RatFunc(lhs), rhs


def fiber_count_sides(n: int, k: int, i: int) -> tuple[RatFunc, RatFunc]:
    """Both counts of the hyperplane in the non-log resolution:
    ``sum_p g(n-2k, n-2p) f_circ(p)`` against ``C + D``."""
    lhs = RatFunc(0)
    for p in range(1, k + 1):
        lhs = lhs + RatFunc(gauss_binomial(n - 2 * p, n - 2 * k)) * f_circ(CutSpec(n, p, i))
    return lhs, system_rhs(n, k, i)


def verify_abcd(n: int, k: int, i: int, combinatorial_grid: int = 0) -> VerificationReport:
    """Check ``A = C``, ``B = D`` and the fibre-count equation at
    ``(n, k, i)``; with ``combinatorial_grid = m`` also the combinatorial
    identity for ``0 <= a <= b <= m``."""
    CutSpec(n, k, i)
    rep = VerificationReport("abcd", {"n": n, "k": k, "i": i})
    A, B, C, D = abcd(n, k, i)
    pt = {"n": n, "k": k, "i": i}
    for name, lhs, rhs in (("A=C", A, C), ("B=D", B, D), ("fiber", *fiber_count_sides(n, k, i))):
        ok = lhs == rhs
        rep.add({**pt, "claim": name}, PASS if ok else FAIL, None if ok else lhs, None if ok else rhs)
    for b in range(combinatorial_grid + 1):
        for a in range(b + 1):
            lhs, rhs = combinatorial_sides(a, b)
            ok = lhs == rhs
            rep.add({"a": a, "b": b, "claim": "combinatorial"}, PASS if ok else FAIL,
                    None if ok else lhs, None if ok else rhs)
    return rep
