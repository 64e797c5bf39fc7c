"""Discrepancies and (modified) stringy E-functions of Pfaffian varieties
``Pf(2k, V)`` with ``dim V = n``."""
from __future__ import annotations

import enum
from dataclasses import dataclass
from functools import lru_cache

from .errors import ParameterError
from .qalgebra import RatFunc
from .qseries import cyclo_ratio, e_grassmannian, e_nondeg_skew, e_strata_pf
from .report import FAIL, PASS, VerificationReport

__all__ = [
    "PfaffianSpec",
    "DiscrepancyKind",
    "dim_pf",
    "canonical_coefficient",
    "discrepancy",
    "stringy_pf_closed",
    "stringy_pf_strata",
    "key_lemma_sides",
    "verify_key_lemma",
]


class DiscrepancyKind(str, enum.Enum):
    USUAL = "usual"
    MODIFIED = "modified"


def _kind(kind) -> DiscrepancyKind:
    try:
        return DiscrepancyKind(kind)
    except ValueError:
        raise ParameterError(f"unknown discrepancy kind {kind!r}") from None


@dataclass(frozen=True)
class PfaffianSpec:
    n: int
    k: int

    def __post_init__(self):
        if self.n < 4:
            raise ParameterError(f"n must be at least 4, got {self.n}")
        if not 1 <= self.k <= self.n // 2:
            raise ParameterError(f"need 1 <= k <= n/2, got k={self.k}, n={self.n}")

    @property
    def even(self) -> bool:
        return self.n % 2 == 0


def dim_pf(spec: PfaffianSpec) -> int:
    n, k = spec.n, spec.k
    return 2 * n * k - 2 * k * k - k - 1


def canonical_coefficient(spec: PfaffianSpec) -> int:
    """Coefficient of the hyperplane class in the canonical class."""
    return -spec.n * spec.k


def discrepancy(j: int, k: int, n: int, kind=DiscrepancyKind.USUAL) -> int:
    """Discrepancy of the ``j``-th exceptional divisor of the log resolution
    by complete skew forms."""
    kind = _kind(kind)
    if n % 2:
        raise ParameterError("discrepancies are tabulated for even n only")
    if not (n - 2 * k + 2) <= 2 * j <= n - 2:
        raise ParameterError(f"j={j} outside [(n-2k+2)/2, (n-2)/2] for n={n}, k={k}")
    if kind is DiscrepancyKind.USUAL:
        return 2 * j * j - j * (n - 2 * k) - 1
    return 2 * j * j - j * (n - 2 * k + 1) + (n - 2 * k - 2) // 2


def _closed(n: int, k: int, kind: DiscrepancyKind) -> RatFunc:
    if kind is DiscrepancyKind.USUAL:
        top = [n * k] + [n + 1 - 2 * j for j in range(1, k + 1)]
        bot = [1] + [2 * j for j in range(1, k + 1)]
    else:
        top = [(n - 1) * k] + [2 * j for j in range(k + 1, n // 2 + 1)]
        bot = [1] + [2 * j - 2 * k for j in range(k + 1, n // 2 + 1)]
    return cyclo_ratio(top, bot)


def _check_even(spec: PfaffianSpec) -> None:
    if not spec.even:
        raise ParameterError("stringy E-functions are implemented for even n")


def stringy_pf_closed(spec: PfaffianSpec, kind=DiscrepancyKind.MODIFIED) -> RatFunc:
    kind = _kind(kind)
    _check_even(spec)
    return _closed(spec.n, spec.k, kind)


@lru_cache(maxsize=None)
def _strata(n: int, k: int, kind: DiscrepancyKind) -> RatFunc:
    acc = RatFunc(0)
    for i in range(1, k + 1):
        term = e_strata_pf(i, n)
        if i < k:
            delta = discrepancy((n - 2 * i) // 2, k, n, kind)
            sub = _strata(n - 2 * i, k - i, kind)
            term = term * sub * cyclo_ratio([1], [delta + 1])
        acc = acc + term
    return acc


def stringy_pf_strata(spec: PfaffianSpec, kind=DiscrepancyKind.MODIFIED) -> RatFunc:
    """Sum over rank strata, each weighted by the stringy E-function of the
    fibre Pfaffian and the discrepancy factor of its exceptional divisor."""
    kind = _kind(kind)
    _check_even(spec)
    return _strata(spec.n, spec.k, kind)


def key_lemma_sides(n: int, k: int) -> tuple[RatFunc, RatFunc]:
    if n % 2 or not 1 <= k <= (n - 2) // 2:
        raise ParameterError(f"need even n and 1 <= k <= (n-2)/2, got n={n}, k={k}")
    lhs = RatFunc(0)
    for i in range(1, n // 2 + 1):
        js = range(k - i + 1, (n - 2 * i) // 2 + 1)
        prod = cyclo_ratio([2 * j for j in js], [2 * j - 2 * k + 2 * i for j in js])
        if prod:
            lhs = lhs + e_nondeg_skew(i) * e_grassmannian(n - 2 * i, n) * prod
    rhs = _closed(n, k, DiscrepancyKind.MODIFIED)
    return lhs, rhs


def verify_key_lemma(n: int, k: int) -> VerificationReport:
    lhs, rhs = key_lemma_sides(n, k)
    rep = VerificationReport("key-lemma", {"n": n, "k": k})
    ok = lhs == rhs
    rep.add({"n": n, "k": k}, PASS if ok else FAIL, None if ok else lhs, None if ok else rhs)
    return rep
