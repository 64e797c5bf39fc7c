"""Pfaffian double mirrors ``X_W``, ``Y_W``: the stringy relation between
them, Euler-characteristic shadows, types, and block counts of the
predicted Lefschetz decompositions."""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb

from .errors import ParameterError
from .pfaffian import PfaffianSpec, dim_pf
from .qalgebra import LaurentPoly, RatFunc, limit_at_one
from .qseries import cyclo_ratio, gauss_binomial, qminus1
from .report import FAIL, PASS, VerificationReport

__all__ = [
    "SectionSpec",
    "BlockGroup",
    "SodPrediction",
    "relation_rhs",
    "relation_check",
    "rewritten_rhs",
    "rewritten_identity_check",
    "euler_gap",
    "euler_gap_paths",
    "classify_types",
    "section_dims",
    "sod_predict",
    "case_consistency",
    "K3_E",
    "CUBIC4_E",
]

FANO, CY, GENERAL = "Fano", "CY", "general type"

# Hodge diamonds collapsed at q = uv
K3_E = RatFunc(LaurentPoly({0: 1, 1: 22, 2: 1}))
CUBIC4_E = RatFunc(LaurentPoly({0: 1, 1: 1, 2: 23, 3: 1, 4: 1}))


@dataclass(frozen=True)
class SectionSpec:
    n: int
    k: int
    l: int

    def __post_init__(self):
        if self.n < 4:
            raise ParameterError(f"n must be at least 4, got {self.n}")
        if not 1 <= self.k < self.n // 2:
            raise ParameterError(f"need 1 <= k < floor(n/2), got k={self.k}, n={self.n}")
        if not 0 <= self.l <= self.top:
            raise ParameterError(f"need 0 <= l <= n(n-1)/2, got l={self.l}")

    @property
    def even(self) -> bool:
        return self.n % 2 == 0

    @property
    def top(self) -> int:
        return self.n * (self.n - 1) // 2

    @property
    def half(self) -> int:
        return self.n // 2

    @property
    def twist_exponent(self) -> int:
        """Exponent multiplying ``E(Y)`` in the relation."""
        return (self.n - 1) * self.k if self.even else self.n * self.k

    def swap(self) -> "SectionSpec":
        """Exchange the roles of ``X_W`` and ``Y_W``."""
        return SectionSpec(self.n, self.half - self.k, self.top - self.l)


def _binom_q2(spec: SectionSpec) -> LaurentPoly:
    return gauss_binomial(spec.half, spec.k, 2)


def relation_rhs(spec: SectionSpec) -> RatFunc:
    """Right side of ``q^t E(Y) - q^l E(X) = (q^l - q^t)/(q - 1) * binom``."""
    t, l = spec.twist_exponent, spec.l
    if l == t:
        return RatFunc(0)
    lo = min(l, t)
    diff = qminus1(abs(l - t)).shift(lo)
    if l < t:
        diff = -diff
    # (q^a - q^b)/(q - 1) is a polynomial, so divide exactly
    return cyclo_ratio([], [1], diff * _binom_q2(spec))


def relation_check(EX, EY, spec: SectionSpec) -> bool:
    EX, EY = RatFunc(EX), RatFunc(EY)
    t = LaurentPoly.monomial(spec.twist_exponent)
    lhs = EY * t - EX * LaurentPoly.monomial(spec.l)
    return lhs == relation_rhs(spec)


def rewritten_rhs(spec: SectionSpec) -> RatFunc:
    """The other form of ``q^l E(X) - q^t E(Y)`` for even ``n``, with the
    non-polynomial factor ``1/(q^(n/2 - k) + 1)``."""
    if not spec.even:
        raise ParameterError("the rewritten form is for even n")
    n, k, l = spec.n, spec.k, spec.l
    e = n * k - n // 2
    first = RatFunc(LaurentPoly.monomial(e) - LaurentPoly.monomial(l)) / RatFunc(qminus1(1))
    first = first * RatFunc(_binom_q2(spec))
    plus = LaurentPoly({n // 2 - k: 1, 0: 1})
    second = RatFunc(qminus1(n).shift(e), qminus1(1) * plus)
    second = second * RatFunc(gauss_binomial(n // 2 - 1, k, 2))
    return first + second


def rewritten_identity_check(spec: SectionSpec) -> VerificationReport:
    rep = VerificationReport("rewrite", {"n": spec.n, "k": spec.k, "l": spec.l})
    lhs, rhs = rewritten_rhs(spec), -relation_rhs(spec)
    ok = lhs == rhs
    rep.add({"n": spec.n, "k": spec.k, "l": spec.l}, PASS if ok else FAIL,
            None if ok else lhs, None if ok else rhs)
    return rep


def euler_gap_paths(spec: SectionSpec) -> tuple[int, Fraction]:
    """``chi(X) - chi(Y)``: the closed integer and the ``q -> 1`` limit of
    the relation."""
    n, k, l = spec.n, spec.k, spec.l
    if spec.even:
        h = n // 2
        closed = (n * k - l) * comb(h, k) - h * comb(h - 1, h - k)
    else:
        closed = (n * k - l) * comb((n - 1) // 2, k)
    return closed, limit_at_one(-relation_rhs(spec))


def euler_gap(spec: SectionSpec) -> int:
    closed, limit = euler_gap_paths(spec)
    if closed != limit:
        raise AssertionError(f"Euler gap paths disagree at {spec}: {closed} vs {limit}")
    return closed


def _sign_type(c: int) -> str:
    # c is the coefficient of the hyperplane class in the canonical class
    return FANO if c < 0 else CY if c == 0 else GENERAL


def classify_types(spec: SectionSpec) -> dict[str, str]:
    n, k, l = spec.n, spec.k, spec.l
    x = _sign_type(l - n * k)
    y = _sign_type(n * k - n // 2 - l if spec.even else n * k - l)
    return {"X": x, "Y": y}


def section_dims(spec: SectionSpec) -> dict[str, int]:
    """Expected dimensions by transverse intersection counting."""
    n, k, l = spec.n, spec.k, spec.l
    ambient = spec.top - 1
    dual_k = spec.half - k
    return {
        "X": dim_pf(PfaffianSpec(n, k)) - l,
        "Y": (l - 1) - (ambient - dim_pf(PfaffianSpec(n, dual_k))),
    }


@dataclass(frozen=True)
class BlockGroup:
    count: int
    size: int
    first_twist: int
    last_twist: int
    first_index: int
    last_index: int

    def to_dict(self) -> dict:
        return {"count": self.count, "size": self.size,
                "first_twist": self.first_twist, "last_twist": self.last_twist}


@dataclass(frozen=True)
class SodPrediction:
    side: str
    block_groups: list = field(default_factory=list)
    residual: str = "C_W"

    @property
    def total_blocks(self) -> int:
        return sum(g.count for g in self.block_groups)

    @property
    def weight(self) -> int:
        """Sum of block sizes: the Euler characteristic outside ``C_W``."""
        return sum(g.count * g.size for g in self.block_groups)

    def to_dict(self) -> dict:
        return {"side": self.side, "blocks": [g.to_dict() for g in self.block_groups],
                "residual": self.residual}


def _groups(indices, size_of, twist_of) -> list[BlockGroup]:
    out: list[BlockGroup] = []
    run: list[int] = []
    for j in indices:
        if run and size_of(j) != size_of(run[0]):
            out.append(BlockGroup(len(run), size_of(run[0]), twist_of(run[0]),
                                  twist_of(run[-1]), run[0], run[-1]))
            run = []
        run.append(j)
    if run:
        out.append(BlockGroup(len(run), size_of(run[0]), twist_of(run[0]),
                              twist_of(run[-1]), run[0], run[-1]))
    return out


def sod_predict(spec: SectionSpec, side: str) -> SodPrediction:
    """Ambient blocks surviving in the decomposition of one side.

    X keeps ``A_l(1), ..., A_{nk-1}(nk-l)``; Y keeps
    ``B_{top}(..), ..., B_{n(n-1)/2-l}(-1)``.  Block sizes follow the two
    rectangles for even ``n`` and the single rectangle for odd ``n``.
    """
    n, k, l = spec.n, spec.k, spec.l
    h = n // 2
    side = side.upper()
    if side == "X":
        indices = range(l, n * k)
        twist = lambda j: j - l + 1
        if spec.even:
            size = lambda j: comb(h, k) if j < n * k - h else comb(h - 1, k)
        else:
            size = lambda j: comb((n - 1) // 2, k)
    elif side == "Y":
        start = spec.top - l
        twist = lambda j: -(j - start + 1)
        if spec.even:
            indices = range(start, n * n // 2 - n * k)
            size = lambda j: comb(h, h - k) if j < spec.top - n * k else comb(h - 1, h - k)
        else:
            indices = range(start, spec.top - n * k)
            size = lambda j: comb((n - 1) // 2, k)
    else:
        raise ParameterError(f"side must be X or Y, got {side!r}")
    # listed in the order they appear in the decomposition
    order = indices if side == "X" else reversed(indices)
    return SodPrediction(side, _groups(order, size, twist))


def case_consistency(spec: SectionSpec) -> VerificationReport:
    """Signed block weight ``X - Y`` against the Euler gap."""
    x = sod_predict(spec, "X")
    y = sod_predict(spec, "Y")
    got = x.weight - y.weight
    want = euler_gap(spec)
    rep = VerificationReport("cases", {"n": spec.n, "k": spec.k, "l": spec.l})
    pt = {"n": spec.n, "k": spec.k, "l": spec.l}
    ok = got == want
    # X blocks need l < nk; Y blocks need the dual condition
    ok = ok and x.total_blocks == max(0, spec.n * spec.k - spec.l)
    rep.add(pt, PASS if ok else FAIL, None if ok else got, None if ok else want)
    return rep
