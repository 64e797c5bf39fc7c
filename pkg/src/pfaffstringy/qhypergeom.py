"""Terminating basic hypergeometric series with q-monomial parameters.

Every parameter is ``c * q^e`` with ``c`` rational, so each Pochhammer
factor ``1 - c q^e`` is a binomial with integer coefficients once the
denominator of ``c`` is cleared.  Sums are kept as a dense numerator over
a multiset of such binomials (``Factored``); two sums are compared by
bringing both to the least common multiset, which never needs a gcd.

Two evaluators are provided.  ``path="ratio"`` nests the consecutive-term
ratio from the innermost term outwards.  ``path="terms"`` builds each term
from Pochhammer prefix products and the closed-form sign and power factor,
then accumulates forwards.
"""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import gcd
from typing import Iterable, Optional, Sequence

from . import _pykernels, kernels
from .errors import SeriesSpecError
from .qalgebra import LaurentPoly, RatFunc, rat_normalize
from .report import FAIL, PASS, SKIP, VerificationReport, grid_points, run_grid

__all__ = [
    "PhiParam",
    "PhiSeriesSpec",
    "Factored",
    "eval_phi",
    "eval_phi_factored",
    "identity_sides",
    "check_point",
    "verify_identity",
    "DEFAULT_GRIDS",
]


@dataclass(frozen=True)
class PhiParam:
    """The value ``coefficient * q^exponent``."""

    coefficient: Fraction = 1
    exponent: int = 0

    def __post_init__(self):
        c = self.coefficient
        if type(c) is not int:
            c = Fraction(c)
            if c.denominator == 1:
                c = c.numerator
            object.__setattr__(self, "coefficient", c)
        if c == 0:
            raise SeriesSpecError("parameter coefficient must be nonzero")

    def __mul__(self, other: "PhiParam") -> "PhiParam":
        return PhiParam(self.coefficient * other.coefficient, self.exponent + other.exponent)

    def __truediv__(self, other: "PhiParam") -> "PhiParam":
        a, b = self.coefficient, other.coefficient
        c = a // b if type(a) is int and type(b) is int and a % b == 0 else Fraction(a, 1) / b
        return PhiParam(c, self.exponent - other.exponent)

    def __neg__(self):
        return PhiParam(-self.coefficient, self.exponent)

    def __pow__(self, n: int):
        return PhiParam(self.coefficient ** n, self.exponent * n)

    def is_unit_power(self) -> bool:
        return self.coefficient == 1

    def __str__(self):
        c = self.coefficient
        mono = "1" if self.exponent == 0 else "q" if self.exponent == 1 else f"q^{self.exponent}"
        if c == 1:
            return mono
        if c == -1:
            return "-" + mono
        return f"{c}*{mono}"


def qp(e: int, c=1) -> PhiParam:
    return PhiParam(c, e)


def _kills(p: PhiParam, m: int) -> Optional[int]:
    """``s >= 0`` with ``p = q^(-m s)``, if any."""
    if p.coefficient == 1 and p.exponent <= 0 and p.exponent % m == 0:
        return -p.exponent // m
    return None


@dataclass(frozen=True)
class PhiSeriesSpec:
    upper: tuple
    lower: tuple
    base_power: int = 1
    argument: PhiParam = field(default_factory=PhiParam)
    termination: int = 0

    def __post_init__(self):
        object.__setattr__(self, "upper", tuple(self.upper))
        object.__setattr__(self, "lower", tuple(self.lower))
        m = self.base_power
        if m < 1:
            raise SeriesSpecError("base power must be positive")
        witnesses = [s for s in (_kills(a, m) for a in self.upper) if s is not None]
        if not witnesses:
            raise SeriesSpecError("series does not terminate: no upper parameter is q^(-m N)")
        n = self.termination
        if n not in witnesses:
            raise SeriesSpecError(f"no upper parameter equals q^(-{m}*{n})")
        bad = self.premature_pole()
        if bad is not None:
            raise SeriesSpecError(f"lower factor vanishes at t={bad} before termination")

    def premature_pole(self) -> Optional[int]:
        m, n = self.base_power, self.termination
        for b in self.lower:
            s = _kills(b, m)
            if s is not None and s < n:
                return s
        return None

    @property
    def r(self) -> int:
        return len(self.upper)

    @property
    def s(self) -> int:
        return len(self.lower)

    @property
    def correction(self) -> int:
        """Exponent ``1 + s - r`` of the ``(-1)^t q^(m t(t-1)/2)`` factor."""
        return 1 + self.s - self.r


def try_spec(upper, lower, m, z, n) -> Optional[PhiSeriesSpec]:
    try:
        return PhiSeriesSpec(upper, lower, m, z, n)
    except SeriesSpecError:
        return None


# ---------------------------------------------------------------------------
# binomial factors


def _reduce(p: int, r: int) -> tuple[int, int]:
    if r < 0:
        p, r = -p, -r
    g = gcd(p, r)
    return (p // g, r // g) if g > 1 else (p, r)


@lru_cache(maxsize=65536)
def _factor(coef, e: int):
    """``1 - coef*q^e`` as ``(p, r, shift, key)`` meaning
    ``p/r * q^shift * (a + b q^d)`` with ``key = (a, b, d)``, ``a > 0``,
    ``d > 0`` and ``gcd(a, b) = 1``; ``key`` is None for a constant."""
    u, v = coef.numerator, coef.denominator
    if e == 0:
        p, r = _reduce(v - u, v)
        return p, r, 0, None
    p = 1
    if e > 0:
        a, b, d, shift = v, -u, e, 0
    else:
        a, b, d, shift = -u, v, -e, e
    if a < 0:
        a, b, p = -a, -b, -1
    g = gcd(a, b)
    if g != 1:
        a, b, p = a // g, b // g, p * g
    p, r = _reduce(p, v)
    return p, r, shift, (a, b, d)


class _Block:
    """A product ``p/r * q^shift * prod(a + b q^d for keys)``."""

    __slots__ = ("p", "r", "shift", "keys")

    def __init__(self):
        self.p = self.r = 1
        self.shift = 0
        self.keys: list = []

    def factor(self, coef, e: int) -> "_Block":
        p, r, sh, key = _factor(coef, e)
        self.p *= p
        if r != 1:
            self.r *= r
        self.shift += sh
        if key is not None:
            self.keys.append(key)
        return self


class Factored:
    """``num / (scalar * prod keys)``: ``num`` an integer Laurent IntPoly,
    ``keys`` a multiset of binomials, ``scalar`` a positive integer."""

    __slots__ = ("num", "keys", "scalar")

    def __init__(self, num, keys: Counter, scalar: int = 1):
        self.num = num
        self.keys = keys
        self.scalar = scalar

    @classmethod
    def from_blocks(cls, top: _Block, bottom: _Block, ip) -> "Factored":
        if bottom.p == 0:
            raise ZeroDivisionError("pole in a Pochhammer quotient")
        num = ip([1])
        for key in top.keys:
            num.mul_binomial(*key)
        num.shift(top.shift - bottom.shift)
        cp, cr = _reduce(top.p * bottom.r, top.r * bottom.p)
        num.scale(cp)
        return cls(num, Counter(bottom.keys), cr)

    def mul(self, other: "Factored", ip) -> "Factored":
        lo, cs = self.num.terms()
        olo, ocs = other.num.terms()
        if not cs or not ocs:
            return Factored(ip([0]), Counter(), 1)
        return Factored(ip(kernels.mul(cs, ocs), lo + olo),
                        self.keys + other.keys, self.scalar * other.scalar)

    def is_zero(self) -> bool:
        return not self.num.terms()[1]

    def to_ratfunc(self) -> RatFunc:
        lo, cs = self.num.terms()
        if not cs:
            return RatFunc(0)
        den = [self.scalar]
        for (a, b, d), mult in self.keys.items():
            binom = [a] + [0] * (d - 1) + [b]
            for _ in range(mult):
                den = kernels.mul(den, binom)
        return rat_normalize(LaurentPoly.from_coeffs(cs, lo), LaurentPoly.from_coeffs(den))


def factored_equal(x: Factored, y: Factored) -> bool:
    """Exact equality through the least common multiset of denominators."""
    xn, yn = x.num.copy(), y.num.copy()
    for key, m in y.keys.items():
        for _ in range(m - x.keys.get(key, 0)):
            xn.mul_binomial(*key)
    for key, m in x.keys.items():
        for _ in range(m - y.keys.get(key, 0)):
            yn.mul_binomial(*key)
    if y.scalar != 1:
        xn.scale(y.scalar)
    if x.scalar != 1:
        yn.scale(x.scalar)
    return xn.equals(yn)


# ---------------------------------------------------------------------------
# the two evaluators


def _step(spec: PhiSeriesSpec, u: int):
    """Upper and lower blocks of ``c_{u+1}/c_u`` without the sign, power and
    argument factor."""
    m = spec.base_power
    up, lo = _Block(), _Block()
    for a in spec.upper:
        up.factor(a.coefficient, a.exponent + m * u)
    lo.factor(1, m * (u + 1))
    for b in spec.lower:
        lo.factor(b.coefficient, b.exponent + m * u)
    return up, lo


def _eval_ratio(spec: PhiSeriesSpec, ip) -> Factored:
    # S_u = 1 + R_u S_{u+1} from the innermost term outwards
    n, m, w = spec.termination, spec.base_power, spec.correction
    z = spec.argument
    sign = -1 if w % 2 else 1
    zp, zr = z.coefficient.numerator, z.coefficient.denominator
    num, den = ip([1]), ip([1])
    keys: Counter = Counter()
    dscalar = 1
    for u in range(n - 1, -1, -1):
        up, lo = _step(spec, u)
        rp, rr = _reduce(up.p * lo.r * sign * zp, up.r * lo.p * zr)
        if rp == 0:
            num, den, keys, dscalar = ip([1]), ip([1]), Counter(), 1
            continue
        for key in up.keys:
            num.mul_binomial(*key)
        num.shift(up.shift - lo.shift + m * u * w + z.exponent)
        if rp != 1:
            num.scale(rp)
        for key in lo.keys:
            den.mul_binomial(*key)
        keys.update(lo.keys)
        if rr != 1:
            den.scale(rr)
            dscalar *= rr
        num.iadd(den)
    return Factored(num, keys, dscalar)


def _eval_terms(spec: PhiSeriesSpec, ip) -> Factored:
    # sum_t c_t with c_t from Pochhammer prefix products and the closed
    # form (-1)^{tw} q^{m w t(t-1)/2} z^t, accumulated forwards over the
    # growing common denominator
    n, m, w = spec.termination, spec.base_power, spec.correction
    z = spec.argument
    prefix = ip([1])
    pp, pr, pshift = 1, 1, 0
    zp, zr = z.coefficient.numerator, z.coefficient.denominator
    acc = ip([1])
    keys: Counter = Counter()
    dscalar = 1
    for t in range(1, n + 1):
        up, lo = _step(spec, t - 1)
        for key in up.keys:
            prefix.mul_binomial(*key)
        pp, pr = _reduce(pp * up.p * lo.r, pr * up.r * lo.p)
        pshift += up.shift - lo.shift
        cp, cr = _reduce(pp * (-1) ** ((t * w) % 2) * zp ** t, pr * zr ** t)
        if cp == 0:
            break
        for key in lo.keys:
            acc.mul_binomial(*key)
        keys.update(lo.keys)
        if cr != 1:
            acc.scale(cr)
        term = prefix.copy()
        term.shift(pshift + m * w * t * (t - 1) // 2 + t * z.exponent)
        term.scale(cp * dscalar)
        dscalar *= cr
        acc.iadd(term)
    return Factored(acc, keys, dscalar)


_PATHS = {"ratio": _eval_ratio, "terms": _eval_terms}


def eval_phi_factored(spec: PhiSeriesSpec, path: str = "ratio", ip=None) -> Factored:
    try:
        ev = _PATHS[path]
    except KeyError:
        raise ValueError(f"unknown evaluation path {path!r}") from None
    try:
        return ev(spec, ip or kernels.IntPoly)
    except OverflowError:
        return ev(spec, _pykernels.IntPoly)


def eval_phi(spec: PhiSeriesSpec, path: str = "ratio") -> RatFunc:
    """The terminating sum as a canonical rational function."""
    return eval_phi_factored(spec, path).to_ratfunc()


# ---------------------------------------------------------------------------
# the four transformation identities


def _poch_block(x: PhiParam, n: int, m: int = 1) -> _Block:
    b = _Block()
    for u in range(n):
        b.factor(x.coefficient, x.exponent + m * u)
    return b


class _Sides:
    """``lhs`` series against ``prefactor * rhs`` series (or the bare
    prefactor when ``rhs`` is None)."""

    def __init__(self, lhs, pre_top, pre_bottom, rhs):
        self.lhs, self.pre_top, self.pre_bottom, self.rhs = lhs, pre_top, pre_bottom, rhs


def _sides(identity: int, p: dict):
    n = p["n"]
    qn = qp(-n)
    if identity in (1, 2):
        b, c = qp(p["b"]), qp(p["c"])
        z = c * qp(n) / b if identity == 1 else qp(1)
        lhs = try_spec([qn, b], [c], 1, z, n)
        top = _poch_block(c / b, n)
        if identity == 2:
            top.shift += p["b"] * n
        return lhs, top, _poch_block(c, n), None
    if identity == 3:
        b, c, d, e = qp(p["b"]), qp(p["c"]), qp(p["d"]), qp(p["e"])
        lhs = try_spec([qn, b, c], [d, e], 1, d * e * qp(n) / (b * c), n)
        rhs = try_spec([qn, c, d / b], [d, c * qp(1 - n) / e], 1, qp(1), n)
        return lhs, _poch_block(e / c, n), _poch_block(e, n), rhs
    if identity == 4:
        a, b, d = qp(p["a"]), qp(p["b"]), qp(p["d"])
        q1 = qp(1)
        lhs = try_spec([qn, qp(1 - n), a, a * q1], [q1 * b ** 2, d, d * q1], 2, qp(2), n // 2)
        rhs = try_spec([qn, a, b, -b], [b ** 2, a * qp(1 - n) / d], 1, -q1 / d, n)
        top = _poch_block(d / a, n)
        top.shift += p["a"] * n
        return lhs, top, _poch_block(d, n), rhs
    raise ValueError(f"unknown identity {identity!r}")


def identity_sides(identity: int, point: dict) -> Optional[tuple[RatFunc, RatFunc]]:
    """Both sides as rational functions, or None where undefined."""
    lhs, top, bottom, rhs = _sides(identity, point)
    if lhs is None or bottom.p == 0 or (identity > 2 and rhs is None):
        return None
    right = RatFunc(Factored.from_blocks(top, bottom, _pykernels.IntPoly).to_ratfunc())
    if rhs is not None:
        right = right * eval_phi(rhs)
    return eval_phi(lhs), right


def _check(identity: int, point: dict, ip):
    lhs, top, bottom, rhs = _sides(identity, point)
    if lhs is None or bottom.p == 0 or (identity > 2 and rhs is None):
        return SKIP, None, None
    la = _PATHS["ratio"](lhs, ip)
    lb = _PATHS["terms"](lhs, ip)
    pre = Factored.from_blocks(top, bottom, ip)
    right = pre
    ok = factored_equal(la, lb)
    if rhs is not None:
        ra = _PATHS["ratio"](rhs, ip)
        ok = ok and factored_equal(ra, _PATHS["terms"](rhs, ip))
        right = pre.mul(ra, ip)
    ok = ok and factored_equal(la, right)
    if ok:
        return PASS, None, None
    return FAIL, la.to_ratfunc(), right.to_ratfunc()


def check_point(identity: int, point: dict):
    """``(status, lhs, rhs)`` at one specialization; both evaluation paths
    must agree with each other and across the identity."""
    try:
        return _check(identity, point, kernels.IntPoly)
    except OverflowError:
        return _check(identity, point, _pykernels.IntPoly)


_E = range(-4, 9)
_N = range(0, 9)
DEFAULT_GRIDS = {
    1: {"n": _N, "b": _E, "c": _E},
    2: {"n": _N, "b": _E, "c": _E},
    3: {"n": _N, "b": _E, "c": _E, "d": _E, "e": _E},
    4: {"n": _N, "a": _E, "b": _E, "d": _E},
}


class _Checker:
    # picklable for the process pool
    def __init__(self, identity: int):
        self.identity = identity

    def __call__(self, point):
        status, lhs, rhs = check_point(self.identity, point)
        return status, None if lhs is None else str(lhs), None if rhs is None else str(rhs)


def verify_identity(identity: int, grid: Optional[dict] = None, jobs: int = 1) -> VerificationReport:
    """Check one identity on every point of ``grid``; keys are ``n`` and the
    exponents of the free parameters."""
    if identity not in DEFAULT_GRIDS:
        raise ValueError(f"unknown identity {identity!r}")
    grid = dict(DEFAULT_GRIDS[identity] if grid is None else grid)
    missing = set(DEFAULT_GRIDS[identity]) - set(grid)
    if missing:
        raise ValueError(f"grid lacks {sorted(missing)}")
    return run_grid(f"phi-{identity}", grid_points(grid), _Checker(identity), grid, jobs)


def cancel_pairs(upper: Sequence[PhiParam], lower: Sequence[PhiParam]):
    """Drop parameters occurring both above and below (with multiplicity)."""
    lo = list(lower)
    up = []
    for a in upper:
        if a in lo:
            lo.remove(a)
        else:
            up.append(a)
    return up, lo


def check_specialization(k: int, i: int, n: int) -> tuple:
    """The fourth identity at ``a = q^(-2i)``, ``b = q^(-i)``, ``d = q^(-n)``
    and termination ``2k``, after cancelling coinciding parameter pairs on
    each side (the coincidence ``a = b^2`` is what makes both sides shrink).
    Returns ``(status, lhs, rhs)``."""
    a, b, d, q1 = qp(-2 * i), qp(-i), qp(-n), qp(1)
    m = 2 * k
    lu, ll = cancel_pairs([qp(-m), qp(1 - m), a, a * q1], [q1 * b ** 2, d, d * q1])
    ru, rl = cancel_pairs([qp(-m), a, b, -b], [b ** 2, a * qp(1 - m) / d])
    lhs = try_spec(lu, ll, 2, qp(2), k)
    rhs = try_spec(ru, rl, 1, -q1 / d, m)
    bottom = _poch_block(d, m)
    if lhs is None or rhs is None or bottom.p == 0:
        return SKIP, None, None
    top = _poch_block(d / a, m)
    top.shift += -2 * i * m
    ip = _pykernels.IntPoly
    left = eval_phi_factored(lhs, "ratio", ip)
    right = Factored.from_blocks(top, bottom, ip).mul(eval_phi_factored(rhs, "terms", ip), ip)
    if factored_equal(left, right):
        return PASS, None, None
    return FAIL, left.to_ratfunc(), right.to_ratfunc()
