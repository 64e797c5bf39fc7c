"""Exact Laurent polynomials and rational functions in one variable ``q``.

Both value types are immutable.  A ``LaurentPoly`` is stored densely as a
valuation ``low`` plus a coefficient tuple whose first and last entries are
nonzero; ``terms()`` gives the sparse exponent-to-coefficient view.

A ``RatFunc`` is always kept in canonical form:

* the denominator is an ordinary polynomial with nonzero constant term and
  positive leading coefficient,
* every power of ``q`` lives in the numerator, which may therefore have
  negative exponents,
* numerator and denominator share no nonconstant factor, and the gcd of all
  their integer coefficients is 1.

Equality is then a structural comparison.
"""
from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import gcd, isqrt
from numbers import Rational
from typing import Iterable, Mapping, Optional, Sequence, Union

from . import kernels
from .errors import PoleError, ZeroDenominatorError

__all__ = [
    "LaurentPoly",
    "RatFunc",
    "Q",
    "poly_arith",
    "rat_normalize",
    "rat_arith",
    "eval_at",
    "limit_at_one",
    "substitute_power",
    "parse",
    "render",
    "poly_gcd",
]


# ---------------------------------------------------------------------------
# dense list helpers (lowest degree first, no sign of q-shift)


def _content(a: Sequence[int]) -> int:
    g = 0
    for c in a:
        g = gcd(g, c)
        if g == 1:
            break
    return g


def _horner(a: Sequence[int], x):
    acc = 0
    for c in reversed(a):
        acc = acc * x + c
    return acc


def _strip(a: list[int]) -> tuple[int, list[int]]:
    """Remove zeros at both ends; returns (shift, trimmed)."""
    i, j = 0, len(a)
    while i < j and a[i] == 0:
        i += 1
    while j > i and a[j - 1] == 0:
        j -= 1
    return i, a[i:j]


def _add_dense(alow: int, a: Sequence[int], blow: int, b: Sequence[int], sign: int = 1):
    lo = min(alow, blow)
    hi = max(alow + len(a), blow + len(b))
    out = [0] * (hi - lo)
    off = alow - lo
    for i, c in enumerate(a):
        out[off + i] = c
    off = blow - lo
    if sign == 1:
        for i, c in enumerate(b):
            out[off + i] += c
    else:
        for i, c in enumerate(b):
            out[off + i] -= c
    return lo, out


# ---------------------------------------------------------------------------
# gcd


def _interpolate(h: int, x: int) -> list[int]:
    out = []
    half = x // 2
    while h:
        r = h % x
        if r > half:
            r -= x
        out.append(r)
        h = (h - r) // x
    return out


def _primitive(a: list[int]) -> list[int]:
    c = _content(a)
    if a[-1] < 0:
        c = -c
    return a if c == 1 else [x // c for x in a]


def _prem(f: list[int], g: list[int]) -> list[int]:
    """Pseudo-remainder of ``f`` by ``g``."""
    df, dg = len(f) - 1, len(g) - 1
    r = list(f)
    lc = g[-1]
    for k in range(df - dg, -1, -1):
        top = r[k + dg]
        r = [lc * x for x in r]
        if top:
            for j in range(dg + 1):
                r[k + j] -= top * g[j]
        r.pop()
    while r and r[-1] == 0:
        r.pop()
    return r


def _gcd_prs(f: list[int], g: list[int]) -> list[int]:
    if len(f) < len(g):
        f, g = g, f
    f, g = _primitive(f), _primitive(g)
    while len(g) > 1:
        r = _prem(f, g)
        if not r:
            return g
        f, g = g, _primitive(r)
    return [1] if g else f


def _gcd_heu(f: list[int], g: list[int]) -> Optional[list[int]]:
    """Heuristic gcd of two primitive polynomials by evaluation at a large
    integer; ``None`` when the six evaluation points all fail."""
    fn = max(map(abs, f))
    gn = max(map(abs, g))
    b = 2 * min(fn, gn) + 29
    x = max(min(b, 99 * isqrt(b)), 2 * min(fn // abs(f[-1]), gn // abs(g[-1])) + 2)
    for _ in range(6):
        fx = _horner(f, x)
        gx = _horner(g, x)
        if fx and gx:
            hx = gcd(fx, gx)
            h = _primitive(_interpolate(hx, x))
            if kernels.divexact(f, h) is not None and kernels.divexact(g, h) is not None:
                return h
            cf = _interpolate(fx // hx, x)
            if cf and cf[-1]:
                q = kernels.divexact(f, cf)
                if q is not None:
                    h = _primitive(q)
                    if kernels.divexact(g, h) is not None:
                        return h
            cg = _interpolate(gx // hx, x)
            if cg and cg[-1]:
                q = kernels.divexact(g, cg)
                if q is not None:
                    h = _primitive(q)
                    if kernels.divexact(f, h) is not None:
                        return h
        x = 73794 * x * isqrt(isqrt(x)) // 27011
    return None


def poly_gcd(f: Sequence[int], g: Sequence[int]) -> list[int]:
    """Primitive gcd (positive leading coefficient) of two nonzero integer
    polynomials given as dense lists."""
    f, g = list(f), list(g)
    if len(f) == 1 or len(g) == 1:
        return [1]
    f, g = _primitive(f), _primitive(g)
    if f == g:
        return f
    h = _gcd_heu(f, g)
    if h is None:
        h = _gcd_prs(f, g)
    return h


# ---------------------------------------------------------------------------
# LaurentPoly


class LaurentPoly:
    """Immutable Laurent polynomial in ``q`` with integer coefficients."""

    __slots__ = ("low", "coeffs", "_hash")

    def __init__(self, terms: Union[Mapping[int, int], int, None] = None):
        if terms is None:
            terms = {}
        elif isinstance(terms, int):
            terms = {0: terms}
        items = [(e, c) for e, c in terms.items() if c]
        if not items:
            low, cs = 0, ()
        else:
            lo = min(e for e, _ in items)
            hi = max(e for e, _ in items)
            dense = [0] * (hi - lo + 1)
            for e, c in items:
                dense[e - lo] += int(c)
            shift, dense = _strip(dense)
            low, cs = (lo + shift, tuple(dense)) if dense else (0, ())
        object.__setattr__(self, "low", low)
        object.__setattr__(self, "coeffs", cs)
        object.__setattr__(self, "_hash", None)

    @classmethod
    def _make(cls, low: int, coeffs: Sequence[int]) -> "LaurentPoly":
        # caller guarantees both ends nonzero (or empty)
        obj = object.__new__(cls)
        object.__setattr__(obj, "low", low if coeffs else 0)
        object.__setattr__(obj, "coeffs", tuple(coeffs))
        object.__setattr__(obj, "_hash", None)
        return obj

    @classmethod
    def from_coeffs(cls, coeffs: Iterable[int], low: int = 0) -> "LaurentPoly":
        shift, cs = _strip([int(c) for c in coeffs])
        return cls._make(low + shift, cs)

    @classmethod
    def monomial(cls, exponent: int, coeff: int = 1) -> "LaurentPoly":
        return cls._make(exponent, (coeff,)) if coeff else ZERO

    def __setattr__(self, name, value):
        raise AttributeError("LaurentPoly is immutable")

    def __reduce__(self):
        return (LaurentPoly.from_coeffs, (self.coeffs, self.low))

    # -- views
    def terms(self) -> dict[int, int]:
        return {self.low + i: c for i, c in enumerate(self.coeffs) if c}

    def is_zero(self) -> bool:
        return not self.coeffs

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    @property
    def degree(self) -> int:
        if not self.coeffs:
            raise ValueError("degree of zero polynomial")
        return self.low + len(self.coeffs) - 1

    @property
    def valuation(self) -> int:
        if not self.coeffs:
            raise ValueError("valuation of zero polynomial")
        return self.low

    def is_constant(self) -> bool:
        return not self.coeffs or (self.low == 0 and len(self.coeffs) == 1)

    def is_monomial(self) -> bool:
        return len(self.coeffs) == 1

    def is_polynomial(self) -> bool:
        return not self.coeffs or self.low >= 0

    def coefficients(self) -> list[int]:
        """Dense list from ``q^0`` up; requires no negative exponents."""
        if not self.coeffs:
            return [0]
        if self.low < 0:
            raise ValueError("negative exponents present")
        return [0] * self.low + list(self.coeffs)

    def content(self) -> int:
        return _content(self.coeffs)

    # -- arithmetic
    @staticmethod
    def _coerce(other) -> Optional["LaurentPoly"]:
        if isinstance(other, LaurentPoly):
            return other
        if isinstance(other, int):
            return LaurentPoly._make(0, (other,)) if other else ZERO
        return None

    def __neg__(self):
        return LaurentPoly._make(self.low, tuple(-c for c in self.coeffs))

    def __pos__(self):
        return self

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not o.coeffs:
            return self
        if not self.coeffs:
            return o
        lo, out = _add_dense(self.low, self.coeffs, o.low, o.coeffs)
        return LaurentPoly.from_coeffs(out, lo)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not o.coeffs:
            return self
        lo, out = _add_dense(self.low, self.coeffs, o.low, o.coeffs, -1)
        return LaurentPoly.from_coeffs(out, lo)

    def __rsub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return o - self

    def __mul__(self, other):
        if isinstance(other, int):
            if not other:
                return ZERO
            return LaurentPoly._make(self.low, tuple(other * c for c in self.coeffs))
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        if not self.coeffs or not other.coeffs:
            return ZERO
        return LaurentPoly._make(self.low + other.low, kernels.mul(self.coeffs, other.coeffs))

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            if self.is_monomial() and abs(self.coeffs[0]) == 1:
                return LaurentPoly._make(self.low * n, (self.coeffs[0] ** (-n),))
            raise ValueError("negative power of a non-unit Laurent polynomial")
        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    def shift(self, e: int) -> "LaurentPoly":
        """Multiply by ``q**e``."""
        return LaurentPoly._make(self.low + e, self.coeffs) if self.coeffs else ZERO

    def substitute_power(self, m: int) -> "LaurentPoly":
        if m < 1:
            raise ValueError("substitution power must be positive")
        if m == 1 or not self.coeffs:
            return self
        out = [0] * ((len(self.coeffs) - 1) * m + 1)
        for i, c in enumerate(self.coeffs):
            out[i * m] = c
        return LaurentPoly._make(self.low * m, out)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            if isinstance(other, RatFunc):
                return other == self
            return NotImplemented
        return self.low == o.low and self.coeffs == o.coeffs

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash((self.low, self.coeffs)) if len(self.coeffs) != 1 or self.low else hash(self.coeffs[0])
            object.__setattr__(self, "_hash", h)
        return h

    def __call__(self, x):
        return eval_poly(self, x)

    def __repr__(self):
        return f"LaurentPoly({self})"

    def __str__(self):
        return render_poly(self)


ZERO = LaurentPoly._make(0, ())
ONE = LaurentPoly._make(0, (1,))
Q = LaurentPoly._make(1, (1,))


def poly_arith(a: LaurentPoly, b: LaurentPoly, op: str) -> LaurentPoly:
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    raise ValueError(f"unknown polynomial operation {op!r}")


def eval_poly(p: LaurentPoly, x) -> Fraction:
    x = Fraction(x)
    if not p.coeffs:
        return Fraction(0)
    if p.low < 0 and x == 0:
        raise PoleError("negative power of q evaluated at 0")
    return _horner(p.coeffs, x) * x ** p.low


# ---------------------------------------------------------------------------
# RatFunc


Coercible = Union["RatFunc", LaurentPoly, int, Fraction]


class RatFunc:
    """Immutable canonical fraction ``num / den`` of Laurent polynomials."""

    __slots__ = ("num", "den", "_hash")

    def __init__(self, num: Coercible = 0, den: Coercible = 1):
        r = _as_rat(num)
        if not (isinstance(den, int) and den == 1):
            r = r / _as_rat(den)
        object.__setattr__(self, "num", r.num)
        object.__setattr__(self, "den", r.den)
        object.__setattr__(self, "_hash", None)

    @classmethod
    def _raw(cls, num: LaurentPoly, den: LaurentPoly) -> "RatFunc":
        obj = object.__new__(cls)
        object.__setattr__(obj, "num", num)
        object.__setattr__(obj, "den", den)
        object.__setattr__(obj, "_hash", None)
        return obj

    def __setattr__(self, name, value):
        raise AttributeError("RatFunc is immutable")

    def __reduce__(self):
        return (RatFunc._raw, (self.num, self.den))

    @property
    def numerator(self) -> LaurentPoly:
        return self.num

    @property
    def denominator(self) -> LaurentPoly:
        return self.den

    def is_zero(self) -> bool:
        return not self.num.coeffs

    def __bool__(self):
        return bool(self.num.coeffs)

    def is_polynomial(self) -> bool:
        """True when the canonical denominator is 1 (Laurent numerators count)."""
        return self.den.coeffs == (1,)

    def as_poly(self) -> LaurentPoly:
        if not self.is_polynomial():
            raise ValueError("not a Laurent polynomial: " + str(self))
        return self.num

    # -- arithmetic
    def __neg__(self):
        return RatFunc._raw(-self.num, self.den)

    def __pos__(self):
        return self

    def __add__(self, other):
        o = _try_rat(other)
        if o is None:
            return NotImplemented
        return _add(self, o, 1)

    __radd__ = __add__

    def __sub__(self, other):
        o = _try_rat(other)
        if o is None:
            return NotImplemented
        return _add(self, o, -1)

    def __rsub__(self, other):
        o = _try_rat(other)
        if o is None:
            return NotImplemented
        return _add(o, self, -1)

    def __mul__(self, other):
        o = _try_rat(other)
        if o is None:
            return NotImplemented
        return _mul(self, o)

    __rmul__ = __mul__

    def __truediv__(self, other):
        o = _try_rat(other)
        if o is None:
            return NotImplemented
        return _mul(self, _inv(o))

    def __rtruediv__(self, other):
        o = _try_rat(other)
        if o is None:
            return NotImplemented
        return _mul(o, _inv(self))

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        base = self if n >= 0 else _inv(self)
        n = abs(n)
        # coprime parts stay coprime under powers, so no gcd is needed
        num = base.num ** n
        den = base.den ** n
        return RatFunc._raw(num, den)

    def __eq__(self, other):
        o = _try_rat(other)
        if o is None:
            return NotImplemented
        return self.num == o.num and self.den == o.den

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash(self.num) if self.den.coeffs == (1,) else hash((self.num, self.den))
            object.__setattr__(self, "_hash", h)
        return h

    def cross_equal(self, other: Coercible) -> bool:
        """Equality by cross-multiplication; agrees with ``==``."""
        o = _as_rat(other)
        return self.num * o.den == o.num * self.den

    def __call__(self, x):
        return eval_at(self, x)

    def limit_at_one(self) -> Fraction:
        return limit_at_one(self)

    def substitute_power(self, m: int) -> "RatFunc":
        return substitute_power(self, m)

    def __repr__(self):
        return f"RatFunc({render(self)!r})"

    def __str__(self):
        return render(self)

    def to_string(self, style: str = "expanded") -> str:
        return render(self, style)

    def latex(self) -> str:
        return render(self, "latex")


def _as_rat(x: Coercible) -> RatFunc:
    r = _try_rat(x)
    if r is None:
        raise TypeError(f"cannot convert {type(x).__name__} to RatFunc")
    return r


def _try_rat(x) -> Optional[RatFunc]:
    if isinstance(x, RatFunc):
        return x
    if isinstance(x, LaurentPoly):
        return RatFunc._raw(x, ONE)
    if isinstance(x, int):
        return RatFunc._raw(LaurentPoly._make(0, (x,)) if x else ZERO, ONE)
    if isinstance(x, Rational):
        x = Fraction(x)
        return rat_normalize(LaurentPoly(x.numerator), LaurentPoly(x.denominator))
    return None


def rat_normalize(num: LaurentPoly, den: LaurentPoly) -> RatFunc:
    """Reduce ``num / den`` to canonical form."""
    if not den.coeffs:
        raise ZeroDenominatorError("zero denominator")
    if not num.coeffs:
        return RatFunc._raw(ZERO, ONE)
    e = num.low - den.low
    n, d = list(num.coeffs), list(den.coeffs)
    if len(n) > 1 and len(d) > 1:
        g = poly_gcd(n, d)
        if len(g) > 1:
            n = kernels.divexact(n, g)
            d = kernels.divexact(d, g)
    c = gcd(_content(n), _content(d))
    if d[-1] < 0:
        c = -c
    if c != 1:
        n = [x // c for x in n]
        d = [x // c for x in d]
    return RatFunc._raw(LaurentPoly._make(e, n), LaurentPoly._make(0, d))


def _add(a: RatFunc, b: RatFunc, sign: int) -> RatFunc:
    if not b.num.coeffs:
        return a
    if not a.num.coeffs:
        return b if sign == 1 else -b
    if a.den.coeffs == b.den.coeffs:
        s = a.num + b.num if sign == 1 else a.num - b.num
        if a.den.coeffs == (1,):
            return RatFunc._raw(s, ONE)
        return rat_normalize(s, a.den)
    if b.den.coeffs == (1,):
        bn = b.num * a.den
        return rat_normalize(a.num + bn if sign == 1 else a.num - bn, a.den)
    if a.den.coeffs == (1,):
        an = a.num * b.den
        return rat_normalize(an + b.num if sign == 1 else an - b.num, b.den)
    # share the common part of the denominators
    g = poly_gcd(a.den.coeffs, b.den.coeffs)
    if len(g) > 1:
        ad = LaurentPoly._make(0, kernels.divexact(a.den.coeffs, g))
        bd = LaurentPoly._make(0, kernels.divexact(b.den.coeffs, g))
        num = a.num * bd + (b.num * ad) * sign
        return rat_normalize(num, ad * b.den)
    num = a.num * b.den + (b.num * a.den) * sign
    return rat_normalize(num, a.den * b.den)


def _mul(a: RatFunc, b: RatFunc) -> RatFunc:
    if not a.num.coeffs or not b.num.coeffs:
        return RatFunc._raw(ZERO, ONE)
    if a.den.coeffs == (1,) and b.den.coeffs == (1,):
        return RatFunc._raw(a.num * b.num, ONE)
    return rat_normalize(a.num * b.num, a.den * b.den)


def _inv(a: RatFunc) -> RatFunc:
    if not a.num.coeffs:
        raise ZeroDenominatorError("division by zero rational function")
    # already coprime: only move the q-power and fix signs
    n = a.num
    num = LaurentPoly._make(-n.low, a.den.coeffs)
    den = list(n.coeffs)
    if den[-1] < 0:
        den = [-x for x in den]
        num = -num
    return RatFunc._raw(num, LaurentPoly._make(0, den))


def rat_arith(a: RatFunc, b: RatFunc, op: str) -> RatFunc:
    a, b = _as_rat(a), _as_rat(b)
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    raise ValueError(f"unknown operation {op!r}")


def eval_at(f: Coercible, x) -> Fraction:
    """Exact value of ``f`` at a rational point."""
    f = _as_rat(f)
    x = Fraction(x)
    d = _horner(f.den.coeffs, x)
    if d == 0:
        raise PoleError(f"pole at q = {x}")
    return eval_poly(f.num, x) / d


_Q_MINUS_ONE = [-1, 1]


def limit_at_one(f: Coercible) -> Fraction:
    """Limit as ``q -> 1`` by exact cancellation of ``(q - 1)`` factors."""
    f = _as_rat(f)
    n = list(f.num.coeffs) or [0]
    d = list(f.den.coeffs)
    # q**low contributes 1 at q = 1, so only the dense parts matter
    while sum(d) == 0:
        if sum(n) != 0:
            raise PoleError("pole at q = 1")
        n = kernels.divexact(n, _Q_MINUS_ONE)
        d = kernels.divexact(d, _Q_MINUS_ONE)
    return Fraction(sum(n), sum(d))


def substitute_power(f: Coercible, m: int) -> RatFunc:
    """``f(q**m)``.  Coprime parts stay coprime, so no gcd is recomputed."""
    f = _as_rat(f)
    if m < 1:
        raise ValueError("substitution power must be positive")
    return RatFunc._raw(f.num.substitute_power(m), f.den.substitute_power(m))


# ---------------------------------------------------------------------------
# cyclotomic factoring (used by the factored renderer)


@lru_cache(maxsize=None)
def cyclotomic(d: int) -> tuple[int, ...]:
    """Coefficients of the ``d``-th cyclotomic polynomial."""
    p = [-1] + [0] * (d - 1) + [1]
    for e in range(1, d):
        if d % e == 0:
            p = kernels.divexact(p, list(cyclotomic(e)))
    return tuple(p)


@lru_cache(maxsize=None)
def _orders_up_to(deg: int) -> tuple[int, ...]:
    """All ``d`` with Euler totient at most ``deg``, ascending."""
    # phi(d) >= sqrt(d / 2), so d <= 2 deg^2 bounds the search
    top = 2 * deg * deg + 2
    phi = list(range(top + 1))
    for i in range(2, top + 1):
        if phi[i] == i:
            for j in range(i, top + 1, i):
                phi[j] -= phi[j] // i
    return tuple(d for d in range(1, top + 1) if phi[d] <= deg)


@lru_cache(maxsize=None)
def _mobius(n: int) -> int:
    res, p = 1, 2
    while p * p <= n:
        if n % p == 0:
            n //= p
            if n % p == 0:
                return 0
            res = -res
        p += 1
    return -res if n > 1 else res


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    i = 2
    while i * i <= n:
        if n % i == 0:
            return False
        i += 1
    return True


@lru_cache(maxsize=None)
def _root_mod(d: int) -> tuple[int, int]:
    """A prime ``p = 1 mod d`` and an element of exact order ``d`` mod p."""
    # a large prime keeps false positives of the pretest rare
    p = d * (2**20 // d + 1) + 1
    while not _is_prime(p):
        p += d
    fac = [r for r in range(2, d + 1) if d % r == 0 and _is_prime(r)]
    for g in range(1, p):
        w = pow(g, (p - 1) // d, p)
        if all(pow(w, d // r, p) != 1 for r in fac):
            return p, w
    raise AssertionError("unreachable")


def _cyclotomic_split(a: list[int]) -> tuple[dict[int, int], list[int]]:
    """Multiplicities of cyclotomic factors in ``a`` and the cofactor."""
    mult: dict[int, int] = {}
    for d in _orders_up_to(len(a) - 1):
        if len(a) == 1:
            break
        p, w = _root_mod(d)
        while len(a) > 1 and _horner(a, w) % p == 0:
            q = kernels.divexact(a, list(cyclotomic(d)))
            if q is None:
                break
            a = q
            mult[d] = mult.get(d, 0) + 1
    return mult, a


def cyclotomic_form(f: RatFunc):
    """Write ``f = c * q**e * prod (q^a - 1)**m_a * P / R``.

    Returns ``(c, e, {a: m_a}, P, R)`` with ``c`` a Fraction and ``P``, ``R``
    integer polynomials free of cyclotomic factors.
    """
    if f.is_zero():
        return Fraction(0), 0, {}, [1], [1]
    mn, pn = _cyclotomic_split(list(f.num.coeffs))
    md, pd = _cyclotomic_split(list(f.den.coeffs))
    m = {d: mn.get(d, 0) - md.get(d, 0) for d in set(mn) | set(md)}
    m = {d: v for d, v in m.items() if v}
    expo: dict[int, int] = {}
    cands = set()
    for b in m:
        cands.update(a for a in range(1, b + 1) if b % a == 0)
    for a in sorted(cands):
        v = sum(_mobius(b // a) * mb for b, mb in m.items() if b % a == 0)
        if v:
            expo[a] = v
    cn, cd = _content(pn), _content(pd)
    pn = [x // cn for x in pn]
    pd = [x // cd for x in pd]
    c = Fraction(cn, cd)
    if pn[-1] < 0:
        pn = [-x for x in pn]
        c = -c
    if pd[-1] < 0:
        pd = [-x for x in pd]
        c = -c
    return c, f.num.low, expo, pn, pd


# ---------------------------------------------------------------------------
# rendering


def _mono(c: int, e: int, first: bool) -> str:
    sign = "-" if c < 0 else ("" if first else "+")
    a = abs(c)
    if e == 0:
        body = str(a)
    else:
        qe = "q" if e == 1 else f"q^{e}"
        body = qe if a == 1 else f"{a}*{qe}"
    if first:
        return sign + body
    return f" {sign} {body}"


def render_poly(p: LaurentPoly) -> str:
    if not p.coeffs:
        return "0"
    parts = []
    for i in range(len(p.coeffs) - 1, -1, -1):
        c = p.coeffs[i]
        if c:
            parts.append(_mono(c, p.low + i, not parts))
    return "".join(parts)


def _paren(s: str) -> str:
    return f"({s})"


def _render_expanded(f: RatFunc) -> str:
    if f.is_polynomial():
        return render_poly(f.num)
    num = render_poly(f.num)
    if len(f.num.coeffs) > 1:
        num = _paren(num)
    return f"{num} / ({render_poly(f.den)})"


def _render_factored(f: RatFunc) -> str:
    if f.is_zero():
        return "0"
    c, e, expo, pn, pd = cyclotomic_form(f)
    top, bot = [], []
    if c.numerator not in (1, -1):
        top.append(str(abs(c.numerator)))
    if c.denominator != 1:
        bot.append(str(c.denominator))
    if e:
        top.append("q" if e == 1 else f"q^{e}")
    for a in sorted(expo):
        fac = "(q - 1)" if a == 1 else f"(q^{a} - 1)"
        m = expo[a]
        s = fac if abs(m) == 1 else f"{fac}^{abs(m)}"
        (top if m > 0 else bot).append(s)
    if len(pn) > 1:
        top.append(_paren(render_poly(LaurentPoly._make(0, pn))))
    if len(pd) > 1:
        bot.append(_paren(render_poly(LaurentPoly._make(0, pd))))
    head = "*".join(top) if top else "1"
    if c < 0:
        head = "-" + head
    if not bot:
        return head
    tail = bot[0] if len(bot) == 1 else _paren("*".join(bot))
    return f"{head} / {tail}"


def _latex_poly(p: LaurentPoly) -> str:
    s = render_poly(p)
    out = []
    for tok in s.replace("*", "").split(" "):
        if "^" in tok:
            base, ex = tok.split("^")
            tok = f"{base}^{{{ex}}}"
        out.append(tok)
    return " ".join(out).replace(" ", "")


def _render_latex(f: RatFunc) -> str:
    if f.is_zero():
        return "0"
    c, e, expo, pn, pd = cyclotomic_form(f)
    top, bot = [], []
    if e:
        top.append("q" if e == 1 else f"q^{{{e}}}")
    for a in sorted(expo):
        fac = "(q-1)" if a == 1 else f"(q^{{{a}}}-1)"
        m = expo[a]
        s = fac if abs(m) == 1 else f"{fac}^{{{abs(m)}}}"
        (top if m > 0 else bot).append(s)
    if len(pn) > 1:
        top.append(_paren(_latex_poly(LaurentPoly._make(0, pn))))
    if len(pd) > 1:
        bot.append(_paren(_latex_poly(LaurentPoly._make(0, pd))))
    if c.numerator not in (1, -1) or not top:
        top.insert(0, str(abs(c.numerator)))
    if c.denominator != 1:
        bot.insert(0, str(c.denominator))
    sign = "-" if c < 0 else ""
    if not bot:
        return sign + "".join(top)
    return sign + "\\frac{" + "".join(top) + "}{" + "".join(bot) + "}"


def render(f: Coercible, style: str = "expanded") -> str:
    """Text form of ``f``: ``expanded``, ``factored`` or ``latex``."""
    if isinstance(f, LaurentPoly) and style == "expanded":
        return render_poly(f)
    f = _as_rat(f)
    if style == "expanded":
        return _render_expanded(f)
    if style == "factored":
        return _render_factored(f)
    if style == "latex":
        return _render_latex(f)
    raise ValueError(f"unknown render style {style!r}")


# ---------------------------------------------------------------------------
# parser


class ParseError(ValueError):
    pass


def _tokenize(s: str) -> list[str]:
    toks = []
    i = 0
    while i < len(s):
        ch = s[i]
        if ch.isspace():
            i += 1
        elif ch.isdigit():
            j = i
            while j < len(s) and s[j].isdigit():
                j += 1
            toks.append(s[i:j])
            i = j
        elif s.startswith("**", i):
            toks.append("^")
            i += 2
        elif ch in "+-*/^()q":
            toks.append(ch)
            i += 1
        else:
            raise ParseError(f"unexpected character {ch!r} at {i}")
    return toks


class _Parser:
    def __init__(self, text: str):
        self.toks = _tokenize(text)
        self.pos = 0

    def peek(self):
        return self.toks[self.pos] if self.pos < len(self.toks) else None

    def take(self, want=None):
        tok = self.peek()
        if tok is None or (want is not None and tok != want):
            raise ParseError(f"expected {want or 'token'}, got {tok!r}")
        self.pos += 1
        return tok

    def expr(self) -> RatFunc:
        acc = self.term()
        while self.peek() in ("+", "-"):
            op = self.take()
            rhs = self.term()
            acc = acc + rhs if op == "+" else acc - rhs
        return acc

    def term(self) -> RatFunc:
        acc = self.unary()
        while self.peek() in ("*", "/"):
            op = self.take()
            rhs = self.unary()
            acc = acc * rhs if op == "*" else acc / rhs
        return acc

    def unary(self) -> RatFunc:
        if self.peek() == "-":
            self.take()
            return -self.unary()
        if self.peek() == "+":
            self.take()
            return self.unary()
        return self.power()

    def exponent(self) -> int:
        if self.peek() == "(":
            self.take()
            v = self.exponent()
            self.take(")")
            return v
        sign = 1
        while self.peek() in ("-", "+"):
            if self.take() == "-":
                sign = -sign
        tok = self.take()
        if not tok.isdigit():
            raise ParseError(f"bad exponent {tok!r}")
        return sign * int(tok)

    def power(self) -> RatFunc:
        tok = self.peek()
        if tok == "(":
            self.take()
            base = self.expr()
            self.take(")")
            if self.peek() == "^":
                self.take()
                return base ** self.exponent()
            return base
        if tok == "q":
            self.take()
            e = 1
            if self.peek() == "^":
                self.take()
                e = self.exponent()
            return RatFunc._raw(LaurentPoly._make(e, (1,)), ONE)
        if tok is not None and tok.isdigit():
            self.take()
            v = _as_rat(int(tok))
            if self.peek() == "^":
                self.take()
                v = v ** self.exponent()
            return v
        raise ParseError(f"unexpected token {tok!r}")


def parse(text: str) -> RatFunc:
    """Parse the text produced by ``render`` (either style) or any similar
    arithmetic expression in ``q``."""
    p = _Parser(text)
    if p.peek() is None:
        raise ParseError("empty expression")
    value = p.expr()
    if p.peek() is not None:
        raise ParseError(f"trailing input at token {p.peek()!r}")
    return value
