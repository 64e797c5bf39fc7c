"""Pure-Python implementations of the dense integer polynomial kernels.

Polynomials are lists of Python ints, lowest degree first.  Every function
here has a twin in ``_ckernels.pyx``; ``kernels.py`` picks one at import.
"""
from __future__ import annotations

from typing import Optional, Sequence

# Below this many coefficient products, schoolbook beats packing.
_KRONECKER_CUTOFF = 2500


def _schoolbook(a: Sequence[int], b: Sequence[int]) -> list[int]:
    out = [0] * (len(a) + len(b) - 1)
    for i, x in enumerate(a):
        if x:
            for j, y in enumerate(b):
                out[i + j] += x * y
    return out


def _pack(a: Sequence[int], bits: int) -> int:
    n = 0
    for c in reversed(a):
        n = (n << bits) + c
    return n


def _unpack(n: int, bits: int, length: int) -> list[int]:
    mask = (1 << bits) - 1
    half = 1 << (bits - 1)
    out = []
    for _ in range(length):
        d = n & mask
        if d >= half:
            d -= 1 << bits
        out.append(d)
        n = (n - d) >> bits
    return out


def mul(a: Sequence[int], b: Sequence[int]) -> list[int]:
    """Product of two dense coefficient lists (both non-empty)."""
    if len(a) * len(b) <= _KRONECKER_CUTOFF:
        return _schoolbook(a, b)
    # Kronecker substitution: evaluate at 2**bits, multiply, read digits back.
    bound = max(map(abs, a)) * max(map(abs, b)) * min(len(a), len(b))
    bits = bound.bit_length() + 2
    return _unpack(_pack(a, bits) * _pack(b, bits), bits, len(a) + len(b) - 1)


def divexact(a: Sequence[int], b: Sequence[int]) -> Optional[list[int]]:
    """Quotient ``a / b`` if ``b`` divides ``a`` in Z[q], else ``None``.

    ``b`` must have a nonzero leading coefficient.
    """
    la, lb = len(a), len(b)
    if la < lb:
        return [0] if not any(a) else None
    rem = list(a)
    lead = b[-1]
    quo = [0] * (la - lb + 1)
    for k in range(la - lb, -1, -1):
        top = rem[k + lb - 1]
        if top:
            c, r = divmod(top, lead)
            if r:
                return None
            quo[k] = c
            for j in range(lb):
                rem[k + j] -= c * b[j]
    if any(rem[: lb - 1]):
        return None
    return quo


class IntPoly:
    """Mutable dense Laurent polynomial used as an accumulator.

    ``low`` is the exponent of ``coeffs[0]``.  Arithmetic is exact; the
    compiled twin raises ``OverflowError`` instead of growing past int64.
    """

    __slots__ = ("low", "coeffs")

    def __init__(self, coeffs: Sequence[int] = (1,), low: int = 0):
        self.coeffs = list(coeffs)
        self.low = low

    def copy(self) -> "IntPoly":
        return IntPoly(self.coeffs, self.low)

    def shift(self, e: int) -> None:
        self.low += e

    def scale(self, c: int) -> None:
        self.coeffs = [c * x for x in self.coeffs]

    def mul_binomial(self, a: int, b: int, e: int) -> None:
        """Multiply in place by ``a + b*q**e`` with ``e >= 0``."""
        cs = self.coeffs
        if e == 0:
            self.coeffs = [(a + b) * x for x in cs]
            return
        n = len(cs)
        out = [a * x for x in cs] + [0] * e
        for i in range(n):
            out[i + e] += b * cs[i]
        self.coeffs = out

    def iadd(self, other: "IntPoly") -> None:
        lo = min(self.low, other.low)
        hi = max(self.low + len(self.coeffs), other.low + len(other.coeffs))
        out = [0] * (hi - lo)
        off = self.low - lo
        for i, x in enumerate(self.coeffs):
            out[off + i] = x
        off = other.low - lo
        for i, x in enumerate(other.coeffs):
            out[off + i] += x
        self.coeffs = out
        self.low = lo

    def terms(self) -> tuple[int, list[int]]:
        """``(low, coeffs)`` with zero ends trimmed; ``(0, [])`` for zero."""
        cs = self.coeffs
        i, j = 0, len(cs)
        while i < j and cs[i] == 0:
            i += 1
        while j > i and cs[j - 1] == 0:
            j -= 1
        if i == j:
            return 0, []
        return self.low + i, cs[i:j]

    def equals(self, other: "IntPoly") -> bool:
        return self.terms() == other.terms()
