"""
SKEWRANK - Truncated Skew Laurent Series

Elements of A[[y, 1/y; alpha]] stored as (start, coeffs): when nonzero,
start is the valuation v and coeffs[0] = a_v != 0, so
f = sum_s coeffs[s] y^(v+s) + O(y^(v + relprec)). A value that vanishes
to its precision keeps only the absolute precision in start.
"""

import logging
from typing import Optional

import numpy as np

from algebra import Element
from errors import ContextMismatch, NotSemiprime, SpecError, VerificationFailed, ZeroToPrecision
from series import SkewContext, SkewSeries, find_nonzero_sandwich, invert_unit

logger = logging.getLogger("skewrank.laurent")


class SkewLaurent:
    """Laurent series in normalized form"""

    __slots__ = ("context", "start", "coeffs")
    is_laurent = True

    def __init__(self, context: SkewContext, start: int, coeffs):
        coeffs = np.asarray(coeffs, dtype=np.int64).reshape(-1, context.dim) % context.p
        nonzero = np.nonzero(coeffs.any(axis=1))[0]
        if nonzero.size == 0:
            start += coeffs.shape[0]
            coeffs = coeffs[:0]
        else:
            start += int(nonzero[0])
            coeffs = coeffs[int(nonzero[0]):]
        coeffs.setflags(write=False)
        self.context = context
        self.start = int(start)
        self.coeffs = coeffs

    @property
    def is_zero(self) -> bool:
        return self.coeffs.shape[0] == 0

    @property
    def valuation(self) -> int:
        if self.is_zero:
            raise ZeroToPrecision(f"Laurent series vanishes modulo y^{self.start}")
        return self.start

    @property
    def relprec(self) -> int:
        return self.coeffs.shape[0]

    @property
    def absprec(self) -> int:
        return self.start + self.relprec

    # ============================================
    # Constructors
    # ============================================

    @classmethod
    def zero(cls, context: SkewContext, absprec: int) -> "SkewLaurent":
        return cls(context, absprec, np.zeros((0, context.dim), dtype=np.int64))

    @classmethod
    def monomial(cls, context: SkewContext, a, k: int, relprec: int) -> "SkewLaurent":
        """a y^k known to relative precision relprec"""
        if relprec < 1:
            raise SpecError(f"relative precision must be positive, got {relprec}")
        coeffs = np.zeros((relprec, context.dim), dtype=np.int64)
        coeffs[0] = a.coords if isinstance(a, Element) else a
        return cls(context, k, coeffs)

    @classmethod
    def y_power(cls, context: SkewContext, k: int, relprec: int) -> "SkewLaurent":
        return cls.monomial(context, context.algebra.unit, k, relprec)

    # ============================================
    # Access
    # ============================================

    def leading_coefficient(self) -> Element:
        if self.is_zero:
            raise ZeroToPrecision(f"Laurent series vanishes modulo y^{self.start}")
        return Element(self.context.algebra, self.coeffs[0])

    def coefficient(self, k: int) -> Element:
        """Coefficient of y^k (zero outside the stored window)"""
        s = k - self.start
        if k >= self.absprec:
            raise SpecError(f"coefficient of y^{k} is beyond precision {self.absprec}")
        if s < 0:
            return self.context.algebra.zero()
        return Element(self.context.algebra, self.coeffs[s])

    def map_coeffs(self, fn) -> "SkewLaurent":
        if self.is_zero:
            return self
        return SkewLaurent(self.context, self.start, fn(self.coeffs))

    def __add__(self, other: "SkewLaurent") -> "SkewLaurent":
        return laurent_add(self, other)

    def __neg__(self) -> "SkewLaurent":
        return SkewLaurent(self.context, self.start, -self.coeffs)

    def __sub__(self, other: "SkewLaurent") -> "SkewLaurent":
        return laurent_add(self, -other)

    def __mul__(self, other: "SkewLaurent") -> "SkewLaurent":
        return laurent_mul(self, other)

    def __eq__(self, other) -> bool:
        return (isinstance(other, SkewLaurent) and other.context is self.context
                and self.start == other.start
                and self.coeffs.shape == other.coeffs.shape
                and np.array_equal(self.coeffs, other.coeffs))

    def __hash__(self):
        return hash((id(self.context), self.start, self.coeffs.tobytes()))

    def __repr__(self):
        if self.is_zero:
            return f"0 + O(y^{self.absprec})"
        A = self.context.algebra
        terms = []
        for s, c in enumerate(self.coeffs):
            if c.any():
                k = self.start + s
                power = "" if k == 0 else ("y" if k == 1 else f"y^{k}")
                terms.append(f"({A.format(c)}){power}" if power else A.format(c))
        return f"{' + '.join(terms)} + O(y^{self.absprec})"


def _check(f: SkewLaurent, g: SkewLaurent):
    if f.context is not g.context:
        raise ContextMismatch(f"Laurent series over {f.context.name} and {g.context.name}")


# ============================================
# Arithmetic
# ============================================

def laurent_add(f: SkewLaurent, g: SkewLaurent) -> SkewLaurent:
    """Sum known to the smaller absolute precision"""
    _check(f, g)
    absprec = min(f.absprec, g.absprec)
    lo = min([h.start for h in (f, g) if not h.is_zero] + [absprec])
    out = np.zeros((absprec - lo, f.context.dim), dtype=np.int64)
    for h in (f, g):
        if h.is_zero:
            continue
        width = max(0, min(h.relprec, absprec - h.start))
        offset = h.start - lo
        out[offset:offset + width] += h.coeffs[:width]
    return SkewLaurent(f.context, lo, out)


def laurent_mul(f: SkewLaurent, g: SkewLaurent) -> SkewLaurent:
    """(a y^i)(b y^j) = a alpha^i(b) y^(i+j), relative precision min of inputs"""
    _check(f, g)
    ctx = f.context
    if f.is_zero or g.is_zero:
        # f = O(y^a) kills everything below a + val(g)
        left = f.absprec if f.is_zero else f.start
        right = g.absprec if g.is_zero else g.start
        return SkewLaurent.zero(ctx, left + right)

    r = min(f.relprec, g.relprec)
    out = np.zeros((r, ctx.dim), dtype=np.int64)
    for s in range(r):
        a = f.coeffs[s]
        if not a.any():
            continue
        twisted = ctx.twist_rows(g.coeffs[:r - s], f.start + s)
        out[s:] += twisted @ ctx.left_mul_matrix(a)
    return SkewLaurent(ctx, f.start + g.start, out)


def from_series(f: SkewSeries) -> SkewLaurent:
    return SkewLaurent(f.context, 0, f.coeffs)


def to_series(f: SkewLaurent) -> SkewSeries:
    """The same element as a power series (requires no negative powers)"""
    if f.is_zero:
        return SkewSeries.zero(f.context, max(f.absprec, 1))
    if f.start < 0:
        raise SpecError(f"valuation {f.start} < 0 has no power series form")
    coeffs = np.zeros((f.absprec, f.context.dim), dtype=np.int64)
    coeffs[f.start:] = f.coeffs
    return SkewSeries(f.context, coeffs)


def conjugate_by_y(f: SkewLaurent) -> SkewLaurent:
    """y f y^-1"""
    ctx = f.context
    r = max(f.relprec, 1)
    y = SkewLaurent.y_power(ctx, 1, r)
    y_inv = SkewLaurent.y_power(ctx, -1, r)
    return laurent_mul(laurent_mul(y, f), y_inv)


def laurent_invert(f: SkewLaurent) -> SkewLaurent:
    """f = u y^v with u a power series, so f^-1 = y^-v u^-1"""
    v = f.valuation
    u = SkewSeries(f.context, f.coeffs)
    u_inv = from_series(invert_unit(u))
    result = laurent_mul(SkewLaurent.y_power(f.context, -v, f.relprec), u_inv)
    one = SkewLaurent.y_power(f.context, 0, f.relprec)
    if laurent_mul(f, result) != one or laurent_mul(result, f) != one:
        raise VerificationFailed(f"Laurent inverse of {f!r} does not verify")
    return result


def laurent_semiprime_witness(f: SkewLaurent, relprec: Optional[int] = None) -> SkewLaurent:
    """g = alpha^-i(c) y^-i with f g f != 0, where i = val(f) and a c a != 0"""
    ctx = f.context
    i = f.valuation
    a = f.leading_coefficient()
    c = find_nonzero_sandwich(ctx.algebra, a)
    if c is None:
        raise NotSemiprime(f"a A a = 0 for leading coefficient {a!r}", witness=a.to_list())
    g = SkewLaurent.monomial(ctx, ctx.twist_rows(c.coords, -i), -i, relprec or f.relprec)
    if laurent_mul(laurent_mul(f, g), f).is_zero:
        raise VerificationFailed(f"f g f vanishes for f = {f!r}")
    return g


def random_laurent(context: SkewContext, rng: np.random.Generator, relprec: int,
                   low: int = -3, high: int = 3) -> SkewLaurent:
    start = int(rng.integers(low, high + 1))
    return SkewLaurent(context, start, rng.integers(0, context.p, size=(relprec, context.dim)))
