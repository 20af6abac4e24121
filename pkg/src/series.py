"""
SKEWRANK - Truncated Skew Power Series

Elements of A[[y; alpha]] known modulo y^N, stored with coefficients on
the left: f = sum a_i y^i, and y a = alpha(a) y. Binary operations return
the smaller precision of their operands.
"""

import logging
from typing import List, Optional

import numpy as np

from algebra import Algebra, Element
from automorphism import Automorphism
from errors import (ContextMismatch, NonUnitConstantTerm, NotSemiprime, PrecisionTooSmall,
                    SpecError, VerificationFailed, ZeroToPrecision)

logger = logging.getLogger("skewrank.series")


class SkewContext:
    """The pair (A, alpha) defining B = A[[y; alpha]] and B' = A[[y, 1/y; alpha]]"""

    def __init__(self, algebra: Algebra, alpha: Automorphism, name: str = ""):
        if alpha.algebra is not algebra:
            raise ContextMismatch(f"{alpha.name} is not an automorphism of {algebra.name}")
        self.algebra = algebra
        self.alpha = alpha
        self.p = algebra.p
        self.dim = algebra.dim
        self.name = name or f"({algebra.name}, {alpha.name})"

    def twist_rows(self, rows: np.ndarray, k: int) -> np.ndarray:
        """alpha^k applied to each row (k may be negative)"""
        return (rows @ self.alpha.power(k).T) % self.p

    def left_mul_matrix(self, a: np.ndarray) -> np.ndarray:
        return self.algebra.left_matrix(a)

    def check(self, other: "SkewContext"):
        if other is not self:
            raise ContextMismatch(f"series over {self.name} and {other.name}")

    def __repr__(self):
        return f"SkewContext{self.name}"


class SkewSeries:
    """f = a_0 + a_1 y + ... + a_{N-1} y^{N-1} + O(y^N)"""

    __slots__ = ("context", "coeffs")

    def __init__(self, context: SkewContext, coeffs):
        coeffs = np.asarray(coeffs, dtype=np.int64) % context.p
        if coeffs.ndim != 2 or coeffs.shape[1] != context.dim or coeffs.shape[0] < 1:
            raise SpecError(f"series needs shape (N >= 1, {context.dim}), got {coeffs.shape}")
        coeffs.setflags(write=False)
        self.context = context
        self.coeffs = coeffs

    @property
    def precision(self) -> int:
        return self.coeffs.shape[0]

    # ============================================
    # Constructors
    # ============================================

    @classmethod
    def zero(cls, context: SkewContext, N: int) -> "SkewSeries":
        return cls(context, np.zeros((N, context.dim), dtype=np.int64))

    @classmethod
    def monomial(cls, context: SkewContext, a, k: int, N: int) -> "SkewSeries":
        """a y^k"""
        coeffs = np.zeros((N, context.dim), dtype=np.int64)
        if k < N:
            coeffs[k] = a.coords if isinstance(a, Element) else a
        return cls(context, coeffs)

    @classmethod
    def constant(cls, context: SkewContext, a, N: int) -> "SkewSeries":
        return cls.monomial(context, a, 0, N)

    @classmethod
    def one(cls, context: SkewContext, N: int) -> "SkewSeries":
        return cls.constant(context, context.algebra.unit, N)

    @classmethod
    def y(cls, context: SkewContext, N: int) -> "SkewSeries":
        return cls.monomial(context, context.algebra.unit, 1, N)

    # ============================================
    # Access
    # ============================================

    def coefficient(self, i: int) -> Element:
        return Element(self.context.algebra, self.coeffs[i])

    def is_zero(self) -> bool:
        return not self.coeffs.any()

    def truncate(self, k: int) -> "SkewSeries":
        if k > self.precision:
            raise SpecError(f"cannot raise precision from {self.precision} to {k}")
        return SkewSeries(self.context, self.coeffs[:k])

    def congruent(self, other: "SkewSeries", k: int) -> bool:
        """f = g mod y^k"""
        self.context.check(other.context)
        if k > min(self.precision, other.precision):
            raise SpecError(f"congruence mod y^{k} needs precision >= {k}")
        return np.array_equal(self.coeffs[:k], other.coeffs[:k])

    def map_coeffs(self, fn) -> "SkewSeries":
        return SkewSeries(self.context, fn(self.coeffs))

    # ============================================
    # Operators
    # ============================================

    def __add__(self, other: "SkewSeries") -> "SkewSeries":
        return series_add(self, other)

    def __sub__(self, other: "SkewSeries") -> "SkewSeries":
        return series_add(self, -other)

    def __neg__(self) -> "SkewSeries":
        return SkewSeries(self.context, -self.coeffs)

    def __mul__(self, other: "SkewSeries") -> "SkewSeries":
        return series_mul(self, other)

    def __eq__(self, other) -> bool:
        """Equality is only defined between series of equal precision"""
        return (isinstance(other, SkewSeries) and other.context is self.context
                and self.coeffs.shape == other.coeffs.shape
                and np.array_equal(self.coeffs, other.coeffs))

    def __hash__(self):
        return hash((id(self.context), self.coeffs.tobytes()))

    def __repr__(self):
        A = self.context.algebra
        terms = []
        for i, c in enumerate(self.coeffs):
            if not c.any():
                continue
            text = A.format(c)
            if i == 0:
                terms.append(text)
            else:
                power = "y" if i == 1 else f"y^{i}"
                terms.append(f"({text}){power}")
        body = " + ".join(terms) if terms else "0"
        return f"{body} + O(y^{self.precision})"


# ============================================
# Arithmetic
# ============================================

def series_add(f: SkewSeries, g: SkewSeries) -> SkewSeries:
    f.context.check(g.context)
    N = min(f.precision, g.precision)
    return SkewSeries(f.context, f.coeffs[:N] + g.coeffs[:N])


def series_mul(f: SkewSeries, g: SkewSeries) -> SkewSeries:
    """Coefficient k of fg is sum_{i+j=k} a_i alpha^i(b_j)"""
    f.context.check(g.context)
    ctx = f.context
    N = min(f.precision, g.precision)
    out = np.zeros((N, ctx.dim), dtype=np.int64)
    for i in range(N):
        a = f.coeffs[i]
        if not a.any():
            continue
        twisted = ctx.twist_rows(g.coeffs[:N - i], i)
        out[i:] += twisted @ ctx.left_mul_matrix(a)
    return SkewSeries(ctx, out % ctx.p)


def mul_by_y_power(f: SkewSeries, k: int, side: str = "left") -> SkewSeries:
    """y^k f (side="left", coefficients twisted by alpha^k) or f y^k"""
    if k < 0:
        raise SpecError(f"power series cannot be multiplied by y^{k}")
    if side not in ("left", "right"):
        raise SpecError(f"side must be 'left' or 'right', got {side!r}")
    ctx = f.context
    N = f.precision
    out = np.zeros_like(f.coeffs)
    if k < N:
        shifted = f.coeffs[:N - k]
        out[k:] = ctx.twist_rows(shifted, k) if side == "left" else shifted
    return SkewSeries(ctx, out)


def to_right_coefficients(f: SkewSeries) -> List[Element]:
    """b_i with f = sum y^i b_i, namely b_i = alpha^-i(a_i)"""
    ctx = f.context
    return [Element(ctx.algebra, ctx.twist_rows(f.coeffs[i], -i)) for i in range(f.precision)]


def from_right_coefficients(context: SkewContext, coeffs: List[Element]) -> SkewSeries:
    """sum y^i b_i in left-coefficient form"""
    rows = [context.twist_rows(b.coords, i) for i, b in enumerate(coeffs)]
    return SkewSeries(context, np.array(rows))


def reduce_mod_y(f: SkewSeries) -> Element:
    """The homomorphism B -> B/<y> = A"""
    return f.coefficient(0)


def valuation(f) -> int:
    """Index of the first nonzero coefficient (series or Laurent)"""
    if getattr(f, "is_laurent", False):
        return f.valuation
    nz = np.nonzero(f.coeffs.any(axis=1))[0]
    if nz.size == 0:
        raise ZeroToPrecision(f"series vanishes modulo y^{f.precision}")
    return int(nz[0])


def leading_coefficient(f) -> Element:
    if getattr(f, "is_laurent", False):
        return f.leading_coefficient()
    return f.coefficient(valuation(f))


def extend_alpha(f):
    """alpha applied coefficientwise, with alpha(y) = y (series or Laurent)"""
    ctx = f.context
    return f.map_coeffs(lambda rows: ctx.twist_rows(rows, 1))


# ============================================
# Inversion
# ============================================

def invert_unit(f: SkewSeries) -> SkewSeries:
    """Two-sided inverse of a series whose constant term is a unit

    Normalizes to constant term 1 via f' = a_0^-1 f, solves f' g' = 1 with
    u_0 = 1, u_k = -sum_{i=1..k} a'_i alpha^i(u_{k-i}), then g = g' a_0^-1.
    """
    ctx = f.context
    A = ctx.algebra
    N = f.precision
    a0 = f.coefficient(0)
    a0_inv = A.is_unit(a0)
    if a0_inv is None:
        raise NonUnitConstantTerm(f"constant term {a0!r} is not a unit", witness=a0.to_list())

    normalized = (f.coeffs @ A.left_matrix(a0_inv)) % ctx.p
    u = np.zeros((N, ctx.dim), dtype=np.int64)
    u[0] = A.unit
    for k in range(1, N):
        acc = np.zeros(ctx.dim, dtype=np.int64)
        for i in range(1, k + 1):
            if normalized[i].any():
                acc += A.mul_vec(normalized[i], ctx.twist_rows(u[k - i], i))
        u[k] = (-acc) % ctx.p

    # g' a_0^-1: coefficient j is u_j alpha^j(a_0^-1)
    twisted_inv = np.array([ctx.twist_rows(a0_inv.coords, j) for j in range(N)])
    g = SkewSeries(ctx, np.array([A.mul_vec(u[j], twisted_inv[j]) for j in range(N)]))

    one = SkewSeries.one(ctx, N)
    if f * g != one or g * f != one:
        raise VerificationFailed(f"inverse of {f!r} does not verify")
    return g


# ============================================
# Semiprime witness
# ============================================

def find_nonzero_sandwich(A: Algebra, a: Element) -> Optional[Element]:
    """c in {1, e_0, e_1, ...} with a c a != 0"""
    for c in [A.one()] + A.basis():
        if not (a * c * a).is_zero():
            return c
    return None


def semiprime_witness(f: SkewSeries) -> SkewSeries:
    """g with f g f != 0 mod y^N

    With i = val(f), a its leading coefficient and a c a != 0, take
    g = alpha^-i(c) y^k, k = -i mod order(alpha); the coefficient of
    y^(2i+k) in f g f is then a c a.
    """
    ctx = f.context
    N = f.precision
    i = valuation(f)
    a = f.coefficient(i)
    k = (-i) % ctx.alpha.order
    if N <= 2 * i + k:
        raise PrecisionTooSmall(f"witness for valuation {i} needs precision > {2 * i + k}, got {N}",
                                witness={"valuation": i, "k": k, "precision": N})
    c = find_nonzero_sandwich(ctx.algebra, a)
    if c is None:
        raise NotSemiprime(f"a A a = 0 for leading coefficient {a!r}", witness=a.to_list())
    g = SkewSeries.monomial(ctx, ctx.twist_rows(c.coords, -i), k, N)
    if (f * g * f).is_zero():
        raise VerificationFailed(f"f g f vanishes for f = {f!r}")
    return g


# ============================================
# Sampling
# ============================================

def random_element(A: Algebra, rng: np.random.Generator) -> Element:
    return Element(A, rng.integers(0, A.p, size=A.dim))


def random_unit(A: Algebra, rng: np.random.Generator, tries: int = 64) -> Element:
    for _ in range(tries):
        x = random_element(A, rng)
        if A.is_unit(x) is not None:
            return x
    return A.one()


def random_series(context: SkewContext, N: int, rng: np.random.Generator,
                  unit_constant: bool = False, min_valuation: int = 0) -> SkewSeries:
    coeffs = rng.integers(0, context.p, size=(N, context.dim))
    coeffs[:min_valuation] = 0
    if unit_constant:
        coeffs[0] = random_unit(context.algebra, rng).coords
    return SkewSeries(context, coeffs)
