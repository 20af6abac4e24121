"""
SKEWRANK - Truncation Rings B_N = A[y; alpha]/<y^N>

B_N is an ordinary finite Algebra on the basis e_s y^i (index i*n + s),
with (e_s y^i)(e_t y^j) = e_s alpha^i(e_t) y^(i+j) when i + j < N.
"""

import logging
import math
from dataclasses import dataclass
from typing import Optional

import numpy as np

import field as fp
from algebra import Algebra, Element, is_homomorphism
from alpha_ideals import require_alpha_ideal
from config import get_settings
from errors import SpecError, VerificationFailed, check_cap
from ideals import Ideal, QuotientAlgebra, RightIdeal, is_two_sided, products, quotient_algebra
from modules import FiniteModule, regular_module
from series import SkewContext, SkewSeries

logger = logging.getLogger("skewrank.truncation")


class TruncationRing:
    """B_N as an Algebra, remembering its skew context"""

    def __init__(self, context: SkewContext, N: int):
        if N < 1:
            raise SpecError(f"truncation order must be positive, got {N}")
        A = context.algebra
        n = A.dim
        bits = N * n * math.log2(A.p)
        cap = get_settings().limits.max_truncation_bits
        check_cap(f"truncation of {context.name} at N={N}", math.ceil(bits), cap)

        self.context = context
        self.base = A
        self.N = N
        self.n = n
        self.algebra = Algebra(A.field, self._structure(), self._unit(), self._names(),
                               f"{A.name}[y;{context.alpha.name}]/(y^{N})")
        logger.debug("[Truncation] built %s, dim %d", self.algebra.name, self.algebra.dim)

    def _structure(self) -> np.ndarray:
        A = self.base
        n, N = self.n, self.N
        S = np.zeros((n * N, n * N, n * N), dtype=np.int64)
        for i in range(N):
            images = self.context.alpha.power(i).T  # images[t] = alpha^i(e_t)
            block = np.einsum("tb,sbk->stk", images, A.structure) % A.p
            for j in range(N - i):
                k = i + j
                S[i * n:(i + 1) * n, j * n:(j + 1) * n, k * n:(k + 1) * n] = block
        return S

    def _unit(self) -> np.ndarray:
        unit = np.zeros(self.n * self.N, dtype=np.int64)
        unit[:self.n] = self.base.unit
        return unit

    def _names(self):
        names = []
        for i in range(self.N):
            suffix = "" if i == 0 else ("y" if i == 1 else f"y^{i}")
            names.extend(f"{b}{suffix}" if suffix else b for b in self.base.basis_names)
        return names

    # ============================================
    # Embeddings and conversions
    # ============================================

    def degree_block(self, rows: np.ndarray, i: int) -> np.ndarray:
        """Rows of A placed at y-degree i"""
        rows = fp.as_matrix(rows, self.n)
        out = np.zeros((rows.shape[0], self.n * self.N), dtype=np.int64)
        out[:, i * self.n:(i + 1) * self.n] = rows
        return out

    def embed_rows(self, rows: np.ndarray) -> np.ndarray:
        return self.degree_block(rows, 0)

    def embed_A(self, x: Element) -> Element:
        return Element(self.algebra, self.embed_rows(x.coords)[0])

    def embedding_matrix(self) -> np.ndarray:
        """A -> B_N on rows"""
        return self.embed_rows(np.eye(self.n, dtype=np.int64))

    def reduction_matrix(self) -> np.ndarray:
        """B_N -> B_N/<y> = A on rows"""
        M = np.zeros((self.n * self.N, self.n), dtype=np.int64)
        M[:self.n] = np.eye(self.n, dtype=np.int64)
        return M

    @property
    def y_elem(self) -> Element:
        if self.N == 1:
            return self.algebra.zero()
        return Element(self.algebra, self.degree_block(self.base.unit, 1)[0])

    def from_series(self, f: SkewSeries) -> Element:
        if f.context is not self.context:
            raise SpecError("series belongs to a different context")
        if f.precision < self.N:
            raise SpecError(f"series precision {f.precision} is below N={self.N}")
        return Element(self.algebra, f.coeffs[:self.N].reshape(-1))

    def to_series(self, x: Element) -> SkewSeries:
        return SkewSeries(self.context, x.coords.reshape(self.N, self.n))

    # ============================================
    # Structure
    # ============================================

    def radical_basis(self) -> np.ndarray:
        """J(B_N) = J(A) + <y>: J(A) at degree 0 plus every higher degree"""
        from structure import jacobson_radical
        J = jacobson_radical(self.base)
        higher = np.eye(self.n * self.N, dtype=np.int64)[self.n:]
        return fp.span(np.vstack([self.embed_rows(J.basis), higher]), self.n * self.N, self.base.p)

    def radical(self) -> Ideal:
        return Ideal(self.algebra, self.radical_basis())

    def is_y_normal(self) -> bool:
        """y B_N = B_N y as subspaces"""
        B = self.algebra
        eye = np.eye(B.dim, dtype=np.int64)
        y = self.y_elem.coords.reshape(1, -1)
        left = fp.span(products(B, y, eye), B.dim, B.p)
        right = fp.span(products(B, eye, y), B.dim, B.p)
        return left.shape == right.shape and np.array_equal(left, right)

    def regular_module(self) -> FiniteModule:
        return regular_module(self.algebra)

    def __repr__(self):
        return f"TruncationRing({self.algebra.name}, dim={self.algebra.dim})"


def build_truncation(context: SkewContext, N: int) -> TruncationRing:
    return TruncationRing(context, N)


# ============================================
# Induced modules and ideals
# ============================================

def induced_module(V: RightIdeal, T: TruncationRing) -> FiniteModule:
    """V B_N as a submodule of the regular module of B_N"""
    if V.algebra is not T.base:
        raise SpecError("right ideal does not belong to the truncation's base algebra")
    M = T.regular_module()
    name = f"{V!r}B_{T.N}"
    return M.restrict(M.generated(T.embed_rows(V.basis)), name)


@dataclass
class InducedTruncation:
    """IB_N with B_N/IB_N and its identification with (A/I)[y]/(y^N)"""
    ideal: Ideal
    quotient: Optional[QuotientAlgebra] = None
    reduced: Optional[TruncationRing] = None
    iso: Optional[np.ndarray] = None


def induced_ideal_truncated(I: Ideal, T: TruncationRing) -> InducedTruncation:
    """IB_N, checked equal to I B_N and B_N I, with B_N/IB_N = (A/I)-truncation"""
    ctx = T.context
    A = T.base
    B = T.algebra
    p = A.p
    if I.algebra is not A:
        raise SpecError("ideal does not belong to the truncation's base algebra")
    require_alpha_ideal(I, ctx.alpha)

    coefficientwise = Ideal(B, np.vstack([T.degree_block(I.basis, i) for i in range(T.N)])
                            if I.dim else np.zeros((0, B.dim), dtype=np.int64))
    eye = np.eye(B.dim, dtype=np.int64)
    embedded = T.embed_rows(I.basis)
    left = Ideal(B, products(B, embedded, eye))
    right = Ideal(B, products(B, eye, embedded))
    if not (coefficientwise == left == right):
        raise VerificationFailed(f"descriptions of {I!r}B_{T.N} disagree",
                                 witness={"coefficientwise": coefficientwise.dim,
                                          "left": left.dim, "right": right.dim})
    if not is_two_sided(coefficientwise):
        raise VerificationFailed(f"{I!r}B_{T.N} is not two-sided")

    result = InducedTruncation(coefficientwise)
    if I.is_whole():
        return result

    QA = quotient_algebra(A, I, alpha=ctx.alpha)
    reduced = build_truncation(SkewContext(QA.algebra, QA.alpha), T.N)
    # coefficientwise projection B_N -> (A/I)_N
    phi = np.kron(np.eye(T.N, dtype=np.int64), QA.projection)
    if not is_homomorphism(B, reduced.algebra, phi):
        raise VerificationFailed(f"coefficientwise projection of {B.name} is not a homomorphism")

    QB = quotient_algebra(B, coefficientwise)
    iso = (QB.lift @ phi) % p
    if fp.rank(iso, p) != reduced.algebra.dim or iso.shape[0] != iso.shape[1]:
        raise VerificationFailed(f"{QB.algebra.name} is not isomorphic to {reduced.algebra.name}")
    if not is_homomorphism(QB.algebra, reduced.algebra, iso):
        raise VerificationFailed(f"{QB.algebra.name} -> {reduced.algebra.name} is not multiplicative")
    result.quotient = QB
    result.reduced = reduced
    result.iso = iso
    logger.debug("[Truncation] %s / %s checked", B.name, I)
    return result


def contract(W: Ideal, T: TruncationRing) -> Ideal:
    """W intersected with A (degree-0 copy)"""
    B = T.algebra
    common = fp.intersect(W.basis, T.embedding_matrix(), B.dim, B.p)
    return Ideal(T.base, common[:, :T.n])
