"""
SKEWRANK - Subspaces, Ideals and Quotients

Subspaces are stored as canonical RREF bases, so equal subspaces have
identical basis matrices and ideal equality is array equality.
"""

import logging
from dataclasses import dataclass
from typing import Iterable, List, Optional

import numpy as np

import field as fp
from algebra import Algebra, Element
from errors import AlgebraMismatch, NotProper, VerificationFailed

logger = logging.getLogger("skewrank.ideals")


class Subspace:
    """F_p-subspace of an algebra in reduced echelon form"""

    kind = "subspace"

    def __init__(self, algebra: Algebra, rows=()):
        self.algebra = algebra
        basis = fp.span(rows, algebra.dim, algebra.p)
        basis.setflags(write=False)
        self.basis = basis
        self.pivots = fp.pivots_of(basis)

    @property
    def dim(self) -> int:
        return self.basis.shape[0]

    @property
    def key(self) -> bytes:
        return self.basis.tobytes() + bytes([self.dim])

    def _check(self, other: "Subspace"):
        if other.algebra is not self.algebra:
            raise AlgebraMismatch("subspaces of different algebras")

    def __eq__(self, other) -> bool:
        return (isinstance(other, Subspace) and other.algebra is self.algebra
                and self.basis.shape == other.basis.shape
                and np.array_equal(self.basis, other.basis))

    def __hash__(self):
        return hash((id(self.algebra), self.key))

    def is_zero(self) -> bool:
        return self.dim == 0

    def is_whole(self) -> bool:
        return self.dim == self.algebra.dim

    def contains_vec(self, v: np.ndarray) -> bool:
        return not fp.reduce_vector(v, self.basis, self.pivots, self.algebra.p).any()

    def contains(self, x: Element) -> bool:
        if x.algebra is not self.algebra:
            raise AlgebraMismatch("element belongs to a different algebra")
        return self.contains_vec(x.coords)

    def contains_subspace(self, other: "Subspace") -> bool:
        self._check(other)
        return all(self.contains_vec(row) for row in other.basis)

    def reduce(self, v: np.ndarray) -> np.ndarray:
        return fp.reduce_vector(v, self.basis, self.pivots, self.algebra.p)

    def elements(self) -> np.ndarray:
        return fp.span_elements(self.basis, self.algebra.p)

    def generators(self) -> List[Element]:
        return [Element(self.algebra, row) for row in self.basis]

    def to_lists(self) -> List[List[int]]:
        return [[int(c) for c in row] for row in self.basis]

    def __repr__(self):
        gens = ", ".join(self.algebra.format(row) for row in self.basis)
        return f"{type(self).__name__}<{gens or '0'}>"


class Ideal(Subspace):
    """Two-sided ideal"""
    kind = "ideal"


class RightIdeal(Subspace):
    """Right ideal, optionally remembering a cyclic generator"""
    kind = "right_ideal"

    def __init__(self, algebra: Algebra, rows=(), generator: Optional[np.ndarray] = None):
        super().__init__(algebra, rows)
        self.generator = generator


# ============================================
# Generation and closure tests
# ============================================

def _as_rows(algebra: Algebra, gens) -> np.ndarray:
    rows = [g.coords if isinstance(g, Element) else np.asarray(g, dtype=np.int64) for g in gens]
    return fp.as_matrix(rows, algebra.dim)


def products(algebra: Algebra, U: np.ndarray, W: np.ndarray) -> np.ndarray:
    """All products u*w for rows u of U and w of W"""
    n = algebra.dim
    if U.shape[0] == 0 or W.shape[0] == 0:
        return np.zeros((0, n), dtype=np.int64)
    prods = np.einsum("ia,jb,abk->ijk", U, W, algebra.structure) % algebra.p
    return prods.reshape(-1, n)


def right_ideal_generated(algebra: Algebra, gens) -> RightIdeal:
    """span{g e_j}"""
    rows = _as_rows(algebra, gens)
    gen = rows[0] if rows.shape[0] == 1 else None
    eye = np.eye(algebra.dim, dtype=np.int64)
    return RightIdeal(algebra, products(algebra, rows, eye), generator=gen)


def ideal_generated(algebra: Algebra, gens) -> Ideal:
    """span{e_i g e_j}"""
    rows = _as_rows(algebra, gens)
    eye = np.eye(algebra.dim, dtype=np.int64)
    left = products(algebra, eye, rows)
    return Ideal(algebra, products(algebra, left, eye))


def zero_ideal(algebra: Algebra) -> Ideal:
    return Ideal(algebra)


def whole_ideal(algebra: Algebra) -> Ideal:
    return Ideal(algebra, np.eye(algebra.dim, dtype=np.int64))


def is_two_sided(space: Subspace) -> bool:
    A = space.algebra
    eye = np.eye(A.dim, dtype=np.int64)
    rows = np.vstack([products(A, eye, space.basis), products(A, space.basis, eye)])
    return all(space.contains_vec(r) for r in rows)


# ============================================
# Ideal operations
# ============================================

def ideal_product(I: Ideal, J: Ideal) -> Ideal:
    I._check(J)
    A = I.algebra
    return ideal_generated(A, products(A, I.basis, J.basis))


def ideal_sum(I: Subspace, J: Subspace) -> Ideal:
    I._check(J)
    return Ideal(I.algebra, np.vstack([I.basis, J.basis]))


def ideal_intersection(I: Subspace, J: Subspace) -> Ideal:
    I._check(J)
    A = I.algebra
    return Ideal(A, fp.intersect(I.basis, J.basis, A.dim, A.p))


def intersect_all(ideals: Iterable[Ideal]) -> Ideal:
    ideals = list(ideals)
    result = ideals[0]
    for I in ideals[1:]:
        result = ideal_intersection(result, I)
    return result


def ideal_power(I: Ideal, k: int) -> Ideal:
    result = whole_ideal(I.algebra)
    for _ in range(k):
        result = ideal_product(result, I)
    return result


def membership(x: Element, I: Subspace) -> bool:
    return I.contains(x)


def is_direct_sum(spaces: List[Subspace]) -> bool:
    """Do the subspaces have direct sum?"""
    if not spaces:
        return True
    A = spaces[0].algebra
    total = sum(S.dim for S in spaces)
    return fp.rank(np.vstack([S.basis for S in spaces]), A.p) == total


# ============================================
# Quotients
# ============================================

@dataclass
class QuotientAlgebra:
    """A/I together with projection (x @ projection) and lift (q @ lift)"""
    algebra: Algebra
    kernel: Ideal
    projection: np.ndarray
    lift: np.ndarray
    alpha: Optional[object] = None

    def project(self, x: Element) -> Element:
        return Element(self.algebra, (x.coords @ self.projection) % self.algebra.p)

    def project_vec(self, v: np.ndarray) -> np.ndarray:
        return (v @ self.projection) % self.algebra.p

    def lift_elem(self, q: Element) -> Element:
        return Element(self.kernel.algebra, (q.coords @ self.lift) % self.algebra.p)


def quotient_algebra(A: Algebra, I: Ideal, alpha=None) -> QuotientAlgebra:
    """A/I on the complement basis of the non-pivot coordinates of I"""
    if I.is_whole():
        raise NotProper(f"cannot form {A.name} modulo itself")
    p = A.p
    n = A.dim
    complement = [c for c in range(n) if c not in I.pivots]
    m = len(complement)

    reduced = np.array([I.reduce(row) for row in np.eye(n, dtype=np.int64)])
    projection = reduced[:, complement] % p
    lift = np.zeros((m, n), dtype=np.int64)
    for a, c in enumerate(complement):
        lift[a, c] = 1

    structure = (A.structure[np.ix_(complement, complement)] @ projection) % p
    unit = (A.unit @ projection) % p
    names = [f"[{A.basis_names[c]}]" for c in complement]
    Q = Algebra(A.field, structure, unit, names, f"{A.name}/I{I.dim}")

    # projection must be a surjective homomorphism with kernel I
    lhs = (A.structure @ projection) % p
    rhs = np.einsum("ia,jb,abk->ijk", projection, projection, Q.structure) % p
    if not np.array_equal(lhs, rhs):
        raise VerificationFailed(f"projection {A.name} -> {Q.name} is not multiplicative")
    if fp.rank(projection, p) != m or (I.basis @ projection % p).any():
        raise VerificationFailed(f"projection {A.name} -> {Q.name} has the wrong kernel")

    quotient = QuotientAlgebra(Q, I, projection, lift)
    if alpha is not None:
        from alpha_ideals import is_alpha_ideal
        from automorphism import induced_on_quotient
        if is_alpha_ideal(I, alpha):
            quotient.alpha = induced_on_quotient(alpha, Q, projection, lift)
    logger.debug("[Ideals] %s has dimension %d", Q.name, m)
    return quotient
