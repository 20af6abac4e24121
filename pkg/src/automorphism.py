"""
SKEWRANK - Algebra Automorphisms

Columns of the matrix are the images of the basis elements, so
phi(x) = M x on column vectors (x @ M.T on rows).
"""

import logging
from typing import List, Optional

import numpy as np

import field as fp
from algebra import Algebra, Element
from config import get_settings
from errors import AlgebraMismatch, NotAutomorphism, SpecError, check_cap

logger = logging.getLogger("skewrank.automorphism")


class Automorphism:
    """Verified automorphism of an Algebra, with all its powers cached"""

    def __init__(self, algebra: Algebra, matrix, name: str = ""):
        p = algebra.p
        M = np.asarray(matrix, dtype=np.int64) % p
        if M.shape != (algebra.dim, algebra.dim):
            raise SpecError(f"automorphism must be {algebra.dim}x{algebra.dim}, got {M.shape}")
        M.setflags(write=False)
        self.algebra = algebra
        self.matrix = M
        self.name = name or "alpha"
        self._verify()
        self._powers = self._compute_powers()
        self.order = len(self._powers)

    def _verify(self):
        A = self.algebra
        p = A.p
        if fp.inverse(self.matrix, p) is None:
            raise NotAutomorphism(f"{self.name} is singular")
        images = self.matrix.T  # images[i] = phi(e_i)
        lhs = (A.structure @ self.matrix.T) % p
        rhs = np.einsum("ia,jb,abk->ijk", images, images, A.structure) % p
        bad = np.argwhere((lhs != rhs).any(axis=2))
        if bad.size:
            i, j = (int(t) for t in bad[0])
            raise NotAutomorphism(
                f"{self.name}(e_i e_j) != {self.name}(e_i){self.name}(e_j) at "
                f"({A.basis_names[i]}, {A.basis_names[j]})", witness=[i, j])
        if not np.array_equal((self.matrix @ A.unit) % p, A.unit):
            raise NotAutomorphism(f"{self.name} does not fix the unit")

    def _compute_powers(self) -> List[np.ndarray]:
        p = self.algebra.p
        cap = get_settings().limits.max_order
        eye = np.eye(self.algebra.dim, dtype=np.int64)
        powers = [eye]
        current = self.matrix
        while not np.array_equal(current, eye):
            powers.append(current)
            check_cap(f"order of {self.name}", len(powers), cap)
            current = (current @ self.matrix) % p
        for P in powers:
            P.setflags(write=False)
        return powers

    # ============================================
    # Powers and application
    # ============================================

    def power(self, k: int) -> np.ndarray:
        """Matrix of alpha^k for any integer k"""
        return self._powers[k % self.order]

    def apply_vec(self, v: np.ndarray, k: int = 1) -> np.ndarray:
        return (self.power(k) @ v) % self.algebra.p

    def apply_rows(self, rows: np.ndarray, k: int = 1) -> np.ndarray:
        return (rows @ self.power(k).T) % self.algebra.p

    def apply(self, x: Element, k: int = 1) -> Element:
        if x.algebra is not self.algebra:
            raise AlgebraMismatch("element belongs to a different algebra")
        return Element(self.algebra, self.apply_vec(x.coords, k))

    def __call__(self, x: Element) -> Element:
        return self.apply(x)

    def compose(self, other: "Automorphism") -> "Automorphism":
        """self o other"""
        if other.algebra is not self.algebra:
            raise AlgebraMismatch("automorphisms of different algebras")
        return Automorphism(self.algebra, (self.matrix @ other.matrix) % self.algebra.p,
                            f"{self.name}*{other.name}")

    def inverse(self) -> "Automorphism":
        return Automorphism(self.algebra, self.power(-1), f"{self.name}^-1")

    def is_identity(self) -> bool:
        return self.order == 1

    def __eq__(self, other) -> bool:
        return (isinstance(other, Automorphism) and other.algebra is self.algebra
                and np.array_equal(self.matrix, other.matrix))

    def __hash__(self):
        return hash((id(self.algebra), self.matrix.tobytes()))

    def __repr__(self):
        return f"Automorphism({self.name} on {self.algebra.name}, order={self.order})"


# ============================================
# Constructors
# ============================================

def identity_automorphism(algebra: Algebra) -> Automorphism:
    return Automorphism(algebra, np.eye(algebra.dim, dtype=np.int64), "id")


def inner_automorphism(algebra: Algebra, u: Element, name: str = "") -> Automorphism:
    """x -> u x u^-1"""
    u_inv = algebra.is_unit(u)
    if u_inv is None:
        raise NotAutomorphism(f"{u!r} is not a unit of {algebra.name}")
    row_map = (algebra.left_matrix(u) @ algebra.right_matrix(u_inv)) % algebra.p
    return Automorphism(algebra, row_map.T, name or f"inn({u!r})")


def swap_automorphism(algebra: Algebra) -> Automorphism:
    """Exchange the two halves of a product of two equal factors"""
    n = algebra.dim
    if n % 2:
        raise NotAutomorphism(f"swap needs an even dimension, got {n}")
    h = n // 2
    P = np.zeros((n, n), dtype=np.int64)
    P[:h, h:] = np.eye(h, dtype=np.int64)
    P[h:, :h] = np.eye(h, dtype=np.int64)
    return Automorphism(algebra, P, "swap")


def block_automorphism(product: Algebra, first: Automorphism,
                       second: Automorphism) -> Automorphism:
    """Componentwise automorphism of a product algebra"""
    n1, n2 = first.algebra.dim, second.algebra.dim
    if n1 + n2 != product.dim:
        raise NotAutomorphism("factor automorphisms do not match the product dimension")
    M = np.zeros((product.dim, product.dim), dtype=np.int64)
    M[:n1, :n1] = first.matrix
    M[n1:, n1:] = second.matrix
    return Automorphism(product, M, f"({first.name},{second.name})")


def induced_on_quotient(alpha: Automorphism, quotient: Algebra,
                        projection: np.ndarray, lift: np.ndarray) -> Optional[Automorphism]:
    """Automorphism of A/I induced by alpha (rows: x @ projection, y @ lift)"""
    p = alpha.algebra.p
    M = (lift @ alpha.matrix.T @ projection) % p
    return Automorphism(quotient, M.T, f"{alpha.name}~")
