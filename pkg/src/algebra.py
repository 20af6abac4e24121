"""
SKEWRANK - Finite-Dimensional Algebras over F_p

An algebra is F_p^n with a bilinear multiplication given by structure
constants: structure[i, j] = coordinates of e_i * e_j.
"""

import logging
from typing import Iterator, List, Optional, Sequence

import numpy as np

import field as fp
from errors import AlgebraMismatch, NoUnit, NotAssociative, SpecError
from field import PrimeField

logger = logging.getLogger("skewrank.algebra")


class Element:
    """Element of an Algebra (immutable coordinate vector)"""

    __slots__ = ("algebra", "coords")

    def __init__(self, algebra: "Algebra", coords):
        coords = np.asarray(coords, dtype=np.int64) % algebra.p
        if coords.shape != (algebra.dim,):
            raise SpecError(f"element needs {algebra.dim} coordinates, got shape {coords.shape}")
        coords.setflags(write=False)
        self.algebra = algebra
        self.coords = coords

    def _check(self, other: "Element"):
        if not isinstance(other, Element) or other.algebra is not self.algebra:
            raise AlgebraMismatch("operands belong to different algebras")

    def __add__(self, other: "Element") -> "Element":
        self._check(other)
        return Element(self.algebra, self.coords + other.coords)

    def __sub__(self, other: "Element") -> "Element":
        self._check(other)
        return Element(self.algebra, self.coords - other.coords)

    def __neg__(self) -> "Element":
        return Element(self.algebra, -self.coords)

    def __mul__(self, other) -> "Element":
        if isinstance(other, (int, np.integer)):
            return Element(self.algebra, self.coords * int(other))
        return self.algebra.multiply(self, other)

    def __rmul__(self, other) -> "Element":
        if isinstance(other, (int, np.integer)):
            return Element(self.algebra, self.coords * int(other))
        return NotImplemented

    def __eq__(self, other) -> bool:
        return (isinstance(other, Element) and other.algebra is self.algebra
                and np.array_equal(self.coords, other.coords))

    def __hash__(self):
        return hash((id(self.algebra), self.coords.tobytes()))

    def is_zero(self) -> bool:
        return not self.coords.any()

    def to_list(self) -> List[int]:
        return [int(c) for c in self.coords]

    def __repr__(self):
        return self.algebra.format(self.coords)


class Algebra:
    """Associative unital algebra over F_p given by structure constants"""

    def __init__(self, field: PrimeField, structure, unit=None,
                 basis_names: Optional[Sequence[str]] = None, name: str = ""):
        self.field = field
        self.p = field.p
        structure = np.asarray(structure, dtype=np.int64) % self.p
        n = structure.shape[0]
        if n < 1 or structure.shape != (n, n, n):
            raise SpecError(f"structure constants must have shape (n, n, n), got {structure.shape}")
        structure.setflags(write=False)
        self.dim = n
        self.structure = structure
        self.basis_names = list(basis_names) if basis_names else [f"e{i}" for i in range(n)]
        if len(self.basis_names) != n:
            raise SpecError(f"{len(self.basis_names)} basis names for dimension {n}")
        self.name = name or f"A({n})/{field}"

        self._check_associative()
        if unit is None:
            unit = self._solve_unit()
        self.unit = np.asarray(unit, dtype=np.int64) % self.p
        self.unit.setflags(write=False)
        self._check_unit()

    # ============================================
    # Axioms
    # ============================================

    def _check_associative(self):
        S = self.structure
        left = np.einsum("ijl,lkm->ijkm", S, S) % self.p
        right = np.einsum("jkl,ilm->ijkm", S, S) % self.p
        bad = np.argwhere((left != right).any(axis=3))
        if bad.size:
            i, j, k = (int(t) for t in bad[0])
            names = (self.basis_names[i], self.basis_names[j], self.basis_names[k])
            raise NotAssociative(f"(e_i e_j) e_k != e_i (e_j e_k) at {names}",
                                 witness=[i, j, k])

    def _solve_unit(self) -> np.ndarray:
        # u e_j = e_j and e_j u = e_j for all j, as one linear system in u
        n = self.dim
        S = self.structure
        left = S.transpose(1, 2, 0).reshape(n * n, n)
        right = S.transpose(0, 2, 1).reshape(n * n, n)
        target = np.eye(n, dtype=np.int64).reshape(n * n)
        u = fp.solve(np.vstack([left, right]), np.concatenate([target, target]), self.p)
        if u is None:
            raise NoUnit(f"{self.name} has no two-sided identity")
        return u

    def _check_unit(self):
        eye = np.eye(self.dim, dtype=np.int64)
        left = np.einsum("i,ijk->jk", self.unit, self.structure) % self.p
        right = np.einsum("j,ijk->ik", self.unit, self.structure) % self.p
        if not (np.array_equal(left, eye) and np.array_equal(right, eye)):
            raise NoUnit(f"given unit is not a two-sided identity in {self.name}",
                         witness=[int(c) for c in self.unit])

    # ============================================
    # Elements
    # ============================================

    def element(self, coords) -> Element:
        return Element(self, coords)

    def zero(self) -> Element:
        return Element(self, np.zeros(self.dim, dtype=np.int64))

    def one(self) -> Element:
        return Element(self, self.unit)

    def basis_element(self, i: int) -> Element:
        v = np.zeros(self.dim, dtype=np.int64)
        v[i] = 1
        return Element(self, v)

    def basis(self) -> List[Element]:
        return [self.basis_element(i) for i in range(self.dim)]

    def size(self) -> int:
        return self.p ** self.dim

    def elements(self) -> Iterator[Element]:
        """All elements in lexicographic coordinate order"""
        for coords in fp.all_vectors(self.dim, self.p):
            yield Element(self, coords)

    def format(self, coords) -> str:
        terms = []
        for c, name in zip(coords, self.basis_names):
            c = int(c)
            if c == 0:
                continue
            terms.append(name if c == 1 else f"{c}*{name}")
        return " + ".join(terms) if terms else "0"

    # ============================================
    # Multiplication
    # ============================================

    def mul_vec(self, x: np.ndarray, y: np.ndarray) -> np.ndarray:
        return np.einsum("i,j,ijk->k", x, y, self.structure) % self.p

    def multiply(self, x: Element, y: Element) -> Element:
        if x.algebra is not self or y.algebra is not self:
            raise AlgebraMismatch("operands belong to different algebras")
        return Element(self, self.mul_vec(x.coords, y.coords))

    def left_matrix(self, x) -> np.ndarray:
        """L with y @ L = x*y"""
        x = x.coords if isinstance(x, Element) else x
        return np.einsum("i,ijk->jk", x, self.structure) % self.p

    def right_matrix(self, x) -> np.ndarray:
        """R with y @ R = y*x"""
        x = x.coords if isinstance(x, Element) else x
        return np.einsum("j,ijk->ik", x, self.structure) % self.p

    def is_unit(self, x: Element) -> Optional[Element]:
        """Two-sided inverse of x, or None"""
        if x.algebra is not self:
            raise AlgebraMismatch("element belongs to a different algebra")
        right_inv = fp.solve(self.left_matrix(x).T, self.unit, self.p)
        left_inv = fp.solve(self.right_matrix(x).T, self.unit, self.p)
        if right_inv is None or left_inv is None:
            return None
        return Element(self, right_inv)

    def power(self, x: Element, k: int) -> Element:
        result = self.one()
        for _ in range(k):
            result = self.multiply(result, x)
        return result

    # ============================================
    # Basis change
    # ============================================

    def change_basis(self, P: np.ndarray, name: str = "") -> "Algebra":
        """Same algebra in the basis f_i = sum_a P[i, a] e_a"""
        P = np.asarray(P, dtype=np.int64) % self.p
        Pinv = fp.inverse(P, self.p)
        if Pinv is None:
            raise SpecError("basis change matrix is singular")
        prod = np.einsum("ia,jb,abk->ijk", P, P, self.structure) % self.p
        structure = (prod @ Pinv) % self.p
        unit = (self.unit @ Pinv) % self.p
        return Algebra(self.field, structure, unit,
                       [f"f{i}" for i in range(self.dim)],
                       name or f"{self.name}[rebased]")

    def __repr__(self):
        return f"Algebra({self.name}, dim={self.dim})"


# ============================================
# Constructors
# ============================================

def matrix_algebra(k: int, p: int) -> Algebra:
    """M_k(F_p) on matrix units e_rs, e_rs e_tu = delta_st e_ru"""
    field = PrimeField(p)
    if k < 1:
        raise SpecError(f"matrix size must be positive, got {k}")
    n = k * k
    S = np.zeros((n, n, n), dtype=np.int64)
    for r in range(k):
        for s in range(k):
            for u in range(k):
                S[r * k + s, s * k + u, r * k + u] = 1
    unit = np.zeros(n, dtype=np.int64)
    for r in range(k):
        unit[r * k + r] = 1
    names = [f"e{r + 1}{s + 1}" for r in range(k) for s in range(k)]
    name = f"F_{p}" if k == 1 else f"M_{k}(F_{p})"
    return Algebra(field, S, unit, names, name)


def field_algebra(p: int) -> Algebra:
    return matrix_algebra(1, p)


def truncated_polynomial(p: int, degree: int) -> Algebra:
    """F_p[t]/(t^degree) on the basis 1, t, ..., t^(degree-1)"""
    field = PrimeField(p)
    if degree < 1:
        raise SpecError(f"degree must be positive, got {degree}")
    S = np.zeros((degree, degree, degree), dtype=np.int64)
    for i in range(degree):
        for j in range(degree - i):
            S[i, j, i + j] = 1
    unit = np.zeros(degree, dtype=np.int64)
    unit[0] = 1
    names = ["1", "t"] + [f"t^{i}" for i in range(2, degree)]
    return Algebra(field, S, unit, names[:degree], f"F_{p}[t]/(t^{degree})")


def direct_product(A1: Algebra, A2: Algebra) -> Algebra:
    """A1 x A2 with componentwise product and unit (1, 1)"""
    if A1.p != A2.p:
        raise AlgebraMismatch(f"factors over F_{A1.p} and F_{A2.p}")
    n1, n2 = A1.dim, A2.dim
    n = n1 + n2
    S = np.zeros((n, n, n), dtype=np.int64)
    S[:n1, :n1, :n1] = A1.structure
    S[n1:, n1:, n1:] = A2.structure
    unit = np.concatenate([A1.unit, A2.unit])
    names = [f"({b},0)" for b in A1.basis_names] + [f"(0,{b})" for b in A2.basis_names]
    return Algebra(A1.field, S, unit, names, f"{A1.name}x{A2.name}")


def is_homomorphism(source: Algebra, target: Algebra, matrix: np.ndarray) -> bool:
    """Does x -> x @ matrix preserve products and the unit?"""
    p = source.p
    M = np.asarray(matrix, dtype=np.int64) % p
    if M.shape != (source.dim, target.dim):
        return False
    lhs = (source.structure @ M) % p
    rhs = np.einsum("ia,jb,abk->ijk", M, M, target.structure) % p
    return np.array_equal(lhs, rhs) and np.array_equal((source.unit @ M) % p, target.unit)
