"""
SKEWRANK - Prime Fields and Exact Linear Algebra over F_p

Vectors are rows. All arrays are int64 reduced mod p.
"""

import itertools
from dataclasses import dataclass
from typing import Iterator, List, Optional, Sequence, Tuple

import numpy as np
from sympy import isprime

from errors import BadField

MAX_CHARACTERISTIC = 97


@dataclass(frozen=True)
class PrimeField:
    """Ground field F_p"""
    p: int

    def __post_init__(self):
        if not isinstance(self.p, (int, np.integer)) or not 2 <= self.p <= MAX_CHARACTERISTIC:
            raise BadField(f"characteristic must be a prime in [2, {MAX_CHARACTERISTIC}], got {self.p}")
        if not isprime(int(self.p)):
            raise BadField(f"{self.p} is not prime")

    def inv(self, a: int) -> int:
        return pow(int(a) % self.p, -1, self.p)

    def reduce(self, values) -> np.ndarray:
        return np.asarray(values, dtype=np.int64) % self.p

    def __str__(self):
        return f"F_{self.p}"


# ============================================
# Row reduction
# ============================================

def as_matrix(rows, n: int) -> np.ndarray:
    """Coerce a list of rows (possibly empty) to a (k, n) int64 array"""
    if isinstance(rows, np.ndarray):
        return rows.reshape(-1, n).astype(np.int64, copy=False)
    if len(rows) == 0:
        return np.zeros((0, n), dtype=np.int64)
    return np.asarray([np.asarray(r, dtype=np.int64) for r in rows]).reshape(-1, n)


def rref(M: np.ndarray, p: int) -> Tuple[np.ndarray, List[int]]:
    """Reduced row echelon form with zero rows dropped, plus pivot columns"""
    A = np.array(M, dtype=np.int64) % p
    if A.ndim == 1:
        A = A.reshape(1, -1)
    rows, cols = A.shape
    pivots = []
    r = 0
    for c in range(cols):
        if r >= rows:
            break
        nz = np.nonzero(A[r:, c])[0]
        if nz.size == 0:
            continue
        piv = r + int(nz[0])
        if piv != r:
            A[[r, piv]] = A[[piv, r]]
        A[r] = (A[r] * pow(int(A[r, c]), -1, p)) % p
        others = np.nonzero(A[:, c])[0]
        others = others[others != r]
        if others.size:
            A[others] = (A[others] - np.outer(A[others, c], A[r])) % p
        pivots.append(c)
        r += 1
    return A[:r], pivots


def rank(M: np.ndarray, p: int) -> int:
    if M.size == 0:
        return 0
    return len(rref(M, p)[1])


def span(rows, n: int, p: int) -> np.ndarray:
    """Canonical basis (RREF) of the row span"""
    M = as_matrix(rows, n)
    if M.shape[0] == 0:
        return M
    return rref(M, p)[0]


def reduce_vector(v: np.ndarray, basis: np.ndarray, pivots: Sequence[int], p: int) -> np.ndarray:
    """Remainder of v modulo the span of an RREF basis"""
    v = np.asarray(v, dtype=np.int64) % p
    if len(pivots) == 0:
        return v
    return (v - v[list(pivots)] @ basis) % p


def pivots_of(basis: np.ndarray) -> List[int]:
    """Pivot columns of an RREF basis"""
    return [int(np.nonzero(row)[0][0]) for row in basis]


def in_span(v: np.ndarray, basis: np.ndarray, p: int) -> bool:
    return not reduce_vector(v, basis, pivots_of(basis), p).any()


def solve(A: np.ndarray, b: np.ndarray, p: int) -> Optional[np.ndarray]:
    """One solution x of A x = b (free variables zero), or None"""
    A = np.asarray(A, dtype=np.int64)
    k = A.shape[1]
    aug = np.hstack([A % p, (np.asarray(b, dtype=np.int64) % p).reshape(-1, 1)])
    R, piv = rref(aug, p)
    if k in piv:
        return None
    x = np.zeros(k, dtype=np.int64)
    for row, c in zip(R, piv):
        x[c] = row[-1]
    return x


def nullspace(A: np.ndarray, p: int) -> np.ndarray:
    """Basis rows of {x : A x = 0}"""
    A = np.asarray(A, dtype=np.int64)
    k = A.shape[1]
    if A.shape[0] == 0:
        return np.eye(k, dtype=np.int64)
    R, piv = rref(A, p)
    free = [c for c in range(k) if c not in piv]
    out = np.zeros((len(free), k), dtype=np.int64)
    for t, f in enumerate(free):
        out[t, f] = 1
        for row, c in zip(R, piv):
            out[t, c] = (-row[f]) % p
    return out


def inverse(A: np.ndarray, p: int) -> Optional[np.ndarray]:
    n = A.shape[0]
    R, piv = rref(np.hstack([np.asarray(A, dtype=np.int64) % p, np.eye(n, dtype=np.int64)]), p)
    if piv[:n] != list(range(n)):
        return None
    return R[:n, n:] % p


def intersect(U: np.ndarray, W: np.ndarray, n: int, p: int) -> np.ndarray:
    """RREF basis of rowspace(U) ∩ rowspace(W)"""
    if U.shape[0] == 0 or W.shape[0] == 0:
        return np.zeros((0, n), dtype=np.int64)
    S = np.vstack([U, (-W) % p])
    coeffs = nullspace(S.T, p)
    if coeffs.shape[0] == 0:
        return np.zeros((0, n), dtype=np.int64)
    return span((coeffs[:, :U.shape[0]] @ U) % p, n, p)


# ============================================
# Enumeration
# ============================================

def all_vectors(k: int, p: int) -> Iterator[Tuple[int, ...]]:
    """All vectors of F_p^k in lexicographic order"""
    return itertools.product(range(p), repeat=k)


def span_elements(basis: np.ndarray, p: int) -> np.ndarray:
    """Every element of the span, as rows (coefficient vectors in lex order)"""
    k, n = basis.shape
    if k == 0:
        return np.zeros((1, n), dtype=np.int64)
    coeffs = np.array(list(all_vectors(k, p)), dtype=np.int64)
    return (coeffs @ basis) % p


if __name__ == "__main__":
    print("=" * 60)
    print("  SKEWRANK F_p Linear Algebra Test")
    print("=" * 60)
    M = np.array([[1, 2, 0], [2, 4, 1], [0, 0, 1]])
    R, piv = rref(M, 5)
    print(f"  rref mod 5:\n{R}\n  pivots: {piv}")
    print(f"  nullspace: {nullspace(M, 5)}")
