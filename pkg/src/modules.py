"""
SKEWRANK - Finite Right Modules

A right module over an Algebra R is F_p^k with one action matrix per
basis element of R: m @ action[i] = m * e_i.

Uniform dimension has two methods:
- socle: composition length of soc(M) = {m : m J(R) = 0}
- oracle: largest independent family of cyclic submodules (brute force)
"""

import logging
from collections import deque
from typing import Dict, List, Optional, Tuple

import numpy as np

import field as fp
from algebra import Algebra
from config import get_settings
from errors import SpecError, VerificationFailed, check_cap

logger = logging.getLogger("skewrank.modules")


class FiniteModule:
    """Right module over a finite algebra, given by action matrices"""

    def __init__(self, ring: Algebra, action, embedding: Optional[np.ndarray] = None,
                 name: str = ""):
        action = np.asarray(action, dtype=np.int64) % ring.p
        if action.ndim != 3 or action.shape[0] != ring.dim or action.shape[1] != action.shape[2]:
            raise SpecError(f"module action must have shape ({ring.dim}, k, k), got {action.shape}")
        self.ring = ring
        self.p = ring.p
        self.action = action
        self.dim = action.shape[1]
        # rows: basis of this module inside an ambient module (if any)
        self.embedding = embedding if embedding is not None else np.eye(self.dim, dtype=np.int64)
        self.name = name or f"M({self.dim})"

    def size(self) -> int:
        return self.p ** self.dim

    def verify(self) -> bool:
        """(m e_i) e_j = m (e_i e_j) and m 1 = m"""
        p = self.p
        lhs = np.einsum("iab,jbc->ijac", self.action, self.action) % p
        rhs = np.einsum("ijk,kac->ijac", self.ring.structure, self.action) % p
        unit_action = np.einsum("i,iab->ab", self.ring.unit, self.action) % p
        return np.array_equal(lhs, rhs) and np.array_equal(unit_action, np.eye(self.dim, dtype=np.int64))

    def action_of(self, r: np.ndarray) -> np.ndarray:
        return np.einsum("i,iab->ab", np.asarray(r, dtype=np.int64), self.action) % self.p

    # ============================================
    # Submodules
    # ============================================

    def generated(self, rows) -> np.ndarray:
        """RREF basis of the submodule generated by rows"""
        rows = fp.as_matrix(rows, self.dim)
        if rows.shape[0] == 0:
            return rows
        images = np.einsum("ga,iab->gib", rows, self.action).reshape(-1, self.dim) % self.p
        return fp.span(images, self.dim, self.p)

    def cyclic(self, m: np.ndarray) -> np.ndarray:
        return self.generated([m])

    def is_submodule(self, basis: np.ndarray) -> bool:
        if basis.shape[0] == 0:
            return True
        return np.array_equal(self.generated(basis), fp.span(basis, self.dim, self.p))

    def restrict(self, basis: np.ndarray, name: str = "") -> "FiniteModule":
        """The submodule spanned by an RREF basis, as a module in its own right"""
        basis = fp.span(basis, self.dim, self.p)
        pivots = fp.pivots_of(basis)
        if basis.shape[0] == 0:
            action = np.zeros((self.ring.dim, 0, 0), dtype=np.int64)
        else:
            images = np.einsum("ga,iab->igb", basis, self.action) % self.p
            # coordinates in an RREF basis are the pivot entries
            action = images[:, :, pivots]
            if not np.array_equal((action @ basis) % self.p, images):
                raise VerificationFailed(f"{name or 'subspace'} is not a submodule")
        return FiniteModule(self.ring, action, (basis @ self.embedding) % self.p, name)

    def to_ambient(self, basis: np.ndarray) -> np.ndarray:
        """Carry a basis in module coordinates into ambient coordinates"""
        n = self.embedding.shape[1]
        if basis.shape[0] == 0:
            return np.zeros((0, n), dtype=np.int64)
        return fp.span((basis @ self.embedding) % self.p, n, self.p)

    def socle(self, radical: np.ndarray) -> np.ndarray:
        """{m : m r = 0 for every r in J(R)}, radical given by ring-coordinate rows"""
        if radical.shape[0] == 0:
            return np.eye(self.dim, dtype=np.int64)
        blocks = [self.action_of(r) for r in radical]
        return fp.nullspace(np.hstack(blocks).T, self.p)

    def __repr__(self):
        return f"FiniteModule({self.name}, dim={self.dim}, over {self.ring.name})"


def regular_module(ring: Algebra) -> FiniteModule:
    """R as a right module over itself"""
    action = np.array([ring.right_matrix(e.coords) for e in ring.basis()])
    return FiniteModule(ring, action, name=f"{ring.name}_{ring.name}")


def submodule_of_regular(ring: Algebra, rows, name: str = "") -> FiniteModule:
    """The right ideal generated by rows, as a module"""
    M = regular_module(ring)
    return M.restrict(M.generated(rows), name)


# ============================================
# Uniform dimension: socle method
# ============================================

def _sorted_elements(basis: np.ndarray, p: int) -> np.ndarray:
    """Projective representatives of the nonzero elements, lexicographically"""
    elems = fp.span_elements(basis, p)
    elems = elems[elems.any(axis=1)]
    if elems.shape[0] == 0:
        return elems
    first = elems[np.arange(elems.shape[0]), np.argmax(elems != 0, axis=1)]
    elems = elems[first == 1]
    order = np.lexsort(elems.T[::-1])
    return elems[order]


def peel_simple_submodules(M: FiniteModule, space: np.ndarray) -> List[np.ndarray]:
    """Split a semisimple submodule into simple summands

    Repeatedly adds the minimal-dimension cyclic submodule independent of
    the summands found so far; ties go to the lexicographically smallest
    generator.
    """
    p = M.p
    check_cap(f"socle peel of {M.name}", p ** space.shape[0], get_settings().limits.max_elements)
    candidates = _sorted_elements(space, p)
    target = space.shape[0]
    summands: List[np.ndarray] = []
    found = np.zeros((0, M.dim), dtype=np.int64)
    cache: Dict[bytes, np.ndarray] = {}

    while found.shape[0] < target:
        pivots = fp.pivots_of(found)
        best = None
        for m in candidates:
            if found.shape[0] and not fp.reduce_vector(m, found, pivots, p).any():
                continue
            key = m.tobytes()
            C = cache.get(key)
            if C is None:
                C = M.cyclic(m)
                cache[key] = C
            if best is not None and C.shape[0] >= best.shape[0]:
                continue
            if fp.rank(np.vstack([found, C]), p) != found.shape[0] + C.shape[0]:
                continue
            best = C
            if C.shape[0] == 1:
                break
        if best is None:
            raise VerificationFailed(f"peel of {M.name} stalled at dimension {found.shape[0]}")
        summands.append(best)
        found = fp.span(np.vstack([found, best]), M.dim, p)
    return summands


def socle_length(M: FiniteModule, radical: np.ndarray) -> int:
    soc = M.socle(radical)
    return len(peel_simple_submodules(M, soc))


# ============================================
# Uniform dimension: brute-force oracle
# ============================================

def cyclic_submodules(M: FiniteModule) -> List[np.ndarray]:
    """All distinct nonzero cyclic submodules"""
    check_cap(f"cyclic submodules of {M.name}", M.size(), get_settings().limits.max_enum)
    seen: Dict[bytes, np.ndarray] = {}
    full = np.eye(M.dim, dtype=np.int64)
    for m in _sorted_elements(full, M.p):
        C = M.cyclic(m)
        seen.setdefault(C.tobytes() + bytes([C.shape[0]]), C)
    return list(seen.values())


def _contains(big: np.ndarray, small: np.ndarray, p: int) -> bool:
    pivots = fp.pivots_of(big)
    return all(not fp.reduce_vector(r, big, pivots, p).any() for r in small)


def oracle_uniform_dimension(M: FiniteModule) -> int:
    """Maximum number of nonzero cyclic submodules with direct sum

    Every cyclic submodule contains a minimal one, and shrinking members
    keeps a family independent, so the search runs over minimal cyclic
    submodules only.
    """
    if M.dim == 0:
        return 0
    p = M.p
    cyclics = cyclic_submodules(M)
    minimal = [C for C in cyclics
               if not any(D.shape[0] < C.shape[0] and _contains(C, D, p) for D in cyclics)]
    minimal.sort(key=lambda C: C.shape[0])
    best = 0

    def extend(start: int, current: np.ndarray, count: int):
        nonlocal best
        best = max(best, count)
        for idx in range(start, len(minimal)):
            if count + (len(minimal) - idx) <= best:
                return
            C = minimal[idx]
            if fp.rank(np.vstack([current, C]), p) == current.shape[0] + C.shape[0]:
                extend(idx + 1, fp.span(np.vstack([current, C]), M.dim, p), count + 1)

    extend(0, np.zeros((0, M.dim), dtype=np.int64), 0)
    return best


def uniform_dimension(M: FiniteModule, radical: Optional[np.ndarray] = None,
                      method: str = "socle") -> int:
    """Uniform dimension of M

    radical: basis rows of J(R) in ring coordinates; computed from the ring
    when omitted. method: "socle", "oracle" or "both" (must agree).
    """
    if method not in ("socle", "oracle", "both"):
        raise SpecError(f"unknown uniform dimension method {method!r}")
    if M.dim == 0:
        return 0

    result = None
    if method in ("socle", "both"):
        if radical is None:
            from structure import jacobson_radical
            radical = jacobson_radical(M.ring).basis
        result = socle_length(M, radical)
    if method in ("oracle", "both"):
        oracle = oracle_uniform_dimension(M)
        if result is not None and oracle != result:
            raise VerificationFailed(
                f"uniform dimension of {M.name}: socle method {result} != oracle {oracle}",
                witness={"socle": result, "oracle": oracle})
        result = oracle
    logger.debug("[Modules] udim(%s) = %d via %s", M.name, result, method)
    return result


# ============================================
# Submodule lattice
# ============================================

def enumerate_submodules(M: FiniteModule) -> List[np.ndarray]:
    """Every submodule (RREF bases in module coordinates), by closing sums of cyclics"""
    p = M.p
    zero = np.zeros((0, M.dim), dtype=np.int64)
    cyclics = cyclic_submodules(M) if M.dim else []
    lattice: Dict[bytes, np.ndarray] = {zero.tobytes() + bytes([0]): zero}
    queue = deque([zero])
    while queue:
        L = queue.popleft()
        for C in cyclics:
            S = fp.span(np.vstack([L, C]), M.dim, p)
            key = S.tobytes() + bytes([S.shape[0]])
            if key not in lattice:
                lattice[key] = S
                queue.append(S)
    result = sorted(lattice.values(), key=lambda S: (S.shape[0], S.tobytes()))
    logger.debug("[Modules] %s has %d submodules", M.name, len(result))
    return result


def is_simple(M: FiniteModule) -> bool:
    """Exhaustive: every nonzero element generates M"""
    if M.dim == 0:
        return False
    check_cap(f"simplicity check of {M.name}", M.size(), get_settings().limits.max_enum)
    full = np.eye(M.dim, dtype=np.int64)
    return all(M.cyclic(m).shape[0] == M.dim for m in _sorted_elements(full, M.p))


def is_chain(spaces: List[np.ndarray], p: int) -> Tuple[bool, Optional[Tuple[int, int]]]:
    """Totally ordered by inclusion? Returns a non-comparable pair otherwise"""
    ordered = sorted(range(len(spaces)), key=lambda i: spaces[i].shape[0])
    for a, b in zip(ordered, ordered[1:]):
        if not _contains(spaces[b], spaces[a], p):
            return False, (a, b)
    return True, None
