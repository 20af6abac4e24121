"""
SKEWRANK - Structure Theory of Finite Algebras

Radical, semiprimeness, prime ideals, simple right ideal decomposition and
Goldie rank. In this class of rings semiprime means semisimple, so Goldie
rank is the number of simple summands of the regular right module.
"""

import logging
from typing import Dict, List, Optional

import numpy as np

import field as fp
from algebra import Algebra, Element
from config import get_settings
from errors import NotSemiprime, VerificationFailed, check_cap
from ideals import (Ideal, RightIdeal, Subspace, ideal_power, is_two_sided,
                    products, quotient_algebra)
from modules import peel_simple_submodules, regular_module, uniform_dimension

logger = logging.getLogger("skewrank.structure")


# ============================================
# Jacobson radical
# ============================================

def _right_ideal_is_nilpotent(A: Algebra, x: np.ndarray) -> bool:
    """Is (xA)^k = 0 for some k?"""
    eye = np.eye(A.dim, dtype=np.int64)
    base = fp.span(products(A, x.reshape(1, -1), eye), A.dim, A.p)
    power = base
    for _ in range(A.dim + 1):
        if power.shape[0] == 0:
            return True
        nxt = fp.span(products(A, power, base), A.dim, A.p)
        if nxt.shape[0] == power.shape[0]:
            return False
        power = nxt
    return power.shape[0] == 0


def is_quasi_regular(A: Algebra, x: Element) -> bool:
    """1 - xy is a unit for every y (definition of radical membership)"""
    one = A.one()
    return all(A.is_unit(one - x * y) is not None for y in A.elements())


def jacobson_radical(A: Algebra, verify: bool = True) -> Ideal:
    """Elementwise scan: x is in J(A) iff the right ideal xA is nilpotent

    For a finite algebra this is the same set as {x : 1 - xy unit for all y}.
    Coset representatives already rejected are skipped.
    """
    check_cap(f"radical scan of {A.name}", A.size(), get_settings().limits.max_elements)
    p = A.p
    found = np.zeros((0, A.dim), dtype=np.int64)
    rejected = set()
    for coords in fp.all_vectors(A.dim, p):
        v = np.asarray(coords, dtype=np.int64)
        reduced = fp.reduce_vector(v, found, fp.pivots_of(found), p)
        if not reduced.any():
            continue
        key = reduced.tobytes()
        if key in rejected:
            continue
        if _right_ideal_is_nilpotent(A, reduced):
            found = fp.span(np.vstack([found, reduced]), A.dim, p)
        else:
            rejected.add(key)
    J = Ideal(A, found)

    if verify:
        if not is_two_sided(J):
            raise VerificationFailed(f"radical of {A.name} is not a two-sided ideal", witness=J.to_lists())
        if not ideal_power(J, A.dim).is_zero():
            raise VerificationFailed(f"radical of {A.name} is not nilpotent", witness=J.to_lists())
        if not J.is_zero():
            Q = quotient_algebra(A, J).algebra
            if not jacobson_radical(Q, verify=False).is_zero():
                raise VerificationFailed(f"{A.name} modulo its radical is not semisimple")
    logger.debug("[Structure] J(%s) has dimension %d", A.name, J.dim)
    return J


def quasi_regular_radical(A: Algebra) -> Ideal:
    """Radical by the quasi-regularity definition (small algebras only)"""
    check_cap(f"quasi-regularity scan of {A.name}", A.size() ** 2, get_settings().limits.max_elements)
    members = [x.coords for x in A.elements() if is_quasi_regular(A, x)]
    J = Ideal(A, members)
    if len(members) != A.p ** J.dim:
        raise VerificationFailed(f"quasi-regular elements of {A.name} do not form a subspace")
    return J


# ============================================
# Semiprimeness
# ============================================

def has_square_zero_element(A: Algebra) -> Optional[Element]:
    """Nonzero x with xAx = 0, if any"""
    check_cap(f"xAx scan of {A.name}", A.size(), get_settings().limits.max_enum)
    eye = np.eye(A.dim, dtype=np.int64)
    for x in A.elements():
        if x.is_zero():
            continue
        xa = products(A, x.coords.reshape(1, -1), eye)
        if not products(A, xa, x.coords.reshape(1, -1)).any():
            return x
    return None


def is_semiprime(A: Algebra) -> bool:
    """J(A) = 0; cross-checked against the xAx = 0 definition on small algebras"""
    result = jacobson_radical(A).is_zero()
    if A.size() <= get_settings().limits.max_enum:
        witness = has_square_zero_element(A)
        if (witness is None) != result:
            raise VerificationFailed(
                f"semiprimeness of {A.name}: radical test {result}, xAx test {witness is None}",
                witness=None if witness is None else witness.to_list())
    return result


def is_semiprime_ideal(A: Algebra, I: Ideal) -> bool:
    """A/I semiprime"""
    return is_semiprime(quotient_algebra(A, I).algebra)


def require_semiprime(A: Algebra):
    if not is_semiprime(A):
        raise NotSemiprime(f"{A.name} is not semiprime")


# ============================================
# Center and prime ideals
# ============================================

def center(A: Algebra) -> Subspace:
    """{z : z e_i = e_i z for all i}"""
    blocks = [A.right_matrix(e.coords) - A.left_matrix(e.coords) for e in A.basis()]
    return Subspace(A, fp.nullspace(np.hstack(blocks).T % A.p, A.p))


def central_idempotents(A: Algebra) -> List[Element]:
    """Nonzero idempotents of the center, by exhaustive search"""
    Z = center(A)
    check_cap(f"center of {A.name}", A.p ** Z.dim, get_settings().limits.max_center)
    result = []
    for v in Z.elements():
        if v.any() and np.array_equal(A.mul_vec(v, v), v):
            result.append(Element(A, v))
    return result


def primitive_central_idempotents(A: Algebra) -> List[Element]:
    idempotents = central_idempotents(A)
    primitive = []
    for e in idempotents:
        smaller = [f for f in idempotents if f != e and (f * e) == f]
        if not smaller:
            primitive.append(e)
    return primitive


def enumerate_prime_ideals(A: Algebra) -> List[Ideal]:
    """Preimages of the maximal ideals Q(1 - e) of Q = A/J(A), one per block"""
    J = jacobson_radical(A)
    Q = quotient_algebra(A, J)
    one = Q.algebra.one()
    primes: Dict[bytes, Ideal] = {}
    for e in primitive_central_idempotents(Q.algebra):
        complement = one - e
        block_kernel = products(Q.algebra, np.eye(Q.algebra.dim, dtype=np.int64),
                                complement.coords.reshape(1, -1))
        rows = np.vstack([J.basis, (block_kernel @ Q.lift) % A.p])
        P = Ideal(A, rows)
        primes.setdefault(P.key, P)
    result = list(primes.values())
    logger.debug("[Structure] %s has %d prime ideals", A.name, len(result))
    return result


# ============================================
# Decomposition and Goldie rank
# ============================================

def simple_right_ideal_decomposition(A: Algebra) -> List[RightIdeal]:
    """A = V_1 + ... + V_d (direct) with each V_i a simple right ideal"""
    require_semiprime(A)
    M = regular_module(A)
    summands = peel_simple_submodules(M, np.eye(A.dim, dtype=np.int64))
    result = [RightIdeal(A, S) for S in summands]
    if sum(V.dim for V in result) != A.dim:
        raise VerificationFailed(f"decomposition of {A.name} does not exhaust the algebra")
    return result


def goldie_rank(A: Algebra) -> int:
    """Number of simple summands; cross-checked against the uniform dimension"""
    d = len(simple_right_ideal_decomposition(A))
    settings = get_settings()
    method = "both" if settings.oracle and A.size() <= settings.limits.max_enum else "socle"
    udim = uniform_dimension(regular_module(A), radical=np.zeros((0, A.dim), dtype=np.int64),
                             method=method)
    if udim != d:
        raise VerificationFailed(f"goldie rank of {A.name}: {d} summands but uniform dimension {udim}",
                                 witness={"summands": d, "udim": udim})
    return d
