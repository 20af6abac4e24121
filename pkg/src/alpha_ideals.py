"""
SKEWRANK - Alpha-Ideals and Alpha-Primeness

An alpha-ideal is a two-sided ideal I with alpha(I) = I. A proper
alpha-ideal is alpha-prime when a product of two alpha-ideals lies in I
only if one of them does. Two independent tests:
- definition: brute force over the alpha-ideal lattice
- orbits: I is the intersection of the alpha-orbit of a prime ideal
"""

import logging
from collections import deque
from typing import Dict, List, Optional, Tuple

import numpy as np

import field as fp
from algebra import Algebra, Element
from automorphism import Automorphism
from config import get_settings
from errors import AlgebraMismatch, NotAlphaIdeal, NotProper, SpecError, VerificationFailed, check_cap
from ideals import Ideal, ideal_generated, ideal_product, ideal_sum, intersect_all, zero_ideal
from structure import enumerate_prime_ideals

logger = logging.getLogger("skewrank.alpha")


def alpha_image(I: Ideal, alpha: Automorphism, k: int = 1) -> Ideal:
    if I.algebra is not alpha.algebra:
        raise AlgebraMismatch("ideal and automorphism live on different algebras")
    return Ideal(I.algebra, alpha.apply_rows(I.basis, k))


def is_alpha_ideal(I: Ideal, alpha: Automorphism) -> bool:
    return alpha_image(I, alpha) == I


def require_alpha_ideal(I: Ideal, alpha: Automorphism):
    if not is_alpha_ideal(I, alpha):
        raise NotAlphaIdeal(f"{I!r} is not stable under {alpha.name}", witness=I.to_lists())


def alpha_orbit(I: Ideal, alpha: Automorphism) -> List[Ideal]:
    """I, alpha(I), alpha^2(I), ... until the first repetition"""
    orbit = [I]
    seen = {I.key}
    current = alpha_image(I, alpha)
    while current.key not in seen:
        orbit.append(current)
        seen.add(current.key)
        current = alpha_image(current, alpha)
    return orbit


def orbit_intersection(I: Ideal, alpha: Automorphism) -> Ideal:
    return intersect_all(alpha_orbit(I, alpha))


def alpha_ideal_generated(A: Algebra, alpha: Automorphism, gens) -> Ideal:
    """Smallest alpha-ideal containing gens"""
    rows = fp.as_matrix([g.coords if isinstance(g, Element) else g for g in gens], A.dim)
    images = np.vstack([alpha.apply_rows(rows, k) for k in range(alpha.order)])
    return ideal_generated(A, images)


# ============================================
# Alpha-ideal lattice (brute force)
# ============================================

def enumerate_alpha_ideals(A: Algebra, alpha: Automorphism) -> List[Ideal]:
    """Every alpha-ideal, as sums of principal alpha-ideals"""
    check_cap(f"alpha-ideal lattice of {A.name}", A.size(), get_settings().limits.max_enum)
    principal: Dict[bytes, Ideal] = {}
    for x in A.elements():
        if x.is_zero():
            continue
        P = alpha_ideal_generated(A, alpha, [x.coords])
        principal.setdefault(P.key, P)

    zero = zero_ideal(A)
    lattice: Dict[bytes, Ideal] = {zero.key: zero}
    queue = deque([zero])
    while queue:
        L = queue.popleft()
        for P in principal.values():
            S = ideal_sum(L, P)
            if S.key not in lattice:
                lattice[S.key] = S
                queue.append(S)
    result = sorted(lattice.values(), key=lambda I: (I.dim, I.key))
    logger.debug("[Alpha] %s has %d %s-ideals", A.name, len(result), alpha.name)
    return result


def alpha_prime_witness(I: Ideal, alpha: Automorphism,
                        lattice: Optional[List[Ideal]] = None) -> Optional[Tuple[Ideal, Ideal]]:
    """alpha-ideals I', J' not inside I with I'J' inside I, if any"""
    if lattice is None:
        lattice = enumerate_alpha_ideals(I.algebra, alpha)
    outside = [K for K in lattice if not I.contains_subspace(K)]
    for K in outside:
        for L in outside:
            if I.contains_subspace(ideal_product(K, L)):
                return K, L
    return None


def is_alpha_prime_by_definition(I: Ideal, alpha: Automorphism) -> bool:
    _require_proper_alpha(I, alpha)
    return alpha_prime_witness(I, alpha) is None


def alpha_prime_ideals(A: Algebra, alpha: Automorphism) -> List[Ideal]:
    """Intersections of alpha-orbits of prime ideals"""
    found: Dict[bytes, Ideal] = {}
    for P in enumerate_prime_ideals(A):
        W = orbit_intersection(P, alpha)
        found.setdefault(W.key, W)
    return sorted(found.values(), key=lambda I: (I.dim, I.key))


def is_alpha_prime_by_orbits(I: Ideal, alpha: Automorphism) -> bool:
    _require_proper_alpha(I, alpha)
    return any(W == I for W in alpha_prime_ideals(I.algebra, alpha))


def _require_proper_alpha(I: Ideal, alpha: Automorphism):
    require_alpha_ideal(I, alpha)
    if I.is_whole():
        raise NotProper("the whole algebra is never alpha-prime")


def is_alpha_prime(I: Ideal, alpha: Automorphism, method: str = "auto") -> bool:
    """alpha-primeness of I

    method: "definition", "orbits", "both" (must agree), or "auto" (both when
    the alpha-ideal lattice is enumerable, otherwise orbits).
    """
    if method not in ("auto", "definition", "orbits", "both"):
        raise SpecError(f"unknown alpha-prime method {method!r}")
    _require_proper_alpha(I, alpha)
    if method == "auto":
        enumerable = I.algebra.size() <= get_settings().limits.max_enum
        method = "both" if enumerable else "orbits"

    if method == "definition":
        return is_alpha_prime_by_definition(I, alpha)
    by_orbits = is_alpha_prime_by_orbits(I, alpha)
    if method == "orbits":
        return by_orbits
    by_definition = is_alpha_prime_by_definition(I, alpha)
    if by_definition != by_orbits:
        raise VerificationFailed(
            f"alpha-primeness of {I!r}: definition says {by_definition}, orbits say {by_orbits}",
            witness=I.to_lists())
    return by_definition
