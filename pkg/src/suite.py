"""
SKEWRANK - Built-in Test Contexts

The catalogue of (A, alpha) pairs used by selftest and the test suite.
"""

import logging
from typing import Callable, Dict, List, Optional

import numpy as np

from algebra import Algebra, Element, direct_product, field_algebra, matrix_algebra, truncated_polynomial
from automorphism import (Automorphism, block_automorphism, identity_automorphism,
                          inner_automorphism, swap_automorphism)
from config import get_settings
from errors import SpecError
from report import Report
from series import SkewContext

logger = logging.getLogger("skewrank.suite")


def _unipotent(A: Algebra) -> Element:
    """[[1, 1], [0, 1]] in M_2(F_p)"""
    return Element(A, [1, 1, 0, 1])


def _matrix_inner(k: int, p: int) -> SkewContext:
    A = matrix_algebra(k, p)
    return SkewContext(A, inner_automorphism(A, _unipotent(A), "inn"))


def _identity(A: Algebra) -> SkewContext:
    return SkewContext(A, identity_automorphism(A))


def _f2xf2_swap() -> SkewContext:
    A = direct_product(field_algebra(2), field_algebra(2))
    return SkewContext(A, swap_automorphism(A))


def _m2xf_inner(p: int) -> SkewContext:
    M = matrix_algebra(2, p)
    F = field_algebra(p)
    A = direct_product(M, F)
    return SkewContext(A, block_automorphism(A, inner_automorphism(M, _unipotent(M), "inn"),
                                             identity_automorphism(F)))


def _scaled_dual_numbers() -> SkewContext:
    """F_3[t]/(t^2) with t -> 2t"""
    A = truncated_polynomial(3, 2)
    return SkewContext(A, Automorphism(A, np.diag([1, 2]), "t->2t"))


CATALOGUE: Dict[str, Callable[[], SkewContext]] = {
    "F2": lambda: _identity(field_algebra(2)),
    "F3": lambda: _identity(field_algebra(3)),
    "F2xF2-swap": _f2xf2_swap,
    "F2xF2-id": lambda: _identity(direct_product(field_algebra(2), field_algebra(2))),
    "M2F2-id": lambda: _identity(matrix_algebra(2, 2)),
    "M2F2-inner": lambda: _matrix_inner(2, 2),
    "M2F3-id": lambda: _identity(matrix_algebra(2, 3)),
    "M2F3-inner": lambda: _matrix_inner(2, 3),
    "M2F2xF2-id": lambda: _identity(direct_product(matrix_algebra(2, 2), field_algebra(2))),
    "M2F2xF2-inner": lambda: _m2xf_inner(2),
    "M2F3xF3-id": lambda: _identity(direct_product(matrix_algebra(2, 3), field_algebra(3))),
    "F2[t]/t2-id": lambda: _identity(truncated_polynomial(2, 2)),
    "F3[t]/t2-scale": _scaled_dual_numbers,
    "M2F2xF2[t]/t2-id": lambda: _identity(direct_product(matrix_algebra(2, 2),
                                                         truncated_polynomial(2, 2))),
}

SEMIPRIME = ["F2", "F3", "F2xF2-swap", "F2xF2-id", "M2F2-id", "M2F2-inner", "M2F3-id",
             "M2F3-inner", "M2F2xF2-id", "M2F2xF2-inner", "M2F3xF3-id"]


def names() -> List[str]:
    return list(CATALOGUE)


def get_context(name: str) -> SkewContext:
    if name not in CATALOGUE:
        raise SpecError(f"unknown built-in context {name!r}; choose from {', '.join(CATALOGUE)}")
    ctx = CATALOGUE[name]()
    ctx.name = name
    return ctx


def run_selftest(names_: Optional[List[str]] = None, N: Optional[int] = None,
                 rank_precisions=(2, 3, 4)) -> Report:
    """Every scenario on every built-in context, plus rank equality for N in rank_precisions"""
    from verify import verify_context, verify_rank_theorem

    settings = get_settings()
    N = N or settings.verify_precision
    report = Report("selftest")
    for name in names_ or names():
        ctx = get_context(name)
        logger.info("[Suite] %s", name)
        report.extend(verify_context(ctx, N), f"{name}.")
        if name in SEMIPRIME:
            for n in rank_precisions:
                if n != N:
                    report.extend(verify_rank_theorem(ctx, n), f"{name}.rank_N{n}.")
    report.data["contexts"] = len(names_ or names())
    return report.finish()
