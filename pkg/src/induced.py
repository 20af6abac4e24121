"""
SKEWRANK - Induced Ideals I[[y; alpha]]

For an alpha-ideal I of A, the series with every coefficient in I form
the two-sided ideal IB = BI of B, and B/IB is (A/I)[[y; alpha]].
"""

import logging
from dataclasses import dataclass, field
from typing import List, Optional

import numpy as np

import field as fp
from algebra import Element
from alpha_ideals import require_alpha_ideal
from errors import NotInIdeal, SpecError, VerificationFailed
from ideals import Ideal, QuotientAlgebra, products, quotient_algebra, right_ideal_generated
from series import SkewContext, SkewSeries, to_right_coefficients

logger = logging.getLogger("skewrank.induced")


@dataclass
class InducedIdealView:
    """IB seen through I and a list of right-ideal generators of I"""
    context: SkewContext
    base_ideal: Ideal
    generators: List[Element]
    _quotient: Optional[QuotientAlgebra] = field(default=None, repr=False)
    _quotient_context: Optional[SkewContext] = field(default=None, repr=False)

    @property
    def quotient(self) -> QuotientAlgebra:
        """A/I with the induced automorphism"""
        if self._quotient is None:
            self._quotient = quotient_algebra(self.context.algebra, self.base_ideal,
                                              alpha=self.context.alpha)
        return self._quotient

    @property
    def quotient_context(self) -> SkewContext:
        if self._quotient_context is None:
            Q = self.quotient
            self._quotient_context = SkewContext(Q.algebra, Q.alpha)
        return self._quotient_context


def induced_view(context: SkewContext, I: Ideal,
                 generators: Optional[List[Element]] = None) -> InducedIdealView:
    """Validated view; generators default to the reduced basis of I"""
    if I.algebra is not context.algebra:
        raise SpecError("ideal does not belong to the context's algebra")
    require_alpha_ideal(I, context.alpha)
    if generators is None:
        generators = I.generators()
    if generators:
        generated = right_ideal_generated(context.algebra, generators)
    else:
        generated = Ideal(context.algebra)
    if generated.basis.shape != I.basis.shape or not np.array_equal(generated.basis, I.basis):
        raise SpecError(f"generators do not generate {I!r} as a right ideal")
    return InducedIdealView(context, I, list(generators))


def induced_membership(view: InducedIdealView, f: SkewSeries) -> bool:
    """All left coefficients in I (checked against the right coefficients too)"""
    I = view.base_ideal
    left = all(I.contains_vec(row) for row in f.coeffs)
    right = all(I.contains(b) for b in to_right_coefficients(f))
    if left != right:
        raise VerificationFailed(f"left and right coefficient tests disagree for {f!r}")
    return left


def rewrite_in_generators(view: InducedIdealView, f: SkewSeries) -> List[SkewSeries]:
    """s_j with f = sum_j g_j s_j, solving h_i = sum_j g_j r_ji degree by degree"""
    if not induced_membership(view, f):
        raise NotInIdeal(f"{f!r} has a coefficient outside {view.base_ideal!r}")
    ctx = view.context
    A = ctx.algebra
    n = A.dim
    gens = fp.as_matrix([g.coords for g in view.generators], n)
    G = gens.shape[0]
    if G == 0:
        return []
    # rows g_j e_l, indexed by j * n + l
    spanning = products(A, gens, np.eye(n, dtype=np.int64))

    solutions = np.zeros((G, f.precision, n), dtype=np.int64)
    for i, h in enumerate(f.coeffs):
        x = fp.solve(spanning.T % ctx.p, h, ctx.p)
        if x is None:
            raise NotInIdeal(f"coefficient {A.format(h)} of y^{i} is not in the span of the generators")
        solutions[:, i, :] = x.reshape(G, n)

    parts = [SkewSeries(ctx, solutions[j]) for j in range(G)]
    total = SkewSeries.zero(ctx, f.precision)
    for g, s in zip(view.generators, parts):
        total = total + SkewSeries.constant(ctx, g, f.precision) * s
    if total != f:
        raise VerificationFailed(f"rewriting of {f!r} in the generators does not verify")
    return parts


def reduce_mod_induced(view: InducedIdealView, f: SkewSeries) -> SkewSeries:
    """Image of f in (A/I)[[y; alpha~]]"""
    Q = view.quotient
    return SkewSeries(view.quotient_context, Q.project_vec(f.coeffs))


def random_member(view: InducedIdealView, N: int, rng: np.random.Generator) -> SkewSeries:
    """Random series with every coefficient in I"""
    basis = view.base_ideal.basis
    ctx = view.context
    if basis.shape[0] == 0:
        return SkewSeries.zero(ctx, N)
    weights = rng.integers(0, ctx.p, size=(N, basis.shape[0]))
    return SkewSeries(ctx, weights @ basis)
