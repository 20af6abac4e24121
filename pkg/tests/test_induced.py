import numpy as np
import pytest

from errors import NotAlphaIdeal, NotInIdeal, SpecError
from ideals import Ideal, zero_ideal
from induced import (induced_membership, induced_view, random_member, reduce_mod_induced,
                     rewrite_in_generators)
from series import SkewSeries
from suite import get_context


@pytest.fixture
def t_view(dual_ctx):
    """(t) in F_2[t]/(t^2), generated by t"""
    A = dual_ctx.algebra
    return induced_view(dual_ctx, Ideal(A, [[0, 1]]), [A.element([0, 1])])


def test_rewrite_example(t_view, dual_ctx):
    f = SkewSeries(dual_ctx, [[0, 1], [0, 1], [0, 0]])
    (s,) = rewrite_in_generators(t_view, f)
    assert s == SkewSeries(dual_ctx, [[1, 0], [1, 0], [0, 0]])


def test_membership(t_view, dual_ctx):
    assert induced_membership(t_view, SkewSeries(dual_ctx, [[0, 1], [0, 0], [0, 1]]))
    assert not induced_membership(t_view, SkewSeries.one(dual_ctx, 3))


def test_rewrite_rejects_non_member(t_view, dual_ctx):
    with pytest.raises(NotInIdeal):
        rewrite_in_generators(t_view, SkewSeries.y(dual_ctx, 3))


def test_reduce_mod_induced(t_view, dual_ctx):
    f = SkewSeries(dual_ctx, [[1, 1], [0, 1], [1, 0]])
    g = reduce_mod_induced(t_view, f)
    assert g.context is t_view.quotient_context
    assert g.coeffs.tolist() == [[1], [0], [1]]


def test_membership_under_twist(rng):
    ctx = get_context("M2F2xF2-inner")
    A = ctx.algebra
    I = Ideal(A, np.eye(5, dtype=np.int64)[:4])
    view = induced_view(ctx, I)
    for _ in range(50):
        f = random_member(view, 5, rng)
        assert induced_membership(view, f)
        parts = rewrite_in_generators(view, f)
        total = SkewSeries.zero(ctx, 5)
        for g, s in zip(view.generators, parts):
            total = total + SkewSeries.constant(ctx, g, 5) * s
        assert total == f


def test_quotient_context_is_factor(rng):
    ctx = get_context("M2F2xF2-inner")
    A = ctx.algebra
    view = induced_view(ctx, Ideal(A, [[0, 0, 0, 0, 1]]))
    assert view.quotient.algebra.dim == 4
    assert view.quotient_context.alpha.order == 2
    f = random_member(view, 4, rng)
    assert reduce_mod_induced(view, f).is_zero()


def test_zero_ideal_view(swap_ctx):
    view = induced_view(swap_ctx, zero_ideal(swap_ctx.algebra))
    assert view.generators == []
    assert rewrite_in_generators(view, SkewSeries.zero(swap_ctx, 3)) == []


def test_requires_alpha_ideal(swap_ctx):
    with pytest.raises(NotAlphaIdeal):
        induced_view(swap_ctx, Ideal(swap_ctx.algebra, [[1, 0]]))


def test_generators_must_generate(dual_ctx):
    A = dual_ctx.algebra
    with pytest.raises(SpecError):
        induced_view(dual_ctx, Ideal(A, [[0, 1]]), [A.zero()])
