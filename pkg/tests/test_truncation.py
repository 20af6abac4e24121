import numpy as np
import pytest

from algebra import is_homomorphism
from errors import NotAlphaIdeal, SpecError, TooLarge
from ideals import Ideal, RightIdeal, zero_ideal
from series import SkewSeries, random_series
from structure import jacobson_radical
from suite import get_context
from truncation import build_truncation, contract, induced_ideal_truncated, induced_module


def test_dimensions_and_unit(swap_ctx):
    T = build_truncation(swap_ctx, 3)
    B = T.algebra
    assert B.dim == 6
    assert B.one().to_list() == [1, 1, 0, 0, 0, 0]


def test_y_relation_in_truncation(swap_ctx):
    T = build_truncation(swap_ctx, 3)
    B = T.algebra
    a = T.embed_A(swap_ctx.algebra.element([1, 0]))
    b = T.embed_A(swap_ctx.algebra.element([0, 1]))
    assert B.multiply(T.y_elem, a) == B.multiply(b, T.y_elem)
    assert B.power(T.y_elem, 3).is_zero()
    assert not B.power(T.y_elem, 2).is_zero()


def test_matches_series_arithmetic(small_ctx, rng):
    N = 3
    T = build_truncation(small_ctx, N)
    B = T.algebra
    for _ in range(100):
        f, g = random_series(small_ctx, N, rng), random_series(small_ctx, N, rng)
        assert B.multiply(T.from_series(f), T.from_series(g)) == T.from_series(f * g)
        assert T.to_series(T.from_series(f)) == f


def test_truncation_of_order_one_is_base(small_ctx):
    T = build_truncation(small_ctx, 1)
    assert np.array_equal(T.algebra.structure, small_ctx.algebra.structure)
    assert T.y_elem.is_zero()


def test_maps_are_homomorphisms(m2_ctx):
    T = build_truncation(m2_ctx, 2)
    assert is_homomorphism(m2_ctx.algebra, T.algebra, T.embedding_matrix())
    assert is_homomorphism(T.algebra, m2_ctx.algebra, T.reduction_matrix())
    assert T.is_y_normal()


@pytest.mark.parametrize("name,N,expected", [("F2xF2-swap", 3, 4), ("F2[t]/t2-id", 2, 3),
                                             ("F3[t]/t2-scale", 2, 3), ("M2F2-inner", 2, 4)])
def test_radical_structural_and_scanned(name, N, expected):
    T = build_truncation(get_context(name), N)
    assert T.radical().dim == expected
    assert jacobson_radical(T.algebra) == T.radical()


def test_truncation_cap(swap_ctx):
    from config import get_settings
    get_settings().limits.max_truncation_bits = 5
    with pytest.raises(TooLarge):
        build_truncation(swap_ctx, 3)


def test_rejects_nonpositive_order(swap_ctx):
    with pytest.raises(SpecError):
        build_truncation(swap_ctx, 0)


def test_from_series_precision_check(swap_ctx):
    T = build_truncation(swap_ctx, 4)
    with pytest.raises(SpecError):
        T.from_series(SkewSeries.one(swap_ctx, 2))


# ============================================
# Induced modules and ideals
# ============================================

def test_induced_module_dimension():
    ctx = get_context("M2F2-inner")
    T = build_truncation(ctx, 3)
    V = RightIdeal(ctx.algebra, [[1, 0, 0, 0], [0, 1, 0, 0]])
    M = induced_module(V, T)
    assert M.dim == 6
    assert M.verify()


def test_induced_ideal_of_factor():
    ctx = get_context("M2F2xF2-id")
    A = ctx.algebra
    I = Ideal(A, [[0, 0, 0, 0, 1]])
    T = build_truncation(ctx, 2)
    induced = induced_ideal_truncated(I, T)
    assert induced.ideal.dim == 2
    assert induced.reduced.algebra.dim == 8
    assert induced.iso.shape == (8, 8)
    assert contract(induced.ideal, T) == I


def test_induced_zero_ideal(swap_ctx):
    T = build_truncation(swap_ctx, 2)
    induced = induced_ideal_truncated(zero_ideal(swap_ctx.algebra), T)
    assert induced.ideal.is_zero()
    assert induced.reduced.algebra.dim == T.algebra.dim


def test_induced_radical_of_dual_numbers(dual_ctx):
    T = build_truncation(dual_ctx, 3)
    t = Ideal(dual_ctx.algebra, [[0, 1]])
    induced = induced_ideal_truncated(t, T)
    assert induced.ideal.dim == 3
    # B_3 / tB_3 = F_2[y]/(y^3)
    assert induced.reduced.algebra.dim == 3
    assert jacobson_radical(induced.reduced.algebra).dim == 2


def test_induced_requires_alpha_ideal(swap_ctx):
    T = build_truncation(swap_ctx, 2)
    with pytest.raises(NotAlphaIdeal):
        induced_ideal_truncated(Ideal(swap_ctx.algebra, [[1, 0]]), T)
