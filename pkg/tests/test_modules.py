import numpy as np
import pytest

from errors import TooLarge, VerificationFailed
from ideals import RightIdeal
from modules import (cyclic_submodules, enumerate_submodules, is_chain, is_simple,
                     oracle_uniform_dimension, regular_module, submodule_of_regular,
                     uniform_dimension)
from structure import jacobson_radical
from suite import get_context
from truncation import build_truncation, induced_module


def test_regular_module_axioms(m2f2, dual):
    assert regular_module(m2f2).verify()
    assert regular_module(dual).verify()


def test_udim_local_ring(dual):
    assert uniform_dimension(regular_module(dual), method="both") == 1


def test_udim_product(f2xf2):
    assert uniform_dimension(regular_module(f2xf2), method="both") == 2


def test_udim_truncation_swap(swap_ctx):
    T = build_truncation(swap_ctx, 3)
    M = T.regular_module()
    assert uniform_dimension(M, radical=T.radical_basis(), method="both") == 2
    soc = M.socle(T.radical_basis())
    # socle is A y^2
    assert np.array_equal(soc, T.degree_block(np.eye(2, dtype=np.int64), 2))


@pytest.mark.parametrize("name", ["F2", "F2xF2-swap", "F2xF2-id", "F2[t]/t2-id",
                                  "M2F2-inner", "F3[t]/t2-scale"])
@pytest.mark.parametrize("N", [1, 2, 3])
def test_socle_agrees_with_oracle(name, N):
    T = build_truncation(get_context(name), N)
    M = T.regular_module()
    if M.size() > 4096:
        pytest.skip("module too large for the oracle")
    radical = T.radical_basis()
    assert uniform_dimension(M, radical=radical, method="socle") == oracle_uniform_dimension(M)


def test_oracle_on_induced_modules(m2_ctx):
    T = build_truncation(m2_ctx, 2)
    V = RightIdeal(m2_ctx.algebra, [[1, 0, 0, 0], [0, 1, 0, 0]])
    M = induced_module(V, T)
    assert M.dim == 4
    assert uniform_dimension(M, radical=T.radical_basis(), method="both") == 1


def test_submodules_of_power_series_over_field():
    T = build_truncation(get_context("F2"), 3)
    subs = enumerate_submodules(T.regular_module())
    assert len(subs) == 4
    assert is_chain(subs, 2)[0]


def test_submodules_of_product_not_chain(f2xf2):
    subs = enumerate_submodules(regular_module(f2xf2))
    assert len(subs) == 4
    chain, pair = is_chain(subs, 2)
    assert not chain and pair is not None


def test_simple_right_ideal(m2f2):
    assert is_simple(submodule_of_regular(m2f2, [[1, 0, 0, 0]]))
    assert not is_simple(regular_module(m2f2))


def test_cyclic_submodules_distinct(m2f2):
    cyclics = cyclic_submodules(regular_module(m2f2))
    keys = {C.tobytes() + bytes([C.shape[0]]) for C in cyclics}
    assert len(keys) == len(cyclics)


def test_oracle_cap():
    from config import get_settings
    get_settings().limits.max_enum = 8
    T = build_truncation(get_context("F2"), 4)
    with pytest.raises(TooLarge):
        oracle_uniform_dimension(T.regular_module())


def test_restrict_rejects_non_submodule(m2f2):
    M = regular_module(m2f2)
    with pytest.raises(VerificationFailed):
        M.restrict(np.array([[0, 1, 0, 0]]))


def test_socle_of_semisimple_is_whole(m2f2):
    J = jacobson_radical(m2f2)
    assert regular_module(m2f2).socle(J.basis).shape[0] == 4
