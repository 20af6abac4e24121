import pytest

from alpha_ideals import enumerate_alpha_ideals
from errors import NotSemiprime, SpecError
from ideals import Ideal, RightIdeal, zero_ideal
from modules import enumerate_submodules, is_simple, regular_module, submodule_of_regular
from report import CERTIFIED, FAIL, PASS
from structure import simple_right_ideal_decomposition
from suite import get_context, names
from truncation import build_truncation
from verify import (alpha_prime_transfer, verify_context, verify_induced_corollary,
                    verify_induced_views, verify_rank_theorem, verify_semiprime_witnesses,
                    verify_series_laws, verify_truncation, verify_uniform_lower_bound,
                    verify_uniserial_chain, witness_valuations, zero_product_witness)


def statuses(report):
    return {c.name: c.status for c in report.claims}


def test_series_laws_pass(small_ctx):
    report = verify_series_laws(small_ctx, N=4, samples=20, seed=1)
    assert report.ok, [c.name for c in report.failures]
    assert report.data["precision"] == 4


def test_truncation_claims(swap_ctx):
    report = verify_truncation(swap_ctx, 3, samples=20, seed=1)
    assert report.ok
    assert statuses(report)["radical_structural_matches_scan"] == PASS
    assert report.data["dim_B_N"] == 6


@pytest.mark.parametrize("name,rank", [("F2", 1), ("F2xF2-swap", 2), ("F2xF2-id", 2),
                                       ("M2F2-inner", 2), ("M2F2xF2-inner", 3)])
@pytest.mark.parametrize("N", [2, 3])
def test_rank_theorem(name, rank, N):
    report = verify_rank_theorem(get_context(name), N)
    assert report.ok
    assert report.data["udim_B_N"] == rank
    assert statuses(report)["rank_B_laurent"] == CERTIFIED


def test_rank_theorem_needs_semiprime(dual_ctx):
    with pytest.raises(NotSemiprime):
        verify_rank_theorem(dual_ctx, 2)


@pytest.mark.parametrize("name", ["F2", "F2xF2-swap", "M2F2-inner"])
@pytest.mark.parametrize("N", [1, 2, 3])
def test_uniserial_counts(name, N):
    ctx = get_context(name)
    T = build_truncation(ctx, N)
    for V in simple_right_ideal_decomposition(ctx.algebra):
        report = verify_uniserial_chain(V, T)
        assert report.ok
        assert report.data["submodules"] == N + 1


def simple_right_ideals(A):
    M = regular_module(A)
    return [RightIdeal(A, S) for S in enumerate_submodules(M)
            if S.shape[0] and is_simple(submodule_of_regular(A, S))]


@pytest.mark.parametrize("name,count", [("F2xF2-swap", 2), ("M2F2-id", 3), ("M2F2-inner", 3),
                                        ("M2F2xF2-inner", 4), ("M2F3-inner", 4)])
def test_uniserial_every_simple_right_ideal(name, count):
    ctx = get_context(name)
    simples = simple_right_ideals(ctx.algebra)
    assert len(simples) == count
    for N in (1, 2, 3):
        T = build_truncation(ctx, N)
        for V in simples:
            report = verify_uniserial_chain(V, T)
            assert report.ok
            assert report.data["submodules"] == N + 1


def test_uniserial_rejects_non_simple(m2_ctx):
    T = build_truncation(m2_ctx, 2)
    whole = RightIdeal(m2_ctx.algebra, [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1]])
    report = verify_uniserial_chain(whole, T)
    assert statuses(report)["V_simple"] == FAIL
    assert not report.ok


def test_uniform_lower_bound(dual_ctx):
    socle = RightIdeal(dual_ctx.algebra, [[0, 1]])
    report = verify_uniform_lower_bound(dual_ctx, 3, [socle])
    assert report.ok
    assert report.data["udim_B_N"] == 1


def test_uniform_lower_bound_needs_independent_family(f2xf2):
    from series import SkewContext
    from automorphism import identity_automorphism
    ctx = SkewContext(f2xf2, identity_automorphism(f2xf2))
    I = RightIdeal(f2xf2, [[1, 0]])
    with pytest.raises(SpecError):
        verify_uniform_lower_bound(ctx, 2, [I, I])


# ============================================
# Transfer and corollary
# ============================================

def test_transfer_certifies_swap(swap_ctx):
    report = alpha_prime_transfer(swap_ctx, 3)
    s = statuses(report)
    assert report.data["A_alpha_prime"] is True
    for name in ("B_alpha_prime", "B_laurent_alpha_prime", "B_laurent_prime", "B_prime",
                 "B_semiprime"):
        assert s[name] == CERTIFIED
    assert "falsification_witness" not in s
    assert report.ok


@pytest.mark.parametrize("name", ["M2F2-id", "M2F2-inner"])
def test_transfer_certifies_matrix_algebra(name):
    report = alpha_prime_transfer(get_context(name), 2)
    assert report.data["A_alpha_prime"] is True
    assert statuses(report)["B_prime"] == CERTIFIED
    assert report.ok


def test_transfer_falsifies_identity(id_ctx):
    report = alpha_prime_transfer(id_ctx, 3)
    s = statuses(report)
    assert report.data["A_alpha_prime"] is False
    assert s["falsification_witness"] == PASS
    assert "B_prime" not in s
    assert s["B_semiprime"] == CERTIFIED
    assert report.ok


def test_transfer_non_semiprime(dual_ctx):
    report = alpha_prime_transfer(dual_ctx, 2)
    s = statuses(report)
    assert s["semiprime_contrapositive"] == PASS
    assert "B_semiprime" not in s
    assert report.ok


def test_zero_product_witness(id_ctx, swap_ctx):
    I, J = zero_product_witness(id_ctx.algebra, id_ctx.alpha)
    assert not I.is_zero() and not J.is_zero()
    assert zero_product_witness(swap_ctx.algebra, swap_ctx.alpha) is None


def test_zero_product_witness_without_lattice(id_ctx):
    from config import get_settings
    get_settings().limits.max_enum = 2
    I, J = zero_product_witness(id_ctx.algebra, id_ctx.alpha)
    assert not I.is_zero() and not J.is_zero()


def test_induced_corollary_factor():
    ctx = get_context("M2F2xF2-id")
    I = Ideal(ctx.algebra, [[0, 0, 0, 0, 1]])
    report = verify_induced_corollary(ctx, I, 2)
    assert report.ok
    assert report.data["rank_A_mod_I"] == 2
    assert report.data["udim_B_N_mod_IB_N"] == 2
    s = statuses(report)
    assert s["IB_alpha_prime"] == CERTIFIED
    assert s["IB_semiprime"] == CERTIFIED


def test_induced_corollary_zero_ideal_identity(id_ctx):
    report = verify_induced_corollary(id_ctx, zero_ideal(id_ctx.algebra), 2)
    assert report.ok
    assert report.data["rank_A_mod_I"] == 2
    assert "IB_alpha_prime" not in statuses(report)


def test_induced_corollary_needs_semiprime_quotient(dual_ctx):
    with pytest.raises(NotSemiprime):
        verify_induced_corollary(dual_ctx, zero_ideal(dual_ctx.algebra), 2)


def zero_label(report):
    return next(k for k, basis in report.data["ideal_bases"].items() if not basis)


@pytest.mark.parametrize("name", names())
def test_induced_views_every_alpha_ideal(name):
    ctx = get_context(name)
    report = verify_induced_views(ctx, 3, samples=100, seed=5)
    assert report.ok, [c.name for c in report.failures]
    k = len(enumerate_alpha_ideals(ctx.algebra, ctx.alpha))
    assert report.data["ideals"] == k
    assert report.data["members_per_ideal"] == 100
    s = statuses(report)
    zero = zero_label(report)
    assert s[f"rewrite[{zero}]"] == PASS
    assert s[f"reduction_kernel[{zero}]"] == PASS
    assert sum(n.startswith("rewrite[") for n in s) == k
    assert sum(n.startswith("product[") for n in s) == k * k


def test_induced_views_factor_ideals(id_ctx):
    report = verify_induced_views(id_ctx, 3, samples=100, seed=5)
    s = statuses(report)
    # 0, both factors and the whole ring
    assert report.data["ideals"] == 4
    assert sum(n.startswith("product[") for n in s) == 16
    assert sum(n.startswith("reduction_homomorphism[") for n in s) == 3
    assert report.ok


def test_induced_views_given_ideals(swap_ctx):
    report = verify_induced_views(swap_ctx, 4, [zero_ideal(swap_ctx.algebra)], samples=10, seed=1)
    assert report.data["ideal_bases"] == {"I0": []}
    assert set(statuses(report)) == {"rewrite[I0]", "reduction_unit[I0]",
                                     "reduction_homomorphism[I0]", "reduction_kernel[I0]",
                                     "product[I0*I0]"}
    assert report.ok


# ============================================
# Witnesses and full scenario
# ============================================

def test_witness_valuations():
    assert witness_valuations(2, 4) == [0, 1]
    assert witness_valuations(1, 5) == [0, 1, 2]


def test_semiprime_witnesses(swap_ctx):
    report = verify_semiprime_witnesses(swap_ctx, 6, samples=50, seed=3)
    assert report.ok
    assert report.data["valuations"] == [0, 1, 2]


@pytest.mark.parametrize("name", ["F2xF2-swap", "F2xF2-id", "F2[t]/t2-id", "F3[t]/t2-scale"])
def test_verify_context(name):
    from config import get_settings
    get_settings().samples = 20
    report = verify_context(get_context(name), 2)
    assert report.ok, [c.name for c in report.failures]
    names = {c.name for c in report.claims}
    assert any(n.startswith("alpha_prime.") for n in names)
    assert any(n.startswith("lower_bound.") for n in names)
    assert any(n.startswith("induced_views.") for n in names)
