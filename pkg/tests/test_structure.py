import numpy as np
import pytest

from algebra import direct_product, field_algebra, matrix_algebra, truncated_polynomial
from errors import NotProper, NotSemiprime, TooLarge
from ideals import (Ideal, ideal_generated, ideal_intersection, ideal_power, ideal_product,
                    ideal_sum, is_direct_sum, is_two_sided, membership, quotient_algebra,
                    whole_ideal, zero_ideal)
from modules import is_simple, submodule_of_regular
from structure import (center, enumerate_prime_ideals, goldie_rank, has_square_zero_element,
                       is_semiprime, jacobson_radical, quasi_regular_radical,
                       simple_right_ideal_decomposition)


def test_radical_dual_numbers(dual):
    J = jacobson_radical(dual)
    assert J == Ideal(dual, [[0, 1]])


@pytest.mark.parametrize("make", [lambda: matrix_algebra(2, 2),
                                  lambda: direct_product(field_algebra(2), field_algebra(2)),
                                  lambda: field_algebra(3)])
def test_radical_zero_for_semisimple(make):
    A = make()
    assert jacobson_radical(A).is_zero()
    assert is_semiprime(A)


@pytest.mark.parametrize("make", [lambda: truncated_polynomial(2, 2),
                                  lambda: truncated_polynomial(3, 3),
                                  lambda: matrix_algebra(2, 2),
                                  lambda: direct_product(field_algebra(2), truncated_polynomial(2, 2))])
def test_radical_matches_quasi_regular_definition(make):
    A = make()
    assert jacobson_radical(A) == quasi_regular_radical(A)


def test_radical_is_nilpotent():
    A = direct_product(matrix_algebra(2, 2), truncated_polynomial(2, 3))
    J = jacobson_radical(A)
    assert J.dim == 2
    assert ideal_power(J, 3).is_zero()
    assert jacobson_radical(quotient_algebra(A, J).algebra).is_zero()


def test_semiprime_matches_square_zero_scan(dual):
    assert not is_semiprime(dual)
    assert has_square_zero_element(dual) is not None


def test_radical_scan_cap():
    from config import get_settings
    get_settings().limits.max_elements = 8
    with pytest.raises(TooLarge):
        jacobson_radical(matrix_algebra(2, 2))


def test_primes_of_product(f2xf2):
    primes = enumerate_prime_ideals(f2xf2)
    assert set(primes) == {Ideal(f2xf2, [[1, 0]]), Ideal(f2xf2, [[0, 1]])}


def test_primes_of_simple_and_local(m2f2, dual):
    assert enumerate_prime_ideals(m2f2) == [zero_ideal(m2f2)]
    assert enumerate_prime_ideals(dual) == [Ideal(dual, [[0, 1]])]


def test_center_of_matrix_algebra(m2f2):
    Z = center(m2f2)
    assert Z.dim == 1
    assert Z.contains(m2f2.one())


@pytest.mark.parametrize("make,d", [(lambda: field_algebra(3), 1),
                                    (lambda: matrix_algebra(2, 2), 2),
                                    (lambda: direct_product(field_algebra(2), field_algebra(2)), 2),
                                    (lambda: direct_product(matrix_algebra(2, 3), field_algebra(3)), 3)])
def test_goldie_rank(make, d):
    assert goldie_rank(make()) == d


def test_decomposition_is_direct_and_simple(m2f2):
    Vs = simple_right_ideal_decomposition(m2f2)
    assert len(Vs) == 2
    assert is_direct_sum(Vs)
    assert sum(V.dim for V in Vs) == 4
    for V in Vs:
        assert is_simple(submodule_of_regular(m2f2, V.basis))
    # lexicographically first generator e22 comes before e11 (coordinates 0001 < 1000)
    assert Vs[0].basis.tolist() == [[0, 0, 1, 0], [0, 0, 0, 1]]


def test_decomposition_requires_semiprime(dual):
    with pytest.raises(NotSemiprime):
        simple_right_ideal_decomposition(dual)


def test_ideal_ops(f2xf2, dual):
    a = Ideal(f2xf2, [[1, 0]])
    b = Ideal(f2xf2, [[0, 1]])
    assert ideal_product(a, b).is_zero()
    assert ideal_sum(a, b) == whole_ideal(f2xf2)
    assert ideal_intersection(a, b).is_zero()
    t = Ideal(dual, [[0, 1]])
    assert ideal_product(t, t).is_zero()


def test_membership(f2xf2, dual):
    a = Ideal(f2xf2, [[1, 0]])
    assert membership(f2xf2.element([1, 0]), a)
    assert not membership(f2xf2.element([1, 1]), a)
    t = Ideal(dual, [[0, 1]])
    assert membership(dual.element([0, 1]), t)
    assert membership(dual.zero(), zero_ideal(dual))
    assert not membership(dual.one(), t)


def test_ideal_generated_two_sided(m2f2):
    I = ideal_generated(m2f2, [[0, 1, 0, 0]])
    assert I.is_whole()
    assert is_two_sided(I)


def test_quotient_by_radical(dual):
    Q = quotient_algebra(dual, Ideal(dual, [[0, 1]]))
    assert Q.algebra.dim == 1
    assert Q.project(dual.element([1, 1])) == Q.algebra.one()


def test_quotient_by_zero_is_identity(m2f2):
    Q = quotient_algebra(m2f2, zero_ideal(m2f2))
    assert np.array_equal(Q.projection, np.eye(4, dtype=np.int64))


def test_quotient_by_whole(f2xf2):
    with pytest.raises(NotProper):
        quotient_algebra(f2xf2, whole_ideal(f2xf2))
