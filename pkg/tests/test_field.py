import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

import field as fp
from errors import BadField
from field import PrimeField


def matrices(p, max_rows=5, max_cols=5):
    return st.integers(1, max_rows).flatmap(
        lambda r: st.integers(1, max_cols).flatmap(
            lambda c: st.lists(st.lists(st.integers(0, p - 1), min_size=c, max_size=c),
                               min_size=r, max_size=r)))


@pytest.mark.parametrize("p", [2, 3, 5, 97])
def test_prime_field_accepts_primes(p):
    assert PrimeField(p).p == p


@pytest.mark.parametrize("p", [0, 1, 4, 9, 101])
def test_prime_field_rejects(p):
    with pytest.raises(BadField):
        PrimeField(p)


def test_inverse_exhaustive_f7():
    F = PrimeField(7)
    for a in range(1, 7):
        assert (a * F.inv(a)) % 7 == 1


def test_rref_is_canonical():
    p = 3
    A = np.array([[1, 2, 0], [2, 1, 0], [0, 0, 1]])
    B = np.array([[0, 0, 2], [1, 2, 0]])
    assert np.array_equal(fp.span(A, 3, p), fp.span(B, 3, p))


@settings(max_examples=60, deadline=None)
@given(matrices(5))
def test_nullspace_is_killed(rows):
    M = np.array(rows, dtype=np.int64)
    K = fp.nullspace(M, 5)
    assert not ((M @ K.T) % 5).any()
    assert K.shape[0] + fp.rank(M, 5) == M.shape[1]


@settings(max_examples=60, deadline=None)
@given(matrices(3), st.data())
def test_solve_consistent_systems(rows, data):
    M = np.array(rows, dtype=np.int64)
    x = np.array(data.draw(st.lists(st.integers(0, 2), min_size=M.shape[1], max_size=M.shape[1])))
    b = (M @ x) % 3
    sol = fp.solve(M, b, 3)
    assert sol is not None
    assert np.array_equal((M @ sol) % 3, b)


def test_solve_inconsistent():
    M = np.array([[1, 0], [1, 0]])
    assert fp.solve(M, np.array([0, 1]), 2) is None


def test_inverse_matrix(rng):
    for _ in range(50):
        M = rng.integers(0, 5, size=(4, 4))
        inv = fp.inverse(M, 5)
        if fp.rank(M, 5) < 4:
            assert inv is None
        else:
            assert np.array_equal((M @ inv) % 5, np.eye(4, dtype=np.int64))


def test_intersect_coordinate_planes():
    U = np.array([[1, 0, 0], [0, 1, 0]])
    W = np.array([[0, 1, 0], [0, 0, 1]])
    assert np.array_equal(fp.intersect(U, W, 3, 2), np.array([[0, 1, 0]]))


def test_span_elements_counts():
    basis = np.array([[1, 0, 1], [0, 1, 1]])
    elems = fp.span_elements(basis, 3)
    assert elems.shape == (9, 3)
    assert len({row.tobytes() for row in elems}) == 9


def test_all_vectors_lex_order():
    vecs = list(fp.all_vectors(2, 2))
    assert vecs == [(0, 0), (0, 1), (1, 0), (1, 1)]
