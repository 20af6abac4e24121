"""Shared fixtures: the algebras and contexts of the built-in catalogue"""

import sys
from pathlib import Path

import numpy as np
import pytest

sys.path.insert(0, str(Path(__file__).parent.parent / "src"))

from algebra import direct_product, field_algebra, matrix_algebra, truncated_polynomial
from automorphism import identity_automorphism, swap_automorphism
from config import reset_settings
from series import SkewContext
from suite import get_context


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: full built-in suite run")


@pytest.fixture(autouse=True)
def fresh_settings(monkeypatch):
    monkeypatch.delenv("SKEWRANK_CONFIG", raising=False)
    monkeypatch.delenv("SKEWRANK_MAX_ENUM", raising=False)
    reset_settings()
    yield
    reset_settings()


@pytest.fixture
def rng():
    return np.random.default_rng(20240601)


@pytest.fixture
def f2():
    return field_algebra(2)


@pytest.fixture
def f2xf2():
    return direct_product(field_algebra(2), field_algebra(2))


@pytest.fixture
def m2f2():
    return matrix_algebra(2, 2)


@pytest.fixture
def dual():
    """F_2[t]/(t^2)"""
    return truncated_polynomial(2, 2)


@pytest.fixture
def swap_ctx(f2xf2):
    return SkewContext(f2xf2, swap_automorphism(f2xf2))


@pytest.fixture
def id_ctx(f2xf2):
    return SkewContext(f2xf2, identity_automorphism(f2xf2))


@pytest.fixture
def dual_ctx(dual):
    return SkewContext(dual, identity_automorphism(dual))


@pytest.fixture
def m2_ctx(m2f2):
    return SkewContext(m2f2, identity_automorphism(m2f2))


@pytest.fixture(params=["F2", "F3", "F2xF2-swap", "F2xF2-id", "M2F2-id", "M2F2-inner",
                        "F2[t]/t2-id", "F3[t]/t2-scale"])
def small_ctx(request):
    return get_context(request.param)
