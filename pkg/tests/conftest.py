"""Pytest fixtures for invstab."""

import logging

import pytest

from invstab.arith.finite_field import ExtFieldCtx, PrimeFieldCtx, field_for
from invstab.arith.polyring import Polynomial, t_poly

logging.basicConfig(level=logging.DEBUG)


@pytest.fixture
def f3() -> PrimeFieldCtx:
    """Return F_3."""
    return PrimeFieldCtx(3)


@pytest.fixture
def f5() -> PrimeFieldCtx:
    """Return F_5."""
    return PrimeFieldCtx(5)


@pytest.fixture
def f17() -> PrimeFieldCtx:
    """Return F_17."""
    return PrimeFieldCtx(17)


@pytest.fixture
def f9() -> ExtFieldCtx:
    """Return F_9 = F_3[g]/(g^2 + 1)."""
    ctx = field_for(3, 2)
    assert isinstance(ctx, ExtFieldCtx)
    return ctx


@pytest.fixture
def t() -> Polynomial:
    """Return the polynomial t over Q."""
    return t_poly([0, 1])
