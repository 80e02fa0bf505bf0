from __future__ import annotations

import pytest

from junior_resolve import GroupAction, junior_simplex


@pytest.fixture(scope="session")
def z11():
    """The running example: C^3/Z_11 with weights (1, 2, 8)."""
    return junior_simplex(GroupAction(11, 2, 8))


@pytest.fixture(scope="session")
def z3():
    """The smallest isolated case: C^3/Z_3 with weights (1, 1, 1)."""
    return junior_simplex(GroupAction(3, 1, 1))


@pytest.fixture(scope="session")
def z9():
    """Degenerate-sector example: C^3/Z_9 with weights (1, 1, 7); the
    sector 3/9 has index not coprime to 9."""
    return junior_simplex(GroupAction(9, 1, 7))
