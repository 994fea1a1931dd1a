"""Shared fixtures: expensive exhaustive sweeps computed once per session."""

import pytest

from revwiener.enumeration import _min2_diam4_specs, rank_trees


@pytest.fixture(scope="session")
def rankings():
    """Three smallest reverse-Wiener values over all free trees, n = 2..18."""
    return {n: rank_trees(n, 3) for n in range(2, 19)}


@pytest.fixture(scope="session")
def diam4_minima():
    """Two smallest values over diameter-4 classes with spec ties, n = 5..70."""
    return {n: _min2_diam4_specs(n) for n in range(5, 71)}
