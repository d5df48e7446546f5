"""Shared fixtures.

Sieve tables dominate setup cost, so the two sizes used across the suite
are built once per session.  ``table_small`` covers every window touched
by the increment sweeps (top index 1390 at n = 500); ``table_million``
backs the large-scale descriptive checks.
"""

import pytest

from primebound import primes


@pytest.fixture(scope="session")
def table_small():
    return primes.build_table(2000)


@pytest.fixture(scope="session")
def table_million():
    return primes.build_table(1_000_000)
