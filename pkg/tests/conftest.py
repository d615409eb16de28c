"""Shared vectorized oracles for the test suite."""

import numpy as np
import pytest


def eps_table(n_max: int) -> np.ndarray:
    """Signs (-1)**popcount(n) for n = 0..n_max, via an xor parity fold.

    Independent of the library's bit_count route, so it can serve as an
    oracle for it.
    """
    v = np.arange(n_max + 1, dtype=np.uint64)
    for shift in (32, 16, 8, 4, 2, 1):
        v ^= v >> np.uint64(shift)
    return (1 - 2 * (v & np.uint64(1)).astype(np.int64)).astype(np.int64)


@pytest.fixture(scope="session")
def eps_1m() -> np.ndarray:
    """Sign table for n = 0..10**6, shared across tests."""
    return eps_table(10**6)
