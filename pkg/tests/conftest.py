import numpy as np
import pytest


@pytest.fixture
def random_coeff_lists():
    """Factory for seeded per-axis complex Hermite coefficient lists."""

    def make(rng: np.random.Generator, max_len: int = 5) -> "list[list[complex]]":
        out = []
        for _ in range(3):
            k = int(rng.integers(1, max_len))
            out.append((rng.normal(size=k) + 1j * rng.normal(size=k)).tolist())
        return out

    return make
