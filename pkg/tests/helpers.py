"""Shared helpers for the test suite."""

from __future__ import annotations

import math
from pathlib import Path

import numpy as np

DATA_DIR = Path(__file__).parent / "data"
GOLDEN_AFGA = DATA_DIR / "golden_afga.txt"

# fields printed as 0.0000e+00 or drowned in roundoff on either side
ZERO_FLOOR = 1e-12


def printed_ulp(v: float) -> float:
    """Weight of the last digit of v as printed in %.4e format."""
    return 10.0 ** (math.floor(math.log10(abs(v))) - 4)


def assert_matches_printed(ours: float, ref: float, context: str = "") -> None:
    """ours must agree with the 5-digit printed reference to its last digit +/-1."""
    if abs(ref) < ZERO_FLOOR and abs(ours) < ZERO_FLOOR:
        return
    tol = 1.0000001 * printed_ulp(ref)
    assert abs(ours - ref) <= tol, (
        f"{context}: {ours!r} vs printed {ref!r} (tol {tol:.2e})"
    )


def assert_tables_match(ours: np.ndarray, ref: np.ndarray) -> None:
    """Compare parsed schedule tables: exact j column, printed-digit floats."""
    assert ours.shape == ref.shape, f"shape {ours.shape} vs {ref.shape}"
    np.testing.assert_array_equal(ours[:, 0], ref[:, 0])
    for i in range(ours.shape[0]):
        for k in range(1, ours.shape[1]):
            assert_matches_printed(ours[i, k], ref[i, k], f"row {i} col {k}")


def random_unit_vectors(rng: np.random.Generator, n: int) -> np.ndarray:
    """n rows of isotropic unit vectors in R^3."""
    v = rng.normal(size=(n, 3))
    return v / np.linalg.norm(v, axis=1, keepdims=True)
