"""Seeded random generators used by probes, verification harnesses and tests."""

from __future__ import annotations

import numpy as np

from .linalg import MatrixTuple


def complex_gaussian(rng: np.random.Generator, *shape) -> np.ndarray:
    """Independent standard complex Gaussian entries (unit expected |z|^2)."""
    return (rng.standard_normal(shape) + 1j * rng.standard_normal(shape)) / np.sqrt(2)


def random_tuple(rng: np.random.Generator, g: int, n: int) -> MatrixTuple:
    return MatrixTuple(complex_gaussian(rng, g, n, n))


def random_direction(rng: np.random.Generator, g: int, n: int) -> MatrixTuple:
    """Random tuple normalized to unit max entry magnitude; never zero."""
    while True:
        t = complex_gaussian(rng, g, n, n)
        scale = np.max(np.abs(t))
        if scale > 1e-12:
            return MatrixTuple(t / scale)


def random_unitary(rng: np.random.Generator, n: int) -> np.ndarray:
    q, r = np.linalg.qr(complex_gaussian(rng, n, n))
    return q * (np.diag(r) / np.abs(np.diag(r)))


def random_unimodular(rng: np.random.Generator) -> complex:
    return complex(np.exp(2j * np.pi * rng.uniform()))
