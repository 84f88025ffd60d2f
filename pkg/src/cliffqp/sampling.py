"""Deterministic random inputs for the verification suites.

Every sampler takes an explicit random.Random so runs are reproducible
from a seed.
"""

from __future__ import annotations

from .clifford import CliffordElement, embed_blocks
from .exterior import ExteriorVector, mask_size
from .linalg import Matrix
from .rings import Ring


def random_matrix(ring: Ring, rows: int, cols: int, rng) -> Matrix:
    return Matrix(ring, rows, cols, [ring.sample(rng) for _ in range(rows * cols)])


def random_vector(ring: Ring, dim: int, rng) -> list:
    return [ring.sample(rng) for _ in range(dim)]


def random_trace_zero(ring: Ring, size: int, rng) -> Matrix:
    m = random_matrix(ring, size, size, rng)
    m.put(0, 0, ring.sub(m.at(0, 0), m.trace()))
    return m


def random_trace_one(ring: Ring, size: int, rng) -> Matrix:
    m = random_matrix(ring, size, size, rng)
    m.put(0, 0, ring.add(m.at(0, 0), ring.sub(ring.one, m.trace())))
    return m


def random_even_element(ring: Ring, n: int, rng) -> CliffordElement:
    half = 1 << (n - 1)
    return embed_blocks(
        ring, n, random_matrix(ring, half, half, rng), random_matrix(ring, half, half, rng)
    )


def random_clifford_element(ring: Ring, n: int, rng) -> CliffordElement:
    dim = 1 << n
    return CliffordElement(ring, n, random_matrix(ring, dim, dim, rng))


def random_exterior(ring: Ring, n: int, rng, parity: int | None = None) -> ExteriorVector:
    coeffs = []
    for mask in range(1 << n):
        if parity is not None and mask_size(mask) % 2 != parity:
            coeffs.append(ring.zero)
        else:
            coeffs.append(ring.sample(rng))
    return ExteriorVector.from_coeffs(ring, n, coeffs)
