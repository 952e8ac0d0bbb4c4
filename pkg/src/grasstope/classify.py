"""Classify simple basis polytopes as embedded products of simplices.

A simple basis polytope always factors over its component blocks into
uniform pieces whose rank is 0, 1, size-1 or size: points and simplices.
The classifier does not take that for granted; it re-derives the blocks,
verifies each restriction is uniform with an admissible rank, and treats
any failure as an internal error.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb

from .matroid import ConsistencyError, Matroid, components, subset_mask
from .polytope import is_simple

POINT = "point"
STANDARD_SIMPLEX = "standard-simplex"
DUAL_SIMPLEX = "dual-simplex"


@dataclass(frozen=True)
class Factor:
    """One block of a product decomposition: elements, rank, and shape kind."""

    elements: tuple[int, ...]
    rank: int
    kind: str


@dataclass(frozen=True)
class ProductDecomposition:
    factors: tuple[Factor, ...]


@dataclass(frozen=True)
class ClassifierVerdict:
    """Either a certified decomposition (simple) or a non-simple witness vertex."""

    decomposition: ProductDecomposition | None
    witness: int | None

    @property
    def simple(self) -> bool:
        return self.decomposition is not None


def _factor_kind(size: int, rank: int) -> str | None:
    if rank in (0, size):
        return POINT
    if rank == 1:
        return STANDARD_SIMPLEX
    if rank == size - 1:
        return DUAL_SIMPLEX
    return None


def classify(m: Matroid) -> ClassifierVerdict:
    """Decide simplicity; certify the product-of-simplices factors if simple."""
    verdict = is_simple(m)
    if not verdict.simple:
        return ClassifierVerdict(None, verdict.witness)
    factors = []
    basis_product = 1
    for elements, rank in components(m).blocks:
        size = len(elements)
        kind = _factor_kind(size, rank)
        if kind is None:
            raise ConsistencyError(
                f"simple polytope has block {elements} of size {size} with rank {rank}"
            )
        block_mask = subset_mask(elements, m.n)
        restricted = {b & block_mask for b in m.bases}
        if len(restricted) != comb(size, rank) or any(
            r.bit_count() != rank for r in restricted
        ):
            raise ConsistencyError(
                f"restriction to block {elements} of a simple polytope is not uniform"
            )
        basis_product *= comb(size, rank)
        factors.append(Factor(elements, rank, kind))
    if basis_product != len(m.bases):
        raise ConsistencyError("factor basis counts do not multiply to the basis count")
    return ClassifierVerdict(ProductDecomposition(tuple(factors)), None)


@dataclass(frozen=True)
class HypersimplexStats:
    vertex_count: int
    edge_degree: int
    dim: int
    simple: bool


def hypersimplex_stats(n: int, k: int) -> HypersimplexStats:
    """Closed-form vertex count, vertex degree, dimension and simplicity."""
    if not 0 <= k <= n:
        raise ValueError(f"rank {k} out of range 0..{n}")
    dim = n - 1 if 1 <= k <= n - 1 else 0
    return HypersimplexStats(comb(n, k), k * (n - k), dim, k in (0, 1, n - 1, n))
