"""Exact geometry of Grassmannian points given as full-column-rank matrices.

A k-plane in C^n is an n x k matrix over the Gaussian rationals; its minors
over all k-row subsets, the squared-modulus weights they induce, and the
support matroid of the nonzero minors drive everything else: the moment-map
image, the smoothness verdict for the torus orbit closure, and the change
of basis that splits the matrix into diagonal blocks when the support
matroid decomposes.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb
from typing import Iterable, Sequence

from .classify import POINT, ProductDecomposition, classify
from .gaussian import (
    GaussianRational,
    exact_det,
    exact_rank,
    identity_matrix,
    matmul,
    parse_gaussian,
)
from .matroid import (
    ComponentDecomposition,
    ConsistencyError,
    FormatError,
    Matroid,
    components,
    exchange_counterexample,
    ksubset_masks,
    subset_elements,
    subset_mask,
)

MAX_ROWS = 20
MAX_MINORS = 2_000_000
_ELIMINATION_MAX_ROWS = 12


@dataclass(frozen=True)
class PointMatrix:
    """An n x k Gaussian-rational matrix of full column rank k."""

    n: int
    k: int
    rows: tuple[tuple[GaussianRational, ...], ...]


def point_matrix(rows: Sequence[Sequence]) -> PointMatrix:
    """Coerce entries and reject rank-deficient matrices."""
    coerced = tuple(
        tuple(e if isinstance(e, GaussianRational) else GaussianRational(e) for e in row)
        for row in rows
    )
    n = len(coerced)
    if n == 0:
        raise ValueError("matrix must have at least one row")
    k = len(coerced[0])
    if any(len(row) != k for row in coerced):
        raise ValueError("rows have inconsistent lengths")
    if k > n:
        raise ValueError(f"{k} columns cannot be independent in {n} rows")
    if exact_rank(coerced) != k:
        raise ValueError(f"matrix is rank deficient: column rank below {k}")
    return PointMatrix(n, k, coerced)


class PlueckerVector:
    """Exact minors of a point matrix, keyed by k-subset mask in mask order."""

    __slots__ = ("n", "k", "minors")

    def __init__(self, n: int, k: int, minors: dict[int, GaussianRational]):
        self.n = n
        self.k = k
        self.minors = minors

    def support(self) -> tuple[int, ...]:
        return tuple(mask for mask, val in self.minors.items() if val)

    def value(self, mask: int) -> GaussianRational:
        return self.minors[mask]


def pluecker(a: PointMatrix) -> PlueckerVector:
    """All k x k minors of the rows of `a`, exactly.

    Per-subset elimination up to 12 rows; above that, one shared expansion
    over row subsets reuses lower-order minors. Row counts beyond 20 are
    rejected to bound the subset blow-up.
    """
    if a.n > MAX_ROWS:
        raise ValueError(f"too many rows: {a.n} > {MAX_ROWS}")
    if comb(a.n, a.k) > MAX_MINORS:
        raise ValueError(f"refusing to compute {comb(a.n, a.k)} minors")
    if a.n <= _ELIMINATION_MAX_ROWS:
        minors = {
            mask: exact_det([a.rows[e - 1] for e in subset_elements(mask)])
            for mask in ksubset_masks(a.n, a.k)
        }
    else:
        minors = _minors_by_expansion(a)
    if not any(minors.values()):
        raise ConsistencyError("full-rank matrix produced no nonzero minor")
    return PlueckerVector(a.n, a.k, minors)


def _minors_by_expansion(a: PointMatrix) -> dict[int, GaussianRational]:
    """Minors of all k-subsets via cofactor expansion along the last column,
    memoized level by level on shared row subsets."""
    zero = GaussianRational(0)
    prev: dict[int, GaussianRational] = {0: GaussianRational(1)}
    for size in range(1, a.k + 1):
        col = size - 1
        cur: dict[int, GaussianRational] = {}
        for smask in ksubset_masks(a.n, size):
            total = zero
            rest = smask
            pos = 1
            while rest:
                low = rest & -rest
                rest ^= low
                entry = a.rows[low.bit_length() - 1][col]
                if entry:
                    sub = prev[smask ^ low]
                    if sub:
                        term = entry * sub
                        if (pos + size) % 2:
                            term = -term
                        total = total + term
                pos += 1
            cur[smask] = total
        prev = cur
    return prev


def support_matroid(p: PlueckerVector) -> Matroid:
    """Matroid of the k-subsets with nonzero minor; exchange must hold."""
    support = p.support()
    hit = exchange_counterexample(support)
    if hit is not None:
        raise ConsistencyError(f"minor support violates the exchange axiom at {hit}")
    return Matroid(p.n, p.k, support)


@dataclass(frozen=True)
class MomentPoint:
    """Exact rational coordinates in the hypersimplex: entries in [0,1], sum k."""

    coords: tuple[Fraction, ...]


def moment_map(a: PointMatrix) -> MomentPoint:
    """Average of basis indicator vectors weighted by squared minor moduli."""
    p = pluecker(a)
    total = Fraction(0)
    sums = [Fraction(0)] * a.n
    for mask, val in p.minors.items():
        if not val:
            continue
        w = val.abs2()
        total += w
        rest = mask
        while rest:
            low = rest & -rest
            rest ^= low
            sums[low.bit_length() - 1] += w
    coords = tuple(s / total for s in sums)
    if sum(coords) != a.k or any(c < 0 or c > 1 for c in coords):
        raise ConsistencyError("moment coordinates left the hypersimplex")
    return MomentPoint(coords)


@dataclass(frozen=True)
class SmoothnessReport:
    """Smoothness of the torus orbit closure through the support matroid."""

    support: Matroid
    simple: bool
    verdict: str
    decomposition: ProductDecomposition | None
    orbit_factors: tuple[str, ...] | None
    witness: int | None


def orbit_factor_description(size: int, rank: int) -> str:
    if rank in (0, size):
        return "point"
    return f"projective space of dimension {size - 1}"


def smoothness(a: PointMatrix) -> SmoothnessReport:
    """Smooth iff the support matroid polytope is simple; factor the orbit."""
    support = support_matroid(pluecker(a))
    verdict = classify(support)
    if verdict.decomposition is None:
        return SmoothnessReport(support, False, "singular", None, None, verdict.witness)
    factors = tuple(
        orbit_factor_description(len(f.elements), f.rank)
        for f in verdict.decomposition.factors
    )
    return SmoothnessReport(support, True, "smooth", verdict.decomposition, factors, None)


@dataclass(frozen=True)
class BlockSplit:
    """Invertible column transform `g` with `result` = input * g block diagonal."""

    transform: tuple[tuple[GaussianRational, ...], ...]
    result: PointMatrix
    blocks: tuple[tuple[tuple[int, ...], int], ...]


def _normalize_blocks(n: int, k: int, blocks) -> tuple[tuple[tuple[int, ...], int], ...]:
    if isinstance(blocks, ComponentDecomposition):
        items = blocks.blocks
    else:
        items = tuple((tuple(sorted(elems)), rank) for elems, rank in blocks)
    seen = 0
    total_rank = 0
    for elems, rank in items:
        mask = subset_mask(elems, n)
        if mask & seen:
            raise ValueError("blocks overlap")
        seen |= mask
        if not 0 <= rank <= len(elems):
            raise ValueError(f"block rank {rank} out of range for {elems}")
        total_rank += rank
    if seen != (1 << n) - 1:
        raise ValueError("blocks do not partition the ground set")
    if total_rank != k:
        raise ValueError(f"block ranks sum to {total_rank}, expected {k}")
    return items


def _check_support_splits(support: Matroid, blocks) -> None:
    comp = components(support)
    owners = {}
    for idx, (elems, _) in enumerate(blocks):
        for e in elems:
            owners[e] = idx
    rank_sums = [0] * len(blocks)
    for celems, crank in comp.blocks:
        owner = owners[celems[0]]
        if any(owners[e] != owner for e in celems):
            raise ValueError("support matroid does not split along the requested blocks")
        rank_sums[owner] += crank
    for (elems, rank), got in zip(blocks, rank_sums):
        if got != rank:
            raise ValueError(
                f"support matroid gives rank {got} on block {elems}, requested {rank}"
            )


def block_diagonalize(a: PointMatrix, blocks) -> BlockSplit:
    """Column-reduce `a` so each block's rows live on its own column range.

    Requires the support matroid to split along `blocks` (checked). For each
    block in order, pivot columns are chosen among the still-unassigned ones
    by scanning the block's rows ascending, normalized to 1 and eliminated
    from every other column, which drives all foreign entries of the block's
    rows to zero; columns are finally permuted so blocks sit contiguously.
    """
    blocks = _normalize_blocks(a.n, a.k, blocks)
    _check_support_splits(support_matroid(pluecker(a)), blocks)

    mat = [list(row) for row in a.rows]
    g = identity_matrix(a.k)
    remaining = list(range(a.k))
    order: list[int] = []
    for elems, rank in blocks:
        pivots = 0
        for r in elems:
            if pivots == rank:
                break
            ci = next((c for c in remaining if mat[r - 1][c]), None)
            if ci is None:
                continue
            pval = mat[r - 1][ci]
            for row in mat:
                row[ci] = row[ci] / pval
            for row in g:
                row[ci] = row[ci] / pval
            for c2 in range(a.k):
                if c2 == ci:
                    continue
                f = mat[r - 1][c2]
                if f:
                    for row in mat:
                        row[c2] = row[c2] - f * row[ci]
                    for row in g:
                        row[c2] = row[c2] - f * row[ci]
            remaining.remove(ci)
            order.append(ci)
            pivots += 1
        if pivots != rank:
            raise ConsistencyError(f"could not find {rank} pivot columns in block {elems}")
    if remaining:
        raise ConsistencyError("unassigned columns after block reduction")

    permuted = tuple(tuple(row[c] for c in order) for row in mat)
    transform = tuple(tuple(row[c] for c in order) for row in g)

    offset = 0
    for elems, rank in blocks:
        span = range(offset, offset + rank)
        for r in elems:
            for c in range(a.k):
                if c not in span and permuted[r - 1][c]:
                    raise ConsistencyError("block reduction left a foreign nonzero entry")
        offset += rank
    return BlockSplit(transform, point_matrix(permuted), blocks)


def parse_matrix(text: str) -> PointMatrix:
    """Parse the matrix file format: header `n k`, then n rows of k entries."""
    lines = text.splitlines()
    if not lines or not lines[0].split():
        raise FormatError("line 1: expected header 'n k'")
    head = lines[0].split()
    if len(head) != 2:
        raise FormatError("line 1: expected header 'n k'")
    try:
        n, k = int(head[0]), int(head[1])
    except ValueError as exc:
        raise FormatError("line 1: header entries must be integers") from exc
    if not 1 <= n <= MAX_ROWS:
        raise FormatError(f"line 1: row count {n} out of range 1..{MAX_ROWS}")
    if not 0 <= k <= n:
        raise FormatError(f"line 1: column count {k} out of range 0..{n}")
    rows: list[tuple[GaussianRational, ...]] = []
    for no, line in enumerate(lines[1:], start=2):
        parts = line.split()
        if len(rows) == n:
            if parts:
                raise FormatError(f"line {no}: unexpected extra line")
            continue
        if len(parts) != k:
            raise FormatError(f"line {no}: expected {k} entries, found {len(parts)}")
        row = []
        for col, part in enumerate(parts, start=1):
            try:
                row.append(parse_gaussian(part))
            except ValueError as exc:
                raise FormatError(f"line {no}, entry {col}: {exc}") from exc
        rows.append(tuple(row))
    if k == 0:
        rows = [()] * n
    if len(rows) != n:
        raise FormatError(f"expected {n} rows, found {len(rows)}")
    return point_matrix(rows)
