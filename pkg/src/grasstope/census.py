"""Exhaustive enumeration of matroids on tiny ground sets and batch verifiers.

For fixed (n, k) the C(n, k) k-subsets are listed in mask order and a basis
family is a bitmask over that list, so "all nonempty families" is the index
range [1, 2^C(n,k)). Every index is scanned against a precomputed exchange
table (compiled kernel when available); survivors are exactly the labeled
matroids of rank k on [n], yielded in ascending family order. Exhaustive
mode is capped at n = 6, i.e. 2^20 candidate families at the worst rank.

The verifiers replay the structural claims over every enumerated matroid:
simple polytopes must factor into admissible uniform blocks, simple
vertices of full-dimensional polytopes must have a non-simple neighbor
with degree at least n, and balanced swap sets of size 1 and 2 must land
on vertices exactly when the swap-graph shape says so. Reports carry
per-(n, k) counts so any drift in the census is a hard test break.

The family index range splits into fixed-size shards that can be verified
independently (`shards`/`shard_index`) or in parallel worker processes
(`jobs`); merged reports do not depend on shard count or order.
"""

from __future__ import annotations

import time
from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from multiprocessing import get_context
from typing import Iterator

import numpy as np

from . import kernel
from .classify import classify
from .matroid import ConsistencyError, Matroid, components, ksubset_masks, subset_elements
from .polytope import nonsimple_neighbor, vertex_graph

EXHAUST_MAX_N = 6
PROMOTION_MAX_N = 5


@dataclass(frozen=True)
class ScanTables:
    """Exchange table for one (n, k): see the module docstring."""

    n: int
    k: int
    m: int
    subsets: tuple[int, ...]
    ptr: np.ndarray
    needs: np.ndarray


@lru_cache(maxsize=None)
def scan_tables(n: int, k: int) -> ScanTables:
    """Build the constraint table for families of k-subsets of [n]."""
    subsets = ksubset_masks(n, k)
    m = len(subsets)
    index = {s: c for c, s in enumerate(subsets)}
    ptr = [0] * (m * m + 1)
    needs: list[int] = []
    for a, sa in enumerate(subsets):
        for b, sb in enumerate(subsets):
            pid = a * m + b
            ptr[pid] = len(needs)
            if a == b:
                continue
            moved = sa & ~sb
            if moved.bit_count() < 2:
                continue
            incoming = sb & ~sa
            rest = moved
            while rest:
                ibit = rest & -rest
                rest ^= ibit
                need = 0
                cand = incoming
                while cand:
                    jbit = cand & -cand
                    cand ^= jbit
                    need |= 1 << index[(sa ^ ibit) | jbit]
                needs.append(need)
    ptr[m * m] = len(needs)
    needs_arr = np.asarray(needs, dtype=np.uint32) if needs else np.zeros(1, dtype=np.uint32)
    return ScanTables(n, k, m, tuple(subsets), np.asarray(ptr, dtype=np.uint32), needs_arr)


def _guard(n: int, k: int, n_cap: int) -> None:
    if not 1 <= n <= n_cap:
        raise ValueError(f"exhaustive mode needs 1 <= n <= {n_cap}, got {n}")
    if not 0 <= k <= n:
        raise ValueError(f"rank {k} out of range 0..{n}")


@lru_cache(maxsize=None)
def family_masks(n: int, k: int) -> tuple[int, ...]:
    """All family masks over (n, k) that pass exchange, ascending."""
    _guard(n, k, EXHAUST_MAX_N)
    t = scan_tables(n, k)
    return tuple(kernel.scan_families(t.ptr, t.needs, t.m, 1, 1 << t.m))


def family_to_matroid(n: int, k: int, family: int) -> Matroid:
    """Decode a family bitmask into the Matroid it denotes."""
    subsets = scan_tables(n, k).subsets
    bases = []
    rest = family
    while rest:
        low = rest & -rest
        rest ^= low
        bases.append(subsets[low.bit_length() - 1])
    return Matroid(n, k, tuple(bases))


def enumerate_matroids(n: int, k: int) -> Iterator[Matroid]:
    """Every labeled matroid of rank k on [n], each once, in canonical order."""
    _guard(n, k, EXHAUST_MAX_N)
    for family in family_masks(n, k):
        yield family_to_matroid(n, k, family)


def matroid_count(n: int, k: int) -> int:
    return len(family_masks(n, k))


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of one exhaustive verifier run.

    `nk_counts` holds (n, k, checked) rows for every rank visited; counts
    and counterexamples are deterministic for fixed inputs, elapsed is not.
    """

    name: str
    n_max: int
    matroids_checked: int
    simple_count: int
    counterexamples: tuple[str, ...]
    nk_counts: tuple[tuple[int, int, int], ...]
    elapsed: float

    def signature(self) -> tuple:
        """Everything that must be reproducible across runs and shard splits."""
        return (
            self.name,
            self.n_max,
            self.matroids_checked,
            self.simple_count,
            self.counterexamples,
            self.nk_counts,
        )


def _fmt(m: Matroid) -> str:
    return " ".join("".join(map(str, subset_elements(b))) for b in m.bases)


def _matroids_in_range(n: int, k: int, lo: int, hi: int) -> Iterator[Matroid]:
    t = scan_tables(n, k)
    total = 1 << t.m
    if lo <= 1 and hi >= total:
        masks: Iterator[int] | tuple[int, ...] = family_masks(n, k)
    else:
        masks = kernel.scan_families(t.ptr, t.needs, t.m, max(lo, 1), min(hi, total))
    for family in masks:
        yield family_to_matroid(n, k, family)


def _unit_simple_product(n: int, k: int, lo: int, hi: int) -> dict:
    checked = simple = 0
    ces: list[str] = []
    for m in _matroids_in_range(n, k, lo, hi):
        checked += 1
        try:
            verdict = classify(m)
        except ConsistencyError as exc:
            ces.append(f"n={n} k={k} bases={_fmt(m)}: {exc}")
            continue
        if verdict.simple:
            simple += 1
    return {"checked": checked, "simple": simple, "counterexamples": ces}


def _unit_adjacent_nonsimple(n: int, k: int, lo: int, hi: int) -> dict:
    checked = simple_vertices = 0
    ces: list[str] = []
    for m in _matroids_in_range(n, k, lo, hi):
        if components(m).q != 1:
            continue
        checked += 1
        for b in m.bases:
            if not vertex_graph(m, b).is_forest():
                continue
            simple_vertices += 1
            where = f"n={n} k={k} bases={_fmt(m)} vertex={''.join(map(str, subset_elements(b)))}"
            try:
                nb = nonsimple_neighbor(m, b)
            except (ValueError, ConsistencyError) as exc:
                ces.append(f"{where}: {exc}")
                continue
            if (b & ~nb).bit_count() != 1:
                ces.append(f"{where}: returned vertex is not adjacent")
            deg = len(vertex_graph(m, nb).edges)
            if deg < n:
                ces.append(f"{where}: neighbor degree {deg} below {n}")
    return {"checked": checked, "simple": simple_vertices, "counterexamples": ces}


def _unit_vertex_promotion(n: int, k: int, lo: int, hi: int) -> dict:
    checked = simple = 0
    ces: list[str] = []
    full = (1 << n) - 1
    for m in _matroids_in_range(n, k, lo, hi):
        checked += 1
        all_simple = True
        bset = m.basis_set
        for b in m.bases:
            graph = vertex_graph(m, b)
            all_simple &= graph.is_forest()
            pairs = set(graph.edges)
            inside = subset_elements(b)
            outside = subset_elements(full & ~b)
            where = f"n={n} k={k} bases={_fmt(m)} vertex={''.join(map(str, inside))}"
            for j in inside:
                for i in outside:
                    target = b ^ (1 << (i - 1)) ^ (1 << (j - 1))
                    if (target in bset) != ((i, j) in pairs):
                        ces.append(f"{where}: size-1 swap {{{i},{j}}} disagrees with the graph")
            for j1, j2 in combinations(inside, 2):
                for i1, i2 in combinations(outside, 2):
                    e = (
                        (i1, j1) in pairs,
                        (i1, j2) in pairs,
                        (i2, j1) in pairs,
                        (i2, j2) in pairs,
                    )
                    count = sum(e)
                    matching = count == 2 and ((e[0] and e[3]) or (e[1] and e[2]))
                    if matching or count == 3:
                        target = b
                        for x in (i1, i2, j1, j2):
                            target ^= 1 << (x - 1)
                        if target not in bset:
                            ces.append(
                                f"{where}: swap {{{i1},{i2},{j1},{j2}}} should be a vertex"
                            )
        simple += all_simple
    return {"checked": checked, "simple": simple, "counterexamples": ces}


_UNITS = {
    "simple-product": _unit_simple_product,
    "adjacent-nonsimple": _unit_adjacent_nonsimple,
    "vertex-promotion": _unit_vertex_promotion,
}


def _run_unit(task: tuple[str, int, int, int, int]) -> dict:
    unit, n, k, lo, hi = task
    return _UNITS[unit](n, k, lo, hi)


def _verify(
    name: str,
    unit: str,
    pairs: list[tuple[int, int]],
    n_max: int,
    shards: int,
    shard_index: int | None,
    jobs: int,
) -> VerificationReport:
    if shards < 1:
        raise ValueError("shards must be at least 1")
    if shard_index is not None and not 0 <= shard_index < shards:
        raise ValueError(f"shard index {shard_index} out of range 0..{shards - 1}")
    tasks = []
    for n, k in pairs:
        total = 1 << scan_tables(n, k).m
        size = -(-(total - 1) // shards)
        for s in range(shards):
            if shard_index is not None and s != shard_index:
                continue
            lo = 1 + s * size
            hi = min(total, lo + size)
            if lo < hi:
                tasks.append((unit, n, k, lo, hi))
    started = time.perf_counter()
    if jobs > 1 and len(tasks) > 1:
        with get_context("fork").Pool(jobs) as pool:
            parts = pool.map(_run_unit, tasks)
    else:
        parts = [_run_unit(t) for t in tasks]
    counts = {pair: 0 for pair in pairs}
    checked = simple = 0
    ces: list[str] = []
    for task, part in zip(tasks, parts):
        counts[(task[1], task[2])] += part["checked"]
        checked += part["checked"]
        simple += part["simple"]
        ces.extend(part["counterexamples"])
    return VerificationReport(
        name,
        n_max,
        checked,
        simple,
        tuple(ces),
        tuple((n, k, counts[(n, k)]) for n, k in pairs),
        time.perf_counter() - started,
    )


def verify_simple_product(
    n_max: int = EXHAUST_MAX_N, *, shards: int = 1, shard_index: int | None = None, jobs: int = 1
) -> VerificationReport:
    """Every simple matroid up to n_max must classify into admissible factors.

    `matroids_checked` counts all enumerated matroids, `simple_count` the
    simple ones among them.
    """
    if not 1 <= n_max <= EXHAUST_MAX_N:
        raise ValueError(f"n_max must be in 1..{EXHAUST_MAX_N}, got {n_max}")
    pairs = [(n, k) for n in range(1, n_max + 1) for k in range(n + 1)]
    return _verify("theorem-b", "simple-product", pairs, n_max, shards, shard_index, jobs)


def verify_adjacent_nonsimple(
    n_max: int = EXHAUST_MAX_N, *, shards: int = 1, shard_index: int | None = None, jobs: int = 1
) -> VerificationReport:
    """Simple vertices of full-dimensional polytopes with rank and corank >= 2
    must have a constructible non-simple neighbor of degree >= n.

    `matroids_checked` counts full-dimensional matroids in the rank range,
    `simple_count` the simple vertices examined.
    """
    if not 1 <= n_max <= EXHAUST_MAX_N:
        raise ValueError(f"n_max must be in 1..{EXHAUST_MAX_N}, got {n_max}")
    pairs = [(n, k) for n in range(4, n_max + 1) for k in range(2, n - 1)]
    return _verify(
        "theorem-1-6", "adjacent-nonsimple", pairs, n_max, shards, shard_index, jobs
    )


def verify_vertex_promotion(
    n_max: int = PROMOTION_MAX_N, *, shards: int = 1, shard_index: int | None = None, jobs: int = 1
) -> VerificationReport:
    """Balanced swaps of size 1 and 2 must land on vertices exactly as the
    swap-graph shape predicts (size 1: edge iff vertex; size 2: a perfect
    matching or 3-edge path on the four endpoints forces a vertex).

    `matroids_checked` counts all enumerated matroids, `simple_count` the
    simple ones among them.
    """
    if not 1 <= n_max <= PROMOTION_MAX_N:
        raise ValueError(f"n_max must be in 1..{PROMOTION_MAX_N}, got {n_max}")
    pairs = [(n, k) for n in range(1, n_max + 1) for k in range(n + 1)]
    return _verify("lemmas", "vertex-promotion", pairs, n_max, shards, shard_index, jobs)
