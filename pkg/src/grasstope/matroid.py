"""Matroids as explicit basis lists on ground sets [n] = {1, ..., n}.

A subset of [n] is packed into an int bitmask with element i on bit i - 1,
so subset collections sort canonically as plain integers and n is capped at
64 (one machine word). All operations are pure functions and Matroid values
are immutable, so they can be shared freely between threads.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from math import comb
from typing import Iterable

from .unionfind import DisjointSet

MAX_GROUND_SIZE = 64
MAX_BASES = 2_000_000


class FormatError(ValueError):
    """Malformed text input (matroid or matrix files)."""


class ConsistencyError(RuntimeError):
    """A cross-check that must hold by theory failed; indicates a bug."""


def subset_mask(elements: Iterable[int], n: int) -> int:
    """Pack 1-based elements into a bitmask, rejecting repeats and range errors."""
    mask = 0
    for e in elements:
        if not isinstance(e, int) or not 1 <= e <= n:
            raise ValueError(f"element {e!r} outside ground set [{n}]")
        bit = 1 << (e - 1)
        if mask & bit:
            raise ValueError(f"repeated element {e} in subset")
        mask |= bit
    return mask


def subset_elements(mask: int) -> tuple[int, ...]:
    """Unpack a bitmask into ascending 1-based elements."""
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length())
        mask ^= low
    return tuple(out)


def as_mask(n: int, subset: int | Iterable[int]) -> int:
    """Accept a subset either as a mask or as an iterable of elements."""
    if isinstance(subset, int):
        if subset < 0 or subset >> n:
            raise ValueError(f"mask {subset:#x} has bits outside ground set [{n}]")
        return subset
    return subset_mask(subset, n)


def ksubset_masks(n: int, k: int) -> list[int]:
    """All k-subset masks of [n] in ascending mask order (Gosper's hack)."""
    if not 0 <= k <= n:
        raise ValueError(f"rank {k} out of range for ground set [{n}]")
    if k == 0:
        return [0]
    out = []
    v = (1 << k) - 1
    limit = 1 << n
    while v < limit:
        out.append(v)
        u = v & -v
        t = v + u
        v = t | (((v ^ t) // u) >> 2)
    return out


@dataclass(frozen=True)
class Matroid:
    """A matroid given by its bases; `bases` holds subset masks, ascending."""

    n: int
    k: int
    bases: tuple[int, ...]

    @cached_property
    def basis_set(self) -> frozenset[int]:
        return frozenset(self.bases)

    def basis_elements(self) -> tuple[tuple[int, ...], ...]:
        return tuple(subset_elements(b) for b in self.bases)


@dataclass(frozen=True)
class ValidationReport:
    """Outcome of an exchange-axiom check.

    On failure, `counterexample` is the first violating triple (I, J, i) in
    canonical scan order: I and J ascending as masks, i ascending in I \\ J.
    """

    valid: bool
    counterexample: tuple[tuple[int, ...], tuple[int, ...], int] | None = None


def _prepare_bases(n: int, k: int, bases: Iterable[int | Iterable[int]]) -> list[int]:
    if not isinstance(n, int) or not 1 <= n <= MAX_GROUND_SIZE:
        raise ValueError(f"ground set size must be in 1..{MAX_GROUND_SIZE}, got {n!r}")
    if not isinstance(k, int) or not 0 <= k <= n:
        raise ValueError(f"rank {k!r} out of range 0..{n}")
    masks: set[int] = set()
    count = 0
    for subset in bases:
        count += 1
        mask = as_mask(n, subset)
        if mask.bit_count() != k:
            elems = ",".join(map(str, subset_elements(mask)))
            raise ValueError(
                f"basis {{{elems}}} has {mask.bit_count()} elements, expected rank {k}"
            )
        masks.add(mask)
    if count == 0:
        raise ValueError("basis collection is empty")
    return sorted(masks)


def exchange_counterexample(bases: Iterable[int]) -> tuple[int, int, int] | None:
    """First exchange-axiom violation (I, J, i element) over basis masks, or None.

    Pairs with |I \\ J| = 1 can never fail (the lone j completes J itself),
    so they are skipped; this does not change which triple is found first.
    """
    masks = sorted(set(bases))
    present = frozenset(masks)
    for bi in masks:
        for bj in masks:
            if bi == bj:
                continue
            moved = bi & ~bj
            if moved.bit_count() <= 1:
                continue
            incoming = bj & ~bi
            rest = moved
            while rest:
                ibit = rest & -rest
                rest ^= ibit
                stripped = bi ^ ibit
                cand = incoming
                ok = False
                while cand:
                    jbit = cand & -cand
                    cand ^= jbit
                    if (stripped | jbit) in present:
                        ok = True
                        break
                if not ok:
                    return (bi, bj, ibit.bit_length())
    return None


def validate_exchange(n: int, k: int, bases: Iterable[int | Iterable[int]]) -> ValidationReport:
    """Check the basis-exchange axiom over every ordered pair of bases."""
    masks = _prepare_bases(n, k, bases)
    hit = exchange_counterexample(masks)
    if hit is None:
        return ValidationReport(True)
    bi, bj, elem = hit
    return ValidationReport(False, (subset_elements(bi), subset_elements(bj), elem))


def matroid(n: int, k: int, bases: Iterable[int | Iterable[int]], *, validate: bool = True) -> Matroid:
    """Build a Matroid from subsets, optionally checking the exchange axiom."""
    masks = _prepare_bases(n, k, bases)
    if validate:
        hit = exchange_counterexample(masks)
        if hit is not None:
            bi, bj, elem = hit
            raise ValueError(
                "exchange axiom fails for "
                f"I={{{','.join(map(str, subset_elements(bi)))}}}, "
                f"J={{{','.join(map(str, subset_elements(bj)))}}}, i={elem}"
            )
    return Matroid(n, k, tuple(masks))


def uniform(n: int, k: int) -> Matroid:
    """The uniform matroid: every k-subset of [n] is a basis."""
    if not isinstance(n, int) or not 1 <= n <= MAX_GROUND_SIZE:
        raise ValueError(f"ground set size must be in 1..{MAX_GROUND_SIZE}, got {n!r}")
    if not 0 <= k <= n:
        raise ValueError(f"rank {k} out of range 0..{n}")
    if comb(n, k) > MAX_BASES:
        raise ValueError(f"uniform({n},{k}) would have {comb(n, k)} bases; refusing")
    return Matroid(n, k, tuple(ksubset_masks(n, k)))


def direct_sum(a: Matroid, b: Matroid) -> Matroid:
    """Matroid on the disjoint union; bases are unions, second summand shifted."""
    n = a.n + b.n
    if n > MAX_GROUND_SIZE:
        raise ValueError(f"combined ground set has {n} > {MAX_GROUND_SIZE} elements")
    bases = sorted(x | (y << a.n) for x in a.bases for y in b.bases)
    return Matroid(n, a.k + b.k, tuple(bases))


@dataclass(frozen=True)
class MinorResult:
    """A minor together with the old-element -> new-element relabeling."""

    matroid: Matroid
    relabeling: tuple[tuple[int, int], ...]

    def mapping(self) -> dict[int, int]:
        return dict(self.relabeling)


def minor(m: Matroid, contract: int | Iterable[int], delete: int | Iterable[int]) -> MinorResult:
    """Contract and delete element sets; survivors are renumbered ascending.

    Bases of the minor are B \\ contract over bases B that contain `contract`
    and avoid `delete`.
    """
    cmask = as_mask(m.n, contract)
    dmask = as_mask(m.n, delete)
    if cmask & dmask:
        raise ValueError("contract and delete sets overlap")
    selected = [b for b in m.bases if b & cmask == cmask and not (b & dmask)]
    if not selected:
        raise ValueError("empty minor: no basis contains the contract set and avoids the delete set")
    survivors = subset_elements(((1 << m.n) - 1) & ~(cmask | dmask))
    relabel = tuple((old, new) for new, old in enumerate(survivors, start=1))
    new_bases = []
    for b in selected:
        packed = 0
        for old, new in relabel:
            if b & (1 << (old - 1)):
                packed |= 1 << (new - 1)
        new_bases.append(packed)
    new_n = len(survivors)
    new_k = m.k - cmask.bit_count()
    if new_n == 0:
        raise ValueError("empty minor: no surviving elements")
    return MinorResult(Matroid(new_n, new_k, tuple(sorted(new_bases))), relabel)


@dataclass(frozen=True)
class ComponentDecomposition:
    """Partition of [n] into blocks (elements, rank), sorted by minimum element.

    Every basis of the owning matroid meets block i in exactly rank_i
    elements, and the basis polytope is the product of the blocks' polytopes.
    """

    n: int
    blocks: tuple[tuple[tuple[int, ...], int], ...]

    @property
    def q(self) -> int:
        return len(self.blocks)

    def block_masks(self) -> tuple[int, ...]:
        return tuple(subset_mask(elems, self.n) for elems, _ in self.blocks)


def components(m: Matroid) -> ComponentDecomposition:
    """Connected blocks of the exchange relation i ~ j over single swaps.

    Two elements are related when some pair of bases B, B' satisfies
    B' = (B \\ {i}) | {j}; blocks are the connected components, and the
    block rank is |B & block| for any basis B (constant across bases).
    """
    dsu = DisjointSet(m.n + 1)
    bases = m.bases
    for x in range(len(bases)):
        bx = bases[x]
        for y in range(x + 1, len(bases)):
            gone = bx & ~bases[y]
            if gone.bit_count() == 1:
                dsu.union(gone.bit_length(), (bases[y] & ~bx).bit_length())
    b0 = bases[0]
    blocks = []
    for members in dsu.groups().values():
        elems = tuple(e for e in members if e >= 1)
        if not elems:
            continue
        block_mask = subset_mask(elems, m.n)
        blocks.append((elems, (b0 & block_mask).bit_count()))
    blocks.sort(key=lambda blk: blk[0][0])
    return ComponentDecomposition(m.n, tuple(blocks))


def parse_matroid_text(text: str) -> tuple[int, int, list[tuple[int, ...]]]:
    """Parse the matroid file format: header `n k`, then one basis per line.

    Elements on a basis line must be strictly ascending; duplicate lines are
    rejected. A rank-0 matroid is written as a single blank basis line.
    Returns raw (n, k, bases) without running the exchange check.
    """
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
    if not 1 <= n <= MAX_GROUND_SIZE:
        raise FormatError(f"line 1: ground set size {n} out of range 1..{MAX_GROUND_SIZE}")
    if not 0 <= k <= n:
        raise FormatError(f"line 1: rank {k} out of range 0..{n}")
    seen: set[tuple[int, ...]] = set()
    bases: list[tuple[int, ...]] = []
    for no, line in enumerate(lines[1:], start=2):
        parts = line.split()
        if not parts:
            if k != 0:
                raise FormatError(f"line {no}: empty basis line")
            elems: tuple[int, ...] = ()
        else:
            try:
                elems = tuple(int(p) for p in parts)
            except ValueError as exc:
                raise FormatError(f"line {no}: non-integer entry") from exc
        if len(elems) != k:
            raise FormatError(f"line {no}: expected {k} elements, found {len(elems)}")
        for e in elems:
            if not 1 <= e <= n:
                raise FormatError(f"line {no}: element {e} outside 1..{n}")
        if any(elems[i] >= elems[i + 1] for i in range(len(elems) - 1)):
            raise FormatError(f"line {no}: elements must be strictly ascending")
        if elems in seen:
            raise FormatError(f"line {no}: duplicate basis line")
        seen.add(elems)
        bases.append(elems)
    if not bases:
        raise FormatError("no basis lines")
    return n, k, bases
