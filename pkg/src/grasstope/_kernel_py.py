"""Pure-Python fallback for the family scan.

Same contract as the compiled kernel. Instead of per-family early exit, the
range is processed in chunks with one vectorised numpy pass per table
constraint: a family is dropped when it contains both subsets of a pair but
misses every subset that would satisfy the exchange step.
"""

from __future__ import annotations

import numpy as np

_CHUNK = 1 << 17


def _constraints(ptr, needs, m: int) -> list[tuple[int, int]]:
    """Flatten the table into (pair bits, required-hit mask) int pairs."""
    out = []
    ptr_list = [int(x) for x in ptr]
    needs_list = [int(x) for x in needs]
    for a in range(m):
        for b in range(m):
            pid = a * m + b
            pair = (1 << a) | (1 << b)
            for t in range(ptr_list[pid], ptr_list[pid + 1]):
                out.append((pair, needs_list[t]))
    return out

def scan_families(ptr, needs, m: int, start: int, stop: int) -> list[int]:
    """Family masks in [start, stop) whose subset family passes exchange."""
    cons = _constraints(ptr, needs, m)
    out: list[int] = []
    for lo in range(start, stop, _CHUNK):
        hi = min(stop, lo + _CHUNK)
        idx = np.arange(lo, hi, dtype=np.uint32)
        alive = np.ones(idx.shape[0], dtype=bool)
        tmp = np.empty_like(idx)
        hit = np.empty(idx.shape[0], dtype=bool)
        miss = np.empty(idx.shape[0], dtype=bool)
        for pair, need in cons:
            np.bitwise_and(idx, pair, out=tmp)
            np.equal(tmp, pair, out=hit)
            np.bitwise_and(idx, need, out=tmp)
            np.equal(tmp, 0, out=miss)
            hit &= miss
            alive &= ~hit
        if lo == 0 and alive.shape[0]:
            alive[0] = False
        out.extend(map(int, idx[alive]))
    return out


def check_family(ptr, needs, m: int, mask: int) -> bool:
    """Exchange check for a single family mask, plain integer loops."""
    if mask == 0:
        return False
    ptr_list = [int(x) for x in ptr]
    needs_list = [int(x) for x in needs]
    fa = mask
    while fa:
        abit = fa & -fa
        fa ^= abit
        row = (abit.bit_length() - 1) * m
        fb = mask
        while fb:
            bbit = fb & -fb
            fb ^= bbit
            b = bbit.bit_length() - 1
            if abit == bbit:
                continue
            pid = row + b
            for t in range(ptr_list[pid], ptr_list[pid + 1]):
                if not mask & needs_list[t]:
                    return False
    return True
