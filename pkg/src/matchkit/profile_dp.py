"""Matching counts on two-dimensional discrete tori by frontier sweep.

Cells of an m-by-n torus (both sides at least 3) are processed column by
column; the state tracks pending dimers into unprocessed cells.  Wraparound
in the row direction is one extra frontier bit per column, wraparound in the
column direction is conditioned on the exact set W of wrap edges used, with
configurations grouped by row-rotation symmetry when no cells are removed.

Two tracking modes share the sweep: per-dimer-count coefficient vectors
(optionally truncated at max_k) and per-defect counts (number of uncovered
vertices, optionally capped; cap 0 counts perfect matchings only).
"""

from __future__ import annotations

from functools import lru_cache

__all__ = ["torus_match_counts", "torus_defect_counts"]


@lru_cache(maxsize=None)
def _rotation_classes(m: int) -> tuple[tuple[int, int], ...]:
    """Representatives and orbit sizes of row masks under dihedral symmetry."""
    seen = {}
    for mask in range(1 << m):
        orbit = set()
        x = mask
        for _ in range(m):
            x = ((x << 1) | (x >> (m - 1))) & ((1 << m) - 1)
            orbit.add(x)
            y = int(format(x, f"0{m}b")[::-1], 2)
            for _ in range(m):
                y = ((y << 1) | (y >> (m - 1))) & ((1 << m) - 1)
                orbit.add(y)
        rep = min(orbit)
        if rep == mask:
            seen[rep] = len(orbit)
    return tuple(sorted(seen.items()))


def _sweep(m: int, n: int, removed: frozenset[tuple[int, int]], wmask: int,
           track_defects: bool, budget) -> list[int]:
    """One conditioned sweep; returns the accumulated vector for final states.

    Vector index is the dimer count (track_defects=False, wrap dimers in
    wmask pre-counted) or the monomer count (track_defects=True).
    """
    present = [[(r, c) not in removed for c in range(n)] for r in range(m)]
    for r in range(m):
        if (wmask >> r) & 1 and not (present[r][0] and present[r][n - 1]):
            return []
    wbits = bin(wmask).count("1")
    if not track_defects:
        if budget is not None and wbits > budget:
            return []
        init_vec = [0] * wbits + [1]
    else:
        init_vec = [1]
    VP = 1 << m
    VW = 1 << (m + 1)
    states = {wmask: init_vec}
    for c in range(n):
        for r in range(m):
            new: dict[int, list[int]] = {}

            def put(key, vec, shift):
                if shift:
                    if budget is not None and len(vec) + shift > budget + 1:
                        vec = vec[: budget + 1 - shift]
                        if not any(vec):
                            return
                    vec = [0] * shift + vec
                old = new.get(key)
                if old is None:
                    new[key] = list(vec)
                else:
                    if len(old) < len(vec):
                        old.extend([0] * (len(vec) - len(old)))
                    for i, x in enumerate(vec):
                        old[i] += x

            rbit = 1 << r
            last_col = c == n - 1
            for key, vec in states.items():
                h = key & (VP - 1)
                vp = key & VP
                vw = key & VW
                hin = h & rbit
                vin = vp if r > 0 else 0
                win = vw if r == m - 1 else 0
                wrap_h = last_col and ((wmask >> r) & 1)
                arrivals = (1 if hin else 0) + (1 if vin else 0) \
                    + (1 if win else 0) + (1 if wrap_h else 0)
                base = (h & ~rbit) | (vw if r < m - 1 else 0)
                if not present[r][c]:
                    if arrivals == 0:
                        put(base, vec, 0)
                    continue
                if arrivals >= 2:
                    continue
                if arrivals == 1:
                    put(base, vec, 0)
                    continue
                # uncovered cell: monomer / right / down / column wrap
                put(base, vec, 1 if track_defects else 0)
                kshift = 0 if track_defects else 1
                if not last_col and present[r][c + 1]:
                    put(base | rbit, vec, kshift)
                if r < m - 1 and present[r + 1][c]:
                    put(base | VP, vec, kshift)
                if r == 0 and present[m - 1][c]:
                    put(base | VW, vec, kshift)
            states = new
        if not states:
            return []
    return states.get(0, [])


def _accumulate(total: list[int], vec: list[int], mult: int, offset: int) -> None:
    need = offset + len(vec)
    if len(total) < need:
        total.extend([0] * (need - len(total)))
    for i, x in enumerate(vec):
        total[offset + i] += mult * x


def _run(m: int, n: int, removed: frozenset, track_defects: bool, budget):
    if m < 3 or n < 3:
        raise ValueError("torus sweep needs both sides at least 3")
    total: list[int] = []
    if not removed:
        classes = _rotation_classes(m)
    else:
        classes = tuple((w, 1) for w in range(1 << m))
    for wmask, mult in classes:
        if not track_defects and budget is not None \
                and bin(wmask).count("1") > budget:
            continue
        vec = _sweep(m, n, removed, wmask, track_defects, budget)
        if vec:
            _accumulate(total, vec, mult, 0)
    return total


def torus_match_counts(dims, removed=frozenset(), max_k=None) -> list[int]:
    """Counts of k-edge matchings, k = 0..max_k (all k when max_k is None)."""
    m, n = dims
    removed = frozenset(removed)
    vec = _run(m, n, removed, False, max_k)
    if max_k is not None:
        vec = vec[: max_k + 1]
        vec.extend([0] * (max_k + 1 - len(vec)))
    return vec


def torus_defect_counts(dims, removed=frozenset(), max_defect=0) -> list[int]:
    """Counts of matchings leaving exactly d vertices uncovered, d = 0..max_defect."""
    m, n = dims
    removed = frozenset(removed)
    vec = _run(m, n, removed, True, max_defect)
    vec = vec[: max_defect + 1]
    vec.extend([0] * (max_defect + 1 - len(vec)))
    return vec
