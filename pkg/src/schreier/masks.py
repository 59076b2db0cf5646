"""Vectorized enumeration of system families over wide windows.

Finite sets are uint64 bitmasks (bit e set iff element e belongs), so a
window may reach element 62.  For a root ordinal xi the engine walks the
residual transition graph once to learn which (state, start) pairs are
reachable and how many completions each has, then assembles one mask
array per state, ordered by descending first element.  That ordering makes
"all members with first element > m" a prefix slice, so sections and tail
restrictions are O(1) views into the root array.

Only pairs the root actually demands get array coverage: a finite residual
k, covered from every start, would otherwise cost all C(hi, k) subsets.
"""

from __future__ import annotations

from functools import cmp_to_key
from typing import Dict, List, Tuple

import numpy as np

from .finsets import FinSet
from .ordinals import ZERO, Ordinal, as_ordinal, compare, descend

__all__ = ["MaskFamily", "masks_to_sets", "sort_masks"]


class MaskFamily:
    """The system family at xi over the window [root_start+1, hi].

    member_masks() holds every member whose elements all exceed
    root_start, as bitmasks grouped by descending first element.
    """

    def __init__(self, xi, hi: int, root_start: int = 0):
        xi = as_ordinal(xi)
        if not 1 <= hi <= 62:
            raise ValueError("window top must be in 1..62")
        if not 0 <= root_start <= hi:
            raise ValueError("root_start must be in 0..hi")
        self.xi = xi
        self.hi = hi
        self.root_start = root_start
        if xi.is_zero:
            # the family {empty set}
            self._minstart: Dict[Ordinal, int] = {}
            self._cnt: Dict[Ordinal, np.ndarray] = {}
            self._root = np.zeros(1, dtype=np.uint64)
            return
        self._discover()
        self._count()
        self._assemble()

    # -- pass 0: reachable (state, start) pairs -----------------------

    def _discover(self):
        minstart: Dict[Ordinal, int] = {self.xi: self.root_start}
        seen = {(self.xi, self.root_start)}
        stack = [(self.xi, self.root_start)]
        while stack:
            r, m = stack.pop()
            for n in range(m + 1, self.hi + 1):
                d = descend(r, n)
                if d == ZERO:
                    continue
                if (d, n) in seen:
                    continue
                seen.add((d, n))
                if d not in minstart or n < minstart[d]:
                    minstart[d] = n
                stack.append((d, n))
        self._minstart = minstart

    # -- pass 1: completion counts ------------------------------------

    def _count(self):
        # cnt[r][m - minstart[r]] = number of members of the state-r family
        # with all elements in (m, hi]
        order = sorted(self._minstart, key=cmp_to_key(compare))
        cnt: Dict[Ordinal, np.ndarray] = {}
        for r in order:
            lo = self._minstart[r]
            row = np.zeros(self.hi - lo + 1, dtype=np.int64)
            total = 0
            for m in range(self.hi - 1, lo - 1, -1):
                n = m + 1
                d = descend(r, n)
                if d == ZERO:
                    total += 1
                else:
                    total += int(cnt[d][n - self._minstart[d]])
                row[m - lo] = total
            cnt[r] = row
        self._cnt = cnt
        self._order = order

    def _count_at(self, r: Ordinal, m: int) -> int:
        """Members of the state-r family inside (m, hi]."""
        lo = self._minstart[r]
        if m < lo:
            raise ValueError(f"start {m} below covered range for state")
        return int(self._cnt[r][m - lo])

    # -- pass 2: mask arrays ------------------------------------------

    def _assemble(self):
        arrays: Dict[Ordinal, np.ndarray] = {}
        for r in self._order:
            lo = self._minstart[r]
            chunks: List[np.ndarray] = []
            for n in range(self.hi, lo, -1):
                bit = np.uint64(1 << n)
                d = descend(r, n)
                if d == ZERO:
                    chunks.append(np.array([bit], dtype=np.uint64))
                else:
                    c = self._count_at(d, n)
                    if c:
                        chunks.append(arrays[d][:c] | bit)
            arrays[r] = (
                np.concatenate(chunks) if chunks else np.zeros(0, dtype=np.uint64)
            )
        self._root = arrays[self.xi]
        # subsidiary arrays are copies inside the root; free them
        del arrays

    # -- public views -------------------------------------------------

    def member_count(self, above: int | None = None) -> int:
        if self.xi.is_zero:
            return 1
        m = self.root_start if above is None else above
        return self._count_at(self.xi, m)

    def member_masks(self, above: int | None = None) -> np.ndarray:
        """Members with all elements > above (default: the whole window).

        Prefix view of the root array; no copy.
        """
        if self.xi.is_zero:
            return self._root
        return self._root[: self.member_count(above)]

    def section_masks(self, m: int) -> np.ndarray:
        """Masks of the section at m: s with {m} u s a member, s > m."""
        if self.xi.is_zero:
            raise ValueError("the zero-index family has no sections")
        if not self.root_start < m <= self.hi:
            raise ValueError(f"section point {m} outside ({self.root_start}, {self.hi}]")
        start = self._count_at(self.xi, m)
        stop = self._count_at(self.xi, m - 1)
        return self._root[start:stop] ^ np.uint64(1 << m)


def sort_masks(masks: np.ndarray) -> np.ndarray:
    """Ascending numeric sort; a canonical order for set comparison."""
    return np.sort(masks, kind="stable")


def masks_to_sets(masks) -> List[FinSet]:
    """Decode masks to sorted tuples (small result sets only)."""
    out = []
    for m in masks:
        m = int(m)
        s = []
        while m:
            b = m & -m
            s.append(b.bit_length() - 1)
            m ^= b
        out.append(tuple(s))
    return out
