"""Finite subsets of the positive naturals, windows, and basic order helpers.

A finite set is represented as a strictly increasing tuple of ints >= 1; the
empty tuple is the empty set.  A window is a finite truncation [lo, hi] of the
ground line, optionally thinned to an explicit ground list, on which
enumeration and certificate checking are exhaustive.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Iterator, Optional, Sequence, Tuple

FinSet = Tuple[int, ...]

EMPTY: FinSet = ()


def as_finset(elements: Iterable[int]) -> FinSet:
    """Normalise to a sorted tuple, rejecting duplicates and non-positives."""
    xs = tuple(sorted(elements))
    prev = 0
    for x in xs:
        if not isinstance(x, int) or isinstance(x, bool):
            raise TypeError(f"set elements must be ints, got {x!r}")
        if x < 1:
            raise ValueError(f"set elements must be >= 1, got {x}")
        if x == prev:
            raise ValueError(f"duplicate element {x}")
        prev = x
    return xs


def parse_finset(text: str) -> FinSet:
    """Parse the ``{2,3,4}`` text form; ``{}`` is the empty set."""
    t = text.strip()
    if not (t.startswith("{") and t.endswith("}")):
        raise ValueError(f"expected a set literal like {{2,3,4}}, got {text!r}")
    body = t[1:-1].strip()
    if not body:
        return EMPTY
    try:
        elems = [int(p.strip()) for p in body.split(",")]
    except ValueError:
        raise ValueError(f"bad set literal {text!r}") from None
    return as_finset(elems)


def format_finset(s: FinSet) -> str:
    return "{" + ",".join(str(x) for x in s) + "}"


def is_initial_segment(s: FinSet, t: FinSet) -> bool:
    """True iff s consists of the first |s| elements of t (s == t allowed)."""
    return len(s) <= len(t) and t[: len(s)] == s


def is_proper_initial_segment(s: FinSet, t: FinSet) -> bool:
    return len(s) < len(t) and t[: len(s)] == s


def is_subset(s: FinSet, t: FinSet) -> bool:
    return set(s) <= set(t)


def shortlex_key(s: FinSet):
    return (len(s), s)


def spread(indices: FinSet, ground: Sequence[int]) -> FinSet:
    """Relabel index positions into a sorted ground list: i -> ground[i-1].

    The result of moving a set of positions {n_1 < ... < n_k} onto the
    listed ground set.  Indices outside 1..len(ground) are an error.
    """
    out = []
    for i in indices:
        if not 1 <= i <= len(ground):
            raise ValueError(f"index {i} outside 1..{len(ground)}")
        out.append(ground[i - 1])
    return as_finset(out)


# -- bitmask form -----------------------------------------------------
#
# For engine work a set is an int with bit e set for each element e.
# Element values therefore stay <= 63 when packed into uint64 arrays;
# plain Python ints have no such cap.


def mask_of(s: FinSet) -> int:
    m = 0
    for x in s:
        m |= 1 << x
    return m


def set_of_mask(m: int) -> FinSet:
    out = []
    while m:
        low = m & -m
        out.append(low.bit_length() - 1)
        m ^= low
    return tuple(out)


@dataclass(frozen=True)
class Window:
    """Finite truncation [lo, hi], optionally thinned to a ground list."""

    lo: int
    hi: int
    ground: Tuple[int, ...] = field(default=None)  # type: ignore[assignment]

    def __post_init__(self):
        if not (1 <= self.lo <= self.hi):
            raise ValueError(f"need 1 <= lo <= hi, got [{self.lo}, {self.hi}]")
        g = self.ground
        if g is None:
            g = tuple(range(self.lo, self.hi + 1))
        else:
            g = as_finset(g)
            if g and not (self.lo <= g[0] and g[-1] <= self.hi):
                raise ValueError("ground set must lie within [lo, hi]")
        object.__setattr__(self, "ground", g)

    def __contains__(self, x: int) -> bool:
        return x in self.ground

    def contains_set(self, s: FinSet) -> bool:
        gs = set(self.ground)
        return all(x in gs for x in s)

    def subsets(self) -> Iterator[FinSet]:
        """All subsets of the ground set in shortlex order (size, then lex)."""
        for k in range(len(self.ground) + 1):
            yield from combinations(self.ground, k)

    def tail(self, m: int) -> Tuple[int, ...]:
        """Ground elements strictly above m."""
        return tuple(x for x in self.ground if x > m)

    def describe(self) -> str:
        base = f"{self.lo}..{self.hi}"
        if self.ground != tuple(range(self.lo, self.hi + 1)):
            base += " ground " + ",".join(map(str, self.ground))
        return base


def parse_window(text: str, ground: Optional[str] = None) -> Window:
    """Parse ``1..30`` plus an optional ``2,4,6`` ground listing."""
    parts = text.split("..")
    if len(parts) != 2:
        raise ValueError(f"expected lo..hi, got {text!r}")
    try:
        lo, hi = int(parts[0]), int(parts[1])
    except ValueError:
        raise ValueError(f"expected lo..hi with integers, got {text!r}") from None
    g = None
    if ground is not None:
        try:
            g = tuple(int(p) for p in ground.split(",") if p.strip())
        except ValueError:
            raise ValueError(f"bad ground listing {ground!r}") from None
    return Window(lo, hi, g)
