"""The ordinal-indexed families: membership, stars, closures, enumeration.

Three constructions live here.

* The recursive system family at index xi ("A" in the CLI grammar): a set
  belongs iff consuming its elements left to right drives a residual ordinal
  from xi exactly to 0, where each element n descends the residual by
  predecessor (successor case) or fundamental(residual, n) (limit case).
* The union-built hierarchy ("F"): level 0 is the singletons; level a+1
  collects unions of at most min-many consecutive level-a blocks; at limits a
  set belongs iff it belongs to some approximant level a_n with n <= min.
* Named one-off families used as fixtures: two size-vs-minimum families and
  a mixed-section family built from system families.

The "B" kind is the system family at omega**a; at a = 1 it is the classical
family of sets with |s| = min s.

Membership predicates use the infinite ground line: a star test asks for an
extension somewhere in the naturals, not merely inside a window.  Windowed
enumeration is exhaustive over subsets of the window's ground set; closures
computed on a window only count witnesses inside the window (documented on
the operations).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations
from typing import Callable, Dict, Iterator, List, Optional, Tuple

from .finsets import EMPTY, FinSet, Window, as_finset, mask_of, set_of_mask
from .ordinals import (
    ONE,
    OMEGA,
    ZERO,
    Ordinal,
    as_ordinal,
    descend,
    format_ordinal,
    omega_power,
    parse_ordinal,
    wainer_fundamental,
)

__all__ = [
    "residual_after",
    "uniform_member",
    "uniform_star",
    "union_schreier_member",
    "FamilySpec",
    "parse_family",
    "enumerate_family",
    "section",
    "star_closure",
    "down_closure",
    "check_thin",
    "check_sperner",
    "enumerate_union_schreier",
    "iter_union_schreier",
    "spread_union_schreier",
]


# -- system families --------------------------------------------------


def residual_after(xi: Ordinal, s: FinSet) -> Optional[Ordinal]:
    """Residual ordinal after consuming s left to right; None if stuck.

    Stuck means some element had to descend a zero residual, i.e. s passed
    a member boundary and is not an initial segment of any member.
    """
    r = as_ordinal(xi)
    for n in s:
        if r.is_zero:
            return None
        r = descend(r, n)
    return r


def uniform_member(xi, s: FinSet) -> bool:
    """s belongs to the system family at xi (residual consumed exactly)."""
    return residual_after(as_ordinal(xi), s) == ZERO


def uniform_star(xi, s: FinSet) -> bool:
    """s is an initial segment of some member over the infinite ground line.

    Equivalent to the residual walk never getting stuck: any leftover
    residual can always be driven to zero by sufficiently many further
    elements, so no window bound enters.
    """
    return residual_after(as_ordinal(xi), s) is not None


# -- union-built hierarchy (generalized Schreier) ---------------------
#
# Level 0: singletons.  Level a+1: unions of n consecutive level-a blocks,
# n <= min of the whole set.  Limit a: member of some approximant a_n with
# n <= min.  Nonempty initial segments of members are members (cutting the
# last block leaves a smaller block at the same level), so from any start
# the feasible block lengths form a contiguous range and a longest-block
# greedy decomposition decides membership.


def union_schreier_member(a, s: FinSet) -> bool:
    a = as_ordinal(a)
    if not s:
        return False
    if a.is_zero:
        return len(s) == 1
    if a.is_natural:
        # closed forms for the low levels; bulk containment checks lean
        # on these, so skip the general block recursion
        n = a.as_int()
        if n == 1:
            return len(s) <= s[0]
        if n == 2:
            return _schreier_star_parts(s) <= s[0]
    return _greedy_covers(a, s, {})


def _greedy_covers(a: Ordinal, s: FinSet, cache) -> bool:
    """Whole of s splits into at most s[0] greedy level-(a-1) blocks."""
    if a.is_zero:
        return len(s) == 1
    if a.is_limit:
        return any(
            _greedy_covers(wainer_fundamental(a, n), s, cache) for n in range(1, s[0] + 1)
        )
    from .ordinals import predecessor

    b = predecessor(a)
    pos = 0
    blocks = 0
    while pos < len(s):
        if blocks == s[0]:
            return False
        pos += _longest_block(b, s, pos, cache)
        blocks += 1
    return True


def _longest_block(b: Ordinal, s: FinSet, i: int, cache) -> int:
    """Length of the longest prefix of s[i:] that is a level-b member.

    Always >= 1: singletons belong to every level.
    """
    key = (b, i)
    hit = cache.get(key)
    if hit is not None:
        return hit
    if b.is_zero:
        out = 1
    elif b.is_limit:
        out = max(
            _longest_block(wainer_fundamental(b, n), s, i, cache)
            for n in range(1, s[i] + 1)
        )
    else:
        from .ordinals import predecessor

        c = predecessor(b)
        pos = i
        for _ in range(s[i]):  # at most s[i] sub-blocks fit the budget
            if pos >= len(s):
                break
            pos += _longest_block(c, s, pos, cache)
        out = min(pos, len(s)) - i
    cache[key] = out
    return out


# -- named example families -------------------------------------------


def _exL_member(s: FinSet) -> bool:
    return bool(s) and len(s) == 2 * s[0] + 1


def _exL_star(s: FinSet) -> bool:
    return not s or len(s) <= 2 * s[0] + 1


def _exR_member(s: FinSet) -> bool:
    return bool(s) and len(s) == s[0]


def _exR_star(s: FinSet) -> bool:
    return not s or len(s) <= s[0]


def _ex112_section_ordinal(n: int) -> Ordinal:
    # mixed 2w-uniform family: section at 1 is the 5-sets, at 2 the
    # |s|=min s family, above 2 the system family at w+n
    if n == 1:
        return as_ordinal(5)
    if n == 2:
        return OMEGA
    return OMEGA + n


def _ex112_member(s: FinSet) -> bool:
    if not s:
        return False
    return uniform_member(_ex112_section_ordinal(s[0]), s[1:])


def _ex112_star(s: FinSet) -> bool:
    if not s:
        return True
    return uniform_star(_ex112_section_ordinal(s[0]), s[1:])


# -- family literals --------------------------------------------------

_ORDINAL_KINDS = ("A", "B", "F")
_NAMED_KINDS = ("exL", "exR", "ex112")


@dataclass(frozen=True)
class FamilySpec:
    """A concrete family: one of the built-in kinds or a custom predicate.

    kind is the CLI literal tag: "A" (system family at the given ordinal),
    "B" (system family at omega**ordinal), "F" (union-built hierarchy),
    the named fixtures "exL" / "exR" / "ex112", or "custom".
    """

    kind: str
    ordinal: Optional[Ordinal] = None
    predicate: Optional[Callable[[FinSet], bool]] = None
    star_predicate: Optional[Callable[[FinSet], bool]] = None
    name: Optional[str] = None

    def __post_init__(self):
        if self.kind in _ORDINAL_KINDS:
            if self.ordinal is None:
                raise ValueError(f"kind {self.kind} needs an ordinal")
        elif self.kind in _NAMED_KINDS:
            if self.ordinal is not None:
                raise ValueError(f"kind {self.kind} takes no ordinal")
        elif self.kind == "custom":
            if self.predicate is None:
                raise ValueError("custom kind needs a membership predicate")
        else:
            raise ValueError(f"unknown family kind {self.kind!r}")

    # the system ordinal actually consumed by the residual walk, when the
    # family is a system family
    def system_ordinal(self) -> Optional[Ordinal]:
        if self.kind == "A":
            return self.ordinal
        if self.kind == "B":
            return omega_power(self.ordinal)
        return None

    def member(self, s: FinSet) -> bool:
        xi = self.system_ordinal()
        if xi is not None:
            return uniform_member(xi, s)
        if self.kind == "F":
            return union_schreier_member(self.ordinal, s)
        if self.kind == "exL":
            return _exL_member(s)
        if self.kind == "exR":
            return _exR_member(s)
        if self.kind == "ex112":
            return _ex112_member(s)
        return bool(self.predicate(s))

    def star(self, s: FinSet) -> bool:
        """Initial-segment closure test over the infinite ground line."""
        xi = self.system_ordinal()
        if xi is not None:
            return uniform_star(xi, s)
        if self.kind == "F":
            # nonempty initial segments of members are members
            return not s or union_schreier_member(self.ordinal, s)
        if self.kind == "exL":
            return _exL_star(s)
        if self.kind == "exR":
            return _exR_star(s)
        if self.kind == "ex112":
            return _ex112_star(s)
        if self.star_predicate is None:
            raise ValueError(f"no initial-segment test available for {self.literal()}")
        return bool(self.star_predicate(s))

    def down(self, s: FinSet) -> bool:
        """Subset-closure test over the infinite ground line (closed forms).

        Available for the kinds with a worked-out characterization; raises
        for the rest rather than guessing.
        """
        return _down_member(self, s)

    def literal(self) -> str:
        if self.kind in _ORDINAL_KINDS:
            return f"{self.kind}:{format_ordinal(self.ordinal)}"
        if self.kind == "custom":
            return self.name or "custom"
        return self.kind

    def __str__(self) -> str:
        return self.literal()


def parse_family(text: str) -> FamilySpec:
    """Parse a family literal: ``A:<ordinal>``, ``B:<ordinal>``,
    ``F:<ordinal>``, ``exL``, ``exR`` or ``ex112``."""
    t = text.strip()
    if t in _NAMED_KINDS:
        return FamilySpec(kind=t)
    if ":" in t:
        kind, _, rest = t.partition(":")
        kind = kind.strip()
        if kind in _ORDINAL_KINDS:
            return FamilySpec(kind=kind, ordinal=parse_ordinal(rest.strip()))
    raise ValueError(
        f"bad family literal {text!r}; expected A:<ord>, B:<ord>, F:<ord>, "
        "exL, exR or ex112"
    )


# -- subset-closure closed forms --------------------------------------


def _schreier_star_parts(t: FinSet) -> int:
    """Minimal number of parts, each with |part| <= its own minimum.

    Greedy longest-part is optimal: from position i the feasible part
    lengths are exactly 1..min(t[i], rest), a contiguous range.
    """
    pos = 0
    parts = 0
    while pos < len(t):
        pos += min(t[pos], len(t) - pos)
        parts += 1
    return parts


def _down_member(spec: FamilySpec, t: FinSet) -> bool:
    if spec.kind in ("exR",):
        return not t or len(t) <= t[0]
    if spec.kind == "exL":
        return not t or len(t) <= 2 * t[0] + 1
    if spec.kind == "F":
        # hereditary already: subsets of members are members (or empty)
        return not t or union_schreier_member(spec.ordinal, t)
    xi = spec.system_ordinal()
    if xi is None:
        raise ValueError(f"no subset-closure form for {spec.literal()}")
    if not t:
        return True
    if xi.is_natural:
        return len(t) <= xi.as_int()
    terms = xi.terms
    # w*p + k: k leading elements are free, then at most p parts each
    # bounded by its own minimum
    if terms[0][0] == ONE:
        p = terms[0][1]
        k = terms[1][1] if len(terms) > 1 else 0
        if len(terms) > 2 or (len(terms) == 2 and not terms[1][0].is_zero):
            raise ValueError(f"no subset-closure form for {spec.literal()}")
        rest = t[min(k, len(t)):]
        return not rest or _schreier_star_parts(rest) <= p
    # w^2: at most min-many bounded parts
    if xi == omega_power(2):
        return _schreier_star_parts(t) <= t[0]
    raise ValueError(f"no subset-closure form for {spec.literal()}")


# -- windowed enumeration and checks ----------------------------------


def enumerate_family(spec: FamilySpec, window: Window) -> List[FinSet]:
    """All members whose elements lie in the window's ground set, shortlex.

    Exhaustive over subsets of the ground set, so the ground set is capped
    at 25 elements; wider windows belong to the vectorized array interface.
    """
    _cap(window)
    return [s for s in window.subsets() if spec.member(s)]


def section(spec: FamilySpec, m: int, window: Window) -> List[FinSet]:
    """The section at m: sets s > m with {m} union s a member, shortlex."""
    if m not in window:
        raise ValueError(f"{m} is not in the window ground set")
    tail = window.tail(m)
    _cap_len(len(tail))
    out = []
    for k in range(len(tail) + 1):
        for s in combinations(tail, k):
            if spec.member((m,) + s):
                out.append(s)
    return out


def star_closure(spec: FamilySpec, window: Window) -> List[FinSet]:
    """Initial segments of members found within the window, shortlex.

    Only witnesses inside the window count, so a set star-true over the
    infinite ground line may be absent here.
    """
    seen = {EMPTY: None}
    for s in enumerate_family(spec, window):
        for k in range(1, len(s) + 1):
            seen.setdefault(s[:k], None)
    return sorted(seen, key=lambda x: (len(x), x))


def down_closure(spec: FamilySpec, window: Window) -> List[FinSet]:
    """Subsets of members found within the window, shortlex (same caveat)."""
    seen = set()
    for s in enumerate_family(spec, window):
        m = mask_of(s)
        # walk all submasks
        sub = m
        while True:
            seen.add(sub)
            if sub == 0:
                break
            sub = (sub - 1) & m
    return sorted((set_of_mask(x) for x in seen), key=lambda x: (len(x), x))


def check_thin(spec: FamilySpec, window: Window):
    """No member a proper initial segment of another, within the window.

    Returns (True, None) or (False, (shorter, longer)).
    """
    members = enumerate_family(spec, window)
    have = set(members)
    for t in members:
        for k in range(1, len(t)):
            if t[:k] in have:
                return False, (t[:k], t)
    return True, None


def check_sperner(spec: FamilySpec, window: Window):
    """No member a proper subset of another, within the window.

    Scans candidate pairs in shortlex order on the larger set, then the
    smaller, so the reported counterexample is deterministic.
    """
    members = enumerate_family(spec, window)
    masks = [mask_of(s) for s in members]
    for j, t in enumerate(members):
        mt = masks[j]
        for i, s in enumerate(members):
            if len(s) >= len(t):
                break
            if masks[i] & ~mt == 0:
                return False, (s, t)
    return True, None


def _cap(window: Window, limit: int = 25):
    _cap_len(len(window.ground), limit)


def _cap_len(n: int, limit: int = 25):
    if n > limit:
        raise ValueError(
            f"ground set of {n} elements is too wide for exhaustive subset "
            f"enumeration (cap {limit}); use the array interface"
        )


# -- union-hierarchy enumeration --------------------------------------
#
# Members are generated through their greedy decompositions, which are
# canonical: every intermediate block is full (the longest member prefix
# available) and only the last block may stop short.  Each member therefore
# appears exactly once and no dedupe pass is needed at successor levels.


def enumerate_union_schreier(a, window: Window) -> List[FinSet]:
    """All union-hierarchy members at level a inside the window, shortlex."""
    return sorted(iter_union_schreier(a, window), key=lambda s: (len(s), s))


def iter_union_schreier(a, window: Window) -> Iterator[FinSet]:
    """Stream the level-a members inside the window, unordered.

    At successor levels each member comes out exactly once, through its
    greedy decomposition; limit levels dedupe across approximants.
    """
    a = as_ordinal(a)
    ground = window.ground
    if a.is_zero:
        yield from ((g,) for g in ground)
        return
    if a.is_limit:
        seen = set()
        for n in range(1, (ground[-1] if ground else 0) + 1):
            lvl = wainer_fundamental(a, n)
            sub_ground = tuple(g for g in ground if g >= n)
            if not sub_ground:
                continue
            sub = Window(window.lo, window.hi, sub_ground)
            for s in iter_union_schreier(lvl, sub):
                if s not in seen:
                    seen.add(s)
                    yield s
        return
    from .ordinals import predecessor

    b = predecessor(a)
    if not _has_block_generator(b):
        # no structural generator at this level: filter exhaustively
        _cap_len(len(ground), 20)
        yield from (s for s in window.subsets() if s and union_schreier_member(a, s))
        return
    for start in range(len(ground)):
        yield from _gen_blocks(b, ground, start, ground[start], EMPTY)


def _has_block_generator(b: Ordinal) -> bool:
    return b.is_natural and b.as_int() <= 1


def _gen_blocks(
    b: Ordinal,
    ground: Tuple[int, ...],
    start: int,
    budget: int,
    acc: FinSet,
) -> Iterator[FinSet]:
    """Extend acc with blocks at level b beginning at ground[start].

    Every block emitted closes a member (the last block may be any level-b
    member); only full blocks are extended with further blocks, which keeps
    the decomposition greedy-canonical and the output duplicate free.
    """
    if budget == 0:
        return
    for blk, was_full in _blocks_at(b, ground, start):
        s = acc + blk
        yield s
        if was_full:
            nxt = _index_above(ground, blk[-1])
            for start2 in range(nxt, len(ground)):
                yield from _gen_blocks(b, ground, start2, budget - 1, s)


def _blocks_at(b: Ordinal, ground: Tuple[int, ...], start: int):
    """Yield (block, is_full) for level-b blocks beginning at ground[start].

    is_full marks blocks the greedy scan would not stop short at, i.e. the
    block already holds as many elements as its minimum allows.
    """
    if b.is_zero:
        yield (ground[start],), True
        return
    if not b.is_natural or b.as_int() != 1:
        raise NotImplementedError(
            "union-hierarchy block generation is implemented for levels 0..2"
        )
    # level-1 blocks at value v: {v} plus k-1 further elements, k <= v
    v = ground[start]
    tail = ground[start + 1 :]
    for k in range(1, min(v, len(tail) + 1) + 1):
        if k == 1:
            yield (v,), v == 1
        else:
            for rest in combinations(tail, k - 1):
                yield (v,) + rest, k == v


def _index_above(ground: Tuple[int, ...], value: int) -> int:
    import bisect

    return bisect.bisect_right(ground, value)


def spread_union_schreier(a, ground_list: Tuple[int, ...]) -> List[FinSet]:
    """The level-a family spread onto a listed ground set.

    Members over positions 1..len(ground_list) are relabeled through
    position i -> ground_list[i-1].
    """
    w = Window(1, max(len(ground_list), 1))
    out = []
    for s in enumerate_union_schreier(a, w):
        out.append(tuple(ground_list[i - 1] for i in s))
    out.sort(key=lambda s: (len(s), s))
    return out
