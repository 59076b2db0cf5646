"""Canonical block decomposition of finite sets against a uniform family.

Any nonempty finite set splits uniquely into consecutive family members
followed by a tail that is a proper initial segment of a member.  Thinness
of the family is what makes the greedy scan correct: at most one prefix of
any set is a member, so the first member prefix found is the only choice.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional, Tuple

from .families import FamilySpec, check_sperner
from .finsets import EMPTY, FinSet, Window, as_finset
from .ordinals import ZERO, descend

__all__ = [
    "CanonicalRep",
    "FamilyContractError",
    "canonical_rep",
    "trichotomy",
    "sperner_witness",
]


class FamilyContractError(ValueError):
    """The family violated a uniformity assumption (e.g. is not thin)."""


@dataclass(frozen=True)
class CanonicalRep:
    """Blocks are members in increasing order; the tail extends to a member.

    type is the number of blocks; type 0 means the whole set is a proper
    initial segment of a member (empty tail means the set ends exactly on
    a block boundary).
    """

    blocks: Tuple[FinSet, ...]
    tail: FinSet

    @property
    def type(self) -> int:
        return len(self.blocks)

    def reconstruct(self) -> FinSet:
        out: Tuple[int, ...] = ()
        for b in self.blocks:
            out += b
        return out + self.tail

    def as_json_dict(self) -> dict:
        return {
            "blocks": [list(b) for b in self.blocks],
            "tail": list(self.tail),
            "type": self.type,
        }


def canonical_rep(spec: FamilySpec, A) -> CanonicalRep:
    A = as_finset(A)
    if not A:
        raise ValueError("canonical representation is defined for nonempty sets")
    xi = spec.system_ordinal()
    if xi is not None:
        return _system_rep(xi, A)
    return _generic_rep(spec, A)


def _system_rep(xi, A: FinSet) -> CanonicalRep:
    # the residual walk visits zero exactly at block boundaries; restart it
    # there and whatever is left over is the tail
    blocks: List[FinSet] = []
    cur: List[int] = []
    r = xi
    for n in A:
        cur.append(n)
        r = descend(r, n)
        if r == ZERO:
            blocks.append(tuple(cur))
            cur = []
            r = xi
    return CanonicalRep(blocks=tuple(blocks), tail=tuple(cur))


def _generic_rep(spec: FamilySpec, A: FinSet) -> CanonicalRep:
    blocks: List[FinSet] = []
    rest = A
    while rest:
        hits = [k for k in range(1, len(rest) + 1) if spec.member(rest[:k])]
        if len(hits) > 1:
            raise FamilyContractError(
                f"{spec.literal()} is not thin: {rest[:hits[0]]} and "
                f"{rest[:hits[1]]} are both members"
            )
        if not hits:
            if not spec.star(rest):
                raise FamilyContractError(
                    f"{spec.literal()} is not uniform here: {rest} has no "
                    "member prefix and does not extend to a member"
                )
            return CanonicalRep(blocks=tuple(blocks), tail=rest)
        blocks.append(rest[: hits[0]])
        rest = rest[hits[0] :]
    return CanonicalRep(blocks=tuple(blocks), tail=EMPTY)


def trichotomy(spec: FamilySpec, A) -> Tuple[str, Optional[FinSet]]:
    """Classify A: extends past a member, or sits strictly inside one.

    Returns ("ExtendsMember", witness) where witness is the unique member
    prefix of A (possibly A itself), or ("ProperPrefixOfMember", None).
    """
    A = as_finset(A)
    if not A:
        raise ValueError("the empty set is not classified")
    hits = [k for k in range(1, len(A) + 1) if spec.member(A[:k])]
    if len(hits) > 1:
        raise FamilyContractError(f"{spec.literal()} is not thin on {A}")
    if hits:
        return "ExtendsMember", A[: hits[0]]
    if not spec.star(A):
        raise FamilyContractError(
            f"{spec.literal()} is not uniform here: {A} neither contains a "
            "member prefix nor extends to a member"
        )
    return "ProperPrefixOfMember", None


def sperner_witness(spec: FamilySpec, window: Window):
    """First member pair s strictly inside t within the window, if any."""
    ok, pair = check_sperner(spec, window)
    return None if ok else pair
