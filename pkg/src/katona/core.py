"""Bitmask subsets and canonical set families over a ground set [n].

A subset of [n] = {1, ..., n} is a plain int bitmask: element e is present
iff bit (e - 1) is set.  Elements are 1-based everywhere on the API surface
and in JSON; bit positions are the only 0-based thing here.

A SetFamily is an immutable, deduplicated, canonically ordered tuple of
masks.  Two families over the same ground set are equal iff their encodings
are identical, which makes families usable as dict keys and makes all
outputs byte-stable.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator

ALGEBRAIC_CAP = 63  # single machine word for masks
SEARCH_CAP = 24     # enforced by search entry points, not here


class CapExceeded(ValueError):
    """Ground set or enumeration size beyond a hard resource cap."""


def mask_of(elements: Iterable[int]) -> int:
    """Bitmask of a collection of 1-based elements."""
    m = 0
    for e in elements:
        m |= 1 << (e - 1)
    return m


def elements_of(mask: int) -> tuple[int, ...]:
    """Sorted 1-based elements of a mask."""
    out = []
    e = 1
    while mask:
        if mask & 1:
            out.append(e)
        mask >>= 1
        e += 1
    return tuple(out)


def subsets_of(mask: int) -> Iterator[int]:
    """All submasks of mask, including 0 and mask itself."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def _check_ground(n: int) -> None:
    if n < 0:
        raise ValueError(f"ground set size must be nonnegative, got {n}")
    if n > ALGEBRAIC_CAP:
        raise CapExceeded(f"ground set size {n} exceeds the cap of {ALGEBRAIC_CAP}")


@dataclass(frozen=True)
class SetFamily:
    """Canonical family of subsets of [n].

    members are masks sorted by (cardinality, mask value); for equal
    cardinality, mask-value order is exactly colexicographic order on sets.
    """

    n: int
    members: tuple[int, ...]

    @classmethod
    def from_masks(cls, n: int, masks: Iterable[int]) -> "SetFamily":
        _check_ground(n)
        full = (1 << n) - 1
        seen = set()
        for m in masks:
            if m < 0 or m & ~full:
                raise ValueError(f"mask {m:#x} has elements outside [1, {n}]")
            seen.add(m)
        ordered = tuple(sorted(seen, key=lambda m: (m.bit_count(), m)))
        return cls(n, ordered)

    def __len__(self) -> int:
        return len(self.members)

    def __iter__(self) -> Iterator[int]:
        return iter(self.members)

    def __contains__(self, mask: int) -> bool:
        return mask in set(self.members)

    def member_sets(self) -> tuple[tuple[int, ...], ...]:
        return tuple(elements_of(m) for m in self.members)

    def canonical_key(self) -> tuple[tuple[int, int], ...]:
        """Total order key on families: lexicographic over (size, mask) pairs."""
        return tuple((m.bit_count(), m) for m in self.members)


def family_from_sets(n: int, sets: Iterable[Iterable[int]]) -> SetFamily:
    """Build a canonical family from element lists; duplicates collapse."""
    _check_ground(n)
    masks = []
    for s in sets:
        s = tuple(s)
        for e in s:
            if not 1 <= e <= n:
                raise ValueError(f"element {e} outside ground set [1, {n}]")
        masks.append(mask_of(s))
    return SetFamily.from_masks(n, masks)


# ---------------------------------------------------------------------------
# predicates

def is_t_intersecting(fam: SetFamily, t: int) -> bool:
    """Every two members (and every member with itself) share >= t elements.

    The self-pair makes a single member M qualify iff |M| >= t; this is the
    convention under which layer intersection facts hold verbatim for
    one-member layers.
    """
    if t < 1:
        raise ValueError(f"t must be positive, got {t}")
    ms = fam.members
    for m in ms:
        if m.bit_count() < t:
            return False
    for i, a in enumerate(ms):
        for b in ms[i + 1:]:
            if (a & b).bit_count() < t:
                return False
    return True


def is_u_union(fam: SetFamily, u: int) -> bool:
    """Every two members (including a member with itself) have union <= u."""
    if u < 0:
        raise ValueError(f"u must be nonnegative, got {u}")
    ms = fam.members
    for m in ms:
        if m.bit_count() > u:
            return False
    for i, a in enumerate(ms):
        for b in ms[i + 1:]:
            if (a | b).bit_count() > u:
                return False
    return True


def is_cross_t_intersecting(fam_a: SetFamily, fam_b: SetFamily, t: int) -> bool:
    """Every pair with one member from each family meets in >= t elements."""
    if t < 1:
        raise ValueError(f"t must be positive, got {t}")
    if fam_a.n != fam_b.n:
        raise ValueError(f"ground-set mismatch: {fam_a.n} vs {fam_b.n}")
    for a in fam_a.members:
        for b in fam_b.members:
            if (a & b).bit_count() < t:
                return False
    return True


def is_complex(fam: SetFamily) -> bool:
    """Closed under taking subsets (removing one element at a time suffices)."""
    present = set(fam.members)
    for m in fam.members:
        rem = m
        while rem:
            bit = rem & (-rem)
            if (m ^ bit) not in present:
                return False
            rem ^= bit
    return True


# ---------------------------------------------------------------------------
# set-level operators

def complement_family(fam: SetFamily) -> SetFamily:
    full = (1 << fam.n) - 1
    return SetFamily.from_masks(fam.n, (full ^ m for m in fam.members))


def layer(fam: SetFamily, ell: int) -> SetFamily:
    """Members of size exactly ell."""
    if not 0 <= ell <= fam.n:
        raise ValueError(f"layer {ell} outside [0, {fam.n}]")
    return SetFamily(fam.n, tuple(m for m in fam.members if m.bit_count() == ell))


def at_least(fam: SetFamily, ell: int) -> SetFamily:
    """Members of size >= ell."""
    if not 0 <= ell <= fam.n:
        raise ValueError(f"layer {ell} outside [0, {fam.n}]")
    return SetFamily(fam.n, tuple(m for m in fam.members if m.bit_count() >= ell))


def down_closure(fam: SetFamily) -> SetFamily:
    """Smallest complex containing the family."""
    out = set()
    for m in fam.members:
        for sub in subsets_of(m):
            out.add(sub)
    return SetFamily.from_masks(fam.n, out)


def shadow(fam: SetFamily, ell: int) -> SetFamily:
    """All ell-subsets contained in some member of a k-uniform family, ell < k."""
    sizes = {m.bit_count() for m in fam.members}
    if len(sizes) > 1:
        raise ValueError(f"shadow requires a uniform family, got sizes {sorted(sizes)}")
    if not fam.members:
        return SetFamily(fam.n, ())
    k = sizes.pop()
    if not 0 <= ell < k:
        raise ValueError(f"shadow level {ell} must satisfy 0 <= ell < {k}")
    out = set()
    for m in fam.members:
        for small in combinations(elements_of(m), ell):
            out.add(mask_of(small))
    return SetFamily.from_masks(fam.n, out)


def diameter(fam: SetFamily) -> int:
    """Largest symmetric difference between two members; 0 below two members."""
    ms = fam.members
    best = 0
    for i, a in enumerate(ms):
        for b in ms[i + 1:]:
            d = (a ^ b).bit_count()
            if d > best:
                best = d
    return best


def avoid(fam: SetFamily, x: int) -> SetFamily:
    """Members not containing the element x."""
    if not 1 <= x <= fam.n:
        raise ValueError(f"element {x} outside ground set [1, {fam.n}]")
    bit = 1 << (x - 1)
    return SetFamily(fam.n, tuple(m for m in fam.members if not m & bit))


def trace(fam: SetFamily, p_set: Iterable[int], q_set: Iterable[int]) -> SetFamily:
    """{F \\ Q : F in family, F intersect Q = P}, kept on the same ground set.

    Members of the result live inside [n] \\ Q; no re-indexing happens.
    """
    p = mask_of(p_set)
    q = mask_of(q_set)
    if p & ~q:
        raise ValueError("P must be a subset of Q")
    full = (1 << fam.n) - 1
    if q & ~full:
        raise ValueError(f"Q has elements outside [1, {fam.n}]")
    return SetFamily.from_masks(
        fam.n, (m & ~q for m in fam.members if m & q == p))


# ---------------------------------------------------------------------------
# JSON round trip
#
# Canonical form: {"n": int, "sets": [[1-based sorted ints], ...]}.
# Compact alternate accepted on input: {"n": int, "hex": ["1f", ...]}.

def family_to_json_dict(fam: SetFamily, form: str = "sets") -> dict:
    if form == "sets":
        return {"n": fam.n, "sets": [list(elements_of(m)) for m in fam.members]}
    if form == "hex":
        return {"n": fam.n, "hex": [format(m, "x") for m in fam.members]}
    raise ValueError(f"unknown family JSON form {form!r}")


def family_from_json_dict(obj: dict) -> SetFamily:
    if "n" not in obj:
        raise ValueError("family JSON needs an 'n' field")
    n = int(obj["n"])
    if "sets" in obj:
        return family_from_sets(n, obj["sets"])
    if "hex" in obj:
        return SetFamily.from_masks(n, (int(h, 16) for h in obj["hex"]))
    raise ValueError("family JSON needs a 'sets' or 'hex' field")


def family_to_json(fam: SetFamily, form: str = "sets") -> str:
    return json.dumps(family_to_json_dict(fam, form))


def family_from_json(text: str) -> SetFamily:
    return family_from_json_dict(json.loads(text))
