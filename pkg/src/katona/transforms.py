"""Compression operators: i<-j shifts, down-shifts, left-translates.

All operators are pure: they take a SetFamily and return a new one.  The
fixpoint drivers sweep operator indices in a fixed order so that logs are
reproducible; any sweep order converges to the same kind of fixpoint.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .core import SetFamily, elements_of


@dataclass(frozen=True)
class ShiftLog:
    """Replayable record of applied operators.

    ops entries: ("shift", i, j) | ("downshift", i) | ("translate", p).
    Only operators that changed the family are recorded, so replaying the
    log on the original input reproduces the output exactly.
    """

    ops: tuple[tuple, ...] = field(default_factory=tuple)
    passes: int = 0

    def to_json_dict(self) -> dict:
        out = []
        for op in self.ops:
            if op[0] == "shift":
                out.append({"kind": "shift", "i": op[1], "j": op[2]})
            elif op[0] == "downshift":
                out.append({"kind": "downshift", "i": op[1]})
            else:
                out.append({"kind": "translate", "p": op[1]})
        return {"ops": out, "passes": self.passes}

    @classmethod
    def from_json_dict(cls, obj: dict) -> "ShiftLog":
        ops = []
        for entry in obj["ops"]:
            kind = entry["kind"]
            if kind == "shift":
                ops.append(("shift", int(entry["i"]), int(entry["j"])))
            elif kind == "downshift":
                ops.append(("downshift", int(entry["i"])))
            elif kind == "translate":
                ops.append(("translate", int(entry["p"])))
            else:
                raise ValueError(f"unknown op kind {kind!r}")
        return cls(tuple(ops), int(obj.get("passes", 0)))

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict())


def shift_ij(fam: SetFamily, i: int, j: int) -> SetFamily:
    """Replace j by i in each member when the result is absent from the family."""
    if not (1 <= i < j <= fam.n):
        raise ValueError(f"need 1 <= i < j <= {fam.n}, got i={i}, j={j}")
    bi = 1 << (i - 1)
    bj = 1 << (j - 1)
    present = set(fam.members)
    out = []
    for m in fam.members:
        if m & bj and not m & bi:
            moved = (m ^ bj) | bi
            out.append(m if moved in present else moved)
        else:
            out.append(m)
    res = SetFamily.from_masks(fam.n, out)
    assert len(res) == len(fam)  # the shift is injective on members
    return res


def make_initial(fam: SetFamily) -> tuple[SetFamily, ShiftLog]:
    """Apply i<-j shifts in lexicographic (i, j) sweeps until nothing moves."""
    n = fam.n
    ops = []
    passes = 0
    while True:
        passes += 1
        changed = False
        for i in range(1, n):
            for j in range(i + 1, n + 1):
                shifted = shift_ij(fam, i, j)
                if shifted != fam:
                    fam = shifted
                    ops.append(("shift", i, j))
                    changed = True
        if not changed:
            break
    return fam, ShiftLog(tuple(ops), passes)


def make_initial_pair(fam_a: SetFamily, fam_b: SetFamily) -> tuple[SetFamily, SetFamily]:
    """Shift two families simultaneously until both are initial.

    Applying the same shift to both sides is what preserves the cross
    intersecting property; shifting one side alone can destroy it.
    """
    if fam_a.n != fam_b.n:
        raise ValueError(f"ground-set mismatch: {fam_a.n} vs {fam_b.n}")
    n = fam_a.n
    while True:
        changed = False
        for i in range(1, n):
            for j in range(i + 1, n + 1):
                sa = shift_ij(fam_a, i, j)
                sb = shift_ij(fam_b, i, j)
                if sa != fam_a or sb != fam_b:
                    fam_a, fam_b = sa, sb
                    changed = True
        if not changed:
            return fam_a, fam_b


def precedes(mask_a: int, mask_b: int) -> bool:
    """Coordinatewise order on equal-size sets: sorted elements pointwise <=."""
    a = elements_of(mask_a)
    b = elements_of(mask_b)
    if len(a) != len(b):
        raise ValueError(f"precedes needs equal sizes, got {len(a)} and {len(b)}")
    return all(x <= y for x, y in zip(a, b))


def is_initial(fam: SetFamily) -> bool:
    """Fixpoint of every i<-j shift.

    Equivalent to each uniform layer being a down-set of the coordinatewise
    order; checked via closure under single j -> i swaps, which generate it.
    """
    present = set(fam.members)
    n = fam.n
    for m in fam.members:
        rest = m
        while rest:
            bj = rest & (-rest)
            rest ^= bj
            j = bj.bit_length()
            for i in range(1, j):
                bi = 1 << (i - 1)
                if not m & bi and ((m ^ bj) | bi) not in present:
                    return False
    return True


def down_shift(fam: SetFamily, i: int) -> SetFamily:
    """Remove element i from each member whose reduction is absent."""
    if not 1 <= i <= fam.n:
        raise ValueError(f"element {i} outside ground set [1, {fam.n}]")
    bi = 1 << (i - 1)
    present = set(fam.members)
    out = []
    for m in fam.members:
        if m & bi and (m ^ bi) not in present:
            out.append(m ^ bi)
        else:
            out.append(m)
    res = SetFamily.from_masks(fam.n, out)
    assert len(res) == len(fam)
    return res


def _downshift_fixpoint(fam: SetFamily) -> tuple[SetFamily, ShiftLog]:
    ops = []
    passes = 0
    while True:
        passes += 1
        changed = False
        for i in range(1, fam.n + 1):
            shifted = down_shift(fam, i)
            if shifted != fam:
                fam = shifted
                ops.append(("downshift", i))
                changed = True
        if not changed:
            return fam, ShiftLog(tuple(ops), passes)


def make_complex_by_downshift(fam: SetFamily) -> SetFamily:
    """Down-shift sweeps in index order until the family is a complex.

    Size is preserved and the diameter never grows.
    """
    res, _ = _downshift_fixpoint(fam)
    return res


def left_translate(fam: SetFamily, p: int) -> SetFamily:
    """Decrease every element by p; the result lives on [n - p]."""
    if p < 0:
        raise ValueError(f"translate amount must be nonnegative, got {p}")
    low = (1 << p) - 1
    for m in fam.members:
        if m & low:
            raise ValueError(
                f"member {elements_of(m)} has an element <= {p}; cannot translate")
    return SetFamily.from_masks(fam.n - p, (m >> p for m in fam.members))


def replay(fam: SetFamily, log: ShiftLog) -> SetFamily:
    """Re-apply a recorded op sequence to a family."""
    for op in log.ops:
        if op[0] == "shift":
            fam = shift_ij(fam, op[1], op[2])
        elif op[0] == "downshift":
            fam = down_shift(fam, op[1])
        elif op[0] == "translate":
            fam = left_translate(fam, op[1])
        else:
            raise ValueError(f"unknown op {op!r}")
    return fam
