"""Generators for the named extremal families, parameterized and exact.

Most of the families here are "few elements outside a small base" families,
i.e. {S in 2^[n] : |S \\ B| <= c} for a fixed base B, so one helper produces
them all without enumerating 2^[n].
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations, islice
from math import comb

from .core import SetFamily, mask_of, elements_of, _check_ground

CONSTRUCTION_NAMES = (
    "katona", "katona_star", "katona_x", "full_star", "hilton_milner",
    "triangle", "b_family", "d_even", "d_2r", "d_odd5", "g_family",
    "ball", "lex_segment",
)


@dataclass(frozen=True)
class ConstructionSpec:
    """Name plus integer parameters; `center` is only used by `ball`."""

    name: str
    params: dict = field(default_factory=dict)
    center: tuple[int, ...] = ()


def _near_base(n: int, base: tuple[int, ...], c: int) -> SetFamily:
    """{S subset [n] : |S \\ base| <= c}."""
    _check_ground(n)
    base_mask = mask_of(base)
    outside = [e for e in range(1, n + 1) if e not in base]
    masks = []
    for size in range(0, min(c, len(outside)) + 1):
        for extra in combinations(outside, size):
            extra_mask = mask_of(extra)
            sub = base_mask
            while True:
                masks.append(sub | extra_mask)
                if sub == 0:
                    break
                sub = (sub - 1) & base_mask
    return SetFamily.from_masks(n, masks)


def katona(n: int, u: int) -> SetFamily:
    """All sets of size <= d for u = 2d; all sets with |K \\ {1}| <= d for u = 2d + 1."""
    if not 0 < u < n:
        raise ValueError(f"need 0 < u < n, got u={u}, n={n}")
    d = u // 2
    if u % 2 == 0:
        return _near_base(n, (), d)
    return _near_base(n, (1,), d)


def katona_x(n: int, u: int, x: int) -> SetFamily:
    """Odd-u variant anchored at an arbitrary element: |K \\ {x}| <= d."""
    if u % 2 == 0:
        raise ValueError(f"anchored family needs odd u, got {u}")
    if not 0 < u < n:
        raise ValueError(f"need 0 < u < n, got u={u}, n={n}")
    if not 1 <= x <= n:
        raise ValueError(f"anchor {x} outside [1, {n}]")
    return _near_base(n, (x,), u // 2)


def katona_star(n: int, u: int) -> SetFamily:
    """The extremal u-union family among those not inside the Katona family.

    Even u = 2d: drop the d-sets disjoint from [d+1], add [d+1].
    Odd u = 2d+1: drop the (d+1)-sets containing 1 and avoiding [2, d+2],
    add [2, d+2].  Exactly one member lies outside the Katona family and
    the result stays u-union.
    """
    if not 0 < u < n:
        raise ValueError(f"need 0 < u < n, got u={u}, n={n}")
    d = u // 2
    base = set(katona(n, u).members)
    if u % 2 == 0:
        head = mask_of(range(1, d + 2))
        base = {m for m in base if not (m.bit_count() == d and m & head == 0)}
        base.add(head)
    else:
        block = mask_of(range(2, d + 3))
        base = {m for m in base
                if not (m.bit_count() == d + 1 and m & 1 and m & block == 0)}
        base.add(block)
    return SetFamily.from_masks(n, base)


def full_star(n: int, k: int, t: int) -> SetFamily:
    """All k-sets containing [t]."""
    if not (n > k >= t > 0):
        raise ValueError(f"need n > k >= t > 0, got n={n}, k={k}, t={t}")
    head = mask_of(range(1, t + 1))
    return SetFamily.from_masks(
        n, (head | mask_of(rest) for rest in combinations(range(t + 1, n + 1), k - t)))


def hilton_milner(n: int, k: int) -> SetFamily:
    """k-sets containing 1 that meet [2, k+1], plus [2, k+1] itself."""
    if not n > 2 * k:
        raise ValueError(f"need n > 2k, got n={n}, k={k}")
    block = mask_of(range(2, k + 2))
    masks = [block]
    for rest in combinations(range(2, n + 1), k - 1):
        m = 1 | mask_of(rest)
        if m & block:
            masks.append(m)
    return SetFamily.from_masks(n, masks)


def triangle(n: int, k: int) -> SetFamily:
    """k-sets meeting [3] in at least two elements."""
    if not n > 2 * k:
        raise ValueError(f"need n > 2k, got n={n}, k={k}")
    masks = []
    for inside in (1, 2), (1, 3), (2, 3), (1, 2, 3):
        need = k - len(inside)
        if need < 0:
            continue
        im = mask_of(inside)
        for rest in combinations(range(4, n + 1), need):
            masks.append(im | mask_of(rest))
    return SetFamily.from_masks(n, masks)


def b_family(n: int, d: int) -> SetFamily:
    """{B : |B \\ [2]| <= d - 1}; a 2d-union family with one overflow layer."""
    if d < 1:
        raise ValueError(f"need d >= 1, got {d}")
    if n < 2:
        raise ValueError(f"need n >= 2, got {n}")
    return _near_base(n, (1, 2), d - 1)


def d_even(n: int, d: int) -> SetFamily:
    """{D : |D \\ [4]| <= d - 2}; 2d-union, overflow exceeds the even bound below n = 4d - 1."""
    if d < 2:
        raise ValueError(f"need d >= 2, got {d}")
    if n < 4:
        raise ValueError(f"need n >= 4, got {n}")
    return _near_base(n, (1, 2, 3, 4), d - 2)


def d_2r(n: int, r: int) -> SetFamily:
    """{D : |D \\ [6]| <= r - 3}; the 2r-union family behind the crossover analysis."""
    if r < 3:
        raise ValueError(f"need r >= 3, got {r}")
    if n < 6:
        raise ValueError(f"need n >= 6, got {n}")
    return _near_base(n, tuple(range(1, 7)), r - 3)


def d_odd5(n: int, r: int) -> SetFamily:
    """{F : |F \\ [5]| <= r - 2}; the (2r+1)-union analogue on base [5]."""
    if r < 2:
        raise ValueError(f"need r >= 2, got {r}")
    if n < 5:
        raise ValueError(f"need n >= 5, got {n}")
    return _near_base(n, tuple(range(1, 6)), r - 2)


def g_family(n: int, d: int) -> SetFamily:
    """{G : |G \\ [3]| <= d - 1}; a (2d+1)-union family with two overflow layers."""
    if d < 1:
        raise ValueError(f"need d >= 1, got {d}")
    if n < 3:
        raise ValueError(f"need n >= 3, got {n}")
    return _near_base(n, (1, 2, 3), d - 1)


def ball(n: int, center: tuple[int, ...], u: int) -> SetFamily:
    """{K xor A : K in katona(n, u)}: the ball (even u) or double ball (odd u)."""
    if not 0 < u < n:
        raise ValueError(f"need 0 < u < n, got u={u}, n={n}")
    a = mask_of(center)
    if a >> n:
        raise ValueError(f"center {center} has elements outside [1, {n}]")
    return SetFamily.from_masks(n, (m ^ a for m in katona(n, u).members))


def lex_segment(n: int, k: int, m: int) -> SetFamily:
    """First m members of the k-sets in lexicographic order."""
    if not 0 <= k <= n:
        raise ValueError(f"need 0 <= k <= n, got k={k}, n={n}")
    if not 0 <= m <= comb(n, k):
        raise ValueError(f"segment length {m} outside [0, C({n},{k})]")
    return SetFamily.from_masks(
        n, (mask_of(c) for c in islice(combinations(range(1, n + 1), k), m)))


def lex_rank(n: int, k: int, mask: int) -> int:
    """0-based position of a k-set in lexicographic order; inverse of lex_segment."""
    els = elements_of(mask)
    if len(els) != k:
        raise ValueError(f"expected a {k}-set, got size {len(els)}")
    if els and els[-1] > n:
        raise ValueError(f"set {els} has elements outside [1, {n}]")
    rank = 0
    prev = 0
    for i, e in enumerate(els):
        for v in range(prev + 1, e):
            rank += comb(n - v, k - i - 1)
        prev = e
    return rank


def construct(spec: ConstructionSpec) -> SetFamily:
    """Materialize a ConstructionSpec; parameter validation is per family."""
    name = spec.name
    p = spec.params
    if name == "katona":
        return katona(p["n"], p["u"])
    if name == "katona_star":
        return katona_star(p["n"], p["u"])
    if name == "katona_x":
        return katona_x(p["n"], p["u"], p["x"])
    if name == "full_star":
        return full_star(p["n"], p["k"], p["t"])
    if name == "hilton_milner":
        return hilton_milner(p["n"], p["k"])
    if name == "triangle":
        return triangle(p["n"], p["k"])
    if name == "b_family":
        return b_family(p["n"], p["d"])
    if name == "d_even":
        return d_even(p["n"], p["d"])
    if name == "d_2r":
        return d_2r(p["n"], p["r"])
    if name == "d_odd5":
        return d_odd5(p["n"], p["r"])
    if name == "g_family":
        return g_family(p["n"], p["d"])
    if name == "ball":
        return ball(p["n"], spec.center, p["u"])
    if name == "lex_segment":
        return lex_segment(p["n"], p["k"], p["m"])
    raise ValueError(f"unknown construction {name!r}")
