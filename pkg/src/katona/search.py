"""Certificate-producing exact maximizers for the extremal quantities.

Two engines back `maximize`:

* A layered branch-and-bound over initial complexes.  Shifting preserves
  the union property and all layer sizes, and down-closure is free, so for
  shift-invariant objectives the search over initial complexes is lossless
  and its result is proven optimal.  A family is encoded by its layers
  above u/2 (anything of size <= u/2 is pairwise compatible and can be
  completed greedily); each layer is a down-set of the coordinatewise
  order, explored in colex order with cross-layer feasibility checks.
  Pruning uses only the closed-form layer caps and the gap/skip walk
  bounds, so disabling pruning never changes the optimum.

* An unrestricted exhaustive engine that enumerates all maximal feasible
  families (Bron-Kerbosch with pivoting over the pairwise-compatibility
  graph).  Every objective here is monotone under adding members, so the
  maximum over maximal families is the global maximum.  This is the
  independent oracle for the restricted engine and the only proven route
  for objectives not known to be shift-invariant.

Certificates carry one witness (smallest canonical encoding among the
maximizers found), the exact optimum, and enough metadata to be re-checked
by code that never touches the search internals.
"""

from __future__ import annotations

import json
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from itertools import combinations
from math import comb

from .core import (
    CapExceeded, SEARCH_CAP, SetFamily, at_least, diameter,
    family_from_json_dict, family_to_json_dict, is_t_intersecting, is_u_union,
    mask_of,
)
from .bounds import BoundReport, walk_gap_bound, walk_skip_bound
from . import constructions as cons

OBJECTIVES = (
    "max_union_size", "max_diameter_size", "overflow_even", "overflow_odd",
    "upper_layers", "diversity", "diametral_overflow",
)

DIAMETRAL_CENTER_CAP = 20
_EXHAUSTIVE_POOL_CAP = 600


# ---------------------------------------------------------------------------
# direct evaluators (also the recheck path)

def overflow_even_of(fam: SetFamily, d: int) -> int:
    """Members of size above d, i.e. outside the even Katona family."""
    if d < 1:
        raise ValueError(f"need d >= 1, got {d}")
    return sum(1 for m in fam.members if m.bit_count() > d)


def overflow_odd_of(fam: SetFamily, d: int) -> tuple[int, int | None]:
    """min over anchors x of the number of members M with |M \\ {x}| > d,
    together with the smallest minimizing x."""
    if d < 1:
        raise ValueError(f"need d >= 1, got {d}")
    if fam.n == 0:
        return len([m for m in fam.members if m.bit_count() > d]), None
    best_val = None
    best_x = None
    for x in range(1, fam.n + 1):
        keep = ~(1 << (x - 1))
        v = sum(1 for m in fam.members if (m & keep).bit_count() > d)
        if best_val is None or v < best_val:
            best_val, best_x = v, x
    return best_val, best_x


def _in_ball(mask: int, center: int, u: int) -> bool:
    d = u // 2
    if u % 2 == 0:
        return (mask ^ center).bit_count() <= d
    return ((mask ^ center) & ~1).bit_count() <= d


def diametral_overflow(fam: SetFamily, u: int) -> tuple[int, int]:
    """min over centers A of the number of members outside the ball around A,
    with the colex-smallest minimizing center (as a mask)."""
    if u < 1:
        raise ValueError(f"need u >= 1, got {u}")
    if fam.n > DIAMETRAL_CENTER_CAP:
        raise CapExceeded(
            f"center enumeration needs n <= {DIAMETRAL_CENTER_CAP}, got {fam.n}")
    best_val = None
    best_center = 0
    for center in range(1 << fam.n):
        v = sum(1 for m in fam.members if not _in_ball(m, center, u))
        if best_val is None or v < best_val:
            best_val, best_center = v, center
        if best_val == 0:
            break
    return (best_val or 0), best_center


def katona_overflow_of(fam: SetFamily, u: int) -> int:
    """Members outside the Katona family of the same parity: size > d for
    u = 2d, |M \\ {1}| > d for u = 2d + 1.

    For a complex this equals the diametral overflow (the empty center is
    always a minimizing ball center once down-shifts fix the family).  The
    min-over-anchors odd overflow is a strictly different quantity.
    """
    if u < 1:
        raise ValueError(f"need u >= 1, got {u}")
    d = u // 2
    if u % 2 == 0:
        return sum(1 for m in fam.members if m.bit_count() > d)
    return sum(1 for m in fam.members if (m & ~1).bit_count() > d)


# ---------------------------------------------------------------------------
# options and certificates

@dataclass(frozen=True)
class SearchOptions:
    time_limit: float | None = None
    workers: int = 1
    restrict_to_initial_complexes: bool | None = None  # None = per-objective default
    use_pruning: bool = True


@dataclass(frozen=True)
class SearchCertificate:
    objective: str
    params: dict
    optimum: int
    witness: SetFamily
    proven_optimal: bool
    reduction_used: str
    nodes_explored: int
    elapsed_ms: int
    maximizers: int | None = None
    timed_out: bool = False

    def to_json_dict(self) -> dict:
        return {
            "objective": self.objective,
            "params": dict(self.params),
            "optimum": str(self.optimum),
            "witness": family_to_json_dict(self.witness),
            "proven_optimal": self.proven_optimal,
            "reduction": self.reduction_used,
            "nodes": self.nodes_explored,
            "elapsed_ms": self.elapsed_ms,
            "maximizers": self.maximizers,
            "timed_out": self.timed_out,
        }

    @classmethod
    def from_json_dict(cls, obj: dict) -> "SearchCertificate":
        return cls(
            objective=obj["objective"],
            params={k: int(v) for k, v in obj["params"].items()},
            optimum=int(obj["optimum"]),
            witness=family_from_json_dict(obj["witness"]),
            proven_optimal=bool(obj["proven_optimal"]),
            reduction_used=obj["reduction"],
            nodes_explored=int(obj["nodes"]),
            elapsed_ms=int(obj["elapsed_ms"]),
            maximizers=obj.get("maximizers"),
            timed_out=bool(obj.get("timed_out", False)),
        )

    def to_json(self) -> str:
        return json.dumps(self.to_json_dict(), indent=2)


class _TimeUp(Exception):
    pass


# ---------------------------------------------------------------------------
# layered initial-complex engine

def _gap_sets(n: int, k: int) -> dict[int, int]:
    """Mask -> cap C(n, k-p-1) for the missing-staircase sets (1..p, p+2, ..., 2k-p)."""
    out = {}
    for p in range(0, k):
        els = list(range(1, p + 1)) + list(range(p + 2, 2 * k - p + 1, 2))
        if len(els) != k or (els and els[-1] > n):
            continue
        m = mask_of(els)
        cap = walk_gap_bound(n, k, p)
        out[m] = min(out.get(m, cap), cap)
    return out


def _skip_sets(n: int, k: int) -> dict[int, int]:
    """Mask -> cap for the missing arithmetic staircases (p, p+2, ..., p+2k-2)."""
    out = {}
    for p in range(2, k):
        els = list(range(p, p + 2 * k - 1, 2))
        if len(els) != k or els[-1] > n:
            continue
        m = mask_of(els)
        cap = walk_skip_bound(n, k, p)
        out[m] = min(out.get(m, cap), cap)
    return out


def _immediate_preds(mask: int) -> tuple[int, ...]:
    """Covers below in the coordinatewise order: one element slides down one slot."""
    out = []
    m = mask
    while m:
        bit = m & (-m)
        m ^= bit
        below = bit >> 1
        if below and not mask & below:
            out.append((mask ^ bit) | below)
    return tuple(out)


def _shadow_masks(mask: int) -> tuple[int, ...]:
    out = []
    m = mask
    while m:
        bit = m & (-m)
        out.append(mask ^ bit)
        m ^= bit
    return tuple(out)


@dataclass(frozen=True)
class _EngineSpec:
    """Everything a worker needs to rebuild the layered search."""

    n: int
    u: int | None                      # None only for diversity
    levels: tuple[int, ...]            # constrained levels, ascending
    counted_levels: tuple[int, ...]
    free_counted: tuple[int, ...]      # free levels contributing to the value
    mode: str                          # count | overflow_odd | diversity | diametral
    d: int = 0                         # overflow_odd anchor parameter
    diam_u: int = 0                    # diametral objective parameter
    use_pruning: bool = True

    def free_levels(self) -> tuple[int, ...]:
        if self.mode == "diversity":
            return ()
        return tuple(range(0, self.levels[0]))


_CANDIDATE_CAP = 20_000


class _LayeredDFS:
    def __init__(self, spec: _EngineSpec):
        self.spec = spec
        n = spec.n
        self.compat_union = spec.u is not None
        self.cands: list[tuple[int, int]] = []
        self.caps0: dict[int, int] = {}
        self.special: dict[int, dict[int, int]] = {}
        lowest = spec.levels[0]
        for k in spec.levels:
            t = self._fact_t(k)
            cap = comb(n, k)
            if t >= 1:
                cap = min(cap, comb(n, k - t))
            self.caps0[k] = cap
            sp = dict(_gap_sets(n, k))
            for m, c in _skip_sets(n, k).items():
                sp[m] = min(sp.get(m, c), c)
            self.special[k] = sp
            for c in combinations(range(1, n + 1), k):
                self.cands.append((k, mask_of(c)))
        self.N = len(self.cands)
        if self.N > _CANDIDATE_CAP:
            raise CapExceeded(
                f"{self.N} layer candidates exceed the cap of {_CANDIDATE_CAP}")
        self.preds = [_immediate_preds(m) for _, m in self.cands]
        self.shads = [_shadow_masks(m) if k > lowest else None for k, m in self.cands]
        # per-position per-level undecided counts for the optimistic bound
        self.undec = []
        tail = {k: 0 for k in spec.levels}
        for k, _ in reversed(self.cands):
            tail[k] += 1
            self.undec.append(dict(tail))
        self.undec.reverse()
        self.undec.append({k: 0 for k in spec.levels})
        # free sets that count toward the objective, tracked incrementally
        self.free_masks = {
            k: [mask_of(c) for c in combinations(range(1, n + 1), k)]
            for k in spec.free_counted}

    def _fact_t(self, k: int) -> int:
        if self.spec.mode == "diversity":
            return 1
        u = self.spec.u
        d, h = u // 2, u % 2
        return 2 * (k - d) - h

    def _compatible(self, a: int, b: int) -> bool:
        if self.compat_union:
            return (a | b).bit_count() <= self.spec.u
        return a & b != 0

    # -- state management ---------------------------------------------------

    def _reset(self, best_value: int):
        self.best = best_value
        self.count = 0
        self.best_witness = None   # (canonical_key, masks tuple)
        self.included = set()
        self.incl_all = []
        self.by_level = {k: [] for k in self.spec.levels}
        self.caps = dict(self.caps0)
        self.alive = {k: set(v) for k, v in self.free_masks.items()}
        self.nodes = 0
        self.branch_depth = 0

    def run(self, seed_value: int, forced: tuple[bool, ...] = (),
            deadline: float | None = None,
            collect_at: int | None = None) -> dict:
        """Explore (or, with collect_at, expand prefixes to that branch depth)."""
        if sys.getrecursionlimit() < self.N + 2000:
            sys.setrecursionlimit(self.N + 2000)
        self._reset(seed_value)
        self.forced = forced
        self.deadline = deadline
        self.collect_at = collect_at
        self.collected: list[tuple[bool, ...]] = []
        self.decisions: list[bool] = []
        timed_out = False
        try:
            self._dfs(0)
        except _TimeUp:
            timed_out = True
        return {
            "best": self.best,
            "count": self.count,
            "witness": self.best_witness,
            "nodes": self.nodes,
            "timed_out": timed_out,
            "prefixes": self.collected,
        }

    # -- bounding -----------------------------------------------------------

    def _bound(self, pos: int) -> int:
        spec = self.spec
        undec = self.undec[pos]
        if spec.mode == "count":
            b = sum(len(self.alive[k]) for k in spec.free_counted)
            for k in spec.counted_levels:
                b += min(self.caps[k], len(self.by_level[k]) + undec[k])
            return b
        if spec.mode in ("overflow_odd", "diametral"):
            return sum(
                min(self.caps[k], len(self.by_level[k]) + undec[k])
                for k in spec.levels)
        # diversity: the min over anchors is at most the family size
        k = spec.levels[0]
        return min(self.caps[k], len(self.by_level[k]) + undec[k])

    # -- leaf evaluation ----------------------------------------------------

    def _free_completion(self) -> list[int]:
        """All small sets compatible with every included member."""
        out = []
        for k in self.spec.free_levels():
            if k in self.alive:
                out.extend(self.alive[k])
                continue
            for c in combinations(range(1, self.spec.n + 1), k):
                m = mask_of(c)
                if all(self._compatible(m, im) for im in self.incl_all):
                    out.append(m)
        return out

    def _leaf_value_and_masks(self) -> tuple[int, tuple[int, ...]]:
        spec = self.spec
        if spec.mode == "diversity":
            v = self._min_anchor_avoid(self.by_level[spec.levels[0]])
            return v, tuple(self.incl_all)
        masks = tuple(sorted(self.incl_all + self._free_completion()))
        if spec.mode == "count":
            v = sum(len(self.by_level[k]) for k in spec.counted_levels)
            v += sum(len(self.alive[k]) for k in spec.free_counted)
            return v, masks
        if spec.mode == "overflow_odd":
            v = sum(len(self.by_level[k]) for k in spec.levels[1:])
            v += self._min_anchor_avoid(self.by_level[spec.levels[0]])
            return v, masks
        fam = SetFamily.from_masks(spec.n, masks)
        return diametral_overflow(fam, spec.diam_u)[0], masks

    def _min_anchor_avoid(self, layer_masks: list[int]) -> int:
        best = None
        for x in range(self.spec.n):
            bit = 1 << x
            v = sum(1 for m in layer_masks if not m & bit)
            if best is None or v < best:
                best = v
        return best if best is not None else 0

    def _at_leaf(self):
        v, masks = self._leaf_value_and_masks()
        if v < self.best:
            return
        key = tuple(sorted((m.bit_count(), m) for m in masks))
        if v > self.best:
            self.best = v
            self.count = 1
            self.best_witness = (key, masks)
        else:
            self.count += 1
            if self.best_witness is None or key < self.best_witness[0]:
                self.best_witness = (key, masks)

    # -- the DFS ------------------------------------------------------------

    def _prune(self, pos: int) -> bool:
        return self.spec.use_pruning and self._bound(pos) < self.best

    def _dfs(self, pos: int):
        self.nodes += 1
        if self.deadline is not None and self.nodes & 127 == 0:
            if time.monotonic() > self.deadline:
                raise _TimeUp
        restore = []
        try:
            while pos < self.N:
                k, m = self.cands[pos]
                feasible = all(pm in self.included for pm in self.preds[pos])
                if feasible and self.shads[pos] is not None:
                    feasible = all(sm in self.included for sm in self.shads[pos])
                if feasible:
                    feasible = all(
                        self._compatible(m, im) for im in self.incl_all)
                if feasible:
                    break
                cap = self.special[k].get(m)
                if cap is not None and cap < self.caps[k]:
                    restore.append((k, self.caps[k]))
                    self.caps[k] = cap
                    if self._prune(pos + 1):
                        return
                pos += 1
            if pos >= self.N:
                if self.collect_at is not None:
                    self.collected.append(tuple(self.decisions))
                else:
                    self._at_leaf()
                return
            # branch point
            if self.collect_at is not None and self.branch_depth == self.collect_at:
                self.collected.append(tuple(self.decisions))
                return
            depth = self.branch_depth
            want = self.forced[depth] if depth < len(self.forced) else None
            k, m = self.cands[pos]
            self.branch_depth = depth + 1
            if want is not False and not self._prune(pos):
                self.decisions.append(True)
                self.included.add(m)
                self.incl_all.append(m)
                self.by_level[k].append(m)
                killed = []
                for fk, alive in self.alive.items():
                    dead = [a for a in alive if not self._compatible(a, m)]
                    alive.difference_update(dead)
                    killed.append((fk, dead))
                if not self._prune(pos + 1):
                    self._dfs(pos + 1)
                for fk, dead in killed:
                    self.alive[fk].update(dead)
                self.by_level[k].pop()
                self.incl_all.pop()
                self.included.discard(m)
                self.decisions.pop()
            if want is not True:
                self.decisions.append(False)
                cap = self.special[k].get(m)
                old = None
                if cap is not None and cap < self.caps[k]:
                    old = self.caps[k]
                    self.caps[k] = cap
                if not self._prune(pos + 1):
                    self._dfs(pos + 1)
                if old is not None:
                    self.caps[k] = old
                self.decisions.pop()
            self.branch_depth = depth
        finally:
            for k, cap in reversed(restore):
                self.caps[k] = cap


def _worker_solve(args) -> dict:
    spec, seed_value, forced, deadline_rel = args
    engine = _LayeredDFS(spec)
    deadline = None
    if deadline_rel is not None:
        deadline = time.monotonic() + deadline_rel
    res = engine.run(seed_value, forced=forced, deadline=deadline)
    w = res["witness"]
    res["witness"] = None if w is None else (w[0], tuple(w[1]))
    return res


def _run_layered(spec: _EngineSpec, seed_value: int, seed_masks: tuple[int, ...],
                 options: SearchOptions) -> dict:
    deadline = None
    if options.time_limit is not None:
        deadline = time.monotonic() + options.time_limit
    engine = _LayeredDFS(spec)
    if options.workers <= 1:
        res = engine.run(seed_value, deadline=deadline)
        results = [res]
        nodes = res["nodes"]
        timed_out = res["timed_out"]
    else:
        depth = max(1, (3 * options.workers - 1).bit_length())
        col = engine.run(seed_value, collect_at=depth, deadline=deadline)
        prefixes = col["prefixes"]
        remain = None
        if options.time_limit is not None:
            remain = max(0.0, deadline - time.monotonic())
        tasks = [(spec, seed_value, p, remain) for p in prefixes]
        with ProcessPoolExecutor(max_workers=options.workers) as pool:
            results = list(pool.map(_worker_solve, tasks))
        nodes = col["nodes"] + sum(r["nodes"] for r in results)
        timed_out = col["timed_out"] or any(r["timed_out"] for r in results)
    best = seed_value
    count = 0
    witness = None
    for r in results:
        if r["best"] > best:
            best, count, witness = r["best"], r["count"], r["witness"]
        elif r["best"] == best:
            count += r["count"]
            w = r["witness"]
            if w is not None and (witness is None or w[0] < witness[0]):
                witness = w
    if witness is None:
        witness = (None, seed_masks)
        count = None
    if timed_out:
        count = None
    return {
        "best": best, "count": count, "witness_masks": witness[1],
        "nodes": nodes, "timed_out": timed_out,
    }


# ---------------------------------------------------------------------------
# unrestricted exhaustive engine (maximal feasible families)

def _exhaustive(pool_masks: list[int], compat, objective, deadline=None) -> dict:
    nv = len(pool_masks)
    if nv > _EXHAUSTIVE_POOL_CAP:
        raise CapExceeded(
            f"exhaustive pool of {nv} candidates exceeds {_EXHAUSTIVE_POOL_CAP}; "
            "use the initial-complex search")
    adj = [0] * nv
    for i in range(nv):
        for j in range(i + 1, nv):
            if compat(pool_masks[i], pool_masks[j]):
                adj[i] |= 1 << j
                adj[j] |= 1 << i
    start = 0
    for i in range(nv):
        if compat(pool_masks[i], pool_masks[i]):
            start |= 1 << i
    state = {"best": None, "count": 0, "witness": None, "cliques": 0,
             "timed_out": False}

    def visit(r: int):
        state["cliques"] += 1
        members = [pool_masks[i] for i in range(nv) if (r >> i) & 1]
        v = objective(members)
        key = tuple(sorted((m.bit_count(), m) for m in members))
        if state["best"] is None or v > state["best"]:
            state["best"], state["count"] = v, 1
            state["witness"] = (key, tuple(sorted(members)))
        elif v == state["best"]:
            state["count"] += 1
            if key < state["witness"][0]:
                state["witness"] = (key, tuple(sorted(members)))

    def expand(r: int, p: int, x: int):
        if deadline is not None and state["cliques"] % 512 == 0:
            if time.monotonic() > deadline:
                raise _TimeUp
        if p == 0 and x == 0:
            visit(r)
            return
        pux = p | x
        best_u, best_deg = -1, -1
        mm = pux
        while mm:
            v = (mm & -mm).bit_length() - 1
            mm &= mm - 1
            deg = (p & adj[v]).bit_count()
            if deg > best_deg:
                best_deg, best_u = deg, v
        cand = p & ~adj[best_u]
        while cand:
            v = (cand & -cand).bit_length() - 1
            cand &= cand - 1
            vb = 1 << v
            expand(r | vb, p & adj[v], x & adj[v])
            p &= ~vb
            x |= vb

    try:
        expand(0, start, 0)
    except _TimeUp:
        state["timed_out"] = True
    if state["best"] is None:
        state["best"] = objective([])
        state["witness"] = ((), ())
        state["count"] = 1
    return state


# ---------------------------------------------------------------------------
# objective wiring

def _validate_common(n: int):
    if n < 1:
        raise ValueError(f"need n >= 1, got {n}")
    if n > SEARCH_CAP:
        raise CapExceeded(f"search needs n <= {SEARCH_CAP}, got {n}")


def _objective_config(objective: str, params: dict) -> dict:
    """Normalized search configuration for one objective instance."""
    n = int(params["n"])
    _validate_common(n)
    if objective in ("max_union_size", "max_diameter_size", "upper_layers",
                     "diametral_overflow"):
        u = int(params["u"])
        if not 0 < u < n:
            raise ValueError(f"need 0 < u < n, got u={u}, n={n}")
        d = u // 2
        levels = tuple(range(d + 1, u + 1))
        if objective == "upper_layers":
            r = d
            low = r if u % 2 == 0 else r + 1
            counted = tuple(k for k in levels if k >= low)
            free_counted = (r,) if u % 2 == 0 else ()
            return {
                "n": n, "u": u, "levels": levels, "counted": counted,
                "free_counted": free_counted, "mode": "count",
                "objective_low": low,
                "default_restricted": True, "shift_invariant": True,
                "reduction": "initial_complex",
            }
        if objective == "diametral_overflow":
            if n > DIAMETRAL_CENTER_CAP:
                raise CapExceeded(
                    f"diametral search needs n <= {DIAMETRAL_CENTER_CAP}")
            return {
                "n": n, "u": u, "levels": levels, "counted": (),
                "free_counted": (), "mode": "diametral",
                "default_restricted": False, "shift_invariant": False,
                "reduction": "downshift_complex",
            }
        reduction = ("initial_complex" if objective == "max_union_size"
                     else "downshift_complex")
        return {
            "n": n, "u": u, "levels": levels, "counted": levels,
            "free_counted": tuple(range(0, d + 1)), "mode": "count",
            "default_restricted": True, "shift_invariant": True,
            "reduction": reduction,
        }
    if objective == "overflow_even":
        d = int(params["d"])
        u = 2 * d
        if d < 1 or n < 2 * d + 2:
            raise ValueError(f"need d >= 1 and n >= 2d + 2, got n={n}, d={d}")
        levels = tuple(range(d + 1, u + 1))
        return {
            "n": n, "u": u, "levels": levels, "counted": levels,
            "free_counted": (), "mode": "count",
            "default_restricted": True, "shift_invariant": True,
            "reduction": "initial_complex",
        }
    if objective == "overflow_odd":
        d = int(params["d"])
        u = 2 * d + 1
        if d < 1 or n < 2 * d + 2:
            raise ValueError(f"need d >= 1 and n >= 2d + 2, got n={n}, d={d}")
        levels = tuple(range(d + 1, u + 1))
        return {
            "n": n, "u": u, "levels": levels, "counted": (),
            "free_counted": (), "mode": "overflow_odd", "d": d,
            "default_restricted": False, "shift_invariant": False,
            "reduction": "initial_complex",
        }
    if objective == "diversity":
        k = int(params["k"])
        if k < 1 or n <= 2 * k:
            raise ValueError(f"need k >= 1 and n > 2k, got n={n}, k={k}")
        return {
            "n": n, "u": None, "levels": (k,), "counted": (),
            "free_counted": (), "mode": "diversity",
            "default_restricted": False, "shift_invariant": False,
            "reduction": "initial_complex",
        }
    raise ValueError(f"unknown objective {objective!r}")


def _seed_families(objective: str, cfg: dict) -> list[SetFamily]:
    n = cfg["n"]
    out = []
    if objective in ("max_union_size", "max_diameter_size"):
        out.append(cons.katona(n, cfg["u"]))
    elif objective == "upper_layers":
        out.append(cons.katona(n, cfg["u"]))
    elif objective == "overflow_even":
        d = cfg["u"] // 2
        out.append(cons.b_family(n, d))
        if d >= 2 and n >= 4:
            out.append(cons.d_even(n, d))
    elif objective == "overflow_odd":
        d = cfg["d"]
        if n >= 3:
            out.append(cons.g_family(n, d))
    elif objective == "diversity":
        k = int(cfg["levels"][0])
        if n > 2 * k:
            out.append(cons.triangle(n, k))
    elif objective == "diametral_overflow":
        d = cfg["u"] // 2
        if cfg["u"] % 2 == 0:
            out.append(cons.b_family(n, d))
        elif n >= 3 and d >= 1:
            out.append(cons.g_family(n, d))
    return out


def _objective_value(objective: str, cfg: dict, fam: SetFamily) -> int:
    if objective in ("max_union_size", "max_diameter_size"):
        return len(fam)
    if objective == "overflow_even":
        return overflow_even_of(fam, cfg["u"] // 2)
    if objective == "overflow_odd":
        return overflow_odd_of(fam, cfg["d"])[0]
    if objective == "upper_layers":
        return len(at_least(fam, cfg["objective_low"]))
    if objective == "diversity":
        if not fam.members:
            return 0
        return min(
            sum(1 for m in fam.members if not m >> x & 1) for x in range(fam.n))
    if objective == "diametral_overflow":
        return diametral_overflow(fam, cfg["u"])[0]
    raise ValueError(objective)


def _feasible(objective: str, cfg: dict, fam: SetFamily) -> bool:
    if objective in ("max_union_size", "overflow_even", "overflow_odd",
                     "upper_layers"):
        return is_u_union(fam, cfg["u"])
    if objective in ("max_diameter_size", "diametral_overflow"):
        return diameter(fam) <= cfg["u"]
    if objective == "diversity":
        k = cfg["levels"][0]
        return (all(m.bit_count() == k for m in fam.members)
                and (len(fam) == 0 or is_t_intersecting(fam, 1)))
    raise ValueError(objective)


def _exhaustive_pool(objective: str, cfg: dict) -> tuple[list[int], object]:
    n = cfg["n"]
    if objective == "diversity":
        k = cfg["levels"][0]
        pool = [mask_of(c) for c in combinations(range(1, n + 1), k)]
        return pool, lambda a, b: a & b != 0
    u = cfg["u"]
    if objective in ("max_diameter_size", "diametral_overflow"):
        pool = list(range(1 << n))
        return pool, lambda a, b: (a ^ b).bit_count() <= u
    lo = 0 if objective == "max_union_size" else (
        cfg["objective_low"] if objective == "upper_layers" else u // 2 + 1)
    pool = [m for m in range(1 << n)
            if lo <= m.bit_count() <= u]
    return pool, lambda a, b: (a | b).bit_count() <= u


def _exhaustive_objective(objective: str, cfg: dict):
    n = cfg["n"]
    if objective in ("max_union_size", "max_diameter_size", "overflow_even",
                     "upper_layers"):
        return len
    if objective == "overflow_odd":
        d = cfg["d"]

        def value(members):
            if not members:
                return 0
            return min(
                sum(1 for m in members if (m & ~(1 << x)).bit_count() > d)
                for x in range(n))
        return value
    if objective == "diversity":
        def value(members):
            if not members:
                return 0
            return min(
                sum(1 for m in members if not m >> x & 1) for x in range(n))
        return value
    if objective == "diametral_overflow":
        u = cfg["u"]
        centers = list(range(1 << n))

        def value(members):
            return min(
                sum(1 for m in members if not _in_ball(m, c, u))
                for c in centers)
        return value
    raise ValueError(objective)


def maximize(objective: str, params: dict,
             options: SearchOptions | None = None) -> SearchCertificate:
    """Exact maximization with a re-checkable certificate.

    Shift-invariant objectives default to the initial-complex search and
    are proven optimal; the others default to unrestricted exhaustive
    search (tiny ground sets only).  Forcing restriction for the latter
    yields a certified lower bound with proven_optimal False.
    """
    if objective not in OBJECTIVES:
        raise ValueError(f"unknown objective {objective!r}")
    options = options or SearchOptions()
    cfg = _objective_config(objective, params)
    restricted = options.restrict_to_initial_complexes
    if restricted is None:
        restricted = cfg["default_restricted"]
    t0 = time.monotonic()

    seeds = []
    for fam in _seed_families(objective, cfg):
        if _feasible(objective, cfg, fam):
            seeds.append((_objective_value(objective, cfg, fam), fam))
    seed_value, seed_fam = -1, SetFamily(cfg["n"], ())
    for v, fam in seeds:
        if v > seed_value:
            seed_value, seed_fam = v, fam

    if restricted:
        spec = _EngineSpec(
            n=cfg["n"], u=cfg["u"], levels=cfg["levels"],
            counted_levels=cfg["counted"], free_counted=cfg["free_counted"],
            mode=cfg["mode"], d=cfg.get("d", 0),
            diam_u=cfg["u"] if cfg["mode"] == "diametral" else 0,
            use_pruning=options.use_pruning)
        res = _run_layered(spec, seed_value, tuple(seed_fam.members), options)
        witness = SetFamily.from_masks(cfg["n"], res["witness_masks"])
        proven = cfg["shift_invariant"] and not res["timed_out"]
        cert = SearchCertificate(
            objective=objective, params={k: int(v) for k, v in params.items()},
            optimum=res["best"], witness=witness,
            proven_optimal=proven, reduction_used=cfg["reduction"],
            nodes_explored=res["nodes"],
            elapsed_ms=int((time.monotonic() - t0) * 1000),
            maximizers=res["count"], timed_out=res["timed_out"])
        return cert

    pool, compat = _exhaustive_pool(objective, cfg)
    deadline = None
    if options.time_limit is not None:
        deadline = t0 + options.time_limit
    res = _exhaustive(pool, compat, _exhaustive_objective(objective, cfg),
                      deadline)
    best, witness_masks = res["best"], res["witness"][1]
    if best < seed_value:
        best, witness_masks = seed_value, tuple(seed_fam.members)
    witness = SetFamily.from_masks(cfg["n"], witness_masks)
    return SearchCertificate(
        objective=objective, params={k: int(v) for k, v in params.items()},
        optimum=best, witness=witness,
        proven_optimal=not res["timed_out"], reduction_used="none",
        nodes_explored=res["cliques"],
        elapsed_ms=int((time.monotonic() - t0) * 1000),
        maximizers=None, timed_out=res["timed_out"])


# ---------------------------------------------------------------------------
# compression verification and certificate rechecking

def verify_hilton(n: int, a: int, b: int) -> BoundReport:
    """For every cross-intersecting pair, the same-size lexicographic
    segments must be cross-intersecting too; checked over all pairs."""
    if n <= a + b:
        raise ValueError(f"need n > a + b, got n={n}, a={a}, b={b}")
    if comb(n, a) + comb(n, b) > 22:
        raise CapExceeded(
            f"C({n},{a}) + C({n},{b}) = {comb(n, a) + comb(n, b)} exceeds 22")
    a_sets = [mask_of(c) for c in combinations(range(1, n + 1), a)]
    b_sets = [mask_of(c) for c in combinations(range(1, n + 1), b)]
    # for each b-set, the a-sets disjoint from it, as an index mask
    disjoint = []
    for bm in b_sets:
        dm = 0
        for i, am in enumerate(a_sets):
            if am & bm == 0:
                dm |= 1 << i
        disjoint.append(dm)
    max_allowed = [0] * (len(a_sets) + 1)
    for fam_bits in range(1 << len(a_sets)):
        size = fam_bits.bit_count()
        allowed = sum(1 for dm in disjoint if fam_bits & dm == 0)
        if allowed > max_allowed[size]:
            max_allowed[size] = allowed
    counterexample = None
    for s in range(1, len(a_sets) + 1):
        for t in range(1, max_allowed[s] + 1):
            seg_a = cons.lex_segment(n, a, s)
            seg_b = cons.lex_segment(n, b, t)
            for am in seg_a.members:
                for bm in seg_b.members:
                    if am & bm == 0:
                        counterexample = (s, t,
                                          family_to_json_dict(seg_a),
                                          family_to_json_dict(seg_b))
                        break
                if counterexample:
                    break
            if counterexample:
                break
        if counterexample:
            break
    return BoundReport(
        name="hilton_compression", params={"n": n, "a": a, "b": b},
        holds=counterexample is None, counterexample=counterexample,
        formula="cross-intersecting sizes stay cross-intersecting as lex segments")


def recheck(cert: SearchCertificate) -> bool:
    """Re-derive feasibility and objective value of the witness from the
    direct evaluators; never trusts anything search-internal."""
    try:
        cfg = _objective_config(cert.objective, cert.params)
    except (ValueError, CapExceeded):
        return False
    fam = cert.witness
    if fam.n != cfg["n"]:
        return False
    if not _feasible(cert.objective, cfg, fam):
        return False
    return _objective_value(cert.objective, cfg, fam) == cert.optimum
