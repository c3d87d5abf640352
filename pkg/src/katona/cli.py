"""Command-line front end: JSON in, JSON out, exact values as decimal strings.

Exit codes: 0 success / predicate holds; 1 predicate false or verification
violated; 2 usage or validation error; 3 resource cap or time limit.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from fractions import Fraction

from . import bounds, constructions, search, transforms
from .core import (
    CapExceeded, SetFamily, complement_family, down_closure,
    family_from_json_dict, family_to_json_dict, is_complex,
    is_cross_t_intersecting, is_t_intersecting, is_u_union, layer,
    mask_of, elements_of,
)
from .walks import brute_hit_count, family_walks_hit, reflection_count, walk_of_set


def _read_json(path: str) -> dict:
    if path == "-":
        return json.load(sys.stdin)
    with open(path) as fh:
        return json.load(fh)


def _read_family(path: str) -> SetFamily:
    return family_from_json_dict(_read_json(path))


def _emit(obj: dict, args) -> None:
    if getattr(args, "format", "json") == "table":
        text = "\n".join(f"{k}: {json.dumps(v)}" for k, v in obj.items())
    else:
        text = json.dumps(obj, indent=2)
    out = getattr(args, "output", "-") or "-"
    if out == "-":
        print(text)
    else:
        with open(out, "w") as fh:
            fh.write(text + "\n")


def _parse_ints(text: str) -> tuple[int, ...]:
    text = text.strip()
    if not text:
        return ()
    return tuple(int(x) for x in text.split(","))


# ---------------------------------------------------------------------------
# subcommand handlers

_FAMILY_PARAMS = {
    "katona": ("n", "u"), "katona-star": ("n", "u"), "katona-x": ("n", "u", "x"),
    "full-star": ("n", "k", "t"), "hilton-milner": ("n", "k"),
    "triangle": ("n", "k"), "b-family": ("n", "d"), "d-even": ("n", "d"),
    "d-2r": ("n", "r"), "d-odd5": ("n", "r"), "g-family": ("n", "d"),
    "ball": ("n", "u"), "lex-segment": ("n", "k", "m"),
}


def _cmd_construct(args) -> int:
    name = args.family
    if name not in _FAMILY_PARAMS:
        raise ValueError(f"unknown family {name!r}")
    params = {}
    for p in _FAMILY_PARAMS[name]:
        v = getattr(args, p)
        if v is None:
            raise ValueError(f"family {name} needs --{p}")
        params[p] = v
    center = _parse_ints(args.center) if args.center else ()
    spec = constructions.ConstructionSpec(
        name.replace("-", "_"), params, center)
    fam = constructions.construct(spec)
    _emit(family_to_json_dict(fam, args.form), args)
    return 0


def _cmd_check(args) -> int:
    fam = _read_family(args.input)
    pred = args.pred
    if pred == "t-intersecting":
        holds = is_t_intersecting(fam, args.t)
    elif pred == "u-union":
        holds = is_u_union(fam, args.u)
    elif pred == "cross-t-intersecting":
        if not args.input2:
            raise ValueError("cross-t-intersecting needs --input2")
        holds = is_cross_t_intersecting(fam, _read_family(args.input2), args.t)
    elif pred == "complex":
        holds = is_complex(fam)
    elif pred == "initial":
        holds = transforms.is_initial(fam)
    else:
        raise ValueError(f"unknown predicate {pred!r}")
    _emit({"pred": pred, "holds": holds}, args)
    return 0 if holds else 1


def _cmd_transform(args) -> int:
    fam = _read_family(args.input)
    log = None
    if args.op == "shift-initial":
        out, log = transforms.make_initial(fam)
    elif args.op == "downshift-complex":
        out, log = transforms._downshift_fixpoint(fam)
    elif args.op == "complement":
        out = complement_family(fam)
    elif args.op == "closure":
        out = down_closure(fam)
    elif args.op == "translate":
        out = transforms.left_translate(fam, args.p)
        log = transforms.ShiftLog((("translate", args.p),), 1)
    else:
        raise ValueError(f"unknown transform {args.op!r}")
    if args.log and log is not None:
        with open(args.log, "w") as fh:
            fh.write(log.to_json() + "\n")
    _emit(family_to_json_dict(out, args.form), args)
    return 0


def _cmd_overflow(args) -> int:
    fam = _read_family(args.input)
    if args.parity == "even":
        value = search.overflow_even_of(fam, args.d)
        _emit({"parity": "even", "d": args.d, "overflow": str(value)}, args)
    else:
        value, best_x = search.overflow_odd_of(fam, args.d)
        _emit({"parity": "odd", "d": args.d, "overflow": str(value),
               "best_x": best_x}, args)
    return 0


def _cmd_walks(args) -> int:
    if args.mode == "count":
        fn = brute_hit_count if args.brute else reflection_count
        value = fn(args.n, args.k, args.t, args.a, args.b)
        _emit({"count": str(value)}, args)
        return 0
    if args.mode == "trace":
        mask = mask_of(_parse_ints(args.set))
        w = walk_of_set(mask, args.n)
        _emit({"points": [list(p) for p in w.points]}, args)
        return 0
    if args.mode == "verify-hits":
        fam = _read_family(args.input)
        holds = family_walks_hit(fam, args.t)
        _emit({"t": args.t, "all_hit": holds}, args)
        return 0 if holds else 1
    raise ValueError(f"unknown walks mode {args.mode!r}")


def _cmd_bound(args) -> int:
    name = args.name
    if name == "binom":
        _emit({"name": name, "value": str(bounds.binom(args.n, args.k))}, args)
        return 0
    if name == "katona":
        _emit({"name": name, "value": str(bounds.katona_bound(args.n, args.u))}, args)
        return 0
    if name == "ekr":
        _emit({"name": name,
               "value": str(bounds.ekr_bound(args.n, args.k, args.t))}, args)
        return 0
    if name == "hm":
        _emit({"name": name, "value": str(bounds.hm_bound(args.n, args.k))}, args)
        return 0
    if name == "walk-gap":
        _emit({"name": name,
               "value": str(bounds.walk_gap_bound(args.n, args.k, args.p))}, args)
        return 0
    if name == "walk-skip":
        _emit({"name": name,
               "value": str(bounds.walk_skip_bound(args.n, args.k, args.p))}, args)
        return 0
    if name == "d-even-overflow":
        _emit({"name": name,
               "value": str(bounds.d_even_overflow(args.n, args.d))}, args)
        return 0
    if name == "d-even-gap":
        _emit({"name": name, "value": str(bounds.d_even_gap(args.n, args.d))}, args)
        return 0
    if name == "d2r-gap":
        _emit({"name": name, "value": str(bounds.d2r_gap(args.n, args.r))}, args)
        return 0
    if name == "quintic":
        sign = bounds.crossover_quintic(Fraction(args.c))
        _emit({"name": name, "sign": sign}, args)
        return 0
    report = None
    if name == "overflow":
        report = bounds.overflow_bound(args.n, args.u)
    elif name == "upper-layer":
        report = bounds.upper_layer_bound(args.n, args.u)
    elif name == "diversity":
        report = bounds.diversity_formula(args.n, args.k)
    elif name == "layer-refined":
        report = bounds.layer_bound_refined(args.n, args.t, args.ell)
    elif name == "key-ratio":
        report = bounds.key_ratio_holds(args.n, args.r, args.a, args.b)
    elif name == "sperner-cross":
        report = bounds.sperner_cross_check(
            _read_family(args.input), _read_family(args.input2))
    elif name == "shadow":
        report = bounds.shadow_bound_check(_read_family(args.input), args.ell)
    else:
        raise ValueError(f"unknown bound {name!r}")
    _emit(report.to_json_dict(), args)
    if report.holds is False:
        return 1
    return 0


_OBJECTIVE_FLAGS = {
    "max-union-size": ("max_union_size", ("n", "u")),
    "max-diameter-size": ("max_diameter_size", ("n", "u")),
    "overflow-even": ("overflow_even", ("n", "d")),
    "overflow-odd": ("overflow_odd", ("n", "d")),
    "upper-layers": ("upper_layers", ("n", "u")),
    "diversity": ("diversity", ("n", "k")),
    "diametral-overflow": ("diametral_overflow", ("n", "u")),
}


def _cmd_search(args) -> int:
    if args.objective not in _OBJECTIVE_FLAGS:
        raise ValueError(f"unknown objective {args.objective!r}")
    objective, wanted = _OBJECTIVE_FLAGS[args.objective]
    params = {}
    for p in wanted:
        v = getattr(args, p)
        if v is None:
            raise ValueError(f"objective {args.objective} needs --{p}")
        params[p] = v
    restrict = {"auto": None, "yes": True, "no": False}[args.initial_complexes]
    options = search.SearchOptions(
        time_limit=args.time_limit, workers=args.workers,
        restrict_to_initial_complexes=restrict)
    cert = search.maximize(objective, params, options)
    _emit(cert.to_json_dict(), args)
    return 3 if cert.timed_out else 0


def _cmd_recheck(args) -> int:
    cert = search.SearchCertificate.from_json_dict(_read_json(args.input))
    ok = search.recheck(cert)
    _emit({"recheck": ok}, args)
    return 0 if ok else 1


# ---------------------------------------------------------------------------
# verification suites (fixed grids; see --help text)

def _suite_hilton() -> list[str]:
    failures = []
    for n, a, b in ((5, 2, 2), (4, 1, 2)):
        rep = search.verify_hilton(n, a, b)
        if not rep.holds:
            failures.append(f"hilton({n},{a},{b}) violated: {rep.counterexample}")
    return failures


def _random_union_family(rng: random.Random, n: int, u: int) -> SetFamily:
    masks: list[int] = []
    for _ in range(rng.randrange(1, 14)):
        m = rng.randrange(1 << n)
        if m.bit_count() > u:
            continue
        if all((m | o).bit_count() <= u for o in masks):
            masks.append(m)
    return SetFamily.from_masks(n, masks)


def _suite_facts() -> list[str]:
    failures = []
    rng = random.Random(20240601)
    # layer intersection facts on random union-bounded families
    for _ in range(300):
        n = rng.randrange(2, 8)
        u = rng.randrange(1, n)
        fam = _random_union_family(rng, n, u)
        d, h = u // 2, u % 2
        for i in range(1, u - d + 1):
            li = layer(fam, d + i) if d + i <= n else None
            if li is None or not li.members:
                continue
            t = 2 * i - h
            if t >= 1 and not is_t_intersecting(li, t):
                failures.append(f"layer {d+i} of a {u}-union family not {t}-intersecting")
            for j in range(i, u - d + 1):
                lj = layer(fam, d + j) if d + j <= n else None
                tc = i + j - h
                if lj is None or not lj.members or tc < 1:
                    continue
                if not is_cross_t_intersecting(li, lj, tc):
                    failures.append(
                        f"layers {d+i},{d+j} of a {u}-union family not cross {tc}-intersecting")
    # down-shift intersection monotonicity: all family pairs over a
    # 6-subset universe on [3]
    universe = list(range(6))
    fams = [SetFamily.from_masks(3, [universe[i] for i in range(6) if bits >> i & 1])
            for bits in range(1 << 6)]
    shifted = {i: [transforms.down_shift(f, i) for f in fams] for i in (1, 2, 3)}
    for ai, fam_a in enumerate(fams):
        sa = set(fam_a.members)
        for bi in range(ai, len(fams)):
            base = len(sa & set(fams[bi].members))
            for i in (1, 2, 3):
                da = set(shifted[i][ai].members)
                db = set(shifted[i][bi].members)
                if len(da & db) < base:
                    failures.append("down-shift decreased an intersection")
    # down-shift of balls
    for n in range(2, 6):
        for u in range(1, min(n, 5)):
            for a_mask in range(1 << n):
                ball = constructions.ball(n, elements_of(a_mask), u)
                for i in range(1, n + 1):
                    want = constructions.ball(
                        n, elements_of(a_mask & ~(1 << (i - 1))), u)
                    if transforms.down_shift(ball, i) != want:
                        failures.append(f"down-shift of ball(n={n},u={u}) wrong")
    # complexes: plain vs diametral overflow agree
    for _ in range(100):
        n = rng.randrange(2, 7)
        u = rng.randrange(1, n)
        fam = down_closure(_random_union_family(rng, n, min(n, u + 2)))
        sigma = search.katona_overflow_of(fam, u)
        kappa = search.diametral_overflow(fam, u)[0]
        if sigma != kappa:
            failures.append(f"complex with sigma {sigma} != kappa {kappa}")
    return failures


def _suite_sperner() -> list[str]:
    failures = []
    rng = random.Random(77)
    for _ in range(300):
        n = rng.randrange(3, 8)
        a = rng.randrange(1, n // 2 + 1)
        b = rng.randrange(1, n - a)
        fam_a: list[int] = []
        fam_b: list[int] = []
        pool_a = [mask_of(c) for c in _combos(n, a)]
        pool_b = [mask_of(c) for c in _combos(n, b)]
        rng.shuffle(pool_a)
        rng.shuffle(pool_b)
        for m in pool_a[:rng.randrange(1, 6)]:
            fam_a.append(m)
        for m in pool_b:
            if all(m & o for o in fam_a):
                fam_b.append(m)
                if len(fam_b) >= 5:
                    break
        rep = bounds.sperner_cross_check(
            SetFamily.from_masks(n, fam_a), SetFamily.from_masks(n, fam_b))
        if not rep.holds:
            failures.append(f"cross ratio bound violated at n={n},a={a},b={b}")
        k = rng.randrange(2, n)
        fam = SetFamily.from_masks(
            n, rng.sample([mask_of(c) for c in _combos(n, k)],
                          rng.randrange(1, bounds.binom(n, k) + 1)))
        rep = bounds.shadow_bound_check(fam, rng.randrange(0, k))
        if not rep.holds:
            failures.append(f"shadow ratio bound violated at n={n},k={k}")
    return failures


def _combos(n, k):
    from itertools import combinations
    return combinations(range(1, n + 1), k)


def _suite_reflection() -> list[str]:
    failures = []
    for n in range(0, 13):
        for k in range(0, n + 1):
            for t in range(-4, 5):
                for a in range(0, 4):
                    for b in range(0, 4):
                        try:
                            expected = reflection_count(n, k, t, a, b)
                        except ValueError:
                            continue
                        got = brute_hit_count(n, k, t, a, b)
                        if expected != got:
                            failures.append(
                                f"reflection mismatch at {(n, k, t, a, b)}: "
                                f"{expected} vs {got}")
    return failures


def _suite_katona_small() -> list[str]:
    failures = []
    for n in range(3, 7):
        for u in range(2, n):
            cert = search.maximize("max_union_size", {"n": n, "u": u})
            if cert.optimum != bounds.katona_bound(n, u):
                failures.append(f"max union size at (n={n},u={u}) != bound")
            if not search.recheck(cert):
                failures.append(f"certificate recheck failed at (n={n},u={u})")
    return failures


_SUITES = {
    "hilton": _suite_hilton,
    "facts": _suite_facts,
    "sperner": _suite_sperner,
    "reflection": _suite_reflection,
    "katona-small": _suite_katona_small,
}


def _cmd_verify(args) -> int:
    failures = _SUITES[args.suite]()
    _emit({"suite": args.suite, "holds": not failures,
           "violations": failures[:20]}, args)
    return 0 if not failures else 1


# ---------------------------------------------------------------------------
# parser

def _build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(
        prog="katona",
        description="Exact combinatorics of union-bounded set families.")
    sub = ap.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("-o", "--output", default="-", help="output path or -")
        p.add_argument("--format", choices=("json", "table"), default="json")

    p = sub.add_parser("construct", help="materialize a named family")
    p.add_argument("--family", required=True, choices=sorted(_FAMILY_PARAMS))
    for flag in ("n", "u", "k", "t", "d", "r", "x", "m"):
        p.add_argument(f"--{flag}", type=int)
    p.add_argument("--center", default="", help="comma-separated elements (ball)")
    p.add_argument("--form", choices=("sets", "hex"), default="sets")
    common(p)

    p = sub.add_parser("check", help="evaluate a predicate on a family file")
    p.add_argument("--pred", required=True, choices=(
        "t-intersecting", "u-union", "cross-t-intersecting", "complex", "initial"))
    p.add_argument("--input", required=True)
    p.add_argument("--input2")
    p.add_argument("--t", type=int)
    p.add_argument("--u", type=int)
    common(p)

    p = sub.add_parser("transform", help="apply a compression operator")
    p.add_argument("--op", required=True, choices=(
        "shift-initial", "downshift-complex", "complement", "closure", "translate"))
    p.add_argument("--input", required=True)
    p.add_argument("--p", type=int, default=0)
    p.add_argument("--log", help="write the replayable operator log here")
    p.add_argument("--form", choices=("sets", "hex"), default="sets")
    common(p)

    p = sub.add_parser("overflow", help="overflow of a family file")
    p.add_argument("--parity", required=True, choices=("even", "odd"))
    p.add_argument("--d", type=int, required=True)
    p.add_argument("--input", required=True)
    common(p)

    p = sub.add_parser("walks", help="walk counting and tracing")
    p.add_argument("--mode", required=True, choices=("count", "trace", "verify-hits"))
    for flag in ("n", "k", "t"):
        p.add_argument(f"--{flag}", type=int)
    p.add_argument("--a", type=int, default=0)
    p.add_argument("--b", type=int, default=0)
    p.add_argument("--set", default="", help="comma-separated elements (trace)")
    p.add_argument("--input", help="family file (verify-hits)")
    p.add_argument("--brute", action="store_true",
                   help="count by enumeration instead of the closed form")
    common(p)

    p = sub.add_parser("bound", help="evaluate a named bound")
    p.add_argument("--name", required=True)
    for flag in ("n", "u", "k", "t", "d", "r", "p", "a", "b", "ell"):
        p.add_argument(f"--{flag}", type=int)
    p.add_argument("--c", help="rational like 11/10 (quintic)")
    p.add_argument("--input")
    p.add_argument("--input2")
    common(p)

    p = sub.add_parser("search", help="run an exact maximizer, emit a certificate")
    p.add_argument("--objective", required=True, choices=sorted(_OBJECTIVE_FLAGS))
    for flag in ("n", "u", "k", "d"):
        p.add_argument(f"--{flag}", type=int)
    p.add_argument("--time-limit", type=float)
    p.add_argument("--workers", type=int, default=1)
    p.add_argument("--initial-complexes", choices=("auto", "yes", "no"),
                   default="auto",
                   help="restrict to initial complexes (auto: per objective)")
    common(p)

    p = sub.add_parser("verify", help="run a fixed verification battery", epilog=(
        "grids: hilton = (5,2,2),(4,1,2); facts = layer facts on 300 seeded "
        "union-bounded families (n<=7), down-shift intersections exhaustive "
        "over a 6-set universe on [3], balls n<=5 u<=4 all centers, 100 "
        "seeded complexes sigma=kappa; sperner = 300 seeded instances; "
        "reflection = full grid n<=12 |t|<=4 a,b<=3; katona-small = "
        "2<=u<n<=6 against the closed-form bound"))
    p.add_argument("--suite", required=True, choices=sorted(_SUITES))
    common(p)

    p = sub.add_parser("recheck", help="re-verify a search certificate file")
    p.add_argument("--input", required=True)
    common(p)

    return ap


_HANDLERS = {
    "construct": _cmd_construct,
    "check": _cmd_check,
    "transform": _cmd_transform,
    "overflow": _cmd_overflow,
    "walks": _cmd_walks,
    "bound": _cmd_bound,
    "search": _cmd_search,
    "verify": _cmd_verify,
    "recheck": _cmd_recheck,
}


def run(argv=None) -> int:
    try:
        args = _build_parser().parse_args(argv)
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 2
    try:
        return _HANDLERS[args.command](args)
    except CapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    except (ValueError, KeyError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
