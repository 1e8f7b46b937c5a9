"""Command-line frontend.

Exit codes: 0 pass, 1 verification failed, 2 input error, 3 resource cap.
"""

import argparse
import random
import sys

from ..errors import CapExceeded, FanError, InputError
from ..fan import cone_determinants, star_subdivide
from ..gkm import EFFECTIVE, FULL, build_gkm_graph, check_pairwise_independence, export_gkm, graph_violations
from ..joinstar import join_star_commutes, random_triple
from ..orbit import gbt_fan, orbit_fan, permutohedral_fan, verify_blowup, verify_rays
from ..tower import (
    DEFAULT_CAP,
    FlagBottTower,
    GeneralizedBottTower,
    associate,
    random_flag_tower,
    random_generalized_tower,
)
from .formats import dumps, fan_to_doc, load_fan, load_tower, tower_to_doc

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_INPUT = 2
EXIT_CAP = 3


def _emit(text, out):
    if out:
        try:
            with open(out, "w", encoding="utf-8") as fh:
                fh.write(text)
        except OSError as exc:
            raise InputError(f"cannot write {out}: {exc.strerror}") from exc
    else:
        sys.stdout.write(text)


def _generalized(args):
    if not args.tower:
        raise InputError("--tower is required")
    t = load_tower(args.tower)
    if not isinstance(t, GeneralizedBottTower):
        raise InputError("this command needs a generalized_bott tower file")
    return t


def _describe(t):
    return dumps(tower_to_doc(t)).replace("\n", "").replace(" ", "")


# ---------------------------------------------------------------------------
# commands
# ---------------------------------------------------------------------------

def cmd_gkm(args):
    if not args.tower:
        raise InputError("--tower is required")
    t = load_tower(args.tower)
    if isinstance(t, GeneralizedBottTower):
        t = associate(t)
    g = build_gkm_graph(t, EFFECTIVE if args.effective else FULL, args.cap)
    _emit(export_gkm(g, args.format), args.out)
    return EXIT_OK


def cmd_fan(args):
    if args.kind == "permutohedral":
        if args.n is None:
            raise InputError("--n is required for the permutohedral fan")
        f = permutohedral_fan(args.n, args.cap)
    elif args.kind == "gbt":
        f = gbt_fan(_generalized(args), args.cap)
    else:
        f = orbit_fan(_generalized(args), args.cap)
    _emit(dumps(fan_to_doc(f)), args.out)
    return EXIT_OK


def cmd_subdivide(args):
    f = load_fan(args.fan)
    try:
        tau = [int(x) for x in args.cone.split(",")]
    except ValueError:
        raise InputError(f"bad cone {args.cone!r}, expected comma separated ray indices") from None
    try:
        g = star_subdivide(f, tau)
    except FanError as exc:
        raise InputError(str(exc)) from exc
    _emit(dumps(fan_to_doc(g)), args.out)
    return EXIT_OK


def _battery(args, make):
    """The tower from --tower if given, else ``args.count`` random ones from --seed."""
    if args.tower:
        return [load_tower(args.tower)]
    rng = random.Random(args.seed)
    return [make(rng) for _ in range(args.count)]


def _check_blowup(args):
    for t in _battery(args, random_generalized_tower):
        if not isinstance(t, GeneralizedBottTower):
            raise InputError("blowup needs a generalized_bott tower file")
        yield verify_blowup(t, args.cap), _describe(t)


def _check_rays(args):
    for t in _battery(args, random_generalized_tower):
        if not isinstance(t, GeneralizedBottTower):
            raise InputError("rays needs a generalized_bott tower file")
        checks, bad = verify_rays(t, args.cap)
        detail = f"{checks} ray/cone checks" + (f"; first mismatch {bad[0]}" if bad else "")
        yield not bad, f"{_describe(t)} {detail}"


def _check_gkm(args):
    for t in _battery(args, random_flag_tower):
        if not isinstance(t, FlagBottTower):
            t = associate(t)
        g = build_gkm_graph(t, FULL, args.cap)
        problems = graph_violations(g)
        independent = check_pairwise_independence(g)
        detail = f"{len(g.vertices)} vertices, degree {g.degree}"
        if problems:
            detail += f"; {problems[0]}"
        if not independent:
            detail += "; dependent weights at some vertex"
        yield not problems and independent, f"{_describe(t)} {detail}"


def _check_smooth(args):
    if args.fan:
        f, name = load_fan(args.fan), args.fan
    elif args.tower:
        f, name = orbit_fan(_generalized(args), args.cap), "orbit fan"
    elif args.n is not None:
        f, name = permutohedral_fan(args.n, args.cap), f"permutohedral fan n={args.n}"
    else:
        raise InputError("smooth needs --fan, --tower or --n")
    try:
        dets = cone_determinants(f)
    except FanError as exc:
        yield False, f"{name}: {exc}"
        return
    bad = [(c, d) for c, d in zip(f.max_cones, dets) if d not in (1, -1)]
    detail = f"{len(dets)} maximal cones"
    if bad:
        detail += f"; cone {list(bad[0][0])} has determinant {bad[0][1]}"
    yield not bad, f"{name}: {detail}"


def _check_joinstar(args):
    rng = random.Random(args.seed)
    for i in range(args.count):
        f1, f2, tau = random_triple(rng)
        yield join_star_commutes(f1, f2, tau), f"triple {i}: dim {f1.dim}, tau {list(tau)}"


CHECKS = {
    "blowup": _check_blowup,
    "smooth": _check_smooth,
    "gkm": _check_gkm,
    "rays": _check_rays,
    "joinstar": _check_joinstar,
}


def cmd_verify(args):
    # materialise first so input errors surface before any report lines
    results = list(CHECKS[args.check](args))
    for ok, detail in results:
        print(f"{'PASS' if ok else 'FAIL'} {args.check} {detail}")
    passed = sum(ok for ok, _ in results)
    print(f"{args.check}: {passed}/{len(results)} passed")
    return EXIT_OK if passed == len(results) else EXIT_FAILED


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------

def build_parser():
    parser = argparse.ArgumentParser(
        prog="flagbott",
        description="GKM graphs of flag Bott manifolds and fans of generic orbit closures.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--cap", type=int, default=DEFAULT_CAP,
                       help=f"refuse enumerations larger than this (default: {DEFAULT_CAP})")
        p.add_argument("--out", help="write to this file instead of stdout")

    p = sub.add_parser("gkm", help="GKM graph of a flag Bott manifold")
    p.add_argument("--tower", help="tower JSON file (generalized towers are associated first)")
    p.add_argument("--effective", action="store_true", help="drop the eps_{j,n_j+1} coordinates")
    p.add_argument("--format", choices=("dot", "json"), default="dot")
    common(p)
    p.set_defaults(func=cmd_gkm)

    p = sub.add_parser("fan", help="write a fan file")
    p.add_argument("kind", choices=("gbt", "orbit", "permutohedral"))
    p.add_argument("--tower", help="generalized_bott tower JSON file")
    p.add_argument("--n", type=int, help="block size for the permutohedral fan")
    common(p)
    p.set_defaults(func=cmd_fan)

    p = sub.add_parser("verify", help="run a verification check")
    p.add_argument("check", choices=sorted(CHECKS))
    p.add_argument("--tower", help="tower JSON file; omit for a random battery")
    p.add_argument("--fan", help="fan JSON file (smooth)")
    p.add_argument("--n", type=int, help="permutohedral block size (smooth)")
    p.add_argument("--seed", type=int, default=0, help="seed for random batteries (default: 0)")
    p.add_argument("--count", type=int, default=None,
                   help="size of the random battery (default: 100 for joinstar, else 50)")
    p.add_argument("--cap", type=int, default=DEFAULT_CAP)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("subdivide", help="star subdivide a fan along one cone")
    p.add_argument("--fan", required=True, help="fan JSON file")
    p.add_argument("--cone", required=True, help="comma separated 0-based ray indices")
    common(p)
    p.set_defaults(func=cmd_subdivide)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    if getattr(args, "count", 0) is None:
        args.count = 100 if args.check == "joinstar" else 50
    try:
        return args.func(args)
    except CapExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    except (InputError, FanError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


def main_exit():
    sys.exit(main())
