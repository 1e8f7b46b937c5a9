"""Acceptance criteria, one test each.

Every test prints a single ``PASS``/``FAIL`` line (shown even under output
capture) and then asserts.  Run standalone with ``python3 tests/test_acceptance.py``.
"""

import random
import sys
import time
from functools import lru_cache
from math import factorial, prod

import pytest

from conftest import (
    FIBER_TABLE,
    X_EXAMPLE_POINT,
    expected_fiber,
    three_stage_rays,
    two_stage_rays,
    three_stage_gbt,
    two_stage_flag,
    two_stage_gbt,
    x_example_tower,
)
from flagbott.fan import check_unimodular, fans_equal
from flagbott.gkm import (
    EFFECTIVE,
    FULL,
    build_gkm_graph,
    check_pairwise_independence,
    compute_all_X,
    tangential_weights,
)
from flagbott.joinstar import join_star_commutes, random_triple
from flagbott.orbit import (
    blowup_fan,
    gbt_fan,
    orbit_fan,
    orbit_ray,
    permutohedral_by_subdivision,
    permutohedral_fan,
    verify_rays,
)
from flagbott.tower import flag_tower, random_flag_tower, random_generalized_tower

SEED = 20240601


@lru_cache(maxsize=None)
def blowup_towers():
    """The towers named by the blow-up criterion, reused by the two after it."""
    towers = [(f"two-stage a={a}", two_stage_gbt(a)) for a in (-2, 0, 1, 7)]
    towers.append(("three-stage all ones", three_stage_gbt(1, 1, 1, 1, 1)))
    rng = random.Random(SEED)
    for i in range(50):
        towers.append((f"random #{i}", random_generalized_tower(rng, max_m=3, max_n=3, bound=5)))
    return tuple(towers)


def criterion_1():
    start = time.perf_counter()
    t = x_example_tower()
    X = compute_all_X(t, X_EXAMPLE_POINT)
    ok = (X[(2, 1)] == ((2, 0, 1), (0, 0, 0))
          and X[(3, 1)] == ((0, 0, 0), (14, 0, 8))
          and X[(3, 2)] == ((0, 0), (5, 0)))
    ok = ok and (14, 0, 8, 5, 0, 1, -1) in tangential_weights(t, X_EXAMPLE_POINT, FULL)
    elapsed = time.perf_counter() - start
    return ok and elapsed < 1, f"X golden values and weight, {elapsed:.3f}s (< 1s)"


def criterion_2():
    start = time.perf_counter()
    g = build_gkm_graph(flag_tower((2,), {}), EFFECTIVE)
    src = g.index[((2, 3, 1),)]
    hits = [e for e in g.edges if e.source == src and g.vertices[e.target] == ((1, 3, 2),)]
    ok = (len(g.vertices) == 6 and all(len(o) == 3 for o in g.out_edges)
          and len(hits) == 1 and hits[0].label == (1, -1))
    g2 = build_gkm_graph(two_stage_flag(1, 2), EFFECTIVE)
    table = {}
    for e in g2.edges:
        w1, w2 = g2.vertices[e.source]
        if e.block == 2 and w2 == (1, 2):
            table[w1] = e.label
    matched = sum(table.get(w) == expected_fiber(w, 1, 2) for w in FIBER_TABLE)
    elapsed = time.perf_counter() - start
    ok = ok and matched == 6 and elapsed < 1
    return ok, f"Fl(3) graph and {matched}/6 fiber axial functions, {elapsed:.3f}s (< 1s)"


def criterion_3():
    rng = random.Random(SEED)
    assignments = [(1,) * 5, tuple(rng.randint(-5, 5) for _ in range(5))]
    checked = bad = 0
    for a in assignments:
        t = three_stage_gbt(*a)
        for (l, A), u in three_stage_rays(*a).items():
            checked += 1
            bad += orbit_ray(t, l, A) != u
    for a in (1, rng.randint(-5, 5), -2, 0, 7):
        t = two_stage_gbt(a)
        for (l, A), u in two_stage_rays(a).items():
            checked += 1
            bad += orbit_ray(t, l, A) != u
    return bad == 0, f"{checked - bad}/{checked} ray table entries exact"


def criterion_4():
    start = time.perf_counter()
    ok = all(len(f.rays) == 2 ** (n + 1) - 2 and len(f.max_cones) == factorial(n + 1)
             for n, f in ((n, permutohedral_fan(n)) for n in range(1, 5)))
    rng = random.Random(SEED + 4)
    good = 0
    for _ in range(20):
        t = random_generalized_tower(rng, max_m=3, max_n=3, bound=5)
        f = orbit_fan(t)
        good += (len(f.rays) == sum(2 ** (d + 1) - 2 for d in t.dims)
                 and len(f.max_cones) == prod(factorial(d + 1) for d in t.dims))
    elapsed = time.perf_counter() - start
    ok = ok and good == 20 and elapsed < 30
    return ok, f"permutohedral n=1..4 and {good}/20 orbit fans, {elapsed:.2f}s (< 30s)"


def criterion_5():
    start = time.perf_counter()
    failed = [name for name, t in blowup_towers() if not fans_equal(blowup_fan(t), orbit_fan(t))]
    elapsed = time.perf_counter() - start
    n = len(blowup_towers())
    ok = not failed and elapsed < 120
    return ok, f"{n - len(failed)}/{n} towers, {elapsed:.2f}s (< 120s)" + (
        f"; failed {failed[:3]}" if failed else "")


def criterion_6():
    bad = []
    for name, t in blowup_towers():
        for kind, f in (("orbit", orbit_fan(t)), ("blow-up", blowup_fan(t)), ("gbt", gbt_fan(t))):
            if not check_unimodular(f):
                bad.append(f"{kind} fan of {name}")
    for n in range(1, 5):
        if not check_unimodular(permutohedral_fan(n)):
            bad.append(f"permutohedral n={n}")
    total = 3 * len(blowup_towers()) + 4
    return not bad, f"{total - len(bad)}/{total} fans unimodular" + (f"; {bad[:3]}" if bad else "")


def criterion_7():
    checks = 0
    bad = []
    for name, t in blowup_towers():
        c, mismatches = verify_rays(t)
        checks += c
        bad.extend(f"{name}: {m}" for m in mismatches)
    return not bad, f"{checks - len(bad)}/{checks} (ray, cone) pairs solved exactly" + (
        f"; {bad[:2]}" if bad else "")


def criterion_8():
    rng = random.Random(SEED + 8)
    good = dims = 0
    for _ in range(100):
        f1, f2, tau = random_triple(rng, max_dim=5)
        dims = max(dims, f1.dim)
        good += join_star_commutes(f1, f2, tau)
    return good == 100 and dims <= 5, f"{good}/100 triples commute (max dim {dims})"


def criterion_9():
    good = [n for n in range(1, 5) if fans_equal(permutohedral_by_subdivision(n), permutohedral_fan(n))]
    return len(good) == 4, f"n = {good} reproduce the permutohedral fan"


def criterion_10():
    rng = random.Random(SEED + 10)
    good = 0
    for _ in range(50):
        t = random_flag_tower(rng, max_m=3, max_n=3, bound=9)
        good += check_pairwise_independence(build_gkm_graph(t, FULL))
    return good == 50, f"{good}/50 random flag towers pairwise independent"


CRITERIA = [
    (1, "X-matrix golden test", criterion_1),
    (2, "GKM golden tests", criterion_2),
    (3, "ray tables", criterion_3),
    (4, "ray and cone counts", criterion_4),
    (5, "blow-up pipeline", criterion_5),
    (6, "smoothness", criterion_6),
    (7, "rays from axial functions", criterion_7),
    (8, "join/star commutation", criterion_8),
    (9, "permutohedral fan by subdivision", criterion_9),
    (10, "pairwise independence of weights", criterion_10),
]


def _line(number, title, ok, detail):
    return f"{'PASS' if ok else 'FAIL'} criterion {number} ({title}): {detail}"


@pytest.mark.parametrize("number,title,check", CRITERIA, ids=[f"criterion_{n}" for n, _, _ in CRITERIA])
def test_criterion(number, title, check, capsys):
    ok, detail = check()
    with capsys.disabled():
        print("\n" + _line(number, title, ok, detail))
    assert ok, detail


if __name__ == "__main__":
    results = [(n, t, *check()) for n, t, check in CRITERIA]
    for r in results:
        print(_line(*r))
    sys.exit(0 if all(r[2] for r in results) else 1)
