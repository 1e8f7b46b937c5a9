"""Random (f1, f2, tau) triples for the join/star commutation check.

f1 is a complete smooth fan on the first k coordinates whose rays receive
random integer lifts in the remaining coordinates; f2 is a complete fan on
the remaining coordinates (or the zero fan when k is the full dimension).
Both are then moved by one random unimodular matrix, so the two pieces no
longer sit in coordinate blocks.
"""

import random

from .fan import Fan, fans_equal, join, star_subdivide, zero_fan
from .lattice import identity, mat_vec, primitive
from .orbit import gbt_fan
from .tower import random_generalized_tower


def random_unimodular(rng, dim, steps=None, bound=2):
    """Product of random elementary row operations and sign flips."""
    m = [list(r) for r in identity(dim)]
    if dim == 1:
        return ((rng.choice((1, -1)),),)
    for _ in range(steps if steps is not None else 3 * dim):
        i, j = rng.sample(range(dim), 2)
        c = rng.randint(-bound, bound)
        m[i] = [a + c * b for a, b in zip(m[i], m[j])]
        if rng.random() < 0.2:
            m[i] = [-a for a in m[i]]
    return tuple(tuple(r) for r in m)


def random_complete_fan(rng, dim, subdivisions=2):
    """A generalized Bott fan on ``dim`` coordinates, then a few random star subdivisions."""
    while True:
        t = random_generalized_tower(rng, max_m=dim, max_n=dim, bound=2)
        if t.n == dim:
            break
    f = gbt_fan(t)
    for _ in range(rng.randint(0, subdivisions)):
        cone = rng.choice(f.max_cones)
        tau = rng.sample(cone, rng.randint(2, len(cone))) if len(cone) > 1 else cone
        f = star_subdivide(f, tau)
    return f


def _transform(f, u):
    rays = [primitive(mat_vec(u, r)) for r in f.rays]
    return Fan(f.dim, rays, f.max_cones, f.labels)


def random_triple(rng=None, max_dim=5):
    """(f1, f2, tau) with tau a face of a random maximal cone of f1."""
    rng = rng or random.Random()
    dim = rng.randint(1, max_dim)
    k = rng.randint(1, dim)
    base = random_complete_fan(rng, k)
    rest = dim - k
    rays1 = [r + tuple(rng.randint(-3, 3) for _ in range(rest)) for r in base.rays]
    f1 = Fan(dim, rays1, base.max_cones)
    if rest:
        fiber = random_complete_fan(rng, rest)
        f2 = Fan(dim, [(0,) * k + r for r in fiber.rays], fiber.max_cones)
    else:
        f2 = zero_fan(dim)
    u = random_unimodular(rng, dim)
    f1, f2 = _transform(f1, u), _transform(f2, u)
    cone = rng.choice(f1.max_cones)
    tau = tuple(sorted(rng.sample(cone, rng.randint(1, len(cone)))))
    return f1, f2, tau


def join_star_commutes(f1, f2, tau):
    """join(star(f1, tau), f2) == star(join(f1, f2), tau), compared exactly."""
    left = join(star_subdivide(f1, tau), f2)
    right = star_subdivide(join(f1, f2), tau)
    return fans_equal(left, right)
