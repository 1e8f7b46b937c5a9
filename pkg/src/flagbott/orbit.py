"""Fans of generalized Bott manifolds, permutohedral varieties and generic
torus-orbit closures in associated flag Bott manifolds.

Subsets of ``[n+1]`` are bitmasks: element x is bit ``x - 1``.
"""

from fractions import Fraction
from itertools import combinations, permutations, product
from math import factorial, prod
from typing import NamedTuple

from .errors import CapExceeded, FanError, InputError
from .fan import Fan, fans_equal, join, star_subdivide
from .gkm import to_effective, weight_rows
from .lattice import check_permutation, identity, perm_identity, solve, vec_sub
from .tower import DEFAULT_CAP, associate, enumerate_fixed_points

# ---------------------------------------------------------------------------
# subsets and chains
# ---------------------------------------------------------------------------


def to_mask(subset):
    mask = 0
    for x in subset:
        mask |= 1 << (x - 1)
    return mask


def from_mask(mask):
    out = []
    x = 1
    while mask:
        if mask & 1:
            out.append(x)
        mask >>= 1
        x += 1
    return tuple(out)


def subset_label(mask):
    return "{" + ",".join(str(x) for x in from_mask(mask)) + "}"


class SubsetChain(NamedTuple):
    """A_1 < A_2 < ... < A_n inside [n+1] with |A_p| = p."""

    n: int
    masks: tuple

    def subsets(self):
        return [from_mask(m) for m in self.masks]


class MultiChain(NamedTuple):
    chains: tuple


def chain_of_permutation(w):
    """A_k is the set of the last k values of w, for k = 1..n."""
    w = check_permutation(w)
    n = len(w) - 1
    masks = []
    mask = 0
    for k in range(1, n + 1):
        mask |= 1 << (w[n + 1 - k] - 1)
        masks.append(mask)
    return SubsetChain(n, tuple(masks))


def multichain_of(v):
    return MultiChain(tuple(chain_of_permutation(w) for w in v))


def _check_proper(mask, size):
    if mask <= 0 or mask >= (1 << size) - 1:
        raise InputError(f"subset {from_mask(mask)} is not a nonempty proper subset of [{size}]")


def _guard(what, size, cap):
    if size > cap:
        raise CapExceeded(what, size, cap)


# ---------------------------------------------------------------------------
# permutohedral fan
# ---------------------------------------------------------------------------

def permutohedral_ray(n, mask):
    if mask >> n & 1:
        return tuple(0 if mask >> i & 1 else -1 for i in range(n))
    return tuple(mask >> i & 1 for i in range(n))


def permutohedral_fan(n, cap=DEFAULT_CAP):
    """Rays u_A over nonempty proper A in [n+1]; one maximal cone per permutation."""
    if n < 1:
        raise InputError("permutohedral fan needs n >= 1")
    _guard("permutohedral rays", 2 ** (n + 1), cap)
    _guard("permutohedral cones", factorial(n + 1), cap)
    masks = range(1, 2 ** (n + 1) - 1)
    rays = [permutohedral_ray(n, m) for m in masks]
    labels = ["u_" + subset_label(m) for m in masks]
    cones = [[m - 1 for m in chain_of_permutation(w).masks]
             for w in permutations(perm_identity(n + 1))]
    return Fan(n, rays, cones, labels)


def projective_fan(n):
    """The fan of CP^n: rays e_1..e_n and -(e_1+...+e_n)."""
    rays = list(identity(n)) + [(-1,) * n]
    cones = [c for c in combinations(range(n + 1), n)]
    return Fan(n, rays, cones, [f"u_{k}" for k in range(1, n + 2)])


def permutohedral_by_subdivision(n):
    """Star subdivide CP^n along all cones of dimension >= 2, largest first."""
    f = projective_fan(n)
    for size in range(n, 1, -1):
        for subset in combinations(range(n + 1), size):
            f = star_subdivide(f, subset, "u_" + subset_label(to_mask(x + 1 for x in subset)))
    return f


# ---------------------------------------------------------------------------
# generalized Bott fan
# ---------------------------------------------------------------------------

def gbt_ray(t, j, k):
    """u^j_k: eps_{j,k} for k <= n_j, otherwise column j of Lambda."""
    v = [0] * t.n
    off = t.offset(j)
    if k <= t.dims[j - 1]:
        v[off + k - 1] = 1
    else:
        for i in range(t.dims[j - 1]):
            v[off + i] = -1
        for p in range(j + 1, t.m + 1):
            offp = t.offset(p)
            for i, a in enumerate(t.a(p, j)):
                v[offp + i] = a
    return tuple(v)


def gbt_fan(t, cap=DEFAULT_CAP):
    """Maximal cones drop exactly one ray u^j_{k_j} from each stage."""
    _guard("generalized Bott cones", prod(d + 1 for d in t.dims), cap)
    rays, labels, blocks = [], [], []
    for j, d in enumerate(t.dims, 1):
        blocks.append(list(range(len(rays), len(rays) + d + 1)))
        for k in range(1, d + 2):
            rays.append(gbt_ray(t, j, k))
            labels.append(f"u^{j}_{k}")
    everything = set(range(len(rays)))
    cones = [everything - set(drop) for drop in product(*blocks)]
    return Fan(t.n, rays, cones, labels)


def lifted_projective_fan(t, l):
    """Stage l of the generalized Bott fan: cones on u^l_1..u^l_{n_l+1} missing one ray."""
    d = t.dims[l - 1]
    rays = [gbt_ray(t, l, k) for k in range(1, d + 2)]
    cones = list(combinations(range(d + 1), d))
    return Fan(t.n, rays, cones, [f"u^{l}_{k}" for k in range(1, d + 2)])


# ---------------------------------------------------------------------------
# orbit closure fan
# ---------------------------------------------------------------------------

def _orbit_ray_mask(t, l, mask):
    size = t.dims[l - 1] + 1
    _check_proper(mask, size)
    v = [0] * t.n
    off = t.offset(l)
    if mask >> (size - 1) & 1:
        for x in range(size - 1):
            if not mask >> x & 1:
                v[off + x] = -1
        for j in range(l + 1, t.m + 1):
            offj = t.offset(j)
            for k, a in enumerate(t.a(j, l)):
                v[offj + k] = a
    else:
        for x in range(size - 1):
            if mask >> x & 1:
                v[off + x] = 1
    return tuple(v)


def orbit_ray(t, l, A):
    """Ray generator u^l_A of the orbit-closure fan; ``A`` is a set of 1-based elements."""
    if not 1 <= l <= t.m:
        raise InputError(f"stage {l} out of range")
    return _orbit_ray_mask(t, l, to_mask(A))


def _orbit_ray_table(t):
    """[(l, mask)] in fan order: by stage, then by bitmask."""
    return [(l, mask) for l, d in enumerate(t.dims, 1) for mask in range(1, 2 ** (d + 1) - 1)]


def orbit_fan(t, cap=DEFAULT_CAP):
    """Rays u^l_A; maximal cones indexed by one subset chain per stage."""
    _guard("orbit-closure cones", prod(factorial(d + 1) for d in t.dims), cap)
    table = _orbit_ray_table(t)
    where = {key: i for i, key in enumerate(table)}
    rays = [_orbit_ray_mask(t, l, m) for l, m in table]
    labels = [f"u^{l}_" + subset_label(m) for l, m in table]
    cones = []
    for v in enumerate_fixed_points(t.dims, cap):
        cones.append([where[(l, m)]
                      for l, ch in enumerate(multichain_of(v).chains, 1) for m in ch.masks])
    return Fan(t.n, rays, cones, labels)


def lifted_permutohedral_fan(t, l):
    """Stage l of the orbit fan: cones Cone(u^l_{A_1}, ..., u^l_{A_n}) over chains."""
    d = t.dims[l - 1]
    masks = list(range(1, 2 ** (d + 1) - 1))
    rays = [_orbit_ray_mask(t, l, m) for m in masks]
    cones = [[m - 1 for m in chain_of_permutation(w).masks]
             for w in permutations(perm_identity(d + 1))]
    return Fan(t.n, rays, cones, [f"u^{l}_" + subset_label(m) for m in masks])


def join_of_blocks(t, lifted):
    f = lifted(t, 1)
    for l in range(2, t.m + 1):
        f = join(f, lifted(t, l))
    return f


# ---------------------------------------------------------------------------
# blow-up pipeline
# ---------------------------------------------------------------------------

def blowup_centers(t, rng=None):
    """(l, mask) in subdivision order: stages ascending, |A| descending.

    Within a fixed stage and size the order is by bitmask, or shuffled with
    ``rng`` to probe order independence.
    """
    out = []
    for l, d in enumerate(t.dims, 1):
        masks = range(1, 2 ** (d + 1) - 1)
        for size in range(d, 0, -1):
            group = [m for m in masks if bin(m).count("1") == size]
            if rng is not None:
                rng.shuffle(group)
            out.extend((l, m) for m in group)
    return out


def blowup_fan(t, cap=DEFAULT_CAP, rng=None):
    """Star subdivide the generalized Bott fan along Cone(u^l_x : x in A)."""
    _guard("orbit-closure cones", prod(factorial(d + 1) for d in t.dims), cap)
    f = gbt_fan(t, cap)
    for l, mask in blowup_centers(t, rng):
        tau = f.cone_of(gbt_ray(t, l, x) for x in from_mask(mask))
        f = star_subdivide(f, tau, f"u^{l}_" + subset_label(mask))
    return f


def verify_blowup(t, cap=DEFAULT_CAP, rng=None):
    return fans_equal(blowup_fan(t, cap, rng), orbit_fan(t, cap))


# ---------------------------------------------------------------------------
# rays from axial functions
# ---------------------------------------------------------------------------

def canonical_vertex(t, l, A):
    """v_{l,A} = (complement ascending, then A ascending) at stage l; identity elsewhere."""
    size = t.dims[l - 1] + 1
    a = set(A)
    vl = tuple(sorted(set(range(1, size + 1)) - a)) + tuple(sorted(a))
    return tuple(vl if j == l else perm_identity(d + 1) for j, d in enumerate(t.dims, 1))


def axial_matrix(ft, v):
    """Rows alpha(e^j_i) for the edges v -> v*(i,i+1), effective basis, stage-major."""
    rows = []
    for block in weight_rows(ft, v):
        for i in range(1, len(block)):
            rows.append(to_effective(ft.dims, vec_sub(block[i], block[i - 1])))
    return tuple(rows)


def _integral(vec):
    out = []
    for x in vec:
        if isinstance(x, Fraction):
            if x.denominator != 1:
                raise FanError(f"non-integral solution {vec}")
            x = x.numerator
        out.append(x)
    return tuple(out)


def _edge_row(t, l, i):
    return t.offset(l) + i - 1


def solve_ray_from_axials(t, l, A, v=None, ft=None):
    """Solve <alpha(e), u> = 1 on the facet edge avoiding the ray, 0 on the others.

    ``v`` must index a maximal cone containing the ray (l, A); it defaults
    to the vertex v_{l,A}.  ``ft`` is the associated flag tower, if already built.
    """
    mask = to_mask(A)
    size = t.dims[l - 1] + 1
    _check_proper(mask, size)
    if v is None:
        v = canonical_vertex(t, l, A)
    k = bin(mask).count("1")
    if to_mask(v[l - 1][size - k:]) != mask:
        raise InputError(f"vertex {v} does not index a cone containing u^{l}_{subset_label(mask)}")
    ft = ft or associate(t)
    d = size - k
    rhs = [0] * t.n
    rhs[_edge_row(t, l, d)] = 1
    return _integral(solve(axial_matrix(ft, v), [rhs])[0])


def rays_from_axials_at_vertex(t, v, ft=None):
    """All ray generators of the cone indexed by ``v``, keyed by (l, mask).

    Solves the system once per right-hand side over a shared matrix.
    """
    ft = ft or associate(t)
    M = axial_matrix(ft, v)
    keys, rhss = [], []
    for l, ch in enumerate(multichain_of(v).chains, 1):
        for p, mask in enumerate(ch.masks, 1):
            i = ch.n + 1 - p
            rhs = [0] * t.n
            rhs[_edge_row(t, l, i)] = 1
            keys.append((l, mask))
            rhss.append(rhs)
    return {key: _integral(sol) for key, sol in zip(keys, solve(M, rhss))}


def verify_rays(t, cap=DEFAULT_CAP):
    """Compare axial-function rays with the closed form at every vertex.

    Returns (number of (ray, cone) checks, list of mismatch descriptions).
    """
    ft = associate(t)
    checks = 0
    mismatches = []
    for v in enumerate_fixed_points(t.dims, cap):
        for (l, mask), u in rays_from_axials_at_vertex(t, v, ft).items():
            checks += 1
            want = _orbit_ray_mask(t, l, mask)
            if u != want:
                mismatches.append(f"u^{l}_{subset_label(mask)} at {v}: {u} != {want}")
    return checks, mismatches

