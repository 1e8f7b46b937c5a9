"""Flag Bott towers, generalized Bott towers and their fixed points.

Stages ``j`` and the entries inside a stage are 1-based, as are the keys
``(j, l)`` of the tower matrices and vectors.
"""

import random
from dataclasses import dataclass, field
from itertools import permutations, product
from math import factorial, prod

from .errors import CapExceeded, InputError
from .lattice import as_matrix, as_vector, perm_identity, shape

DEFAULT_CAP = 10**6

FixedPoint = tuple  # (w_1, ..., w_m), each a one-line permutation


def _pair_keys(m):
    return [(j, l) for j in range(2, m + 1) for l in range(1, j)]


@dataclass(frozen=True)
class FlagBottTower:
    """Stage sizes ``n_1..n_m`` and integer matrices ``A[(j, l)]`` of shape (n_j+1) x (n_l+1)."""

    dims: tuple
    mats: dict = field(default_factory=dict)

    @property
    def m(self):
        return len(self.dims)

    def A(self, j, l):
        return self.mats[(j, l)]


@dataclass(frozen=True)
class GeneralizedBottTower:
    """Stage sizes ``n_1..n_m`` and vectors ``a[(j, l)]`` of length n_j."""

    dims: tuple
    vecs: dict = field(default_factory=dict)

    @property
    def m(self):
        return len(self.dims)

    @property
    def n(self):
        return sum(self.dims)

    def a(self, j, l):
        return self.vecs[(j, l)]

    def offset(self, j):
        """0-based coordinate of epsilon_{j,1} in R^n."""
        return sum(self.dims[: j - 1])


def _check_dims(dims):
    dims = tuple(dims)
    if not dims:
        raise InputError("a tower needs at least one stage")
    for j, d in enumerate(dims, 1):
        if not isinstance(d, int) or isinstance(d, bool) or d < 1:
            raise InputError(f"stage {j}: dimension must be a positive integer, got {d!r}")
    return dims


def _check_keys(present, m):
    expected = set(_pair_keys(m))
    missing = sorted(expected - set(present))
    extra = sorted(set(present) - expected)
    if missing:
        raise InputError(f"missing entries for (j,l) = {missing}")
    if extra:
        raise InputError(f"unexpected entries for (j,l) = {extra}")


def validate_flag_tower(t):
    dims = _check_dims(t.dims)
    _check_keys(t.mats, len(dims))
    for (j, l), mat in t.mats.items():
        want = (dims[j - 1] + 1, dims[l - 1] + 1)
        if shape(mat) != want:
            raise InputError(f"A^({j})_{l} has shape {shape(mat)}, expected {want}")


def validate_generalized_tower(t):
    dims = _check_dims(t.dims)
    _check_keys(t.vecs, len(dims))
    for (j, l), vec in t.vecs.items():
        if len(vec) != dims[j - 1]:
            raise InputError(f"a^{j}_{l} has length {len(vec)}, expected {dims[j - 1]}")


def flag_tower(dims, mats):
    """Build and validate a flag Bott tower from plain lists."""
    t = FlagBottTower(tuple(dims), {k: as_matrix(v) for k, v in mats.items()})
    validate_flag_tower(t)
    return t


def generalized_tower(dims, vecs):
    """Build and validate a generalized Bott tower from plain lists."""
    t = GeneralizedBottTower(tuple(dims), {k: as_vector(v) for k, v in vecs.items()})
    validate_generalized_tower(t)
    return t


def lambda_matrix(t):
    """The n x m matrix with -1 blocks on the diagonal and a^j_l below it."""
    n, m = t.n, t.m
    out = [[0] * m for _ in range(n)]
    for j in range(1, m + 1):
        off = t.offset(j)
        for k in range(t.dims[j - 1]):
            out[off + k][j - 1] = -1
            for l in range(1, j):
                out[off + k][l - 1] = t.a(j, l)[k]
    return tuple(tuple(r) for r in out)


def associate(t):
    """The associated flag Bott tower: A^(j)_l = [a^j_l | 0] with a zero last row."""
    mats = {}
    for j, l in _pair_keys(t.m):
        rows = [[0] * (t.dims[l - 1] + 1) for _ in range(t.dims[j - 1] + 1)]
        for k, x in enumerate(t.a(j, l)):
            rows[k][0] = x
        mats[(j, l)] = tuple(tuple(r) for r in rows)
    return FlagBottTower(t.dims, mats)


def fixed_point_count(dims):
    return prod(factorial(d + 1) for d in dims)


def enumerate_fixed_points(dims, cap=DEFAULT_CAP):
    """All tuples of permutations, lexicographic in the one-line words."""
    dims = _check_dims(dims)
    total = fixed_point_count(dims)
    if total > cap:
        raise CapExceeded("fixed points", total, cap)
    blocks = [list(permutations(perm_identity(d + 1))) for d in dims]
    return list(product(*blocks))


# ---------------------------------------------------------------------------
# random instances for property batteries
# ---------------------------------------------------------------------------

def random_dims(rng, max_m=3, max_n=3):
    return tuple(rng.randint(1, max_n) for _ in range(rng.randint(1, max_m)))


def random_generalized_tower(rng=None, max_m=3, max_n=3, bound=5):
    rng = rng or random.Random()
    dims = random_dims(rng, max_m, max_n)
    vecs = {
        (j, l): tuple(rng.randint(-bound, bound) for _ in range(dims[j - 1]))
        for j, l in _pair_keys(len(dims))
    }
    return GeneralizedBottTower(dims, vecs)


def random_flag_tower(rng=None, max_m=3, max_n=3, bound=9):
    rng = rng or random.Random()
    dims = random_dims(rng, max_m, max_n)
    mats = {
        (j, l): tuple(
            tuple(rng.randint(-bound, bound) for _ in range(dims[l - 1] + 1))
            for _ in range(dims[j - 1] + 1)
        )
        for j, l in _pair_keys(len(dims))
    }
    return FlagBottTower(dims, mats)
