"""Exact integer linear algebra and permutations in one-line notation.

Vectors are tuples of Python ints and matrices are tuples of row tuples, so
every value is immutable and arbitrary precision.  Permutations of
``[n+1]`` are tuples ``(w(1), ..., w(n+1))`` with 1-based values.
"""

from fractions import Fraction
from itertools import combinations
from math import gcd

from .errors import InputError

IntVector = tuple
IntMatrix = tuple
Permutation = tuple


# ---------------------------------------------------------------------------
# construction
# ---------------------------------------------------------------------------

def as_vector(entries):
    v = tuple(entries)
    for x in v:
        if not isinstance(x, int) or isinstance(x, bool):
            raise InputError(f"non-integer vector entry {x!r}")
    return v


def as_matrix(rows, cols=None):
    """Validate and freeze a list of rows.

    ``cols`` is only needed to describe a matrix with zero rows.
    """
    m = tuple(as_vector(r) for r in rows)
    if m:
        width = len(m[0])
        if any(len(r) != width for r in m):
            raise InputError("ragged matrix rows")
        if cols is not None and cols != width:
            raise InputError(f"expected {cols} columns, got {width}")
    return m


def shape(m):
    return (len(m), len(m[0]) if m else 0)


def identity(n):
    return tuple(tuple(int(i == j) for j in range(n)) for i in range(n))


def zeros(rows, cols):
    return tuple((0,) * cols for _ in range(rows))


def transpose(m):
    return tuple(zip(*m))


# ---------------------------------------------------------------------------
# vector helpers
# ---------------------------------------------------------------------------

def dot(u, v):
    return sum(a * b for a, b in zip(u, v))


def vec_add(u, v):
    return tuple(a + b for a, b in zip(u, v))


def vec_sub(u, v):
    return tuple(a - b for a, b in zip(u, v))


def vec_neg(v):
    return tuple(-a for a in v)


def vec_sum(vectors, dim):
    out = [0] * dim
    for v in vectors:
        for i, a in enumerate(v):
            out[i] += a
    return tuple(out)


def primitive(v):
    """Divide a nonzero integer vector by the gcd of its entries."""
    g = 0
    for a in v:
        g = gcd(g, a)
    if g == 0:
        raise InputError("zero vector has no primitive generator")
    return tuple(a // g for a in v)


def direction_key(v):
    """Canonical representative of the line through a nonzero vector.

    Two nonzero integer vectors are linearly dependent exactly when their
    keys agree.
    """
    p = primitive(v)
    for a in p:
        if a:
            return p if a > 0 else vec_neg(p)
    raise AssertionError("unreachable")


# ---------------------------------------------------------------------------
# matrix arithmetic
# ---------------------------------------------------------------------------

def mat_mul(a, b):
    ra, ca = shape(a)
    rb, cb = shape(b)
    if ca != rb:
        raise InputError(f"cannot multiply {ra}x{ca} by {rb}x{cb}")
    if rb == 0:
        return zeros(ra, len(b[0]) if b else 0)
    bt = transpose(b)
    return tuple(tuple(dot(row, col) for col in bt) for row in a)


def mat_add(a, b):
    if shape(a) != shape(b):
        raise InputError(f"cannot add {shape(a)} and {shape(b)}")
    return tuple(vec_add(r, s) for r, s in zip(a, b))


def mat_vec(m, v):
    return tuple(dot(row, v) for row in m)


def det(m):
    """Exact determinant by Bareiss fraction-free elimination."""
    n, c = shape(m)
    if n != c:
        raise InputError(f"determinant of non-square {n}x{c} matrix")
    if n == 0:
        return 1
    a = [list(r) for r in m]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        piv = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i = a[i]
            row_k = a[k]
            for j in range(k + 1, n):
                # exact division is guaranteed by Sylvester's identity
                row_i[j] = (piv * row_i[j] - aik * row_k[j]) // prev
        prev = piv
    return sign * a[n - 1][n - 1]


def rank(m):
    """Rank over the rationals (fraction-free elimination)."""
    a = [list(r) for r in m]
    rows, cols = shape(m)
    r = 0
    for c in range(cols):
        piv = next((i for i in range(r, rows) if a[i][c] != 0), None)
        if piv is None:
            continue
        a[r], a[piv] = a[piv], a[r]
        for i in range(r + 1, rows):
            if a[i][c]:
                f, g = a[r][c], a[i][c]
                a[i] = [f * x - g * y for x, y in zip(a[i], a[r])]
        r += 1
        if r == rows:
            break
    return r


def solve(m, rhs):
    """Solve ``m x = b`` exactly for each column ``b`` of ``rhs``.

    ``m`` must be square and nonsingular.  Returns one tuple of Fractions
    per right-hand side.
    """
    n, c = shape(m)
    if n != c:
        raise InputError(f"solve with non-square {n}x{c} matrix")
    k = len(rhs)
    a = [list(m[i]) + [b[i] for b in rhs] for i in range(n)]
    for col in range(n):
        # prefer a unit pivot so unimodular systems stay in ints
        piv = None
        for i in range(col, n):
            v = a[i][col]
            if v == 1 or v == -1:
                piv = i
                break
            if v != 0 and piv is None:
                piv = i
        if piv is None:
            raise InputError("singular system")
        a[col], a[piv] = a[piv], a[col]
        p = a[col][col]
        if p == -1:
            a[col] = [-x for x in a[col]]
        elif p != 1:
            a[col] = [Fraction(x) / p for x in a[col]]
        row = a[col]
        for i in range(n):
            if i != col and a[i][col] != 0:
                f = a[i][col]
                a[i] = [x - f * y for x, y in zip(a[i], row)]
    return [tuple(a[i][n + j] for i in range(n)) for j in range(k)]


# ---------------------------------------------------------------------------
# genericity
# ---------------------------------------------------------------------------

def is_generic(g):
    """True iff every leading-column Pluecker minor of ``g`` is nonzero.

    For each k and rows i_1 < ... < i_k the minor uses the first k columns.
    Enumerates all 2^(n+1) - 1 row subsets.
    """
    n, c = shape(g)
    if n != c:
        raise InputError(f"genericity of non-square {n}x{c} matrix")
    for k in range(1, n + 1):
        for rows in combinations(range(n), k):
            if det(tuple(g[i][:k] for i in rows)) == 0:
                return False
    return True


# ---------------------------------------------------------------------------
# permutations
# ---------------------------------------------------------------------------

def is_permutation(w):
    return sorted(w) == list(range(1, len(w) + 1))


def check_permutation(w):
    w = tuple(w)
    if not w or not is_permutation(w):
        raise InputError(f"{w!r} is not a permutation in one-line notation")
    return w


def perm_identity(size):
    return tuple(range(1, size + 1))


def perm_sign(w):
    inv = sum(1 for i, j in combinations(range(len(w)), 2) if w[i] > w[j])
    return -1 if inv % 2 else 1


def perm_inverse(w):
    out = [0] * len(w)
    for i, x in enumerate(w, 1):
        out[x - 1] = i
    return tuple(out)


def swap_positions(w, r, s):
    """Right multiplication ``w * (r, s)``: exchange the entries in positions r and s."""
    lst = list(w)
    lst[r - 1], lst[s - 1] = lst[s - 1], lst[r - 1]
    return tuple(lst)


def perm_to_column_matrix(w):
    """The matrix with (w(k), k)-entries equal to 1."""
    size = len(w)
    return tuple(tuple(int(w[k] == i + 1) for k in range(size)) for i in range(size))


def perm_to_row_matrix(w):
    """The transpose of the column matrix.

    It sends (t_1, ..., t_{n+1}) to (t_{w(1)}, ..., t_{w(n+1)}).
    """
    size = len(w)
    return tuple(tuple(int(w[i] == k + 1) for k in range(size)) for i in range(size))


def word(w):
    """One-line word, e.g. ``231``; entries are comma separated past 9."""
    if len(w) <= 9:
        return "".join(str(x) for x in w)
    return ",".join(str(x) for x in w)
