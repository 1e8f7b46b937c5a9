"""Simplicial fans over Z^d stored as primitive rays plus maximal cones.

Non-maximal cones are implicit: a cone is any subset of the ray indices of
some maximal cone.  All arithmetic is exact.
"""

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations

from .errors import FanError
from .lattice import det, primitive, rank, vec_neg, vec_sum


@dataclass(frozen=True)
class Fan:
    dim: int
    rays: tuple
    max_cones: tuple
    labels: tuple = field(default=None, compare=False)

    def __post_init__(self):
        rays = tuple(tuple(r) for r in self.rays)
        cones = tuple(sorted(tuple(sorted(set(c))) for c in self.max_cones))
        object.__setattr__(self, "rays", rays)
        object.__setattr__(self, "max_cones", cones)
        if self.labels is not None:
            object.__setattr__(self, "labels", tuple(self.labels))
            if len(self.labels) != len(rays):
                raise FanError("labels must run parallel to rays")
        for r in rays:
            if len(r) != self.dim:
                raise FanError(f"ray {r} does not live in Z^{self.dim}")
            if not any(r):
                raise FanError("zero ray")
        if len(set(rays)) != len(rays):
            raise FanError("duplicate rays")
        for c in cones:
            if c and (c[0] < 0 or c[-1] >= len(rays)):
                raise FanError(f"cone {c} refers to a missing ray")

    def cone_vectors(self, cone):
        return [self.rays[i] for i in cone]

    def ray_index(self, v):
        try:
            return self.rays.index(tuple(v))
        except ValueError:
            raise FanError(f"{tuple(v)} is not a ray of the fan") from None

    def cone_of(self, vectors):
        """ConeRef (sorted ray indices) for a collection of ray vectors."""
        return tuple(sorted(self.ray_index(v) for v in vectors))

    def label(self, i):
        return self.labels[i] if self.labels is not None else f"r{i}"


def zero_fan(dim):
    """The fan whose only cone is the origin."""
    return Fan(dim, (), ((),), ())


def is_cone(f, tau):
    t = set(tau)
    return any(t <= set(c) for c in f.max_cones)


# ---------------------------------------------------------------------------
# operations
# ---------------------------------------------------------------------------

def star_subdivide(f, tau, label=None):
    """Star subdivision along the cone with ray indices ``tau``.

    Each maximal cone sigma containing tau is replaced by the cones
    (sigma - {rho}) + {u_tau} for rho in tau, where u_tau is the primitive
    sum of the generators of tau.
    """
    tau = tuple(sorted(set(tau)))
    if not tau or not is_cone(f, tau):
        raise FanError(f"{tau} is not a cone of the fan")
    if len(tau) == 1:
        return f
    u = primitive(vec_sum(f.cone_vectors(tau), f.dim))
    rays = f.rays
    labels = f.labels
    if u in rays:
        new = rays.index(u)
    else:
        new = len(rays)
        rays = rays + (u,)
        if labels is not None:
            labels = labels + (label or "+".join(f.labels[i] for i in tau),)
    t = set(tau)
    cones = []
    for c in f.max_cones:
        if t <= set(c):
            for rho in tau:
                cones.append([i for i in c if i != rho] + [new])
        else:
            cones.append(list(c))
    return Fan(f.dim, rays, cones, labels)


def join(f1, f2):
    """The fan of cones sigma1 + sigma2 over all pairs of maximal cones.

    The rays of ``f1`` keep their indices; those of ``f2`` follow them.
    """
    if f1.dim != f2.dim:
        raise FanError("joined fans must share the ambient lattice")
    overlap = set(f1.rays) & set(f2.rays)
    if overlap:
        raise FanError(f"fans share rays {sorted(overlap)}")
    shift = len(f1.rays)
    rays = f1.rays + f2.rays
    cones = []
    for c1 in f1.max_cones:
        for c2 in f2.max_cones:
            c = list(c1) + [i + shift for i in c2]
            if rank([rays[i] for i in c]) != len(c):
                raise FanError(f"generators of {c1} and {c2} are dependent")
            cones.append(c)
    labels = None
    if f1.labels is not None and f2.labels is not None:
        labels = f1.labels + f2.labels
    return Fan(f1.dim, rays, cones, labels)


def cone_signature(f):
    return {frozenset(f.rays[i] for i in c) for c in f.max_cones}


def fans_equal(f1, f2):
    """Same maximal cones, each compared as a set of ray generators."""
    return f1.dim == f2.dim and cone_signature(f1) == cone_signature(f2)


def cone_determinants(f):
    out = []
    for c in f.max_cones:
        if len(c) != f.dim:
            raise FanError(f"maximal cone {c} is not full-dimensional")
        out.append(det(tuple(f.rays[i] for i in c)))
    return out


def check_unimodular(f):
    return all(d in (1, -1) for d in cone_determinants(f))


# ---------------------------------------------------------------------------
# structural report
# ---------------------------------------------------------------------------

def _lp_feasible(A, b):
    """Exact Phase-I simplex: is {x >= 0 : A x = b} nonempty?  Bland's rule."""
    m = len(A)
    n = len(A[0]) if m else 0
    rows = []
    for i in range(m):
        sign = -1 if b[i] < 0 else 1
        row = [Fraction(sign * a) for a in A[i]]
        row += [Fraction(int(k == i)) for k in range(m)]
        row.append(Fraction(sign * b[i]))
        rows.append(row)
    width = n + m + 1
    z = [Fraction(0)] * width
    for row in rows:
        for k in range(n):
            z[k] -= row[k]
        z[-1] -= row[-1]
    basis = [n + i for i in range(m)]
    while True:
        enter = next((k for k in range(width - 1) if z[k] < 0), None)
        if enter is None:
            break
        best = None
        for i, row in enumerate(rows):
            if row[enter] > 0:
                ratio = row[-1] / row[enter]
                if best is None or ratio < best[0] or (ratio == best[0] and basis[i] < basis[best[1]]):
                    best = (ratio, i)
        if best is None:
            # unbounded direction cannot occur in Phase I; objective is bounded below
            break
        r = best[1]
        piv = rows[r][enter]
        rows[r] = [x / piv for x in rows[r]]
        for i in range(m):
            if i != r and rows[i][enter] != 0:
                f = rows[i][enter]
                rows[i] = [x - f * y for x, y in zip(rows[i], rows[r])]
        f = z[enter]
        z = [x - f * y for x, y in zip(z, rows[r])]
        basis[r] = enter
    return z[-1] == 0


def cones_meet_properly(f, c1, c2):
    """Whether cone(c1) and cone(c2) intersect exactly in the cone of their common rays."""
    common = set(c1) & set(c2)
    only1 = [i for i in c1 if i not in common]
    only2 = [i for i in c2 if i not in common]
    if not only1 or not only2:
        return True
    union = list(c1) + only2
    if rank([f.rays[i] for i in union]) == len(union):
        return True
    # sum_{c1} l_i g_i - sum_{c2} m_j h_j = 0, sum over non-shared l_i = 1
    cols = [f.rays[i] for i in c1] + [vec_neg(f.rays[j]) for j in c2]
    A = [[v[k] for v in cols] for k in range(f.dim)]
    A.append([int(i in only1) for i in c1] + [0] * len(c2))
    b = [0] * f.dim + [1]
    return not _lp_feasible(A, b)


@dataclass
class FanReport:
    violations: list = field(default_factory=list)

    @property
    def ok(self):
        return not self.violations

    def lines(self):
        if self.ok:
            return ["clean"]
        return list(self.violations)


def check_fan(f, complete=False):
    """Exhaustive sanity checks; violations are collected, never raised."""
    report = FanReport()
    bad = report.violations
    for i, r in enumerate(f.rays):
        if len(r) != f.dim or not any(r):
            bad.append(f"ray {i} is zero or has the wrong length")
        elif primitive(r) != r:
            bad.append(f"ray {i} = {r} is not primitive")
    if len(set(f.rays)) != len(f.rays):
        bad.append("rays are not pairwise distinct")
    cones = list(f.max_cones)
    for c in cones:
        if c and rank(f.cone_vectors(c)) != len(c):
            bad.append(f"cone {c} is not simplicial")
    sets = [set(c) for c in cones]
    for a, b in combinations(range(len(cones)), 2):
        if sets[a] <= sets[b] or sets[b] <= sets[a]:
            bad.append(f"maximal cone {cones[a]} and {cones[b]} are nested")
    if bad:
        return report
    for a, b in combinations(range(len(cones)), 2):
        if not cones_meet_properly(f, cones[a], cones[b]):
            bad.append(f"cones {cones[a]} and {cones[b]} overlap beyond their common face")
    full = [c for c in cones if len(c) == f.dim]
    if complete and len(full) != len(cones):
        bad.append("a complete fan cannot have lower-dimensional maximal cones")
    facets = Counter()
    for c in full:
        for i in range(len(c)):
            facets[c[:i] + c[i + 1:]] += 1
    for facet, count in sorted(facets.items()):
        if count > 2:
            bad.append(f"facet {facet} lies in {count} maximal cones")
        elif complete and count != 2:
            bad.append(f"facet {facet} lies in only {count} maximal cone")
    return report
