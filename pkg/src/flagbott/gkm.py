"""Tangential weights and GKM graphs of flag Bott manifolds.

Weights live either in the full basis eps_{j,k} (k = 1..n_j+1, dimension
sum(n_j+1)) or in the effective basis, where every eps_{j,n_j+1} is set to
zero (dimension sum(n_j)).
"""

import json
from dataclasses import dataclass
from functools import cached_property
from typing import NamedTuple

from .errors import InputError
from .lattice import (
    direction_key,
    mat_add,
    mat_mul,
    perm_to_row_matrix,
    swap_positions,
    vec_neg,
    vec_sub,
    word,
)
from .tower import DEFAULT_CAP, enumerate_fixed_points

FULL = "full"
EFFECTIVE = "effective"


def _check_basis(basis):
    if basis not in (FULL, EFFECTIVE):
        raise InputError(f"unknown basis {basis!r}")


def basis_dim(dims, basis):
    return sum(dims) + (len(dims) if basis == FULL else 0)


def to_effective(dims, v):
    """Drop the coordinates eps_{j,n_j+1} of a full-basis vector."""
    out = []
    pos = 0
    for d in dims:
        out.extend(v[pos:pos + d])
        pos += d + 1
    return tuple(out)


# ---------------------------------------------------------------------------
# X matrices and weight rows
# ---------------------------------------------------------------------------

def compute_all_X(t, w):
    """All matrices X^(j)_l at the fixed point ``w``, keyed by (j, l).

    Uses X^(j)_l = B_j (A^(j)_l B_l + sum_{l<p<j} A^(j)_p X^(p)_l), which
    regroups the sum over chains l < i_1 < ... < i_r < j by its top step.
    """
    B = [perm_to_row_matrix(wj) for wj in w]
    X = {}
    for j in range(2, t.m + 1):
        for l in range(j - 1, 0, -1):
            inner = mat_mul(t.A(j, l), B[l - 1])
            for p in range(l + 1, j):
                inner = mat_add(inner, mat_mul(t.A(j, p), X[(p, l)]))
            X[(j, l)] = mat_mul(B[j - 1], inner)
    return X


def compute_X(t, w, j, l):
    if not (1 <= l < j <= t.m):
        raise InputError(f"X^({j})_{l} is undefined for a {t.m}-stage tower")
    return compute_all_X(t, w)[(j, l)]


def weight_rows(t, w, X=None):
    """For each stage j, the rows rho^(j)_k of [X^(j)_1 ... X^(j)_{j-1} B_j 0 ... 0]."""
    if X is None:
        X = compute_all_X(t, w)
    total = sum(d + 1 for d in t.dims)
    out = []
    for j in range(1, t.m + 1):
        size = t.dims[j - 1] + 1
        Bj = perm_to_row_matrix(w[j - 1])
        rows = []
        for k in range(size):
            row = []
            for l in range(1, j):
                row.extend(X[(j, l)][k])
            row.extend(Bj[k])
            row.extend([0] * (total - len(row)))
            rows.append(tuple(row))
        out.append(rows)
    return out


def tangential_weights(t, w, basis=EFFECTIVE):
    """Weights rho^(j)_r - rho^(j)_s for every stage j and 1 <= s < r <= n_j+1."""
    _check_basis(basis)
    out = []
    for rows in weight_rows(t, w):
        for r in range(2, len(rows) + 1):
            for s in range(1, r):
                v = vec_sub(rows[r - 1], rows[s - 1])
                out.append(to_effective(t.dims, v) if basis == EFFECTIVE else v)
    return out


# ---------------------------------------------------------------------------
# graph
# ---------------------------------------------------------------------------

class Edge(NamedTuple):
    source: int
    target: int
    block: int
    r: int
    s: int
    label: tuple


@dataclass(frozen=True)
class GkmGraph:
    dims: tuple
    basis: str
    vertices: tuple
    edges: tuple

    @cached_property
    def index(self):
        return {v: i for i, v in enumerate(self.vertices)}

    @cached_property
    def out_edges(self):
        out = [[] for _ in self.vertices]
        for i, e in enumerate(self.edges):
            out[e.source].append(i)
        return out

    @cached_property
    def reverse(self):
        """Edge index of the opposite orientation of each edge."""
        key = {(e.source, e.target, e.block): i for i, e in enumerate(self.edges)}
        return [key[(e.target, e.source, e.block)] for e in self.edges]

    @property
    def degree(self):
        return sum(d * (d + 1) // 2 for d in self.dims)


def _edge_key(e):
    return (e.source, e.block, e.r, e.s)


def build_gkm_graph(t, basis=EFFECTIVE, cap=DEFAULT_CAP):
    """Vertices are fixed points; edges swap two positions inside one block."""
    _check_basis(basis)
    vertices = enumerate_fixed_points(t.dims, cap)
    index = {v: i for i, v in enumerate(vertices)}
    edges = []
    for i, w in enumerate(vertices):
        for j, rows in enumerate(weight_rows(t, w), 1):
            for r in range(2, len(rows) + 1):
                for s in range(1, r):
                    target = w[: j - 1] + (swap_positions(w[j - 1], r, s),) + w[j:]
                    label = vec_sub(rows[r - 1], rows[s - 1])
                    if basis == EFFECTIVE:
                        label = to_effective(t.dims, label)
                    edges.append(Edge(i, index[target], j, r, s, label))
    return GkmGraph(tuple(t.dims), basis, tuple(vertices), tuple(edges))


def check_pairwise_independence(g):
    """True iff the outgoing labels at every vertex are pairwise independent."""
    for edge_ids in g.out_edges:
        seen = set()
        for i in edge_ids:
            label = g.edges[i].label
            if not any(label):
                return False
            key = direction_key(label)
            if key in seen:
                return False
            seen.add(key)
    return True


def graph_violations(g):
    """Structural defects of a GKM graph; empty when all invariants hold."""
    problems = []
    for v, edge_ids in enumerate(g.out_edges):
        if len(edge_ids) != g.degree:
            problems.append(f"vertex {v}: degree {len(edge_ids)} != {g.degree}")
    rev = g.reverse
    for i, e in enumerate(g.edges):
        w = g.vertices[e.source]
        want = w[: e.block - 1] + (swap_positions(w[e.block - 1], e.r, e.s),) + w[e.block:]
        if g.vertices[e.target] != want:
            problems.append(f"edge {i}: target is not w*({e.r},{e.s})")
        if g.edges[rev[i]].label != vec_neg(e.label):
            problems.append(f"edge {i}: reversed label is not the negation")
        stop = sum(d + (1 if g.basis == FULL else 0) for d in g.dims[: e.block])
        if any(e.label[stop:]):
            problems.append(f"edge {i}: nonzero coordinates beyond block {e.block}")
    return problems


# ---------------------------------------------------------------------------
# connection search
# ---------------------------------------------------------------------------

def _integer_multiple(delta, a):
    """Whether delta = c * a for some integer c (a nonzero)."""
    k = next(i for i, x in enumerate(a) if x)
    c, rem = divmod(delta[k], a[k])
    if rem:
        return False
    return all(d == c * x for d, x in zip(delta, a))


def _match(candidates, order):
    """Backtracking perfect matching; candidates maps left -> list of right."""
    chosen = {}
    used = set()

    def go(pos):
        if pos == len(order):
            return True
        left = order[pos]
        for right in candidates[left]:
            if right not in used:
                used.add(right)
                chosen[left] = right
                if go(pos + 1):
                    return True
                used.discard(right)
                del chosen[left]
        return False

    return chosen if go(0) else None


def find_connection(g, max_degree=8):
    """Search for a connection on ``g``.

    Returns ``{edge: {e': theta_edge(e')}}`` over edge indices, or None when
    some edge admits no compatible bijection.  theta of the reversed edge is
    taken as the inverse, which satisfies the label condition automatically.
    """
    if g.degree > max_degree:
        raise InputError(f"degree {g.degree} exceeds connection search bound {max_degree}")
    rev = g.reverse
    theta = {}
    for i, e in enumerate(g.edges):
        if i in theta:
            continue
        ri = rev[i]
        alpha = g.edges[i].label
        left = [x for x in g.out_edges[e.source] if x != i]
        right = [y for y in g.out_edges[e.target] if y != ri]
        candidates = {
            x: [y for y in right
                if _integer_multiple(vec_sub(g.edges[y].label, g.edges[x].label), alpha)]
            for x in left
        }
        # most constrained first keeps the backtracking shallow
        order = sorted(left, key=lambda x: len(candidates[x]))
        matching = _match(candidates, order)
        if matching is None:
            return None
        matching[i] = ri
        theta[i] = matching
        theta[ri] = {y: x for x, y in matching.items()}
    return theta


def connection_violations(g, theta):
    """Check the three connection axioms for a candidate ``theta``."""
    problems = []
    rev = g.reverse
    for i, e in enumerate(g.edges):
        th = theta.get(i)
        if th is None:
            problems.append(f"edge {i}: no bijection")
            continue
        if sorted(th) != sorted(g.out_edges[e.source]) or \
                sorted(th.values()) != sorted(g.out_edges[e.target]):
            problems.append(f"edge {i}: not a bijection between stars")
            continue
        if th[i] != rev[i]:
            problems.append(f"edge {i}: does not map e to its reverse")
        back = theta.get(rev[i], {})
        if any(back.get(y) != x for x, y in th.items()):
            problems.append(f"edge {i}: reverse is not the inverse")
        for x, y in th.items():
            if not _integer_multiple(vec_sub(g.edges[y].label, g.edges[x].label), e.label):
                problems.append(f"edge {i}: label condition fails for {x} -> {y}")
    return problems


# ---------------------------------------------------------------------------
# export
# ---------------------------------------------------------------------------

def vertex_name(v):
    return "|".join(word(p) for p in v)


def _undirected(g):
    return [e for e in g.edges if e.source < e.target]


def export_gkm(g, fmt="dot"):
    if fmt == "dot":
        lines = ["graph gkm {"]
        for v in g.vertices:
            lines.append(f'  "{vertex_name(v)}";')
        for e in _undirected(g):
            a = vertex_name(g.vertices[e.source])
            b = vertex_name(g.vertices[e.target])
            label = ",".join(str(x) for x in e.label)
            lines.append(f'  "{a}" -- "{b}" [label="{label}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"
    if fmt == "json":
        doc = {
            "dims": list(g.dims),
            "basis": g.basis,
            "vertices": [[list(p) for p in v] for v in g.vertices],
            "edges": [
                {
                    "source": e.source,
                    "target": e.target,
                    "block": e.block,
                    "transposition": [e.r, e.s],
                    "label": list(e.label),
                }
                for e in _undirected(g)
            ],
        }
        return json.dumps(doc, indent=1) + "\n"
    raise InputError(f"unknown graph format {fmt!r}")


def load_gkm_json(text):
    """Inverse of ``export_gkm(g, "json")``."""
    doc = json.loads(text)
    try:
        vertices = tuple(tuple(tuple(p) for p in v) for v in doc["vertices"])
        edges = []
        for rec in doc["edges"]:
            r, s = rec["transposition"]
            label = tuple(rec["label"])
            edges.append(Edge(rec["source"], rec["target"], rec["block"], r, s, label))
            edges.append(Edge(rec["target"], rec["source"], rec["block"], r, s, vec_neg(label)))
        return GkmGraph(tuple(doc["dims"]), doc["basis"], vertices,
                        tuple(sorted(edges, key=_edge_key)))
    except (KeyError, TypeError, ValueError) as exc:
        raise InputError(f"malformed graph json: {exc}") from exc
