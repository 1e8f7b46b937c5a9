"""Shared towers and strategies."""

from hypothesis import strategies as st

from flagbott.tower import flag_tower, generalized_tower

# three-stage flag tower with dims (2, 1, 1) used for the X-matrix golden values
X_EXAMPLE_MATS = {
    (2, 1): [[1, 2, 0], [0, 0, 0]],
    (3, 1): [[3, 4, 0], [0, 0, 0]],
    (3, 2): [[5, 0], [0, 0]],
}
X_EXAMPLE_POINT = ((3, 1, 2), (1, 2), (2, 1))


def x_example_tower():
    return flag_tower((2, 1, 1), X_EXAMPLE_MATS)


def two_stage_flag(c1, c2):
    """dims (2, 1) with A^(2)_1 = [[c1, c2, 0], [0, 0, 0]]."""
    return flag_tower((2, 1), {(2, 1): [[c1, c2, 0], [0, 0, 0]]})


def two_stage_gbt(a):
    """dims (2, 1) with Lambda = [[-1, 0], [-1, 0], [a, -1]]."""
    return generalized_tower((2, 1), {(2, 1): [a]})


def three_stage_gbt(a211, a311, a321, a312, a322):
    """dims (2, 1, 2); a^3_1 = (a311, a321) and a^3_2 = (a312, a322)."""
    return generalized_tower((2, 1, 2), {
        (2, 1): [a211],
        (3, 1): [a311, a321],
        (3, 2): [a312, a322],
    })


# columns eps_{1,1}, eps_{1,2}, eps_{2,1}; entries are (coefficient of c1, of c2, constant)
FIBER_TABLE = {
    (1, 2, 3): ((-1, 0, 0), (0, -1, 0), (0, 0, -1)),
    (2, 1, 3): ((0, -1, 0), (-1, 0, 0), (0, 0, -1)),
    (2, 3, 1): ((0, 0, 0), (-1, 0, 0), (0, 0, -1)),
    (3, 2, 1): ((0, 0, 0), (0, -1, 0), (0, 0, -1)),
    (3, 1, 2): ((0, -1, 0), (0, 0, 0), (0, 0, -1)),
    (1, 3, 2): ((-1, 0, 0), (0, 0, 0), (0, 0, -1)),
}


def expected_fiber(w, c1, c2):
    return tuple(a * c1 + b * c2 + k for a, b, k in FIBER_TABLE[w])


def three_stage_rays(a211, a311, a321, a312, a322):
    """Ray generators of the three-stage example, keyed by (l, subset)."""
    return {
        (1, (1,)): (1, 0, 0, 0, 0),
        (1, (2,)): (0, 1, 0, 0, 0),
        (1, (3,)): (-1, -1, a211, a311, a321),
        (1, (1, 2)): (1, 1, 0, 0, 0),
        (1, (1, 3)): (0, -1, a211, a311, a321),
        (1, (2, 3)): (-1, 0, a211, a311, a321),
        (2, (1,)): (0, 0, 1, 0, 0),
        (2, (2,)): (0, 0, -1, a312, a322),
        (3, (1,)): (0, 0, 0, 1, 0),
        (3, (2,)): (0, 0, 0, 0, 1),
        (3, (3,)): (0, 0, 0, -1, -1),
        (3, (1, 2)): (0, 0, 0, 1, 1),
        (3, (1, 3)): (0, 0, 0, 0, -1),
        (3, (2, 3)): (0, 0, 0, -1, 0),
    }


def two_stage_rays(a):
    return {
        (1, (1,)): (1, 0, 0),
        (1, (2,)): (0, 1, 0),
        (1, (3,)): (-1, -1, a),
        (1, (1, 2)): (1, 1, 0),
        (1, (1, 3)): (0, -1, a),
        (1, (2, 3)): (-1, 0, a),
        (2, (1,)): (0, 0, 1),
        (2, (2,)): (0, 0, -1),
    }


@st.composite
def generalized_towers(draw, max_m=3, max_n=3, bound=5):
    dims = draw(st.lists(st.integers(1, max_n), min_size=1, max_size=max_m))
    vecs = {
        (j, l): draw(st.lists(st.integers(-bound, bound), min_size=dims[j - 1], max_size=dims[j - 1]))
        for j in range(2, len(dims) + 1) for l in range(1, j)
    }
    return generalized_tower(dims, vecs)


@st.composite
def flag_towers(draw, max_m=3, max_n=2, bound=9):
    dims = draw(st.lists(st.integers(1, max_n), min_size=1, max_size=max_m))
    ints = st.integers(-bound, bound)
    mats = {}
    for j in range(2, len(dims) + 1):
        for l in range(1, j):
            row = st.lists(ints, min_size=dims[l - 1] + 1, max_size=dims[l - 1] + 1)
            mats[(j, l)] = draw(st.lists(row, min_size=dims[j - 1] + 1, max_size=dims[j - 1] + 1))
    return flag_tower(dims, mats)
