"""Shared group factories, frozen reference data, and independent
oracles used across the test suite."""

from fractions import Fraction
from itertools import combinations
from math import gcd

from multinv import GroupAction, GroupTooLarge, IntMatrix, close_group
from multinv.laurent import LaurentPolynomial


def mat(rows):
    return IntMatrix(rows)


# rank-2 golden group: S3 acting on Z^2 through the matrices r, s
R2 = mat([[0, 1], [1, 0]])
S2 = mat([[1, -1], [0, -1]])
T2 = mat([[-1, 0], [-1, 1]])
BASE_RANK2 = ((-1, 0), (0, 1))

# rank-3 golden group: S4 acting on Z^3 through r, s, t
R3 = mat([[0, 1, 0], [1, 0, 0], [0, 0, 1]])
S3MAT = mat([[1, 0, -1], [0, 1, -1], [0, 0, -1]])
T3 = mat([[0, 0, 1], [0, 1, 0], [1, 0, 0]])
BASE_RANK3 = ((-1, 0, 1), (1, -1, 0), (0, 0, -1))


def s3_action():
    return close_group([R2, S2])


def s4_action():
    return close_group([R3, S3MAT, T3])


def neg_rank1_action():
    return close_group([mat([[-1]])])


def swap_action():
    return close_group([R2])


def minus_identity_action(n=2):
    return close_group([IntMatrix([[-(i == j) for j in range(n)]
                                   for i in range(n)])])


def a1a1_action():
    return close_group([mat([[-1, 0], [0, 1]]), mat([[1, 0], [0, -1]])])


def b2_action():
    return close_group([R2, mat([[1, 0], [0, -1]])])


def z3_action():
    return close_group([mat([[0, 1], [-1, -1]])])


def cyclotomic_action(p):
    """Companion matrix of 1 + x + ... + x^(p-1); a faithful effective
    action of the cyclic group of order p on a rank p-1 lattice."""
    n = p - 1
    rows = [[int(j == i + 1) for j in range(n)] for i in range(n - 1)]
    rows.append([-1] * n)
    return close_group([IntMatrix(rows)])


def sign_sl_action(n):
    """Diagonal +-1 matrices of determinant 1: flip pairs of coordinates."""
    gens = []
    for i in range(1, n):
        rows = [
            [(-1 if r == c and r in (0, i) else int(r == c))
             for c in range(n)]
            for r in range(n)
        ]
        gens.append(IntMatrix(rows))
    return close_group(gens)


def diag_action(*signs):
    n = len(signs[0])
    gens = [
        IntMatrix([[s[i] if i == j else 0 for j in range(n)]
                   for i in range(n)])
        for s in signs
    ]
    return close_group(gens)


GOLDEN_REFLECTION_ACTIONS = {
    "rank2-s3": (s3_action, BASE_RANK2),
    "rank3-s4": (s4_action, BASE_RANK3),
    "rank1-neg": (neg_rank1_action, None),
    "a1a1": (a1a1_action, None),
    "b2": (b2_action, None),
    "swap": (swap_action, None),
}


def snf_diagonal_by_minors(m: IntMatrix):
    """Independent Smith-form oracle: d_k = gcd of k-minors divided by the
    gcd of (k-1)-minors."""
    size = min(m.nrows, m.ncols)
    prev = 1
    out = []
    for k in range(1, size + 1):
        g = 0
        for rows in combinations(range(m.nrows), k):
            for cols in combinations(range(m.ncols), k):
                sub = IntMatrix(
                    [[m.entries[i][j] for j in cols] for i in rows]
                )
                g = gcd(g, abs(sub.det()))
        if g == 0:
            out.extend([0] * (size - len(out)))
            return out
        out.append(g // prev)
        prev = g
    return out


def poly(rank, int_terms, prefix=None):
    """Laurent polynomial from integer exponent terms, optionally shifted
    by a rational monomial prefix."""
    p = LaurentPolynomial(rank, 1, {tuple(e): Fraction(c)
                                    for e, c in int_terms.items()})
    if prefix is not None:
        p = LaurentPolynomial.monomial(prefix) * p
    return p


# factored building blocks of the rank-3 fundamental invariants
E1_RANK3 = {(1, 0, 0): 1, (0, 1, 0): 1, (0, 0, 1): 1, (0, 0, 0): 1}
E1INV_RANK3 = {(-1, 0, 0): 1, (0, -1, 0): 1, (0, 0, -1): 1, (0, 0, 0): 1}
S2_RANK3 = {
    (1, 0, 0): 1, (0, 1, 0): 1, (0, 0, 1): 1,
    (1, 1, 0): 1, (1, 0, 1): 1, (0, 1, 1): 1,
}
S2INV_RANK3 = {tuple(-x for x in e): c for e, c in S2_RANK3.items()}

RANK2_SEEDS = [
    [R2],
    [mat([[0, -1], [1, 0]])],
    [mat([[0, 1], [-1, -1]])],
    [mat([[0, 1], [-1, 1]])],
    [mat([[-1, 0], [0, -1]])],
    [mat([[1, 0], [0, -1]])],
    [R2, mat([[1, 0], [0, -1]])],
    [mat([[0, 1], [-1, -1]]), R2],
]

RANK3_SEEDS = [
    [mat([[0, 1, 0], [0, 0, 1], [1, 0, 0]])],
    [R3],
    [mat([[-1, 0, 0], [0, -1, 0], [0, 0, 1]])],
    [mat([[-1, 0, 0], [0, -1, 0], [0, 0, -1]])],
    [S3MAT],
    [mat([[0, 1, 0], [0, 0, 1], [1, 0, 0]]), R3],
    [mat([[0, 1, 0], [-1, -1, 0], [0, 0, -1]])],
    [mat([[-1, 0, 0], [0, -1, 0], [0, 0, 1]]),
     mat([[1, 0, 0], [0, -1, 0], [0, 0, -1]])],
]


def random_unimodular(rng, n, steps=6):
    if n == 1:
        return IntMatrix([[rng.choice([-1, 1])]])
    m = [[int(i == j) for j in range(n)] for i in range(n)]
    for _ in range(steps):
        i, j = rng.sample(range(n), 2)
        c = rng.choice([-1, 1])
        for k in range(n):
            m[i][k] += c * m[j][k]
    return IntMatrix(m)


def random_finite_action(rng, n, max_order=8) -> GroupAction:
    """A random conjugate of one of the seed groups; order stays <= 8."""
    seeds = RANK2_SEEDS if n == 2 else RANK3_SEEDS
    while True:
        gens = rng.choice(seeds)
        u = random_unimodular(rng, n)
        uinv = u.inverse_unimodular()
        conj = [u * g * uinv for g in gens]
        try:
            return close_group(conj, cap=max_order)
        except GroupTooLarge:  # pragma: no cover - seeds are all finite
            continue
