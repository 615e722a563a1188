"""Seeded random generation of seeds, matrices, and basis changes.

Every generator takes an explicit random.Random so the fuzz command and the
test suites replay bit for bit from an integer seed.
"""

from __future__ import annotations

import random
from fractions import Fraction

from .classify import MonomialPair
from .linalg import GaussRat, Mat, ZERO
from .reps import Seed
from .rhizome import analyze

__all__ = [
    "random_fraction",
    "random_gauss",
    "random_nonzero_gauss",
    "random_matrix",
    "random_ab",
    "random_regular_ab",
    "random_rhizomatic_matrix",
    "random_seed",
    "random_monomial_pair",
    "random_polynomial",
]


def random_fraction(rng: random.Random) -> Fraction:
    """Numerator in [-9, 9], denominator in [1, 9]."""
    return Fraction(rng.randint(-9, 9), rng.randint(1, 9))


def random_gauss(rng: random.Random) -> GaussRat:
    return GaussRat(random_fraction(rng), random_fraction(rng))


def random_nonzero_gauss(rng: random.Random) -> GaussRat:
    while True:
        z = random_gauss(rng)
        if z:
            return z


def random_matrix(
    rng: random.Random, rows: int, cols: int, density: float = 0.6
) -> Mat:
    grid = [
        [
            random_nonzero_gauss(rng) if rng.random() < density else ZERO
            for _ in range(cols)
        ]
        for _ in range(rows)
    ]
    return Mat(grid, cols=cols)


def random_ab(rng: random.Random, k: int, l: int) -> tuple[GaussRat, ...]:
    return tuple(random_gauss(rng) for _ in range(k + l))


def random_regular_ab(rng: random.Random, k: int, l: int) -> tuple[GaussRat, ...]:
    """Distinct within the first k and within the last l; collisions across
    the two groups are left alone."""
    while True:
        a = [random_gauss(rng) for _ in range(k)]
        if len(set(a)) == k:
            break
    while True:
        b = [random_gauss(rng) for _ in range(l)]
        if len(set(b)) == l:
            break
    return tuple(a) + tuple(b)


def random_rhizomatic_matrix(
    rng: random.Random, rows: int, cols: int, density: float = 0.6
) -> Mat:
    for _ in range(50):
        m = random_matrix(rng, rows, cols, density)
        if analyze(m).is_rhizomatic:
            return m
    # a matrix without zero entries is always rhizomatic
    return Mat(
        [[random_nonzero_gauss(rng) for _ in range(cols)] for _ in range(rows)],
        cols=cols,
    )


def random_seed(
    rng: random.Random,
    kmax: int = 4,
    lmax: int = 4,
    *,
    regular: bool = False,
    rhizomatic: bool = False,
    constant: bool = False,
) -> Seed:
    k = rng.randint(1, kmax)
    l = rng.randint(1, lmax)
    if rhizomatic:
        coupling = random_rhizomatic_matrix(rng, k, l)
    else:
        coupling = random_matrix(rng, k, l)
    if constant:
        shift = random_gauss(rng)
        eigenvalues: tuple[GaussRat, ...] = (shift,) * (k + l)
    elif regular:
        eigenvalues = random_regular_ab(rng, k, l)
    else:
        eigenvalues = random_ab(rng, k, l)
    return Seed(k, l, coupling, eigenvalues)


def random_monomial_pair(rng: random.Random, k: int, l: int) -> MonomialPair:
    sigma = list(range(k))
    rng.shuffle(sigma)
    tau = list(range(l))
    rng.shuffle(tau)
    xi = tuple(random_nonzero_gauss(rng) for _ in range(k))
    phi = tuple(random_nonzero_gauss(rng) for _ in range(l))
    return MonomialPair(tuple(sigma), xi, tuple(tau), phi)


def random_polynomial(
    rng: random.Random, max_degree: int = 3, max_terms: int = 4
) -> dict[tuple[int, int], GaussRat]:
    """Polynomial in two commuting variables as {(p, q): coefficient},
    total degree bounded by max_degree."""
    poly: dict[tuple[int, int], GaussRat] = {}
    for _ in range(rng.randint(1, max_terms)):
        p = rng.randint(0, max_degree)
        q = rng.randint(0, max_degree - p)
        poly[(p, q)] = random_gauss(rng)
    return poly
