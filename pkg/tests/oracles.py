"""Independent reference implementations used to cross-check the library.

Everything here deliberately avoids the production code paths: elimination
is plain divide-by-pivot Gauss-Jordan instead of fraction-free elimination,
the commutant system is assembled over all matrix positions with no
presolve, and isomorphism is decided by enumerating permutations and
propagating scalings along the zero pattern.
"""

from __future__ import annotations

import itertools
from typing import Sequence

from periplectic import GaussRat, Mat, ONE, Rep, Seed, ZERO

Vector = tuple[GaussRat, ...]


def rref(rows: Sequence[Sequence[GaussRat]], ncols: int):
    """Reduced row echelon form by pivot division; returns (rows, pivots)."""
    work = [list(r) for r in rows]
    pivots: list[int] = []
    r = 0
    for c in range(ncols):
        hit = next((i for i in range(r, len(work)) if work[i][c]), None)
        if hit is None:
            continue
        work[r], work[hit] = work[hit], work[r]
        inv = work[r][c].inverse()
        work[r] = [x * inv for x in work[r]]
        for i in range(len(work)):
            if i != r and work[i][c]:
                f = work[i][c]
                work[i] = [x - f * y for x, y in zip(work[i], work[r])]
        pivots.append(c)
        r += 1
        if r == len(work):
            break
    return work[:r], pivots


def oracle_rank(mat: Mat) -> int:
    reduced, _ = rref([mat.row(i) for i in range(mat.rows)], mat.cols)
    return len(reduced)


def oracle_nullspace(mat: Mat) -> list[Vector]:
    reduced, pivots = rref([mat.row(i) for i in range(mat.rows)], mat.cols)
    basis = []
    pivot_set = set(pivots)
    for free in range(mat.cols):
        if free in pivot_set:
            continue
        vec = [ZERO] * mat.cols
        vec[free] = ONE
        for row, c in zip(reduced, pivots):
            vec[c] = -row[free]
        basis.append(tuple(vec))
    return basis


def in_span(vectors: Sequence[Vector], target: Vector) -> bool:
    if not vectors:
        return not any(target)
    ncols = len(target)
    base, _ = rref(list(vectors), ncols)
    extended, _ = rref(list(vectors) + [list(target)], ncols)
    return len(base) == len(extended)


def oracle_commutant_dim(gens: Sequence[Mat]) -> int:
    """Nullity of the full (X*G - G*X = 0) system over all n^2 positions."""
    n = gens[0].rows
    equations: list[list[GaussRat]] = []
    for g in gens:
        for p in range(n):
            for q in range(n):
                row = [ZERO] * (n * n)
                for t in range(n):
                    row[p * n + t] += g[t, q]
                    row[t * n + q] -= g[p, t]
                equations.append(row)
    reduced, _ = rref(equations, n * n)
    return n * n - len(reduced)


def oracle_invariant_line_spaces(rep: Rep) -> list[tuple[int, int]]:
    """All invariant lines of a calibrated module.

    A line is invariant iff it sits in a joint eigenspace of y1 and y2,
    is an eigenvector of s (eigenvalue +1 or -1 since s squares to one),
    and is killed by e (e is nilpotent).  Returns (solution dimension,
    sign) per joint-eigenvalue block and sign with nonzero solutions; the
    module has finitely many invariant lines iff every dimension is 1.
    """
    n = rep.dim
    blocks: dict[tuple[GaussRat, GaussRat], list[int]] = {}
    for i in range(n):
        blocks.setdefault((rep.y1[i, i], rep.y2[i, i]), []).append(i)
    spaces = []
    for sign in (1, -1):
        shifted = rep.s - Mat.identity(n).scale(GaussRat(sign))
        for coords in blocks.values():
            rows = []
            for p in range(n):
                rows.append([shifted[p, c] for c in coords])
                rows.append([rep.e[p, c] for c in coords])
            reduced, _ = rref(rows, len(coords))
            dim = len(coords) - len(reduced)
            if dim:
                spaces.append((dim, sign))
    return spaces


def _scaling_match(
    s1: Mat, s2: Mat, sigma: Sequence[int], tau: Sequence[int]
) -> bool:
    """Does some scaling pair turn the permuted s1 into s2 entrywise?"""
    k, l = s2.rows, s2.cols
    for i in range(k):
        for j in range(l):
            if bool(s1[sigma[i], tau[j]]) != bool(s2[i, j]):
                return False
    # propagate xi_i = ratio_{ij} * phi_j over the nonzero positions
    xi: dict[int, GaussRat] = {}
    phi: dict[int, GaussRat] = {}
    for start in range(k):
        if start in xi:
            continue
        xi[start] = ONE
        queue = [("r", start)]
        while queue:
            kind, v = queue.pop()
            if kind == "r":
                for j in range(l):
                    if not s2[v, j]:
                        continue
                    ratio = s2[v, j] / s1[sigma[v], tau[j]]
                    want = xi[v] / ratio
                    if j in phi:
                        if phi[j] != want:
                            return False
                    else:
                        phi[j] = want
                        queue.append(("c", j))
            else:
                for i in range(k):
                    if not s2[i, v]:
                        continue
                    ratio = s2[i, v] / s1[sigma[i], tau[v]]
                    want = ratio * phi[v]
                    if i in xi:
                        if xi[i] != want:
                            return False
                    else:
                        xi[i] = want
                        queue.append(("r", i))
    return True


def brute_force_isomorphic(seed1: Seed, seed2: Seed) -> bool:
    """Orbit search over all permutation pairs plus scaling propagation."""
    if (seed1.k, seed1.l) != (seed2.k, seed2.l):
        return False
    k, l = seed1.k, seed1.l
    for sigma in itertools.permutations(range(k)):
        if any(seed2.a[i] != seed1.a[sigma[i]] for i in range(k)):
            continue
        for tau in itertools.permutations(range(l)):
            if any(seed2.b[j] != seed1.b[tau[j]] for j in range(l)):
                continue
            if _scaling_match(seed1.coupling, seed2.coupling, sigma, tau):
                return True
    return False


def oracle_split_ok(
    rep: Rep, witness: tuple[Sequence[Vector], Sequence[Vector]]
) -> bool:
    """Re-verify a claimed invariant splitting from scratch."""
    part1, part2 = witness
    if not part1 or not part2 or len(part1) + len(part2) != rep.dim:
        return False
    if oracle_rank(Mat(list(part1) + list(part2), cols=rep.dim)) != rep.dim:
        return False
    for part in (part1, part2):
        for m in rep.generators():
            for v in part:
                if not in_span(part, m.apply(v)):
                    return False
    return True


def make_weight_block(alpha: GaussRat, d: GaussRat, c: GaussRat) -> Rep:
    """A valid two-dimensional module concentrated in weights (d, -d)."""
    dinv = d.inverse()
    return Rep(
        1,
        1,
        y1=Mat.diagonal([alpha, alpha - d]),
        y2=Mat.diagonal([alpha - d, alpha]),
        s=Mat([[-dinv, c], [(ONE - dinv * dinv) / c, dinv]]),
        e=Mat.zero(2, 2),
    )


def direct_sum(reps: Sequence[Rep]) -> Rep:
    return Rep(
        sum(r.k for r in reps),
        sum(r.l for r in reps),
        y1=Mat.block_diag([r.y1 for r in reps]),
        y2=Mat.block_diag([r.y2 for r in reps]),
        s=Mat.block_diag([r.s for r in reps]),
        e=Mat.block_diag([r.e for r in reps]),
    )


def make_split_core(
    a_free: Sequence[GaussRat],
    b_free: Sequence[GaussRat],
    shared: GaussRat,
    coupling_up: Mat,
    coupling_down: Mat,
) -> Rep:
    """Core-shaped module whose s has both off-diagonal blocks nonzero.

    The upper coupling lives on the (a_free x b_free) corner and the lower
    one on the (shared x shared) corner, so their products vanish and the
    relations hold; every lower entry ties two equal eigenvalue shifts.
    """
    k = len(a_free) + coupling_down.cols
    l = len(b_free) + coupling_down.rows
    a = list(a_free) + [shared] * coupling_down.cols
    b = list(b_free) + [shared] * coupling_down.rows
    upper = Mat(
        [
            [
                coupling_up[i, j] if i < len(a_free) and j < len(b_free) else ZERO
                for j in range(l)
            ]
            for i in range(k)
        ],
        cols=l,
    )
    lower = Mat(
        [
            [
                coupling_down[j - len(b_free), i - len(a_free)]
                if j >= len(b_free) and i >= len(a_free)
                else ZERO
                for i in range(k)
            ]
            for j in range(l)
        ],
        cols=k,
    )
    e_block = Mat(
        [[(a[i] - b[j]) * upper[i, j] for j in range(l)] for i in range(k)],
        cols=l,
    )
    return Rep(
        k,
        l,
        y1=Mat.diagonal(a + [x - ONE for x in b]),
        y2=Mat.diagonal([x - ONE for x in a] + b),
        s=Mat.block([[Mat.identity(k).scale(GaussRat(-1)), upper], [lower, Mat.identity(l)]]),
        e=Mat.block([[Mat.zero(k, k), e_block], [Mat.zero(l, k), Mat.zero(l, l)]]),
    )
