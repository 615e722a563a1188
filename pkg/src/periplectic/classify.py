"""Indecomposability, isomorphism, and normal forms for seeded modules.

The decidable cases: with pairwise-distinct shifts inside each weight space
("regular"), the endomorphism algebra of a seeded module is spanned by
idempotents cut out by the connectivity classes of the coupling matrix, so
the module is indecomposable exactly when the coupling is rhizomatic.  When
one weight space is a single line, indecomposability is equivalent to
regular shifts plus a coupling with no zero entry.  Isomorphism between
regular rhizomatic seeds is controlled by a monomial change of basis in
each weight space, and a canonical orbit representative is computed by
sorting the shifts and gauging the coupling along a spanning tree.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .algebra import Rep
from .errors import PreconditionError, ShapeError
from .linalg import (
    GaussRat,
    Mat,
    ONE,
    ZERO,
    as_gauss,
    gauss_to_json,
    mat_to_json,
    commutant_basis,
    rank,
    kernel_and_pivots,
    row_basis,
)
from .reps import Seed, build_rep
from .rhizome import analyze, bipartite_components, scaling_normalize

__all__ = [
    "INDECOMPOSABLE",
    "DECOMPOSABLE",
    "UNKNOWN",
    "MonomialPair",
    "CanonicalForm",
    "WeightBlockPartition",
    "EndoReport",
    "Verdict",
    "is_regular",
    "indecomposable",
    "endo_report",
    "group_act",
    "canonical_form",
    "isomorphic",
    "split_weight_blocks",
    "split_core",
    "e_nonzero_guarantee",
    "canonical_to_json",
    "verdict_to_json",
]

INDECOMPOSABLE = "indecomposable"
DECOMPOSABLE = "decomposable"
UNKNOWN = "unknown"

_MINUS_ONE = GaussRat(-1)

Vector = tuple[GaussRat, ...]


@dataclass(frozen=True, slots=True)
class MonomialPair:
    """A monomial change of basis in each weight space.

    The first matrix has entry xi_i in row i and column sigma(i); the second
    likewise with phi and tau.  Permutations are 0-based image tuples.
    """

    sigma: tuple[int, ...]
    xi: tuple[GaussRat, ...]
    tau: tuple[int, ...]
    phi: tuple[GaussRat, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "sigma", tuple(self.sigma))
        object.__setattr__(self, "tau", tuple(self.tau))
        object.__setattr__(self, "xi", tuple(as_gauss(x) for x in self.xi))
        object.__setattr__(self, "phi", tuple(as_gauss(x) for x in self.phi))
        for perm, scalars, name in (
            (self.sigma, self.xi, "row"),
            (self.tau, self.phi, "column"),
        ):
            if sorted(perm) != list(range(len(perm))):
                raise ValueError(f"{name} permutation {perm} is not a permutation")
            if len(scalars) != len(perm):
                raise ValueError(f"{name} scalars do not match the permutation size")
            if not all(scalars):
                raise ValueError(f"{name} scalars must be nonzero")

    @classmethod
    def identity(cls, k: int, l: int) -> "MonomialPair":
        return cls(tuple(range(k)), (ONE,) * k, tuple(range(l)), (ONE,) * l)

    def inverse(self) -> "MonomialPair":
        k, l = len(self.sigma), len(self.tau)
        sigma_inv = [0] * k
        for i, img in enumerate(self.sigma):
            sigma_inv[img] = i
        tau_inv = [0] * l
        for j, img in enumerate(self.tau):
            tau_inv[img] = j
        xi_inv = tuple(self.xi[sigma_inv[m]].inverse() for m in range(k))
        phi_inv = tuple(self.phi[tau_inv[m]].inverse() for m in range(l))
        return MonomialPair(tuple(sigma_inv), xi_inv, tuple(tau_inv), phi_inv)

    def x1_matrix(self) -> Mat:
        k = len(self.sigma)
        grid = [[ZERO] * k for _ in range(k)]
        for i in range(k):
            grid[i][self.sigma[i]] = self.xi[i]
        return Mat(grid, cols=k)

    def x2_matrix(self) -> Mat:
        l = len(self.tau)
        grid = [[ZERO] * l for _ in range(l)]
        for j in range(l):
            grid[j][self.tau[j]] = self.phi[j]
        return Mat(grid, cols=l)

    def block_matrix(self) -> Mat:
        return Mat.block_diag([self.x1_matrix(), self.x2_matrix()])


def group_act(g: MonomialPair, seed: Seed) -> Seed:
    """Act on a seed so that building the new seed equals conjugating the
    built matrices by g.block_matrix()."""
    k, l = seed.k, seed.l
    if len(g.sigma) != k or len(g.tau) != l:
        raise ShapeError(
            f"monomial pair sized ({len(g.sigma)},{len(g.tau)}) against seed ({k},{l})"
        )
    coupling = Mat(
        [
            [
                g.xi[i] * seed.coupling[g.sigma[i], g.tau[j]] / g.phi[j]
                for j in range(l)
            ]
            for i in range(k)
        ],
        cols=l,
    )
    eigenvalues = tuple(seed.a[g.sigma[i]] for i in range(k)) + tuple(
        seed.b[g.tau[j]] for j in range(l)
    )
    return Seed(k, l, coupling, eigenvalues)


def is_regular(eigenvalues: Sequence[GaussRat], k: int, l: int) -> bool:
    """Pairwise distinct within the first k values and within the last l;
    collisions across the two groups are allowed."""
    values = [as_gauss(x) for x in eigenvalues]
    if len(values) != k + l:
        raise ShapeError(f"expected {k + l} eigenvalues, got {len(values)}")
    a, b = values[:k], values[k:]
    return len(set(a)) == k and len(set(b)) == l


@dataclass(frozen=True, slots=True)
class EndoReport:
    dimension: int
    basis: tuple[Mat, ...]
    all_diagonal: bool


def endo_report(rep: Rep) -> EndoReport:
    """Endomorphisms computed as the commutant of {y1, y2, s}.

    e never needs checking: the mixed relations express e through the other
    three generators, so anything commuting with them commutes with e.
    """
    basis = commutant_basis([rep.y1, rep.y2, rep.s])
    return EndoReport(
        dimension=len(basis),
        basis=tuple(basis),
        all_diagonal=all(m.is_diagonal() for m in basis),
    )


@dataclass(frozen=True, slots=True)
class Verdict:
    value: str
    reason: str
    witness: tuple[tuple[Vector, ...], tuple[Vector, ...]] | None = None
    endo_dim: int | None = None


def _unit(n: int, i: int) -> Vector:
    return tuple(ONE if t == i else ZERO for t in range(n))


def _embed(vec: Sequence[GaussRat], n: int, offset: int) -> Vector:
    out = [ZERO] * n
    for t, x in enumerate(vec):
        out[offset + t] = x
    return tuple(out)


def _check_split(
    rep: Rep, witness: tuple[tuple[Vector, ...], tuple[Vector, ...]]
) -> None:
    """Verify that the two vector families span complementary invariant
    subspaces; raises when they do not."""
    part1, part2 = witness
    n = rep.dim
    if not part1 or not part2:
        raise PreconditionError("split witness must have two nonzero parts")
    if len(part1) + len(part2) != n:
        raise PreconditionError("split witness does not have full dimension")
    stacked = Mat(list(part1) + list(part2), cols=n)
    if rank(stacked) != n:
        raise PreconditionError("split witness vectors are not complementary")
    for part in (part1, part2):
        space = Mat(list(part), cols=n)
        r = rank(space)
        if r != len(part):
            raise PreconditionError("split witness vectors are dependent")
        for m in rep.generators():
            for v in part:
                image = m.apply(v)
                if rank(Mat(list(part) + [image], cols=n)) != r:
                    raise PreconditionError(
                        "claimed invariant subspace is not preserved by the generators"
                    )


def _component_witness(
    components: list[tuple[tuple[int, ...], tuple[int, ...]]], k: int, n: int
) -> tuple[tuple[Vector, ...], tuple[Vector, ...]]:
    first_rows, first_cols = components[0]
    head = {i for i in first_rows} | {k + j for j in first_cols}
    part1 = tuple(_unit(n, i) for i in sorted(head))
    part2 = tuple(_unit(n, i) for i in range(n) if i not in head)
    return part1, part2


def _repeat_witness(seed: Seed) -> tuple[tuple[Vector, ...], tuple[Vector, ...]]:
    """Split witness for one-line weight spaces with repeated shifts and a
    coupling without zeros.

    Group equal shifts.  When the second space is the line, s fixes the
    first-space coordinates up to sign, so each group sheds its non-head
    coordinate directions and keeps only its coupling-weighted sum next to
    the line.  When the first space is the line the roles flip: s pushes
    every second-space coordinate into the line, so the line plus one head
    coordinate per group stay together and the weighted-zero-sum
    differences split off.  (A weighted sum cannot serve as complement on
    that side: over the Gaussian rationals it may be isotropic and collapse
    into the zero-sum space.)
    """
    k, l = seed.k, seed.l
    n = k + l
    groups: dict[GaussRat, list[int]] = {}
    part1: list[Vector] = []
    part2: list[Vector] = []
    if l == 1:
        for t, val in enumerate(seed.a):
            groups.setdefault(val, []).append(t)
        weights = [seed.coupling[i, 0] for i in range(k)]
        for members in groups.values():
            vec = [ZERO] * n
            for t in members:
                vec[t] = weights[t]
            part2.append(tuple(vec))
            part1.extend(_unit(n, t) for t in members[1:])
        part2.append(_unit(n, k))
    elif k == 1:
        for t, val in enumerate(seed.b):
            groups.setdefault(val, []).append(t)
        weights = [seed.coupling[0, j] for j in range(l)]
        part2.append(_unit(n, 0))
        for members in groups.values():
            head = members[0]
            part2.append(_unit(n, 1 + head))
            for t in members[1:]:
                diff = [ZERO] * n
                diff[1 + t] = weights[head]
                diff[1 + head] = -weights[t]
                part1.append(tuple(diff))
    else:
        raise PreconditionError("repeat witness applies only when k = 1 or l = 1")
    return tuple(part1), tuple(part2)


def indecomposable(seed: Seed) -> Verdict:
    """Decide indecomposability of build_rep(seed) when possible.

    Regular shifts: the verdict is read off the rhizome analysis of the
    coupling.  A disconnected coupling pattern always yields an explicit
    coordinate splitting, regular or not.  One-line weight spaces with
    repeated shifts split via weighted sums.  The remaining case (repeated
    shifts, both weight spaces of dimension >= 2, connected coupling) is
    undecided here and reported with the endomorphism dimension.
    """
    k, l = seed.k, seed.l
    n = k + l
    if n == 0:
        raise ShapeError("empty seed")
    if n == 1:
        return Verdict(INDECOMPOSABLE, "one-dimensional modules are indecomposable")
    report = analyze(seed.coupling)
    regular = is_regular(seed.eigenvalues, k, l)
    if regular and report.is_rhizomatic:
        return Verdict(
            INDECOMPOSABLE,
            "regular shifts with a rhizomatic coupling force a scalar endomorphism algebra",
        )
    components = bipartite_components(seed.coupling)
    if len(components) >= 2:
        witness = _component_witness(components, k, n)
        _check_split(build_rep(seed), witness)
        return Verdict(
            DECOMPOSABLE,
            f"the coupling pattern splits into {len(components)} independent blocks",
            witness,
        )
    # a single component with n >= 2 means the coupling is rhizomatic,
    # so the shifts must be the obstruction from here on
    if k == 1 or l == 1:
        witness = _repeat_witness(seed)
        _check_split(build_rep(seed), witness)
        return Verdict(
            DECOMPOSABLE,
            "repeated shifts in a one-line weight space split off invariant summands",
            witness,
        )
    endo = endo_report(build_rep(seed))
    return Verdict(
        UNKNOWN,
        "repeated shifts with both weight spaces of dimension >= 2 are outside "
        f"the decided cases; endomorphism dimension is {endo.dimension}",
        endo_dim=endo.dimension,
    )


def e_nonzero_guarantee(seed: Seed) -> bool:
    """Regular shifts plus a rhizomatic coupling force e to act nonzero.

    The argument: were e zero, every nonzero coupling entry would tie a
    shift from one side to an equal shift on the other, and a second entry
    in its row or column would then force two equal shifts on one side,
    against regularity.  A 1x1 coupling has no second entry, so the lone
    configuration k = l = 1 with equal shifts slips through and is
    excluded here.
    """
    if not is_regular(seed.eigenvalues, seed.k, seed.l):
        return False
    if not analyze(seed.coupling).is_rhizomatic:
        return False
    if seed.k == 1 and seed.l == 1 and seed.a[0] == seed.b[0]:
        return False
    return True


@dataclass(frozen=True, slots=True)
class CanonicalForm:
    """Orbit representative: sorted shifts and a tree-gauged coupling."""

    eigenvalues: tuple[GaussRat, ...]
    coupling: Mat


def canonical_form(seed: Seed) -> CanonicalForm:
    """Canonical representative of the monomial-pair orbit of a regular
    rhizomatic seed: sort each shift group ascending, permute the coupling
    along, then normalize the scalings along a spanning tree."""
    k, l = seed.k, seed.l
    if not is_regular(seed.eigenvalues, k, l):
        raise PreconditionError("canonical form needs regular shifts")
    if not analyze(seed.coupling).is_rhizomatic:
        raise PreconditionError("canonical form needs a rhizomatic coupling")
    sigma = tuple(sorted(range(k), key=lambda i: seed.a[i]))
    tau = tuple(sorted(range(l), key=lambda j: seed.b[j]))
    sorter = MonomialPair(sigma, (ONE,) * k, tau, (ONE,) * l)
    sorted_seed = group_act(sorter, seed)
    norm = scaling_normalize(sorted_seed.coupling)
    return CanonicalForm(sorted_seed.eigenvalues, norm.normalized)


def isomorphic(seed1: Seed, seed2: Seed) -> bool:
    """Equality of canonical forms; requires both seeds regular and rhizomatic.

    Seeds with different weight space dimensions are never isomorphic.
    """
    if (seed1.k, seed1.l) != (seed2.k, seed2.l):
        return False
    for seed in (seed1, seed2):
        if not is_regular(seed.eigenvalues, seed.k, seed.l) or not analyze(
            seed.coupling
        ).is_rhizomatic:
            raise PreconditionError(
                "isomorphism testing needs regular rhizomatic seeds on both sides; "
                "compare endo_report output instead"
            )
    return canonical_form(seed1) == canonical_form(seed2)


@dataclass(frozen=True, slots=True)
class WeightBlockPartition:
    """Indices of the +1 and -1 weight spaces and of the paired weight
    blocks (d, indices with weight d, indices with weight -d), in the
    original basis order."""

    plus_block: tuple[int, ...]
    minus_block: tuple[int, ...]
    other_blocks: tuple[tuple[GaussRat, tuple[int, ...], tuple[int, ...]], ...]


def split_weight_blocks(rep: Rep) -> tuple[WeightBlockPartition, Rep, Rep | None]:
    """Sort a calibrated module by y1 - y2 weight into the (+1, -1) core and
    the paired blocks on which e acts by zero.

    The relations force the block structure: weights off the core come in
    (d, -d) pairs coupled only through s, whose diagonal must be -1/weight,
    and e vanishes outside the (+1, -1) corner.  Any deviation means the
    input does not satisfy the relations and is reported as an error.
    Returns (partition, core module, remaining module or None).
    """
    if not rep.is_calibrated:
        raise PreconditionError("weight splitting needs diagonal y1 and y2")
    n = rep.dim
    d = [rep.y1[i, i] - rep.y2[i, i] for i in range(n)]
    for i, di in enumerate(d):
        if not di:
            raise PreconditionError(
                f"basis vector {i} has weight 0, impossible under the relations"
            )
    plus = [i for i in range(n) if d[i] == ONE]
    minus = [i for i in range(n) if d[i] == _MINUS_ONE]

    # pair the remaining weights as (d, -d) with d the larger of the two
    block_keys: list[GaussRat] = []
    for i in range(n):
        if d[i] == ONE or d[i] == _MINUS_ONE:
            continue
        key = max(d[i], -d[i])
        if key not in block_keys:
            block_keys.append(key)
    block_keys.sort()
    blocks = [
        (
            key,
            tuple(i for i in range(n) if d[i] == key),
            tuple(i for i in range(n) if d[i] == -key),
        )
        for key in block_keys
    ]

    for p in range(n):
        for q in range(n):
            if rep.e[p, q] and not (d[p] == ONE and d[q] == _MINUS_ONE):
                raise PreconditionError(
                    f"e has entry {rep.e[p, q]} at {(p, q)} outside the (+1,-1) corner"
                )
            if p == q:
                expected = -d[p].inverse()
                if rep.s[p, p] != expected:
                    raise PreconditionError(
                        f"s diagonal at {p} is {rep.s[p, p]}, expected {expected}"
                    )
            elif rep.s[p, q] and d[p] != -d[q]:
                raise PreconditionError(
                    f"s has entry {rep.s[p, q]} at {(p, q)} between unpaired weights"
                )

    partition = WeightBlockPartition(tuple(plus), tuple(minus), tuple(blocks))
    core_idx = plus + minus
    core = Rep(
        len(plus),
        len(minus),
        y1=rep.y1.submatrix(core_idx, core_idx),
        y2=rep.y2.submatrix(core_idx, core_idx),
        s=rep.s.submatrix(core_idx, core_idx),
        e=rep.e.submatrix(core_idx, core_idx),
    )
    rest_idx = [i for _, bp, bm in blocks for i in (*bp, *bm)]
    rest = None
    if rest_idx:
        rest = Rep(
            sum(len(bp) for _, bp, _ in blocks),
            sum(len(bm) for _, _, bm in blocks),
            y1=rep.y1.submatrix(rest_idx, rest_idx),
            y2=rep.y2.submatrix(rest_idx, rest_idx),
            s=rep.s.submatrix(rest_idx, rest_idx),
            e=rep.e.submatrix(rest_idx, rest_idx),
        )
    return partition, core, rest


def split_core(rep: Rep) -> Verdict:
    """Try to split a core-shaped module along the lower-left block of s.

    With s = [[-1, S], [T, 1]] in block form and T nonzero, the pivot
    coordinates of T and its column space span one invariant summand; the
    kernel of T and the coordinate complement of the column space span the
    other.  T = 0 says nothing (classify from the seed instead), and a T of
    full rank on both sides leaves no complement to split off.
    """
    if not rep.is_calibrated:
        raise PreconditionError("core splitting needs diagonal y1 and y2")
    n = rep.dim
    d = [rep.y1[i, i] - rep.y2[i, i] for i in range(n)]
    k = 0
    while k < n and d[k] == ONE:
        k += 1
    l = n - k
    if any(d[i] != _MINUS_ONE for i in range(k, n)):
        raise PreconditionError(
            "not in core shape: y1 - y2 must be +1s followed by -1s"
        )
    if (k, l) != (rep.k, rep.l):
        raise PreconditionError(
            f"declared split ({rep.k},{rep.l}) does not match weights ({k},{l})"
        )
    for i in range(k):
        for j in range(k):
            expected = _MINUS_ONE if i == j else ZERO
            if rep.s[i, j] != expected:
                raise PreconditionError("upper-left block of s is not -identity")
    for i in range(l):
        for j in range(l):
            expected = ONE if i == j else ZERO
            if rep.s[k + i, k + j] != expected:
                raise PreconditionError("lower-right block of s is not the identity")

    lower = rep.s.submatrix(range(k, n), range(k))
    upper = rep.s.submatrix(range(k), range(k, n))
    if not (upper * lower).is_zero() or not (lower * upper).is_zero():
        raise PreconditionError("s does not square to the identity on the core")
    if lower.is_zero():
        return Verdict(
            UNKNOWN,
            "lower coupling block is zero; decide from the seed data instead",
        )
    kernel, pivot_cols = kernel_and_pivots(lower)
    image_rows, image_leads = row_basis(lower.transpose())
    part1 = tuple(_unit(n, p) for p in pivot_cols) + tuple(
        _embed(w, n, k) for w in image_rows
    )
    part2 = tuple(_embed(u, n, 0) for u in kernel) + tuple(
        _unit(n, k + q) for q in range(l) if q not in image_leads
    )
    if not part2:
        return Verdict(
            UNKNOWN,
            "lower coupling block has full rank on both sides; "
            "no complementary summand arises from this route",
        )
    witness = (part1, part2)
    _check_split(rep, witness)
    return Verdict(
        DECOMPOSABLE,
        "nonzero lower coupling block splits the module into two invariant summands",
        witness,
    )


def canonical_to_json(form: CanonicalForm) -> dict:
    return {
        "ab": [gauss_to_json(x) for x in form.eigenvalues],
        "S": mat_to_json(form.coupling),
    }


def verdict_to_json(verdict: Verdict) -> dict:
    witness = None
    if verdict.witness is not None:
        witness = [
            [[gauss_to_json(x) for x in vec] for vec in part]
            for part in verdict.witness
        ]
    return {
        "verdict": verdict.value,
        "reason": verdict.reason,
        "witness": witness,
        "endo_dim": verdict.endo_dim,
    }
