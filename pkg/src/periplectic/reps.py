"""Constructions of calibrated representations.

All modules built here act on a basis split into k vectors of weight +1 and
l vectors of weight -1 for y1 - y2.  The two-parameter family is seeded by a
k x l coupling matrix together with a vector of k + l eigenvalue shifts; the
unshifted case is the pulled-back degenerate affine Hecke module, and a
nonzero shift pattern switches on the extra generator e.
"""

from __future__ import annotations

from dataclasses import dataclass

from .algebra import Rep
from .errors import CodecError, PreconditionError, ShapeError
from .linalg import (
    GaussRat,
    Mat,
    ONE,
    ZERO,
    as_gauss,
    gauss_from_json,
    gauss_to_json,
    mat_from_json,
    mat_to_json,
)

__all__ = [
    "Seed",
    "ExtensionProfile",
    "build_one_dim",
    "build_hecke_module",
    "build_rep",
    "entrywise_e",
    "extension_profile",
    "seed_to_json",
    "seed_from_json",
]

_MINUS_ONE = GaussRat(-1)


@dataclass(frozen=True, slots=True)
class Seed:
    """Input data for the two-parameter family: a coupling matrix and shifts.

    eigenvalues lists the k shift values a_1..a_k followed by the l values
    b_1..b_l; the built module has y1 = diag(a_1..a_k, b_1 - 1..b_l - 1).
    """

    k: int
    l: int
    coupling: Mat
    eigenvalues: tuple[GaussRat, ...]

    def __post_init__(self) -> None:
        if self.k < 0 or self.l < 0:
            raise ShapeError("k and l must be non-negative")
        if self.coupling.shape != (self.k, self.l):
            raise ShapeError(
                f"coupling must be {self.k}x{self.l}, got {self.coupling.shape}"
            )
        object.__setattr__(
            self, "eigenvalues", tuple(as_gauss(x) for x in self.eigenvalues)
        )
        if len(self.eigenvalues) != self.k + self.l:
            raise ShapeError(
                f"expected {self.k + self.l} eigenvalues, got {len(self.eigenvalues)}"
            )

    @property
    def a(self) -> tuple[GaussRat, ...]:
        """Shifts attached to the +1 weight space."""
        return self.eigenvalues[: self.k]

    @property
    def b(self) -> tuple[GaussRat, ...]:
        """Shifts attached to the -1 weight space."""
        return self.eigenvalues[self.k :]


def build_one_dim(a: object, sign: str) -> Rep:
    """One-dimensional module: y1 = a, s = sign, e = 0, y2 = a -+ 1.

    sign "+" gives y2 = a + 1 on a (-1)-weight line; sign "-" gives
    y2 = a - 1 on a (+1)-weight line.
    """
    value = as_gauss(a)
    if sign == "+":
        k, l = 0, 1
        s_val, y2_val = ONE, value + ONE
    elif sign == "-":
        k, l = 1, 0
        s_val, y2_val = _MINUS_ONE, value - ONE
    else:
        raise ValueError(f"sign must be '+' or '-', got {sign!r}")
    return Rep(
        k,
        l,
        y1=Mat.diagonal([value]),
        y2=Mat.diagonal([y2_val]),
        s=Mat.diagonal([s_val]),
        e=Mat.zero(1, 1),
    )


def build_hecke_module(k: int, l: int, coupling: Mat) -> Rep:
    """Pulled-back Hecke module: y1 = diag(0,..,-1,..), upper-triangular s, e = 0."""
    if coupling.shape != (k, l):
        raise ShapeError(f"coupling must be {k}x{l}, got {coupling.shape}")
    y1 = Mat.diagonal([ZERO] * k + [_MINUS_ONE] * l)
    y2 = Mat.diagonal([_MINUS_ONE] * k + [ZERO] * l)
    s = Mat.block(
        [
            [-Mat.identity(k), coupling],
            [Mat.zero(l, k), Mat.identity(l)],
        ]
    )
    return Rep(k, l, y1=y1, y2=y2, s=s, e=Mat.zero(k + l, k + l))


def build_rep(seed: Seed) -> Rep:
    """Shift the Hecke module by the seed eigenvalues and derive e from the
    mixed relation e = -s*y2 + y1*s + 1."""
    base = build_hecke_module(seed.k, seed.l, seed.coupling)
    shift = Mat.diagonal(seed.eigenvalues)
    y1 = base.y1 + shift
    y2 = base.y2 + shift
    s = base.s
    e = -(s * y2) + y1 * s + Mat.identity(seed.k + seed.l)
    return Rep(seed.k, seed.l, y1=y1, y2=y2, s=s, e=e)


def entrywise_e(seed: Seed) -> Mat:
    """The e matrix of build_rep computed entry by entry: the only nonzero
    block is the upper-right k x l corner with entries (a_i - b_j) * coupling_ij.

    Kept as a second route to the same matrix; build_rep derives e from the
    relations instead.
    """
    k, l = seed.k, seed.l
    n = k + l
    grid = [[ZERO] * n for _ in range(n)]
    for i in range(k):
        for j in range(l):
            grid[i][k + j] = (seed.a[i] - seed.b[j]) * seed.coupling[i, j]
    return Mat(grid, cols=n)


@dataclass(frozen=True, slots=True)
class ExtensionProfile:
    """Composition data read off a module in canonical block shape: the
    socle collects one-dimensional s = -1 factors, the quotient s = +1
    factors, each tagged with its y1 eigenvalue."""

    socle_factors: tuple[tuple[str, GaussRat], ...]
    quotient_factors: tuple[tuple[str, GaussRat], ...]


def extension_profile(rep: Rep) -> ExtensionProfile:
    """Read the extension structure of a module with y1 - y2 = diag(1..,-1..).

    The submodule spanned by the +1 weight vectors is a sum of
    one-dimensional sign "-" modules with eigenvalues a_i; the quotient is a
    sum of sign "+" modules with eigenvalues b_j - 1.
    """
    if not rep.is_calibrated:
        raise PreconditionError("extension profile needs diagonal y1 and y2")
    n = rep.dim
    d = [rep.y1[i, i] - rep.y2[i, i] for i in range(n)]
    k = 0
    while k < n and d[k] == ONE:
        k += 1
    if any(d[i] != _MINUS_ONE for i in range(k, n)):
        raise PreconditionError(
            "rep not in canonical block shape: y1 - y2 must be +1s followed by -1s"
        )
    if (k, n - k) != (rep.k, rep.l):
        raise PreconditionError(
            f"declared split ({rep.k},{rep.l}) does not match weights ({k},{n - k})"
        )
    socle = tuple(("-", rep.y1[i, i]) for i in range(k))
    quotient = tuple(("+", rep.y1[i, i]) for i in range(k, n))
    return ExtensionProfile(socle, quotient)


def seed_to_json(seed: Seed) -> dict:
    return {
        "k": seed.k,
        "l": seed.l,
        "S": mat_to_json(seed.coupling),
        "ab": [gauss_to_json(x) for x in seed.eigenvalues],
    }


def seed_from_json(data: object) -> Seed:
    if not isinstance(data, dict):
        raise CodecError(f"expected a JSON object for a seed, got {data!r}")
    missing = {"k", "l", "S", "ab"} - set(data)
    if missing:
        raise CodecError(f"seed object lacks keys {sorted(missing)}")
    k, l = data["k"], data["l"]
    if not isinstance(k, int) or not isinstance(l, int) or k < 0 or l < 0:
        raise CodecError("k and l must be non-negative integers")
    coupling = mat_from_json(data["S"], rows=k, cols=l)
    ab = data["ab"]
    if not isinstance(ab, list) or len(ab) != k + l:
        raise CodecError(f"ab must list {k + l} values, got {ab!r}")
    try:
        return Seed(k, l, coupling, tuple(gauss_from_json(x) for x in ab))
    except ShapeError as exc:
        raise CodecError(str(exc)) from None
