"""Relation checking for two-strand degenerate affine algebras.

A representation is a quadruple of square matrices (y1, y2, s, e).  The
periplectic checker tests the nine defining relations of the two-strand
degenerate affine periplectic Brauer algebra; the Hecke checker tests the
four relations of the degenerate affine Hecke algebra, the quotient in
which e becomes zero.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Mapping

from .errors import CodecError, ShapeError
from .linalg import (
    GaussRat,
    Mat,
    as_gauss,
    mat_from_json,
    mat_to_json,
)

__all__ = [
    "Rep",
    "Violation",
    "RelationReport",
    "verify_periplectic",
    "verify_hecke",
    "poly_matrix",
    "e_sandwich_zero",
    "e_is_zero",
    "rep_to_json",
    "rep_from_json",
]


@dataclass(frozen=True, slots=True)
class Rep:
    """Matrices for the four generators, acting on a (k+l)-dimensional space.

    k and l record the declared split of the basis into (+1)- and
    (-1)-weight vectors for y1 - y2; the constructions in `reps` always
    order the basis so the +1 block comes first.
    """

    k: int
    l: int
    y1: Mat
    y2: Mat
    s: Mat
    e: Mat

    def __post_init__(self) -> None:
        if self.k < 0 or self.l < 0:
            raise ShapeError("k and l must be non-negative")
        n = self.k + self.l
        for name in ("y1", "y2", "s", "e"):
            m: Mat = getattr(self, name)
            if m.shape != (n, n):
                raise ShapeError(f"{name} must be {n}x{n}, got {m.shape}")

    @property
    def dim(self) -> int:
        return self.k + self.l

    @property
    def is_calibrated(self) -> bool:
        return self.y1.is_diagonal() and self.y2.is_diagonal()

    def generators(self) -> tuple[Mat, Mat, Mat, Mat]:
        return (self.y1, self.y2, self.s, self.e)


@dataclass(frozen=True, slots=True)
class Violation:
    relation: str
    position: tuple[int, int]
    lhs: GaussRat
    rhs: GaussRat


@dataclass(frozen=True, slots=True)
class RelationReport:
    passed: bool
    violations: tuple[Violation, ...]
    checked: tuple[str, ...]


def _first_mismatch(lhs: Mat, rhs: Mat) -> tuple[tuple[int, int], GaussRat, GaussRat] | None:
    for i in range(lhs.rows):
        for j in range(lhs.cols):
            if lhs[i, j] != rhs[i, j]:
                return (i, j), lhs[i, j], rhs[i, j]
    return None


def _run_checks(checks: list[tuple[str, Mat, Mat]]) -> RelationReport:
    violations = []
    for name, lhs, rhs in checks:
        hit = _first_mismatch(lhs, rhs)
        if hit is not None:
            position, a, b = hit
            violations.append(Violation(name, position, a, b))
    return RelationReport(
        not violations, tuple(violations), tuple(name for name, _, _ in checks)
    )


def verify_periplectic(rep: Rep) -> RelationReport:
    """Check all nine defining relations; the report carries the first
    offending entry of each relation that fails."""
    y1, y2, s, e = rep.generators()
    n = rep.dim
    one = Mat.identity(n)
    zero = Mat.zero(n, n)
    checks = [
        ("s*s = 1", s * s, one),
        ("y1*y2 = y2*y1", y1 * y2, y2 * y1),
        ("s*y1 = y2*s - 1 - e", s * y1, y2 * s - one - e),
        ("s*y2 = y1*s + 1 - e", s * y2, y1 * s + one - e),
        ("e*e = 0", e * e, zero),
        ("e*s = e", e * s, e),
        ("s*e = -e", s * e, -e),
        ("e*y2 = e*y1 + e", e * y2, e * y1 + e),
        ("y1*e = y2*e + e", y1 * e, y2 * e + e),
    ]
    return _run_checks(checks)


def verify_hecke(rep: Rep) -> RelationReport:
    """Check the four degenerate affine Hecke relations on (y1, y2, s)."""
    y1, y2, s, _ = rep.generators()
    one = Mat.identity(rep.dim)
    checks = [
        ("s*s = 1", s * s, one),
        ("y1*y2 = y2*y1", y1 * y2, y2 * y1),
        ("s*y1 = y2*s - 1", s * y1, y2 * s - one),
        ("s*y2 = y1*s + 1", s * y2, y1 * s + one),
    ]
    return _run_checks(checks)


def poly_matrix(
    y1: Mat, y2: Mat, poly: Mapping[tuple[int, int], object]
) -> Mat:
    """Evaluate a two-variable polynomial, given as {(p, q): coeff}, at (y1, y2)."""
    if y1.shape != y2.shape or not y1.is_square():
        raise ShapeError("y1 and y2 must be square of equal size")
    n = y1.rows
    max1 = max((p for p, _ in poly), default=0)
    max2 = max((q for _, q in poly), default=0)
    pow1 = [Mat.identity(n)]
    for _ in range(max1):
        pow1.append(pow1[-1] * y1)
    pow2 = [Mat.identity(n)]
    for _ in range(max2):
        pow2.append(pow2[-1] * y2)
    out = Mat.zero(n, n)
    for (p, q), coeff in poly.items():
        c = as_gauss(coeff)
        if c:
            out = out + c * (pow1[p] * pow2[q])
    return out


def e_sandwich_zero(rep: Rep, poly: Mapping[tuple[int, int], object]) -> bool:
    """True when e * f(y1, y2) * e vanishes.

    This holds for every polynomial f whenever the representation satisfies
    the defining relations, so a False return flags an invalid input.
    """
    middle = poly_matrix(rep.y1, rep.y2, poly)
    return (rep.e * middle * rep.e).is_zero()


def e_is_zero(rep: Rep) -> bool:
    return rep.e.is_zero()


def rep_to_json(rep: Rep) -> dict:
    return {
        "k": rep.k,
        "l": rep.l,
        "y1": mat_to_json(rep.y1),
        "y2": mat_to_json(rep.y2),
        "s": mat_to_json(rep.s),
        "e": mat_to_json(rep.e),
    }


def rep_from_json(data: object) -> Rep:
    if not isinstance(data, dict):
        raise CodecError(f"expected a JSON object for a representation, got {data!r}")
    missing = {"k", "l", "y1", "y2", "s", "e"} - set(data)
    if missing:
        raise CodecError(f"representation object lacks keys {sorted(missing)}")
    k, l = data["k"], data["l"]
    if not isinstance(k, int) or not isinstance(l, int) or k < 0 or l < 0:
        raise CodecError("k and l must be non-negative integers")
    n = k + l
    mats = {
        name: mat_from_json(data[name], rows=n, cols=n)
        for name in ("y1", "y2", "s", "e")
    }
    return Rep(k, l, mats["y1"], mats["y2"], mats["s"], mats["e"])
