"""Brute-force cross-checks: lattice algebra by kernel computation and point counting.

Nothing here goes through duality or any closed form, so agreement with the
other modules is meaningful.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import ceil, floor, gcd, prod
from typing import Sequence

from sympy import Matrix
from sympy.matrices.normalforms import smith_normal_decomp

from . import linalg
from .engine import CosetLattice, Multilattice, ShiftedLattice
from .errors import DomainError
from .lattice import RationalLattice
from .linalg import RatVector


def hnf(basis: Sequence[Sequence]) -> RationalLattice:
    """Canonical form of the lattice spanned by the given column vectors."""
    return RationalLattice.span(basis)


@dataclass(frozen=True)
class SmithForm:
    diagonal: tuple[int, ...]
    left: tuple[tuple[int, ...], ...]
    right: tuple[tuple[int, ...], ...]

    @property
    def index(self) -> int:
        return prod(self.diagonal)


def snf(matrix: Sequence[Sequence[int]]) -> SmithForm:
    """Smith normal form: left @ matrix @ right == diag(diagonal)."""
    m = Matrix(matrix)
    if m.rank() < min(m.shape):
        raise DomainError("matrix is rank deficient")
    d, s, t = smith_normal_decomp(m)
    diag = tuple(abs(int(d[i, i])) for i in range(min(d.shape)))
    to_t = lambda a: tuple(tuple(int(x) for x in a.row(i)) for i in range(a.rows))
    return SmithForm(diag, to_t(s), to_t(t))


def relative_snf(sub: RationalLattice, ambient: RationalLattice) -> SmithForm:
    """SNF of the coordinates of `sub`'s basis with respect to `ambient`'s basis."""
    cols = [ambient.coordinates(b) for b in sub.basis]
    if any(x.denominator != 1 for c in cols for x in c):
        raise DomainError("not a sublattice")
    d = ambient.dim
    return snf([[int(cols[j][i]) for j in range(d)] for i in range(d)])


def coset_intersect(
    c1: tuple[Sequence, RationalLattice], c2: tuple[Sequence, RationalLattice]
) -> CosetLattice | None:
    """(x1 + L1) ∩ (x2 + L2) by solving x1 + B1 a = x2 + B2 b over the integers.

    The kernel of [B1 | -B2] gives the intersection lattice; a particular
    solution gives the representative.
    """
    (x1, l1), (x2, l2) = c1, c2
    if l1.dim != l2.dim:
        raise DomainError("dimension mismatch")
    d = l1.dim
    h1, h2 = l1.hnf, l2.hnf
    # scale both bases and the right-hand side by a common denominator
    rhs = [linalg.as_fraction(p) - linalg.as_fraction(q) for p, q in zip(x2, x1)]
    den = linalg.common_denominator(rhs)
    den = den * l1.denom * l2.denom // gcd(den, l1.denom * l2.denom)
    s1, s2 = den // l1.denom, den // l2.denom
    mat = [[s1 * h1[i][j] for j in range(d)] + [-s2 * h2[i][j] for j in range(d)] for i in range(d)]
    h, u = linalg.hnf_with_transform(mat)
    y = linalg.solve_lower_integral(h, [int(x * den) for x in rhs])
    if y is None:
        return None
    a = [sum(u[i][k] * y[k] for k in range(d)) for i in range(d)]
    point = tuple(
        linalg.as_fraction(x1[i]) + Fraction(sum(h1[i][j] * a[j] for j in range(d)), l1.denom) for i in range(d)
    )
    kernel = []
    for k in range(d, 2 * d):
        kernel.append([sum(h1[i][j] * u[j][k] for j in range(d)) for i in range(d)])
    lat = RationalLattice._from_scaled(linalg.hnf_columns(kernel), l1.denom)
    return CosetLattice.make(point, lat)


def image_coset(r, shift: Sequence, lattice: RationalLattice) -> tuple[RatVector, RationalLattice]:
    """R(shift + L) as a (shift, lattice) pair."""
    return linalg.mat_vec(r, [Fraction(x) for x in shift]), lattice.transform(r)


@dataclass(frozen=True)
class PointSet:
    points: frozenset[RatVector]
    window: tuple[tuple[Fraction, Fraction], ...]

    def __len__(self):
        return len(self.points)

    def __and__(self, other: "PointSet") -> "PointSet":
        return PointSet(self.points & other.points, self.window)


def _check_window(window) -> tuple[tuple[Fraction, Fraction], ...]:
    w = tuple((Fraction(lo), Fraction(hi)) for lo, hi in window)
    if any(hi <= lo for lo, hi in w):
        raise DomainError("degenerate window")
    return w


def _lattice_points(x: Sequence, lat: RationalLattice, window) -> set[RatVector]:
    # the basis is lower triangular, so coordinates can be bounded row by row
    h, den = lat.hnf, lat.denom
    d = lat.dim
    out: set[RatVector] = set()
    xs = [Fraction(v) for v in x]

    def rec(i: int, partial: list[Fraction], coeffs: list[int]):
        if i == d:
            out.add(tuple(partial))
            return
        lo, hi = window[i]
        base = xs[i] + sum((Fraction(h[i][j], den) * coeffs[j] for j in range(i)), Fraction(0))
        step = Fraction(h[i][i], den)
        for c in range(ceil((lo - base) / step), floor((hi - base) / step) + 1):
            val = base + c * step
            if lo <= val < hi:
                rec(i + 1, partial + [val], coeffs + [c])

    rec(0, [], [])
    return out


def enumerate_points(s, window) -> PointSet:
    """Points of a shifted lattice, multilattice or plain lattice inside a half-open box."""
    w = _check_window(window)
    if isinstance(s, RationalLattice):
        pts = _lattice_points((0,) * s.dim, s, w)
    elif isinstance(s, ShiftedLattice):
        pts = _lattice_points(s.shift, s.lattice, w)
    elif isinstance(s, Multilattice):
        pts = set()
        for x in s.shifts:
            pts |= _lattice_points(x, s.lattice, w)
    else:
        raise TypeError(f"cannot enumerate {type(s).__name__}")
    return PointSet(frozenset(pts), w)


def transformed_points(s, r, window) -> PointSet:
    """Points of R(s) inside the window, found by enumerating s in a box covering R^T(window)."""
    w = _check_window(window)
    rt = linalg.transpose(linalg.to_fraction_matrix(r))
    corners = [linalg.mat_vec(rt, c) for c in itertools.product(*w)]
    d = len(w)
    cover = tuple((min(c[i] for c in corners), max(c[i] for c in corners) + 1) for i in range(d))
    src = enumerate_points(s, cover)
    pts = set()
    for p in src.points:
        q = linalg.mat_vec(r, p)
        if all(lo <= q[i] < hi for i, (lo, hi) in enumerate(w)):
            pts.add(tuple(Fraction(v) for v in q))
    return PointSet(frozenset(pts), w)


def empirical_index(a: PointSet, b: PointSet) -> Fraction:
    """|A| / |A ∩ B| inside the common window."""
    common = a & b
    if not common.points:
        raise DomainError("empty intersection in window")
    return Fraction(len(a.points), len(common.points))
