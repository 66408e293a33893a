"""Affine coincidences, shifted lattices and multilattices over exact rational lattices."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from fractions import Fraction
from typing import Sequence

from . import linalg
from .errors import DomainError
from .lattice import RationalLattice, lattice_intersect, lattice_sum
from .linalg import RatMatrix, RatVector


def _vec(v) -> RatVector:
    return tuple(linalg.as_fraction(x) for x in v)


def _sub(a, b) -> RatVector:
    return tuple(x - y for x, y in zip(a, b))


def _add(a, b) -> RatVector:
    return tuple(x + y for x, y in zip(a, b))


def as_matrix(m: Sequence[Sequence]) -> RatMatrix:
    return linalg.to_fraction_matrix(m)


@dataclass(frozen=True)
class AffineIsometry:
    linear: RatMatrix
    translation: RatVector

    def __post_init__(self):
        lin = as_matrix(self.linear)
        if not linalg.is_orthogonal(lin):
            raise DomainError("linear part is not orthogonal")
        object.__setattr__(self, "linear", lin)
        object.__setattr__(self, "translation", _vec(self.translation))

    @classmethod
    def linear_only(cls, r) -> "AffineIsometry":
        return cls(r, (0,) * len(r))

    def __call__(self, x) -> RatVector:
        return _add(self.translation, linalg.mat_vec(self.linear, _vec(x)))

    def inverse(self) -> "AffineIsometry":
        rt = linalg.transpose(self.linear)
        return AffineIsometry(rt, tuple(-x for x in linalg.mat_vec(rt, self.translation)))

    def compose(self, first: "AffineIsometry") -> "AffineIsometry":
        """self after first."""
        return AffineIsometry(linalg.mat_mul(self.linear, first.linear), self(first.translation))


@dataclass(frozen=True)
class CosetLattice:
    """representative + sublattice, with the representative reduced modulo the sublattice."""

    representative: RatVector
    sublattice: RationalLattice

    @classmethod
    def make(cls, representative, sublattice: RationalLattice) -> "CosetLattice":
        return cls(sublattice.reduce(representative), sublattice)

    def __contains__(self, v) -> bool:
        return _sub(_vec(v), self.representative) in self.sublattice

    def to_json(self) -> dict:
        return {"representative": [str(x) for x in self.representative], "lattice": self.sublattice.to_json()}


@dataclass(frozen=True)
class ShiftedLattice:
    lattice: RationalLattice
    shift: RatVector

    @classmethod
    def make(cls, lattice: RationalLattice, shift) -> "ShiftedLattice":
        return cls(lattice, lattice.reduce(_vec(shift)))


@dataclass(frozen=True)
class Multilattice:
    lattice: RationalLattice
    shifts: tuple[RatVector, ...]

    def __post_init__(self):
        shifts = tuple(_vec(x) for x in self.shifts)
        if not shifts or any(x != 0 for x in shifts[0]):
            raise DomainError("the first shift must be the origin")
        for j in range(len(shifts)):
            for k in range(j):
                if _sub(shifts[j], shifts[k]) in self.lattice:
                    raise DomainError(f"shifts {k} and {j} agree modulo the lattice")
        object.__setattr__(self, "shifts", shifts)

    @property
    def m(self) -> int:
        return len(self.shifts)

    @classmethod
    def from_json(cls, data: dict) -> "Multilattice":
        basis = [[Fraction(x) for x in row] for row in data["basis"]]
        d = data.get("dim", len(basis))
        if len(basis) != d:
            raise DomainError("basis size does not match dim")
        return cls(RationalLattice.span(basis), tuple(tuple(Fraction(x) for x in s) for s in data["shifts"]))


@dataclass(frozen=True)
class CsmlDescription:
    cosets: tuple[CosetLattice, ...]
    index: Fraction
    sigma_pairs: tuple[tuple[int, int], ...]
    sigma_lattice: int

    def to_json(self) -> dict:
        return {
            "index": str(self.index),
            "sigma_lattice": self.sigma_lattice,
            "pairs": [list(p) for p in self.sigma_pairs],
            "cosets": [c.to_json() for c in self.cosets],
        }


@lru_cache(maxsize=8192)
def _csl_cached(lattice: RationalLattice, r: RatMatrix) -> RationalLattice:
    return lattice_intersect(lattice, lattice.transform(r))


def csl(lattice: RationalLattice, r) -> RationalLattice:
    return _csl_cached(lattice, as_matrix(r))


def dsc(lattice: RationalLattice, r) -> RationalLattice:
    return lattice_sum(lattice, lattice.transform(r))


def coincidence_index(lattice: RationalLattice, r) -> int:
    return csl(lattice, r).index_in(lattice)


@dataclass(frozen=True)
class _SumSolver:
    """Solves v = B a + R B c for integer a, c, with B = H/D and R = M/dm.

    Scaled by dm*D the system has integer columns [dm H | M H]; their column
    HNF (with transform) is computed once and reused for every v.
    """

    lattice: RationalLattice
    scale: int
    hnf: tuple
    transform: tuple

    @classmethod
    @lru_cache(maxsize=8192)
    def build(cls, lattice: RationalLattice, r: RatMatrix) -> "_SumSolver":
        h, d = lattice.hnf, lattice.dim
        dm = linalg.common_denominator(x for row in r for x in row)
        m = [[int(x * dm) for x in row] for row in r]
        mh = [[sum(m[i][k] * h[k][j] for k in range(d)) for j in range(d)] for i in range(d)]
        mat = [[dm * h[i][j] for j in range(d)] + mh[i] for i in range(d)]
        hh, u = linalg.hnf_with_transform(mat)
        return cls(lattice, dm * lattice.denom, hh, u)

    def solve(self, v: RatVector) -> RatVector | None:
        rhs = [Fraction(x) * self.scale for x in v]
        if any(x.denominator != 1 for x in rhs):
            return None
        y = linalg.solve_lower_integral(self.hnf, [int(x) for x in rhs])
        if y is None:
            return None
        h, d, u = self.lattice.hnf, self.lattice.dim, self.transform
        a = [sum(u[i][k] * y[k] for k in range(d)) for i in range(d)]
        return tuple(Fraction(sum(h[i][j] * a[j] for j in range(d)), self.lattice.denom) for i in range(d))


def _solve_sum(lattice: RationalLattice, r: RatMatrix, v: RatVector) -> RatVector | None:
    """An l in the lattice with v - l in r(lattice), or None when v is not in lattice + r(lattice)."""
    return _SumSolver.build(lattice, as_matrix(r)).solve(v)


def is_affine_coincidence(lattice: RationalLattice, iso: AffineIsometry) -> bool:
    """(v, R) is an affine coincidence iff R is a linear coincidence and v in G + RG.

    A rational orthogonal R always gives a commensurate image of a rational lattice.
    """
    return iso.translation in dsc(lattice, iso.linear)


def acsl(lattice: RationalLattice, iso: AffineIsometry) -> CosetLattice:
    """G ∩ (v,R)G as l + G(R)."""
    ell = _solve_sum(lattice, iso.linear, iso.translation)
    if ell is None:
        raise DomainError("not an affine coincidence: the intersection is empty")
    return CosetLattice.make(ell, csl(lattice, iso.linear))


def shifted_coincidence(s: ShiftedLattice, r) -> CosetLattice | None:
    """(x+G) ∩ R(x+G) = x + [G ∩ (Rx - x, R)G], or None."""
    r = as_matrix(r)
    x = s.shift
    v = _sub(linalg.mat_vec(r, x), x)
    ell = _solve_sum(s.lattice, r, v)
    if ell is None:
        return None
    return CosetLattice.make(_add(x, ell), csl(s.lattice, r))


def multilattice_coincidence(ml: Multilattice, r, v=None) -> CsmlDescription:
    """L ∩ (RL + v) as a disjoint union of cosets of G(R), with its index m*Sigma/|sigma|."""
    r = as_matrix(r)
    v = _vec(v) if v is not None else (Fraction(0),) * ml.lattice.dim
    if not linalg.is_orthogonal(r):
        raise DomainError("not an orthogonal matrix")
    gamma_r = csl(ml.lattice, r)
    sigma = gamma_r.index_in(ml.lattice)
    pairs, cosets = [], []
    for j, xj in enumerate(ml.shifts):
        rxj = _add(linalg.mat_vec(r, xj), v)
        for k, xk in enumerate(ml.shifts):
            ell = _solve_sum(ml.lattice, r, _sub(rxj, xk))
            if ell is not None:
                pairs.append((j, k))
                cosets.append(CosetLattice.make(_add(xk, ell), gamma_r))
    if not pairs:
        raise DomainError("the intersection is empty")
    index = Fraction(ml.m * sigma, len(pairs))
    order = sorted(range(len(cosets)), key=lambda i: cosets[i].representative)
    return CsmlDescription(tuple(cosets[i] for i in order), index, tuple(pairs), sigma)
