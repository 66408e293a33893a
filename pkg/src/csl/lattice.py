"""Full-rank lattices with exact rational bases."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import floor, gcd
from typing import Iterable, Sequence

from . import linalg
from .errors import DomainError
from .linalg import IntMatrix, RatMatrix, RatVector


def _vec(v) -> RatVector:
    return tuple(Fraction(x) for x in v)


@dataclass(frozen=True)
class RationalLattice:
    """A lattice ``(1/denom) * hnf * Z^d``.

    `hnf` is the canonical column HNF (rows of a lower-triangular matrix) and
    `denom` is the least positive integer scaling the lattice into Z^d, so two
    lattices are equal exactly when their fields are.
    """

    hnf: IntMatrix
    denom: int

    @classmethod
    def span(cls, generators: Iterable[Sequence]) -> "RationalLattice":
        """Lattice spanned by rational generator vectors (at least d of them)."""
        gens = [_vec(v) for v in generators]
        if not gens:
            raise DomainError("no generators")
        d = len(gens[0])
        if any(len(v) != d for v in gens):
            raise DomainError("generators of mixed dimension")
        den = linalg.common_denominator(x for v in gens for x in v)
        ints = [[int(x * den) for x in v] for v in gens]
        return cls._from_scaled(linalg.hnf_columns(ints), den)

    @classmethod
    def integer(cls, d: int) -> "RationalLattice":
        return cls(tuple(tuple(int(i == j) for j in range(d)) for i in range(d)), 1)

    @classmethod
    def _from_scaled(cls, h: IntMatrix, den: int) -> "RationalLattice":
        g = gcd(den, linalg.content(x for row in h for x in row))
        if g > 1:
            h = tuple(tuple(x // g for x in row) for row in h)
            den //= g
        return cls(h, den)

    @property
    def dim(self) -> int:
        return len(self.hnf)

    @property
    def basis(self) -> tuple[RatVector, ...]:
        """Basis vectors (the columns of the HNF, scaled)."""
        d = self.dim
        return tuple(tuple(Fraction(self.hnf[i][j], self.denom) for i in range(d)) for j in range(d))

    def basis_matrix(self) -> RatMatrix:
        return tuple(tuple(Fraction(x, self.denom) for x in row) for row in self.hnf)

    def covolume(self) -> Fraction:
        vol = Fraction(1)
        for i in range(self.dim):
            vol *= Fraction(self.hnf[i][i], self.denom)
        return vol

    def coordinates(self, v: Sequence) -> list[Fraction]:
        """Coordinates of v with respect to `basis`."""
        return linalg.solve_lower(self.hnf, [Fraction(x) * self.denom for x in v])

    def __contains__(self, v) -> bool:
        scaled = [Fraction(x) * self.denom for x in v]
        if any(x.denominator != 1 for x in scaled):
            return False
        return linalg.solve_lower_integral(self.hnf, [int(x) for x in scaled]) is not None

    def contains_lattice(self, other: "RationalLattice") -> bool:
        d = self.dim
        for j in range(d):
            col = []
            for i in range(d):
                num = other.hnf[i][j] * self.denom
                if num % other.denom:
                    return False
                col.append(num // other.denom)
            if linalg.solve_lower_integral(self.hnf, col) is None:
                return False
        return True

    def reduce(self, v: Sequence) -> RatVector:
        """Canonical representative of the coset v + self.

        The result lies in the half-open box spanned by the HNF diagonal.
        """
        w = [Fraction(x) * self.denom for x in v]
        h = self.hnf
        for i in range(self.dim):
            t = floor(w[i] / h[i][i])
            if t:
                for k in range(i, self.dim):
                    w[k] -= t * h[k][i]
        return tuple(x / self.denom for x in w)

    def index_in(self, other: "RationalLattice") -> int:
        """Group index [other : self]; self must be a sublattice of other."""
        if not other.contains_lattice(self):
            raise DomainError("not a sublattice")
        ratio = self.covolume() / other.covolume()
        assert ratio.denominator == 1
        return int(ratio)

    def dual(self) -> "RationalLattice":
        """Lattice spanned by the rows of the inverse basis matrix."""
        h, d = self.hnf, self.dim
        det = 1
        for i in range(d):
            det *= h[i][i]
        # x = det * h^{-1} is an integer lower-triangular matrix
        x = [[0] * d for _ in range(d)]
        for j in range(d):
            x[j][j] = det // h[j][j]
            for i in range(j + 1, d):
                acc = sum(h[i][k] * x[k][j] for k in range(j, i))
                x[i][j] = -acc // h[i][i]
        rows = [[self.denom * v for v in row] for row in x]
        return RationalLattice._from_scaled(linalg.hnf_columns(rows), det)

    def transform(self, m: Sequence[Sequence]) -> "RationalLattice":
        """Image of the lattice under the rational linear map `m`."""
        dm = linalg.common_denominator(x for row in m for x in row)
        mi = [[int(Fraction(x) * dm) for x in row] for row in m]
        d = self.dim
        cols = [[sum(mi[i][k] * self.hnf[k][j] for k in range(d)) for i in range(d)] for j in range(d)]
        return RationalLattice._from_scaled(linalg.hnf_columns(cols), dm * self.denom)

    def scale(self, factor) -> "RationalLattice":
        f = Fraction(factor)
        return RationalLattice.span(tuple(f * x for x in b) for b in self.basis)

    def to_json(self) -> dict:
        return {
            "basis": [[str(x) for x in b] for b in self.basis],
            "hnf": True,
        }


def check_compatible(a: RationalLattice, b: RationalLattice) -> None:
    # Rational full-rank lattices of equal dimension are always commensurate.
    if a.dim != b.dim:
        raise DomainError(f"dimension mismatch: {a.dim} vs {b.dim}")


def lattice_sum(a: RationalLattice, b: RationalLattice) -> RationalLattice:
    check_compatible(a, b)
    den = a.denom * b.denom // gcd(a.denom, b.denom)
    d = a.dim
    cols = [[a.hnf[i][j] * (den // a.denom) for i in range(d)] for j in range(d)]
    cols += [[b.hnf[i][j] * (den // b.denom) for i in range(d)] for j in range(d)]
    return RationalLattice._from_scaled(linalg.hnf_columns(cols), den)


def lattice_intersect(a: RationalLattice, b: RationalLattice) -> RationalLattice:
    """Intersection computed as the dual of the sum of the duals."""
    check_compatible(a, b)
    return lattice_sum(a.dual(), b.dual()).dual()
