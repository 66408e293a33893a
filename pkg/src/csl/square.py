"""Linear coincidence isometries of the square lattice Z[i].

A rotation is multiplication by ``w = eps * z / conj(z)`` and a reflection is
``x -> w * conj(x)``.  The numerator ``z`` is coprime to its conjugate and is
stored in the associate with odd, positive real part.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd as igcd

from sympy import primerange

from .errors import DomainError
from .gaussian import (
    ONE,
    UNITS,
    GaussianInt,
    GaussianRational,
    format_gaussian,
    split_prime_factor,
    unit_label,
)
from .lattice import RationalLattice


def canonical_numerator(z: GaussianInt) -> tuple[GaussianInt, GaussianInt]:
    """Return (c, u) with c = u*z the associate of z with odd positive real part."""
    for u in UNITS:
        c = u * z
        if c.re > 0 and c.re % 2 == 1:
            return c, u
    raise DomainError(f"{z} has no associate with odd real part")


def is_numerator(z: GaussianInt) -> bool:
    return z.re > 0 and z.re % 2 == 1 and z.im % 2 == 0 and igcd(z.re, z.im) == 1


@dataclass(frozen=True)
class PlanarCoincidence:
    numerator: GaussianInt
    unit: GaussianInt = ONE
    reflection: bool = False

    def __post_init__(self):
        if not is_numerator(self.numerator):
            raise DomainError(f"{self.numerator} is not a canonical numerator")
        if not self.unit.is_unit():
            raise DomainError(f"{self.unit} is not a unit")

    @classmethod
    def from_any(cls, z: GaussianInt, unit: GaussianInt = ONE, reflection: bool = False):
        """Build from an arbitrary associate, adjusting the unit so the isometry is unchanged."""
        c, u = canonical_numerator(z)
        # u*z / conj(u*z) = u^2 * z/conj(z), so the unit absorbs conj(u)^2
        return cls(c, unit * u.conj() * u.conj(), reflection)

    @classmethod
    def from_multiplier(cls, w: GaussianRational, reflection: bool = False) -> "PlanarCoincidence":
        """Recover (z, eps) from a unimodular Gaussian rational w = eps*z/conj(z)."""
        z = w.den.conj()
        zc, _ = canonical_numerator(z)
        eps = w * GaussianRational(zc.conj(), zc)
        if not eps.is_integral() or not eps.num.is_unit():
            raise DomainError(f"{w} is not a coincidence multiplier")
        return cls(zc, eps.num, reflection)

    @property
    def sigma(self) -> int:
        return self.numerator.norm()

    def multiplier(self) -> GaussianRational:
        z = self.numerator
        return GaussianRational(self.unit * z, z.conj())

    def __str__(self):
        kind = "T" if self.reflection else "R"
        return f"{kind}[{format_gaussian(self.numerator)},{unit_label(self.unit)}]"

    def to_json(self) -> dict:
        return {
            "z": format_gaussian(self.numerator),
            "unit": unit_label(self.unit),
            "reflection": self.reflection,
            "sigma": self.sigma,
            "matrix": [[_rat(x) for x in row] for row in isometry_matrix(self)],
        }


def _rat(x: Fraction) -> str:
    return str(x)


def enumerate_numerators(max_norm: int) -> list[GaussianInt]:
    """All canonical numerators with norm <= max_norm, sorted by (norm, re, -im).

    Numerators are built as products of split-prime powers, choosing one
    prime of each conjugate pair per rational prime.
    """
    if max_norm < 1:
        raise DomainError("max_norm must be positive")
    found: list[tuple[int, GaussianInt]] = [(1, ONE)]
    for p in primerange(5, max_norm + 1):
        if p % 4 != 1:
            continue
        w = split_prime_factor(p)
        pair = (w, w.conj())
        extra = []
        for n, z in found:
            pr, wr = p, pair
            while n * pr <= max_norm:
                extra.append((n * pr, z * wr[0]))
                extra.append((n * pr, z * wr[1]))
                pr *= p
                wr = (wr[0] * pair[0], wr[1] * pair[1])
        found.extend(extra)
    out = [canonical_numerator(z)[0] for _, z in found]
    out.sort(key=lambda z: (z.norm(), z.re, -z.im))
    return out


def enumerate_coincidences(max_index: int, reflections: bool = True) -> list[PlanarCoincidence]:
    """Every element of OC(Z^2) (or SOC with reflections=False) with index <= max_index."""
    out = []
    flags = (False, True) if reflections else (False,)
    for z in enumerate_numerators(max_index):
        for refl in flags:
            for u in UNITS:
                out.append(PlanarCoincidence(z, u, refl))
    return out


def isometry_matrix(c: PlanarCoincidence) -> tuple[tuple[Fraction, Fraction], tuple[Fraction, Fraction]]:
    w = c.multiplier()
    u, v = w.re, w.im
    if c.reflection:
        return ((u, v), (v, -u))
    return ((u, -v), (v, u))


def coincidence_index(c: PlanarCoincidence) -> int:
    return c.numerator.norm()


def csl_basis(c: PlanarCoincidence) -> RationalLattice:
    """The principal ideal z*Z[i]."""
    z = c.numerator
    iz = GaussianInt(-z.im, z.re)
    return RationalLattice.span([(z.re, z.im), (iz.re, iz.im)])


def dsc_basis(c: PlanarCoincidence) -> RationalLattice:
    """The lattice (1/conj(z)) Z[i] = (z/N(z)) Z[i]."""
    z = c.numerator
    n = z.norm()
    return RationalLattice.span([(Fraction(z.re, n), Fraction(z.im, n)), (Fraction(-z.im, n), Fraction(z.re, n))])


def compose(second: PlanarCoincidence, first: PlanarCoincidence) -> PlanarCoincidence:
    """The isometry `second` after `first`."""
    w1, w2 = first.multiplier(), second.multiplier()
    # w2 * conj(w1 * y) when the second map conjugates its argument
    if second.reflection:
        w = w2 * w1.conj()
    else:
        w = w2 * w1
    return PlanarCoincidence.from_multiplier(w, first.reflection != second.reflection)


def inverse(c: PlanarCoincidence) -> PlanarCoincidence:
    if c.reflection:
        return c
    return PlanarCoincidence.from_multiplier(c.multiplier().conj())


def eps_z_minus_zbar(c: PlanarCoincidence) -> GaussianInt:
    """eps*z - conj(z) from its closed form in Re z and Im z."""
    a, b = c.numerator.re, c.numerator.im
    e = c.unit
    if e == ONE:
        return GaussianInt(0, 2 * b)
    if e == -ONE:
        return GaussianInt(-2 * a, 0)
    if e == UNITS[1]:  # i
        s = a + b
        return GaussianInt(-s, s)
    s = a - b  # -i
    return GaussianInt(-s, -s)


def apply(c: PlanarCoincidence, x: GaussianRational) -> GaussianRational:
    w = c.multiplier()
    return w * (x.conj() if c.reflection else x)


def csl_counts(max_index: int) -> dict[int, int]:
    """Number of distinct CSLs of Z^2 of each index, deduplicating the lattices themselves."""
    seen: dict[int, set] = {}
    for c in enumerate_coincidences(max_index):
        seen.setdefault(c.sigma, set()).add(csl_basis(c))
    return {m: len(seen.get(m, ())) for m in range(1, max_index + 1)}
