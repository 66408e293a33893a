"""Coincidence isometries of shifted square lattices x + Z[i].

Rational shifts are handled through divisibility in Z[i] and the ring
isomorphism Z[i]/zZ[i] -> Z/N(z); irrational shifts are handled
symbolically, as a rational part plus rational multiples of numbers that are
linearly independent over Q together with 1.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd as igcd
from typing import Callable, Union

from .errors import DomainError
from .gaussian import (
    I,
    ONE,
    GaussianInt,
    GaussianRational,
    euclid_divide,
    is_odd_visible,
)
from .square import (
    PlanarCoincidence,
    compose,
    enumerate_coincidences,
    eps_z_minus_zbar,
)

# --- shift classes ---------------------------------------------------------


@dataclass(frozen=True)
class RationalShift:
    x: GaussianRational


@dataclass(frozen=True)
class IrrationalRe:
    """x = a + b*i with a irrational and b rational."""

    b: Fraction


@dataclass(frozen=True)
class IrrationalIm:
    """x = a + b*i with a rational and b irrational."""

    a: Fraction


@dataclass(frozen=True)
class Independent:
    """x = a + b*i with 1, a, b linearly independent over Q."""


@dataclass(frozen=True)
class Dependent:
    """x = a + b*i with b irrational and a = p1/q1 + (p2/q2)*b."""

    p1: int
    q1: int
    p2: int
    q2: int

    def __post_init__(self):
        if self.q1 < 1 or self.q2 < 1:
            raise DomainError("denominators must be positive")
        if igcd(self.p1, self.q1) != 1 or igcd(self.p2, self.q2) != 1:
            raise DomainError("fractions must be reduced")
        if self.p2 == 0:
            raise DomainError("p2 = 0 makes a rational; use IrrationalIm")


ShiftClass = Union[RationalShift, IrrationalRe, IrrationalIm, Independent, Dependent]


@dataclass(frozen=True)
class SymbolicShift:
    """x = const + sum_k coeffs[k] * theta_k with 1, theta_1, ... independent over Q.

    Each coefficient is a Gaussian rational, so x ranges over a Q-affine
    family; a Gaussian-integer combination of x and conj(x) is integral iff
    every theta coefficient vanishes and the constant part is integral.
    """

    const: GaussianRational
    coeffs: tuple[GaussianRational, ...] = ()


def symbolic(x: ShiftClass) -> SymbolicShift:
    gr = GaussianRational.from_parts
    if isinstance(x, RationalShift):
        return SymbolicShift(x.x)
    if isinstance(x, IrrationalRe):
        return SymbolicShift(gr(0, x.b), (gr(1, 0),))
    if isinstance(x, IrrationalIm):
        return SymbolicShift(gr(x.a, 0), (gr(0, 1),))
    if isinstance(x, Independent):
        return SymbolicShift(gr(0, 0), (gr(1, 0), gr(0, 1)))
    if isinstance(x, Dependent):
        return SymbolicShift(gr(Fraction(x.p1, x.q1), 0), (gr(Fraction(x.p2, x.q2), 1),))
    raise TypeError(f"unknown shift class {x!r}")


def _defect(c: PlanarCoincidence, y: GaussianRational) -> GaussianRational:
    """conj(z) * (c(y) - y): eps*z*conj(y) - conj(z)*y or (eps*z - conj(z))*y."""
    z, e = c.numerator, c.unit
    if c.reflection:
        return GaussianRational(e * z) * y.conj() - GaussianRational(z.conj()) * y
    return GaussianRational(eps_z_minus_zbar(c)) * y


def _rational_member(c: PlanarCoincidence, p: GaussianInt, q: GaussianInt) -> bool:
    # the defect over a common denominator: q | (eps*z - conj z) p, or
    # N(q) | eps*z*conj(p)*q - conj(z)*p*conj(q) for a reflection
    if not c.reflection:
        return q.divides(eps_z_minus_zbar(c) * p)
    z = c.numerator
    top = c.unit * z * p.conj() * q - z.conj() * p * q.conj()
    n = q.norm()
    return top.re % n == 0 and top.im % n == 0


def is_member(c: PlanarCoincidence, x: ShiftClass | GaussianRational) -> bool:
    """Decide c in OC(x + Z[i])."""
    if isinstance(x, RationalShift):
        x = x.x
    if isinstance(x, GaussianRational):
        return _rational_member(c, x.num, x.den)
    s = symbolic(x)
    if any(_defect(c, k).num for k in s.coeffs):
        return False
    return _defect(c, s.const).is_integral()


# --- irrational classification ---------------------------------------------


@dataclass(frozen=True)
class ShiftedOcDescription:
    """kind is "trivial", "single-reflection" or "characterized"."""

    kind: str
    generator: PlanarCoincidence | None = None
    predicate: Callable[[PlanarCoincidence], bool] | None = field(default=None, compare=False)
    is_group: bool | None = None

    def contains(self, c: PlanarCoincidence) -> bool:
        if self.kind == "trivial":
            return c == IDENTITY
        if self.kind == "single-reflection":
            return c in (IDENTITY, self.generator)
        return self.predicate(c)


IDENTITY = PlanarCoincidence(ONE)
_TRIVIAL = ShiftedOcDescription("trivial", is_group=True)


def _reflection_group(z: GaussianInt, eps: GaussianInt) -> ShiftedOcDescription:
    gen = PlanarCoincidence.from_any(z, eps, reflection=True)
    return ShiftedOcDescription("single-reflection", gen, is_group=True)


def classify_irrational(x: ShiftClass) -> ShiftedOcDescription:
    """OC(x + Z[i]) for an irrational shift: trivial or generated by one reflection."""
    if isinstance(x, RationalShift):
        raise DomainError("rational shift; use describe_rational")
    if isinstance(x, IrrationalRe):
        return _reflection_group(ONE, ONE) if (2 * x.b).denominator == 1 else _TRIVIAL
    if isinstance(x, IrrationalIm):
        return _reflection_group(ONE, -ONE) if (2 * x.a).denominator == 1 else _TRIVIAL
    if isinstance(x, Independent):
        return _TRIVIAL
    p1, q1, p2, q2 = x.p1, x.q1, x.p2, x.q2
    if (p2 * q2) % 2 == 0:
        if (2 * q2) % q1 == 0:
            return _reflection_group(GaussianInt(p2, q2), ONE)
        return _TRIVIAL
    if q2 % q1 == 0:
        return _reflection_group(GaussianInt((p2 + q2) // 2, -(p2 - q2) // 2), I)
    return _TRIVIAL


# --- rational shifts ---------------------------------------------------------


def reflection_symmetry_generator(x: GaussianRational) -> GaussianInt | None:
    """Unit eps with T_{1,eps} a symmetry of x + Z[i], checked in the order 1, -1, i, -i."""
    a, b = x.re, x.im
    if (2 * b).denominator == 1:
        return ONE
    if (2 * a).denominator == 1:
        return -ONE
    if (a - b).denominator == 1:
        return I
    if (a + b).denominator == 1:
        return -I
    return None


def soc_membership_rational(c: PlanarCoincidence, q: GaussianInt, method: str = "divisibility") -> bool:
    """Decide R_{z,eps} in SOC(1/q + Z[i]).

    method="divisibility": q | eps*z - conj(z).
    method="remainder": for odd rational q > 1, write z = kq + r and test conj(r) == eps*r.
    """
    if c.reflection:
        raise DomainError("rotations only")
    if not q:
        raise DomainError("q must be nonzero")
    if method == "divisibility":
        return q.divides(eps_z_minus_zbar(c))
    if method == "remainder":
        if q.im != 0 or q.re <= 1 or q.re % 2 == 0:
            raise DomainError("remainder method needs an odd rational integer q > 1")
        _, r = euclid_divide(c.numerator, q)
        return r.conj() == c.unit * r
    raise DomainError(f"unknown method {method!r}")


def describe_rational(x: GaussianRational) -> ShiftedOcDescription:
    eps = reflection_symmetry_generator(x)
    # with a reflection symmetry the set is SOC(x+G) extended by it, hence a group
    return ShiftedOcDescription(
        "characterized",
        predicate=lambda c: is_member(c, x),
        is_group=True if eps is not None else None,
    )


@dataclass(frozen=True)
class ShiftedCoincidence:
    coincidence: PlanarCoincidence
    representative: GaussianRational  # x + l, a point of (x+G) ∩ c(x+G)
    residue: int  # image of l in Z[i]/zZ[i] = Z/N(z)

    @property
    def key(self) -> tuple[GaussianInt, int]:
        return (self.coincidence.numerator, self.residue)


def _residue_map(z: GaussianInt) -> tuple[int, int]:
    """(n, t) such that u + v*i -> u + v*t mod n is a ring map Z[i] -> Z/n with kernel zZ[i]."""
    n = z.norm()
    if n == 1:
        return 1, 0
    t = (-z.re * pow(z.im, -1, n)) % n
    return n, t


def coset_residue(c: PlanarCoincidence, x: GaussianRational) -> int | None:
    """Residue class of l with (x+G) ∩ c(x+G) = (x+l) + zZ[i], or None if empty.

    From c(x) - x = l + c(g), multiplying by conj(z) gives
    conj(z)*l == conj(z)*(c(x) - x) (mod z), and conj(z) is invertible mod z.
    """
    s = _defect(c, x)
    if not s.is_integral():
        return None
    n, t = _residue_map(c.numerator)
    if n == 1:
        return 0
    sv = s.num * s.den.conj()  # den is 1 here
    zb = c.numerator.conj()
    return (sv.re + sv.im * t) * pow(zb.re + zb.im * t, -1, n) % n


def residue_representative(z: GaussianInt, k: int) -> GaussianInt:
    """The representative of residue k modulo zZ[i] reduced against the HNF of zZ[i]: an imaginary multiple in [0, N(z))."""
    n, t = _residue_map(z)
    if n == 1:
        return GaussianInt(0)
    return GaussianInt(0, k * pow(t, -1, n) % n)


def shifted_coincidence(c: PlanarCoincidence, x: GaussianRational) -> ShiftedCoincidence | None:
    k = coset_residue(c, x)
    if k is None:
        return None
    ell = residue_representative(c.numerator, k)
    return ShiftedCoincidence(c, x + ell, k)


def enumerate_shifted(x: GaussianRational, max_index: int, rotations_only: bool = False) -> list[ShiftedCoincidence]:
    """All members of OC(x+G) (or SOC) with index <= max_index, with their coset representatives."""
    out = []
    for c in enumerate_coincidences(max_index, reflections=not rotations_only):
        sc = shifted_coincidence(c, x)
        if sc is not None:
            out.append(sc)
    return out


def csl_counts(x: GaussianRational, max_index: int) -> dict[int, int]:
    """Number of distinct CSL cosets (x+G) ∩ R(x+G) of each index m <= max_index."""
    keys = {sc.key for sc in enumerate_shifted(x, max_index)}
    counts = Counter(z.norm() for z, _ in keys)
    return {m: counts.get(m, 0) for m in range(1, max_index + 1)}


def rotation_counts(x: GaussianRational, max_index: int) -> dict[int, int]:
    """Number of coincidence rotations of x+G of each index m <= max_index."""
    counts = Counter(sc.coincidence.sigma for sc in enumerate_shifted(x, max_index, rotations_only=True))
    return {m: counts.get(m, 0) for m in range(1, max_index + 1)}


@dataclass(frozen=True)
class ClosureResult:
    closed: bool
    bound: int
    counterexample: tuple[PlanarCoincidence, PlanarCoincidence] | None = None
    product: PlanarCoincidence | None = None

    def __str__(self):
        if self.closed:
            return f"closed up to index {self.bound}"
        a, b = self.counterexample
        return f"not closed: {b} after {a} gives {self.product}"


def group_closure_check(x: ShiftClass | GaussianRational, max_index: int, rotations_only: bool = False) -> ClosureResult:
    """Compose every pair of members with index <= max_index; report the first failure."""
    members = [
        c
        for c in enumerate_coincidences(max_index, reflections=not rotations_only)
        if is_member(c, x)
    ]
    for first in members:
        for second in members:
            prod = compose(second, first)
            if not is_member(prod, x):
                return ClosureResult(False, max_index, (first, second), prod)
    return ClosureResult(True, max_index)


def grid_counts(q: int, max_index: int) -> dict[int, int]:
    """Index counts for 1/q + G (q odd > 1) read off the visible points on the grid.

    Counts w in V' with N(w) = m and w congruent to r or (1+i)r modulo q,
    for 0 < r < q/2 and gcd(r, q) = 1.
    """
    if q <= 1 or q % 2 == 0:
        raise DomainError("q must be an odd integer > 1")
    residues = set()
    for r in range(1, (q + 1) // 2):
        if igcd(r, q) == 1:
            residues.add((r % q, 0))
            residues.add((r % q, r % q))
    counts = Counter()
    bound = int(max_index**0.5) + 1
    for a in range(-bound, bound + 1):
        for b in range(-bound, bound + 1):
            m = a * a + b * b
            if m == 0 or m > max_index:
                continue
            if (a % q, b % q) in residues and is_odd_visible(GaussianInt(a, b)):
                counts[m] += 1
    return {m: counts.get(m, 0) for m in range(1, max_index + 1)}


def parse_shift_class(text: str) -> ShiftClass:
    """Parse "independent", "re-irrational:b=1/2", "im-irrational:a=1/3" or "dependent:p1/q1,p2/q2"."""
    s = text.strip()
    if s == "independent":
        return Independent()
    head, _, rest = s.partition(":")
    try:
        if head == "re-irrational":
            return IrrationalRe(Fraction(rest.split("=", 1)[-1]))
        if head == "im-irrational":
            return IrrationalIm(Fraction(rest.split("=", 1)[-1]))
        if head == "dependent":
            f1, f2 = (Fraction(v) for v in rest.split(","))
            return Dependent(f1.numerator, f1.denominator, f2.numerator, f2.denominator)
    except (ValueError, ZeroDivisionError):
        pass
    raise DomainError(f"malformed shift class {text!r}")

