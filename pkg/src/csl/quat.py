"""Lipschitz and Hurwitz quaternions and the rotation x -> q x q^-1."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt

from .errors import DomainError


@dataclass(frozen=True, slots=True)
class Quaternion:
    """A Hurwitz quaternion stored as doubled coordinates (all even or all odd)."""

    doubled: tuple[int, int, int, int]

    def __post_init__(self):
        parities = {c % 2 for c in self.doubled}
        if len(self.doubled) != 4 or len(parities) != 1:
            raise DomainError(f"not a Hurwitz quaternion: {self.doubled}")

    @classmethod
    def of(cls, q0, q1=0, q2=0, q3=0) -> "Quaternion":
        d = []
        for c in (q0, q1, q2, q3):
            f = Fraction(c) * 2
            if f.denominator != 1:
                raise DomainError(f"component {c} is not a half-integer")
            d.append(int(f))
        return cls(tuple(d))

    @property
    def is_lipschitz(self) -> bool:
        return self.doubled[0] % 2 == 0

    @property
    def components(self) -> tuple[Fraction, ...]:
        return tuple(Fraction(c, 2) for c in self.doubled)

    def integer_components(self) -> tuple[int, int, int, int]:
        if not self.is_lipschitz:
            raise DomainError("half-integer quaternion")
        return tuple(c // 2 for c in self.doubled)

    def is_primitive(self) -> bool:
        return self.is_lipschitz and gcd(*self.integer_components()) == 1

    def __mul__(self, other: "Quaternion") -> "Quaternion":
        a0, a1, a2, a3 = self.doubled
        b0, b1, b2, b3 = other.doubled
        prod = (
            a0 * b0 - a1 * b1 - a2 * b2 - a3 * b3,
            a0 * b1 + a1 * b0 + a2 * b3 - a3 * b2,
            a0 * b2 - a1 * b3 + a2 * b0 + a3 * b1,
            a0 * b3 + a1 * b2 - a2 * b1 + a3 * b0,
        )
        return Quaternion(tuple(c // 2 for c in prod))

    def __neg__(self) -> "Quaternion":
        return Quaternion(tuple(-c for c in self.doubled))

    def conj(self) -> "Quaternion":
        c = self.doubled
        return Quaternion((c[0], -c[1], -c[2], -c[3]))

    def norm(self) -> int:
        return sum(c * c for c in self.doubled) // 4

    def inner(self, other: "Quaternion") -> Fraction:
        return Fraction(sum(a * b for a, b in zip(self.doubled, other.doubled)), 4)

    def canonical_sign(self) -> "Quaternion":
        first = next((c for c in self.doubled if c), 0)
        return -self if first < 0 else self

    def __str__(self):
        return ",".join(str(c) for c in self.components)

    def to_json(self) -> list:
        return [int(c) if c.denominator == 1 else str(c) for c in self.components]


def parse_quaternion(text: str) -> Quaternion:
    parts = [p.strip() for p in text.split(",")]
    if len(parts) != 4:
        raise DomainError(f"quaternion literal needs 4 components: {text!r}")
    try:
        return Quaternion.of(*(Fraction(p) for p in parts))
    except (ValueError, ZeroDivisionError):
        bad = next(i for i, p in enumerate(parts) if not _is_rational(p))
        raise DomainError(f"malformed quaternion component {bad} in {text!r}") from None


def _is_rational(s: str) -> bool:
    try:
        Fraction(s)
        return True
    except (ValueError, ZeroDivisionError):
        return False


def cayley_matrix(q: Quaternion) -> tuple[tuple[Fraction, ...], ...]:
    """Matrix of x -> q x q^-1 acting on the imaginary quaternions."""
    # doubled coordinates: every entry is an integer over sum of squares
    q0, q1, q2, q3 = q.doubled
    n = q0 * q0 + q1 * q1 + q2 * q2 + q3 * q3
    if n == 0:
        raise DomainError("zero quaternion")
    m = (
        (q0 * q0 + q1 * q1 - q2 * q2 - q3 * q3, 2 * (q1 * q2 - q0 * q3), 2 * (q0 * q2 + q1 * q3)),
        (2 * (q0 * q3 + q1 * q2), q0 * q0 - q1 * q1 + q2 * q2 - q3 * q3, 2 * (q2 * q3 - q0 * q1)),
        (2 * (q1 * q3 - q0 * q2), 2 * (q0 * q1 + q2 * q3), q0 * q0 - q1 * q1 - q2 * q2 + q3 * q3),
    )
    return tuple(tuple(Fraction(x, n) for x in row) for row in m)


def odd_part(n: int) -> int:
    if n <= 0:
        raise DomainError("odd part of a non-positive integer")
    while n % 2 == 0:
        n //= 2
    return n


def cubic_index(q: Quaternion) -> int:
    """Coincidence index of R_q for the cubic lattices: the odd part of |q|^2."""
    return odd_part(q.norm())


def enumerate_primitive(max_norm: int, norms=None) -> list[Quaternion]:
    """Primitive Lipschitz quaternions up to sign with |q|^2 <= max_norm.

    The sign is fixed by making the first nonzero component positive.  Sorted
    by norm, then by components in descending order.  If `norms` is given,
    only those norms are produced.
    """
    if max_norm < 1:
        raise DomainError("max_norm must be positive")
    wanted = None if norms is None else set(norms)
    b = isqrt(max_norm)
    out = []
    for q0 in range(0, b + 1):
        r0 = max_norm - q0 * q0
        b1 = isqrt(r0)
        for q1 in range(-b1 if q0 else 0, b1 + 1):
            r1 = r0 - q1 * q1
            b2 = isqrt(r1)
            for q2 in range(-b2 if (q0 or q1) else 0, b2 + 1):
                r2 = r1 - q2 * q2
                b3 = isqrt(r2)
                lo = -b3 if (q0 or q1 or q2) else 1
                for q3 in range(lo, b3 + 1):
                    n = max_norm - r2 + q3 * q3
                    if wanted is not None and n not in wanted:
                        continue
                    if gcd(gcd(q0, q1), gcd(q2, q3)) == 1:
                        out.append(Quaternion((2 * q0, 2 * q1, 2 * q2, 2 * q3)))
    out.sort(key=lambda q: (q.norm(), tuple(-c for c in q.doubled)))
    return out


def all_signed(max_norm: int):
    """Every Lipschitz quaternion with |q|^2 <= max_norm, both signs."""
    b = isqrt(max_norm)
    for c in itertools.product(range(-b, b + 1), repeat=4):
        if sum(x * x for x in c) <= max_norm:
            yield Quaternion(tuple(2 * x for x in c))
