"""Coincidence site lattices of the three cubic lattices."""

from __future__ import annotations

from collections import Counter
from enum import Enum
from fractions import Fraction

from .engine import csl as generic_csl
from .errors import DomainError
from .lattice import RationalLattice
from .quat import Quaternion, cayley_matrix, cubic_index, enumerate_primitive

H = Fraction(1, 2)


class CubicLatticeKind(Enum):
    PRIMITIVE = "P"
    BODY_CENTERED = "B"
    FACE_CENTERED = "F"

    def lattice(self) -> RationalLattice:
        return _LATTICES[self]

    def dual_kind(self) -> "CubicLatticeKind":
        return {
            CubicLatticeKind.PRIMITIVE: CubicLatticeKind.PRIMITIVE,
            CubicLatticeKind.BODY_CENTERED: CubicLatticeKind.FACE_CENTERED,
            CubicLatticeKind.FACE_CENTERED: CubicLatticeKind.BODY_CENTERED,
        }[self]

    @classmethod
    def parse(cls, text: str) -> "CubicLatticeKind":
        key = text.strip().upper()[:1]
        for k in cls:
            if k.value == key:
                return k
        raise DomainError(f"unknown cubic lattice {text!r}")


_LATTICES = {
    CubicLatticeKind.PRIMITIVE: RationalLattice.integer(3),
    # imaginary Hurwitz quaternions
    CubicLatticeKind.BODY_CENTERED: RationalLattice.span([(1, 0, 0), (0, 1, 0), (H, H, H)]),
    # integer vectors with even coordinate sum
    CubicLatticeKind.FACE_CENTERED: RationalLattice.span([(1, 1, 0), (0, 1, 1), (1, 0, 1)]),
}


def spanset_vectors(q: Quaternion) -> tuple[tuple[int, int, int], ...]:
    q0, q1, q2, q3 = q.integer_components()
    return (
        (q1, q2, q3),
        (q0, q3, -q2),
        (-q3, q0, q1),
        (q2, -q1, q0),
    )


def csl_bcc_basis(q: Quaternion) -> RationalLattice:
    """CSL of the body-centred lattice for R_q, spanned by combinations of the r_k."""
    if not q.is_primitive():
        raise DomainError(f"{q} is not primitive")
    r = [tuple(Fraction(x) for x in v) for v in spanset_vectors(q)]
    half = lambda v: tuple(H * x for x in v)
    add = lambda *vs: tuple(sum(c) for c in zip(*vs))
    n = q.norm()
    if n % 2 == 1:
        gens = r + [half(add(*r))]
    elif n % 4 == 2:
        gens = [r[0]] + [half(add(r[0], r[k])) for k in (1, 2, 3)]
    else:
        gens = [half(v) for v in r]
    return RationalLattice.span(gens)


def rotation_matrix(q: Quaternion, improper: bool = False):
    m = cayley_matrix(q)
    if improper:
        m = tuple(tuple(-x for x in row) for row in m)
    return m


def csl_cubic(kind: CubicLatticeKind, q: Quaternion, improper: bool = False) -> RationalLattice:
    return generic_csl(kind.lattice(), rotation_matrix(q, improper))


def dsc_cubic(kind: CubicLatticeKind, q: Quaternion, improper: bool = False) -> RationalLattice:
    """Dual of the CSL of the dual lattice."""
    return csl_cubic(kind.dual_kind(), q, improper).dual()


def csl_counts(max_index: int, kind: CubicLatticeKind = CubicLatticeKind.PRIMITIVE) -> dict[int, int]:
    """Number of distinct CSLs of each index m <= max_index, by enumeration over rotations."""
    norms = [m * 2**k for m in range(1, max_index + 1, 2) for k in range(3)]
    seen: set[RationalLattice] = set()
    counts: Counter = Counter()
    for q in enumerate_primitive(4 * max_index, norms=norms):
        m = cubic_index(q)
        if m > max_index:
            continue
        lat = csl_cubic(kind, q)
        if lat not in seen:
            seen.add(lat)
            counts[m] += 1
    return {m: counts.get(m, 0) for m in range(1, max_index + 1)}
