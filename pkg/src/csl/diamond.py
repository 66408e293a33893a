"""Coincidences of the diamond packing: the f.c.c. lattice together with its shift by (1/2,1/2,1/2)."""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from sympy import factorint

from . import linalg
from .cubic import CubicLatticeKind, rotation_matrix
from .engine import (
    CosetLattice,
    CsmlDescription,
    Multilattice,
    ShiftedLattice,
    _solve_sum,
    csl,
    multilattice_coincidence,
    shifted_coincidence,
)
from .errors import DomainError
from .quat import Quaternion, enumerate_primitive, odd_part

FCC = CubicLatticeKind.FACE_CENTERED.lattice()
SHIFT = (Fraction(1, 2),) * 3
DIAMOND = Multilattice(FCC, ((Fraction(0),) * 3, SHIFT))


class NormClass(Enum):
    ODD = "odd"
    TWO_MOD_4 = "2 mod 4"
    ZERO_MOD_4 = "0 mod 4"

    @classmethod
    def of(cls, n: int) -> "NormClass":
        if n % 2:
            return cls.ODD
        return cls.TWO_MOD_4 if n % 4 == 2 else cls.ZERO_MOD_4


@dataclass(frozen=True)
class DiamondIsometry:
    q: Quaternion
    improper: bool = False

    def __post_init__(self):
        if not self.q.is_primitive():
            raise DomainError(f"{self.q} is not primitive")
        object.__setattr__(self, "q", self.q.canonical_sign())

    def matrix(self):
        return rotation_matrix(self.q, self.improper)


@dataclass(frozen=True)
class DiamondResult:
    index: Fraction
    cosets: CsmlDescription
    norm_class: NormClass

    def to_json(self) -> dict:
        idx = self.index
        return {
            "sigma": int(idx) if idx.denominator == 1 else str(idx),
            "cosets": len(self.cosets.cosets),
            "norm_class": self.norm_class.value,
            "csml": self.cosets.to_json(),
        }


def shifted_fcc_member(q: Quaternion, improper: bool = False) -> bool:
    """Is R_q (or -R_q) a coincidence isometry of the shifted f.c.c. lattice?"""
    two_mod_4 = q.norm() % 4 == 2
    return two_mod_4 if improper else not two_mod_4


def shifted_fcc_member_engine(q: Quaternion, improper: bool = False) -> bool:
    s = ShiftedLattice.make(FCC, SHIFT)
    return shifted_coincidence(s, rotation_matrix(q, improper)) is not None


def _table(n: int, improper: bool) -> tuple[Fraction, int]:
    """(index, number of cosets) for |q|^2 = n."""
    cls = NormClass.of(n)
    if not improper:
        return {
            NormClass.ODD: (Fraction(n), 2),
            NormClass.TWO_MOD_4: (Fraction(n), 1),
            NormClass.ZERO_MOD_4: (Fraction(n, 4), 2),
        }[cls]
    return {
        NormClass.ODD: (Fraction(2 * n), 1),
        NormClass.TWO_MOD_4: (Fraction(n, 2), 2),
        NormClass.ZERO_MOD_4: (Fraction(n, 2), 1),
    }[cls]


def closed_form_index(iso: DiamondIsometry) -> tuple[Fraction, int]:
    return _table(iso.q.norm(), iso.improper)


def diamond_coincidence(iso: DiamondIsometry) -> DiamondResult:
    """Index and coset structure of D ∩ iso(D) from the mod-4 case analysis.

    The shifted coset, when present, is x + l with l in (Rx - x + R G) ∩ G.
    """
    r = iso.matrix()
    index, n_cosets = closed_form_index(iso)
    gamma_r = csl(FCC, r)
    zero = (Fraction(0),) * 3
    cosets = [CosetLattice.make(zero, gamma_r)]
    pairs = [(0, 0)]
    if n_cosets == 2:
        rx = linalg.mat_vec(r, SHIFT)
        ell = _solve_sum(FCC, r, tuple(a - b for a, b in zip(rx, SHIFT)))
        if ell is None:
            raise AssertionError("shifted coset predicted but absent")
        cosets.append(CosetLattice.make(tuple(a + b for a, b in zip(SHIFT, ell)), gamma_r))
        pairs.append((1, 1))
    cosets.sort(key=lambda c: c.representative)
    sigma = gamma_r.index_in(FCC)
    desc = CsmlDescription(tuple(cosets), index, tuple(pairs), sigma)
    return DiamondResult(index, desc, NormClass.of(iso.q.norm()))


def diamond_coincidence_engine(iso: DiamondIsometry) -> CsmlDescription:
    return multilattice_coincidence(DIAMOND, iso.matrix())


def f_diamond(m: int) -> int:
    """Number of coincidence site multilattices of index m, from the prime-power rule."""
    if m < 1:
        raise DomainError("m must be positive")
    out = 1
    for p, r in factorint(m).items():
        if p == 2:
            out *= 1 if r == 1 else 0
        else:
            out *= (p + 1) * p ** (r - 1)
    return out


def csml_counts(max_index: int) -> dict[int, int]:
    """Number of distinct CSMLs of each index m <= max_index, by enumeration."""
    seen = set()
    counts: Counter = Counter()
    for q in enumerate_primitive(4 * max_index):
        for improper in (False, True):
            index, _ = _table(q.norm(), improper)
            if index > max_index:
                continue
            res = diamond_coincidence(DiamondIsometry(q, improper))
            key = res.cosets.cosets
            if key not in seen:
                seen.add(key)
                counts[int(index)] += 1
    return {m: counts.get(m, 0) for m in range(1, max_index + 1)}


def shifted_fcc_counts(max_index: int) -> dict[str, dict[int, int]]:
    """Counts for the shifted f.c.c. lattice x + G by index, from the generic engine.

    "csl": distinct intersections (x+G) ∩ R(x+G); "rotations": coincidence
    rotations; "isometries": rotations and rotoreflections.
    """
    s = ShiftedLattice.make(FCC, SHIFT)
    norms = [m * 2**k for m in range(1, max_index + 1, 2) for k in range(3)]
    cosets: set = set()
    csl_c: Counter = Counter()
    rot_c: Counter = Counter()
    iso_c: Counter = Counter()
    for q in enumerate_primitive(4 * max_index, norms=norms):
        m = odd_part(q.norm())
        for improper in (False, True):
            cos = shifted_coincidence(s, rotation_matrix(q, improper))
            if cos is None:
                continue
            iso_c[m] += 1
            rot_c[m] += not improper
            if cos not in cosets:
                cosets.add(cos)
                csl_c[m] += 1
    rng = range(1, max_index + 1)
    return {
        "csl": {m: csl_c.get(m, 0) for m in rng},
        "rotations": {m: rot_c.get(m, 0) for m in rng},
        "isometries": {m: iso_c.get(m, 0) for m in rng},
    }
