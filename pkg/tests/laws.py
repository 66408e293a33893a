"""Exhaustive checks of the shifted-square laws; each returns a list of violations."""

from fractions import Fraction
from functools import lru_cache
from math import gcd as igcd

from csl import engine, square
from csl.gaussian import UNITS, GaussianInt, GaussianRational, canonical_associate, gcd, lcm
from csl.lattice import RationalLattice
from csl.shifted import is_member, soc_membership_rational
from csl.square import PlanarCoincidence, inverse
from csl.square import compose as _compose

G = GaussianInt
Z2 = RationalLattice.integer(2)
BOUND = 65


compose = lru_cache(maxsize=None)(_compose)


def denominators(max_norm: int) -> list[GaussianInt]:
    """Canonical Gaussian integers q with 1 < N(q) <= max_norm."""
    out = set()
    r = int(max_norm**0.5) + 1
    for a in range(-r, r + 1):
        for b in range(-r, r + 1):
            if 1 < a * a + b * b <= max_norm:
                out.add(canonical_associate(G(a, b))[0])
    return sorted(out, key=lambda q: (q.norm(), q.re, q.im))


def shifts(max_norm: int = 13) -> list[GaussianRational]:
    """x = p/q for every q above and every p in a residue system with gcd(p, q) = 1."""
    out = []
    for q in denominators(max_norm):
        n = q.norm()
        for a in range(n):
            for b in range(2):
                p = G(a, b)
                if p and gcd(p, q).is_unit():
                    out.append(GaussianRational(p, q))
    return sorted(set(out), key=lambda x: (x.den.norm(), x.parts()))


def members(x, bound=BOUND, reflections=True):
    return [c for c in square.enumerate_coincidences(bound, reflections) if is_member(c, x)]


def inverse_closure(xs) -> list[str]:
    return [f"{x} {c}" for x in xs for c in members(x) if not is_member(inverse(c), x)]


def coprime_products(xs) -> list[str]:
    bad = []
    for x in xs:
        ms = members(x)
        for a in ms:
            for b in ms:
                if igcd(a.sigma, b.sigma) == 1 and not is_member(compose(b, a), x):
                    bad.append(f"{x} {b}*{a}")
    return bad


def soc_closure(xs) -> list[str]:
    bad = []
    for x in xs:
        ms = members(x, reflections=False)
        for a in ms:
            for b in ms:
                if not is_member(compose(b, a), x):
                    bad.append(f"{x} {b}*{a}")
    return bad


def _soc(q: GaussianInt, rots) -> frozenset:
    return frozenset(c for c in rots if soc_membership_rational(c, q))


def divisor_laws(max_norm: int = 50) -> list[str]:
    """Divisor monotonicity, intersection via lcm and the conjugate law, plus agreement with is_member."""
    rots = square.enumerate_coincidences(BOUND, reflections=False)
    qs = denominators(max_norm)
    soc = {q: _soc(q, rots) for q in qs}
    bad = []
    for q in qs:
        direct = frozenset(c for c in rots if is_member(c, GaussianRational(1, q)))
        if direct != soc[q]:
            bad.append(f"divrule {q}")
        if soc[q] != _soc(q.conj(), rots):
            bad.append(f"conj {q}")
        if soc[q] != _soc(lcm(q, q.conj()), rots):
            bad.append(f"conj-lcm {q}")
    for q1 in qs:
        for q2 in qs:
            if q1.divides(q2) and not soc[q2] <= soc[q1]:
                bad.append(f"sub {q1}|{q2}")
            if soc[q1] & soc[q2] != _soc(lcm(q1, q2), rots):
                bad.append(f"int {q1},{q2}")
    return bad


def odd_denominator_laws(max_q: int = 45) -> list[str]:
    bad = []
    zs = square.enumerate_numerators(BOUND * 4)
    for q in range(3, max_q + 1, 2):
        qq = G(q)
        for z in zs:
            units = [u for u in UNITS if soc_membership_rational(PlanarCoincidence(z, u), qq)]
            if len(units) > 1:
                bad.append(f"unique q={q} z={z}")
            if units and z.norm() % q == 0:
                bad.append(f"divides q={q} z={z}")
            if units and z.norm() > 1 and 2 * z.norm() <= q * q:
                bad.append(f"bound q={q} z={z}")
            for u in UNITS:
                c = PlanarCoincidence(z, u)
                if soc_membership_rational(c, qq) != soc_membership_rational(c, qq, "remainder"):
                    bad.append(f"remainder q={q} {c}")
    return bad


POINT_GROUP = [PlanarCoincidence(G(1), u, refl) for u in UNITS for refl in (False, True)]


def point_group_conjugation(xs) -> list[str]:
    bad = []
    cs = square.enumerate_coincidences(BOUND)
    for x in xs:
        for s in POINT_GROUP:
            sx = square.apply(s, x)
            for c in cs:
                conj = compose(s, compose(c, inverse(s)))
                if is_member(c, x) != is_member(conj, sx):
                    bad.append(f"{x} S={s} {c}")
    return bad


def scaled_shift_law(xs) -> list[str]:
    bad = []
    cs = square.enumerate_coincidences(BOUND)
    for x in xs:
        n = x.den.norm()
        for a in range(2, 8):
            if igcd(a, n) != 1:
                continue
            ax = GaussianRational(a) * x
            bad += [f"{x} a={a} {c}" for c in cs if is_member(c, x) != is_member(c, ax)]
    return bad


def similarity_law(xs, lambdas=(Fraction(2), Fraction(1, 3), Fraction(5, 2))) -> list[str]:
    bad = []
    cs = square.enumerate_coincidences(25)
    for x in xs:
        for lam in lambdas:
            scaled = engine.ShiftedLattice.make(Z2.scale(lam), (lam * x.re, lam * x.im))
            for c in cs:
                got = engine.shifted_coincidence(scaled, square.isometry_matrix(c)) is not None
                if got != is_member(c, x):
                    bad.append(f"{x} lambda={lam} {c}")
    return bad
