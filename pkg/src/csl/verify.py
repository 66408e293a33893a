"""Verification suites: closed forms against the generic engine and the oracle."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from . import cubic, diamond, engine, oracle, shifted, square
from .gaussian import GaussianRational
from .lattice import RationalLattice
from .quat import cayley_matrix, cubic_index, enumerate_primitive

Z2 = RationalLattice.integer(2)
ORIGIN2 = (Fraction(0), Fraction(0))

SQUARE_SHIFTS = ("(1+1i)/2", "1/2", "(1+1i)/3", "(2+1i)/4", "1/5", "(2+1i)/5", "(2+1i)/6", "1/7")


@dataclass
class Report:
    suite: str
    bound: int
    checks: int = 0
    failures: list[str] = field(default_factory=list)
    identities: dict[str, int] = field(default_factory=dict)

    def check(self, ok: bool, label: str) -> None:
        self.checks += 1
        kind = label.split(" ", 1)[0]
        self.identities[kind] = self.identities.get(kind, 0) + 1
        if not ok:
            self.failures.append(label)

    @property
    def ok(self) -> bool:
        return not self.failures

    def to_json(self) -> dict:
        return {"suite": self.suite, "bound": self.bound, "checks": self.checks, "identities": self.identities, "ok": self.ok, "failures": self.failures}


def _vec(x: GaussianRational) -> tuple[Fraction, Fraction]:
    return (x.re, x.im)


def square_suite(bound: int = 200) -> Report:
    rep = Report("square", bound)
    for c in square.enumerate_coincidences(bound):
        r = square.isometry_matrix(c)
        expected = square.csl_basis(c)
        got = oracle.coset_intersect((ORIGIN2, Z2), oracle.image_coset(r, ORIGIN2, Z2))
        rep.check(got is not None and got.sublattice == expected and got.representative == ORIGIN2, f"csl {c}")
        rep.check(expected.index_in(Z2) == c.sigma, f"index {c}")
        # Z^2 is self-dual, so the DSC is the dual of its own CSL
        dsc = square.dsc_basis(c)
        rep.check(dsc == engine.csl(Z2, r).dual(), f"dsc {c}")
        # affine coincidences: one translation inside the DSC, one outside
        for v in (dsc.basis[0], (Fraction(1, 2 * c.sigma), Fraction(0))):
            brute = oracle.coset_intersect((ORIGIN2, Z2), (v, Z2.transform(r)))
            iso = engine.AffineIsometry(r, v)
            ok = engine.is_affine_coincidence(Z2, iso) == (brute is not None)
            if ok and brute is not None:
                ok = engine.acsl(Z2, iso) == brute
            rep.check(ok, f"acsl {c} v={tuple(map(str, v))}")
    return rep


def shifted_suite(bound: int = 200, shifts=SQUARE_SHIFTS) -> Report:
    from .gaussian import parse_gaussian_rational

    rep = Report("shifted", bound)
    for text in shifts:
        x = parse_gaussian_rational(text)
        xv = _vec(x)
        sl = engine.ShiftedLattice.make(Z2, xv)
        for c in square.enumerate_coincidences(bound):
            r = square.isometry_matrix(c)
            special = shifted.shifted_coincidence(c, x)
            generic = engine.shifted_coincidence(sl, r)
            brute = oracle.coset_intersect((xv, Z2), oracle.image_coset(r, xv, Z2))
            label = f"x={text} {c}"
            rep.check((special is None) == (generic is None) == (brute is None), f"membership {label}")
            if special is None or generic is None or brute is None:
                continue
            mine = engine.CosetLattice.make(_vec(special.representative), square.csl_basis(c))
            rep.check(mine == generic == brute, f"coset {label}")
    return rep


def cubic_suite(bound: int = 50) -> Report:
    rep = Report("cubic", bound)
    body = cubic.CubicLatticeKind.BODY_CENTERED.lattice()
    zero = (Fraction(0),) * 3
    for q in enumerate_primitive(bound):
        r = cayley_matrix(q)
        spanned = cubic.csl_bcc_basis(q)
        got = oracle.coset_intersect((zero, body), oracle.image_coset(r, zero, body))
        rep.check(got is not None and got.sublattice == spanned, f"spanset {q}")
        for kind in cubic.CubicLatticeKind:
            lat = kind.lattice()
            for improper in (False, True):
                c = cubic.csl_cubic(kind, q, improper)
                rep.check(c.index_in(lat) == cubic_index(q), f"index {kind.value} {q} {improper}")
            dsc = cubic.dsc_cubic(kind, q)
            rep.check(dsc == engine.dsc(lat, r), f"dsc {kind.value} {q}")
    return rep


def _oracle_csml(ml: engine.Multilattice, r) -> tuple[engine.CosetLattice, ...]:
    pieces = []
    for xj in ml.shifts:
        for xk in ml.shifts:
            c = oracle.coset_intersect((xk, ml.lattice), oracle.image_coset(r, xj, ml.lattice))
            if c is not None:
                pieces.append(c)
    return tuple(sorted(pieces, key=lambda c: c.representative))


def diamond_suite(bound: int = 50) -> Report:
    rep = Report("diamond", bound)
    for q in enumerate_primitive(bound):
        for improper in (False, True):
            iso = diamond.DiamondIsometry(q, improper)
            closed = diamond.diamond_coincidence(iso)
            generic = diamond.diamond_coincidence_engine(iso)
            brute = _oracle_csml(diamond.DIAMOND, iso.matrix())
            label = f"{q} improper={improper}"
            rep.check(closed.index == generic.index, f"index {label}")
            rep.check(closed.cosets.cosets == generic.cosets == brute, f"cosets {label}")
            rep.check(
                diamond.shifted_fcc_member(q, improper) == diamond.shifted_fcc_member_engine(q, improper),
                f"shifted fcc {label}",
            )
    return rep


def _square_multilattices() -> list[engine.Multilattice]:
    h, t, f = Fraction(1, 2), Fraction(1, 3), Fraction(1, 5)
    return [
        engine.Multilattice(Z2, (ORIGIN2,)),
        engine.Multilattice(Z2, (ORIGIN2, (h, h))),
        engine.Multilattice(Z2, (ORIGIN2, (h, 0))),
        engine.Multilattice(Z2, (ORIGIN2, (t, t), (2 * t, 2 * t))),
        engine.Multilattice(Z2, (ORIGIN2, (f, 0), (0, 2 * f))),
    ]


def multilattice_suite(bound: int = 50) -> Report:
    rep = Report("multilattice", bound)
    for ml in _square_multilattices():
        for c in square.enumerate_coincidences(bound):
            r = square.isometry_matrix(c)
            desc = engine.multilattice_coincidence(ml, r)
            label = f"m={ml.m} shifts={[tuple(map(str, s)) for s in ml.shifts]} {c}"
            n = len(desc.sigma_pairs)
            rep.check(1 <= n <= ml.m**2, f"sigma size {label}")
            rep.check(desc.index * n == ml.m * c.sigma, f"index {label}")
            rep.check(desc.cosets == _oracle_csml(ml, r), f"cosets {label}")
    return rep


SUITES = {
    "square": square_suite,
    "shifted": shifted_suite,
    "cubic": cubic_suite,
    "diamond": diamond_suite,
    "multilattice": multilattice_suite,
}


def run_suite(name: str, bound: int) -> Report:
    return SUITES[name](bound)
