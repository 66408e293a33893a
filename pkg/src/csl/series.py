"""Counting functions of coincidence indices and their Dirichlet coefficient tables."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

import mpmath
import numpy as np

from . import cubic, diamond, shifted, square
from .errors import DomainError
from .gaussian import GaussianRational, parse_gaussian_rational

# --- prime-power rules ------------------------------------------------------


def _z2(p: int, r: int) -> int:
    return 2 if p % 4 == 1 else 0


def _z3(p: int, r: int) -> int:
    return 0 if p == 2 else (p + 1) * p ** (r - 1)


def _d3p(p: int, r: int) -> int:
    if p == 2:
        return 1 if r == 1 else 0
    return (p + 1) * p ** (r - 1)


def _den5(p: int, r: int) -> int:
    return 0 if p == 5 else _z2(p, r)


def _exnotgroup(p: int, r: int) -> int:
    return 4 if p == 5 else _z2(p, r)


PrimePowerRule = Callable[[int, int], int]


def multiplicative_table(rule: PrimePowerRule, n: int) -> np.ndarray:
    """Array t with t[m] = f(m) for 1 <= m <= n, where f(p^r) = rule(p, r) and f is multiplicative."""
    if n < 1:
        raise DomainError("table size must be positive")
    t = np.ones(n + 1, dtype=np.int64)
    t[0] = 0
    sieve = np.ones(n + 1, dtype=bool)
    sieve[:2] = False
    for p in range(2, int(n**0.5) + 1):
        if sieve[p]:
            sieve[p * p :: p] = False
    for p in np.flatnonzero(sieve).tolist():
        pr, r = p, 1
        while pr <= n:
            idx = np.arange(pr, n + 1, pr)
            idx = idx[idx % (pr * p) != 0]
            t[idx] *= rule(p, r)
            pr *= p
            r += 1
    return t


# --- counting functions -----------------------------------------------------


@dataclass(frozen=True)
class CountingFunction:
    """kind: square-csl, square-rotations, cubic-csl, cubic-rotations, diamond-csml,
    shifted-square (with a rational shift) or shifted-fcc."""

    kind: str
    shift: GaussianRational | None = None

    @classmethod
    def parse(cls, which: str) -> "CountingFunction":
        names = {"z2": "square-csl", "z3": "cubic-csl", "d3p": "diamond-csml", "fcc-shift": "shifted-fcc"}
        if which in names:
            return cls(names[which])
        if which.startswith("shift:"):
            return cls("shifted-square", parse_gaussian_rational(which[len("shift:"):].strip().strip('"')))
        if which in KINDS:
            return cls(which)
        raise DomainError(f"unknown counting function {which!r}")


KINDS = ("square-csl", "square-rotations", "cubic-csl", "cubic-rotations", "diamond-csml", "shifted-square", "shifted-fcc")

_RULES: dict[str, PrimePowerRule] = {"square-csl": _z2, "cubic-csl": _z3, "diamond-csml": _d3p}
_KNOWN_SHIFT_RULES: dict[GaussianRational, PrimePowerRule] = {
    GaussianRational.from_parts(Fraction(1, 5)): _den5,
    GaussianRational.from_parts(Fraction(2, 5)): _den5,
    GaussianRational.from_parts(Fraction(2, 5), Fraction(1, 5)): _exnotgroup,
    GaussianRational.from_parts(Fraction(1, 2), Fraction(1, 2)): _z2,
    GaussianRational.from_parts(Fraction(1, 2)): _z2,
    GaussianRational.from_parts(Fraction(1, 3), Fraction(1, 3)): _z2,
    GaussianRational.from_parts(Fraction(0)): _z2,
}


def closed_form_rule(f: CountingFunction) -> PrimePowerRule | None:
    if f.kind == "shifted-square":
        return _KNOWN_SHIFT_RULES.get(f.shift)
    if f.kind == "shifted-fcc":
        return _z3
    return _RULES.get(f.kind)


def coefficients(f: CountingFunction, max_m: int, method: str = "auto") -> dict[int, int]:
    """Table m -> f(m) for m <= max_m.

    method="closed" uses the prime-power rule, "enumerate" counts distinct
    coincidence site (multi)lattices, "auto" prefers the closed form.
    """
    if max_m < 1:
        raise DomainError("max_m must be positive")
    if f.kind in ("square-rotations", "cubic-rotations"):
        return rotation_counts(f, max_m)
    rule = closed_form_rule(f)
    if method == "closed" or (method == "auto" and rule is not None):
        if rule is None:
            raise DomainError(f"no closed form for {f}")
        t = multiplicative_table(rule, max_m)
        return {m: int(t[m]) for m in range(1, max_m + 1)}
    if method not in ("enumerate", "auto"):
        raise DomainError(f"unknown method {method!r}")
    if f.kind == "square-csl":
        return square.csl_counts(max_m)
    if f.kind == "cubic-csl":
        return cubic.csl_counts(max_m)
    if f.kind == "diamond-csml":
        return diamond.csml_counts(max_m)
    if f.kind == "shifted-square":
        return shifted.csl_counts(f.shift, max_m)
    if f.kind == "shifted-fcc":
        return diamond.shifted_fcc_counts(max_m)["csl"]
    raise DomainError(f"unknown counting function {f}")


def rotation_counts(f: CountingFunction, max_m: int) -> dict[int, int]:
    """Number of coincidence rotations of each index m <= max_m."""
    if f.kind in ("square-csl", "square-rotations"):
        t = multiplicative_table(_z2, max_m)
        return {m: 4 * int(t[m]) for m in range(1, max_m + 1)}
    if f.kind in ("cubic-csl", "cubic-rotations"):
        t = multiplicative_table(_z3, max_m)
        return {m: 24 * int(t[m]) for m in range(1, max_m + 1)}
    if f.kind == "shifted-square":
        return shifted.rotation_counts(f.shift, max_m)
    if f.kind == "shifted-fcc":
        return diamond.shifted_fcc_counts(max_m)["rotations"]
    raise DomainError(f"rotation counts are not defined for {f.kind}")


def chi_minus3(m: int) -> int:
    return {0: 0, 1: 1, 2: -1}[m % 3]


def chi_12(m: int) -> int:
    r = m % 12
    if r in (1, 11):
        return 1
    if r in (5, 7):
        return -1
    return 0


def mixed_denominator_rotations(m: int) -> int:
    """Rotation count for the shift 1/3 + i/6: f_Z2(m) when m = 1 (mod 3), else 0."""
    t = multiplicative_table(_z2, m)
    return (1 + chi_minus3(m)) * int(t[m]) // 2


# --- asymptotics --------------------------------------------------------------


@dataclass(frozen=True)
class Growth:
    """Leading term coef * N^power / pi^power."""

    coef: Fraction
    power: int

    def value(self, n: int, dps: int = 40) -> Fraction:
        with mpmath.workdps(dps):
            pi = Fraction(mpmath.nstr(mpmath.pi, dps))
        return self.coef * Fraction(n) ** self.power / pi**self.power


GROWTH = {
    "N/pi": Growth(Fraction(1), 1),
    "2N/(3pi)": Growth(Fraction(2, 3), 1),
    "4N/(3pi)": Growth(Fraction(4, 3), 1),
    "N/(2pi)": Growth(Fraction(1, 2), 1),
    "3N^2/pi^2": Growth(Fraction(3), 2),
    "9N^2/(2pi^2)": Growth(Fraction(9, 2), 2),
    "15N^2/(4pi^2)": Growth(Fraction(15, 4), 2),
}


def summatory(f: CountingFunction, n: int) -> int:
    rule = closed_form_rule(f)
    if rule is not None and f.kind not in ("square-rotations", "cubic-rotations"):
        return int(multiplicative_table(rule, n)[1:].sum())
    return sum(coefficients(f, n).values())


def summatory_ratio(f: CountingFunction, n: int, predicted: str | Growth) -> Fraction:
    """sum_{m <= n} f(m) divided by the predicted leading term."""
    g = GROWTH[predicted] if isinstance(predicted, str) else predicted
    return Fraction(summatory(f, n)) / g.value(n)
