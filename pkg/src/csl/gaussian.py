"""Arithmetic in the Gaussian integers Z[i] and the Gaussian rationals Q(i)."""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from math import gcd as igcd
from math import lcm as ilcm

from sympy import factorint
from sympy.ntheory import sqrt_mod

from .errors import DomainError


@dataclass(frozen=True, slots=True)
class GaussianInt:
    re: int
    im: int = 0

    def __add__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return GaussianInt(self.re + other.re, self.im + other.im)

    __radd__ = __add__

    def __sub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return GaussianInt(self.re - other.re, self.im - other.im)

    def __rsub__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        return other - self

    def __mul__(self, other):
        other = _coerce(other)
        if other is None:
            return NotImplemented
        a, b, c, d = self.re, self.im, other.re, other.im
        return GaussianInt(a * c - b * d, a * d + b * c)

    __rmul__ = __mul__

    def __neg__(self):
        return GaussianInt(-self.re, -self.im)

    def __pow__(self, n: int):
        if n < 0:
            raise DomainError("negative exponent")
        result, base = ONE, self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __bool__(self):
        return bool(self.re or self.im)

    def conj(self) -> "GaussianInt":
        return GaussianInt(self.re, -self.im)

    def norm(self) -> int:
        return self.re * self.re + self.im * self.im

    def is_unit(self) -> bool:
        return self.norm() == 1

    def divides(self, other: "GaussianInt") -> bool:
        """True if self | other in Z[i]."""
        other = _coerce(other)
        if not self:
            return not other
        n = self.norm()
        p = other * self.conj()
        return p.re % n == 0 and p.im % n == 0

    def exact_div(self, other: "GaussianInt") -> "GaussianInt":
        other = _coerce(other)
        n = other.norm()
        if n == 0:
            raise DomainError("division by zero")
        p = self * other.conj()
        if p.re % n or p.im % n:
            raise DomainError(f"{other} does not divide {self}")
        return GaussianInt(p.re // n, p.im // n)

    def __str__(self):
        return format_gaussian(self)

    def __repr__(self):
        return f"GaussianInt({self.re}, {self.im})"


def _coerce(x) -> GaussianInt | None:
    if isinstance(x, GaussianInt):
        return x
    if isinstance(x, int):
        return GaussianInt(x, 0)
    return None


ZERO = GaussianInt(0, 0)
ONE = GaussianInt(1, 0)
I = GaussianInt(0, 1)
UNITS = (ONE, I, -ONE, -I)
ONE_PLUS_I = GaussianInt(1, 1)


def unit_label(u: GaussianInt) -> str:
    return {ONE: "1", I: "i", -ONE: "-1", -I: "-i"}[u]


def parse_unit(text: str) -> GaussianInt:
    table = {"1": ONE, "i": I, "-1": -ONE, "-i": -I, "+1": ONE, "+i": I}
    try:
        return table[text.strip()]
    except KeyError:
        raise DomainError(f"not a unit: {text!r}") from None


def canonical_associate(w: GaussianInt) -> tuple[GaussianInt, GaussianInt]:
    """Return (c, u) with c = u*w, re(c) > 0 and im(c) >= 0 (c = 0 for w = 0)."""
    if not w:
        return w, ONE
    for u in UNITS:
        c = u * w
        if c.re > 0 and c.im >= 0:
            return c, u
    raise AssertionError("unreachable")


def euclid_divide(a: GaussianInt, b: GaussianInt) -> tuple[GaussianInt, GaussianInt]:
    """Division with remainder: a == k*b + r and N(r) <= N(b)/2.

    Each coordinate of a/b is rounded to the nearest integer, ties toward
    minus infinity.
    """
    a, b = _coerce(a), _coerce(b)
    n = b.norm()
    if n == 0:
        raise DomainError("division by zero")
    p = a * b.conj()
    # nearest integer to p/n with ties going down: ceil(p/n - 1/2)
    kr = -((n - 2 * p.re) // (2 * n))
    ki = -((n - 2 * p.im) // (2 * n))
    k = GaussianInt(kr, ki)
    return k, a - k * b


def gcd(a: GaussianInt, b: GaussianInt) -> GaussianInt:
    """Greatest common divisor in canonical associate form."""
    a, b = _coerce(a), _coerce(b)
    if not a and not b:
        raise DomainError("gcd(0, 0) is undefined")
    while b:
        _, r = euclid_divide(a, b)
        a, b = b, r
    return canonical_associate(a)[0]


def lcm(a: GaussianInt, b: GaussianInt) -> GaussianInt:
    a, b = _coerce(a), _coerce(b)
    if not a or not b:
        return ZERO
    return canonical_associate((a * b).exact_div(gcd(a, b)))[0]


def inverse_mod(a: GaussianInt, m: GaussianInt) -> GaussianInt:
    """An element b with a*b == 1 (mod m); DomainError unless gcd(a, m) is a unit."""
    r0, r1 = _coerce(m), _coerce(a)
    s0, s1 = ZERO, ONE
    while r1:
        k, r = euclid_divide(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, s0 - k * s1
    if r0.norm() != 1:
        raise DomainError(f"{a} is not invertible modulo {m}")
    # r0 is a unit u with s0*a == u (mod m)
    return s0 * r0.conj()


def is_visible(z: GaussianInt) -> bool:
    return igcd(z.re, z.im) == 1


def is_odd_visible(z: GaussianInt) -> bool:
    """Visible and not divisible by 1+i."""
    return is_visible(z) and (z.re + z.im) % 2 == 1


@dataclass(frozen=True)
class GaussianFactorization:
    unit: GaussianInt
    factors: tuple[tuple[GaussianInt, int], ...]

    def product(self) -> GaussianInt:
        out = self.unit
        for p, e in self.factors:
            out = out * p**e
        return out


def split_prime_factor(p: int) -> GaussianInt:
    """A Gaussian prime of norm p for a rational prime p = 1 (mod 4).

    Uses a square root t of -1 modulo p: gcd(p, t + i) has norm p.
    """
    if p % 4 != 1:
        raise DomainError(f"{p} does not split in Z[i]")
    t = sqrt_mod(p - 1, p)
    return gcd(GaussianInt(p), GaussianInt(t, 1))


def factor(z: GaussianInt) -> GaussianFactorization:
    """Factor z into canonical Gaussian primes, ordered by norm."""
    z = _coerce(z)
    if not z:
        raise DomainError("cannot factor 0")
    rest = z
    found: list[tuple[GaussianInt, int]] = []

    def strip(prime: GaussianInt):
        nonlocal rest
        e = 0
        while prime.divides(rest):
            rest = rest.exact_div(prime)
            e += 1
        if e:
            found.append((prime, e))

    for p in sorted(factorint(z.norm())):
        if p == 2:
            strip(ONE_PLUS_I)
        elif p % 4 == 3:
            strip(GaussianInt(p))
        else:
            w = split_prime_factor(p)
            w2 = canonical_associate(w.conj())[0]
            for prime in sorted((w, w2), key=lambda g: (g.re, g.im)):
                strip(prime)
    assert rest.is_unit()
    return GaussianFactorization(rest, tuple(found))


@dataclass(frozen=True)
class GaussianRational:
    """A reduced fraction num/den of Gaussian integers.

    The denominator is kept in canonical associate form so equal values
    compare equal.
    """

    num: GaussianInt
    den: GaussianInt = ONE

    def __post_init__(self):
        num, den = _coerce(self.num), _coerce(self.den)
        if not den:
            raise DomainError("zero denominator")
        if not num:
            num, den = ZERO, ONE
        else:
            g = gcd(num, den)
            num, den = num.exact_div(g), den.exact_div(g)
            den, u = canonical_associate(den)
            num = num * u
        object.__setattr__(self, "num", num)
        object.__setattr__(self, "den", den)

    @classmethod
    def from_parts(cls, re, im=0) -> "GaussianRational":
        re, im = Fraction(re), Fraction(im)
        d = ilcm(re.denominator, im.denominator)
        return cls(GaussianInt(int(re * d), int(im * d)), GaussianInt(d))

    @property
    def re(self) -> Fraction:
        p = self.num * self.den.conj()
        return Fraction(p.re, self.den.norm())

    @property
    def im(self) -> Fraction:
        p = self.num * self.den.conj()
        return Fraction(p.im, self.den.norm())

    def parts(self) -> tuple[Fraction, Fraction]:
        return self.re, self.im

    def is_integral(self) -> bool:
        return self.den.is_unit()

    def conj(self) -> "GaussianRational":
        return GaussianRational(self.num.conj(), self.den.conj())

    def __add__(self, other):
        other = _as_rational(other)
        return GaussianRational(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __neg__(self):
        return GaussianRational(-self.num, self.den)

    def __sub__(self, other):
        return self + (-_as_rational(other))

    def __rsub__(self, other):
        return _as_rational(other) - self

    def __mul__(self, other):
        other = _as_rational(other)
        return GaussianRational(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other):
        other = _as_rational(other)
        if not other.num:
            raise DomainError("division by zero")
        return GaussianRational(self.num * other.den, self.den * other.num)

    def __str__(self):
        if self.den == ONE:
            return format_gaussian(self.num)
        return f"({format_gaussian(self.num)})/({format_gaussian(self.den)})"


def _as_rational(x) -> GaussianRational:
    if isinstance(x, GaussianRational):
        return x
    if isinstance(x, (int, GaussianInt)):
        return GaussianRational(_coerce(x))
    if isinstance(x, Fraction):
        return GaussianRational.from_parts(x)
    raise TypeError(f"cannot use {type(x).__name__} as a Gaussian rational")


def format_gaussian(z: GaussianInt) -> str:
    """Text form: "1+2i", "3-i", "-3", "2i"."""
    a, b = z.re, z.im
    if b == 0:
        return str(a)
    coef = {1: "", -1: "-"}.get(b, str(b))
    if a == 0:
        return f"{coef}i"
    sign = "+" if b > 0 else "-"
    mag = "" if abs(b) == 1 else str(abs(b))
    return f"{a}{sign}{mag}i"


_GAUSS_RE = re.compile(
    r"""^\s*(?:
        (?P<re>[+-]?\d+)(?:\s*(?P<sign>[+-])\s*(?P<im>\d*)\s*i)?   # a, a+bi, a-i
        |(?P<pure>[+-]?\d*)\s*i                                  # bi, -i, i
    )\s*$""",
    re.VERBOSE,
)


def parse_gaussian(text: str) -> GaussianInt:
    """Parse a Gaussian integer literal such as "1+2i", "-3", "2-1i", "i"."""
    s = text.strip()
    if s.startswith("(") and s.endswith(")"):
        s = s[1:-1]
    m = _GAUSS_RE.match(s)
    if not m:
        pos = _first_bad_position(s)
        raise DomainError(f"malformed Gaussian integer {text!r} at position {pos}")
    if m.group("re") is not None:
        a = int(m.group("re"))
        if m.group("sign") is None:
            return GaussianInt(a, 0)
        b = int(m.group("im") or 1)
        return GaussianInt(a, b if m.group("sign") == "+" else -b)
    pure = m.group("pure")
    b = {"": 1, "+": 1, "-": -1}.get(pure)
    return GaussianInt(0, int(pure) if b is None else b)


def _first_bad_position(s: str) -> int:
    for k, ch in enumerate(s):
        if ch not in "0123456789+-i() ":
            return k
    return len(s)


def parse_gaussian_rational(text: str) -> GaussianRational:
    """Parse "p/q" with Gaussian literals, e.g. "(2+1i)/5", or "re,im" with fractions."""
    s = text.strip()
    if "," in s:
        re_part, im_part = s.split(",", 1)
        try:
            return GaussianRational.from_parts(Fraction(re_part.strip()), Fraction(im_part.strip()))
        except (ValueError, ZeroDivisionError):
            raise DomainError(f"malformed rational pair {text!r}") from None
    depth = 0
    slash = None
    for k, ch in enumerate(s):
        depth += ch == "("
        depth -= ch == ")"
        if ch == "/" and depth == 0:
            slash = k
    if slash is None:
        return GaussianRational(parse_gaussian(s))
    return GaussianRational(parse_gaussian(s[:slash]), parse_gaussian(s[slash + 1:]))
