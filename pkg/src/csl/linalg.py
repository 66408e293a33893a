"""Exact integer and rational matrix routines.

Matrices are tuples of rows.  Lattices are described by the *columns* of a
matrix, so the Hermite normal form used throughout is the column-style,
lower-triangular one:

    H[i][j] == 0 for j > i,   H[i][i] > 0,   0 <= H[i][j] < H[i][i] for j < i.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd, lcm
from typing import Sequence

from .errors import DomainError

IntMatrix = tuple[tuple[int, ...], ...]
RatMatrix = tuple[tuple[Fraction, ...], ...]
RatVector = tuple[Fraction, ...]


def xgcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, s, t) with s*a + t*b == g == gcd(a, b) >= 0."""
    s0, s1, t0, t1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        s0, s1 = s1, s0 - q * s1
        t0, t1 = t1, t0 - q * t1
    if a < 0:
        return -a, -s0, -t0
    return a, s0, t0


def _column_hnf(cols: list[list[int]], d: int, track: list[list[int]] | None):
    # In-place column reduction; `track` receives the same column operations.
    n = len(cols)
    for i in range(d):
        ci = cols[i]
        for j in range(i + 1, n):
            cj = cols[j]
            b = cj[i]
            if b == 0:
                continue
            a = ci[i]
            g, s, t = xgcd(a, b)
            u, v = -b // g, a // g
            new_i = [s * x + t * y for x, y in zip(ci, cj)]
            new_j = [u * x + v * y for x, y in zip(ci, cj)]
            cols[i] = ci = new_i
            cols[j] = new_j
            if track is not None:
                ti, tj = track[i], track[j]
                track[i] = [s * x + t * y for x, y in zip(ti, tj)]
                track[j] = [u * x + v * y for x, y in zip(ti, tj)]
        piv = ci[i]
        if piv == 0:
            raise DomainError("matrix does not have full row rank")
        if piv < 0:
            cols[i] = ci = [-x for x in ci]
            piv = -piv
            if track is not None:
                track[i] = [-x for x in track[i]]
        for j in range(i):
            f = cols[j][i] // piv
            if f:
                cols[j] = [x - f * y for x, y in zip(cols[j], ci)]
                if track is not None:
                    track[j] = [x - f * y for x, y in zip(track[j], track[i])]


def hnf_columns(generators: Sequence[Sequence[int]]) -> IntMatrix:
    """Column HNF of the lattice spanned by integer generator vectors.

    Returns the d x d lower-triangular matrix (as rows).  Raises DomainError
    when the generators do not span a full-rank lattice.
    """
    gens = [list(v) for v in generators]
    if not gens:
        raise DomainError("no generators")
    d = len(gens[0])
    if len(gens) < d:
        raise DomainError("fewer generators than the dimension")
    _column_hnf(gens, d, None)
    return tuple(tuple(gens[j][i] for j in range(d)) for i in range(d))


def hnf_with_transform(matrix: Sequence[Sequence[int]]) -> tuple[IntMatrix, IntMatrix]:
    """Return (H, U) with matrix @ U == [H | 0] and U unimodular.

    `matrix` is d x n (rows) of full row rank d.  H is d x d; the last n - d
    columns of U span the integer kernel of `matrix`.
    """
    d = len(matrix)
    n = len(matrix[0])
    cols = [[matrix[i][j] for i in range(d)] for j in range(n)]
    track = [[1 if r == c else 0 for r in range(n)] for c in range(n)]
    _column_hnf(cols, d, track)
    h = tuple(tuple(cols[j][i] for j in range(d)) for i in range(d))
    u = tuple(tuple(track[j][i] for j in range(n)) for i in range(n))
    return h, u


def solve_lower(h: Sequence[Sequence[int]], b: Sequence) -> list[Fraction]:
    """Forward substitution for a lower-triangular system h @ y == b."""
    y: list[Fraction] = []
    for i, row in enumerate(h):
        acc = Fraction(b[i]) - sum((row[j] * y[j] for j in range(i)), Fraction(0))
        y.append(acc / row[i])
    return y


def solve_lower_integral(h: Sequence[Sequence[int]], b: Sequence[int]) -> list[int] | None:
    """Integer solution of h @ y == b, or None if the solution is not integral."""
    y: list[int] = []
    for i, row in enumerate(h):
        acc = b[i] - sum(row[j] * y[j] for j in range(i))
        q, r = divmod(acc, row[i])
        if r:
            return None
        y.append(q)
    return y


def common_denominator(values) -> int:
    den = 1
    for v in values:
        den = lcm(den, Fraction(v).denominator)
    return den


def content(values) -> int:
    g = 0
    for v in values:
        g = gcd(g, v)
    return g


def mat_mul(a: Sequence[Sequence], b: Sequence[Sequence]) -> tuple:
    cols = list(zip(*b))
    return tuple(tuple(sum(x * y for x, y in zip(row, col)) for col in cols) for row in a)


def mat_vec(a: Sequence[Sequence], v: Sequence) -> tuple:
    return tuple(sum(x * y for x, y in zip(row, v)) for row in a)


def transpose(a: Sequence[Sequence]) -> tuple:
    return tuple(zip(*a))


def identity(d: int) -> RatMatrix:
    return tuple(tuple(Fraction(int(i == j)) for j in range(d)) for i in range(d))


def as_fraction(x) -> Fraction:
    return x if type(x) is Fraction else Fraction(x)


def to_fraction_matrix(a: Sequence[Sequence]) -> RatMatrix:
    return tuple(tuple(as_fraction(x) for x in row) for row in a)


def determinant(a: Sequence[Sequence]) -> Fraction:
    """Exact determinant by fraction-valued Gaussian elimination."""
    m = [list(map(Fraction, row)) for row in a]
    n = len(m)
    det = Fraction(1)
    for c in range(n):
        p = next((r for r in range(c, n) if m[r][c] != 0), None)
        if p is None:
            return Fraction(0)
        if p != c:
            m[c], m[p] = m[p], m[c]
            det = -det
        det *= m[c][c]
        for r in range(c + 1, n):
            f = m[r][c] / m[c][c]
            if f:
                m[r] = [x - f * y for x, y in zip(m[r], m[c])]
    return det


def inverse(a: Sequence[Sequence]) -> RatMatrix:
    """Exact inverse by Gauss-Jordan elimination; DomainError if singular."""
    n = len(a)
    m = [list(map(Fraction, row)) + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(a)]
    for c in range(n):
        p = next((r for r in range(c, n) if m[r][c] != 0), None)
        if p is None:
            raise DomainError("singular matrix")
        m[c], m[p] = m[p], m[c]
        piv = m[c][c]
        m[c] = [x / piv for x in m[c]]
        for r in range(n):
            if r != c and m[r][c] != 0:
                f = m[r][c]
                m[r] = [x - f * y for x, y in zip(m[r], m[c])]
    return tuple(tuple(row[n:]) for row in m)


def is_orthogonal(a: Sequence[Sequence]) -> bool:
    """Exact test of A^T A == 1, done on the integer numerators over a common denominator."""
    n = len(a)
    den = common_denominator(x for row in a for x in row)
    m = [[int(Fraction(x) * den) for x in row] for row in a]
    d2 = den * den
    return all(
        sum(m[k][i] * m[k][j] for k in range(n)) == (d2 if i == j else 0)
        for i in range(n)
        for j in range(i, n)
    )
