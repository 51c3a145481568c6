"""Independent brute-force oracles for the test suite.

These deliberately share no determinant, Sylvester, or resultant code
with the main computation path in ``resultant``: the matrix rows are
rebuilt inline and the determinant is a plain cofactor expansion along
the first row (with zero skipping and a minor cache).  Keep it that way;
agreement between the two paths is itself one of the checks.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence

from .polyring import MultiPoly

_ZERO = MultiPoly.zero()


class TooLargeError(ValueError):
    """Oracle determinants are capped at 9x9."""


def oracle_det(rows: Sequence[Sequence[MultiPoly]]) -> MultiPoly:
    """Cofactor expansion along the first row, minors cached by column set."""
    n = len(rows)
    if n > 9:
        raise TooLargeError(f"oracle determinant limited to 9x9, got {n}x{n}")
    if any(len(r) != n for r in rows):
        raise ValueError("oracle determinant needs a square matrix")
    cache: dict = {}

    def minor(i: int, cols: tuple) -> MultiPoly:
        if len(cols) == 1:
            return rows[i][cols[0]]
        key = (i, cols)
        val = cache.get(key)
        if val is not None:
            return val
        total = _ZERO
        sign = 1
        for pos, j in enumerate(cols):
            e = rows[i][j]
            if e:
                sub = minor(i + 1, cols[:pos] + cols[pos + 1:])
                total = total + e * sub if sign > 0 else total - e * sub
            sign = -sign
        cache[key] = total
        return total

    return minor(0, tuple(range(n)))


def oracle_resultant(f_coeffs: Sequence[MultiPoly], g_coeffs: Sequence[MultiPoly]) -> MultiPoly:
    """Resultant via an inline Sylvester layout plus ``oracle_det``.

    ``f_coeffs``/``g_coeffs`` list the coefficients ascending by power,
    with honest nonzero leading entries; degrees must be >= 1 and the
    matrix at most 9x9.
    """
    f = [c if isinstance(c, MultiPoly) else MultiPoly.const(c) for c in f_coeffs]
    g = [c if isinstance(c, MultiPoly) else MultiPoly.const(c) for c in g_coeffs]
    n1, n2 = len(f) - 1, len(g) - 1
    if n1 < 1 or n2 < 1:
        raise ValueError("oracle resultant needs degrees >= 1")
    if not f[-1] or not g[-1]:
        raise ValueError("leading coefficients must be nonzero")
    size = n1 + n2
    if size > 9:
        raise TooLargeError(f"oracle resultant limited to 9x9, got {size}x{size}")
    rows = []
    for i in range(n2):
        row = [_ZERO] * size
        for j, c in enumerate(reversed(f)):
            row[i + j] = c
        rows.append(row)
    for i in range(n1):
        row = [_ZERO] * size
        for j, c in enumerate(reversed(g)):
            row[i + j] = c
        rows.append(row)
    return oracle_det(rows)


def coeffs_from_roots(roots: Sequence) -> list:
    """Coefficient vector (a1, ..., an) of prod(x - r_i), exactly.

    a_j is the signed elementary symmetric function (-1)^j e_j(roots).
    """
    coeffs = [Fraction(1)]
    for r in roots:
        r = Fraction(r)
        nxt = [Fraction(0)] * (len(coeffs) + 1)
        for i, c in enumerate(coeffs):
            nxt[i] += c
            nxt[i + 1] -= c * r
        coeffs = nxt
    out = []
    for c in coeffs[1:]:
        out.append(c.numerator if c.denominator == 1 else c)
    return out


def oracle_discriminant_from_roots(roots: Sequence) -> tuple:
    """((a1, ..., an), prod_{i<j} (x_i - x_j)^2) for 2 <= #roots <= 6."""
    if not 2 <= len(roots) <= 6:
        raise ValueError("oracle supports 2 to 6 roots")
    rs = [Fraction(r) for r in roots]
    prod = Fraction(1)
    for i in range(len(rs)):
        for j in range(i + 1, len(rs)):
            d = rs[i] - rs[j]
            prod *= d * d
    if prod.denominator == 1:
        prod = prod.numerator
    return coeffs_from_roots(rs), prod
