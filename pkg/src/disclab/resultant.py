"""Sylvester matrices, exact determinants, and the discriminant-set objects.

Everything is built from two primitives: the Sylvester matrix of two
univariate views and an exact determinant over the polynomial ring.
The determinant is fraction-free Bareiss elimination (every division is
exact by Sylvester's identity), with direct cofactor expansion for
dimension <= 4; an unrepairable zero pivot means the determinant is 0.

Derived objects:

* ``generic_P(n)``       -- x^n + a1 x^(n-1) + ... + an,
* ``discriminant_R(n)``  -- Res(P, P', x), the discriminant-set polynomial,
* ``P_k(n, k)``          -- P - x P'/(n-k)  (kills the x^(n-k) coefficient;
  drops the multiplicity of every nonzero root by one); P_n := P',
* ``V_k(n, k)``          -- Res(P_k, P_k', x), with the forced factor a_n
  removed when k = n-1,
* ``D_tilde(n, k)``      -- Res(R, dR/da_k, a_k), the double resultant.

The heavy objects are memoized per process; the caches are idempotent,
so racing threads may duplicate work but always agree.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .polyring import (
    MultiPoly,
    VarId,
    a_var,
    X_VAR,
    poly_from_obj,
    poly_to_obj,
)

_ZERO = MultiPoly.zero()
_ONE = MultiPoly.one()


class DegreeZeroError(ValueError):
    """A Sylvester factor was declared with degree 0."""


class BadDegreeError(ValueError):
    """The family degree n is out of range."""


class BadIndexError(ValueError):
    """The index k is out of range for the given n."""


class DishonestDegreeError(ValueError):
    """A declared degree does not match a nonzero leading coefficient."""


@dataclass(frozen=True)
class PolyMatrix:
    """Dense rectangular matrix with MultiPoly entries."""

    rows: int
    cols: int
    entries: tuple

    @classmethod
    def from_rows(cls, rows) -> "PolyMatrix":
        rows = tuple(tuple(r) for r in rows)
        if not rows or not rows[0]:
            raise ValueError("matrix needs at least one row and column")
        ncols = len(rows[0])
        if any(len(r) != ncols for r in rows):
            raise ValueError("ragged rows")
        return cls(len(rows), ncols, rows)

    @classmethod
    def identity(cls, n: int) -> "PolyMatrix":
        return cls.from_rows(
            [[_ONE if i == j else _ZERO for j in range(n)] for i in range(n)]
        )

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i][j]

    def delete_column(self, j: int) -> "PolyMatrix":
        return PolyMatrix.from_rows([r[:j] + r[j + 1:] for r in self.entries])

    def delete_row(self, i: int) -> "PolyMatrix":
        return PolyMatrix.from_rows(self.entries[:i] + self.entries[i + 1:])

    def to_obj(self) -> list:
        return [[poly_to_obj(e) for e in row] for row in self.entries]

    @classmethod
    def from_obj(cls, obj) -> "PolyMatrix":
        return cls.from_rows([[poly_from_obj(e) for e in row] for row in obj])


@dataclass(frozen=True)
class UniPolyView:
    """A polynomial seen as univariate in one variable.

    ``coefficients[i]`` is the (MultiPoly) coefficient of variable**i and
    the coefficient at ``declared_degree`` must be nonzero: declared
    degrees are honest by construction.
    """

    variable: VarId
    coefficients: tuple
    declared_degree: int

    def __post_init__(self):
        if self.declared_degree < 0:
            raise DishonestDegreeError("declared degree must be nonnegative")
        if len(self.coefficients) != self.declared_degree + 1:
            raise DishonestDegreeError(
                f"{len(self.coefficients)} coefficients for declared degree "
                f"{self.declared_degree}"
            )
        if not self.coefficients[-1]:
            raise DishonestDegreeError(
                f"zero leading coefficient at declared degree {self.declared_degree}"
            )

    @classmethod
    def make(cls, variable: VarId, coefficients) -> "UniPolyView":
        coeffs = tuple(
            c if isinstance(c, MultiPoly) else MultiPoly.const(c) for c in coefficients
        )
        return cls(variable, coeffs, len(coeffs) - 1)

    @classmethod
    def from_multipoly(
        cls, f: MultiPoly, variable: VarId, declared_degree: Optional[int] = None
    ) -> "UniPolyView":
        coeffs = f.coeffs_in_var(variable)
        if declared_degree is not None:
            if declared_degree + 1 < len(coeffs):
                raise DishonestDegreeError(
                    f"actual degree {len(coeffs) - 1} exceeds declared {declared_degree}"
                )
            coeffs = coeffs + [_ZERO] * (declared_degree + 1 - len(coeffs))
        return cls(variable, tuple(coeffs), len(coeffs) - 1)

    def derivative(self) -> "UniPolyView":
        if self.declared_degree == 0:
            raise DegreeZeroError("derivative of a degree-0 view")
        coeffs = tuple(
            self.coefficients[i] * i for i in range(1, self.declared_degree + 1)
        )
        return UniPolyView(self.variable, coeffs, self.declared_degree - 1)

    def as_multipoly(self) -> MultiPoly:
        v = MultiPoly.var(self.variable)
        acc = self.coefficients[-1]
        for c in reversed(self.coefficients[:-1]):
            acc = acc * v + c
        return acc


def sylvester(f: UniPolyView, g: UniPolyView) -> PolyMatrix:
    """The (n1+n2) x (n1+n2) Sylvester matrix of f and g.

    The first n2 rows carry the coefficients of f from the leading one
    down, each shifted right by one; the last n1 rows do the same for g.
    """
    n1, n2 = f.declared_degree, g.declared_degree
    if n1 < 1 or n2 < 1:
        raise DegreeZeroError("Sylvester factors must have degree >= 1")
    size = n1 + n2
    fdesc = list(reversed(f.coefficients))
    gdesc = list(reversed(g.coefficients))
    rows = []
    for i in range(n2):
        rows.append([_ZERO] * i + fdesc + [_ZERO] * (size - n1 - 1 - i))
    for i in range(n1):
        rows.append([_ZERO] * i + gdesc + [_ZERO] * (size - n2 - 1 - i))
    return PolyMatrix.from_rows(rows)


def _det_cofactor(rows: list) -> MultiPoly:
    n = len(rows)
    if n == 1:
        return rows[0][0]
    if n == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    total = _ZERO
    sign = 1
    for j in range(n):
        e = rows[0][j]
        if e:
            minor = [r[:j] + r[j + 1:] for r in rows[1:]]
            sub = _det_cofactor(minor)
            total = total + e * sub if sign > 0 else total - e * sub
        sign = -sign
    return total


def _det_bareiss(rows: list) -> MultiPoly:
    n = len(rows)
    a = [list(r) for r in rows]
    sign = 1
    prev = _ONE
    for k in range(n - 1):
        if not a[k][k]:
            for r in range(k + 1, n):
                if a[r][k]:
                    a[k], a[r] = a[r], a[k]
                    sign = -sign
                    break
            else:
                # The whole pivot column vanishes below row k, so the
                # first k+1 columns are rank deficient: det = 0.
                return _ZERO
        pivot = a[k][k]
        for i in range(k + 1, n):
            aik = a[i][k]
            row_i = a[i]
            row_k = a[k]
            if aik:
                for j in range(k + 1, n):
                    num = pivot * row_i[j] - aik * row_k[j]
                    row_i[j] = num.exact_divide(prev) if k else num
            elif k:
                for j in range(k + 1, n):
                    if row_i[j]:
                        row_i[j] = (pivot * row_i[j]).exact_divide(prev)
            else:
                for j in range(k + 1, n):
                    if row_i[j]:
                        row_i[j] = pivot * row_i[j]
            row_i[k] = _ZERO
        prev = pivot
    d = a[n - 1][n - 1]
    return d if sign > 0 else -d


def det(m: PolyMatrix) -> MultiPoly:
    """Exact determinant (Bareiss; cofactor expansion for dimension <= 4)."""
    if m.rows != m.cols:
        raise ValueError(f"determinant of a {m.rows}x{m.cols} matrix")
    if m.rows <= 4:
        return _det_cofactor([list(r) for r in m.entries])
    return _det_bareiss(m.entries)


def resultant(f: UniPolyView, g: UniPolyView) -> MultiPoly:
    """det of the Sylvester matrix of f and g (in their common variable)."""
    return det(sylvester(f, g))


def generic_P(n: int) -> UniPolyView:
    """The monic family x^n + a1 x^(n-1) + ... + an."""
    if n < 2:
        raise BadDegreeError(f"generic family needs degree >= 2, got {n}")
    coeffs = [MultiPoly.var(a_var(n - i)) for i in range(n)] + [_ONE]
    return UniPolyView(X_VAR, tuple(coeffs), n)


def P_k(n: int, k: int) -> UniPolyView:
    """P - x P'/(n-k) for k <= n-1 (zero coefficient at x^(n-k)); P' for k = n.

    The coefficient of x^(n-j) is a_j (j-k)/(n-k), so the leading
    coefficient is -k/(n-k) and a_k itself never appears.
    """
    if not 1 <= k <= n:
        raise BadIndexError(f"k must be in [1, {n}], got {k}")
    if n < 2:
        raise BadDegreeError(f"generic family needs degree >= 2, got {n}")
    if k == n:
        return generic_P(n).derivative()
    coeffs = []
    for i in range(n):  # coefficient of x^i, i.e. j = n - i
        j = n - i
        factor = Fraction(j - k, n - k)
        coeffs.append(MultiPoly.var(a_var(j)) * factor if factor else _ZERO)
    coeffs.append(MultiPoly.const(Fraction(-k, n - k)))
    return UniPolyView(X_VAR, tuple(coeffs), n)


_R_CACHE: dict = {}
_VK_CACHE: dict = {}
_DTILDE_CACHE: dict = {}
_DERIV_RES_CACHE: dict = {}


def discriminant_R(n: int) -> MultiPoly:
    """Res(P, P', x) for the generic monic family; memoized per n."""
    r = _R_CACHE.get(n)
    if r is None:
        p = generic_P(n)
        r = resultant(p, p.derivative())
        _R_CACHE[n] = r
    return r


def V_k(n: int, k: int) -> MultiPoly:
    """Res(P_k, P_k', x); for k = n-1 that resultant exactly divided by a_n.

    A NotDivisibleError out of the k = n-1 branch is a failure of the
    forced-factor claim, not a user error.
    """
    key = (n, k)
    v = _VK_CACHE.get(key)
    if v is None:
        pk = P_k(n, k)
        v = resultant(pk, pk.derivative())
        if k == n - 1:
            v = v.exact_divide(MultiPoly.var(a_var(n)))
        _VK_CACHE[key] = v
    return v


def deriv_resultant(n: int) -> MultiPoly:
    """Res(P', P'', x); vanishes exactly when P' has a multiple root."""
    r = _DERIV_RES_CACHE.get(n)
    if r is None:
        dp = generic_P(n).derivative()
        r = resultant(dp, dp.derivative())
        _DERIV_RES_CACHE[n] = r
    return r


def dtilde_degree(n: int, k: int) -> int:
    """Declared degree of R in a_k: n for k <= n-1, n-1 for k = n."""
    return n if k <= n - 1 else n - 1


def D_tilde(n: int, k: int) -> MultiPoly:
    """The double resultant Res(R, dR/da_k, a_k).

    Declared degrees come from the degree statement about R (n in a_k for
    k <= n-1, n-1 in a_n), not from runtime inspection; a mismatch raises
    DishonestDegreeError and is reported as a claim failure by callers.
    """
    if n < 2:
        raise BadDegreeError(f"generic family needs degree >= 2, got {n}")
    if not 1 <= k <= n:
        raise BadIndexError(f"k must be in [1, {n}], got {k}")
    key = (n, k)
    d = _DTILDE_CACHE.get(key)
    if d is None:
        r = discriminant_R(n)
        v = a_var(k)
        deg = dtilde_degree(n, k)
        rv = UniPolyView.from_multipoly(r, v, declared_degree=deg)
        dv = UniPolyView.from_multipoly(r.derivative(v), v, declared_degree=deg - 1)
        d = resultant(rv, dv)
        _DTILDE_CACHE[key] = d
    return d
