"""Exact sparse multivariate polynomial arithmetic over the rationals.

A polynomial is a finite map from monomials to nonzero rational
coefficients.  Monomials are stored sparsely as tuples of
``(VarId, exponent)`` pairs with positive exponents, sorted by the
variable order; the zero polynomial is the empty map.  Coefficients are
Python ``int`` where possible and ``fractions.Fraction`` otherwise
(``int`` and integral ``Fraction`` compare and hash equal, so the mixed
representation is transparent to callers).

Variables come from a fixed named universe:

* ``a1 .. an``   -- coefficients of the monic polynomial family,
* ``x``          -- the indeterminate,
* ``lambda``     -- a distinguished (double) root,
* ``b1 .. b_{n-2}`` -- coefficients of a quotient factor,
* arbitrary named generics.

The total order on variables is kind-major (kinds compare as the
strings ``"a" < "b" < "generic" < "lambda" < "x"``), index-minor, with
generic names breaking ties.  It never changes within a process.
Monomials compare under the graded-lexicographic order induced by this
variable order: total degree first, then, at the smallest variable
where the exponents differ, the larger exponent wins.

All values are immutable after construction and all operations are
pure, so everything here is safe to share between threads.
"""

from __future__ import annotations

import heapq
import json
import re
from fractions import Fraction
from typing import Iterable, Mapping, NamedTuple, Optional, Union

NEG_INF = float("-inf")

Coeff = Union[int, Fraction]


class NotDivisibleError(ArithmeticError):
    """Exact division was requested but the divisor does not divide."""


class ZeroPolynomialError(ValueError):
    """The operation is undefined for the zero polynomial."""


class UnboundVariableError(ValueError):
    """Evaluation point does not bind every variable of the polynomial."""


class PolyJSONError(ValueError):
    """Malformed polynomial JSON (zero coefficient, duplicate monomial, ...)."""


class VarId(NamedTuple):
    """A variable of the fixed universe.

    ``kind`` is one of ``"a"``, ``"b"``, ``"x"``, ``"lambda"``,
    ``"generic"``; ``index`` is the 1-based index for ``a``/``b`` kinds
    (0 otherwise); ``name`` is only used by generics.  Tuple comparison
    yields exactly the documented kind-major, index-minor order.
    """

    kind: str
    index: int
    name: str = ""


def a_var(i: int) -> VarId:
    if i < 1:
        raise ValueError(f"a-index must be >= 1, got {i}")
    return VarId("a", i)


def b_var(i: int) -> VarId:
    if i < 1:
        raise ValueError(f"b-index must be >= 1, got {i}")
    return VarId("b", i)


X_VAR = VarId("x", 0)
LAMBDA_VAR = VarId("lambda", 0)


def generic_var(name: str) -> VarId:
    if not name:
        raise ValueError("generic variable needs a nonempty name")
    return VarId("generic", 0, name)


_A_OR_B_NAME = re.compile(r"^([ab])([1-9][0-9]*)$")


def var_name(v: VarId) -> str:
    """Canonical string form used by the JSON format."""
    if v.kind in ("a", "b"):
        return f"{v.kind}{v.index}"
    if v.kind == "x":
        return "x"
    if v.kind == "lambda":
        return "lambda"
    return v.name


def var_from_name(s: str) -> VarId:
    m = _A_OR_B_NAME.match(s)
    if m:
        return VarId(m.group(1), int(m.group(2)))
    if s == "x":
        return X_VAR
    if s == "lambda":
        return LAMBDA_VAR
    return generic_var(s)


# A monomial is a tuple of (VarId, exponent) pairs, exponents > 0,
# sorted ascending by VarId.  () is the constant monomial.
Monomial = tuple

# Cache of graded-lex sort keys.  min() under this key is the leading
# (grlex-largest) monomial; ascending sorts are grlex-descending.
_GRLEX_KEYS: dict = {}


def _grlex_neg_key(m: Monomial):
    k = _GRLEX_KEYS.get(m)
    if k is None:
        k = (-sum(p[1] for p in m), tuple((p[0], -p[1]) for p in m))
        _GRLEX_KEYS[m] = k
    return k


def mono_cmp(m1: Monomial, m2: Monomial) -> int:
    """Graded-lex comparison: -1, 0 or 1 as m1 <, ==, > m2."""
    if m1 == m2:
        return 0
    return -1 if _grlex_neg_key(m1) > _grlex_neg_key(m2) else 1


def _mono_mul(m1: Monomial, m2: Monomial) -> Monomial:
    if not m1:
        return m2
    if not m2:
        return m1
    out = []
    i = j = 0
    n1, n2 = len(m1), len(m2)
    while i < n1 and j < n2:
        p1 = m1[i]
        p2 = m2[j]
        v1 = p1[0]
        v2 = p2[0]
        if v1 == v2:
            out.append((v1, p1[1] + p2[1]))
            i += 1
            j += 1
        elif v1 < v2:
            out.append(p1)
            i += 1
        else:
            out.append(p2)
            j += 1
    out.extend(m1[i:])
    out.extend(m2[j:])
    return tuple(out)


def _mono_div(m: Monomial, d: Monomial) -> Optional[Monomial]:
    """m / d, or None when d does not divide m."""
    if not d:
        return m
    out = []
    i = 0
    nm = len(m)
    for vd, ed in d:
        while i < nm and m[i][0] < vd:
            out.append(m[i])
            i += 1
        if i >= nm or m[i][0] != vd:
            return None
        e = m[i][1]
        if e < ed:
            return None
        if e > ed:
            out.append((vd, e - ed))
        i += 1
    out.extend(m[i:])
    return tuple(out)


def _mono_from_exps(exps: Mapping[VarId, int]) -> Monomial:
    pairs = []
    for v, e in exps.items():
        if not isinstance(e, int) or isinstance(e, bool) or e < 0:
            raise ValueError(f"exponent of {var_name(v)} must be a nonnegative int")
        if e:
            pairs.append((v, e))
    pairs.sort()
    return tuple(pairs)


def _div_coeff(a: Coeff, b: Coeff) -> Coeff:
    if type(a) is int and type(b) is int:
        q, r = divmod(a, b)
        return q if r == 0 else Fraction(a, b)
    return Fraction(a) / Fraction(b)


def _norm_coeff(c: Coeff) -> Coeff:
    if isinstance(c, Fraction) and c.denominator == 1:
        return c.numerator
    return c


_COEFF_RE = re.compile(r"^-?[0-9]+(/[0-9]+)?$")


def coeff_to_str(c: Coeff) -> str:
    c = _norm_coeff(c)
    if isinstance(c, int):
        return str(c)
    return f"{c.numerator}/{c.denominator}"


def coeff_from_str(s: str) -> Coeff:
    if not isinstance(s, str) or not _COEFF_RE.match(s):
        raise PolyJSONError(f"bad coefficient string {s!r} (expected 'p' or 'p/q')")
    c = Fraction(s)
    return _norm_coeff(c)


class MultiPoly:
    """Immutable sparse polynomial in canonical form (no zero terms)."""

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Mapping[Monomial, Coeff]):
        # Trusted constructor: terms must already be canonical.
        self._terms = dict(terms)
        self._hash = None

    # -- construction -------------------------------------------------

    @classmethod
    def zero(cls) -> "MultiPoly":
        return _ZERO

    @classmethod
    def one(cls) -> "MultiPoly":
        return _ONE

    @classmethod
    def const(cls, c: Coeff) -> "MultiPoly":
        if not c:
            return _ZERO
        return cls({(): c})

    @classmethod
    def var(cls, v: VarId) -> "MultiPoly":
        return cls({((v, 1),): 1})

    @classmethod
    def from_terms(cls, terms: Iterable[tuple[Mapping[VarId, int], Coeff]]) -> "MultiPoly":
        """Build from (exponent-map, coefficient) pairs, merging duplicates."""
        acc: dict = {}
        for exps, c in terms:
            if not c:
                continue
            m = _mono_from_exps(exps)
            cur = acc.get(m)
            if cur is None:
                acc[m] = c
            else:
                cur = cur + c
                if cur:
                    acc[m] = cur
                else:
                    del acc[m]
        return cls(acc)

    # -- basic protocol ------------------------------------------------

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, MultiPoly):
            return self._terms == other._terms
        if isinstance(other, (int, Fraction)):
            return self._terms == ({(): other} if other else {})
        return NotImplemented

    def __hash__(self) -> int:
        h = self._hash
        if h is None:
            h = hash(frozenset(self._terms.items()))
            self._hash = h
        return h

    def __len__(self) -> int:
        return len(self._terms)

    def terms(self) -> list[tuple[Monomial, Coeff]]:
        """Terms in canonical (grlex-descending) order."""
        return sorted(self._terms.items(), key=lambda t: _grlex_neg_key(t[0]))

    def coefficient(self, exps: Mapping[VarId, int]) -> Coeff:
        """Coefficient of the given monomial (0 when absent)."""
        return self._terms.get(_mono_from_exps(exps), 0)

    def variables(self) -> frozenset:
        return frozenset(v for m in self._terms for v, _ in m)

    def total_degree(self):
        if not self._terms:
            return NEG_INF
        return max(sum(e for _, e in m) for m in self._terms)

    def is_constant(self) -> bool:
        return not self._terms or (len(self._terms) == 1 and () in self._terms)

    def as_constant(self) -> Coeff:
        if not self._terms:
            return 0
        if len(self._terms) == 1 and () in self._terms:
            return self._terms[()]
        raise ValueError("polynomial is not constant")

    # -- ring operations -----------------------------------------------

    @staticmethod
    def _coerce(other) -> Optional["MultiPoly"]:
        if isinstance(other, MultiPoly):
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return MultiPoly.const(other)
        return None

    def __add__(self, other):
        g = self._coerce(other)
        if g is None:
            return NotImplemented
        small, big = self._terms, g._terms
        if len(small) > len(big):
            small, big = big, small
        out = dict(big)
        for m, c in small.items():
            cur = out.get(m)
            if cur is None:
                out[m] = c
            else:
                cur = cur + c
                if cur:
                    out[m] = cur
                else:
                    del out[m]
        return MultiPoly(out)

    __radd__ = __add__

    def __neg__(self):
        return MultiPoly({m: -c for m, c in self._terms.items()})

    def __sub__(self, other):
        g = self._coerce(other)
        if g is None:
            return NotImplemented
        out = dict(self._terms)
        for m, c in g._terms.items():
            cur = out.get(m)
            if cur is None:
                out[m] = -c
            else:
                cur = cur - c
                if cur:
                    out[m] = cur
                else:
                    del out[m]
        return MultiPoly(out)

    def __rsub__(self, other):
        g = self._coerce(other)
        if g is None:
            return NotImplemented
        return g - self

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            if not other:
                return _ZERO
            return MultiPoly({m: c * other for m, c in self._terms.items()})
        if not isinstance(other, MultiPoly):
            return NotImplemented
        t1, t2 = self._terms, other._terms
        if not t1 or not t2:
            return _ZERO
        if len(t1) > len(t2):
            t1, t2 = t2, t1
        out: dict = {}
        get = out.get
        items2 = list(t2.items())
        for m1, c1 in t1.items():
            for m2, c2 in items2:
                m = _mono_mul(m1, m2)
                cur = get(m)
                if cur is None:
                    out[m] = c1 * c2
                else:
                    cur = cur + c1 * c2
                    if cur:
                        out[m] = cur
                    else:
                        del out[m]
        return MultiPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative int")
        result = _ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            n >>= 1
            if n:
                base = base * base
        return result

    # -- calculus and structure -----------------------------------------

    def derivative(self, v: VarId) -> "MultiPoly":
        """Formal partial derivative with respect to v."""
        out: dict = {}
        for m, c in self._terms.items():
            for i, (mv, e) in enumerate(m):
                if mv == v:
                    dm = m[:i] + m[i + 1:] if e == 1 else m[:i] + ((mv, e - 1),) + m[i + 1:]
                    cur = out.get(dm)
                    cc = c * e
                    if cur is None:
                        out[dm] = cc
                    else:
                        cur = cur + cc
                        if cur:
                            out[dm] = cur
                        else:
                            del out[dm]
                    break
        return MultiPoly(out)

    def degree_in_var(self, v: VarId):
        """Degree in v; NEG_INF for the zero polynomial."""
        if not self._terms:
            return NEG_INF
        best = 0
        for m in self._terms:
            for mv, e in m:
                if mv == v:
                    if e > best:
                        best = e
                    break
        return best

    def coeffs_in_var(self, v: VarId) -> list["MultiPoly"]:
        """[c0, ..., cd] with self = sum(ci * v**i); [0] for the zero poly."""
        if not self._terms:
            return [_ZERO]
        buckets: dict = {}
        for m, c in self._terms.items():
            e = 0
            rest = m
            for i, (mv, me) in enumerate(m):
                if mv == v:
                    e = me
                    rest = m[:i] + m[i + 1:]
                    break
            buckets.setdefault(e, {})[rest] = c
        d = max(buckets)
        return [MultiPoly(buckets.get(i, {})) for i in range(d + 1)]

    def leading_coeff_in_var(self, v: VarId) -> "MultiPoly":
        return self.coeffs_in_var(v)[-1]

    def divisibility_order(self, v: VarId) -> int:
        """Largest m with v**m dividing self (min exponent over the support)."""
        if not self._terms:
            raise ZeroPolynomialError("divisibility order of the zero polynomial")
        best = None
        for m in self._terms:
            e = 0
            for mv, me in m:
                if mv == v:
                    e = me
                    break
            if e == 0:
                return 0
            if best is None or e < best:
                best = e
        return best

    def exact_divide(self, g: "MultiPoly") -> "MultiPoly":
        """Quotient self / g; raises NotDivisibleError when inexact."""
        if not isinstance(g, MultiPoly):
            g = MultiPoly.const(g)
        if not g:
            raise ZeroPolynomialError("division by the zero polynomial")
        if not self._terms:
            return _ZERO
        gterms = g._terms
        if len(gterms) == 1:
            ((gm, gc),) = gterms.items()
            out = {}
            for m, c in self._terms.items():
                qm = _mono_div(m, gm)
                if qm is None:
                    raise NotDivisibleError("monomial divisor does not divide")
                out[qm] = _div_coeff(c, gc)
            return MultiPoly(out)
        gl = min(gterms, key=_grlex_neg_key)
        gc = gterms[gl]
        gtail = [(m, c) for m, c in gterms.items() if m != gl]
        rem = dict(self._terms)
        heap = [(_grlex_neg_key(m), m) for m in rem]
        heapq.heapify(heap)
        quot: dict = {}
        push = heapq.heappush
        pop = heapq.heappop
        while heap:
            _, m = pop(heap)
            c = rem.get(m)
            if not c:
                continue
            qm = _mono_div(m, gl)
            if qm is None:
                raise NotDivisibleError("leading term does not divide")
            qc = _div_coeff(c, gc)
            quot[qm] = qc
            del rem[m]
            for gm2, gc2 in gtail:
                mm = _mono_mul(qm, gm2)
                cur = rem.get(mm)
                if cur is None:
                    rem[mm] = -qc * gc2
                    push(heap, (_grlex_neg_key(mm), mm))
                else:
                    cur = cur - qc * gc2
                    if cur:
                        rem[mm] = cur
                    else:
                        del rem[mm]
        if rem:
            raise NotDivisibleError("nonzero remainder")
        return MultiPoly(quot)

    def substitute(self, bindings: Mapping[VarId, object]) -> "MultiPoly":
        """Simultaneous exact substitution of polynomials for variables.

        Evaluated by a Horner scheme, one substituted variable at a time,
        to bound intermediate blowup.  When binding images mention bound
        variables, the bound variables are first renamed to fresh
        temporaries so that the substitution stays simultaneous.
        """
        if not bindings:
            return self
        images = {}
        for v, g in bindings.items():
            img = self._coerce(g)
            if img is None:
                raise TypeError(f"binding for {var_name(v)} is not a polynomial or rational")
            images[v] = img
        bound = set(images)
        overlap = any(img.variables() & bound for img in images.values())
        f = self
        if overlap:
            temps = {v: generic_var(f"__sub{i}__") for i, v in enumerate(sorted(bound))}
            f = f._rename(temps)
            images = {temps[v]: img for v, img in images.items()}
        for v in sorted(images):
            f = f._substitute_one(v, images[v])
        return f

    def _rename(self, mapping: Mapping[VarId, VarId]) -> "MultiPoly":
        out: dict = {}
        for m, c in self._terms.items():
            nm = tuple(sorted((mapping.get(v, v), e) for v, e in m))
            out[nm] = c
        return MultiPoly(out)

    def _substitute_one(self, v: VarId, g: "MultiPoly") -> "MultiPoly":
        coeffs = self.coeffs_in_var(v)
        if len(coeffs) == 1:
            return coeffs[0]
        acc = coeffs[-1]
        for c in reversed(coeffs[:-1]):
            acc = acc * g + c
        return acc

    def evaluate(self, point: Mapping[VarId, Coeff]) -> Coeff:
        """Exact value at a full rational point."""
        total: Coeff = 0
        for m, c in self._terms.items():
            val = c
            for v, e in m:
                try:
                    x = point[v]
                except KeyError:
                    raise UnboundVariableError(
                        f"variable {var_name(v)} is not bound"
                    ) from None
                val = val * x ** e
            total = total + val
        return _norm_coeff(total) if isinstance(total, Fraction) else total

    def qh_degree(self, w: "WeightVector") -> Optional[int]:
        """Common weighted degree of all monomials, or None if mixed."""
        if not self._terms:
            raise ZeroPolynomialError("quasi-homogeneous degree of the zero polynomial")
        deg = None
        for m in self._terms:
            d = sum(e * w[v] for v, e in m)
            if deg is None:
                deg = d
            elif d != deg:
                return None
        return deg

    # -- rendering -------------------------------------------------------

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for m, c in self.terms():
            c = _norm_coeff(c)
            mono = "*".join(
                var_name(v) if e == 1 else f"{var_name(v)}^{e}" for v, e in m
            )
            if not mono:
                body = coeff_to_str(abs(c))
            elif abs(c) == 1:
                body = mono
            else:
                body = f"{coeff_to_str(abs(c))}*{mono}"
            sign = "-" if c < 0 else "+"
            parts.append((sign, body))
        first_sign, first_body = parts[0]
        out = ("-" if first_sign == "-" else "") + first_body
        for sign, body in parts[1:]:
            out += f" {sign} {body}"
        return out

    def __repr__(self) -> str:
        return f"MultiPoly({self})"


_ZERO = MultiPoly({})
_ONE = MultiPoly({(): 1})


class WeightVector:
    """Nonnegative integer weights on variables (quasi-homogeneous grading)."""

    __slots__ = ("_weights",)

    def __init__(self, weights: Mapping[VarId, int]):
        for v, w in weights.items():
            if not isinstance(w, int) or isinstance(w, bool) or w < 0:
                raise ValueError(f"weight of {var_name(v)} must be a nonnegative int")
        self._weights = dict(weights)

    @classmethod
    def discriminant(cls, n: int) -> "WeightVector":
        """The grading with weight(a_j) = j, for j = 1..n."""
        return cls({a_var(j): j for j in range(1, n + 1)})

    def __getitem__(self, v: VarId) -> int:
        try:
            return self._weights[v]
        except KeyError:
            raise KeyError(f"no weight assigned to {var_name(v)}") from None

    def __contains__(self, v: VarId) -> bool:
        return v in self._weights

    def items(self):
        return self._weights.items()

    def __repr__(self) -> str:
        inner = ", ".join(f"{var_name(v)}: {w}" for v, w in sorted(self._weights.items()))
        return f"WeightVector({{{inner}}})"


# -- JSON interchange ---------------------------------------------------
#
# {"vars": ["a1", "a2"], "terms": [{"coeff": "p/q", "exps": {"a1": 3}}]}
# Coefficients are exact decimal-free strings.  Parsing rejects zero
# coefficients and duplicate monomials.


def poly_to_obj(f: MultiPoly, universe: Optional[Iterable[VarId]] = None) -> dict:
    vs = set(f.variables())
    if universe is not None:
        universe = set(universe)
        if not vs <= universe:
            missing = ", ".join(var_name(v) for v in sorted(vs - universe))
            raise ValueError(f"universe does not cover variables: {missing}")
        vs = universe
    names = [var_name(v) for v in sorted(vs)]
    terms = []
    for m, c in f.terms():
        terms.append(
            {
                "coeff": coeff_to_str(c),
                "exps": {var_name(v): e for v, e in m},
            }
        )
    return {"vars": names, "terms": terms}


def poly_from_obj(obj: object) -> MultiPoly:
    if not isinstance(obj, dict):
        raise PolyJSONError("polynomial JSON must be an object")
    names = obj.get("vars")
    terms = obj.get("terms")
    if not isinstance(names, list) or not all(isinstance(s, str) for s in names):
        raise PolyJSONError('"vars" must be a list of variable names')
    if len(set(names)) != len(names):
        raise PolyJSONError("duplicate variable names")
    if not isinstance(terms, list):
        raise PolyJSONError('"terms" must be a list')
    allowed = {var_from_name(s) for s in names}
    acc: dict = {}
    for t in terms:
        if not isinstance(t, dict) or "coeff" not in t or "exps" not in t:
            raise PolyJSONError('each term needs "coeff" and "exps"')
        c = coeff_from_str(t["coeff"])
        if c == 0:
            raise PolyJSONError("zero coefficient in term")
        exps = t["exps"]
        if not isinstance(exps, dict):
            raise PolyJSONError('"exps" must be an object')
        pairs = {}
        for s, e in exps.items():
            v = var_from_name(s)
            if v not in allowed:
                raise PolyJSONError(f"variable {s!r} not declared in vars")
            if not isinstance(e, int) or isinstance(e, bool) or e <= 0:
                raise PolyJSONError(f"exponent of {s!r} must be a positive int")
            if v in pairs:
                raise PolyJSONError(f"variable {s!r} repeated in exps")
            pairs[v] = e
        m = _mono_from_exps(pairs)
        if m in acc:
            raise PolyJSONError("duplicate monomial in terms")
        acc[m] = c
    return MultiPoly(acc)


def poly_to_json(f: MultiPoly, universe: Optional[Iterable[VarId]] = None) -> str:
    return json.dumps(poly_to_obj(f, universe), indent=2) + "\n"


def poly_from_json(s: str) -> MultiPoly:
    try:
        obj = json.loads(s)
    except json.JSONDecodeError as e:
        raise PolyJSONError(f"invalid JSON: {e}") from None
    return poly_from_obj(obj)
