"""Sound, possibly-inconclusive irreducibility certificates.

Two mechanisms:

* ``qh_pure_power_certificate`` -- for a quasi-homogeneous polynomial
  containing pure-power monomials of two variables, enumerate every way
  the weighted degree could split across two nonconstant
  quasi-homogeneous factors; if no split is arithmetically consistent
  with both pure powers (and optionally with a third, mixed monomial),
  no factorization exists.  This relies on two standard facts that are
  documented here and not rechecked at runtime: a factor of a
  quasi-homogeneous polynomial under positive weights is itself
  quasi-homogeneous, and such a factor of positive weighted degree has
  no constant term, so a pure-power monomial of the product forces
  pure-power monomials in both factors.

* ``specialization_certificate`` -- substitute integers for all
  variables but one, keep the specialization only when the degree is
  preserved, and certify the resulting univariate integer polynomial
  irreducible modulo a prime not dividing its leading coefficient.
  Combined with a primitivity certificate for the multivariate input,
  this is sound by the Gauss lemma.

``Proven`` is emitted only when every soundness condition holds;
``Inconclusive`` carries no claim in either direction.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional, Sequence

from .polyring import MultiPoly, VarId, WeightVector, a_var, var_name
from .resultant import V_k, discriminant_R

PROVEN = "Proven"
INCONCLUSIVE = "Inconclusive"


class NotQuasiHomogeneousError(ValueError):
    """The input is not quasi-homogeneous under the given weights."""


class MissingPurePowerError(ValueError):
    """A required pure-power (or mixed pivot) monomial is absent."""


class BadPrimeError(ValueError):
    """The modulus is not prime or divides the leading coefficient."""


class DegreeZeroInVError(ValueError):
    """The polynomial is constant in the chosen variable."""


@dataclass(frozen=True)
class Certificate:
    verdict: str  # Proven | Inconclusive
    method: str  # QhPurePower | Specialization | DegreeOne
    witness: dict = field(default_factory=dict)
    note: str = ""

    @property
    def proven(self) -> bool:
        return self.verdict == PROVEN

    def to_obj(self) -> dict:
        return {
            "verdict": self.verdict,
            "method": self.method,
            "witness": self.witness,
            "note": self.note,
        }


def _pure_power_exponent(f: MultiPoly, v: VarId) -> Optional[int]:
    """Exponent of the unique pure-power monomial c * v^d in f, if any."""
    for m, _ in f._terms.items():
        if len(m) == 1 and m[0][0] == v:
            return m[0][1]
    return None


def _mixed_monomial_exponent(f: MultiPoly, r: VarId, t: VarId) -> Optional[int]:
    """s such that f contains c * r^s * t (t-exponent exactly 1), if any."""
    for m, _ in f._terms.items():
        if len(m) == 2:
            d = dict(m)
            if set(d) == {r, t} and d[t] == 1:
                return d[r]
    return None


def qh_pure_power_certificate(
    f: MultiPoly,
    w: WeightVector,
    p: VarId,
    q: VarId,
    refinement: Optional[tuple] = None,
) -> Certificate:
    """Irreducibility certificate from the pure powers of p and q in f.

    Enumerates the candidate quasi-homogeneous degree splits h1 + h2 of a
    hypothetical factorization and rules each out arithmetically.  The
    optional ``refinement`` names a pair (r, t) such that f contains a
    monomial c * r^s * t; a split survives only if that monomial can also
    decompose across the factors.
    """
    if not f:
        raise NotQuasiHomogeneousError("zero polynomial")
    for v in f.variables():
        if w[v] <= 0:
            raise NotQuasiHomogeneousError(
                f"variable {var_name(v)} needs a positive weight"
            )
    total = f.qh_degree(w)
    if total is None:
        raise NotQuasiHomogeneousError("mixed weighted degrees")
    d1 = _pure_power_exponent(f, p)
    d2 = _pure_power_exponent(f, q)
    if d1 is None or d2 is None:
        missing = var_name(p) if d1 is None else var_name(q)
        raise MissingPurePowerError(f"no pure power of {missing} in the input")
    wp, wq = w[p], w[q]

    surviving = []
    for h1 in range(1, total):
        if h1 % wp or h1 % wq:
            continue
        k1 = h1 // wp
        l1 = h1 // wq
        if 1 <= k1 <= d1 - 1 and 1 <= l1 <= d2 - 1:
            surviving.append(h1)

    refinement_info = None
    if refinement is not None and surviving:
        r, t = refinement
        s = _mixed_monomial_exponent(f, r, t)
        if s is None:
            raise MissingPurePowerError(
                f"no monomial {var_name(r)}^s * {var_name(t)} in the input"
            )
        wr, wt = w[r], w[t]
        still = []
        for h1 in surviving:
            feasible = False
            for t_in_first in (True, False):
                ha = h1 if t_in_first else total - h1
                hb = total - ha
                # r^s1 * t in the factor of degree ha, r^s2 in the other.
                if (ha - wt) % wr == 0 and hb % wr == 0:
                    s1 = (ha - wt) // wr
                    s2 = hb // wr
                    if s1 >= 0 and s2 >= 0 and s1 + s2 == s:
                        feasible = True
                        break
            if feasible:
                still.append(h1)
        refinement_info = {
            "pair": [var_name(r), var_name(t)],
            "mixed_exponent": s,
            "splits_killed": [h for h in surviving if h not in still],
        }
        surviving = still

    witness = {
        "qh_degree": total,
        "pure_powers": {var_name(p): d1, var_name(q): d2},
        "weights": {var_name(p): wp, var_name(q): wq},
        "surviving_splits": surviving,
    }
    if refinement_info:
        witness["refinement"] = refinement_info
    if surviving:
        return Certificate(
            INCONCLUSIVE,
            "QhPurePower",
            witness,
            note="degree splits survive the enumeration",
        )
    return Certificate(PROVEN, "QhPurePower", witness)


# -- univariate arithmetic over F_p (dense ascending coefficient lists) ----


def _pnorm(f: list) -> list:
    while f and f[-1] == 0:
        f.pop()
    return f


def _pmul(f: list, g: list, p: int) -> list:
    if not f or not g:
        return []
    out = [0] * (len(f) + len(g) - 1)
    for i, a in enumerate(f):
        if a:
            for j, b in enumerate(g):
                out[i + j] = (out[i + j] + a * b) % p
    return _pnorm(out)


def _pmod(f: list, g: list, p: int) -> list:
    f = f[:]
    dg = len(g) - 1
    inv = pow(g[-1], -1, p)
    while len(f) - 1 >= dg and f:
        c = f[-1] * inv % p
        shift = len(f) - 1 - dg
        for i, b in enumerate(g):
            f[shift + i] = (f[shift + i] - c * b) % p
        _pnorm(f)
    return f


def _pgcd(f: list, g: list, p: int) -> list:
    while g:
        f, g = g, _pmod(f, g, p)
    return f


def _is_small_prime(p: int) -> bool:
    if p < 2:
        return False
    d = 2
    while d * d <= p:
        if p % d == 0:
            return False
        d += 1
    return True


def modp_irreducible(coeffs: Sequence[int], prime: int) -> bool:
    """True iff the integer polynomial is irreducible over F_prime.

    Distinct-degree sieve: f of degree d is irreducible iff it shares no
    factor with x^(p^i) - x for i = 1 .. d // 2, since any proper
    factorization contains an irreducible factor of degree <= d // 2.
    The Frobenius powers are computed by repeated squaring modulo f.
    """
    if not _is_small_prime(prime):
        raise BadPrimeError(f"{prime} is not prime")
    f = [c % prime for c in coeffs]
    while f and f[-1] == 0:
        f.pop()
    if len(f) != len(coeffs) or not f:
        raise BadPrimeError(f"{prime} divides the leading coefficient")
    d = len(f) - 1
    if d == 0:
        return False
    if d == 1:
        return True
    r = [0, 1]  # x
    for _ in range(d // 2):
        # r <- r^p mod f, so after i steps r = x^(p^i) mod f
        e = prime
        acc = [1]
        base = r[:]
        while e:
            if e & 1:
                acc = _pmod(_pmul(acc, base, prime), f, prime)
            e >>= 1
            if e:
                base = _pmod(_pmul(base, base, prime), f, prime)
        r = acc
        diff = r + [0] * (2 - len(r))
        diff[1] = (diff[1] - 1) % prime
        g = _pgcd(f[:], _pnorm(diff), prime)
        if len(g) - 1 >= 1:
            return False
    return True


# -- specialization certificates -------------------------------------------

_PRIME_STREAM = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53)
SPECIALIZATION_RANGE = 20  # integers drawn from [-20, 20]
PRIMES_TO_TRY = 8


def _first_primes_not_dividing(lc: int, count: int) -> list:
    out = []
    for p in _PRIME_STREAM:
        if lc % p:
            out.append(p)
            if len(out) == count:
                break
    return out


def _clear_denominators(coeffs: Sequence) -> list:
    """Scale rational coefficients to a primitive integer list."""
    fracs = [Fraction(c) for c in coeffs]
    lcm = 1
    for c in fracs:
        d = c.denominator
        g = _gcd_int(lcm, d)
        lcm = lcm // g * d
    ints = [int(c * lcm) for c in fracs]
    content = 0
    for c in ints:
        content = _gcd_int(content, abs(c))
    if content > 1:
        ints = [c // content for c in ints]
    return ints


def _gcd_int(a: int, b: int) -> int:
    while b:
        a, b = b, a % b
    return a


def _uni_gcd_is_one(f: list, g: list) -> bool:
    """gcd over Q[u] of two nonzero rational coefficient lists."""
    f = [Fraction(c) for c in f]
    g = [Fraction(c) for c in g]

    def norm(h):
        while h and h[-1] == 0:
            h.pop()
        return h

    def rem(a, b):
        a = a[:]
        db = len(b) - 1
        while a and len(a) - 1 >= db:
            c = a[-1] / b[-1]
            shift = len(a) - 1 - db
            for i, bc in enumerate(b):
                a[shift + i] -= c * bc
            norm(a)
        return a

    f, g = norm(f), norm(g)
    while g:
        f, g = g, rem(f, g)
    return len(f) == 1


def _certify_primitive(
    f: MultiPoly, v: VarId, rng: random.Random
) -> Optional[dict]:
    """Certificate that f, as a polynomial in v, has unit content.

    Route (a): some v-coefficient is a nonzero rational constant.
    Route (b): two v-coefficients c_i, c_j such that for EVERY shared
    variable u, an integer specialization of the other variables keeps
    both u-degrees intact and makes gcd(c_i, c_j) = 1 in Q[u].  Any
    nonconstant common divisor d would keep its positive u-degree under
    a degree-preserving specialization for the u it involves, so it
    would show up in that gcd.
    """
    coeffs = f.coeffs_in_var(v)
    for i, c in enumerate(coeffs):
        if c and c.is_constant():
            return {"route": "constant_coefficient", "coefficient_power": i}
    nonzero = [(i, c) for i, c in enumerate(coeffs) if c]
    for i in range(len(nonzero)):
        for j in range(i + 1, len(nonzero)):
            pi, ci = nonzero[i]
            pj, cj = nonzero[j]
            shared = sorted(ci.variables() & cj.variables())
            if not shared:
                # Disjoint supports: a common divisor would have to
                # involve no variable at all, hence be a unit.
                return {
                    "route": "disjoint_coefficients",
                    "coefficient_powers": [pi, pj],
                }
            rounds = []
            ok = True
            for u in shared:
                found = None
                others = sorted((ci.variables() | cj.variables()) - {u})
                for _ in range(60):
                    point = {x: rng.randint(-SPECIALIZATION_RANGE, SPECIALIZATION_RANGE) for x in others}
                    si = ci.substitute(point)
                    sj = cj.substitute(point)
                    if not si or not sj:
                        continue
                    if si.degree_in_var(u) != ci.degree_in_var(u):
                        continue
                    if sj.degree_in_var(u) != cj.degree_in_var(u):
                        continue
                    fi = [c.as_constant() for c in si.coeffs_in_var(u)]
                    fj = [c.as_constant() for c in sj.coeffs_in_var(u)]
                    if _uni_gcd_is_one(fi, fj):
                        found = {var_name(x): point[x] for x in others}
                        break
                if found is None:
                    ok = False
                    break
                rounds.append({"variable": var_name(u), "point": found})
            if ok:
                return {
                    "route": "coprime_coefficients",
                    "coefficient_powers": [pi, pj],
                    "rounds": rounds,
                }
    return None


def specialization_certificate(
    f: MultiPoly, v: VarId, attempts: int = 40, seed: int = 0
) -> Certificate:
    """Irreducibility via integer specialization and a mod-p screen.

    Deterministic given (attempts, seed).  Proven requires both an
    admissible (v-degree preserving) specialization certified
    irreducible over the rationals and a primitivity certificate for f
    in v; otherwise Inconclusive.
    """
    deg = f.degree_in_var(v)
    if not isinstance(deg, int) or deg < 1:
        raise DegreeZeroInVError(f"input has no positive degree in {var_name(v)}")
    rng = random.Random(seed)
    prim = _certify_primitive(f, v, rng)
    if prim is None:
        return Certificate(
            INCONCLUSIVE,
            "Specialization",
            {"variable": var_name(v)},
            note="primitivity not certified",
        )
    if deg == 1:
        return Certificate(
            PROVEN,
            "DegreeOne",
            {"variable": var_name(v), "primitivity": prim},
            note="degree 1 in a variable with unit content",
        )
    others = sorted(f.variables() - {v})
    tried = 0
    for attempt in range(attempts):
        point = {u: rng.randint(-SPECIALIZATION_RANGE, SPECIALIZATION_RANGE) for u in others}
        g = f.substitute(point)
        if g.degree_in_var(v) != deg:
            continue  # inadmissible: degree dropped
        tried += 1
        coeffs = _clear_denominators([c.as_constant() for c in g.coeffs_in_var(v)])
        for p in _first_primes_not_dividing(abs(coeffs[-1]), PRIMES_TO_TRY):
            if modp_irreducible(coeffs, p):
                return Certificate(
                    PROVEN,
                    "Specialization",
                    {
                        "variable": var_name(v),
                        "attempt": attempt,
                        "point": {var_name(u): point[u] for u in others},
                        "prime": p,
                        "specialized_coeffs": [str(c) for c in coeffs],
                        "primitivity": prim,
                    },
                )
    return Certificate(
        INCONCLUSIVE,
        "Specialization",
        {"variable": var_name(v), "admissible_attempts": tried},
        note="no specialization certified irreducible",
    )


def certify_paper_irreducibility(
    n: int, *, even_specialization: bool = True, seed: int = 0
) -> list:
    """Certificates for R(n) and every V_k(n).

    R and V_k for k <= n-2 use the pure powers of (a_n, a_(n-1)); V_n
    uses (a_(n-1), a_(n-2)).  V_(n-1) uses (a_(n-2), a_n), whose weights
    are coprime exactly for odd n; for even n the mixed-monomial
    refinement (a_(n-3), a_n) is tried, and n in {4, 6} falls back to a
    specialization certificate (skipped for n = 6 unless
    ``even_specialization`` -- it is the expensive opt-in instance).
    """
    if n < 3:
        raise ValueError("certificates need n >= 3")
    w = WeightVector.discriminant(n)
    out = []

    def attempt(f, p, q, refinement=None):
        try:
            return qh_pure_power_certificate(f, w, p, q, refinement=refinement)
        except (NotQuasiHomogeneousError, MissingPurePowerError) as e:
            return Certificate(
                INCONCLUSIVE, "QhPurePower", {}, note=f"precondition failed: {e}"
            )

    out.append(
        ("irreducible.R", {"n": n}, attempt(discriminant_R(n), a_var(n), a_var(n - 1)))
    )
    for k in range(1, n + 1):
        f = V_k(n, k)
        params = {"n": n, "k": k}
        if k <= n - 2:
            cert = attempt(f, a_var(n), a_var(n - 1))
        elif k == n:
            cert = attempt(f, a_var(n - 1), a_var(n - 2))
        else:  # k = n - 1
            refinement = (a_var(n - 3), a_var(n)) if n >= 4 else None
            cert = attempt(f, a_var(n - 2), a_var(n), refinement)
            if not cert.proven:
                if n % 2 == 0 and (n != 6 or even_specialization):
                    cert = specialization_certificate(f, a_var(n), seed=seed)
                elif n == 6:
                    cert = Certificate(
                        INCONCLUSIVE,
                        "Specialization",
                        {},
                        note="specialization for n = 6 skipped (opt-in)",
                    )
        out.append(("irreducible.vk", params, cert))
    return out
