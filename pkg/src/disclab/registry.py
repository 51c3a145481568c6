"""Frozen enumeration of verifiable claims.

Every ClaimResult produced by the checkers carries a claim_id from this
registry, so reports are diffable across versions.  Adding a claim means
adding it here first; checkers refuse to emit unknown ids.
"""

from __future__ import annotations

# claim_id -> (parameter names, one-line description)
CLAIMS: dict = {
    "lemma1.deg_in_ak": (("n", "k"), "R has degree n in a_k for k <= n-1"),
    "lemma1.lead_coeff_ak": (
        ("n", "k"),
        "leading coefficient of R in a_k is +/- k^k (n-k)^(n-k) a_n^(n-k-1)",
    ),
    "lemma1.deg_in_an": (("n",), "R has degree n-1 in a_n"),
    "lemma1.vanish_tail": (("n",), "R vanishes identically at a_(n-1) = a_n = 0"),
    "lemma1.qh_degree": (("n",), "R is quasi-homogeneous of degree n(n-1) under w(a_j) = j"),
    "lemma1.monomial_an": (("n",), "R contains A a_n^(n-1) with A != 0"),
    "lemma1.monomial_an1": (("n",), "R contains B a_(n-1)^n with B != 0"),
    "remark1.product_formula": (
        ("n",),
        "|R(a)| equals prod_(i<j) (x_i - x_j)^2 at coefficient vectors of split polynomials",
    ),
    "remark1.sign_constant": (
        ("n",),
        "the sign relating R(a) to the root-difference product is constant per n",
    ),
    "lemma2.det_jk": (
        ("n", "k"),
        "det J_k = (-1)^n 2 lambda^(n-k) Q(-lambda), exactly",
    ),
    "smoothness.parametrization": (
        ("n",),
        "R composed with the double-root parametrization a(lambda, b) is the zero polynomial",
    ),
    "smoothness.case_i": (
        ("n",),
        "at double-root points with lambda != 0 and Q(-lambda) != 0, every dR/da_k is nonzero",
    ),
    "smoothness.case_ii": (
        ("n",),
        "at double-root points with lambda = 0, dR/da_k = 0 for k <= n-1 and dR/da_n != 0",
    ),
    "smoothness.triple_singular": (
        ("n",),
        "the gradient of R vanishes at points with a root of multiplicity >= 3",
    ),
    "prop_div.part1": (
        ("n", "k"),
        "D~_k (k <= n-1) is not divisible by a_i for any i != k, i != n",
    ),
    "prop_div.part2": (("n",), "D~_n is not divisible by a_i for i <= n-1"),
    "prop_div.part3": (
        ("n", "k"),
        "D~_k (k <= n-2) has divisibility order exactly n-k-1 in a_n",
    ),
    "prop_div.part4": (("n",), "D~_(n-1) has divisibility order exactly 1 in a_n"),
    "stmtA.support": (
        ("n", "k"),
        "R at a_i = 0 (k != i != n) has support exactly {a_k^n a_n^(n-k-1), a_n^(n-1)}",
    ),
    "stmtB.support": (
        ("n", "k"),
        "Res(P0, P0', x) for P0 = x^n + a_k x^(n-k) + a_(n-1) x has support exactly "
        "{a_(n-1)^n, a_k^(n-1) a_(n-1)^(n-k)}",
    ),
    "stmtB.factor": (("n", "k"), "det S(P0, P0') = a_(n-1) det S(P0/x, P0')"),
    "stmtC.divisible": (("n",), "R restricted to a_n = 0 is divisible by a_(n-1)^2"),
    "stmtC.cofactor": (("n",), "the a_n-cofactor V of R satisfies V|_(a_n=0) != 0"),
    "sigma.triple.res_pp": (("n",), "Res(P, P', x) vanishes at triple-root samples"),
    "sigma.triple.res_ppp": (("n",), "Res(P', P'', x) vanishes at triple-root samples"),
    "sigma.triple.vk": (("n", "k"), "V_k vanishes at the a^k projection of triple-root samples"),
    "sigma.triple0.vn1": (
        ("n",),
        "V_(n-1) vanishes at the projection of triple-root-at-0 samples "
        "(where a_(n-2) = a_(n-1) = a_n = 0)",
    ),
    "sigma.double.res_pp": (("n",), "Res(P, P', x) vanishes at double-root-only samples"),
    "sigma.double.res_ppp_nonzero": (
        ("n",),
        "Res(P', P'', x) is nonzero at double-root-only samples",
    ),
    "sigma.double.vk_nonzero": (
        ("n", "k"),
        "V_k is nonzero at the a^k projection of double-root-only samples",
    ),
    "irreducible.R": (("n",), "R is irreducible (certificate must be Proven)"),
    "irreducible.vk": (("n", "k"), "V_k is irreducible (certificate must be Proven)"),
}

# Check names accepted by the harness, their checker entry points live in
# analysis/irreducibility.  min_n is the smallest meaningful family degree;
# default_n is the range used when the caller does not give one.
# max_n, when present, is a hard cap inherited from a contract of the
# check itself (remark1 rides the root-product oracle, which supports at
# most 6 roots).
CHECKS: dict = {
    "lemma1": {"min_n": 3, "default_n": (3, 4, 5, 6, 7)},
    "remark1": {"min_n": 2, "default_n": (3, 4, 5, 6), "max_n": 6},
    "lemma2": {"min_n": 3, "default_n": (3, 4, 5, 6, 7)},
    "smoothness": {"min_n": 3, "default_n": (3, 4, 5, 6, 7)},
    "divisibility": {"min_n": 3, "default_n": (3, 4)},
    "statements": {"min_n": 3, "default_n": (3, 4, 5, 6, 7)},
    "sigma": {"min_n": 4, "default_n": (4, 5, 6)},
    "irreducibility": {"min_n": 3, "default_n": (3, 4, 5, 6)},
}

# Per-check default sample counts, used when the caller passes samples=0.
DEFAULT_SAMPLES: dict = {
    "remark1": 200,
    "smoothness": 50,
    "sigma": 50,
}

# The symbolic parametrization identity is capped independently of the
# smoothness sampling range: substituting into R grows steeply with n.
PARAMETRIZATION_MAX_N = 6


def validate_claim_id(claim_id: str) -> None:
    if claim_id not in CLAIMS:
        raise KeyError(f"claim id {claim_id!r} is not registered")
