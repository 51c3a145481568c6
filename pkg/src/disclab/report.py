"""Verification runs and deterministic reports.

``run`` executes the selected checkers over a degree range and collects
every ClaimResult and irreducibility certificate into a
VerificationReport.  Reports are deterministic: entries are sorted by
(claim_id, n, k), sampling is driven entirely by the single 64-bit seed,
and the canonical JSON rendering omits wall-clock timings, so equal
(seed, version, arguments) produce byte-identical output.  Timings can
be included explicitly, which is documented to break byte-identity.
"""

from __future__ import annotations

import hashlib
import json
import os
import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional, Sequence

from . import __version__, analysis, registry
from .analysis import ClaimResult
from .irreducibility import Certificate, certify_paper_irreducibility
from .polyring import MultiPoly, VarId, coeff_to_str, poly_to_obj, var_name

DEFAULT_MAX_N = 8


class BadCheckNameError(ValueError):
    """An unknown check name was requested."""


class BadRangeError(ValueError):
    """The requested degree range is invalid for the requested checks."""


def max_n_from_env() -> int:
    raw = os.environ.get("DISCLAB_MAX_N")
    if raw is None:
        return DEFAULT_MAX_N
    try:
        value = int(raw)
    except ValueError:
        raise BadRangeError(f"DISCLAB_MAX_N must be an integer, got {raw!r}") from None
    if value < 2:
        raise BadRangeError(f"DISCLAB_MAX_N must be >= 2, got {value}")
    return value


def derive_rng(seed: int, label: str) -> random.Random:
    """Deterministic per-task stream, independent of hash randomization."""
    digest = hashlib.sha256(f"{seed}:{label}".encode()).digest()
    return random.Random(int.from_bytes(digest[:8], "big"))


def _to_jsonable(x):
    if isinstance(x, MultiPoly):
        return poly_to_obj(x)
    if isinstance(x, Fraction):
        return coeff_to_str(x)
    if isinstance(x, VarId):
        return var_name(x)
    if isinstance(x, dict):
        return {str(k) if not isinstance(k, VarId) else var_name(k): _to_jsonable(v) for k, v in x.items()}
    if isinstance(x, (list, tuple)):
        return [_to_jsonable(v) for v in x]
    if isinstance(x, (str, int, float, bool)) or x is None:
        return x
    return str(x)


@dataclass
class VerificationReport:
    seed: int
    tool_version: str
    n_range: list
    checks: list
    samples: int
    slow: bool
    entries: list = field(default_factory=list)
    certificates: list = field(default_factory=list)  # (claim_id, params, Certificate)
    timings: dict = field(default_factory=dict)

    @property
    def summary(self) -> dict:
        passed = sum(1 for e in self.entries if e.passed)
        failed = sum(1 for e in self.entries if not e.passed)
        inconclusive = sum(1 for _, _, c in self.certificates if not c.proven)
        return {"pass": passed, "fail": failed, "inconclusive": inconclusive}

    def failed_entries(self) -> list:
        return [e for e in self.entries if not e.passed]

    def to_obj(self, include_timings: bool = False) -> dict:
        obj = {
            "tool_version": self.tool_version,
            "seed": self.seed,
            "args": {
                "n_range": list(self.n_range),
                "checks": list(self.checks),
                "samples": self.samples,
                "slow": self.slow,
            },
            "entries": [
                {
                    "claim_id": e.claim_id,
                    "params": dict(e.params),
                    "passed": e.passed,
                    "witness": _to_jsonable(e.witness),
                    "note": e.note,
                }
                for e in self.entries
            ],
            "certificates": [
                {
                    "claim_id": cid,
                    "params": dict(params),
                    "certificate": _to_jsonable(cert.to_obj()),
                }
                for cid, params, cert in self.certificates
            ],
            "summary": self.summary,
        }
        if include_timings:
            obj["timings"] = {k: round(v, 3) for k, v in sorted(self.timings.items())}
        return obj

    def to_json(self, include_timings: bool = False) -> str:
        return json.dumps(self.to_obj(include_timings), sort_keys=True, indent=2) + "\n"

    def to_text(self) -> str:
        lines = [
            f"disclab {self.tool_version}  seed={self.seed}  "
            f"n={','.join(map(str, self.n_range))}  checks={','.join(self.checks)}"
        ]
        for e in self.entries:
            status = "PASS" if e.passed else "FAIL"
            params = " ".join(f"{k}={v}" for k, v in sorted(e.params.items()))
            note = f"  ({e.note})" if e.note else ""
            lines.append(f"[{status}] {e.claim_id} {params}{note}")
        for cid, params, cert in self.certificates:
            p = " ".join(f"{k}={v}" for k, v in sorted(params.items()))
            note = f"  ({cert.note})" if cert.note else ""
            lines.append(f"[{cert.verdict.upper()}] {cid} {p} via {cert.method}{note}")
        s = self.summary
        lines.append(
            f"summary: {s['pass']} passed, {s['fail']} failed, "
            f"{s['inconclusive']} inconclusive"
        )
        return "\n".join(lines) + "\n"


def _expand_checks(checks: Iterable[str]) -> list:
    names = list(checks)
    if not names:
        raise BadCheckNameError("no checks requested")
    for name in names:
        if name != "all" and name not in registry.CHECKS:
            known = ", ".join(sorted(registry.CHECKS) + ["all"])
            raise BadCheckNameError(f"unknown check {name!r} (known: {known})")
    if "all" in names:
        return sorted(registry.CHECKS)
    return sorted(set(names))


def _resolve_ranges(
    n_range: Optional[Sequence[int]], checks: list, explicit: bool, max_n: int
) -> dict:
    """Map check name -> degree list, enforcing per-check minima."""
    per_check = {}
    if n_range is None:
        for name in checks:
            per_check[name] = [n for n in registry.CHECKS[name]["default_n"] if n <= max_n]
        return per_check
    ns = sorted(set(n_range))
    if not ns:
        raise BadRangeError("empty degree range")
    for n in ns:
        if not isinstance(n, int) or n < 2:
            raise BadRangeError(f"degrees must be integers >= 2, got {n}")
        if n > max_n:
            raise BadRangeError(f"n={n} exceeds the configured maximum {max_n}")
    for name in checks:
        spec = registry.CHECKS[name]
        min_n = spec["min_n"]
        cap = spec.get("max_n", max_n)
        applicable = [n for n in ns if min_n <= n <= cap]
        if explicit and applicable != ns:
            bad = [n for n in ns if n < min_n or n > cap]
            raise BadRangeError(
                f"check {name!r} supports {min_n} <= n <= {cap}; got {bad}"
            )
        per_check[name] = applicable
    return per_check


def run(
    n_range: Optional[Sequence[int]],
    checks: Iterable[str],
    seed: int,
    samples: int = 0,
    *,
    slow: bool = False,
    max_n: Optional[int] = None,
) -> VerificationReport:
    """Execute the selected checks and assemble a deterministic report.

    ``n_range=None`` uses each check's default range.  ``samples=0``
    uses each sampled check's default count.  When the check set was
    given explicitly (not ``all``), every requested degree must be valid
    for every requested check; ``all`` silently narrows each check to
    its applicable degrees.
    """
    requested = list(checks)
    explicit = "all" not in requested
    selected = _expand_checks(requested)
    if max_n is None:
        max_n = max_n_from_env()
    per_check = _resolve_ranges(n_range, selected, explicit, max_n)

    report = VerificationReport(
        seed=seed,
        tool_version=__version__,
        n_range=sorted({n for ns in per_check.values() for n in ns}),
        checks=selected,
        samples=samples,
        slow=slow,
    )

    for name in selected:
        for n in per_check[name]:
            t0 = time.perf_counter()
            if name == "lemma1":
                results = analysis.check_lemma1(n)
            elif name == "remark1":
                results = analysis.check_remark1(n, samples, derive_rng(seed, f"remark1:{n}"))
            elif name == "lemma2":
                results = analysis.check_lemma2(n)
            elif name == "smoothness":
                results = analysis.check_smoothness(
                    n, samples, derive_rng(seed, f"smoothness:{n}")
                )
            elif name == "divisibility":
                results = analysis.check_divisibility(n)
            elif name == "statements":
                results = analysis.check_statements(n)
            elif name == "sigma":
                results = analysis.check_sigma(n, samples, derive_rng(seed, f"sigma:{n}"))
            elif name == "irreducibility":
                results = []
                certs = certify_paper_irreducibility(
                    n, even_specialization=(n != 6 or slow), seed=seed
                )
                for cid, params, cert in certs:
                    report.certificates.append((cid, params, cert))
                    opt_in_skipped = n == 6 and params.get("k") == n - 1 and not slow
                    if not opt_in_skipped:
                        results.append(
                            ClaimResult(cid, params, cert.proven, note=cert.note)
                        )
            else:  # pragma: no cover - registry and dispatch kept in sync
                raise BadCheckNameError(name)
            report.entries.extend(results)
            report.timings[f"{name}:{n}"] = time.perf_counter() - t0

    report.entries.sort(key=ClaimResult.sort_key)
    report.certificates.sort(key=lambda t: (t[0], t[1].get("n", 0), t[1].get("k", -1)))
    return report
