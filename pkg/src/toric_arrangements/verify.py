"""Cross-check suites aggregated by ``verify-all``.

Each suite compares two independent routes to the same quantity and
collects counterexamples rather than stopping at the first failure.
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from itertools import product
from typing import Callable

from .arrangements import (
    SubsetCollection,
    ValidationError,
    antichains,
    build_KI,
    r_min,
)
from .fans import Position, build_fan, cone_contains, orbit_limit, r_sigma
from .mapspace import in_E, interpolation_rank, stabilize
from .polyprod import lemma63_counterexample
from .sampling import (
    default_seed,
    random_collection,
    random_distinct_points,
    random_E_member,
)
from .stability import (
    D,
    Dstar,
    StabilityParams,
    WindowError,
    a_t,
    band_scan_report,
    bundle_rank,
    config_dim,
    top_stratum_dim,
    vanishing_threshold,
)

__all__ = ["Limits", "SuiteResult", "verify_all", "SUITES"]

MAX_REPORTED = 20


@dataclass(frozen=True)
class Limits:
    n_max: int = 6
    d_max: int = 12
    seed: int | None = None
    samples: int = 1000

    def __post_init__(self):
        if self.n_max < 2:
            raise ValidationError("n_max must be >= 2")
        if self.d_max < 1:
            raise ValidationError("d_max must be >= 1")
        if self.samples < 0:
            raise ValidationError("samples must be >= 0")

    def rng(self, salt: str) -> random.Random:
        base = default_seed() if self.seed is None else self.seed
        return random.Random(f"{base}:{salt}")


@dataclass
class SuiteResult:
    name: str
    checked: int = 0
    failures: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def fail(self, item) -> None:
        self.failures.append(item)

    def to_json(self) -> dict:
        return {
            "suite": self.name,
            "passed": self.passed,
            "checked": self.checked,
            "failures": len(self.failures),
            "counterexamples": self.failures[:MAX_REPORTED],
        }


def suite_rsigma(lim: Limits) -> SuiteResult:
    res = SuiteResult("rsigma")

    def check(I: SubsetCollection):
        res.checked += 1
        got, want = r_sigma(build_fan(build_KI(I))), r_min(I)
        if got != want:
            res.fail({"I": I.to_json(), "r_sigma": got, "r_min": want})

    for n in range(2, min(lim.n_max, 5) + 1):
        for I in antichains(n):
            check(I)
    rng = lim.rng("rsigma")
    for _ in range(lim.samples):
        check(random_collection(rng, n_max=lim.n_max))
    return res


def suite_lemma63(lim: Limits) -> SuiteResult:
    res = SuiteResult("lemma63")

    def check(I: SubsetCollection):
        res.checked += 1
        bad = lemma63_counterexample(I)
        if bad is not None:
            res.fail({"I": I.to_json(), "pattern": bad.to_bits()})

    for n in range(2, min(lim.n_max, 5) + 1):
        for I in antichains(n):
            check(I)
    rng = lim.rng("lemma63")
    for _ in range(lim.samples):
        check(random_collection(rng, n_max=lim.n_max))
    return res


def suite_bandscan(lim: Limits, d_formula: Callable[[StabilityParams], int] = D,
                   dstar_formula: Callable[[int, int], int] = Dstar) -> SuiteResult:
    res = SuiteResult("bandscan")
    for r, d in product(range(2, lim.n_max + 1), range(1, lim.d_max + 1)):
        p = StabilityParams(r, r, d)
        res.checked += 1
        try:
            got = band_scan_report(p, "general")
        except WindowError as exc:
            res.fail({"mode": "general", "r_min": r, "d": d, "error": str(exc)})
            continue
        want = d_formula(p)
        if got.answer != want or got.unclamped_answer != got.answer:
            res.fail({"mode": "general", "r_min": r, "d": d, "scan": got.answer,
                      "unclamped": got.unclamped_answer, "closed_form": want})
    for n, d in product(range(2, lim.n_max + 1), range(1, lim.d_max + 1)):
        p = StabilityParams(n, n, d)
        res.checked += 1
        try:
            got = band_scan_report(p, "projective")
        except WindowError as exc:
            res.fail({"mode": "projective", "n": n, "d": d, "error": str(exc)})
            continue
        want = dstar_formula(d, n)
        if got.answer != want:
            res.fail({"mode": "projective", "n": n, "d": d, "scan": got.answer, "closed_form": want})
    return res


def suite_at_identity(lim: Limits) -> SuiteResult:
    res = SuiteResult("at-identity")
    for r, d in product(range(2, lim.n_max + 1), range(1, lim.d_max + 1)):
        p = StabilityParams(r, r, d)
        values = {}
        for t in range(1, 6):
            got = a_t(r, d, t)
            if got is None:
                continue
            res.checked += 1
            values[t] = got
            if got != D(p) + t + 1:
                res.fail({"r_min": r, "d": d, "t": t, "a_t": got, "expected": D(p) + t + 1})
        if values and min(values.values()) != D(p) + 2:
            res.fail({"r_min": r, "d": d, "min_a_t": min(values.values()), "expected": D(p) + 2})
    return res


def suite_dimensions(lim: Limits) -> SuiteResult:
    res = SuiteResult("dimensions")
    top = max(lim.n_max, lim.d_max)
    for n, r, d in product(range(2, top + 1), range(2, top + 1), range(1, top + 1)):
        if r > n:
            continue
        res.checked += 1
        lhs = top_stratum_dim(n, r, d)
        rhs = bundle_rank(n, d, d) + config_dim(n, r, d) + 1
        if lhs != rhs:
            res.fail({"n": n, "r_min": r, "d": d, "top": lhs, "sum": rhs})
        thr = vanishing_threshold(n, r, d)
        for s in range(0, 4 * n * d + 1):
            if (2 * n * d + d - s > lhs) != (s <= thr):
                res.fail({"n": n, "r_min": r, "d": d, "s": s})
    return res


def suite_vandermonde(lim: Limits) -> SuiteResult:
    res = SuiteResult("vandermonde")
    rng = lim.rng("vandermonde")
    for _ in range(min(lim.samples, 500)):
        k, d = rng.randint(1, 8), rng.randint(1, 8)
        pts = random_distinct_points(rng, k)
        res.checked += 1
        got = interpolation_rank(pts, d)
        if got != min(k, d):
            res.fail({"points": [str(p) for p in pts], "d": d, "rank": got})
    return res


def suite_stabilization(lim: Limits) -> SuiteResult:
    res = SuiteResult("stabilization")
    rng = lim.rng("stabilization")
    for _ in range(lim.samples):
        I = random_collection(rng, n_max=min(lim.n_max, 5))
        d = rng.randint(1, min(lim.d_max, 6))
        F = random_E_member(rng, I, d)
        G = stabilize(F)
        res.checked += 1
        fresh = [
            p for old, new in zip(F.components, G.components)
            for p in new.support - old.support
        ]
        ok = (
            G.d == d + 1
            and in_E(G, I)
            and len(fresh) == I.n
            and all(d < p.re < d + 1 for p in fresh)
        )
        if not ok:
            res.fail({"I": I.to_json(), "F": F.to_json(), "G": G.to_json()})
    return res


def suite_orbit_limit(lim: Limits, box: int = 4) -> SuiteResult:
    res = SuiteResult("orbit-limit")
    for n in range(2, min(lim.n_max, 4) + 1):
        proper = [tuple(i for i in range(n) if m >> i & 1) for m in range((1 << n) - 1)]
        for u in product(range(-box, box + 1), repeat=n - 1):
            res.checked += 1
            inside = [s for s in proper if cone_contains(u, s, n) is Position.INTERIOR]
            if len(inside) != 1 or inside[0] != orbit_limit(u, n):
                res.fail({"n": n, "u": list(u), "interior": [list(s) for s in inside],
                          "orbit_limit": list(orbit_limit(u, n))})
    return res


SUITES = {
    "at-identity": suite_at_identity,
    "bandscan": suite_bandscan,
    "dimensions": suite_dimensions,
    "lemma63": suite_lemma63,
    "rsigma": suite_rsigma,
    "orbit-limit": suite_orbit_limit,
    "stabilization": suite_stabilization,
    "vandermonde": suite_vandermonde,
}


def verify_all(limits: Limits | None, d_formula: Callable[[StabilityParams], int] = D) -> dict:
    """Run every suite in name order; ``d_formula`` replaces the closed form (fault injection)."""
    if limits is None:
        raise ValidationError("verify_all needs limits")
    results = []
    for name in sorted(SUITES):
        if name == "bandscan":
            results.append(suite_bandscan(limits, d_formula=d_formula))
        else:
            results.append(SUITES[name](limits))
    return {
        "passed": all(r.passed for r in results),
        "limits": {"n_max": limits.n_max, "d_max": limits.d_max,
                   "seed": default_seed() if limits.seed is None else limits.seed,
                   "samples": limits.samples},
        "suites": [r.to_json() for r in results],
    }
