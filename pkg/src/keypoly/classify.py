"""Multiplicity-free classification of key polynomials and exhaustive sweeps that verify it."""
from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Callable, Iterable, Sequence

from keypoly.compositions import (
    Composition,
    avoids_km,
    compositions_grid,
    dominance_leq,
    lswap_closure,
    part,
    qlswap,
    rmin_rmax_flex,
    segment_decomposition,
)
from keypoly.demazure import key_polynomial_demazure
from keypoly.kohnert import key_polynomial_kohnert
from keypoly.quasikey import (
    count_low_entries_above,
    enumerate_qkt,
    key_polynomial_quasikey,
    quasi_key_polynomial,
    weight_of,
)


def is_multiplicity_free_key(alpha: Sequence[int]) -> bool:
    """Decide whether kappa_alpha is multiplicity-free without expanding it."""
    return avoids_km(alpha)


@dataclass
class VerificationReport:
    suite: str
    n: int
    max_part: int
    checked: int = 0
    mismatches: list[Composition] = field(default_factory=list)
    details: list[str] = field(default_factory=list)
    findings: list[str] = field(default_factory=list)
    max_coefficient: int = 0
    elapsed_ms: float = 0.0

    @property
    def ok(self) -> bool:
        return not self.mismatches

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "grid": {"n": self.n, "max_part": self.max_part},
            "checked": self.checked,
            "mismatches": [list(a) for a in self.mismatches],
            "details": list(self.details),
            "findings": list(self.findings),
            "max_coefficient": self.max_coefficient,
            "elapsed_ms": round(self.elapsed_ms, 3),
        }


@dataclass
class ConjectureReport:
    n: int
    max_part: int
    checked: int = 0
    counterexamples: list[Composition] = field(default_factory=list)
    elapsed_ms: float = 0.0

    def to_dict(self) -> dict:
        d = asdict(self)
        d["grid"] = {"n": d.pop("n"), "max_part": d.pop("max_part")}
        d["counterexamples"] = [list(a) for a in self.counterexamples]
        d["elapsed_ms"] = round(self.elapsed_ms, 3)
        return d


# Per-composition workers.  Each returns (considered, problems, max_coefficient)
# and optionally a list of non-failing findings; they are module-level so a
# process pool can pickle them.

def _classification_worker(alpha: Composition) -> tuple[bool, list[str], int]:
    kappa = key_polynomial_demazure(alpha)
    problems = []
    if kappa.is_multiplicity_free() != avoids_km(alpha):
        problems.append(
            f"{alpha}: multiplicity-free={kappa.is_multiplicity_free()} but avoids KM={avoids_km(alpha)}"
        )
    return True, problems, kappa.max_abs_coefficient()


def _models_worker(alpha: Composition) -> tuple[bool, list[str], int]:
    reference = key_polynomial_demazure(alpha)
    problems = []
    for name, model in (("kohnert", key_polynomial_kohnert), ("quasikey", key_polynomial_quasikey)):
        other = model(alpha)
        if other != reference:
            diff = reference - other
            problems.append(f"{alpha}: demazure - {name} = {dict(diff.terms())}")
    return True, problems, reference.max_abs_coefficient()


def segment_violations(alpha: Sequence[int]) -> list[str]:
    """Failures of the segment structure properties for a KM-avoiding, zero-free alpha.

    Covers disjointness of seg1/seg2/seg3, consecutiveness, nonempty seg1
    past the first segment, the seg3 bound and the seg1 implication.  Whether
    the three parts cover the segment is reported by
    :func:`segment_coverage_gaps` instead: equality cases can fall outside.
    """
    dec = segment_decomposition(alpha)
    out = []
    for m, seg in enumerate(dec.segments, start=1):
        parts = (seg.seg1, seg.seg2, seg.seg3)
        members = seg.seg1 + seg.seg2 + seg.seg3
        if len(set(members)) != len(members) or not set(members) <= set(seg.indices):
            out.append(f"segment {m}: parts are not disjoint subsets of the segment")
        for p in parts:
            if p and list(p) != list(range(p[0], p[-1] + 1)):
                out.append(f"segment {m} has a non-consecutive part {p}")
        if m > 1 and not seg.seg1:
            out.append(f"segment {m} has empty seg1")
        prev_low = part(alpha, seg.start - 1)
        for b in seg.seg3:
            if not prev_low >= alpha[b - 1]:
                out.append(f"segment {m}: alpha_(i_(m-1)-1) < alpha_{b} for b in seg3")
        for b in seg.indices:
            if prev_low < alpha[b - 1] and b not in seg.seg1:
                out.append(f"segment {m}: b={b} exceeds alpha_(i_(m-1)-1) but is not in seg1")
    return out


def segment_coverage_gaps(alpha: Sequence[int]) -> list[tuple[int, int]]:
    """(m, b) for indices b of segment m lying in none of seg1, seg2, seg3."""
    dec = segment_decomposition(alpha)
    gaps = []
    for m, seg in enumerate(dec.segments, start=1):
        covered = set(seg.seg1 + seg.seg2 + seg.seg3)
        gaps.extend((m, b) for b in seg.indices if b not in covered)
    return gaps


def dominance_interval_violations(alpha: Sequence[int]) -> list[str]:
    """Failures of the dominance-interval bounds for every tableau of shape alpha."""
    alpha = tuple(alpha)
    n = len(alpha)
    flexes = [rmin_rmax_flex(alpha, b)[2] for b in range(1, n + 1)]
    out = []
    for t in enumerate_qkt(alpha):
        mu = weight_of(t)
        if not dominance_leq(alpha, mu):
            out.append(f"wt {mu} does not dominate shape {alpha}")
        for b in range(1, n + 1):
            if sum(mu[:b]) > sum(alpha[:b]) + flexes[b - 1]:
                out.append(f"wt {mu}: prefix {b} exceeds alpha prefix + flex {flexes[b - 1]}")
            low = count_low_entries_above(t, b)
            if low > flexes[b - 1]:
                out.append(f"tableau {t.rows}: {low} entries <= {b} above row {b}, flex {flexes[b - 1]}")
    return out


def lex_separation_violations(alpha: Sequence[int]) -> list[str]:
    """Pairs gamma >_lex tau in lswap(alpha) with no z where tau's prefix plus flex_z(tau) falls short of gamma's."""
    closure = lswap_closure(alpha)
    n = len(alpha)
    out = []
    for i, tau in enumerate(closure):
        flexes = [rmin_rmax_flex(tau, z)[2] for z in range(1, n + 1)]
        for gamma in closure[i + 1:]:
            if not any(sum(tau[:z]) + flexes[z - 1] < sum(gamma[:z]) for z in range(1, n + 1)):
                out.append(f"no separating z for gamma={gamma} > tau={tau}")
    return out


def weight_disjointness_violations(alpha: Sequence[int]) -> list[str]:
    weights: dict[tuple[int, ...], Composition] = {}
    out = []
    for gamma in lswap_closure(alpha):
        for mu in {weight_of(t) for t in enumerate_qkt(gamma)}:
            if mu in weights:
                out.append(f"weight {mu} shared by qKT{weights[mu]} and qKT{gamma}")
            weights[mu] = gamma
    return out


def _lemmas_worker(alpha: Composition) -> tuple[bool, list[str], int, list[str]]:
    if not avoids_km(alpha):
        return False, [], 0, []
    findings = [f"{alpha}: index {b} of segment {m} lies in no part" for m, b in segment_coverage_gaps(alpha)]
    problems = [f"{alpha}: {msg}" for msg in segment_violations(alpha)]
    closure = lswap_closure(alpha)
    problems += [f"{alpha}: lswap member {g} contains a KM pattern" for g in closure if not avoids_km(g)]
    problems += [f"{alpha}: {msg}" for msg in dominance_interval_violations(alpha)]
    problems += [f"{alpha}: {msg}" for msg in lex_separation_violations(alpha)]
    problems += [f"{alpha}: {msg}" for msg in weight_disjointness_violations(alpha)]
    worst = 0
    for beta in qlswap(alpha):
        d = quasi_key_polynomial(beta)
        worst = max(worst, d.max_abs_coefficient())
        if not d.is_multiplicity_free():
            problems.append(f"{alpha}: quasi-key polynomial of {beta} has multiplicity")
    return True, problems, worst, findings


def _sweep(
    suite: str,
    worker: Callable[[Composition], tuple],
    n: int,
    max_part: int,
    grid: Iterable[Composition],
    jobs: int,
) -> VerificationReport:
    if n < 1 or max_part < 0:
        raise ValueError("need n >= 1 and max_part >= 0")
    report = VerificationReport(suite, n, max_part)
    start = time.perf_counter()
    alphas = list(grid)
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(worker, alphas, chunksize=max(1, len(alphas) // (4 * jobs))))
    else:
        results = map(worker, alphas)
    for alpha, (considered, problems, coeff, *extra) in zip(alphas, results):
        if not considered:
            continue
        if extra:
            report.findings.extend(extra[0])
        report.checked += 1
        report.max_coefficient = max(report.max_coefficient, coeff)
        if problems:
            report.mismatches.append(alpha)
            report.details.extend(problems)
    report.elapsed_ms = (time.perf_counter() - start) * 1000
    return report


def verify_classification(n: int, max_part: int, jobs: int = 1) -> VerificationReport:
    """Compare expansion-based multiplicity-freeness with KM avoidance on every composition in the grid."""
    return _sweep("classification", _classification_worker, n, max_part, compositions_grid(n, max_part), jobs)


def cross_check_models(n: int, max_part: int, jobs: int = 1) -> VerificationReport:
    """Demazure, Kohnert and quasi-key expansions must agree termwise."""
    return _sweep("models", _models_worker, n, max_part, compositions_grid(n, max_part), jobs)


def verify_lemmas(n: int, max_part: int, jobs: int = 1) -> VerificationReport:
    """Structural lemmas over KM-avoiding compositions with all parts in 1..max_part.

    ``checked`` counts only the KM-avoiding compositions; ``max_coefficient``
    is the largest quasi-key coefficient seen over their Qlswap sets.
    """
    grid = compositions_grid(n, max_part, min_part=1) if max_part >= 1 else ()
    return _sweep("lemmas", _lemmas_worker, n, max_part, grid, jobs)


def _conjecture_worker(alpha: Composition) -> tuple[bool, list[str], int]:
    if not avoids_km(alpha):
        return False, [], 0
    d = quasi_key_polynomial(alpha)
    problems = [] if d.is_multiplicity_free() else [f"{alpha}: quasi-key polynomial has multiplicity"]
    return True, problems, d.max_abs_coefficient()


def quasikey_zero_conjecture_sweep(n: int, max_part: int, jobs: int = 1) -> ConjectureReport:
    """Look for KM-avoiding alpha, zeros allowed, whose quasi-key polynomial has multiplicity.

    Findings are data, never failures.
    """
    sweep = _sweep("conjecture", _conjecture_worker, n, max_part, compositions_grid(n, max_part), jobs)
    return ConjectureReport(n, max_part, sweep.checked, sweep.mismatches, sweep.elapsed_ms)
