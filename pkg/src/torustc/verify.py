"""Randomized verification of the planner invariants.

run_simulation drives the planner over seeded random queries and checks,
for every query: exact endpoint interpolation, a valid domain index that
matches the endpoint agreement, and skeleton membership at every grid time
and every phase boundary (at least n-r coordinates exactly at the
basepoint).  Membership on the grid uses the path's bisection counter and
is spot-checked against pointwise evaluation on a random grid time, so the
fast path cannot drift from the reference semantics unnoticed.

Continuity is probed by perturbing a query within its domain by at most
eps per coordinate and measuring how far the two paths drift apart.  The
probe corpus is controlled: nonzero coordinates of ordinary base queries
stay at least 1/8 of a turn from the basepoint (where the schedule's local
stretch is moderate), and dedicated wrap probes carry one coordinate across
the basepoint, the case where naive arithmetic on [0, 1) would tear.
Perturbations never change the agreement set, the support sets, or the
circle rule, so both paths come from one continuity domain and their
distance must scale linearly with eps.
"""

from __future__ import annotations

import random
import time
from collections import Counter
from dataclasses import dataclass, field
from fractions import Fraction

from .planner import PlannerPath, PlannerQuery, classify, plan_product, plan_skeleton
from .skeleton import SkeletonPoint, Turn, random_turn, sample

DEFAULT_EPS = Fraction(1, 1000)
_WRAP_VALUE = Fraction(2047, 2048)  # within eps of the basepoint from below


@dataclass
class SimulationReport:
    """Aggregate outcome of one randomized planner verification run."""

    n: int
    r: int
    mode: str
    queries: int
    steps: int
    seed: int
    domain_histogram: dict[int, int] = field(default_factory=dict)
    endpoint_violations: int = 0
    membership_violations: int = 0
    domain_violations: int = 0
    continuity_probes: int = 0
    max_continuity_ratio: float | None = None
    wall_time_s: float = 0.0
    failures: list[dict] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return (
            self.endpoint_violations == 0
            and self.membership_violations == 0
            and self.domain_violations == 0
        )

    def to_jsonable(self) -> dict:
        return {
            "n": self.n,
            "r": self.r,
            "mode": self.mode,
            "queries": self.queries,
            "steps": self.steps,
            "seed": self.seed,
            "domain_histogram": {str(k): v for k, v in sorted(self.domain_histogram.items())},
            "endpoint_violations": self.endpoint_violations,
            "membership_violations": self.membership_violations,
            "domain_violations": self.domain_violations,
            "continuity_probes": self.continuity_probes,
            "max_continuity_ratio": self.max_continuity_ratio,
            "wall_time_s": round(self.wall_time_s, 3),
            "ok": self.ok,
            "failures": self.failures,
        }


def _record(report: SimulationReport, cap: int, kind: str, query: PlannerQuery, detail: str):
    if len(report.failures) < cap:
        report.failures.append({"kind": kind, "detail": detail, "query": query.to_jsonable()})


def _endpoints_exact(path: PlannerPath, query: PlannerQuery) -> bool:
    for t, want in ((Fraction(0), query.start), (Fraction(1), query.end)):
        got = path.evaluate(t)
        for g, w in zip(got.base, want.base):
            if not (isinstance(g, Turn) and g == w):
                return False
        if want.circle is not None:
            if not (isinstance(got.circle, Turn) and got.circle == want.circle):
                return False
    return True


def run_simulation(
    sig,
    mode: str = "skeleton",
    queries: int = 100,
    steps: int = 256,
    seed: int = 0,
    denominator_bound: int = 8,
    continuity_probes: int = 0,
    eps: Fraction = DEFAULT_EPS,
    failure_cap: int = 5,
) -> SimulationReport:
    """Check all planner invariants on seeded random queries.

    Every violation is counted and the first failure_cap offending queries
    are serialized into the report.  steps is the grid resolution: times
    k/steps for k = 0..steps, always extended by the path's own phase
    boundaries.
    """
    if mode not in ("skeleton", "product"):
        raise ValueError(f"unknown mode {mode!r}")
    if queries < 1 or steps < 1:
        raise ValueError("queries and steps must be positive")
    product = mode == "product"
    rng = random.Random(seed)
    grid = [Fraction(k, steps) for k in range(steps + 1)]
    need = sig.n - sig.r
    top_domain = sig.n if product else sig.n - 1
    histogram: Counter = Counter()
    report = SimulationReport(
        n=sig.n, r=sig.r, mode=mode, queries=queries, steps=steps, seed=seed
    )
    started = time.perf_counter()

    for _ in range(queries):
        start = sample(sig, rng, denominator_bound, with_circle=product)
        end = sample(sig, rng, denominator_bound, with_circle=product)
        query = PlannerQuery(start, end)
        path = plan_product(query, sig) if product else plan_skeleton(query, sig)

        domain = path.combined_index if product else path.domain_index
        histogram[domain] += 1
        agree_ok = path.agreement == frozenset(
            j for j in range(1, sig.n) if start.base[j - 1] == end.base[j - 1]
        )
        if not (0 <= domain <= top_domain and path.domain_index == len(path.agreement) and agree_ok):
            report.domain_violations += 1
            _record(report, failure_cap, "domain", query, f"domain index {domain}")

        if not _endpoints_exact(path, query):
            report.endpoint_violations += 1
            _record(report, failure_cap, "endpoint", query, "path does not interpolate exactly")

        counts = path.exact_zero_counts(grid)
        bad_grid = min(counts) < need
        spot = rng.randrange(len(grid))
        if path.evaluate(grid[spot]).exact_zero_count() != counts[spot]:
            report.membership_violations += 1
            _record(
                report, failure_cap, "membership", query,
                f"grid counter disagrees with evaluation at t={grid[spot]}",
            )
        if bad_grid:
            report.membership_violations += 1
            worst = min(range(len(grid)), key=lambda k: counts[k])
            _record(
                report, failure_cap, "membership", query,
                f"only {counts[worst]} coordinates at basepoint at t={grid[worst]}, need {need}",
            )
        for cut in path.phase_boundaries():
            if path.evaluate(cut).exact_zero_count() < need:
                report.membership_violations += 1
                _record(
                    report, failure_cap, "membership", query,
                    f"membership fails at phase boundary t={cut}",
                )
                break

    worst_ratio = None
    probes_run = 0
    for p in range(continuity_probes):
        wrap = p % 4 == 3
        ratio = continuity_ratio(sig, mode, rng, eps=eps, wrap=wrap,
                                 denominator_bound=denominator_bound)
        if ratio is None:
            continue
        probes_run += 1
        if worst_ratio is None or ratio > worst_ratio:
            worst_ratio = ratio

    report.domain_histogram = dict(histogram)
    report.continuity_probes = probes_run
    report.max_continuity_ratio = worst_ratio
    report.wall_time_s = time.perf_counter() - started
    return report


def _perturbation(rng: random.Random, eps: Fraction) -> Fraction:
    # nonzero rational shift with |delta| <= eps
    k = rng.choice([i for i in range(-1000, 1001) if i])
    return Fraction(k, 1000) * eps


def _perturb_point(
    point: SkeletonPoint,
    other: SkeletonPoint,
    rng: random.Random,
    eps: Fraction,
    forced: dict[int, Fraction],
) -> tuple[Turn, ...]:
    """Perturbed base coordinates of one endpoint, support preserved.

    Agreeing coordinates are handled by the caller (both endpoints must be
    shifted identically there); this helper only moves the coordinates where
    the endpoints already differ, keeping zero coordinates exactly zero.
    """
    out = []
    for j, (u, v) in enumerate(zip(point.base, other.base), start=1):
        if u == v or u.is_zero:
            out.append(u)
            continue
        delta = forced.get(j, _perturbation(rng, eps))
        moved = u + delta
        if moved.is_zero:
            moved = u + delta / 2
        out.append(moved)
    return tuple(out)


def _shared_shift(u: Turn, rng: random.Random, eps: Fraction) -> Turn:
    if u.is_zero:
        return u
    delta = _perturbation(rng, eps)
    moved = u + delta
    if moved.is_zero:
        moved = u + delta / 2
    return moved


def perturb_query(
    query: PlannerQuery,
    sig,
    rng: random.Random,
    eps: Fraction = DEFAULT_EPS,
    forced_start: dict[int, Fraction] | None = None,
) -> PlannerQuery | None:
    """A nearby query in the same continuity domain, or None if the query
    has nothing to move.

    Coordinates where the endpoints agree get one shared shift so they keep
    agreeing; coordinates where they differ move independently.  Exact zeros
    never move, so supports are preserved.  The circle pair, when present,
    shares its shift whenever the endpoints are equal or antipodal so the
    circle rule survives; otherwise both ends move freely (the shorter-arc
    rule tolerates eps-sized changes because sampled gaps are never within
    eps of half a turn).
    """
    forced_start = forced_start or {}
    agree = classify(query, sig).indices

    start_base = list(_perturb_point(query.start, query.end, rng, eps, forced_start))
    end_base = list(_perturb_point(query.end, query.start, rng, eps, {}))
    moved_any = False
    for j in agree:
        shifted = _shared_shift(query.start.base[j - 1], rng, eps)
        start_base[j - 1] = shifted
        end_base[j - 1] = shifted
    for j in range(1, sig.n):
        if start_base[j - 1] != query.start.base[j - 1] or end_base[j - 1] != query.end.base[j - 1]:
            moved_any = True

    start_circle = end_circle = None
    if query.start.has_circle:
        z, z2 = query.start.circle, query.end.circle
        gap = z.ccw_gap(z2)
        if gap == 0 or gap == Fraction(1, 2):
            delta = _perturbation(rng, eps)
            start_circle, end_circle = z + delta, z2 + delta
        else:
            start_circle = z + forced_start.get(0, _perturbation(rng, eps))
            end_circle = z2 + _perturbation(rng, eps)
        moved_any = True

    if not moved_any:
        return None
    return PlannerQuery(
        SkeletonPoint(tuple(start_base), start_circle),
        SkeletonPoint(tuple(end_base), end_circle),
    )


def _wrap_query(sig, rng: random.Random, mode: str) -> tuple[PlannerQuery, dict[int, Fraction]] | None:
    """A query carrying one coordinate just below a full turn, plus forced
    shifts that push it across the basepoint."""
    product = mode == "product"
    eps_push = Fraction(3, 4) * DEFAULT_EPS
    forced: dict[int, Fraction] = {}
    if sig.r >= 2:
        support = sorted(rng.sample(range(1, sig.n), sig.r - 1))
        target = support[0]
        start_base = [Turn(0)] * (sig.n - 1)
        end_base = [Turn(0)] * (sig.n - 1)
        for label in support:
            start_base[label - 1] = random_turn(rng, 8)
            end_base[label - 1] = random_turn(rng, 8)
        start_base[target - 1] = Turn(_WRAP_VALUE)
        end_base[target - 1] = Turn(Fraction(1, 2))
        forced[target] = eps_push
        start = SkeletonPoint(tuple(start_base), Turn(_WRAP_VALUE) if product else None)
        end = SkeletonPoint(tuple(end_base), Turn(Fraction(1, 4)) if product else None)
        if product:
            forced[0] = eps_push
        return PlannerQuery(start, end), forced
    if product:
        zeros = tuple([Turn(0)] * (sig.n - 1))
        start = SkeletonPoint(zeros, Turn(_WRAP_VALUE))
        end = SkeletonPoint(zeros, Turn(Fraction(1, 4)))
        forced[0] = eps_push
        return PlannerQuery(start, end), forced
    return None


def path_deviation(path_a: PlannerPath, path_b: PlannerPath, sample_steps: int = 64) -> float:
    """Largest circle distance between the two paths over a shared time grid
    extended by both paths' phase boundaries."""
    times = {Fraction(k, sample_steps) for k in range(sample_steps + 1)}
    times.update(path_a.phase_boundaries())
    times.update(path_b.phase_boundaries())
    worst = 0.0
    for t in sorted(times):
        pa = path_a.evaluate(t)
        pb = path_b.evaluate(t)
        vals_a = pa.base if pa.circle is None else (*pa.base, pa.circle)
        vals_b = pb.base if pb.circle is None else (*pb.base, pb.circle)
        for va, vb in zip(vals_a, vals_b):
            d = abs(_as_float(va) - _as_float(vb)) % 1.0
            d = min(d, 1.0 - d)
            if d > worst:
                worst = d
    return worst


def _as_float(v) -> float:
    return float(v)


def continuity_ratio(
    sig,
    mode: str,
    rng: random.Random,
    eps: Fraction = DEFAULT_EPS,
    wrap: bool = False,
    denominator_bound: int = 8,
) -> float | None:
    """Deviation-to-eps ratio for one perturbation probe, or None if the
    drawn query admits no perturbation.

    The base and perturbed query are planned independently; they must land
    in the same continuity domain by construction, which is asserted, and
    the ratio measures the planner's local stretch there.
    """
    product = mode == "product"
    forced: dict[int, Fraction] = {}
    if wrap:
        built = _wrap_query(sig, rng, mode)
        if built is None:
            return None
        query, forced = built
    else:
        start = sample(sig, rng, denominator_bound, with_circle=product)
        end = sample(sig, rng, denominator_bound, with_circle=product)
        query = PlannerQuery(start, end)

    nearby = perturb_query(query, sig, rng, eps=eps, forced_start=forced)
    if nearby is None:
        return None

    plan = plan_product if product else plan_skeleton
    path_a = plan(query, sig)
    path_b = plan(nearby, sig)
    if path_a.agreement != path_b.agreement:
        raise RuntimeError("perturbation changed the agreement set; corpus bug")
    if product and path_a.circle_rule.rule_index != path_b.circle_rule.rule_index:
        raise RuntimeError("perturbation changed the circle rule; corpus bug")
    return path_deviation(path_a, path_b) / float(eps)
