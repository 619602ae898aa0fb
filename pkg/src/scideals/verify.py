"""Claim-by-claim verification suites over the desk-scale instances.

Each suite turns one family of provable statements into exhaustive
machine checks at sizes where full enumeration is feasible:

* ``distance``          graph geodesics equal the set-difference formula;
* ``counts``            flip enumeration matches closed forms and the
                        brute-force ideal scan;
* ``ideal-bound``       total ideal counts respect 4^(n^(d-1));
* ``correlation``       intersection densities dominate products, with
                        the sc sharpenings;
* ``sc-diameter``       all-pairs maxima match the piecewise formula;
* ``sc-radius``         radii match the proven values and the d <= 3
                        half-diameter law (with its mod-4 exception);
* ``sc-radius-lb``      radii respect the all-even lower bound;
* ``even-d-conjecture`` the conjectured ceilings for even d, including
                        the hypercube family centers;
* ``cssc``              the cube battery: metrics, center, mandatory
                        points, furthest census, shells, 2-D staircase;
* ``tssc``              the fully symmetric battery and weight audit;
* ``chvatal``           the intersecting-family instances.

Checks record expected vs observed values.  Failures of checks labeled
conjectural are reported as conjecture violations - scientifically
interesting, not a build break - and the top-level status keeps the
three cases (pass / conjecture-violated / fail) apart.  Instances that
trip an enumeration guard are reported as skipped, never silently
dropped.
"""

from __future__ import annotations

import itertools
import math
import time
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from xml.etree import ElementTree

from . import chvatal
from .constructions import (
    compose_shell,
    cssc_diameter_value,
    cssc_must_include_points,
    cssc_radius_value,
    cssc_witness_pair,
    hypercube_center,
    majority_ideal,
    mod4_center,
    octant_ideal_cssc,
    partitioned_center,
    pyramid_ideal,
    sc_diameter_pair,
    sc_diameter_value,
    sc_radius_bound,
    shell_ideal,
    staircase_2d,
    staircase_c2r,
    tssc_diameter_value,
    tssc_extremes,
    tssc_mandatory,
)
from .enumeration import (
    EnumerationResult,
    count_closed,
    enumerate_count,
    enumerate_ideals,
    oracle_enumerate,
)
from .ideal import CSSC, SC, TSSC, Ideal
from .metric import (
    build_graph,
    distance,
    distances_from,
    metric_report,
    single_source_lengths,
)
from .poset import ShapeError

SWEEP_MAX_VOLUME = 216
ALL_PAIRS_LIMIT = 3000
DISTANCE_ORACLE_LIMIT = 100
COUNTS_DEFAULT_LIMIT = 50_000

#: shapes beyond the closed-form reach that stay enumerable
_EXTRA_SC_DIMS = (
    (2, 2, 2, 2),
    (2, 2, 2, 4),
    (2, 2, 2, 2, 2),
    (2, 2, 2, 2, 2, 2),
)


@dataclass(frozen=True)
class CheckResult:
    """One verified statement instance."""

    name: str
    status: str  # "pass" | "fail" | "skip"
    expected: object = None
    observed: object = None
    conjectural: bool = False
    note: str = ""

    def to_record(self) -> dict:
        rec = {"name": self.name, "status": self.status}
        if self.expected is not None or self.observed is not None:
            rec["expected"] = _jsonable(self.expected)
            rec["observed"] = _jsonable(self.observed)
        if self.conjectural:
            rec["conjectural"] = True
        if self.note:
            rec["note"] = self.note
        return rec


def _jsonable(value):
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, (tuple, set, frozenset)):
        return [_jsonable(v) for v in value]
    return value


@dataclass
class SuiteReport:
    """All checks of one suite, with wall-clock runtime."""

    name: str
    checks: list[CheckResult] = field(default_factory=list)
    seconds: float = 0.0

    @property
    def counts(self) -> dict:
        out = {"pass": 0, "fail": 0, "skip": 0}
        for c in self.checks:
            out[c.status] += 1
        return out

    @property
    def hard_failures(self) -> list[CheckResult]:
        return [
            c for c in self.checks if c.status == "fail" and not c.conjectural
        ]

    @property
    def conjecture_violations(self) -> list[CheckResult]:
        return [c for c in self.checks if c.status == "fail" and c.conjectural]

    @property
    def status(self) -> str:
        if self.hard_failures:
            return "fail"
        if self.conjecture_violations:
            return "conjecture-violated"
        if self.counts["pass"] == 0 and self.counts["skip"] > 0:
            return "skip"
        return "pass"

    def to_record(self) -> dict:
        return {
            "suite": self.name,
            "status": self.status,
            "seconds": round(self.seconds, 3),
            "counts": self.counts,
            "checks": [c.to_record() for c in self.checks],
        }


class _Suite:
    """Collects check results with uniform bookkeeping."""

    def __init__(self, name: str):
        self.report = SuiteReport(name)

    def check(self, name, ok, expected=None, observed=None,
              conjectural=False, note=""):
        self.report.checks.append(CheckResult(
            name, "pass" if ok else "fail", expected, observed,
            conjectural, note,
        ))

    def equal(self, name, observed, expected, conjectural=False, note=""):
        self.check(name, observed == expected, expected, observed,
                   conjectural, note)

    def skip(self, name, note):
        self.report.checks.append(CheckResult(name, "skip", note=note))


# ----------------------------------------------------------------------
# shared, cached instance data


@lru_cache(maxsize=None)
def sc_sweep(max_volume: int = SWEEP_MAX_VOLUME) -> tuple[tuple[int, ...], ...]:
    """All canonical (non-decreasing) dims with d <= 3 and even volume."""
    out: list[tuple[int, ...]] = []

    def extend(prefix: tuple[int, ...], volume: int) -> None:
        if prefix and volume % 2 == 0:
            out.append(prefix)
        if len(prefix) == 3:
            return
        low = prefix[-1] if prefix else 1
        for l in range(low, max_volume + 1):
            if volume * l > max_volume:
                break
            extend(prefix + (l,), volume * l)

    extend((), 1)
    return tuple(out)


@lru_cache(maxsize=None)
def _enum(dims: tuple[int, ...], cls: str) -> EnumerationResult:
    return enumerate_ideals(dims, cls, force=True)


@lru_cache(maxsize=None)
def _report(dims: tuple[int, ...], cls: str):
    return metric_report(_enum(dims, cls))


@lru_cache(maxsize=None)
def _sc_count(dims: tuple[int, ...]) -> int:
    try:
        return count_closed(dims, SC)
    except ShapeError:
        return enumerate_count(dims, SC, force=True)


def _all_pairs_instances() -> list[tuple[int, ...]]:
    """The sc shapes small enough for exact all-pairs sweeps."""
    shapes = [
        dims for dims in sc_sweep() if 0 < _sc_count(dims) <= ALL_PAIRS_LIMIT
    ]
    shapes += [
        dims for dims in _EXTRA_SC_DIMS if _sc_count(dims) <= ALL_PAIRS_LIMIT
    ]
    return shapes


# ----------------------------------------------------------------------
# suites


def _suite_distance(slow: bool) -> SuiteReport:
    """Weighted geodesics equal the closed-form distance, all pairs."""
    s = _Suite("distance")
    instances: list[tuple[tuple[int, ...], str]] = [
        (dims, SC)
        for dims in sc_sweep()
        if 0 < _sc_count(dims) <= DISTANCE_ORACLE_LIMIT
    ]
    instances += [
        (dims, SC) for dims in _EXTRA_SC_DIMS
        if _sc_count(dims) <= DISTANCE_ORACLE_LIMIT
    ]
    instances += [((2 * r,) * 3, CSSC) for r in (1, 2, 3)]
    instances += [((2 * r,) * 3, TSSC) for r in (1, 2, 3, 4)]
    bad = 0
    pairs = 0
    for dims, cls in instances:
        enum = _enum(dims, cls)
        graph = build_graph(enum)
        for u in range(len(enum)):
            lengths = single_source_lengths(graph, u)
            for v in range(len(enum)):
                pairs += 1
                want = distance(enum.vertices[u], enum.vertices[v], cls)
                if lengths[v] != want:
                    bad += 1
    s.check(
        f"geodesic = set-difference formula over {len(instances)} "
        f"instances (every class, <= {DISTANCE_ORACLE_LIMIT} vertices)",
        bad == 0,
        expected=f"{pairs} matching pairs",
        observed=f"{pairs - bad} matching, {bad} mismatched",
    )
    return s.report


def _suite_counts(slow: bool) -> SuiteReport:
    """Closed forms vs flip enumeration vs the brute-force scan."""
    s = _Suite("counts")
    skipped = []
    for dims in sc_sweep():
        want = count_closed(dims, SC)
        if want == 0:
            continue  # the all-odd shapes are checked below
        if want > COUNTS_DEFAULT_LIMIT and not slow:
            skipped.append(dims)
            continue
        got = enumerate_count(dims, SC, force=True)
        if got != want:
            s.equal(f"sc count {dims}", got, want)
    s.check(
        "sc counts: flip closure = closed form over the full d <= 3 sweep",
        all(c.status == "pass" for c in s.report.checks),
        expected="all equal",
        observed="all equal" if not s.report.checks else "mismatches above",
        note=f"volume <= {SWEEP_MAX_VOLUME}"
             + (f"; {len(skipped)} large shapes deferred to --slow"
                if skipped else ""),
    )
    if skipped and not slow:
        s.skip(
            f"sc counts above {COUNTS_DEFAULT_LIMIT} vertices",
            f"{len(skipped)} shapes (largest {max(skipped, key=math.prod)}) "
            "run with the slow flag",
        )
    for dims in ((3, 3), (3, 5, 7), (5,)):
        s.equal(f"sc count {dims} (odd volume)", count_closed(dims, SC), 0)
    for r, want in ((1, 1), (2, 4), (3, 49), (4, 1764)):
        s.equal(
            f"cssc count r={r}",
            enumerate_count((2 * r,) * 3, CSSC),
            want,
        )
        assert count_closed((2 * r,) * 3, CSSC) == want
    tssc_rs = ((1, 1), (2, 2), (3, 7), (4, 42), (5, 429))
    if slow:
        tssc_rs += ((6, 7436),)
    else:
        s.skip("tssc count r=6", "7436-vertex enumeration runs with --slow")
    for r, want in tssc_rs:
        s.equal(
            f"tssc count r={r}",
            enumerate_count((2 * r,) * 3, TSSC),
            want,
        )
        assert count_closed((2 * r,) * 3, TSSC) == want
    # brute-force cross-checks: the scan sees every ideal, so class
    # filters of it are an enumeration oracle independent of flips
    s.equal("ideals of [3]^2", len(oracle_enumerate((3, 3))), 20)
    s.equal("ideals of [2]^3", len(oracle_enumerate((2, 2, 2))), 20)
    s.equal(
        "sc filter of the scan = flip closure on (2,3)",
        oracle_enumerate((2, 3), SC).masks,
        _enum((2, 3), SC).masks,
    )
    s.equal(
        "sc filter of the scan on (4,4)",
        oracle_enumerate((4, 4), SC).masks,
        _enum((4, 4), SC).masks,
    )
    scan444 = oracle_enumerate((4, 4, 4), CSSC, force=True)
    s.equal(
        "cssc filter of the scan = flip closure on r=2",
        scan444.masks,
        _enum((4, 4, 4), CSSC).masks,
    )
    s.equal(
        "tssc filter of the scan on r=2",
        oracle_enumerate((4, 4, 4), TSSC, force=True).masks,
        _enum((4, 4, 4), TSSC).masks,
    )
    return s.report


def _suite_ideal_bound(slow: bool) -> SuiteReport:
    """Total ideal counts of [n]^d stay under 4^(n^(d-1)), d >= 2."""
    s = _Suite("ideal-bound")
    for n, d in ((2, 2), (3, 2), (4, 2), (5, 2), (2, 3), (3, 3), (2, 4)):
        total = len(oracle_enumerate((n,) * d))
        bound = 4 ** (n ** (d - 1))
        s.check(
            f"[{n}]^{d}: {total} ideals <= 4^({n}^{d - 1})",
            total <= bound,
            expected=f"<= {bound}",
            observed=total,
        )
    return s.report


def _suite_correlation(slow: bool) -> SuiteReport:
    """Intersection density dominates the product, plus sc sharpenings."""
    s = _Suite("correlation")
    for dims in ((3, 3), (2, 2, 2)):
        vol = math.prod(dims)
        masks = oracle_enumerate(dims).masks
        bad = sum(
            1
            for a, b in itertools.combinations_with_replacement(masks, 2)
            if (a & b).bit_count() * vol < a.bit_count() * b.bit_count()
        )
        s.check(
            f"mu(I and J) >= mu(I) mu(J) over all ideal pairs of {dims}",
            bad == 0,
            expected="0 violations",
            observed=f"{bad} violations over {len(masks)} ideals",
        )
    # sc pairs: |I and J| = V/2 - |I \ J|, so the intersection bound is
    # one and the same statement as the diameter bound; check it in its
    # own terms over the all-pairs instances
    for dims in _all_pairs_instances():
        vol = math.prod(dims)
        evens = [l for l in dims if l % 2 == 0]
        slack = evens[0] if len(evens) == 1 else 0
        rep = _report(dims, SC)
        worst = vol // 2 - rep.diameter
        s.check(
            f"sc pairs of {dims}: |I and J| >= (V + {slack})/4",
            worst * 4 >= vol + slack,
            expected=f">= {(vol + slack + 3) // 4}",
            observed=worst,
        )
    return s.report


def _suite_sc_diameter(slow: bool) -> SuiteReport:
    """All-pairs maxima match the piecewise diameter formula."""
    s = _Suite("sc-diameter")
    shapes = _all_pairs_instances()
    bad = []
    for dims in shapes:
        rep = _report(dims, SC)
        if rep.diameter != sc_diameter_value(dims):
            bad.append((dims, rep.diameter, sc_diameter_value(dims)))
    s.check(
        f"diameter formula over {len(shapes)} shapes "
        f"(<= {ALL_PAIRS_LIMIT} vertices)",
        not bad,
        expected="all equal",
        observed=bad or "all equal",
    )
    for dims in ((2, 3, 4), (2, 3, 3), (4, 4), (2, 2)):
        a, b = sc_diameter_pair(dims)
        s.equal(
            f"construction pair realizes the diameter on {dims}",
            distance(a, b, SC),
            sc_diameter_value(dims),
        )
    for dims in ((3, 3, 3), (5, 7, 9)):
        s.equal(
            f"all-odd {dims}: empty class, diameter formula 0",
            (count_closed(dims, SC), sc_diameter_value(dims)),
            (0, 0),
        )
    return s.report


def _is_two_three_three(dims: tuple[int, ...]) -> bool:
    return sorted(l % 4 for l in dims) == [2, 3, 3]


def _suite_sc_radius(slow: bool) -> SuiteReport:
    """Proven radius values, and the d <= 3 half-diameter law."""
    s = _Suite("sc-radius")
    exact_cases = (
        ((2, 2, 2), majority_ideal),
        ((2, 6, 10), majority_ideal),
        ((2, 4), mod4_center),
        ((4, 4), mod4_center),
        ((2, 2, 4), mod4_center),
        ((2, 4, 6), mod4_center),
    )
    for dims, build in exact_cases:
        bound = sc_radius_bound(dims)
        assert bound.denominator == 1
        rep = _report(dims, SC)
        s.equal(f"radius of {dims} equals the exact bound",
                rep.radius, int(bound))
        witness = build(dims)
        idx = _enum(dims, SC).index[witness.mask]
        s.equal(
            f"{build.__name__} on {dims} is central",
            (rep.eccentricities[idx], idx in rep.center),
            (rep.radius, True),
        )
    for dims in ((2, 2, 2), (2, 6, 10), (4, 4), (2, 2, 4), (3, 5, 8),
                 (2, 3, 4), (2, 2), (2, 6)):
        named = partitioned_center(dims)
        rep = _report(dims, SC)
        idx = _enum(dims, SC).index[named.ideal.mask]
        s.equal(
            f"partitioned center of {dims} is central",
            (rep.eccentricities[idx], idx in rep.center),
            (rep.radius, True),
            conjectural=named.conjectural,
            note=named.note,
        )
    # the d <= 3 law: radius = ceil(diam/2), except that shapes whose
    # dimensions are 2,3,3 mod 4 may sit one higher
    plain_bad, exceptional = [], []
    shapes = [d for d in _all_pairs_instances() if len(d) <= 3]
    for dims in shapes:
        rep = _report(dims, SC)
        half = -(-rep.diameter // 2)
        if _is_two_three_three(dims):
            if rep.radius not in (half, half + 1):
                plain_bad.append((dims, rep.radius, half))
            elif rep.radius == half + 1:
                exceptional.append(dims)
        elif rep.radius != half:
            plain_bad.append((dims, rep.radius, half))
    s.check(
        f"radius = ceil(diameter/2) over {len(shapes)} shapes of d <= 3 "
        "(2,3,3-mod-4 shapes allowed +1)",
        not plain_bad,
        expected="all within the law",
        observed=plain_bad or "all within the law",
        note="mod-4 exceptional shapes actually excessive: "
             + (str(exceptional) if exceptional else "none"),
    )
    return s.report


def _suite_sc_radius_lb(slow: bool) -> SuiteReport:
    """All-even radii respect the binomial lower bound."""
    s = _Suite("sc-radius-lb")
    shapes = [
        dims for dims in _all_pairs_instances()
        if all(l % 2 == 0 for l in dims)
    ]
    bad = []
    for dims in shapes:
        rep = _report(dims, SC)
        if Fraction(rep.radius) < sc_radius_bound(dims):
            bad.append((dims, rep.radius, sc_radius_bound(dims)))
    s.check(
        f"radius >= (1/4 - C(d-1,..)/2^(d+1)) V over {len(shapes)} "
        "all-even shapes",
        not bad,
        expected="no shape below the bound",
        observed=bad or "no shape below the bound",
    )
    exact = [
        dims for dims in shapes
        if len(dims) % 2 == 1 or any(l % 4 == 0 for l in dims)
    ]
    off = []
    for dims in exact:
        rep = _report(dims, SC)
        if Fraction(rep.radius) != sc_radius_bound(dims):
            off.append((dims, rep.radius, sc_radius_bound(dims)))
    s.check(
        f"bound exact on the {len(exact)} shapes with d odd or a "
        "dimension divisible by 4",
        not off,
        expected="radius equals the bound",
        observed=off or "radius equals the bound",
    )
    return s.report


def _conjectured_even_radius(dims: tuple[int, ...]) -> int:
    bound = sc_radius_bound(dims)
    d = len(dims)
    if d & (d - 1) == 0:
        bound += Fraction(1, 2)
    return math.ceil(bound)


def _suite_even_d(slow: bool) -> SuiteReport:
    """Conjectured radii for even d with no dimension divisible by 4."""
    s = _Suite("even-d-conjecture")
    for dims, want in (
        ((2, 2), 1),
        ((2, 6), 2),
        ((6, 6), 5),
        ((2, 2, 2, 2), 3),
        ((2, 2, 2, 2, 2, 2), 11),
    ):
        assert _conjectured_even_radius(dims) == want
        rep = _report(dims, SC)
        s.equal(
            f"radius of {dims} equals the conjectured ceiling {want}",
            rep.radius, want,
            conjectural=True,
        )
    for d, want in ((2, 1), (4, 3), (6, 11)):
        dims = (2,) * d
        center = hypercube_center(d)
        enum = _enum(dims, SC)
        ecc = max(distances_from(enum, center))
        s.equal(
            f"[2]^{d} family center eccentricity",
            ecc, want,
            note="equals the intersecting-family maximum",
        )
        size, _w = chvatal.max_intersecting(
            chvatal.instance_family(chvatal.ALL_SMALL, d)
        )
        s.equal(
            f"[2]^{d} conjectured radius = family intersecting maximum",
            _conjectured_even_radius(dims), size,
        )
    return s.report


def _cssc_furthest(r: int) -> tuple[EnumerationResult, Ideal, list[int]]:
    enum = _enum((2 * r,) * 3, CSSC)
    center = staircase_c2r(r)
    dist = distances_from(enum, center)
    radius = cssc_radius_value(r)
    return enum, center, [i for i, d in enumerate(dist) if d == radius]


def _suite_cssc(slow: bool) -> SuiteReport:
    """The cyclically symmetric cube battery, r <= 4."""
    s = _Suite("cssc")
    for r in (1, 2, 3, 4):
        dims = (2 * r,) * 3
        enum = _enum(dims, CSSC)
        rep = _report(dims, CSSC)
        s.equal(f"r={r}: diameter", rep.diameter, cssc_diameter_value(r))
        s.equal(f"r={r}: radius", rep.radius, cssc_radius_value(r))
        c_idx = enum.index[staircase_c2r(r).mask]
        s.equal(
            f"r={r}: staircase eccentricity equals the radius",
            rep.eccentricities[c_idx], rep.radius,
        )
        s.equal(
            f"r={r}: center is exactly the staircase",
            rep.center, (c_idx,),
            conjectural=True,
            note="center membership proven; uniqueness only observed",
        )
        must = cssc_must_include_points(r)
        w1, w2 = cssc_witness_pair(r)
        bad = [
            v.mask for v in enum.vertices
            if not (all(m in v for m in must) and (w1 in v or w2 in v))
        ]
        s.check(
            f"r={r}: mandatory diagonal points and witness pair "
            f"in all {len(enum)} vertices",
            not bad,
            expected="none missing",
            observed=f"{len(bad)} vertices missing points" if bad else
                     "none missing",
        )
        _e, _c, furthest = _cssc_furthest(r)
        s.equal(
            f"r={r}: vertices furthest from the staircase",
            len(furthest), 3 ** (r - 1),
        )
        s.check(
            f"r={r}: perimeter within the furthest set",
            set(rep.perimeter) <= set(furthest),
            expected="subset",
            observed=f"perimeter {len(rep.perimeter)} of "
                     f"{len(furthest)} furthest",
            note="strictly smaller from r=4 on" if r >= 4 else "",
        )
    for r in (2, 3, 4, 5):
        s.equal(
            f"r={r}: octant vs pyramid distance realizes the diameter",
            distance(octant_ideal_cssc(r), pyramid_ideal(r), CSSC),
            cssc_diameter_value(r),
        )
    # shells: every furthest vertex is a furthest core wearing a shell,
    # and the shells that extend a core are the two boundary ones plus
    # the successor of the core's own
    for r in (2, 3):
        enum, center, furthest = _cssc_furthest(r)
        shells = {shell_ideal(k, r).members: k for k in range(1, 2 * r)}
        # map each furthest vertex of the previous level to the index of
        # the shell it wears (at r-1 = 1 the whole vertex is shell 1)
        p_enum, _pc, p_f = _cssc_furthest(r - 1)
        prev_furthest: dict[int, int] = {}
        if r - 1 == 1:
            prev_furthest = {p_enum.vertices[i].mask: 1 for i in p_f}
        else:
            prev_shells = {
                shell_ideal(k, r - 1).members: k
                for k in range(1, 2 * (r - 1))
            }
            for i in p_f:
                _core, sh = p_enum.vertices[i].core_shell()
                prev_furthest[p_enum.vertices[i].mask] = prev_shells[
                    tuple(sorted(sh))
                ]
        decompose_ok = True
        predicted: set[tuple[int, int]] = set()
        for mask, k_core in prev_furthest.items():
            for k in {1, 2 * r - 1, k_core + 1}:
                predicted.add((mask, k))
        observed: set[tuple[int, int]] = set()
        for i in furthest:
            core, sh = enum.vertices[i].core_shell()
            key = tuple(sorted(sh))
            if key not in shells or core.mask not in prev_furthest:
                decompose_ok = False
                break
            observed.add((core.mask, shells[key]))
            rebuilt = compose_shell(core, sh)
            decompose_ok = decompose_ok and rebuilt.mask == enum.vertices[i].mask
        s.check(
            f"r={r}: furthest = furthest core + shell, composing back",
            decompose_ok,
            expected="all decompose and recompose",
            observed="ok" if decompose_ok else "decomposition failed",
        )
        s.equal(
            f"r={r}: the (core, shell) tree rule",
            observed, predicted,
        )
    # the 2-D staircase bound behind the shell analysis
    for r in range(2, 6):
        for k in range(0, r - 1):
            rect = (r - k - 1, r + k)
            c = staircase_2d(r, k)
            limit = (r + k) * (r - k - 1) // 2
            full = (1 << math.prod(rect)) - 1
            bad = 0
            eq = []
            for m in oracle_enumerate(rect).masks:
                sym = (c.mask ^ m).bit_count()
                if sym > limit:
                    bad += 1
                elif sym == limit:
                    eq.append(m)
            s.check(
                f"2-D staircase bound on {rect} (r={r}, k={k})",
                bad == 0 and sorted(eq) == sorted((0, full)),
                expected=f"<= {limit}, equality only at empty/full",
                observed=f"{bad} over, {len(eq)} equality cases",
            )
    return s.report


def _suite_tssc(slow: bool) -> SuiteReport:
    """The fully symmetric cube battery, r <= 5 (r=6 behind --slow)."""
    s = _Suite("tssc")
    diameters = {1: 0, 2: 1, 3: 5, 4: 14, 5: 30, 6: 55}
    radii = {1: 0, 2: 1, 3: 3, 4: 7, 5: 15, 6: 28}
    center_sizes = {1: 1, 2: 2, 3: 1, 4: 1, 5: 8}
    rs = (1, 2, 3, 4, 5, 6) if slow else (1, 2, 3, 4, 5)
    if not slow:
        s.skip("r=6 battery", "7436-vertex sweep runs with --slow")
    for r in rs:
        dims = (2 * r,) * 3
        rep = _report(dims, TSSC)
        s.equal(f"r={r}: diameter", rep.diameter, tssc_diameter_value(r))
        assert tssc_diameter_value(r) == diameters[r]
        s.equal(
            f"r={r}: radius = ceil(diameter/2)",
            rep.radius, radii[r],
            conjectural=True,
        )
        if r in center_sizes:
            s.equal(
                f"r={r}: center size",
                len(rep.center), center_sizes[r],
                note="two vertices at distance 1 are both central"
                     if r == 2 else "",
            )
        least, greatest = tssc_extremes(r)
        s.equal(
            f"r={r}: extreme pair distance realizes the diameter",
            distance(least, greatest, TSSC),
            rep.diameter,
        )
        enum = _enum(dims, TSSC)
        mand = tssc_mandatory(r).mask
        bad = sum(1 for v in enum.vertices if mand & ~v.mask)
        s.check(
            f"r={r}: mandatory region inside all {len(enum)} vertices",
            bad == 0,
            expected="0 vertices missing it",
            observed=bad,
        )
        if r <= 4:
            graph = build_graph(enum)
            audit_ok = True
            for u, v, w in graph.edges:
                moved = enum.masks[u] & ~enum.masks[v]
                if moved.bit_count() != 3 * w:
                    audit_ok = False
                coords = [
                    enum.poset.unrank(i)
                    for i in range(enum.poset.volume)
                    if moved >> i & 1
                ]
                distinct = all(len(set(a)) == 3 for a in coords)
                repeated = all(len(set(a)) < 3 for a in coords)
                if w == 2 and not distinct:
                    audit_ok = False
                if w == 1 and not repeated:
                    audit_ok = False
            s.check(
                f"r={r}: weight audit (1 = repeated-coordinate orbit, "
                "2 = all-distinct orbit)",
                audit_ok,
                expected="every edge consistent",
                observed="ok" if audit_ok else "inconsistent edge found",
            )
    return s.report


def _suite_chvatal(slow: bool) -> SuiteReport:
    """The intersecting-family instances and the five-block hand proof."""
    s = _Suite("chvatal")
    for d in (2, 4, 6):
        s.check(
            f"H({d}) is a balanced half-size family",
            chvatal.is_uniform(chvatal.verified_family(d), d),
            expected=True,
            observed=True,
        )
    for which in chvatal.INSTANCES:
        for d in (2, 4, 6):
            rep = chvatal.verify_conjecture(which, d)
            s.check(
                f"{which} at d={d}: maximum {rep['max_intersecting']} "
                f"= bound {rep['bound']}",
                rep["pass"],
                expected=rep["bound"],
                observed=rep["max_intersecting"],
                note=f"witness of size {len(rep['witness'])}",
            )
    audit = chvatal.audit_blocks()
    s.check(
        "five-block partition: blocks cover the near-half family, "
        "each admitting at most two intersecting members",
        audit["ok"],
        expected="partition with block maxima (2,2,2,2,2)",
        observed=f"partition={audit['partition']}, "
                 f"maxima={audit['block_maxima']}",
    )
    return s.report


SUITES = {
    "distance": _suite_distance,
    "counts": _suite_counts,
    "ideal-bound": _suite_ideal_bound,
    "correlation": _suite_correlation,
    "sc-diameter": _suite_sc_diameter,
    "sc-radius": _suite_sc_radius,
    "sc-radius-lb": _suite_sc_radius_lb,
    "even-d-conjecture": _suite_even_d,
    "cssc": _suite_cssc,
    "tssc": _suite_tssc,
    "chvatal": _suite_chvatal,
}


def run_suite(name: str, slow: bool = False) -> SuiteReport:
    """Run one named suite and time it."""
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; have {sorted(SUITES)}")
    start = time.monotonic()
    report = SUITES[name](slow)
    report.seconds = time.monotonic() - start
    return report


def run_all(
    names=None, slow: bool = False, progress=None
) -> list[SuiteReport]:
    """Run the named suites (all by default) in declaration order."""
    if names is None:
        names = list(SUITES)
    reports = []
    for name in names:
        report = run_suite(name, slow=slow)
        reports.append(report)
        if progress is not None:
            counts = report.counts
            progress(
                f"suite {name}: {report.status} "
                f"({counts['pass']} pass, {counts['fail']} fail, "
                f"{counts['skip']} skip; {report.seconds:.1f}s)"
            )
    return reports


def overall_status(reports) -> str:
    """pass / conjecture-violated / fail / skip across suites."""
    statuses = {r.status for r in reports}
    if "fail" in statuses:
        return "fail"
    if "conjecture-violated" in statuses:
        return "conjecture-violated"
    if statuses <= {"skip"}:
        return "skip"
    return "pass"


def junit_xml(reports) -> str:
    """Standard test-results XML for CI consumption."""
    root = ElementTree.Element("testsuites")
    for rep in reports:
        counts = rep.counts
        suite = ElementTree.SubElement(
            root,
            "testsuite",
            name=rep.name,
            tests=str(len(rep.checks)),
            failures=str(counts["fail"]),
            skipped=str(counts["skip"]),
            time=f"{rep.seconds:.3f}",
        )
        for c in rep.checks:
            case = ElementTree.SubElement(
                suite, "testcase", classname=rep.name, name=c.name
            )
            if c.status == "fail":
                kind = (
                    "conjecture violated" if c.conjectural else "mismatch"
                )
                ElementTree.SubElement(
                    case,
                    "failure",
                    message=f"{kind}: expected {c.expected!r}, "
                            f"observed {c.observed!r}",
                )
            elif c.status == "skip":
                ElementTree.SubElement(case, "skipped", message=c.note)
    return ElementTree.tostring(root, encoding="unicode")
