"""Flip graphs on the symmetric ideal classes, and their exact metrics.

Vertices are the ideals of one class on one poset.  Edges:

* ``sc``    swap one maximal member ``a`` for its dual (weight 1);
* ``cssc``  swap a full cyclic orbit (three elements, never a diagonal
            point) for its dual orbit (weight 1);
* ``tssc``  swap a full S3 orbit for its dual orbit; weight 1 when the
            orbit has three elements (two equal coordinates), weight 2
            when it has six.

The key fact driving everything here is that the geodesic distance has
a closed form: ``|I \\ J|`` for sc, and ``|I \\ J| / 3`` for the two
symmetric classes (the difference set is a union of non-diagonal
orbits, so the division is exact).  All-pairs metrics therefore reduce
to popcounts of ``mask_u & ~mask_v``, which `metric_report` evaluates
in bulk over numpy uint64 limbs instead of walking the graph.  The
graph itself (adjacency, Dijkstra) is kept as the slow cross-check.

The sc flip kernel is bit-parallel: for a self-complementary mask the
dual image equals the complement, so "every lower cover of the incoming
dual is already present" becomes a shifted-complement test, and the
only sharp corner is the element one step below its own dual, which can
never flip (its dual's cover would be the removed element itself).
"""

from __future__ import annotations

import heapq
import json
import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import cached_property

import numpy as np

from .enumeration import EnumerationResult
from .ideal import CSSC, SC, TSSC, Ideal
from .poset import CYCLIC, FULL, ChainProduct

WORKERS_ENV = "SCIDEALS_WORKERS"

#: soft bound (bytes) on one worker's pairwise block in the metric sweep
_SWEEP_BLOCK_BYTES = 32 << 20


# ----------------------------------------------------------------------
# flip kernels


def sc_flip_masks(p: ChainProduct, mask: int) -> list[int]:
    """Masks one sc flip away from ``mask`` (which must be sc).

    A maximal member ``a`` is flippable iff for every axis ``k`` along
    which the dual ``b`` has a lower cover, that cover lies in
    ``I minus a``.  With ``comp`` the complement (= dual image) of the
    mask, "``b - s_k`` is a member" reads ``ra in comp >> s_k``; the
    excluded corner is ``2 ra = V - 1 - s_k``, where the needed cover
    is ``a`` itself.  A self-dual central element (odd volume) never
    flips, but odd volume admits no sc ideals anyway.
    """
    V = p.volume
    comp = p.full_mask & ~mask
    flip = p.maximal_mask(mask)
    if V % 2:
        flip &= ~(1 << ((V - 1) // 2))
    for k in range(p.d):
        s = p.strides[k]
        cond = comp >> s
        t = V - 1 - s
        if t % 2 == 0:
            cond &= ~(1 << (t // 2))
        flip &= ~p.up_masks[k] | cond
    out = []
    v1 = V - 1
    while flip:
        low = flip & -flip
        flip ^= low
        ra = low.bit_length() - 1
        out.append(mask ^ low ^ (1 << (v1 - ra)))
    return out


def orbit_flip_masks(
    p: ChainProduct, mask: int, group: str
) -> list[tuple[int, int]]:
    """(mask, weight) pairs one orbit flip away (cyclic or full group).

    An orbit is flippable iff all its elements are maximal members and
    replacing it by its dual orbit stays downward closed.  Orbit
    elements share their coordinate sum, hence are incomparable, so
    removing a whole orbit of maximal elements is always safe; only the
    incoming duals need the closure check.  Diagonal points (singleton
    orbits) never flip.
    """
    orbits, orbit_of = p.orbit_structure(group)
    maximal = p.maximal_mask(mask)
    out = []
    seen: set[int] = set()
    m = maximal
    while m:
        low = m & -m
        m ^= low
        oi = orbit_of[low.bit_length() - 1]
        if oi in seen:
            continue
        seen.add(oi)
        ob = orbits[oi]
        if ob.size == 1:
            continue
        if ob.mask & maximal != ob.mask:
            continue
        j = (mask & ~ob.mask) | ob.dual_mask
        if p.is_downward_closed(j):
            out.append((j, ob.weight))
    return out


def flip_masks(
    p: ChainProduct, mask: int, cls: str
) -> list[tuple[int, int]]:
    """Neighbor (mask, weight) pairs for any class."""
    if cls == SC:
        return [(m, 1) for m in sc_flip_masks(p, mask)]
    if cls == CSSC:
        return orbit_flip_masks(p, mask, CYCLIC)
    if cls == TSSC:
        return orbit_flip_masks(p, mask, FULL)
    raise ValueError(f"unknown ideal class {cls!r}")


def flip_neighbors(ideal: Ideal, cls: str = SC) -> list[tuple[Ideal, int]]:
    """Neighbors of one ideal, sorted canonically (ascending mask)."""
    p = ideal.poset
    pairs = flip_masks(p, ideal.mask, cls)
    pairs.sort()
    return [(Ideal(p, m), w) for m, w in pairs]


# ----------------------------------------------------------------------
# closed-form distance


def distance(i: Ideal, j: Ideal, cls: str = SC) -> int:
    """Geodesic flip distance between two ideals of the same class."""
    diff = i.difference_size(j)
    if cls == SC:
        return diff
    if cls in (CSSC, TSSC):
        if diff % 3:
            raise ValueError(
                "difference size not divisible by 3; "
                "are both ideals in the symmetric class?"
            )
        return diff // 3
    raise ValueError(f"unknown ideal class {cls!r}")


# ----------------------------------------------------------------------
# explicit graphs


@dataclass(frozen=True)
class FlipGraph:
    """A fully built flip graph over a canonical enumeration."""

    enumeration: EnumerationResult
    edges: tuple[tuple[int, int, int], ...]  # (u, v, weight) with u < v

    @property
    def n(self) -> int:
        return len(self.enumeration)

    @cached_property
    def adjacency(self) -> tuple[tuple[tuple[int, int], ...], ...]:
        adj: list[list[tuple[int, int]]] = [[] for _ in range(self.n)]
        for u, v, w in self.edges:
            adj[u].append((v, w))
            adj[v].append((u, w))
        return tuple(tuple(sorted(a)) for a in adj)


def build_graph(enum: EnumerationResult) -> FlipGraph:
    """Materialize edges by running the flip kernel at every vertex.

    Every neighbor must land back in the vertex set and every edge must
    be discovered from both endpoints with the same weight; anything
    else means the kernel and the enumeration disagree, which is a bug
    worth crashing on.
    """
    cls = enum.symmetry
    if cls is None:
        raise ValueError("build_graph needs a class-filtered enumeration")
    p = enum.poset
    idx = enum.index
    hits: dict[tuple[int, int], list[int]] = {}
    for u, m in enumerate(enum.masks):
        for nm, w in flip_masks(p, m, cls):
            v = idx.get(nm)
            if v is None:
                raise RuntimeError(
                    f"flip neighbor of vertex {u} escaped the vertex set"
                )
            key = (u, v) if u < v else (v, u)
            hits.setdefault(key, []).append(w)
    edges = []
    for (u, v), ws in sorted(hits.items()):
        if len(ws) != 2 or ws[0] != ws[1]:
            raise RuntimeError(
                f"asymmetric flip between vertices {u} and {v}: {ws}"
            )
        edges.append((u, v, ws[0]))
    return FlipGraph(enum, tuple(edges))


def single_source_lengths(graph: FlipGraph, source: int) -> list[int]:
    """Dijkstra from one vertex; the reference for the distance formula."""
    n = graph.n
    dist = [math.inf] * n
    dist[source] = 0
    heap = [(0, source)]
    adj = graph.adjacency
    while heap:
        d, u = heapq.heappop(heap)
        if d > dist[u]:
            continue
        for v, w in adj[u]:
            nd = d + w
            if nd < dist[v]:
                dist[v] = nd
                heapq.heappush(heap, (nd, v))
    return dist


def shortest_path_oracle(graph: FlipGraph, u: int, v: int) -> int:
    d = single_source_lengths(graph, u)[v]
    if d is math.inf:
        raise ValueError(f"vertices {u} and {v} are not connected")
    return int(d)


# ----------------------------------------------------------------------
# all-pairs metrics


@dataclass(frozen=True)
class MetricReport:
    """Exact flip-graph metrics, all derived from one eccentricity sweep.

    An empty class reports zero diameter and radius with empty center
    and perimeter; a single vertex is both central and peripheral.
    """

    dims: tuple[int, ...]
    symmetry: str | None
    eccentricities: tuple[int, ...]
    diameter: int
    radius: int
    center: tuple[int, ...]
    perimeter: tuple[int, ...]

    @property
    def n_vertices(self) -> int:
        return len(self.eccentricities)

    def to_record(self) -> dict:
        return {
            "dims": list(self.dims),
            "class": self.symmetry,
            "n_vertices": self.n_vertices,
            "diameter": self.diameter,
            "radius": self.radius,
            "center": list(self.center),
            "perimeter": list(self.perimeter),
            "eccentricities": list(self.eccentricities),
        }


def resolve_workers(workers: int | None = None) -> int:
    """Explicit argument, else the environment override, else cpu count."""
    if workers is None:
        env = os.environ.get(WORKERS_ENV)
        workers = int(env) if env else (os.cpu_count() or 1)
    if workers < 1:
        raise ValueError(f"worker count must be >= 1, got {workers}")
    return workers


def _pack_masks(masks: tuple[int, ...], volume: int) -> np.ndarray:
    limbs = (volume + 63) // 64
    nbytes = limbs * 8
    arr = np.empty((len(masks), limbs), dtype=np.uint64)
    for i, m in enumerate(masks):
        arr[i] = np.frombuffer(m.to_bytes(nbytes, "little"), dtype=np.uint64)
    return arr


def _ecc_block(
    arr: np.ndarray, comp: np.ndarray, lo: int, hi: int, divisor: int
) -> np.ndarray:
    diff = arr[lo:hi, None, :] & comp[None, :, :]
    counts = np.bitwise_count(diff).sum(axis=2, dtype=np.int64)
    if divisor != 1:
        if (counts % divisor).any():
            raise ValueError(
                "pairwise difference not divisible by the orbit size; "
                "vertex set is not closed under the symmetry"
            )
        counts //= divisor
    return counts.max(axis=1)


def metric_report(
    enum: EnumerationResult, workers: int | None = None
) -> MetricReport:
    """Diameter, radius, center and perimeter by a bulk popcount sweep.

    The pairwise distance is ``popcount(mask_u & ~mask_v)`` (divided by
    3 for the symmetric classes), so one row of the distance matrix is
    a vectorized AND-NOT and popcount over uint64 limbs.  Rows are
    processed in blocks sized to keep the intermediate array small, and
    blocks are spread over a thread pool (numpy releases the GIL).
    """
    dims = enum.poset.dims
    cls = enum.symmetry
    n = len(enum)
    if n == 0:
        return MetricReport(dims, cls, (), 0, 0, (), ())
    divisor = 3 if cls in (CSSC, TSSC) else 1
    arr = _pack_masks(enum.masks, enum.poset.volume)
    comp = ~arr  # junk high bits are harmless: every mask is 0 there
    limbs = arr.shape[1]
    block = max(1, _SWEEP_BLOCK_BYTES // max(1, n * limbs * 8))
    ranges = [(lo, min(lo + block, n)) for lo in range(0, n, block)]
    workers = resolve_workers(workers)
    if workers > 1 and len(ranges) > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            parts = list(
                pool.map(
                    lambda r: _ecc_block(arr, comp, r[0], r[1], divisor),
                    ranges,
                )
            )
    else:
        parts = [_ecc_block(arr, comp, lo, hi, divisor) for lo, hi in ranges]
    ecc = np.concatenate(parts)
    diameter = int(ecc.max())
    radius = int(ecc.min())
    center = tuple(int(i) for i in np.flatnonzero(ecc == radius))
    perimeter = tuple(int(i) for i in np.flatnonzero(ecc == diameter))
    return MetricReport(
        dims,
        cls,
        tuple(int(e) for e in ecc),
        diameter,
        radius,
        center,
        perimeter,
    )


def distances_from(enum: EnumerationResult, ideal: Ideal) -> list[int]:
    """Distances from one ideal to every enumerated vertex (exact)."""
    divisor = 3 if enum.symmetry in (CSSC, TSSC) else 1
    m = ideal.mask
    out = []
    for other in enum.masks:
        diff = (m & ~other).bit_count()
        if diff % divisor:
            raise ValueError("difference size not divisible by orbit size")
        out.append(diff // divisor)
    return out


# ----------------------------------------------------------------------
# export


def export(graph: FlipGraph, fmt: str, report: MetricReport | None = None) -> str:
    """Serialize a graph as DOT or JSON, coloring center and perimeter.

    The DOT form fills center vertices blue and perimeter vertices red
    (center wins when the graph is so small a vertex is both), and
    writes the edge weight as an attribute.
    """
    if report is None:
        report = metric_report(graph.enumeration)
    if fmt == "dot":
        center = set(report.center)
        perimeter = set(report.perimeter)
        lines = ["graph flips {", "  node [style=filled fillcolor=white];"]
        for u in range(graph.n):
            attrs = []
            if u in center:
                attrs.append('color=blue fillcolor="#c8d8f8"')
            elif u in perimeter:
                attrs.append('color=red fillcolor="#f8d0c8"')
            body = f" [{' '.join(attrs)}]" if attrs else ""
            lines.append(f"  v{u}{body};")
        for u, v, w in graph.edges:
            lines.append(f"  v{u} -- v{v} [weight={w}];")
        lines.append("}")
        return "\n".join(lines) + "\n"
    if fmt == "json":
        enum = graph.enumeration
        payload = {
            "dims": list(enum.poset.dims),
            "class": enum.symmetry,
            "vertices": [v.member_ranks() for v in enum.vertices],
            "edges": [list(e) for e in graph.edges],
            "report": report.to_record(),
        }
        return json.dumps(payload, indent=2) + "\n"
    raise ValueError(f"unknown graph export format {fmt!r}")


def eccentricity_csv(report: MetricReport) -> str:
    """The per-vertex eccentricity table as CSV."""
    lines = ["vertex_id,eccentricity"]
    lines += [f"{i},{e}" for i, e in enumerate(report.eccentricities)]
    return "\n".join(lines) + "\n"
