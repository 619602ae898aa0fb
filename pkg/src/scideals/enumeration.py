"""Counting and enumerating the symmetric ideal classes.

Closed-form counts
------------------
For ``d <= 3`` the self-complementary ideals of ``[l_1] x ... x [l_d]``
are counted by binomials and boxed plane-partition products: with the
even dimension rotated last,

    d = 1:  1 when l_1 is even,
    d = 2:  C(floor(l_1/2) + floor(l_2/2), floor(l_1/2)),
    d = 3:  PP(floor(l_1/2), ceil(l_2/2), l_3/2)
            * PP(ceil(l_1/2), floor(l_2/2), l_3/2),

where ``PP(a, b, c)`` is the number of plane partitions in an
``a x b x c`` box (MacMahon's product, evaluated here in exact rational
arithmetic).  An all-odd product has odd volume, hence no sc ideals at
all.  No closed form is implemented for ``d >= 4`` with even volume.

On even cubes ``[2r]^3`` the cyclically symmetric sc ideals are counted
by the square of ``prod_{j<r} (3j+1)!/(r+j)!`` and the totally
symmetric ones by the same product unsquared: 1, 2, 7, 42, 429, 7436
for ``r = 1..6``.

Enumeration
-----------
``enumerate_ideals`` runs a breadth-first closure of the class seed
under flips; that the flip graph is connected for each class is
exercised against the closed-form counts by the verification suites.
``oracle_enumerate`` is the slow reference: a depth-first scan over all
downward-closed sets (in rank order, each element may join only when
its lower covers already have), optionally filtered by class.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property
from typing import Sequence

from .ideal import CLASSES, CSSC, SC, TSSC, Ideal
from .poset import ChainProduct, ShapeError

BFS_FLIP = "bfs_flip"
ORACLE_DFS = "oracle_dfs"

#: refuse flip enumerations expected to exceed this many vertices
DEFAULT_VERTEX_GUARD = 2_000_000
#: refuse flip enumerations of unknown size above this many poset elements
DEFAULT_VOLUME_GUARD = 36
#: refuse the brute-force ideal scan above this many poset elements
ORACLE_VOLUME_GUARD = 30
#: ... unless a class filter keeps the retained set small
ORACLE_FILTERED_VOLUME_GUARD = 36


class EnumerationGuardError(RuntimeError):
    """The requested enumeration looks too large; pass force to insist."""


class PartialEnumerationError(RuntimeError):
    """A caller-supplied cap was hit; carries the progress made."""

    def __init__(self, visited: int, cap: int):
        super().__init__(
            f"enumeration exceeded cap={cap} ({visited} vertices reached)"
        )
        self.visited = visited
        self.cap = cap


class EmptyClassError(ValueError):
    """The class has no members on this poset (e.g. odd volume)."""


# ----------------------------------------------------------------------
# closed-form counts


def _plane_partition_box(a: int, b: int, c: int) -> int:
    """Plane partitions in an a x b x c box, by the classical product."""
    f = Fraction(1)
    for i in range(1, a + 1):
        for j in range(1, b + 1):
            for k in range(1, c + 1):
                f *= Fraction(i + j + k - 1, i + j + k - 2)
    assert f.denominator == 1, (a, b, c, f)
    return int(f)


def _symmetric_cube_r(dims: Sequence[int], cls: str) -> int:
    dims = tuple(dims)
    if len(dims) != 3 or len(set(dims)) != 1:
        raise ShapeError(f"{cls} ideals live on cubes [2r]^3, not {dims}")
    if dims[0] % 2:
        raise ShapeError(f"{cls} ideals need an even cube, not {dims}")
    return dims[0] // 2


def _symmetric_count(r: int) -> int:
    f = Fraction(1)
    for j in range(r):
        f *= Fraction(math.factorial(3 * j + 1), math.factorial(r + j))
    assert f.denominator == 1, (r, f)
    return int(f)


def count_closed(dims: Sequence[int], cls: str = SC) -> int:
    """Closed-form vertex count of the class on the given poset.

    Raises ShapeError when no closed form applies (sc with d >= 4 and
    even volume, or a symmetric class off an even cube).
    """
    dims = tuple(int(l) for l in dims)
    if cls not in CLASSES:
        raise ValueError(f"unknown ideal class {cls!r}")
    if cls in (CSSC, TSSC):
        r = _symmetric_cube_r(dims, cls)
        n = _symmetric_count(r)
        return n * n if cls == CSSC else n

    volume = math.prod(dims)
    if volume % 2:
        return 0  # odd volume: membership of the fixed point is undecidable
    d = len(dims)
    if d == 1:
        return 1
    if d == 2:
        a, b = dims[0] // 2, dims[1] // 2
        return math.comb(a + b, a)
    if d == 3:
        # rotate the last even dimension into third place
        k = max(i for i, l in enumerate(dims) if l % 2 == 0)
        m1, m2 = (dims[i] for i in range(3) if i != k)
        half = dims[k] // 2
        return _plane_partition_box(
            m1 // 2, (m2 + 1) // 2, half
        ) * _plane_partition_box((m1 + 1) // 2, m2 // 2, half)
    raise ShapeError(
        f"no closed-form sc count for d = {d} dims {dims}; enumerate instead"
    )


def _count_or_none(dims: tuple[int, ...], cls: str) -> int | None:
    try:
        return count_closed(dims, cls)
    except ShapeError:
        return None


# ----------------------------------------------------------------------
# seeds


def seed(dims: Sequence[int], cls: str = SC) -> Ideal:
    """A canonical member of the class, the start of the flip closure.

    sc uses the halfspace on the first even axis; the symmetric cube
    classes use the staircase ideal ``a_1 + a_2 + a_3 <= 3r + 1``,
    which is totally symmetric hence a member of all three classes.
    """
    dims = tuple(int(l) for l in dims)
    p = ChainProduct(dims)
    if cls not in CLASSES:
        raise ValueError(f"unknown ideal class {cls!r}")
    if cls in (CSSC, TSSC):
        r = _symmetric_cube_r(dims, cls)
        return _staircase(p, r)
    evens = [i for i, l in enumerate(dims) if l % 2 == 0]
    if not evens:
        raise EmptyClassError(
            f"{dims} has odd volume, hence no self-complementary ideals"
        )
    return _halfspace(p, evens[0])


def _halfspace(p: ChainProduct, axis: int) -> Ideal:
    """The sc ideal a_axis <= l_axis / 2 (axis must be even)."""
    l = p.dims[axis]
    if l % 2:
        raise ShapeError(f"halfspace needs an even axis, got l = {l}")
    s = p.strides[axis]
    unit = (1 << (l // 2 * s)) - 1
    mask = 0
    for start in range(0, p.volume, l * s):
        mask |= unit << start
    return Ideal(p, mask)


def _staircase(p: ChainProduct, r: int) -> Ideal:
    bound = 3 * r + 1
    mask = 0
    for rank, a in enumerate(p.elements()):
        if sum(a) <= bound:
            mask |= 1 << rank
    return Ideal(p, mask)


# ----------------------------------------------------------------------
# results


@dataclass(frozen=True)
class EnumerationResult:
    """A fully enumerated vertex class, in canonical (ascending-mask) order."""

    poset: ChainProduct
    symmetry: str | None
    vertices: tuple[Ideal, ...]
    method: str

    @cached_property
    def masks(self) -> tuple[int, ...]:
        return tuple(v.mask for v in self.vertices)

    @cached_property
    def index(self) -> dict[int, int]:
        """mask -> vertex id (the position in canonical order)."""
        return {m: i for i, m in enumerate(self.masks)}

    def __len__(self) -> int:
        return len(self.vertices)


# ----------------------------------------------------------------------
# flip-closure enumeration


def _check_guard(
    dims: tuple[int, ...], cls: str, force: bool
) -> None:
    count = _count_or_none(dims, cls)
    volume = math.prod(dims)
    if count is not None and count == 0:
        raise EmptyClassError(f"no {cls} ideals on {dims}")
    if force:
        return
    if count is not None:
        if count > DEFAULT_VERTEX_GUARD:
            raise EnumerationGuardError(
                f"{cls} on {dims} has {count} vertices "
                f"(> {DEFAULT_VERTEX_GUARD}); pass force=True to insist"
            )
    elif volume > DEFAULT_VOLUME_GUARD:
        raise EnumerationGuardError(
            f"no closed-form count for {cls} on {dims} and volume "
            f"{volume} > {DEFAULT_VOLUME_GUARD}; pass force=True to insist"
        )


def _bfs_masks(
    p: ChainProduct,
    cls: str,
    start: int,
    cap: int | None,
) -> set[int]:
    from . import metric  # deferred: metric imports this module's types

    if cls == SC:
        neighbors = metric.sc_flip_masks
    else:
        group_neighbors = metric.orbit_flip_masks
        group = "cyclic" if cls == CSSC else "full"

        def neighbors(p: ChainProduct, m: int) -> list[int]:
            return [nm for nm, _w in group_neighbors(p, m, group)]

    visited = {start}
    frontier = [start]
    while frontier:
        fresh: list[int] = []
        for m in frontier:
            for nm in neighbors(p, m):
                if nm not in visited:
                    visited.add(nm)
                    fresh.append(nm)
        if cap is not None and len(visited) > cap:
            raise PartialEnumerationError(len(visited), cap)
        frontier = fresh
    return visited


def enumerate_ideals(
    dims: Sequence[int],
    cls: str = SC,
    cap: int | None = None,
    force: bool = False,
) -> EnumerationResult:
    """Breadth-first flip closure of the class seed, canonically sorted."""
    dims = tuple(int(l) for l in dims)
    _check_guard(dims, cls, force)
    start = seed(dims, cls)
    masks = _bfs_masks(start.poset, cls, start.mask, cap)
    vertices = tuple(Ideal(start.poset, m) for m in sorted(masks))
    return EnumerationResult(start.poset, cls, vertices, BFS_FLIP)


def enumerate_count(
    dims: Sequence[int],
    cls: str = SC,
    force: bool = False,
) -> int:
    """Vertex count by flip closure, without materializing the class."""
    dims = tuple(int(l) for l in dims)
    _check_guard(dims, cls, force)
    start = seed(dims, cls)
    return len(_bfs_masks(start.poset, cls, start.mask, None))


# ----------------------------------------------------------------------
# brute-force oracle


def oracle_ideal_masks(p: ChainProduct) -> list[int]:
    """All downward-closed member masks, by depth-first rank scan."""
    V = p.volume
    lower = [0] * V
    for k in range(p.d):
        s = p.strides[k]
        down = p.down_masks[k]
        for r in range(V):
            if down >> r & 1:
                lower[r] |= 1 << (r - s)
    out: list[int] = []
    # stack of (next rank to decide, mask so far); exclusion first so
    # inclusion is popped first and masks come out roughly ascending
    stack: list[tuple[int, int]] = [(0, 0)]
    while stack:
        r, mask = stack.pop()
        while r < V:
            if lower[r] & ~mask:
                r += 1  # some lower cover missing: r can never join
                continue
            stack.append((r + 1, mask | (1 << r)))
            r += 1
        out.append(mask)
    return out


def oracle_enumerate(
    dims: Sequence[int],
    cls: str | None = None,
    force: bool = False,
) -> EnumerationResult:
    """Reference enumeration by scanning every ideal of the poset.

    With ``cls`` given, keeps only the ideals validating for that
    class.  Guarded by volume: the scan touches every ideal whether or
    not it is retained.
    """
    dims = tuple(int(l) for l in dims)
    p = ChainProduct(dims)
    guard = (
        ORACLE_FILTERED_VOLUME_GUARD if cls else ORACLE_VOLUME_GUARD
    )
    if not force and p.volume > guard:
        raise EnumerationGuardError(
            f"oracle scan of {dims} (volume {p.volume}) exceeds the "
            f"default guard of {guard} elements; pass force=True to insist"
        )
    masks = oracle_ideal_masks(p)
    ideals = (Ideal(p, m) for m in sorted(masks))
    if cls is not None:
        vertices = tuple(i for i in ideals if i.validate(cls))
    else:
        vertices = tuple(ideals)
    return EnumerationResult(p, cls, vertices, ORACLE_DFS)
