"""Named ideal constructions realizing extremal flip-graph positions.

Every function here builds a specific ideal (or member set) with a
proven or conjectured metric role, at any size in its family:

* ``halfspace``          the basic sc ideal, one axis cut in half;
* ``sc_diameter_pair``   two sc ideals realizing the sc diameter;
* ``majority_ideal``     the sc center witness when d is odd (all even);
* ``mod4_center``        the sc center witness when some dim is 0 mod 4;
* ``hypercube_center``   the [2]^d center candidate built from the
                         verified intersecting family (even d <= 6);
* ``partitioned_center`` assembles the radius-achieving sc ideal for
                         any even-volume shape by splitting the poset
                         into blocks and recursing;
* ``staircase_c2r``      the cube staircase a1+a2+a3 <= 3r+1, the
                         (observed) cssc center;
* ``pyramid_ideal``      the cssc ideal realizing the diameter against
                         the octant ideal;
* ``octant_ideal_cssc``  three low octants plus one high one;
* ``shell_ideal``        the boundary shells S_(k, 2r) that furthest-
                         from-center cssc ideals wear;
* ``tssc_extremes``      the unique minimal / maximal tssc pair under
                         the mandatory-region order, a diametral pair.

The constructions validate themselves before returning; a failed
validation is a bug, not a data condition, hence plain asserts.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass, field
from fractions import Fraction

from .enumeration import EmptyClassError, _halfspace, _staircase
from .ideal import CSSC, SC, TSSC, Ideal, SymmetryError
from .poset import ChainProduct, Coords, ShapeError, cube


@dataclass(frozen=True)
class NamedIdeal:
    """A construction result dressed for reporting and the CLI."""

    name: str
    params: dict
    ideal: Ideal | None  # None when the member set is not downward closed
    members: tuple[Coords, ...]
    symmetry: str | None
    conjectural: bool = False
    note: str = ""

    def to_record(self, fmt: str = "members") -> dict:
        rec = {
            "name": self.name,
            "params": {k: list(v) if isinstance(v, tuple) else v
                       for k, v in self.params.items()},
            "symmetry": self.symmetry,
            "conjectural": self.conjectural,
        }
        if self.note:
            rec["note"] = self.note
        if self.ideal is not None:
            rec.update(self.ideal.to_record(fmt))
        else:
            rec["members"] = [list(m) for m in self.members]
        return rec


def _wrap(name: str, params: dict, ideal: Ideal, symmetry: str | None,
          conjectural: bool = False, note: str = "") -> NamedIdeal:
    return NamedIdeal(
        name, params, ideal, tuple(ideal.members()), symmetry,
        conjectural, note,
    )


# ----------------------------------------------------------------------
# closed-form metric values (referenced by the verification suites)


def sc_diameter_value(dims) -> int:
    """Exact sc flip-graph diameter: 0 / (V - l_k)/4 / V/4 by parity."""
    dims = tuple(int(l) for l in dims)
    volume = math.prod(dims)
    evens = [l for l in dims if l % 2 == 0]
    if not evens:
        return 0
    if len(evens) == 1:
        return (volume - evens[0]) // 4
    return volume // 4


def sc_radius_bound(dims) -> Fraction:
    """The all-even sc radius lower bound (1/4 - C(d-1, ...)/2^(d+1)) V.

    Exact for d odd or when some dimension is divisible by four; for
    the remaining even-d shapes the radius is conjectured to be the
    ceiling (plus nothing more).
    """
    dims = tuple(int(l) for l in dims)
    if any(l % 2 for l in dims):
        raise ShapeError("the radius bound needs every dimension even")
    d = len(dims)
    volume = math.prod(dims)
    return (
        Fraction(1, 4)
        - Fraction(math.comb(d - 1, (d - 1) // 2), 2 ** (d + 1))
    ) * volume


def cssc_diameter_value(r: int) -> int:
    return (r - 1) * r * (r + 1) // 3


def cssc_radius_value(r: int) -> int:
    return (r - 1) * r * (r + 1) // 6


def tssc_diameter_value(r: int) -> int:
    return (r - 1) * r * (2 * r - 1) // 6


# ----------------------------------------------------------------------
# sc constructions


def halfspace(dims, axis: int) -> Ideal:
    """The sc ideal a_axis <= l_axis / 2."""
    p = dims if isinstance(dims, ChainProduct) else ChainProduct(tuple(dims))
    return _halfspace(p, axis)


def sc_diameter_pair(dims) -> tuple[Ideal, Ideal]:
    """Two sc ideals at distance sc_diameter_value(dims).

    With two or more even axes, two halfspaces on distinct even axes
    differ in a quarter of the poset.  With exactly one even axis, the
    partner of its halfspace replicates an sc ideal of the punctured
    odd-axes product along the even axis and pins the central odd
    column to the lower half: the difference then misses exactly the
    central column, giving (V - l_k)/4.
    """
    dims = tuple(int(l) for l in dims)
    p = ChainProduct(dims)
    evens = [i for i, l in enumerate(dims) if l % 2 == 0]
    if not evens:
        raise EmptyClassError(f"{dims} has odd volume: no sc ideals")
    if len(evens) >= 2:
        return _halfspace(p, evens[0]), _halfspace(p, evens[1])
    k = evens[0]
    odd_axes = [i for i in range(p.d) if i != k]
    mids = tuple((dims[i] + 1) // 2 for i in odd_axes)
    half_k = dims[k] // 2
    mask = 0
    for rank, a in enumerate(p.elements()):
        rest = tuple(a[i] for i in odd_axes)
        # rest < mids in tuple order is exactly "below the central
        # column in rank order": the canonical-minimum choice of the
        # punctured product's self-complementary half
        if rest < mids or (rest == mids and a[k] <= half_k):
            mask |= 1 << rank
    first = Ideal(p, mask)
    second = _halfspace(p, k)
    assert first.validate(SC) and second.validate(SC)
    return first, second


def majority_ideal(dims) -> Ideal:
    """Members whose coordinates sit in the lower half on most axes.

    Needs every dimension even (clean halves) and d odd (no ties);
    realizes the sc radius bound as its eccentricity.
    """
    dims = tuple(int(l) for l in dims)
    if any(l % 2 for l in dims):
        raise ShapeError("majority ideal needs every dimension even")
    d = len(dims)
    if d % 2 == 0:
        raise ShapeError("majority ideal needs odd d (no half-low ties)")
    p = ChainProduct(dims)
    mask = 0
    for rank, a in enumerate(p.elements()):
        low = sum(1 for c, l in zip(a, dims) if 2 * c <= l)
        if 2 * low > d:
            mask |= 1 << rank
    out = Ideal(p, mask)
    assert out.validate(SC)
    return out


def mod4_center(dims) -> Ideal:
    """The radius witness when some dimension is divisible by four.

    Splits the last such axis into exact quarters q = 1..4 and keeps
    2 * (low-half count on the other axes) + (4 - q) > d.  The score
    of an element and its dual sum to 2d + 1, so exactly one of each
    dual pair passes: sc for either parity of d.
    """
    dims = tuple(int(l) for l in dims)
    if any(l % 2 for l in dims):
        raise ShapeError("mod4 center needs every dimension even")
    div4 = [i for i, l in enumerate(dims) if l % 4 == 0]
    if not div4:
        raise ShapeError("mod4 center needs a dimension divisible by 4")
    k = div4[-1]
    d = len(dims)
    p = ChainProduct(dims)
    mask = 0
    for rank, a in enumerate(p.elements()):
        low = sum(
            1 for i, (c, l) in enumerate(zip(a, dims))
            if i != k and 2 * c <= l
        )
        quarter = -(-4 * a[k] // dims[k])
        if 2 * low + (4 - quarter) > d:
            mask |= 1 << rank
    out = Ideal(p, mask)
    assert out.validate(SC)
    return out


def hypercube_center(d: int) -> Ideal:
    """The [2]^d center candidate from the verified half-size family.

    Identify a ∈ [2]^d with its low set {i : a_i = 1} (so bigger sets
    sit lower).  Keep every set larger than half, and at exactly half
    keep the sets outside the verified family H(d): H holds one of each
    complementary pair, so this is sc, and any sc ideal's low sets
    pairwise intersect, which is what caps |I \\ C| at the family bound.
    """
    from .chvatal import verified_family

    if d % 2:
        raise ShapeError("the hypercube family construction needs even d")
    H = verified_family(d)
    p = ChainProduct((2,) * d)
    mask = 0
    for rank, a in enumerate(p.elements()):
        low = frozenset(i + 1 for i, c in enumerate(a) if c == 1)
        if 2 * len(low) > d or (2 * len(low) == d and low not in H):
            mask |= 1 << rank
    out = Ideal(p, mask)
    assert out.validate(SC)
    return out


def _even_center(dims: tuple[int, ...]) -> tuple[Ideal, str, bool]:
    """Center for an all-even shape: (ideal, branch, used_family).

    The last flag records whether a [2]^d block center from the
    verified intersecting family was consumed anywhere, which makes
    the eccentricity claim conditional for even block dimension >= 4.
    """
    if any(l % 4 == 0 for l in dims):
        return mod4_center(dims), "mod4", False
    return _two_mod_four_center(dims)


def _two_mod_four_center(dims: tuple[int, ...]) -> tuple[Ideal, str, bool]:
    """Center when every dimension is 2 mod 4, by block partition.

    Partition the poset by the two straddling quarter values
    c_i = {(l_i + 2)/4, (3 l_i + 2)/4} per axis: the block where every
    coordinate is a straddling value is a copy of [2]^d and gets the
    majority ideal (d odd) or the intersecting-family center (d even,
    needs d <= 6); the block where axis i is the first non-straddling
    coordinate is a copy of
    [l_1] x ... x [l_(i-1)] x [l_i - 2] x [2]^(d-i) whose i-th axis is
    divisible by four, and gets the mod4 center.  Each block is stable
    under the involution, so the union is sc; that it is downward
    closed as a whole is the point of the construction (asserted).
    """
    d = len(dims)
    p = ChainProduct(dims)
    straddle = [((l + 2) // 4, (3 * l + 2) // 4) for l in dims]
    mask = 0

    # block 0: straddling values on every axis, a [2]^d copy
    if d % 2:
        c0, used_family = majority_ideal((2,) * d), False
    else:
        c0, used_family = hypercube_center(d), True
    for a in c0.members():
        coords = tuple(straddle[i][a[i] - 1] for i in range(d))
        mask |= 1 << p.rank(coords)

    # block i: axis i runs over the non-straddling values
    for i in range(d):
        if dims[i] == 2:
            continue  # [2] minus its two straddling values is empty
        others = [v for v in range(1, dims[i] + 1) if v not in straddle[i]]
        block_dims = dims[:i] + (dims[i] - 2,) + (2,) * (d - i - 1)
        ci = mod4_center(block_dims)
        for a in ci.members():
            coords = list(a)
            coords[i] = others[a[i] - 1]
            for j in range(i + 1, d):
                coords[j] = straddle[j][a[j] - 1]
            mask |= 1 << p.rank(tuple(coords))

    out = Ideal(p, mask)
    assert out.size * 2 == p.volume
    assert out.validate(SC), "block union failed to be an ideal"
    return out, "block-partition", used_family


def _mixed_center(dims: tuple[int, ...]) -> tuple[Ideal, bool]:
    """Radius witness for a shape with both odd and even dimensions.

    Partition by which odd axes sit exactly at their midpoint: pinning
    those and dropping the midpoint from the rest leaves an all-even
    block, which recurses into the all-even construction.  Every block
    is involution-stable, so the union is sc; downward closure of the
    union is the content of the construction (asserted).
    """
    d = len(dims)
    p = ChainProduct(dims)
    odd_axes = [i for i in range(d) if dims[i] % 2]
    mids = {i: (dims[i] + 1) // 2 for i in odd_axes}
    mask = 0
    used_family = False
    for pinned_count in range(len(odd_axes) + 1):
        for pinned in itertools.combinations(odd_axes, pinned_count):
            free = [i for i in range(d) if i not in pinned]
            block_dims = tuple(
                dims[i] - 1 if i in odd_axes else dims[i] for i in free
            )
            block_ideal, _, block_family = _even_center(block_dims)
            used_family = used_family or block_family
            for a in block_ideal.members():
                coords = [0] * d
                for i in pinned:
                    coords[i] = mids[i]
                for pos, i in enumerate(free):
                    v = a[pos]
                    if i in odd_axes and v >= mids[i]:
                        v += 1  # skip the pinned midpoint value
                    coords[i] = v
                mask |= 1 << p.rank(tuple(coords))
    out = Ideal(p, mask)
    assert out.size * 2 == p.volume
    assert out.validate(SC), "block union failed to be an ideal"
    return out, used_family


def partitioned_center(dims) -> NamedIdeal:
    """The radius-achieving sc ideal for any even-volume shape.

    Dispatches on parity: mod4 center (all even, some dimension
    divisible by 4), the [2]^d-block partition (all even, everything
    2 mod 4), or the odd-midpoint partition (mixed shapes), recursing
    per block.  Marked conjecture-conditional when any [2]^d block of
    even dimension drew on the verified intersecting family, since
    that block's eccentricity bound is only conjectured sharp.
    """
    dims = tuple(int(l) for l in dims)
    if math.prod(dims) % 2:
        raise EmptyClassError(f"{dims} has odd volume: no sc ideals")
    if all(l % 2 == 0 for l in dims):
        ideal, branch, used_family = _even_center(dims)
    else:
        ideal, used_family = _mixed_center(dims)
        branch = "odd-midpoint-partition"
    return _wrap(
        "partitioned-center", {"dims": dims}, ideal, SC,
        conjectural=used_family,
        note=f"branch: {branch}",
    )


# ----------------------------------------------------------------------
# cssc constructions (cubes [2r]^3)


def staircase_c2r(r: int) -> Ideal:
    """The staircase a1 + a2 + a3 <= 3r + 1: tssc, and the cssc center."""
    if r < 1:
        raise ShapeError("r must be >= 1")
    return _staircase(cube(2 * r), r)


def octant_ideal_cssc(r: int) -> Ideal:
    """Three low octants plus the low-low-high octant; tssc, size 4r^3."""
    if r < 1:
        raise ShapeError("r must be >= 1")
    p = cube(2 * r)
    om = p.octant_masks
    mask = om[0, 0, 0] | om[0, 0, 1] | om[0, 1, 0] | om[1, 0, 0]
    out = Ideal(p, mask)
    assert out.validate(TSSC)
    return out


def pyramid_ideal(r: int) -> Ideal:
    """The cssc ideal realizing the diameter against the octant ideal.

    Union of the three rotations of {a1 + a2 <= 2r and a1 + a3 <=
    2r + 1}; cyclic by construction, self-complementary and downward
    closed by the choice of the two thresholds (asserted).
    """
    if r < 1:
        raise ShapeError("r must be >= 1")
    n = 2 * r
    p = cube(n)
    mask = 0
    for rank, (x, y, z) in enumerate(p.elements()):
        if (
            (x + y <= n and x + z <= n + 1)
            or (y + z <= n and x + y <= n + 1)
            or (x + z <= n and y + z <= n + 1)
        ):
            mask |= 1 << rank
    out = Ideal(p, mask)
    assert out.validate(CSSC)
    return out


def cssc_must_include_points(r: int) -> list[Coords]:
    """Points (i, i, 2r+1-i), i <= r, present in every cssc ideal."""
    return [(i, i, 2 * r + 1 - i) for i in range(1, r + 1)]


def cssc_witness_pair(r: int) -> tuple[Coords, Coords]:
    """Every cssc ideal contains at least one of these two points."""
    return (1, r, 2 * r), (r, 1, 2 * r)


def staircase_2d(r: int, k: int) -> Ideal:
    """The sc staircase a1 + a2 <= r on [r-k-1] x [r+k] (0 <= k <= r-2).

    Its symmetric difference against any ideal of that rectangle is at
    most half the box, with equality only for the empty and full
    ideals.
    """
    if not (r >= 2 and 0 <= k <= r - 2):
        raise ShapeError("need r >= 2 and 0 <= k <= r - 2")
    p = ChainProduct((r - k - 1, r + k))
    mask = 0
    for rank, (a1, a2) in enumerate(p.elements()):
        if a1 + a2 <= r:
            mask |= 1 << rank
    out = Ideal(p, mask)
    assert out.validate(SC)
    return out


# ----------------------------------------------------------------------
# cssc shells


def _rho(a: Coords) -> Coords:
    return (a[1], a[2], a[0])


def shell_ideal(k: int, r: int) -> NamedIdeal:
    """The boundary shell S_(k, 2r), k = 1..2r-1, as a member set.

    Every cssc ideal furthest from the staircase center wears one of
    these shells around its core.  The shell is determined by its trace
    on the boundary of the low-low-high octant: the a2 = 1 slab, plus
    the points of the side layer (a1 = 1) and top layer (a3 = 2r)
    whose image in the swung [2r-1] x [r-1] rectangle lands in the
    first r-1-kk columns or the first kk rows, where kk = 2r-1-k.
    Shells with k < r are the coordinate transposes of their mirrors
    S_(2r-k); S_(r, 2r) is self-transposed.  The rest of the shell
    follows by cyclic closure, the complement rule on dual pairs, and
    the fact that every sc ideal contains the whole low octant.
    """
    if r < 1:
        raise ShapeError("r must be >= 1")
    if not 1 <= k <= 2 * r - 1:
        raise ValueError(f"shell index must be in 1..{2 * r - 1}, got {k}")
    n = 2 * r
    if k >= r:
        kk, transpose = 2 * r - 1 - k, False
    else:
        kk, transpose = k - 1, True

    trace: set[Coords] = set()
    domain: set[Coords] = set()
    for a1 in range(1, r + 1):  # a2 = 1 slab: in every shell (chirality A)
        for a3 in range(r + 1, n + 1):
            domain.add((a1, 1, a3))
            trace.add((a1, 1, a3))
    for a2 in range(2, r + 1):  # side layer a1 = 1, below the top
        for a3 in range(r + 1, n):
            domain.add((1, a2, a3))
            if a3 - r <= r - 1 - kk or a2 - 1 <= kk:
                trace.add((1, a2, a3))
    for a1 in range(1, r + 1):  # top layer a3 = 2r
        for a2 in range(2, r + 1):
            domain.add((a1, a2, n))
            if a1 + r - 1 <= r - 1 - kk or a2 - 1 <= kk:
                trace.add((a1, a2, n))

    shell: set[Coords] = set()
    for a in itertools.product(range(1, r + 1), repeat=3):
        if 1 in a:  # boundary of the low octant: in every sc ideal
            shell.add(a)
    for x in trace:
        shell.add(x)
        shell.add(_rho(x))
        shell.add(_rho(_rho(x)))
    for x in domain - trace:  # dual pairs: the high side gets the rest
        y = tuple(n + 1 - c for c in x)
        shell.add(y)
        shell.add(_rho(y))
        shell.add(_rho(_rho(y)))
    if transpose:
        shell = {(a2, a1, a3) for (a1, a2, a3) in shell}
    expected = (n**3 - (n - 2) ** 3) // 2
    assert len(shell) == expected, (k, r, len(shell), expected)
    return NamedIdeal(
        "shell", {"r": r, "k": k}, None, tuple(sorted(shell)), None,
        note="boundary member set, not itself an ideal",
    )


def compose_shell(core: Ideal | None, shell) -> Ideal:
    """Embed a [2r-2]^3 core at offset (1,1,1) and wrap a shell around it.

    The shell (a NamedIdeal or plain member collection) fixes the cube
    side 2r, since it always reaches the top boundary layer.
    """
    members = shell.members if isinstance(shell, NamedIdeal) else tuple(shell)
    n = max(max(a) for a in members)
    p = cube(n)
    mask = 0
    for a in members:
        mask |= 1 << p.rank(a)
    if core is not None and core.size > 0:
        if core.poset.dims != (n - 2,) * 3:
            raise ShapeError(
                f"core must live on {(n - 2,) * 3}, got {core.poset.dims}"
            )
        for a in core.members():
            mask |= 1 << p.rank(tuple(c + 1 for c in a))
    out = Ideal(p, mask)
    if not out.is_ideal():
        raise SymmetryError("this shell does not fit that core")
    return out


# ----------------------------------------------------------------------
# tssc constructions


def tssc_mandatory(r: int) -> Ideal:
    """The region contained in every tssc ideal (an ideal, but not sc).

    Union of the three rotations of {2 a1 <= 2r + 1 and a2 + a3 <=
    2r + 1}; symmetric and downward closed, but strictly smaller than
    half the cube for r >= 2.
    """
    if r < 1:
        raise ShapeError("r must be >= 1")
    n = 2 * r
    p = cube(n)
    mask = 0
    for rank, (x, y, z) in enumerate(p.elements()):
        if (
            (x <= r and y + z <= n + 1)
            or (y <= r and z + x <= n + 1)
            or (z <= r and x + y <= n + 1)
        ):
            mask |= 1 << rank
    return Ideal(p, mask)


def tssc_extremes(r: int) -> tuple[Ideal, Ideal]:
    """The minimal and maximal tssc ideals; a diametral pair.

    The minimal ideal keeps exactly the mandatory region in the four
    low octants and, in the mixed high octants, only the duals of the
    low points it had to give up; the maximal one is the octant ideal.
    Their distance is (r-1) r (2r-1) / 6, the tssc diameter.
    """
    p = cube(2 * r)
    mand = tssc_mandatory(r).mask
    om = p.octant_masks
    high2 = om[1, 1, 0] | om[1, 0, 1] | om[0, 1, 1]
    add = 0
    v1 = p.volume - 1
    m = high2
    while m:
        low = m & -m
        m ^= low
        rank = low.bit_length() - 1
        if not mand >> (v1 - rank) & 1:
            add |= low
    least = Ideal(p, mand | add)
    assert least.validate(TSSC), "mandatory completion failed"
    greatest = octant_ideal_cssc(r)
    return least, greatest


# ----------------------------------------------------------------------
# CLI-facing registry


def build_named(name: str, **params) -> list[NamedIdeal]:
    """Build a construction by CLI name; pairs return two entries."""

    def need(key: str):
        if params.get(key) is None:
            raise ValueError(f"construction {name!r} needs --{key}")
        return params[key]

    if name == "halfspace":
        dims, axis = tuple(need("dims")), int(need("axis"))
        return [_wrap(name, {"dims": dims, "axis": axis},
                      halfspace(dims, axis), SC)]
    if name == "sc-diameter-pair":
        dims = tuple(need("dims"))
        a, b = sc_diameter_pair(dims)
        note = f"distance realizes the sc diameter {sc_diameter_value(dims)}"
        return [_wrap(name, {"dims": dims, "end": 0}, a, SC, note=note),
                _wrap(name, {"dims": dims, "end": 1}, b, SC, note=note)]
    if name == "majority":
        dims = tuple(need("dims"))
        return [_wrap(name, {"dims": dims}, majority_ideal(dims), SC)]
    if name == "mod4-center":
        dims = tuple(need("dims"))
        return [_wrap(name, {"dims": dims}, mod4_center(dims), SC)]
    if name == "partitioned-center":
        return [partitioned_center(tuple(need("dims")))]
    if name in ("c2r", "staircase"):
        r = int(need("r"))
        return [_wrap(
            "c2r", {"r": r}, staircase_c2r(r), TSSC,
            note="cssc center witness; center uniqueness is conjectural",
        )]
    if name == "pyramid":
        r = int(need("r"))
        return [_wrap(name, {"r": r}, pyramid_ideal(r), CSSC)]
    if name == "octant":
        r = int(need("r"))
        return [_wrap(name, {"r": r}, octant_ideal_cssc(r), TSSC)]
    if name == "shell":
        r, k = int(need("r")), int(need("k"))
        return [shell_ideal(k, r)]
    if name == "tssc-extremes":
        r = int(need("r"))
        lo, hi = tssc_extremes(r)
        note = f"distance realizes the tssc diameter {tssc_diameter_value(r)}"
        return [_wrap(name, {"r": r, "end": 0}, lo, TSSC, note=note),
                _wrap(name, {"r": r, "end": 1}, hi, TSSC, note=note)]
    raise ValueError(f"unknown construction {name!r}")


CONSTRUCTION_NAMES = (
    "halfspace",
    "sc-diameter-pair",
    "majority",
    "mod4-center",
    "partitioned-center",
    "c2r",
    "pyramid",
    "octant",
    "shell",
    "tssc-extremes",
)
