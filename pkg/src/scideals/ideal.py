"""Order ideals of chain products and their symmetry classes.

An ideal is a downward-closed member set, stored as a bit mask over the
poset's rank order.  The three symmetry classes build on each other:

* ``sc``    self-complementary: ``a`` is a member iff its dual is not,
            so the mask's bit reversal equals its complement and the
            ideal holds exactly half the poset;
* ``cssc``  additionally invariant under cyclic coordinate rotation
            (cubes ``[2r]^3`` only);
* ``tssc``  additionally invariant under every coordinate permutation.

For three-dimensional posets an ideal is equivalently a heights matrix:
entry ``(i, j)`` counts the members with first coordinate ``i+1`` and
second coordinate ``j+1``.  Downward closure makes the entries weakly
decreasing along rows and columns, which is the form the JSON heights
record round-trips.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from typing import Iterable, Sequence

from .poset import CYCLIC, FULL, ChainProduct, Coords, ShapeError

SC = "sc"
CSSC = "cssc"
TSSC = "tssc"
CLASSES = (SC, CSSC, TSSC)

HeightsMatrix = tuple[tuple[int, ...], ...]


class SymmetryError(ValueError):
    """A member set violates the requested symmetry class."""


@dataclass(frozen=True)
class Ideal:
    """A downward-closed member set of a chain product, as a bit mask."""

    poset: ChainProduct
    mask: int

    def __post_init__(self) -> None:
        if self.mask < 0 or self.mask > self.poset.full_mask:
            raise ValueError("mask has bits outside the poset")

    # ------------------------------------------------------------------
    # membership

    @property
    def size(self) -> int:
        return self.mask.bit_count()

    def __contains__(self, a: Coords) -> bool:
        return bool(self.mask >> self.poset.rank(a) & 1)

    def members(self) -> list[Coords]:
        """Member tuples in rank order."""
        return [self.poset.unrank(r) for r in self.member_ranks()]

    def member_ranks(self) -> list[int]:
        out = []
        m = self.mask
        while m:
            low = m & -m
            out.append(low.bit_length() - 1)
            m ^= low
        return out

    @property
    def density(self) -> Fraction:
        """Normalized size |I| / V; exactly 1/2 for every sc ideal."""
        return Fraction(self.size, self.poset.volume)

    # ------------------------------------------------------------------
    # structure

    def is_ideal(self) -> bool:
        return self.poset.is_downward_closed(self.mask)

    def validate(self, cls: str | None = None) -> bool:
        """Check downward closure plus the symmetry of ``cls``.

        ``None`` checks closure only.  The classes nest, so a tssc
        ideal validates for cssc and sc as well.
        """
        if not self.poset.is_downward_closed(self.mask):
            return False
        if cls is None:
            return True
        if cls not in CLASSES:
            raise ValueError(f"unknown ideal class {cls!r}")
        p = self.poset
        if p.reverse_mask(self.mask) != p.full_mask & ~self.mask:
            return False
        if cls == SC:
            return True
        if not (p.is_cube() and p.dims[0] % 2 == 0):
            raise ShapeError(
                f"{cls} ideals live on even cubes [2r]^3, not {p.dims}"
            )
        if p.permute_mask(self.mask) != self.mask:
            return False
        if cls == CSSC:
            return True
        # full S3 invariance = cyclic invariance + one transposition
        swp = p._perm_tables[1]
        out = 0
        m = self.mask
        while m:
            low = m & -m
            out |= 1 << swp[low.bit_length() - 1]
            m ^= low
        return out == self.mask

    def maximal_elements(self) -> list[Coords]:
        """Members with no member above them, in rank order."""
        p = self.poset
        return Ideal(p, p.maximal_mask(self.mask)).members()

    def dual_image(self) -> "Ideal":
        """The (upward-closed) dual image, returned as a raw member set."""
        return Ideal(self.poset, self.poset.reverse_mask(self.mask))

    # ------------------------------------------------------------------
    # octants

    def octant_counts(self) -> dict[Coords, int]:
        """Member count inside every octant (all dims even)."""
        return {
            t: (self.mask & m).bit_count()
            for t, m in self.poset.octant_masks.items()
        }

    # ------------------------------------------------------------------
    # set algebra

    def _check_same_poset(self, other: "Ideal") -> None:
        if self.poset.dims != other.poset.dims:
            raise ShapeError("ideals live on different posets")

    def intersection(self, other: "Ideal") -> "Ideal":
        self._check_same_poset(other)
        return Ideal(self.poset, self.mask & other.mask)

    def union(self, other: "Ideal") -> "Ideal":
        self._check_same_poset(other)
        return Ideal(self.poset, self.mask | other.mask)

    def difference(self, other: "Ideal") -> list[Coords]:
        self._check_same_poset(other)
        return Ideal(self.poset, self.mask & ~other.mask).members()

    def difference_size(self, other: "Ideal") -> int:
        self._check_same_poset(other)
        return (self.mask & ~other.mask).bit_count()

    def symmetric_difference_size(self, other: "Ideal") -> int:
        self._check_same_poset(other)
        return (self.mask ^ other.mask).bit_count()

    # ------------------------------------------------------------------
    # heights matrices (three-dimensional posets)

    def to_heights(self) -> HeightsMatrix:
        """Heights matrix: entry (i, j) counts members over (i+1, j+1)."""
        p = self.poset
        if p.d != 3:
            raise ShapeError(f"heights matrices need d = 3, got d = {p.d}")
        l1, l2, l3 = p.dims
        rows = []
        for i in range(l1):
            row = []
            for j in range(l2):
                base = i * p.strides[0] + j * p.strides[1]
                col = (self.mask >> base) & ((1 << l3) - 1)
                h = col.bit_count()
                if col != (1 << h) - 1:
                    raise SymmetryError(
                        "member set is not column-closed; not an ideal"
                    )
                row.append(h)
            rows.append(tuple(row))
        return tuple(rows)

    # ------------------------------------------------------------------
    # core / shell decomposition (even cubes)

    def core_shell(self) -> tuple["Ideal", frozenset[Coords]]:
        """Split into the interior ideal and the boundary member set.

        On ``[2r]^3`` the interior is the sub-cube ``2 <= a_k <= 2r-1``,
        reindexed to ``[2r-2]^3``; the shell is every member with some
        coordinate equal to 1 or 2r.  The interior of an ideal is again
        an ideal, and for the symmetric classes it inherits the class.
        """
        p = self.poset
        if not (p.is_cube() and p.dims[0] % 2 == 0 and p.dims[0] >= 2):
            raise ShapeError(f"core/shell needs an even cube, got {p.dims}")
        side = p.dims[0]
        inner = ChainProduct((side - 2,) * 3) if side > 2 else None
        core_mask = 0
        shell = []
        for a in self.members():
            if all(2 <= c <= side - 1 for c in a):
                core_mask |= 1 << inner.rank(tuple(c - 1 for c in a))
            else:
                shell.append(a)
        if inner is None:
            return Ideal(ChainProduct((1, 1, 1)), 0), frozenset(shell)
        return Ideal(inner, core_mask), frozenset(shell)

    # ------------------------------------------------------------------
    # serialization

    def to_record(self, fmt: str = "members") -> dict:
        """JSON-ready record; ``fmt`` is ``members`` or ``heights``."""
        if fmt == "members":
            return {"dims": list(self.poset.dims), "members": self.member_ranks()}
        if fmt == "heights":
            return {
                "dims": list(self.poset.dims),
                "heights": [list(row) for row in self.to_heights()],
            }
        raise ValueError(f"unknown ideal record format {fmt!r}")

    def to_json(self, fmt: str = "members") -> str:
        return json.dumps(self.to_record(fmt))

    def __repr__(self) -> str:  # pragma: no cover - cosmetic
        return f"Ideal(dims={self.poset.dims}, size={self.size})"


# ----------------------------------------------------------------------
# constructors


def from_members(
    poset: ChainProduct, members: Iterable[Coords | int]
) -> Ideal:
    """Build an ideal from member tuples or ranks (checked for closure)."""
    mask = 0
    for m in members:
        r = m if isinstance(m, int) else poset.rank(m)
        if not 0 <= r < poset.volume:
            raise ValueError(f"rank {r} out of range")
        mask |= 1 << r
    if not poset.is_downward_closed(mask):
        raise SymmetryError("member set is not downward closed")
    return Ideal(poset, mask)


def from_heights(
    dims: Sequence[int], heights: Sequence[Sequence[int]]
) -> Ideal:
    """Inverse of :meth:`Ideal.to_heights` (d = 3 only, checked)."""
    p = ChainProduct(tuple(dims))
    if p.d != 3:
        raise ShapeError(f"heights matrices need d = 3, got d = {p.d}")
    l1, l2, l3 = p.dims
    if len(heights) != l1 or any(len(row) != l2 for row in heights):
        raise ShapeError(
            f"heights matrix must be {l1} x {l2} for dims {p.dims}"
        )
    mask = 0
    for i, row in enumerate(heights):
        for j, h in enumerate(row):
            if not 0 <= h <= l3:
                raise ValueError(f"height {h} out of range at ({i}, {j})")
            base = i * p.strides[0] + j * p.strides[1]
            mask |= ((1 << h) - 1) << base
    if not p.is_downward_closed(mask):
        raise SymmetryError("heights matrix is not weakly decreasing")
    return Ideal(p, mask)


def from_record(record: dict) -> Ideal:
    """Parse an ideal record produced by :meth:`Ideal.to_record`."""
    dims = tuple(record["dims"])
    if "members" in record:
        return from_members(ChainProduct(dims), record["members"])
    if "heights" in record:
        return from_heights(dims, record["heights"])
    raise ValueError("ideal record needs a 'members' or 'heights' key")


def symmetry_group(cls: str) -> str | None:
    """The coordinate group a class is closed under (None for plain sc)."""
    if cls == CSSC:
        return CYCLIC
    if cls == TSSC:
        return FULL
    if cls == SC:
        return None
    raise ValueError(f"unknown ideal class {cls!r}")
