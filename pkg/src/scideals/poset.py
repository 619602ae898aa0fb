"""Chain-product posets and their self-dual structure.

A chain product is the coordinatewise partial order on tuples
``(a_1, ..., a_d)`` with ``1 <= a_k <= l_k``.  Every element is
identified with its mixed-radix rank (coordinate 1 most significant),
and that rank fixes a bit position: subsets of the poset are plain
Python integers throughout the package, with bit ``r`` set iff the
element of rank ``r`` belongs to the subset.

The order-reversing involution ``phi(a) = (l_1+1-a_1, ..., l_d+1-a_d)``
sends rank ``r`` to ``V-1-r`` where ``V`` is the number of elements, so
the dual image of a mask is its bit reversal and a self-complementary
set is one whose bit reversal equals its complement.  The axis masks
precomputed here (`up_masks` / `down_masks`) make downward-closure
checks and maximal-element extraction a handful of big-integer shifts
instead of per-element loops.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import cached_property
from typing import Iterator

Coords = tuple[int, ...]

CYCLIC = "cyclic"
FULL = "full"


class ShapeError(ValueError):
    """The poset's shape does not support the requested operation."""


class ElementError(ValueError):
    """A coordinate tuple or rank lies outside the poset."""


@dataclass(frozen=True)
class Orbit:
    """A symmetry orbit of elements, with its dual image precomputed.

    ``weight`` is |orbit| / 3, the edge weight a flip of this orbit
    contributes in the symmetric flip graphs (1 for an orbit of three
    elements, 2 for a full S3 orbit of six).  Diagonal points form
    singleton orbits and get weight 0; they are never flippable because
    a point with all coordinates equal can never swap with its dual
    without breaking the symmetry one element at a time.
    """

    ranks: Coords
    mask: int
    dual_mask: int

    @property
    def size(self) -> int:
        return len(self.ranks)

    @property
    def weight(self) -> int:
        return len(self.ranks) // 3


@dataclass(frozen=True)
class ChainProduct:
    """The poset [l_1] x ... x [l_d] with all l_k >= 1."""

    dims: Coords

    def __post_init__(self) -> None:
        dims = tuple(int(l) for l in self.dims)
        if not dims:
            raise ShapeError("at least one dimension is required")
        if any(l < 1 for l in dims):
            raise ShapeError(f"dimensions must be positive, got {dims}")
        object.__setattr__(self, "dims", dims)

    # ------------------------------------------------------------------
    # shape

    @property
    def d(self) -> int:
        return len(self.dims)

    @cached_property
    def volume(self) -> int:
        v = 1
        for length in self.dims:
            v *= length
        return v

    @cached_property
    def strides(self) -> Coords:
        """Mixed-radix place values; coordinate 1 is most significant."""
        s = [1] * self.d
        for k in range(self.d - 2, -1, -1):
            s[k] = s[k + 1] * self.dims[k + 1]
        return tuple(s)

    @cached_property
    def full_mask(self) -> int:
        return (1 << self.volume) - 1

    def is_cube(self) -> bool:
        return self.d == 3 and len(set(self.dims)) == 1

    # ------------------------------------------------------------------
    # elements <-> ranks

    def check_element(self, a: Coords) -> Coords:
        a = tuple(a)
        if len(a) != self.d or any(
            not (1 <= c <= l) for c, l in zip(a, self.dims)
        ):
            raise ElementError(f"{a} is not an element of {self.dims}")
        return a

    def rank(self, a: Coords) -> int:
        a = self.check_element(a)
        return sum((c - 1) * s for c, s in zip(a, self.strides))

    def unrank(self, r: int) -> Coords:
        if not (0 <= r < self.volume):
            raise ElementError(f"rank {r} out of range for {self.dims}")
        out = []
        for s, l in zip(self.strides, self.dims):
            q, r = divmod(r, s)
            out.append(q + 1)
        return tuple(out)

    def elements(self) -> Iterator[Coords]:
        """All elements in rank order."""
        return itertools.product(*(range(1, l + 1) for l in self.dims))

    # ------------------------------------------------------------------
    # duality

    def dual(self, a: Coords) -> Coords:
        a = self.check_element(a)
        return tuple(l + 1 - c for c, l in zip(a, self.dims))

    def dual_rank(self, r: int) -> int:
        if not (0 <= r < self.volume):
            raise ElementError(f"rank {r} out of range for {self.dims}")
        return self.volume - 1 - r

    def reverse_mask(self, mask: int) -> int:
        """Image of a member mask under the order-reversing involution."""
        v1 = self.volume - 1
        out = 0
        while mask:
            low = mask & -mask
            out |= 1 << (v1 - low.bit_length() + 1)
            mask ^= low
        return out

    # ------------------------------------------------------------------
    # covers

    def lower_covers(self, a: Coords) -> list[Coords]:
        a = self.check_element(a)
        out = []
        for k, c in enumerate(a):
            if c > 1:
                out.append(a[:k] + (c - 1,) + a[k + 1 :])
        return out

    def upper_covers(self, a: Coords) -> list[Coords]:
        a = self.check_element(a)
        out = []
        for k, c in enumerate(a):
            if c < self.dims[k]:
                out.append(a[:k] + (c + 1,) + a[k + 1 :])
        return out

    # ------------------------------------------------------------------
    # axis masks: the bit-parallel machinery

    @cached_property
    def _axis_masks(self) -> tuple[Coords, Coords]:
        up, down = [], []
        for k, l in enumerate(self.dims):
            s = self.strides[k]
            period = l * s
            unit = (1 << ((l - 1) * s)) - 1  # ranks with a_k < l_k, one block
            m = 0
            for start in range(0, self.volume, period):
                m |= unit << start
            up.append(m)
            down.append(m << s)
        return tuple(up), tuple(down)

    @property
    def up_masks(self) -> Coords:
        """Per axis k: mask of ranks whose k-th coordinate can increase."""
        return self._axis_masks[0]

    @property
    def down_masks(self) -> Coords:
        """Per axis k: mask of ranks whose k-th coordinate can decrease."""
        return self._axis_masks[1]

    def is_downward_closed(self, mask: int) -> bool:
        """True iff the member mask is closed under lower covers."""
        if mask < 0 or mask > self.full_mask:
            raise ElementError("mask has bits outside the poset")
        for k in range(self.d):
            s = self.strides[k]
            if ((mask & self.down_masks[k]) >> s) & ~mask:
                return False
        return True

    def maximal_mask(self, mask: int) -> int:
        """Mask of members with no member strictly above them."""
        covered = 0
        for k in range(self.d):
            covered |= self.up_masks[k] & (mask >> self.strides[k])
        return mask & ~covered

    def minimal_nonmember_mask(self, mask: int) -> int:
        """Mask of non-members all of whose lower covers are members."""
        comp = self.full_mask & ~mask
        blocked = 0
        for k in range(self.d):
            # x is blocked if its lower cover along axis k is a non-member
            blocked |= self.down_masks[k] & (comp << self.strides[k])
        return comp & ~blocked

    # ------------------------------------------------------------------
    # octants (all dims even)

    def octant(self, a: Coords) -> Coords:
        """Which half of each axis the element sits in (0 = lower).

        Only defined when every dimension is even, so the two halves
        are genuine halves and the involution swaps octant t with its
        complement 1-t coordinatewise.
        """
        a = self.check_element(a)
        if any(l % 2 for l in self.dims):
            raise ShapeError("octants need every dimension even")
        return tuple(int(c > l // 2) for c, l in zip(a, self.dims))

    @cached_property
    def octant_masks(self) -> dict[Coords, int]:
        """Member mask of each octant, keyed by the 0/1 half-tuple."""
        if any(l % 2 for l in self.dims):
            raise ShapeError("octants need every dimension even")
        masks: dict[Coords, int] = {
            t: 0 for t in itertools.product((0, 1), repeat=self.d)
        }
        for r, a in enumerate(self.elements()):
            t = tuple(int(c > l // 2) for c, l in zip(a, self.dims))
            masks[t] |= 1 << r
        return masks

    # ------------------------------------------------------------------
    # coordinate symmetry (cubes only)

    def _require_cube(self) -> None:
        if not self.is_cube():
            raise ShapeError(
                f"coordinate symmetry needs a cube [l]^3, got {self.dims}"
            )

    def orbit(self, a: Coords, group: str = CYCLIC) -> set[Coords]:
        """Orbit of an element under coordinate rotations or all of S3."""
        self._require_cube()
        a = self.check_element(a)
        x, y, z = a
        if group == CYCLIC:
            return {(x, y, z), (y, z, x), (z, x, y)}
        if group == FULL:
            return set(itertools.permutations(a))
        raise ValueError(f"unknown symmetry group {group!r}")

    def permute_mask(self, mask: int, group: str = CYCLIC) -> int:
        """Image of a mask under one generator rotation (x,y,z)->(y,z,x)."""
        self._require_cube()
        perm = self._perm_tables[0]
        out = 0
        while mask:
            low = mask & -mask
            out |= 1 << perm[low.bit_length() - 1]
            mask ^= low
        return out

    @cached_property
    def _perm_tables(self) -> tuple[list[int], list[int]]:
        """Rank images under the rotation (x,y,z)->(y,z,x) and the swap
        (x,y,z)->(x,z,y); together they generate S3 on coordinates."""
        self._require_cube()
        rot = [0] * self.volume
        swp = [0] * self.volume
        for r in range(self.volume):
            x, y, z = self.unrank(r)
            rot[r] = self.rank((y, z, x))
            swp[r] = self.rank((x, z, y))
        return rot, swp

    def _orbit_structure(self, group: str) -> tuple[list[Orbit], list[int]]:
        rot, swp = self._perm_tables
        orbit_of = [-1] * self.volume
        orbits: list[Orbit] = []
        v1 = self.volume - 1
        for r in range(self.volume):
            if orbit_of[r] >= 0:
                continue
            ranks = {r}
            frontier = [r]
            while frontier:
                x = frontier.pop()
                images = (rot[x],) if group == CYCLIC else (rot[x], swp[x])
                for y in images:
                    if y not in ranks:
                        ranks.add(y)
                        frontier.append(y)
            idx = len(orbits)
            mask = 0
            dmask = 0
            for x in ranks:
                orbit_of[x] = idx
                mask |= 1 << x
                dmask |= 1 << (v1 - x)
            orbits.append(Orbit(tuple(sorted(ranks)), mask, dmask))
        return orbits, orbit_of

    @cached_property
    def cyclic_orbits(self) -> tuple[list[Orbit], list[int]]:
        """(orbits, rank -> orbit index) under coordinate rotations."""
        return self._orbit_structure(CYCLIC)

    @cached_property
    def full_orbits(self) -> tuple[list[Orbit], list[int]]:
        """(orbits, rank -> orbit index) under all coordinate permutations."""
        return self._orbit_structure(FULL)

    def orbit_structure(self, group: str) -> tuple[list[Orbit], list[int]]:
        if group == CYCLIC:
            return self.cyclic_orbits
        if group == FULL:
            return self.full_orbits
        raise ValueError(f"unknown symmetry group {group!r}")

    # ------------------------------------------------------------------

    def __repr__(self) -> str:  # pragma: no cover - cosmetic
        return f"ChainProduct{self.dims}"


def cube(side: int) -> ChainProduct:
    """The cube [side]^3, home of the symmetric ideal classes."""
    return ChainProduct((side, side, side))
