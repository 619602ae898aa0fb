"""Intersecting families behind the hypercube radius bounds.

The distance from an sc ideal of [2]^d to the half-size center
construction is controlled by how many pairwise-intersecting sets fit
inside certain small downward-leaning set families (for downward-closed
families, "no intersecting subfamily beats the best star" is Chvatal's
conjecture).  This module holds

* the verified half-size families H(d) for d = 2, 4, 6: one set from
  each complementary pair, occurrences capped at a quarter of the
  half-size layer, rounded up;
* an exact ``max_intersecting`` solver (branch and bound with witness,
  guarded at 40 sets);
* ``verify_conjecture`` for the two instance families whose maxima
  bound the [2]^d center distances: H plus the (d/2-1)-layer, and H
  plus every smaller set.  Their exact maxima (1, 3, 10) and
  (1, 3, 11) for d = 2, 4, 6 match the predicted star bounds;
* the five-block partition witnessing the d = 6 near-half bound by
  hand: each block holds at most two pairwise-intersecting members,
  so ten is a ceiling without any search.
"""

from __future__ import annotations

import itertools
import math

Family = frozenset[frozenset[int]]

MAX_FAMILY = 40

_H2 = ((1,),)
_H4 = ((1, 2), (1, 3), (2, 3))
_H6 = (
    (1, 2, 3), (1, 2, 4), (1, 3, 6), (1, 4, 5), (1, 5, 6),
    (2, 3, 5), (2, 4, 6), (2, 5, 6), (3, 4, 6), (3, 4, 5),
)

_FAMILIES = {2: _H2, 4: _H4, 6: _H6}

NEAR_HALF = "chvatal2"  # H(d) plus the full (d/2 - 1)-layer
ALL_SMALL = "chvatal3"  # H(d) plus every set of size < d/2
INSTANCES = (NEAR_HALF, ALL_SMALL)

# the d = 6 near-half family minus nothing: 15 pairs + the 10 triples
# of H(6), partitioned so each block admits at most two intersecting
# members (digits name the elements)
_SIX_BLOCKS = (
    ((4, 5), (1, 2, 3), (5, 6), (1, 2, 4), (3, 6)),
    ((2, 3), (1, 4, 5), (2, 6), (3, 4, 5), (1, 6)),
    ((4, 6), (2, 3, 5), (1, 4), (2, 5, 6), (1, 3)),
    ((2, 5), (1, 3, 6), (2, 4), (1, 5, 6), (3, 4)),
    ((3, 5), (2, 4, 6), (1, 5), (3, 4, 6), (1, 2)),
)


def occurrence_cap(d: int) -> int:
    """Per-element cap for a balanced half-size family."""
    return -(-math.comb(d, d // 2) // 4)


def verified_family(d: int) -> Family:
    """The balanced half-size family H(d), available for d = 2, 4, 6."""
    if d not in _FAMILIES:
        raise ValueError(
            f"no verified family for d={d}; have {sorted(_FAMILIES)}"
        )
    return frozenset(frozenset(a) for a in _FAMILIES[d])


def is_uniform(family: Family, d: int) -> bool:
    """Check the three balance properties a usable H(d) must satisfy.

    Half-size sets only, exactly one of each complementary pair, and
    no element appearing more often than the cap.
    """
    if d % 2:
        return False
    ground = frozenset(range(1, d + 1))
    if len(family) != math.comb(d, d // 2) // 2:
        return False
    for a in family:
        if len(a) != d // 2 or not a <= ground:
            return False
        if ground - a in family:
            return False
    counts = {x: 0 for x in ground}
    for a in family:
        for x in a:
            counts[x] += 1
    return max(counts.values()) <= occurrence_cap(d)


def instance_family(which: str, d: int) -> Family:
    """The set family whose intersecting maximum is under test."""
    base = set(verified_family(d))
    if which == NEAR_HALF:
        sizes = range(d // 2 - 1, d // 2)
    elif which == ALL_SMALL:
        sizes = range(0, d // 2)  # the empty set is kept deliberately
    else:
        raise ValueError(f"unknown instance {which!r}; have {INSTANCES}")
    for size in sizes:
        for a in itertools.combinations(range(1, d + 1), size):
            base.add(frozenset(a))
    return frozenset(base)


def instance_bound(which: str, d: int) -> int:
    """The predicted intersecting maximum (the best star's size)."""
    cap = occurrence_cap(d)
    if which == NEAR_HALF:
        below = d // 2 - 2  # the binomial vanishes for d = 2
        return cap + (math.comb(d - 1, below) if below >= 0 else 0)
    if which == ALL_SMALL:
        return cap + sum(math.comb(d - 1, i - 1) for i in range(1, d // 2))
    raise ValueError(f"unknown instance {which!r}; have {INSTANCES}")


def is_intersecting(sets) -> bool:
    """True when every two members share an element."""
    sets = [frozenset(s) for s in sets]
    return all(a & b for a, b in itertools.combinations(sets, 2)) and all(
        sets
    )


def max_star(sets) -> int:
    """Largest number of members through a single element."""
    counts: dict[int, int] = {}
    for a in sets:
        for x in a:
            counts[x] = counts.get(x, 0) + 1
    return max(counts.values(), default=0)


def max_intersecting(sets) -> tuple[int, tuple[frozenset[int], ...]]:
    """Exact maximum pairwise-intersecting subfamily, with a witness.

    Branch and bound: members ordered by how many others they miss
    (most conflicted first, so both branches shrink fast), bounded by
    chosen + remaining.  The empty set intersects nothing, so it only
    ever stands alone; it is never part of a larger witness.
    """
    pool = [frozenset(s) for s in sets]
    if len(pool) > MAX_FAMILY:
        raise ValueError(f"family too large for exact search: {len(pool)}")
    has_empty = any(not s for s in pool)
    pool = sorted({s for s in pool if s}, key=sorted)
    conflicts = {
        a: sum(1 for b in pool if not a & b) for a in pool
    }
    pool.sort(key=lambda a: -conflicts[a])

    best: list[frozenset[int]] = [frozenset()] if has_empty else []

    def grow(cands: list[frozenset[int]], chosen: list[frozenset[int]]):
        nonlocal best
        if len(chosen) > len(best):
            best = list(chosen)
        if not cands or len(chosen) + len(cands) <= len(best):
            return
        head, rest = cands[0], cands[1:]
        chosen.append(head)
        grow([t for t in rest if t & head], chosen)
        chosen.pop()
        grow(rest, chosen)

    grow(pool, [])
    witness = tuple(sorted(best, key=sorted))
    assert not witness or is_intersecting(witness) or witness == (
        frozenset(),
    )
    return len(witness), witness


def six_element_blocks() -> tuple[Family, ...]:
    """The five-block partition of the d = 6 near-half family; each
    block admits at most two intersecting members."""
    return tuple(
        frozenset(frozenset(a) for a in block) for block in _SIX_BLOCKS
    )


def audit_blocks() -> dict:
    """Re-check the hand proof of the d = 6 near-half bound.

    The five blocks must partition the near-half family, each with
    internal intersecting maximum exactly 2; then any intersecting
    subfamily has at most 10 members.
    """
    blocks = six_element_blocks()
    family = instance_family(NEAR_HALF, 6)
    union: set[frozenset[int]] = set()
    disjoint = True
    for block in blocks:
        disjoint = disjoint and not (union & block)
        union |= block
    internal = [max_intersecting(block)[0] for block in blocks]
    return {
        "partition": disjoint and union == set(family),
        "block_maxima": internal,
        "bound_implied": sum(internal),
        "ok": disjoint and union == set(family) and all(
            m == 2 for m in internal
        ),
    }


def verify_conjecture(which: str, d: int) -> dict:
    """Exact check of one instance family against its predicted bound.

    Builds the family, solves it exactly, and compares to the star
    bound; for d = 6 the near-half case also replays the five-block
    hand proof.  The result reports pass/fail with the witness for
    audit.
    """
    family = instance_family(which, d)
    size, witness = max_intersecting(family)
    bound = instance_bound(which, d)
    report = {
        "which": which,
        "d": d,
        "family_size": len(family),
        "bound": bound,
        "max_intersecting": size,
        "witness": [sorted(a) for a in witness],
        "star": max_star(family),
        "pass": size == bound,
    }
    if which == NEAR_HALF and d == 6:
        blocks = audit_blocks()
        report["blocks"] = blocks
        report["pass"] = report["pass"] and blocks["ok"]
    return report
