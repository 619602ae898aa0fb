"""Intersecting-subfamily instances: exact solver, bounds, block audit."""

import math

import pytest

from scideals.chvatal import (
    ALL_SMALL,
    INSTANCES,
    MAX_FAMILY,
    NEAR_HALF,
    audit_blocks,
    instance_bound,
    instance_family,
    is_intersecting,
    is_uniform,
    max_intersecting,
    max_star,
    occurrence_cap,
    six_element_blocks,
    verified_family,
    verify_conjecture,
)


def test_verified_families_are_balanced():
    for d in (2, 4, 6):
        H = verified_family(d)
        assert len(H) == math.comb(d, d // 2) // 2
        assert is_uniform(H, d)
    with pytest.raises(ValueError):
        verified_family(8)


def test_occurrence_caps():
    assert [occurrence_cap(d) for d in (2, 4, 6)] == [1, 2, 5]


def test_half_family_stars_realize_the_cap():
    # the balance cap is tight: some element occurs exactly cap times
    for d in (2, 4, 6):
        assert max_star(verified_family(d)) == occurrence_cap(d)


def test_is_uniform_rejects_imbalance():
    H = set(verified_family(4))
    a = next(iter(H))
    complement = frozenset(range(1, 5)) - a
    assert not is_uniform(frozenset(H | {complement}), 4)  # both of a pair
    assert not is_uniform(frozenset(list(H)[:-1]), 4)  # wrong size
    assert not is_uniform(verified_family(4), 5)


def test_instance_family_sizes():
    # near-half: H plus the full layer one below half
    assert len(instance_family(NEAR_HALF, 2)) == 1 + 1  # the empty set
    assert len(instance_family(NEAR_HALF, 4)) == 3 + 4
    assert len(instance_family(NEAR_HALF, 6)) == 10 + 15
    # all-small: H plus everything below half, empty set included
    assert len(instance_family(ALL_SMALL, 2)) == 1 + 1
    assert len(instance_family(ALL_SMALL, 4)) == 3 + 1 + 4
    assert len(instance_family(ALL_SMALL, 6)) == 10 + 1 + 6 + 15
    with pytest.raises(ValueError):
        instance_family("chvatal9", 4)


def test_instance_bounds():
    assert [instance_bound(NEAR_HALF, d) for d in (2, 4, 6)] == [1, 3, 10]
    assert [instance_bound(ALL_SMALL, d) for d in (2, 4, 6)] == [1, 3, 11]
    with pytest.raises(ValueError):
        instance_bound("chvatal9", 4)


def test_intersecting_predicate():
    assert is_intersecting([{1, 2}, {2, 3}, {1, 3}])
    assert not is_intersecting([{1, 2}, {3, 4}])
    assert not is_intersecting([{1, 2}, frozenset()])
    assert is_intersecting([{1}])
    assert is_intersecting([])  # vacuously


def test_max_star():
    assert max_star([{1, 2}, {1, 3}, {2, 3}]) == 2
    assert max_star([]) == 0


def test_max_intersecting_small_cases():
    size, witness = max_intersecting([{1, 2}, {2, 3}, {1, 3}, {4, 5}])
    assert size == 3
    assert witness == (frozenset({1, 2}), frozenset({1, 3}), frozenset({2, 3}))
    # the empty set only ever stands alone
    size, witness = max_intersecting([frozenset()])
    assert size == 1 and witness == (frozenset(),)
    size, _ = max_intersecting([frozenset(), {1}, {1, 2}])
    assert size == 2


def test_max_intersecting_guard():
    too_big = [{i, i + 1} for i in range(MAX_FAMILY + 1)]
    with pytest.raises(ValueError):
        max_intersecting(too_big)


@pytest.mark.parametrize("which", INSTANCES)
@pytest.mark.parametrize("d", [2, 4, 6])
def test_verify_conjecture_passes(which, d):
    report = verify_conjecture(which, d)
    assert report["pass"], report
    assert report["max_intersecting"] == report["bound"]
    witness = [frozenset(a) for a in report["witness"]]
    family = instance_family(which, d)
    assert all(w in family for w in witness)
    assert is_intersecting(witness) or witness == [frozenset()]
    # the exact maximum is realized by a star
    assert report["bound"] <= report["star"]


def test_block_audit_replays_hand_proof():
    audit = audit_blocks()
    assert audit["ok"]
    assert audit["partition"]
    assert audit["block_maxima"] == [2, 2, 2, 2, 2]
    assert audit["bound_implied"] == 10
    blocks = six_element_blocks()
    assert len(blocks) == 5
    assert all(len(b) == 5 for b in blocks)
