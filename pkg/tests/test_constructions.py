"""Named extremal constructions against hand-checked reference data."""

from fractions import Fraction

import pytest

from scideals.constructions import (
    CONSTRUCTION_NAMES,
    build_named,
    compose_shell,
    cssc_diameter_value,
    cssc_radius_value,
    halfspace,
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
    staircase_c2r,
    tssc_diameter_value,
    tssc_extremes,
    tssc_mandatory,
)
from scideals.ideal import CSSC, SC, TSSC, from_heights
from scideals.metric import distance
from scideals.poset import ShapeError

from reference_data import (
    COMPOSED_R5_HEIGHTS,
    COMPOSED_R5_SHELL_INDICES,
    CSSC_SHELL6_CARRIER_R4,
    SC_5x6x4_PAIR,
    SC_5x7x4_PAIR,
    SHELL_1_OF_R5_HEIGHTS,
    SHELL_7_OF_R5_EXTRA,
    SHELL_7_OF_R5_HEIGHTS,
    SHELL_9_OF_R5_HEIGHTS,
    STAIRCASE_R5_HEIGHTS,
    TREE_EDGES,
    TREE_HEIGHTS,
    TSSC_GREATEST_R5_HEIGHTS,
    TSSC_LEAST_R5_HEIGHTS,
    TSSC_MANDATORY_R5_HEIGHTS,
    heights_members,
    shell_members,
)


def _heights(ideal):
    return [list(row) for row in ideal.to_heights()]


# ----------------------------------------------------------------------
# closed-form metric values


def test_sc_diameter_value_by_parity():
    assert sc_diameter_value((3, 5, 7)) == 0
    assert sc_diameter_value((2, 3, 5)) == (30 - 2) // 4
    assert sc_diameter_value((5, 7, 4)) == (140 - 4) // 4 == 34
    assert sc_diameter_value((2, 3, 4)) == 6
    assert sc_diameter_value((4, 4)) == 4
    assert sc_diameter_value((5, 6, 4)) == 30


def test_sc_radius_bound_values():
    assert sc_radius_bound((2, 2)) == Fraction(1, 2)
    assert sc_radius_bound((2, 6)) == Fraction(3, 2)
    assert sc_radius_bound((6, 6)) == Fraction(9, 2)
    assert sc_radius_bound((2, 4, 6)) == 6
    assert sc_radius_bound((2, 6, 10)) == 15
    assert sc_radius_bound((2,) * 6) == 11
    with pytest.raises(ShapeError):
        sc_radius_bound((2, 3, 4))


def test_symmetric_metric_values():
    assert [cssc_diameter_value(r) for r in range(1, 6)] == [0, 2, 8, 20, 40]
    assert [cssc_radius_value(r) for r in range(1, 6)] == [0, 1, 4, 10, 20]
    assert [tssc_diameter_value(r) for r in range(1, 7)] == [
        0, 1, 5, 14, 30, 55]


# ----------------------------------------------------------------------
# sc constructions


def test_halfspace_is_sc():
    for dims, axis in [((2, 3, 4), 2), ((4, 4), 0), ((2, 3, 4), 0)]:
        ideal = halfspace(dims, axis)
        assert ideal.validate(SC)
        assert ideal.size * 2 == ideal.poset.volume


def test_sc_diameter_pair_two_even_axes_matches_reference():
    a, b = sc_diameter_pair((5, 6, 4))
    assert _heights(a) == SC_5x6x4_PAIR[0]
    assert _heights(b) == SC_5x6x4_PAIR[1]
    assert distance(a, b, SC) == sc_diameter_value((5, 6, 4)) == 30


def test_sc_diameter_pair_single_even_axis():
    a, b = sc_diameter_pair((5, 7, 4))
    assert a.validate(SC) and b.validate(SC)
    assert _heights(b) == SC_5x7x4_PAIR[1]  # the even-axis halfspace
    assert distance(a, b, SC) == sc_diameter_value((5, 7, 4)) == 34


def test_reference_cascade_pair_also_realizes_single_even_diameter():
    # an independently drawn witness pair: a staggered cascade against
    # the same halfspace, at the same extremal distance
    a = from_heights((5, 7, 4), SC_5x7x4_PAIR[0])
    b = from_heights((5, 7, 4), SC_5x7x4_PAIR[1])
    assert a.validate(SC) and b.validate(SC)
    assert distance(a, b, SC) == 34


def test_sc_diameter_pair_rejects_odd_volume():
    from scideals.enumeration import EmptyClassError

    with pytest.raises(EmptyClassError):
        sc_diameter_pair((3, 3, 5))


def test_majority_ideal_validates_and_guards():
    ideal = majority_ideal((2, 6, 10))
    assert ideal.validate(SC)
    with pytest.raises(ShapeError):
        majority_ideal((2, 3, 4))  # odd dimension present
    with pytest.raises(ShapeError):
        majority_ideal((2, 6))  # even d ties


def test_mod4_center_validates_and_guards():
    ideal = mod4_center((2, 4))
    assert ideal.validate(SC)
    assert ideal.size == 4
    with pytest.raises(ShapeError):
        mod4_center((2, 6))  # nothing divisible by four
    with pytest.raises(ShapeError):
        mod4_center((2, 3, 4))


def test_hypercube_center_validates():
    for d in (2, 4, 6):
        assert hypercube_center(d).validate(SC)
    with pytest.raises(ShapeError):
        hypercube_center(3)


def test_partitioned_center_branches_and_flags():
    named = partitioned_center((2, 6))
    assert named.ideal.validate(SC)
    assert named.conjectural  # drew on the d = 2 hypercube family block
    named3 = partitioned_center((2, 6, 10))
    assert named3.ideal.validate(SC)
    assert not named3.conjectural  # odd d: majority blocks only
    named4 = partitioned_center((2, 4, 6))
    assert named4.ideal.validate(SC)
    assert "mod4" in named4.note
    mixed = partitioned_center((3, 5, 8))
    assert mixed.ideal.validate(SC)
    assert "odd-midpoint" in mixed.note


# ----------------------------------------------------------------------
# cssc constructions


def test_staircase_matches_reference_figure():
    assert _heights(staircase_c2r(5)) == STAIRCASE_R5_HEIGHTS
    for r in (1, 2, 3, 4, 5):
        assert staircase_c2r(r).validate(TSSC)


def test_octant_and_pyramid_validate():
    for r in (1, 2, 3, 4):
        assert octant_ideal_cssc(r).validate(TSSC)
        assert pyramid_ideal(r).validate(CSSC)
    assert distance(
        octant_ideal_cssc(3), pyramid_ideal(3), CSSC
    ) == cssc_diameter_value(3)


@pytest.mark.parametrize(
    "k, heights, extra",
    [
        (1, SHELL_1_OF_R5_HEIGHTS, ()),
        (9, SHELL_9_OF_R5_HEIGHTS, ()),
        (7, SHELL_7_OF_R5_HEIGHTS, SHELL_7_OF_R5_EXTRA),
    ],
)
def test_shell_members_match_reference_figures(k, heights, extra):
    got = set(shell_ideal(k, 5).members)
    assert got == shell_members(heights, extra)


def test_shell_index_bounds():
    with pytest.raises(ValueError):
        shell_ideal(0, 3)
    with pytest.raises(ValueError):
        shell_ideal(6, 3)


def test_carrier_core_shell_matches_shell_ideal():
    carrier = from_heights((8, 8, 8), CSSC_SHELL6_CARRIER_R4)
    assert carrier.validate(CSSC)
    core, shell = carrier.core_shell()
    assert set(shell) == set(shell_ideal(6, 4).members)
    assert core.poset.dims == (6, 6, 6)
    assert core.validate(CSSC)


def test_composed_shells_round_trip():
    carrier = from_heights((8, 8, 8), CSSC_SHELL6_CARRIER_R4)
    for heights, k in zip(COMPOSED_R5_HEIGHTS, COMPOSED_R5_SHELL_INDICES):
        composed = from_heights((10, 10, 10), heights)
        assert composed.validate(CSSC)
        core, shell = composed.core_shell()
        assert core.members() == carrier.members()
        assert set(shell) == set(shell_ideal(k, 5).members)
        rebuilt = compose_shell(core, shell_ideal(k, 5))
        assert rebuilt.mask == composed.mask
        # the composed vertex sits on the perimeter around the center
        assert distance(
            composed, staircase_c2r(5), CSSC
        ) == cssc_radius_value(5)


def test_compose_shell_shape_guards():
    with pytest.raises(ShapeError):
        compose_shell(staircase_c2r(2), shell_ideal(1, 5))  # core too small


def test_furthest_tree_levels_match_reference():
    ideals = [from_heights((2 * lvl,) * 3, h) for lvl, h in zip(
        [1] + [2] * 3 + [3] * 9, TREE_HEIGHTS)]
    for ideal in ideals:
        assert ideal.validate(CSSC)
    for parent, child in TREE_EDGES:
        core, shell = ideals[child].core_shell()
        assert core.members() == ideals[parent].members()
        r = max(max(a) for a in shell) // 2
        assert any(
            set(shell) == set(shell_ideal(k, r).members)
            for k in range(1, 2 * r)
        )
    # every leaf is furthest from the r = 3 staircase center
    for ideal in ideals[4:]:
        assert distance(
            ideal, staircase_c2r(3), CSSC
        ) == cssc_radius_value(3)


# ----------------------------------------------------------------------
# tssc constructions


def test_tssc_mandatory_matches_reference():
    mand = tssc_mandatory(5)
    assert _heights(mand) == TSSC_MANDATORY_R5_HEIGHTS
    assert mand.size == 410
    assert not mand.validate(SC)  # strictly smaller than half the cube
    assert mand.is_ideal()


def test_tssc_extremes_match_reference_and_realize_diameter():
    lo, hi = tssc_extremes(5)
    assert _heights(lo) == TSSC_LEAST_R5_HEIGHTS
    assert _heights(hi) == TSSC_GREATEST_R5_HEIGHTS
    assert hi.mask == octant_ideal_cssc(5).mask
    assert lo.validate(TSSC) and hi.validate(TSSC)
    assert distance(lo, hi, TSSC) == tssc_diameter_value(5) == 30


# ----------------------------------------------------------------------
# registry


def test_build_named_covers_registry():
    built = set()
    for name in CONSTRUCTION_NAMES:
        if name in ("halfspace",):
            out = build_named(name, dims=(2, 3, 4), axis=2)
        elif name in ("sc-diameter-pair", "majority", "mod4-center",
                      "partitioned-center"):
            dims = (2, 6, 10) if name == "majority" else (2, 3, 4)
            if name == "partitioned-center":
                dims = (2, 6)
            if name == "mod4-center":
                dims = (2, 4)
            out = build_named(name, dims=dims)
        else:
            out = build_named(name, r=2, k=1)
        assert out, name
        built.add(name)
        for named in out:
            record = named.to_record()
            assert record["name"] in (name, "c2r", "shell")
            assert "members" in record
    assert built == set(CONSTRUCTION_NAMES)


def test_build_named_heights_record_format():
    named = build_named("c2r", r=2)[0]
    rec = named.to_record("heights")
    assert rec["heights"] == _heights(staircase_c2r(2))


def test_build_named_errors():
    with pytest.raises(ValueError):
        build_named("no-such-construction", r=1)
    with pytest.raises(ValueError):
        build_named("halfspace", dims=(2, 3, 4))  # missing axis
    with pytest.raises(ValueError):
        build_named("shell", r=3)  # missing k


def test_reference_decoder_roundtrip():
    members = heights_members(STAIRCASE_R5_HEIGHTS)
    assert members == set(staircase_c2r(5).members())
