import pytest

from convexcalc import mcg
from convexcalc.chords import chord_crossings, cut_surface, trace_chords
from convexcalc.render import render_curves
from convexcalc.surface import Curve


def test_empty_family():
    cut = cut_surface([], 3)
    assert cut.chi == [-4]
    with pytest.raises(ValueError):
        cut_surface([])


@pytest.mark.parametrize("genus", [2, 3])
def test_nonseparating_curve_leaves_connected_complement(genus):
    cut = cut_surface([Curve.parse("a1", genus)])
    assert cut.chi == [2 - 2 * genus]
    assert cut.left == cut.right


def test_separating_curve_splits_the_surface():
    cut = cut_surface([Curve.parse("a1 b1 A1 B1", 2)])
    assert sorted(cut.chi) == [-1, -1]
    assert cut.left != cut.right


def test_pants_decomposition():
    g = 2
    curves = [Curve.parse("a1", g), mcg.humphries_curve("c1", g), Curve.parse("a2", g)]
    cut = cut_surface(curves)
    assert sorted(cut.chi) == [-1, -1]
    assert all(cut.boundary_count(r) == 3 for r in range(cut.regions))


def test_degenerate_family_is_moved_into_general_position():
    # T_c1 moves the family but not the topology of its complement
    f = mcg.MappingClassWord.parse("Tc1 Tb1", 2)
    base = [Curve.parse("a1", 2), Curve.parse("a2", 2)]
    moved = [mcg.apply(f, c) for c in base]
    assert sorted(cut_surface(moved).chi) == sorted(cut_surface(base).chi)


def test_crossings_count_intersections():
    _, chords = trace_chords([Curve.parse("a1", 2), Curve.parse("b1", 2)], strict=False)
    assert chord_crossings(chords) == 1


def test_svg_output_is_deterministic():
    curves = [Curve.parse("a1", 2), Curve.parse("b1", 2)]
    svg = render_curves(curves)
    assert svg.startswith("<svg") or svg.startswith("<?xml")
    assert svg.count("<polyline") >= 2
    assert "crossings: 1" in svg
    assert render_curves(curves) == svg


def test_svg_of_nothing():
    assert "<polyline" not in render_curves([], 2)
