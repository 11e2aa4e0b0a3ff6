import pytest

from convexcalc import mcg
from convexcalc.dividing import (
    AnnulusConfig,
    Arc,
    DividingSet,
    InvalidDividingSet,
    MalformedArc,
    TERMINALS,
    bypass_move,
    classify_arc,
    euler_eval,
    giroux_tight,
    is_extremal,
    isotopic,
    reachability,
    reduce_annulus,
    reduction_rules,
)
from convexcalc.surface import Curve, same_curve


@pytest.mark.parametrize("genus", [2, 3, 4])
def test_two_parallel_copies_are_extremal(genus):
    d = DividingSet.parallel(Curve.parse("a1", genus), 2, -1)
    assert euler_eval(d) == -(2 * genus - 2)
    assert giroux_tight(d) and is_extremal(d)
    kinds = sorted((r.kind, r.sign) for r in d.regions)
    assert kinds == [("annulus", -1), ("piece", 1)]


def test_positive_annulus_flips_the_sign():
    d = DividingSet.parallel(Curve.parse("a1", 2), 2, 1)
    assert euler_eval(d) == 2


def test_trivial_circle_breaks_tightness():
    d = DividingSet(2, ((Curve.parse("a1", 2), 2),), 1, 1)
    assert not giroux_tight(d)
    assert euler_eval(d) == -4


def test_two_pairs():
    d = DividingSet(2, ((Curve.parse("a1", 2), 2), (Curve.parse("a2", 2), 2)), 1)
    assert euler_eval(d) == -2
    assert len(d.regions) == 3


def test_invalid_sets_rejected():
    a1 = Curve.parse("a1", 2)
    with pytest.raises(InvalidDividingSet):
        DividingSet(2, ((a1, 1),), 1)
    with pytest.raises(InvalidDividingSet):
        DividingSet(2, ((a1, 2), (Curve.parse("b1", 2), 2)), 1)


def test_type_b_twists_the_pair():
    a1, b1 = Curve.parse("a1", 2), Curve.parse("b1", 2)
    d = DividingSet.parallel(a1)
    r = bypass_move(d, Arc(((0, 1), (0, 2), (0, 1)), loop=b1))
    assert r.pattern.pattern == "B"
    (c, m), = r.dividing.components
    assert m == 2 and same_curve(c, Curve.parse("A1 b1", 2), oriented=False)
    back = bypass_move(r.dividing, r.inverse)
    assert isotopic(back.dividing, d)


def test_type_a_removes_a_pair():
    d = DividingSet(3, ((Curve.parse("a1", 3), 4),), -1)
    r = bypass_move(d, Arc(((0, 1), (0, 2), (0, 3))))
    assert r.pattern.pattern == "A"
    assert r.dividing.components[0][1] == 2
    assert euler_eval(r.dividing) == euler_eval(d)


def test_trivial_arc_changes_nothing():
    d = DividingSet.parallel(Curve.parse("a1", 2))
    r = bypass_move(d, Arc(((0, 1), (0, 1), (0, 2)), cuts_disk=True))
    assert r.trivial and r.dividing is d


@pytest.mark.parametrize("genus", [2, 3])
def test_c1_arc(genus):
    a1, a2 = Curve.parse("a1", genus), Curve.parse("a2", genus)
    c1 = mcg.humphries_curve("c1", genus)
    d = DividingSet.parallel(a1, 2, -1)
    kind = classify_arc(d, Arc(((0, 1), (0, 2), (0, 2)), loop=a2, band=c1))
    assert kind.label == "C1"
    r = bypass_move(d, kind)
    assert same_curve(r.dividing.components[0][0], c1, oriented=False)
    assert r.dividing.annulus_signs(0) == [-1]
    assert isotopic(bypass_move(r.dividing, r.inverse).dividing, d)


@pytest.mark.parametrize("label,gamma,loop,band", [
    ("C2", "a1 b1 A1 B1", "a1", "A1"),
    ("C3", "a1", "a2 b2 A2 B2", "a1 a2 b2 A2 B2"),
    ("C4", "a1 b1 A1 B1", "a2 b2 A2 B2", "a1 b1 A1 B1 a2 b2 A2 B2"),
])
def test_c_subtypes_genus3(label, gamma, loop, band):
    P = lambda s: Curve.parse(s, 3)  # noqa: E731
    d = DividingSet.parallel(P(gamma))
    kind = classify_arc(d, Arc(((0, 1), (0, 2), (0, 2)), loop=P(loop), band=P(band)))
    assert kind.label == label


def test_reversed_c_arc_classifies_the_same():
    a1, a2 = Curve.parse("a1", 2), Curve.parse("a2", 2)
    d = DividingSet.parallel(a1)
    arc = Arc(((0, 1), (0, 1), (0, 2)), loop=a2, band=mcg.humphries_curve("c1", 2))
    assert classify_arc(d, arc).label == "C1"


def test_malformed_arcs():
    d = DividingSet.parallel(Curve.parse("a1", 2))
    with pytest.raises(MalformedArc):
        classify_arc(d, Arc(((0, 1), (0, 5), (0, 1))))
    with pytest.raises(MalformedArc):
        classify_arc(d, Arc(((0, 1), (0, 2), (0, 2))))


@pytest.mark.parametrize("text,terminal,steps", [
    ("II4+", "II_0^+", 2),
    ("I5", "I_0", 5),
    ("I-4", "I_-1", 3),
    ("II3-", "I_-1", 2),
    ("II1+", "I_0", 1),
])
def test_reductions(text, terminal, steps):
    end, trace = reduce_annulus(AnnulusConfig.parse(text))
    assert str(end) == terminal
    assert len(trace) == steps


def test_closure_terminals():
    graph = reachability(6, 8)
    assert graph.every_state_terminates()
    assert graph.terminals == set(TERMINALS)
    assert graph.reached_terminals() == set(TERMINALS)
    i0, im1 = AnnulusConfig.I(0), AnnulusConfig.I(-1)
    assert im1 in graph.reachable(i0) and i0 in graph.reachable(im1)


def test_uncertain_rule_is_opt_in():
    assert not any(r.uncertain for r in reduction_rules())
    assert any(r.uncertain for r in reduction_rules(include_uncertain=True))


def test_dot_export():
    dot = reachability(2, 2).to_dot()
    assert dot.startswith("digraph")
    assert dot.count("doublecircle") >= 4


def test_config_parse_round_trip():
    for text in ("II4+", "II0-", "I_-1", "I3"):
        cfg = AnnulusConfig.parse(text)
        assert AnnulusConfig.parse(str(cfg).replace("^", "").replace("_", "")) == cfg
