import numpy as np
import pytest
from hypothesis import given, settings

from convexcalc import mcg
from convexcalc._twist_data import TABLES
from convexcalc.intersect import geometric_intersection, self_intersection
from convexcalc.surface import Curve, algebraic_intersection, same_curve
from convexcalc.words import parse_word

from strategies import simple_curves, twist_words


@pytest.mark.parametrize("key", sorted(TABLES), ids=lambda k: f"g{k[0]}-{k[1]}{'+' if k[2] > 0 else '-'}")
def test_frozen_tables_rederive(key):
    genus, name, sign = key
    derived = mcg.derive_twist_table(genus, mcg.humphries_word(name, genus), sign)
    frozen = {x: parse_word(w) for x, w in zip(range(1, 2 * genus + 1), TABLES[key])}
    assert derived == frozen


@pytest.mark.parametrize("genus", [2, 3])
def test_tables_are_mutually_inverse_automorphisms(genus):
    for name in mcg.humphries_names(genus):
        plus = mcg.twist_table(genus, name, 1)
        minus = mcg.twist_table(genus, name, -1)
        mcg.check_table(genus, plus, minus)


def test_twist_acts_as_transvection(curve):
    # T_b1(a1) = a1 b1, homology a1 + b1
    img = mcg.apply(mcg.twist("b1", 2), curve("a1"))
    assert img.homology == curve("a1 b1").homology
    assert geometric_intersection(img, curve("a1")) == 1


def test_twist_fixes_its_curve_and_disjoint_curves(curve):
    t = mcg.twist("a1", 2)
    assert same_curve(mcg.apply(t, curve("a1")), curve("a1"))
    assert same_curve(mcg.apply(t, curve("a2")), curve("a2"))


def test_parse_and_format_round_trip():
    f = mcg.MappingClassWord.parse("Ta1 Tb1^-1 Tc1^2", 2)
    assert mcg.MappingClassWord.parse(str(f), 2) == f
    assert len(f.inverse()) == len(f)


@settings(max_examples=40, deadline=None)
@given(twist_words(2, 4))
def test_homology_action_is_symplectic(f):
    assert mcg.is_symplectic(mcg.homology_action(f))


@settings(max_examples=40, deadline=None)
@given(twist_words(2, 3), simple_curves(2, 1, 8))
def test_inverse_law_and_homology(f, c):
    d = mcg.apply(f, c)
    assert same_curve(mcg.apply(f.inverse(), d), c)
    A = mcg.homology_action(f)
    assert tuple(int(x) for x in A @ np.array(c.homology.vector)) == d.homology.vector
    assert self_intersection(d) == 0


@settings(max_examples=30, deadline=None)
@given(twist_words(2, 3), simple_curves(2, 1, 8), simple_curves(2, 1, 8))
def test_algebraic_intersection_preserved(f, x, y):
    assert algebraic_intersection(mcg.apply(f, x), mcg.apply(f, y)) == algebraic_intersection(x, y)


def test_composition_acts_right_to_left(curve):
    f = mcg.twist("a1", 2)
    g = mcg.twist("b1", 2)
    c = curve("a1")
    assert same_curve(mcg.apply(f * g, c), mcg.apply(f, mcg.apply(g, c)))


def test_single_twist_is_not_pseudo_anosov():
    cert = mcg.pa_certificate(mcg.MappingClassWord.parse("Ta1", 2), 8)
    assert not cert.passed
    assert any(same_curve(w, Curve.parse("a2", 2), oriented=False) for w in cert.witnesses)


def test_identity_fixes_everything():
    cert = mcg.pa_certificate(mcg.MappingClassWord.identity(2), 8)
    assert not cert.passed
    assert cert.witnesses[0] == Curve.parse("a1", 2)
    assert cert.cyclotomic_factors


@pytest.mark.parametrize("word", mcg.PENNER_GENUS2)
def test_penner_words_pass(word):
    cert = mcg.pa_certificate(mcg.MappingClassWord.parse(word, 2), 8)
    assert cert.passed, cert.verdict
    assert cert.curves_checked == len(mcg.curve_family(2, 8))
