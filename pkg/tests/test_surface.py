import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from convexcalc import hyperbolic as hyp
from convexcalc.surface import (
    Curve,
    EmptyWord,
    InvalidGenus,
    NotSimple,
    SurfaceModel,
    algebraic_intersection,
    canonical_word,
    intersection_form,
    is_nonseparating,
    normalize,
    same_curve,
)
from convexcalc.words import WordParseError, cyclic_reduce, format_word, inverse, parse_word

from strategies import raw_words


def test_parse_and_format_round_trip():
    w = parse_word("a1 b1 A1 B1")
    assert w == (1, 2, -1, -2)
    assert format_word(w) == "a1 b1 A1 B1"
    assert parse_word("a1b1A2") == (1, 2, -3)
    assert parse_word("a1^-1 b2") == (-1, 4)


def test_parse_rejects_junk():
    with pytest.raises(WordParseError):
        parse_word("a1 q7")


def test_free_reduction():
    assert normalize("a1 b1 B1", 2).word == (1,)


def test_rotation_is_shortlex_least():
    assert normalize("b1 a1", 2).word == (1, 2)


def test_trivial_word_is_rejected():
    with pytest.raises(EmptyWord):
        normalize("a1 A1", 2)
    with pytest.raises(EmptyWord):
        normalize("a1 b1 A1 B1 a2 b2 A2 B2", 2)


def test_genus_one_is_rejected():
    with pytest.raises(InvalidGenus):
        Curve.parse("a1", 1)


def test_dehn_shortening_preserves_the_group_element():
    # more than half of the relator is replaced by the shorter complement
    raw = parse_word("a1 b1 A1 B1 a2 b2")
    c = normalize(raw, 2)
    assert len(c.word) < len(raw)
    m = hyp.model(2)
    with hyp.ctx(m.bits):
        assert abs(abs(hyp.trace(m.matrix(raw))) - abs(hyp.trace(m.matrix(c.word)))) < hyp.EPS_REP


@settings(max_examples=1000, deadline=None)
@given(raw_words(2))
def test_normalize_is_idempotent(w):
    w = cyclic_reduce(w)
    if not w:
        return
    try:
        c = normalize(w, 2)
    except EmptyWord:
        return
    assert normalize(c.word, 2).word == c.word


@settings(max_examples=200, deadline=None)
@given(raw_words(3))
def test_inverse_negates_homology(w):
    try:
        c = normalize(w, 3)
    except EmptyWord:
        return
    assert c.inverse().homology == -c.homology


@settings(max_examples=100, deadline=None)
@given(raw_words(2, 8))
def test_conjugate_words_have_equal_traces(w):
    conj = (3, 2) + tuple(w) + inverse((3, 2))
    m = hyp.model(2)
    with hyp.ctx(m.bits):
        t1, t2 = hyp.trace(m.matrix(w)), hyp.trace(m.matrix(conj))
        assert abs(t1 - t2) < hyp.EPS_REP * max(1, abs(t1))


def test_homology_examples(curve):
    assert curve("a1").homology.vector == (1, 0, 0, 0)
    assert curve("a1 b1 A1 B1").homology.is_zero()


def test_intersection_form_is_symplectic():
    for g in (2, 3, 4):
        J = intersection_form(g)
        assert (J.T == -J).all()
        assert round(abs(np.linalg.det(J))) == 1


def test_algebraic_intersection(curve):
    assert algebraic_intersection(curve("a1"), curve("b1")) == 1
    assert algebraic_intersection(curve("b1"), curve("a1")) == -1
    assert algebraic_intersection(curve("a1"), curve("a2")) == 0
    c = curve("a1 b2 a2")
    assert algebraic_intersection(c, c) == 0


def test_nonseparating(curve):
    assert is_nonseparating(curve("a1"))
    assert not is_nonseparating(curve("a1 b1 A1 B1"))
    with pytest.raises(NotSimple):
        is_nonseparating(curve("a1 b1 A1 b1"))


def test_same_curve(curve):
    assert same_curve(curve("a1 b1"), curve("b1 a1"))
    assert not same_curve(curve("a1"), curve("A1"))
    assert same_curve(curve("a1"), curve("A1"), oriented=False)


def test_relator_defect():
    assert SurfaceModel(3).relator_defect() < 1e-20


def test_serialisation_round_trip(curve):
    c = curve("a1 B1 A2 b1")
    assert Curve.loads(c.dumps()) == c
    assert SurfaceModel.loads(SurfaceModel(3).dumps()).genus == 3
    assert c.dumps().splitlines()[0] == "convexcalc/v1"


def test_long_words_warn():
    with pytest.warns(UserWarning):
        normalize([1, 2] * 33, 2)
