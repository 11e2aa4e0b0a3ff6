import json
import random
from pathlib import Path

import pytest
from hypothesis import given, settings

import oracle
from convexcalc import mcg
from convexcalc.intersect import (
    NotPrimitive,
    disjoint,
    geometric_intersection,
    intersection_from_words,
    meets_once,
    same_class,
    self_intersection,
)
from convexcalc.surface import Curve, algebraic_intersection

from strategies import simple_curves, twist_words

CORPUS = json.loads((Path(__file__).parent / "data" / "oracle_corpus.json").read_text())["pairs"]


def test_standard_pairs(curve):
    assert geometric_intersection(curve("a1"), curve("b1")) == 1
    assert geometric_intersection(curve("a1"), curve("a2")) == 0
    tb = mcg.apply(mcg.twist("b1", 2), curve("a1"))
    assert geometric_intersection(tb, curve("a1")) == 1


def test_self_intersection_examples(curve):
    assert self_intersection(curve("a1")) == 0
    assert self_intersection(curve("a1 b1")) == 0
    # value from the chord oracle
    assert self_intersection(curve("a1 b1 A1 b1")) == 1


def test_predicates(curve):
    assert disjoint(curve("a1"), curve("a2"))
    assert meets_once(curve("a1"), curve("b1"))
    assert not meets_once(curve("a1"), curve("a2"))


def test_proper_powers_are_rejected(curve):
    with pytest.raises(NotPrimitive):
        intersection_from_words(2, (1, 1), (2,))


def test_same_class_detects_conjugates():
    assert same_class(2, (1, 2, 3), (3, 1, 2))
    assert not same_class(2, (1, 2), (2, -1))


@pytest.mark.parametrize("row", CORPUS, ids=lambda r: f"g{r['genus']}:{r['w1']}|{r['w2']}")
def test_frozen_oracle_corpus(row):
    g = row["genus"]
    assert geometric_intersection(Curve.parse(row["w1"], g), Curve.parse(row["w2"], g)) == row["i"]


def test_live_oracle_sample():
    rng = random.Random(7)
    polys = {g: oracle.Polygon(g) for g in (2, 3)}
    for row in rng.sample(CORPUS, 10):
        g = row["genus"]
        x, y = Curve.parse(row["w1"], g), Curve.parse(row["w2"], g)
        assert oracle.intersection(g, x.word, y.word, polys[g]) == geometric_intersection(x, y)


@settings(max_examples=60, deadline=None)
@given(simple_curves(2), simple_curves(2))
def test_symmetry(x, y):
    assert geometric_intersection(x, y) == geometric_intersection(y, x)
    assert geometric_intersection(x, y) == geometric_intersection(x.inverse(), y)


@settings(max_examples=100, deadline=None)
@given(simple_curves(2, 3, 10), simple_curves(2, 3, 10), twist_words(2, 2))
def test_mapping_class_invariance(x, y, f):
    fx, fy = mcg.apply(f, x), mcg.apply(f, y)
    if max(len(fx.word), len(fy.word)) > 24:
        return
    assert geometric_intersection(fx, fy) == geometric_intersection(x, y)


@settings(max_examples=1000, deadline=None)
@given(simple_curves(2, 3, 10), simple_curves(2, 3, 10))
def test_algebraic_lower_bound(x, y):
    n = geometric_intersection(x, y)
    a = algebraic_intersection(x, y)
    assert n >= abs(a)
    assert (n - a) % 2 == 0
