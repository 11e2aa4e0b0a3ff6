import numpy as np
import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from convexcalc import mcg
from convexcalc.fibered import (
    MappingTorus,
    MonodromyFixesCurve,
    extremal_report,
    mapping_torus_h1,
    smith_normal_form,
)
from convexcalc.surface import Curve

matrices = st.integers(1, 5).flatmap(
    lambda r: st.integers(1, 5).flatmap(
        lambda c: st.lists(st.lists(st.integers(-9, 9), min_size=c, max_size=c), min_size=r, max_size=r)))


def _sympy_diagonal(rows):
    from sympy.matrices.normalforms import smith_normal_form as snf

    D = snf(sympy.Matrix(rows), domain=sympy.ZZ)
    return sorted(abs(int(D[i, i])) for i in range(min(D.shape)))


@settings(max_examples=300, deadline=None)
@given(matrices)
def test_smith_normal_form_matches_sympy(rows):
    d = smith_normal_form(np.array(rows))
    assert sorted(d) == _sympy_diagonal(rows)
    nonzero = [x for x in d if x]
    assert all(b % a == 0 for a, b in zip(nonzero, nonzero[1:]))


@pytest.mark.parametrize("word,rank,torsion", [
    ("Ta1", 4, ()),
    ("", 5, ()),
    ("Ta1^2 Tb1", 3, (2,)),
])
def test_mapping_torus_homology(word, rank, torsion):
    f = mcg.MappingClassWord.parse(word, 2) if word else mcg.MappingClassWord.identity(2)
    h = mapping_torus_h1(f)
    assert (h.rank, h.torsion) == (rank, torsion)


def test_fixed_curve_is_rejected():
    mt = MappingTorus.parse("Ta1", 2)
    with pytest.raises(MonodromyFixesCurve):
        extremal_report(mt, Curve.parse("a2", 2), certify_bound=None)


def test_separating_gamma_is_rejected():
    mt = MappingTorus.parse(mcg.PENNER_GENUS2[0], 2)
    with pytest.raises(ValueError):
        extremal_report(mt, Curve.parse("a1 b1 A1 B1", 2), certify_bound=None)


@pytest.mark.parametrize("word", mcg.PENNER_GENUS2)
def test_unique_tight_class(word):
    mt = MappingTorus.parse(word, 2)
    rep = extremal_report(mt, Curve.parse("a1", 2), n=3)
    statuses = [c["status"] for c in rep.candidates]
    assert statuses == ["glues tight", "glues overtwisted", "reducible", "reducible"]
    assert rep.tight_classes[0]["class"] == "f(gamma) - gamma"
    assert rep.fiber_euler == -2 and rep.fiber_extremal
    assert rep.certificate["passed"]


@pytest.mark.parametrize("n", [1, 2, 3])
def test_report_stable_in_stack_depth(n):
    mt = MappingTorus.parse(mcg.PENNER_GENUS2[1], 2)
    rep = extremal_report(mt, Curve.parse("a1", 2), n=n, certify_bound=None)
    assert [c["status"] for c in rep.candidates][:2] == ["glues tight", "glues overtwisted"]


def test_stack_depth_must_be_positive():
    with pytest.raises(ValueError):
        extremal_report(MappingTorus.parse("Ta1 Tb1", 2), Curve.parse("a1", 2), n=0, certify_bound=None)
