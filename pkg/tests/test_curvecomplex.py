import random

import pytest

from convexcalc import curvecomplex as cc
from convexcalc import mcg
from convexcalc.intersect import geometric_intersection
from convexcalc.surface import Curve, same_curve

from workloads import random_nonseparating, random_rel_triple


def _ends(seq, first, last):
    assert same_curve(seq.curves[0], first, oriented=False)
    assert same_curve(seq.curves[-1], last, oriented=False)


@pytest.mark.parametrize("connect", [cc.connect_once, cc.connect_fact1, cc.connect_fact0])
def test_standard_pair(connect, curve):
    a, b = curve("a1"), curve("a1 b1 b1 a2")
    seq = connect(a, b)
    assert seq.verified
    _ends(seq, a, b)


@pytest.mark.parametrize("connect", [cc.connect_once, cc.connect_fact1, cc.connect_fact0])
def test_equal_endpoints_get_a_detour(connect, curve):
    seq = connect(curve("a1"), curve("a1"))
    assert len(seq) == 3 and seq.verified


def test_disjoint_handles_separating_ends(curve):
    sep = curve("a1 b1 A1 B1")
    seq = cc.connect_disjoint(sep, curve("a1 b1 b1 a2"))
    assert seq.verified
    _ends(seq, sep, curve("a1 b1 b1 a2"))


def test_fact0_parallel_copies(curve):
    seq = cc.connect_fact0(curve("a1"), curve("a1"))
    assert seq.parallel_copies == [2]


def test_separating_input_rejected(curve):
    with pytest.raises(cc.NotNonseparating):
        cc.connect_once(curve("a1 b1 A1 B1"), curve("a2"))


def test_rel_preconditions(curve):
    with pytest.raises(cc.PreconditionViolated):
        cc.connect_rel(curve("a1"), curve("b1"), curve("a2"))
    with pytest.raises(cc.PreconditionViolated):
        cc.connect_rel(curve("a1"), curve("a1"), curve("a2"))


def test_rel_avoids_anchor(curve):
    alpha = curve("a1")
    seq = cc.connect_rel(alpha, curve("a2"), mcg.apply(mcg.twist("b2", 2) * mcg.twist("c1", 2), curve("a2")))
    assert seq.verified
    assert all(geometric_intersection(alpha, c) == 0 for c in seq)


def test_verifier_reports_failures(curve):
    bad = cc.CurveSequence([curve("a1"), curve("a2")], "once")
    assert not bad.verified
    assert not bad.to_dict()["conditions"]["consecutive meet once"]


def test_solver_kinds(curve):
    target = curve("a1 b1 b1 a2")
    for kind in ("global",):
        psi = cc.find_mapping(target, kind=kind)
        assert same_curve(mcg.apply(psi, curve("a1")), target, oriented=False)
    with pytest.raises(ValueError):
        cc.solve(target, kind="nonsense")


def test_framed_sequence_opens_with_frame(curve):
    alpha, beta = curve("a1"), curve("b1")
    seq = cc.connect_framed(alpha, beta, curve("a2"))
    assert seq.verified
    assert seq.curves[0] == alpha and seq.curves[1] == beta
    assert same_curve(seq.curves[-1], curve("a2"), oriented=False)


def test_framed_requires_once_pair(curve):
    with pytest.raises(cc.PreconditionViolated):
        cc.connect_framed(curve("a1"), curve("a2"), curve("b2"))


@pytest.mark.parametrize("seed", range(6))
def test_random_pairs(seed):
    rng = random.Random(seed)
    g = rng.choice((2, 3))
    x, y = random_nonseparating(rng, g), random_nonseparating(rng, g)
    for connect in (cc.connect_once, cc.connect_fact1, cc.connect_fact0):
        seq = connect(x, y)
        assert seq.verified
        _ends(seq, x, y)
    trace = cc.connect_fact0(x, y).repair_trace
    assert all(b < a for a, b in zip(trace, trace[1:]))
    alpha, b0, b1 = random_rel_triple(rng, g)
    assert cc.connect_rel(alpha, b0, b1).verified
