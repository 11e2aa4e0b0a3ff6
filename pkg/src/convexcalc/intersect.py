"""Geometric intersection numbers from linked geodesic axes.

For primitive classes ``g`` and ``h`` the intersection number counts the
``<g>``-orbits of lifts of the ``h``-geodesic that cross the axis of ``g``.
Every such orbit has a representative crossing one fundamental segment of the
axis, and every lift crossing that segment passes through a tile along it, so
the candidates are ``t * L`` with ``t`` a tile along the segment and ``L`` a
lift of ``h`` meeting the base polygon.  Linked candidates are then separated
into orbits by an orbit-invariant key.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass

import gmpy2
from gmpy2 import mpfr

from . import hyperbolic as hyp
from .hyperbolic import Axis, PrecisionExhausted
from .words import Word, cyclic_reduce, primitive_root

__all__ = [
    "NotPrimitive",
    "PrecisionExhausted",
    "AxisPair",
    "axis_pair",
    "disjoint",
    "geometric_intersection",
    "intersection_from_words",
    "lifts_through_domain",
    "meets_once",
    "same_class",
    "self_intersection",
]


class NotPrimitive(ValueError):
    pass


@dataclass(frozen=True)
class AxisPair:
    """Axis data of a hyperbolic element."""

    word: Word
    matrix: tuple
    axis: Axis
    length: object  # translation length (mpfr)

    @property
    def repelling(self):
        return self.axis.source

    @property
    def attracting(self):
        return self.axis.target


@functools.lru_cache(maxsize=4096)
def _axis_data(genus: int, word: Word, bits: int):
    m = hyp.model(genus, bits)
    with hyp.ctx(bits):
        A = m.matrix(word)
        if abs(hyp.trace(A)) <= 2:
            raise NotPrimitive(f"word {word} is not a hyperbolic element")
        ax, tiles = m.axis_tiles(A)
        length = hyp.translation_length(A)
        # primitive iff no tile translate along the segment is a shorter
        # translation along the same axis
        tol = hyp.tolerance(bits) * 1000
        M0 = tiles[0][0]
        for M, _ in tiles[1:]:
            E = hyp.mul(M, hyp.inv(M0))
            moved = ax.moved(E)
            if moved.same_as(ax, tol):
                tl = hyp.translation_length(E)
                if tl > tol and tl < length - mpfr("1e-6"):
                    raise NotPrimitive(f"word {word} is a proper power")
        lifts = []
        for M, w in tiles:
            Mi = hyp.inv(M)
            L = ax.moved(Mi)
            if any(L.same_as(x[0], tol) for x in lifts):
                continue
            lifts.append((L, Mi, hyp.inverse(w)))
        return AxisPair(word, A, ax, length), tuple(tiles), tuple(lifts)


def _check_word(word: Word) -> Word:
    w = cyclic_reduce(word)
    if not w:
        raise NotPrimitive("trivial word")
    if primitive_root(w)[1] > 1:
        raise NotPrimitive(f"word {w} is a proper power")
    return w


def axis_pair(genus: int, word: Word, bits: int | None = None) -> AxisPair:
    w = _check_word(word)
    return _axis_data(genus, w, bits or hyp.working_bits(len(w)))[0]


def lifts_through_domain(genus: int, word: Word, bits: int | None = None):
    """Lifts of the closed geodesic of ``word`` that meet the base polygon.

    Each entry is ``(axis, matrix, tile_word)`` where the lift is the image of
    the axis of ``word`` under ``matrix`` (the element spelled by
    ``tile_word``).  The list may include lifts that only touch the polygon.
    """
    w = _check_word(word)
    return _axis_data(genus, w, bits or hyp.working_bits(len(w)))[2]


def _linked_orbits(genus: int, g: Word, h: Word, bits: int) -> int:
    pg, tiles_g, _ = _axis_data(genus, g, bits)
    _, _, lifts_h = _axis_data(genus, h, bits)
    with hyp.ctx(bits):
        r, a = pg.axis.source, pg.axis.target
        # a reference boundary point, used to make the cross ratio real
        ref = -(r + a)
        if abs(ref) < mpfr("1e-3"):
            ref = gmpy2.mpc(0, 1) * (a - r)
        ref = ref / abs(ref)
        ref_ratio = (ref - r) / (ref - a)

        def coord(z):
            c = ((z - r) / (z - a)) / ref_ratio
            return c.real

        ell = pg.length
        eps = hyp.tolerance(bits)
        key_tol = eps * 1000
        found: list[tuple] = []
        for T, _ in tiles_g:
            for L, _, _ in lifts_h:
                s_pt = hyp.act(T, L.source)
                t_pt = hyp.act(T, L.target)
                ds = min(abs(s_pt - r), abs(s_pt - a))
                dt = min(abs(t_pt - r), abs(t_pt - a))
                if ds < eps and dt < eps:
                    continue  # the axis of g itself
                if ds < eps or dt < eps:
                    raise PrecisionExhausted("axis endpoints closer than the working tolerance")
                x, y = coord(s_pt), coord(t_pt)
                if x * y >= 0:
                    continue
                height = (gmpy2.log(abs(x)) + gmpy2.log(abs(y))) / 2
                phase = gmpy2.fmod(height, ell)
                if phase < 0:
                    phase += ell
                shape = gmpy2.log(abs(x / y))
                key = (phase, shape, x > 0)
                if not any(_same_key(key, k, ell, key_tol) for k in found):
                    found.append(key)
        return len(found)


def _same_key(k1, k2, ell, tol) -> bool:
    if k1[2] != k2[2] or abs(k1[1] - k2[1]) > tol:
        return False
    d = abs(k1[0] - k2[0])
    return d < tol or abs(d - ell) < tol


_ESCALATIONS = 3


def intersection_from_words(genus: int, w1: Word, w2: Word) -> int:
    """Intersection number of two words; precision is doubled on near-ties."""
    g = _check_word(w1)
    h = _check_word(w2)
    bits = hyp.working_bits(len(g), len(h))
    for attempt in range(_ESCALATIONS + 1):
        try:
            return _linked_orbits(genus, g, h, bits)
        except PrecisionExhausted:
            if attempt == _ESCALATIONS:
                raise
            bits *= 2
    raise AssertionError("unreachable")


def geometric_intersection(c1, c2) -> int:
    """Minimal intersection number of two primitive classes.

    For ``c1 == c2`` this is the number of ordered branch pairs at self
    crossings, i.e. twice the self-intersection number.
    """
    genus = c1.genus
    if c2.genus != genus:
        raise ValueError("curves live on different surfaces")
    a, b = sorted([c1.word, c2.word])
    return intersection_from_words(genus, a, b)


def self_intersection(c) -> int:
    return intersection_from_words(c.genus, c.word, c.word) // 2


def disjoint(c1, c2) -> bool:
    return geometric_intersection(c1, c2) == 0


def meets_once(c1, c2) -> bool:
    return geometric_intersection(c1, c2) == 1


def same_class(genus: int, w1: Word, w2: Word) -> bool:
    """Whether two words are conjugate in the surface group (oriented)."""
    w1 = cyclic_reduce(w1)
    w2 = cyclic_reduce(w2)
    if not w1 or not w2:
        return not w1 and not w2
    bits = hyp.working_bits(len(w1), len(w2))
    m = hyp.model(genus, bits)
    with hyp.ctx(bits):
        A, B = m.matrix(w1), m.matrix(w2)
        ta, tb = hyp.trace(A), hyp.trace(B)
        tol = hyp.tolerance(bits)
        if abs(abs(ta) - abs(tb)) > tol * max(1, abs(ta)):
            return False
        if abs(ta) <= 2:
            # elliptic or parabolic elements do not occur in a surface group
            return hyp.is_identity(A) and hyp.is_identity(B)
    r1, k1 = primitive_root(w1)
    r2, k2 = primitive_root(w2)
    try:
        la = _axis_data(genus, r1, bits)
        lb = _axis_data(genus, r2, bits)
    except NotPrimitive:
        return _same_class_powers(genus, w1, w2, bits)
    with hyp.ctx(bits):
        ax0 = la[2][0][0]
        for L, _, _ in lb[2]:
            if L.same_as(ax0, tol * 1000):
                return k1 == k2
        return False


def _same_class_powers(genus, w1, w2, bits) -> bool:
    # both are powers of a hidden root; compare oriented axes through D
    m = hyp.model(genus, bits)
    with hyp.ctx(bits):
        A, B = m.matrix(w1), m.matrix(w2)
        axA, tilesA = m.axis_tiles(A)
        axB, tilesB = m.axis_tiles(B)
        M0 = tilesA[0][0]
        target = axA.moved(hyp.inv(M0))
        tol = hyp.tolerance(bits) * 1000
        for M, _ in tilesB:
            if axB.moved(hyp.inv(M)).same_as(target, tol):
                return True
        return False
