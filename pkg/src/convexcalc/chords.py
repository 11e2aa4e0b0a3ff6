"""Closed geodesics cut into chords of the fundamental polygon.

The chords of a family of pairwise disjoint simple geodesics split the
polygon into convex faces.  Gluing faces across paired sides recovers the
complementary regions of the multicurve on the surface, and the Euler
characteristic of each region is tallied from the induced cell structure.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass

import gmpy2
from gmpy2 import mpc, mpfr

from . import hyperbolic as hyp
from .intersect import lifts_through_domain
from .surface import Curve

__all__ = ["Chord", "Degenerate", "CutSurface", "trace_chords", "cut_surface", "chord_crossings"]

_VERTEX_TOL = mpfr("1e-15")
_MATCH_TOL = mpfr("1e-15")


class Degenerate(ArithmeticError):
    """A geodesic passes through a polygon vertex, so the cell structure is unusable."""


@dataclass(frozen=True)
class Chord:
    """One passage of a geodesic through the polygon, oriented along the curve."""

    curve: int  # index of the curve in the traced family
    start: object  # Klein-model points
    end: object
    side_in: int
    side_out: int
    t_in: object  # parameter along the entry side, 0 at its first vertex
    t_out: object


def _clip(m: hyp.HyperbolicModel, s, t):
    """Clip the Klein chord s->t to the polygon, with the sides hit."""
    kv = m.kvertices
    n = len(kv)
    t0, t1 = mpfr(0), mpfr(1)
    k0 = k1 = None
    d = t - s
    for k in range(n):
        e = kv[(k + 1) % n] - kv[k]
        f0 = hyp.cross(e, s - kv[k])
        fd = hyp.cross(e, d)
        if fd == 0:
            if f0 < 0:
                return None
            continue
        x = -f0 / fd
        if fd > 0:
            if x > t0:
                t0, k0 = x, k
        elif x < t1:
            t1, k1 = x, k
    if k0 is None or k1 is None or t1 - t0 <= _VERTEX_TOL:
        return None
    return t0, t1, k0, k1


def _side_parameter(m: hyp.HyperbolicModel, k: int, p):
    kv = m.kvertices
    a, b = kv[k], kv[(k + 1) % len(kv)]
    e = b - a
    return ((p - a) * e.conjugate()).real / abs(e) ** 2


def trace_chords(curves: list[Curve], bits: int | None = None,
                 strict: bool = True) -> tuple[hyp.HyperbolicModel, list[Chord]]:
    """Chords of the closed geodesics of ``curves`` in the base polygon.

    With ``strict`` a chord ending at a polygon vertex raises :class:`Degenerate`.
    """
    genus = curves[0].genus
    bits = bits or hyp.working_bits(*(len(c.word) for c in curves))
    m = hyp.model(genus, bits)
    out: list[Chord] = []
    with hyp.ctx(bits):
        for idx, c in enumerate(curves):
            seen: list[tuple] = []
            for L, _, _ in lifts_through_domain(genus, c.word, bits):
                hit = _clip(m, L.source, L.target)
                if hit is None:
                    continue
                t0, t1, k0, k1 = hit
                p = L.source + t0 * (L.target - L.source)
                q = L.source + t1 * (L.target - L.source)
                if any(abs(p - a) < _MATCH_TOL and abs(q - b) < _MATCH_TOL for a, b in seen):
                    continue
                seen.append((p, q))
                u = _side_parameter(m, k0, p)
                v = _side_parameter(m, k1, q)
                for x in (u, v):
                    if strict and (x < _VERTEX_TOL or x > 1 - _VERTEX_TOL):
                        raise Degenerate(f"the geodesic of {c} passes through a polygon vertex")
                out.append(Chord(idx, p, q, k0, k1, u, v))
    return m, out


def _to_disk(k):
    r2 = abs(k) ** 2
    return k / (1 + gmpy2.sqrt(1 - r2))


def _to_klein(z):
    return hyp.klein(z)


@dataclass
class CutSurface:
    """Complementary regions of a family of disjoint simple curves."""

    genus: int
    chi: list[int]  # Euler characteristic of each region
    left: list[int]  # region on the left of each curve
    right: list[int]
    base: int  # region containing the polygon vertex

    @property
    def regions(self) -> int:
        return len(self.chi)

    def boundary_count(self, region: int) -> int:
        return sum(1 for x in self.left if x == region) + sum(1 for x in self.right if x == region)


class _UnionFind:
    def __init__(self, n: int):
        self.parent = list(range(n))

    def find(self, x: int) -> int:
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, x: int, y: int) -> None:
        self.parent[self.find(x)] = self.find(y)


# mapping classes used to move a degenerate family into general position; the
# complement of the family is unchanged up to homeomorphism
_GENERIC_MOVES = ("Ta1 Tb1", "Tb1 Tc1", "Ta2 Tb1^-1", "Ta1 Tc1 Tb2", "Tb2 Ta1^-1 Tc1")


def cut_surface(curves: list[Curve], genus: int | None = None) -> CutSurface:
    """Regions of the surface cut along pairwise disjoint, non-isotopic simple curves.

    Region indices are arbitrary; ``left``/``right`` give the regions on either
    side of each curve.
    """
    if not curves:
        if genus is None:
            raise ValueError("genus is required for an empty family")
        return CutSurface(genus, [2 - 2 * genus], [], [], 0)
    return _cut_cached(tuple(c.word for c in curves), curves[0].genus)


@functools.lru_cache(maxsize=1024)
def _cut_cached(words: tuple, genus: int) -> CutSurface:
    from . import mcg

    curves = [Curve(genus, w) for w in words]
    try:
        return _cut(curves)
    except Degenerate as first:
        for text in _GENERIC_MOVES:
            f = mcg.MappingClassWord.parse(text, genus)
            try:
                return _cut([mcg.apply(f, c) for c in curves])
            except Degenerate:
                continue
        raise first


def _cut(curves: list[Curve]) -> CutSurface:
    genus = curves[0].genus
    m, chords = trace_chords(curves)
    n = 4 * genus
    with hyp.ctx(m.bits):
        # boundary elements in counterclockwise order: ('v', k) or ('p', chord, end)
        per_side: list[list[tuple]] = [[] for _ in range(n)]
        for i, ch in enumerate(chords):
            per_side[ch.side_in].append((ch.t_in, i, 0))
            per_side[ch.side_out].append((ch.t_out, i, 1))
        elements: list[tuple] = []
        where: dict[tuple[int, int], int] = {}
        for k in range(n):
            elements.append(("v", k))
            for _, i, end in sorted(per_side[k], key=lambda x: x[0]):
                where[(i, end)] = len(elements)
                elements.append(("p", i, end))
        total = len(elements)
        # check the side pairing matches chord endpoints in reverse order
        for k in range(n):
            mate = m.side_labels.index(-m.side_labels[k])
            mine = sorted(per_side[k], key=lambda x: x[0])
            theirs = sorted(per_side[mate], key=lambda x: x[0])
            if len(mine) != len(theirs):
                raise Degenerate("chord endpoints do not match across paired sides")
            S = m.pairing[k]
            Si = hyp.inv(S)
            for j, (_, i, end) in enumerate(mine):
                ch = chords[i]
                p = ch.start if end == 0 else ch.end
                q = _to_klein(hyp.act(Si, _to_disk(p)))
                _, i2, end2 = theirs[len(theirs) - 1 - j]
                ch2 = chords[i2]
                q2 = ch2.start if end2 == 0 else ch2.end
                if abs(q - q2) > mpfr("1e-10") or ch2.curve != ch.curve:
                    raise Degenerate("paired chord endpoints disagree")

    # faces: walk boundary segments (element e -> e+1), jumping along chords
    face_of_segment = [-1] * total
    chord_faces: dict[tuple[int, int], int] = {}  # (chord, direction) -> face
    faces = 0
    for s in range(total):
        if face_of_segment[s] >= 0:
            continue
        e = s
        while True:
            face_of_segment[e] = faces
            nxt = (e + 1) % total
            el = elements[nxt]
            if el[0] == "p":
                _, i, end = el
                other = where[(i, 1 - end)]
                # traversing chord i from endpoint `end` to the other one
                chord_faces[(i, end)] = faces
                e = other
            else:
                e = nxt
            if e == s:
                break
            if face_of_segment[e] >= 0:
                raise Degenerate("face walk did not close up")
        faces += 1

    uf = _UnionFind(faces)
    # side k's segments run from element ('v', k) to ('v', k+1); they glue in reverse
    side_segments: list[list[int]] = [[] for _ in range(n)]
    k = -1
    for e in range(total):
        if elements[e][0] == "v":
            k = elements[e][1]
        side_segments[k].append(e)
    edge_pairs = 0
    for k in range(n):
        mate = m.side_labels.index(-m.side_labels[k])
        if mate < k:
            continue
        a, b = side_segments[k], side_segments[mate]
        for j, seg in enumerate(a):
            uf.union(face_of_segment[seg], face_of_segment[b[len(b) - 1 - j]])
            edge_pairs += 1
    roots = sorted({uf.find(f) for f in range(faces)})
    index = {r: i for i, r in enumerate(roots)}
    region_of_face = [index[uf.find(f)] for f in range(faces)]
    chi = [0] * len(roots)
    for f in range(faces):
        chi[region_of_face[f]] += 1
    for k in range(n):
        mate = m.side_labels.index(-m.side_labels[k])
        if mate < k:
            continue
        for seg in side_segments[k]:
            chi[region_of_face[face_of_segment[seg]]] -= 1
    # the single vertex: segments ending at any corner share its region
    corner_regions = {region_of_face[face_of_segment[(where_v - 1) % total]]
                      for where_v in range(total) if elements[where_v][0] == "v"}
    corner_regions |= {region_of_face[face_of_segment[e]] for e in range(total) if elements[e][0] == "v"}
    if len(corner_regions) != 1:
        raise Degenerate("polygon corners fall in different regions")
    base = corner_regions.pop()
    chi[base] += 1

    left = [-1] * len(curves)
    right = [-1] * len(curves)
    for i, ch in enumerate(chords):
        # a face traversing the chord from its start lies on the chord's left
        lf = region_of_face[chord_faces[(i, 0)]]
        rf = region_of_face[chord_faces[(i, 1)]]
        for arr, val in ((left, lf), (right, rf)):
            if arr[ch.curve] == -1:
                arr[ch.curve] = val
            elif arr[ch.curve] != val:
                raise Degenerate("inconsistent sides along a curve; curves may intersect")
    if sum(chi) != 2 - 2 * genus:
        raise Degenerate("Euler characteristics do not add up")
    return CutSurface(genus, chi, left, right, base)


def chord_crossings(chords: list[Chord]) -> int:
    """Transverse crossings between chords of different curves inside the polygon."""
    count = 0
    for i, a in enumerate(chords):
        for b in chords[i + 1:]:
            if a.curve == b.curve:
                continue
            d1 = a.end - a.start
            d2 = b.end - b.start
            den = hyp.cross(d1, d2)
            if den == 0:
                continue
            w = b.start - a.start
            x = hyp.cross(w, d2) / den
            y = hyp.cross(w, d1) / den
            if 0 < x < 1 and 0 < y < 1:
                count += 1
    return count
