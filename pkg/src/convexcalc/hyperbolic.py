"""Hyperbolic backend: the regular 4g-gon in the Poincare disk and its side pairings.

Isometries are elements of SU(1,1) stored as pairs ``(alpha, beta)`` acting by
``z -> (alpha z + beta) / (conj(beta) z + conj(alpha))``.  All arithmetic is
done with gmpy2 at a caller-chosen binary precision.

Generator convention: the pairing that moves the polygon across the side
labelled ``a_i`` represents ``a_i``; for ``b_i`` it is the inverse pairing.
With this choice the product of commutators maps to the identity in word
order, which ``HyperbolicModel`` checks on construction.
"""

from __future__ import annotations

import functools
import os
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import gmpy2
from gmpy2 import mpc, mpfr

from .words import Word, format_word, inverse

Mat = tuple  # (alpha: mpc, beta: mpc)

EPS_REP = mpfr("1e-20")
DEFAULT_BITS = 128
# tiles closer than this (in Klein coordinates) to a segment are kept
_CLIP_TOL = 1e-12
_REDUCE_TOL = mpfr("1e-30")


class PrecisionExhausted(ArithmeticError):
    """Two quantities that must be separated fell within the working tolerance."""


def working_bits(*lengths: int) -> int:
    """Precision used for words of the given lengths, rounded up to 64 bits."""
    env = os.environ.get("CONVEXCALC_PRECISION")
    floor = int(env) if env else DEFAULT_BITS
    need = 64 + 8 * sum(lengths)
    bits = max(floor, need)
    return ((bits + 63) // 64) * 64


def tolerance(bits: int):
    """Separation below which two boundary points are treated as equal.

    ``2^(-bits/2)``, i.e. about 1e-20 at the default 128 bits; it shrinks with
    the precision so that long words, whose lifts may fellow-travel and
    share nearly equal endpoints, stay resolvable.
    """
    return mpfr(2) ** (-(bits // 2))


def ctx(bits: int):
    return gmpy2.context(gmpy2.get_context(), precision=bits)


# -- SU(1,1) arithmetic ----------------------------------------------------

def identity() -> Mat:
    return (mpc(1), mpc(0))


def mul(A: Mat, B: Mat) -> Mat:
    a1, b1 = A
    a2, b2 = B
    return (a1 * a2 + b1 * b2.conjugate(), a1 * b2 + b1 * a2.conjugate())


def inv(A: Mat) -> Mat:
    return (A[0].conjugate(), -A[1])


def act(A: Mat, z):
    a, b = A
    return (a * z + b) / (b.conjugate() * z + a.conjugate())


def trace(A: Mat):
    return 2 * A[0].real


def rotation(theta) -> Mat:
    return (gmpy2.exp(mpc(0, theta / 2)), mpc(0))


def translation_to(p) -> Mat:
    """Isometry moving 0 to ``p`` along a geodesic."""
    s = 1 / gmpy2.sqrt(1 - abs(p) ** 2)
    return (mpc(s), p * s)


def half_turn(p) -> Mat:
    T = translation_to(p)
    return mul(mul(T, rotation(gmpy2.const_pi())), inv(T))


def klein(z):
    return 2 * z / (1 + abs(z) ** 2)


def disk_distance(z, w):
    num = 2 * abs(z - w) ** 2
    den = (1 - abs(z) ** 2) * (1 - abs(w) ** 2)
    return gmpy2.acosh(1 + num / den)


def is_identity(A: Mat, tol=EPS_REP) -> bool:
    return abs(A[1]) < tol and abs(abs(A[0]) - 1) < tol


def same_element(A: Mat, B: Mat, tol=EPS_REP) -> bool:
    """Equality in PSU(1,1)."""
    D = mul(inv(A), B)
    return abs(D[1]) < tol * max(1, abs(A[0])) and abs(abs(D[0].real) - 1) < tol * max(1, abs(A[0]))


def cross(u, v):
    return u.real * v.imag - u.imag * v.real


# -- axes ------------------------------------------------------------------

@dataclass(frozen=True)
class Axis:
    """Oriented geodesic given by its endpoints on the unit circle."""

    source: object  # repelling endpoint
    target: object  # attracting endpoint

    def moved(self, M: Mat) -> "Axis":
        return Axis(act(M, self.source), act(M, self.target))

    def reversed(self) -> "Axis":
        return Axis(self.target, self.source)

    def klein_chord(self):
        return self.source, self.target  # boundary points coincide in both models

    def nearest_point(self):
        """Point of the geodesic closest to the origin."""
        m = (self.source + self.target) / 2  # Klein midpoint of the chord
        r2 = abs(m) ** 2
        if r2 == 0:
            return m
        # Klein -> Poincare
        return m / (1 + gmpy2.sqrt(1 - r2))

    def same_as(self, other: "Axis", tol=EPS_REP) -> bool:
        return abs(self.source - other.source) < tol and abs(self.target - other.target) < tol


def axis_of(A: Mat) -> Axis:
    a, b = A
    x = a.real
    if abs(x) <= 1 + EPS_REP:
        raise ValueError("element is not hyperbolic")
    if x < 0:
        a, b = -a, -b
        x = -x
    s = gmpy2.sqrt(x * x - 1)
    cb = b.conjugate()
    z1 = (mpc(0, a.imag) + s) / cb
    z2 = (mpc(0, a.imag) - s) / cb
    # attracting fixed point has |derivative| < 1, i.e. |cb z + conj a| > 1
    if abs(cb * z1 + a.conjugate()) > 1:
        return Axis(z2, z1)
    return Axis(z1, z2)


def translation_length(A: Mat):
    return 2 * gmpy2.acosh(abs(trace(A)) / 2)


# -- the model -------------------------------------------------------------

@dataclass
class HyperbolicModel:
    genus: int
    bits: int = DEFAULT_BITS
    vertices: list = field(init=False, repr=False)
    kvertices: list = field(init=False, repr=False)
    side_labels: list = field(init=False)
    side_letter: list = field(init=False)
    pairing: list = field(init=False, repr=False)
    gens: dict = field(init=False, repr=False)

    def __post_init__(self):
        g = self.genus
        n = 4 * g
        with ctx(self.bits):
            pi = gmpy2.const_pi()
            cot = lambda t: gmpy2.cos(t) / gmpy2.sin(t)
            r = gmpy2.tanh(gmpy2.acosh(cot(pi / n) ** 2) / 2)
            rho = gmpy2.tanh(gmpy2.acosh(cot(pi / n)) / 2)
            self.vertices = [r * gmpy2.exp(mpc(0, (2 * k - 1) * pi / n)) for k in range(n)]
            self.kvertices = [klein(v) for v in self.vertices]
            labels = []
            for i in range(1, g + 1):
                labels += [2 * i - 1, 2 * i, -(2 * i - 1), -(2 * i)]
            self.side_labels = labels
            pairing = []
            for k, x in enumerate(labels):
                m = labels.index(-x)
                mid = rho * gmpy2.exp(mpc(0, 2 * pi * k / n))
                pairing.append(mul(half_turn(mid), rotation(2 * pi * (k - m) / n)))
            self.pairing = pairing
            gens = {}
            for k, x in enumerate(labels):
                if x > 0:
                    A = pairing[k] if x % 2 else inv(pairing[k])
                    gens[x] = A
                    gens[-x] = inv(A)
            self.gens = gens
            # which letter moves the polygon across side k
            self.side_letter = []
            for k in range(n):
                hit = [x for x, A in gens.items() if same_element(A, pairing[k])]
                assert len(hit) == 1, "side pairing does not match a generator"
                self.side_letter.append(hit[0])
            assert is_identity(self.matrix(self.relator()), EPS_REP), "relator check failed"

    def relator(self) -> Word:
        out = []
        for i in range(1, self.genus + 1):
            out += [2 * i - 1, 2 * i, -(2 * i - 1), -(2 * i)]
        return tuple(out)

    def matrix(self, word: Iterable[int]) -> Mat:
        M = identity()
        with ctx(self.bits):
            for x in word:
                M = mul(M, self.gens[x])
        return M

    # polygon geometry in the Klein model; sides are counterclockwise
    def side_values(self, kz):
        kv = self.kvertices
        n = len(kv)
        return [cross(kv[(k + 1) % n] - kv[k], kz - kv[k]) for k in range(n)]

    def reduce_point(self, z) -> tuple[Mat, Word, object]:
        """Return ``(M, word, z0)`` with ``z = M(z0)`` and ``z0`` in the polygon."""
        M = identity()
        w: list[int] = []
        with ctx(self.bits):
            # points within a tiny distance of a side count as inside; without
            # this a point on a side can bounce between the two paired sides
            tol = -_REDUCE_TOL
            for _ in range(100000):
                vals = self.side_values(klein(z))
                k = min(range(len(vals)), key=lambda i: vals[i])
                if vals[k] >= tol:
                    return M, tuple(w), z
                S = self.pairing[k]
                z = act(inv(S), z)
                M = mul(M, S)
                w.append(self.side_letter[k])
        raise RuntimeError("point reduction did not terminate")

    def clip(self, u, v, tol=_CLIP_TOL):
        """Clip the Klein segment u->v to the (slightly inflated) polygon.

        Returns ``(t_in, t_out)`` or ``None`` when the segment misses it.
        """
        kv = self.kvertices
        n = len(kv)
        t0, t1 = mpfr(0), mpfr(1)
        d = v - u
        for k in range(n):
            e = kv[(k + 1) % n] - kv[k]
            f0 = cross(e, u - kv[k]) + tol
            fd = cross(e, d)
            if fd == 0:
                if f0 < 0:
                    return None
                continue
            t = -f0 / fd
            if fd > 0:
                if t > t0:
                    t0 = t
            elif t < t1:
                t1 = t
            if t0 > t1:
                return None
        return t0, t1

    def tiles_along(self, p, q) -> list[tuple[Mat, Word]]:
        """Every tile ``M(D)`` meeting the closed geodesic segment [p, q].

        May contain tiles that only come within a tiny tolerance of the
        segment; callers must treat the result as a superset.
        """
        with ctx(self.bits):
            M0, w0, _ = self.reduce_point(p)
            refs = (p, q, _offset_point(p, q))
            seen = {self._tile_key(M0, refs)}
            out = [(M0, w0)]
            stack = [(M0, w0)]
            while stack:
                M, w = stack.pop()
                for k, S in enumerate(self.pairing):
                    N = mul(M, S)
                    key = self._tile_key(N, refs)
                    if key in seen:
                        continue
                    Ni = inv(N)
                    if self.clip(klein(act(Ni, p)), klein(act(Ni, q))) is None:
                        continue
                    seen.add(key)
                    nw = w + (self.side_letter[k],)
                    out.append((N, nw))
                    stack.append((N, nw))
            return out

    @staticmethod
    def _tile_key(M: Mat, refs) -> tuple:
        c = act(M, mpc(0))
        return tuple(round(float(disk_distance(c, r)), 5) for r in refs)

    def axis_tiles(self, A: Mat) -> tuple[Axis, list[tuple[Mat, Word]]]:
        """Axis of ``A`` and the tiles along one fundamental segment of it."""
        with ctx(self.bits):
            ax = axis_of(A)
            p0 = ax.nearest_point()
            return ax, self.tiles_along(p0, act(A, p0))


def _offset_point(p, q):
    # a reference point off the geodesic through p and q
    m = (p + q) / 2
    d = q - p
    off = mpc(-d.imag, d.real)
    if abs(off) == 0:
        off = mpc(0, 1)
    c = m + off / abs(off) * mpfr("0.37")
    if abs(c) >= 1:
        c = m - off / abs(off) * mpfr("0.37")
    if abs(c) >= 1:
        c = m * mpfr("0.5")
    return c


@functools.lru_cache(maxsize=32)
def model(genus: int, bits: int = DEFAULT_BITS) -> HyperbolicModel:
    return HyperbolicModel(genus, bits)


def describe(word: Sequence[int]) -> str:
    return format_word(word)


__all__ = [
    "Axis",
    "EPS_REP",
    "HyperbolicModel",
    "PrecisionExhausted",
    "act",
    "axis_of",
    "ctx",
    "identity",
    "inv",
    "inverse",
    "model",
    "mul",
    "same_element",
    "trace",
    "translation_length",
    "working_bits",
]
