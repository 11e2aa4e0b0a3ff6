"""Closed oriented surfaces of genus >= 2: words, curves and homology.

The fundamental group is presented by generators ``a1 b1 ... ag bg`` and the
single relator ``[a1,b1]...[ag,bg]``.  Homology classes live in ``Z^{2g}``
in the ordered basis ``(a1, b1, ..., ag, bg)`` with ``<ai, bi> = +1``.
"""

from __future__ import annotations

import functools
import re
import warnings
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from . import hyperbolic as hyp
from .words import (
    Word,
    WordParseError,
    cyclic_reduce,
    exponent_sums,
    format_word,
    free_reduce,
    inverse,
    letter_name,
    parse_word,
    primitive_root,
    rotations,
    shortlex_key,
)

HEADER = "convexcalc/v1"
MAX_WORD_LENGTH = 64


class InvalidGenus(ValueError):
    pass


class EmptyWord(ValueError):
    """The word is trivial in the surface group, so it is not a curve."""


class NotSimple(ValueError):
    pass


def _check_genus(genus: int) -> int:
    if not isinstance(genus, (int, np.integer)) or genus < 2:
        raise InvalidGenus(f"genus must be an integer >= 2, got {genus!r}")
    return int(genus)


def relator(genus: int) -> Word:
    out: list[int] = []
    for i in range(1, genus + 1):
        out += [2 * i - 1, 2 * i, -(2 * i - 1), -(2 * i)]
    return tuple(out)


@functools.lru_cache(maxsize=None)
def intersection_form(genus: int) -> np.ndarray:
    J = np.zeros((2 * genus, 2 * genus), dtype=np.int64)
    for i in range(genus):
        J[2 * i, 2 * i + 1] = 1
        J[2 * i + 1, 2 * i] = -1
    J.setflags(write=False)
    return J


@dataclass(frozen=True)
class SurfaceModel:
    genus: int

    def __post_init__(self):
        object.__setattr__(self, "genus", _check_genus(self.genus))

    @property
    def generators(self) -> list[str]:
        return [letter_name(x) for x in range(1, 2 * self.genus + 1)]

    @property
    def relator(self) -> Word:
        return relator(self.genus)

    @property
    def intersection_form(self) -> np.ndarray:
        return intersection_form(self.genus)

    def hyperbolic_rep(self, bits: int | None = None) -> hyp.HyperbolicModel:
        return hyp.model(self.genus, bits or hyp.working_bits())

    def relator_defect(self) -> float:
        """Distance of the relator's image from the identity."""
        m = self.hyperbolic_rep()
        with hyp.ctx(m.bits):
            a, b = m.matrix(self.relator)
            return float(max(abs(b), abs(abs(a) - 1)))

    def dumps(self) -> str:
        return f"{HEADER}\n{{genus: {self.genus}}}\n"

    @classmethod
    def loads(cls, text: str) -> "SurfaceModel":
        lines = [ln.strip() for ln in text.strip().splitlines() if ln.strip()]
        if not lines or lines[0] != HEADER:
            raise ValueError(f"missing {HEADER} header")
        m = re.fullmatch(r"\{\s*genus\s*:\s*(\d+)\s*\}", lines[1] if len(lines) > 1 else "")
        if m is None:
            raise ValueError("expected '{genus: g}'")
        return cls(int(m.group(1)))


# -- Dehn's algorithm ---------------------------------------------------------

@functools.lru_cache(maxsize=None)
def _dehn_table(genus: int) -> dict[Word, Word]:
    """Map every relator piece longer than half the relator to its shorter complement."""
    rel = relator(genus)
    n = len(rel)
    table: dict[Word, Word] = {}
    for r in rotations(rel) + rotations(inverse(rel)):
        for length in range(n // 2 + 1, n + 1):
            table[r[:length]] = inverse(r[length:])
    return table


def _dehn_pass(w: Word, table, lengths, cyclic: bool) -> Word | None:
    n = len(w)
    for length in lengths:
        if length > n:
            continue
        starts = range(n) if cyclic else range(n - length + 1)
        for i in starts:
            if cyclic:
                piece = (w + w)[i:i + length] if i + length > n else w[i:i + length]
            else:
                piece = w[i:i + length]
            rep = table.get(piece)
            if rep is None:
                continue
            if cyclic and i + length > n:
                # piece wraps around: rotate so it sits at the front
                rest = (w + w)[i + length:i + n]
                return cyclic_reduce(rep + rest)
            out = w[:i] + rep + w[i + length:]
            return cyclic_reduce(out) if cyclic else free_reduce(out)
    return None


def dehn_reduce(w: Sequence[int], genus: int, cyclic: bool = True) -> Word:
    """Shorten ``w`` by Dehn's algorithm until no long relator piece remains."""
    table = _dehn_table(genus)
    n = 4 * genus
    lengths = range(n, n // 2, -1)
    w = cyclic_reduce(w) if cyclic else free_reduce(w)
    while True:
        nxt = _dehn_pass(w, table, lengths, cyclic)
        if nxt is None:
            return w
        w = nxt


@functools.lru_cache(maxsize=None)
def _half_table(genus: int) -> dict[Word, Word]:
    # pieces of exactly half the relator, with their equal-length complements
    rel = relator(genus)
    n = len(rel)
    table: dict[Word, Word] = {}
    for r in rotations(rel) + rotations(inverse(rel)):
        table[r[: n // 2]] = inverse(r[n // 2:])
    return table


def _half_swaps(w: Word, genus: int):
    half = _half_table(genus)
    k = 2 * genus
    n = len(w)
    if n < k:
        return
    ww = w + w
    for i in range(n):
        rep = half.get(ww[i:i + k])
        if rep is not None:
            yield cyclic_reduce(rep + ww[i + k:i + n])


_ORBIT_CAP = 512


@functools.lru_cache(maxsize=65536)
def _canonical_cached(w: Word, genus: int) -> Word:
    w = dehn_reduce(w, genus, cyclic=True)
    if not w:
        return w
    # explore the words reachable by swapping half-relator pieces; a swap may
    # expose a longer relator piece, so every new word is Dehn-reduced again
    best = w
    seen = {w}
    stack = [w]
    while stack and len(seen) < _ORBIT_CAP:
        u = stack.pop()
        for v in _half_swaps(u, genus):
            v = dehn_reduce(v, genus, cyclic=True)
            if not v:
                return v
            if v in seen:
                continue
            if len(v) < len(best):
                best = v
                seen = {v}
                stack = [v]
                break
            seen.add(v)
            if len(v) == len(best):
                stack.append(v)
    cands = [u for u in seen if len(u) == len(best)]
    return min((r for u in cands for r in rotations(u)), key=shortlex_key)


def canonical_word(w: Sequence[int], genus: int) -> Word:
    """Shortest word found for the conjugacy class, as its shortlex-least rotation.

    Dehn's algorithm removes every relator piece longer than half the relator;
    swapping half-relator pieces then explores equal-length alternatives (and
    may permit further Dehn reductions).
    """
    return _canonical_cached(tuple(w), genus)


# -- curves -------------------------------------------------------------------

@dataclass(frozen=True)
class HomologyElement:
    vector: tuple[int, ...]

    @property
    def genus(self) -> int:
        return len(self.vector) // 2

    def array(self) -> np.ndarray:
        return np.array(self.vector, dtype=np.int64)

    def pairing(self, other: "HomologyElement") -> int:
        J = intersection_form(self.genus)
        return int(self.array() @ J @ other.array())

    def __add__(self, other: "HomologyElement") -> "HomologyElement":
        return HomologyElement(tuple(int(x + y) for x, y in zip(self.vector, other.vector)))

    def __sub__(self, other: "HomologyElement") -> "HomologyElement":
        return self + (-other)

    def __neg__(self) -> "HomologyElement":
        return HomologyElement(tuple(-x for x in self.vector))

    def __rmul__(self, k: int) -> "HomologyElement":
        return HomologyElement(tuple(k * x for x in self.vector))

    def is_zero(self) -> bool:
        return not any(self.vector)

    @classmethod
    def zero(cls, genus: int) -> "HomologyElement":
        return cls((0,) * (2 * genus))

    def __str__(self) -> str:
        terms = []
        for i, x in enumerate(self.vector):
            if x:
                name = letter_name(i + 1)
                coeff = "" if abs(x) == 1 else str(abs(x))
                terms.append(("-" if x < 0 else "+") + coeff + name)
        if not terms:
            return "0"
        s = "".join(terms)
        return s[1:] if s[0] == "+" else s


@dataclass(frozen=True)
class Curve:
    """Free homotopy class of an oriented closed curve, stored in normal form.

    Equality of ``Curve`` objects compares normal-form words; use
    :func:`same_curve` for the (always correct) group-theoretic comparison.
    """

    genus: int
    word: Word
    _cache: dict = field(default_factory=dict, compare=False, hash=False, repr=False)

    def __post_init__(self):
        _check_genus(self.genus)
        exponent_sums(self.word, self.genus)  # validates letters

    @classmethod
    def parse(cls, text: str | Sequence[int], genus: int) -> "Curve":
        return normalize(parse_word(text), genus)

    @property
    def homology(self) -> HomologyElement:
        return HomologyElement(exponent_sums(self.word, self.genus))

    @property
    def is_primitive(self) -> bool:
        return primitive_root(self.word)[1] == 1

    def inverse(self) -> "Curve":
        return normalize(inverse(self.word), self.genus)

    @property
    def geodesic(self):
        """Axis data of the closed geodesic (computed on first use)."""
        if "axis" not in self._cache:
            from .intersect import axis_pair

            self._cache["axis"] = axis_pair(self.genus, self.word)
        return self._cache["axis"]

    def __str__(self) -> str:
        return format_word(self.word)

    def dumps(self) -> str:
        return f"{HEADER}\n{{genus: {self.genus}}}\n{format_word(self.word)}\n"

    @classmethod
    def loads(cls, text: str) -> "Curve":
        lines = [ln.strip() for ln in text.strip().splitlines() if ln.strip()]
        surf = SurfaceModel.loads("\n".join(lines[:2]))
        return cls.parse(lines[2] if len(lines) > 2 else "", surf.genus)


def normalize(raw_word: str | Iterable[int], genus: int) -> Curve:
    """Canonical representative of the conjugacy class of ``raw_word``."""
    genus = _check_genus(genus)
    w = parse_word(raw_word) if isinstance(raw_word, str) else tuple(raw_word)
    exponent_sums(w, genus)
    if len(w) > MAX_WORD_LENGTH:
        warnings.warn(
            f"word of length {len(w)} exceeds the default cap of {MAX_WORD_LENGTH}; "
            "precision is raised accordingly and running time grows",
            stacklevel=2,
        )
    cw = canonical_word(w, genus)
    if not cw:
        raise EmptyWord(f"{format_word(w) or '(empty)'} is trivial in the surface group")
    return Curve(genus, cw)


def homology_class(c: Curve) -> HomologyElement:
    return c.homology


def algebraic_intersection(c1: Curve, c2: Curve) -> int:
    return c1.homology.pairing(c2.homology)


def is_nonseparating(c: Curve) -> bool:
    from .intersect import self_intersection

    if not c.is_primitive or self_intersection(c) != 0:
        raise NotSimple(f"{c} is not a simple closed curve")
    return not c.homology.is_zero()


def same_curve(c1: Curve, c2: Curve, oriented: bool = True) -> bool:
    """Whether two curves are freely homotopic (optionally up to orientation)."""
    from .intersect import same_class

    if c1.genus != c2.genus:
        return False
    if c1.word == c2.word or same_class(c1.genus, c1.word, c2.word):
        return True
    if oriented:
        return False
    return same_class(c1.genus, c1.word, inverse(c2.word))


def homologous(c1: Curve, c2: Curve, up_to_sign: bool = True) -> bool:
    h1, h2 = c1.homology.vector, c2.homology.vector
    return h1 == h2 or (up_to_sign and h1 == tuple(-x for x in h2))


def standard_curve(name: str, genus: int) -> Curve:
    """``a1``, ``b2`` and so on as curves."""
    return Curve.parse(name, genus)


__all__ = [
    "Curve",
    "EmptyWord",
    "HEADER",
    "HomologyElement",
    "InvalidGenus",
    "NotSimple",
    "SurfaceModel",
    "WordParseError",
    "algebraic_intersection",
    "canonical_word",
    "dehn_reduce",
    "homologous",
    "homology_class",
    "intersection_form",
    "is_nonseparating",
    "normalize",
    "relator",
    "same_curve",
    "standard_curve",
]
