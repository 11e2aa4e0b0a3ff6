"""Dehn twists along the Humphries curves and words in them.

Each twist acts on the surface group by a fixed table of generator images.
The tables are derived geometrically: the twist is realised as an earthquake
along the lifts of the twist curve, so the image of a generator ``x`` is
``s_1^{e_1} ... s_r^{e_r} x`` where ``s_j`` are the conjugates of the curve
whose axes cross the segment from a base point to its ``x``-translate, in
order, and ``e_j`` is the crossing sign.  The handedness is fixed so that
the induced map on homology is the transvection ``x -> x + <x, c> c``.
Tables for small genera are frozen in :mod:`convexcalc._twist_data`.
"""

from __future__ import annotations

import functools
import re
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np
import sympy
from gmpy2 import mpc, mpfr

from . import hyperbolic as hyp
from .surface import (
    Curve,
    HomologyElement,
    canonical_word,
    dehn_reduce,
    intersection_form,
    normalize,
    relator,
    same_curve,
)
from .words import (
    Word,
    WordParseError,
    exponent_sums,
    format_word,
    free_reduce,
    inverse,
    parse_word,
    power,
)

# the earthquake direction that induces x -> x + <x,c> c
_HANDEDNESS = -1


def humphries_names(genus: int) -> list[str]:
    out = ["a1", "a2"] + [f"b{i}" for i in range(1, genus + 1)]
    return out + [f"c{i}" for i in range(1, genus)]


def humphries_word(name: str, genus: int) -> Word:
    """Word of a Humphries curve; ``c_i`` is a simple curve homologous to a_i - a_{i+1}."""
    if name not in humphries_names(genus):
        raise WordParseError(f"{name!r} is not a Humphries curve in genus {genus}")
    if name[0] == "c":
        i = int(name[1:])
        a, b, a_next = 2 * i - 1, 2 * i, 2 * i + 1
        return (a, -b, -a_next, b)
    return parse_word(name)


def humphries_curve(name: str, genus: int) -> Curve:
    return Curve(genus, canonical_word(humphries_word(name, genus), genus))


# -- deriving the generator tables ---------------------------------------------

_BASE_POINTS = [("0.0123", "0.0071"), ("-0.0217", "0.0134"), ("0.0311", "-0.0252")]


def _crossing_lifts(m, lifts, p, q):
    """Lifts of the twist curve crossing the segment [p, q], ordered from p."""
    kp, kq = hyp.klein(p), hyp.klein(q)
    found = []
    for M, Mw in m.tiles_along(p, q):
        for L, _, Lw in lifts:
            A = L.moved(M)
            if any(A.same_as(f[0], hyp.EPS_REP * 1000) for f in found):
                continue
            d = A.target - A.source
            s1 = hyp.cross(d, kp - A.source)
            s2 = hyp.cross(d, kq - A.source)
            if min(abs(s1), abs(s2)) < mpfr("1e-12"):
                raise hyp.PrecisionExhausted("base point too close to a lift")
            if s1 * s2 > 0:
                continue
            found.append((A, s1 / (s1 - s2), 1 if s1 > 0 else -1, free_reduce(Mw + Lw)))
    found.sort(key=lambda f: f[1])
    return found


def derive_twist_table(genus: int, word: Word, sign: int = 1) -> dict[int, Word]:
    """Generator images of the twist (``sign`` = +1) or its inverse along ``word``."""
    from .intersect import lifts_through_domain

    bits = hyp.working_bits(len(word), 48)
    m = hyp.model(genus, bits)
    lifts = lifts_through_domain(genus, tuple(word), bits)
    eps = _HANDEDNESS * sign
    last_error: Exception | None = None
    for re_, im_ in _BASE_POINTS:
        try:
            with hyp.ctx(bits):
                p = mpc(mpfr(re_), mpfr(im_))
                table: dict[int, Word] = {}
                for x in range(1, 2 * genus + 1):
                    q = hyp.act(m.gens[x], p)
                    img: list[int] = []
                    for _, _, crossing, N in _crossing_lifts(m, lifts, p, q):
                        s = free_reduce(N + tuple(word) + inverse(N))
                        img += power(s, eps * crossing)
                    w = dehn_reduce(free_reduce(tuple(img) + (x,)), genus, cyclic=False)
                    table[x] = w
            return table
        except hyp.PrecisionExhausted as exc:
            last_error = exc
    raise hyp.PrecisionExhausted(f"no usable base point: {last_error}")


def check_table(genus: int, table: dict[int, Word], inverse_table: dict[int, Word]) -> None:
    """Assert that a table is an automorphism inverse to ``inverse_table``."""
    rel = relator(genus)
    bits = hyp.working_bits(256)
    m = hyp.model(genus, bits)
    with hyp.ctx(bits):
        img = _substitute(table, rel)
        assert hyp.is_identity(m.matrix(img)), "relator is not preserved"
        for x in range(1, 2 * genus + 1):
            back = _substitute(inverse_table, table[x])
            assert hyp.same_element(m.matrix(back), m.gens[x]), "tables are not inverse"


def _full(table: dict[int, Word]) -> dict[int, Word]:
    out = dict(table)
    for x, w in table.items():
        out[-x] = inverse(w)
    return out


def _substitute(table: dict[int, Word], w: Iterable[int]) -> Word:
    full = _full({k: v for k, v in table.items() if k > 0})
    out: list[int] = []
    for x in w:
        out += full[x]
    return free_reduce(out)


@functools.lru_cache(maxsize=None)
def twist_table(genus: int, name: str, sign: int) -> dict[int, Word]:
    from ._twist_data import TABLES

    key = (genus, name, sign)
    if key in TABLES:
        raw = TABLES[key]
        table = {x: parse_word(raw[i]) for i, x in enumerate(range(1, 2 * genus + 1))}
    else:
        table = derive_twist_table(genus, humphries_word(name, genus), sign)
    return _full(table)


# -- mapping class words -------------------------------------------------------

_FACTOR = re.compile(r"^T_?([abc])(\d+)(?:\^\(?([+-]?\d+)\)?)?$")


@dataclass(frozen=True)
class MappingClassWord:
    """Product of Humphries twists; the rightmost factor acts first."""

    genus: int
    factors: tuple[tuple[str, int], ...] = ()

    def __post_init__(self):
        names = humphries_names(self.genus)
        clean = []
        for name, e in self.factors:
            if name not in names:
                raise WordParseError(f"{name} is not a Humphries curve in genus {self.genus}")
            if e == 0:
                continue
            if clean and clean[-1][0] == name:
                e += clean.pop()[1]
                if e == 0:
                    continue
            clean.append((name, int(e)))
        object.__setattr__(self, "factors", tuple(clean))

    @classmethod
    def parse(cls, text: str, genus: int) -> "MappingClassWord":
        factors = []
        for tok in text.replace("*", " ").split():
            if tok in ("1", "id"):
                continue
            m = _FACTOR.match(tok)
            if m is None:
                raise WordParseError(f"bad twist token {tok!r}")
            factors.append((m.group(1) + m.group(2), int(m.group(3) or 1)))
        return cls(genus, tuple(factors))

    @classmethod
    def identity(cls, genus: int) -> "MappingClassWord":
        return cls(genus, ())

    def __mul__(self, other: "MappingClassWord") -> "MappingClassWord":
        if other.genus != self.genus:
            raise ValueError("genus mismatch")
        return MappingClassWord(self.genus, self.factors + other.factors)

    def __pow__(self, k: int) -> "MappingClassWord":
        base = self if k >= 0 else self.inverse()
        return MappingClassWord(self.genus, base.factors * abs(k))

    def inverse(self) -> "MappingClassWord":
        return MappingClassWord(self.genus, tuple((n, -e) for n, e in reversed(self.factors)))

    def __str__(self) -> str:
        if not self.factors:
            return "id"
        return " ".join(f"T{n}" + (f"^{e}" if e != 1 else "") for n, e in self.factors)

    def __len__(self) -> int:
        return sum(abs(e) for _, e in self.factors)


def twist(name: str, genus: int, exponent: int = 1) -> MappingClassWord:
    return MappingClassWord(genus, ((name, exponent),))


def apply_to_word(f: MappingClassWord, w: Sequence[int]) -> Word:
    """Image of a group element (as a word) under ``f``, Dehn-reduced."""
    w = tuple(w)
    for name, e in reversed(f.factors):
        table = twist_table(f.genus, name, 1 if e > 0 else -1)
        for _ in range(abs(e)):
            out: list[int] = []
            for x in w:
                out += table[x]
            w = dehn_reduce(free_reduce(out), f.genus, cyclic=False)
    return w


def apply(f: MappingClassWord, c: Curve) -> Curve:
    if c.genus != f.genus:
        raise ValueError("genus mismatch")
    w = c.word
    for name, e in reversed(f.factors):
        table = twist_table(f.genus, name, 1 if e > 0 else -1)
        for _ in range(abs(e)):
            out: list[int] = []
            for x in w:
                out += table[x]
            w = canonical_word(out, f.genus)
    return normalize(w, f.genus)


def transvection(vector: Sequence[int], genus: int, k: int = 1) -> np.ndarray:
    """Matrix of ``x -> x + k <x, c> c`` on ``Z^{2g}``."""
    c = np.array(vector, dtype=np.int64)
    J = intersection_form(genus)
    return np.eye(2 * genus, dtype=np.int64) + k * np.outer(c, J @ c)


def homology_action(f: MappingClassWord) -> np.ndarray:
    g = f.genus
    A = np.eye(2 * g, dtype=np.int64)
    for name, e in f.factors:
        v = exponent_sums(humphries_word(name, g), g)
        A = A @ transvection(v, g, e)
    return A


def is_symplectic(A: np.ndarray) -> bool:
    g = A.shape[0] // 2
    J = intersection_form(g)
    return bool((A.T @ J @ A == J).all())


# -- bounded pseudo-Anosov evidence ----------------------------------------------

@dataclass
class PACertificate:
    word: MappingClassWord
    bound: int
    curves_checked: int
    witnesses: list[Curve] = field(default_factory=list)
    charpoly: str = ""
    cyclotomic_factors: list[str] = field(default_factory=list)

    @property
    def no_invariant_curve(self) -> bool:
        return not self.witnesses

    @property
    def cyclotomic_filter_passed(self) -> bool:
        return not self.cyclotomic_factors

    @property
    def passed(self) -> bool:
        return self.no_invariant_curve and self.cyclotomic_filter_passed

    @property
    def verdict(self) -> str:
        if self.passed:
            return f"no invariant curve found up to bound {self.bound}"
        if self.witnesses:
            return f"fails: fixes {self.witnesses[0]} up to orientation"
        return "inconclusive: homology action has a root-of-unity eigenvalue"

    def to_dict(self) -> dict:
        return {
            "word": str(self.word),
            "genus": self.word.genus,
            "bound": self.bound,
            "curves_checked": self.curves_checked,
            "witnesses": [str(c) for c in self.witnesses],
            "charpoly": self.charpoly,
            "cyclotomic_factors": self.cyclotomic_factors,
            "cyclotomic_filter_passed": self.cyclotomic_filter_passed,
            "verdict": self.verdict,
            "passed": self.passed,
        }


def _class_key(c: Curve) -> tuple:
    """Conjugacy and orientation invariant used to bucket candidate duplicates."""
    h = c.homology.vector
    h = max(h, tuple(-x for x in h))
    m = hyp.model(c.genus, hyp.DEFAULT_BITS)
    with hyp.ctx(m.bits):
        t = abs(hyp.trace(m.matrix(c.word)))
    return h, round(float(t), 6)


def curve_family(genus: int, bound: int) -> list[Curve]:
    """Simple closed curves reachable from the Humphries curves by twists, word length <= bound."""
    return list(_curve_family(genus, bound))


@functools.lru_cache(maxsize=16)
def _curve_family(genus: int, bound: int) -> tuple[Curve, ...]:
    start = [humphries_curve(n, genus) for n in humphries_names(genus)]
    twists = [twist(n, genus, e) for n in humphries_names(genus) for e in (1, -1)]
    seen: set[Word] = set()
    buckets: dict[tuple, list[Curve]] = {}
    out: list[Curve] = []
    queue = deque()

    def admit(c: Curve) -> bool:
        seen.add(c.word)
        seen.add(c.inverse().word)
        h, t = _class_key(c)
        near = [(h, round(t + d, 6)) for d in (-1e-6, 0.0, 1e-6)]
        if any(same_curve(c, e, oriented=False) for k in near for e in buckets.get(k, ())):
            return False
        buckets.setdefault((h, t), []).append(c)
        out.append(c)
        queue.append(c)
        return True

    for c in start:
        if len(c.word) <= bound and c.word not in seen:
            admit(c)
    while queue:
        c = queue.popleft()
        for t in twists:
            d = apply(t, c)
            if len(d.word) > bound or d.word in seen:
                continue
            admit(d)
    return tuple(out)


def fixes_curve(f: MappingClassWord, c: Curve, action: np.ndarray | None = None) -> bool:
    """Whether ``f(c)`` is isotopic to ``c`` up to orientation."""
    A = homology_action(f) if action is None else action
    h = c.homology.vector
    hd = tuple(int(x) for x in A @ np.array(h, dtype=np.int64))
    if hd != h and hd != tuple(-x for x in h):
        return False
    return same_curve(c, apply(f, c), oriented=False)


def pa_certificate(f: MappingClassWord, bound: int = 8) -> PACertificate:
    if bound < 1:
        raise ValueError("bound must be positive")
    family = curve_family(f.genus, bound)
    A = homology_action(f)
    witnesses = [c for c in family if fixes_curve(f, c, A)]
    x = sympy.Symbol("x")
    poly = sympy.Matrix(A.tolist()).charpoly(x)
    _, factors = sympy.factor_list(poly.as_expr(), x)
    cyclo = [str(fac) for fac, _ in factors if sympy.Poly(fac, x).is_cyclotomic]
    return PACertificate(f, bound, len(family), witnesses, str(poly.as_expr()), cyclo)


# words on genus 2 built from the two filling multicurves {a1, a2, c1} and
# {b1, b2}, positive on the first and negative on the second
PENNER_GENUS2 = (
    "Ta1 Ta2 Tc1 Tb1^-1 Tb2^-1",
    "Ta1 Tb1^-1 Tc1 Tb2^-1 Ta2",
    "Ta1^2 Ta2 Tc1 Tb1^-1 Tb2^-1",
)


__all__ = [
    "MappingClassWord",
    "PACertificate",
    "PENNER_GENUS2",
    "apply",
    "apply_to_word",
    "check_table",
    "curve_family",
    "derive_twist_table",
    "fixes_curve",
    "homology_action",
    "humphries_curve",
    "humphries_names",
    "humphries_word",
    "is_symplectic",
    "pa_certificate",
    "transvection",
    "twist",
    "twist_table",
]
