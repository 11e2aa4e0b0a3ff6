"""Paths in the curve complex under the various adjacency conditions.

Every construction reduces to the standard pair ``a1, b1``.  A solver finds a
twist word ``psi`` with ``psi(a1) = alpha``; writing ``psi = t_1 ... t_n`` the
curves ``(t_1 ... t_k)(a1)`` change only at factors ``T_b1^{+-1}`` and each
change is to a curve meeting the previous one once.  The other conditions are
met by transporting small fixed configurations along the same prefixes:

* disjoint, non-homologous interleavers are images of ``a2``;
* for the skip-disjoint condition, whole frames ``(a1, b1)`` are carried along
  by short sequences ("gadgets") taking ``(a1, b1)`` to ``(T a1, T b1)`` for
  the three twists that move the frame.

Sequences are always re-verified with the intersection engine.
"""

from __future__ import annotations

import functools
import heapq
from collections import deque
from dataclasses import dataclass, field
from typing import Iterable, Sequence

from . import mcg
from .intersect import geometric_intersection, self_intersection
from .mcg import MappingClassWord, humphries_curve, humphries_names
from .surface import (
    Curve,
    NotSimple,
    canonical_word,
    homologous,
    normalize,
    parse_word,
    same_curve,
)
from .words import Word, format_word, inverse

__all__ = [
    "CurveSequence",
    "NotNonseparating",
    "PreconditionViolated",
    "SearchExhausted",
    "SurgeryStuck",
    "connect_disjoint",
    "connect_fact0",
    "connect_fact1",
    "connect_framed",
    "connect_once",
    "connect_rel",
    "find_mapping",
    "verify_sequence",
]


class NotNonseparating(ValueError):
    pass


class PreconditionViolated(ValueError):
    def __init__(self, clause: str):
        super().__init__(clause)
        self.clause = clause


class SearchExhausted(RuntimeError):
    """The twist search did not reach a standard curve within its budget."""


class SurgeryStuck(RuntimeError):
    """The skip-disjoint repair found no applicable step (never expected)."""


# -- verification ----------------------------------------------------------------

PROFILES = ("disjoint", "once", "fact1", "rel", "fact0")


@dataclass
class Check:
    condition: str
    ok: bool
    detail: str = ""


@dataclass
class CurveSequence:
    curves: list[Curve]
    profile: str
    anchor: Curve | None = None
    repair_trace: list[tuple[int, ...]] = field(default_factory=list)

    def __post_init__(self):
        if self.profile not in PROFILES:
            raise ValueError(f"unknown profile {self.profile!r}")

    def __len__(self) -> int:
        return len(self.curves)

    def __iter__(self):
        return iter(self.curves)

    @property
    def parallel_copies(self) -> list[int]:
        """Indices whose term repeats the term two places earlier (a pushed-off copy)."""
        out = []
        for i in range(2, len(self.curves)):
            if same_curve(self.curves[i], self.curves[i - 2], oriented=False):
                out.append(i)
        return out

    def verify(self) -> list[Check]:
        return verify_sequence(self)

    @property
    def verified(self) -> bool:
        return all(c.ok for c in self.verify())

    def to_dict(self) -> dict:
        checks = self.verify()
        return {
            "profile": self.profile,
            "curves": [str(c) for c in self.curves],
            "anchor": str(self.anchor) if self.anchor is not None else None,
            "parallel_copies": self.parallel_copies,
            "conditions": {c.condition: c.ok for c in checks},
            "failures": [c.detail for c in checks if not c.ok],
            "verified": all(c.ok for c in checks),
            "repair_iterations": len(self.repair_trace),
        }


def _is_simple(c: Curve) -> bool:
    return c.is_primitive and self_intersection(c) == 0


def verify_sequence(seq: CurveSequence) -> list[Check]:
    cs = seq.curves
    checks: list[Check] = []

    def add(name, bad):
        checks.append(Check(name, not bad, "; ".join(bad)))

    add("simple", [f"{c} is not simple" for c in cs if not _is_simple(c)])
    need_nonsep = seq.profile != "disjoint"
    if need_nonsep:
        add("nonseparating", [f"{c} is separating" for c in cs if c.homology.is_zero()])
    else:
        add("nontrivial", [])
    pairs = list(zip(cs, cs[1:]))
    if seq.profile in ("disjoint", "fact1"):
        add("consecutive disjoint",
            [f"i({x},{y}) = {geometric_intersection(x, y)}" for x, y in pairs
             if geometric_intersection(x, y) != 0])
    if seq.profile == "fact1":
        add("consecutive non-homologous",
            [f"{x} ~ {y} in homology" for x, y in pairs if homologous(x, y)])
    if seq.profile in ("once", "rel", "fact0"):
        add("consecutive meet once",
            [f"i({x},{y}) = {geometric_intersection(x, y)}" for x, y in pairs
             if geometric_intersection(x, y) != 1])
    if seq.profile == "fact0":
        add("two apart disjoint",
            [f"i({x},{y}) = {geometric_intersection(x, y)}" for x, y in zip(cs, cs[2:])
             if geometric_intersection(x, y) != 0])
    if seq.profile == "rel":
        a = seq.anchor
        add("disjoint from anchor",
            [f"i({a},{c}) = {geometric_intersection(a, c)}" for c in cs
             if geometric_intersection(a, c) != 0])
    return checks


def _require(seq: CurveSequence) -> CurveSequence:
    failures = [c for c in seq.verify() if not c.ok]
    if failures:
        raise SurgeryStuck(f"{seq.profile} construction failed verification: {failures[0].detail}")
    return seq


# -- the twist solver -------------------------------------------------------------

_TABLE_LENGTH = 5
_SEARCH_BUDGET = 40000


def _key(w: Word, genus: int) -> Word:
    return min(w, canonical_word(inverse(w), genus))


@dataclass
class _Moves:
    """A set of twist moves, each given as a mapping class word."""

    genus: int
    words: tuple[MappingClassWord, ...]


@functools.lru_cache(maxsize=None)
def _global_moves(genus: int) -> _Moves:
    return _Moves(genus, tuple(mcg.twist(n, genus, e) for n in humphries_names(genus) for e in (1, -1)))


@functools.lru_cache(maxsize=None)
def _rel_moves(genus: int) -> _Moves:
    """Twists along curves disjoint from a1 that act like a Humphries set on the rest."""
    names = ["a2", "c1"] + [f"b{i}" for i in range(2, genus + 1)] + [f"c{i}" for i in range(2, genus)]
    words = [mcg.twist(n, genus, e) for n in names for e in (1, -1)]
    if genus >= 3:
        # the twist along a3, as a conjugate of the twist along a2
        phi = find_mapping(Curve.parse("a3", genus), start="a2")
        for e in (1, -1):
            words.append(phi * mcg.twist("a2", genus, e) * phi.inverse())
    return _Moves(genus, tuple(words))


Moves = list[MappingClassWord]


def _product(genus: int, moves: Sequence[MappingClassWord]) -> MappingClassWord:
    out = MappingClassWord.identity(genus)
    for t in moves:
        out = out * t
    return out


def _invert(moves: Sequence[MappingClassWord]) -> Moves:
    return [t.inverse() for t in reversed(moves)]


@functools.lru_cache(maxsize=None)
def _fix_a1_moves(genus: int) -> _Moves:
    """Moves fixing a1: the relative ones plus the twists along a1 itself."""
    extra = tuple(mcg.twist("a1", genus, e) for e in (1, -1))
    return _Moves(genus, _rel_moves(genus).words + extra)


SOLVER_KINDS = ("global", "rel", "fix_a1")


def _moves(genus: int, kind: str) -> _Moves:
    if kind == "global":
        return _global_moves(genus)
    if kind == "rel":
        return _rel_moves(genus)
    if kind == "fix_a1":
        return _fix_a1_moves(genus)
    raise ValueError(f"unknown solver kind {kind!r}")


@functools.lru_cache(maxsize=None)
def _table(genus: int, start: Word, kind: str) -> dict[Word, tuple[int, ...]]:
    """Curves of length <= _TABLE_LENGTH reachable from ``start``, with the moves reaching them."""
    words = _moves(genus, kind).words
    c0 = normalize(start, genus)
    table: dict[Word, tuple[int, ...]] = {_key(c0.word, genus): ()}
    frontier = [(c0, ())]
    while frontier:
        nxt = []
        for c, path in frontier:
            for i, t in enumerate(words):
                d = mcg.apply(t, c)
                if len(d.word) > _TABLE_LENGTH:
                    continue
                k = _key(d.word, genus)
                if k in table:
                    continue
                table[k] = (i,) + path
                nxt.append((d, (i,) + path))
        frontier = nxt
    return table


def solve(c: Curve, start: str | Word = "a1", kind: str = "global") -> Moves:
    """Moves ``t_1, ..., t_n`` with ``t_1 ... t_n (start)`` isotopic to ``c`` up to orientation."""
    g = c.genus
    start_word = parse_word(start) if isinstance(start, str) else tuple(start)
    table = _table(g, start_word, kind)
    words = _moves(g, kind).words
    heap = [(len(c.word), 0, 0, c.word, ())]
    seen = {_key(c.word, g)}
    expanded = 0
    while heap:
        _, depth, _, w, u = heapq.heappop(heap)
        k = _key(w, g)
        if k in table:
            # u(c) = table[k](start), so c = u^-1 table[k] (start)
            moves = _invert([words[i] for i in u]) + [words[i] for i in table[k]]
            img = mcg.apply(_product(g, moves), normalize(start_word, g))
            if not same_curve(img, c, oriented=False):
                raise SearchExhausted("solver produced an inconsistent mapping")
            return moves
        expanded += 1
        if expanded > _SEARCH_BUDGET:
            break
        cur = Curve(g, w)
        for i, t in enumerate(words):
            d = mcg.apply(t, cur)
            kd = _key(d.word, g)
            if kd in seen:
                continue
            seen.add(kd)
            heapq.heappush(heap, (len(d.word), depth + 1, len(seen), d.word, (i,) + u))
    raise SearchExhausted(f"no twist word found taking {format_word(start_word)} to {c}")


def find_mapping(c: Curve, start: str | Word = "a1", kind: str = "global") -> MappingClassWord:
    """A twist word ``psi`` with ``psi(start)`` isotopic to ``c`` up to orientation."""
    return _product(c.genus, solve(c, start, kind))


def _expand(f: MappingClassWord) -> Moves:
    """Factors of ``f`` as single twists with exponent +-1, leftmost first."""
    out: Moves = []
    for name, e in f.factors:
        out += [MappingClassWord(f.genus, ((name, 1 if e > 0 else -1),))] * abs(e)
    return out


# -- preconditions ------------------------------------------------------------------

def _nonsep(c: Curve, name: str) -> None:
    if not c.is_primitive:
        raise NotNonseparating(f"{name} = {c} is a proper power")
    if self_intersection(c) != 0:
        raise NotNonseparating(f"{name} = {c} is not simple")
    if c.homology.is_zero():
        raise NotNonseparating(f"{name} = {c} is separating")


def _simple(c: Curve, name: str) -> None:
    if not c.is_primitive or self_intersection(c) != 0:
        raise NotSimple(f"{name} = {c} is not a simple closed curve")


def _same(x: Curve, y: Curve) -> bool:
    return same_curve(x, y, oriented=False)


def _dedupe(curves: Iterable[Curve]) -> list[Curve]:
    out: list[Curve] = []
    for c in curves:
        if out and _same(out[-1], c):
            continue
        out.append(c)
    return out


# -- once -----------------------------------------------------------------------------

@dataclass
class _Route:
    """The twist route from ``alpha`` to ``alpha'`` through the standard frame."""

    genus: int
    psi: MappingClassWord  # psi(a1) = alpha
    steps: list[MappingClassWord]  # t_1, ..., t_n with psi t_1...t_n (a1) = alpha'

    def prefix(self, k: int) -> MappingClassWord:
        P = self.psi
        for t in self.steps[:k]:
            P = P * t
        return P

    @functools.cached_property
    def moves(self) -> list[int]:
        """Indices k (1-based) where t_k moves a1, i.e. is a twist along b1."""
        return [k + 1 for k, t in enumerate(self.steps) if t.factors[0][0] == "b1"]


def _route(alpha: Curve, alpha2: Curve) -> _Route:
    m1 = solve(alpha)
    m2 = solve(alpha2)
    # cancel a common prefix of the two move lists
    i = 0
    while i < min(len(m1), len(m2)) and m1[i] == m2[i]:
        i += 1
    psi = _product(alpha.genus, m1)
    return _Route(alpha.genus, psi, _expand(_product(alpha.genus, _invert(m1[i:]) + m2[i:])))


def _once_terms(route: _Route) -> tuple[list[Curve], list[int]]:
    a1 = humphries_curve("a1", route.genus)
    terms = [mcg.apply(route.psi, a1)]
    where = [0]
    for k in route.moves:
        terms.append(mcg.apply(route.prefix(k), a1))
        where.append(k)
    return terms, where


def _with_ends(curves: list[Curve], alpha: Curve, alpha2: Curve) -> list[Curve]:
    out = list(curves)
    out[0] = alpha
    out[-1] = alpha2
    return out


def connect_once(alpha: Curve, alpha2: Curve) -> CurveSequence:
    """Nonseparating curves from ``alpha`` to ``alpha2``, consecutive ones meeting once."""
    _nonsep(alpha, "alpha")
    _nonsep(alpha2, "alpha'")
    g = alpha.genus
    if _same(alpha, alpha2):
        psi = find_mapping(alpha)
        dual = mcg.apply(psi, humphries_curve("b1", g))
        return _require(CurveSequence([alpha, dual, alpha2], "once"))
    if geometric_intersection(alpha, alpha2) == 1:
        return _require(CurveSequence([alpha, alpha2], "once"))
    terms, _ = _once_terms(_route(alpha, alpha2))
    return _require(CurveSequence(_dedupe(_with_ends(terms, alpha, alpha2)), "once"))


# -- fact1 ------------------------------------------------------------------------------

def connect_fact1(alpha: Curve, alpha2: Curve) -> CurveSequence:
    """Consecutive terms disjoint and not homologous, all nonseparating."""
    _nonsep(alpha, "alpha")
    _nonsep(alpha2, "alpha'")
    g = alpha.genus
    a2 = humphries_curve("a2", g)
    if _same(alpha, alpha2):
        psi = find_mapping(alpha)
        return _require(CurveSequence([alpha, mcg.apply(psi, a2), alpha2], "fact1"))
    if geometric_intersection(alpha, alpha2) == 0 and not homologous(alpha, alpha2):
        return _require(CurveSequence([alpha, alpha2], "fact1"))
    route = _route(alpha, alpha2)
    terms, where = _once_terms(route)
    terms = _with_ends(terms, alpha, alpha2)
    out = [terms[0]]
    for j in range(1, len(terms)):
        # the pair (terms[j-1], terms[j]) is the image of (a1, T_b1^{+-1} a1)
        # under the prefix before the move; a2 avoids both
        beta = mcg.apply(route.prefix(where[j] - 1), a2)
        out += [beta, terms[j]]
    return _require(CurveSequence(_dedupe(out), "fact1"))


# -- disjoint -----------------------------------------------------------------------------

@functools.lru_cache(maxsize=None)
def _separating_standards(genus: int) -> tuple[Word, ...]:
    out = []
    for h in range(1, genus // 2 + 1):
        w: list[int] = []
        for i in range(1, h + 1):
            w += [2 * i - 1, 2 * i, -(2 * i - 1), -(2 * i)]
        out.append(tuple(w))
    return tuple(out)


def _nonseparating_neighbour(c: Curve) -> Curve:
    """A nonseparating curve disjoint from the separating curve ``c``."""
    g = c.genus
    for s in _separating_standards(g):
        try:
            psi = find_mapping(c, start=s)
        except SearchExhausted:
            continue
        return mcg.apply(psi, humphries_curve("a1", g))
    raise SearchExhausted(f"could not place the separating curve {c} in standard position")


def connect_disjoint(alpha: Curve, alpha2: Curve) -> CurveSequence:
    """Essential simple curves from ``alpha`` to ``alpha2``, consecutive ones disjoint."""
    _simple(alpha, "alpha")
    _simple(alpha2, "alpha'")
    if _same(alpha, alpha2):
        return CurveSequence([alpha], "disjoint")
    if geometric_intersection(alpha, alpha2) == 0:
        return _require(CurveSequence([alpha, alpha2], "disjoint"))
    start = alpha if not alpha.homology.is_zero() else _nonseparating_neighbour(alpha)
    end = alpha2 if not alpha2.homology.is_zero() else _nonseparating_neighbour(alpha2)
    middle = connect_fact1(start, end).curves if not _same(start, end) else [start]
    curves = ([alpha] if start is not alpha else []) + middle + ([alpha2] if end is not alpha2 else [])
    return _require(CurveSequence(_dedupe(curves), "disjoint"))


# -- rel ---------------------------------------------------------------------------------

def connect_rel(alpha: Curve, beta: Curve, beta2: Curve) -> CurveSequence:
    """Curves from ``beta`` to ``beta2`` avoiding ``alpha``, consecutive ones meeting once."""
    for c, name in ((alpha, "alpha"), (beta, "beta"), (beta2, "beta'")):
        try:
            _nonsep(c, name)
        except NotNonseparating as exc:
            raise PreconditionViolated(str(exc)) from None
    for c, name in ((beta, "beta"), (beta2, "beta'")):
        if geometric_intersection(alpha, c) != 0:
            raise PreconditionViolated(f"i(alpha, {name}) != 0")
        if homologous(alpha, c):
            raise PreconditionViolated(f"{name} is homologous to alpha")
    g = alpha.genus
    if _same(beta, beta2):
        return _require(CurveSequence([beta], "rel", anchor=alpha))
    if geometric_intersection(beta, beta2) == 1:
        return _require(CurveSequence([beta, beta2], "rel", anchor=alpha))
    psi = find_mapping(alpha)
    psi_inv = psi.inverse()
    b0 = mcg.apply(psi_inv, beta)
    b1 = mcg.apply(psi_inv, beta2)
    r1 = solve(b0, start="a2", kind="rel")
    r2 = solve(b1, start="a2", kind="rel")
    # every move fixes a1; only the b2 twists move a2, each to a curve meeting it once
    steps = _invert(r1) + r2
    a2 = humphries_curve("a2", g)
    P = psi * _product(g, r1)
    terms = [mcg.apply(P, a2)]
    for t in steps:
        P = P * t
        img = mcg.apply(P, a2)
        if not _same(img, terms[-1]):
            terms.append(img)
    terms = _with_ends(terms, beta, beta2) if len(terms) > 1 else [beta]
    return _require(CurveSequence(_dedupe(terms), "rel", anchor=alpha))


# -- fact0 ---------------------------------------------------------------------------------

_FRAME_MOVERS = ("a1", "b1", "c1")


@functools.lru_cache(maxsize=None)
def _gadgets(genus: int) -> dict[tuple[str, int], tuple[Curve, ...]]:
    """For each twist T moving the frame, a skip-disjoint path (a1, b1, ..., T a1, T b1)."""
    names = ["a1", "a2", "b1", "b2", "c1"]
    moves = [mcg.twist(n, genus, e) for n in names for e in (1, -1)]
    pool: list[Curve] = [humphries_curve(n, genus) for n in names]
    for c in list(pool):
        for t in moves:
            d = mcg.apply(t, c)
            if len(d.word) <= 8 and not any(_same(d, p) for p in pool):
                pool.append(d)
    n = len(pool)
    M = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(i + 1, n):
            M[i][j] = M[j][i] = geometric_intersection(pool[i], pool[j])
    nbr = [[j for j in range(n) if M[i][j] == 1] for i in range(n)]

    def index(c: Curve) -> int:
        for i, p in enumerate(pool):
            if _same(p, c):
                return i
        raise SurgeryStuck(f"gadget target {c} missing from the curve pool")

    start = (0, 2)  # (a1, b1)
    out = {}
    for name in _FRAME_MOVERS:
        for e in (1, -1):
            t = mcg.twist(name, genus, e)
            goal = (index(mcg.apply(t, pool[0])), index(mcg.apply(t, pool[2])))
            prev = {start: None}
            queue = deque([start])
            while queue:
                s = queue.popleft()
                if s == goal:
                    break
                u, v = s
                for w in nbr[v]:
                    if M[u][w] == 0 and (v, w) not in prev:
                        prev[(v, w)] = s
                        queue.append((v, w))
            if goal not in prev:
                raise SurgeryStuck(f"no frame gadget for T_{name}^{e}")
            states = []
            s = goal
            while s is not None:
                states.append(s)
                s = prev[s]
            states.reverse()
            path = [states[0][0]] + [s[1] for s in states]
            out[(name, e)] = tuple(pool[i] for i in path)
    return out


def _frame_path(route: _Route) -> tuple[list[Curve], list[int]]:
    """Skip-disjoint path carrying the frame ``psi(a1, b1)`` along the route.

    Also returns, for each once-term, its position in the path.
    """
    g = route.genus
    gad = _gadgets(g)
    a1, b1 = humphries_curve("a1", g), humphries_curve("b1", g)
    P = route.psi
    path = [mcg.apply(P, a1), mcg.apply(P, b1)]
    positions = [0]
    for t in route.steps:
        name, e = t.factors[0]
        if name in _FRAME_MOVERS:
            for c in gad[(name, e)][2:]:
                path.append(mcg.apply(P, c))
            if name == "b1":
                positions.append(len(path) - 2)
        P = P * t
    return path, positions


def _window_values(curves: Sequence[Curve]) -> list[int]:
    return [geometric_intersection(x, y) for x, y in zip(curves, curves[2:])]


def connect_fact0(alpha: Curve, alpha2: Curve) -> CurveSequence:
    """Consecutive terms meet once and terms two apart are disjoint."""
    _nonsep(alpha, "alpha")
    _nonsep(alpha2, "alpha'")
    g = alpha.genus
    if _same(alpha, alpha2):
        psi = find_mapping(alpha)
        dual = mcg.apply(psi, humphries_curve("b1", g))
        return _require(CurveSequence([alpha, dual, alpha2], "fact0"))
    if geometric_intersection(alpha, alpha2) == 1:
        return _require(CurveSequence([alpha, alpha2], "fact0"))
    route = _route(alpha, alpha2)
    once, _ = _once_terms(route)
    once = _with_ends(once, alpha, alpha2)
    m = len(once) - 1
    frame = None
    expanded = 0  # once-terms 0..expanded are taken from the frame path
    trace: list[tuple[int, ...]] = []

    def current():
        if expanded == 0:
            return list(once), 0
        path, pos = frame
        prefix = path[: pos[expanded] + 1]
        prefix[0] = alpha
        return prefix + once[expanded + 1:], pos[expanded]

    def measure(seq, offset):
        # window values indexed by the once-term at their centre; windows
        # inside the expanded prefix count as the repaired position 0
        vals = [0] * (m + 1)
        for j in range(max(expanded, 1), m):
            centre = offset + (j - expanded)
            vals[j] = geometric_intersection(seq[centre - 1], seq[centre + 1])
        return tuple(vals)

    seq, offset = current()
    mu = measure(seq, offset)
    trace.append(mu)
    while any(mu):
        bad = next(j for j, v in enumerate(mu) if v)
        if frame is None:
            frame = _frame_path(route)
        new_expanded = min(bad + 1, m)
        if new_expanded <= expanded:
            raise SurgeryStuck("repair made no progress")
        expanded = new_expanded
        seq, offset = current()
        new_mu = measure(seq, offset)
        if not new_mu < mu:
            raise SurgeryStuck("repair measure did not decrease")
        mu = new_mu
        trace.append(mu)
    if expanded == m:
        seq[-1] = alpha2
    out = CurveSequence(seq, "fact0", repair_trace=trace)
    return _require(out)


def connect_framed(alpha: Curve, beta: Curve, target: Curve) -> CurveSequence:
    """A fact0 sequence ``alpha, beta, ..., target`` opening with a given once-pair.

    The frame ``(alpha, beta)`` is written as ``psi(a1, b1)`` and carried
    along a twist route to a frame whose first curve is ``target``.
    """
    _nonsep(alpha, "alpha")
    _nonsep(beta, "beta")
    _nonsep(target, "target")
    if geometric_intersection(alpha, beta) != 1:
        raise PreconditionViolated("i(alpha, beta) != 1")
    g = alpha.genus
    if _same(target, beta):
        return _require(CurveSequence([alpha, beta], "fact0"))
    if _same(target, alpha):
        return _require(CurveSequence([alpha, beta, target], "fact0"))
    first = solve(alpha)
    psi1 = _product(g, first)
    local = solve(mcg.apply(psi1.inverse(), beta), start="b1", kind="fix_a1")
    m1 = first + local
    m2 = solve(target)
    i = 0
    while i < min(len(m1), len(m2)) and m1[i] == m2[i]:
        i += 1
    psi = _product(g, m1)
    route = _Route(g, psi, _expand(_product(g, _invert(m1[i:]) + m2[i:])))
    path, _ = _frame_path(route)
    if not _same(path[-2], target):
        raise SurgeryStuck("frame route did not reach the target")
    curves = path[:-1]
    curves[0], curves[1], curves[-1] = alpha, beta, target
    return _require(CurveSequence(_dedupe(curves), "fact0"))
