"""Dividing sets, abstract bypass moves and the annulus reduction system.

A dividing set on the closed surface is a multicurve of pairwise disjoint,
non-isotopic simple curves with multiplicities (parallel copies), together
with a sign on every complementary region, alternating across each copy.
Regions are found by cutting the surface along the distinct curves
(:mod:`convexcalc.chords`); parallel copies add annuli between them.

Annulus configurations ``I_k`` and ``II_n^+-`` and their reduction rules form
a small rewriting system whose terminal states are computed by closure.
"""

from __future__ import annotations

import functools
from collections import deque
from dataclasses import dataclass, field, replace
from typing import Iterable, Sequence

from . import mcg
from .chords import CutSurface, cut_surface
from .curvecomplex import find_mapping
from .intersect import geometric_intersection, self_intersection
from .surface import Curve, NotSimple, same_curve

__all__ = [
    "AnnulusConfig",
    "Arc",
    "AttachArc",
    "BypassResult",
    "DividingSet",
    "InvalidDividingSet",
    "MalformedArc",
    "ReductionGraph",
    "Region",
    "Rule",
    "UnsupportedMove",
    "bypass_move",
    "classify_arc",
    "euler_eval",
    "giroux_tight",
    "is_extremal",
    "isotopic",
    "reachability",
    "reduce_annulus",
    "reduction_rules",
    "twist_along",
]


class InvalidDividingSet(ValueError):
    pass


class MalformedArc(ValueError):
    pass


class UnsupportedMove(MalformedArc):
    """A valid arc whose rewiring leaves the parallel-multicurve vocabulary."""


# -- dividing sets -----------------------------------------------------------------

@dataclass(frozen=True)
class Region:
    kind: str  # "piece", "annulus" or "disk"
    chi: int
    sign: int
    boundary: int

    @property
    def genus(self) -> int:
        return (2 - self.chi - self.boundary) // 2

    @property
    def is_disk(self) -> bool:
        return self.chi == 1

    @property
    def is_annulus(self) -> bool:
        return self.chi == 0 and self.boundary == 2


def _same(x: Curve, y: Curve) -> bool:
    return same_curve(x, y, oriented=False)


@dataclass(frozen=True)
class DividingSet:
    """Weighted multicurve with region signs.

    ``sign`` is the sign of the region on the left of the first copy of the
    first component (or of the whole surface minus the trivial circles when
    there are no components).  Copies of a component are numbered from 1,
    left to right; ``trivial_circles`` contractible circles sit in that same
    reference region.
    """

    genus: int
    components: tuple[tuple[Curve, int], ...]
    sign: int = 1
    trivial_circles: int = 0
    _regions: list = field(default_factory=list, compare=False, hash=False, repr=False)

    def __post_init__(self):
        object.__setattr__(self, "components", tuple((c, int(m)) for c, m in self.components))
        if self.sign not in (1, -1):
            raise InvalidDividingSet("sign must be +1 or -1")
        if not self.components and self.trivial_circles == 0:
            raise InvalidDividingSet("a dividing set needs at least one curve")
        if self.trivial_circles < 0:
            raise InvalidDividingSet("negative number of trivial circles")
        for c, m in self.components:
            if c.genus != self.genus:
                raise InvalidDividingSet(f"{c} lives on a different surface")
            if m < 1:
                raise InvalidDividingSet("multiplicities must be >= 1")
            if not c.is_primitive or self_intersection(c) != 0:
                raise NotSimple(f"{c} is not a simple closed curve")
        curves = self.curves
        for i, x in enumerate(curves):
            for y in curves[i + 1:]:
                if geometric_intersection(x, y) != 0:
                    raise InvalidDividingSet(f"{x} and {y} intersect")
                if _same(x, y):
                    raise InvalidDividingSet(f"{x} and {y} are isotopic; merge them into one multiplicity")
        self._regions.extend(self._build_regions())

    @classmethod
    def parallel(cls, curve: Curve, mult: int = 2, annulus_sign: int = -1) -> "DividingSet":
        """``mult`` parallel copies of ``curve``; the first annulus gets ``annulus_sign``."""
        sign = -annulus_sign if mult >= 2 else annulus_sign
        return cls(curve.genus, ((curve, mult),), sign)

    @property
    def curves(self) -> list[Curve]:
        return [c for c, _ in self.components]

    @property
    def curve_count(self) -> int:
        return sum(m for _, m in self.components) + self.trivial_circles

    @functools.cached_property
    def cut(self) -> CutSurface:
        return cut_surface(self.curves, self.genus)

    def _piece_signs(self) -> list[int]:
        cut = self.cut
        signs = [0] * cut.regions
        if not self.components:
            signs[0] = self.sign
            return signs
        signs[cut.left[0]] = self.sign
        adj: list[list[tuple[int, int]]] = [[] for _ in range(cut.regions)]
        for i, (_, m) in enumerate(self.components):
            flip = -1 if m % 2 else 1
            adj[cut.left[i]].append((cut.right[i], flip))
            adj[cut.right[i]].append((cut.left[i], flip))
        queue = deque([cut.left[0]])
        while queue:
            r = queue.popleft()
            for s, flip in adj[r]:
                want = signs[r] * flip
                if signs[s] == 0:
                    signs[s] = want
                    queue.append(s)
                elif signs[s] != want:
                    raise InvalidDividingSet("region signs cannot alternate across every curve")
        if 0 in signs:
            raise InvalidDividingSet("disconnected region graph")
        return signs

    def _build_regions(self) -> list[Region]:
        cut = self.cut
        signs = self._piece_signs()
        ref = cut.left[0] if self.components else 0
        out = []
        for r in range(cut.regions):
            chi = cut.chi[r]
            b = cut.boundary_count(r)
            if r == ref:
                chi -= self.trivial_circles
                b += self.trivial_circles
            out.append(Region("piece", chi, signs[r], b))
        for i, (_, m) in enumerate(self.components):
            s = signs[cut.left[i]]
            for j in range(1, m):
                out.append(Region("annulus", 0, s * (-1) ** j, 2))
        for _ in range(self.trivial_circles):
            out.append(Region("disk", 1, -signs[ref], 1))
        return out

    @property
    def regions(self) -> list[Region]:
        return list(self._regions)

    def left_sign(self, i: int) -> int:
        """Sign of the region on the left of the first copy of component ``i``."""
        return self._piece_signs()[self.cut.left[i]]

    def annulus_signs(self, i: int) -> list[int]:
        s = self.left_sign(i)
        return [s * (-1) ** j for j in range(1, self.components[i][1])]

    def chi(self, sign: int) -> int:
        return sum(r.chi for r in self._regions if r.sign == sign)

    def to_dict(self) -> dict:
        return {
            "genus": self.genus,
            "components": [{"curve": str(c), "multiplicity": m} for c, m in self.components],
            "trivial_circles": self.trivial_circles,
            "regions": [
                {"kind": r.kind, "chi": r.chi, "sign": r.sign, "boundary": r.boundary, "genus": r.genus}
                for r in self._regions
            ],
            "chi_plus": self.chi(1),
            "chi_minus": self.chi(-1),
            "euler": euler_eval(self),
        }


def euler_eval(d: DividingSet) -> int:
    """``chi(S+) - chi(S-)``."""
    return d.chi(1) - d.chi(-1)


def giroux_tight(d: DividingSet) -> bool:
    """True iff no complementary region is a disk."""
    return not any(r.is_disk for r in d.regions)


def _minus_side_annuli(d: DividingSet, sign: int) -> bool:
    regs = [r for r in d.regions if r.sign == sign]
    return bool(regs) and all(r.is_annulus for r in regs)


def is_extremal(d: DividingSet, genus: int | None = None) -> bool:
    """``|<e, Sigma>| = 2g - 2``.

    For tight dividing sets this is checked against the equivalent condition
    that the region of the opposite sign is a nonempty union of annuli.
    """
    g = genus or d.genus
    e = euler_eval(d)
    by_value = abs(e) == 2 * g - 2
    if giroux_tight(d):
        by_shape = _minus_side_annuli(d, -1) or _minus_side_annuli(d, 1)
        assert by_value == by_shape, "extremal characterisations disagree on a tight dividing set"
    return by_value


def isotopic(d1: DividingSet, d2: DividingSet) -> bool:
    """Same components up to isotopy, same multiplicities and the same sign layout."""
    if d1.genus != d2.genus or d1.trivial_circles != d2.trivial_circles:
        return False
    if len(d1.components) != len(d2.components):
        return False
    used = set()
    for i, (c, m) in enumerate(d1.components):
        for j, (c2, m2) in enumerate(d2.components):
            if j in used or m != m2 or not _same(c, c2):
                continue
            s1 = sorted(d1.annulus_signs(i))
            s2 = sorted(d2.annulus_signs(j))
            if s1 != s2:
                continue
            if m == 1 and d1.left_sign(i) * (1 if same_curve(c, c2) else -1) != d2.left_sign(j):
                continue
            used.add(j)
            break
        else:
            return False
    return euler_eval(d1) == euler_eval(d2)


# -- attaching arcs and bypasses ------------------------------------------------------

Strand = tuple[int, int]  # (component index, copy number from 1)


@dataclass(frozen=True)
class Arc:
    """Combinatorial description of a bypass attaching arc.

    ``crossings`` lists the three dividing strands met, in order.  ``loop`` is
    the nontrivial closed curve the arc runs around (for arcs returning to a
    parallel pair); ``band`` is the third boundary curve of the pair of pants
    spanned by the arc and the pair.  ``cuts_disk`` marks an arc whose segment
    between two crossings of one strand cobounds a disk with that strand.
    """

    crossings: tuple[Strand, Strand, Strand]
    loop: Curve | None = None
    band: Curve | None = None
    cuts_disk: bool = False

    def reversed(self) -> "Arc":
        a, b, c = self.crossings
        return replace(self, crossings=(c, b, a))


@dataclass(frozen=True)
class AttachArc:
    pattern: str  # "A", "B", "C" or "trivial"
    subtype: str | None  # "C1".."C4" for pattern C
    arc: Arc

    @property
    def label(self) -> str:
        return self.subtype or self.pattern


def _check_strands(d: DividingSet, arc: Arc) -> None:
    if len(arc.crossings) != 3:
        raise MalformedArc("an attaching arc crosses the dividing set exactly three times")
    for comp, copy in arc.crossings:
        if not 0 <= comp < len(d.components):
            raise MalformedArc(f"no dividing component {comp}")
        if not 1 <= copy <= d.components[comp][1]:
            raise MalformedArc(f"component {comp} has no copy {copy}")


def _adjacent(x: Strand, y: Strand) -> bool:
    return x[0] == y[0] and abs(x[1] - y[1]) == 1


def _pants_subtype(gamma: Curve, loop: Curve, band: Curve) -> str:
    for c, name in ((loop, "loop"), (band, "band")):
        if not c.is_primitive or self_intersection(c) != 0:
            raise MalformedArc(f"the {name} curve {c} is not simple")
    if _same(gamma, band):
        raise MalformedArc("the band curve is isotopic to the crossed pair")
    for x, y, names in ((gamma, loop, "pair/loop"), (gamma, band, "pair/band"), (loop, band, "loop/band")):
        if geometric_intersection(x, y) != 0:
            raise MalformedArc(f"{names} curves intersect")
    hg, hd, hb = gamma.homology, loop.homology, band.homology
    if not any((s * hg + t * hd).vector == hb.vector for s in (1, -1) for t in (1, -1)):
        raise MalformedArc("the three curves do not bound a pair of pants (homology mismatch)")
    loop_nonsep = not hd.is_zero()
    if _same(loop, gamma):
        return "C1"
    if _same(loop, band):
        return "C2"
    cut = cut_surface([gamma, loop, band])
    sides = [(cut.left[i], cut.right[i]) for i in range(3)]
    pants = [
        r for r in range(cut.regions)
        if cut.chi[r] == -1 and cut.boundary_count(r) == 3 and all(r in s for s in sides)
    ]
    if not pants:
        raise MalformedArc("the curves do not cobound a pair of pants")
    P = pants[0]
    beyond = []
    for left, right in sides:
        if left == P and right == P:
            raise MalformedArc("a boundary curve of the pants has the pants on both sides")
        beyond.append(right if left == P else left)
    b_gamma, b_loop, b_band = beyond
    if loop_nonsep and b_gamma == b_loop:
        return "C1"
    if loop_nonsep and b_band == b_loop:
        return "C2"
    if not loop_nonsep and b_band == b_gamma:
        return "C3"
    if hg.is_zero() and hd.is_zero() and hb.is_zero():
        return "C4"
    raise MalformedArc("pair of pants sits in the surface in no recognised way")


def classify_arc(d: DividingSet, arc: Arc) -> AttachArc:
    """Type A, B, C (with subtype C1-C4) or trivial."""
    _check_strands(d, arc)
    x, y, z = arc.crossings
    if arc.cuts_disk:
        if x == y or y == z:
            return AttachArc("trivial", None, arc)
        raise MalformedArc("a disk-cutting arc must meet one strand twice in a row")
    if len({x, y, z}) == 3:
        return AttachArc("A", None, arc)
    if x == z and _adjacent(x, y):
        return AttachArc("B", None, arc)
    if x == y and _adjacent(y, z):
        arc = arc.reversed()
        x, y, z = arc.crossings
    if y == z and _adjacent(x, y):
        if arc.loop is None or arc.band is None:
            raise MalformedArc("a type C arc needs its loop and band curves")
        gamma = d.components[x[0]][0]
        return AttachArc("C", _pants_subtype(gamma, arc.loop, arc.band), arc)
    raise MalformedArc(f"crossing pattern {arc.crossings} is not an attaching arc")


@dataclass(frozen=True)
class BypassResult:
    dividing: DividingSet
    trivial: bool
    pattern: AttachArc
    inverse: Arc | None  # an arc on the result undoing the move, when expressible


def twist_along(c: Curve, x: Curve, exponent: int = 1) -> Curve:
    """Image of ``x`` under the Dehn twist along ``c`` (conjugated from a1)."""
    phi = find_mapping(c)
    t = phi * mcg.twist("a1", c.genus, exponent) * phi.inverse()
    return mcg.apply(t, x)


def _rebuild(d: DividingSet, comps: list[tuple[Curve, int]], reference: tuple[Curve, int] | None) -> DividingSet:
    """A dividing set on ``comps`` whose region next to ``reference`` keeps its sign."""
    comps = [(c, m) for c, m in comps if m > 0]
    if not comps:
        return DividingSet(d.genus, (), d.sign, d.trivial_circles)
    for s in (1, -1):
        try:
            out = DividingSet(d.genus, tuple(comps), s, d.trivial_circles)
        except InvalidDividingSet:
            continue
        if reference is None:
            return out
        idx, want = reference
        if out.left_sign(idx) == want:
            return out
    raise InvalidDividingSet("no consistent signs after the bypass")


def bypass_move(d: DividingSet, arc: Arc | AttachArc) -> BypassResult:
    """Rewire the dividing set along an attaching arc."""
    kind = arc if isinstance(arc, AttachArc) else classify_arc(d, arc)
    arc = kind.arc
    comps = list(d.components)
    if kind.pattern == "trivial":
        return BypassResult(d, True, kind, arc)
    if kind.pattern == "A":
        x, y, z = arc.crossings
        pair = (x, y) if _adjacent(x, y) else (y, z) if _adjacent(y, z) else None
        if pair is None:
            raise UnsupportedMove("type A arc meets no consecutive parallel pair")
        i = pair[0][0]
        c, m = comps[i]
        comps[i] = (c, m - 2)
        keep = next((j for j, (_, mm) in enumerate(comps) if mm > 0), None)
        ref = None
        if keep is not None:
            ref_idx = sum(1 for j in range(keep) if comps[j][1] > 0)
            ref = (ref_idx, d.left_sign(keep))
        return BypassResult(_rebuild(d, comps, ref), False, kind, None)
    x = arc.crossings[0]
    i = x[0]
    gamma, m = comps[i]
    if kind.pattern == "B":
        beta = arc.loop
        if beta is None:
            raise MalformedArc("a type B arc needs the closed loop it runs along")
        if m != 2:
            raise MalformedArc("a type B arc returns through its pair only when the pair is alone")
        if geometric_intersection(beta, gamma) != 1:
            raise MalformedArc("the loop of a type B arc must meet the pair once")
        for j, (c, _) in enumerate(comps):
            if j != i and geometric_intersection(beta, c) != 0:
                raise MalformedArc("the loop of a type B arc crosses another dividing curve")
        new = twist_along(gamma, beta)
        comps[i] = (new, 2)
        out = _rebuild(d, comps, (0, d.left_sign(0)) if i != 0 else None)
        if i == 0 and out.annulus_signs(0) != d.annulus_signs(0):
            out = DividingSet(d.genus, out.components, -out.sign, out.trivial_circles)
        back = twist_along(new, gamma, -1)
        inverse = Arc(((i, 1), (i, 2), (i, 1)), loop=back)
        return BypassResult(out, False, kind, inverse)
    # type C: the pair is replaced by two copies of the band curve
    band = arc.band
    for j, (c, _) in enumerate(comps):
        if geometric_intersection(band, c) != 0:
            raise UnsupportedMove("the band curve crosses another dividing curve")
        if j != i and _same(band, c):
            raise UnsupportedMove("the band curve is parallel to another dividing component")
    old_annulus = d.annulus_signs(i)[min(arc.crossings[0][1], arc.crossings[1][1]) - 1]
    comps[i] = (gamma, m - 2)
    comps.append((band, 2))
    comps = [(c, mm) for c, mm in comps if mm > 0]
    new_index = len(comps) - 1
    out = None
    for s in (1, -1):
        try:
            cand = DividingSet(d.genus, tuple(comps), s, d.trivial_circles)
        except InvalidDividingSet:
            continue
        if cand.annulus_signs(new_index) == [old_annulus]:
            out = cand
            break
    if out is None:
        raise InvalidDividingSet("no consistent signs after the bypass")
    inverse = Arc(((new_index, 1), (new_index, 2), (new_index, 2)), loop=arc.loop, band=gamma)
    return BypassResult(out, False, kind, inverse)


# -- annulus configurations -------------------------------------------------------------

@dataclass(frozen=True, order=True)
class AnnulusConfig:
    """Dividing pattern on the annulus ``gamma x I``.

    ``I(k)``: two arcs across the annulus with holonomy ``k`` (``k`` negative
    Dehn twists along the core).  ``II(n, sign)``: two boundary-parallel arcs
    cutting off half-disks, the one along the top boundary of sign ``sign``,
    with ``n`` essential closed curves between them.  Each boundary circle
    meets the dividing set in two points.
    """

    kind: str
    k: int = 0
    n: int = 0
    sign: int = 0
    boundary_points: tuple[int, int] = (2, 2)

    def __post_init__(self):
        if self.kind == "I":
            if self.n or self.sign:
                raise ValueError("type I has no n or sign")
        elif self.kind == "II":
            if self.n < 0:
                raise ValueError("type II needs n >= 0")
            if self.sign not in (1, -1):
                raise ValueError("type II needs sign +1 or -1")
            if self.k:
                raise ValueError("type II has no holonomy")
        else:
            raise ValueError(f"unknown annulus type {self.kind!r}")

    @classmethod
    def I(cls, k: int) -> "AnnulusConfig":  # noqa: E743
        return cls("I", k=k)

    @classmethod
    def II(cls, n: int, sign: int) -> "AnnulusConfig":
        return cls("II", n=n, sign=sign)

    @classmethod
    def parse(cls, text: str) -> "AnnulusConfig":
        t = text.replace("_", "").replace("^", "").replace(" ", "")
        if t.startswith("II"):
            body = t[2:]
            if not body or body[-1] not in "+-":
                raise ValueError(f"type II needs a trailing sign: {text!r}")
            return cls.II(int(body[:-1]), 1 if body[-1] == "+" else -1)
        if t.startswith("I"):
            return cls.I(int(t[1:]))
        raise ValueError(f"cannot parse annulus configuration {text!r}")

    def __str__(self) -> str:
        if self.kind == "I":
            return f"I_{self.k}"
        return f"II_{self.n}^{'+' if self.sign > 0 else '-'}"


@dataclass(frozen=True)
class Rule:
    name: str
    origin: str  # the reduction statement it encodes
    step: object = field(compare=False, repr=False)
    switch: bool = False  # a sideways move between terminals
    uncertain: bool = False  # excluded from default closures

    def apply(self, cfg: AnnulusConfig) -> AnnulusConfig | None:
        return self.step(cfg)


def _even_ii(c: AnnulusConfig):
    if c.kind == "II" and c.n >= 2 and c.n % 2 == 0:
        return AnnulusConfig.II(c.n - 2, c.sign)
    return None


def _odd_ii(c: AnnulusConfig):
    if c.kind == "II" and c.n >= 3 and c.n % 2 == 1:
        return AnnulusConfig.II(c.n - 2, c.sign)
    return None


def _ii1(c: AnnulusConfig):
    if c.kind == "II" and c.n == 1:
        # the negative case lands on I_-1; the positive one is its mirror, I_0
        return AnnulusConfig.I(-1 if c.sign < 0 else 0)
    return None


def _i_pos(c: AnnulusConfig):
    if c.kind == "I" and c.k > 0:
        return AnnulusConfig.I(c.k - 1)
    return None


def _i_neg(c: AnnulusConfig):
    if c.kind == "I" and c.k < -1:
        return AnnulusConfig.I(c.k + 1)
    return None


def _switch(c: AnnulusConfig):
    if c.kind == "I" and c.k in (0, -1):
        return AnnulusConfig.I(-1 - c.k)
    return None


def _uncertain_shift(c: AnnulusConfig):
    if c.kind == "I" and c.k > 0:
        return AnnulusConfig.I(c.k - 1)
    return None


_RULES = (
    Rule("II-even", "II_2m^+- reduces to II_0^+-", _even_ii),
    Rule("II-odd", "II_2m+1^+- reduces to II_1^+-", _odd_ii),
    Rule("II1-to-I", "II_1^+- reduces to I_k", _ii1),
    Rule("I-positive", "I_k with k > 0 reduces to I_0", _i_pos),
    Rule("I-negative", "I_k with k < -1 reduces to I_-1", _i_neg),
    Rule("I0-switch", "state transitions switch between I_0 and I_-1", _switch, switch=True),
    Rule(
        "I-shift-same-curve",
        "I_k -> I_k-1 while analysing [gamma0, gamma0]; probably overtwisted",
        _uncertain_shift,
        uncertain=True,
    ),
)


def reduction_rules(include_uncertain: bool = False) -> tuple[Rule, ...]:
    return tuple(r for r in _RULES if include_uncertain or not r.uncertain)


def _moves(cfg: AnnulusConfig, rules: Sequence[Rule]):
    for r in rules:
        out = r.apply(cfg)
        if out is not None:
            yield r, out


def is_terminal(cfg: AnnulusConfig, include_uncertain: bool = False) -> bool:
    return all(r.switch for r, _ in _moves(cfg, reduction_rules(include_uncertain)))


def reduce_annulus(cfg: AnnulusConfig, include_uncertain: bool = False) -> tuple[AnnulusConfig, list[dict]]:
    """Apply reduction rules until a terminal configuration; returns it and the trace."""
    rules = [r for r in reduction_rules(include_uncertain) if not r.switch]
    trace: list[dict] = []
    cur = cfg
    while True:
        step = next(_moves(cur, rules), None)
        if step is None:
            return cur, trace
        rule, nxt = step
        trace.append({"rule": rule.name, "origin": rule.origin, "from": str(cur), "to": str(nxt)})
        cur = nxt


def switch_terminal(cfg: AnnulusConfig) -> AnnulusConfig:
    """The I_0 <-> I_-1 transition."""
    out = _switch(cfg)
    if out is None:
        raise ValueError(f"{cfg} is neither I_0 nor I_-1")
    return out


TERMINALS = frozenset({AnnulusConfig.I(0), AnnulusConfig.I(-1), AnnulusConfig.II(0, 1), AnnulusConfig.II(0, -1)})


def bounded_states(kmax: int | None, nmax: int | None) -> list[AnnulusConfig]:
    """``I_k`` for ``|k| <= kmax`` and ``II_n^+-`` for ``n <= nmax``; terminals when unbounded."""
    if kmax is None or nmax is None:
        return sorted(TERMINALS)
    states = [AnnulusConfig.I(k) for k in range(-kmax, kmax + 1)]
    states += [AnnulusConfig.II(n, s) for n in range(nmax + 1) for s in (1, -1)]
    return sorted(set(states) | TERMINALS)


@dataclass
class ReductionGraph:
    states: list[AnnulusConfig]
    edges: list[tuple[AnnulusConfig, AnnulusConfig, str]]
    include_uncertain: bool

    @functools.cached_property
    def successors(self) -> dict[AnnulusConfig, list[AnnulusConfig]]:
        out: dict[AnnulusConfig, list[AnnulusConfig]] = {s: [] for s in self.states}
        for a, b, _ in self.edges:
            out[a].append(b)
        return out

    def reachable(self, start: AnnulusConfig) -> set[AnnulusConfig]:
        seen = {start}
        queue = deque([start])
        while queue:
            s = queue.popleft()
            for t in self.successors.get(s, []):
                if t not in seen:
                    seen.add(t)
                    queue.append(t)
        return seen

    @property
    def terminals(self) -> set[AnnulusConfig]:
        switch_names = {r.name for r in _RULES if r.switch}
        out = set()
        for s in self.states:
            names = [n for a, _, n in self.edges if a == s]
            if all(n in switch_names for n in names):
                out.add(s)
        return out

    def reached_terminals(self) -> set[AnnulusConfig]:
        """Terminal states reached from some state of the graph."""
        terms = self.terminals
        out = set()
        for s in self.states:
            out |= self.reachable(s) & terms
        return out

    def every_state_terminates(self) -> bool:
        terms = self.terminals
        return all(self.reachable(s) & terms for s in self.states)

    def to_dot(self) -> str:
        lines = ["digraph reduction {", "  rankdir=LR;"]
        terms = self.terminals
        for s in self.states:
            style = ' shape=doublecircle style=bold' if s in terms else ""
            lines.append(f'  "{s}" [label="{s}"{style}];')
        for a, b, name in self.edges:
            lines.append(f'  "{a}" -> "{b}" [label="{name}"];')
        lines.append("}")
        return "\n".join(lines) + "\n"


def reachability(kmax: int | None = 6, nmax: int | None = 8, include_uncertain: bool = False) -> ReductionGraph:
    """Closure of the reduction relation over the bounded state set."""
    states = bounded_states(kmax, nmax)
    allowed = set(states)
    rules = reduction_rules(include_uncertain)
    edges = []
    for s in states:
        for r, t in _moves(s, rules):
            if t in allowed:
                edges.append((s, t, r.name))
    return ReductionGraph(states, edges, include_uncertain)
