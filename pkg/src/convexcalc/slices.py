"""Slices ``[gamma0, gamma1; e]`` of Sigma x I and their gluing calculus.

A slice records its two boundary dividing curves (each boundary carries two
parallel copies) and the relative Euler class, Poincare dual in H_1.  Basic
slices come from a single bypass between curves meeting once.  Tightness of a
composition is decided purely by the consistency rules on Euler classes.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field, replace
from typing import Iterable, Sequence

from . import dividing
from .curvecomplex import connect_framed, find_mapping
from .intersect import geometric_intersection, self_intersection
from .mcg import apply, humphries_curve
from .surface import Curve, HomologyElement, homologous, same_curve

__all__ = [
    "BoundaryMismatch",
    "NotBasic",
    "NotNonseparating",
    "NotOnce",
    "OvertwistedInput",
    "Slice",
    "SliceChain",
    "TAGS",
    "base_case_check",
    "classify_product",
    "compose",
    "freedom_of_choice",
    "glue_chain",
    "gluing_verdict",
    "make_basic",
]

TAGS = ("basic", "i_invariant", "composite", "ot")


class NotOnce(ValueError):
    pass


class NotBasic(ValueError):
    pass


class NotNonseparating(ValueError):
    pass


class BoundaryMismatch(ValueError):
    pass


class OvertwistedInput(ValueError):
    pass


def _check_nonsep(c: Curve, name: str) -> None:
    if not c.is_primitive or self_intersection(c) != 0:
        raise NotNonseparating(f"{name} = {c} is not simple")
    if c.homology.is_zero():
        raise NotNonseparating(f"{name} = {c} is separating")


def _signed_sums(x: HomologyElement, y: HomologyElement) -> list[HomologyElement]:
    return [s * x + t * y for s in (1, -1) for t in (1, -1)]


def _in(e: HomologyElement, options: Iterable[HomologyElement]) -> bool:
    return any(e == o for o in options)


@dataclass(frozen=True)
class Slice:
    genus: int
    gamma0: Curve
    gamma1: Curve
    euler: HomologyElement
    tag: str = "composite"
    verdict: str = "tight"  # "tight", "ot" or "consistent" (not decided by the rules)
    parts: tuple["Slice", ...] = field(default=(), compare=False)

    def __post_init__(self):
        if self.tag not in TAGS:
            raise ValueError(f"unknown slice tag {self.tag!r}")
        h0, h1 = self.gamma0.homology, self.gamma1.homology
        if self.tag == "basic":
            if geometric_intersection(self.gamma0, self.gamma1) != 1:
                raise NotOnce("a basic slice needs boundary curves meeting once")
            if not _in(self.euler, (h1 - h0, h0 - h1)):
                raise ValueError("basic slice euler must be +-([gamma1] - [gamma0])")
        elif self.tag == "i_invariant":
            if not same_curve(self.gamma0, self.gamma1, oriented=False) or not self.euler.is_zero():
                raise ValueError("an I-invariant slice has equal boundaries and zero euler")
        elif self.tag == "composite" and self.verdict != "ot":
            if not _in(self.euler, _signed_sums(h0, h1)):
                raise ValueError("a tight slice has euler +-[gamma0] +- [gamma1]")

    @property
    def sign(self) -> int:
        """For a basic slice, the sign in ``euler = sign * ([gamma1] - [gamma0])``."""
        if self.tag != "basic":
            raise NotBasic("only basic slices carry a sign")
        return 1 if self.euler == self.gamma1.homology - self.gamma0.homology else -1

    @property
    def pairing(self) -> int:
        """``<gamma1, gamma0>``, the algebraic intersection in slice order."""
        return self.gamma1.homology.pairing(self.gamma0.homology)

    def flipped(self) -> "Slice":
        """The same basic slice with the opposite sign."""
        if self.tag != "basic":
            raise NotBasic("only basic slices can be flipped")
        return replace(self, euler=-self.euler)

    def to_dict(self) -> dict:
        return {
            "gamma0": str(self.gamma0),
            "gamma1": str(self.gamma1),
            "euler": str(self.euler),
            "euler_vector": list(self.euler.vector),
            "tag": self.tag,
            "verdict": self.verdict,
        }


def make_basic(gamma0: Curve, gamma1: Curve, sign: int = 1) -> Slice:
    """The basic slice with euler ``sign * ([gamma1] - [gamma0])``."""
    _check_nonsep(gamma0, "gamma0")
    _check_nonsep(gamma1, "gamma1")
    if geometric_intersection(gamma0, gamma1) != 1:
        raise NotOnce(f"i({gamma0}, {gamma1}) != 1")
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    e = sign * (gamma1.homology - gamma0.homology)
    return Slice(gamma0.genus, gamma0, gamma1, e, "basic")


def invariant_slice(gamma: Curve) -> Slice:
    return Slice(gamma.genus, gamma, gamma, HomologyElement.zero(gamma.genus), "i_invariant")


def gluing_verdict(g0: HomologyElement, g1: HomologyElement, g2: HomologyElement,
                   e1: HomologyElement, e2: HomologyElement) -> bool | None:
    """Tightness of ``[g0, g1; e1] U [g1, g2; e2]`` for mutually non-homologous classes.

    Writing ``e1 = s1 g1 + s0 g0`` the union is tight iff ``e2 + s1 g1 = +-g2``
    (the second orientation choice absorbs the sign).  Returns ``None`` when
    ``e1`` is not of that form.
    """
    for s0, s1 in itertools.product((1, -1), repeat=2):
        if e1 == s1 * g1 + s0 * g0:
            return _in(e2 + s1 * g1, (g2, -g2))
    return None


def _mutually_nonhomologous(*hs: HomologyElement) -> bool:
    for x, y in itertools.combinations(hs, 2):
        if x == y or x == -y:
            return False
    return True


def compose(s1: Slice, s2: Slice) -> Slice:
    """Glue ``s1`` below ``s2``; the verdict follows the consistency rules."""
    if s1.verdict == "ot" or s2.verdict == "ot" or "ot" in (s1.tag, s2.tag):
        raise OvertwistedInput("cannot glue an overtwisted slice")
    if not same_curve(s1.gamma1, s2.gamma0, oriented=False):
        raise BoundaryMismatch(f"{s1.gamma1} and {s2.gamma0} are not isotopic")
    g = s1.genus
    if s2.gamma0.homology == -s1.gamma1.homology:
        # read the second slice with both boundaries reversed
        s2 = replace(s2, gamma0=s2.gamma0.inverse(), gamma1=s2.gamma1.inverse())
    a0, a1, c2 = s1.gamma0.homology, s1.gamma1.homology, s2.gamma1.homology
    e = s1.euler + s2.euler
    parts = (s1.parts or (s1,)) + (s2.parts or (s2,))

    def out(verdict: str) -> Slice:
        tag = "ot" if verdict == "ot" else "composite"
        return Slice(g, s1.gamma0, s2.gamma1, e, tag, verdict, parts)

    if s1.tag == "i_invariant":
        return replace(s2, gamma0=s1.gamma0, parts=parts) if s2.tag != "basic" else s2
    if s2.tag == "i_invariant":
        return replace(s1, gamma1=s2.gamma1, parts=parts) if s1.tag != "basic" else s1
    if not _in(e, _signed_sums(a0, c2)):
        return out("ot")
    if s1.tag == "basic" and s2.tag == "basic":
        skip = geometric_intersection(s1.gamma0, s2.gamma1) == 0
        p1 = a1.pairing(a0)
        p2 = c2.pairing(a1)
        if skip and p1 == p2:
            return out("tight" if s1.sign == s2.sign else "ot")
    if _mutually_nonhomologous(a0, a1, c2):
        v = gluing_verdict(a0, a1, c2, s1.euler, s2.euler)
        if v is not None:
            return out("tight" if v else "ot")
    return out("consistent")


# -- chains ------------------------------------------------------------------------------

@dataclass
class SliceChain:
    slices: list[Slice]

    def __post_init__(self):
        for s, t in zip(self.slices, self.slices[1:]):
            if not same_curve(s.gamma1, t.gamma0, oriented=False):
                raise BoundaryMismatch(f"{s.gamma1} and {t.gamma0} are not isotopic")

    def __len__(self) -> int:
        return len(self.slices)

    def __iter__(self):
        return iter(self.slices)

    @property
    def curves(self) -> list[Curve]:
        if not self.slices:
            return []
        return [self.slices[0].gamma0] + [s.gamma1 for s in self.slices]

    @property
    def euler(self) -> HomologyElement:
        out = HomologyElement.zero(self.slices[0].genus)
        for s in self.slices:
            out = out + s.euler
        return out

    def with_flip(self, index: int) -> "SliceChain":
        out = list(self.slices)
        out[index] = out[index].flipped()
        return SliceChain(out)

    def with_signs(self, signs: Sequence[int]) -> "SliceChain":
        out = []
        for s, sg in zip(self.slices, signs):
            out.append(s if s.sign == sg else s.flipped())
        return SliceChain(out)

    def to_dict(self) -> dict:
        return {"slices": [s.to_dict() for s in self.slices], "euler": str(self.euler)}


@dataclass
class ChainVerdict:
    verdict: str  # "tight", "ot" or "consistent"
    euler: HomologyElement
    failures: list[int]  # indices i where slices i and i+1 glue overtwisted
    composite: Slice | None

    def to_dict(self) -> dict:
        return {
            "verdict": self.verdict,
            "euler": str(self.euler),
            "euler_vector": list(self.euler.vector),
            "overtwisted_joins": self.failures,
        }


def glue_chain(chain: SliceChain) -> ChainVerdict:
    """Tightness of a layered chain.

    Every consecutive pair is checked by :func:`compose`; a basic chain whose
    curves two apart are disjoint is tight exactly when all signs agree, in
    which case the Euler class telescopes.
    """
    slices = chain.slices
    if not slices:
        raise ValueError("empty chain")
    failures = []
    undecided = False
    for i, (s, t) in enumerate(zip(slices, slices[1:])):
        v = compose(s, t).verdict
        if v == "ot":
            failures.append(i)
        elif v == "consistent":
            undecided = True
    e = chain.euler
    if failures:
        return ChainVerdict("ot", e, failures, None)
    first, last = slices[0].gamma0.homology, slices[-1].gamma1.homology
    if len(slices) > 1 and not _in(e, _signed_sums(first, last)):
        return ChainVerdict("ot", e, [], None)
    verdict = "consistent" if undecided else "tight"
    comp = Slice(slices[0].genus, slices[0].gamma0, slices[-1].gamma1, e,
                 "basic" if len(slices) == 1 and slices[0].tag == "basic" else "composite",
                 verdict, tuple(slices))
    return ChainVerdict(verdict, e, [], comp)


def _oriented_like(c: Curve, prev: Curve, pairing: int) -> Curve:
    """``c`` or its reverse, chosen so that ``<c, prev> = pairing``."""
    return c if c.homology.pairing(prev.homology) == pairing else c.inverse()


def basic_chain(curves: Sequence[Curve], sign: int = 1, pairing: int | None = None) -> SliceChain:
    """Basic slices along a once-sequence, oriented with a constant pairing."""
    cs = list(curves)
    if pairing is None:
        pairing = cs[1].homology.pairing(cs[0].homology)
    out = [cs[0]]
    for c in cs[1:]:
        out.append(_oriented_like(c, out[-1], pairing))
    return SliceChain([make_basic(x, y, sign) for x, y in zip(out, out[1:])])


@dataclass
class Factorization:
    chain: SliceChain
    nested: list[Slice]  # the nested basic slices, outermost first
    target_index: int

    def to_dict(self) -> dict:
        return {
            "curves": [str(c) for c in self.chain.curves],
            "target_index": self.target_index,
            "chain": self.chain.to_dict(),
            "nested": [s.to_dict() for s in self.nested],
        }


def freedom_of_choice(s: Slice, gamma: Curve) -> Factorization:
    """Basic slices inside ``s`` with a layer whose dividing set is ``2 gamma``.

    The curves ``gamma0, gamma1, alpha_2, ..., gamma`` form a fact0 sequence
    from the frame ``(gamma0, gamma1)``; each step replaces one boundary of
    the current basic slice by the next curve, and ``gamma`` appears as the
    last replaced boundary.
    """
    if s.tag != "basic":
        raise NotBasic("freedom of choice starts from a basic slice")
    _check_nonsep(gamma, "gamma")
    seq = connect_framed(s.gamma0, s.gamma1, gamma)
    chain = basic_chain(seq.curves, s.sign, s.pairing)
    nested = []
    cs = chain.curves
    for i in range(len(cs) - 1):
        lo, hi = (cs[i], cs[i + 1]) if i % 2 == 0 else (cs[i + 1], cs[i])
        pairing = s.pairing if i % 2 == 0 else -s.pairing
        hi = _oriented_like(hi, lo, pairing)
        nested.append(make_basic(lo, hi, s.sign))
    return Factorization(chain, nested, len(cs) - 1)


# -- classification ----------------------------------------------------------------------

def _dual(c: Curve) -> Curve:
    return apply(find_mapping(c), humphries_curve("b1", c.genus))


def classify_product(gamma0: Curve, gamma1: Curve) -> dict:
    """Tight structures on Sigma x I with boundary dividing sets 2 gamma0 and 2 gamma1."""
    _check_nonsep(gamma0, "gamma0")
    _check_nonsep(gamma1, "gamma1")
    h0, h1 = gamma0.homology, gamma1.homology
    if same_curve(gamma0, gamma1, oriented=False):
        g1 = gamma1 if h1 == h0 else gamma1.inverse()
        delta = _oriented_like(_dual(gamma0), gamma0, 1)
        hd = delta.homology
        zero = HomologyElement.zero(gamma0.genus)
        witness = lambda e1: {
            "through": str(delta),
            "first": str(e1),
            "second": str(-e1),
        }
        classes = [
            {"name": "i_invariant", "euler": zero, "label": "i_invariant", "witness": None},
            {"name": "plus", "euler": zero, "label": "plus", "witness": witness(hd + h0)},
            {"name": "minus", "euler": zero, "label": "minus", "witness": witness(-(hd + h0))},
            {"name": "extremal+", "euler": 2 * h0, "label": "extremal", "witness": None},
            {"name": "extremal-", "euler": -2 * h0, "label": "extremal", "witness": None},
        ]
        return _report(gamma0, g1, classes, distinguishes=False, same=True)
    once = geometric_intersection(gamma0, gamma1) == 1
    distinguishes = not homologous(gamma0, gamma1)
    if once:
        base = base_case_check(gamma0, gamma1)
        classes = [
            {"name": b["terminal"], "euler": b["euler_class"], "label": b["terminal"], "witness": None}
            for b in base["classes"]
        ]
    else:
        classes = []
        for name, e in (("difference+", h1 - h0), ("difference-", h0 - h1),
                        ("sum-", -(h1 + h0)), ("sum+", h1 + h0)):
            classes.append({"name": name, "euler": e, "label": name, "witness": None})
    if not distinguishes:
        for c in classes:
            if c["name"].startswith(("difference", "I_")):
                c["label"] = "factorization" + ("+" if c["euler"] == h1 - h0 else "-")
                c["witness"] = {"basic_sign": 1 if c["euler"] == h1 - h0 else -1}
    return _report(gamma0, gamma1, classes, distinguishes=distinguishes, same=False)


def _report(gamma0, gamma1, classes, distinguishes: bool, same: bool) -> dict:
    for c in classes:
        c["universally_tight"] = True
    return {
        "gamma0": str(gamma0),
        "gamma1": str(gamma1),
        "isotopic": same,
        "count": len(classes),
        "euler_distinguishes": distinguishes,
        "classes": classes,
    }


def base_case_check(gamma0: Curve, gamma1: Curve) -> dict:
    """The four structures for boundary curves meeting once, read off the annulus terminals."""
    _check_nonsep(gamma0, "gamma0")
    _check_nonsep(gamma1, "gamma1")
    if geometric_intersection(gamma0, gamma1) != 1:
        raise NotOnce(f"i({gamma0}, {gamma1}) != 1")
    h0, h1 = gamma0.homology, gamma1.homology
    graph = dividing.reachability(6, 8)
    terminals = sorted(graph.reached_terminals())
    classes = []
    for t in terminals:
        if t.kind == "II":
            classes.append({"terminal": str(t), "euler_class": -t.sign * (h1 + h0)})
    # I_0 and I_-1 are joined by state transitions, so they give one family:
    # the two basic slices
    i_type = {t for t in terminals if t.kind == "I"}
    i0 = dividing.AnnulusConfig.I(0)
    if i0 in i_type and i_type <= graph.reachable(i0):
        for sign in (1, -1):
            classes.append({"terminal": f"I_0{'+' if sign > 0 else '-'}", "euler_class": sign * (h1 - h0)})
    return {
        "gamma0": str(gamma0),
        "gamma1": str(gamma1),
        "terminals": [str(t) for t in terminals],
        "classes": classes,
        "count": len(classes),
    }
