"""Mapping tori of surface diffeomorphisms and their extremal Euler classes.

``M = Sigma x [0, 1] / (x, 0) ~ (f(x), 1)``.  The uniqueness bookkeeping cuts
M along a fiber whose dividing set is two parallel copies of a nonseparating
curve and then evaluates the four candidate relative Euler classes of the
resulting product slice by stacking copies glued via ``f``.
"""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from . import mcg
from .dividing import DividingSet, euler_eval, is_extremal
from .mcg import MappingClassWord, PACertificate
from .slices import gluing_verdict
from .surface import Curve, HomologyElement, same_curve

__all__ = [
    "H1Group",
    "MappingTorus",
    "MonodromyFixesCurve",
    "extremal_report",
    "mapping_torus_h1",
    "smith_normal_form",
]


class MonodromyFixesCurve(ValueError):
    def __init__(self, curve: Curve, image: Curve):
        super().__init__(f"the monodromy maps {curve} to {image}, isotopic to it")
        self.curve = curve
        self.image = image


@dataclass
class MappingTorus:
    monodromy: MappingClassWord
    certificate: PACertificate | None = None

    @property
    def genus(self) -> int:
        return self.monodromy.genus

    @classmethod
    def parse(cls, text: str, genus: int) -> "MappingTorus":
        return cls(MappingClassWord.parse(text, genus))

    def certify(self, bound: int = 8) -> PACertificate:
        if self.certificate is None or self.certificate.bound != bound:
            self.certificate = mcg.pa_certificate(self.monodromy, bound)
        return self.certificate

    @property
    def homology_action(self) -> np.ndarray:
        return mcg.homology_action(self.monodromy)


# -- first homology -----------------------------------------------------------------

def smith_normal_form(M) -> list[int]:
    """Diagonal of the Smith normal form of an integer matrix (nonnegative, divisibility chain)."""
    A = [[int(x) for x in row] for row in np.asarray(M).tolist()]
    rows = len(A)
    cols = len(A[0]) if rows else 0
    diag = []
    t = 0
    while t < min(rows, cols):
        nonzero = [(abs(A[i][j]), i, j) for i in range(t, rows) for j in range(t, cols) if A[i][j]]
        if not nonzero:
            break
        _, pi, pj = min(nonzero)
        A[t], A[pi] = A[pi], A[t]
        for row in A:
            row[t], row[pj] = row[pj], row[t]
        while True:
            p = A[t][t]
            changed = False
            for i in range(t + 1, rows):
                q = A[i][t] // p
                if q:
                    A[i] = [a - q * b for a, b in zip(A[i], A[t])]
                if A[i][t]:
                    A[t], A[i] = A[i], A[t]
                    changed = True
                    break
            if changed:
                continue
            for j in range(t + 1, cols):
                q = A[t][j] // p
                if q:
                    for row in A:
                        row[j] -= q * row[t]
                if A[t][j]:
                    for row in A:
                        row[t], row[j] = row[j], row[t]
                    changed = True
                    break
            if changed:
                continue
            # the pivot must divide every remaining entry
            bad = next(((i, j) for i in range(t + 1, rows) for j in range(t + 1, cols) if A[i][j] % p), None)
            if bad is None:
                break
            A[t] = [a + b for a, b in zip(A[t], A[bad[0]])]
        diag.append(abs(A[t][t]))
        t += 1
    diag += [0] * (min(rows, cols) - len(diag))
    return diag


@dataclass(frozen=True)
class H1Group:
    """``Z^rank + sum Z/d`` for the listed torsion coefficients."""

    rank: int
    torsion: tuple[int, ...]
    invariant_factors: tuple[int, ...]  # Smith diagonal of A - I, sorted

    def __str__(self) -> str:
        parts = [f"Z^{self.rank}" if self.rank != 1 else "Z"] if self.rank else []
        parts += [f"Z/{d}" for d in self.torsion]
        return " + ".join(parts) or "0"

    def to_dict(self) -> dict:
        return {
            "rank": self.rank,
            "torsion": list(self.torsion),
            "invariant_factors": list(self.invariant_factors),
            "group": str(self),
        }


def mapping_torus_h1(mt: MappingTorus | MappingClassWord) -> H1Group:
    """``H_1(M) = Z + coker(A - I)`` where ``A`` is the action on ``H_1(Sigma)``."""
    f = mt.monodromy if isinstance(mt, MappingTorus) else mt
    A = mcg.homology_action(f)
    d = smith_normal_form(A - np.eye(A.shape[0], dtype=np.int64))
    rank = 1 + sum(1 for x in d if x == 0)
    torsion = tuple(sorted(x for x in d if x > 1))
    return H1Group(rank, torsion, tuple(sorted(d)))


# -- the extremal report ------------------------------------------------------------------

PREAMBLE = (
    "Assumed without proof: a fiber can be isotoped so that its dividing set is "
    "two parallel copies of a nonseparating curve gamma, after the fiber is "
    "chosen so that gamma meets the dividing sets of the two boundary copies "
    "of the cut-open product differently; the report below is Euler-class and "
    "gluing-consistency bookkeeping on the resulting slice [gamma, f(gamma)]."
)


def _act(A: np.ndarray, h: HomologyElement) -> HomologyElement:
    return HomologyElement(tuple(int(x) for x in A @ h.array()))


def stacked_verdict(A: np.ndarray, h: HomologyElement, e: HomologyElement, copies: int) -> tuple[str, list[dict]]:
    """Glue ``copies`` slices ``[f^k gamma, f^(k+1) gamma; f^k e]`` one by one."""
    steps = []
    total = e
    top = _act(A, h)
    piece = e
    for k in range(1, copies):
        nxt = _act(A, top)
        piece = _act(A, piece)
        v = gluing_verdict(h, top, nxt, total, piece)
        steps.append({"copy": k + 1, "verdict": {True: "tight", False: "ot", None: "undetermined"}[v]})
        if v is None:
            return "undetermined", steps
        if not v:
            return "ot", steps
        total = total + piece
        top = nxt
    return "tight", steps


@dataclass
class ExtremalReport:
    monodromy: str
    gamma: str
    image: str
    stack_depth: int
    preamble: str
    candidates: list[dict]
    fiber_euler: int
    fiber_extremal: bool
    homologous_caveat: str | None = None
    certificate: dict | None = None
    h1: dict = field(default_factory=dict)

    @property
    def tight_classes(self) -> list[dict]:
        return [c for c in self.candidates if c["status"] == "glues tight"]

    def to_dict(self) -> dict:
        return {
            "monodromy": self.monodromy,
            "gamma": self.gamma,
            "f_gamma": self.image,
            "stack_depth": self.stack_depth,
            "preamble": self.preamble,
            "candidates": self.candidates,
            "unique_tight": len(self.tight_classes) == 1,
            "fiber_euler": self.fiber_euler,
            "fiber_extremal": self.fiber_extremal,
            "homologous_caveat": self.homologous_caveat,
            "certificate": self.certificate,
            "h1": self.h1,
        }


def extremal_report(mt: MappingTorus, gamma: Curve, n: int = 3, certify_bound: int | None = 8) -> ExtremalReport:
    """Evaluate the four candidate classes ``+-f(gamma) +- gamma`` of the cut-open fiber."""
    if n < 1:
        raise ValueError("stack depth must be positive")
    f = mt.monodromy
    if gamma.homology.is_zero():
        raise ValueError(f"{gamma} is separating")
    image = mcg.apply(f, gamma)
    if same_curve(image, gamma, oriented=False):
        raise MonodromyFixesCurve(gamma, image)
    cert = mt.certify(certify_bound).to_dict() if certify_bound else None
    A = mt.homology_action
    h, hf = gamma.homology, image.homology
    caveat = None
    if hf == h or hf == -h:
        caveat = ("gamma and f(gamma) are homologous; the four classes are not separated by "
                  "homology and are distinguished only by their factorization labels")
    copies = 2 * n
    candidates = []
    for sf, sg in ((1, -1), (-1, -1), (1, 1), (-1, 1)):
        e = sf * hf + sg * h
        verdict, steps = stacked_verdict(A, h, e, copies)
        if sg == 1:
            status = "reducible"
            note = "peel the slice [gamma, f(gamma)] and reattach it via f: reduces to f(gamma) - gamma"
        elif verdict == "tight":
            status, note = "glues tight", f"{copies} stacked copies glue tight"
        elif verdict == "ot":
            status, note = "glues overtwisted", f"stacking fails at copy {steps[-1]['copy']}"
        else:
            status, note = "undetermined", "the gluing rule does not apply to homologous curves"
        candidates.append({
            "class": f"{'' if sf > 0 else '-'}f(gamma) {'+' if sg > 0 else '-'} gamma",
            "euler": str(e),
            "euler_vector": list(e.vector),
            "status": status,
            "stack_verdict": verdict,
            "stack": steps,
            "note": note,
        })
    fiber = DividingSet.parallel(gamma, 2, -1)
    return ExtremalReport(
        monodromy=str(f),
        gamma=str(gamma),
        image=str(image),
        stack_depth=n,
        preamble=PREAMBLE,
        candidates=candidates,
        fiber_euler=euler_eval(fiber),
        fiber_extremal=is_extremal(fiber),
        homologous_caveat=caveat,
        certificate=cert,
        h1=mapping_torus_h1(mt).to_dict(),
    )
