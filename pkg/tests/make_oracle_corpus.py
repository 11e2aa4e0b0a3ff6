"""Regenerate tests/data/oracle_corpus.json with the independent chord oracle.

Pairs are drawn from seeded random twist images of standard curves plus
random reduced words; expected values come only from ``tests/oracle.py``.
Run from the repository root: ``python3 tests/make_oracle_corpus.py``.
"""

from __future__ import annotations

import json
import random
import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).parent))

import oracle  # noqa: E402

from convexcalc import mcg  # noqa: E402
from convexcalc.surface import Curve, EmptyWord  # noqa: E402
from convexcalc.words import format_word, primitive_root  # noqa: E402

OUT = Path(__file__).parent / "data" / "oracle_corpus.json"


def random_curve(rng: random.Random, genus: int) -> Curve:
    names = mcg.humphries_names(genus)
    while True:
        if rng.random() < 0.7:
            f = mcg.MappingClassWord(genus, tuple((rng.choice(names), rng.choice((1, -1)))
                                                  for _ in range(rng.randint(1, 5))))
            c = mcg.apply(f, mcg.humphries_curve(rng.choice(names), genus))
        else:
            letters = [x for i in range(1, 2 * genus + 1) for x in (i, -i)]
            try:
                c = Curve.parse([rng.choice(letters) for _ in range(rng.randint(2, 9))], genus)
            except EmptyWord:
                continue
        if 1 <= len(c.word) <= 12 and primitive_root(c.word)[1] == 1:
            return c


def main(count: int = 120, seed: int = 20261014) -> None:
    rng = random.Random(seed)
    polys = {g: oracle.Polygon(g) for g in (2, 3)}
    rows = []
    while len(rows) < count:
        g = rng.choice((2, 2, 3))
        x, y = random_curve(rng, g), random_curve(rng, g)
        try:
            n = oracle.intersection(g, x.word, y.word, polys[g])
        except oracle.Degenerate:
            continue
        rows.append({"genus": g, "w1": format_word(x.word), "w2": format_word(y.word), "i": n})
        print(len(rows), rows[-1], flush=True)
    OUT.write_text(json.dumps({"seed": seed, "source": "tests/oracle.py", "pairs": rows}, indent=1) + "\n")


if __name__ == "__main__":
    main()
