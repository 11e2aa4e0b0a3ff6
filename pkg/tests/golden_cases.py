"""CLI invocations with checked-in JSON output (regenerate with ``python3 tests/golden_cases.py``)."""

from pathlib import Path

GOLDEN_DIR = Path(__file__).parent / "data" / "golden"

CASES = {
    "intersect": ["intersect", "a1", "b1", "--json"],
    "intersect_self": ["intersect", "a1 b1 A1 b1", "--self", "--json"],
    "classify_once": ["classify", "--gamma0", "a1", "--gamma1", "b1", "--json"],
    "classify_base": ["classify", "--gamma0", "a1", "--gamma1", "b1", "--base-case", "--json"],
    "annulus_reduce": ["annulus", "reduce", "--config", "II4+", "--trace", "--json"],
    "dividing_g3": ["dividing", "euler", "--gamma", "a1", "--genus", "3", "--json"],
    "fibered_h1": ["fibered", "h1", "--word", "Ta1^2 Tb1", "--json"],
    "mcg_apply": ["mcg", "apply", "--word", "Tb1", "--curve", "a1", "--json"],
    "mcg_homology": ["mcg", "homology", "--word", "Ta1 Tb1^-1", "--json"],
}


def run(argv):
    import contextlib
    import io

    from convexcalc.cli import main

    buf = io.StringIO()
    with contextlib.redirect_stdout(buf):
        code = main(list(argv))
    return code, buf.getvalue()


if __name__ == "__main__":
    GOLDEN_DIR.mkdir(parents=True, exist_ok=True)
    for name, argv in CASES.items():
        code, out = run(argv)
        assert code == 0, name
        (GOLDEN_DIR / f"{name}.json").write_text(out)
