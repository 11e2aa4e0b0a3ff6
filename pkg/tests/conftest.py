import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from convexcalc.surface import Curve  # noqa: E402


@pytest.fixture
def curve():
    def make(text: str, genus: int = 2) -> Curve:
        return Curve.parse(text, genus)

    return make
