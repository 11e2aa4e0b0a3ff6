"""Hypothesis strategies shared by the property tests."""

from __future__ import annotations

from hypothesis import strategies as st

from convexcalc import mcg


def letters(genus: int):
    return st.sampled_from([x for i in range(1, 2 * genus + 1) for x in (i, -i)])


def raw_words(genus: int, max_size: int = 12):
    return st.lists(letters(genus), min_size=1, max_size=max_size)


def twist_words(genus: int, max_size: int = 4):
    factor = st.tuples(st.sampled_from(mcg.humphries_names(genus)), st.sampled_from((1, -1)))
    return st.lists(factor, min_size=0, max_size=max_size).map(
        lambda fs: mcg.MappingClassWord(genus, tuple(fs)))


def simple_curves(genus: int, max_twists: int = 4, max_length: int = 12):
    """Twist images of Humphries curves, kept short."""
    start = st.sampled_from(mcg.humphries_names(genus)).map(lambda n: mcg.humphries_curve(n, genus))
    return st.tuples(twist_words(genus, max_twists), start).map(
        lambda p: mcg.apply(*p)).filter(lambda c: len(c.word) <= max_length)
